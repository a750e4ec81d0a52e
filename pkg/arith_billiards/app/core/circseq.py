# app/core/circseq.py
#
# Circular sequences: one coordinate of the billiard read off its phase
# circle. a+(n, t, m) walks the circle forward from t, a-(n, t, m) backward;
# both are triangle waves of period 2m.

import logging
from typing import List

from app.core.grid_core import tent
from app.core.polynomial import ONE_MINUS_X, add, exact_div, monomial, mul, poly, sub
from app.errors import InvalidInputError
from app.schemas.sequence import IntPolynomial, RationalGF, SeqSign, SeqSpec

logger = logging.getLogger("arith_billiards")


def _check_n(n: int) -> None:
    if n < 0:
        raise InvalidInputError(f"sequence index must be nonnegative, got {n}")


def circ_seq(spec: SeqSpec, n: int) -> int:
    _check_n(n)
    modulus = 2 * spec.m
    delta = 1 if spec.sign == SeqSign.positive else -1
    u = spec.t
    for _ in range(n % modulus):
        u = (u + delta) % modulus
    return tent(u, spec.m)


def circ_seq_closed(spec: SeqSpec, n: int) -> int:
    _check_n(n)
    t, m = spec.t, spec.m
    i = n % (2 * m)
    if spec.sign == SeqSign.positive:
        if i <= m - t:
            return i + t
        if i <= 2 * m - t:
            return 2 * m - t - i
        return i - (2 * m - t)
    if i <= t - 1:
        return t - i
    if i <= m + t:
        return i - t
    return 2 * m + t - i


def definitional_numerator(spec: SeqSpec) -> IntPolynomial:
    return poly([circ_seq(spec, n) for n in range(2 * spec.m)])


def _geometric(lo: int, hi: int) -> IntPolynomial:
    """x**lo * (1 - x**(hi - lo)) / (1 - x), i.e. x**lo + ... + x**(hi - 1)."""
    return exact_div(sub(monomial(lo), monomial(hi)), ONE_MINUS_X)


def numerator_poly(spec: SeqSpec) -> IntPolynomial:
    """
    One period of the sequence as a polynomial, assembled from the factored
    closed form (1 - x^m)/(1 - x) * bracket. Every 1/(1 - x) is an exact
    division; a remainder raises NonExactDivisionError.
    """
    t, m = spec.t, spec.m
    head = _geometric(0, m)
    constant = add(monomial(m, t - 1 if spec.sign == SeqSign.positive else t), poly([t]))

    if spec.sign == SeqSign.positive:
        rising = _geometric(1, m - t + 1)
        if t >= 1:
            falling = _geometric(m - t + 1, m)
        else:
            # x^(m+1) (1 - x^-1) / (1 - x) collapses to -x^m
            falling = monomial(m, -1)
    else:
        rising = _geometric(t + 1, m + 1)
        falling = _geometric(1, t + 1)

    bracket = add(sub(rising, falling), constant)
    result = mul(head, bracket)
    logger.debug(f"Numerator for {spec.sign.value}(t={t}, m={m}): {result.coeffs}")
    return result


def helper_F_poly(t: int, n: int) -> IntPolynomial:
    """t x^(t-1) + (t+1) x^t + ... + n x^(n-1)."""
    if t < 1 or n < t:
        raise InvalidInputError(f"helper polynomial needs 1 <= t <= n, got t={t}, n={n}")
    return poly([0] * (t - 1) + list(range(t, n + 1)))


def helper_F_closed(t: int, n: int) -> IntPolynomial:
    if t < 1 or n < t:
        raise InvalidInputError(f"helper polynomial needs 1 <= t <= n, got t={t}, n={n}")
    numerator = poly([0] * (n + 2))
    for power, coeff in ((t - 1, t), (t, -(t - 1)), (n, -(n + 1)), (n + 1, n)):
        numerator = add(numerator, monomial(power, coeff))
    return exact_div(numerator, mul(ONE_MINUS_X, ONE_MINUS_X))


def gen_function(spec: SeqSpec) -> RationalGF:
    return RationalGF(numerator=numerator_poly(spec), period=2 * spec.m)


def series_expand(gf: RationalGF, N: int) -> List[int]:
    """First N+1 coefficients of numerator / (1 - x^period)."""
    _check_n(N)
    coeffs: List[int] = []
    for n in range(N + 1):
        carry = coeffs[n - gf.period] if n >= gf.period else 0
        coeffs.append(gf.numerator.coeff(n) + carry)
    return coeffs
