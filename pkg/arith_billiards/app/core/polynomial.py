# app/core/polynomial.py
# Exact integer polynomial arithmetic on IntPolynomial, backed by sympy Poly over ZZ.

from typing import Sequence

from sympy import Poly, Symbol, sympify
from sympy.polys.polyerrors import ExactQuotientFailed

from app.errors import NonExactDivisionError
from app.schemas.sequence import IntPolynomial

x = Symbol("x")


def poly(coeffs: Sequence[int]) -> IntPolynomial:
    return IntPolynomial(coeffs=tuple(int(c) for c in coeffs))


def monomial(n: int, coeff: int = 1) -> IntPolynomial:
    return poly([0] * n + [coeff])


def to_sympy(p: IntPolynomial) -> Poly:
    return Poly(list(reversed(p.coeffs)), x, domain="ZZ")


def from_sympy(p: Poly) -> IntPolynomial:
    return poly(reversed(p.all_coeffs()))


def add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return from_sympy(to_sympy(a) + to_sympy(b))


def sub(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return from_sympy(to_sympy(a) - to_sympy(b))


def mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return from_sympy(to_sympy(a) * to_sympy(b))


def exact_div(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """a / b, which must leave no remainder."""
    try:
        quotient = to_sympy(a).exquo(to_sympy(b))
    except ExactQuotientFailed as e:
        raise NonExactDivisionError(f"{a.coeffs} is not divisible by {b.coeffs}") from e
    coeffs = quotient.all_coeffs()
    if not all(c.is_integer for c in coeffs):
        raise NonExactDivisionError(f"{a.coeffs} / {b.coeffs} has non-integer coefficients")
    return poly(reversed(coeffs))


def parse(expr: str) -> IntPolynomial:
    """Expand a sympy expression in x, e.g. '(x+1)**2*(x**2+1)**2'."""
    return from_sympy(Poly(sympify(expr, locals={"x": x}), x, domain="ZZ"))


ONE_MINUS_X = poly([1, -1])
