# app/utils/arith.py
# Checked integer helpers and a congruence solver for non-coprime moduli.

import math
from functools import reduce
from typing import Iterable, Optional, Sequence, Tuple

from app.errors import GridOverflowError

INT64_MAX = 2**63 - 1


def check_int64(value: int, what: str) -> int:
    if abs(value) > INT64_MAX:
        raise GridOverflowError(f"{what} = {value} exceeds the signed 64-bit range")
    return value


def checked_product(values: Iterable[int], what: str = "product") -> int:
    result = 1
    for v in values:
        result = check_int64(result * v, what)
    return result


def checked_lcm(values: Sequence[int], what: str = "lcm") -> int:
    result = 1
    for v in values:
        result = check_int64(math.lcm(result, v), what)
    return result


def gcd_all(values: Sequence[int]) -> int:
    return reduce(math.gcd, values, 0)


def _combine(c1: Tuple[int, int], c2: Tuple[int, int]) -> Optional[Tuple[int, int]]:
    """Merge n = a1 (mod m1) and n = a2 (mod m2) into n = a (mod lcm(m1, m2)).

    Successive substitution: a1 + m1*j = a2 (mod m2) is solvable iff
    gcd(m1, m2) divides a2 - a1.
    """
    a1, m1 = c1
    a2, m2 = c2
    g = math.gcd(m1, m2)
    diff = a2 - a1
    if diff % g:
        return None
    m2g = m2 // g
    if m2g == 1:
        return a1 % m1, m1
    j = (diff // g) * pow(m1 // g, -1, m2g) % m2g
    modulus = m1 * m2g
    return (a1 + m1 * j) % modulus, modulus


def solve_congruences(pairs: Iterable[Tuple[int, int]]) -> Optional[Tuple[int, int]]:
    """
    Solve the simultaneous system n = a_i (mod m_i).

    Args:
        pairs: (a_i, m_i) tuples; moduli need not be coprime.

    Returns:
        (n, L) with 0 <= n < L = lcm(m_i) and n the least nonnegative
        solution, or None when the system is inconsistent.
    """
    rv = (0, 1)
    for a, m in pairs:
        if m <= 0:
            raise ValueError(f"modulus must be positive, got {m}")
        rv = _combine(rv, (a % m, m))
        if rv is None:
            return None
    return rv
