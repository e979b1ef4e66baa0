"""Independent brute-force oracles the library is cross-checked against.

Nothing here calls into the package: Hilbert symbols are settled by
congruence searches, local squares by residue scans, isotropy by integer
vector searches. Slow but screamingly simple.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence


def _strip_square_factors(n: int, p: int) -> int:
    while n % (p * p) == 0:
        n //= p * p
    return n


@lru_cache(maxsize=None)
def _square_set(m: int) -> frozenset[int]:
    return frozenset(w * w % m for w in range(m))


@lru_cache(maxsize=None)
def hilbert_oracle_finite(a: int, b: int, p: int) -> int:
    """(a, b)_p for nonzero integers by searching z^2 = a*x^2 + b*y^2 mod p^K.

    Square factors of a and b are dropped first (they do not change the
    symbol), leaving valuations 0 or 1. K = 5 at p = 2 and K = 3 at odd
    p | ab are the classical Hensel bounds at which a primitive congruence
    solution lifts to a p-adic one; K = 1 suffices when p is odd and
    coprime to ab. A primitive solution has a unit coordinate, which can be
    scaled to 1, so three one-variable-fixed scans cover everything.
    """
    a = _strip_square_factors(a, p)
    b = _strip_square_factors(b, p)
    if p == 2:
        k = 5
    elif a % p == 0 or b % p == 0:
        k = 3
    else:
        k = 1
    m = p**k
    squares = _square_set(m)
    a %= m
    b %= m
    for y in range(m):  # x = 1
        if (a + b * y * y) % m in squares:
            return 1
    for x in range(m):  # y = 1
        if (b + a * x * x) % m in squares:
            return 1
    b_values = {b * y * y % m for y in range(m)}
    for x in range(m):  # z = 1
        if (1 - a * x * x) % m in b_values:
            return 1
    return -1


def hilbert_oracle_real(a: int, b: int) -> int:
    """z^2 = a*x^2 + b*y^2 has a nontrivial real zero iff a or b is positive."""
    return 1 if a > 0 or b > 0 else -1


def local_square_oracle(q: Fraction, p: int) -> bool:
    """Is q a square in Q_p? Residue scan, no reciprocity-style formulas."""
    num, den = q.numerator, q.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    if v % 2:
        return False
    u = num * den  # same square class as the unit part num/den
    if p == 2:
        return u % 16 in (1, 9)  # the odd squares mod 16
    return (u % p) in {x * x % p for x in range(p)}


def _scaled_int_entries(entries: Sequence[Fraction]) -> list[int]:
    den = math.lcm(*(Fraction(e).denominator for e in entries))
    return [int(e * den) for e in entries]


def ternary_zero_search(
    entries: Sequence[Fraction], height: int
) -> Optional[tuple[int, int, int]]:
    """A nontrivial integer zero of a ternary diagonal form, coords <= height.

    Signs of coordinates never matter for a diagonal form, so scanning
    nonnegative values is exhaustive. Meet-in-the-middle on the first entry.
    """
    a, b, c = _scaled_int_entries(entries)
    sq = [i * i for i in range(height + 1)]
    first_x: dict[int, int] = {}
    for x in range(height + 1):
        first_x.setdefault(a * sq[x], x)
    for y in range(height + 1):
        for z in range(height + 1):
            x = first_x.get(-(b * sq[y] + c * sq[z]))
            if x is not None and (x or y or z):
                return (x, y, z)
    return None


def diagonal_zero_search(
    entries: Sequence[Fraction], height: int
) -> Optional[tuple[int, ...]]:
    """A nontrivial integer zero of any diagonal form, coords <= height."""
    ints = _scaled_int_entries(entries)
    for vec in itertools.product(range(height + 1), repeat=len(ints)):
        if any(vec) and sum(e * v * v for e, v in zip(ints, vec)) == 0:
            return vec
    return None
