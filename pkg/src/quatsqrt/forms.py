"""Diagonal quadratic forms over Q: isotropy, conics, represented values.

The computational core is solve_conic, a Lagrange-style descent for
x^2 - alpha*y^2 = c that either returns an exact rational solution or
proves there is none via local (Hilbert symbol) obstructions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .hilbert import hasse_invariant, hilbert_symbol
from .places import Place, is_local_square, support_places
from .rationals import RationalLike, as_fraction, factor, is_square, squarefree_part

Vector = tuple[Fraction, ...]


def _vector(seq: Sequence[RationalLike], dim: int) -> Vector:
    vec = tuple(as_fraction(x) for x in seq)
    if len(vec) != dim:
        raise ValueError(f"expected a vector of length {dim}, got {len(vec)}")
    return vec


@dataclass(frozen=True)
class DiagonalForm:
    """<a_1, ..., a_n>: the form a_1*x_1^2 + ... + a_n*x_n^2, entries nonzero."""

    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        entries = tuple(as_fraction(x) for x in self.entries)
        if not entries:
            raise ValueError("a diagonal form needs at least one entry")
        if any(x == 0 for x in entries):
            raise ValueError("diagonal entries must be nonzero")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __call__(self, vec: Sequence[RationalLike]) -> Fraction:
        vec = _vector(vec, self.dim)
        return sum((a * x * x for a, x in zip(self.entries, vec)), Fraction(0))

    def polar(self, u: Sequence[RationalLike], v: Sequence[RationalLike]) -> Fraction:
        """The associated bilinear form, normalized so polar(v, v) = 2*form(v)."""
        u = _vector(u, self.dim)
        v = _vector(v, self.dim)
        return 2 * sum((a * x * y for a, x, y in zip(self.entries, u, v)), Fraction(0))

    def determinant(self) -> Fraction:
        out = Fraction(1)
        for a in self.entries:
            out *= a
        return out


def is_isotropic_local(form: DiagonalForm, v: Place) -> bool:
    """Whether the form has a nontrivial zero over the completion at v."""
    n = form.dim
    if v.is_real:
        return any(x < 0 for x in form) and any(x > 0 for x in form)
    if n == 1:
        return False
    if n == 2:
        return is_local_square(-form.entries[0] * form.entries[1], v)
    det = form.determinant()
    if n == 3:
        return hasse_invariant(form, v) == hilbert_symbol(-1, -det, v)
    if n == 4:
        return not (
            is_local_square(det, v)
            and hasse_invariant(form, v) == -hilbert_symbol(-1, -1, v)
        )
    return True


def is_isotropic(form: DiagonalForm) -> bool:
    """Whether the form has a nontrivial rational zero.

    Dimensions 1 and 2 are settled by an exact square test; from dimension 3
    on, Hasse-Minkowski reduces the question to the real place, 2, and the
    odd primes appearing in the entries' squarefree parts.
    """
    n = form.dim
    if n == 1:
        return False
    if n == 2:
        return is_square(-form.entries[0] * form.entries[1]) is not None
    return all(is_isotropic_local(form, v) for v in support_places(form))


def _sqrt_mod_prime(n: int, p: int) -> Optional[int]:
    """A square root of n modulo the prime p (Tonelli-Shanks), or None."""
    n %= p
    if p == 2 or n == 0:
        return n
    if pow(n, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 1, t * t % p
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return r


def _sqrt_mod_squarefree(a: int, m: int) -> int:
    """A square root of a modulo squarefree m >= 2, assembled prime by prime."""
    r, mod = 0, 1
    for p, _ in factor(m).factors:
        rp = _sqrt_mod_prime(a, p)
        if rp is None:
            raise RuntimeError(f"{a} has no square root mod {p} during the descent")
        # CRT merge of (r mod mod) and (rp mod p)
        r += mod * ((rp - r) * pow(mod, -1, p) % p)
        mod *= p
    return r % mod


def _descend(a: int, c: int) -> tuple[Fraction, Fraction]:
    """Solve x^2 - a*y^2 = c for squarefree integers a, c, assuming solvability.

    Classical Lagrange descent: replace c by c' = (t^2 - a)/c for a centered
    square root t of a mod |c|, strip the square part of c', and recurse;
    |c| strictly decreases, so this terminates.
    """
    if a == 1:
        return Fraction(c + 1, 2), Fraction(c - 1, 2)
    if c == 1:
        return Fraction(1), Fraction(0)
    if (a, c) == (-1, -1):
        raise RuntimeError("x^2 + y^2 = -1 reached the descent; inputs were not prechecked")
    if a == c:
        # a | x is forced, and the equation becomes u^2 - a*v^2 = -1.
        u, v = _descend(a, -1)
        return a * v, u
    if abs(a) > abs(c):
        s, t = _descend(c, a)
        # t = 0 would force a to be a square, excluded above.
        return s / t, 1 / t
    t = _sqrt_mod_squarefree(a, abs(c))
    if t > abs(c) // 2:
        t -= abs(c)
    c_next, rem = divmod(t * t - a, c)
    if rem != 0:
        raise RuntimeError("descent invariant broken: c does not divide t^2 - a")
    # c_next != 0 since a is not a square; strip its square part.
    c2, u = squarefree_part(c_next)
    x1, y1 = _descend(a, c2)
    den = c2 * u
    return (t * x1 - a * y1) / den, (x1 - t * y1) / den


def solve_conic(
    alpha: RationalLike, c: RationalLike
) -> Optional[tuple[Fraction, Fraction]]:
    """An exact rational solution (x, y) of x^2 - alpha*y^2 = c, or None.

    When alpha is a square the conic is a split pair of lines and a solution
    is written down directly; otherwise solvability is decided by Hilbert
    symbols at the real place, 2, and the odd primes of the squarefree parts,
    and a solution is produced by descent on squarefree representatives.
    """
    alpha = as_fraction(alpha)
    c = as_fraction(c)
    if alpha == 0 or c == 0:
        raise ValueError("conic parameters must be nonzero")
    root = is_square(alpha)
    if root is not None:
        x, y = (c + 1) / 2, (c - 1) / (2 * root)
        return x, y
    for v in support_places((alpha, c)):
        if hilbert_symbol(alpha, c, v) == -1:
            return None
    sa, ta = squarefree_part(alpha)  # alpha = sa * ta^2
    sc, tc = squarefree_part(c)
    x, y = _descend(sa, sc)
    x, y = x * tc, y * tc / ta
    if x * x - alpha * y * y != c:
        raise RuntimeError("conic descent produced an incorrect solution")
    return x, y


def isotropic_vector(form: DiagonalForm) -> Optional[Vector]:
    """A nontrivial exact zero of a ternary form, or None when anisotropic."""
    if form.dim != 3:
        raise ValueError("isotropic_vector expects a ternary form")
    a, b, c = form.entries
    sol = solve_conic(-b / a, -c / a)
    if sol is None:
        return None
    x, y = sol
    vec = (x, y, Fraction(1))
    if form(vec) != 0:
        raise RuntimeError("isotropic vector candidate does not vanish")
    return vec


def isotropic_to_universal(
    form: DiagonalForm, vec: Sequence[RationalLike], target: RationalLike
) -> Vector:
    """A vector W with form(W) = target, built from an isotropic vector.

    An isotropic form represents everything: take the first standard basis
    vector U = e_i that pairs nontrivially with the isotropic vector V and
    return W = U + ((target - form(U)) / polar(U, V)) * V.
    """
    vec = _vector(vec, form.dim)
    target = as_fraction(target)
    if target == 0:
        raise ValueError("target value must be nonzero")
    if all(x == 0 for x in vec):
        raise ValueError("the isotropic vector must be nonzero")
    if form(vec) != 0:
        raise ValueError("vector is not isotropic for the form")
    i = next(k for k, (ak, vk) in enumerate(zip(form.entries, vec)) if ak * vk != 0)
    scale = (target - form.entries[i]) / (2 * form.entries[i] * vec[i])
    out = tuple(
        (Fraction(1) if k == i else Fraction(0)) + scale * vec[k]
        for k in range(form.dim)
    )
    if form(out) != target:
        raise RuntimeError("universal representation failed to hit the target")
    return out


def represents(form: DiagonalForm, d: RationalLike) -> Optional[tuple[Fraction, Fraction]]:
    """(u, v) with x0*u^2 + x1*v^2 = d for a binary form <x0, x1>, or None."""
    if form.dim != 2:
        raise ValueError("represents expects a binary form")
    d = as_fraction(d)
    if d == 0:
        raise ValueError("the represented value must be nonzero")
    x0, x1 = form.entries
    sol = solve_conic(-x1 / x0, d / x0)
    if sol is None:
        return None
    u, v = sol
    if x0 * u * u + x1 * v * v != d:
        raise RuntimeError("representation certificate failed")
    return u, v
