"""Sparse polynomials in power/Laurent and Chebyshev-1 bases.

A sparse polynomial is a short list of (degree, coefficient) terms.  The
power basis admits negative degrees (Laurent polynomials); the Chebyshev-1
basis requires degrees >= 0 and interprets degree d as T_d, where T_d is
defined through the 2x2 matrix recurrence

    [T_d, T_{d+1}]^T = [[0, 1], [-1, 2x]]^d [1, x]^T .

The key structural fact used throughout the library is the substitution
x = (y + 1/y)/2, which turns sum_j c_j T_{d_j}(x) into the symmetric Laurent
polynomial sum_j (c_j/2) (y^{d_j} + y^{-d_j}).
"""

from __future__ import annotations

import enum
import math
from typing import Iterable

from .errors import InvalidArgument, PoleAtZero
from .scalar import Felt, PrimeField


class Basis(enum.Enum):
    POWER = "power"
    CHEB1 = "cheb1"


class SparsePoly:
    """Basis-tagged sparse polynomial with canonical term order.

    Terms are stored sorted by ascending degree with zero coefficients
    dropped and duplicate degrees combined, so equality is term-list
    equality.
    """

    __slots__ = ("field", "basis", "terms")

    def __init__(
        self,
        field: PrimeField,
        basis: Basis,
        terms: Iterable[tuple[int, Felt | int]] = (),
    ):
        merged: dict[int, int] = {}
        for deg, coeff in terms:
            c = int(field(coeff))
            if basis is Basis.CHEB1 and deg < 0:
                raise InvalidArgument("Chebyshev-1 terms need degree >= 0")
            merged[deg] = (merged.get(deg, 0) + c) % field.p
        self.field = field
        self.basis = basis
        self.terms: tuple[tuple[int, Felt], ...] = tuple(
            (d, Felt(c, field)) for d, c in sorted(merged.items()) if c != 0
        )

    @property
    def sparsity(self) -> int:
        return len(self.terms)

    def degree(self) -> int | None:
        """Largest term degree, None for the zero polynomial."""
        return self.terms[-1][0] if self.terms else None

    def is_zero(self) -> bool:
        return not self.terms

    def raw_terms(self) -> list[tuple[int, int]]:
        return [(d, c.residue) for d, c in self.terms]

    def evaluate(self, x: Felt) -> Felt:
        if self.basis is Basis.POWER:
            return eval_power(self, x)
        return eval_chebyshev(self, x)

    def sort_key(self) -> tuple:
        return (self.basis.value, tuple((d, c.residue) for d, c in self.terms))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return (
            self.field == other.field
            and self.basis is other.basis
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.basis, self.terms))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        sym = "x^" if self.basis is Basis.POWER else "T"
        return " + ".join(f"{c.residue}*{sym}{d}" for d, c in self.terms)


def eval_power(f: SparsePoly, x: Felt) -> Felt:
    """Evaluate a power/Laurent-basis polynomial at x."""
    if f.basis is not Basis.POWER:
        raise InvalidArgument("eval_power needs a power-basis polynomial")
    p = f.field.p
    xr = x.residue
    if xr == 0 and any(d < 0 for d, _ in f.terms):
        raise PoleAtZero("negative-degree term evaluated at zero")
    acc = 0
    for d, c in f.terms:
        acc = (acc + c.residue * pow(xr, d, p)) % p
    return Felt(acc, f.field)


def _cheb_t(d: int, x: int, p: int) -> int:
    """T_d(x) via binary powering of the 2x2 recurrence matrix, d >= 0."""
    if d == 0:
        return 1
    # M = [[0, 1], [-1, 2x]]; [T_d, T_{d+1}]^T = M^d [1, x]^T
    m00, m01, m10, m11 = 1, 0, 0, 1
    a00, a01, a10, a11 = 0, 1, p - 1, 2 * x % p
    e = d
    while e:
        if e & 1:
            m00, m01, m10, m11 = (
                (m00 * a00 + m01 * a10) % p,
                (m00 * a01 + m01 * a11) % p,
                (m10 * a00 + m11 * a10) % p,
                (m10 * a01 + m11 * a11) % p,
            )
        e >>= 1
        if e:
            a00, a01, a10, a11 = (
                (a00 * a00 + a01 * a10) % p,
                (a00 * a01 + a01 * a11) % p,
                (a10 * a00 + a11 * a10) % p,
                (a10 * a01 + a11 * a11) % p,
            )
    return (m00 + m01 * x) % p


def eval_chebyshev(f: SparsePoly, x: Felt) -> Felt:
    """Evaluate a Chebyshev-1-basis polynomial at x."""
    if f.basis is not Basis.CHEB1:
        raise InvalidArgument("eval_chebyshev needs a Chebyshev-basis polynomial")
    p = f.field.p
    acc = 0
    for d, c in f.terms:
        acc = (acc + c.residue * _cheb_t(d, x.residue, p)) % p
    return Felt(acc, f.field)


def cheb_to_laurent(f: SparsePoly) -> SparsePoly:
    """Image of f under x = (y + 1/y)/2: a symmetric Laurent polynomial.

    A degree-0 term maps to the single constant c (the two halves c/2 + c/2
    collapse); every other term c*T_d maps to (c/2)(y^d + y^-d).
    """
    if f.basis is not Basis.CHEB1:
        raise InvalidArgument("cheb_to_laurent needs a Chebyshev-basis polynomial")
    p = f.field.p
    inv2 = (p + 1) // 2
    terms: list[tuple[int, int]] = []
    for d, c in f.terms:
        if d == 0:
            terms.append((0, c.residue))
        else:
            half = c.residue * inv2 % p
            terms.append((d, half))
            terms.append((-d, half))
    return SparsePoly(f.field, Basis.POWER, terms)


def laurent_sym_to_cheb(g: SparsePoly) -> SparsePoly | None:
    """Inverse of cheb_to_laurent; None when g is not symmetric."""
    if g.basis is not Basis.POWER:
        raise InvalidArgument("laurent_sym_to_cheb needs a power-basis polynomial")
    coeffs = {d: c.residue for d, c in g.terms}
    terms: list[tuple[int, int]] = []
    for d, c in coeffs.items():
        if d < 0:
            continue
        if d == 0:
            terms.append((0, c))
            continue
        if coeffs.get(-d) != c:
            return None
        terms.append((d, 2 * c % g.field.p))
    if any(d < 0 and -d not in coeffs for d in coeffs):
        return None
    return SparsePoly(g.field, Basis.CHEB1, terms)


def power_to_cheb(d: int, field: PrimeField) -> SparsePoly:
    """Expansion of x^d in the Chebyshev-1 basis.

    x^d = 2^(1-d) * sum over j with d-j even of binom(d, (d-j)/2) * T_j(x),
    with the j = 0 summand halved.  Intended as a test/fixture utility; the
    caller should keep d < p so no binomial collapses mod p.
    """
    if d < 0:
        raise InvalidArgument("power_to_cheb needs d >= 0")
    p = field.p
    scale = pow(2, 1 - d, p)
    inv2 = (p + 1) // 2
    terms = []
    for j in range(d % 2, d + 1, 2):
        c = math.comb(d, (d - j) // 2) % p * scale % p
        if j == 0:
            c = c * inv2 % p
        terms.append((j, c))
    return SparsePoly(field, Basis.CHEB1, terms)
