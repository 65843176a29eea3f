"""Prime-field scalars and the number-theoretic services built on them.

The field GF(p) is the only scalar domain of the library; p must be an odd
prime so that division by 2 exists (the Chebyshev transforms need it).
Besides exact arithmetic this module provides multiplicative-order checks,
rejection-sampled base-point selection, distinct-root finding and a bounded
discrete logarithm, all deterministic for fixed inputs.
"""

from __future__ import annotations

import math
import random
from typing import TYPE_CHECKING, Iterable

from . import kernels
from .errors import (
    FieldMismatch,
    InvalidArgument,
    InvalidBasePoint,
    SelectionExhausted,
    ZeroInverse,
)

if TYPE_CHECKING:
    from .generator import UniPoly

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factor(n: int) -> list[int]:
    """Distinct prime factors by trial division (desk-scale input)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class PrimeField:
    """The scalar field GF(p) for an odd prime p."""

    __slots__ = ("p", "_p1_factors")

    def __init__(self, p: int):
        if p < 3 or p % 2 == 0 or not _is_prime(p):
            raise InvalidArgument(f"modulus must be an odd prime, got {p}")
        self.p = p
        self._p1_factors: list[int] | None = None

    def __call__(self, value: int | "Felt") -> "Felt":
        if isinstance(value, Felt):
            if value.field is not self and value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        return Felt(value % self.p, self)

    def zero(self) -> "Felt":
        return Felt(0, self)

    def one(self) -> "Felt":
        return Felt(1, self)

    def p1_factors(self) -> list[int]:
        if self._p1_factors is None:
            self._p1_factors = _factor(self.p - 1)
        return self._p1_factors

    def element_order(self, w: "Felt") -> int:
        """Multiplicative order of a nonzero element."""
        w = self(w)
        if w.residue == 0:
            raise InvalidBasePoint("zero has no multiplicative order")
        order = self.p - 1
        for q in self.p1_factors():
            while order % q == 0 and pow(w.residue, order // q, self.p) == 1:
                order //= q
        return order

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class Felt:
    """An element of GF(p): an integer residue tied to its field."""

    __slots__ = ("residue", "field")

    def __init__(self, residue: int, field: PrimeField):
        self.residue = residue % field.p
        self.field = field

    def _coerce(self, other: "Felt | int") -> "Felt":
        if isinstance(other, Felt):
            if other.field != self.field:
                raise FieldMismatch(
                    f"mixed fields GF({self.field.p}) and GF({other.field.p})"
                )
            return other
        if isinstance(other, int):
            return Felt(other, self.field)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Felt(self.residue + o.residue, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Felt(self.residue - o.residue, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Felt(o.residue - self.residue, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Felt(self.residue * o.residue, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inv()

    def __neg__(self):
        return Felt(-self.residue, self.field)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0 and self.residue == 0:
            raise ZeroInverse("inverse of zero")
        return Felt(pow(self.residue, e, self.field.p), self.field)

    def inv(self) -> "Felt":
        if self.residue == 0:
            raise ZeroInverse("inverse of zero")
        return Felt(pow(self.residue, -1, self.field.p), self.field)

    def is_zero(self) -> bool:
        return self.residue == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Felt):
            return self.field == other.field and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.residue, self.field.p))

    def __int__(self) -> int:
        return self.residue

    def __repr__(self) -> str:
        return f"{self.residue}%{self.field.p}"


def order_at_least(w: Felt, bound: int) -> bool:
    """True iff the multiplicative order of w is at least ``bound``."""
    if w.residue == 0:
        raise InvalidBasePoint("base point must be nonzero")
    if bound <= 1:
        return True
    return w.field.element_order(w) >= bound


def _probe_point_residues(
    w: int, p: int, probe_index_range: int, folded: bool
) -> list[int]:
    """Residues of the probe points generated by one base point.

    Power basis probes w^i for i = 1..range.  Folded (Chebyshev) probing
    uses the points (w^(2i-1) + w^-(2i-1))/2 instead.
    """
    if not folded:
        pts = []
        cur = 1
        for _ in range(probe_index_range):
            cur = cur * w % p
            pts.append(cur)
        return pts
    inv2 = (p + 1) // 2
    w_inv = pow(w, -1, p)
    pts = []
    fw = w_inv  # w^(2i-1) forward power, starts at w^1
    bw = w  # w^-(2i-1)
    step_f = w * w % p
    step_b = w_inv * w_inv % p
    for _ in range(probe_index_range):
        fw = fw * step_f % p
        bw = bw * step_b % p
        pts.append((fw + bw) * inv2 % p)
    return pts


def select_base_points(
    field: PrimeField,
    count: int,
    order_bound: int,
    probe_index_range: int,
    rng_seed: int,
    folded: bool = False,
) -> list[Felt]:
    """Pick ``count`` base points by seeded rejection sampling.

    Every point has multiplicative order >= order_bound and the probe points
    of all selected bases are pairwise distinct over the index range (folded
    points when ``folded`` is set).  Raises SelectionExhausted when the field
    cannot satisfy the constraints within the attempt budget.
    """
    if count < 1 or probe_index_range < 1:
        raise InvalidArgument("count and probe_index_range must be positive")
    p = field.p
    if order_bound > p - 1:
        raise SelectionExhausted(
            f"no element of GF({p}) has order {order_bound} > p-1"
        )
    rng = random.Random(rng_seed)
    # Greedy acceptance can wedge itself in tiny fields (an early pick may
    # rule out every remaining candidate), so restart from scratch when a
    # round stalls instead of giving up outright.
    for _round in range(256):
        chosen: list[Felt] = []
        used: set[int] = set()
        rejections = 0
        while len(chosen) < count and rejections <= 64 * count + 64:
            w = rng.randrange(1, p)
            fw = Felt(w, field)
            if not order_at_least(fw, order_bound):
                rejections += 1
                continue
            pts = _probe_point_residues(w, p, probe_index_range, folded)
            if len(set(pts)) != len(pts) or any(pt in used for pt in pts):
                rejections += 1
                continue
            used.update(pts)
            chosen.append(fw)
        if len(chosen) == count:
            return chosen
    raise SelectionExhausted(
        f"could not find {count} admissible base points in GF({p})"
    )


def integer_log(D: int, w: Felt, rho: Felt) -> int | None:
    """Exponent delta with |delta| <= D and w^delta == rho, else None.

    Baby-step giant-step over the window [-D, D]; the result is verified by
    re-exponentiation before being returned, so a violated order assumption
    can only cause a miss, never a wrong answer.
    """
    if D <= 0:
        raise InvalidArgument("bound D must be positive")
    if w.residue == 0:
        raise InvalidBasePoint("logarithm base must be nonzero")
    if rho.residue == 0:
        raise InvalidArgument("logarithm of zero requested")
    if w.field != rho.field:
        raise FieldMismatch("base and argument from different fields")
    p = w.field.p
    wr, rr = w.residue, rho.residue
    # solve w^e = rho * w^D for e in [0, 2D]
    target = rr * pow(wr, D, p) % p
    window = 2 * D
    m = math.isqrt(window) + 1
    table: dict[int, int] = {}
    cur = 1
    for j in range(m):
        table.setdefault(cur, j)
        cur = cur * wr % p
    giant = pow(wr, -m, p)
    cur = target
    for i in range(window // m + 1):
        j = table.get(cur)
        if j is not None:
            e = i * m + j
            if e <= window:
                delta = e - D
                if pow(wr, delta, p) == rr:
                    return delta
        cur = cur * giant % p
    return None


def distinct_roots(f: "UniPoly") -> list[Felt]:
    """All distinct GF(p) roots of a nonzero dense polynomial, ascending."""
    if f.is_zero():
        raise InvalidArgument("root finding on the zero polynomial")
    field = f.field
    return [Felt(r, field) for r in kernels.poly_roots(f.raw_coeffs(), field.p)]
