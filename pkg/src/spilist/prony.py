"""Prony-style recovery of sparse polynomials from clean evaluation windows.

Given 2B consecutive black-box values a_r, ..., a_{r+2B-1} taken at powers
w^r, ..., w^{r+2B-1}, the pipeline is: Berlekamp/Massey for the minimal
generator Lambda, reject unless it splits into distinct roots over GF(p),
take bounded discrete logs of the roots to reveal term degrees, solve a
transposed Vandermonde system for the coefficients, and finally verify the
candidate against every value in the window.  Any failure returns None.

The Chebyshev variant feeds the symmetrized odd-index window through the
same pipeline (with doubled sparsity and exponent bounds, since the fold
x = (y + 1/y)/2 doubles the exponent lattice) and then insists that the
recovered Laurent polynomial has the paired shape
sum_j (c_j/2) (w^{-d_j} x^{2 d_j} + w^{d_j} x^{-2 d_j}).
"""

from __future__ import annotations

from typing import Mapping, Sequence

from . import kernels
from .errors import InvalidArgument, InvalidBasePoint
from .scalar import Felt, integer_log
from .sparsepoly import Basis, SparsePoly


def _prony_pipeline(
    r: int,
    seq: list[int],
    sparsity_bound: int,
    exp_bound: int,
    w: Felt,
) -> list[tuple[int, int]] | None:
    """Shared core; returns raw (degree, coeff) pairs or None."""
    field = w.field
    p = field.p
    lam = kernels.bm(seq, p)
    deg = len(lam) - 1
    if deg == 0:
        return []  # all-zero window, the zero polynomial
    if deg > sparsity_bound:
        return None
    if lam[0] == 0:
        return None
    roots = kernels.poly_roots(lam, p)
    if len(roots) < deg:
        return None
    deltas = []
    for rho in roots:
        d = integer_log(exp_bound, w, Felt(rho, field))
        if d is None:
            return None
        deltas.append(d)
    t = deg
    # transposed Vandermonde: sum_j c_j rho_j^(r+i) = seq[i], i = 0..t-1
    mat = []
    pw = [pow(rho, r, p) for rho in roots]
    for i in range(t):
        mat.append(pw[:])
        if i + 1 < t:
            pw = [v * rho % p for v, rho in zip(pw, roots)]
    cs = kernels.solve_linear(mat, seq[:t], p)
    if cs is None:
        return None
    # verify over the remaining window values
    pw = [pow(rho, r + t, p) for rho in roots]
    for i in range(t, len(seq)):
        val = 0
        for c, v in zip(cs, pw):
            val = (val + c * v) % p
        if val != seq[i]:
            return None
        pw = [v * rho % p for v, rho in zip(pw, roots)]
    return [(d, c) for d, c in zip(deltas, cs) if c]


def try_prony(
    r: int, seq: Sequence[Felt], B: int, D: int, w: Felt
) -> SparsePoly | None:
    """Recover a Laurent polynomial from the 2B values a_r..a_{r+2B-1}.

    On success the result has sparsity <= B, term degrees within [-D, D],
    and reproduces every input value; otherwise None.
    """
    if w.residue == 0:
        raise InvalidBasePoint("base point must be nonzero")
    if len(seq) != 2 * B:
        raise InvalidArgument(f"expected a window of {2 * B} values")
    field = w.field
    raw = [int(field(v)) for v in seq]
    terms = _prony_pipeline(r, raw, B, D, w)
    if terms is None:
        return None
    return SparsePoly(field, Basis.POWER, terms)


def try_prony_chebyshev(
    values: Mapping[int, Felt], B: int, D: int, w: Felt
) -> SparsePoly | None:
    """Recover a Chebyshev-1 polynomial from odd-index values a_1, a_3, ...

    ``values`` maps odd indices to black-box outputs at the folded points
    (w^i + w^-i)/2; the implicit symmetry a_{-i} = a_i extends the window to
    the 4B-term sequence (a_{|2i-1|}) for i = -(2B-1)..2B.  The base point
    must have order >= 4D+1.  Returns None on any pipeline failure or when
    the recovered Laurent polynomial is not of the folded paired shape.
    """
    if w.residue == 0:
        raise InvalidBasePoint("base point must be nonzero")
    field = w.field
    p = field.p
    needed = [2 * i - 1 for i in range(1, 2 * B + 1)]
    missing = [i for i in needed if i not in values]
    if missing:
        raise InvalidArgument(f"odd-index values missing: {missing}")
    seq = [
        int(field(values[abs(2 * i - 1)])) for i in range(-(2 * B - 1), 2 * B + 1)
    ]
    groups = _prony_pipeline(-(2 * B - 1), seq, 2 * B, 2 * D, w)
    if groups is None:
        return None
    coeff = {m: c for m, c in groups}
    wr = w.residue
    terms: list[tuple[int, int]] = []
    seen: set[int] = set()
    for m, c_pos in coeff.items():
        if m in seen:
            continue
        if m == 0:
            terms.append((0, c_pos))
            seen.add(0)
            continue
        if m % 2 or -m not in coeff:
            return None
        seen.add(m)
        seen.add(-m)
        if m < 0:
            m, c_pos = -m, coeff[-m]
        d = m // 2
        # expect coeff(x^{2d}) = (c/2) w^-d and coeff(x^{-2d}) = (c/2) w^d
        if coeff[-m] != c_pos * pow(wr, 2 * d, p) % p:
            return None
        c = 2 * c_pos * pow(wr, d, p) % p
        terms.append((d, c))
    if len(terms) > B:
        return None
    return SparsePoly(field, Basis.CHEB1, terms)
