"""Zero-dimensional bivariate Pham systems: resultant elimination + back-substitution.

A Pham pair is d1 = ±a1^n + Q1, d2 = ±a2^n + Q2 with total degree of each
remainder below n; such a system has at most n^2 solutions.  The second
variable is eliminated through a Sylvester resultant (well-defined because
d2 is monic up to sign in it), then every resultant root is extended by the
roots of the specialized d2 and checked against both equations.
"""

from __future__ import annotations

from . import _pykernels as _rawpoly
from . import kernels
from .errors import DegenerateSystem, InvalidArgument
from .generator import BiPoly, UniPoly, unipoly_matrix_det
from .scalar import Felt, distinct_roots


def sylvester_matrix(f: BiPoly, g: BiPoly) -> list[list[UniPoly]]:
    """Sylvester matrix eliminating the second variable.

    Rows are built from the coefficient polynomials (in the first variable)
    of f and g viewed as polynomials in the second; f contributes deg(g)
    rows, g contributes deg(f) rows.
    """
    field = f.field
    fc = f.as_poly_in_2()
    gc = g.as_poly_in_2()
    m = len(fc) - 1
    n = len(gc) - 1
    size = m + n
    zero = UniPoly(field)
    mat = [[zero] * size for _ in range(size)]
    for row in range(n):
        for k in range(m + 1):
            mat[row][row + k] = fc[m - k]
    for row in range(m):
        for k in range(n + 1):
            mat[n + row][row + k] = gc[n - k]
    return mat


def _bareiss_poly_det(mat: list[list[list[int]]], p: int) -> list[int]:
    """Fraction-free determinant of a matrix of raw coefficient lists."""
    n = len(mat)
    if n == 0:
        return [1]
    m = [row[:] for row in mat]
    sign = 1
    prev: list[int] = [1]
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), -1)
            if swap < 0:
                return []
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _rawpoly.poly_sub(
                    _rawpoly.poly_mul(m[i][j], m[k][k], p),
                    _rawpoly.poly_mul(m[i][k], m[k][j], p),
                    p,
                )
                q, rem = _rawpoly.poly_divmod(num, prev, p)
                if rem:
                    raise AssertionError("Bareiss division was not exact")
                m[i][j] = q
            m[i][k] = []
        prev = m[k][k]
    det = m[n - 1][n - 1]
    if sign < 0:
        det = [(-c) % p for c in det]
    return det


def sylvester_resultant(f: BiPoly, g: BiPoly, eliminate: int = 2) -> UniPoly:
    """Resultant of f and g with respect to one variable.

    ``eliminate`` names the variable to remove (1 or 2); the result is a
    univariate polynomial in the other.  Requires g to have a nonzero
    constant leading coefficient in the eliminated variable, which the Pham
    shape guarantees.  An identically zero resultant means the system has a
    common curve and is reported as DegenerateSystem.
    """
    if f.is_zero() or g.is_zero():
        raise InvalidArgument("resultant of a zero polynomial")
    if eliminate == 1:
        f, g = f.swap_vars(), g.swap_vars()
    elif eliminate != 2:
        raise InvalidArgument("eliminate must be 1 or 2")
    field = f.field
    p = field.p
    n2 = g.degree_in(2)
    lead = g.as_poly_in_2()[-1]
    if n2 < 1 or lead.degree() != 0:
        raise InvalidArgument(
            "eliminated-variable leading coefficient must be a nonzero constant"
        )
    if f.degree_in(2) < 1:
        # f is free of the eliminated variable: Res = f^deg(g)
        base = f.as_poly_in_2()[0].raw_coeffs()
        acc = [1]
        for _ in range(n2):
            acc = _rawpoly.poly_mul(acc, base, p)
        res = UniPoly(field, acc)
        if res.is_zero():
            raise DegenerateSystem("resultant is identically zero")
        return res
    mat = sylvester_matrix(f, g)
    deg_bound = sum(
        max((e.degree() for e in row if not e.is_zero()), default=0) for row in mat
    )
    if deg_bound + 1 <= p:
        res = unipoly_matrix_det(mat, deg_bound)
    else:
        raw = _bareiss_poly_det([[e.raw_coeffs() for e in row] for row in mat], p)
        res = UniPoly(field, raw)
    if res.is_zero():
        raise DegenerateSystem("resultant is identically zero")
    return res


def _check_pham_shape(d: BiPoly, which: int, B: int) -> None:
    p = d.field.p
    mono = (B + 1, 0) if which == 1 else (0, B + 1)
    coeffs = d.raw_coeffs()
    if coeffs.get(mono, 0) not in (1, p - 1):
        raise InvalidArgument(f"d{which} lacks the pure power with unit coefficient")
    if any(i + j > B for (i, j) in coeffs if (i, j) != mono):
        raise InvalidArgument(f"d{which} remainder exceeds total degree {B}")


def solve_pham(d1: BiPoly, d2: BiPoly, B: int) -> list[tuple[Felt, Felt]]:
    """All GF(p)^2 solutions of the Pham pair d1 = d2 = 0.

    Eliminates the second variable first (d2 is monic up to sign in it),
    extends each resultant root with the roots of the specialized d2, keeps
    the pairs satisfying both equations, and returns them in lexicographic
    residue order.  At most (B+1)^2 solutions exist.
    """
    _check_pham_shape(d1, 1, B)
    _check_pham_shape(d2, 2, B)
    field = d1.field
    res = sylvester_resultant(d1, d2, eliminate=2)
    out: list[tuple[Felt, Felt]] = []
    for x1 in distinct_roots(res):
        spec2 = d2.specialize1(x1)
        for x2 in distinct_roots(spec2):
            if d1.evaluate(x1, x2).is_zero() and d2.evaluate(x1, x2).is_zero():
                out.append((x1, x2))
    out.sort(key=lambda s: (s[0].residue, s[1].residue))
    if len(out) > (B + 1) ** 2:
        raise AssertionError("Pham system produced more than (B+1)^2 solutions")
    return out
