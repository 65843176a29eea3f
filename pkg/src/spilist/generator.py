"""Minimal linear generators and symbolic structured-matrix determinants.

A window of black-box values a_r, a_{r+1}, ... feeds three constructions:

* the Berlekamp/Massey minimal linear generator Lambda(z) of the window;
* Hankel matrices H_r with entry (i, j) = a_{r+i+j}, whose determinant as a
  polynomial in one substituted value locates a single corrupted entry;
* fold matrices G_r with entry (i, j) = a_{|r+2(i+j)|} + a_{|r+2(i-j)|},
  the Chebyshev counterpart built from the symmetry a_{-i} = a_i.

Symbolic determinants are computed by evaluation-interpolation: substitute
enough field points for the symbol(s), take numeric determinants, and
interpolate.  The cofactor-expansion route in the test suite certifies that
this produces the identical polynomial.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from . import kernels
from .errors import InvalidArgument
from .scalar import Felt, PrimeField


class UniPoly:
    """Dense univariate polynomial over GF(p), ascending coefficients.

    The zero polynomial has no coefficients; otherwise the leading
    coefficient is nonzero.
    """

    __slots__ = ("field", "_c")

    def __init__(self, field: PrimeField, coeffs: Iterable[Felt | int] = ()):
        c = [int(field(v)) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self._c = tuple(c)

    @property
    def coeffs(self) -> tuple[Felt, ...]:
        return tuple(Felt(v, self.field) for v in self._c)

    def raw_coeffs(self) -> list[int]:
        return list(self._c)

    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def leading_coeff(self) -> Felt:
        if not self._c:
            raise InvalidArgument("zero polynomial has no leading coefficient")
        return Felt(self._c[-1], self.field)

    def __call__(self, x: Felt) -> Felt:
        return Felt(kernels.horner(list(self._c), int(self.field(x)), self.field.p), self.field)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.field.p, self._c))

    def __repr__(self) -> str:
        if not self._c:
            return "UniPoly(0)"
        body = " + ".join(
            f"{v}*a^{i}" if i else str(v) for i, v in enumerate(self._c) if v
        )
        return f"UniPoly({body})"


class BiPoly:
    """Bivariate polynomial over GF(p) as a monomial map (i, j) -> coeff."""

    __slots__ = ("field", "_c")

    def __init__(
        self, field: PrimeField, coeffs: Mapping[tuple[int, int], Felt | int] = ()
    ):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c = {}
        for (i, j), v in items:
            vi = int(field(v))
            if vi:
                c[(i, j)] = vi
        self.field = field
        self._c = c

    @property
    def coeffs(self) -> dict[tuple[int, int], Felt]:
        return {k: Felt(v, self.field) for k, v in self._c.items()}

    def raw_coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def total_degree(self) -> int:
        return max((i + j for (i, j) in self._c), default=-1)

    def degree_in(self, var: int) -> int:
        """Degree in variable 1 or 2; -1 for the zero polynomial."""
        if var not in (1, 2):
            raise InvalidArgument("var must be 1 or 2")
        k = 0 if var == 1 else 1
        return max((mono[k] for mono in self._c), default=-1)

    def coeff(self, i: int, j: int) -> Felt:
        return Felt(self._c.get((i, j), 0), self.field)

    def eval_raw(self, x1: int, x2: int) -> int:
        p = self.field.p
        acc = 0
        for (i, j), v in self._c.items():
            acc = (acc + v * pow(x1, i, p) * pow(x2, j, p)) % p
        return acc

    def evaluate(self, x1: Felt, x2: Felt) -> Felt:
        return Felt(self.eval_raw(int(self.field(x1)), int(self.field(x2))), self.field)

    def specialize1(self, x1: Felt | int) -> UniPoly:
        """Substitute the first variable, leaving a polynomial in the second."""
        p = self.field.p
        v1 = int(self.field(x1))
        out = [0] * (self.degree_in(2) + 1)
        for (i, j), v in self._c.items():
            out[j] = (out[j] + v * pow(v1, i, p)) % p
        return UniPoly(self.field, out)

    def as_poly_in_2(self) -> list[UniPoly]:
        """Coefficients of powers of the second variable, each in var 1."""
        d2 = self.degree_in(2)
        rows: list[list[int]] = [[] for _ in range(d2 + 1)]
        for (i, j), v in self._c.items():
            row = rows[j]
            if len(row) <= i:
                row.extend([0] * (i + 1 - len(row)))
            row[i] = v
        return [UniPoly(self.field, r) for r in rows]

    def swap_vars(self) -> "BiPoly":
        return BiPoly(self.field, {(j, i): v for (i, j), v in self._c.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.field == other.field and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.field.p, tuple(sorted(self._c.items()))))

    def __repr__(self) -> str:
        if not self._c:
            return "BiPoly(0)"
        body = " + ".join(
            f"{v}*a1^{i}*a2^{j}" for (i, j), v in sorted(self._c.items())
        )
        return f"BiPoly({body})"


def berlekamp_massey(seq: Sequence[Felt]) -> UniPoly:
    """Monic minimal linear generator Lambda(z) of a nonempty sequence."""
    if not seq:
        raise InvalidArgument("empty sequence")
    field = seq[0].field
    raw = [int(field(v)) for v in seq]
    return UniPoly(field, kernels.bm(raw, field.p))


def _require_indices(evals: Mapping[int, object], indices: Iterable[int]) -> None:
    missing = [i for i in indices if i not in evals]
    if missing:
        raise InvalidArgument(f"evaluation indices missing: {missing}")


def hankel_matrix(evals: Mapping[int, Felt], r: int, B: int) -> list[list[Felt]]:
    """The (B+1)x(B+1) Hankel matrix H_r with entry (i, j) = a_{r+i+j}."""
    _require_indices(evals, range(r, r + 2 * B + 1))
    return [[evals[r + i + j] for j in range(B + 1)] for i in range(B + 1)]


def _hankel_det_sym_raw(
    a: Mapping[int, int], r: int, sym_index: int, B: int, p: int
) -> list[int]:
    """det(H_r) with a_{sym_index} replaced by a symbol; raw coefficients."""
    n = B + 1
    nodes = list(range(B + 2))
    base = [
        [0 if r + i + j == sym_index else a[r + i + j] for j in range(n)]
        for i in range(n)
    ]
    sym_mask = [
        [r + i + j == sym_index for j in range(n)] for i in range(n)
    ]
    ys = []
    for u in nodes:
        flat = [
            u if sym_mask[i][j] else base[i][j]
            for i in range(n)
            for j in range(n)
        ]
        ys.append(kernels.det_mod(flat, n, p))
    return kernels.interp_poly(nodes, ys, p)


def hankel_det_sym(
    evals: Mapping[int, Felt], r: int, sym_index: int, B: int
) -> UniPoly:
    """det(H_r) as a degree-(B+1) polynomial in the substituted value a_{r+B}.

    The substituted position must be the centre anti-diagonal index r + B;
    the result always has degree exactly B+1 with leading coefficient +-1.
    """
    if sym_index != r + B:
        raise InvalidArgument("substituted index must equal r + B")
    needed = [i for i in range(r, r + 2 * B + 1) if i != sym_index]
    _require_indices(evals, needed)
    some = evals[needed[0]]
    field = some.field
    p = field.p
    a = {i: evals[i].residue for i in needed}
    c = _hankel_det_sym_raw(a, r, sym_index, B, p)
    poly = UniPoly(field, c)
    if poly.degree() != B + 1 or poly.raw_coeffs()[-1] not in (1, p - 1):
        raise InvalidArgument("Hankel determinant lost its expected shape")
    return poly


def _fold_entry_indices(r: int, i: int, j: int) -> tuple[int, int]:
    return abs(r + 2 * (i + j)), abs(r + 2 * (i - j))


def fold_matrix(evals: Mapping[int, Felt], r: int, B: int) -> list[list[Felt]]:
    """The fold (Hankel+Toeplitz) matrix G_r for odd r in {1, ..., 2B-1}."""
    if r % 2 == 0 or not (1 <= r <= 2 * B - 1):
        raise InvalidArgument("r must be odd and within [1, 2B-1]")
    needed = sorted(
        {
            k
            for i in range(B + 1)
            for j in range(B + 1)
            for k in _fold_entry_indices(r, i, j)
        }
    )
    _require_indices(evals, needed)
    return [
        [
            evals[abs(r + 2 * (i + j))] + evals[abs(r + 2 * (i - j))]
            for j in range(B + 1)
        ]
        for i in range(B + 1)
    ]


def _fold_det_sym_raw(
    a: Mapping[int, int], r: int, sym_index: int, B: int, p: int
) -> list[int]:
    n = B + 1
    base = [[0] * n for _ in range(n)]
    count = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in _fold_entry_indices(r, i, j):
                if k == sym_index:
                    count[i][j] += 1
                else:
                    base[i][j] = (base[i][j] + a[k]) % p
    nodes = list(range(B + 2))
    ys = []
    for u in nodes:
        flat = [
            (base[i][j] + count[i][j] * u) % p
            for i in range(n)
            for j in range(n)
        ]
        ys.append(kernels.det_mod(flat, n, p))
    return kernels.interp_poly(nodes, ys, p)


def fold_det_sym(
    evals: Mapping[int, Felt], r: int, sym_odd_index: int, B: int
) -> UniPoly:
    """det(G_r) with a_r or a_{r+2B} substituted; degree exactly B+1.

    Only those two positions keep the determinant's degree pinned at B+1
    (the symbol then fills the main diagonal or the anti-diagonal), so other
    substitution positions are rejected.
    """
    if r % 2 == 0 or not (1 <= r <= 2 * B - 1):
        raise InvalidArgument("r must be odd and within [1, 2B-1]")
    if sym_odd_index not in (r, r + 2 * B):
        raise InvalidArgument("substituted index must be a_r or a_{r+2B}")
    needed = sorted(
        {
            k
            for i in range(B + 1)
            for j in range(B + 1)
            for k in _fold_entry_indices(r, i, j)
        }
        - {sym_odd_index}
    )
    _require_indices(evals, needed)
    field = evals[needed[0]].field
    p = field.p
    a = {i: evals[i].residue for i in needed}
    poly = UniPoly(field, _fold_det_sym_raw(a, r, sym_odd_index, B, p))
    if poly.degree() != B + 1:
        raise InvalidArgument("fold determinant lost its expected degree")
    return poly


def _pham_system_sym_raw(
    a: Mapping[int, int], l1: int, l2: int, B: int, p: int
) -> tuple[dict[tuple[int, int], int], dict[tuple[int, int], int]]:
    """Raw bivariate determinant pair for substituted values a_{l1}, a_{l2}."""
    n = B + 1
    nodes = list(range(B + 2))

    def grid_for(r: int) -> dict[tuple[int, int], int]:
        base = [[0] * n for _ in range(n)]
        which = [[0] * n for _ in range(n)]  # 0 plain, 1 -> alpha1, 2 -> alpha2
        for i in range(n):
            for j in range(n):
                k = r + i + j
                if k == l1:
                    which[i][j] = 1
                elif k == l2:
                    which[i][j] = 2
                else:
                    base[i][j] = a[k]
        table: list[list[int]] = []
        for u in nodes:
            row = []
            for v in nodes:
                flat = [
                    u if which[i][j] == 1 else v if which[i][j] == 2 else base[i][j]
                    for i in range(n)
                    for j in range(n)
                ]
                row.append(kernels.det_mod(flat, n, p))
            table.append(row)
        # interpolate along alpha2 for each alpha1 node, then along alpha1
        per_u = [kernels.interp_poly(nodes, row, p) for row in table]
        out: dict[tuple[int, int], int] = {}
        max_j = max((len(c) for c in per_u), default=0)
        for j in range(max_j):
            col = [c[j] if j < len(c) else 0 for c in per_u]
            for i, coef in enumerate(kernels.interp_poly(nodes, col, p)):
                if coef:
                    out[(i, j)] = coef
        return out

    return grid_for(l1 - B), grid_for(l2 - B)


def pham_system_sym(
    evals: Mapping[int, Felt], l1: int, l2: int, B: int
) -> tuple[BiPoly, BiPoly]:
    """The determinant pair (det H_{l1-B}, det H_{l2-B}) with both values
    a_{l1} and a_{l2} replaced by symbols.

    Requires B+1 <= l1 <= 2B and 2B+1 <= l2 <= 3B with evaluations covering
    indices 1..4B; each returned polynomial carries the pure power of its own
    symbol with coefficient +-1 plus a remainder of total degree <= B.
    """
    if not (B + 1 <= l1 <= 2 * B and 2 * B + 1 <= l2 <= 3 * B):
        raise InvalidArgument("substituted indices outside the middle windows")
    needed = [i for i in range(1, 4 * B + 1) if i not in (l1, l2)]
    _require_indices(evals, needed)
    field = evals[needed[0]].field
    p = field.p
    a = {i: evals[i].residue for i in needed}
    raw1, raw2 = _pham_system_sym_raw(a, l1, l2, B, p)
    d1 = BiPoly(field, raw1)
    d2 = BiPoly(field, raw2)
    for d, mono in ((d1, (B + 1, 0)), (d2, (0, B + 1))):
        lead = d.raw_coeffs().get(mono, 0)
        if lead not in (1, p - 1):
            raise InvalidArgument("determinant lost its pure-power term")
        if any(
            i + j > B for (i, j) in d.raw_coeffs() if (i, j) != mono
        ):
            raise InvalidArgument("determinant remainder exceeds total degree B")
    return d1, d2


def unipoly_matrix_det(mat: Sequence[Sequence[UniPoly]], deg_bound: int) -> UniPoly:
    """Determinant of a matrix of univariate polynomials.

    Evaluation-interpolation at deg_bound+1 field points; the field must
    therefore have p > deg_bound.
    """
    n = len(mat)
    field = mat[0][0].field
    p = field.p
    if deg_bound + 1 > p:
        raise InvalidArgument("field too small for interpolation nodes")
    nodes = list(range(deg_bound + 1))
    raw = [[e.raw_coeffs() for e in row] for row in mat]
    ys = []
    for u in nodes:
        flat = [kernels.horner(raw[i][j], u, p) for i in range(n) for j in range(n)]
        ys.append(kernels.det_mod(flat, n, p))
    return UniPoly(field, kernels.interp_poly(nodes, ys, p))


def bipoly_matrix_det(
    mat: Sequence[Sequence[BiPoly]], deg1_bound: int, deg2_bound: int
) -> BiPoly:
    """Determinant of a matrix of bivariate polynomials, by grid interpolation."""
    n = len(mat)
    field = mat[0][0].field
    p = field.p
    if max(deg1_bound, deg2_bound) + 1 > p:
        raise InvalidArgument("field too small for interpolation nodes")
    nodes1 = list(range(deg1_bound + 1))
    nodes2 = list(range(deg2_bound + 1))
    per_u: list[list[int]] = []
    for u in nodes1:
        row_vals = []
        for v in nodes2:
            flat = [mat[i][j].eval_raw(u, v) for i in range(n) for j in range(n)]
            row_vals.append(kernels.det_mod(flat, n, p))
        per_u.append(kernels.interp_poly(nodes2, row_vals, p))
    out: dict[tuple[int, int], int] = {}
    max_j = max((len(c) for c in per_u), default=0)
    for j in range(max_j):
        col = [c[j] if j < len(c) else 0 for c in per_u]
        for i, coef in enumerate(kernels.interp_poly(nodes1, col, p)):
            if coef:
                out[(i, j)] = coef
    return BiPoly(field, out)
