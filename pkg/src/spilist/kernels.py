"""Kernel dispatch: compiled backend when available, pure Python otherwise.

The compiled backend (``spilist._ckernels``, built from Cython) only handles
moduli below 2**31 so that products fit in 64-bit integers; larger fields
silently use the pure-Python implementation.  Setting the environment
variable ``SPILIST_PURE=1`` before import forces pure Python everywhere,
which the benchmark and backend-equivalence tests rely on.
"""

from __future__ import annotations

import os
import random

from . import _pykernels as _py

try:  # compiled twin, optional
    from . import _ckernels as _c  # type: ignore[attr-defined]
except ImportError:
    _c = None

_FORCE_PURE = os.environ.get("SPILIST_PURE") == "1"
_C_LIMIT = 1 << 31


def has_compiled_backend() -> bool:
    return _c is not None and not _FORCE_PURE


def backend_name(p: int | None = None) -> str:
    if _c is None or _FORCE_PURE:
        return "python"
    if p is not None and p >= _C_LIMIT:
        return "python"
    return "c"


def _mod(p: int):
    if _c is not None and not _FORCE_PURE and p < _C_LIMIT:
        return _c
    return _py


def bm(seq, p: int) -> list[int]:
    return _mod(p).bm(list(seq), p)


def det_mod(flat, n: int, p: int) -> int:
    return _mod(p).det_mod(list(flat), n, p)


def horner(coeffs, x: int, p: int) -> int:
    return _mod(p).horner(list(coeffs), x, p)


def poly_mulmod(a, b, f, p: int) -> list[int]:
    return _mod(p).poly_mulmod(list(a), list(b), list(f), p)


def poly_powmod(base, e: int, f, p: int) -> list[int]:
    return _mod(p).poly_powmod(list(base), e, list(f), p)


def poly_gcd(a, b, p: int) -> list[int]:
    return _mod(p).poly_gcd(list(a), list(b), p)


def roots_scan(coeffs, p: int) -> list[int]:
    return _mod(p).roots_scan(list(coeffs), p)


# Above this modulus, root finding switches from exhaustive scanning to
# gcd with x^p - x followed by randomized equal-degree splitting.
EXHAUSTIVE_ROOT_LIMIT = 4096


def _root_seed(coeffs: list[int], p: int) -> int:
    h = p
    for c in coeffs:
        h = (h * 1000003 + c + 1) % (1 << 64)
    return h


def poly_roots(coeffs, p: int) -> list[int]:
    """Distinct roots in GF(p) of a nonzero dense polynomial, ascending."""
    f = list(coeffs)
    _py.poly_trim(f)
    if not f:
        raise ZeroDivisionError("root finding on the zero polynomial")
    if len(f) == 1:
        return []
    if p <= EXHAUSTIVE_ROOT_LIMIT:
        return roots_scan(f, p)
    mod = _mod(p)
    # radical part carrying exactly the distinct GF(p) roots
    xp = mod.poly_powmod([0, 1], p, f, p)
    g = mod.poly_gcd(_py.poly_sub(xp, [0, 1], p), f, p)
    roots: list[int] = []
    rng = random.Random(_root_seed(f, p))
    stack = [g]
    half = (p - 1) // 2
    while stack:
        h = stack.pop()
        d = len(h) - 1
        if d <= 0:
            continue
        if d == 1:
            roots.append((p - h[0]) * _py.inv_mod(h[1], p) % p)
            continue
        while True:
            a = rng.randrange(p)
            t = mod.poly_powmod([a, 1], half, h, p)
            t = _py.poly_sub(t, [1], p)
            u = mod.poly_gcd(t, h, p)
            du = len(u) - 1
            if 0 < du < d:
                stack.append(u)
                stack.append(_py.poly_divmod(h, u, p)[0])
                break
    roots.sort()
    return roots


def interp_poly(xs: list[int], ys: list[int], p: int) -> list[int]:
    """Dense polynomial through the given points (Newton form), ascending."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = (coef[i] - coef[i - 1]) % p
            den = (xs[i] - xs[i - j]) % p
            coef[i] = num * _py.inv_mod(den, p) % p
    # expand Newton form into monomial coefficients (Horner over the nodes)
    out = [0] * n
    for i in range(n - 1, -1, -1):
        for k in range(n - 1, 0, -1):
            out[k] = (out[k - 1] - xs[i] * out[k]) % p
        out[0] = (coef[i] - xs[i] * out[0]) % p
    return _py.poly_trim(out)


def solve_linear(mat: list[list[int]], rhs: list[int], p: int) -> list[int] | None:
    """Solve a square system over GF(p); None when the matrix is singular."""
    n = len(mat)
    a = [row[:] + [rhs[i] % p] for i, row in enumerate(mat)]
    for k in range(n):
        piv = -1
        for i in range(k, n):
            if a[i][k] % p != 0:
                piv = i
                break
        if piv < 0:
            return None
        a[k], a[piv] = a[piv], a[k]
        inv_p = _py.inv_mod(a[k][k] % p, p)
        a[k] = [v * inv_p % p for v in a[k]]
        for i in range(n):
            if i != k and a[i][k] % p:
                f = a[i][k] % p
                a[i] = [(v - f * w) % p for v, w in zip(a[i], a[k])]
    return [a[i][n] % p for i in range(n)]
