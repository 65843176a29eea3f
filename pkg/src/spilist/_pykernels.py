"""Pure-Python arithmetic kernels over GF(p).

Everything here operates on plain integer residues in [0, p).  Dense
polynomials are lists of residues in ascending degree order with no trailing
zeros; the empty list is the zero polynomial.  Matrices are flat row-major
lists.  The compiled backend in ``_ckernels`` mirrors these signatures
exactly, so the two are interchangeable behind :mod:`spilist.kernels`.
"""

from __future__ import annotations


def inv_mod(a: int, p: int) -> int:
    """Inverse of a nonzero residue (p prime)."""
    return pow(a, p - 2, p)


def horner(coeffs: list[int], x: int, p: int) -> int:
    """Evaluate a dense polynomial at x."""
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def poly_trim(c: list[int]) -> list[int]:
    """Strip trailing zero coefficients in place and return the list."""
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_add(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return poly_trim(out)


def poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        av = a[i] if i < len(a) else 0
        bv = b[i] if i < len(b) else 0
        out[i] = (av - bv) % p
    return poly_trim(out)


def poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av == 0:
            continue
        for j, bv in enumerate(b):
            out[i + j] = (out[i + j] + av * bv) % p
    return poly_trim(out)


def poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder of dense polynomials; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = a[:]
    db, dl = len(b) - 1, b[-1]
    if len(r) - 1 < db:
        return [], poly_trim(r)
    inv_l = inv_mod(dl, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - db - 1, -1, -1):
        c = r[k + db] % p
        if c == 0:
            continue
        c = c * inv_l % p
        q[k] = c
        for j in range(db + 1):
            r[k + j] = (r[k + j] - c * b[j]) % p
    return poly_trim(q), poly_trim(r)


def poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    return poly_divmod(poly_mul(a, b, p), f, p)[1]


def poly_powmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    """base^e mod f for e >= 0."""
    result = poly_divmod([1], f, p)[1]
    acc = poly_divmod(base, f, p)[1]
    while e > 0:
        if e & 1:
            result = poly_mulmod(result, acc, f, p)
        e >>= 1
        if e:
            acc = poly_mulmod(acc, acc, f, p)
    return result


def poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd of dense polynomials."""
    a, b = a[:], b[:]
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if a and a[-1] != 1:
        inv_l = inv_mod(a[-1], p)
        a = [c * inv_l % p for c in a]
    return a


def bm(seq: list[int], p: int) -> list[int]:
    """Monic minimal linear generator of a sequence over GF(p).

    Returns ascending coefficients of Lambda(z) = z^L + c_1 z^(L-1) + ... + c_L
    such that seq[k+L] + c_1*seq[k+L-1] + ... + c_L*seq[k] = 0 for all valid k.
    The all-zero sequence yields [1] (L = 0).
    """
    n = len(seq)
    c = [1]  # connection polynomial, ascending
    b_poly = [1]
    L = 0
    m = 1
    b = 1
    for i in range(n):
        d = seq[i] % p
        for j in range(1, L + 1):
            d = (d + c[j] * seq[i - j]) % p
        if d == 0:
            m += 1
            continue
        coef = d * inv_mod(b, p) % p
        if 2 * L <= i:
            t = c[:]
            if len(c) < len(b_poly) + m:
                c.extend([0] * (len(b_poly) + m - len(c)))
            for j, v in enumerate(b_poly):
                c[j + m] = (c[j + m] - coef * v) % p
            L = i + 1 - L
            b_poly = t
            b = d
            m = 1
        else:
            if len(c) < len(b_poly) + m:
                c.extend([0] * (len(b_poly) + m - len(c)))
            for j, v in enumerate(b_poly):
                c[j + m] = (c[j + m] - coef * v) % p
            m += 1
    # c(x) = 1 + c_1 x + ...; reverse into the monic generator of degree L.
    lam = [0] * (L + 1)
    for i in range(min(len(c), L + 1)):
        lam[L - i] = c[i]
    return lam


def det_mod(flat: list[int], n: int, p: int) -> int:
    """Determinant of an n x n row-major matrix of residues."""
    m = [v % p for v in flat]
    det = 1
    for k in range(n):
        pivot_row = -1
        for i in range(k, n):
            if m[i * n + k] != 0:
                pivot_row = i
                break
        if pivot_row < 0:
            return 0
        if pivot_row != k:
            for j in range(k, n):
                m[k * n + j], m[pivot_row * n + j] = m[pivot_row * n + j], m[k * n + j]
            det = p - det if det else 0
        piv = m[k * n + k]
        det = det * piv % p
        inv_p = inv_mod(piv, p)
        for i in range(k + 1, n):
            factor = m[i * n + k] * inv_p % p
            if factor == 0:
                continue
            for j in range(k, n):
                m[i * n + j] = (m[i * n + j] - factor * m[k * n + j]) % p
    return det


def roots_scan(coeffs: list[int], p: int) -> list[int]:
    """All roots in GF(p) by exhaustive evaluation (small p only)."""
    return [x for x in range(p) if horner(coeffs, x, p) == 0]
