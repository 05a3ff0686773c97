"""Exact matrix routines over prime fields Z_q and over the integers.

Matrices are lists of row lists of ints.  Everything is deterministic:
echelon forms use the first nonzero pivot, nullspace bases set free
variables to 1 one at a time in ascending column order.
"""

from __future__ import annotations


def identity(dim: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]


def mat_mul_mod(a, b, q: int):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            aik = a[i][k]
            if aik == 0:
                continue
            for j in range(cols):
                out[i][j] = (out[i][j] + aik * b[k][j]) % q
    return out


def mat_vec_mod(a, v, q: int):
    return [sum(x * y for x, y in zip(row, v)) % q for row in a]


def rref_mod(a, q: int):
    """Reduced row echelon form mod prime q; returns (rref, pivot columns)."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] % q != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], -1, q)
        m[r] = [(x * inv) % q for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] % q != 0:
                factor = m[i][c] % q
                m[i] = [(x - factor * y) % q for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def nullspace_mod(a, q: int):
    """Canonical nullspace basis: each free column set to 1 in turn."""
    rref, pivots = rref_mod(a, q)
    cols = len(a[0]) if a else 0
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-rref[r][f]) % q
        basis.append(v)
    return basis


def inverse_mod(a, q: int):
    """Inverse mod prime q, or None when singular."""
    dim = len(a)
    aug = [row[:] + ident_row[:] for row, ident_row in zip(a, identity(dim))]
    rref, pivots = rref_mod(aug, q)
    if pivots[:dim] != list(range(dim)):
        return None
    return [row[dim:] for row in rref]


def det_mod(a, q: int) -> int:
    """Determinant mod prime q by Gaussian elimination."""
    m = [row[:] for row in a]
    dim = len(m)
    det = 1
    for c in range(dim):
        pivot = next((i for i in range(c, dim) if m[i][c] % q != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det = (det * m[c][c]) % q
        inv = pow(m[c][c], -1, q)
        for i in range(c + 1, dim):
            if m[i][c] % q != 0:
                factor = (m[i][c] * inv) % q
                m[i] = [(x - factor * y) % q for x, y in zip(m[i], m[c])]
    return det % q


def int_det(a) -> int:
    """Exact integer determinant by cofactor expansion memoized on
    column masks; fine for the desk-scale dimensions used here."""
    dim = len(a)
    if dim == 0:
        return 1
    full = (1 << dim) - 1
    memo = {}

    def minor(row: int, mask: int) -> int:
        if row == dim:
            return 1
        key = mask
        if key in memo:
            return memo[key]
        total = 0
        sign = 1
        for c in range(dim):
            bit = 1 << c
            if not mask & bit:
                continue
            if a[row][c] != 0:
                total += sign * a[row][c] * minor(row + 1, mask & ~bit)
            sign = -sign
        memo[key] = total
        return total

    return minor(0, full)


# --- polynomial helpers over Z_q (coefficient lists, ascending) ---


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b, q):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % q
    return _poly_trim(out)


def _poly_add(a, b, q, sub=False):
    length = max(len(a), len(b))
    pa = a + [0] * (length - len(a))
    pb = b + [0] * (length - len(b))
    if sub:
        return _poly_trim([(x - y) % q for x, y in zip(pa, pb)])
    return _poly_trim([(x + y) % q for x, y in zip(pa, pb)])


def charpoly_mod(a, q: int) -> list[int]:
    """Monic characteristic polynomial det(tI - A) over Z_q, ascending
    coefficients, via cofactor expansion in the polynomial ring."""
    dim = len(a)

    def table(rows, cols):
        # entry polynomials of tI - A restricted to rows x cols
        return [
            [
                _poly_trim([(-a[r][c]) % q, 1] if r == c else [(-a[r][c]) % q])
                for c in cols
            ]
            for r in rows
        ]

    def det_poly(m):
        size = len(m)
        if size == 1:
            return m[0][0]
        total = []
        for j in range(size):
            if not m[0][j]:
                continue
            sub = [row[:j] + row[j + 1 :] for row in m[1:]]
            term = _poly_mul(m[0][j], det_poly(sub), q)
            total = _poly_add(total, term, q, sub=bool(j % 2))
        return total

    poly = det_poly(table(range(dim), range(dim)))
    poly = poly + [0] * (dim + 1 - len(poly))
    assert poly[-1] % q == 1, "characteristic polynomial must be monic"
    return [c % q for c in poly]


def poly_eval_mod(coeffs, x: int, q: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % q
    return acc


def _synth_div(coeffs, r: int, q: int):
    """Divide by (t - r); returns (quotient coeffs, remainder)."""
    d = len(coeffs) - 1
    b = [0] * d
    b[d - 1] = coeffs[d] % q
    for i in range(d - 1, 0, -1):
        b[i - 1] = (coeffs[i] + r * b[i]) % q
    rem = (coeffs[0] + r * b[0]) % q
    return b, rem


def root_multiplicity(coeffs, r: int, q: int) -> int:
    """Multiplicity of the root r: repeated synthetic division by (t - r)."""
    mult = 0
    current = list(coeffs)
    while len(current) > 1:
        quotient, rem = _synth_div(current, r, q)
        if rem != 0:
            break
        current = quotient
        mult += 1
    return mult
