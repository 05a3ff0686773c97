"""Linear algebra for S-vector spaces over a subfield k of Z_n.

Strategy: all field-dependent work (echelon forms, determinants,
characteristic polynomials, eigenspaces) happens in the isomorphic prime
field Z_q and is mapped back entrywise; only the final arithmetic
identities (A·v = c·v, sum of projections, reconstruction) are stated and
re-verified directly mod n.  The identity matrix is I_e = diag(e, ..., e)
with e the subfield identity, which usually is not 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gfmat
from .polylab import ModPolynomial
from .ringcore import Subfield


@dataclass(frozen=True)
class SubfieldVector:
    k: Subfield
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        for x in self.entries:
            if not self.k.contains(x):
                raise ValueError(f"entry {x} is not in the subfield {self.k.elements}")

    @property
    def n(self) -> int:
        return self.k.n

    def to_json(self) -> list[int]:
        return list(self.entries)


@dataclass(frozen=True)
class SubfieldMatrix:
    k: Subfield
    rows: int
    cols: int
    entries: tuple[int, ...]  # row-major

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be >= 1")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match the dimensions")
        for x in self.entries:
            if not self.k.contains(x):
                raise ValueError(f"entry {x} is not in the subfield {self.k.elements}")

    @classmethod
    def from_rows(cls, k: Subfield, rows) -> "SubfieldMatrix":
        rows = [list(r) for r in rows]
        return cls(k, len(rows), len(rows[0]), tuple(x for r in rows for x in r))

    @property
    def n(self) -> int:
        return self.k.n

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row_lists(self) -> list[list[int]]:
        return [
            list(self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        ]

    def transpose(self) -> "SubfieldMatrix":
        return SubfieldMatrix.from_rows(
            self.k, [[self.at(i, j) for i in range(self.rows)] for j in range(self.cols)]
        )

    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "subfield": list(self.k.elements),
            "rows": self.rows,
            "cols": self.cols,
            "entries": list(self.entries),
        }


def identity_matrix(k: Subfield, dim: int) -> SubfieldMatrix:
    """I_e: the subfield identity along the diagonal."""
    e = k.identity
    return SubfieldMatrix.from_rows(
        k, [[e if i == j else 0 for j in range(dim)] for i in range(dim)]
    )


def _same_space(a, b) -> None:
    if a.k != b.k:
        raise ValueError("operands live over different subfields")


def mat_add(a: SubfieldMatrix, b: SubfieldMatrix) -> SubfieldMatrix:
    _same_space(a, b)
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError("shape mismatch for addition")
    n = a.n
    return SubfieldMatrix(a.k, a.rows, a.cols, tuple((x + y) % n for x, y in zip(a.entries, b.entries)))


def mat_mul(a: SubfieldMatrix, b: SubfieldMatrix) -> SubfieldMatrix:
    _same_space(a, b)
    if a.cols != b.rows:
        raise ValueError("shape mismatch for multiplication")
    n = a.n
    out = []
    for i in range(a.rows):
        for j in range(b.cols):
            out.append(sum(a.at(i, t) * b.at(t, j) for t in range(a.cols)) % n)
    return SubfieldMatrix(a.k, a.rows, b.cols, tuple(out))


def mat_arith(a: SubfieldMatrix, b: SubfieldMatrix, op: str) -> SubfieldMatrix:
    if op == "add":
        return mat_add(a, b)
    if op == "mul":
        return mat_mul(a, b)
    raise ValueError(f"unknown op {op!r}")


def apply_matrix(a: SubfieldMatrix, v: SubfieldVector) -> SubfieldVector:
    _same_space(a, v)
    if a.cols != len(v.entries):
        raise ValueError("shape mismatch for matrix-vector product")
    n = a.n
    out = tuple(
        sum(a.at(i, j) * v.entries[j] for j in range(a.cols)) % n
        for i in range(a.rows)
    )
    return SubfieldVector(a.k, out)


def scalar_mul(c: int, a: SubfieldMatrix) -> SubfieldMatrix:
    if not a.k.contains(c):
        raise ValueError(f"scalar {c} is not in the subfield")
    n = a.n
    return SubfieldMatrix(a.k, a.rows, a.cols, tuple((c * x) % n for x in a.entries))


def mat_sub(a: SubfieldMatrix, b: SubfieldMatrix) -> SubfieldMatrix:
    _same_space(a, b)
    n = a.n
    return SubfieldMatrix(a.k, a.rows, a.cols, tuple((x - y) % n for x, y in zip(a.entries, b.entries)))


def to_prime_matrix(a: SubfieldMatrix) -> list[list[int]]:
    """Entrywise image of the matrix in Z_q."""
    return [[a.k.to_prime(a.at(i, j)) for j in range(a.cols)] for i in range(a.rows)]


def from_prime_matrix(k: Subfield, m) -> SubfieldMatrix:
    return SubfieldMatrix.from_rows(k, [[k.from_prime(x) for x in row] for row in m])


def from_prime_vector(k: Subfield, v) -> SubfieldVector:
    return SubfieldVector(k, tuple(k.from_prime(x) for x in v))


def rref_and_nullspace(a: SubfieldMatrix):
    """(rank, reduced echelon form, canonical nullspace basis), all over k.

    Work happens in Z_q; free variables take the value 1 there (the
    subfield identity after mapping back), one at a time ascending.
    """
    q = a.k.prime_order
    rref, pivots = gfmat.rref_mod(to_prime_matrix(a), q)
    basis = gfmat.nullspace_mod(to_prime_matrix(a), q)
    return (
        len(pivots),
        from_prime_matrix(a.k, rref),
        [from_prime_vector(a.k, v) for v in basis],
    )


@dataclass(frozen=True)
class CharPolyResult:
    """prime_coeffs: monic characteristic polynomial over Z_q (ascending).
    zn_rendition: det(lam * I_e - A) mod n tabulated for lam = 0..n-1."""

    prime_coeffs: tuple[int, ...]
    zn_rendition: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "prime_coeffs": list(self.prime_coeffs),
            "zn_rendition": list(self.zn_rendition),
        }


def char_poly(a: SubfieldMatrix) -> CharPolyResult:
    if not a.is_square():
        raise ValueError("characteristic polynomial needs a square matrix")
    k = a.k
    q = k.prime_order
    prime_coeffs = tuple(gfmat.charpoly_mod(to_prime_matrix(a), q))
    n, e, dim = k.n, k.identity, a.rows
    rendition = []
    for lam in range(n):
        diag = (lam * e) % n
        m = [
            [(diag - a.at(i, j)) % n if i == j else (-a.at(i, j)) % n for j in range(dim)]
            for i in range(dim)
        ]
        rendition.append(gfmat.int_det(m) % n)
    return CharPolyResult(prime_coeffs=prime_coeffs, zn_rendition=tuple(rendition))


@dataclass(frozen=True)
class SEigenvalue:
    value: int  # an element of k
    basis: tuple[SubfieldVector, ...]
    algebraic_multiplicity: int

    @property
    def geometric_multiplicity(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class AlienValue:
    """A residue outside k where det(lam·I_e - A) vanishes; the witness,
    when present, is an in-field vector with A·v = lam·v (it exists iff
    lam·e is an in-field characteristic value)."""

    value: int
    witness: SubfieldVector | None


@dataclass(frozen=True)
class EigenSystem:
    matrix: SubfieldMatrix
    char: CharPolyResult
    s_values: tuple[SEigenvalue, ...]
    alien_values: tuple[AlienValue, ...]
    diagonalizable: bool

    def s_value_set(self) -> set[int]:
        return {ev.value for ev in self.s_values}

    def to_json(self) -> dict:
        return {
            "matrix": self.matrix.to_json(),
            "char": self.char.to_json(),
            "s_values": [
                {
                    "value": ev.value,
                    "algebraic_multiplicity": ev.algebraic_multiplicity,
                    "basis": [v.to_json() for v in ev.basis],
                }
                for ev in self.s_values
            ],
            "alien_values": [
                {"value": av.value, "witness": av.witness.to_json() if av.witness else None}
                for av in self.alien_values
            ],
            "diagonalizable": self.diagonalizable,
        }


def eigen_system(a: SubfieldMatrix) -> EigenSystem:
    """S-characteristic values in k with canonical eigenbases, plus the
    alien values in Z_n \\ k; every (c, v) pair is re-verified mod n."""
    if not a.is_square():
        raise ValueError("eigen decomposition needs a square matrix")
    k = a.k
    q, n, dim = k.prime_order, k.n, a.rows
    cp = char_poly(a)
    prime = to_prime_matrix(a)
    s_values = []
    for r in range(q - 1, -1, -1):
        if gfmat.poly_eval_mod(cp.prime_coeffs, r, q) != 0:
            continue
        alg = gfmat.root_multiplicity(cp.prime_coeffs, r, q)
        shifted = [
            [(prime[i][j] - (r if i == j else 0)) % q for j in range(dim)]
            for i in range(dim)
        ]
        basis = tuple(
            from_prime_vector(k, v) for v in gfmat.nullspace_mod(shifted, q)
        )
        c = k.from_prime(r)
        for v in basis:
            got = apply_matrix(a, v).entries
            want = tuple((c * x) % n for x in v.entries)
            assert got == want, f"eigenpair re-verification failed at c={c}"
        s_values.append(SEigenvalue(value=c, basis=basis, algebraic_multiplicity=alg))
    by_value = {ev.value: ev for ev in s_values}
    aliens = []
    for lam in range(n):
        if k.contains(lam) or cp.zn_rendition[lam] != 0:
            continue
        ev = by_value.get((lam * k.identity) % n)
        witness = ev.basis[0] if ev and ev.basis else None
        if witness is not None:
            got = apply_matrix(a, witness).entries
            want = tuple((lam * x) % n for x in witness.entries)
            assert got == want, f"alien witness re-verification failed at {lam}"
        aliens.append(AlienValue(value=lam, witness=witness))
    diag = sum(ev.geometric_multiplicity for ev in s_values) == dim
    return EigenSystem(
        matrix=a,
        char=cp,
        s_values=tuple(s_values),
        alien_values=tuple(aliens),
        diagonalizable=diag,
    )


def pseudo_inner_product(u, v) -> int:
    """Coordinate-sum bilinear form; may vanish on nonzero arguments.

    Accepts a pair of SubfieldVectors (equal length required) or a pair
    of ModPolynomials (coefficient vectors, zero-padded to equal length).
    """
    if isinstance(u, SubfieldVector) and isinstance(v, SubfieldVector):
        if u.n != v.n:
            raise ValueError("modulus mismatch")
        if len(u.entries) != len(v.entries):
            raise ValueError("length mismatch")
        return sum(x * y for x, y in zip(u.entries, v.entries)) % u.n
    if isinstance(u, ModPolynomial) and isinstance(v, ModPolynomial):
        if u.n != v.n:
            raise ValueError("modulus mismatch")
        length = max(len(u.coeffs), len(v.coeffs))
        return sum(x * y for x, y in zip(u.padded(length), v.padded(length))) % u.n
    raise TypeError("expected two SubfieldVectors or two ModPolynomials")


def self_adjoint_check(a: SubfieldMatrix) -> bool:
    """True iff A equals its transpose (the adjoint for the coordinate
    pseudo inner product in standard coordinates)."""
    if not a.is_square():
        raise ValueError("adjoint comparison needs a square matrix")
    return a.entries == a.transpose().entries


@dataclass(frozen=True)
class SpectralDecomposition:
    terms: tuple[tuple[int, SubfieldMatrix], ...]  # (c_i, E_i)
    residual_ok: bool
    eigenspaces_pseudo_orthogonal: bool

    def to_json(self) -> dict:
        return {
            "terms": [{"value": c, "projection": e.to_json()} for c, e in self.terms],
            "residual_ok": self.residual_ok,
            "eigenspaces_pseudo_orthogonal": self.eigenspaces_pseudo_orthogonal,
        }


@dataclass(frozen=True)
class SpectralDiagnostic:
    """Why the spectral decomposition does not exist over k."""

    reason: str  # defective_eigenvalue | char_poly_does_not_split_over_k
    defective_value: int | None = None
    geometric_multiplicity: int | None = None
    algebraic_multiplicity: int | None = None

    def to_json(self) -> dict:
        return {
            "reason": self.reason,
            "defective_value": self.defective_value,
            "geometric_multiplicity": self.geometric_multiplicity,
            "algebraic_multiplicity": self.algebraic_multiplicity,
        }


def spectral_decompose(a: SubfieldMatrix):
    """T = sum c_i E_i for a self-adjoint diagonalizable operator.

    The projections are built from the eigenbasis change of basis over
    Z_q and mapped back; all idempotence/orthogonality/reconstruction
    identities are asserted mod n before returning.  Non-diagonalizable
    input yields a SpectralDiagnostic, never a partial answer.
    """
    if not a.is_square():
        raise ValueError("spectral decomposition needs a square matrix")
    if not self_adjoint_check(a):
        raise ValueError("matrix is not self-adjoint (A != A^T)")
    k = a.k
    q, n, dim = k.prime_order, k.n, a.rows
    es = eigen_system(a)
    if not es.diagonalizable:
        for ev in es.s_values:
            if ev.geometric_multiplicity < ev.algebraic_multiplicity:
                return SpectralDiagnostic(
                    reason="defective_eigenvalue",
                    defective_value=ev.value,
                    geometric_multiplicity=ev.geometric_multiplicity,
                    algebraic_multiplicity=ev.algebraic_multiplicity,
                )
        return SpectralDiagnostic(reason="char_poly_does_not_split_over_k")

    blocks: list[tuple[int, int]] = []  # (start, size) per eigenvalue
    columns: list[list[int]] = []
    for ev in es.s_values:
        blocks.append((len(columns), len(ev.basis)))
        for v in ev.basis:
            columns.append([k.to_prime(x) for x in v.entries])
    basis_mat = [[columns[j][i] for j in range(dim)] for i in range(dim)]
    inv = gfmat.inverse_mod(basis_mat, q)
    assert inv is not None, "eigenbasis must be invertible when diagonalizable"

    terms = []
    for (start, size), ev in zip(blocks, es.s_values):
        selector = [
            [1 if (i == j and start <= i < start + size) else 0 for j in range(dim)]
            for i in range(dim)
        ]
        e_prime = gfmat.mat_mul_mod(gfmat.mat_mul_mod(basis_mat, selector, q), inv, q)
        terms.append((ev.value, from_prime_matrix(k, e_prime)))

    ident = identity_matrix(k, dim)
    zero = SubfieldMatrix(k, dim, dim, (0,) * (dim * dim))
    total = zero
    recon = zero
    for c, proj in terms:
        assert mat_mul(proj, proj).entries == proj.entries, "E_i must be idempotent"
        total = mat_add(total, proj)
        recon = mat_add(recon, scalar_mul(c, proj))
    for i in range(len(terms)):
        for j in range(len(terms)):
            if i != j:
                prod = mat_mul(terms[i][1], terms[j][1])
                assert prod.entries == zero.entries, "E_i E_j must vanish for i != j"
    assert total.entries == ident.entries, "projections must sum to I_e"
    assert recon.entries == a.entries, "sum of c_i E_i must reconstruct A"

    orthogonal = True
    for i in range(len(es.s_values)):
        for j in range(i + 1, len(es.s_values)):
            for u in es.s_values[i].basis:
                for v in es.s_values[j].basis:
                    if pseudo_inner_product(u, v) != 0:
                        orthogonal = False
    return SpectralDecomposition(
        terms=tuple(terms),
        residual_ok=True,
        eigenspaces_pseudo_orthogonal=orthogonal,
    )


def char_poly_substitute(a: SubfieldMatrix) -> SubfieldMatrix:
    """p(A) with p the prime-field characteristic polynomial, evaluated
    mod n with scalar action through from_prime; zero by Cayley-Hamilton."""
    k = a.k
    dim = a.rows
    coeffs = char_poly(a).prime_coeffs
    power = identity_matrix(k, dim)
    acc = SubfieldMatrix(k, dim, dim, (0,) * (dim * dim))
    for i, c in enumerate(coeffs):
        if i > 0:
            power = mat_mul(power, a)
        acc = mat_add(acc, scalar_mul(k.from_prime(c), power))
    return acc


@dataclass(frozen=True)
class BilinearFormReport:
    rank: int
    symmetric: bool
    skew: bool

    def to_json(self) -> dict:
        return {"rank": self.rank, "symmetric": self.symmetric, "skew": self.skew}


def bilinear_form_analyze(g: SubfieldMatrix):
    """Rank, symmetry and skewness of a Gram matrix, plus the quadratic
    evaluator alpha -> alpha^T G alpha mod n (returned as a callable)."""
    if not g.is_square():
        raise ValueError("a Gram matrix must be square")
    rank, _, _ = rref_and_nullspace(g)
    n = g.n
    transposed = g.transpose()
    symmetric = g.entries == transposed.entries
    skew = g.entries == tuple((-x) % n for x in transposed.entries)

    def quadratic(alpha) -> int:
        vec = alpha.entries if isinstance(alpha, SubfieldVector) else tuple(alpha)
        if len(vec) != g.rows:
            raise ValueError("vector length does not match the form")
        total = 0
        for i in range(g.rows):
            for j in range(g.cols):
                total += vec[i] * g.at(i, j) * vec[j]
        return total % n

    return BilinearFormReport(rank=rank, symmetric=symmetric, skew=skew), quadratic
