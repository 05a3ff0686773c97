"""Finite semigroups, their subgroups, and exact-rational representations.

A semigroup arrives as a multiplication table (indices into itself);
subgroups sit at idempotents.  Representations map subgroup elements to
invertible rational matrices; every constructed representation has its
homomorphism law verified exhaustively before use.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import intpoly, ratmat
from .ratmat import Matrix, Vector


class TableError(ValueError):
    """A raw table fails a structural check; carries the witness."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


@dataclass(frozen=True)
class SemigroupTable:
    """m x m multiplication table: table[x][y] = x*y, verified associative."""

    order: int
    table: tuple[tuple[int, ...], ...]

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def idempotents(self) -> list[int]:
        return [e for e in range(self.order) if self.mul(e, e) == e]

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.table]}


def validate_table(raw) -> SemigroupTable:
    """Check shape, index range and associativity (O(m^3), with witness)."""
    rows = [list(r) for r in raw]
    m = len(rows)
    if m == 0 or any(len(r) != m for r in rows):
        raise TableError("table must be a nonempty square array")
    for x in range(m):
        for y in range(m):
            if not 0 <= rows[x][y] < m:
                raise TableError(f"entry ({x},{y}) = {rows[x][y]} out of range", (x, y))
    for x in range(m):
        for y in range(m):
            xy = rows[x][y]
            for z in range(m):
                if rows[xy][z] != rows[x][rows[y][z]]:
                    raise TableError(
                        f"not associative at (x,y,z) = ({x},{y},{z})", (x, y, z)
                    )
    return SemigroupTable(order=m, table=tuple(tuple(r) for r in rows))


def table_from_operation(elements, op) -> SemigroupTable:
    """Build and validate a table from a concrete binary operation."""
    index = {x: i for i, x in enumerate(elements)}
    raw = [[index[op(x, y)] for y in elements] for x in elements]
    return validate_table(raw)


@dataclass(frozen=True)
class SubgroupRecord:
    """A subset of the semigroup that is a group, anchored at its idempotent."""

    table: SemigroupTable
    identity: int
    elements: tuple[int, ...]
    inverse_pairs: tuple[tuple[int, int], ...]
    _inv: dict = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        if not self._inv:
            object.__setattr__(self, "_inv", dict(self.inverse_pairs))

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, x: int, y: int) -> int:
        return self.table.mul(x, y)

    def inverse(self, x: int) -> int:
        return self._inv[x]

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "elements": list(self.elements),
            "inverses": {str(x): y for x, y in self.inverse_pairs},
        }


def _group_from_subset(table: SemigroupTable, subset) -> SubgroupRecord | None:
    """Certify a subset as a group under the table; None when it is not."""
    elems = sorted(subset)
    eset = set(elems)
    for x in elems:
        for y in elems:
            if table.mul(x, y) not in eset:
                return None
    identity = None
    for e in elems:
        if all(table.mul(e, x) == x == table.mul(x, e) for x in elems):
            identity = e
            break
    if identity is None:
        return None
    inverses = {}
    for x in elems:
        inv = next(
            (y for y in elems if table.mul(x, y) == identity == table.mul(y, x)),
            None,
        )
        if inv is None:
            return None
        inverses[x] = inv
    return SubgroupRecord(
        table=table,
        identity=identity,
        elements=tuple(elems),
        inverse_pairs=tuple(sorted(inverses.items())),
    )


def maximal_subgroup_at(table: SemigroupTable, e: int) -> SubgroupRecord:
    """The group of units of the local monoid eSe."""
    assert table.mul(e, e) == e, f"{e} is not idempotent"
    local = sorted({table.mul(table.mul(e, s), e) for s in range(table.order)})
    units = []
    inverses = {}
    for x in local:
        y = next(
            (y for y in local if table.mul(x, y) == e == table.mul(y, x)), None
        )
        if y is not None:
            units.append(x)
            inverses[x] = y
    record = _group_from_subset(table, units)
    assert record is not None and record.identity == e, "unit group must be a group"
    return record


def find_subgroups(table: SemigroupTable, all_subgroups: bool = False) -> list[SubgroupRecord]:
    """Maximal subgroup at every idempotent; with all_subgroups=True
    (order <= 12) every subset that is a group, by closure enumeration.

    Order: identity index ascending, then size descending, then elements.
    """
    if all_subgroups:
        if table.order > 12:
            raise ValueError("all-subgroups enumeration is limited to order <= 12")
        found = []
        for r in range(1, table.order + 1):
            for subset in itertools.combinations(range(table.order), r):
                record = _group_from_subset(table, subset)
                if record is not None:
                    found.append(record)
    else:
        found = [maximal_subgroup_at(table, e) for e in table.idempotents()]
    return sorted(found, key=lambda g: (g.identity, -g.order, g.elements))


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Representation:
    """Exact-rational matrix homomorphism on a subgroup.

    matrices[x] is the matrix of x on the chosen ordered basis; the
    homomorphism law M(x)M(y) = M(xy) holds for every pair (verified at
    construction time by make_representation).
    """

    subgroup: SubgroupRecord
    degree: int
    matrices: dict[int, Matrix] = field(compare=False)

    def matrix(self, x: int) -> Matrix:
        return self.matrices[x]

    def character(self) -> tuple[Fraction, ...]:
        """Traces over the sorted subgroup elements."""
        return tuple(
            sum(self.matrices[x][i][i] for i in range(self.degree))
            for x in self.subgroup.elements
        )

    def to_json(self) -> dict:
        return {
            "subgroup": self.subgroup.to_json(),
            "degree": self.degree,
            "matrices": {
                str(x): ratmat.matrix_to_json(m) for x, m in sorted(self.matrices.items())
            },
        }


def make_representation(subgroup: SubgroupRecord, matrices: dict[int, Matrix]) -> Representation:
    """Verify the homomorphism law, identity and inverses, then wrap."""
    degree = len(matrices[subgroup.identity])
    ident = ratmat.identity(degree)
    assert matrices[subgroup.identity] == ident, "identity must map to I"
    for x in subgroup.elements:
        for y in subgroup.elements:
            got = ratmat.mat_mul(matrices[x], matrices[y])
            if got != matrices[subgroup.mul(x, y)]:
                raise AssertionError(f"homomorphism law fails at ({x},{y})")
    for x in subgroup.elements:
        prod = ratmat.mat_mul(matrices[x], matrices[subgroup.inverse(x)])
        assert prod == ident, f"M({x}) M({x}^-1) != I"
    return Representation(subgroup=subgroup, degree=degree, matrices=matrices)


def regular_representation(subgroup: SubgroupRecord, side: Side) -> Representation:
    """Permutation matrices of the translation action on functions.

    Basis: indicator functions of the sorted subgroup elements.  The left
    action sends the indicator at w to the one at x*w; the right action
    (built from f(z) -> f(zx)) sends it to the one at w*x^-1, which is
    what makes the map a homomorphism.
    """
    elems = subgroup.elements
    index = {w: i for i, w in enumerate(elems)}
    h = len(elems)
    matrices = {}
    for x in elems:
        m = [[Fraction(0)] * h for _ in range(h)]
        for w in elems:
            if side is Side.LEFT:
                target = subgroup.mul(x, w)
            else:
                target = subgroup.mul(w, subgroup.inverse(x))
            m[index[target]][index[w]] = Fraction(1)
        matrices[x] = tuple(tuple(row) for row in m)
    return make_representation(subgroup, matrices)


def permutation_representation(subgroup: SubgroupRecord, action, points) -> Representation:
    """Representation on functions over a finite set acted on by the group.

    ``action(x, p)`` must be a left action by bijections; failures are
    reported with a witness.  Basis: indicators of the sorted points.
    """
    pts = sorted(points)
    index = {p: i for i, p in enumerate(pts)}
    for x in subgroup.elements:
        image = [action(x, p) for p in pts]
        if sorted(image, key=str) != sorted(pts, key=str) or len(set(map(str, image))) != len(pts):
            raise TableError(f"element {x} does not act bijectively", x)
    for x in subgroup.elements:
        for y in subgroup.elements:
            for p in pts:
                if action(x, action(y, p)) != action(subgroup.mul(x, y), p):
                    raise TableError(
                        f"action is not a homomorphism at (x,y,p) = ({x},{y},{p})",
                        (x, y, p),
                    )
    matrices = {}
    for x in subgroup.elements:
        m = [[Fraction(0)] * len(pts) for _ in range(len(pts))]
        for p in pts:
            m[index[action(x, p)]][index[p]] = Fraction(1)
        matrices[x] = tuple(tuple(row) for row in m)
    return make_representation(subgroup, matrices)


def trivial_representation(subgroup: SubgroupRecord) -> Representation:
    one = ((Fraction(1),),)
    return make_representation(subgroup, {x: one for x in subgroup.elements})


def left_right_intertwiner(subgroup: SubgroupRecord) -> Matrix:
    """T with T(indicator at a) = indicator at a^-1; satisfies
    T . R_x = L_x . T for every x (asserted), so L and R are isomorphic."""
    left = regular_representation(subgroup, Side.LEFT)
    right = regular_representation(subgroup, Side.RIGHT)
    elems = subgroup.elements
    index = {w: i for i, w in enumerate(elems)}
    h = len(elems)
    t = [[Fraction(0)] * h for _ in range(h)]
    for a in elems:
        t[index[subgroup.inverse(a)]][index[a]] = Fraction(1)
    t = tuple(tuple(row) for row in t)
    assert ratmat.inverse(t) is not None, "intertwiner must be invertible"
    for x in elems:
        lhs = ratmat.mat_mul(t, right.matrix(x))
        rhs = ratmat.mat_mul(left.matrix(x), t)
        assert lhs == rhs, f"intertwining identity fails at {x}"
    return t


def projection_onto(w_basis: list[Vector], dim: int) -> Matrix:
    """Some projection with range span(w_basis): extend the basis with
    standard vectors, project along the extension."""
    cols = [list(w) for w in w_basis]
    chosen = list(w_basis)
    for j in range(dim):
        candidate = tuple(Fraction(1 if i == j else 0) for i in range(dim))
        stacked = chosen + [candidate]
        if ratmat.rank(ratmat.mat(stacked)) == len(stacked):
            chosen.append(candidate)
        if len(chosen) == dim:
            break
    assert len(chosen) == dim, "could not extend the basis"
    b = ratmat.mat([[chosen[j][i] for j in range(dim)] for i in range(dim)])
    b_inv = ratmat.inverse(b)
    assert b_inv is not None
    k = len(w_basis)
    selector = ratmat.mat(
        [[1 if (i == j and i < k) else 0 for j in range(dim)] for i in range(dim)]
    )
    return ratmat.mat_mul(ratmat.mat_mul(b, selector), b_inv)


def _in_span(w_basis: list[Vector], v: Vector) -> bool:
    return ratmat.solve_in_span(list(w_basis), v) is not None


def averaged_projection(rep: Representation, w_basis, p0: Matrix) -> Matrix:
    """Group-average P0 into the invariant projection onto W.

    P = (1/|H|) sum_x M(x) P0 M(x)^-1.  Verifies the preconditions (W
    invariant, P0 a projection onto W) and asserts every claimed output
    property: P^2 = P, P fixes W, range(P) = W, P commutes with the
    action, and ker P is an invariant complement of W.
    """
    sub = rep.subgroup
    dim = rep.degree
    w_basis = [ratmat.vec(w) for w in w_basis]
    for x in sub.elements:
        for w in w_basis:
            if not _in_span(w_basis, ratmat.mat_vec(rep.matrix(x), w)):
                raise ValueError(f"W is not invariant: witness element {x}")
    if ratmat.mat_mul(p0, p0) != p0:
        raise ValueError("P0 is not idempotent")
    for w in w_basis:
        if ratmat.mat_vec(p0, w) != tuple(w):
            raise ValueError("P0 does not fix W pointwise")
    for col in ratmat.transpose(p0):
        if not _in_span(w_basis, tuple(col)):
            raise ValueError("range of P0 is not contained in W")

    total = ratmat.zeros(dim, dim)
    for x in sub.elements:
        conj = ratmat.mat_mul(
            ratmat.mat_mul(rep.matrix(x), p0), rep.matrix(sub.inverse(x))
        )
        total = ratmat.add(total, conj)
    p = ratmat.scale(Fraction(1, sub.order), total)

    assert ratmat.mat_mul(p, p) == p, "average must stay idempotent"
    for w in w_basis:
        assert ratmat.mat_vec(p, w) == tuple(w), "average must fix W"
    for col in ratmat.transpose(p):
        assert _in_span(w_basis, tuple(col)), "range must stay inside W"
    for y in sub.elements:
        assert ratmat.mat_mul(rep.matrix(y), p) == ratmat.mat_mul(p, rep.matrix(y)), (
            f"average must commute with M({y})"
        )
    kernel = ratmat.nullspace(p)
    stacked = ratmat.mat(list(w_basis) + list(kernel))
    assert ratmat.rank(stacked) == len(w_basis) + len(kernel) == dim, (
        "kernel must complement W"
    )
    for x in sub.elements:
        for z in kernel:
            assert _in_span(kernel, ratmat.mat_vec(rep.matrix(x), z)), (
                "kernel must be invariant"
            )
    return p


@dataclass(frozen=True)
class IsoReport:
    isomorphic: bool
    intertwiner: Matrix | None
    certificate: dict | None

    def to_json(self) -> dict:
        return {
            "isomorphic": self.isomorphic,
            "intertwiner": ratmat.matrix_to_json(self.intertwiner)
            if self.intertwiner is not None
            else None,
            "certificate": self.certificate,
        }


def _intertwiner_space(m1: dict[int, Matrix], m2: dict[int, Matrix], elements, d1: int, d2: int):
    """Basis of {T : T M1(x) = M2(x) T for all x}; T is d2 x d1."""
    unknowns = d2 * d1
    rows = []
    for x in elements:
        a, b = m1[x], m2[x]
        for i in range(d2):
            for j in range(d1):
                row = [Fraction(0)] * unknowns
                for t in range(d1):
                    row[i * d1 + t] += a[t][j]
                for t in range(d2):
                    row[t * d1 + j] -= b[i][t]
                rows.append(row)
    basis = ratmat.nullspace(ratmat.mat(rows)) if rows else []
    return [
        tuple(tuple(v[i * d1 + j] for j in range(d1)) for i in range(d2))
        for v in basis
    ]


def rep_isomorphic(rep1: Representation, rep2: Representation, isomorphism=None) -> IsoReport:
    """Decide isomorphism and produce an invertible intertwiner witness.

    The decision is by exact character equality (valid over the rationals
    for finite groups); the witness is found by sweeping deterministic
    small-integer combinations of the intertwiner-space basis, a sweep
    that provably cannot miss an invertible element when one exists.
    """
    if isomorphism is None:
        if rep1.subgroup.elements != rep2.subgroup.elements or rep1.subgroup.table != rep2.subgroup.table:
            raise ValueError("subgroups differ; supply an explicit isomorphism")
        mapping = {x: x for x in rep1.subgroup.elements}
    else:
        mapping = dict(isomorphism)
        if sorted(mapping) != sorted(rep1.subgroup.elements) or sorted(
            mapping.values()
        ) != sorted(rep2.subgroup.elements):
            raise ValueError("the supplied isomorphism does not match the subgroups")
        for x in rep1.subgroup.elements:
            for y in rep1.subgroup.elements:
                if mapping[rep1.subgroup.mul(x, y)] != rep2.subgroup.mul(
                    mapping[x], mapping[y]
                ):
                    raise ValueError(f"supplied map is not a homomorphism at ({x},{y})")
    m2_pulled = {x: rep2.matrix(mapping[x]) for x in rep1.subgroup.elements}

    if rep1.degree != rep2.degree:
        return IsoReport(
            False, None, {"reason": "degree_mismatch", "degrees": [rep1.degree, rep2.degree]}
        )
    d = rep1.degree
    for x in rep1.subgroup.elements:
        t1 = sum(rep1.matrix(x)[i][i] for i in range(d))
        t2 = sum(m2_pulled[x][i][i] for i in range(d))
        if t1 != t2:
            return IsoReport(
                False,
                None,
                {
                    "reason": "character_mismatch",
                    "element": x,
                    "traces": [ratmat.frac_to_json(t1), ratmat.frac_to_json(t2)],
                },
            )

    basis = _intertwiner_space(
        rep1.matrices, m2_pulled, rep1.subgroup.elements, d, d
    )
    k = len(basis)
    assert k > 0, "equal characters force a nonzero intertwiner space"

    def weight_vectors():
        # cheap first guesses, then the full grid {0..d}^k: det of a
        # weighted sum has per-variable degree <= d, and a nonzero
        # polynomial cannot vanish on that whole grid, so the sweep is
        # complete whenever an invertible intertwiner exists at all
        for i in range(k):
            yield tuple(1 if j == i else 0 for j in range(k))
        yield (1,) * k
        yield from itertools.product(range(d + 1), repeat=k)

    for weights in weight_vectors():
        cand = ratmat.zeros(d, d)
        for w, b in zip(weights, basis):
            if w:
                cand = ratmat.add(cand, ratmat.scale(w, b))
        if ratmat.det(cand) != 0:
            for x in rep1.subgroup.elements:
                assert ratmat.mat_mul(cand, rep1.matrix(x)) == ratmat.mat_mul(
                    m2_pulled[x], cand
                ), "witness must intertwine"
            return IsoReport(True, cand, None)
    raise AssertionError("equal characters but no invertible intertwiner found")


@dataclass(frozen=True)
class InvariantBlock:
    basis: tuple[Vector, ...]
    irreducible: bool
    certificate: str

    @property
    def dimension(self) -> int:
        return len(self.basis)


def decompose_invariants(rep: Representation) -> list[InvariantBlock]:
    """Split the representation into invariant subspaces, recursively,
    and certify each emitted block irreducible over the rationals.

    Splitting operators are drawn from the commutant (spanned by the
    group-averaged elementary seeds), their products, and deterministic
    combinations; a proper kernel of an irreducible factor of a candidate
    minimal polynomial yields a split, realized with the averaged
    projection so the complement is invariant too.
    """
    if rep.degree > 8:
        raise ValueError("decomposition is limited to degree <= 8")
    full = [
        tuple(Fraction(1 if i == j else 0) for i in range(rep.degree))
        for j in range(rep.degree)
    ]
    blocks = _decompose(rep, full)
    stacked = ratmat.mat([v for b in blocks for v in b.basis])
    assert ratmat.rank(stacked) == rep.degree, "blocks must span the whole space"
    return blocks


def _restrict(rep: Representation, basis: list[Vector]):
    """Matrices of the action in the coordinates of an invariant subspace."""
    dim = rep.degree
    k = len(basis)
    cols = ratmat.mat([[basis[j][i] for j in range(k)] for i in range(dim)])
    restricted = {}
    for x in rep.subgroup.elements:
        image_cols = []
        for b in basis:
            image = ratmat.mat_vec(rep.matrix(x), b)
            coords = ratmat.solve(cols, image)
            assert coords is not None, "subspace must be invariant"
            image_cols.append(coords)
        restricted[x] = tuple(
            tuple(image_cols[j][i] for j in range(k)) for i in range(k)
        )
    return restricted


def _commutant_basis(matrices: dict[int, Matrix], elements, dim: int):
    return _intertwiner_space(matrices, matrices, elements, dim, dim)


def _matrix_poly(coeffs, m: Matrix) -> Matrix:
    dim = len(m)
    acc = ratmat.zeros(dim, dim)
    for c in reversed(coeffs):
        acc = ratmat.mat_mul(acc, m)
        acc = ratmat.add(acc, ratmat.scale(c, ratmat.identity(dim)))
    return acc


def _integer_scaled(m: Matrix) -> Matrix:
    denom = 1
    for row in m:
        for x in row:
            denom = denom * x.denominator // _gcd(denom, x.denominator)
    return ratmat.scale(denom, m)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _split_candidates(commutant, dim):
    seen = set()
    out = []

    def push(m):
        if m not in seen:
            seen.add(m)
            out.append(m)

    for b in commutant:
        push(b)
    for a in commutant:
        for b in commutant:
            push(ratmat.mat_mul(a, b))
    k = len(commutant)
    for s in range(2, 2 * k + 4):
        combo = ratmat.zeros(dim, dim)
        for i, b in enumerate(commutant):
            combo = ratmat.add(combo, ratmat.scale(Fraction(s) ** i, b))
        push(combo)
    return out


def _decompose(rep: Representation, basis: list[Vector]) -> list[InvariantBlock]:
    subdim = len(basis)
    restricted = _restrict(rep, basis)
    sub_rep = Representation(
        subgroup=rep.subgroup, degree=subdim, matrices=restricted
    )
    commutant = _commutant_basis(restricted, rep.subgroup.elements, subdim)
    if len(commutant) == 1:
        return [
            InvariantBlock(
                basis=tuple(basis), irreducible=True, certificate="commutant_scalars"
            )
        ]
    commutative = all(
        ratmat.mat_mul(a, b) == ratmat.mat_mul(b, a)
        for a in commutant
        for b in commutant
    )
    field_evidence = False
    for cand in _split_candidates(commutant, subdim):
        scaled = _integer_scaled(cand)
        minp = ratmat.min_poly(scaled)
        if any(c.denominator != 1 for c in minp):
            continue
        if len(minp) <= 2:
            continue  # scalar candidates cannot split
        try:
            factors = intpoly.factor_monic([int(c) for c in minp])
        except ValueError:
            continue
        for g in factors:
            evaluated = _matrix_poly([Fraction(c) for c in g], scaled)
            kernel = ratmat.nullspace(evaluated)
            if 0 < len(kernel) < subdim:
                p0 = projection_onto(kernel, subdim)
                p = averaged_projection(sub_rep, kernel, p0)
                complement = ratmat.nullspace(p)
                w_orig = [_lift(basis, w) for w in kernel]
                z_orig = [_lift(basis, z) for z in complement]
                return _decompose(rep, w_orig) + _decompose(rep, z_orig)
        # a commutative commutant generated by one element with an
        # irreducible minimal polynomial is a field: no idempotents,
        # hence no invariant splitting exists at all
        if commutative and len(factors) == 1 and len(minp) - 1 == len(commutant):
            field_evidence = True
            break
    return [
        InvariantBlock(
            basis=tuple(basis),
            irreducible=True,
            certificate="commutant_field" if field_evidence else "candidate_pool_exhausted",
        )
    ]


def _lift(basis: list[Vector], coords: Vector) -> Vector:
    dim = len(basis[0])
    return tuple(
        sum(c * b[i] for c, b in zip(coords, basis)) for i in range(dim)
    )
