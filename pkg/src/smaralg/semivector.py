"""Semivector spaces over the nonnegative integers and over chain lattices.

No subtraction exists here, so independence and spanning behave unlike
vector spaces: independent sets can outnumber any spanning set, and an
element can have several representations in a basis.  All searches are
exhaustive over provably sufficient finite bounds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class NonNegIntegers:
    """The strict semifield of nonnegative integers."""

    kind: str = "nonneg"

    def valid(self, x) -> bool:
        return isinstance(x, int) and x >= 0

    zero = 0
    one = 1

    def add(self, a: int, b: int) -> int:
        return a + b

    def mul(self, a: int, b: int) -> int:
        return a * b

    def to_json(self):
        return {"kind": "nonneg"}


@dataclass(frozen=True)
class ChainLattice:
    """C_m: ranks 0 < 1 < ... < m-1 with join = max and meet = min."""

    size: int
    kind: str = "chain"

    def __post_init__(self):
        if self.size < 2:
            raise ValueError("a chain lattice needs at least 2 elements")

    def valid(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.size

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return self.size - 1

    def add(self, a: int, b: int) -> int:
        return max(a, b)

    def mul(self, a: int, b: int) -> int:
        return min(a, b)

    def carrier(self) -> range:
        return range(self.size)

    def to_json(self):
        return {"kind": "chain", "size": self.size}


@dataclass(frozen=True)
class SemivectorTuple:
    semifield: object
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        for x in self.entries:
            if not self.semifield.valid(x):
                raise ValueError(f"{x!r} is not an element of the semifield")

    def is_zero(self) -> bool:
        return all(x == self.semifield.zero for x in self.entries)

    def to_json(self):
        return list(self.entries)


def combine(semifield, coeffs, vectors) -> tuple:
    """sum_i c_i * v_i with the semifield's operations, componentwise."""
    length = len(vectors[0].entries) if vectors else 0
    acc = [semifield.zero] * length
    for c, v in zip(coeffs, vectors):
        for i, x in enumerate(v.entries):
            acc[i] = semifield.add(acc[i], semifield.mul(c, x))
    return tuple(acc)


def _check_family(vectors):
    if not vectors:
        raise ValueError("need at least one tuple")
    sf = vectors[0].semifield
    length = len(vectors[0].entries)
    for v in vectors:
        if v.semifield != sf or len(v.entries) != length:
            raise ValueError("tuples must share a semifield and a length")
    return sf, length


def _coefficient_ranges(target: SemivectorTuple, generators, scalars):
    """Per-generator coefficient domains that provably cover all solutions."""
    sf = target.semifield
    if isinstance(sf, ChainLattice):
        domain = list(scalars) if scalars is not None else list(sf.carrier())
        for s in domain:
            if not sf.valid(s):
                raise ValueError(f"scalar {s!r} outside the lattice carrier")
        return [domain for _ in generators]
    if scalars is not None:
        return [list(scalars) for _ in generators]
    ranges = []
    for g in generators:
        if g.is_zero():
            raise ValueError(
                "zero generator over the nonnegative integers: coefficient unbounded"
            )
        bound = min(
            t // x for t, x in zip(target.entries, g.entries) if x > 0
        )
        ranges.append(range(bound + 1))
    return ranges


@dataclass(frozen=True)
class SpanResult:
    member: bool
    coefficients: tuple | None
    searched: tuple  # sizes of the exhausted coefficient domains

    def to_json(self):
        return {
            "member": self.member,
            "coefficients": list(self.coefficients) if self.coefficients else None,
            "searched_domain_sizes": list(self.searched),
        }


def span_membership(target: SemivectorTuple, generators, scalars=None) -> SpanResult:
    """Exhaustive combination search with sound per-generator bounds.

    Over the nonnegative integers a coefficient beyond floor(t_j / g_ij)
    overshoots coordinate j (all terms are nonnegative), so the searched
    box contains every solution; over a chain lattice the scalar carrier
    is finite and searched outright.
    """
    sf, _ = _check_family([target] + list(generators))
    if not generators:
        found = target.is_zero()
        return SpanResult(member=found, coefficients=() if found else None, searched=())
    ranges = _coefficient_ranges(target, generators, scalars)
    for coeffs in itertools.product(*ranges):
        if combine(sf, coeffs, generators) == target.entries:
            return SpanResult(
                member=True,
                coefficients=tuple(coeffs),
                searched=tuple(len(r) for r in ranges),
            )
    return SpanResult(
        member=False, coefficients=None, searched=tuple(len(r) for r in ranges)
    )


@dataclass(frozen=True)
class DependenceReport:
    independent: bool
    witness_index: int | None
    witness_coefficients: tuple | None

    def to_json(self):
        return {
            "independent": self.independent,
            "witness_index": self.witness_index,
            "witness_coefficients": list(self.witness_coefficients)
            if self.witness_coefficients is not None
            else None,
        }


def independence_check(vectors, scalars=None) -> DependenceReport:
    """Independent iff no vector lies in the span of the others."""
    sf, _ = _check_family(vectors)
    for j, v in enumerate(vectors):
        others = [w for i, w in enumerate(vectors) if i != j]
        if v.is_zero():
            return DependenceReport(
                independent=False,
                witness_index=j,
                witness_coefficients=(sf.zero,) * len(others),
            )
        kept = [(i, w) for i, w in enumerate(others) if not w.is_zero()]
        result = span_membership(v, [w for _, w in kept], scalars)
        if result.member:
            coeffs = [sf.zero] * len(others)
            for (pos, _), c in zip(kept, result.coefficients):
                coeffs[pos] = c
            witness = tuple(coeffs)
            assert combine(sf, witness, others) == v.entries
            return DependenceReport(
                independent=False, witness_index=j, witness_coefficients=witness
            )
    return DependenceReport(
        independent=True, witness_index=None, witness_coefficients=None
    )


@dataclass(frozen=True)
class SpansReport:
    spans: bool
    missing: tuple | None

    def to_json(self):
        return {"spans": self.spans, "missing": list(self.missing) if self.missing else None}


def spans_space(generators, space, scalars=None) -> SpansReport:
    """Do the generators span the named space?

    ``space`` may be an int d (the full d-tuple space over the
    nonnegative integers, decided by testing the unit vectors, which is
    equivalent: units generate everything and a unit is only reachable
    if it is reachable directly), the carrier of the generators' chain
    lattice (pass "carrier"), or an explicit list of tuples.
    """
    sf, length = _check_family(generators)
    if isinstance(space, int):
        if not isinstance(sf, NonNegIntegers):
            raise ValueError("dimension form of the space needs nonneg tuples")
        if space != length:
            raise ValueError("dimension does not match the tuple length")
        targets = [
            SemivectorTuple(sf, tuple(1 if i == j else 0 for i in range(space)))
            for j in range(space)
        ]
    elif space == "carrier":
        if not isinstance(sf, ChainLattice):
            raise ValueError("carrier form of the space needs a chain lattice")
        if length != 1:
            raise ValueError("carrier spanning uses 1-tuples")
        targets = [SemivectorTuple(sf, (x,)) for x in sf.carrier()]
    else:
        targets = [
            t if isinstance(t, SemivectorTuple) else SemivectorTuple(sf, tuple(t))
            for t in space
        ]
    usable = [g for g in generators if not g.is_zero()]
    for t in targets:
        if not span_membership(t, usable, scalars).member:
            return SpansReport(spans=False, missing=t.entries)
    return SpansReport(spans=True, missing=None)


def enumerate_representations(target: SemivectorTuple, basis, scalars=None) -> list[tuple]:
    """Every coefficient tuple that combines to the target, in
    lexicographic order over the scalar domains."""
    sf, _ = _check_family([target] + list(basis))
    ranges = _coefficient_ranges(target, basis, scalars)
    out = []
    for coeffs in itertools.product(*ranges):
        if combine(sf, coeffs, basis) == target.entries:
            out.append(tuple(coeffs))
    return out


@dataclass(frozen=True)
class LatticeCheck:
    ok: bool
    axiom: str | None = None
    witness: tuple | None = None

    def to_json(self):
        return {
            "ok": self.ok,
            "axiom": self.axiom,
            "witness": list(self.witness) if self.witness else None,
        }


def lattice_semivector_check(join, meet) -> LatticeCheck:
    """Verify that a finite lattice is a semivector space over the
    two-element Boolean algebra acting by meet (scalars = bottom, top).

    First the join/meet tables must be a lattice (commutative,
    associative, idempotent, absorbing); then the vector-space-style
    axioms are checked exhaustively for scalars {0, 1}.
    """
    m = len(join)
    if m == 0 or len(meet) != m or any(len(r) != m for r in join) or any(
        len(r) != m for r in meet
    ):
        raise ValueError("join/meet tables must be square and equal-sized")
    for table in (join, meet):
        for row in table:
            for x in row:
                if not 0 <= x < m:
                    raise ValueError(f"table entry {x} out of range")

    elems = range(m)
    for name, op in (("join", join), ("meet", meet)):
        for a in elems:
            if op[a][a] != a:
                return LatticeCheck(False, f"{name}_idempotent", (a,))
            for b in elems:
                if op[a][b] != op[b][a]:
                    return LatticeCheck(False, f"{name}_commutative", (a, b))
                for c in elems:
                    if op[op[a][b]][c] != op[a][op[b][c]]:
                        return LatticeCheck(False, f"{name}_associative", (a, b, c))
    for a in elems:
        for b in elems:
            if join[a][meet[a][b]] != a:
                return LatticeCheck(False, "absorption_join", (a, b))
            if meet[a][join[a][b]] != a:
                return LatticeCheck(False, "absorption_meet", (a, b))

    bottom = next((b for b in elems if all(join[b][x] == x for x in elems)), None)
    top = next((t for t in elems if all(meet[t][x] == x for x in elems)), None)
    if bottom is None or top is None:
        return LatticeCheck(False, "bounded", None)

    scalars = (bottom, top)
    # sum closure / associativity / zero / commutativity of vector addition
    for a in elems:
        if join[bottom][a] != a:
            return LatticeCheck(False, "additive_zero", (a,))
    # scalar axioms with action s . v = meet(s, v)
    for s in scalars:
        for a in elems:
            if not 0 <= meet[s][a] < m:
                return LatticeCheck(False, "scalar_closure", (s, a))
    for a in elems:
        if meet[bottom][a] != bottom:
            return LatticeCheck(False, "zero_scalar_annihilates", (a,))
        if meet[top][a] != a:
            return LatticeCheck(False, "unit_scalar_identity", (a,))
    for s in scalars:
        for t in scalars:
            for a in elems:
                if meet[meet[s][t]][a] != meet[s][meet[t][a]]:
                    return LatticeCheck(False, "scalar_associativity", (s, t, a))
                if meet[join[s][t]][a] != join[meet[s][a]][meet[t][a]]:
                    return LatticeCheck(False, "scalar_sum_distributes", (s, t, a))
            for b in elems:
                for a in elems:
                    if meet[s][join[a][b]] != join[meet[s][a]][meet[s][b]]:
                        return LatticeCheck(False, "vector_sum_distributes", (s, a, b))
    return LatticeCheck(True)


def chain_tables(m: int):
    """Join/meet tables of the chain lattice C_m, for the checker."""
    join = [[max(a, b) for b in range(m)] for a in range(m)]
    meet = [[min(a, b) for b in range(m)] for a in range(m)]
    return join, meet


def lattice_tables_from_json(data: dict):
    """Read {"kind":"chain","size":m} or {"join":[[...]],"meet":[[...]]}."""
    if data.get("kind") == "chain":
        return chain_tables(int(data["size"]))
    if "join" in data and "meet" in data:
        return data["join"], data["meet"]
    raise ValueError("lattice JSON needs kind=chain or explicit join/meet tables")
