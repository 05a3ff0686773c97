"""Arithmetic in Z_n and discovery of the subfields embedded in it.

A subfield of Z_n is a proper subset that is a field under the induced
operations; its multiplicative identity e is an idempotent of Z_n and is
usually not 1 (e.g. {0,2,4} inside Z_6 has identity 4).  Every such subset
is an additive subgroup d·Z_n, and d·Z_n is a field exactly when q = n/d is
prime and gcd(d, q) = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


class SubfieldRejection(ValueError):
    """A candidate subset fails one of the field axioms.

    ``reason`` is a stable machine-readable code:
    not_multiplicatively_closed / not_additively_closed / no_identity /
    non_invertible_element / not_proper.
    """

    def __init__(self, reason: str, detail: str):
        self.reason = reason
        self.detail = detail
        super().__init__(f"{reason}: {detail}")


@dataclass(frozen=True)
class ModulusRing:
    """The ring of integers modulo n, with representatives in [0, n)."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"modulus must be >= 2, got {self.n}")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.n

    def neg(self, a: int) -> int:
        return (-a) % self.n

    def elements(self) -> range:
        return range(self.n)


@dataclass(frozen=True)
class Subfield:
    """A field of prime order q living inside Z_n with identity e.

    ``elements`` is the sorted tuple of residues, ``identity`` the
    multiplicative identity (an idempotent of Z_n, nonzero), and the
    to_prime/from_prime maps realize the ring isomorphism with Z_q that
    sends identity to 1 and extends additively (k·e mod n -> k mod q).
    """

    n: int
    elements: tuple[int, ...]
    identity: int
    prime_order: int
    _to_prime: dict[int, int] = field(repr=False, compare=False, default_factory=dict)
    _from_prime: dict[int, int] = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        if not self._to_prime:
            to_p = {(k * self.identity) % self.n: k for k in range(self.prime_order)}
            object.__setattr__(self, "_to_prime", to_p)
            object.__setattr__(self, "_from_prime", {v: k for k, v in to_p.items()})

    @classmethod
    def whole_prime(cls, p: int) -> "Subfield":
        """The improper carrier Z_p itself (identity 1), for classical
        prime-field computations; never produced by discovery."""
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls(n=p, elements=tuple(range(p)), identity=1, prime_order=p)

    @property
    def is_whole_ring(self) -> bool:
        return self.prime_order == self.n

    def to_prime(self, a: int) -> int:
        """Map an element of the subfield to its residue in Z_q."""
        return self._to_prime[a]

    def from_prime(self, r: int) -> int:
        """Map a residue of Z_q back into the subfield."""
        return self._from_prime[r % self.prime_order]

    def contains(self, a: int) -> bool:
        return a in self._to_prime

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "elements": list(self.elements),
            "identity": self.identity,
            "prime_order": self.prime_order,
        }


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    for d in range(2, math.isqrt(q) + 1):
        if q % d == 0:
            return False
    return True


def idempotents(n: int) -> list[int]:
    """All e in [0, n) with e*e = e (mod n), ascending."""
    ModulusRing(n)
    return [e for e in range(n) if (e * e) % n == e]


def find_subfields(n: int) -> list[Subfield]:
    """Every proper subset of Z_n that is a field, sorted by prime order.

    Uses the closed form: d·Z_n is a field iff q = n/d is prime and
    gcd(d, q) = 1; the identity is the unique nonzero idempotent in d·Z_n.
    Prime n yields [] since the only candidate field is Z_n itself, which
    is not a proper subset.
    """
    ModulusRing(n)
    found = []
    for d in range(2, n + 1):
        if n % d != 0:
            continue
        q = n // d
        if not _is_prime(q) or math.gcd(d, q) != 1:
            continue
        elements = tuple(sorted((k * d) % n for k in range(q)))
        es = [e for e in elements if e != 0 and (e * e) % n == e]
        assert len(es) == 1, f"expected a unique nonzero idempotent in {elements}"
        found.append(Subfield(n=n, elements=elements, identity=es[0], prime_order=q))
    return sorted(found, key=lambda s: s.prime_order)


def certify_subfield(n: int, elements) -> Subfield:
    """Verify that ``elements`` is a proper subfield of Z_n and build it.

    Raises SubfieldRejection with a structured reason on any axiom
    failure; every axiom is re-checked exhaustively, nothing is assumed.
    """
    ModulusRing(n)
    elems = sorted(set(elements))
    if not elems:
        raise ValueError("candidate subset is empty")
    if elems[0] < 0 or elems[-1] >= n:
        raise ValueError(f"elements must be residues in [0, {n})")
    eset = set(elems)

    for a in elems:
        for b in elems:
            if (a * b) % n not in eset:
                raise SubfieldRejection(
                    "not_multiplicatively_closed",
                    f"{a}*{b} = {(a * b) % n} (mod {n}) is outside the set",
                )
    for a in elems:
        for b in elems:
            if (a + b) % n not in eset:
                raise SubfieldRejection(
                    "not_additively_closed",
                    f"{a}+{b} = {(a + b) % n} (mod {n}) is outside the set",
                )

    identity = None
    for e in elems:
        if e != 0 and all((e * a) % n == a for a in elems):
            identity = e
            break
    if identity is None:
        raise SubfieldRejection(
            "no_identity", "no nonzero element acts as a multiplicative identity"
        )

    for a in elems:
        if a == 0:
            continue
        if not any((a * b) % n == identity for b in elems):
            raise SubfieldRejection(
                "non_invertible_element", f"{a} has no inverse onto {identity}"
            )

    if len(elems) == n:
        raise SubfieldRejection(
            "not_proper", "the whole ring is not a proper subset"
        )

    q = len(elems)
    assert _is_prime(q), f"field axioms hold but order {q} is not prime"
    sf = Subfield(n=n, elements=tuple(elems), identity=identity, prime_order=q)
    # The additive extension e -> 1 must respect products; re-check all pairs.
    for a in elems:
        for b in elems:
            lhs = sf.to_prime((a * b) % n)
            rhs = (sf.to_prime(a) * sf.to_prime(b)) % q
            assert lhs == rhs, f"isomorphism failure at ({a},{b})"
    return sf


def subfield_from_elements(n: int, elements) -> Subfield:
    """Build a scalar carrier from an element list: certification for a
    proper subset, the whole-field carrier when all of a prime Z_p is
    named (certify_subfield would reject that as not proper)."""
    elems = sorted(set(elements))
    if len(elems) == n and _is_prime(n):
        return Subfield.whole_prime(n)
    return certify_subfield(n, elems)


def subfield_oracle(n: int) -> list[Subfield]:
    """Independent brute-force route: certify d·Z_n for every divisor d.

    Same contract as find_subfields; restricted to n <= 64 because it is
    meant for cross-checking in tests.
    """
    ModulusRing(n)
    if n > 64:
        raise ValueError("subfield_oracle is limited to n <= 64")
    found = []
    for d in range(1, n + 1):
        if n % d != 0:
            continue
        candidate = sorted({(k * d) % n for k in range(n // d)})
        try:
            found.append(certify_subfield(n, candidate))
        except (SubfieldRejection, ValueError):
            continue
    return sorted(found, key=lambda s: s.prime_order)
