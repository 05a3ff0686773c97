import random

import pytest

from smaralg.semivector import (
    ChainLattice,
    NonNegIntegers,
    SemivectorTuple,
    chain_tables,
    combine,
    enumerate_representations,
    independence_check,
    lattice_semivector_check,
    span_membership,
    spans_space,
)

NN = NonNegIntegers()


def nn(*entries):
    return SemivectorTuple(NN, entries)


U = [nn(1, 1), nn(2, 1), nn(3, 0)]


class TestSpanMembership:
    def test_paper_counterexample(self):
        assert not span_membership(nn(1, 3), U).member

    def test_positive_case(self):
        result = span_membership(nn(5, 3), [nn(1, 1), nn(2, 1)])
        assert result.member and result.coefficients == (1, 2)

    def test_zero_target(self):
        result = span_membership(nn(0, 0), U)
        assert result.member and result.coefficients == (0, 0, 0)

    def test_zero_generator_rejected(self):
        with pytest.raises(ValueError, match="zero generator"):
            span_membership(nn(1, 3), [nn(0, 0)])

    def test_found_coefficients_reevaluate(self):
        rng = random.Random(1)
        for _ in range(100):
            gens = [
                nn(*(rng.randint(0, 4) for _ in range(2)))
                for _ in range(rng.randint(1, 3))
            ]
            gens = [g for g in gens if not g.is_zero()] or [nn(1, 1)]
            target = nn(*(rng.randint(0, 8) for _ in range(2)))
            result = span_membership(target, gens)
            if result.member:
                assert combine(NN, result.coefficients, gens) == target.entries

    def test_mixed_semifields_rejected(self):
        with pytest.raises(ValueError):
            span_membership(nn(1), [SemivectorTuple(ChainLattice(3), (1,))])


def capped_unbounded_search(target, gens, cap=50):
    """Oracle: depth-first unbounded search capped at coefficient 50,
    pruning only on overshoot (valid since all terms are nonnegative)."""
    t = list(target.entries)

    def rec(i, acc):
        if acc == t:
            return True
        if i == len(gens):
            return False
        g = gens[i].entries
        for c in range(cap + 1):
            new = [a + c * x for a, x in zip(acc, g)]
            if any(v > w for v, w in zip(new, t)):
                break
            if rec(i + 1, new):
                return True
        return False

    return rec(0, [0] * len(t))


def test_bounded_search_is_complete_500_instances():
    rng = random.Random(2024)
    for _ in range(500):
        dim = rng.randint(2, 3)
        count = rng.randint(1, 3)
        gens = []
        while len(gens) < count:
            g = nn(*(rng.randint(0, 6) for _ in range(dim)))
            if not g.is_zero():
                gens.append(g)
        target = nn(*(rng.randint(0, 6) for _ in range(dim)))
        assert span_membership(target, gens).member == capped_unbounded_search(
            target, gens
        )


class TestIndependence:
    def test_paper_triple(self):
        assert independence_check(U).independent

    def test_four_independent_vectors_in_dim_two(self):
        assert independence_check(U + [nn(1, 3)]).independent

    def test_scalar_multiple_dependent(self):
        report = independence_check([nn(1, 0), nn(2, 0)])
        assert not report.independent
        assert report.witness_index == 1
        assert report.witness_coefficients == (2,)

    def test_zero_vector_dependent(self):
        report = independence_check([nn(1, 1), nn(0, 0)])
        assert not report.independent and report.witness_index == 1

    def test_witness_reevaluates(self):
        vectors = [nn(1, 2), nn(2, 4), nn(0, 1)]
        report = independence_check(vectors)
        assert not report.independent
        others = [v for i, v in enumerate(vectors) if i != report.witness_index]
        assert (
            combine(NN, report.witness_coefficients, others)
            == vectors[report.witness_index].entries
        )


class TestSpansSpace:
    def test_units_span(self):
        units = [nn(1, 0, 0), nn(0, 1, 0), nn(0, 0, 1)]
        assert spans_space(units, 3).spans

    def test_paper_set_does_not_span(self):
        report = spans_space(U, 2)
        assert not report.spans and report.missing is not None

    def test_c4_spanned_by_1_a_b_over_c2(self):
        c4 = ChainLattice(4)
        gens = [SemivectorTuple(c4, (x,)) for x in (3, 2, 1)]
        assert spans_space(gens, "carrier", scalars=[0, 3]).spans

    def test_c4_not_spanned_without_top(self):
        c4 = ChainLattice(4)
        gens = [SemivectorTuple(c4, (x,)) for x in (2, 1)]
        report = spans_space(gens, "carrier", scalars=[0, 3])
        assert not report.spans and report.missing == (3,)

    def test_explicit_space(self):
        assert spans_space([nn(1, 0), nn(0, 1)], [(2, 3), (0, 0)]).spans

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            spans_space([nn(1, 0)], 3)


class TestEnumerate:
    def test_c4_paper_counts(self):
        c4 = ChainLattice(4)
        basis = [SemivectorTuple(c4, (x,)) for x in (2, 1, 3)]  # a, b, 1
        one = SemivectorTuple(c4, (3,))
        a = SemivectorTuple(c4, (2,))
        reps_one = enumerate_representations(one, basis, scalars=[0, 3])
        assert len(reps_one) == 4
        reps_a = enumerate_representations(a, basis, scalars=[0, 3])
        assert len(reps_a) == 2

    def test_forced_coordinates(self):
        units = [nn(1, 0), nn(0, 1)]
        assert enumerate_representations(nn(1, 0), units) == [(1, 0)]

    def test_unit_representations_unique_dims_up_to_4(self):
        for dim in range(1, 5):
            units = [
                nn(*(1 if i == j else 0 for i in range(dim))) for j in range(dim)
            ]
            rng = random.Random(dim)
            for _ in range(25):
                target = nn(*(rng.randint(0, 5) for _ in range(dim)))
                reps = enumerate_representations(target, units)
                assert reps == [target.entries]

    def test_lex_order(self):
        c4 = ChainLattice(4)
        basis = [SemivectorTuple(c4, (x,)) for x in (2, 1, 3)]
        reps = enumerate_representations(
            SemivectorTuple(c4, (3,)), basis, scalars=[0, 3]
        )
        assert reps == sorted(reps)


class TestChainLattice:
    def test_operations_laws_exhaustive(self):
        for m in range(2, 17):
            c = ChainLattice(m)
            for a in range(m):
                assert c.add(a, a) == a and c.mul(a, a) == a
                for b in range(m):
                    assert c.add(a, b) == c.add(b, a)
                    assert c.mul(a, b) == c.mul(b, a)
                    assert c.add(a, c.mul(a, b)) == a
                    assert c.mul(a, c.add(a, b)) == a
                    for d in range(m):
                        assert c.add(c.add(a, b), d) == c.add(a, c.add(b, d))
                        assert c.mul(c.mul(a, b), d) == c.mul(a, c.mul(b, d))

    def test_strictness_of_nonneg(self):
        rng = random.Random(8)
        for _ in range(200):
            a, b = rng.randint(0, 50), rng.randint(0, 50)
            if NN.add(a, b) == 0:
                assert a == 0 and b == 0
            if NN.mul(a, b) == 0:
                assert a == 0 or b == 0

    def test_size_validation(self):
        with pytest.raises(ValueError):
            ChainLattice(1)


class TestLatticeChecker:
    def test_chains(self):
        for m in (2, 4, 8, 16):
            assert lattice_semivector_check(*chain_tables(m)).ok

    def test_diamond_m3(self):
        join = [
            [0, 1, 2, 3, 4],
            [1, 1, 4, 4, 4],
            [2, 4, 2, 4, 4],
            [3, 4, 4, 3, 4],
            [4, 4, 4, 4, 4],
        ]
        meet = [
            [0, 0, 0, 0, 0],
            [0, 1, 0, 0, 1],
            [0, 0, 2, 0, 2],
            [0, 0, 0, 3, 3],
            [0, 1, 2, 3, 4],
        ]
        assert lattice_semivector_check(join, meet).ok

    def test_pentagon_n5(self):
        # 0 < a < b < 1 and 0 < c < 1 with a,b incomparable to c
        # indices: 0, a=1, b=2, c=3, 1=4
        join = [
            [0, 1, 2, 3, 4],
            [1, 1, 2, 4, 4],
            [2, 2, 2, 4, 4],
            [3, 4, 4, 3, 4],
            [4, 4, 4, 4, 4],
        ]
        meet = [
            [0, 0, 0, 0, 0],
            [0, 1, 1, 0, 1],
            [0, 1, 2, 0, 2],
            [0, 0, 0, 3, 3],
            [0, 1, 2, 3, 4],
        ]
        assert lattice_semivector_check(join, meet).ok

    def test_corrupted_absorption(self):
        join, meet = chain_tables(3)
        meet[2][1] = 2  # breaks meet(2,1) = 1
        result = lattice_semivector_check(join, meet)
        assert not result.ok and result.axiom is not None

    def test_malformed(self):
        with pytest.raises(ValueError):
            lattice_semivector_check([[0, 1]], [[0]])
        with pytest.raises(ValueError):
            lattice_semivector_check([[7]], [[0]])


def test_tuple_validation():
    with pytest.raises(ValueError):
        nn(-1, 0)
    with pytest.raises(ValueError):
        SemivectorTuple(ChainLattice(3), (5,))
