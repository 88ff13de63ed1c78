import pytest

from matroidlab import (
    ExchangeWitness,
    ExpansionWitness,
    GroundSet,
    Matroid,
    Partition,
    SetFamily,
    combination_number,
    enumerate_matroids,
    forming_family,
    is_intersection_minimal,
    is_partition,
    is_transversal_of,
    is_union_minimal,
    is_unique_exchange,
    is_unique_expansion,
    make_unique_partition_matroid,
    recover_partition,
    transversals,
)
from matroidlab.errors import RankZero, SearchCapExceeded, SupportMismatch


def fam(ground, *label_sets):
    return SetFamily(ground, (ground.subset(*s) for s in label_sets))


def mk(labels, *bases):
    g = GroundSet(labels)
    return Matroid.from_bases(g, fam(g, *bases))


@pytest.fixture
def uniform3():
    return mk("123", "12", "13", "23")


class TestUniqueExpansion:
    def test_nested_pair_is_unique(self):
        assert is_unique_expansion(mk("123", "12", "13")).verdict

    def test_uniform_fails_with_canonical_witness(self, uniform3):
        res = is_unique_expansion(uniform3)
        assert not res.verdict
        g = uniform3.ground
        assert res.witness == ExpansionWitness(
            g.subset("1"), g.subset("2", "3"), "2", "3"
        )

    def test_three_base_rank_three_fails(self):
        m = mk("1234", "123", "124", "134")
        res = is_unique_expansion(m)
        assert not res.verdict
        g = m.ground
        assert res.witness == ExpansionWitness(
            g.subset("1", "2"), g.subset("1", "3", "4"), "3", "4"
        )

    def test_rank_zero_rejected(self):
        with pytest.raises(RankZero):
            is_unique_expansion(mk("123", ""))

    def test_witness_replays_against_the_definition(self, uniform3):
        w = is_unique_expansion(uniform3).witness
        g = uniform3.ground
        masks = uniform3.bases.masks()
        assert w.e1 != w.e2
        assert w.e1 in w.base and w.e2 in w.base
        assert (w.secondary.mask | 1 << g.index(w.e1)) in masks
        assert (w.secondary.mask | 1 << g.index(w.e2)) in masks


class TestUniqueExchange:
    def test_five_element_failure_with_canonical_witness(self):
        m = mk("12345", "123", "124", "134", "125", "145")
        res = is_unique_exchange(m)
        assert not res.verdict
        g = m.ground
        assert res.witness == ExchangeWitness(
            g.subset("1", "2", "3"), g.subset("1", "4", "5"), "3", "4", "5"
        )

    def test_exchange_without_expansion(self):
        m = mk("1234", "123", "124", "134")
        assert is_unique_exchange(m).verdict
        assert not is_unique_expansion(m).verdict

    def test_star_is_unique_exchange(self):
        assert is_unique_exchange(mk("1234", "12", "13", "14")).verdict

    def test_rank_zero_vacuously_true(self):
        assert is_unique_exchange(mk("12", "")).verdict

    def test_witness_replays_against_the_definition(self):
        m = mk("12345", "123", "124", "134", "125", "145")
        w = is_unique_exchange(m).witness
        g = m.ground
        masks = m.bases.masks()
        stripped = w.base1.mask ^ (1 << g.index(w.removed))
        assert w.removed in (w.base1 - w.base2)
        for y in (w.y1, w.y2):
            assert y in (w.base2 - w.base1)
            assert (stripped | (1 << g.index(y))) in masks


class TestUnionMinimal:
    def test_uniform_is_reducible(self, uniform3):
        res = is_union_minimal(uniform3)
        assert not res.verdict
        assert res.witness.subfamily == fam(uniform3.ground, "12", "13")

    def test_nested_pair_is_minimal(self):
        assert is_union_minimal(mk("123", "12", "13")).verdict

    def test_grid_on_five_is_minimal(self):
        assert is_union_minimal(mk("12345", "13", "14", "23", "24")).verdict

    def test_single_base_trivially_minimal(self):
        assert is_union_minimal(mk("123", "123")).verdict
        assert is_union_minimal(mk("123", "")).verdict

    def test_cap_guard(self, uniform3):
        with pytest.raises(SearchCapExceeded):
            is_union_minimal(uniform3, cap=2)

    def test_witness_replays_against_the_definition(self, uniform3):
        sub = is_union_minimal(uniform3).witness.subfamily
        assert sub.masks() < uniform3.bases.masks()
        assert sub.union() == uniform3.support()
        Matroid.from_bases(uniform3.ground, sub)  # must validate


class TestIntersectionMinimal:
    def test_triangle_on_five_is_minimal(self):
        assert is_intersection_minimal(mk("12345", "23", "24", "34")).verdict

    def test_grid_on_five_is_minimal(self):
        assert is_intersection_minimal(mk("12345", "13", "14", "23", "24")).verdict

    def test_dual_of_uniform_is_reducible(self, uniform3):
        res = is_intersection_minimal(uniform3.dual())
        assert not res.verdict
        # direct subfamily search confirms: {{1},{2}} keeps the empty intersection
        assert res.witness.subfamily == fam(uniform3.ground, "1", "2")

    def test_cap_guard(self, uniform3):
        with pytest.raises(SearchCapExceeded):
            is_intersection_minimal(uniform3, cap=2)


class TestDeterminism:
    def _witnesses(self, workers):
        u3 = mk("123", "12", "13", "23")
        m338 = mk("12345", "123", "124", "134", "125", "145")
        return (
            is_unique_expansion(u3, workers=workers).witness,
            is_unique_exchange(m338, workers=workers).witness,
            is_union_minimal(u3, workers=workers).witness,
            is_intersection_minimal(u3.dual(), workers=workers).witness,
        )

    def test_fixed_witness_across_runs_and_workers(self):
        reference = self._witnesses(workers=1)
        for _ in range(10):
            assert self._witnesses(workers=1) == reference
        for workers in (2, 4):
            assert self._witnesses(workers=workers) == reference

    def test_chunked_search_layers_agree_with_sequential(self):
        # 8 bases put 70 subfamilies in the middle size layer, enough to
        # engage the chunked threaded scan
        m = mk("123456", *("".join(t) for t in
                           [(a, b, c) for a in "12" for b in "34" for c in "56"]))
        assert len(m.bases) == 8
        for workers in (1, 3, 7):
            assert is_union_minimal(m, workers=workers).verdict
            assert is_intersection_minimal(m, workers=workers).verdict


class TestRecoverPartition:
    def test_nested_pair(self):
        m = mk("123", "12", "13")
        p = recover_partition(m)
        assert p == Partition(fam(m.ground, "1", "23"))

    def test_uniform_has_none(self, uniform3):
        assert recover_partition(uniform3) is None

    def test_one_per_block_matroid_round_trips(self):
        g = GroundSet("1234")
        p = Partition(fam(g, "12", "34"))
        m = make_unique_partition_matroid(g, p)
        assert recover_partition(m) == p

    def test_rank_zero_rejected(self):
        with pytest.raises(RankZero):
            recover_partition(mk("1", ""))

    def test_agrees_with_forming_family_partition_test(self):
        for m in _rank_positive(4):
            f = forming_family(m).family
            expected = Partition(f) if is_partition(f, m.support()) else None
            assert recover_partition(m) == expected


class TestIsTransversalOf:
    def test_positive_and_count(self):
        m = mk("123", "12", "13")
        p = Partition(fam(m.ground, "1", "23"))
        assert is_transversal_of(m, p)
        assert len(m.bases) == 2 == combination_number(p)
        assert m.bases == transversals(p)

    def test_negative(self, uniform3):
        p = Partition(fam(uniform3.ground, "1", "23"))
        assert not is_transversal_of(uniform3, p)

    def test_one_per_block_matroid_always_passes(self):
        g = GroundSet("12345")
        p = Partition(fam(g, "12", "345"))
        m = make_unique_partition_matroid(g, p)
        assert is_transversal_of(m, p)

    def test_support_mismatch(self):
        m = mk("123", "12", "13")
        with pytest.raises(SupportMismatch):
            is_transversal_of(m, Partition(fam(m.ground, "1", "2")))


class TestAgainstDefinitionOracles:
    def test_minimality_matches_literal_quantification(self):
        from oracles import intersection_minimal_oracle, union_minimal_oracle

        for m in _population(4):
            assert is_union_minimal(m).verdict == union_minimal_oracle(m)
            assert is_intersection_minimal(m).verdict == intersection_minimal_oracle(m)


class TestClassImplicationsOverPopulation:
    def test_unique_expansion_closes_downward(self):
        # expansion-unique implies exchange-unique and union minimal
        for m in _rank_positive(4):
            if is_unique_expansion(m).verdict:
                assert is_unique_exchange(m).verdict
                assert is_union_minimal(m).verdict
                assert is_unique_exchange(m.dual()).verdict

    def test_minimality_duality(self):
        for m in _population(4):
            assert (
                is_union_minimal(m).verdict
                == is_intersection_minimal(m.dual()).verdict
            )


_cache = {}


def _population(n):
    if n not in _cache:
        _cache[n] = [m for k in range(1, n + 1) for m in enumerate_matroids(k)]
    return _cache[n]


def _rank_positive(n):
    return [m for m in _population(n) if m.rank > 0]
