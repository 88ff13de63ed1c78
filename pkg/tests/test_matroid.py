import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroidlab import (
    GroundSet,
    Matroid,
    Partition,
    PartitionMatroidSpec,
    SetFamily,
    are_isomorphic,
    complements,
    enumerate_matroids,
    low,
    make_partition_matroid,
    make_unique_partition_matroid,
    maximal,
)
from matroidlab.errors import (
    AugmentationFailure,
    CapOutOfRange,
    EmptyFamily,
    ExchangeFailure,
    MissingEmptySet,
    NotDownwardClosed,
    ParseError,
    UnequalCardinality,
)

from oracles import rank_oracle


def fam(ground, *label_sets):
    return SetFamily(ground, (ground.subset(*s) for s in label_sets))


@pytest.fixture
def g3():
    return GroundSet("123")


@pytest.fixture
def g5():
    return GroundSet("12345")


class TestFromBases:
    def test_valid_rank_two(self, g3):
        m = Matroid.from_bases(g3, fam(g3, "12", "13"))
        assert m.rank == 2
        assert m.bases == fam(g3, "12", "13")

    def test_valid_rank_three_on_five(self, g5):
        m = Matroid.from_bases(g5, fam(g5, "123", "124", "134", "125", "145"))
        assert m.rank == 3
        assert len(m.bases) == 5

    def test_empty_family(self, g3):
        with pytest.raises(EmptyFamily):
            Matroid.from_bases(g3, fam(g3))

    def test_unequal_cardinality_before_exchange(self, g3):
        with pytest.raises(UnequalCardinality) as exc:
            Matroid.from_bases(g3, fam(g3, "12", "3"))
        assert {exc.value.first, exc.value.second} == {g3.subset("3"), g3.subset("1", "2")}

    def test_exchange_failure_carries_canonical_witness(self):
        g = GroundSet("1234")
        with pytest.raises(ExchangeFailure) as exc:
            Matroid.from_bases(g, fam(g, "12", "34"))
        # scanning order: first ordered base pair, lowest removable element
        assert exc.value.base1 == g.subset("1", "2")
        assert exc.value.base2 == g.subset("3", "4")
        assert exc.value.element == "1"

    def test_rank_zero_supported(self, g3):
        m = Matroid.from_bases(g3, fam(g3, ""))
        assert m.rank == 0
        assert m.support() == g3.empty()

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_random_candidates_validate_or_witness(self, data):
        # a random equal-cardinality family either validates or the exchange
        # witness replays against the definition: no replacement works
        n = data.draw(st.integers(min_value=2, max_value=5))
        r = data.draw(st.integers(min_value=1, max_value=n))
        ground = GroundSet(str(i) for i in range(1, n + 1))
        from itertools import combinations as _combos
        rsets = [ground.subset_of(c) for c in _combos(range(n), r)]
        members = data.draw(
            st.lists(st.sampled_from(rsets), min_size=1, unique=True)
        )
        candidate = SetFamily(ground, members)
        try:
            m = Matroid.from_bases(ground, candidate)
        except ExchangeFailure as exc:
            stripped = exc.base1 - ground.subset(exc.element)
            repaired = [
                y for y in (exc.base2 - exc.base1).labels()
                if (stripped | ground.subset(y)) in candidate
            ]
            assert exc.element in exc.base1
            assert exc.element not in exc.base2
            assert repaired == []
        else:
            assert m.bases == candidate


class TestFromIndependents:
    def test_low_of_bases_round_trips(self, g3):
        m = Matroid.from_independents(g3, low(fam(g3, "12", "13")))
        assert m.bases == fam(g3, "12", "13")

    def test_smallest_matroid(self):
        g = GroundSet("1")
        m = Matroid.from_independents(g, fam(g, ""))
        assert m.rank == 0
        assert m.bases == fam(g, "")

    def test_two_singleton_bases(self):
        g = GroundSet("12")
        m = Matroid.from_independents(g, fam(g, "", "1", "2"))
        assert m.rank == 1
        assert m.bases == fam(g, "1", "2")

    def test_missing_empty_set(self, g3):
        with pytest.raises(MissingEmptySet):
            Matroid.from_independents(g3, fam(g3, "1"))

    def test_not_downward_closed(self, g3):
        with pytest.raises(NotDownwardClosed) as exc:
            Matroid.from_independents(g3, fam(g3, "", "12"))
        assert exc.value.superset == g3.subset("1", "2")
        assert exc.value.subset == g3.subset("1")

    def test_augmentation_failure(self, g3):
        # {2} cannot grow toward {1,3}
        with pytest.raises(AugmentationFailure) as exc:
            Matroid.from_independents(g3, fam(g3, "", "1", "2", "3", "13"))
        assert exc.value.smaller == g3.subset("2")
        assert exc.value.larger == g3.subset("1", "3")

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_agrees_with_from_bases_on_population(self, data):
        ms = _population(3)
        m = data.draw(st.sampled_from(ms))
        indep = m.independents()
        rebuilt = Matroid.from_independents(m.ground, indep)
        assert rebuilt == Matroid.from_bases(m.ground, maximal(indep)) == m


class TestQueries:
    def test_is_independent(self, g3):
        m = Matroid.from_bases(g3, fam(g3, "12", "13"))
        assert m.is_independent(g3.subset("3"))
        assert not m.is_independent(g3.subset("2", "3"))
        assert m.is_independent(g3.empty())

    def test_rank_of(self, g3):
        m = Matroid.from_bases(g3, fam(g3, "12", "13"))
        assert m.rank_of(g3.subset("2", "3")) == 1
        assert m.rank_of(g3.empty()) == 0
        assert m.rank_of(g3.full()) == m.rank

    def test_rank_of_matches_oracle_everywhere(self):
        for m in _population(4):
            for x in m.ground.all_subsets():
                assert m.rank_of(x) == rank_oracle(m, x)

    def test_rank_is_monotone_unit_increment(self):
        for m in _population(3):
            for x in m.ground.all_subsets():
                r = m.rank_of(x)
                for i in range(m.ground.size):
                    grown = m.ground.from_mask(x.mask | (1 << i))
                    assert r <= m.rank_of(grown) <= r + 1


class TestDual:
    def test_complemented_bases(self):
        g = GroundSet("1234")
        m = Matroid.from_bases(g, fam(g, "12", "13", "14"))
        assert m.dual().bases == fam(g, "34", "24", "23")

    def test_rank_zero_dual_is_free(self, g3):
        m = Matroid.from_bases(g3, fam(g3, ""))
        assert m.dual().bases == SetFamily(g3, [g3.full()])
        assert m.dual().rank == 3

    def test_involution_and_rank_sum_over_population(self):
        for m in _population(4):
            d = m.dual()
            assert d.dual() == m
            assert m.rank + d.rank == m.ground.size
            assert d.bases == complements(m.bases)

    def test_definition_route_agrees(self):
        # the dual's independence family is the downward closure of the
        # complemented bases; rebuilding through the independence axioms
        # must land on the same matroid
        for m in _population(3):
            rebuilt = Matroid.from_independents(m.ground, low(complements(m.bases)))
            assert rebuilt == m.dual()


class TestPartitionMatroids:
    def test_capped_blocks_match_enumeration_filter(self, g5):
        p = Partition(fam(g5, "12", "345"))
        m = make_partition_matroid(g5, PartitionMatroidSpec(p, (1, 2)))
        expected = {
            x.mask
            for x in g5.all_subsets()
            if x.issubset(p.support())
            and len(x & g5.subset("1", "2")) == 1
            and len(x & g5.subset("3", "4", "5")) == 2
        }
        assert m.bases.masks() == expected
        assert len(m.bases) == 6
        assert m.rank == 3

    def test_zero_caps_give_rank_zero(self, g5):
        p = Partition(fam(g5, "12", "345"))
        m = make_partition_matroid(g5, PartitionMatroidSpec(p, (0, 0)))
        assert m.rank == 0

    def test_full_caps_give_single_base(self, g5):
        p = Partition(fam(g5, "12", "345"))
        m = make_partition_matroid(g5, PartitionMatroidSpec(p, (2, 3)))
        assert m.bases == SetFamily(g5, [p.support()])

    def test_cap_out_of_range(self, g5):
        p = Partition(fam(g5, "12", "345"))
        with pytest.raises(CapOutOfRange):
            PartitionMatroidSpec(p, (3, 2))
        with pytest.raises(CapOutOfRange):
            PartitionMatroidSpec(p, (-1, 2))

    def test_independents_cap_elements_per_block(self, g5):
        p = Partition(fam(g5, "12", "345"))
        m = make_partition_matroid(g5, PartitionMatroidSpec(p, (1, 2)))
        for x in g5.all_subsets():
            expected = (
                x.issubset(p.support())
                and len(x & g5.subset("1", "2")) <= 1
                and len(x & g5.subset("3", "4", "5")) <= 2
            )
            assert m.is_independent(x) == expected

    def test_paired_caps_follow_blocks(self, g5):
        blocks = [g5.subset("3", "4", "5"), g5.subset("1", "2")]
        spec = PartitionMatroidSpec.paired(blocks, [2, 1])
        assert spec.caps == (1, 2)  # canonical block order is {1,2}, {3,4,5}

    def test_one_per_block(self, g3):
        p = Partition(fam(g3, "1", "23"))
        m = make_unique_partition_matroid(g3, p)
        assert m.bases == fam(g3, "12", "13")

    def test_elements_outside_blocks_are_loops(self):
        g = GroundSet("1234")
        m = make_unique_partition_matroid(g, Partition(fam(g, "234")))
        assert m.bases == fam(g, "2", "3", "4")
        assert not m.is_independent(g.subset("1"))

    def test_singleton_blocks_single_base(self, g3):
        p = Partition(fam(g3, "1", "2", "3"))
        m = make_unique_partition_matroid(g3, p)
        assert m.bases == SetFamily(g3, [g3.full()])


class TestIsomorphism:
    def test_self(self, g3):
        m = Matroid.from_bases(g3, fam(g3, "12", "13"))
        assert are_isomorphic(m, m)

    def test_relabeling(self):
        g = GroundSet("1234")
        a = Matroid.from_bases(g, fam(g, "12"))
        b = Matroid.from_bases(g, fam(g, "34"))
        assert are_isomorphic(a, b)

    def test_negative_pair_on_five(self, g5):
        a = Matroid.from_bases(g5, fam(g5, "12", "13", "14"))
        b = Matroid.from_bases(g5, fam(g5, "13", "14", "23", "24"))
        assert not are_isomorphic(a, b)

    def test_respects_base_counts(self, g3):
        a = Matroid.from_bases(g3, fam(g3, "12", "13"))
        b = Matroid.from_bases(g3, fam(g3, "12", "13", "23"))
        assert not are_isomorphic(a, b)

    def test_isomorphism_is_invariant_under_relabeling(self):
        # relabel each n=3 matroid by a fixed permutation; must stay isomorphic
        perm = {"1": "3", "2": "1", "3": "2"}
        for m in enumerate_matroids(3):
            g = m.ground
            mapped = SetFamily(
                g, (g.subset(*(perm[lab] for lab in b.labels())) for b in m.bases)
            )
            assert are_isomorphic(m, Matroid.from_bases(g, mapped))

    def test_matches_unpruned_oracle_on_all_small_pairs(self):
        from oracles import isomorphic_oracle

        mats3 = list(enumerate_matroids(3))
        for a in mats3:
            for b in mats3:
                assert are_isomorphic(a, b) == isomorphic_oracle(a, b)


class TestDocuments:
    def test_round_trip(self, g3):
        m = Matroid.from_bases(g3, fam(g3, "12", "13"))
        assert Matroid.from_doc(m.to_doc()) == m

    def test_independents_form_accepted(self):
        doc = {"ground_set": ["1", "2"], "independents": [[], ["1"], ["2"]]}
        m = Matroid.from_doc(doc)
        assert m.bases == fam(m.ground, "1", "2")

    def test_numeric_labels_stringified(self):
        m = Matroid.from_doc({"ground_set": [1, 2], "bases": [[1], [2]]})
        assert m.ground.labels == ("1", "2")

    @pytest.mark.parametrize(
        "doc",
        [
            [],
            {},
            {"ground_set": []},
            {"ground_set": ["1"]},
            {"ground_set": ["1"], "bases": [[]], "independents": [[]]},
            {"ground_set": ["1"], "bases": "nope"},
            {"ground_set": ["1", "1"], "bases": [[]]},
            {"ground_set": ["1"], "bases": [["2"]]},
        ],
    )
    def test_malformed_documents(self, doc):
        with pytest.raises(ParseError):
            Matroid.from_doc(doc)

    def test_axiom_errors_pass_through(self):
        with pytest.raises(UnequalCardinality):
            Matroid.from_doc({"ground_set": ["1", "2"], "bases": [["1", "2"], ["1"]]})


_pop_cache = {}


def _population(n):
    if n not in _pop_cache:
        _pop_cache[n] = [m for k in range(1, n + 1) for m in enumerate_matroids(k)]
    return _pop_cache[n]
