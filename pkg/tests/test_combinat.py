from math import factorial

import pytest
from hypothesis import given, strategies as st

from oracles import count_permutations_of_type, multiset_partitions_by_refinement
from supersym.combinat import (
    DegreeVector,
    Multiset,
    MultisetPartition,
    compare_multisets,
    degree_vectors,
    enumerate_multiset_partitions,
    m_tilde,
    partitions,
    z_mu,
)

M = Multiset.parse


def test_empty_multiset_is_smallest():
    assert compare_multisets(M("{}"), M("{1}")) == -1


@pytest.mark.parametrize(
    "a, b",
    [("{1,1'}", "{2}"), ("{1',2'}", "{2'}"), ("{}", "{1,1,2}"), ("{1,1,2}", "{1,3}"), ("{1,3}", "{1,1'}"),
     ("{1,1'}", "{1,1',2'}"), ("{1,1',2'}", "{2,2}"), ("{2,2}", "{1'}")],
)
def test_multiset_order_examples(a, b):
    assert compare_multisets(M(a), M(b)) == -1
    assert compare_multisets(M(b), M(a)) == 1


def test_parse_and_str_round_trip():
    s = M("{2',1,1}")
    assert str(s) == "{1,1,2'}"
    assert s.unbarred_counts(2) == (2, 0)
    assert s.barred == (2,)
    assert s.odd and len(s) == 3


def test_repeated_barred_letter_rejected():
    with pytest.raises(ValueError):
        M("{1',1'}")


multisets = st.builds(
    lambda a, b: Multiset.from_counts(a, [j + 1 for j, x in enumerate(b) if x]),
    st.lists(st.integers(0, 2), min_size=0, max_size=3),
    st.lists(st.booleans(), min_size=0, max_size=3),
)


@given(multisets, multisets, multisets)
def test_compare_is_strict_total_order(a, b, c):
    assert compare_multisets(a, b) == -compare_multisets(b, a)
    assert (compare_multisets(a, b) == 0) == (a == b)
    if compare_multisets(a, b) < 0 and compare_multisets(b, c) < 0:
        assert compare_multisets(a, c) < 0


def test_partitions_small():
    assert partitions(0) == [()]
    assert partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert partitions(5, max_length=2) == [(5,), (4, 1), (3, 2)]


def test_partitions_max_length_filters_brute_list():
    for k in range(9):
        for cap in range(k + 1):
            assert partitions(k, cap) == [p for p in partitions(k) if len(p) <= cap]


@pytest.mark.parametrize("mu, z", [((1, 1, 1), 6), ((2, 1), 2), ((3, 3, 1), 18)])
def test_z_mu(mu, z):
    assert z_mu(mu) == z


@pytest.mark.parametrize("k", range(1, 8))
def test_z_mu_times_class_size_is_factorial(k):
    for mu in partitions(k):
        assert z_mu(mu) * count_permutations_of_type(mu) == factorial(k)


def test_multiset_partitions_examples():
    two_ones = enumerate_multiset_partitions(DegreeVector((2,), ()), n=2)
    assert set(two_ones) == {MultisetPartition.parse("{{1,1}}"), MultisetPartition.parse("{{1},{1}}")}
    assert enumerate_multiset_partitions(DegreeVector((), (2,)), n=2, super_only=True) == []
    assert enumerate_multiset_partitions(DegreeVector((), (2,)), n=2) == [MultisetPartition.parse("{{1'},{1'}}")]


def test_multiset_partition_output_is_sorted_and_distinct():
    out = enumerate_multiset_partitions(DegreeVector((2, 1), (1, 1)))
    assert out == sorted(out)
    assert len(set(out)) == len(out)


@pytest.mark.parametrize("dv", list(degree_vectors(2, 2, 5)))
def test_multiset_partitions_match_refinement_oracle(dv):
    for n in (1, 2, 3, None):
        for super_only in (False, True):
            got = enumerate_multiset_partitions(dv, n=n, super_only=super_only)
            assert set(got) == multiset_partitions_by_refinement(dv, n, super_only)
            for pi in got:
                assert pi.content(dv.m, dv.mb) == dv


def test_m_tilde_example():
    pi = MultisetPartition.parse(
        "{{1,1,2},{1,3},{1,3},{1,3},{1,3},{1,3},{1,1'},{1,1'},{1,1',2'},{1,1',2'},{2,2},{1'},{1'},{1'},{1'}}"
    )
    assert m_tilde(pi) == ((5, 2, 1, 1), (4, 2))
    assert m_tilde(MultisetPartition.parse("{{1}}")) == ((1,), ())
    assert m_tilde(MultisetPartition.parse("{{1'},{1'}}")) == ((), (2,))


@pytest.mark.parametrize("dv", list(degree_vectors(1, 2, 4)))
def test_m_tilde_sizes_add_to_length(dv):
    for pi in enumerate_multiset_partitions(dv):
        even, odd = m_tilde(pi)
        assert sum(even) + sum(odd) == len(pi)
