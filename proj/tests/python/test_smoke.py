"""Smoke tests for the python bindings."""

import pytest

hw = pytest.importorskip("hurwitz_complexity")


def test_partitions():
    assert hw.enumerate_partitions(3) == [[3], [2, 1], [1, 1, 1]]
    assert hw.partition_length([2, 1]) == 2
    assert hw.is_branching_partition([2, 1, 1])
    assert not hw.is_branching_partition([1, 1, 1])


def test_branch_datum():
    datum = hw.BranchDatum(genus=1, degree=3, partitions=[[3], [3], [3]])
    assert hw.total_length(datum) == 3
    assert hw.is_compatible(datum)
    assert not hw.is_simple_datum(datum)
    assert hw.implied_genus(3, [[3], [3], [3]]) == 1
    assert hw.implied_genus(2, [[2], [2], [2]]) is None
    with pytest.raises(ValueError):
        hw.BranchDatum(genus=1, degree=3, partitions=[[1, 1, 1]])


def test_realizability():
    datum = hw.BranchDatum(genus=1, degree=3, partitions=[[3], [3], [3]])
    res = hw.find_monodromy(datum)
    assert res.status == hw.Status.REALIZABLE
    assert hw.verify_witness(res.witness, datum)

    exceptional = hw.BranchDatum(genus=0, degree=4,
                                 partitions=[[3, 1], [2, 2], [2, 2]])
    assert hw.is_compatible(exceptional)
    assert hw.find_monodromy(exceptional).status == hw.Status.NOT_REALIZABLE
    assert hw.brute_force_realizable(exceptional).status == hw.Status.NOT_REALIZABLE


def test_complexity():
    assert hw.simple_complexity_formula(3).coeff == 24
    assert hw.surface_complexity(1).value.coeff == 6
    report = hw.surface_complexity(2)
    assert report.value.coeff == 10
    assert report.achieved_by.partitions == [[5], [5], [5]]
    datum, witness = hw.hyperelliptic_witness(2)
    assert hw.verify_witness(witness, datum)
