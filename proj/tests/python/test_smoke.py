from fractions import Fraction

import pytest

import sympq


def test_pieri_product():
    got = sympq.expand("4,3,1 * 2")
    assert got[(5, 3, 2)] == 2
    assert got[(4, 3, 1)] == 3
    assert got[(4, 3, 2, 1)] == 1
    assert len(got) == 7
    assert sympq.pieri_coefficient([4, 3, 1], [4, 3, 1], 2) == 3


def test_structure_constants_match_expand():
    assert sympq.structure_constants([2, 1], [2, 1]) == sympq.expand("2,1 * 2,1") == {(4, 2): Fraction(1)}


def test_universal_and_laurent_values():
    assert sympq.usymp_Q([2, 1]) == "q[2,1] - 2*q[3] - 2*q[1]"
    assert sympq.laurent_Q([1], 1) == "2*x1 + 2*x1^-1"
    assert sympq.tableau_count([1], [], 3) == 12


def test_basis_change():
    assert sympq.to_basis([3], "schurP", "sympP") == {(3,): Fraction(1)}


def test_verify_report():
    report = sympq.verify("pieri", max_mu=4, max_r=2, seed=3)
    assert report["status"] == "verified-to-bound"
    assert report["seed"] == "3"
    assert report["failures"] == []


def test_errors():
    with pytest.raises(ValueError):
        sympq.structure_constants([2, 2], [1])
    code, _, err = sympq.cli("compute", "sympQ", "2,2")
    assert code == 2 and "strict" in err
