import json
from fractions import Fraction as F

import pytest

from oracles import power_sum_from_eigenvalues, standard_tableaux_count
from supersym.combinat import partitions, z_mu
from supersym.fillings import evalhet_sum
from supersym.symfunc import (
    SymFunc,
    character,
    e,
    eval_xi,
    frobenius_from_values,
    h,
    hall_inner,
    module_frobenius,
    newton_convert,
    p,
    p_to_schur,
    pieri,
    plethysm_multiplicity,
    power_sum_at_xi,
    s,
    schur_to_p,
    to_p,
)


def test_newton_small_cases():
    assert newton_convert(h(1)) == p(1)
    assert newton_convert(e(2)) == SymFunc("p", {(1, 1): F(1, 2), (2,): F(-1, 2)})
    assert newton_convert(h(2)) == SymFunc("p", {(1, 1): F(1, 2), (2,): F(1, 2)})


def test_h_zero_and_negative_conventions():
    assert h(0) == SymFunc.one("h")
    assert not h(-1)
    assert newton_convert(h(2, 0)) == newton_convert(h(2))


def test_character_values():
    for k in range(1, 6):
        for mu in partitions(k):
            assert character((k,), mu) == 1
    assert character((1, 1, 1), (2, 1)) == -1
    assert character((2, 1), (1, 1, 1)) == 2


def test_character_rejects_size_mismatch():
    with pytest.raises(ValueError):
        character((2,), (1,))


@pytest.mark.parametrize("n", range(1, 8))
def test_character_dimension_and_sign(n):
    for lam in partitions(n):
        assert character(lam, (1,) * n) == standard_tableaux_count(lam)
    for mu in partitions(n):
        assert character((1,) * n, mu) == (-1) ** (n - len(mu))


@pytest.mark.parametrize("n", range(1, 8))
def test_column_orthogonality(n):
    parts = partitions(n)
    for mu in parts:
        for nu in parts:
            total = sum(character(lam, mu) * character(lam, nu) for lam in parts)
            assert total == (z_mu(mu) if mu == nu else 0)


def test_schur_p_conversion():
    assert schur_to_p((1,)) == p(1)
    assert schur_to_p((2,)) == SymFunc("p", {(1, 1): F(1, 2), (2,): F(1, 2)})
    assert schur_to_p((2,)) == newton_convert(h(2))
    for lam in partitions(6):
        assert p_to_schur(schur_to_p(lam)) == s(*lam)


def test_hall_inner():
    assert hall_inner(p(2, 1), p(2, 1)) == 2
    assert hall_inner(p(2, 1), p(1, 1, 1)) == 0
    for lam in partitions(5):
        for mu in partitions(5):
            assert hall_inner(to_p(s(*lam)), to_p(s(*mu))) == (lam == mu)


def test_mixed_basis_addition_rejected():
    with pytest.raises(ValueError):
        h(1) + e(1)


def test_pieri_examples():
    assert pieri("h", 1, (1,)) == [(2,), (1, 1)]
    assert pieri("e", 2, (1,)) == [(2, 1), (1, 1, 1)]
    for lam in partitions(4):
        assert pieri("h", 0, lam) == [lam]
        assert pieri("e", 0, lam) == [lam]


def test_pieri_e_example_by_pairing():
    prod = p_to_schur(newton_convert(e(2)) * schur_to_p((1,)))
    assert sorted(prod.terms, reverse=True) == pieri("e", 2, (1,))


@pytest.mark.parametrize("r", range(5))
def test_pieri_matches_schur_expansion(r):
    for k in range(7):
        for lam in partitions(k):
            hprod = p_to_schur(newton_convert(h(r)) * schur_to_p(lam))
            eprod = p_to_schur(newton_convert(e(r)) * schur_to_p(lam))
            assert set(hprod.terms) == set(pieri("h", r, lam))
            assert set(eprod.terms) == set(pieri("e", r, lam))
            assert set(hprod.terms.values()) <= {1}
            assert set(eprod.terms.values()) <= {1}


def test_eval_xi_small_values():
    assert eval_xi(s(2), (1, 1, 1)) == 6
    assert eval_xi(s(2), (2, 1)) == 2
    assert eval_xi(s(2), (3,)) == 0


@pytest.mark.parametrize("k", range(1, 7))
def test_power_sums_match_permutation_matrix_eigenvalues(k):
    for mu in partitions(k):
        for j in range(1, 8):
            assert power_sum_at_xi(j, mu) == power_sum_from_eigenvalues(j, mu)
            assert eval_xi(p(j), mu) == power_sum_from_eigenvalues(j, mu)


@pytest.mark.parametrize("k", range(1, 7))
def test_h_pairing_with_p_two_ways(k):
    # <h_lam, p_mu> from Newton and from row-constant fillings with no primed labels
    for mu in partitions(k):
        for lam in partitions(k):
            assert hall_inner(newton_convert(h(*lam)), p(*mu)) == evalhet_sum(lam, (), mu)


def test_frobenius_from_values():
    assert frobenius_from_values({(1, 1): 2, (2,): 0}, 2) == p(1, 1)
    assert p_to_schur(frobenius_from_values({(1, 1): 2, (2,): 0}, 2)) == s(2) + s(1, 1)
    assert frobenius_from_values({(1, 1): 1, (2,): -1}, 2) == SymFunc("p", {(1, 1): F(1, 2), (2,): F(-1, 2)})
    for mu0 in partitions(4):
        vals = {mu: (z_mu(mu0) if mu == mu0 else 0) for mu in partitions(4)}
        assert frobenius_from_values(vals, 4) == p(*mu0)


def test_frobenius_missing_value():
    with pytest.raises(KeyError):
        frobenius_from_values({(1, 1): 1}, 2)


def test_module_frobenius_small():
    assert module_frobenius(2, (1,), ()) == s(2) + s(1, 1)
    assert module_frobenius(2, (), (2,)) == s(1, 1)
    assert module_frobenius(2, (), ()) == s(2)


def test_plethysm_examples():
    assert plethysm_multiplicity((2,), (3,), 3) == 2
    for n in range(1, 6):
        assert plethysm_multiplicity((1,), (n,), n) == 1
        assert plethysm_multiplicity((0, 0, 0), (n,), n) == 1


def test_json_round_trip():
    f = newton_convert(e(3))
    data = json.loads(json.dumps(f.to_json()))
    assert SymFunc.from_json(data) == f
    assert [d["index"] for d in data] == sorted(d["index"] for d in data)
