from fractions import Fraction

import pytest

from powertree.closedform import (
    divisor_graph,
    divisor_profile,
    kappa_cyclic,
    kappa_cyclic_expansion,
    kappa_cyclic_reduced,
    kappa_dihedral,
    kappa_elementary_abelian,
    kappa_epo,
    kappa_pq,
    kappa_quaternion_pow2,
    kappa_quaternion_reduced,
    kappa_semidirect_pq,
)
from powertree.errors import (
    EqualPrimes,
    InvalidPair,
    NotEPO,
    NotPowerOfTwo,
    NotPrime,
    TooManyDivisors,
    TrivialGroup,
)
from powertree.groups import build
from powertree.powergraph import power_graph, reduced_power_graph
from powertree.specparse import parse_group_spec
from powertree.treecount import temperley_kappa


def _build(text):
    return build(parse_group_spec(text))


# --- divisor profile and graph -----------------------------------------------


def test_divisor_profile_12():
    prof = divisor_profile(12)
    assert prof.divisors == (12, 6, 4, 3, 2, 1)
    assert prof.deg_plus_one == (12, 10, 8, 9, 10, 12)
    assert prof.full_ratios == (Fraction(5), Fraction(4), Fraction(9, 2), Fraction(10))


def test_divisor_profile_6():
    prof = divisor_profile(6)
    assert prof.divisors == (6, 3, 2, 1)
    assert prof.totients == (2, 2, 1, 1)


def test_divisor_profile_prime():
    prof = divisor_profile(7)
    assert len(prof.divisors) == 2
    assert prof.middle == ()
    assert prof.full_ratio_product == 1


def test_divisor_profile_invariants():
    for n in range(1, 150):
        prof = divisor_profile(n)
        assert sum(prof.totients) == n
        assert prof.degrees[0] == n - 1 and prof.degrees[-1] == n - 1
        assert prof.deg_plus_one[0] == n and prof.deg_plus_one[-1] == n
        assert all(r > 1 for r in prof.full_ratios)


def test_divisor_graph_30():
    dg = divisor_graph(30)
    assert dg.middle == (15, 10, 6, 5, 3, 2)
    assert len(dg.complement_middle_edges) == 9


def test_divisor_graph_12():
    dg = divisor_graph(12)
    assert set(map(frozenset, dg.complement_middle_edges)) == {
        frozenset({6, 4}),
        frozenset({4, 3}),
        frozenset({3, 2}),
    }


def test_divisor_graph_chains_complete():
    # comparable pairs along a divisor chain are all edges
    dg = divisor_graph(8)
    assert len(dg.edges) == 6  # K_4 on {8,4,2,1}
    assert dg.complement_middle_edges == ()


# --- cyclic closed forms -----------------------------------------------------


def test_kappa_cyclic_paper_values():
    assert kappa_cyclic(6).value == 540
    assert kappa_cyclic(6).factorization == {2: 2, 3: 3, 5: 1}
    assert kappa_cyclic(12).factorization == {2: 14, 3: 6, 5: 1, 131: 1}


def test_kappa_cyclic_prime_power_is_cayley():
    for n in (1, 2, 3, 4, 5, 8, 9, 16, 25, 27, 32, 49):
        assert kappa_cyclic(n).value == n ** max(n - 2, 0)


def test_kappa_cyclic_matches_matrix_tree_to_60():
    for n in range(1, 61):
        direct = temperley_kappa(power_graph(_build(f"cyclic:{n}"))).value
        assert kappa_cyclic(n).value == direct, n


def test_kappa_cyclic_reduced_matches_matrix_tree_to_60():
    for n in range(2, 61):
        direct = temperley_kappa(reduced_power_graph(_build(f"cyclic:{n}"))).value
        assert kappa_cyclic_reduced(n).value == direct, n


def test_kappa_cyclic_reduced_values():
    assert kappa_cyclic_reduced(6).value == 40
    assert kappa_cyclic_reduced(9).value == 2**18
    assert kappa_cyclic_reduced(12).factorization == {2: 4, 3: 2, 7: 1, 11: 3, 173: 1}


def test_kappa_cyclic_reduced_2p():
    for p in (3, 5, 7, 11):
        expected = (2 * p - 1) ** (p - 2) * (2 * p - 2) ** (p - 1) // 2
        assert kappa_cyclic_reduced(2 * p).value == expected


def test_kappa_cyclic_reduced_trivial():
    with pytest.raises(TrivialGroup):
        kappa_cyclic_reduced(1)


def test_expansion_equals_determinant_form():
    for n in list(range(1, 40)) + [48, 60, 72, 90, 96, 100]:
        assert kappa_cyclic_expansion(n).value == kappa_cyclic(n).value, n


def test_expansion_divisor_cap():
    with pytest.raises(TooManyDivisors):
        kappa_cyclic_expansion(720720)  # 240 divisors


# --- two-prime forms ---------------------------------------------------------


def test_kappa_pq_values():
    assert kappa_pq(2, 3).value == 540
    assert kappa_pq(2, 5).factorization == {2: 4, 3: 6, 5: 5}
    assert kappa_pq(3, 5).factorization == {3: 10, 5: 8, 11: 1, 13: 3}
    assert kappa_pq(5, 3).value == kappa_pq(3, 5).value


def test_kappa_pq_matches_cyclic():
    for p, q in [(2, 3), (2, 5), (2, 7), (3, 5), (3, 7), (5, 7), (5, 11)]:
        assert kappa_pq(p, q).value == kappa_cyclic(p * q).value
        assert kappa_pq(p, q, reduced=True).value == kappa_cyclic_reduced(p * q).value


def test_kappa_pq_2p_specialization():
    for p in (3, 5, 7, 11, 13):
        assert kappa_pq(2, p).value == (2 * p) ** p * (2 * p - 1) ** (p - 2) // 2


def test_kappa_pq_errors():
    with pytest.raises(EqualPrimes):
        kappa_pq(3, 3)
    with pytest.raises(NotPrime):
        kappa_pq(4, 3)


# --- dihedral and dicyclic ---------------------------------------------------


def test_kappa_dihedral_values():
    assert kappa_dihedral(4).value == 2**4
    assert kappa_dihedral(5).value == 5**3
    assert kappa_dihedral(7).value == 7**5


def test_kappa_dihedral_matches_matrix_tree():
    for n in range(1, 13):
        direct = temperley_kappa(power_graph(_build(f"dihedral:{n}"))).value
        assert kappa_dihedral(n).value == direct, n


def test_kappa_quaternion_reduced_values():
    assert kappa_quaternion_reduced(2).value == 27
    assert kappa_quaternion_reduced(3).factorization == {2: 3, 3: 3, 5: 1}
    assert kappa_quaternion_reduced(4).factorization == {3: 4, 7: 5}


def test_kappa_quaternion_reduced_matches_matrix_tree():
    for n in range(1, 13):
        direct = temperley_kappa(reduced_power_graph(_build(f"quaternion:{n}"))).value
        assert kappa_quaternion_reduced(n).value == direct, n


def test_kappa_quaternion_reduced_pow2_closed_form():
    assert kappa_quaternion_reduced(1).value == 3
    for n in (2, 4, 8):
        assert kappa_quaternion_reduced(n).value == 3**n * (2 * n - 1) ** (2 * n - 3)


def test_kappa_quaternion_pow2():
    assert kappa_quaternion_pow2(2).value == 2**11
    assert kappa_quaternion_pow2(1).value == 2**4
    assert kappa_quaternion_pow2(4).value == 2**31
    for n in (1, 2, 4, 8):
        direct = temperley_kappa(power_graph(_build(f"quaternion:{n}"))).value
        assert kappa_quaternion_pow2(n).value == direct == 2 ** (5 * n - 1) * n ** (2 * n - 2)
    with pytest.raises(NotPowerOfTwo):
        kappa_quaternion_pow2(3)
    with pytest.raises(NotPowerOfTwo):
        kappa_quaternion_pow2(0)


# --- prime-order-element groups ----------------------------------------------


def test_kappa_epo_examples():
    assert kappa_epo(_build("semidirect:7:3")).factorization == {3: 7, 7: 5}
    assert kappa_epo(_build("alt:5")).factorization == {3: 10, 5: 18}
    assert kappa_epo(_build("sym:3")).value == 3
    assert kappa_epo(_build("alt:4")).value == 81


def test_kappa_epo_elementary_abelian():
    for p, k in [(2, 1), (2, 3), (3, 2), (3, 3), (5, 2), (7, 1)]:
        g = _build(f"elemabelian:{p}^{k}")
        expected = p ** ((p**k - 1) // (p - 1) * (p - 2))
        assert kappa_epo(g).value == expected
        assert kappa_elementary_abelian(p, k).value == expected


def test_kappa_epo_rejects_composite_order_elements():
    with pytest.raises(NotEPO):
        kappa_epo(_build("cyclic:4"))


def test_kappa_epo_matches_matrix_tree():
    for text in ["sym:3", "alt:4", "alt:5", "semidirect:7:3", "elemabelian:3^2"]:
        g = _build(text)
        assert kappa_epo(g).value == temperley_kappa(power_graph(g)).value


def test_kappa_semidirect_pq():
    assert kappa_semidirect_pq(7, 3).factorization == {3: 7, 7: 5}
    assert kappa_semidirect_pq(3, 2).value == 3
    assert kappa_semidirect_pq(5, 2).value == 125
    for p, q in [(3, 2), (5, 2), (7, 3), (11, 2), (13, 3)]:
        g = _build(f"semidirect:{p}:{q}")
        assert kappa_semidirect_pq(p, q).value == temperley_kappa(power_graph(g)).value
    with pytest.raises(InvalidPair):
        kappa_semidirect_pq(7, 5)
    with pytest.raises(InvalidPair):
        kappa_semidirect_pq(3, 5)


def test_divisibility_corollary():
    for n in range(3, 121):
        assert kappa_cyclic(n).value % n == 0, n
