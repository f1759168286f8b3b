from collections import Counter

import pytest

from powertree.errors import InvalidSpec, NotPrime, UnsupportedOrder
from powertree.groups import (
    GroupSpec,
    build,
    count_cyclic_subgroups,
    direct_product,
    spectrum,
)
from powertree.numutil import divisors, phi

# Exercised (order <= 64) for the full associativity/identity/inverse sweep.
AXIOM_SPECS = [
    "cyclic:1",
    "cyclic:6",
    "cyclic:12",
    "dihedral:4",
    "dihedral:6",
    "quaternion:2",
    "quaternion:3",
    "elemabelian:2^3",
    "elemabelian:3^2",
    "sym:3",
    "sym:4",
    "alt:4",
    "alt:5",
    "semidirect:7:3",
    "product:(cyclic:4)x(cyclic:2)",
    "perm:6:(1 2 3);(4 5 6);(2 3)(5 6)",
]


def _build(text):
    from powertree.specparse import parse_group_spec

    return build(parse_group_spec(text))


def order_profile(g):
    return Counter(g.element_order)


@pytest.mark.parametrize("spec", AXIOM_SPECS)
def test_group_axioms_exhaustive(spec):
    g = _build(spec)
    assert g.order <= 64
    n = g.order
    for a in range(n):
        assert g.multiply(0, a) == a
        assert g.multiply(a, 0) == a
        assert g.multiply(a, g.inverse(a)) == 0
    for a in range(n):
        for b in range(n):
            ab = g.multiply(a, b)
            for c in range(n):
                assert g.multiply(ab, c) == g.multiply(a, g.multiply(b, c))


@pytest.mark.parametrize("spec", AXIOM_SPECS)
def test_lagrange_and_closures(spec):
    g = _build(spec)
    for i in range(g.order):
        closure = g.cyclic_closure[i]
        assert 0 in closure
        assert g.element_order[i] == len(closure)
        assert g.order % g.element_order[i] == 0


def test_cyclic_6_order_profile():
    g = _build("cyclic:6")
    assert order_profile(g) == Counter({1: 1, 2: 1, 3: 2, 6: 2})


def test_cyclic_element_counts_are_totients():
    for n in range(1, 51):
        g = _build(f"cyclic:{n}")
        profile = order_profile(g)
        for d in divisors(n):
            assert profile[d] == phi(d)


def test_quaternion_q8_unique_involution():
    g = _build("quaternion:2")
    assert g.order == 8
    assert sum(1 for o in g.element_order if o == 2) == 1


def test_quaternion_pow2_common_involution():
    # the cyclic subgroup of every non-identity element passes through x^n
    for n in (1, 2, 4, 8):
        g = _build(f"quaternion:{n}")
        central = n  # element x^n has index n in the rotation block
        assert g.element_order[central] == 2 or g.order == 4
        for i in range(1, g.order):
            assert central in g.cyclic_closure[i]


def test_alternating_5_order_counts():
    g = _build("alt:5")
    assert g.order == 60
    assert order_profile(g) == Counter({1: 1, 2: 15, 3: 20, 5: 24})


def test_alternating_6_order():
    assert _build("alt:6").order == 360


def test_symmetric_orders():
    assert _build("sym:3").order == 6
    assert _build("sym:4").order == 24
    assert _build("sym:5").order == 120


def test_dihedral_reflections_are_involutions():
    for n in range(1, 16):
        g = _build(f"dihedral:{n}")
        assert g.order == 2 * n
        reflections = list(range(n, 2 * n))
        assert len(reflections) == n
        for i in reflections:
            assert g.element_order[i] == 2


def test_degenerate_dihedrals_overlap_abelian_groups():
    assert order_profile(_build("dihedral:1")) == order_profile(_build("cyclic:2"))
    assert order_profile(_build("dihedral:2")) == order_profile(_build("elemabelian:2^2"))


def test_semidirect_7_3_profile():
    g = _build("semidirect:7:3")
    assert g.order == 21
    assert order_profile(g) == Counter({1: 1, 7: 6, 3: 14})


def test_semidirect_invalid_pairs():
    with pytest.raises(InvalidSpec):
        _build("semidirect:7:5")  # 5 does not divide 6
    with pytest.raises(InvalidSpec):
        _build("semidirect:9:3")  # 9 not prime


def test_generalized_dihedral_18_profile():
    g = _build("perm:6:(1 2 3);(4 5 6);(2 3)(5 6)")
    assert g.order == 18
    assert order_profile(g) == Counter({1: 1, 2: 9, 3: 8})


def test_direct_product_orders():
    z3 = _build("cyclic:3")
    z2 = _build("cyclic:2")
    g = direct_product(z3, z2)
    assert order_profile(g) == order_profile(_build("cyclic:6"))
    v4 = direct_product(z2, z2)
    assert all(o == 2 for o in v4.element_order[1:])
    g42 = direct_product(_build("cyclic:4"), z2)
    assert sorted(g42.element_order) == [1, 2, 2, 2, 4, 4, 4, 4]


def test_direct_product_element_order_is_lcm():
    from math import lcm

    a = _build("cyclic:6")
    b = _build("sym:3")
    g = direct_product(a, b)
    assert g.order == 36
    for i in range(a.order):
        for j in range(b.order):
            idx = i * b.order + j
            assert g.element_order[idx] == lcm(
                a.element_order[i], b.element_order[j]
            )


def test_spectrum():
    assert spectrum(_build("alt:4")) == ({1, 2, 3}, {2, 3})
    assert spectrum(_build("cyclic:12")) == ({1, 2, 3, 4, 6, 12}, {12})
    omega, _ = spectrum(_build("alt:5"))
    assert omega == {1, 2, 3, 5}


def test_count_cyclic_subgroups():
    assert count_cyclic_subgroups(_build("alt:5"), 5) == 6
    assert count_cyclic_subgroups(_build("cyclic:9"), 3) == 1
    assert count_cyclic_subgroups(_build("alt:4"), 3) == 4
    assert count_cyclic_subgroups(_build("cyclic:9"), 2) == 0
    with pytest.raises(NotPrime):
        count_cyclic_subgroups(_build("cyclic:9"), 6)


def test_order_cap():
    with pytest.raises(UnsupportedOrder):
        _build("cyclic:10001")
    with pytest.raises(UnsupportedOrder):
        _build("alt:8")  # order 20160


def test_order_cap_env_override(monkeypatch):
    monkeypatch.setenv("KAPPA_MAX_ORDER", "30")
    with pytest.raises(UnsupportedOrder):
        _build("cyclic:31")
    assert _build("cyclic:30").order == 30


def test_perm_degree_cap():
    with pytest.raises(InvalidSpec):
        _build("sym:9")
    with pytest.raises(InvalidSpec):
        _build("alt:9")


def test_lazy_oracle_regime_above_table_limit():
    g = _build("sym:7")  # 5040 > table limit, multiplication stays lazy
    assert g.order == 5040
    assert g._table is None
    assert max(g.element_order) == 12  # lcm(3, 4) from a 3-cycle times a 4-cycle
    assert sorted(set(g.element_order)) == [1, 2, 3, 4, 5, 6, 7, 10, 12]
    for a in (0, 7, 919, 5039):
        assert g.multiply(a, 0) == a
        assert g.multiply(g.inverse(a), a) == 0


@pytest.mark.parametrize("spec", ["sym:5", "sym:7"])
def test_group_axioms_sampled_above_64(spec):
    import random

    g = _build(spec)
    assert g.order > 64
    rng = random.Random(11)
    for _ in range(300):
        a, b, c = (rng.randrange(g.order) for _ in range(3))
        assert g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c))
        assert g.multiply(0, a) == a and g.multiply(a, 0) == a
    for _ in range(40):
        a = rng.randrange(g.order)
        assert g.multiply(a, g.inverse(a)) == 0


def test_invalid_parameters():
    with pytest.raises(InvalidSpec):
        build(GroupSpec("cyclic", (0,)))
    with pytest.raises(InvalidSpec):
        build(GroupSpec("elemabelian", (4, 2)))
    with pytest.raises(InvalidSpec):
        build(GroupSpec("elemabelian", (3, 0)))
    with pytest.raises(InvalidSpec):
        build(GroupSpec("perm", (3,), generators=((0, 0, 1),)))


def test_build_m_is_dicyclic_of_order_12():
    # the nonabelian order-12 group with x^4 = y^3 = 1, yx = xy^2 has a
    # unique involution, matching the dicyclic group and neither A_4 nor D_12
    g = _build("quaternion:3")
    assert g.order == 12
    assert sum(1 for o in g.element_order if o == 2) == 1
    assert order_profile(g) == Counter({1: 1, 2: 1, 3: 2, 4: 6, 6: 2})
