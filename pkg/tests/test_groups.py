import numpy as np
import pytest

from brauerkit.groups import (
    CapExceeded,
    Subgroup,
    alternating_group,
    are_conjugate_subgroups,
    centralizer,
    conjugacy_class_of_subgroup,
    cyclic_group,
    dihedral_group,
    direct_product,
    group_from_generators,
    group_from_text,
    group_to_text,
    identity_iso,
    injective_homomorphisms,
    is_twisted_diagonal,
    klein_four_group,
    left_transversal,
    maximal_subgroups,
    normalizer,
    pair_index,
    parse_cycles,
    subgroups_all,
    subgroups_up_to_conjugacy,
    sylow_subgroup,
    symmetric_group,
    twisted_diagonal,
)


def test_parse_cycles():
    assert parse_cycles("(1 2 3)", 3) == (1, 2, 0)
    assert parse_cycles("(1 2)(3 4)", 4) == (1, 0, 3, 2)
    assert parse_cycles("()", 5) == tuple(range(5))
    with pytest.raises(ValueError):
        parse_cycles("(1 5)", 3)


def test_group_from_generators_examples():
    assert group_from_generators(3, ["(1 2 3)"]).order == 3
    assert group_from_generators(3, ["(1 2)", "(1 2 3)"]).order == 6
    assert group_from_generators(4, ["(1 2 3)", "(1 2)(3 4)"]).order == 12


def test_order_cap():
    with pytest.raises(CapExceeded):
        group_from_generators(13, [tuple(range(1, 13)) + (0,), (1, 0) + tuple(range(2, 13))], cap=200)


def test_subgroup_axioms_checked():
    s3 = symmetric_group(3)
    for rep in subgroups_up_to_conjugacy(s3):
        # re-run the closure checks explicitly
        Subgroup(s3, rep.elems, check=True)
    order3 = next(x for x in range(6) if s3.element_order(x) == 3)
    with pytest.raises(ValueError):
        Subgroup(s3, [0, order3])  # missing the inverse/square
    with pytest.raises(ValueError):
        Subgroup(s3, [1, 2])  # missing the identity


def test_subgroup_classes_counts():
    assert [s.order for s in subgroups_up_to_conjugacy(cyclic_group(5))] == [1, 5]
    assert [s.order for s in subgroups_up_to_conjugacy(symmetric_group(3))] == [1, 2, 3, 6]
    assert len(subgroups_up_to_conjugacy(dihedral_group(4))) == 8
    assert len(subgroups_all(klein_four_group())) == 5


def test_conjugate_counts_match_normalizer_index():
    g = alternating_group(4)
    for rep in subgroups_up_to_conjugacy(g):
        n_conj = len(conjugacy_class_of_subgroup(rep))
        assert n_conj == g.order // normalizer(rep).order


def test_sylow_and_centralizer():
    s3 = symmetric_group(3)
    syl2 = sylow_subgroup(s3, 2)
    assert syl2.order == 2
    assert len(conjugacy_class_of_subgroup(syl2)) == 3
    c3 = next(s for s in subgroups_up_to_conjugacy(s3) if s.order == 3)
    assert centralizer(s3, c3).elems == c3.elems
    a4 = alternating_group(4)
    assert sylow_subgroup(a4, 2).order == 4
    assert sylow_subgroup(a4, 3).order == 3


def test_transversal_partitions():
    g = dihedral_group(4)
    full = g.full_subgroup()
    for q in subgroups_up_to_conjugacy(g):
        reps = left_transversal(full, q)
        cover = set()
        for x in reps:
            coset = {int(g.mul[x, t]) for t in q.elems}
            assert not (cover & coset)
            cover |= coset
        assert cover == set(range(g.order))
    triv = g.trivial_subgroup()
    c2 = next(s for s in subgroups_up_to_conjugacy(g) if s.order == 2)
    assert left_transversal(c2, triv) == list(c2.elems)


def test_twisted_diagonal_roundtrip():
    s3 = symmetric_group(3)
    c3 = next(s for s in subgroups_up_to_conjugacy(s3) if s.order == 3)
    gg = direct_product(s3, s3)
    for phi in injective_homomorphisms(c3, s3.full_subgroup()):
        delta = twisted_diagonal(gg, phi)
        assert delta.order == c3.order
        ok, rec = is_twisted_diagonal(gg, delta)
        assert ok and rec.mapping == phi.mapping
        inv_delta = twisted_diagonal(direct_product(s3, s3), phi)  # same product rebuilt
        assert inv_delta.elems == delta.elems


def test_twisted_diagonal_negative_and_trivial():
    c2 = cyclic_group(2)
    prod = direct_product(c2, c2)
    box = Subgroup(prod, range(4), check=False)
    assert is_twisted_diagonal(prod, box)[0] is False
    assert is_twisted_diagonal(prod, prod.trivial_subgroup())[0] is True
    diag = twisted_diagonal(prod, identity_iso(c2.full_subgroup()))
    assert diag.order == 2
    ok, rec = is_twisted_diagonal(prod, diag)
    assert ok
    # swapping factors gives the inverse iso
    swapped = Subgroup(prod, [pair_index(prod, int(prod.p2[e]), int(prod.p1[e])) for e in diag.elems], check=False)
    ok2, rec2 = is_twisted_diagonal(prod, swapped)
    assert ok2 and rec2.mapping == rec.inverse().mapping


def test_injective_homs_enumeration():
    v4 = klein_four_group()
    c2 = next(s for s in subgroups_up_to_conjugacy(v4) if s.order == 2)
    homs = injective_homomorphisms(c2, v4.full_subgroup())
    assert len(homs) == 3  # three involutions to send the generator to
    full_homs = injective_homomorphisms(v4.full_subgroup(), v4.full_subgroup())
    assert len(full_homs) == 6  # Aut(V4) = S3


def test_maximal_subgroups_of_p_group():
    d8 = dihedral_group(4)
    full = d8.full_subgroup()
    maxes = maximal_subgroups(full)
    assert sorted(m.order for m in maxes) == [4, 4, 4]
    v4 = klein_four_group()
    assert len(maximal_subgroups(v4.full_subgroup())) == 3


def test_are_conjugate_subgroups():
    s3 = symmetric_group(3)
    twos = [s for s in subgroups_all(s3) if s.order == 2]
    assert len(twos) == 3
    assert are_conjugate_subgroups(twos[0], twos[1])
    c3 = next(s for s in subgroups_all(s3) if s.order == 3)
    assert not are_conjugate_subgroups(twos[0], c3)


def test_group_file_roundtrip():
    s3 = symmetric_group(3)
    text = group_to_text(s3, 3)
    again = group_from_text(text)
    assert again.order == 6
    with pytest.raises(ValueError):
        group_from_text("group degree=3 order=5\n(1 2 3)")
    with pytest.raises(ValueError):
        group_from_text("nonsense")


def test_direct_product_projections():
    a4 = alternating_group(4)
    c3 = cyclic_group(3)
    prod = direct_product(a4, c3)
    assert prod.order == 36
    for e in range(prod.order):
        a, b = int(prod.p1[e]), int(prod.p2[e])
        assert pair_index(prod, a, b) == e
    # projections are homomorphisms
    rng = np.random.default_rng(0)
    for _ in range(50):
        x, y = rng.integers(0, 36, 2)
        z = prod.product(int(x), int(y))
        assert int(prod.p1[z]) == a4.product(int(prod.p1[x]), int(prod.p1[y]))
        assert int(prod.p2[z]) == c3.product(int(prod.p2[x]), int(prod.p2[y]))
