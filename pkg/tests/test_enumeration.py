"""Canonical enumeration: counts, ordering, classes, hyperbolic classes."""

import pytest

from polarcl.counting import (num_disjoint_from_generator, num_kspaces,
                              num_kspaces_through_mspace, pencil_size)
from polarcl.enumeration import (BudgetError, PolarSpace, get_space,
                                 get_space_by_name)
from polarcl.geometry import GeometryError, descriptor

ALL_SPACES = ["Q+(5,2)", "Q+(7,2)", "Q(4,2)", "Q(6,2)", "Q-(5,2)",
              "W(3,2)", "W(3,3)", "W(5,2)", "H(3,4)", "H(4,4)"]


def test_level_counts_match_closed_forms():
    for name in ALL_SPACES:
        sp = get_space_by_name(name)
        for k in range(1, sp.d + 1):
            assert len(sp.levels[k]) == num_kspaces(
                sp.d, sp.desc.e, sp.desc.q, k - 1), (name, k)


def test_frozen_generator_counts():
    expected = {"Q+(5,2)": 30, "Q+(7,2)": 270, "Q(4,2)": 15, "Q(6,2)": 135,
                "Q-(5,2)": 45, "W(3,2)": 15, "W(3,3)": 40, "W(5,2)": 135,
                "H(3,4)": 27, "H(4,4)": 297}
    for name, n in expected.items():
        assert get_space_by_name(name).n_generators == n
    sp = get_space_by_name("W(3,2)")
    assert len(sp.points) == 15
    assert len(get_space_by_name("Q-(5,2)").points) == 27
    assert len(get_space_by_name("Q-(5,2)").levels[2]) == 45


def test_canonical_order_and_index():
    for name in ("W(3,2)", "Q+(5,2)", "H(3,4)"):
        sp = get_space_by_name(name)
        assert sp.generators == sorted(sp.generators)
        for i, g in enumerate(sp.generators):
            assert sp.gen_index[g] == i
        assert sp.points == sorted(sp.points)


def test_pencil_counts_through_points():
    for name in ALL_SPACES:
        sp = get_space_by_name(name)
        expect = pencil_size(sp.d, sp.desc.e, sp.desc.q)
        rows = sp.point_gen_masks()
        assert all(r.bit_count() == expect for r in rows)


def test_generators_through_sampled_subspaces():
    # closed-form count of generators through a fixed m-space
    for name in ("Q+(5,2)", "Q(6,2)", "Q-(5,2)", "H(3,4)", "W(5,2)"):
        sp = get_space_by_name(name)
        for k in range(1, sp.d):
            expect = num_kspaces_through_mspace(
                sp.d, sp.desc.e, sp.desc.q, sp.d - 1, k - 1)
            for rows in sp.levels[k][:5]:
                mu = sp.subspace_point_mask(rows)
                through = sum(
                    1 for pm in sp.gen_point_masks if pm & mu == mu)
                assert through == expect, (name, k)


def test_skew_generator_count_brute_force():
    for name in ("W(3,2)", "W(3,3)", "Q+(5,2)", "Q-(5,2)", "H(3,4)"):
        sp = get_space_by_name(name)
        expect = num_disjoint_from_generator(sp.d, sp.desc.e, sp.desc.q)
        for g in range(0, sp.n_generators, 7):
            skew = sum(1 for h in range(sp.n_generators)
                       if sp.intersection_vdim(g, h) == 0)
            assert skew == expect


def test_distance_oracle():
    sp = get_space_by_name("W(3,2)")
    assert sp.distance(0, 0) == 0
    for g in range(sp.n_generators):
        for h in range(sp.n_generators):
            vd = sp.intersection_vdim(g, h)
            assert sp.distance(g, h) == sp.d - vd
            if g != h and vd == 1:
                assert sp.distance(g, h) == 1
            if vd == 0:
                assert sp.distance(g, h) == 2


def test_hyperbolic_quadric_classes():
    grid = get_space_by_name("Q+(3,2)")
    assert grid.class_labels.count("latin") == 3
    assert grid.class_labels.count("greek") == 3
    # lines of the same regulus are disjoint, opposite reguli meet
    for g in range(6):
        for h in range(6):
            if g == h:
                continue
            same = grid.class_labels[g] == grid.class_labels[h]
            assert same == (grid.intersection_vdim(g, h) == 0)
    for name, half in (("Q+(5,2)", 15), ("Q+(7,2)", 135)):
        sp = get_space_by_name(name)
        assert sp.class_labels.count("latin") == half
        assert sp.class_labels.count("greek") == half
        assert sp.class_labels[0] == "latin"


def test_class_disjointness_parity():
    # odd rank: disjoint generators lie in different classes
    qp5 = get_space_by_name("Q+(5,2)")
    for a in range(qp5.n_generators):
        for b in range(a + 1, qp5.n_generators):
            if qp5.intersection_vdim(a, b) == 0:
                assert qp5.class_labels[a] != qp5.class_labels[b]
    # even rank: disjoint generators lie in the same class
    qp7 = get_space_by_name("Q+(7,2)")
    for a in range(0, qp7.n_generators, 13):
        for b in range(qp7.n_generators):
            if b != a and qp7.intersection_vdim(a, b) == 0:
                assert qp7.class_labels[a] == qp7.class_labels[b]


def test_class_relation_is_transitive_on_samples():
    sp = get_space_by_name("Q+(5,2)")
    n = sp.n_generators
    for a in range(0, n, 4):
        for b in range(0, n, 5):
            for c in range(0, n, 6):
                sab = sp.distance(a, b) % 2 == 0
                sbc = sp.distance(b, c) % 2 == 0
                sac = sp.distance(a, c) % 2 == 0
                if sab and sbc:
                    assert sac


def test_hyperbolic_classes_q62():
    sp = get_space_by_name("Q(6,2)")
    classes = sp.hyperbolic_classes()
    assert len(classes) == 72          # two per hyperbolic section
    assert len(classes) // 2 == 36     # hyperbolic hyperplane count
    assert all(m.bit_count() == 15 for m in classes)
    assert classes == sorted(classes)


def test_hyperbolic_classes_w52_via_parabolic_model():
    sp = get_space_by_name("W(5,2)")
    classes = sp.hyperbolic_classes()
    assert len(classes) == 72
    assert all(m.bit_count() == 15 for m in classes)
    # every generator lies in q^d = 8 of them
    for g in range(sp.n_generators):
        assert sum(1 for m in classes if (m >> g) & 1) == 8


def test_hyperbolic_classes_guards():
    with pytest.raises(GeometryError):
        get_space_by_name("Q(4,2)").hyperbolic_classes()   # even rank
    with pytest.raises(GeometryError):
        get_space_by_name("Q-(5,2)").hyperbolic_classes()  # wrong family


def test_generator_budget_guard():
    with pytest.raises(BudgetError):
        PolarSpace(descriptor("W", 12, 2), generator_budget=10 ** 6)


def test_get_space_caches():
    a = get_space("W", 2, 2)
    b = get_space_by_name("W(3,2)")
    assert a is b
