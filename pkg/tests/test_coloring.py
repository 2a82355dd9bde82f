import random
from itertools import combinations

import pytest

import oracles
from stingycolor import (
    Coloring,
    ColoringProperty,
    GuardExceededError,
    Guards,
    PartitionError,
    PropertyUnsatisfiableError,
    all_graphs,
    b_r,
    bounded_stats,
    check_complete_condition,
    check_frame3_sufficiency,
    chi_p,
    chromatic_number,
    complete,
    cycle,
    empty,
    enumerate_colorings,
    enumerate_optimal_colorings,
    er_random,
    independence_number,
    is_frame_property,
    is_proper,
    is_singleton_friendly,
    one_optimal_coloring,
    path,
    petersen,
    stats,
)
from stingycolor.coloring import merge_singletons


def canon_set(colorings):
    return {frozenset(frozenset(cls) for cls in c.classes) for c in colorings}


# --- Coloring basics --------------------------------------------------------


def test_canonical_order():
    c = Coloring.of([[4], [1, 3], [0, 2]])
    assert c.classes == ((4,), (0, 2), (1, 3))
    assert c.frame() == (1, 2, 2)
    assert c.small() == 5


def test_coloring_rejects_overlap_and_empty():
    with pytest.raises(ValueError, match="overlap"):
        Coloring.of([[0, 1], [1, 2]])
    with pytest.raises(ValueError, match="empty"):
        Coloring.of([[0], []])


def test_is_proper(c5):
    assert is_proper(c5, Coloring.of([[0, 2], [1, 3], [4]]))
    assert not is_proper(c5, Coloring.of([[0, 1], [2, 3], [4]]))
    assert is_proper(complete(1), Coloring.of([[0]]))


def test_is_proper_partition_error(c5):
    with pytest.raises(PartitionError):
        is_proper(c5, Coloring.of([[0, 2], [1, 3]]))
    with pytest.raises(PartitionError):
        is_proper(c5, Coloring.of([[0, 2], [1, 3], [4, 5]]))


# --- chromatic number -------------------------------------------------------


def test_chromatic_examples(c5, k4, pete):
    assert chromatic_number(k4) == 4
    assert chromatic_number(c5) == 3
    assert chromatic_number(pete) == 3
    assert chromatic_number(empty(0)) == 0
    assert chromatic_number(empty(7)) == 1


def test_chromatic_matches_oracle_small():
    for n in range(0, 6):
        for g in all_graphs(n):
            assert chromatic_number(g) == oracles.chromatic_number_oracle(g)


def test_chromatic_petersen_via_oracle(pete):
    assert oracles.chromatic_number_oracle(pete) == 3


# --- optimal coloring enumeration -------------------------------------------


def test_enumerate_k3_single():
    got = list(enumerate_optimal_colorings(complete(3)))
    assert [c.classes for c in got] == [((0,), (1,), (2,))]


def test_enumerate_c4_single():
    got = list(enumerate_optimal_colorings(cycle(4)))
    assert [c.classes for c in got] == [((0, 2), (1, 3))]


def test_enumerate_c5(c5):
    got = list(enumerate_optimal_colorings(c5))
    assert len(got) == 5
    assert all(c.frame() == (1, 2, 2) for c in got)


def test_enumeration_matches_oracle_and_is_unique():
    for n in range(0, 6):
        for g in all_graphs(n):
            got = list(enumerate_optimal_colorings(g))
            assert len(got) == len(canon_set(got))  # each exactly once
            assert canon_set(got) == oracles.optimal_colorings_oracle(g)


def test_enumeration_deterministic(c5):
    first = [c.classes for c in enumerate_optimal_colorings(c5)]
    second = [c.classes for c in enumerate_optimal_colorings(c5)]
    assert first == second


def test_enumeration_guard():
    g = empty(11)
    with pytest.raises(GuardExceededError):
        list(enumerate_optimal_colorings(g))
    with pytest.raises(GuardExceededError):
        list(enumerate_colorings(empty(9)))
    # guards are configurable
    assert len(list(enumerate_colorings(empty(3), Guards(full=3)))) == 5


# --- stinginess -------------------------------------------------------------


def test_stats_examples(c5, pete):
    assert stats(complete(5)).iota == 5
    assert stats(c5).iota == 1
    assert stats(pete).iota == 0
    assert stats(empty(0)).iota == 0


def test_stats_witness_is_valid(c5):
    st = stats(c5)
    assert is_proper(c5, st.stingy_witness)
    assert len(st.stingy_witness) == st.chi
    assert len(st.stingy_witness.singleton_vertices()) == st.iota


def test_stats_matches_enumeration_oracle():
    for n in range(0, 6):
        for g in all_graphs(n):
            st = stats(g)
            assert st.iota == oracles.iota_oracle(g)
            # second, in-package route: maximize over the enumeration stream
            via_enum = max(
                (len(c.singleton_vertices()) for c in enumerate_optimal_colorings(g)),
                default=0,
            )
            assert st.iota == via_enum


def test_iota_at_most_chi_and_singletons_adjacent():
    for n in range(1, 6):
        for g in all_graphs(n):
            st = stats(g)
            assert st.iota <= st.chi
            for c in enumerate_optimal_colorings(g):
                singles = c.singleton_vertices()
                for a, b in combinations(singles, 2):
                    assert g.has_edge(a, b)


# --- r-bounded --------------------------------------------------------------


def test_bounded_examples(c5, k4):
    bs = bounded_stats(c5, 2)
    assert (bs.chi_r, bs.m_r, bs.iota_r) == (3, 2, 1)
    bs = bounded_stats(cycle(6), 3)
    assert (bs.chi_r, bs.m_r, bs.iota_r) == (2, 2, 0)
    for r in (1, 2, 3, 4):
        bs = bounded_stats(k4, r)
        assert bs.chi_r == 4 and bs.iota_r == 4
        assert bs.m_r == (4 if r == 1 else 0)


def test_bounded_witnesses(c5):
    bs = bounded_stats(c5, 2)
    for witness in (bs.m_witness, bs.iota_witness):
        assert is_proper(c5, witness)
        assert len(witness) == bs.chi_r
        assert max(len(cls) for cls in witness.classes) <= 2
    assert sum(1 for cls in bs.m_witness.classes if len(cls) == 2) == bs.m_r
    assert len(bs.iota_witness.singleton_vertices()) == bs.iota_r


def test_bounded_matches_oracle():
    for n in range(1, 6):
        for g in all_graphs(n):
            for r in (1, 2, 3):
                bs = bounded_stats(g, r)
                assert (bs.chi_r, bs.m_r, bs.iota_r) == oracles.bounded_oracle(g, r)


def test_chi_r_monotonicity():
    for n in range(1, 6):
        for g in all_graphs(n):
            chi = chromatic_number(g)
            alpha = independence_number(g)
            values = [chromatic_number(g, cap=r) for r in range(1, n + 2)]
            assert values[0] == g.n
            assert all(a >= b for a, b in zip(values, values[1:]))
            for r in range(alpha, n + 2):
                assert chromatic_number(g, cap=r) == chi


def test_one_optimal_coloring_seeded(c5):
    det = one_optimal_coloring(c5)
    assert is_proper(c5, det) and len(det) == 3
    a = one_optimal_coloring(c5, rng=random.Random(5))
    b = one_optimal_coloring(c5, rng=random.Random(5))
    assert a == b
    assert is_proper(c5, a) and len(a) == 3
    capped = one_optimal_coloring(petersen(), cap=2, rng=random.Random(1))
    assert max(len(cls) for cls in capped.classes) <= 2
    assert len(capped) == chromatic_number(petersen(), cap=2)


# --- chi_P ------------------------------------------------------------------


def test_chi_p_b1_is_order(c5):
    value, witness = chi_p(c5, b_r(1))
    assert value == 5
    assert witness.frame() == (1, 1, 1, 1, 1)


def test_chi_p_all_is_chi(c5):
    prop = ColoringProperty(lambda c: True, "all")
    assert chi_p(c5, prop)[0] == 3


def test_chi_p_b2_c5(c5):
    assert chi_p(c5, b_r(2))[0] == 3


def test_chi_p_unsatisfiable(c5):
    with pytest.raises(PropertyUnsatisfiableError):
        chi_p(c5, ColoringProperty(lambda c: False, "never"))


def test_chi_p_agrees_with_bounded_stats():
    for n in range(1, 6):
        for g in all_graphs(n):
            for r in (1, 2, 3):
                assert chi_p(g, b_r(r))[0] == bounded_stats(g, r).chi_r


# --- property framework -----------------------------------------------------


def test_b_r_flags():
    assert b_r(1).declared_frame_property
    assert not b_r(1).declared_singleton_friendly
    assert b_r(2).declared_singleton_friendly
    with pytest.raises(ValueError):
        b_r(0)


def test_b_r_predicate(c5):
    assert b_r(2)(Coloring.of([[0, 2], [1, 3], [4]]))
    assert not b_r(2)(Coloring.of([[0, 2, 4], [1, 3, 5]]))
    assert b_r(3)(Coloring.of([[0, 2, 4], [1, 3, 5]]))


def test_b_r_passes_checks_small():
    for n in range(0, 5):
        for g in all_graphs(n):
            for r in (2, 3):
                assert is_frame_property(g, b_r(r))
                assert is_singleton_friendly(g, b_r(r))
                assert check_frame3_sufficiency(g, b_r(r))


def test_vertex_pinning_is_not_frame_property(c5):
    prop = ColoringProperty(
        lambda c: any(cls == (0,) for cls in c.classes), "v0-singleton"
    )
    assert not is_frame_property(c5, prop)


def test_empty_property_trivially_passes(c5):
    prop = ColoringProperty(lambda c: False, "empty")
    assert is_frame_property(c5, prop)
    assert is_singleton_friendly(c5, prop)
    assert check_frame3_sufficiency(c5, prop)
    assert check_complete_condition(c5, prop)


def test_b1_not_singleton_friendly_on_p3():
    p3 = path(3)
    assert not is_singleton_friendly(p3, b_r(1))


def test_merge_singletons():
    c = Coloring.of([[0], [2], [1, 3]])
    merged = merge_singletons(c, 0, 2)
    assert merged.classes == ((0, 2), (1, 3))
    with pytest.raises(ValueError):
        merge_singletons(c, 0, 1)


def test_at_most_one_singleton_on_c5(c5):
    """A frame property that is singleton-friendly yet fails both the
    frame>=3 sufficient condition and the (small, frame>=3) condition: the
    sufficient condition is genuinely not necessary, and the claimed
    equivalence genuinely fails here."""
    prop = ColoringProperty(
        lambda c: len(c.singleton_vertices()) <= 1, "at-most-1-singleton"
    )
    assert is_frame_property(c5, prop)
    assert is_singleton_friendly(c5, prop)
    assert not check_frame3_sufficiency(c5, prop)
    assert not check_complete_condition(c5, prop)


def test_p4_complete_condition_study(p4):
    """Exhaustive study over all predicates on P4's five colorings.

    P4 has colorings with frames (1,1,1,1), (1,1,2) x3, (2,2); all share
    small-count 4 and empty frame>=3, so the (small, frame>=3) condition
    only accepts the empty and full predicates. But the bipartition-only
    predicate and its union with the (1,1,2) class are frame properties and
    vacuously singleton-friendly, so the claimed equivalence fails for
    exactly those two predicates. The frame>=3 implication never fails.
    """
    colorings = list(enumerate_colorings(p4))
    assert len(colorings) == 5
    assert sorted(c.frame() for c in colorings) == [
        (1, 1, 1, 1), (1, 1, 2), (1, 1, 2), (1, 1, 2), (2, 2)]

    bipartition = Coloring.of([[0, 2], [1, 3]])
    two_frames = frozenset(c for c in colorings if c.frame() != (1, 1, 1, 1))
    expected_mismatches = {frozenset([bipartition]), two_frames}

    mismatches = set()
    for picks in range(1 << len(colorings)):
        chosen = frozenset(c for i, c in enumerate(colorings) if picks >> i & 1)
        prop = ColoringProperty(lambda c, s=chosen: c in s, f"subset-{picks}")
        fp = is_frame_property(p4, prop)
        sf = is_singleton_friendly(p4, prop)
        f3 = check_frame3_sufficiency(p4, prop)
        cc = check_complete_condition(p4, prop)
        if f3:
            assert fp and sf
        if cc != (fp and sf):
            assert fp and sf and not cc  # only this direction can break
            mismatches.add(chosen)
    assert mismatches == expected_mismatches


def test_k3_has_single_coloring_and_no_mismatch():
    k3 = complete(3)
    colorings = list(enumerate_colorings(k3))
    assert len(colorings) == 1
    for chosen in (frozenset(), frozenset(colorings)):
        prop = ColoringProperty(lambda c, s=chosen: c in s, "subset")
        both = is_frame_property(k3, prop) and is_singleton_friendly(k3, prop)
        assert check_complete_condition(k3, prop) == both
        assert check_frame3_sufficiency(k3, prop) == both


# --- closure of the property families ---------------------------------------


def _random_frame_property(g, colorings, rng):
    frames = sorted({c.frame() for c in colorings})
    chosen = frozenset(f for f in frames if rng.random() < 0.5)
    return ColoringProperty(lambda c: c.frame() in chosen, "rand-frame")


def _merge_closed_frames(g, colorings, seed_frames):
    """Close a frame set under the merges actually available on g."""
    closed = set(seed_frames)
    changed = True
    while changed:
        changed = False
        for c in colorings:
            if c.frame() not in closed:
                continue
            singles = c.singleton_vertices()
            for a, b in combinations(singles, 2):
                if g.has_edge(a, b):
                    continue
                f = merge_singletons(c, a, b).frame()
                if f not in closed:
                    closed.add(f)
                    changed = True
    return closed


def test_frame_properties_closed_under_union_and_intersection(c5):
    colorings = list(enumerate_colorings(c5))
    rng = random.Random(101)
    for _ in range(25):
        p1 = _random_frame_property(c5, colorings, rng)
        p2 = _random_frame_property(c5, colorings, rng)
        union = ColoringProperty(lambda c: p1(c) or p2(c), "union")
        inter = ColoringProperty(lambda c: p1(c) and p2(c), "inter")
        assert is_frame_property(c5, union)
        assert is_frame_property(c5, inter)


def test_singleton_friendly_closed_under_union_and_intersection(c5):
    colorings = list(enumerate_colorings(c5))
    frames = sorted({c.frame() for c in colorings})
    rng = random.Random(202)

    def random_sffp():
        seed_frames = [f for f in frames if rng.random() < 0.5]
        closed = _merge_closed_frames(c5, colorings, seed_frames)
        return ColoringProperty(lambda c: c.frame() in closed, "rand-sffp")

    for _ in range(25):
        p1, p2 = random_sffp(), random_sffp()
        assert is_frame_property(c5, p1) and is_singleton_friendly(c5, p1)
        union = ColoringProperty(lambda c: p1(c) or p2(c), "union")
        inter = ColoringProperty(lambda c: p1(c) and p2(c), "inter")
        for combined in (union, inter):
            assert is_frame_property(c5, combined)
            assert is_singleton_friendly(c5, combined)


# --- guards -----------------------------------------------------------------


def test_stats_guard():
    with pytest.raises(GuardExceededError):
        stats(er_random(11, 0.5, seed=3))
    with pytest.raises(GuardExceededError):
        bounded_stats(er_random(11, 0.5, seed=3), 2)
    with pytest.raises(GuardExceededError):
        chi_p(er_random(9, 0.5, seed=3), b_r(2))
