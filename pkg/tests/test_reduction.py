from fractions import Fraction

import pytest

from modred import (
    ConstituentLabel,
    CuspidalDatum,
    GrothElement,
    LevelIndex,
    LinePoint,
    Segment,
    ZParameter,
    constituents_disjoint,
    cuspidal_line,
    enumerate_index_set,
    euler_check,
    extension_graph_lubin_tate,
    extension_graph_steinberg,
    induced_length_two,
    jacquet_closure_sides,
    jacquet_constituent,
    jacquet_lt_last_block,
    jacquet_steinberg,
    lubin_tate_constituents,
    lubin_tate_label,
    reduce_elliptic,
    semisimple_lattice_graph,
    speh_label,
    speh_never_equals_I0,
    speh_parameter,
    steinberg_constituents,
    steinberg_label,
    steinberg_parameter,
    tensor,
    tensor_pair,
)
from modred.reduction import MixedFactor, SlotFactor, SuperFactor, derived_level

D23 = CuspidalDatum.for_period(2, 3)
RHO = cuspidal_line(D23)

PERIODS = [(2, 2), (2, 3), (2, 5), (3, 3), (3, 5), (5, 5), (3, 2), (5, 2), (5, 3)]


def rho_seg(tw, length):
    return Segment(LinePoint(RHO, Fraction(tw)), length)


# --- Steinberg constituents -------------------------------------------------


def test_below_period_single_centered_label():
    for m, ell in [(2, 3), (3, 7), (5, 11)]:
        d = CuspidalDatum.for_period(m, ell)
        rho = cuspidal_line(d)
        for s in range(1, d.m):
            (label,) = steinberg_constituents(d, s)
            assert label.level == LevelIndex(())
            assert label.param == steinberg_parameter(
                LinePoint(rho, Fraction(1 - s, 2)), s
            )
            assert not label.opaque


def test_m2l3_s5_constituents():
    labels = steinberg_constituents(D23, 5)
    assert [lab.level.entries for lab in labels] == [(), (1,), (2,)]
    st2 = RHO.steinberg(2)
    # level (1): slot cuspidal of size 2 times the superunipotent part of size 3
    assert labels[1].param == ZParameter((rho_seg(0, 3), Segment(LinePoint(st2, 0), 1)))
    assert not labels[1].opaque
    # level (2): opaque slot of size 2 on the size-2 slot line, residual point
    assert labels[2].param == ZParameter((rho_seg(0, 1),))
    assert labels[2].opaque == (SlotFactor(2, 2, Fraction(0)),)
    assert all(lab.total_size() == 5 for lab in labels)


def test_m2l3_s7_levels():
    labels = steinberg_constituents(D23, 7)
    assert [lab.level.entries for lab in labels] == [(), (1,), (2,), (3,), (0, 1)]
    assert all(lab.total_size() == 7 for lab in labels)


def test_one_point_line_uses_opaque_superunipotent():
    d = CuspidalDatum.for_period(3, 3)  # epsilon = 1
    labels = steinberg_constituents(d, 4)
    assert labels[0].opaque == (SuperFactor(4, Fraction(0)),)
    assert labels[0].param == ZParameter()


def test_constituent_count_matches_index_set():
    for m, ell in PERIODS:
        d = CuspidalDatum.for_period(m, ell)
        for s in range(1, 11):
            assert len(steinberg_constituents(d, s)) == len(enumerate_index_set(d, s))


def test_level_additivity():
    for m, ell in PERIODS:
        d = CuspidalDatum.for_period(m, ell)
        for s in range(1, 11):
            for i, lab in zip(enumerate_index_set(d, s), steinberg_constituents(d, s)):
                assert lab.level == i
                assert derived_level(lab) == i


def test_labels_distinct_within_a_list():
    for m, ell in PERIODS:
        d = CuspidalDatum.for_period(m, ell)
        for s in range(1, 11):
            labels = steinberg_constituents(d, s)
            assert len(set(labels)) == len(labels)


# --- mixed (Lubin-Tate type) constituents ------------------------------------


def test_lt_t1_is_speh():
    for s in range(1, 8):
        (label,) = lubin_tate_constituents(D23, s, 1)
        assert label.param == speh_parameter(LinePoint(RHO, Fraction(1 - s, 2)), s)
        assert not label.opaque


def test_lt_s4_t2_single_superunipotent():
    (label,) = lubin_tate_constituents(D23, 4, 2)
    assert label.level == LevelIndex(())
    assert label.opaque == (MixedFactor(2, 2, Fraction(0)),)


def test_lt_s6_t4_two_levels():
    labels = lubin_tate_constituents(D23, 6, 4)
    assert [lab.level.entries for lab in labels] == [(), (1,)]
    lab1 = labels[1]
    st2 = RHO.steinberg(2)
    assert lab1.param == ZParameter((Segment(LinePoint(st2, Fraction(1, 2)), 1),))
    assert lab1.opaque == (MixedFactor(2, 2, Fraction(1)),)
    assert all(lab.total_size() == 6 for lab in labels)


def test_lt_counts():
    for m, ell in PERIODS:
        d = CuspidalDatum.for_period(m, ell)
        for s in range(1, 10):
            for t in range(1, s + 1):
                assert len(lubin_tate_constituents(d, s, t)) == len(
                    enumerate_index_set(d, t - 1)
                )


def test_lt_range_checks():
    with pytest.raises(ValueError):
        lubin_tate_constituents(D23, 4, 0)
    with pytest.raises(ValueError):
        lubin_tate_constituents(D23, 4, 5)


def test_t_equals_s_column_equals_steinberg_sublist():
    # the mixed family at t = s reproduces the Steinberg labels indexed by
    # the smaller index set, as exact label equality
    for m, ell in PERIODS:
        d = CuspidalDatum.for_period(m, ell)
        for s in range(1, 9):
            sub = lubin_tate_constituents(d, s, s)
            full = steinberg_constituents(d, s)
            by_level = {lab.level: lab for lab in full}
            for lab in sub:
                assert lab == by_level[lab.level], (m, ell, s, lab)


# --- Levi restrictions --------------------------------------------------------


def test_jacquet_steinberg_examples():
    a, b = jacquet_steinberg(D23, 3, 1, arrow="left", variant="standard")
    assert (a, b) == (steinberg_label(1, 1), steinberg_label(2, Fraction(-1, 2)))
    a, b = jacquet_steinberg(D23, 4, 2, arrow="right", variant="opposite")
    assert (a, b) == (speh_label(2, 1), speh_label(2, -1))
    a, b = jacquet_steinberg(D23, 4, 2, arrow="right", variant="standard")
    assert (a, b) == (speh_label(2, -1), speh_label(2, 1))


def test_jacquet_steinberg_requires_proper_levi():
    with pytest.raises(ValueError):
        jacquet_steinberg(D23, 3, 3)
    with pytest.raises(ValueError):
        jacquet_steinberg(D23, 3, 0)


def test_jacquet_constituent_level_zero_single_term():
    element = jacquet_constituent(D23, 5, LevelIndex(()), 2)
    ((pair, mult),) = element.items()
    assert mult == 1
    left, right = pair.factors
    assert left.level == LevelIndex(()) and right.level == LevelIndex(())
    assert not left.opaque and not right.opaque


def test_jacquet_constituent_s5_level1_terms():
    element = jacquet_constituent(D23, 5, LevelIndex((1,)), 2)
    terms = element.items()
    assert len(terms) == 2 and all(m == 1 for _, m in terms)
    # one splitting puts the whole slot on the left: slot cuspidal tensor the
    # level-zero superunipotent label of size 3
    st2 = RHO.steinberg(2)
    slot_left = next(
        (pair for pair, _ in terms if pair.factors[0].level == LevelIndex((1,))), None
    )
    assert slot_left is not None
    left, right = slot_left.factors
    assert left.param == ZParameter((Segment(LinePoint(st2, Fraction(0)), 1),))
    assert right.level == LevelIndex(())


def test_jacquet_constituent_validates_index():
    with pytest.raises(ValueError):
        jacquet_constituent(D23, 5, LevelIndex((9,)), 2)
    with pytest.raises(ValueError):
        jacquet_constituent(D23, 5, LevelIndex(()), 5)


def test_jacquet_closure_small_grid():
    for m, ell in [(2, 3), (3, 3), (3, 7)]:
        d = CuspidalDatum.for_period(m, ell)
        for s in range(2, 7):
            for t in range(1, s):
                left, right = jacquet_closure_sides(d, s, t)
                assert left == right, (m, ell, s, t)


# --- graphs -------------------------------------------------------------------


def test_steinberg_graph_shapes():
    g1 = extension_graph_steinberg(D23, 1)
    assert len(g1.vertices) == 1 and g1.edges == ()
    g5 = extension_graph_steinberg(D23, 5)
    assert len(g5.vertices) == 3 and g5.edges == ((0, 1), (1, 2))
    g7 = extension_graph_steinberg(D23, 7)
    assert len(g7.vertices) == 5 and len(g7.edges) == 4
    assert g7.is_path()
    assert [v.level for v in g7.vertices] == enumerate_index_set(D23, 7)


def test_lt_graph_shapes():
    g = extension_graph_lubin_tate(D23, 6, 4)
    assert len(g.vertices) == 2 and g.edges == ((0, 1),)
    g1 = extension_graph_lubin_tate(D23, 6, 1)
    assert len(g1.vertices) == 1 and g1.edges == ()


def test_semisimple_graph_has_no_edges():
    g = semisimple_lattice_graph(D23, steinberg_label(5))
    assert len(g.vertices) == 3 and g.edges == ()
    g2 = semisimple_lattice_graph(D23, lubin_tate_label(4, 6))
    assert len(g2.vertices) == 2 and g2.edges == ()


# --- length-2 products, Euler, disjointness ------------------------------------


def test_induced_length_two():
    r = induced_length_two(D23, 2, 1)
    assert r.element == GrothElement(
        [(lubin_tate_label(1, 2), 1), (lubin_tate_label(2, 2), 1)], context=D23
    )
    assert r.sub == lubin_tate_label(1, 2)
    assert r.quotient == lubin_tate_label(2, 2)


def test_induced_length_two_reversed_family_swaps_roles():
    fwd = induced_length_two(D23, 5, 2)
    rev = induced_length_two(D23, 5, 2, family="rev")
    assert fwd.sub.st == rev.quotient.st == 2
    assert fwd.quotient.st == rev.sub.st == 3
    assert {lab.family for lab in rev.element.labels()} == {"rev"}


def test_euler_identity():
    for m, ell in PERIODS:
        d = CuspidalDatum.for_period(m, ell)
        for s in range(1, 13):
            assert euler_check(d, s), (m, ell, s)


def test_disjointness_examples():
    assert constituents_disjoint(D23, 5, 1, 2)
    with pytest.warns(UserWarning):
        assert not constituents_disjoint(D23, 5, 2, 2)


def test_disjointness_grid():
    for m in (2, 3):
        for ell in (3, 5):
            d = CuspidalDatum.for_period(m, ell)
            for s in range(2, 9):
                for t in range(1, s):
                    for t1 in range(t + 1, s):
                        assert constituents_disjoint(d, s, t, t1), (m, ell, s, t, t1)


def test_speh_never_equals_superunipotent_mixed():
    d5 = CuspidalDatum.for_period(2, 5)
    for a in range(2, 7):
        for t in range(1, a):
            assert speh_never_equals_I0(d5, 8, t, a)
    with pytest.raises(ValueError):
        speh_never_equals_I0(d5, 8, 0, 3)


def test_steinberg_superunipotent_never_speh_off_the_degenerate_period():
    # on lines with more than two points the superunipotent constituent of a
    # Steinberg reduction is never a one-segment label
    for m, ell in [(3, 7), (4, 5), (5, 11)]:
        d = CuspidalDatum.for_period(m, ell)
        for s in range(2, 9):
            label = steinberg_constituents(d, s)[0]
            assert len(label.param) >= 2, (m, ell, s)


def test_period_two_superunipotent_is_speh_shaped():
    # the epsilon = 2 degeneracy: the top constituent is a one-segment label
    for s in range(2, 9):
        label = steinberg_constituents(D23, s)[0]
        assert len(label.param) == 1


def test_reduce_elliptic_speh_irreducible():
    e = reduce_elliptic(D23, speh_label(4, Fraction(1, 2)))
    ((label, mult),) = e.items()
    assert mult == 1
    assert label.param == speh_parameter(LinePoint(RHO, Fraction(1 - 4, 2) + Fraction(1, 2)), 4)


def test_mixed_restriction_worked_example():
    # modulus 3, period 2: the reduction of the (2,1)-arm mixed label is
    # irreducible, and its last-block restriction has length three with the
    # Speh-type label appearing twice
    d = D23
    assert len(lubin_tate_constituents(d, 3, 2)) == 1
    restricted = jacquet_lt_last_block(d, lubin_tate_label(2, 3))
    total = GrothElement.zero(context=d)
    for pair, mult in restricted.items():
        a, b = pair.factors
        total = total + tensor(reduce_elliptic(d, a), reduce_elliptic(d, b)).scale(mult)

    speh_part = ConstituentLabel(d, LevelIndex(()), speh_parameter(LinePoint(RHO, 0), 2))
    st2_part = ConstituentLabel(
        d, LevelIndex((1,)), ZParameter((Segment(LinePoint(RHO.steinberg(2), 0), 1),))
    )
    point = ConstituentLabel(d, LevelIndex(()), ZParameter((rho_seg(1, 1),)))
    expected = GrothElement(
        [(tensor_pair(speh_part, point), 2), (tensor_pair(st2_part, point), 1)], context=d
    )
    assert total == expected


def test_jacquet_lt_last_block_boundaries():
    # pure labels lose exactly one box on the matching side
    e = jacquet_lt_last_block(D23, steinberg_label(3))
    ((pair, _),) = e.items()
    assert pair.factors[0] == steinberg_label(2, Fraction(1, 2))
    assert pair.factors[1] == speh_label(1, -1)
    e = jacquet_lt_last_block(D23, speh_label(3))
    ((pair, _),) = e.items()
    assert pair.factors[0] == speh_label(2, Fraction(-1, 2))
    assert pair.factors[1] == speh_label(1, 1)
