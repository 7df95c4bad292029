from collections import Counter
from fractions import Fraction

import pytest

from modred import (
    CuspidalDatum,
    InvolutionUndefined,
    LinePoint,
    Segment,
    ZParameter,
    cuspidal_line,
    involute_single_segment,
    steinberg_parameter,
    superunipotent_constituent_steinberg,
)


def datum_eps(eps, ell=13):
    return CuspidalDatum(g=1, ell=ell, epsilon=eps)


def base_point(eps, tw=0):
    return LinePoint(cuspidal_line(datum_eps(eps)), Fraction(tw))


def lengths(param):
    return sorted(s.length for s in param)


def test_small_s_gives_consecutive_singletons():
    # s <= eps - 1 degenerates to the Steinberg-type label on the same
    # support, starting at the base; the boundary s = eps - 1 included
    for eps in range(3, 8):
        for s in range(1, eps):
            base = base_point(eps)
            out = involute_single_segment(base, s)
            assert out == steinberg_parameter(base, s), (eps, s)


def test_eps3_s4_two_segments():
    base = base_point(3)
    out = involute_single_segment(base, 4)
    assert out == ZParameter((Segment(base.shift(-1), 2), Segment(base, 2)))


def test_eps3_s3_mixed_lengths():
    base = base_point(3)
    out = involute_single_segment(base, 3)
    assert out == ZParameter((Segment(base.shift(-1), 2), Segment(base.shift(1), 1)))


def test_eps2_parity_rule():
    # single segment either fixed (s odd) or shifted by one (s even): the
    # orientation is the one conserving the covered support
    base = base_point(2)
    assert involute_single_segment(base, 5) == ZParameter((Segment(base, 5),))
    assert involute_single_segment(base, 4) == ZParameter((Segment(base.shift(1), 4),))


def test_eps2_rule_is_involutive():
    base = base_point(2)
    for s in range(1, 12):
        once = involute_single_segment(base, s)
        (seg,) = once.segments
        twice = involute_single_segment(seg.start, s)
        assert twice == ZParameter((Segment(base, s),))


def test_eps1_rejected():
    base = base_point(1, 0)
    with pytest.raises(InvolutionUndefined):
        involute_single_segment(base, 3)


def test_epsilon_argument_must_match_line():
    with pytest.raises(ValueError):
        involute_single_segment(base_point(3), 2, epsilon=4)


def test_box_and_support_conservation():
    for eps in range(2, 13):
        base = base_point(eps, Fraction(1, 2))
        for s in range(1, 61):
            out = involute_single_segment(base, s)
            assert out.box_count() == s
            assert out.support() == Counter(Segment(base, s).points())


def test_superunipotent_constituent_t0():
    d = CuspidalDatum.for_period(2, 3)
    rho = cuspidal_line(d)
    assert superunipotent_constituent_steinberg(d, 0) == ZParameter((Segment(LinePoint(rho, 0), 1),))


def test_superunipotent_small_s_is_centered_steinberg():
    # below the period the reduction is irreducible, equal to the centered
    # Steinberg-type label
    d = CuspidalDatum.for_period(3, 7)
    rho = cuspidal_line(d)
    for t in range(0, d.m - 1):
        s = t + 1
        got = superunipotent_constituent_steinberg(d, t)
        assert got == steinberg_parameter(LinePoint(rho, Fraction(1 - s, 2)), s)


def test_superunipotent_eps3_t3():
    d = CuspidalDatum.for_period(3, 7)
    rho = cuspidal_line(d)
    got = superunipotent_constituent_steinberg(d, 3)
    want = ZParameter(
        (
            Segment(LinePoint(rho, Fraction(1, 2)), 2),
            Segment(LinePoint(rho, Fraction(3, 2)), 2),
        )
    )
    assert got == want


def test_superunipotent_support_is_centered():
    # output support matches the centered consecutive points, all epsilon
    for m, ell in [(2, 3), (3, 7), (4, 5), (2, 5)]:
        d = CuspidalDatum.for_period(m, ell)
        rho = cuspidal_line(d)
        for t in range(0, 9):
            got = superunipotent_constituent_steinberg(d, t)
            centered = Segment(LinePoint(rho, Fraction(-t, 2)), t + 1)
            assert got.support() == Counter(centered.points()), (m, ell, t)
            assert got.box_count() == t + 1
