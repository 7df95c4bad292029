"""Closed form of the duality on a single-segment label, and the top
superunipotent constituent of a generalized Steinberg obtained from it.

On a line with epsilon points the dual of the length-s segment label at a
given start is an explicit multisegment: writing s = q(epsilon - 1) + r with
0 <= r < epsilon - 1, it consists of r segments of length q + 1 and
epsilon - 1 - r segments of length q, placed so that the covered points are
exactly the s consecutive points of the input segment.  Length-0 segments
are dropped.  For s <= epsilon - 1 this degenerates to s singleton segments
at the input points, i.e. the Steinberg-type label on the same support.

epsilon = 2 is the one case the general expression does not cover: there the
dual is again a single segment, on the same support, hence shifted by one
exactly when s is even.  (The shift on the odd side instead would move the
support off the input segment and contradict both support conservation and
the standard Levi-restriction formulas; see the repository notes.)

epsilon = 1 admits no closed form here; callers keep those labels opaque.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .base_arith import CuspidalDatum
from .zelevinski import (
    LinePoint,
    Segment,
    ZParameter,
    boxtimes,
    unit_line,
)


class InvolutionUndefined(ValueError):
    """No explicit single-segment dual is available (epsilon = 1)."""


def involute_single_segment(base: LinePoint, s: int, epsilon: int | None = None) -> ZParameter:
    """Dual of the single-segment label (base, s) as an explicit parameter."""
    if s < 1:
        raise ValueError("segment length must be positive")
    eps = base.line.epsilon
    if epsilon is not None and epsilon != eps:
        raise ValueError(f"epsilon = {epsilon} does not match the line (epsilon {eps})")
    if eps == 1:
        raise InvolutionUndefined("no explicit dual on a one-point line")
    if eps == 2:
        if s % 2 == 0:
            return ZParameter((Segment(base.shift(1), s),))
        return ZParameter((Segment(base, s),))
    q, r = divmod(s, eps - 1)
    segs = []
    for j in range(r):
        segs.append(Segment(base.shift(j - q), q + 1))
    if q > 0:
        for j in range(r + 1, eps):
            segs.append(Segment(base.shift(j - q), q))
    return ZParameter(tuple(segs))


@lru_cache(maxsize=None)
def superunipotent_constituent_steinberg(datum: CuspidalDatum, t: int) -> ZParameter:
    """The unique superunipotent constituent of the size-(t+1) Steinberg reduction.

    Computed as the dual of the centered one-segment label of size t + 1 on
    the unit line (whose epsilon is that of the datum), transferred onto the
    rho line.  Starting the dual at the centered start twist -t/2 makes the
    output support coincide with the t + 1 centered points, so no further
    normalization is needed.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    s = t + 1
    base = LinePoint(unit_line(datum), Fraction(1 - s, 2))
    return boxtimes(involute_single_segment(base, s), datum)
