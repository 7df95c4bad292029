"""Segments and parameters on the twist lines of a cuspidal datum.

A line is the orbit of a cuspidal base under integer twists; it has epsilon
points (one point when epsilon = 1), and we allow half-integer twists
throughout, so a point is (line, twist mod epsilon) with twist in (1/2)Z.

Three kinds of line occur:
  * the supercuspidal line of the datum ("rho"),
  * the superunipotent line ("1"), used before transfer onto "rho",
  * derived lines: the cuspidal-but-not-supercuspidal points obtained as the
    generalized Steinberg of sigma consecutive points of a parent line, for
    sigma = m * ell**u.  Integer twists act trivially there (epsilon = 1),
    only the half-twist parity survives.

A derived point with twist tau denotes the Steinberg built on the sigma
consecutive parent points tau, tau+1, ..., tau+sigma-1; expanding every such
point back to its parent cycle is the supercuspidal normal form a_sc, and
collapsing maximal cycles is the restricted normal form a_rst.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .base_arith import CuspidalDatum


class ParameterError(ValueError):
    pass


def is_cuspidal_size(sigma: int, m: int, ell: int) -> bool:
    """True iff sigma = m * ell**u for some u >= 0 (the sizes at which the
    generalized Steinberg of a cuspidal stays cuspidal)."""
    if sigma < m or sigma % m:
        return False
    t = sigma // m
    while t % ell == 0:
        t //= ell
    return t == 1


@dataclass(frozen=True)
class Line:
    datum: CuspidalDatum
    tag: str  # "rho" | "one" | "st"
    origin: tuple["Line", int] | None = None  # ("st" only) parent line and sigma

    def __post_init__(self):
        if self.tag not in ("rho", "one", "st"):
            raise ParameterError(f"unknown line tag {self.tag!r}")
        if (self.tag == "st") != (self.origin is not None):
            raise ParameterError("derived lines and only derived lines carry an origin")

    @property
    def epsilon(self) -> int:
        # integer twists act trivially on a derived cuspidal point
        return 1 if self.tag == "st" else self.datum.epsilon

    @property
    def ell(self) -> int:
        return self.datum.ell

    @property
    def m(self) -> int:
        return self.epsilon if self.epsilon > 1 else self.ell

    @property
    def box_multiplier(self) -> int:
        """Length of one point of this line, counted in points of the base line."""
        if self.tag == "st":
            parent, sigma = self.origin
            return sigma * parent.box_multiplier
        return 1

    def steinberg(self, sigma: int) -> "Line":
        """The derived line of Steinbergs of sigma consecutive points of self."""
        if sigma == 1:
            return self
        if not is_cuspidal_size(sigma, self.m, self.ell):
            raise ParameterError(
                f"sigma = {sigma} is not of the cuspidal form m*ell**u over this line"
            )
        return Line(self.datum, "st", (self, sigma))

    def sort_key(self):
        if self.tag == "st":
            parent, sigma = self.origin
            return parent.sort_key() + (sigma,)
        return (0 if self.tag == "rho" else 1,)

    @property
    def name(self) -> str:
        if self.tag == "rho":
            return "rho"
        if self.tag == "one":
            return "1"
        parent, sigma = self.origin
        return f"St_{sigma}({parent.name})"

    def __repr__(self):
        return f"Line({self.name})"


def cuspidal_line(datum: CuspidalDatum) -> Line:
    return Line(datum, "rho")


def unit_line(datum: CuspidalDatum) -> Line:
    return Line(datum, "one")


@dataclass(frozen=True)
class LinePoint:
    line: Line
    twist: Fraction = Fraction(0)

    def __post_init__(self):
        t = Fraction(self.twist)
        if t.denominator not in (1, 2):
            raise ParameterError(f"twist {t} is not a half-integer")
        object.__setattr__(self, "twist", t % self.line.epsilon)

    def shift(self, n) -> "LinePoint":
        return LinePoint(self.line, self.twist + Fraction(n))

    @property
    def parity(self) -> Fraction:
        """Class of the twist modulo 1 (0 or 1/2)."""
        return self.twist % 1

    def sort_key(self):
        return self.line.sort_key() + (self.twist,)

    def __repr__(self):
        if self.twist == 0:
            return f"{self.line.name}"
        return f"{self.line.name}{{{self.twist}}}"


@dataclass(frozen=True)
class Segment:
    start: LinePoint
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ParameterError("segments have length >= 1")

    def points(self) -> list[LinePoint]:
        return [self.start.shift(j) for j in range(self.length)]

    def shift(self, n) -> "Segment":
        return Segment(self.start.shift(n), self.length)

    def sort_key(self):
        return self.start.sort_key() + (self.length,)

    def __repr__(self):
        return f"({self.start!r}, {self.length})"


@dataclass(frozen=True)
class ZParameter:
    """A multiset of segments, stored sorted; the canonical label of an irreducible."""

    segments: tuple[Segment, ...] = ()

    def __post_init__(self):
        segs = tuple(sorted(self.segments, key=Segment.sort_key))
        object.__setattr__(self, "segments", segs)

    def __iter__(self):
        return iter(self.segments)

    def __len__(self):
        return len(self.segments)

    def __add__(self, other: "ZParameter") -> "ZParameter":
        return ZParameter(self.segments + other.segments)

    def shift(self, n) -> "ZParameter":
        return ZParameter(tuple(s.shift(n) for s in self.segments))

    def box_count(self) -> int:
        """Total size in points of the base line (segments on derived lines count sigma-fold)."""
        return sum(s.length * s.start.line.box_multiplier for s in self.segments)

    def support(self) -> Counter:
        """Multiset of covered points, per line."""
        c = Counter()
        for seg in self.segments:
            c.update(seg.points())
        return c

    def sort_key(self):
        return tuple(s.sort_key() for s in self.segments)

    def __repr__(self):
        return "{" + ", ".join(repr(s) for s in self.segments) + "}"


def twist(param: ZParameter, n) -> ZParameter:
    """Shift every start twist by n (a half-integer); twisting by epsilon is the identity."""
    return param.shift(n)


def segment(point: LinePoint, length: int) -> Segment:
    return Segment(point, length)


def steinberg_parameter(point: LinePoint, s: int) -> ZParameter:
    """s singleton segments at the consecutive points point, point+1, ..., point+s-1."""
    return ZParameter(tuple(Segment(point.shift(j), 1) for j in range(s)))


def speh_parameter(point: LinePoint, s: int) -> ZParameter:
    """The single segment of length s starting at point."""
    return ZParameter((Segment(point, s),))


# ---------------------------------------------------------------------------
# cycles and the two normal forms


def _group_key(seg: Segment):
    return (seg.start.line, seg.length, seg.start.parity)


def is_cycle(segments) -> bool:
    """True iff the equal-length segments start at sigma = m*ell**u consecutive points.

    Consecutive means integer steps of a common parity class; modulo epsilon
    the starts must cover every point of the line uniformly sigma/epsilon times.
    """
    segs = list(segments)
    if not segs:
        return False
    lengths = {s.length for s in segs}
    if len(lengths) != 1:
        raise ParameterError("cycle candidates must share one length")
    lines = {s.start.line for s in segs}
    parities = {s.start.parity for s in segs}
    if len(lines) != 1 or len(parities) != 1:
        return False
    line = lines.pop()
    sigma = len(segs)
    if not is_cuspidal_size(sigma, line.m, line.ell):
        return False
    counts = Counter(s.start.twist for s in segs)
    return len(counts) == line.epsilon and len(set(counts.values())) == 1


def _extract_cycles(line: Line, length: int, parity: Fraction, starts: Counter):
    """Greedily pull maximal cycles out of a multiset of starts on one line.

    starts maps the integer residue (twist - parity) mod epsilon to its count.
    Yields collapsed segments on the derived line; mutates starts in place.
    """
    eps, m, ell = line.epsilon, line.m, line.ell
    while len(starts) == eps and min(starts.values()) > 0:
        layers = min(starts.values())  # copies available of each residue
        # largest sigma = m * ell**u whose per-residue usage sigma/eps fits
        usage = m // eps if eps > 1 else m
        if usage > layers:
            break
        while usage * ell <= layers:
            usage *= ell
        sigma = usage * eps
        for r in list(starts):
            starts[r] -= usage
            if starts[r] == 0:
                del starts[r]
        derived = line.steinberg(sigma)
        yield Segment(LinePoint(derived, parity), length)


def to_restricted(param: ZParameter) -> ZParameter:
    """Collapse maximal cycles until none remain (the restricted normal form a_rst).

    Cycles are taken greedily from the longest admissible size down; collapsed
    segments land on derived lines and are themselves rescanned, so the output
    contains no cycle on any line.
    """
    segs = list(param.segments)
    while True:
        groups: dict = {}
        for s in segs:
            groups.setdefault(_group_key(s), []).append(s)
        out, changed = [], False
        for (line, length, parity), members in groups.items():
            starts = Counter((s.start.twist - parity) % max(line.epsilon, 1) for s in members)
            collapsed = list(_extract_cycles(line, length, parity, starts))
            if collapsed:
                changed = True
            out.extend(collapsed)
            for r, c in starts.items():
                pt = LinePoint(line, r + parity)
                out.extend([Segment(pt, length)] * c)
        segs = out
        if not changed:
            return ZParameter(tuple(segs))


def _expand_segment(seg: Segment) -> list[Segment]:
    line = seg.start.line
    if line.tag != "st":
        return [seg]
    parent, sigma = line.origin
    out = []
    for i in range(sigma):
        out.extend(_expand_segment(Segment(LinePoint(parent, seg.start.twist + i), seg.length)))
    return out


def to_supercuspidal(param: ZParameter) -> ZParameter:
    """Expand every derived-line segment into its parent cycle (the normal form a_sc).

    A derived point at twist tau expands to the sigma parent points tau, ...,
    tau + sigma - 1; the result is independent of the representative of tau
    because sigma is a multiple of the parent epsilon.  Every derived line
    carries its origin by construction, so the expansion is always defined.
    """
    out = []
    for seg in param.segments:
        out.extend(_expand_segment(seg))
    return ZParameter(tuple(out))


def boxtimes(super_param: ZParameter, target: CuspidalDatum) -> ZParameter:
    """Pointwise transfer of a parameter on the superunipotent line onto the rho line."""
    rho = cuspidal_line(target)
    segs = []
    for seg in super_param.segments:
        if seg.start.line.tag != "one" or seg.start.line.datum != target:
            raise ParameterError("boxtimes expects a parameter on the unit line of the target datum")
        segs.append(Segment(LinePoint(rho, seg.start.twist), seg.length))
    return ZParameter(tuple(segs))
