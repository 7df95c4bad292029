"""Irreducible constituents of the mod-ell reductions of generalized Steinberg
and mixed Steinberg-by-Speh (Lubin-Tate type) labels, their Levi restrictions,
and the extension graphs of the induction lattices.

The reduction of the size-s Steinberg has one constituent per element i of
the level index set of size s.  The level-i constituent is a product of
pairwise cuspidal-distinct factors, hence irreducible, and is stored as a
canonical label: the explicit factors merge into one restricted parameter,
while factors with no closed form stay as opaque tags:

  * SlotFactor  -- a superunipotent label of size >= 2 transferred onto a
    derived cuspidal line (only the half-twist parity of the slot survives);
  * SuperFactor -- a superunipotent constituent on a one-point base line
    (epsilon = 1), where the single-segment dual has no closed form;
  * MixedFactor -- the superunipotent constituent of a mixed label with both
    arms nonempty, which is never a Speh label (this is what makes the tags
    faithful for the disjointness checks, see speh_never_equals_I0).

Sizes degenerate: a slot of size 1 is the slot cuspidal itself, a mixed
factor with trivial Steinberg arm is an explicit Speh label, one with trivial
Speh arm is the explicit Steinberg superunipotent constituent.  The factories
below normalize all of that, so label equality is canonical-form equality.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .base_arith import CuspidalDatum
from .grothendieck import GrothElement, TensorLabel, tensor, tensor_pair
from .involution import InvolutionUndefined, superunipotent_constituent_steinberg
from .levels import LevelIndex, enumerate_index_set, index_width, s_rho
from .zelevinski import (
    Line,
    LinePoint,
    Segment,
    ZParameter,
    cuspidal_line,
    speh_parameter,
    steinberg_parameter,
    to_restricted,
    to_supercuspidal,
)


# ---------------------------------------------------------------------------
# integral-side elliptic labels


@dataclass(frozen=True)
class EllipticLabel:
    """Characteristic-zero elliptic label with st boxes of Steinberg arm out of total.

    st = total is the generalized Steinberg, st = 1 the Speh label; in
    between, the unique irreducible subspace of the length-2 twisted product.
    family "rev" is the mirrored (Speh-by-Steinberg) family.
    """

    st: int
    total: int
    twist: Fraction = Fraction(0)
    family: str = "fwd"

    def __post_init__(self):
        if not 1 <= self.st <= self.total:
            raise ValueError(f"need 1 <= st <= total, got {self.st}, {self.total}")
        if self.family not in ("fwd", "rev"):
            raise ValueError("family is 'fwd' or 'rev'")
        object.__setattr__(self, "twist", Fraction(self.twist))

    @property
    def speh_arm(self) -> int:
        return self.total - self.st

    def shift(self, n) -> "EllipticLabel":
        return EllipticLabel(self.st, self.total, self.twist + Fraction(n), self.family)

    def sort_key(self):
        return (self.family, self.total, self.st, self.twist)

    def __repr__(self):
        tw = "" if self.twist == 0 else f"{{{self.twist}}}"
        if self.st == self.total:
            return f"[<-{self.st - 1}]{tw}"
        if self.st == 1:
            return f"[->{self.total - 1}]{tw}"
        body = f"<-{self.st - 1},->{self.speh_arm}"
        if self.family == "rev":
            body = f"->{self.speh_arm},<-{self.st - 1}"
        return f"[{body}]{tw}"


def steinberg_label(s: int, tw=0) -> EllipticLabel:
    return EllipticLabel(s, s, Fraction(tw))


def speh_label(s: int, tw=0) -> EllipticLabel:
    return EllipticLabel(1, s, Fraction(tw))


def lubin_tate_label(t: int, s: int, tw=0) -> EllipticLabel:
    return EllipticLabel(t, s, Fraction(tw))


# ---------------------------------------------------------------------------
# opaque constituent factors


@dataclass(frozen=True)
class SlotFactor:
    sigma: int  # size of the slot cuspidal, m * ell**k
    size: int  # superunipotent size transferred onto the slot line, >= 2
    parity: Fraction  # start parity of the slot cuspidal, 0 or 1/2

    def sort_key(self):
        return ("slot", self.sigma, self.size, self.parity)

    def __repr__(self):
        return f"I0({self.size})(x)St_{self.sigma}(rho){{{self.parity}}}"


@dataclass(frozen=True)
class SuperFactor:
    size: int  # >= 2
    parity: Fraction  # twist class mod 1 on a one-point line

    def sort_key(self):
        return ("super", self.size, self.parity)

    def __repr__(self):
        return f"I0St({self.size}){{{self.parity}}}"


@dataclass(frozen=True)
class MixedFactor:
    st_arm: int  # >= 2
    speh_arm: int  # >= 1
    twist: Fraction  # canonical mod epsilon

    def sort_key(self):
        return ("mixed", self.st_arm, self.speh_arm, self.twist)

    def __repr__(self):
        return f"I0LT({self.st_arm},{self.speh_arm}){{{self.twist}}}"


def _slot_parity(s_total: int) -> Fraction:
    # start of the centered slot cycle: the slot cuspidal of size sigma inside
    # a size-s ambient sits over the parent points from (1 - s)/2 upward
    return Fraction(1 - s_total, 2) % 1


def _slot_part(datum: CuspidalDatum, k: int, count: int, s_total: int):
    """Factor I0(count) transferred onto the k-th slot line of a size-s_total ambient."""
    if count == 0:
        return ZParameter(), ()
    sigma = datum.m * datum.ell ** k
    line = cuspidal_line(datum).steinberg(sigma)
    parity = _slot_parity(s_total)
    if count == 1:
        return ZParameter((Segment(LinePoint(line, parity), 1),)), ()
    return ZParameter(), (SlotFactor(sigma, count, parity),)


def _superunipotent_part(datum: CuspidalDatum, size: int, tw: Fraction):
    """Factor I0 of the size-`size` Steinberg on the rho line, twisted by tw."""
    if size == 0:
        return ZParameter(), ()
    rho = cuspidal_line(datum)
    if size == 1:
        return ZParameter((Segment(LinePoint(rho, tw), 1),)), ()
    if datum.epsilon >= 2:
        return superunipotent_constituent_steinberg(datum, size - 1).shift(tw), ()
    if size < datum.m:
        # below the period the whole reduction is irreducible, so even on a
        # one-point line the label is the explicit centered Steinberg type
        start = LinePoint(rho, Fraction(1 - size, 2) + tw)
        return steinberg_parameter(start, size), ()
    return ZParameter(), (SuperFactor(size, Fraction(tw) % 1),)


def _mixed_part(datum: CuspidalDatum, st_arm: int, speh_arm: int, tw: Fraction):
    """Factor I0 of the mixed label with the given arms on the rho line."""
    if st_arm < 1:
        raise ValueError("the Steinberg arm of a mixed factor is at least 1")
    if speh_arm == 0:
        return _superunipotent_part(datum, st_arm, tw)
    if st_arm == 1:
        # trivial Steinberg arm: the label is the Speh label, whose reduction
        # is irreducible with the same one-segment parameter
        rho = cuspidal_line(datum)
        start = LinePoint(rho, Fraction(tw) - Fraction(speh_arm, 2))
        return speh_parameter(start, speh_arm + 1), ()
    return ZParameter(), (MixedFactor(st_arm, speh_arm, Fraction(tw) % datum.epsilon),)


@dataclass(frozen=True)
class ConstituentLabel:
    """Canonical label of one irreducible constituent: level, explicit
    restricted parameter, and sorted opaque factors."""

    datum: CuspidalDatum
    level: LevelIndex
    param: ZParameter
    opaque: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "param", to_restricted(self.param))
        object.__setattr__(self, "opaque", tuple(sorted(self.opaque, key=lambda f: f.sort_key())))

    def supercuspidal_param(self) -> ZParameter:
        return to_supercuspidal(self.param)

    def total_size(self) -> int:
        boxes = self.param.box_count()
        for f in self.opaque:
            if isinstance(f, SlotFactor):
                boxes += f.size * f.sigma
            elif isinstance(f, SuperFactor):
                boxes += f.size
            else:
                boxes += f.st_arm + f.speh_arm
        return boxes

    def twisted(self, n) -> "ConstituentLabel":
        n = Fraction(n)
        out = []
        for f in self.opaque:
            if isinstance(f, SlotFactor):
                out.append(SlotFactor(f.sigma, f.size, (f.parity + n) % 1))
            elif isinstance(f, SuperFactor):
                out.append(SuperFactor(f.size, (f.parity + n) % 1))
            else:
                out.append(MixedFactor(f.st_arm, f.speh_arm, (f.twist + n) % self.datum.epsilon))
        return ConstituentLabel(self.datum, self.level, self.param.shift(n), tuple(out))

    def sort_key(self):
        width = len(self.level.entries)
        return (
            self.level.inverse_lex_key(width),
            self.param.sort_key(),
            tuple(f.sort_key() for f in self.opaque),
        )

    def __repr__(self):
        parts = [repr(self.param)] if len(self.param) else []
        parts.extend(repr(f) for f in self.opaque)
        body = " x ".join(parts) if parts else "1"
        return f"<level {list(self.level.entries)}: {body}>"


def derived_level(label: ConstituentLabel) -> LevelIndex:
    """Recompute the cuspidal level of a label from its factors.

    Each cuspidal of slot size m * ell**k in the cuspidal support raises
    entry k by one; superunipotent factors (on the base line) contribute
    nothing.  Products add levels, so this is a plain count over the factors.
    """
    m, ell = label.datum.m, label.datum.ell
    counts: dict[int, int] = {}

    def slot_index(sigma: int) -> int:
        k, t = 0, sigma // m
        while t > 1:
            t //= ell
            k += 1
        return k

    for seg in label.param.segments:
        line = seg.start.line
        if line.tag == "st":
            _, sigma = line.origin
            k = slot_index(sigma)
            counts[k] = counts.get(k, 0) + seg.length
    for f in label.opaque:
        if isinstance(f, SlotFactor):
            k = slot_index(f.sigma)
            counts[k] = counts.get(k, 0) + f.size
    width = max(counts) + 1 if counts else 0
    return LevelIndex(tuple(counts.get(k, 0) for k in range(width)))


def _label_lines(label: ConstituentLabel) -> set[Line]:
    lines = {seg.start.line for seg in label.param.segments}
    for f in label.opaque:
        if isinstance(f, SlotFactor):
            lines.add(cuspidal_line(label.datum).steinberg(f.sigma))
        else:
            lines.add(cuspidal_line(label.datum))
    return lines


def product_rule_cuspidal_distinct(a, b):
    """Decomposition rule for formal_product: when two labels have cuspidal
    supports on disjoint lines their product is irreducible, with label the
    union of the factors and level the sum.  Returns None otherwise (the
    product stays formal; nothing is invented)."""
    if not isinstance(a, ConstituentLabel) or not isinstance(b, ConstituentLabel):
        return None
    if a.datum != b.datum or _label_lines(a) & _label_lines(b):
        return None
    return ConstituentLabel(a.datum, a.level + b.level, a.param + b.param, a.opaque + b.opaque)


def _merge_label(datum, level, parts) -> ConstituentLabel:
    # the factors are pairwise cuspidal-distinct, so the product is
    # irreducible and the multiset of factors (explicit ones merged into a
    # single parameter) is a complete invariant
    param = ZParameter()
    opaque: tuple = ()
    for p, o in parts:
        param = param + p
        opaque = opaque + o
    return ConstituentLabel(datum, level, param, opaque)


# ---------------------------------------------------------------------------
# constituents of the two reduction families


def steinberg_constituents(datum: CuspidalDatum, s: int) -> list[ConstituentLabel]:
    """One label per level index of size s, in inverse-lexicographic order.

    The level-i constituent is the product of the slot factors prescribed by
    the nonzero entries of i with the superunipotent factor of the residual
    size s_rho(i), the latter twisted to sit at the top of the support.
    """
    if s < 1:
        raise ValueError("s must be positive")
    out = []
    for i in enumerate_index_set(datum, s):
        parts = [_slot_part(datum, k, i[k], s) for k in range(len(i.entries))]
        srho = s_rho(datum, s, i)
        parts.append(_superunipotent_part(datum, srho, Fraction(s - srho, 2)))
        out.append(_merge_label(datum, i, parts))
    return out


def lubin_tate_constituents(datum: CuspidalDatum, s: int, t: int) -> list[ConstituentLabel]:
    """Constituents of the reduction of the mixed label with arms (t, s - t).

    One label per level index i of size t - 1: the level-i Steinberg-type
    part of size m*i(ell), twisted by -s_rho(i)/2, times the superunipotent
    mixed factor with arms (t - m*i(ell), s - t), twisted by m*i(ell)/2.
    The twists are the Levi-restriction twists of the embedding realizing the
    constituent; they make the t = s column agree with the Steinberg family.
    """
    if not 1 <= t <= s:
        raise ValueError(f"need 1 <= t <= s, got t = {t}, s = {s}")
    m, ell = datum.m, datum.ell
    out = []
    for i in enumerate_index_set(datum, t - 1):
        size_i = m * i.weighted(ell)
        srho = s - size_i
        t_rho = t - size_i
        parts = [_slot_part(datum, k, i[k], size_i) for k in range(len(i.entries))]
        # the slot parts above realize the size-size_i Steinberg constituent
        # at level i (its residual part is empty); apply its twist
        steinberg_part = _merge_label(datum, i, parts).twisted(Fraction(-srho, 2))
        mixed = _mixed_part(datum, t_rho, s - t, Fraction(size_i, 2))
        out.append(
            _merge_label(datum, i, [(steinberg_part.param, steinberg_part.opaque), mixed])
        )
    return out


def reduce_elliptic(datum: CuspidalDatum, label: EllipticLabel) -> GrothElement:
    """Mod-ell reduction of an integral elliptic label as a sum of canonical labels."""
    if label.family != "fwd":
        raise ValueError("only the forward family reduces here")
    if label.st == label.total:
        labels = steinberg_constituents(datum, label.total)
    else:
        labels = lubin_tate_constituents(datum, label.total, label.st)
    terms = [(lab.twisted(label.twist), 1) for lab in labels]
    return GrothElement(terms, context=datum)


# ---------------------------------------------------------------------------
# Levi restrictions


_JACQUET_TWISTS = {
    # (variant, arrow) -> twists of the two tensor factors, in units of
    # (s - t)/2 and t/2 respectively
    ("standard", "left"): (Fraction(1, 2), Fraction(-1, 2)),
    ("standard", "right"): (Fraction(-1, 2), Fraction(1, 2)),
    ("opposite", "left"): (Fraction(-1, 2), Fraction(1, 2)),
    ("opposite", "right"): (Fraction(1, 2), Fraction(-1, 2)),
}


def jacquet_steinberg(datum: CuspidalDatum, s: int, t: int, arrow: str = "left",
                      variant: str = "standard") -> tuple[EllipticLabel, EllipticLabel]:
    """Restriction of a pure Steinberg/Speh label to the (t, s-t) Levi.

    arrow "left" restricts the Steinberg label, "right" the Speh label;
    variant "opposite" uses the opposite parabolic.  The result is the tensor
    pair of the two smaller labels of the same arrow, with twists
    +-(s - t)/2 and -+t/2 according to the table above.
    """
    if not 1 <= t <= s - 1:
        raise ValueError("the Levi must be proper: 1 <= t <= s - 1")
    if (variant, arrow) not in _JACQUET_TWISTS:
        raise ValueError(f"unknown variant/arrow {(variant, arrow)}")
    c1, c2 = _JACQUET_TWISTS[(variant, arrow)]
    make = steinberg_label if arrow == "left" else speh_label
    return make(t, c1 * (s - t)), make(s - t, c2 * t)


def jacquet_lt_last_block(datum: CuspidalDatum, label: EllipticLabel) -> GrothElement:
    """Restriction of an elliptic label to the (total-1, 1) Levi, in the
    Grothendieck group of integral labels.

    The two terms shrink one arm each: the Speh arm loses a box (twist -1/2,
    tensor the point at +(total-1)/2), or the Steinberg arm does (twist +1/2,
    tensor the point at -(total-1)/2).  A term drops when its arm is already
    empty, which recovers the one-term restrictions of the pure labels.
    """
    if label.total == 1:
        raise ValueError("no proper Levi on one box")
    t, r = label.st, label.speh_arm
    a = label.total - 1  # boxes of the last-block formula
    terms = []
    if r >= 1:
        terms.append((tensor_pair(EllipticLabel(t, label.total - 1, label.twist - Fraction(1, 2)),
                                  speh_label(1, label.twist + Fraction(a, 2))), 1))
    if t >= 2:
        terms.append((tensor_pair(EllipticLabel(t - 1, label.total - 1, label.twist + Fraction(1, 2)),
                                  speh_label(1, label.twist - Fraction(a, 2))), 1))
    return GrothElement(terms, context=datum)


def jacquet_constituent(datum: CuspidalDatum, s: int, i: LevelIndex, t: int) -> GrothElement:
    """Restriction of the level-i Steinberg constituent to the (t, s-t) Levi.

    Sum over the splittings t = j_minus1 + m * sum_k j_k ell**k with
    0 <= j_k <= i_k and 0 <= j_minus1 <= s_rho(i): each splitting contributes
    the tensor of the level-j and level-(i-j) labels built from the slot
    cuspidals of the ambient size s, the two superunipotent parts sitting at
    twists (s - j_minus1)/2 and (s - s_rho(i) - j_minus1)/2.  Summing over
    all i recovers the restriction of the full reduction (the closure law).
    """
    if not 1 <= t <= s - 1:
        raise ValueError("the Levi must be proper: 1 <= t <= s - 1")
    if i not in enumerate_index_set(datum, s):
        raise ValueError(f"{i!r} is not a level index of size {s}")
    m, ell = datum.m, datum.ell
    srho = s_rho(datum, s, i)
    width = len(i.entries)

    def splittings(k: int, remaining: int):
        if k < 0:
            if remaining <= srho:
                yield (remaining, ())
            return
        step = m * ell ** k
        for jk in range(min(i[k], remaining // step) + 1):
            for jm1, tail in splittings(k - 1, remaining - jk * step):
                yield (jm1, tail + (jk,))

    terms = []
    for j_minus1, j in splittings(width - 1, t):
        j_idx = LevelIndex(j)
        left_parts = [_slot_part(datum, k, j_idx[k], s) for k in range(width)]
        left_parts.append(_superunipotent_part(datum, j_minus1, Fraction(s - j_minus1, 2)))
        right_parts = [_slot_part(datum, k, i[k] - j_idx[k], s) for k in range(width)]
        right_parts.append(
            _superunipotent_part(datum, srho - j_minus1, Fraction(s - srho - j_minus1, 2))
        )
        left = _merge_label(datum, j_idx, left_parts)
        right = _merge_label(datum, i - j_idx, right_parts)
        terms.append((tensor_pair(left, right), 1))
    return GrothElement(terms, context=datum)


def jacquet_closure_sides(datum: CuspidalDatum, s: int, t: int):
    """Both sides of the closure law for the (t, s-t) Levi, for the tests.

    Left: the sum of jacquet_constituent over the whole index set of s.
    Right: the tensor of the two full constituent lists of sizes t and s - t,
    twisted by (s - t)/2 and -t/2.
    """
    left = GrothElement.zero(context=datum)
    for i in enumerate_index_set(datum, s):
        left = left + jacquet_constituent(datum, s, i, t)
    rt = GrothElement(
        [(lab.twisted(Fraction(s - t, 2)), 1) for lab in steinberg_constituents(datum, t)],
        context=datum,
    )
    rs = GrothElement(
        [(lab.twisted(Fraction(-t, 2)), 1) for lab in steinberg_constituents(datum, s - t)],
        context=datum,
    )
    return left, tensor(rt, rs)


# ---------------------------------------------------------------------------
# extension graphs of the induction lattices


@dataclass(frozen=True)
class ExtensionGraph:
    vertices: tuple[ConstituentLabel, ...]
    edges: tuple[tuple[int, int], ...]
    orientation: str = "ascending-level"
    # the filtration only pins the arrow directions up to a global reversal;
    # consumers may flip all edges at once

    def is_path(self) -> bool:
        n = len(self.vertices)
        return self.edges == tuple((k, k + 1) for k in range(n - 1))


def extension_graph_steinberg(datum: CuspidalDatum, s: int) -> ExtensionGraph:
    """The induction lattice of the size-s Steinberg reduces with a path graph:
    the only arrows join consecutive levels in inverse-lexicographic order."""
    labels = steinberg_constituents(datum, s)
    edges = tuple((k, k + 1) for k in range(len(labels) - 1))
    return ExtensionGraph(tuple(labels), edges)


def extension_graph_lubin_tate(datum: CuspidalDatum, s: int, t: int) -> ExtensionGraph:
    labels = lubin_tate_constituents(datum, s, t)
    edges = tuple((k, k + 1) for k in range(len(labels) - 1))
    return ExtensionGraph(tuple(labels), edges)


def semisimple_lattice_graph(datum: CuspidalDatum, label: EllipticLabel) -> ExtensionGraph:
    """Every integral label also owns a lattice with semisimple reduction:
    same vertices, no arrows."""
    reduction = reduce_elliptic(datum, label)
    labels = sorted(reduction.labels(), key=lambda l: l.sort_key())
    return ExtensionGraph(tuple(labels), (), orientation="semisimple")


# ---------------------------------------------------------------------------
# length-2 products, the Euler identity, disjointness


@dataclass(frozen=True)
class LengthTwo:
    element: GrothElement
    sub: EllipticLabel
    quotient: EllipticLabel


def induced_length_two(datum: CuspidalDatum, s: int, t: int, family: str = "fwd") -> LengthTwo:
    """The twisted product of the Steinberg of size t with the Speh of size
    s - t has length two; its class is the sum of the two mixed labels with
    Steinberg arms t and t + 1.

    For the forward product the arm-t label is the subspace and the arm-(t+1)
    label the quotient; the reversed product swaps the roles (on the mirrored
    family of labels).
    """
    if not 1 <= t <= s - 1:
        raise ValueError("need 1 <= t <= s - 1")
    lo = EllipticLabel(t, s, family=family)
    hi = EllipticLabel(t + 1, s, family=family)
    element = GrothElement([(lo, 1), (hi, 1)], context=datum)
    if family == "fwd":
        return LengthTwo(element, sub=lo, quotient=hi)
    return LengthTwo(element, sub=hi, quotient=lo)


def euler_check(datum: CuspidalDatum, s: int) -> bool:
    """Euler-characteristic identity of the induction complex of size s.

    The degree-i term of the complex is the product of the Steinberg of size
    s - i + 1 with the Speh of size i - 1, whose class splits as the sum of
    the mixed labels U_i and U_{i-1} (arms s - i + 1 and s - i + 2); the
    telescoping alternating sum therefore collapses onto the Speh class.
    Checks the termwise splitting and the collapsed alternating sum, exactly.
    """
    if s < 1:
        raise ValueError("s must be positive")
    u = {idx: EllipticLabel(s - idx + 1, s) for idx in range(1, s + 1)}
    alternating = GrothElement.zero(context=datum)
    for idx in range(1, s + 1):
        if idx == 1:
            k_elem = GrothElement.of(steinberg_label(s), context=datum)
        else:
            k_elem = induced_length_two(datum, s, s - idx + 1).element
        expected = GrothElement.of(u[idx], context=datum)
        if idx >= 2:
            expected = expected + GrothElement.of(u[idx - 1], context=datum)
        if k_elem != expected:
            return False
        alternating = alternating + k_elem.scale((-1) ** idx)
    collapsed = GrothElement.of(u[s], (-1) ** s, context=datum)
    return alternating == collapsed


def constituents_disjoint(datum: CuspidalDatum, s: int, t: int, t1: int) -> bool:
    """True iff the reductions of the mixed labels with arms (t, s-t) and
    (t1, s-t1) share no constituent.

    The hypotheses ell != 2 and 0 < t < t1 < s are those under which
    disjointness is guaranteed; outside them the comparison is still made,
    with a warning.
    """
    if datum.ell == 2 or not 0 < t < t1 < s:
        warnings.warn(
            f"disjointness hypotheses violated (ell = {datum.ell}, t = {t}, t1 = {t1}, s = {s}); "
            "comparing anyway",
            stacklevel=2,
        )
    a = set(lubin_tate_constituents(datum, s, t))
    b = set(lubin_tate_constituents(datum, s, t1))
    return not (a & b)


def speh_never_equals_I0(datum: CuspidalDatum, s: int, t: int, a: int) -> bool:
    """No twist of the size-(a+1) Speh label matches the superunipotent
    constituent of the mixed label with arms (t+1, a-t), for 0 < t < a.

    The mixed constituent is compared in canonical form against the Speh
    label at every twist of the line (integer and half-integer).  With both
    arms nonempty the mixed constituent is a MixedFactor tag — never a
    one-segment parameter — and the boundary normalizations (either arm
    empty) produce explicit parameters, compared segment by segment.
    """
    if not 0 < t < a:
        raise ValueError("need 0 < t < a")
    if a > s:
        raise ValueError("a cannot exceed the ambient size s")
    if datum.ell == 2:
        warnings.warn("the guarantee needs ell != 2; comparing anyway", stacklevel=2)
    mixed = _merge_label(datum, LevelIndex(()), [_mixed_part(datum, t + 1, a - t, Fraction(0))])
    rho = cuspidal_line(datum)
    for half_twists in range(2 * datum.epsilon):
        delta = Fraction(half_twists, 2)
        start = LinePoint(rho, delta - Fraction(a, 2))
        speh = ConstituentLabel(datum, LevelIndex(()), speh_parameter(start, a + 1))
        if speh == mixed:
            return False
    return True
