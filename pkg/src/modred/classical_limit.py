"""Young-diagram calculus of the classical limit (q = 1 mod ell, d < ell).

In this regime the unipotent block behaves like representations of the
symmetric group: the Borel induction is semisimple with multiplicities the
dimensions of the symmetric-group irreducibles, and induction along a Young
parabolic decomposes by the numbered-box rule.  Everything here is exact
integer combinatorics, validated against a brute-force character table.

The regime is a precondition the caller asserts (pass ell); it is never
inferred from q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .grothendieck import GrothElement


class RegimeError(ValueError):
    """d is too large for the requested modulus."""


class UnsupportedPatternError(ValueError):
    """Arrow pattern outside the two- and three-block cases handled here."""


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...]

    def __post_init__(self):
        r = tuple(self.rows)
        if any(x < 1 for x in r) or any(r[i] < r[i + 1] for i in range(len(r) - 1)):
            raise ValueError(f"{r} is not a partition")
        object.__setattr__(self, "rows", r)

    @property
    def size(self) -> int:
        return sum(self.rows)

    def conjugate(self) -> "YoungDiagram":
        if not self.rows:
            return self
        cols = [sum(1 for r in self.rows if r > j) for j in range(self.rows[0])]
        return YoungDiagram(tuple(cols))

    def sort_key(self):
        return (self.size, tuple(-r for r in self.rows))

    def __repr__(self):
        return f"YD{self.rows}"


def partitions(n: int, cap: int | None = None):
    """All partitions of n with parts at most cap, largest part first."""
    if n == 0:
        yield ()
        return
    top = n if cap is None else min(n, cap)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def hook_dimension(dy: YoungDiagram) -> int:
    """d! over the product of hooks; the number of standard fillings."""
    rows = dy.rows
    if not rows:
        return 1
    conj = dy.conjugate().rows
    prod = 1
    for i, r in enumerate(rows):
        for j in range(r):
            prod *= (r - j) + (conj[j] - i) - 1
    return factorial(dy.size) // prod


# ---------------------------------------------------------------------------
# brute-force character oracle


@lru_cache(maxsize=None)
def _character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Character value of the irreducible lam on the class mu, by iterated
    border-strip removal (each removal contributes the sign of its height)."""
    if not lam:
        return 1 if not mu else 0
    if not mu:
        return 0
    strip = mu[0]
    rest = mu[1:]
    total = 0
    # remove a border strip of length `strip` from lam: in beta-set terms,
    # subtract `strip` from one first-column hook length
    beta = [lam[i] + len(lam) - 1 - i for i in range(len(lam))]
    occupied = set(beta)
    for idx, b in enumerate(beta):
        nb = b - strip
        if nb < 0 or nb in occupied:
            continue
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        pos = sum(1 for x in new_beta if x > nb)
        new_beta.insert(pos, nb)
        height = pos - idx  # rows the strip spans, minus one
        new_lam = tuple(x - (len(new_beta) - 1 - i) for i, x in enumerate(new_beta))
        new_lam = tuple(x for x in new_lam if x > 0)
        total += (-1) ** height * _character(new_lam, rest)
    return total


def _class_size(mu: tuple[int, ...], n: int) -> int:
    z = 1
    counts: dict[int, int] = {}
    for part in mu:
        counts[part] = counts.get(part, 0) + 1
    for part, c in counts.items():
        z *= part ** c * factorial(c)
    return factorial(n) // z


@dataclass(frozen=True)
class CharacterTable:
    d: int
    parts: tuple[tuple[int, ...], ...]
    values: dict  # (lam, mu) -> int

    def chi(self, lam, mu) -> int:
        return self.values[(tuple(lam), tuple(mu))]

    def dimension(self, lam) -> int:
        return self.chi(lam, (1,) * self.d)


def character_oracle(d: int) -> CharacterTable:
    """Full character table of the degree-d symmetric group, brute force.

    Kept to desk scale (d <= 7).  Column orthogonality and the match of the
    dimension column with the hook formula are verified on construction.
    """
    if d > 7:
        raise RegimeError("the oracle is desk-scale only (d <= 7)")
    parts = tuple(partitions(d))
    values = {(lam, mu): _character(lam, mu) for lam in parts for mu in parts}
    table = CharacterTable(d, parts, values)
    n_fact = factorial(d)
    for lam in parts:
        for kap in parts:
            dot = sum(
                _class_size(mu, d) * table.chi(lam, mu) * table.chi(kap, mu)
                for mu in parts
            )
            if dot != (n_fact if lam == kap else 0):
                raise AssertionError(f"row orthogonality failed at ({lam}, {kap})")
    for lam in parts:
        if table.dimension(lam) != hook_dimension(YoungDiagram(lam)):
            raise AssertionError(f"dimension column broken at {lam}")
    return table


def induction_multiplicity(lam1, lam2, lam) -> int:
    """<Ind(chi_lam1 x chi_lam2), chi_lam> along the Young parabolic, by characters."""
    n1, n2 = sum(lam1), sum(lam2)
    t1, t2 = character_oracle(n1), character_oracle(n2)
    t = character_oracle(n1 + n2)
    total = Fraction(0)
    for mu1 in t1.parts:
        for mu2 in t2.parts:
            mu = tuple(sorted(mu1 + mu2, reverse=True))
            total += (
                Fraction(_class_size(mu1, n1), factorial(n1))
                * Fraction(_class_size(mu2, n2), factorial(n2))
                * t1.chi(lam1, mu1) * t2.chi(lam2, mu2) * t.chi(lam, mu)
            )
    assert total.denominator == 1
    return int(total)


# ---------------------------------------------------------------------------
# the numbered-box induction rule


def induct_diagrams(dy1: YoungDiagram, dy2: YoungDiagram, ell: int | None = None) -> GrothElement:
    """Decomposition of the induction of two diagram labels along the Young
    parabolic, by the numbered-box rule.

    Add row-1-many boxes labeled 1 to dy1, no two in a column, then row-2-many
    labeled 2, and so on through the rows of dy2; keep the fillings whose
    reading word (rows top to bottom, each row right to left) has, at every
    prefix, at least as many i as i+1.  The multiplicity of a diagram is the
    number of surviving fillings.
    """
    if ell is not None and dy1.size + dy2.size >= ell:
        raise RegimeError(
            f"|dy1| + |dy2| = {dy1.size + dy2.size} is not below ell = {ell}"
        )
    base = dy1.rows
    results: dict[YoungDiagram, int] = {}

    def word_ok(labels_by_row) -> bool:
        seen: dict[int, int] = {}
        for row_labels in labels_by_row:
            for lab in reversed(row_labels):
                seen[lab] = seen.get(lab, 0) + 1
                if lab > 1 and seen[lab] > seen.get(lab - 1, 0):
                    return False
        return True

    def place(round_idx: int, shape: tuple[int, ...], labels):
        # labels[r] = labels of the added boxes in row r, in column order
        if round_idx == len(dy2.rows):
            if word_ok(labels):
                dy = YoungDiagram(shape)
                results[dy] = results.get(dy, 0) + 1
            return
        count = dy2.rows[round_idx]
        for new_shape in _strips(shape, count):
            new_labels = []
            for r in range(len(new_shape)):
                old = shape[r] if r < len(shape) else 0
                row_labels = labels[r] if r < len(labels) else ()
                added = new_shape[r] - old
                new_labels.append(row_labels + (round_idx + 1,) * added)
            place(round_idx + 1, new_shape, new_labels)

    place(0, base, [() for _ in base])
    return GrothElement(sorted(results.items(), key=lambda kv: kv[0].sort_key()))


def _strips(shape: tuple[int, ...], count: int):
    """All shapes obtained by adding `count` boxes to `shape`, no two in a column."""
    out = []

    def rec(row: int, remaining: int, acc: tuple[int, ...]):
        rows_max = len(shape) + 1
        if row == rows_max:
            if remaining == 0:
                out.append(acc)
            return
        cur = shape[row] if row < len(shape) else 0
        prev_old = shape[row - 1] if row > 0 else None
        for add in range(remaining + 1):
            new = cur + add
            # growing past the row above would either break the shape or
            # stack two new boxes in one column
            if row > 0 and add > 0 and new > prev_old:
                break
            rec(row + 1, remaining - add, acc + (new,))

    rec(0, count, ())
    return [tuple(x for x in s if x) for s in out]


def borel_induction_decomposition(d: int, ell: int | None = None) -> GrothElement:
    """Class of the Borel induction in degree d: semisimple, one term per
    partition of d with multiplicity its hook dimension."""
    if ell is not None and d >= ell:
        raise RegimeError(f"d = {d} is not below ell = {ell}")
    terms = [
        (YoungDiagram(lam), hook_dimension(YoungDiagram(lam))) for lam in partitions(d)
    ]
    return GrothElement(sorted(terms, key=lambda kv: kv[0].sort_key()))


def hook(arm: int, leg: int) -> YoungDiagram:
    """The hook diagram with `arm` boxes in the first row and `leg` extra rows."""
    return YoungDiagram((arm,) + (1,) * leg)


def parse_pattern(pattern: str) -> tuple[tuple[str, int], ...]:
    """Comma-separated arrow tokens, e.g. "<1,>1,<1" (< is the Steinberg arrow)."""
    toks = []
    for raw in pattern.split(","):
        raw = raw.strip()
        if len(raw) < 2 or raw[0] not in "<>":
            raise UnsupportedPatternError(f"cannot parse arrow token {raw!r}")
        toks.append((raw[0], int(raw[1:])))
    return tuple(toks)


def elliptic_reduction_classical(pattern, ell: int | None = None) -> GrothElement:
    """Classical-limit reduction class of an arrow-pattern label.

    Two-block patterns reduce irreducibly to a single hook diagram: the
    pattern >i,<j gives the hook with arm i+1 and leg j; <i,>j gives the
    conjugate situation, arm j+1 and leg i.  Single blocks are the row and
    column diagrams.  The one three-block case handled, <1,>1,<1, has exactly
    the two constituents (2,1,1) and (2,2); anything else is refused rather
    than guessed.
    """
    toks = parse_pattern(pattern) if isinstance(pattern, str) else tuple(pattern)
    d = sum(n + 1 for _, n in toks)
    if ell is not None and d >= ell:
        raise RegimeError(f"d = {d} is not below ell = {ell}")
    if len(toks) == 1:
        arrow, n = toks[0]
        dy = hook(1, n) if arrow == "<" else hook(n + 1, 0)
        return GrothElement([(dy, 1)])
    if len(toks) == 2:
        (a1, n1), (a2, n2) = toks
        if (a1, a2) == (">", "<"):
            return GrothElement([(hook(n1 + 1, n2), 1)])
        if (a1, a2) == ("<", ">"):
            return GrothElement([(hook(n2 + 1, n1), 1)])
        raise UnsupportedPatternError(f"two-block pattern {toks} needs one arrow of each kind")
    if toks == (("<", 1), (">", 1), ("<", 1)):
        return GrothElement([(YoungDiagram((2, 1, 1)), 1), (YoungDiagram((2, 2)), 1)])
    raise UnsupportedPatternError(f"no rule for the pattern {toks}")
