"""Cuspidal-level index sets and their inverse-lexicographic order.

For a datum with period m over the modulus ell, the index set of size s
consists of the finitely supported sequences i = (i_0, i_1, ...) of
non-negative integers with s - m * sum_k i_k ell**k >= 0.  It is ordered
inverse-lexicographically: compare at the largest position where two
sequences differ, so (0, 1) sits above (3, 0).  The zero sequence is the
minimum.  These sequences index the irreducible constituents of the mod-ell
reductions computed in the reduction module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .base_arith import CuspidalDatum, digit_decompose


@dataclass(frozen=True)
class LevelIndex:
    """Finitely supported sequence of non-negative integers, trailing zeros stripped."""

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        e = tuple(self.entries)
        if any(x < 0 for x in e):
            raise ValueError("level entries are non-negative")
        while e and e[-1] == 0:
            e = e[:-1]
        object.__setattr__(self, "entries", e)

    def __getitem__(self, k: int) -> int:
        return self.entries[k] if k < len(self.entries) else 0

    def __bool__(self):
        return bool(self.entries)

    def weighted(self, ell: int) -> int:
        """i(ell) = sum_k i_k * ell**k."""
        return sum(c * ell ** k for k, c in enumerate(self.entries))

    def padded(self, width: int) -> tuple[int, ...]:
        return tuple(self[k] for k in range(max(width, len(self.entries))))

    def inverse_lex_key(self, width: int) -> tuple[int, ...]:
        """Sort key realizing the order: highest position compared first."""
        return tuple(reversed(self.padded(width)))

    def __add__(self, other: "LevelIndex") -> "LevelIndex":
        w = max(len(self.entries), len(other.entries))
        return LevelIndex(tuple(self[k] + other[k] for k in range(w)))

    def __sub__(self, other: "LevelIndex") -> "LevelIndex":
        w = max(len(self.entries), len(other.entries))
        return LevelIndex(tuple(self[k] - other[k] for k in range(w)))

    def __repr__(self):
        return f"LevelIndex{self.entries}"


ZERO_LEVEL = LevelIndex(())


def index_width(datum: CuspidalDatum, s: int) -> int:
    """Number of admissible positions: k contributes only when m * ell**k <= s."""
    m, ell = datum.m, datum.ell
    w, power = 0, m
    while power <= s:
        w += 1
        power *= ell
    return max(w, 1)


@lru_cache(maxsize=None)
def _index_set(m: int, ell: int, s: int) -> tuple[LevelIndex, ...]:
    width_, budget = 1, s // m
    power = m
    while power * ell <= s:
        width_ += 1
        power *= ell

    out: list[tuple[int, ...]] = []

    def rec(k: int, remaining: int, acc: tuple[int, ...]):
        # positions are chosen from the top down so that emission order is
        # already the inverse-lexicographic order
        if k < 0:
            out.append(acc)
            return
        p = ell ** k
        for c in range(remaining // p + 1):
            rec(k - 1, remaining - c * p, (c,) + acc)

    rec(width_ - 1, budget, ())
    return tuple(LevelIndex(e) for e in out)


def enumerate_index_set(datum: CuspidalDatum, s: int) -> list[LevelIndex]:
    """All of the index set of size s, ascending in inverse-lexicographic order."""
    if s < 0:
        raise ValueError("s must be non-negative")
    return list(_index_set(datum.m, datum.ell, s))


def enumerate_digit_set(digits, ell: int) -> list[LevelIndex]:
    """The index set cut out by the suffix conditions on a digit sequence.

    Membership requires sum_{k >= r} (m_k - i_k) * ell**(k-r) >= 0 for every
    r; writing S_u = m_u - i_u and S_r = (m_r - i_r) + ell * S_{r+1}, that is
    S_r >= 0 for all r.  For the digit sequence of s this set equals
    enumerate_index_set(datum, s), which the tests enforce.
    """
    ds = tuple(digits)
    if any(not 0 <= d < ell for d in ds):
        raise ValueError("digits must lie in [0, ell)")
    u = len(ds) - 1

    out: list[tuple[int, ...]] = []

    def rec(k: int, slack: int, acc: tuple[int, ...]):
        # slack = S_{k+1}; position k admits i_k <= m_k + ell * slack
        if k < 0:
            out.append(acc)
            return
        top = ds[k] + ell * slack
        for c in range(top + 1):
            rec(k - 1, top - c, (c,) + acc)

    if u < 0:
        return [LevelIndex(())]
    rec(u, 0, ())
    width = u + 1
    return sorted((LevelIndex(e) for e in out), key=lambda i: i.inverse_lex_key(width))


def level_indices(datum: CuspidalDatum, s: int) -> list[LevelIndex]:
    """Alias of enumerate_index_set, kept for readability at call sites."""
    return enumerate_index_set(datum, s)


def s_rho(datum: CuspidalDatum, s: int, i: LevelIndex) -> int:
    """The residual size s - m * i(ell) of the superunipotent part at level i."""
    value = s - datum.m * i.weighted(datum.ell)
    if value < 0:
        raise ValueError(f"{i!r} is not an index of size {s}")
    return value


def level_of_steinberg(datum: CuspidalDatum, s: int) -> LevelIndex:
    """The cuspidal level (m_0, ..., m_u) of the generalized Steinberg of size s."""
    return LevelIndex(digit_decompose(datum, s).digits)


def cuspidal_level_of_product(levels) -> LevelIndex:
    """Levels add componentwise under products of representations."""
    total = ZERO_LEVEL
    for lv in levels:
        total = total + lv
    return total
