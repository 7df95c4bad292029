"""Arithmetic of the pair (q, ell) and the digit calculus attached to a cuspidal datum.

Everything downstream is relative to a cuspidal datum: a symbolic cuspidal
representation living on GL_g, together with the residue cardinality q, the
modulus ell (a prime not dividing q), the size epsilon of its twist line and
the derived period m (= epsilon when the line is nontrivial, = ell otherwise).
"""

from __future__ import annotations

from dataclasses import dataclass


class DatumError(ValueError):
    """Raised when a cuspidal datum violates one of its arithmetic constraints."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def order_mod(q: int, ell: int) -> int:
    """Least e >= 1 with q**e = 1 mod ell (the order of q in F_ell^x)."""
    if not is_prime(ell):
        raise DatumError(f"ell = {ell} is not prime")
    if q % ell == 0:
        raise DatumError(f"q = {q} is divisible by ell = {ell}")
    e, acc = 1, q % ell
    while acc != 1:
        acc = acc * q % ell
        e += 1
        if e >= ell:
            break
    return e


@dataclass(frozen=True)
class CuspidalDatum:
    """Symbolic cuspidal base: GL_g, modulus ell, line size epsilon, period m.

    q is optional: when given, epsilon must divide the order of q mod ell.
    Leaving q out gives an abstract datum where (epsilon, ell) are free; the
    combinatorics below only ever consumes the pair (m, ell).
    """

    g: int = 1
    ell: int = 3
    epsilon: int = 1
    q: int | None = None

    def __post_init__(self):
        if self.g < 1:
            raise DatumError("g must be a positive integer")
        if not is_prime(self.ell):
            raise DatumError(f"ell = {self.ell} is not prime")
        if self.epsilon < 1:
            raise DatumError("epsilon must be a positive integer")
        if self.q is not None:
            if self.q < 1:
                raise DatumError("q must be a positive integer")
            e = order_mod(self.q, self.ell)
            if e % self.epsilon != 0:
                raise DatumError(
                    f"epsilon = {self.epsilon} does not divide the order "
                    f"{e} of q = {self.q} mod ell = {self.ell}"
                )

    @property
    def m(self) -> int:
        return self.epsilon if self.epsilon > 1 else self.ell

    @classmethod
    def for_period(cls, m: int, ell: int, g: int = 1) -> "CuspidalDatum":
        """Datum realizing a target period m, with a witness q when one exists.

        m == ell is realized by a trivial line (epsilon = 1); otherwise
        epsilon = m, and the smallest q whose order mod ell is divisible by m
        is attached (abstract datum when no such q exists).
        """
        if m < 2:
            raise DatumError("the period m is always at least 2")
        if m == ell:
            return cls(g=g, ell=ell, epsilon=1, q=ell + 1)
        epsilon = m
        for q in range(2, ell):
            if order_mod(q, ell) % epsilon == 0:
                return cls(g=g, ell=ell, epsilon=epsilon, q=q)
        return cls(g=g, ell=ell, epsilon=epsilon, q=None)

    @classmethod
    def trivial_character(cls, q: int, ell: int) -> "CuspidalDatum":
        """Datum of the trivial character of GL_1: epsilon defaults to e_ell(q)."""
        return cls(g=1, ell=ell, epsilon=order_mod(q, ell), q=q)


def is_banal(datum: CuspidalDatum, d: int) -> bool:
    """True iff the order of q mod ell exceeds d. Requires a concrete q."""
    if datum.q is None:
        raise DatumError("banality needs a concrete q on the datum")
    return order_mod(datum.q, datum.ell) > d


@dataclass(frozen=True)
class DigitDecomposition:
    """s = m_minus1 + sum_k digits[k] * m * ell**k, 0 <= m_minus1 < m, 0 <= digits[k] < ell."""

    m: int
    ell: int
    m_minus1: int
    digits: tuple[int, ...]
    s: int

    def recompose(self) -> int:
        total = self.m_minus1
        for k, d in enumerate(self.digits):
            total += d * self.m * self.ell ** k
        return total


def digit_decompose(datum: CuspidalDatum, s: int) -> DigitDecomposition:
    """The unique mixed-radix decomposition of s over (m, ell). Trailing digits stripped."""
    if s < 0:
        raise ValueError("s must be non-negative")
    m, ell = datum.m, datum.ell
    m_minus1 = s % m
    rest = s // m
    digits = []
    while rest:
        digits.append(rest % ell)
        rest //= ell
    return DigitDecomposition(m=m, ell=ell, m_minus1=m_minus1, digits=tuple(digits), s=s)
