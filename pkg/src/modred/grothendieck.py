"""Formal integer combinations of canonical labels.

A GrothElement is a finitely supported Z-valued map on hashable labels;
zero-multiplicity terms are pruned.  Labels are compared by equality only —
whatever canonical form a label type implements is what equality means here.

Products never invent a decomposition: formal_product pairs terms into
ProductLabel entries unless the caller supplies a rule, in which case the
rule's name is recorded on the result.  Tensor pairs along a Levi (which are
not inductions and are never decomposed) use tensor_pair/TensorLabel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping


class ContextMismatch(ValueError):
    pass


def _label_key(label) -> str:
    k = getattr(label, "sort_key", None)
    if k is not None:
        return repr(k())
    return repr(label)


@dataclass(frozen=True)
class TensorLabel:
    """Ordered tensor of labels along the blocks of a Levi factor."""

    factors: tuple[Hashable, ...]

    def sort_key(self):
        return tuple(_label_key(f) for f in self.factors)

    def __repr__(self):
        return " (x) ".join(repr(f) for f in self.factors)


@dataclass(frozen=True)
class ProductLabel:
    """Unresolved induction product of two labels (no decomposition rule applied)."""

    left: Hashable
    right: Hashable

    def sort_key(self):
        return (_label_key(self.left), _label_key(self.right))

    def __repr__(self):
        return f"({self.left!r}) x ({self.right!r})"


def tensor_pair(a, b) -> TensorLabel:
    return TensorLabel((a, b))


class GrothElement:
    """Immutable formal integer combination of labels."""

    __slots__ = ("_terms", "context", "rules")

    def __init__(self, terms: Mapping | Iterable = (), context=None, rules: frozenset = frozenset()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for label, mult in items:
            if not isinstance(mult, int):
                raise TypeError("multiplicities are integers")
            if mult:
                acc[label] = acc.get(label, 0) + mult
                if acc[label] == 0:
                    del acc[label]
        self._terms = acc
        self.context = context
        self.rules = frozenset(rules)

    @classmethod
    def zero(cls, context=None) -> "GrothElement":
        return cls((), context=context)

    @classmethod
    def of(cls, label, mult: int = 1, context=None) -> "GrothElement":
        return cls(((label, mult),), context=context)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _label_key(kv[0]))

    def labels(self):
        return set(self._terms)

    def multiplicity(self, label) -> int:
        return self._terms.get(label, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_effective(self) -> bool:
        return all(m >= 0 for m in self._terms.values())

    def total_mass(self) -> int:
        return sum(self._terms.values())

    def _check(self, other: "GrothElement"):
        if self.context is not None and other.context is not None and self.context != other.context:
            raise ContextMismatch(f"{self.context} vs {other.context}")

    def __add__(self, other: "GrothElement") -> "GrothElement":
        self._check(other)
        acc = dict(self._terms)
        for label, mult in other._terms.items():
            acc[label] = acc.get(label, 0) + mult
        return GrothElement(acc, context=self.context or other.context, rules=self.rules | other.rules)

    def __sub__(self, other: "GrothElement") -> "GrothElement":
        return self + other.scale(-1)

    def __neg__(self) -> "GrothElement":
        return self.scale(-1)

    def scale(self, c: int) -> "GrothElement":
        return GrothElement({k: c * v for k, v in self._terms.items()}, context=self.context, rules=self.rules)

    def map_labels(self, f: Callable) -> "GrothElement":
        return GrothElement(((f(k), v) for k, v in self._terms.items()), context=self.context, rules=self.rules)

    def __eq__(self, other):
        return isinstance(other, GrothElement) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(
            (f"{m}*[{k!r}]" if m != 1 else f"[{k!r}]") for k, m in self.items()
        )


def tensor(e1: GrothElement, e2: GrothElement) -> GrothElement:
    """Bilinear extension of tensor_pair."""
    e1._check(e2)
    acc: dict = {}
    for a, ma in e1._terms.items():
        for b, mb in e2._terms.items():
            label = tensor_pair(a, b)
            acc[label] = acc.get(label, 0) + ma * mb
    return GrothElement(acc, context=e1.context or e2.context, rules=e1.rules | e2.rules)


def formal_product(e1: GrothElement, e2: GrothElement, rule=None, rule_name: str | None = None) -> GrothElement:
    """Bilinear induction pairing.

    Without a rule every term pair stays a ProductLabel.  With a rule, each
    pair (a, b) for which rule(a, b) returns a label (or a GrothElement) is
    decomposed accordingly and the rule's name is recorded; pairs the rule
    declines (returns None) stay formal.
    """
    e1._check(e2)
    out = GrothElement.zero(context=e1.context or e2.context)
    applied = False
    for a, ma in e1._terms.items():
        for b, mb in e2._terms.items():
            resolved = rule(a, b) if rule is not None else None
            if resolved is None:
                piece = GrothElement.of(ProductLabel(a, b), ma * mb, context=out.context)
            elif isinstance(resolved, GrothElement):
                piece, applied = resolved.scale(ma * mb), True
            else:
                piece, applied = GrothElement.of(resolved, ma * mb, context=out.context), True
            out = out + piece
    if applied and rule_name:
        out = GrothElement(out._terms, context=out.context, rules=out.rules | {rule_name})
    return out
