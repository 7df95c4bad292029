"""Deterministic JSON forms for the value types, and the DOT form of graphs.

Parameters serialize as sorted triples [base, twist, length] with the base a
line name ("rho", "1", "St_6(rho)", nested for deeper lines) and the twist an
exact fraction string.  Opaque factors serialize as tagged objects.  All
emitters order their output canonically, so equal values produce identical
bytes.
"""

from __future__ import annotations

from fractions import Fraction

from .classical_limit import YoungDiagram
from .grothendieck import GrothElement, TensorLabel
from .levels import LevelIndex
from .reduction import (
    ConstituentLabel,
    EllipticLabel,
    ExtensionGraph,
    MixedFactor,
    SlotFactor,
    SuperFactor,
)
from .zelevinski import Segment, ZParameter


def frac_str(x) -> str:
    return str(Fraction(x))


def segment_json(seg: Segment) -> list:
    return [seg.start.line.name, frac_str(seg.start.twist), seg.length]


def param_json(param: ZParameter) -> list:
    return [segment_json(s) for s in param.segments]


def opaque_json(f) -> dict:
    if isinstance(f, SlotFactor):
        return {"kind": "slot", "sigma": f.sigma, "size": f.size, "parity": frac_str(f.parity)}
    if isinstance(f, SuperFactor):
        return {"kind": "super", "size": f.size, "parity": frac_str(f.parity)}
    if isinstance(f, MixedFactor):
        return {
            "kind": "mixed",
            "steinberg_arm": f.st_arm,
            "speh_arm": f.speh_arm,
            "twist": frac_str(f.twist),
        }
    raise TypeError(f"not an opaque factor: {f!r}")


def level_json(level: LevelIndex, width: int) -> list:
    return list(level.padded(width))


def constituent_json(label: ConstituentLabel, width: int) -> dict:
    out = {"level": level_json(label.level, width), "parameter": param_json(label.param)}
    if label.opaque:
        out["opaque"] = [opaque_json(f) for f in label.opaque]
    return out


def datum_json(datum) -> dict:
    out = {"g": datum.g, "ell": datum.ell, "epsilon": datum.epsilon, "m": datum.m}
    if datum.q is not None:
        out["q"] = datum.q
    return out


def elliptic_json(label: EllipticLabel) -> dict:
    out = {"steinberg_arm": label.st, "total": label.total, "twist": frac_str(label.twist)}
    if label.family != "fwd":
        out["family"] = label.family
    return out


def label_json(label, width: int = 0):
    if isinstance(label, ConstituentLabel):
        return constituent_json(label, width)
    if isinstance(label, EllipticLabel):
        return elliptic_json(label)
    if isinstance(label, TensorLabel):
        return {"tensor": [label_json(f, width) for f in label.factors]}
    if isinstance(label, YoungDiagram):
        return {"partition": list(label.rows)}
    return {"repr": repr(label)}


def groth_json(element: GrothElement, width: int = 0) -> list:
    return [{"label": label_json(k, width), "mult": m} for k, m in element.items()]


def classical_json(element: GrothElement) -> list:
    return [{"partition": list(dy.rows), "mult": m} for dy, m in element.items()]


def graph_json(graph: ExtensionGraph, datum, width: int) -> dict:
    return {
        "context": datum_json(datum),
        "constituents": [constituent_json(v, width) for v in graph.vertices],
        "edges": [list(e) for e in graph.edges],
        "orientation": graph.orientation,
    }


def graph_dot(graph: ExtensionGraph, title: str = "extensions") -> str:
    lines = [f"digraph \"{title}\" {{"]
    for idx, v in enumerate(graph.vertices):
        lines.append(f"  n{idx} [label=\"{v!r}\"];")
    for a, b in graph.edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
