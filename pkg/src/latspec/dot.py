"""DOT (graph description language) export for order structures.

Output is deterministic: nodes follow the canonical element order and
edges are emitted sorted.  Only cover edges appear, so the graphs are
Hasse diagrams (drawn bottom-up).
"""

from __future__ import annotations

from .order import DLat, Poset
from .spectra import Spectrum


def _digraph(name: str, nodes: list[tuple[str, str]], edges: list[tuple[str, str]]) -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for nid, label in nodes:
        lines.append(f'  {nid} [label="{label}"];')
    for a, b in edges:
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_dot(p: Poset, name: str = "poset") -> str:
    nodes = [(f"n{i}", p.labels[i]) for i in range(p.n)]
    edges = sorted((f"n{i}", f"n{j}") for i, j in p.covers())
    return _digraph(name, nodes, edges)


def lattice_hasse_dot(lat: DLat, name: str = "lattice") -> str:
    """Hasse diagram of the lattice itself (downset lattices are graded:
    covers add exactly one base element)."""
    nodes = [(f"e{k}", lat.fmt(m)) for k, m in enumerate(lat.elements)]
    edges = []
    for k, x in enumerate(lat.elements):
        for l, y in enumerate(lat.elements):
            if x != y and x | y == y and (y & ~x).bit_count() == 1:
                edges.append((f"e{k}", f"e{l}"))
    return _digraph(name, nodes, sorted(edges))


def spectrum_dot(spec: Spectrum, name: str = "spectrum") -> str:
    """Prime spectrum under inclusion; for an n-chain this is a path of
    n - 1 nodes."""
    lat = spec.lattice
    labels = []
    for k in range(spec.n_points):
        members = ",".join(lat.fmt(e) for e in spec.point_elements(k))
        labels.append((f"p{k}", f"P{k}: {members}"))
    edges = []
    for i in range(spec.n_points):
        for j in range(spec.n_points):
            if i == j or not spec.point_leq(i, j):
                continue
            strict_between = any(k not in (i, j) and spec.point_leq(i, k)
                                 and spec.point_leq(k, j) for k in range(spec.n_points))
            if not strict_between:
                edges.append((f"p{i}", f"p{j}"))
    return _digraph(name, labels, sorted(edges))
