"""Fusion relations, frame quotients, stability, folding, and the
constructive hypergraph families used as regression targets.

Two vertices fuse when no admissible signal for the given map separates
them on any axis. The frame is the quotient by that equivalence; taking
the frame twice changes nothing, so the frame operator is a closure on
connected uniform hypergraphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import DisconnectedError, DomainError
from .hypergraph import (
    Hypergraph,
    Partition,
    components,
    hypergraph_to_json,
    is_connected,
    quotient,
)
from .signals import LinearMap, generating_signal, signal_space


@dataclass(frozen=True, eq=True)
class FrameResult:
    """Frame of a hypergraph together with the fusion partition that
    produced it and the label map from original to frame vertices."""

    frame: Hypergraph
    fusion: Partition
    class_map: dict

    def class_labels(self, source: Hypergraph) -> list[list[str]]:
        return [[source.vertices[v] for v in block] for block in self.fusion.classes]


def fusion(h: Hypergraph, t: LinearMap) -> Partition:
    """Fusion partition: x and y share a class iff every basis signal
    agrees on x and y on every axis (the common refinement over basis
    signals and axes)."""
    if not is_connected(h):
        raise DisconnectedError("fusion requires a connected hypergraph")
    space = signal_space(h, t)
    sigs = space.signals()
    keys = [
        tuple(sig.values[a][x] for sig in sigs for a in range(h.ell))
        for x in range(h.n_vertices)
    ]
    return Partition.from_keys(keys)


def _frame_from_partition(h: Hypergraph, part: Partition) -> FrameResult:
    framed, part = quotient(h, part)
    class_map = {
        h.vertices[x]: framed.vertices[part.class_of[x]] for x in range(h.n_vertices)
    }
    return FrameResult(frame=framed, fusion=part, class_map=class_map)


def frame(h: Hypergraph) -> FrameResult:
    """Frame under the coordinate-sum map, via a generating signal: the
    fusion classes are exactly the level sets of the signal's first axis."""
    delta = generating_signal(h)  # raises on disconnected input
    part = Partition.from_keys(delta.values[0])
    return _frame_from_partition(h, part)


def frame_general(h: Hypergraph, t: LinearMap) -> FrameResult:
    """Frame under an arbitrary map, straight from the refinement
    definition (no generating-signal shortcut)."""
    return _frame_from_partition(h, fusion(h, t))


def frame_per_component(h: Hypergraph) -> FrameResult:
    """Convenience wrapper: frame each connected component independently
    and reassemble. Extension beyond the connected-input contract of
    :func:`frame`."""
    comps = components(h)
    blocks: list[tuple[int, ...]] = []
    for comp in comps.classes:
        local = {v: i for i, v in enumerate(comp)}
        sub_edges = [
            tuple(local[v] for v in e) for e in h.edges if e[0] in local
        ]
        sub = Hypergraph.build(h.ell, [h.vertices[v] for v in comp], sub_edges)
        sub_result = frame(sub)
        for block in sub_result.fusion.classes:
            blocks.append(tuple(sorted(comp[i] for i in block)))
    part = Partition.from_blocks(blocks, h.n_vertices)
    return _frame_from_partition(h, part)


def is_stable(h: Hypergraph) -> bool:
    """True iff the frame changes nothing: the fusion partition is
    all-singletons."""
    return frame(h).fusion.is_discrete()


def fold_pairs(h: Hypergraph) -> set[tuple[int, int]]:
    """Unordered vertex pairs {x, y} witnessed by two edges that agree as
    multisets once one occurrence of x resp. y is removed. Such pairs
    always fuse; one application only, no transitive closure."""
    groups: dict[tuple[int, ...], set[int]] = {}
    for e in h.edges:
        for i, v in enumerate(e):
            if i > 0 and e[i - 1] == v:
                continue  # same residual as the previous occurrence
            residual = e[:i] + e[i + 1 :]
            groups.setdefault(residual, set()).add(v)
    pairs: set[tuple[int, int]] = set()
    for members in groups.values():
        ordered = sorted(members)
        for i, x in enumerate(ordered):
            for y in ordered[i + 1 :]:
                pairs.add((x, y))
    return pairs


def attach_simplex(
    h: Hypergraph, z: str, new_labels: Sequence[str]
) -> Hypergraph:
    """Glue one fresh edge onto vertex ``z``: the edge contains ``z`` and
    ``ell - 1`` brand new vertices. Preserves stability of the input."""
    z_id = h.vertex_id(z)
    labels = list(new_labels)
    if len(labels) != h.ell - 1:
        raise DomainError(f"need exactly {h.ell - 1} new labels, got {len(labels)}")
    if len(set(labels)) != len(labels):
        raise DomainError("new labels must be distinct")
    clash = set(labels) & set(h.vertices)
    if clash:
        raise DomainError(f"labels already present: {sorted(clash)}")
    n = h.n_vertices
    new_edge = tuple(sorted([z_id] + list(range(n, n + len(labels)))))
    return Hypergraph(
        h.ell,
        h.vertices + tuple(labels),
        tuple(sorted(set(h.edges) | {new_edge})),
    )


def fan(n: int) -> Hypergraph:
    """Fan with ``n`` segments: apex ``u``, rim ``v0..vn``, one edge per
    consecutive rim pair. 3-uniform, connected, n+2 vertices, n edges."""
    if n < 1:
        raise DomainError("fan needs at least one segment")
    vertices = ["u"] + [f"v{i}" for i in range(n + 1)]
    edges = [(0, i, i + 1) for i in range(1, n + 1)]
    return Hypergraph.build(3, vertices, edges)


def mountain_range(n: int) -> Hypergraph:
    """Chain of ``n`` triangles: bases ``b0..bn``, peaks ``p1..pn``, edge
    (b_{i-1}, p_i, b_i) for each i. 3-uniform, connected, 2n+1 vertices,
    n edges, and stable under the frame operator."""
    if n < 1:
        raise DomainError("mountain range needs at least one peak")
    vertices = [f"b{i}" for i in range(n + 1)] + [f"p{i}" for i in range(1, n + 1)]
    edges = [(i - 1, i, n + i) for i in range(1, n + 1)]
    return Hypergraph.build(3, vertices, edges)


def canonical_key(h: Hypergraph) -> tuple:
    """Label-free structural key: arity, vertex count and the edge id
    tuples. Equal keys mean equal hypergraphs up to the canonical vertex
    order, which is how the regression families are compared."""
    return (h.ell, h.n_vertices, h.edges)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def frame_result_to_json(result: FrameResult, source: Hypergraph) -> dict:
    return {
        "frame": hypergraph_to_json(result.frame),
        "classes": result.class_labels(source),
        "class_map": dict(result.class_map),
    }


def save_frame_result(
    result: FrameResult, source: Hypergraph, path: str | Path
) -> None:
    Path(path).write_text(
        json.dumps(frame_result_to_json(result, source), indent=2) + "\n",
        encoding="utf-8",
    )
