"""Uniform hypergraphs with orbit-representative edges, plus partitions,
connectivity and generic quotients.

An edge is an unordered multiset of exactly ``ell`` vertices, stored as
its sorted tuple of vertex ids (the canonical representative of the orbit
of tuples under permutation of positions). Vertex labels are arbitrary
strings; internally vertices are dense integer ids given by their
position in the vertex list.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from itertools import permutations
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DomainError, FormatError

MIN_ARITY = 3


@dataclass(frozen=True)
class Hypergraph:
    """Immutable ``ell``-uniform hypergraph.

    ``vertices`` is an ordered tuple of distinct labels (index = vertex id);
    ``edges`` is a lexicographically sorted tuple of canonical edge tuples.
    Repeated vertices inside an edge are allowed; repeated edges are not
    (the edge set is a set of orbits).
    """

    ell: int
    vertices: tuple[str, ...]
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.ell < MIN_ARITY:
            raise DomainError(f"arity must be >= {MIN_ARITY}, got {self.ell}")
        if not self.vertices:
            raise DomainError("vertex set must be nonempty")
        if len(set(self.vertices)) != len(self.vertices):
            raise DomainError("vertex labels must be distinct")
        n = len(self.vertices)
        for e in self.edges:
            if len(e) != self.ell:
                raise DomainError(f"edge {e} has wrong arity")
            if any(not (0 <= v < n) for v in e):
                raise DomainError(f"edge {e} references unknown vertex id")
            if tuple(sorted(e)) != e:
                raise DomainError(f"edge {e} is not canonical (sorted)")
        if len(set(self.edges)) != len(self.edges):
            raise DomainError("duplicate edges")
        if tuple(sorted(self.edges)) != self.edges:
            raise DomainError("edges not in canonical order")

    @classmethod
    def build(
        cls,
        ell: int,
        vertices: Sequence[str],
        edges: Iterable[Sequence[int]] = (),
    ) -> "Hypergraph":
        """Construct from arbitrary edge tuples, canonicalizing and
        collapsing duplicate orbits silently."""
        canon = {tuple(sorted(e)) for e in edges}
        return cls(ell, tuple(vertices), tuple(sorted(canon)))

    @classmethod
    def from_labels(
        cls,
        ell: int,
        vertices: Sequence[str],
        edges: Iterable[Sequence[str]] = (),
    ) -> "Hypergraph":
        index = {lab: i for i, lab in enumerate(vertices)}
        id_edges = []
        for e in edges:
            try:
                id_edges.append([index[lab] for lab in e])
            except KeyError as exc:
                raise DomainError(f"unknown vertex label {exc.args[0]!r}") from None
        return cls.build(ell, vertices, id_edges)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def vertex_id(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise DomainError(f"unknown vertex label {label!r}") from None

    def canonicalize_edge(self, t: Sequence[int]) -> tuple[int, ...]:
        """Sorted orbit representative of a tuple; idempotent."""
        if len(t) != self.ell:
            raise DomainError(f"tuple length {len(t)} != arity {self.ell}")
        for v in t:
            if not (0 <= v < self.n_vertices):
                raise DomainError(f"unknown vertex id {v}")
        return tuple(sorted(t))

    def edge_labels(self, e: Sequence[int]) -> tuple[str, ...]:
        return tuple(self.vertices[v] for v in e)


def arrangements(e: Sequence[int]) -> list[tuple[int, ...]]:
    """All distinct tuples obtained by permuting the entries of ``e``,
    in lexicographic order.

    For an edge with entry multiplicities ``m1, m2, ...`` this yields
    ``ell! / (m1! * m2! * ...)`` tuples.
    """
    return sorted(set(permutations(e)))


@dataclass(frozen=True)
class Partition:
    """Partition of ``{0, ..., n-1}`` into canonical classes.

    Classes are sorted member lists; class ids are assigned so that the
    class containing the smallest uncovered id gets the next id. Two
    equal partitions therefore have identical encodings.
    """

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...] = field(compare=False)

    @classmethod
    def from_class_map(cls, class_of: Sequence[int]) -> "Partition":
        groups: dict[int, list[int]] = {}
        for x, c in enumerate(class_of):
            groups.setdefault(c, []).append(x)
        blocks = [tuple(sorted(g)) for g in groups.values()]
        return cls.from_blocks(blocks, len(class_of))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Sequence[int]], n: int) -> "Partition":
        ordered = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])
        class_of = [-1] * n
        for cid, block in enumerate(ordered):
            if not block:
                raise DomainError("empty class")
            for x in block:
                if not (0 <= x < n):
                    raise DomainError(f"member {x} out of range")
                if class_of[x] != -1:
                    raise DomainError(f"member {x} in two classes")
                class_of[x] = cid
        if any(c == -1 for c in class_of):
            raise DomainError("partition does not cover all elements")
        return cls(tuple(ordered), tuple(class_of))

    @classmethod
    def from_keys(cls, keys: Sequence) -> "Partition":
        """Group elements by equal key; one class per distinct key."""
        groups: dict = {}
        for x, k in enumerate(keys):
            groups.setdefault(k, []).append(x)
        return cls.from_blocks(list(groups.values()), len(keys))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(tuple((i,) for i in range(n)), tuple(range(n)))

    @property
    def n_elements(self) -> int:
        return len(self.class_of)

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def is_discrete(self) -> bool:
        return self.n_classes == self.n_elements


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def components(h: Hypergraph) -> Partition:
    """Connected components via union-find over edges.

    All vertices sharing an edge are merged; isolated vertices end up in
    singleton classes.
    """
    uf = _UnionFind(h.n_vertices)
    for e in h.edges:
        first = e[0]
        for v in e[1:]:
            uf.union(first, v)
    return Partition.from_class_map([uf.find(x) for x in range(h.n_vertices)])


def is_connected(h: Hypergraph) -> bool:
    return components(h).n_classes == 1


def quotient(h: Hypergraph, p: Partition) -> tuple[Hypergraph, Partition]:
    """Quotient of ``h`` by the equivalence ``p``.

    Each class becomes one vertex, labelled by the original label of its
    smallest member; edges are mapped entrywise through the class map and
    canonicalized, with duplicate images collapsed (the quotient edge set
    is a set of orbits). Returns the quotient and the partition used.
    """
    if p.n_elements != h.n_vertices:
        raise DomainError(
            f"partition covers {p.n_elements} elements, hypergraph has {h.n_vertices}"
        )
    labels = tuple(h.vertices[block[0]] for block in p.classes)
    mapped = {tuple(sorted(p.class_of[v] for v in e)) for e in h.edges}
    return Hypergraph(h.ell, labels, tuple(sorted(mapped))), p


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------
#
# Schema shared by every CLI command:
#   {"ell": int, "vertices": [str, ...], "edges": [[str, ...], ...]}
# Edge member order is irrelevant; edges are canonicalized on load and
# duplicate orbits are collapsed with a warning.


def hypergraph_to_json(h: Hypergraph) -> dict:
    return {
        "ell": h.ell,
        "vertices": list(h.vertices),
        "edges": [list(h.edge_labels(e)) for e in h.edges],
    }


def hypergraph_from_json(obj) -> Hypergraph:
    if not isinstance(obj, dict):
        raise FormatError("hypergraph document must be a JSON object")
    try:
        ell = obj["ell"]
        vertices = obj["vertices"]
        edges = obj["edges"]
    except KeyError as exc:
        raise FormatError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(ell, int):
        raise FormatError("'ell' must be an integer")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise FormatError("'vertices' must be an array of strings")
    if not vertices:
        raise FormatError("'vertices' must be nonempty")
    if len(set(vertices)) != len(vertices):
        raise FormatError("'vertices' must be distinct")
    if not isinstance(edges, list):
        raise FormatError("'edges' must be an array")
    index = {lab: i for i, lab in enumerate(vertices)}
    id_edges = []
    for e in edges:
        if not isinstance(e, list) or len(e) != ell:
            raise FormatError(f"edge {e!r} must be an array of {ell} vertex labels")
        try:
            id_edges.append(tuple(sorted(index[lab] for lab in e)))
        except (KeyError, TypeError):
            raise FormatError(f"edge {e!r} references unknown vertex") from None
    distinct = set(id_edges)
    if len(distinct) != len(id_edges):
        warnings.warn(
            f"collapsed {len(id_edges) - len(distinct)} duplicate edge orbit(s)",
            stacklevel=2,
        )
    try:
        return Hypergraph(ell, tuple(vertices), tuple(sorted(distinct)))
    except DomainError as exc:
        raise FormatError(str(exc)) from exc


def dumps_hypergraph(h: Hypergraph) -> str:
    return json.dumps(hypergraph_to_json(h), indent=2) + "\n"


def save_hypergraph(h: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(dumps_hypergraph(h), encoding="utf-8")


def load_hypergraph(path: str | Path) -> Hypergraph:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON in {path}: {exc}") from exc
    return hypergraph_from_json(obj)
