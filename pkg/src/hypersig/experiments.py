"""Random hypergraph generation and the reduction-proportion sweep.

The sweep measures, per (vertex count, density) cell, the average ratio of
frame edges to input edges over many seeded random instances, and renders
the result as CSV. Everything is deterministic: instance seeds derive from
a stable 64-bit hash of (seed, n, density, run), so identical configs give
byte-identical output.
"""

from __future__ import annotations

import hashlib
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, sqrt
from typing import Iterable, Sequence

from .errors import DisconnectedError, DomainError, InfeasibleError
from .frames import frame
from .hypergraph import Hypergraph, is_connected
from .linalg import Rational

log = logging.getLogger(__name__)

DENSITY_MODES = ("edges-per-vertex", "avg-degree")

_REJECTION_RETRIES = 64


def stable_seed(*parts) -> int:
    """Platform-independent 64-bit seed from a tuple of printable parts.

    Fractions are folded in as ``p/q`` so equal densities hash equally
    however they were written.
    """
    text = ":".join(
        f"{p.numerator}/{p.denominator}" if isinstance(p, Fraction) else repr(p)
        for p in parts
    )
    digest = hashlib.blake2b(text.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def _sample_simple_edges(rng: random.Random, n: int, m: int, ell: int) -> set[tuple[int, ...]]:
    edges: set[tuple[int, ...]] = set()
    while len(edges) < m:
        edges.add(tuple(sorted(rng.sample(range(n), ell))))
    return edges


def _edges_connected(n: int, edges: Iterable[tuple[int, ...]]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        r = find(e[0])
        for v in e[1:]:
            rv = find(v)
            if rv != r:
                parent[rv] = r
    return len({find(x) for x in range(n)}) == 1


def random_hypergraph(n: int, m: int, ell: int, seed: int) -> Hypergraph:
    """Connected uniform hypergraph with exactly ``m`` edges, sampled
    uniformly from simple edges (no repeated vertex inside an edge).

    Connectivity is enforced by rejection sampling with a bounded retry
    budget; if every draw comes out disconnected, the instance falls back
    to a randomly chained spanning skeleton whose bridge edges count
    toward ``m``. Deterministic per (n, m, ell, seed).
    """
    if ell < 3:
        raise DomainError("arity must be >= 3")
    if n < ell:
        raise InfeasibleError(f"need at least {ell} vertices, got {n}")
    if m < 1:
        raise InfeasibleError("need at least one edge")
    bridges_needed = -((n - 1) // -(ell - 1))  # ceil
    if m < bridges_needed:
        raise InfeasibleError(
            f"{m} edges cannot connect {n} vertices at arity {ell}"
        )
    if m > comb(n, ell):
        raise InfeasibleError(
            f"{m} distinct simple edges do not exist on {n} vertices"
        )
    rng = random.Random(stable_seed("hypergraph", n, m, ell, seed))
    for _ in range(_REJECTION_RETRIES):
        edges = _sample_simple_edges(rng, n, m, ell)
        if _edges_connected(n, edges):
            break
    else:
        edges = _chained_instance(rng, n, m, ell)
        log.info(
            "rejection budget exhausted for n=%d m=%d ell=%d seed=%d; "
            "fell back to chained bridges",
            n, m, ell, seed,
        )
    labels = [f"x{i}" for i in range(n)]
    h = Hypergraph.build(ell, labels, sorted(edges))
    assert is_connected(h)
    return h


def _chained_instance(
    rng: random.Random, n: int, m: int, ell: int
) -> set[tuple[int, ...]]:
    """Spanning chain of bridge edges over a shuffled vertex order, topped
    up with random simple edges to reach exactly ``m``."""
    order = list(range(n))
    rng.shuffle(order)
    edges: set[tuple[int, ...]] = set()
    covered = order[: 1]
    i = 1
    while i < n:
        fresh = order[i : i + ell - 1]
        i += len(fresh)
        base = rng.sample(covered, ell - len(fresh))
        edges.add(tuple(sorted(base + fresh)))
        covered.extend(fresh)
    while len(edges) < m:
        edges.add(tuple(sorted(rng.sample(range(n), ell))))
    return edges


def reduction_proportion(h: Hypergraph) -> Fraction:
    """Frame edge count over input edge count, exact, in (0, 1]. Equals 1
    exactly on stable inputs."""
    if h.n_edges == 0:
        raise DomainError("reduction proportion is undefined without edges")
    if not is_connected(h):
        raise DisconnectedError("reduction proportion requires a connected hypergraph")
    return Fraction(frame(h).frame.n_edges, h.n_edges)


@dataclass(frozen=True)
class SweepConfig:
    vertex_counts: tuple[int, ...]
    densities: tuple[Fraction, ...]
    runs_per_cell: int
    seed: int
    ell: int = 3
    density_mode: str = "edges-per-vertex"

    def __post_init__(self) -> None:
        if not self.vertex_counts or any(n <= 0 for n in self.vertex_counts):
            raise DomainError("vertex counts must be positive")
        if not self.densities or any(d <= 0 for d in self.densities):
            raise DomainError("densities must be positive")
        if self.runs_per_cell < 1:
            raise DomainError("runs per cell must be >= 1")
        if self.density_mode not in DENSITY_MODES:
            raise DomainError(f"density mode must be one of {DENSITY_MODES}")

    def edge_count(self, n: int, density: Fraction) -> int:
        """Edges per cell: density*n edges, or density*n/ell when the
        density counts average vertex degree."""
        if self.density_mode == "avg-degree":
            return round(density * n / self.ell)
        return round(density * n)


@dataclass(frozen=True)
class SweepRow:
    n: int
    m: int
    density: Fraction
    mean_reduction_proportion: Fraction | None
    variance: Fraction | None
    runs: int
    error: str | None = None

    def __post_init__(self) -> None:
        mean = self.mean_reduction_proportion
        if mean is not None and not 0 <= mean <= 1:
            raise DomainError("mean reduction proportion out of [0, 1]")

    @property
    def stddev(self) -> float | None:
        """Square root of the exactly computed population variance; the
        one reporting-only statistic that leaves rational arithmetic."""
        if self.variance is None:
            return None
        return sqrt(float(self.variance))


def run_cell(cfg: SweepConfig, n: int, density: Fraction) -> SweepRow:
    m = cfg.edge_count(n, density)
    try:
        props = []
        for run in range(cfg.runs_per_cell):
            seed = stable_seed(cfg.seed, n, density, run)
            h = random_hypergraph(n, m, cfg.ell, seed)
            props.append(reduction_proportion(h))
    except InfeasibleError as exc:
        return SweepRow(n, m, density, None, None, 0, error=str(exc))
    runs = len(props)
    mean = sum(props, Fraction(0)) / runs
    variance = sum(((p - mean) ** 2 for p in props), Fraction(0)) / runs
    return SweepRow(n, m, density, mean, variance, runs)


def run_sweep(cfg: SweepConfig) -> list[SweepRow]:
    """One row per (n, density) cell, sizes outer, densities inner.
    Infeasible cells produce an error row and the sweep continues."""
    return [run_cell(cfg, n, d) for n in cfg.vertex_counts for d in cfg.densities]


CSV_HEADER = "n,m,density,runs,mean_reduction,stddev"


def _decimal(value: Rational | Fraction) -> str:
    return f"{float(value):.6f}"


def rows_to_csv(rows: Sequence[SweepRow]) -> str:
    """CSV rendering; rationals become 6-digit decimals. The standard
    deviation is the square root of the exactly computed variance,
    evaluated only at this rendering step."""
    lines = [CSV_HEADER]
    for row in rows:
        if row.error is not None:
            lines.append(f"{row.n},{row.m},{_decimal(row.density)},0,,")
            continue
        lines.append(
            f"{row.n},{row.m},{_decimal(row.density)},{row.runs},"
            f"{_decimal(row.mean_reduction_proportion)},{row.stddev:.6f}"
        )
    return "\n".join(lines) + "\n"
