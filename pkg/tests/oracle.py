"""Independent brute-force reference implementations.

Everything here is deliberately naive and shares no code with the library
paths it checks: constraint systems enumerate all ell! permutations per
edge with no row deduplication, elimination is textbook dense
Gauss-Jordan on lists of Fractions, and partitions are plain frozensets.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement, combinations, permutations

from hypersig import Hypergraph, LinearMap


def dense_constraint_rows(h: Hypergraph, t: LinearMap) -> list[list[Fraction]]:
    """All r * |E| * ell! constraint rows, dense, duplicates intact."""
    n = h.n_vertices
    rows = []
    for e in h.edges:
        for sigma in permutations(range(h.ell)):
            arr = tuple(e[s] for s in sigma)
            for i in range(t.r):
                row = [Fraction(0)] * (h.ell * n)
                for a in range(h.ell):
                    row[a * n + arr[a]] += t.entries[i][a]
                rows.append(row)
    return rows


def dense_kernel(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Kernel basis via textbook Gauss-Jordan with first-nonzero pivoting."""
    mat = [row[:] for row in rows]
    pivot_cols: list[int] = []
    prow = 0
    for col in range(ncols):
        sel = None
        for r in range(prow, len(mat)):
            if mat[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        mat[prow], mat[sel] = mat[sel], mat[prow]
        pv = mat[prow][col]
        mat[prow] = [v / pv for v in mat[prow]]
        for r in range(len(mat)):
            if r != prow and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[prow])]
        pivot_cols.append(col)
        prow += 1
        if prow == len(mat):
            break
    free = [c for c in range(ncols) if c not in set(pivot_cols)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivot_cols):
            v[c] = -mat[r][f]
        basis.append(v)
    return basis


def oracle_signal_basis(h: Hypergraph, t: LinearMap) -> list[list[Fraction]]:
    return dense_kernel(dense_constraint_rows(h, t), h.ell * h.n_vertices)


def oracle_signal_dimension(h: Hypergraph, t: LinearMap) -> int:
    return len(dense_kernel(dense_constraint_rows(h, t), h.ell * h.n_vertices))


def oracle_fusion_blocks(h: Hypergraph, t: LinearMap) -> frozenset[frozenset[int]]:
    """Fusion classes straight from the dense kernel: vertices grouped by
    their value tuples across all kernel vectors and axes."""
    return oracle_fusion_and_dimension(h, t)[0]


def oracle_fusion_and_dimension(
    h: Hypergraph, t: LinearMap
) -> tuple[frozenset[frozenset[int]], int]:
    n = h.n_vertices
    basis = dense_kernel(dense_constraint_rows(h, t), h.ell * n)
    groups: dict[tuple, set[int]] = {}
    for x in range(n):
        key = tuple(vec[a * n + x] for vec in basis for a in range(h.ell))
        groups.setdefault(key, set()).add(x)
    return frozenset(frozenset(g) for g in groups.values()), len(basis)


def partition_blocks(classes) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(block) for block in classes)


def covers_all(n: int, edges) -> bool:
    seen = set()
    for e in edges:
        seen.update(e)
    return len(seen) == n


def edges_connected(n: int, edges) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        for v in e[1:]:
            ra, rb = find(e[0]), find(v)
            if ra != rb:
                parent[rb] = ra
    return len({find(x) for x in range(n)}) == 1


def enumerate_small_connected(cap: int = 1000) -> list[Hypergraph]:
    """Deterministic exhaustive enumeration of connected 3-uniform
    hypergraphs with at most 5 vertices and at most 4 edges (multiset
    edges included), in lexicographic order, capped per (n, m) cell so the
    total stays within ``cap``."""
    cells = [(n, m) for n in (3, 4, 5) for m in (1, 2, 3, 4)]
    quota = cap // len(cells)
    out: list[Hypergraph] = []
    for n, m in cells:
        pool = sorted(combinations_with_replacement(range(n), 3))
        taken = 0
        for combo in combinations(pool, m):
            if taken >= quota:
                break
            if not covers_all(n, combo) or not edges_connected(n, combo):
                continue
            labels = [f"x{i}" for i in range(n)]
            out.append(Hypergraph.build(3, labels, combo))
            taken += 1
    return out[:cap]
