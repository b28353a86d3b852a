"""Pure simplicial complexes and the derived objects distance arguments use.

A complex is stored as its facet list only; ridges and lower faces are the
implied subsets.  Vertices are 1-based integers and facets are sorted tuples,
so every derived object (ridge lists, dual graphs, GF(2) boundary matrices)
has a canonical form and equality is structural.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from pathlib import Path

from .errors import DisconnectedGraph

Facet = tuple[int, ...]
Ridge = tuple[int, ...]

# all-sources BFS is quadratic; above this node count diameter_exact("auto")
# switches to the fringe-pruned exact search
ALL_SOURCES_AUTO_LIMIT = 1024


@dataclass(frozen=True)
class Complex:
    """Pure (dim_facet - 1)-dimensional complex on vertices 1..n_vertices.

    Facets are strictly increasing dim_facet-tuples, stored in a fixed order;
    all other faces are implied subsets, which keeps purity automatic.
    """

    dim_facet: int
    n_vertices: int
    facets: tuple[Facet, ...]

    def __post_init__(self):
        d, n = self.dim_facet, self.n_vertices
        if d < 1:
            raise ValueError(f"facet size must be at least 1, got {d}")
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        seen = set()
        for F in self.facets:
            if not isinstance(F, tuple) or len(F) != d:
                raise ValueError(f"facet {F!r} does not have {d} vertices")
            if F[0] < 1 or F[-1] > n:
                raise ValueError(f"facet {F} leaves the vertex range 1..{n}")
            if any(F[i] >= F[i + 1] for i in range(d - 1)):
                raise ValueError(f"facet {F} is not strictly increasing")
            if F in seen:
                raise ValueError(f"duplicate facet {F}")
            seen.add(F)

    @classmethod
    def from_facets(cls, facets, n_vertices=None):
        """Build a complex from any iterable of vertex collections."""
        norm = tuple(tuple(sorted(F)) for F in facets)
        if not norm:
            raise ValueError("from_facets needs at least one facet")
        if n_vertices is None:
            n_vertices = max(F[-1] for F in norm)
        return cls(len(norm[0]), n_vertices, norm)

    @property
    def facet_count(self):
        return len(self.facets)


@dataclass(frozen=True)
class DualGraph:
    """Facet-adjacency graph: nodes are facet indices, edges shared ridges."""

    n_nodes: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n_nodes:
            raise ValueError("adjacency length differs from node count")
        for u, nbrs in enumerate(self.adjacency):
            if any(nbrs[i] >= nbrs[i + 1] for i in range(len(nbrs) - 1)):
                raise ValueError(f"neighbors of {u} are not sorted strictly")
            for v in nbrs:
                if v == u:
                    raise ValueError(f"self-loop at node {u}")
                if not 0 <= v < self.n_nodes:
                    raise ValueError(f"neighbor {v} out of range at node {u}")
        nbr_sets = [set(nbrs) for nbrs in self.adjacency]
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u not in nbr_sets[v]:
                    raise ValueError(f"edge {u}->{v} is not symmetric")

    @classmethod
    def from_edges(cls, n_nodes, edges):
        nbrs = [set() for _ in range(n_nodes)]
        for u, v in edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n_nodes, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def edge_count(self):
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degrees(self):
        return [len(nbrs) for nbrs in self.adjacency]


@dataclass(frozen=True)
class BoundaryMatrixGF2:
    """Sparse ridge-by-facet incidence matrix mod 2, in canonical order.

    Rows and columns are sorted lexicographically by vertex tuple, so two
    matrices are equal iff the underlying incidence structures are.
    row_support[i] lists the column indices whose facet contains row i's ridge.
    """

    rows: tuple[Ridge, ...]
    cols: tuple[Facet, ...]
    row_support: tuple[tuple[int, ...], ...]

    @property
    def shape(self):
        return (len(self.rows), len(self.cols))

    def entry(self, i, j):
        return 1 if j in self.row_support[i] else 0

    def column_weights(self):
        weights = [0] * len(self.cols)
        for support in self.row_support:
            for j in support:
                weights[j] += 1
        return weights

    def row_weights(self):
        return [len(support) for support in self.row_support]

    def to_dense(self):
        dense = [[0] * len(self.cols) for _ in self.rows]
        for i, support in enumerate(self.row_support):
            for j in support:
                dense[i][j] = 1
        return dense


def ridges_of(c: Complex):
    """All (d-1)-subsets of facets, deduplicated and in lexicographic order.

    Returns a list of (ridge, containing_facet_indices) pairs; facet indices
    refer to positions in c.facets and come out ascending.
    """
    by_ridge: dict[Ridge, list[int]] = {}
    for fi, F in enumerate(c.facets):
        for r in itertools.combinations(F, len(F) - 1):
            by_ridge.setdefault(r, []).append(fi)
    return sorted(by_ridge.items())


def dual_graph(c: Complex) -> DualGraph:
    """Facets become adjacent exactly when they share a full ridge."""
    nbrs = [set() for _ in c.facets]
    for _, fids in ridges_of(c):
        if len(fids) > 1:
            for a, b in itertools.combinations(fids, 2):
                nbrs[a].add(b)
                nbrs[b].add(a)
    return DualGraph(len(c.facets), tuple(tuple(sorted(s)) for s in nbrs))


def boundary_matrix_gf2(c: Complex) -> BoundaryMatrixGF2:
    """Top boundary matrix over GF(2): entry 1 iff the ridge lies in the facet."""
    cols = tuple(sorted(c.facets))
    col_of = {F: j for j, F in enumerate(cols)}
    rows = []
    support = []
    for ridge, fids in ridges_of(c):
        rows.append(ridge)
        support.append(tuple(sorted(col_of[c.facets[fi]] for fi in fids)))
    return BoundaryMatrixGF2(tuple(rows), cols, tuple(support))


def is_pseudomanifold(c: Complex) -> bool:
    """True iff every ridge lies in exactly two facets."""
    return all(len(fids) == 2 for _, fids in ridges_of(c))


def is_strongly_connected(c: Complex) -> bool:
    """True iff the dual graph is connected (vacuously true below 2 facets)."""
    g = dual_graph(c)
    if g.n_nodes <= 1:
        return True
    return min(_bfs_distances(g.adjacency, 0)) >= 0


def _bfs_distances(adj, src):
    dist = [-1] * len(adj)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def _bfs_with_parents(adj, src):
    dist = [-1] * len(adj)
    parent = [-1] * len(adj)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                parent[v] = u
                queue.append(v)
    return dist, parent


def _require_connected(g: DualGraph):
    if g.n_nodes == 0:
        raise DisconnectedGraph("graph has no nodes")
    dist = _bfs_distances(g.adjacency, 0)
    if min(dist) < 0:
        raise DisconnectedGraph("graph is not connected")
    return dist


def _argmax(values):
    # smallest index on ties, for reproducibility
    return max(range(len(values)), key=values.__getitem__)


def _fringe_pruned_diameter(adj, dist0):
    """Exact diameter via eccentricity search pruned by BFS fringes.

    Roots a BFS at the midpoint of a double-sweep path and processes fringe
    sets in decreasing depth; any pair realizing a distance above 2(i-1) has
    an endpoint at depth >= i, so the scan can stop once the certified lower
    bound reaches that threshold.  Output equals the all-sources diameter.
    """
    a = _argmax(dist0)
    dist_a, parent = _bfs_with_parents(adj, a)
    b = _argmax(dist_a)
    mid = b
    for _ in range(dist_a[b] // 2):
        mid = parent[mid]
    dist_mid = _bfs_distances(adj, mid)
    ecc_mid = max(dist_mid)
    levels = [[] for _ in range(ecc_mid + 1)]
    for v, dv in enumerate(dist_mid):
        levels[dv].append(v)
    lower = max(dist_a[b], ecc_mid)
    i = ecc_mid
    upper = 2 * ecc_mid
    while upper > lower:
        best = lower
        for v in levels[i]:
            ecc = max(_bfs_distances(adj, v))
            if ecc > best:
                best = ecc
        if best > 2 * (i - 1):
            return best
        lower = best
        upper = 2 * (i - 1)
        i -= 1
    return lower


def diameter_exact(g: DualGraph, method: str = "auto") -> int:
    """Exact diameter of a connected graph.

    method "all-sources" takes the max BFS eccentricity over every node;
    "ifub" runs the fringe-pruned search (same result, few BFS passes on
    long thin graphs); "auto" picks by size.  Raises DisconnectedGraph.
    """
    dist0 = _require_connected(g)
    if method == "auto":
        method = "all-sources" if g.n_nodes <= ALL_SOURCES_AUTO_LIMIT else "ifub"
    if method == "all-sources":
        return max(max(_bfs_distances(g.adjacency, s)) for s in range(g.n_nodes))
    if method == "ifub":
        return _fringe_pruned_diameter(g.adjacency, dist0)
    raise ValueError(f"unknown diameter method {method!r}")


def pair_distance(g: DualGraph, u: int, v: int) -> int:
    """BFS distance between two nodes of a connected graph."""
    if not (0 <= u < g.n_nodes and 0 <= v < g.n_nodes):
        raise ValueError(f"nodes {u}, {v} out of range 0..{g.n_nodes - 1}")
    _require_connected(g)
    return _bfs_distances(g.adjacency, u)[v]


def double_sweep_lower_bound(g: DualGraph) -> int:
    """Certified diameter lower bound: eccentricity of a farthest-from-0 node."""
    dist0 = _require_connected(g)
    a = _argmax(dist0)
    return max(_bfs_distances(g.adjacency, a))


# ---------------------------------------------------------------------------
# text format: line 1 "dim <d> vertices <n>", then one facet per line,
# "#" starts a comment line; writer output round-trips bit-exactly


def complex_to_text(c: Complex) -> str:
    lines = [f"dim {c.dim_facet} vertices {c.n_vertices}"]
    lines.extend(" ".join(map(str, F)) for F in c.facets)
    return "\n".join(lines) + "\n"


def complex_from_text(text: str) -> Complex:
    header = None
    facets = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 4 or parts[0] != "dim" or parts[2] != "vertices":
                raise ValueError(f"bad header line: {line!r}")
            header = (int(parts[1]), int(parts[3]))
            continue
        facets.append(tuple(int(tok) for tok in line.split()))
    if header is None:
        raise ValueError("missing header line")
    return Complex(header[0], header[1], tuple(facets))


def write_complex(c: Complex, path) -> None:
    Path(path).write_text(complex_to_text(c), encoding="utf-8")


def read_complex(path) -> Complex:
    return complex_from_text(Path(path).read_text(encoding="utf-8"))
