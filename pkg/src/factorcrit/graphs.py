"""Simple undirected graphs and the clique-join families used throughout.

Vertices are labeled 0..n-1.  Constructed families fix their labeling:
the join clique occupies the first block of labels, then the parts in the
order given, so tests and partitions can address blocks by index ranges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph construction or malformed graph input."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is kept both as sorted tuples (for iteration) and as integer
    bitmasks (for the subset-enumeration hot loops).
    """

    __slots__ = ("n", "m", "adj", "masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        masks = [0] * n
        edge_set: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex index out of range in edge ({u}, {v})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in edge_set:
                raise GraphError(f"duplicate edge ({e[0]}, {e[1]})")
            edge_set.add(e)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.m = len(edge_set)
        self.masks = tuple(masks)
        self.adj = tuple(
            tuple(v for v in range(n) if masks[u] >> v & 1) for u in range(n)
        )
        self._edges = tuple(sorted(edge_set))

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted (u, v) pairs with u < v."""
        return self._edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def add_edge(self, u: int, v: int) -> "Graph":
        """New graph with edge uv added (uv must be absent)."""
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) already present")
        return Graph(self.n, self._edges + ((min(u, v), max(u, v)),))

    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on the complement, relabeled densely."""
        drop = set(vertices)
        keep = [v for v in range(self.n) if v not in drop]
        relabel = {v: i for i, v in enumerate(keep)}
        edges = [
            (relabel[u], relabel[v])
            for u, v in self._edges
            if u not in drop and v not in drop
        ]
        return Graph(len(keep), edges)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        full = (1 << self.n) - 1
        return _reachable_mask(self.masks, 0, full) == full

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of the family K_s v (K_{n_1} u ... u K_{n_t})."""

    s: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if self.s < 1:
            raise GraphError("join clique size must be >= 1")
        if not self.parts:
            raise GraphError("parts list must be nonempty")
        if any(p < 1 for p in self.parts):
            raise GraphError("every part order must be >= 1")

    @property
    def order(self) -> int:
        return self.s + sum(self.parts)


def _reachable_mask(masks: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from start inside `allowed`."""
    comp = (1 << start) & allowed
    frontier = comp
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & allowed & ~comp
        comp |= frontier
    return comp


def from_edge_list(text: str) -> Graph:
    """Parse the edge-list document: first line "n m", then m lines "u v".

    Errors name the offending 1-based line number.
    """
    lines = text.splitlines()
    if not lines:
        raise GraphError("empty document (line 1)")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphError("malformed header at line 1: expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphError("malformed header at line 1: expected integers") from None
    if n < 0 or m < 0:
        raise GraphError("negative count at line 1")
    if len(lines) - 1 != m:
        raise GraphError(
            f"edge count mismatch: header says {m}, found {len(lines) - 1} edge lines"
        )
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for i, line in enumerate(lines[1:], start=2):
        fields = line.split()
        if len(fields) != 2:
            raise GraphError(f"malformed edge at line {i}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphError(f"malformed edge at line {i}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex index out of range at line {i}")
        if u == v:
            raise GraphError(f"self-loop at line {i}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"duplicate edge at line {i}")
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


def to_edge_list(G: Graph) -> str:
    """Canonical edge-list document: sorted "u v" lines with u < v, LF endings."""
    out = [f"{G.n} {G.m}"]
    out.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(out) + "\n"


def complete(n: int) -> Graph:
    """The complete graph K_n."""
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def disjoint_union(A: Graph, B: Graph) -> Graph:
    """A u B with B's labels shifted by |A|."""
    shift = A.n
    edges = list(A.edges) + [(u + shift, v + shift) for u, v in B.edges]
    return Graph(A.n + B.n, edges)


def join(A: Graph, B: Graph) -> Graph:
    """A v B: disjoint union plus all edges between the two vertex sets."""
    G = disjoint_union(A, B)
    edges = list(G.edges)
    edges.extend((u, A.n + v) for u in range(A.n) for v in range(B.n))
    return Graph(G.n, edges)


def build_family(spec: FamilySpec) -> Graph:
    """K_s v (K_{n_1} u ... u K_{n_t}), join clique labeled first."""
    parts = complete(spec.parts[0])
    for p in spec.parts[1:]:
        parts = disjoint_union(parts, complete(p))
    return join(complete(spec.s), parts)


def family_partition(spec: FamilySpec) -> list[list[int]]:
    """Canonical block partition of build_family output: clique, then parts."""
    blocks = [list(range(spec.s))]
    start = spec.s
    for p in spec.parts:
        blocks.append(list(range(start, start + p)))
        start += p
    return blocks


def extremal_graph(b: int, k: int, n: int) -> Graph:
    """K_{k+1} v (K_{n-k-b-2} u (b+1)K_1), the tight case of the criterion."""
    big = n - k - b - 2
    if big < 1:
        raise GraphError(f"n - k - b - 2 = {big} < 1: no such graph")
    return build_family(FamilySpec(k + 1, (big,) + (1,) * (b + 1)))


def extremal_partition(b: int, k: int, n: int) -> list[list[int]]:
    """Three-block partition of extremal_graph: clique / big part / isolated part."""
    big = n - k - b - 2
    if big < 1:
        raise GraphError(f"n - k - b - 2 = {big} < 1: no such graph")
    return [
        list(range(k + 1)),
        list(range(k + 1, k + 1 + big)),
        list(range(k + 1 + big, n)),
    ]


def components(G: Graph, removed: int = 0) -> list[int]:
    """Component bitmasks of G minus the `removed` vertex mask."""
    rem = ((1 << G.n) - 1) & ~removed
    out = []
    while rem:
        low = rem & -rem
        comp = _reachable_mask(G.masks, low.bit_length() - 1, rem)
        out.append(comp)
        rem &= ~comp
    return out


def odd_components(G: Graph, S: Iterable[int]) -> int:
    """Number of odd-order components of G - S."""
    removed = 0
    for v in S:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} out of range")
        removed |= 1 << v
    return odd_components_mask(G.masks, G.n, removed)


def odd_components_mask(masks: Sequence[int], n: int, removed: int) -> int:
    """odd_components on raw bitmask adjacency; the subset-loop workhorse."""
    rem = ((1 << n) - 1) & ~removed
    count = 0
    while rem:
        low = rem & -rem
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            f = frontier
            while f:
                lb = f & -f
                nxt |= masks[lb.bit_length() - 1]
                f ^= lb
            frontier = nxt & rem & ~comp
            comp |= frontier
        if comp.bit_count() & 1:
            count += 1
        rem &= ~comp
    return count


def bfs_distances(G: Graph, source: int) -> list[int]:
    """Hop counts from source; -1 for unreachable vertices."""
    dist = [-1] * G.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        du = dist[u]
        for v in G.adj[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                q.append(v)
    return dist


def _max_disjoint_paths(G: Graph, s: int, t: int, cap: int) -> int:
    """Max internally vertex-disjoint s-t paths (s, t nonadjacent), via
    unit-capacity flow on the vertex-split digraph.  Stops early at `cap`."""
    n = G.n
    # node 2v = v_in, 2v+1 = v_out; arcs: v_in->v_out (cap 1, v not s,t),
    # u_out->v_in for each edge uv.  Residual kept as adjacency dict.
    INF = 1 << 30
    cap_map: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap_map[(2 * v, 2 * v + 1)] = INF if v in (s, t) else 1
    for u, v in G.edges:
        cap_map[(2 * u + 1, 2 * v)] = INF
        cap_map[(2 * v + 1, 2 * u)] = INF
    succ: dict[int, list[int]] = {}
    for (a, bnode) in cap_map:
        succ.setdefault(a, []).append(bnode)
        succ.setdefault(bnode, []).append(a)
    residual = dict(cap_map)
    for (a, bnode) in cap_map:
        residual.setdefault((bnode, a), 0)
    flow = 0
    src, sink = 2 * s + 1, 2 * t
    while flow < cap:
        # BFS augmenting path
        parent = {src: -1}
        q = deque([src])
        while q and sink not in parent:
            u = q.popleft()
            for v in succ.get(u, ()):
                if v not in parent and residual.get((u, v), 0) > 0:
                    parent[v] = u
                    q.append(v)
        if sink not in parent:
            break
        v = sink
        while v != src:
            u = parent[v]
            residual[(u, v)] -= 1
            residual[(v, u)] += 1
            v = u
        flow += 1
    return flow


def vertex_connectivity(G: Graph) -> int:
    """kappa(G): n-1 for complete graphs; 0 if disconnected; otherwise the
    minimum over nonadjacent pairs of the max number of internally
    vertex-disjoint paths (Menger)."""
    if G.n < 2:
        raise GraphError("vertex connectivity undefined for a single vertex")
    if not G.is_connected():
        return 0
    if G.m == G.n * (G.n - 1) // 2:
        return G.n - 1
    best = G.n - 1
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if not G.has_edge(u, v):
                best = min(best, _max_disjoint_paths(G, u, v, best))
                if best == 0:
                    return 0
    return best
