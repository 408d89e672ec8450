"""Simple undirected graphs: edge-list parsing, connectivity, bipartiteness,
degrees, and shortest odd closed walks.

Vertices are 0-based internally; the text format and all CLI output use
1-based indices.  Edge order is significant everywhere because it fixes the
row order of the incidence matrices built downstream.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .exact import Vec


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1 with an ordered tuple of edges.

    Construction rejects loops, duplicate edges (as unordered pairs) and
    out-of-range endpoints; each stored edge is normalized to (min, max).
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph must have at least one vertex")
        seen = set()
        norm = []
        for k, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {k}: endpoint out of range")
            if u == v:
                raise ValueError(f"edge {k}: loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"edge {k}: duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists (order follows edge order)."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format into a Graph.

    One `u v` pair of 1-based vertex indices per line; blank lines and lines
    starting with `#` are ignored.  An optional first content line
    `n <count>` declares the vertex count, otherwise it is inferred as the
    largest index seen.  Loops, duplicate edges and bad tokens raise
    ParseError with the offending line number.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    declared_n = None
    max_idx = 0
    first_content = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if first_content and toks[0] == "n":
            if len(toks) != 2:
                raise ParseError(lineno, "header must be 'n <count>'")
            try:
                declared_n = int(toks[1])
            except ValueError:
                raise ParseError(lineno, f"non-integer vertex count {toks[1]!r}") from None
            if declared_n < 1:
                raise ParseError(lineno, "vertex count must be at least 1")
            first_content = False
            continue
        first_content = False
        if len(toks) != 2:
            raise ParseError(lineno, "expected two vertex indices 'u v'")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer token in {line!r}") from None
        if u < 1 or v < 1:
            raise ParseError(lineno, "vertex indices must be at least 1")
        if declared_n is not None and (u > declared_n or v > declared_n):
            raise ParseError(lineno, f"vertex index exceeds declared count {declared_n}")
        if u == v:
            raise ParseError(lineno, f"loop at vertex {u}")
        e = (u - 1, v - 1) if u < v else (v - 1, u - 1)
        if e in seen:
            raise ParseError(lineno, f"duplicate edge {u} {v}")
        seen.add(e)
        edges.append(e)
        max_idx = max(max_idx, u, v)
    n = declared_n if declared_n is not None else max_idx
    if n == 0:
        raise ParseError(0, "no vertices: file has neither edges nor a header")
    return Graph(n, tuple(edges))


def emit_edge_list(g: Graph) -> str:
    """Canonical text form: `n <count>` header then one 1-based `u v` per edge."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def is_connected(g: Graph) -> bool:
    """True iff the graph has a single connected component (BFS)."""
    adj = g.adjacency()
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                queue.append(y)
    return count == g.n


def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """2-color the graph; returns (True, sides) with sides[i] in {+1, -1}
    such that adjacent vertices get opposite signs, or (False, None)."""
    adj = g.adjacency()
    side = [0] * g.n
    for start in range(g.n):
        if side[start]:
            continue
        side[start] = 1
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if side[y] == 0:
                    side[y] = -side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False, None
    return True, side


def degrees(g: Graph) -> Vec:
    """Vertex degrees as integer-valued Fractions."""
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return [Fraction(d) for d in deg]


def odd_walk_length(g: Graph, u: int) -> int | None:
    """Length of the shortest closed walk of odd length through vertex u.

    Computed as the BFS distance from (u, even) to (u, odd) in the bipartite
    double cover; returns None when no odd closed walk exists, i.e. when u's
    component is bipartite.
    """
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    adj = g.adjacency()
    # dist[v][p]: shortest walk length u -> v with parity p
    dist = [[-1, -1] for _ in range(g.n)]
    dist[u][0] = 0
    queue = deque([(u, 0)])
    while queue:
        x, p = queue.popleft()
        d = dist[x][p]
        for y in adj[x]:
            if dist[y][1 - p] < 0:
                dist[y][1 - p] = d + 1
                queue.append((y, 1 - p))
    return dist[u][1] if dist[u][1] >= 0 else None
