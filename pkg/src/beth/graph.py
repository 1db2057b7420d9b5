"""Simple undirected graphs on contiguous vertex ids, stored as adjacency bitsets.

Every operation here is pure: it returns a new :class:`Graph` and never
mutates its input.  Contractions also return a vertex map ``vmap`` with
``vmap[old] == new`` so callers can track where vertices went.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_GRAPH6_ORDER = 62
RANDOM_ATTEMPT_CAP = 10_000

VertexMap = tuple[int, ...]


class GraphError(ValueError):
    """Raised when an operation's precondition on a graph is violated."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class GenerationError(RuntimeError):
    pass


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def edge_ref(u: int, v: int) -> tuple[int, int]:
    """Normalized edge key ``(min, max)``."""
    if u == v:
        raise GraphError(f"edge endpoints must differ, got {u}={v}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
            if row & ~full:
                raise GraphError(f"vertex {i} has neighbors outside 0..{self.n - 1}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"adjacency not symmetric for {i}-{j}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels length does not match n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def nonedges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.adj[u] >> v & 1:
                    out.append((u, v))
        return out

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, graph6={to_graph6(self)!r})" if self.n <= MAX_GRAPH6_ORDER \
            else f"Graph(n={self.n}, m={self.m})"


# --- named graphs -----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def octahedron() -> Graph:
    """K_{2,2,2}; antipodal pairs are (0,1), (2,3), (4,5)."""
    return Graph.from_edges(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if u // 2 != v // 2])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def triangular_prism() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


# --- serialization ----------------------------------------------------------

def to_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_ORDER:
        raise GraphError(f"graph6 short form supports n <= {MAX_GRAPH6_ORDER}, got {g.n}")
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(">>graph6<<"):
        s = s[10:]
        base = 10
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside graph6 range 63..126", base + k)
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error(f"long-form header (n > {MAX_GRAPH6_ORDER}) not supported", base)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = s[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit stream: need {nbytes} data bytes, got {len(body)}",
                          base + 1 + len(body))
    if len(body) > nbytes:
        raise Graph6Error(f"trailing data after {nbytes} data bytes", base + 1 + nbytes)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", base + nbytes)
    return Graph(n, tuple(rows))


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines, with an optional leading ``n <count>`` header.

    Blank lines and ``#`` comments are ignored.  Duplicate edges collapse.
    """
    n_header = None
    edges: set[tuple[int, int]] = set()
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if not seen_content and toks[0] == "n":
            if len(toks) != 2 or not toks[1].isdigit():
                raise GraphError(f"line {lineno}: malformed header {raw!r}")
            n_header = int(toks[1])
            seen_content = True
            continue
        seen_content = True
        if len(toks) != 2 or not all(t.isdigit() for t in toks):
            raise GraphError(f"line {lineno}: expected two nonnegative integers, got {raw!r}")
        u, v = int(toks[0]), int(toks[1])
        if u == v:
            raise GraphError(f"line {lineno}: self-loop {u}-{v}")
        edges.add(edge_ref(u, v))
    top = max((v for e in edges for v in e), default=-1) + 1
    if n_header is not None:
        if top > n_header:
            raise GraphError(f"edge endpoint {top - 1} exceeds header n={n_header}")
        top = n_header
    return Graph.from_edges(top, sorted(edges))


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# --- structural operations --------------------------------------------------

def quotient(g: Graph, vmap: Sequence[int], n_new: int) -> Graph:
    """Image of ``g`` under a surjective vertex map; loops dropped, multi-edges merged."""
    rows = [0] * n_new
    for u in range(g.n):
        nu = vmap[u]
        for v in iter_bits(g.adj[u]):
            nv = vmap[v]
            if nu != nv:
                rows[nu] |= 1 << nv
    labels = None
    if g.labels is not None:
        merged: list[list[str]] = [[] for _ in range(n_new)]
        for u in range(g.n):
            merged[vmap[u]].append(g.labels[u])
        labels = tuple("+".join(parts) for parts in merged)
    return Graph(n_new, tuple(rows), labels)


def _merge_map(n: int, u: int, v: int) -> VertexMap:
    lo, hi = (u, v) if u < v else (v, u)
    return tuple(lo if x == hi else (x - 1 if x > hi else x) for x in range(n))


def contract_edge(g: Graph, e: tuple[int, int]) -> tuple[Graph, VertexMap]:
    u, v = e
    if u == v or not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    vmap = _merge_map(g.n, u, v)
    return quotient(g, vmap, g.n - 1), vmap


def contract_nonedge(g: Graph, u: int, v: int) -> tuple[Graph, VertexMap]:
    if u == v:
        raise GraphError("cannot identify a vertex with itself")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex out of range: {u}, {v}")
    if g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is an edge; use contract_edge")
    vmap = _merge_map(g.n, u, v)
    return quotient(g, vmap, g.n - 1), vmap


def merge_partition(g: Graph, blocks: Iterable[Iterable[int]]) -> tuple[Graph, VertexMap]:
    """Identify every block to one vertex; equivalent to contracting block by block.

    Each merged vertex takes the smallest id of its block, and ids are
    compacted order-preservingly, matching repeated pairwise contraction.
    """
    rep = list(range(g.n))
    used = set()
    for block in blocks:
        block = sorted(block)
        for x in block:
            if not 0 <= x < g.n:
                raise GraphError(f"vertex {x} out of range")
            if x in used:
                raise GraphError(f"vertex {x} appears in two blocks")
            used.add(x)
            rep[x] = block[0]
    keep = sorted(set(rep))
    new_id = {r: i for i, r in enumerate(keep)}
    vmap = tuple(new_id[rep[x]] for x in range(g.n))
    return quotient(g, vmap, len(keep)), vmap


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows), g.labels)


def add_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    if u == v:
        raise GraphError("self-loop")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows), g.labels)


def cone(g: Graph) -> tuple[Graph, int]:
    """Add an apex adjacent to every vertex; the apex gets id ``g.n``."""
    w = g.n
    rows = [row | (1 << w) for row in g.adj] + [g.all_mask]
    labels = g.labels + ("apex",) if g.labels is not None else None
    return Graph(g.n + 1, tuple(rows), labels), w


def subdivide_edge(g: Graph, e: tuple[int, int], k: int) -> Graph:
    """Replace edge ``e`` by a path of length ``k``; new vertices get ids n, n+1, ..."""
    u, v = e
    if k < 2:
        raise GraphError(f"subdivision length must be >= 2, got {k}")
    if not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    edges = [x for x in g.edges() if x != edge_ref(u, v)]
    chain = [u] + list(range(g.n, g.n + k - 1)) + [v]
    edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(g.n + k - 1, edges)


def _is_clique(g: Graph, vs: Sequence[int]) -> bool:
    return all(g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def clique_sum(g1: Graph, g2: Graph, pairs: Sequence[tuple[int, int]]) -> Graph:
    """Glue ``g1`` and ``g2`` along cliques; ``pairs`` lists ``(v1, v2)`` identifications.

    ``g1`` keeps its ids; the unpaired vertices of ``g2`` follow in id order.
    No edges are deleted.
    """
    if not pairs:
        raise GraphError("clique-sum needs at least one identified vertex")
    side1 = [a for a, _ in pairs]
    side2 = [b for _, b in pairs]
    if len(set(side1)) != len(side1) or len(set(side2)) != len(side2):
        raise GraphError("clique vertices must be distinct")
    if not _is_clique(g1, side1) or not _is_clique(g2, side2):
        raise GraphError("designated vertex sets must induce complete subgraphs")
    ident = dict((b, a) for a, b in pairs)
    nxt = g1.n
    vmap2 = {}
    for x in range(g2.n):
        if x in ident:
            vmap2[x] = ident[x]
        else:
            vmap2[x] = nxt
            nxt += 1
    edges = set(g1.edges())
    edges |= {edge_ref(vmap2[a], vmap2[b]) for a, b in g2.edges()}
    return Graph.from_edges(nxt, sorted(edges))


def hajos_merge(g1: Graph, g2: Graph, x1: int, y1: int, x2: int, y2: int) -> Graph:
    """Hajos construction: identify x1 with x2, delete x1y1 and x2y2, join y1y2."""
    if not g1.has_edge(x1, y1):
        raise GraphError(f"{x1}-{y1} is not an edge of the first graph")
    if not g2.has_edge(x2, y2):
        raise GraphError(f"{x2}-{y2} is not an edge of the second graph")
    nxt = g1.n
    vmap2 = {}
    for x in range(g2.n):
        if x == x2:
            vmap2[x] = x1
        else:
            vmap2[x] = nxt
            nxt += 1
    edges = set(g1.edges()) - {edge_ref(x1, y1)}
    edges |= {edge_ref(vmap2[a], vmap2[b]) for a, b in g2.edges() if edge_ref(a, b) != edge_ref(x2, y2)}
    edges.add(edge_ref(y1, vmap2[y2]))
    return Graph.from_edges(nxt, sorted(edges))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``s``; returns it with ``old_ids[new] == old``."""
    old = sorted(set(s))
    for v in old:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    return induced_subgraph_mask(g, mask_of(old)), old


def induced_subgraph_mask(g: Graph, mask: int) -> Graph:
    old = list(iter_bits(mask))
    pos = {v: i for i, v in enumerate(old)}
    rows = []
    for v in old:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << pos[u]
        rows.append(row)
    labels = tuple(g.labels[v] for v in old) if g.labels is not None else None
    return Graph(len(old), tuple(rows), labels)


def reach(g: Graph, start: int, within: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside the vertex mask ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected_mask(g: Graph, mask: int) -> bool:
    if not mask:
        return False
    start = (mask & -mask).bit_length() - 1
    return reach(g, start, mask) == mask


def components(g: Graph) -> list[list[int]]:
    left = g.all_mask
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = reach(g, start, left)
        out.append(list(iter_bits(comp)))
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_cut_edge(g: Graph, e: tuple[int, int]) -> bool:
    return len(components(delete_edge(g, e))) > len(components(g))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) conditioned on connectivity by rejection."""
    if n < 1:
        raise GraphError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    for _ in range(RANDOM_ATTEMPT_CAP):
        g = random_graph(n, p, rng)
        if is_connected(g):
            return g
    raise GenerationError(f"no connected G({n}, {p}) sample in {RANDOM_ATTEMPT_CAP} attempts (seed={seed})")


def distance_two_pair(g: Graph) -> tuple[int, int] | None:
    """A nonadjacent pair with a common neighbor, or None when no such pair exists."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and g.adj[u] & g.adj[v]:
                return u, v
    return None
