"""Exact ground truth: chromatic number, complete and Kuratowski minors, vertex compression.

All searches are exhaustive and carry an explicit node budget.  Running out
of budget raises :class:`BudgetExceeded`, which callers must treat as
"unknown" rather than as a negative answer.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .cycles import BudgetExceeded
from .graph import (
    Graph,
    GraphError,
    VertexMap,
    complete_bipartite_graph,
    complete_graph,
    components,
    contract_edge,
    induced_subgraph,
    is_connected,
    iter_bits,
    mask_of,
    merge_partition,
)

DEFAULT_BUDGET = 2_000_000
CHROMATIC_MAX_N = 16
MINOR_MAX_N = 12


def default_budget() -> int:
    env = os.environ.get("BETH_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class _Counter:
    def __init__(self, budget: int | None, what: str):
        self.budget = default_budget() if budget is None else budget
        self.what = what
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"{self.what} exceeded {self.budget} search nodes")


# --- coloring ---------------------------------------------------------------

@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    def is_proper(self, g: Graph) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())


def _color_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _k_coloring(g: Graph, k: int, counter: _Counter) -> list[int] | None:
    order = _color_order(g)
    colors = [-1] * g.n
    full = (1 << k) - 1

    def domain(v):
        used = 0
        for u in iter_bits(g.adj[v]):
            if colors[u] >= 0:
                used |= 1 << colors[u]
        return full & ~used

    def rec(i, top):
        counter.tick()
        if i == g.n:
            return True
        v = order[i]
        dom = domain(v)
        # symmetry: at most one brand-new color per step
        limit = min(k, top + 1)
        for c in range(limit):
            if not dom >> c & 1:
                continue
            colors[v] = c
            # forward check: every uncolored neighbor keeps a legal color
            ok = True
            for u in iter_bits(g.adj[v]):
                if colors[u] < 0 and domain(u) == 0:
                    ok = False
                    break
            if ok and rec(i + 1, max(top, c + 1)):
                return True
            colors[v] = -1
        return False

    return list(colors) if rec(0, 0) else None


def chromatic_number(g: Graph, budget: int | None = None) -> tuple[int, Coloring]:
    """Least k with a proper k-coloring, by iterative deepening over k."""
    if g.n > CHROMATIC_MAX_N:
        raise GraphError(f"exact coloring limited to n <= {CHROMATIC_MAX_N}, got {g.n}")
    counter = _Counter(budget, "chromatic search")
    counter.tick()
    if g.n == 0:
        return 0, Coloring((), 0)
    for k in range(1, g.n + 1):
        found = _k_coloring(g, k, counter)
        if found is not None:
            return k, Coloring(tuple(found), k)
    raise AssertionError("unreachable: n colors always suffice")


def has_k_coloring(g: Graph, k: int, budget: int | None = None) -> bool:
    if k <= 0:
        return g.n == 0
    return _k_coloring(g, k, _Counter(budget, "coloring search")) is not None


def optimal_colorings(g: Graph, limit: int | None = None, budget: int | None = None) -> list[list[list[int]]]:
    """Distinct partitions of V into chi(g) independent sets (color classes, ids ascending)."""
    chi, _ = chromatic_number(g, budget)
    counter = _Counter(budget, "coloring enumeration")
    out: list[list[list[int]]] = []
    blocks: list[int] = []

    def rec(v):
        counter.tick()
        if limit is not None and len(out) >= limit:
            return
        if v == g.n:
            if len(blocks) == chi:
                out.append([list(iter_bits(b)) for b in blocks])
            return
        if len(blocks) + (g.n - v) < chi:
            return
        for i in range(len(blocks)):
            if not g.adj[v] & blocks[i]:
                blocks[i] |= 1 << v
                rec(v + 1)
                blocks[i] &= ~(1 << v)
        if len(blocks) < chi:
            blocks.append(1 << v)
            rec(v + 1)
            blocks.pop()

    rec(0)
    return out


# --- minors -----------------------------------------------------------------

@dataclass(frozen=True)
class MinorWitness:
    branch_sets: tuple[tuple[int, ...], ...]
    contractions: tuple[tuple[int, int], ...] = ()

    def as_dict(self) -> dict:
        return {"branch_sets": [list(b) for b in self.branch_sets],
                "contractions": [list(e) for e in self.contractions]}


def _connected_mask(g: Graph, mask: int) -> bool:
    start = mask & -mask
    seen = frontier = start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def _mask_components(g: Graph, mask: int) -> list[int]:
    out = []
    while mask:
        start = mask & -mask
        seen = frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            nxt &= mask & ~seen
            seen |= nxt
            frontier = nxt
        out.append(seen)
        mask &= ~seen
    return out


def _bfs_order(g: Graph, mask: int) -> list[int]:
    start = (mask & -mask).bit_length() - 1
    order = [start]
    seen = 1 << start
    i = 0
    while i < len(order):
        for u in iter_bits(g.adj[order[i]] & mask & ~seen):
            seen |= 1 << u
            order.append(u)
        i += 1
    return order


def _partition_model(g: Graph, host: int, pattern: Graph, classes: Sequence[Sequence[int]],
                     swap_first_two: bool, counter: _Counter) -> list[int] | None:
    """Partition the connected vertex set ``host`` into connected parts, one per pattern
    vertex, with a host edge between the parts of every pattern edge.

    Leftover vertices of a connected host can always be absorbed into an
    adjacent part, so a minor model exists iff such a partition does.
    Parts within one class are interchangeable and are opened in index
    order; ``swap_first_two`` also lets class 0 open before class 1.
    """
    t = pattern.n
    order = _bfs_order(g, host)
    if len(order) < t:
        return None
    class_of = {}
    for ci, cls in enumerate(classes):
        for j, p in enumerate(cls):
            class_of[p] = (ci, j)
    parts = [0] * t
    opened = [0] * len(classes)
    rest = host

    pat = pattern.adj

    def viable() -> bool:
        for p in range(t):
            pm = parts[p]
            if not pm:
                continue
            nb = 0
            for v in iter_bits(pm):
                nb |= g.adj[v]
            if nb & rest:
                comps = _mask_components(g, pm)
                if len(comps) > 1:
                    for c in comps:
                        reach = 0
                        for v in iter_bits(c):
                            reach |= g.adj[v]
                        if not reach & rest:
                            return False
                continue
            # the part can no longer grow: it must be connected and already
            # touch every part it is required to touch
            if not _connected_mask(g, pm):
                return False
            for q in iter_bits(pat[p]):
                if not nb & parts[q]:
                    return False
        return True

    def adjacent(a: int, b: int) -> bool:
        for v in iter_bits(a):
            if g.adj[v] & b:
                return True
        return False

    def finished() -> bool:
        for p in range(t):
            if not _connected_mask(g, parts[p]):
                return False
        for p, q in pattern.edges():
            if not adjacent(parts[p], parts[q]):
                return False
        return True

    def rec(i):
        nonlocal rest
        counter.tick()
        n_open = sum(opened)
        if len(order) - i < t - n_open:
            return False
        if i == len(order):
            return finished()
        v = order[i]
        bit = 1 << v
        rest &= ~bit
        for p in range(t):
            ci, j = class_of[p]
            if j > opened[ci]:
                continue
            fresh = j == opened[ci]
            if fresh and swap_first_two and ci == 1 and opened[0] == 0:
                continue
            parts[p] |= bit
            if fresh:
                opened[ci] += 1
            if viable() and rec(i + 1):
                return True
            if fresh:
                opened[ci] -= 1
            parts[p] &= ~bit
        rest |= bit
        return False

    return list(parts) if rec(0) else None


def _contraction_sequence(g: Graph, parts: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Edge contractions (in the ids current at each step) collapsing each part to a vertex."""
    cur = g
    where = list(range(g.n))
    seq = []
    for pm in parts:
        if not pm:
            continue
        order = _bfs_order(g, pm)
        seen = 1 << order[0]
        for v in order[1:]:
            parent = next(u for u in iter_bits(g.adj[v] & seen))
            seen |= 1 << v
            a, b = where[parent], where[v]
            if a == b:
                continue
            e = (min(a, b), max(a, b))
            cur, vmap = contract_edge(cur, e)
            seq.append(e)
            where = [vmap[x] for x in where]
    return tuple(seq)


def find_minor_model(g: Graph, pattern: Graph, budget: int | None = None,
                     classes: Sequence[Sequence[int]] | None = None,
                     swap_first_two: bool = False,
                     _counter: _Counter | None = None) -> MinorWitness | None:
    """Branch sets of a ``pattern`` minor in ``g``, or None if there is none.

    ``pattern`` must be connected.  ``classes`` groups pattern vertices whose
    roles are interchangeable (used only to prune symmetric branches).
    """
    if g.n > MINOR_MAX_N:
        raise GraphError(f"minor search limited to n <= {MINOR_MAX_N}, got {g.n}")
    if pattern.n == 0:
        return MinorWitness(())
    if not is_connected(pattern):
        raise GraphError("pattern graph must be connected")
    counter = _counter or _Counter(budget, "minor search")
    counter.tick()
    if classes is None:
        classes = [[p] for p in range(pattern.n)]
    for comp in components(g):
        host = mask_of(comp)
        parts = _partition_model(g, host, pattern, classes, swap_first_two, counter)
        if parts is not None:
            seq = _contraction_sequence(g, parts) if len(comp) == g.n else ()
            return MinorWitness(tuple(tuple(iter_bits(p)) for p in parts), seq)
    return None


def has_complete_minor(g: Graph, t: int, budget: int | None = None,
                       _counter: _Counter | None = None) -> MinorWitness | None:
    if t < 0:
        raise GraphError("t must be nonnegative")
    return find_minor_model(g, complete_graph(t), budget, classes=[list(range(t))], _counter=_counter)


def hadwiger_number(g: Graph, budget: int | None = None) -> tuple[int, MinorWitness]:
    """Largest t with a K^t minor, with branch sets and an edge-contraction sequence to K^t."""
    if not is_connected(g):
        raise GraphError("hadwiger_number requires a connected graph")
    if g.n > MINOR_MAX_N:
        raise GraphError(f"minor search limited to n <= {MINOR_MAX_N}, got {g.n}")
    counter = _Counter(budget, "hadwiger search")
    # a spanning model of K^t needs C(t,2) edges between parts plus n - t inside them
    top = 1
    while top + 1 <= g.n and comb(top + 1, 2) + g.n - top - 1 <= g.m:
        top += 1
    best, witness = 1, has_complete_minor(g, 1, _counter=counter)
    for t in range(2, top + 1):
        w = has_complete_minor(g, t, _counter=counter)
        if w is None:
            break
        best, witness = t, w
    return best, witness


def is_planar_small(g: Graph, budget: int | None = None) -> bool:
    """Planarity by excluding K5 and K3,3 minors."""
    if g.n > MINOR_MAX_N:
        raise GraphError(f"planarity oracle limited to n <= {MINOR_MAX_N}, got {g.n}")
    counter = _Counter(budget, "planarity search")
    if has_complete_minor(g, 5, _counter=counter) is not None:
        return False
    k33 = complete_bipartite_graph(3, 3)
    return find_minor_model(g, k33, classes=[[0, 1, 2], [3, 4, 5]], swap_first_two=True,
                            _counter=counter) is None


def verify_minor_witness(g: Graph, pattern: Graph, w: MinorWitness) -> bool:
    sets = [mask_of(b) for b in w.branch_sets]
    if len(sets) != pattern.n or any(not s for s in sets):
        return False
    if any(a & b for a, b in combinations(sets, 2)):
        return False
    if not all(_connected_mask(g, s) for s in sets):
        return False
    for p, q in pattern.edges():
        if not any(g.adj[v] & sets[q] for v in iter_bits(sets[p])):
            return False
    return True


# --- vertex compression -----------------------------------------------------

def closed_neighborhood(g: Graph, w: int) -> list[int]:
    return sorted(set(iter_bits(g.adj[w])) | {w})


def vertex_compress(g: Graph, w: int, coloring: Sequence[Sequence[int]] | None = None,
                    budget: int | None = None) -> tuple[Graph, VertexMap]:
    """Identify each color class of an optimal coloring of the closed neighborhood of ``w``.

    ``coloring`` optionally supplies those classes (host vertex ids); it must
    be a proper coloring of the neighborhood with exactly as many classes as its
    chromatic number.
    """
    if not is_connected(g):
        raise GraphError("vertex compression requires a connected graph")
    nbhd = closed_neighborhood(g, w)
    local, old = induced_subgraph(g, nbhd)
    if local.is_complete():
        return g, tuple(range(g.n))
    chi, default = chromatic_number(local, budget)
    if coloring is None:
        blocks = [[old[v] for v in cls] for cls in default.classes()]
    else:
        blocks = [sorted(b) for b in coloring if b]
        flat = sorted(v for b in blocks for v in b)
        if flat != nbhd:
            raise GraphError("coloring must partition the closed neighborhood")
        for b in blocks:
            if any(g.has_edge(x, y) for x, y in combinations(b, 2)):
                raise GraphError(f"color class {b} is not independent")
        if len(blocks) != chi:
            raise GraphError(f"coloring uses {len(blocks)} colors, chi of the neighborhood is {chi}")
    return merge_partition(g, blocks)


def neighborhood_colorings(g: Graph, w: int, limit: int | None = None,
                           budget: int | None = None) -> list[list[list[int]]]:
    """Optimal colorings of the closed neighborhood of ``w``, as host-id color classes."""
    local, old = induced_subgraph(g, closed_neighborhood(g, w))
    return [[[old[v] for v in cls] for cls in part] for part in optimal_colorings(local, limit, budget)]


def compress_to_complete(g: Graph, seed: int, budget: int | None = None) -> list[Graph]:
    """Repeated vertex compression at seeded-random vertices until the graph is complete."""
    if g.n > MINOR_MAX_N:
        raise GraphError(f"compression trajectory limited to n <= {MINOR_MAX_N}, got {g.n}")
    rng = random.Random(seed)
    traj = [g]
    cur = g
    while not cur.is_complete():
        movable = [v for v in range(cur.n)
                   if not induced_subgraph(cur, closed_neighborhood(cur, v))[0].is_complete()]
        w = rng.choice(movable)
        cur, _ = vertex_compress(cur, w, budget=budget)
        traj.append(cur)
    return traj


def nonedge_preserving_chi(g: Graph, budget: int | None = None) -> tuple[int, int] | None:
    """A nonedge whose contraction keeps the chromatic number, or None for complete graphs."""
    from .graph import contract_nonedge
    chi, _ = chromatic_number(g, budget)
    for u, v in g.nonedges():
        h, _ = contract_nonedge(g, u, v)
        if chromatic_number(h, budget)[0] == chi:
            return u, v
    return None


__all__ = [
    "Coloring", "MinorWitness", "chromatic_number", "has_k_coloring", "optimal_colorings",
    "find_minor_model", "has_complete_minor", "hadwiger_number", "is_planar_small",
    "verify_minor_witness", "closed_neighborhood", "vertex_compress", "neighborhood_colorings",
    "compress_to_complete", "nonedge_preserving_chi", "default_budget", "BudgetExceeded",
]
