"""Solids (pyramids, trihedra, stamps, prisms) and closed sets of induced cycles.

A solid of a host graph is an induced subgraph isomorphic to one of the four
solid graphs, so it is identified by its vertex set.  Everything here works
on vertex bitmasks of the host; features are reported in host vertex ids.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .cycles import (
    DEFAULT_CYCLE_CAP,
    BudgetExceeded,
    InducedCycle,
    _induced_cycle_seqs,
    canonical_cycle,
    is_cycle_in,
    is_induced_cycle,
)
from .graph import Graph, GraphError, iter_bits, mask_of

KIND_ORDER = ("pyramid", "trihedron", "stamp", "prism")
BRUTEFORCE_MAX_N = 12
SURFACE_MAX_N = 10
SURFACE_MAX_CYCLES = 64
DEFAULT_SURFACE_BUDGET = 5_000_000


@dataclass(frozen=True)
class SolidKind:
    """Which solid graph, plus its distinguished vertices.

    Only the fields relevant to ``kind`` are set: ``apex`` for a pyramid,
    ``branch`` for a trihedron, ``triangle`` and ``meeting`` for a stamp,
    ``triangles`` for a prism.
    """

    kind: str
    apex: int | None = None
    branch: tuple[int, int] | None = None
    triangle: tuple[int, int, int] | None = None
    meeting: int | None = None
    triangles: tuple[tuple[int, int, int], tuple[int, int, int]] | None = None

    def features(self) -> dict:
        if self.kind == "pyramid":
            return {"apex": self.apex}
        if self.kind == "trihedron":
            return {"branch": list(self.branch)}
        if self.kind == "stamp":
            return {"triangle": list(self.triangle), "meeting": self.meeting}
        return {"triangles": [list(t) for t in self.triangles]}

    def relabel(self, old_ids: Sequence[int]) -> "SolidKind":
        f = lambda v: old_ids[v]  # noqa: E731
        return SolidKind(
            self.kind,
            apex=None if self.apex is None else f(self.apex),
            branch=None if self.branch is None else tuple(map(f, self.branch)),
            triangle=None if self.triangle is None else tuple(map(f, self.triangle)),
            meeting=None if self.meeting is None else f(self.meeting),
            triangles=None if self.triangles is None else tuple(tuple(map(f, t)) for t in self.triangles),
        )


@dataclass(frozen=True, order=True)
class Solid:
    vertices: tuple[int, ...]
    kind: SolidKind = field(compare=False)

    @cached_property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def as_dict(self) -> dict:
        return {"kind": self.kind.kind, "vertices": list(self.vertices), "features": self.kind.features()}


# --- recognition ------------------------------------------------------------

def _degrees(g: Graph, mask: int) -> dict[int, int]:
    return {v: (g.adj[v] & mask).bit_count() for v in iter_bits(mask)}


def _connected(g: Graph, mask: int) -> bool:
    if not mask:
        return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def _components(g: Graph, mask: int, removed_edges: set[tuple[int, int]] = frozenset()) -> list[int]:
    out = []
    left = mask
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                row = g.adj[v] & mask
                for a, b in removed_edges:
                    if v == a:
                        row &= ~(1 << b)
                    elif v == b:
                        row &= ~(1 << a)
                nxt |= row
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        out.append(seen)
        left &= ~seen
    return out


def _as_pyramid(g: Graph, mask: int, deg: dict[int, int]) -> SolidKind | None:
    for w in sorted(v for v, d in deg.items() if d >= 3):
        rest = mask & ~(1 << w)
        if rest.bit_count() < 3:
            continue
        if all((g.adj[v] & rest).bit_count() == 2 for v in iter_bits(rest)) and _connected(g, rest):
            return SolidKind("pyramid", apex=w)
    return None


def _as_trihedron(g: Graph, mask: int, deg: dict[int, int]) -> SolidKind | None:
    three = [v for v, d in deg.items() if d == 3]
    if len(three) != 2 or any(d not in (2, 3) for d in deg.values()):
        return None
    x, y = sorted(three)
    # all three paths need length >= 2, else the face through the other two has a chord
    if g.has_edge(x, y):
        return None
    rest = mask & ~(1 << x) & ~(1 << y)
    comps = _components(g, rest)
    if len(comps) != 3:
        return None
    if not all(g.adj[x] & c and g.adj[y] & c for c in comps):
        return None
    return SolidKind("trihedron", branch=(x, y))


def _as_stamp(g: Graph, mask: int, deg: dict[int, int]) -> SolidKind | None:
    three = sorted(v for v, d in deg.items() if d == 3)
    if len(three) != 4 or any(d not in (2, 3) for d in deg.values()):
        return None
    n = mask.bit_count()
    m = sum(deg.values()) // 2
    if m != n + 2:
        return None
    for x in three:
        tri = tuple(v for v in three if v != x)
        a, b, c = tri
        if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
            continue
        # minus the triangle: a tree with x of degree 3 and the corners as its leaves
        removed = {(a, b), (b, c), (a, c)}
        if len(_components(g, mask, removed)) == 1:
            return SolidKind("stamp", triangle=tri, meeting=x)
    return None


def _as_prism(g: Graph, mask: int, deg: dict[int, int]) -> SolidKind | None:
    three = sorted(v for v, d in deg.items() if d == 3)
    if len(three) != 6 or any(d not in (2, 3) for d in deg.values()):
        return None
    n = mask.bit_count()
    if sum(deg.values()) // 2 != n + 3:
        return None
    first = three[0]
    for b, c in combinations(three[1:], 2):
        t1 = (first, b, c)
        t2 = tuple(v for v in three if v not in t1)
        if not all(g.has_edge(p, q) for p, q in combinations(t1, 2)):
            continue
        if not all(g.has_edge(p, q) for p, q in combinations(t2, 2)):
            continue
        removed = set(combinations(t1, 2)) | set(combinations(t2, 2))
        comps = _components(g, mask, removed)
        if len(comps) != 3:
            continue
        m1, m2 = mask_of(t1), mask_of(t2)
        if all((cm & m1).bit_count() == 1 and (cm & m2).bit_count() == 1 for cm in comps):
            return SolidKind("prism", triangles=(t1, t2))
    return None


def classify_mask(g: Graph, mask: int) -> SolidKind | None:
    """Recognize the subgraph of ``g`` induced on ``mask`` as a solid graph, if it is one."""
    n = mask.bit_count()
    if n < 4:
        return None
    deg = _degrees(g, mask)
    if min(deg.values()) < 2:
        return None
    m = sum(deg.values()) // 2
    if m < n + 1:
        return None
    if not _connected(g, mask):
        return None
    found = _as_pyramid(g, mask, deg)
    if found is None and m == n + 1:
        found = _as_trihedron(g, mask, deg)
    if found is None and m == n + 2:
        found = _as_stamp(g, mask, deg)
    if found is None and m == n + 3:
        found = _as_prism(g, mask, deg)
    return found


def classify_solid(h: Graph) -> SolidKind | None:
    return classify_mask(h, h.all_mask)


# --- enumeration ------------------------------------------------------------

def solid_masks(g: Graph, cycle_masks: Sequence[int] | None = None,
                cap: int = DEFAULT_CYCLE_CAP) -> dict[int, SolidKind]:
    """Map vertex mask -> kind for every solid of ``g``.

    Every solid is the union of two of its faces that share at least two
    vertices, and its faces are induced cycles of the host, so scanning
    pairs of induced cycles finds them all.
    """
    if cycle_masks is None:
        cycle_masks = [mask_of(c) for c in _induced_cycle_seqs(g, cap)]
    found: dict[int, SolidKind] = {}
    seen: set[int] = set()
    cm = list(cycle_masks)
    for i, a in enumerate(cm):
        for b in cm[i + 1:]:
            inter = a & b
            if inter & (inter - 1) == 0:
                continue
            u = a | b
            if u in seen:
                continue
            seen.add(u)
            kind = classify_mask(g, u)
            if kind is not None:
                found[u] = kind
    for a in cm:
        for w in iter_bits(g.all_mask & ~a):
            if (g.adj[w] & a).bit_count() >= 3:
                u = a | (1 << w)
                if u in seen:
                    continue
                seen.add(u)
                kind = classify_mask(g, u)
                if kind is not None:
                    found[u] = kind
    return found


def count_solids(g: Graph, cycle_masks: Sequence[int] | None = None) -> int:
    return len(solid_masks(g, cycle_masks))


def _to_solids(found: dict[int, SolidKind]) -> list[Solid]:
    return sorted(Solid(tuple(iter_bits(m)), k) for m, k in found.items())


def enumerate_solids(g: Graph) -> list[Solid]:
    return _to_solids(solid_masks(g))


def enumerate_solids_bruteforce(g: Graph) -> list[Solid]:
    """Classify every vertex subset of size >= 4 (exponential; test oracle)."""
    if g.n > BRUTEFORCE_MAX_N:
        raise GraphError(f"subset scan limited to n <= {BRUTEFORCE_MAX_N}, got {g.n}")
    found = {}
    for mask in range(1, 1 << g.n):
        if mask.bit_count() >= 4:
            kind = classify_mask(g, mask)
            if kind is not None:
                found[mask] = kind
    return _to_solids(found)


def solid_faces(g: Graph, solid: Solid | int) -> list[InducedCycle]:
    mask = solid if isinstance(solid, int) else solid.mask
    return sorted(InducedCycle(c) for c in _induced_cycle_seqs(g, DEFAULT_CYCLE_CAP) if mask_of(c) & ~mask == 0)


# --- closed sets ------------------------------------------------------------

def edge_usage(cycles: Iterable[InducedCycle]) -> Counter:
    use: Counter = Counter()
    for c in cycles:
        use.update(c.edges())
    return use


@dataclass(frozen=True)
class ClosedSet:
    """A set of induced cycles in which every edge of their union is used exactly twice."""

    cycles: tuple[InducedCycle, ...]

    @cached_property
    def usage(self) -> Counter:
        return edge_usage(self.cycles)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.usage)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for c in self.cycles for v in c.vertices}))


def _check_members(g: Graph, cycles: Iterable[InducedCycle]) -> list[InducedCycle]:
    out = []
    for c in cycles:
        if not isinstance(c, InducedCycle):
            c = InducedCycle.from_sequence(c)
        if not is_induced_cycle(g, c.vertices):
            raise GraphError(f"{c.vertices} is not an induced cycle of the graph")
        out.append(c)
    return out


def is_closed_set(g: Graph, cycles: Iterable[InducedCycle]) -> bool:
    members = set(_check_members(g, cycles))
    if not members:
        return False
    return all(k == 2 for k in edge_usage(members).values())


def decompose_closed_set(g: Graph, cycles: Iterable[InducedCycle]) -> list[ClosedSet]:
    """Split a closed set into its indecomposable closed parts.

    A closed subset can share no edge with the rest, so the parts are the
    classes of the "shares an edge" relation.
    """
    members = sorted(set(_check_members(g, cycles)))
    if not members or not all(k == 2 for k in edge_usage(members).values()):
        raise GraphError("input is not a closed set")
    parent = list(range(len(members)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[tuple[int, int], int] = {}
    for i, c in enumerate(members):
        for e in c.edges():
            if e in owner:
                parent[find(i)] = find(owner[e])
            else:
                owner[e] = i
    groups: dict[int, list[InducedCycle]] = {}
    for i, c in enumerate(members):
        groups.setdefault(find(i), []).append(c)
    parts = [ClosedSet(tuple(sorted(grp))) for grp in groups.values()]
    return sorted(parts, key=lambda p: p.cycles)


def refine_cycle(g: Graph, cycle: Sequence[int]) -> list[InducedCycle]:
    """Split a cycle along chords into induced cycles.

    The result covers the cycle's vertices, uses each cycle edge once and
    every chord used twice.
    """
    seq = list(cycle)
    if not is_cycle_in(g, seq):
        raise GraphError(f"{tuple(seq)} is not a cycle of the graph")
    out: list[InducedCycle] = []
    while True:
        k = len(seq)
        best = None
        for i in range(k):
            for j in range(i + 2, k):
                if i == 0 and j == k - 1:
                    continue
                if g.has_edge(seq[i], seq[j]):
                    span = min(j - i, k - (j - i))
                    if best is None or span < best[0]:
                        best = (span, i, j)
        if best is None:
            out.append(InducedCycle.from_sequence(seq))
            break
        _, i, j = best
        inner = seq[i:j + 1]
        outer = seq[j:] + seq[:i + 1]
        if len(inner) > len(outer):
            inner, outer = outer, inner
        out.append(InducedCycle.from_sequence(inner))
        seq = outer
    _verify_refinement(g, cycle, out)
    return sorted(out)


def _verify_refinement(g: Graph, cycle: Sequence[int], parts: list[InducedCycle]) -> None:
    ring = list(cycle)
    base = {(min(a, b), max(a, b)) for a, b in zip(ring, ring[1:] + ring[:1])}
    use = edge_usage(parts)
    ok = {v for p in parts for v in p.vertices} == set(ring)
    ok = ok and all(use.get(e, 0) == 1 for e in base)
    ok = ok and all(k == 2 for e, k in use.items() if e not in base)
    ok = ok and all(is_induced_cycle(g, p.vertices) for p in parts)
    if not ok:
        raise AssertionError(f"refinement of {tuple(cycle)} violates its defining properties")


class _ClosedSearch:
    """Backtracking over cycle subsets with per-edge usage capped at two."""

    def __init__(self, cycles: Sequence[InducedCycle], budget: int):
        self.cycles = list(cycles)
        eid: dict[tuple[int, int], int] = {}
        self.cedges = []
        for c in self.cycles:
            self.cedges.append([eid.setdefault(e, len(eid)) for e in c.edges()])
        self.by_edge: list[list[int]] = [[] for _ in eid]
        for i, es in enumerate(self.cedges):
            for e in es:
                self.by_edge[e].append(i)
        self.budget = budget
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"closed-set search exceeded {self.budget} nodes")

    def closed_sets(self):
        """Yield every nonempty closed subset once, as a sorted tuple of indices."""
        usage = [0] * len(self.by_edge)
        state = [0] * len(self.cycles)  # 0 free, 1 chosen, -1 excluded
        for first in range(len(self.cycles)):
            self._tick()
            state[first] = 1
            for e in self.cedges[first]:
                usage[e] += 1
            yield from self._extend(usage, state)
            for e in self.cedges[first]:
                usage[e] -= 1
            state[first] = -1
        return

    def _extend(self, usage, state):
        self._tick()
        pick = None
        pick_cands = None
        for e, u in enumerate(usage):
            if u == 1:
                cands = [i for i in self.by_edge[e] if state[i] == 0
                         and all(usage[f] < 2 for f in self.cedges[i])]
                if pick is None or len(cands) < len(pick_cands):
                    pick, pick_cands = e, cands
                    if not cands:
                        break
        if pick is None:
            yield tuple(i for i, s in enumerate(state) if s == 1)
            return
        tried = []
        for i in pick_cands:
            state[i] = 1
            for f in self.cedges[i]:
                usage[f] += 1
            yield from self._extend(usage, state)
            for f in self.cedges[i]:
                usage[f] -= 1
            state[i] = -1
            tried.append(i)
        for i in tried:
            state[i] = 0


def closed_sets_within(g: Graph, mask: int, cycles: Sequence[InducedCycle] | None = None,
                       budget: int = DEFAULT_SURFACE_BUDGET) -> list[ClosedSet]:
    """Every nonempty closed set of induced cycles of ``g`` lying inside ``mask``."""
    if cycles is None:
        cycles = [InducedCycle(c) for c in _induced_cycle_seqs(g, DEFAULT_CYCLE_CAP)]
    inside = sorted((c for c in cycles if c.mask & ~mask == 0), key=lambda c: (len(c), c))
    search = _ClosedSearch(inside, budget)
    return [ClosedSet(tuple(sorted(inside[i] for i in idx))) for idx in search.closed_sets()]


def enumerate_minimal_closed_surfaces(g: Graph, budget: int = DEFAULT_SURFACE_BUDGET) -> list[tuple[int, ...]]:
    """Vertex sets of the minimal closed surfaces of ``g``.

    A closed surface is minimal when no closed surface lives on a strictly
    smaller vertex subset.  Subsets are scanned by size; a subset that
    carries any closed set and contains no smaller hit is minimal, because
    a closed set on a strictly smaller vertex set would contain a smaller hit.
    """
    if g.n > SURFACE_MAX_N:
        raise GraphError(f"surface search limited to n <= {SURFACE_MAX_N}, got {g.n}")
    cycles = [InducedCycle(c) for c in _induced_cycle_seqs(g, DEFAULT_CYCLE_CAP)]
    if len(cycles) > SURFACE_MAX_CYCLES:
        raise GraphError(f"surface search limited to {SURFACE_MAX_CYCLES} induced cycles, got {len(cycles)}")
    # one node for setup plus one per subset visited, so tiny budgets always trip
    nodes_left = budget - 1
    hits: list[int] = []
    masks = sorted(range(1, 1 << g.n), key=lambda m: (m.bit_count(), m))
    for mask in masks:
        nodes_left -= 1
        if nodes_left < 0:
            raise BudgetExceeded(f"closed-set search exceeded {budget} nodes")
        if mask.bit_count() < 3 or any(h & mask == h for h in hits):
            continue
        inside = sorted((c for c in cycles if c.mask & ~mask == 0), key=lambda c: (len(c), c))
        if len(inside) < 2:
            continue
        search = _ClosedSearch(inside, nodes_left)
        found = next(search.closed_sets(), None)
        nodes_left -= search.nodes
        if found is not None:
            hits.append(mask)
    return sorted(tuple(iter_bits(m)) for m in hits)


def is_strongly_minimal(g: Graph, mask: int, budget: int = DEFAULT_SURFACE_BUDGET) -> bool:
    """True when every closed surface on a subset of ``mask`` is the same subgraph.

    Requires at least one closed surface inside ``mask``.
    """
    sets = closed_sets_within(g, mask, budget=budget)
    if not sets:
        return False
    shapes = {(cs.vertices, tuple(cs.edges)) for cs in sets}
    return len(shapes) == 1 and shapes.pop()[0] == tuple(iter_bits(mask))


def strong_minimality_violations(g: Graph, budget: int = DEFAULT_SURFACE_BUDGET) -> list[tuple[int, ...]]:
    """Minimal closed surfaces (by vertex set) that are not strongly minimal."""
    return [vs for vs in enumerate_minimal_closed_surfaces(g, budget)
            if not is_strongly_minimal(g, mask_of(vs), budget)]


def faces_are_closed_and_indecomposable(g: Graph, solid: Solid) -> bool:
    faces = solid_faces(g, solid)
    if not faces or not is_closed_set(g, faces):
        return False
    return len(decompose_closed_set(g, faces)) == 1


__all__ = [
    "KIND_ORDER", "SolidKind", "Solid", "ClosedSet", "classify_mask", "classify_solid", "solid_masks",
    "count_solids", "enumerate_solids", "enumerate_solids_bruteforce", "solid_faces", "edge_usage",
    "is_closed_set", "decompose_closed_set", "refine_cycle", "closed_sets_within",
    "enumerate_minimal_closed_surfaces", "is_strongly_minimal", "strong_minimality_violations",
    "faces_are_closed_and_indecomposable", "canonical_cycle",
]
