"""Induced (chordless) cycles and the small censuses built on them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .graph import Graph, GraphError, contract_edge, induced_subgraph_mask, iter_bits, mask_of

DEFAULT_CYCLE_CAP = 10**6


class CycleCapExceeded(RuntimeError):
    pass


class BudgetExceeded(RuntimeError):
    """A search ran past its node budget; the answer is unknown, not negative."""


@dataclass(frozen=True, order=True)
class InducedCycle:
    """A chordless cycle stored as its canonical vertex sequence.

    Canonical form starts at the least vertex and walks toward the smaller
    of its two neighbors, so two cycles are equal iff their vertex sequences are.
    """

    vertices: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "InducedCycle":
        return cls(canonical_cycle(seq))

    @cached_property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(min(a, b), max(a, b)) for a, b in zip(vs, vs[1:] + vs[:1])]


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    seq = list(seq)
    k = seq.index(min(seq))
    rot = seq[k:] + seq[:k]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = rot[:1] + rot[:0:-1]
    return tuple(rot)


def is_cycle_in(g: Graph, seq: Sequence[int]) -> bool:
    """True when ``seq`` traces a (not necessarily induced) cycle of ``g``."""
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, list(seq[1:]) + [seq[0]]))


def is_induced_cycle(g: Graph, seq: Sequence[int]) -> bool:
    if not is_cycle_in(g, seq):
        return False
    m = mask_of(seq)
    return all((g.adj[v] & m).bit_count() == 2 for v in seq)


def _induced_cycle_seqs(g: Graph, cap: int):
    """Yield canonical vertex tuples of all induced cycles.

    Chordless paths are grown from their least vertex ``s``; a candidate
    extension ``x`` must avoid every neighbor of the path's interior, and a
    path closes into a cycle only through a neighbor of ``s``.
    """
    adj = g.adj
    count = 0
    for s in range(g.n):
        above = ~((1 << (s + 1)) - 1)
        ns = adj[s]
        for a in iter_bits(ns & above):
            # stack items: (path, path_mask, interior_nbrs)
            stack = [((s, a), (1 << s) | (1 << a), 0)]
            while stack:
                path, pmask, blocked = stack.pop()
                v = path[-1]
                cand = adj[v] & above & ~pmask & ~blocked
                for x in iter_bits(cand):
                    if ns >> x & 1:
                        if x > a:
                            count += 1
                            if count > cap:
                                raise CycleCapExceeded(f"more than {cap} induced cycles")
                            yield path + (x,)
                    else:
                        nb = blocked | adj[v] if len(path) > 2 else adj[v]
                        stack.append((path + (x,), pmask | (1 << x), nb & ~(1 << s)))
    return


def enumerate_induced_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> list[InducedCycle]:
    """All chordless cycles of ``g`` in canonical form, sorted."""
    return sorted(InducedCycle(c) for c in _induced_cycle_seqs(g, cap))


def count_induced_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> int:
    return sum(1 for _ in _induced_cycle_seqs(g, cap))


def induced_cycle_masks(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> list[int]:
    return [mask_of(c) for c in _induced_cycle_seqs(g, cap)]


def enumerate_induced_cycles_bruteforce(g: Graph) -> list[InducedCycle]:
    """Subset oracle: keep every vertex subset whose induced subgraph is a cycle."""
    if g.n > 16:
        raise GraphError("subset oracle limited to n <= 16")
    out = []
    for mask in range(1, 1 << g.n):
        k = mask.bit_count()
        if k < 3:
            continue
        if any((g.adj[v] & mask).bit_count() != 2 for v in iter_bits(mask)):
            continue
        start = (mask & -mask).bit_length() - 1
        seq = [start]
        prev, cur = -1, start
        while True:
            nxt = [x for x in iter_bits(g.adj[cur] & mask) if x != prev]
            step = nxt[0]
            if step == start:
                break
            seq.append(step)
            prev, cur = cur, step
            if len(seq) > k:
                break
        if len(seq) == k:
            out.append(InducedCycle.from_sequence(seq))
    return sorted(out)


def count_triangles_through_edge(g: Graph, e: tuple[int, int]) -> int:
    u, v = e
    if u == v or not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    return (g.adj[u] & g.adj[v]).bit_count()


def count_length2_paths(g: Graph, u: int, v: int) -> int:
    if u == v:
        raise GraphError("endpoints must differ")
    return (g.adj[u] & g.adj[v]).bit_count()


def count_induced_odd_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> int:
    return sum(1 for c in _induced_cycle_seqs(g, cap) if len(c) % 2)


def longest_cycle_length(g: Graph, budget: int | None = None) -> int:
    """Length of a longest cycle (0 if acyclic), by exhaustive path search."""
    adj = g.adj
    best = 0
    nodes = 1

    def tick():
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"longest cycle search exceeded {budget} nodes")

    for s in range(g.n):
        tick()
        if best == g.n:
            break
        above = ~((1 << (s + 1)) - 1)
        if (adj[s] & above).bit_count() < 2:
            continue
        remaining = (g.all_mask & above).bit_count() + 1
        if remaining <= best:
            break
        stack = [(s, 1 << s, 1)]
        while stack:
            v, pmask, length = stack.pop()
            tick()
            if length >= 3 and adj[v] >> s & 1:
                best = max(best, length)
            for x in iter_bits(adj[v] & above & ~pmask):
                stack.append((x, pmask | (1 << x), length + 1))
    return best


@dataclass(frozen=True)
class ContractionCensus:
    c3: int
    s1: int
    s2: int
    cycles_before: int
    cycles_after: int

    @property
    def identity_holds(self) -> bool:
        return self.c3 + self.s1 + self.s2 == self.cycles_before - self.cycles_after


def _is_cycle_mask(g: Graph, mask: int) -> bool:
    if mask.bit_count() < 3:
        return False
    if any((g.adj[v] & mask).bit_count() != 2 for v in iter_bits(mask)):
        return False
    # 2-regular: a cycle iff connected
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def contraction_cycle_census(g: Graph, e: tuple[int, int]) -> ContractionCensus:
    """Classify the induced cycles of ``g`` by what contracting ``e`` does to them.

    ``c3`` counts triangles through ``e``; among the rest, a cycle whose image
    vertex set induces a cycle in ``g/e`` is kept, otherwise it counts toward
    ``s1``.  ``s2`` counts pairs of kept cycles sharing the same image.
    """
    u, v = e
    c3 = count_triangles_through_edge(g, e)
    h, vmap = contract_edge(g, e)
    both = (1 << u) | (1 << v)
    images: dict[int, int] = {}
    s1 = 0
    before = 0
    for cyc in _induced_cycle_seqs(g, DEFAULT_CYCLE_CAP):
        before += 1
        cm = mask_of(cyc)
        if len(cyc) == 3 and cm & both == both:
            continue
        img = 0
        for x in cyc:
            img |= 1 << vmap[x]
        if _is_cycle_mask(h, img):
            images[img] = images.get(img, 0) + 1
        else:
            s1 += 1
    s2 = sum(1 for k in images.values() if k == 2)
    after = count_induced_cycles(h)
    return ContractionCensus(c3=c3, s1=s1, s2=s2, cycles_before=before, cycles_after=after)


def cycle_masks_within(cycles: Iterable[int], within: int) -> list[int]:
    return [c for c in cycles if c & ~within == 0]


def cycle_subgraph(g: Graph, cyc: InducedCycle) -> Graph:
    return induced_subgraph_mask(g, cyc.mask)
