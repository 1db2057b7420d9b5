"""Batch property suite: run theorem checks over a graph corpus and collect results.

Each check is a named predicate over one connected graph.  A check either
passes, fails with a replayable witness (graph6 plus the operation
arguments and both sides of the violated relation), or is skipped because
an exact oracle ran out of budget.
"""

from __future__ import annotations

import csv
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cached_property
from math import comb
from typing import Callable, Iterable, Sequence

from .characteristics import beth_complete, least_threshold_order, max_complete_order_within
from .cycles import (
    BudgetExceeded,
    contraction_cycle_census,
    count_length2_paths,
    count_triangles_through_edge,
    induced_cycle_masks,
    longest_cycle_length,
)
from .graph import (
    Graph,
    GraphError,
    clique_sum,
    complete_graph,
    components,
    cone,
    contract_edge,
    contract_nonedge,
    cycle_graph,
    delete_edge,
    hajos_merge,
    induced_subgraph,
    is_connected,
    is_cut_edge,
    parse_graph6,
    random_connected_graph,
    subdivide_edge,
    to_graph6,
)
from .oracles import (
    MINOR_MAX_N,
    chromatic_number,
    default_budget,
    hadwiger_number,
    is_planar_small,
    neighborhood_colorings,
    vertex_compress,
)
from .solids import (
    SURFACE_MAX_CYCLES,
    SURFACE_MAX_N,
    count_solids,
    enumerate_minimal_closed_surfaces,
    enumerate_solids,
)

# Stable external ids.  The last two are opt-in: they test literal statements
# that fail on known inputs (see README).
DEFAULT_CHECKS = (
    "edge-monotonicity-b1",
    "edge-monotonicity-b2",
    "edge-monotonicity-b3",
    "compression-monotonicity-b2",
    "compression-monotonicity-b3",
    "census-identity",
    "edge-count-identity",
    "cone-C",
    "cone-S",
    "solids-equal-surfaces",
    "chi-bounds",
    "h-bounds",
    "thresholds",
    "hadwiger-class-ops",
    "equality-implies-hadwiger",
    "planar-corollaries",
)
EXTRA_CHECKS = ("nonedge-identity", "longest-cycle")
ALL_CHECKS = DEFAULT_CHECKS + EXTRA_CHECKS

# alternative compression realizations tried per vertex, beyond the default
COMPRESSION_COLORINGS = 4


class SuiteError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    n: int
    p: float
    count: int
    seed: int

    @classmethod
    def parse(cls, text: str) -> "GeneratorSpec":
        fields = {}
        for part in text.split(","):
            if not part.strip():
                continue
            key, sep, val = part.partition("=")
            if not sep:
                raise SuiteError(f"generator field {part!r} is not key=value")
            fields[key.strip()] = val.strip()
        missing = {"n", "p", "count", "seed"} - fields.keys()
        if missing:
            raise SuiteError(f"generator spec missing {', '.join(sorted(missing))}")
        extra = fields.keys() - {"n", "p", "count", "seed"}
        if extra:
            raise SuiteError(f"unknown generator fields {', '.join(sorted(extra))}")
        try:
            spec = cls(int(fields["n"]), float(fields["p"]), int(fields["count"]), int(fields["seed"]))
        except ValueError as exc:
            raise SuiteError(f"bad generator spec {text!r}: {exc}") from None
        if spec.n < 1 or not 0 <= spec.p <= 1 or spec.count < 0:
            raise SuiteError(f"generator spec out of range: {text!r}")
        return spec

    def echo(self) -> str:
        return f"n={self.n},p={self.p},count={self.count},seed={self.seed}"


@dataclass
class SuiteConfig:
    corpus_path: str | None = None
    generator: GeneratorSpec | None = None
    graphs: tuple[str, ...] | None = None
    checks: tuple[str, ...] = DEFAULT_CHECKS
    budget: int | None = None
    fmt: str = "json"
    out: str | None = None
    workers: int = 1

    def __post_init__(self):
        sources = sum(x is not None for x in (self.corpus_path, self.generator, self.graphs))
        if sources != 1:
            raise SuiteError("exactly one corpus source is required (file, generator, or graphs)")
        unknown = [c for c in self.checks if c not in ALL_CHECKS]
        if unknown:
            raise SuiteError(f"unknown check id(s): {', '.join(unknown)}")
        if self.fmt not in ("json", "csv"):
            raise SuiteError(f"unknown format {self.fmt!r}")


@dataclass
class CheckResult:
    check: str
    graph6: str
    status: str  # pass | fail | skipped-budget
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return asdict(self)


# --- corpus -----------------------------------------------------------------

def generate_graphs(spec: GeneratorSpec) -> list[Graph]:
    rng = random.Random(spec.seed)
    return [random_connected_graph(spec.n, spec.p, rng.randrange(2**32)) for _ in range(spec.count)]


def generate_corpus(spec: GeneratorSpec) -> str:
    """graph6 corpus text: a header comment echoing the generator spec, then one graph per line."""
    lines = [f"# beth gen {spec.echo()}"]
    lines += [to_graph6(g) for g in generate_graphs(spec)]
    return "\n".join(lines) + "\n"


ATLAS_MAX_N = 7


def atlas_graphs(max_n: int = ATLAS_MAX_N) -> list[Graph]:
    """Every connected graph on 1..max_n vertices, one per isomorphism class.

    Taken from the graph atlas shipped with networkx (complete up to 7
    vertices), in atlas order.
    """
    if not 1 <= max_n <= ATLAS_MAX_N:
        raise SuiteError(f"atlas corpus covers 1 <= n <= {ATLAS_MAX_N}, got {max_n}")
    import networkx as nx

    out = []
    for G in nx.graph_atlas_g():
        k = G.number_of_nodes()
        if 1 <= k <= max_n and nx.is_connected(G):
            out.append(Graph.from_edges(k, G.edges()))
    return out


def atlas_corpus(max_n: int = ATLAS_MAX_N) -> str:
    lines = [f"# beth gen atlas max_n={max_n}"] + [to_graph6(g) for g in atlas_graphs(max_n)]
    return "\n".join(lines) + "\n"


def read_corpus(text: str) -> list[Graph]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(parse_graph6(line))
        except ValueError as exc:
            raise SuiteError(f"corpus line {lineno}: {exc}") from None
    return out


def config_graphs(cfg: SuiteConfig) -> list[Graph]:
    if cfg.generator is not None:
        return generate_graphs(cfg.generator)
    if cfg.graphs is not None:
        return [parse_graph6(s) for s in cfg.graphs]
    try:
        with open(cfg.corpus_path, encoding="ascii") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise SuiteError(f"cannot read corpus {cfg.corpus_path}: {exc}") from None
    return read_corpus(text)


# --- per-graph context ------------------------------------------------------

def _betas(g: Graph) -> tuple[int, int, int]:
    cycles = induced_cycle_masks(g)
    c = len(cycles)
    s = count_solids(g, cycles)
    return g.m - g.n, c - g.m + g.n, s - c + g.m - g.n


def _chi_h_any(g: Graph, budget) -> tuple[int, int]:
    """chi and h of a possibly disconnected graph (maxima over components)."""
    chi = h = 0
    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        chi = max(chi, chromatic_number(sub, budget)[0])
        h = max(h, hadwiger_number(sub, budget)[0])
    return chi, h


class _Context:
    def __init__(self, g: Graph, budget: int | None):
        self.g = g
        self.budget = default_budget() if budget is None else budget
        self.g6 = to_graph6(g)

    @cached_property
    def betas(self) -> tuple[int, int, int]:
        return _betas(self.g)

    @cached_property
    def cycles(self) -> list[int]:
        return induced_cycle_masks(self.g)

    @cached_property
    def solids(self) -> int:
        return count_solids(self.g, self.cycles)

    @cached_property
    def chi(self) -> int:
        return chromatic_number(self.g, self.budget)[0]

    @cached_property
    def h(self) -> int:
        return hadwiger_number(self.g, self.budget)[0]

    @cached_property
    def bounds(self) -> tuple[int, int, int]:
        return tuple(max_complete_order_within(i, b) for i, b in zip((1, 2, 3), self.betas))


Fail = dict  # witness payload of a failed check


def _edge_mono(i: int):
    def run(ctx: _Context) -> Fail | None:
        g = ctx.g
        before = ctx.betas[i - 1]
        for e in g.edges():
            h, _ = contract_edge(g, e)
            after = _betas(h)[i - 1]
            if after > before:
                return {"edge": list(e), "before": before, "after": after}
        return None
    return run


def _compression_mono(i: int):
    def run(ctx: _Context) -> Fail | None:
        g = ctx.g
        before = ctx.betas[i - 1]
        for w in range(g.n):
            default, _ = vertex_compress(g, w, budget=ctx.budget)
            realizations = [(None, default)]
            for col in neighborhood_colorings(g, w, limit=COMPRESSION_COLORINGS, budget=ctx.budget):
                realizations.append((col, vertex_compress(g, w, col, budget=ctx.budget)[0]))
            for col, h in realizations:
                after = _betas(h)[i - 1]
                if after > before:
                    return {"vertex": w, "coloring": col, "result": to_graph6(h),
                            "before": before, "after": after}
        return None
    return run


def _census(ctx: _Context) -> Fail | None:
    for e in ctx.g.edges():
        cen = contraction_cycle_census(ctx.g, e)
        if not cen.identity_holds:
            return {"edge": list(e), **asdict(cen)}
    return None


def _edge_count(ctx: _Context) -> Fail | None:
    g = ctx.g
    for e in g.edges():
        h, _ = contract_edge(g, e)
        lhs, rhs = g.m - h.m, count_triangles_through_edge(g, e) + 1
        if lhs != rhs:
            return {"edge": list(e), "lhs": lhs, "rhs": rhs}
    return None


def _nonedge_identity(ctx: _Context) -> Fail | None:
    g = ctx.g
    for u, v in g.nonedges():
        h, _ = contract_nonedge(g, u, v)
        lhs = (h.m - h.n) - (g.m - g.n)
        rhs = -count_length2_paths(g, u, v)
        if lhs != rhs:
            return {"nonedge": [u, v], "lhs": lhs, "rhs": rhs}
    return None


def _cone_c(ctx: _Context) -> Fail | None:
    gc, _ = cone(ctx.g)
    lhs, rhs = len(induced_cycle_masks(gc)), len(ctx.cycles) + ctx.g.m
    return None if lhs == rhs else {"lhs": lhs, "rhs": rhs}


def _cone_s(ctx: _Context) -> Fail | None:
    gc, _ = cone(ctx.g)
    lhs, rhs = count_solids(gc), ctx.solids + len(ctx.cycles)
    return None if lhs == rhs else {"lhs": lhs, "rhs": rhs}


def _solids_surfaces(ctx: _Context) -> Fail | None:
    g = ctx.g
    if g.n > SURFACE_MAX_N or len(ctx.cycles) > SURFACE_MAX_CYCLES:
        raise BudgetExceeded("graph exceeds the closed-surface search limits")
    surfaces = enumerate_minimal_closed_surfaces(g, ctx.budget)
    solids = [s.vertices for s in enumerate_solids(g)]
    if sorted(surfaces) != sorted(solids):
        return {"solids_only": sorted(set(solids) - set(surfaces)),
                "surfaces_only": sorted(set(surfaces) - set(solids))}
    return None


def _chi_bounds(ctx: _Context) -> Fail | None:
    chi = ctx.chi
    if chi > min(ctx.bounds):
        return {"chi": chi, "bounds": list(ctx.bounds)}
    return None


def _h_bounds(ctx: _Context) -> Fail | None:
    h = ctx.h
    if h > min(ctx.bounds):
        return {"hadwiger": h, "bounds": list(ctx.bounds)}
    return None


def _thresholds(ctx: _Context) -> Fail | None:
    top = max(ctx.chi, ctx.h)
    nc = least_threshold_order(len(ctx.cycles), 3)
    ns = least_threshold_order(ctx.solids, 4)
    if top >= nc:
        return {"relation": "cycles", "c": len(ctx.cycles), "order": nc, "max_chi_h": top}
    if top >= ns:
        return {"relation": "solids", "s": ctx.solids, "order": ns, "max_chi_h": top}
    return None


def _class_ops(ctx: _Context) -> Fail | None:
    g = ctx.g
    if ctx.chi > ctx.h:
        return None  # not a member; the closure claim says nothing
    trials: list[tuple[dict, Graph]] = []
    for e in g.edges():
        if is_cut_edge(g, e):
            trials.append(({"op": "delete-cut-edge", "edge": list(e)}, delete_edge(g, e)))
    tri = complete_graph(3)
    trials.append(({"op": "clique-sum", "with": "K3", "pairs": [[0, 0]]}, clique_sum(g, tri, [(0, 0)])))
    if g.m:
        a, b = g.edges()[0]
        trials.append(({"op": "clique-sum", "with": "K3", "pairs": [[a, 0], [b, 1]]},
                       clique_sum(g, tri, [(a, 0), (b, 1)])))
        for x1, y1 in ((a, b), (b, a)):
            trials.append(({"op": "hajos", "with": "K3", "x1": x1, "y1": y1, "x2": 0, "y2": 1},
                           hajos_merge(g, tri, x1, y1, 0, 1)))
        c5 = cycle_graph(5)
        trials.append(({"op": "hajos", "with": "C5", "x1": a, "y1": b, "x2": 0, "y2": 1},
                       hajos_merge(g, c5, a, b, 0, 1)))
    for e in g.edges():
        trials.append(({"op": "subdivide", "edge": list(e), "k": 2}, subdivide_edge(g, e, 2)))
    for args, h in trials:
        if h.n > MINOR_MAX_N:
            continue
        chi, had = _chi_h_any(h, ctx.budget)
        if chi > had:
            return {**args, "result": to_graph6(h), "chi": chi, "hadwiger": had}
    return None


def _equality(ctx: _Context) -> Fail | None:
    h, chi = ctx.h, ctx.chi
    hits = [i for i in (1, 2, 3) if beth_complete(i, h) == ctx.betas[i - 1]]
    if hits and chi > h:
        return {"indices": hits, "chi": chi, "hadwiger": h}
    return None


def _planar(ctx: _Context) -> Fail | None:
    g = ctx.g
    if not is_planar_small(g, ctx.budget):
        return None
    faces = g.m - g.n + 2
    c, s, chi = len(ctx.cycles), ctx.solids, ctx.chi
    if c <= faces + 2 and chi > 4:
        return {"corollary": "few-cycles", "c": c, "faces": faces, "chi": chi}
    if s - c + faces < 1:
        return {"corollary": "euler", "s": s, "c": c, "faces": faces}
    if s - c + faces == 1 and chi > 4:
        return {"corollary": "euler-equality", "chi": chi}
    return None


def _longest_cycle(ctx: _Context) -> Fail | None:
    g = ctx.g
    lg = longest_cycle_length(g, ctx.budget)
    for e in g.edges():
        h, _ = contract_edge(g, e)
        lh = longest_cycle_length(h, ctx.budget)
        if lh > lg:
            return {"edge": list(e), "before": lg, "after": lh}
    if ctx.h > lg:
        return {"hadwiger": ctx.h, "longest_cycle": lg}
    return None


CHECKS: dict[str, Callable[[_Context], Fail | None]] = {
    "edge-monotonicity-b1": _edge_mono(1),
    "edge-monotonicity-b2": _edge_mono(2),
    "edge-monotonicity-b3": _edge_mono(3),
    "compression-monotonicity-b2": _compression_mono(2),
    "compression-monotonicity-b3": _compression_mono(3),
    "census-identity": _census,
    "edge-count-identity": _edge_count,
    "nonedge-identity": _nonedge_identity,
    "cone-C": _cone_c,
    "cone-S": _cone_s,
    "solids-equal-surfaces": _solids_surfaces,
    "chi-bounds": _chi_bounds,
    "h-bounds": _h_bounds,
    "thresholds": _thresholds,
    "hadwiger-class-ops": _class_ops,
    "equality-implies-hadwiger": _equality,
    "planar-corollaries": _planar,
    "longest-cycle": _longest_cycle,
}


def check_graph(g: Graph, checks: Sequence[str], budget: int | None = None) -> list[CheckResult]:
    if not is_connected(g):
        raise GraphError(f"{to_graph6(g)} is not connected")
    ctx = _Context(g, budget)
    out = []
    for name in checks:
        try:
            witness = CHECKS[name](ctx)
        except BudgetExceeded as exc:
            out.append(CheckResult(name, ctx.g6, "skipped-budget", {"reason": str(exc)}))
            continue
        if witness is None:
            out.append(CheckResult(name, ctx.g6, "pass"))
        else:
            out.append(CheckResult(name, ctx.g6, "fail", {"graph6": ctx.g6, **witness}))
    return out


def _work(item):
    g6, checks, budget = item
    return check_graph(parse_graph6(g6), checks, budget)


def run_suite(cfg: SuiteConfig) -> list[CheckResult]:
    graphs = config_graphs(cfg)
    items = [(to_graph6(g), tuple(cfg.checks), cfg.budget) for g in graphs]
    if cfg.workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            batches = list(pool.map(_work, items, chunksize=8))
    else:
        batches = [_work(it) for it in items]
    return [r for batch in batches for r in batch]


def summarize(results: Iterable[CheckResult]) -> dict[str, int]:
    counts = {"pass": 0, "fail": 0, "skipped-budget": 0}
    for r in results:
        counts[r.status] += 1
    return counts


def results_to_json(results: Sequence[CheckResult]) -> str:
    doc = {"summary": summarize(results), "results": [r.as_dict() for r in results]}
    return json.dumps(doc, indent=1) + "\n"


def results_to_csv(results: Sequence[CheckResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check", "graph6", "status", "detail"])
    for r in results:
        w.writerow([r.check, r.graph6, r.status, json.dumps(r.detail, separators=(",", ":"))])
    return buf.getvalue()


__all__ = [
    "DEFAULT_CHECKS", "EXTRA_CHECKS", "ALL_CHECKS", "GeneratorSpec", "SuiteConfig", "CheckResult",
    "SuiteError", "generate_graphs", "generate_corpus", "atlas_graphs", "atlas_corpus", "read_corpus", "check_graph", "run_suite",
    "summarize", "results_to_json", "results_to_csv",
]
