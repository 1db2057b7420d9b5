"""The three graph characteristics, their values on complete graphs, and per-graph reports.

beth1 = |E| - |V|, beth2 = |C| - |E| + |V|, beth3 = |S| - |C| + |E| - |V|, where
C is the set of induced cycles and S the set of solids.  Since each
characteristic can only drop along the contractions that take a graph to
K^h or K^chi, inverting the complete-graph values gives upper bounds on the
Hadwiger and chromatic numbers.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from math import comb

from .cycles import BudgetExceeded, enumerate_induced_cycles, induced_cycle_masks
from .graph import Graph, GraphError, is_connected, to_graph6
from .oracles import chromatic_number, hadwiger_number, is_planar_small, MINOR_MAX_N
from .solids import count_solids, enumerate_solids


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("graph characteristics are defined for connected graphs only")


def beth1(g: Graph) -> int:
    _require_connected(g)
    return g.m - g.n


def beth2(g: Graph) -> int:
    _require_connected(g)
    return len(induced_cycle_masks(g)) - g.m + g.n


def beth3(g: Graph) -> int:
    _require_connected(g)
    cycles = induced_cycle_masks(g)
    return count_solids(g, cycles) - len(cycles) + g.m - g.n


def beth(i: int, g: Graph) -> int:
    if i == 1:
        return beth1(g)
    if i == 2:
        return beth2(g)
    if i == 3:
        return beth3(g)
    raise ValueError(f"characteristic index must be 1, 2 or 3, got {i}")


def beth_complete(i: int, r: int) -> int:
    """beth_i(K^r) in closed form."""
    if i not in (1, 2, 3):
        raise ValueError(f"characteristic index must be 1, 2 or 3, got {i}")
    if r < 1:
        raise ValueError("r must be at least 1")
    # C(r, i+1) - C(r, i) + ... with alternating signs down to C(r, 1)
    return sum((-1) ** (i + 1 - k) * comb(r, k) for k in range(1, i + 2))


def max_complete_order_within(i: int, value: int) -> int:
    """Largest r with beth_complete(i, r) <= value, by linear scan.

    The values are flat for small r (r <= 2, 3, 4 for i = 1, 2, 3) and
    strictly increasing afterwards, so a plateau resolves to its top.
    """
    floor = beth_complete(i, 1)
    if value < floor:
        raise ValueError(f"no complete graph has beth{i} <= {value}")
    best = 1
    r = 1
    while True:
        v = beth_complete(i, r)
        if v <= value:
            best = r
        elif r > i + 1:
            return best
        r += 1


def first_upper_bound(g: Graph) -> int:
    """floor((3 + sqrt(9 + 8(|E|-|V|))) / 2), computed by bound inversion."""
    return max_complete_order_within(1, beth1(g))


def first_upper_bound_closed_form(g: Graph) -> int:
    """Exact integer evaluation of the closed form (isqrt), kept as a cross-check."""
    d = 9 + 8 * beth1(g)
    return (3 + math.isqrt(d)) // 2


def least_threshold_order(count: int, k: int) -> int:
    """Least N with count < C(N, k)."""
    n = 1
    while comb(n, k) <= count:
        n += 1
    return n


@dataclass
class CharacteristicReport:
    graph6: str
    n: int
    m: int
    c: int
    s: int
    beth1: int
    beth2: int
    beth3: int
    bound1: int
    bound2: int
    bound3: int
    free_rank: int
    odd_cycles: int
    chi: int | None = None
    hadwiger: int | None = None
    planar: bool | None = None
    checks: dict[str, bool | None] = field(default_factory=dict)
    detail: dict | None = None

    @property
    def min_bound(self) -> int:
        return min(self.bound1, self.bound2, self.bound3)

    def as_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"))

    def csv_row(self) -> dict[str, object]:
        row = {k: v for k, v in self.as_dict().items() if k not in ("checks", "detail")}
        for name in CHECK_NAMES:
            row[f"check_{name}"] = self.checks.get(name)
        return {k: _csv_cell(v) for k, v in row.items()}


CHECK_NAMES = (
    "chi_within_bounds",
    "hadwiger_within_bounds",
    "beth3_floor",
    "threshold_C",
    "threshold_S",
    "odd_cycle_bound",
    "hadwiger_equality",
    "planar_cycle_bound",
    "planar_euler",
    "planar_solid_bound",
)

CSV_FIELDS = (
    "graph6", "n", "m", "c", "s", "beth1", "beth2", "beth3", "bound1", "bound2", "bound3",
    "free_rank", "odd_cycles", "chi", "hadwiger", "planar",
) + tuple(f"check_{name}" for name in CHECK_NAMES)


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue()


def _checks(rep: CharacteristicReport) -> dict[str, bool | None]:
    chi, h = rep.chi, rep.hadwiger
    out: dict[str, bool | None] = {name: None for name in CHECK_NAMES}
    out["beth3_floor"] = rep.beth3 >= -1
    if chi is not None:
        out["chi_within_bounds"] = chi <= rep.min_bound
        # chi >= 3 forces one induced odd cycle per triple of color classes
        out["odd_cycle_bound"] = chi < 3 or comb(chi, 3) <= rep.odd_cycles
    if h is not None:
        out["hadwiger_within_bounds"] = h <= rep.min_bound
    if chi is not None and h is not None:
        top = max(chi, h)
        out["threshold_C"] = top < least_threshold_order(rep.c, 3)
        out["threshold_S"] = top < least_threshold_order(rep.s, 4)
        values = (rep.beth1, rep.beth2, rep.beth3)
        if any(beth_complete(i, h) == values[i - 1] for i in (1, 2, 3)):
            out["hadwiger_equality"] = chi <= h
    if rep.planar and chi is not None:
        faces = rep.m - rep.n + 2
        if rep.c <= faces + 2:
            out["planar_cycle_bound"] = chi <= 4
        out["planar_euler"] = rep.s - rep.c + faces >= 1
        if rep.s - rep.c + faces == 1:
            out["planar_solid_bound"] = chi <= 4
    return out


def report(g: Graph, with_oracles: bool = False, budget: int | None = None,
           detail: bool = False) -> CharacteristicReport:
    """All counts, characteristics and bounds of ``g``; exact chi, h and planarity on request.

    An oracle that runs out of budget leaves its field as None.  With
    ``detail`` the report also carries the cycles, solids and oracle witnesses.
    """
    _require_connected(g)
    cycles = induced_cycle_masks(g)
    c = len(cycles)
    s = count_solids(g, cycles)
    b1 = g.m - g.n
    b2 = c - g.m + g.n
    b3 = s - c + g.m - g.n
    rep = CharacteristicReport(
        graph6=to_graph6(g), n=g.n, m=g.m, c=c, s=s,
        beth1=b1, beth2=b2, beth3=b3,
        bound1=max_complete_order_within(1, b1),
        bound2=max_complete_order_within(2, b2),
        bound3=max_complete_order_within(3, b3),
        free_rank=b1 + 1,
        odd_cycles=sum(1 for m in cycles if m.bit_count() % 2),
    )
    extra: dict = {}
    if detail:
        extra["cycles"] = [list(c.vertices) for c in enumerate_induced_cycles(g)]
        extra["solids"] = [s.as_dict() for s in enumerate_solids(g)]
    if with_oracles:
        try:
            rep.chi, col = chromatic_number(g, budget)
            extra["coloring"] = list(col.colors)
        except (BudgetExceeded, GraphError):
            pass
        if g.n <= MINOR_MAX_N:
            try:
                rep.hadwiger, wit = hadwiger_number(g, budget)
                extra["minor"] = wit.as_dict()
            except BudgetExceeded:
                pass
            try:
                rep.planar = is_planar_small(g, budget)
            except BudgetExceeded:
                pass
    rep.checks = _checks(rep)
    if detail:
        rep.detail = extra
    return rep


__all__ = [
    "beth1", "beth2", "beth3", "beth", "beth_complete", "max_complete_order_within",
    "first_upper_bound", "first_upper_bound_closed_form", "least_threshold_order",
    "CharacteristicReport", "report", "reports_to_csv", "CHECK_NAMES", "CSV_FIELDS",
]
