"""Atlas assembly: enumeration -> polynomial -> roots -> files.

Output is a pure function of the configuration: the graph list is
deterministic, per-graph work is independent, and parallel runs pass
through a collect-in-order barrier before anything is emitted.
"""

from __future__ import annotations

import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .enumeration import ENUM_CAP, enumerate_graphs
from .errors import NoConvergence
from .graph import Graph, components, induced_subgraph, parse_graph6, write_graph6
from .polynomial import (
    DominationPolynomial,
    convolve,
    count_dominating_sets,
    evaluate,
    poly_by_components,
)
from .roots import (
    DEFAULT_TOL,
    RootSet,
    RootStatistics,
    find_roots,
    reconstruct_coeffs,
    root_statistics,
)

KNOWN_COUNTS_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
KNOWN_COUNTS_ALL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}

CSV_HEADER = "order,index,graph6,edges,gamma,coeffs,roots"
PLOT_HEADER = "order,graph6,re,im"


@dataclass(frozen=True)
class AtlasConfig:
    max_order: int = 6
    connected_only: bool = True
    fmt: str = "csv"
    tol: float = DEFAULT_TOL
    jobs: int = 1
    out_path: str | None = None

    def __post_init__(self):
        if not 1 <= self.max_order <= ENUM_CAP:
            raise ValueError(f"max_order must be in 1..{ENUM_CAP}")
        if self.fmt not in ("csv", "json", "text"):
            raise ValueError(f"unknown output format {self.fmt!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


@dataclass(frozen=True)
class AtlasEntry:
    """One atlas row: a canonical graph with its polynomial and roots."""

    order: int
    index: int  # 1-based within the order block, frozen sort order
    graph6: str
    edges: int
    poly: DominationPolynomial
    roots: RootSet | None
    stats: RootStatistics | None
    error: str | None = None

    @property
    def gamma(self) -> int:
        return self.poly.gamma


def _compute_entry(task: tuple[int, int, str, float]) -> AtlasEntry:
    order, index, g6, tol = task
    g = parse_graph6(g6)
    poly = poly_by_components(g)
    try:
        rs = find_roots(poly, tol=tol)
        return AtlasEntry(order, index, g6, g.edge_count, poly, rs, root_statistics(rs))
    except NoConvergence as exc:
        return AtlasEntry(order, index, g6, g.edge_count, poly, None, None, error=str(exc))


def build_atlas(cfg: AtlasConfig) -> list[AtlasEntry]:
    """Compute every atlas entry for orders 1..cfg.max_order, in atlas order."""
    tasks = []
    for order in range(1, cfg.max_order + 1):
        for index, g in enumerate(enumerate_graphs(order, cfg.connected_only), start=1):
            tasks.append((order, index, write_graph6(g), cfg.tol))
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            entries = list(pool.map(_compute_entry, tasks, chunksize=16))
    else:
        entries = [_compute_entry(t) for t in tasks]
    return entries


def _csv_roots_field(entry: AtlasEntry) -> str:
    if entry.error is not None:
        return "ERROR:" + entry.error.replace(",", ";").replace("\n", " ")
    tokens = [f"0^{entry.gamma}"]
    tokens.extend(f"{r.real:.6f}{r.imag:+.6f}i" for r in entry.roots.nonzero_roots)
    return "|".join(tokens)


def render_csv(entries: list[AtlasEntry]) -> str:
    lines = [CSV_HEADER]
    for e in entries:
        coeffs = "|".join(str(c) for c in e.poly.coeffs)
        lines.append(
            f"{e.order},{e.index},{e.graph6},{e.edges},{e.gamma},{coeffs},{_csv_roots_field(e)}"
        )
    return "\n".join(lines) + "\n"


def render_json(entries: list[AtlasEntry]) -> str:
    rows = []
    for e in entries:
        row = {
            "order": e.order,
            "index": e.index,
            "graph6": e.graph6,
            "edges": e.edges,
            "gamma": e.gamma,
            "polynomial": e.poly.to_json_dict(),
        }
        if e.error is None:
            row["roots"] = e.roots.to_json_dict()
            row["root_stats"] = {
                "real": e.stats.real_count,
                "distinct": e.stats.distinct_count,
                "max_modulus": e.stats.max_modulus,
            }
        else:
            row["error"] = e.error
        rows.append(row)
    return json.dumps(rows, indent=2) + "\n"


def render_text(entries: list[AtlasEntry]) -> str:
    out = io.StringIO()
    for e in entries:
        out.write(f"n={e.order} #{e.index} {e.graph6} edges={e.edges} gamma={e.gamma}\n")
        out.write(f"  D = {e.poly.to_text()}\n")
        if e.error is None:
            out.write(f"  roots: {e.roots.to_text()}\n")
        else:
            out.write(f"  roots: ERROR {e.error}\n")
    return out.getvalue()


def render(entries: list[AtlasEntry], fmt: str) -> str:
    return {"csv": render_csv, "json": render_json, "text": render_text}[fmt](entries)


def emit_root_plot_data(entries: list[AtlasEntry]) -> str:
    """CSV of all root locations, zero roots expanded with multiplicity."""
    lines = [PLOT_HEADER]
    for e in entries:
        if e.error is not None:
            continue
        for r in e.roots.all_roots():
            lines.append(f"{e.order},{e.graph6},{r.real:.6f},{r.imag:.6f}")
    return "\n".join(lines) + "\n"


@dataclass
class VerifyReport:
    checks: list[tuple[str, bool, list[str]]] = field(default_factory=list)

    def add(self, name: str, counterexamples: list[str]):
        self.checks.append((name, not counterexamples, counterexamples))

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_text(self) -> str:
        lines = []
        for name, ok, bad in self.checks:
            status = "PASS" if ok else "FAIL"
            suffix = "" if ok else f"  counterexamples: {' '.join(bad[:10])}"
            lines.append(f"{status} {name}{suffix}")
        return "\n".join(lines) + "\n"


def _random_disjoint_union(rng: random.Random, pool: list[Graph], max_order: int) -> Graph:
    parts = []
    total = 0
    while True:
        g = rng.choice(pool)
        if total + g.n > max_order:
            break
        parts.append(g)
        total += g.n
        if total >= max_order - 1 or (len(parts) >= 2 and rng.random() < 0.3):
            break
    if len(parts) < 2:
        parts.append(rng.choice([g for g in pool if g.n == 1]))
    adj = []
    offset = 0
    for g in parts:
        adj.extend(a << offset for a in g.adj)
        offset += g.n
    return Graph(offset, tuple(adj))


def verify(cfg: AtlasConfig, corrupt=None, union_samples: int = 50, seed: int = 0) -> VerifyReport:
    """Run every invariant suite over the configured atlas.

    corrupt, when given, maps (graph6, polynomial) -> polynomial and is
    applied to the factorized result before comparison; it exists so the
    failure path itself is testable.
    """
    report = VerifyReport()
    graphs = []
    for order in range(1, cfg.max_order + 1):
        graphs.extend(enumerate_graphs(order, cfg.connected_only))

    counts = {}
    for g in graphs:
        counts[g.n] = counts.get(g.n, 0) + 1
    known = KNOWN_COUNTS_CONNECTED if cfg.connected_only else KNOWN_COUNTS_ALL
    bad = [
        f"order{n}:{counts.get(n, 0)}!={known[n]}"
        for n in range(1, min(cfg.max_order, 6) + 1)
        if counts.get(n, 0) != known[n]
    ]
    report.add("enumeration-counts", bad)

    bad = []
    for g in graphs:
        fast = poly_by_components(g)
        if corrupt is not None:
            fast = corrupt(write_graph6(g), fast)
        if fast != count_dominating_sets(g):
            bad.append(write_graph6(g))
    report.add("oracle-equivalence", bad)

    # construction re-checks the DominationPolynomial invariants; an
    # exception here means a computed polynomial violated them
    bad = []
    for g in graphs:
        p = poly_by_components(g)
        try:
            DominationPolynomial(p.n, p.coeffs)
        except ValueError:
            bad.append(write_graph6(g))
    report.add("coefficient-invariants", bad)

    rng = random.Random(seed)
    pool = []
    for order in range(1, min(cfg.max_order, 5) + 1):
        pool.extend(enumerate_graphs(order, True))
    bad = []
    for _ in range(union_samples):
        g = _random_disjoint_union(rng, pool, max_order=10)
        product = [1]
        for comp in components(g):
            product = convolve(product, count_dominating_sets(induced_subgraph(g, comp)).coeffs)
        whole = count_dominating_sets(g)
        if tuple(product) != whole.coeffs:
            bad.append(write_graph6(g))
    report.add("component-product", bad)

    residual_bad = []
    reconstruct_bad = []
    structural_bad = []
    for g in graphs:
        g6 = write_graph6(g)
        p = poly_by_components(g)
        try:
            rs = find_roots(p, tol=cfg.tol)
        except (NoConvergence, ValueError):
            residual_bad.append(g6)
            continue
        total = sum(p.coeffs)
        if any(abs(evaluate(p, r)) > 1e-9 * total for r in rs.nonzero_roots):
            residual_bad.append(g6)
        rebuilt = reconstruct_coeffs(rs)
        for k, c in enumerate(p.coeffs):
            ref = max(abs(c), 1.0)
            if abs(rebuilt[k] - c) > 1e-6 * ref:
                reconstruct_bad.append(g6)
                break
        if rs.zero_multiplicity != p.gamma:
            structural_bad.append(g6)
    report.add("root-residuals", residual_bad)
    report.add("root-reconstruction", reconstruct_bad)
    report.add("zero-multiplicity", structural_bad)
    return report
