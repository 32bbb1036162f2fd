"""Experiment driver: optimize every (point set x constraint x metric x mode)
cell, render figures, and summarize metric agreement.

The spec file is JSON:

    {
      "seed": 12345,
      "point_sets": [
        {"name": "random0", "random": {"n": 10, "seed": 1}},
        {"name": "wheel", "fixture": "wheel"},
        {"name": "mine", "points": [[0, 0], ...], "required_edges": [[0, 5]]},
        {"name": "fromfile", "file": "points.txt"}
      ],
      "constraints": [
        {"type": "required_edges"},
        {"type": "min_total_length", "factor": 1.2},
        {"type": "max_total_length", "factor": 0.8},
        {"type": "max_degree", "bound": 5}
      ],
      "metrics": [...],                # default: all seven
      "modes": ["sum", "bottleneck"],  # default: both
      "output_dir": "out"
    }

A required-edges constraint without explicit edges uses each point set's
"required_edges", falling back to an automatically picked interesting edge.
Per-cell SVGs are named {constraint}{set_index}{mode}_{metric}.svg; edges
that differ from the comparison (CDT for required-edge runs, the Delaunay
triangulation otherwise) are drawn green, constrained edges red.
"""

from __future__ import annotations

import json
import time
from pathlib import Path

from .aggregate import AggregationMode, ScoreVector, aggregate_sum, best_triangulation
from .delaunay import cdt, delaunay
from .errors import NearDelaunayError
from .fileio import parse_points
from .geom import PointSet
from .metrics import ALL_METRICS, METRIC_ORIENTATION, Evaluator
from .pointgen import (
    long_delaunay_point_set,
    pick_required_edge,
    random_point_set,
    wheel_point_set,
)
from .svg import render_svg
from .triangulation import (
    MaxDegree,
    MaxTotalLength,
    MinTotalLength,
    RequiredEdges,
    edge_diff,
    enumerate_triangulations,
    total_edge_length,
)

CONSTRAINT_LABELS = {
    "required_edges": "required",
    "min_total_length": "minlength",
    "max_total_length": "maxlength",
    "max_degree": "maxdegree",
}

MODE_BY_NAME = {"sum": AggregationMode.SUM, "bottleneck": AggregationMode.BOTTLENECK_LEX}


def round12(v: float) -> float:
    return float(format(v, ".12g"))


def make_default_spec(seed: int = 0) -> dict:
    """The full grid: 8 seeded random 10-point sets plus the two constructed
    fixtures, all four constraint types, all metrics, both aggregations."""
    point_sets = [
        {"name": f"random{k}", "random": {"n": 10, "seed": seed + 1 + k}}
        for k in range(8)
    ]
    point_sets.append({"name": "longdelaunay", "fixture": "long_delaunay"})
    point_sets.append({"name": "wheel", "fixture": "wheel"})
    return {
        "seed": seed,
        "point_sets": point_sets,
        "constraints": [
            {"type": "required_edges"},
            {"type": "min_total_length", "factor": 1.2},
            {"type": "max_total_length", "factor": 0.8},
            {"type": "max_degree", "bound": 5},
        ],
        "metrics": list(ALL_METRICS),
        "modes": ["sum", "bottleneck"],
    }


def _load_point_set(entry: dict, base_dir: Path) -> PointSet:
    if "points" in entry:
        return PointSet([(p[0], p[1]) for p in entry["points"]])
    if "file" in entry:
        path = base_dir / entry["file"]
        if not path.exists():
            raise NearDelaunayError(f"point file {path} does not exist")
        return parse_points(path.read_text())
    if "random" in entry:
        r = entry["random"]
        return random_point_set(int(r["n"]), int(r["seed"]))
    if "fixture" in entry:
        kind = entry["fixture"]
        if kind == "wheel":
            return wheel_point_set()
        if kind == "long_delaunay":
            return long_delaunay_point_set()
        raise NearDelaunayError(f"unknown fixture {kind!r}")
    raise NearDelaunayError(f"point set entry needs points/file/random/fixture: {entry}")


def _build_constraint(centry: dict, set_entry: dict, ps: PointSet):
    kind = centry["type"]
    if kind == "required_edges":
        if "edges" in centry:
            edges = [tuple(e) for e in centry["edges"]]
        elif "required_edges" in set_entry:
            edges = [tuple(e) for e in set_entry["required_edges"]]
        else:
            picked = pick_required_edge(ps)
            if picked is None:
                raise NearDelaunayError("no usable required edge for this point set")
            edges = [picked]
        return RequiredEdges(edges), edges
    if kind == "min_total_length":
        factor = float(centry.get("factor", 1.2))
        if factor <= 0:
            raise NearDelaunayError("length factor must be positive")
        return MinTotalLength(factor), []
    if kind == "max_total_length":
        factor = float(centry.get("factor", 0.8))
        if factor <= 0:
            raise NearDelaunayError("length factor must be positive")
        return MaxTotalLength(factor), []
    if kind == "max_degree":
        bound = int(centry.get("bound", 5))
        if bound < 3:
            raise NearDelaunayError("degree bound must be at least 3")
        return MaxDegree(bound), []
    raise NearDelaunayError(f"unknown constraint type {kind!r}")


def _cell_aggregate(sv: ScoreVector, mode: AggregationMode) -> float:
    if mode is AggregationMode.SUM:
        return aggregate_sum(sv)
    worst = sv.worst_first()
    return worst[0] if worst else 0.0


def run_experiment(
    spec: dict,
    out_dir: Path | str,
    base_dir: Path | str = ".",
    progress=None,
) -> dict:
    out_dir = Path(out_dir)
    base_dir = Path(base_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    seed = int(spec.get("seed", 0))
    metrics = list(spec.get("metrics", ALL_METRICS))
    for m in metrics:
        if m not in ALL_METRICS:
            raise NearDelaunayError(f"unknown metric {m!r}")
    modes = [MODE_BY_NAME[m] for m in spec.get("modes", ["sum", "bottleneck"])]
    set_entries = spec.get("point_sets", [])
    constraint_entries = spec.get("constraints", [])

    report = {
        "seed": seed,
        "point_sets": [],
        "cells": [],
        "agreement": [],
    }

    contexts = []
    for idx, entry in enumerate(set_entries):
        name = entry.get("name", f"set{idx}")
        ps = _load_point_set(entry, base_dir)
        dt = delaunay(ps)
        candidates = list(enumerate_triangulations(ps))
        contexts.append(
            {
                "index": idx,
                "name": name,
                "entry": entry,
                "ps": ps,
                "dt": dt,
                "dt_length": total_edge_length(dt),
                "candidates": candidates,
                "evaluator": Evaluator(ps),
            }
        )
        report["point_sets"].append(
            {
                "name": name,
                "source": {
                    k: entry[k]
                    for k in ("random", "fixture", "file")
                    if k in entry
                },
                "points": [[round12(p.x), round12(p.y)] for p in ps],
                "triangulation_count": len(candidates),
            }
        )

    for centry in constraint_entries:
        label = CONSTRAINT_LABELS.get(centry.get("type"), centry.get("type"))
        for ctx in contexts:
            try:
                constraint, required = _build_constraint(centry, ctx["entry"], ctx["ps"])
            except NearDelaunayError as exc:
                for metric in metrics:
                    for mode in modes:
                        report["cells"].append(
                            {
                                "point_set": ctx["name"],
                                "constraint": label,
                                "metric": metric,
                                "mode": mode.value,
                                "status": "error",
                                "error": str(exc),
                            }
                        )
                continue
            if isinstance(constraint, RequiredEdges):
                comparison = cdt(ctx["ps"], sorted(constraint.edges))
                comparison_name = "cdt"
            else:
                comparison = ctx["dt"]
                comparison_name = "delaunay"
            comp_svg = out_dir / f"{label}{ctx['index']}_comparison.svg"
            comp_svg.write_text(
                render_svg(comparison, constrained=set(required))
            )
            per_mode_results: dict[str, dict[str, tuple | None]] = {}
            for mode in modes:
                results: dict[str, tuple | None] = {}
                for metric in metrics:
                    cell = {
                        "point_set": ctx["name"],
                        "constraint": label,
                        "metric": metric,
                        "mode": mode.value,
                    }
                    started = time.perf_counter()
                    try:
                        best = best_triangulation(
                            ctx["candidates"],
                            constraint,
                            metric,
                            mode,
                            ctx["dt_length"],
                            ctx["evaluator"],
                        )
                        svg_name = f"{label}{ctx['index']}{mode.value}_{metric}.svg"
                        if best is None:
                            cell["status"] = "no_feasible"
                            # show the Delaunay triangulation in place of a result
                            (out_dir / svg_name).write_text(render_svg(ctx["dt"]))
                            results[metric] = None
                        else:
                            sv = ScoreVector(
                                metric,
                                METRIC_ORIENTATION[metric],
                                ctx["evaluator"].values(best, metric),
                            )
                            diff = edge_diff(best, comparison)
                            (out_dir / svg_name).write_text(
                                render_svg(
                                    best,
                                    constrained=set(required),
                                    diff=diff,
                                )
                            )
                            cell.update(
                                {
                                    "status": "ok",
                                    "aggregate": round12(_cell_aggregate(sv, mode)),
                                    "triangles": [list(t) for t in best.triangles],
                                    "comparison": comparison_name,
                                    "edge_diff": sorted(list(e) for e in diff),
                                    "matches_comparison": best.triangles
                                    == comparison.triangles,
                                }
                            )
                            results[metric] = best.triangles
                        cell["svg"] = svg_name
                    except Exception as exc:  # keep the run going per cell
                        cell["status"] = "error"
                        cell["error"] = f"{type(exc).__name__}: {exc}"
                        results[metric] = ("error",)
                    cell["wall_time_s"] = round(time.perf_counter() - started, 6)
                    report["cells"].append(cell)
                    if progress is not None:
                        progress(cell)
                per_mode_results[mode.value] = results
            for mode_name, results in per_mode_results.items():
                matrix = {
                    m1: {m2: results[m1] == results[m2] for m2 in metrics}
                    for m1 in metrics
                }
                flags = {
                    m: results[m] == comparison.triangles
                    if results[m] not in (None, ("error",))
                    else False
                    for m in metrics
                }
                report["agreement"].append(
                    {
                        "point_set": ctx["name"],
                        "constraint": label,
                        "mode": mode_name,
                        "matrix": matrix,
                        "comparison": comparison_name,
                        "comparison_flags": flags,
                    }
                )

    (out_dir / "report.json").write_text(json.dumps(report, indent=2) + "\n")
    return report
