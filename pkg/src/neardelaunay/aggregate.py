"""Aggregate element scores and search for the best constrained triangulation.

Two aggregations: the plain sum, and worst-first lexicographic comparison
("bottleneck").  Optimization is exhaustive: every triangulation within the
enumeration cap is checked against the constraint and scored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .delaunay import delaunay
from .errors import IncomparableScores
from .geom import PointSet
from .metrics import METRIC_ORIENTATION, Evaluator, ScoreOrientation
from .triangulation import (
    Constraint,
    Triangulation,
    enumerate_triangulations,
    DEFAULT_ENUMERATION_CAP,
    satisfies,
    total_edge_length,
)

# Lexicographic comparisons treat element values within this absolute
# tolerance as tied, so floating-point noise cannot reorder genuine ties.
LEX_TOLERANCE = 1e-12


class AggregationMode(Enum):
    SUM = "sum"
    BOTTLENECK_LEX = "bottleneck"


class Comparison(Enum):
    A_CLOSER = "a_closer"
    B_CLOSER = "b_closer"
    EQUAL = "equal"


@dataclass(frozen=True)
class ScoreVector:
    """Element values of one metric on one triangulation, in canonical element order."""

    metric: str
    orientation: ScoreOrientation
    values: tuple[float, ...]

    @classmethod
    def from_scores(cls, metric: str, scores) -> "ScoreVector":
        return cls(metric, METRIC_ORIENTATION[metric], tuple(s.value for s in scores))

    def worst_first(self) -> tuple[float, ...]:
        return tuple(
            sorted(self.values, reverse=self.orientation is ScoreOrientation.LOWER_BETTER)
        )


def aggregate_sum(sv: ScoreVector) -> float:
    # exactly-rounded, hence independent of element order
    return math.fsum(sv.values)


def compare_bottleneck_lex(a: ScoreVector, b: ScoreVector) -> Comparison:
    """Worst element first; the first entry differing by more than the
    tolerance decides, the better value winning."""
    if a.metric != b.metric or len(a.values) != len(b.values):
        raise IncomparableScores(
            f"cannot compare {a.metric} ({len(a.values)}) with {b.metric} ({len(b.values)})"
        )
    lower_better = a.orientation is ScoreOrientation.LOWER_BETTER
    for x, y in zip(a.worst_first(), b.worst_first()):
        if abs(x - y) <= LEX_TOLERANCE:
            continue
        if (x < y) == lower_better:
            return Comparison.A_CLOSER
        return Comparison.B_CLOSER
    return Comparison.EQUAL


def _is_sum_better(value: float, best: float, lower_better: bool) -> bool:
    return value < best if lower_better else value > best


def best_triangulation(
    candidates: Iterable[Triangulation],
    constraint: Constraint,
    metric: str,
    mode: AggregationMode,
    dt_length: float,
    evaluator: Evaluator,
) -> Triangulation | None:
    """Best feasible candidate; ties keep the canonically earliest.

    Candidates must arrive in canonical order for the tie-break to hold
    (enumerate_triangulations yields them that way).
    """
    lower_better = METRIC_ORIENTATION[metric] is ScoreOrientation.LOWER_BETTER
    best: Triangulation | None = None
    best_sum = 0.0
    best_vec: ScoreVector | None = None
    for t in candidates:
        if not satisfies(t, constraint, dt_length):
            continue
        sv = ScoreVector(metric, METRIC_ORIENTATION[metric], evaluator.values(t, metric))
        if mode is AggregationMode.SUM:
            value = aggregate_sum(sv)
            if best is None or _is_sum_better(value, best_sum, lower_better):
                best, best_sum = t, value
        else:
            if best_vec is None or (
                compare_bottleneck_lex(sv, best_vec) is Comparison.A_CLOSER
            ):
                best, best_vec = t, sv
    return best


def optimize(
    ps: PointSet,
    constraint: Constraint,
    metric: str,
    mode: AggregationMode,
    cap: int = DEFAULT_ENUMERATION_CAP,
    evaluator: Evaluator | None = None,
) -> Triangulation | None:
    """Exhaustively search the constrained triangulations for the best one.

    Returns None when no triangulation satisfies the constraint.  The result
    is deterministic: score ties are broken by canonical triangle-set order.
    """
    dt_length = total_edge_length(delaunay(ps))
    if evaluator is None:
        evaluator = Evaluator(ps)
    return best_triangulation(
        enumerate_triangulations(ps, cap), constraint, metric, mode, dt_length, evaluator
    )
