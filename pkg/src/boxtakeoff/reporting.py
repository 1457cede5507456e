"""Roll-ups, known-quantity comparison, and CSV report serialization.

Per-element masses stay in kg; group totals convert to metric tons.
Aggregation always runs in element-id order so repeated runs produce
byte-identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

from .estimator import QuantityRow

REPORT_HEADER = "element_id,element_type,lx_m,ly_m,lz_m,length_m,area_m2,volume_m3,mass_basis,mass_kg"
TOTALS_HEADER = "group,count,total_volume_m3,total_mass_ton"


@dataclass(frozen=True)
class RollUp:
    group_key: str
    element_count: int
    total_volume: float  # m^3
    total_mass: float  # ton


@dataclass(frozen=True)
class ComparisonResult:
    computed: float
    known: float
    relative_difference: float


def roll_up(rows: Iterable[QuantityRow], group_by: Callable[[QuantityRow], str]) -> list[RollUp]:
    """One RollUp per distinct group key, sorted by key.

    Rows are summed in element-id order regardless of input order, so the
    result is invariant under input permutation.
    """
    ordered = sorted(rows, key=lambda r: r.element_id)
    counts: dict[str, int] = {}
    volumes: dict[str, float] = {}
    masses: dict[str, float] = {}
    for row in ordered:
        key = group_by(row)
        counts[key] = counts.get(key, 0) + 1
        volumes[key] = volumes.get(key, 0.0) + row.volume
        masses[key] = masses.get(key, 0.0) + row.mass
    return [
        RollUp(
            group_key=key,
            element_count=counts[key],
            total_volume=volumes[key],
            total_mass=masses[key] / 1000.0,
        )
        for key in sorted(counts)
    ]


def compare_known(computed: float, known: float) -> ComparisonResult:
    """Signed relative difference (computed - known) / known."""
    if not known > 0:
        raise ValueError(f"known quantity must be positive, got {known}")
    return ComparisonResult(
        computed=computed, known=known, relative_difference=(computed - known) / known
    )


def _fmt_basis(value: float) -> str:
    return format(value, ".10g")


def render_rows(rows: Iterable[QuantityRow]) -> list[str]:
    lines = [REPORT_HEADER]
    for r in sorted(rows, key=lambda r: r.element_id):
        lines.append(
            f"{r.element_id},{r.element_type},{r.lx:.4f},{r.ly:.4f},{r.lz:.4f},"
            f"{r.length:.4f},{r.area:.6f},{r.volume:.4f},{_fmt_basis(r.mass_basis)},{r.mass:.3f}"
        )
    return lines


def render_totals(rollups: Iterable[RollUp]) -> list[str]:
    lines = [TOTALS_HEADER]
    for g in rollups:
        lines.append(f"{g.group_key},{g.element_count},{g.total_volume:.4f},{g.total_mass:.4f}")
    return lines


def write_report(
    rollups: Iterable[RollUp],
    rows: Iterable[QuantityRow],
    destination: str | Path | None = None,
) -> str:
    """Render the report CSV (per-element rows, blank line, totals) and
    optionally write it to ``destination``."""
    content = "\n".join(render_rows(rows) + [""] + render_totals(rollups)) + "\n"
    if destination is not None:
        Path(destination).write_text(content, encoding="utf-8", newline="\n")
    return content
