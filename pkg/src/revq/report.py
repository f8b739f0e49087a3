"""Resource reports over the six adder configurations.

``build_report`` measures every structure x ladder combination across a
width range and attaches per-row conformance flags where a closed form
or bound is known.  ``write_csv`` emits the rows with a fixed column
order (all measured cells are integers; literature reference rows carry
formula strings and are flagged ``literature``).  ``write_figures``
renders count / depth / ancilla curves next to the CSV.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

from . import analysis
from .adders import AdderConfig, LADDERS, STRUCTURES, build_adder
from .analysis import Check, Metrics, carrylog_ancilla_count, carrylog_toffoli_count

CSV_COLUMNS = [
    "structure",
    "ladder",
    "n",
    "provenance",
    "wires",
    "ancillas",
    "total_gates",
    "x_count",
    "cnot_count",
    "toffoli_count",
    "mcx_count",
    "cnot_depth",
    "toffoli_depth",
    "mcx_layer_depth",
    "mcx_arities",
    "toffoli_count_model",
    "check_toffoli_count",
    "check_toffoli_depth",
    "check_cnot_count",
    "check_ancillas",
    "notes",
]

# Reference rows for adders this toolkit does not construct.
LITERATURE_ROWS = [
    {"provenance": "CDKM04", "toffoli_count": "2n-1", "toffoli_depth": "2n-1", "ancillas": "1"},
    {"provenance": "Mog19", "toffoli_count": "12n+O(log n)", "toffoli_depth": "10log(n)+O(1)", "ancillas": "n-1"},
]


@dataclass
class ReportRow:
    structure: str
    ladder: str
    n: int
    provenance: str
    metrics: Metrics
    checks: dict[str, Check] = field(default_factory=dict)
    notes: str = ""

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def csv_cells(self) -> dict[str, object]:
        m = self.metrics
        hist = ";".join(f"{k}:{v}" for k, v in sorted(m.mcx_arity_histogram.items()))
        cells: dict[str, object] = {
            "structure": self.structure,
            "ladder": self.ladder,
            "n": self.n,
            "provenance": self.provenance,
            "wires": m.total_wires,
            "ancillas": m.ancilla_count,
            "total_gates": m.total_gates,
            "x_count": m.counts["x"],
            "cnot_count": m.counts["cx"],
            "toffoli_count": m.counts["ccx"],
            "mcx_count": m.counts["mcx"],
            "cnot_depth": m.depth["cx"],
            "toffoli_depth": m.depth["ccx"],
            "mcx_layer_depth": m.mcx_layer_count,
            "mcx_arities": hist,
            "toffoli_count_model": analysis.modeled_toffoli_count(m),
            "notes": self.notes,
        }
        for col in ("check_toffoli_count", "check_toffoli_depth", "check_cnot_count", "check_ancillas"):
            key = col.removeprefix("check_")
            cells[col] = "" if key not in self.checks else ("pass" if self.checks[key].passed else "fail")
        return cells


def _config_checks(cfg: AdderConfig, m: Metrics) -> tuple[dict[str, Check], str]:
    """Per-cell conformance checks; empty where no closed form is claimed."""
    n = cfg.n
    checks: dict[str, Check] = {}
    notes = ""
    key = (cfg.structure, cfg.ladder)
    if key == ("optimized", "linear"):
        checks["toffoli_count"] = Check("toffoli-count", "==", m.counts["ccx"], 2 * n - 1)
        checks["toffoli_depth"] = Check("toffoli-depth", "==", m.depth["ccx"], 2 * n - 1)
        checks["ancillas"] = Check("ancillas", "==", m.ancilla_count, 0)
    elif key == ("original", "linear"):
        checks["toffoli_count"] = Check("toffoli-count", "==", m.counts["ccx"], 4 * n - 4)
        checks["ancillas"] = Check("ancillas", "==", m.ancilla_count, n - 1)
        notes = "published VBE96 form counts 4n-2; this assembly measures 4n-4"
    elif key == ("optimized", "carrylog"):
        rep = analysis.formula_check("adder-optimized-carrylog", n, m)
        checks = {
            "toffoli_count": rep.checks[0],
            "toffoli_depth": rep.checks[1],
            "cnot_count": rep.checks[2],
            "ancillas": rep.checks[3],
        }
    elif key == ("original", "carrylog"):
        low = carrylog_toffoli_count(n - 1) if n >= 3 else 0
        expected = (2 * n - 1) + carrylog_toffoli_count(n) + low
        checks["toffoli_count"] = Check("toffoli-count", "==", m.counts["ccx"], expected)
        bank = max(carrylog_ancilla_count(n), carrylog_ancilla_count(n - 1) if n >= 3 else 0)
        checks["ancillas"] = Check("ancillas", "==", m.ancilla_count, (n - 1) + bank)
    elif key == ("original", "polylog"):
        checks["ancillas"] = Check("ancillas", "==", m.ancilla_count, n - 1)
    elif key == ("optimized", "polylog"):
        checks["ancillas"] = Check("ancillas", "==", m.ancilla_count, 0)
    return checks, notes


def build_report(n_lo: int, n_hi: int) -> list[ReportRow]:
    """One measured row per (structure, ladder, n) over the width range."""
    if n_lo < 2 or n_hi < n_lo:
        raise ValueError("width range must satisfy 2 <= LO <= HI")
    rows: list[ReportRow] = []
    for n in range(n_lo, n_hi + 1):
        for structure in STRUCTURES:
            for ladder in LADDERS:
                cfg = AdderConfig(n, structure, ladder)
                circ = build_adder(cfg)
                m = analysis.metrics(circ)
                checks, notes = _config_checks(cfg, m)
                rows.append(ReportRow(structure, ladder, n, cfg.source, m, checks, notes))
    return rows


def write_csv(rows: list[ReportRow], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow(row.csv_cells())
        for ref in LITERATURE_ROWS:
            cells = {col: "" for col in CSV_COLUMNS}
            cells.update(ref)
            cells["structure"] = "literature"
            cells["notes"] = "reference values; construction not part of this toolkit"
            writer.writerow(cells)
    return path


def write_figures(rows: list[ReportRow], csv_path: str | Path) -> list[Path]:
    """Render count/depth/ancilla curves as PNGs next to the CSV."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    csv_path = Path(csv_path)
    stem = csv_path.with_suffix("")
    series: dict[tuple[str, str], list[ReportRow]] = {}
    for row in rows:
        series.setdefault((row.structure, row.ladder), []).append(row)

    quantities = [
        ("toffoli_count", "Toffoli count", lambda m: m.counts["ccx"]),
        ("toffoli_depth", "Toffoli depth", lambda m: m.depth["ccx"]),
        ("ancillas", "ancilla wires", lambda m: m.ancilla_count),
    ]
    written: list[Path] = []
    for suffix, label, pick in quantities:
        fig, ax = plt.subplots(figsize=(7, 4.5))
        for (structure, ladder), group in sorted(series.items()):
            group = sorted(group, key=lambda r: r.n)
            ax.plot(
                [r.n for r in group],
                [pick(r.metrics) for r in group],
                marker="o",
                markersize=3,
                label=f"{structure}+{ladder}",
            )
        ax.set_xlabel("operand width n")
        ax.set_ylabel(label)
        ax.grid(True, alpha=0.3)
        ax.legend(fontsize=8)
        fig.tight_layout()
        out = Path(f"{stem}_{suffix}.png")
        fig.savefig(out, dpi=120)
        plt.close(fig)
        written.append(out)
    return written
