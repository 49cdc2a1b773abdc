"""Render SVG charts from mapping-experiment CSV files.

Input files are named ``<kind>_<benchmark>.csv`` where kind is one of
fixed, variable, weak, strong. Only the documented columns are consumed;
unknown extra columns never affect the output.

Figures produced per metric (migrations, runtime_ms):
  - ``width_<benchmark>_<metric>.svg`` — metric vs. circuit width, one line
    per architecture kind (fixed/variable overlay).
  - ``weak_<metric>.svg`` — metric vs. core count at constant total
    capacity, one line per benchmark.
  - ``strong_<benchmark>_<metric>.svg`` — metric vs. core count, one line
    per qubits-per-core value.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.figure import Figure

REQUIRED_COLUMNS = (
    "benchmark",
    "width",
    "cores",
    "qubits_per_core",
    "migrations",
    "runtime_ms",
)

METRICS = {
    "migrations": "migrations (qubit moves)",
    "runtime_ms": "runtime (ms)",
}

_X_LABELS = {"width": "circuit width (qubits)", "cores": "cores"}


def _load_rows(path: Path) -> list[dict[str, float | str]]:
    """Typed rows of one CSV; raises ValueError on malformed input."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [col for col in REQUIRED_COLUMNS if col not in header]
        if missing:
            raise ValueError(f"{path.name}: missing columns {', '.join(missing)}")
        rows: list[dict[str, float | str]] = []
        for i, raw in enumerate(reader, start=2):
            try:
                rows.append(
                    {
                        "benchmark": raw["benchmark"],
                        "width": int(raw["width"]),
                        "cores": int(raw["cores"]),
                        "qubits_per_core": int(raw["qubits_per_core"]),
                        "migrations": float(raw["migrations"]),
                        "runtime_ms": float(raw["runtime_ms"]),
                    }
                )
            except (TypeError, ValueError) as exc:
                raise ValueError(f"{path.name}: bad row at line {i}: {exc}") from exc
    return rows


def _scan(csv_dir: Path) -> dict[tuple[str, str], list[dict[str, float | str]]]:
    """(kind, benchmark) -> rows, for every recognized CSV in the directory."""
    if not csv_dir.is_dir():
        raise ValueError(f"not a directory: {csv_dir}")
    data: dict[tuple[str, str], list[dict[str, float | str]]] = {}
    for path in sorted(csv_dir.glob("*.csv")):
        kind, _, benchmark = path.stem.partition("_")
        if kind not in ("fixed", "variable", "weak", "strong") or not benchmark:
            continue
        data[(kind, benchmark)] = _load_rows(path)
    if not data:
        raise ValueError(f"no experiment CSVs found in {csv_dir}")
    return data


def _line(ax, rows, x_key: str, metric: str, label: str) -> None:
    pts = sorted((r[x_key], r[metric]) for r in rows)
    ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", label=label)


def _finish(ax, x_key: str, metric: str, title: str) -> None:
    ax.set_xlabel(_X_LABELS[x_key])
    ax.set_ylabel(METRICS[metric])
    ax.set_title(title)
    if ax.lines:
        ax.legend()


def build_figures(csv_dir: Path | str) -> dict[str, Figure]:
    """Figure name (without extension) -> matplotlib figure."""
    data = _scan(Path(csv_dir))
    figures: dict[str, Figure] = {}

    width_benchmarks = sorted(
        {b for k, b in data if k in ("fixed", "variable")}
    )
    weak_benchmarks = sorted(b for k, b in data if k == "weak")
    strong_benchmarks = sorted(b for k, b in data if k == "strong")

    for metric in METRICS:
        for bench in width_benchmarks:
            fig, ax = plt.subplots()
            for kind in ("fixed", "variable"):
                rows = data.get((kind, bench))
                if rows:
                    _line(ax, rows, "width", metric, kind)
            _finish(ax, "width", metric, f"{bench}: {metric} vs. width")
            figures[f"width_{bench}_{metric}"] = fig

        if weak_benchmarks:
            fig, ax = plt.subplots()
            for bench in weak_benchmarks:
                rows = data[("weak", bench)]
                if rows:
                    _line(ax, rows, "cores", metric, bench)
            _finish(ax, "cores", metric, f"weak scaling: {metric}")
            figures[f"weak_{metric}"] = fig

        for bench in strong_benchmarks:
            fig, ax = plt.subplots()
            rows = data[("strong", bench)]
            for qpc in sorted({r["qubits_per_core"] for r in rows}):
                _line(
                    ax,
                    [r for r in rows if r["qubits_per_core"] == qpc],
                    "cores",
                    metric,
                    f"{qpc} qubits/core",
                )
            _finish(ax, "cores", metric, f"{bench}: strong scaling {metric}")
            figures[f"strong_{bench}_{metric}"] = fig

    return figures


def render_figures(csv_dir: Path | str, out_dir: Path | str) -> list[Path]:
    """Write one SVG per figure; deterministic for identical inputs."""
    plt.rcParams["svg.hashsalt"] = "mcplots"
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    figures = build_figures(csv_dir)
    try:
        for name in sorted(figures):
            path = out / f"{name}.svg"
            figures[name].savefig(path, format="svg", metadata={"Date": None})
            written.append(path)
    finally:
        for fig in figures.values():
            plt.close(fig)
    return written


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="render", description="Render experiment CSVs as SVG charts."
    )
    parser.add_argument("--csv-dir", required=True, help="directory of experiment CSVs")
    parser.add_argument("--out", required=True, help="output directory for SVG files")
    args = parser.parse_args(argv)
    try:
        written = render_figures(args.csv_dir, args.out)
    except (ValueError, OSError) as exc:
        print(f"render: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
