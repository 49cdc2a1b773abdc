import subprocess
import sys

import pytest

from mcplots import build_figures, main, render_figures

HEADER = (
    "benchmark,width,cores,qubits_per_core,total_qubits,slices,twoq_gates,"
    "migrations,paired_swaps,runtime_ms,params"
)


def _row(benchmark, width, cores, qpc, migrations, runtime):
    return (
        f"{benchmark},{width},{cores},{qpc},{cores * qpc},10,20,"
        f"{migrations},{migrations // 2},{runtime},seed=1"
    )


def _write(path, *lines):
    path.write_text("\n".join((HEADER,) + lines) + "\n")


def test_fixed_variable_overlay_has_two_lines(tmp_path):
    _write(
        tmp_path / "fixed_cuccaro.csv",
        _row("cuccaro", 8, 10, 10, 4, 1.0),
        _row("cuccaro", 16, 10, 10, 9, 2.0),
    )
    _write(
        tmp_path / "variable_cuccaro.csv",
        _row("cuccaro", 8, 10, 2, 6, 0.8),
        _row("cuccaro", 16, 10, 2, 12, 1.5),
    )
    figures = build_figures(tmp_path)
    assert set(figures) == {"width_cuccaro_migrations", "width_cuccaro_runtime_ms"}
    for fig in figures.values():
        assert len(fig.axes[0].lines) == 2


def test_strong_scaling_has_line_per_qpc(tmp_path):
    rows = [
        _row("qftadd", cores * qpc, cores, qpc, cores * 3, float(cores))
        for qpc in (4, 6, 8, 10)
        for cores in (2, 4, 6)
    ]
    _write(tmp_path / "strong_qftadd.csv", *rows)
    figures = build_figures(tmp_path)
    fig = figures["strong_qftadd_migrations"]
    assert len(fig.axes[0].lines) == 4
    labels = [ln.get_label() for ln in fig.axes[0].lines]
    assert labels == [f"{q} qubits/core" for q in (4, 6, 8, 10)]


def test_weak_scaling_line_per_benchmark(tmp_path):
    _write(tmp_path / "weak_cuccaro.csv", _row("cuccaro", 80, 2, 50, 3, 1.0))
    _write(tmp_path / "weak_qftadd.csv", _row("qftadd", 80, 2, 50, 9, 2.0))
    figures = build_figures(tmp_path)
    assert len(figures["weak_runtime_ms"].axes[0].lines) == 2


def test_header_only_csv_renders_empty_axes_and_exits_zero(tmp_path):
    _write(tmp_path / "fixed_qft.csv")
    out = tmp_path / "out"
    assert main(["--csv-dir", str(tmp_path), "--out", str(out)]) == 0
    svgs = sorted(p.name for p in out.glob("*.svg"))
    assert svgs == ["width_qft_migrations.svg", "width_qft_runtime_ms.svg"]
    figures = build_figures(tmp_path)
    assert all(not fig.axes[0].lines for fig in figures.values())


def test_cli_renders_and_prints_outputs(tmp_path, capsys):
    _write(tmp_path / "variable_qft.csv", _row("qft", 8, 10, 2, 5, 0.5))
    out = tmp_path / "figs"
    assert main(["--csv-dir", str(tmp_path), "--out", str(out)]) == 0
    printed = capsys.readouterr().out.strip().splitlines()
    assert len(printed) == 2
    assert all(line.endswith(".svg") for line in printed)


def test_deterministic_output(tmp_path):
    _write(tmp_path / "fixed_qft.csv", _row("qft", 8, 10, 10, 5, 0.5))
    out1, out2 = tmp_path / "a", tmp_path / "b"
    render_figures(tmp_path, out1)
    render_figures(tmp_path, out2)
    name = "width_qft_migrations.svg"
    assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


def test_unknown_columns_do_not_change_output(tmp_path):
    plain, extra = tmp_path / "plain", tmp_path / "extra"
    plain.mkdir(), extra.mkdir()
    _write(plain / "fixed_qft.csv", _row("qft", 8, 10, 10, 5, 0.5))
    (extra / "fixed_qft.csv").write_text(
        HEADER + ",comment\n" + _row("qft", 8, 10, 10, 5, 0.5) + ",hello\n"
    )
    out1, out2 = tmp_path / "o1", tmp_path / "o2"
    render_figures(plain, out1)
    render_figures(extra, out2)
    name = "width_qft_migrations.svg"
    assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


def test_missing_directory_is_an_error(tmp_path, capsys):
    assert main(["--csv-dir", str(tmp_path / "nope"), "--out", str(tmp_path)]) == 1
    assert "render:" in capsys.readouterr().err


def test_empty_directory_is_an_error(tmp_path):
    assert main(["--csv-dir", str(tmp_path), "--out", str(tmp_path / "o")]) == 1


@pytest.mark.parametrize(
    "content",
    [
        "benchmark,width\ncuccaro,8\n",  # missing required columns
        HEADER + "\ncuccaro,eight,10,10,100,10,20,4,2,1.0,s\n",  # non-numeric
    ],
)
def test_malformed_csv_is_an_error(tmp_path, content, capsys):
    (tmp_path / "fixed_cuccaro.csv").write_text(content)
    assert main(["--csv-dir", str(tmp_path), "--out", str(tmp_path / "o")]) == 1
    assert "fixed_cuccaro.csv" in capsys.readouterr().err


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "mcplots.render", "--help"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "--csv-dir" in proc.stdout
