"""Command-line interface: flags, JSON output, and the exit-code contract."""

import json

import pytest

from hexatile.cli import main

PASS = 0
USAGE = 1
DISAGREE = 2


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse paths
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def count_flags(a, b, c, d, p, parity):
    return [
        "count", "--a", str(a), "--b", str(b), "--c", str(c),
        "--d", str(d), "--p", str(p), "--parity", parity,
    ]


def test_count_det(capsys):
    code, out, _ = run(capsys, *count_flags(2, 2, 2, 0, 0, "even"), "--method", "det")
    assert code == PASS
    rec = json.loads(out.strip())
    assert rec["value"] == "20"
    assert rec["method"] == "det"
    assert rec["matrix_dim"] == 2
    assert rec["elapsed_ms"] >= 0
    assert rec["spec"]["a"] == 2


def test_count_a0_is_one(capsys):
    code, out, _ = run(capsys, *count_flags(0, 3, 4, 2, 1, "even"), "--method", "det")
    assert code == PASS
    assert json.loads(out.strip())["value"] == "1"


def test_count_methods_agree(capsys):
    code, out, _ = run(
        capsys, *count_flags(1, 2, 2, 1, 0, "even"), "--method", "det", "--method", "oracle"
    )
    assert code == PASS
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert [rec["value"] for rec in lines] == ["3", "3"]
    assert {rec["method"] for rec in lines} == {"det", "oracle"}


def test_count_negative_odd_instance(capsys):
    code, out, _ = run(
        capsys, *count_flags(4, 5, 3, 3, 3, "odd"), "--method", "det", "--method", "oracle"
    )
    assert code == PASS
    for line in out.strip().splitlines():
        rec = json.loads(line)
        assert rec["value"] == "-8008"
        assert rec["sign"] == -1


def test_count_disagreement_exits_2(capsys):
    # the transcribed halved-odd product disagrees with the determinant
    code, out, _ = run(
        capsys,
        *count_flags(1, 3, 5, 1, 0, "odd"),
        "--method", "det", "--method", "formula:byun_odd",
    )
    assert code == DISAGREE
    values = {json.loads(line)["value"] for line in out.strip().splitlines()}
    assert values == {"-15", "24"}


def test_count_corrected_formula_agrees(capsys):
    code, out, _ = run(
        capsys,
        *count_flags(7, 5, 3, 3, 3, "odd"),
        "--method", "det", "--method", "formula:byun_odd_corrected",
    )
    assert code == PASS
    values = [json.loads(line)["value"] for line in out.strip().splitlines()]
    assert values == ["-2642640", "-2642640"]


def test_count_unknown_method_usage_error(capsys):
    code, _, err = run(capsys, *count_flags(2, 2, 2, 0, 0, "even"), "--method", "guess")
    assert code == USAGE
    assert "guess" in err


def test_count_formula_out_of_window_usage_error(capsys):
    # macmahon gate requires d == 0
    code, _, err = run(
        capsys, *count_flags(2, 2, 2, 1, 0, "even"), "--method", "formula:macmahon"
    )
    assert code == USAGE
    assert err


def test_bad_flag_usage_error(capsys):
    code, _, _ = run(capsys, "count", "--a", "2", "--b", "2", "--c", "2",
                     "--d", "0", "--p", "0", "--parity", "diagonal")
    assert code == USAGE


def test_verify_suite_json_and_exit(capsys):
    code, out, _ = run(capsys, "verify", "macmahon", "--amax", "3", "--bmax", "3", "--cmax", "3")
    assert code == PASS
    report = json.loads(out.strip())
    assert report["suite"] == "macmahon"
    assert report["passed"] is True
    assert report["checks"][0]["cases"] > 0


def test_verify_all_small_ranges(capsys):
    code, out, _ = run(
        capsys, "verify", "all",
        "--amax", "3", "--bmax", "4", "--cmax", "4", "--dmax", "2",
    )
    assert code == PASS
    report = json.loads(out.strip())
    assert report["suite"] == "all"
    assert report["passed"] is True
    names = {ch["name"] for ch in report["checks"]}
    for expected in (
        "macmahon_product", "halved_even_product", "halved_odd_product_corrected",
        "p1md_simple", "unit_intrusion_corollary", "binomial_lu_inverse",
        "complement_block_count", "telescoped_double_sum", "condensation_even",
        "condensation_odd", "mirror_symmetry",
    ):
        assert expected in names, expected


def test_verify_byun_reports_printed_odd_informationally(capsys):
    code, out, _ = run(capsys, "verify", "byun", "--amax", "3", "--bmax", "4", "--cmax", "4",
                       "--dmax", "2")
    assert code == PASS
    report = json.loads(out.strip())
    by_name = {ch["name"]: ch for ch in report["checks"]}
    assert not by_name["halved_even_product"]["failures"]
    assert not by_name["halved_odd_product_corrected"]["failures"]
    printed = by_name["halved_odd_product_printed"]
    assert printed["informational"] is True
    assert printed["failures"]  # transcription failure, surfaced not hidden


def test_fit_writes_json(tmp_path, capsys):
    out_file = tmp_path / "q1.json"
    code, out, _ = run(capsys, "fit", "--d", "1", "--out", str(out_file))
    assert code == PASS
    payload = json.loads(out_file.read_text())
    assert payload["d"] == 1
    assert payload["terms"] == [{"exponents": [0, 0, 0, 0], "num": "1", "den": "1"}]
    assert "Q(d=1" in out


def test_fit_d2_prints_polynomial(tmp_path, capsys):
    out_file = tmp_path / "q2.json"
    code, out, _ = run(capsys, "fit", "--d", "2", "--out", str(out_file))
    assert code == PASS
    payload = json.loads(out_file.read_text())
    assert payload["d"] == 2
    assert len(payload["terms"]) == 8


def test_render_writes_svg(tmp_path, capsys):
    out_file = tmp_path / "hex.svg"
    code, _, _ = run(capsys, "render", "--a", "3", "--b", "4", "--c", "5",
                     "--d", "1", "--p", "0", "--parity", "even", "--out", str(out_file))
    assert code == PASS
    text = out_file.read_text()
    assert text.startswith("<svg") and "</svg>" in text


def test_render_with_tiling(tmp_path, capsys):
    out_file = tmp_path / "tiled.svg"
    code, _, _ = run(capsys, "render", "--a", "2", "--b", "2", "--c", "2",
                     "--d", "1", "--p", "1", "--parity", "even",
                     "--with-tiling", "--out", str(out_file))
    assert code == PASS
    assert "#b3cde3" in out_file.read_text()


def test_render_untileable_spec_fails(tmp_path, capsys):
    out_file = tmp_path / "none.svg"
    code, _, err = run(capsys, "render", "--a", "2", "--b", "3", "--c", "3",
                       "--d", "1", "--p", "2", "--parity", "odd",
                       "--with-tiling", "--out", str(out_file))
    assert code != PASS
    assert err


def test_bench_rows_and_agreement(capsys):
    code, out, _ = run(capsys, "bench", "--dims", "4,6")
    assert code == PASS
    lines = out.strip().splitlines()
    assert lines[0] == "dim,kernel,elapsed_ms,result_digits"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 4  # two dims, two kernels
    assert {r[1] for r in rows} == {"bareiss", "modular"}
