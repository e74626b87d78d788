"""End-to-end command-line behavior, driven through ``main(argv)``."""

import json

import pytest

from gpdtools.cli import main

# ---------------------------------------------------------------------------
# Helpers.
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def examples_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("examples")
    assert main(["examples", "--out", str(out)]) == 0
    return out


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# examples
# ---------------------------------------------------------------------------


def test_examples_writes_all_fixtures(tmp_path, capsys):
    code, out, err = _run(capsys, ["examples", "--out", str(tmp_path)])
    assert code == 0 and err == ""
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == [
        "band3.gpd",
        "band3.map",
        "flip2.gpd",
        "flip2.map",
        "z3twist.cspec",
        "z3twist.gpd",
        "z3twist.map",
    ]
    printed = out.splitlines()
    assert len(printed) == 7
    assert all(line.startswith(str(tmp_path)) for line in printed)
    assert (tmp_path / "band3.gpd").read_text() == "3\n0 1 1\n0 1 1\n0 1 2\n"
    assert (tmp_path / "z3twist.map").read_text() == "3\n0 2 1\n"


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


def test_check_table_json(examples_dir, capsys):
    code, out, _ = _run(
        capsys, ["check", str(examples_dir / "band3.gpd"), "--format", "json"]
    )
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "check_report@1"
    g = report["groupoid"]
    assert g["order"] == 3
    assert g["associative"] is True
    assert g["band"] is True
    assert g["idempotents"] == [0, 1, 2]
    assert g["idempotents_form_semilattice"] is False
    assert g["semilattice_of_groups"] is False
    assert g["involutive_automorphisms"] == [[0, 1, 2]]
    assert g["identity_classes"]["B"] is True
    assert g["semigroup_classes"]["B"] is True
    assert report["mapping"] is None


def test_check_with_mapping(examples_dir, capsys):
    code, out, _ = _run(
        capsys,
        [
            "check",
            str(examples_dir / "band3.gpd"),
            str(examples_dir / "band3.map"),
            "--format",
            "json",
        ],
    )
    assert code == 0
    m = json.loads(out)["mapping"]
    assert m["images"] == [1, 0, 2]
    assert m["involution"] is True
    assert m["endomorphism"] is False
    assert m["automorphism"] is False
    assert m["idempotent_fixed"] is False


def test_check_text_format_is_key_sorted(examples_dir, capsys):
    code, out, _ = _run(capsys, ["check", str(examples_dir / "z3twist.gpd")])
    assert code == 0
    lines = out.splitlines()
    assert lines == sorted(lines)
    assert "groupoid.completely_inverse: true" in lines
    assert "groupoid.associative: false" in lines
    assert "groupoid.idempotents: [0]" in lines
    assert "mapping: null" in lines


def test_check_exit_codes_verdict_free(examples_dir, capsys):
    # A negative mathematical verdict is still a successful check.
    code, out, _ = _run(
        capsys, ["check", str(examples_dir / "flip2.gpd"), "--format", "json"]
    )
    assert code == 0
    assert json.loads(out)["groupoid"]["associative"] is False


def test_check_malformed_table(tmp_path, capsys):
    bad = tmp_path / "bad.gpd"
    bad.write_text("3\n0 1 1\n0 1 1\n")
    code, out, err = _run(capsys, ["check", str(bad)])
    assert code == 2 and out == ""
    assert err.startswith("error:")
    assert "line 4" in err


def test_check_mapping_size_mismatch(examples_dir, capsys):
    code, _, err = _run(
        capsys,
        ["check", str(examples_dir / "band3.gpd"), str(examples_dir / "flip2.map")],
    )
    assert code == 2
    assert "mapping size 2 does not match table order 3" in err


def test_check_missing_file(tmp_path, capsys):
    code, _, err = _run(capsys, ["check", str(tmp_path / "absent.gpd")])
    assert code == 2 and err.startswith("error:")


def test_no_command_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# decide
# ---------------------------------------------------------------------------


def test_decide_positive(examples_dir, capsys):
    code, out, _ = _run(
        capsys, ["decide", str(examples_dir / "z3twist.gpd"), "--format", "json"]
    )
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "decision_report@1"
    assert report["determined"] is True
    assert report["witness"]["alpha"] == [0, 2, 1]
    assert report["witness"]["star"] == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]


def test_decide_negative(examples_dir, capsys):
    code, out, _ = _run(
        capsys, ["decide", str(examples_dir / "band3.gpd"), "--format", "json"]
    )
    assert code == 1
    report = json.loads(out)
    assert report["determined"] is False
    assert report["witness"] is None


def test_decide_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.gpd"
    bad.write_text("2\n0 5\n0 0\n")
    code, _, err = _run(capsys, ["decide", str(bad)])
    assert code == 2 and err.startswith("error:")


# ---------------------------------------------------------------------------
# build / decompose
# ---------------------------------------------------------------------------


def test_build_to_files(examples_dir, tmp_path, capsys):
    prefix = tmp_path / "rebuilt"
    code, out, _ = _run(
        capsys,
        ["build", str(examples_dir / "z3twist.cspec"), "--out", str(prefix)],
    )
    assert code == 0
    assert out.splitlines() == [f"{prefix}.gpd", f"{prefix}.map"]
    assert (
        tmp_path / "rebuilt.gpd"
    ).read_text() == (examples_dir / "z3twist.gpd").read_text()
    assert (
        tmp_path / "rebuilt.map"
    ).read_text() == (examples_dir / "z3twist.map").read_text()


def test_build_to_stdout(examples_dir, capsys):
    code, out, _ = _run(capsys, ["build", str(examples_dir / "z3twist.cspec")])
    assert code == 0
    assert out == (
        "# table\n"
        + (examples_dir / "z3twist.gpd").read_text()
        + "# mapping\n"
        + (examples_dir / "z3twist.map").read_text()
    )


def test_build_invalid_spec(tmp_path, capsys):
    bad = tmp_path / "bad.cspec"
    bad.write_text("semilattice 1\n0\ngroup 0 2\n0 1\n1 1\nalpha 0\n0 1\n")
    code, _, err = _run(capsys, ["build", str(bad)])
    assert code == 2 and err.startswith("error:")


def test_decompose_with_mapping(examples_dir, tmp_path, capsys):
    prefix = tmp_path / "dec"
    code, out, _ = _run(
        capsys,
        [
            "decompose",
            str(examples_dir / "z3twist.gpd"),
            str(examples_dir / "z3twist.map"),
            "--out",
            str(prefix),
        ],
    )
    assert code == 0
    assert out.splitlines() == [f"{prefix}.cspec"]
    assert (
        tmp_path / "dec.cspec"
    ).read_text() == (examples_dir / "z3twist.cspec").read_text()


def test_decompose_uses_decision_witness(examples_dir, capsys):
    code, out, _ = _run(capsys, ["decompose", str(examples_dir / "z3twist.gpd")])
    assert code == 0
    assert out == (examples_dir / "z3twist.cspec").read_text()


def test_decompose_not_determined(examples_dir, capsys):
    code, out, err = _run(capsys, ["decompose", str(examples_dir / "band3.gpd")])
    assert code == 1 and out == ""
    assert err.startswith("not determined")


def test_build_decompose_build_round_trip(examples_dir, tmp_path, capsys):
    spec0 = examples_dir / "z3twist.cspec"
    p1 = tmp_path / "one"
    assert main(["build", str(spec0), "--out", str(p1)]) == 0
    p2 = tmp_path / "two"
    assert main(["decompose", f"{p1}.gpd", f"{p1}.map", "--out", str(p2)]) == 0
    assert (tmp_path / "two.cspec").read_text() == spec0.read_text()
    p3 = tmp_path / "three"
    assert main(["build", f"{p2}.cspec", "--out", str(p3)]) == 0
    capsys.readouterr()
    assert (tmp_path / "three.gpd").read_text() == (tmp_path / "one.gpd").read_text()
    assert (tmp_path / "three.map").read_text() == (tmp_path / "one.map").read_text()


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

_TINY_SWEEP = [
    "sweep",
    "--max-order",
    "2",
    "--samples",
    "25",
    "--seed",
    "3",
    "--max-semilattice-order",
    "1",
    "--max-group-order",
    "2",
]


def test_sweep_passes(capsys):
    code, out, _ = _run(capsys, _TINY_SWEEP + ["--format", "json"])
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "sweep_report@1"
    assert report["passed"] is True
    assert report["counterexamples"] == []
    assert report["config"]["sample_count"] == 25


def test_sweep_report_to_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = _run(capsys, _TINY_SWEEP + ["--out", str(target)])
    assert code == 0
    assert out.strip() == str(target)
    text = target.read_text()
    assert text.endswith("\n")
    assert json.loads(text)["passed"] is True


def test_sweep_unknown_suite(capsys):
    code, _, err = _run(capsys, _TINY_SWEEP + ["--suites", "nonsense"])
    assert code == 2 and err.startswith("error:")
    assert "nonsense" in err


def test_sweep_bad_jobs(capsys):
    code, _, err = _run(capsys, _TINY_SWEEP + ["--jobs", "0"])
    assert code == 2 and err.startswith("error:")


def test_sweep_large_order_needs_flag(capsys):
    code, _, err = _run(capsys, ["sweep", "--max-order", "4", "--samples", "0"])
    assert code == 2 and err.startswith("error:")
