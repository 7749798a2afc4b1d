import json

import pytest

from lexpacking.main import build_parser, main
from lexpacking.models import ExitCode


def run(capsys, *argv):
    code = main(["--json", *argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_bounds_for_p8_p6(capsys):
    code, report = run(capsys, "bounds", "--g", "path:8", "--h", "path:6")
    assert code == ExitCode.OK
    results = report["results"]
    assert results["lower"]["value"] == 31
    assert results["upper"]["value"] == 33
    assert results["path_upper"]["value"] == 32
    assert "exact" not in results


def test_bounds_reports_exact_value(capsys):
    code, report = run(capsys, "bounds", "--g", "complete:3", "--h", "path:3")
    assert code == ExitCode.OK
    assert report["results"]["exact"]["value"] == 8
    assert report["results"]["exact"]["source"] == "exact_complete_factor"


def test_bounds_keeps_lower_bound_when_upper_does_not_apply(capsys):
    code, report = run(capsys, "bounds", "--g", "path:4", "--h", "empty:2")
    assert code == ExitCode.OK
    assert "lower" in report["results"]
    assert "upper" not in report["results"]
    assert "diam(G) <= 2" in report["results"]["upper_error"]


def test_bounds_rejects_disconnected_g(capsys):
    code = main(["bounds", "--g", "empty:3", "--h", "path:2"])
    assert code == ExitCode.USAGE
    assert "connected" in capsys.readouterr().err


def test_bounds_json_is_deterministic(capsys):
    main(["--json", "bounds", "--g", "path:5", "--h", "cycle:4"])
    first = capsys.readouterr().out
    main(["--json", "bounds", "--g", "path:5", "--h", "cycle:4"])
    assert capsys.readouterr().out == first


def test_exact_examples(capsys):
    code, report = run(capsys, "exact", "--g", "complete:5")
    assert code == ExitCode.OK
    assert report["results"]["chi_rho"] == 5
    assert report["status"] == "optimal"

    code, report = run(capsys, "exact", "--g", "path:4")
    assert report["results"]["chi_rho"] == 3


def test_exact_decision_exit_codes(capsys):
    code, report = run(capsys, "exact", "--product", "complete:3", "complete:2", "--k", "5")
    assert code == ExitCode.NEGATIVE
    assert report["status"] == "none"

    code, report = run(capsys, "exact", "--product", "complete:3", "complete:2", "--k", "6")
    assert code == ExitCode.OK
    assert report["results"]["coloring"]["k"] == 6

    code, report = run(
        capsys,
        "exact",
        "--product",
        "path:8",
        "path:6",
        "--k",
        "31",
        "--budget-nodes",
        "10",
    )
    assert code == ExitCode.TIMEOUT
    assert report["status"] == "timeout"
    assert report["results"]["coloring"] is None
    assert report["results"]["incumbent"]["k"] > 31


def test_exact_rejects_non_positive_budget(capsys):
    assert main(["exact", "--g", "path:4", "--budget-seconds", "0"]) == ExitCode.USAGE


def test_construct_then_verify_round_trip(capsys, tmp_path):
    out = tmp_path / "coloring.json"
    code, report = run(
        capsys, "construct", "--method", "path", "--n", "8", "--h", "path:6", "--out", str(out)
    )
    assert code == ExitCode.OK
    assert report["results"]["k"] == 32
    assert report["results"]["matches_bound"]
    assert report["results"]["verification"]["valid"]

    saved = json.loads(out.read_text())
    assert saved["k"] == 32
    assert len(saved["colors"]) == 48

    code, report = run(
        capsys, "verify", "--product", "path:8", "path:6", "--coloring", str(out)
    )
    assert code == ExitCode.OK
    assert report["status"] == "valid"


def test_verify_names_the_violation_of_a_tampered_coloring(capsys, tmp_path):
    out = tmp_path / "coloring.json"
    argv = ["construct", "--method", "layered", "--g", "complete:3", "--h", "path:3"]
    main([*argv, "--out", str(out)])
    capsys.readouterr()

    data = json.loads(out.read_text())
    data["colors"][1] = data["colors"][0]
    data["k"] = max(data["colors"])
    out.write_text(json.dumps(data))

    code, report = run(
        capsys, "verify", "--product", "complete:3", "path:3", "--coloring", str(out)
    )
    assert code == ExitCode.NEGATIVE
    assert report["status"] == "invalid"
    violation = report["results"]["violation"]
    assert (violation["u"], violation["v"]) == (0, 1)


def test_verify_rejects_size_mismatch(capsys, tmp_path):
    out = tmp_path / "coloring.json"
    out.write_text(json.dumps({"n": 3, "k": 2, "colors": [1, 2, 1]}))
    assert main(["verify", "--g", "path:4", "--coloring", str(out)]) == ExitCode.USAGE


def test_construct_layered_and_gate(capsys):
    code, report = run(
        capsys, "construct", "--method", "layered", "--g", "complete:3", "--h", "path:3"
    )
    assert code == ExitCode.OK
    assert report["results"]["k"] == 8

    assert main(["construct", "--method", "path", "--n", "8", "--h", "empty:2"]) == ExitCode.USAGE


def test_construct_accepts_cited_method_names(capsys):
    code, report = run(capsys, "construct", "--method", "theorem5", "--n", "8", "--h", "path:6")
    assert code == ExitCode.OK
    assert report["inputs"]["method"] == "path"
    assert report["results"]["k"] == 32

    argv = ["construct", "--method", "theorem2", "--g", "path:8", "--h", "path:6"]
    code, report = run(capsys, *argv)
    assert code == ExitCode.OK
    assert report["inputs"]["method"] == "layered"
    assert report["results"]["k"] == 33
    assert report["results"]["verification"]["valid"]


def test_json_flag_after_the_command(capsys):
    code = main(["bounds", "--g", "path:8", "--h", "path:6", "--json"])
    assert code == ExitCode.OK
    report = json.loads(capsys.readouterr().out)
    assert report["results"]["lower"]["value"] == 31
    assert report["results"]["lower"]["formula"].startswith("|G||H| - alpha(G)alpha(H)")

    assert main(["rho", "--g", "path:8", "--t", "7", "--json"]) == ExitCode.OK
    assert json.loads(capsys.readouterr().out)["results"]["rho"] == 1


def test_g_and_product_together_are_a_usage_error(capsys):
    argv = ["exact", "--g", "path:4", "--product", "path:2", "path:2"]
    assert main(argv) == ExitCode.USAGE
    assert "not both" in capsys.readouterr().err


def test_rho(capsys):
    code, report = run(capsys, "rho", "--g", "path:8", "--t", "2")
    assert report["results"]["rho"] == 3

    code, report = run(capsys, "rho", "--g", "path:13", "--t", "3")
    assert report["results"]["rho"] == 4
    assert {0, 12} <= set(report["results"]["witness"])

    code, report = run(capsys, "rho", "--g", "empty:3", "--t", "1")
    assert report["results"]["rho"] == 3
    assert report["results"]["diameter"] == "unreachable"


def test_product_edge_list(capsys, tmp_path):
    code, report = run(capsys, "product", "--g", "path:2", "--h", "path:2")
    assert code == ExitCode.OK
    assert report["results"]["n"] == 4
    assert report["results"]["m"] == 6

    out = tmp_path / "k4.txt"
    main(["product", "--g", "path:2", "--h", "path:2", "--out", str(out)])
    assert "4 6" in out.read_text().splitlines()


def test_certify_small_pair(capsys):
    code, report = run(capsys, "certify", "--g", "path:3", "--h", "complete:2")
    assert code == ExitCode.OK
    results = report["results"]
    assert results["optimal"]
    assert results["chi_rho"] == 5
    assert results["formula_agrees"]
    assert results["sandwich_ok"]


def test_human_readable_output(capsys):
    assert main(["bounds", "--g", "path:8", "--h", "path:6"]) == ExitCode.OK
    out = capsys.readouterr().out
    assert "48 - 12 - (3+2+2+2+2) + 6" in out
    assert "counting_lower" in out


def test_invalid_settings_exit_with_usage(capsys, monkeypatch):
    monkeypatch.setenv("LEXPACK_BUDGET_SECONDS", "soon")
    assert main(["exact", "--g", "path:4"]) == ExitCode.USAGE


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
