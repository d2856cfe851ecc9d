import json

import pytest

from ecclab.cli import main


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_usage_error_on_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == 2


def test_usage_error_on_unknown_flag(capsys):
    assert main(["exact", "--input", "x", "--bogus", "1"]) == 2


def test_gen_and_verify_gadget(tmp_path, capsys):
    prefix = str(tmp_path / "g")
    code, out, _ = run(
        ["gen", "--kind", "roundtrip-radius", "--na", "4", "--nb", "4",
         "--d", "3", "--seed", "1", "--output", prefix], capsys)
    assert code == 0 and "roundtrip-radius" in out
    assert (tmp_path / "g.graph").exists() and (tmp_path / "g.json").exists()
    code, out, _ = run(
        ["verify", "--input", prefix + ".graph", "--sidecar", prefix + ".json"], capsys)
    assert code == 0 and out.startswith("PASS")


def test_verify_fails_on_tampered_sidecar(tmp_path, capsys):
    prefix = str(tmp_path / "g")
    run(["gen", "--kind", "radius-23", "--na", "4", "--nb", "4", "--d", "3",
         "--seed", "2", "--output", prefix], capsys)
    sidecar = json.loads((tmp_path / "g.json").read_text())
    if sidecar["answer"]:
        sidecar["yes_value"] += 1
    else:
        # Flip to YES: the gadget's true value is >= no_bound > yes_value,
        # so the claimed exact value cannot hold.
        sidecar["answer"] = True
    (tmp_path / "g.json").write_text(json.dumps(sidecar))
    code, out, _ = run(
        ["verify", "--input", prefix + ".graph", "--sidecar", prefix + ".json"], capsys)
    assert code == 1 and out.startswith("FAIL")
    # Both values appear in the report.
    assert "computed" in out


def test_gen_partial_ktree_and_tw_verify(tmp_path, capsys):
    prefix = str(tmp_path / "kt")
    code, out, _ = run(
        ["gen", "--kind", "partial-ktree", "--n", "40", "--k", "3",
         "--seed", "3", "--output", prefix], capsys)
    assert code == 0
    code, tw_out, _ = run(
        ["tw", "--input", prefix + ".graph", "--td", prefix + ".td",
         "--variant", "undirected"], capsys)
    assert code == 0
    code, exact_out, _ = run(
        ["exact", "--input", prefix + ".graph", "--variant", "undirected"], capsys)
    assert code == 0
    assert tw_out == exact_out


def test_exact_median_quantity(tmp_path, capsys):
    prefix = str(tmp_path / "m")
    run(["gen", "--kind", "median", "--na", "3", "--nb", "3", "--d", "3",
         "--seed", "4", "--output", prefix], capsys)
    sidecar = json.loads((tmp_path / "m.json").read_text())
    code, out, _ = run(
        ["exact", "--input", prefix + ".graph", "--quantity", "median",
         "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    if sidecar["answer"]:
        assert payload["sum"] == sidecar["yes_value"]
    else:
        assert payload["sum"] >= sidecar["no_bound"]


def test_reduce_round_trips_on_gadget(tmp_path, capsys):
    prefix = str(tmp_path / "u")
    run(["gen", "--kind", "undirected-diameter-23", "--na", "5", "--nb", "5",
         "--d", "3", "--seed", "5", "--output", prefix], capsys)
    code, out, _ = run(
        ["reduce", "--input", prefix + ".graph", "--target", "diameter",
         "--seed", "6", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["value"] in (2, 3)


def test_approx_runs(tmp_path, capsys):
    prefix = str(tmp_path / "kt2")
    run(["gen", "--kind", "partial-ktree", "--n", "30", "--k", "2",
         "--seed", "7", "--directed", "--output", prefix], capsys)
    code, out, _ = run(
        ["approx", "--input", prefix + ".graph", "--algorithm", "source-radius",
         "--seed", "8", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert "estimate" in payload and payload["guarantee"] == ["1", "2"]
    code, out, _ = run(
        ["approx", "--input", prefix + ".graph", "--algorithm", "finite-min-ecc"],
        capsys)
    assert code == 0 and out.startswith("vertex\tfinite")


def test_capacity_cap_exit_code(tmp_path, capsys):
    prefix = str(tmp_path / "big")
    run(["gen", "--kind", "partial-ktree", "--n", "50", "--k", "2",
         "--seed", "9", "--output", prefix], capsys)
    code, _, err = run(
        ["exact", "--input", prefix + ".graph", "--cap", "10"], capsys)
    assert code == 3


def test_missing_input_is_usage_error(capsys):
    assert main(["exact", "--input", "/nonexistent/file.graph"]) == 2


def test_seed_determinism(tmp_path, capsys):
    a, b = str(tmp_path / "a"), str(tmp_path / "b")
    for prefix in (a, b):
        run(["gen", "--kind", "source-radius", "--na", "6", "--nb", "6",
             "--d", "4", "--seed", "42", "--output", prefix], capsys)
    assert (tmp_path / "a.graph").read_text() == (tmp_path / "b.graph").read_text()
    assert (tmp_path / "a.json").read_text() == (tmp_path / "b.json").read_text()
    assert (tmp_path / "a.ss").read_text() == (tmp_path / "b.ss").read_text()


def test_bench_deterministic_modulo_timing(tmp_path, capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run(["bench", "--sizes", "20", "--ks", "2", "--seed", "11"], capsys)
        assert code == 0
        rows = [line.split("\t") for line in out.strip().splitlines()]
        # Drop the wall-time column (index 4) before comparing.
        outputs.append([r[:4] + r[5:] for r in rows])
    assert outputs[0] == outputs[1]
    assert outputs[0][0][0] == "algorithm"
