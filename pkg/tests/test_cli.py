"""Tests for the command-line entry points."""

import json

import pytest

from monopattern.cli import build_parser, main
from monopattern.harness import estimate_success, summarize
from monopattern.models.constants import AlgorithmConstants, load_constants
from monopattern.models.instances import InstanceSpec
from monopattern.models.reports import BenchConfig
from monopattern.rng import Rng
from monopattern.tester import MonotoneTester, find_monotone
from monopattern.view import SequenceView, load_sequence, save_sequence


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def tiny_config(tmp_path):
    path = tmp_path / "tiny.toml"
    path.write_text(
        "[constants]\n"
        "max_iterations = 2\n"
        "max_suffix_repetitions = 2\n"
        "max_scale_samples = 2\n"
        "max_density_guesses = 2\n"
        "max_base_samples = 4\n"
    )
    return path


@pytest.fixture
def identity_file(tmp_path):
    path = tmp_path / "identity.f64"
    save_sequence(path, [float(i) for i in range(64)])
    return path


@pytest.fixture
def decreasing_file(tmp_path):
    path = tmp_path / "decreasing.txt"
    save_sequence(path, [float(64 - i) for i in range(64)])
    return path


class TestParser:
    def test_subcommands(self):
        parser = build_parser()
        args = parser.parse_args(["find", "--input", "s.f64", "--k", "3"])
        assert args.command == "find"
        assert args.eps == 0.25
        assert args.delta == 0.1
        assert args.seed == 0

    def test_missing_required(self):
        with pytest.raises(SystemExit) as exc:
            main(["find"])
        assert exc.value.code == 2

    def test_unknown_style(self):
        with pytest.raises(SystemExit) as exc:
            main(["gen", "--style", "zigzag", "--n", "8", "--k", "2", "--out", "x.txt"])
        assert exc.value.code == 2

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert "monopattern" in capsys.readouterr().out


class TestGen:
    def test_writes_sequence_and_certificate(self, capsys, tmp_path):
        out = tmp_path / "blocks.txt"
        code, stdout, _ = run(capsys, "gen", "--style", "blocks", "--n", 12, "--k", 3, "--eps", 0.25, "--out", out)
        assert code == 0
        doc = json.loads(stdout)
        assert doc["certificate"] == str(out) + ".json"
        assert len(load_sequence(out)) == 12
        cert = json.loads((tmp_path / "blocks.txt.json").read_text())
        assert len(cert["family"]) == 3

    def test_infeasible_density(self, capsys, tmp_path):
        code, _, err = run(capsys, "gen", "--n", 12, "--k", 3, "--eps", 0.5, "--out", tmp_path / "x.txt")
        assert code == 2
        assert err.startswith("error:")

    def test_free_style(self, capsys, tmp_path):
        out = tmp_path / "free.f64"
        code, _, _ = run(capsys, "gen", "--style", "free-concat", "--n", 20, "--k", 3, "--out", out)
        assert code == 0
        assert "free_proof" in json.loads((tmp_path / "free.f64.json").read_text())


class TestFind:
    def test_outcome_json(self, capsys, identity_file):
        code, stdout, _ = run(capsys, "find", "--input", identity_file, "--k", 3, "--seed", 7)
        assert code == 0
        doc = json.loads(stdout)
        assert set(doc) <= {"found", "witness", "queries"}
        assert doc["queries"] > 0
        if doc["found"]:
            assert len(doc["witness"]) == 3

    def test_decreasing_fails(self, capsys, decreasing_file):
        code, stdout, _ = run(capsys, "find", "--input", decreasing_file, "--k", 2)
        assert code == 0
        assert json.loads(stdout)["found"] is False

    def test_bad_k(self, capsys, identity_file):
        code, _, _ = run(capsys, "find", "--input", identity_file, "--k", 0)
        assert code == 2

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "find", "--input", tmp_path / "nope.f64", "--k", 2)
        assert code == 2

    def test_unsupported_format(self, capsys, tmp_path):
        path = tmp_path / "seq.csv"
        path.write_text("1,2,3\n")
        code, _, _ = run(capsys, "find", "--input", path, "--k", 2)
        assert code == 2

    def test_uses_config(self, capsys, identity_file, tiny_config):
        code, stdout, _ = run(capsys, "find", "--input", identity_file, "--k", 2, "--config", tiny_config)
        assert code == 0
        assert "queries" in json.loads(stdout)


class TestVerifyAndOracle:
    def test_oracle(self, capsys, tmp_path):
        path = tmp_path / "seq.txt"
        save_sequence(path, [1.0, 2.0, 3.0])
        code, stdout, _ = run(capsys, "oracle", "--input", path, "--k", 3)
        assert code == 0
        assert json.loads(stdout) == {"lis": 3, "distance_k": 1, "greedy_family_size": 1}

    def test_oracle_rejects_k1(self, capsys, tmp_path):
        path = tmp_path / "seq.txt"
        save_sequence(path, [1.0, 2.0])
        code, _, _ = run(capsys, "oracle", "--input", path, "--k", 1)
        assert code == 2

    def test_verify_index_list(self, capsys, identity_file, tmp_path):
        witness = tmp_path / "w.json"
        witness.write_text("[3, 9, 40]")
        code, stdout, _ = run(capsys, "verify", "--input", identity_file, "--witness", witness)
        assert code == 0
        assert json.loads(stdout) == {"valid": True}

    def test_verify_find_output(self, capsys, decreasing_file, tmp_path):
        witness = tmp_path / "w.json"
        witness.write_text(json.dumps({"found": True, "witness": [0, 5], "queries": 3}))
        code, stdout, _ = run(capsys, "verify", "--input", decreasing_file, "--witness", witness)
        assert code == 0
        assert json.loads(stdout) == {"valid": False}


class TestBenchAndScaling:
    def test_bench_writes_reports(self, capsys, tmp_path, tiny_config):
        prefix = tmp_path / "runs"
        code, stdout, _ = run(
            capsys, "bench", "--n", 64, "--k", 2, "--trials", 3, "--config", tiny_config,
            "--workers", 2, "--out", prefix,
        )
        assert code == 0
        summary = json.loads(stdout)
        assert summary["trials"] == 3
        assert len((tmp_path / "runs.jsonl").read_text().splitlines()) == 3
        assert (tmp_path / "runs.csv").read_text().startswith("n,k,eps,delta,style")

    def test_bench_zero_trials(self, capsys):
        code, _, err = run(capsys, "bench", "--n", 64, "--k", 2, "--trials", 0)
        assert code == 2
        assert "invalid parameters" in err

    def test_bench_invariant_violation(self, capsys, mocker):
        mocker.patch("monopattern.harness.verify_witness", return_value=False)
        code, _, _ = run(capsys, "bench", "--style", "suffix", "--n", 64, "--k", 2, "--trials", 2)
        assert code == 1

    def test_scaling_report(self, capsys, tmp_path, tiny_config):
        out = tmp_path / "scaling.json"
        code, stdout, _ = run(
            capsys, "scaling", "--n", 64, 128, 256, "--k", 2, "--trials", 2, "--config", tiny_config, "--out", out,
        )
        assert code == 0
        report = json.loads(out.read_text())
        assert [row["n"] for row in report["rows"]] == [64, 128, 256]
        assert set(json.loads(stdout)["fit"]) == {"a", "b", "r2"}

    def test_scaling_needs_three_sizes(self, capsys, tiny_config):
        code, _, _ = run(capsys, "scaling", "--n", 64, 128, "--k", 2, "--trials", 2, "--config", tiny_config)
        assert code == 2


class TestLisTest:
    def test_reports_witness(self, capsys, identity_file):
        code, stdout, _ = run(capsys, "lis-test", "--input", identity_file, "--k", 2)
        assert code == 0
        assert stdout.startswith("LIS > 2, witness [")

    def test_plausible(self, capsys, decreasing_file):
        code, stdout, _ = run(capsys, "lis-test", "--input", decreasing_file, "--k", 2)
        assert code == 0
        assert stdout.startswith("LIS ≤ 2 plausible")


class TestMalformedInput:
    def test_non_numeric_line(self, capsys, tmp_path):
        path = tmp_path / "seq.txt"
        path.write_text("1.0\nabc\n3.0\n")
        code, _, err = run(capsys, "oracle", "--input", path, "--k", 2)
        assert code == 2
        assert "seq.txt:2" in err

    def test_witness_not_json(self, capsys, identity_file, tmp_path):
        witness = tmp_path / "w.json"
        witness.write_text("[3, 9,")
        code, _, err = run(capsys, "verify", "--input", identity_file, "--witness", witness)
        assert code == 2
        assert err.startswith("error:")

    def test_witness_not_indices(self, capsys, identity_file, tmp_path):
        witness = tmp_path / "w.json"
        witness.write_text('["a", "b"]')
        code, _, _ = run(capsys, "verify", "--input", identity_file, "--witness", witness)
        assert code == 2

    def test_fail_outcome_is_an_empty_witness(self, capsys, identity_file, tmp_path):
        witness = tmp_path / "w.json"
        witness.write_text(json.dumps({"found": False, "witness": None, "queries": 5}))
        code, stdout, _ = run(capsys, "verify", "--input", identity_file, "--witness", witness)
        assert code == 0
        assert json.loads(stdout) == {"valid": False}

    def test_stray_value_error_exits_2(self, capsys, identity_file, mocker):
        mocker.patch("monopattern.cli.lis_length", side_effect=ValueError("bad"))
        code, _, err = run(capsys, "oracle", "--input", identity_file, "--k", 2)
        assert code == 2
        assert "malformed input" in err


class TestGoldenOutput:
    """Command output matches the library call it wraps, byte for byte."""

    def test_find(self, capsys, identity_file):
        expected = find_monotone(SequenceView(load_sequence(identity_file)), 3, 0.25, 0.1, rng=7)
        code, stdout, _ = run(capsys, "find", "--input", identity_file, "--k", 3, "--seed", 7)
        assert code == 0
        assert stdout == json.dumps(expected.to_dict()) + "\n"

    def test_find_with_config(self, capsys, identity_file, tiny_config):
        constants = load_constants(tiny_config)
        expected = find_monotone(
            SequenceView(load_sequence(identity_file)), 2, 0.25, 0.1, constants=constants, rng=3
        )
        code, stdout, _ = run(
            capsys, "find", "--input", identity_file, "--k", 2, "--seed", 3, "--config", tiny_config
        )
        assert code == 0
        assert stdout == json.dumps(expected.to_dict()) + "\n"

    @pytest.mark.parametrize("fixture", ["identity_file", "decreasing_file"])
    def test_lis_test(self, capsys, request, fixture):
        path = request.getfixturevalue(fixture)
        tester = MonotoneTester(AlgorithmConstants(), Rng(4))
        outcome = tester.test_far(SequenceView(load_sequence(path)), 3, 0.25, 0.1)
        if outcome.found:
            expected = f"LIS > 2, witness {list(outcome.witness.indices)} ({outcome.queries} queries)\n"
        else:
            expected = f"LIS ≤ 2 plausible ({outcome.queries} queries)\n"
        code, stdout, _ = run(capsys, "lis-test", "--input", path, "--k", 2, "--seed", 4)
        assert code == 0
        assert stdout == expected

    def test_bench_summary(self, capsys, tiny_config):
        bench = BenchConfig(
            instance=InstanceSpec(style="staircase", n=64, k=2, eps=0.25, seed=1),
            eps=0.25,
            delta=0.1,
            trials=4,
            base_seed=9,
            constants=load_constants(tiny_config),
        )
        row = summarize(estimate_success(bench).records)[0]
        code, stdout, _ = run(
            capsys, "bench", "--style", "staircase", "--n", 64, "--k", 2, "--trials", 4, "--seed", 9,
            "--instance-seed", 1, "--config", tiny_config, "--workers", 2,
        )
        assert code == 0
        assert stdout == json.dumps(row.model_dump()) + "\n"
