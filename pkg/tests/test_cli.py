import io
import json

import pytest

from quadconc.cli import main

MIDPOINT = {
    "vertices": {"A": ["0", "0"], "B": ["1", "0"], "C": ["1", "1"], "D": ["0", "1"]},
    "ratios": {"m": "1", "n": "1", "p": "1", "q": "1"},
    "checks": "all",
}

GAMMA_TWO = {
    "vertices": {"A": ["0", "0"], "B": ["1", "0"], "C": ["1", "1"], "D": ["0", "1"]},
    "ratios": {"m": "1", "n": "1", "p": "1", "q": "2"},
    "checks": "all",
}


def write_instance(tmp_path, doc, name="instance.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def run(argv):
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


def last_json(text):
    # the summary document is the last indented JSON object in the stream
    idx = text.rindex("\n{\n")
    return json.loads(text[idx:])


class TestVerify:
    def test_midpoint_instance_exits_zero(self, tmp_path):
        path = write_instance(tmp_path, MIDPOINT)
        code, out = run(["verify", path])
        assert code == 0
        doc = json.loads(out)
        assert doc["overall"] in ("pass", "degenerate")
        statuses = {v["claim"]: v["status"] for v in doc["verdicts"]}
        assert statuses["crossing_ratios"] == "pass"
        assert statuses["diagonal_collinearity"] == "pass"

    def test_regime_skip_is_not_a_failure(self, tmp_path):
        path = write_instance(tmp_path, GAMMA_TWO)
        code, out = run(["verify", path, "--check", "seven_lines"])
        assert code == 0
        doc = json.loads(out)
        assert doc["verdicts"][0]["status"] == "skipped"

    def test_gamma_two_reference_values(self, tmp_path):
        path = write_instance(tmp_path, GAMMA_TWO)
        code, out = run(["verify", path, "--check", "crossing_ratio_formula"])
        assert code == 0
        doc = json.loads(out)
        values = doc["verdicts"][0]["exact_values"]
        assert values["r"] == "2/3"
        assert values["ME_over_EP"] == "5/7"

    def test_malformed_decimal_exits_two(self, tmp_path):
        bad = json.loads(json.dumps(MIDPOINT))
        bad["ratios"]["m"] = "0.5"
        path = write_instance(tmp_path, bad)
        code, _ = run(["verify", path])
        assert code == 2

    def test_missing_file_exits_two(self):
        code, _ = run(["verify", "/nonexistent/instance.json"])
        assert code == 2

    def test_degenerate_quad_reports_degenerate_verdicts(self, tmp_path):
        doc = json.loads(json.dumps(MIDPOINT))
        doc["vertices"]["C"] = ["2", "0"]  # collinear with A and B
        path = write_instance(tmp_path, doc)
        code, out = run(["verify", path])
        assert code == 0
        report = json.loads(out)
        assert report["overall"] == "degenerate"
        assert all(v["status"] == "degenerate" for v in report["verdicts"])
        assert all("DegenerateQuadrilateral" in v["detail"] for v in report["verdicts"])

    def test_failing_claim_exits_one(self, tmp_path):
        # a crossed quadrilateral whose inner quadrilateral is crossed:
        # the convexity claim honestly fails there
        doc = {
            "vertices": {"A": ["0", "0"], "B": ["1", "1"], "C": ["1", "0"], "D": ["0", "1"]},
            "ratios": {"m": "1/2", "n": "1/2", "p": "1/2", "q": "1/3"},
            "checks": ["inner_quadrilateral_convexity"],
        }
        path = write_instance(tmp_path, doc)
        code, out = run(["verify", path])
        assert code == 1
        assert json.loads(out)["overall"] == "fail"


class TestFuzz:
    def test_gamma_one_campaign_passes(self):
        code, out = run(["fuzz", "--seed", "42", "--count", "50", "--regime", "gamma1"])
        assert code == 0
        summary = last_json(out)
        assert summary["overall"] == "pass"
        assert summary["claims"]["seven_lines"]["fail"] == 0
        assert summary["claims"]["seven_lines"]["pass"] > 0

    def test_general_campaign_passes(self):
        code, out = run(["fuzz", "--seed", "42", "--count", "50", "--regime", "general"])
        assert code == 0
        summary = last_json(out)
        assert summary["claims"]["quadruple_concurrences"]["fail"] == 0

    def test_remarks_campaign_reports_findings(self):
        code, out = run(["fuzz", "--seed", "42", "--count", "60", "--regime", "remarks"])
        assert code == 0, "convexity findings must not fail the suite"
        summary = last_json(out)
        assert summary["findings"]["inner_quadrilateral_convexity"] > 0
        assert summary["claims"]["inner_quadrilateral_convexity"]["fail"] > 0

    def test_determinism_byte_identical(self):
        argv = ["fuzz", "--seed", "7", "--count", "25", "--regime", "general"]
        _, first = run(argv)
        _, second = run(argv)
        assert first == second

    def test_dump_dir_writes_replayable_failures(self, tmp_path):
        dump = tmp_path / "failures"
        code, _ = run(["fuzz", "--seed", "42", "--count", "40", "--regime", "remarks",
                       "--dump-dir", str(dump)])
        assert code == 0
        dumped = sorted(dump.glob("fail-*.json"))
        assert dumped, "the remarks campaign should dump convexity findings"
        code2, out2 = run(["verify", str(dumped[0]),
                           "--check", "inner_quadrilateral_convexity"])
        assert code2 == 1
        assert json.loads(out2)["verdicts"][0]["status"] == "fail"

    def test_remarks_needs_nonconvex_shape(self):
        code, _ = run(["fuzz", "--seed", "1", "--count", "5", "--regime", "remarks",
                       "--shape", "convex"])
        assert code == 2

    def test_count_must_be_positive(self):
        code, _ = run(["fuzz", "--seed", "1", "--count", "0", "--regime", "general"])
        assert code == 2

    def test_replay_reproduces_verdicts(self, tmp_path):
        code, out = run(["fuzz", "--seed", "3", "--count", "5", "--regime", "general"])
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines() if line.startswith('{"')]
        instance_reports = [d for d in lines if "verdicts" in d and "instance" in d]
        assert instance_reports
        for report in instance_reports[:3]:
            path = tmp_path / "replay.json"
            path.write_text(json.dumps(report["instance"]), encoding="utf-8")
            code2, out2 = run(["verify", str(path)])
            replayed = json.loads(out2)
            canon = lambda d: json.dumps(d, sort_keys=True)
            assert canon(replayed["verdicts"]) == canon(report["verdicts"])
            assert canon(replayed["configuration"]) == canon(report["configuration"])


class TestCounterexample:
    def test_finds_crossed_convexity_failure(self, tmp_path):
        out_path = tmp_path / "counterexample.json"
        code, out = run([
            "counterexample", "--shape", "crossed",
            "--target", "inner_quadrilateral_convexity",
            "--budget", "500", "--seed", "0", "-o", str(out_path),
        ])
        assert code == 0
        assert out_path.exists()
        doc = json.loads(out)
        assert doc["checks"] == ["inner_quadrilateral_convexity"]
        # the found instance replays to a failing verdict
        code2, out2 = run(["verify", str(out_path)])
        assert code2 == 1
        report = json.loads(out2)
        assert report["verdicts"][0]["status"] == "fail"

    def test_zero_budget_finds_nothing(self):
        code, out = run([
            "counterexample", "--shape", "crossed",
            "--target", "inner_quadrilateral_convexity", "--budget", "0",
        ])
        assert code == 1
        assert out == ""

    def test_convex_only_target_rejected(self):
        code, _ = run([
            "counterexample", "--shape", "crossed",
            "--target", "inner_quadrilateral", "--budget", "10",
        ])
        assert code == 2

    def test_convex_shape_rejected_by_parser(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["counterexample", "--shape", "convex",
                  "--target", "inner_quadrilateral_convexity", "--budget", "10"])
        assert exc.value.code == 2


class TestFigure:
    def test_emits_deterministic_svg(self, tmp_path):
        path = write_instance(tmp_path, MIDPOINT)
        out1 = tmp_path / "fig1.svg"
        out2 = tmp_path / "fig2.svg"
        assert run(["figure", path, "-o", str(out1)])[0] == 0
        assert run(["figure", path, "-o", str(out2)])[0] == 0
        data = out1.read_bytes()
        assert data == out2.read_bytes()
        assert data.startswith(b"<svg")

    def test_layer_subset(self, tmp_path):
        path = write_instance(tmp_path, MIDPOINT)
        out = tmp_path / "sides.svg"
        assert run(["figure", path, "-o", str(out), "--layers", "sides"])[0] == 0
        text = out.read_text()
        assert text.count("<line") == 4
        assert "<circle" not in text

    def test_unknown_layer_exits_two(self, tmp_path):
        path = write_instance(tmp_path, MIDPOINT)
        out = tmp_path / "x.svg"
        code, _ = run(["figure", path, "-o", str(out), "--layers", "nope"])
        assert code == 2

    def test_invalid_instance_exits_two(self, tmp_path):
        doc = json.loads(json.dumps(MIDPOINT))
        doc["vertices"]["C"] = ["2", "0"]
        path = write_instance(tmp_path, doc)
        code, _ = run(["figure", path, "-o", str(tmp_path / "x.svg")])
        assert code == 2
