import json
import re
from pathlib import Path

import jsonschema
import pytest

from conftest import DATA, GOLDEN, run_cli

SCHEMA = json.loads(
    (Path(__file__).parent.parent / "src" / "torsionfree" / "schemas" /
     "report.schema.json").read_text())
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)

GOLDEN_CASES = {
    "level_find_q.json": ["level", "find", str(DATA / "q.poly"), "--dimg", "3"],
    "field_analyze_sqrt2.json": ["field", "analyze", str(DATA / "sqrt2.poly")],
    "grh_threshold_d1.json": ["grh", "threshold", "--d", "1", "--logd", "0"],
    "bound_grh.json": ["bound", "grh", "--v", "100", "--dimh", "3"],
    "bound_unconditional.json": ["bound", "unconditional", "--d", "1",
                                 "--dimh", "3"],
    "torsion_table_n6.csv": ["torsion", "table", "--nmax", "6", "--d", "1"],
    "torsion_table_n4.json": ["torsion", "table", "--nmax", "4", "--d", "1",
                              "--format", "json"],
    "construct_p5.json": ["construct", "--p", "5"],
    "construct_p5_probe.json": ["construct", "--p", "5", "--probe-k", "2"],
    "construct_sweep_p13.csv": ["construct", "sweep", "--pmax", "13"],
    "construct_sweep_p13.json": ["construct", "sweep", "--pmax", "13",
                                 "--format", "json"],
    "apply_generators.json": ["apply", "generators", "--v", "1000000",
                              "--alpha", "0.5", "--c", "1.0"],
}


def strip_generated_by(text):
    return re.sub(r'"generated_by": "[^"]*"', '"generated_by": "X"', text)


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(name):
    code, out, _err = run_cli(*GOLDEN_CASES[name])
    assert code == 0
    want = (GOLDEN / name).read_text()
    if name.endswith(".json"):
        assert strip_generated_by(out) == strip_generated_by(want)
    else:
        assert out == want


@pytest.mark.parametrize("name",
                         sorted(n for n in GOLDEN_CASES if n.endswith(".json")))
def test_json_outputs_validate_against_schema(name):
    code, out, _err = run_cli(*GOLDEN_CASES[name])
    assert code == 0
    doc = json.loads(out)
    VALIDATOR.validate(doc)
    assert doc["generated_by"].startswith("torsionfree ")


class TestExitCodes:
    def test_usage_error_is_64(self):
        code, _out, err = run_cli("level", "find")
        assert code == 64
        assert "usage error" in err

    def test_unknown_option_is_64(self):
        code, _out, _err = run_cli("construct", "--nope", "5")
        assert code == 64

    def test_help_is_zero(self):
        code, out, _err = run_cli("--help")
        assert code == 0
        assert "Usage" in out

    def test_domain_error_is_2(self, tmp_path):
        bad = tmp_path / "bad.poly"
        bad.write_text("# (x^2-2)^2\n4, 0, -4, 0, 1\n")
        code, _out, err = run_cli("field", "analyze", str(bad))
        assert code == 2
        payload = json.loads(err.splitlines()[-1])
        assert payload["error"]["type"] == "NotSquarefreeError"

    def test_malformed_poly_file_is_2(self, tmp_path):
        bad = tmp_path / "bad.poly"
        bad.write_text("1, two, 3\n")
        code, _out, err = run_cli("field", "analyze", str(bad))
        assert code == 2
        payload = json.loads(err.splitlines()[-1])
        assert payload["error"]["type"] == "PreconditionError"

    def test_missing_file_is_2(self):
        code, _out, err = run_cli("field", "analyze", "/nonexistent.poly")
        assert code == 2

    def test_resource_cap_is_3(self):
        code, _out, err = run_cli("construct", "--p", "5", "--probe-k", "25")
        assert code == 3
        payload = json.loads(err.splitlines()[-1])
        assert payload["error"]["type"] == "ResourceCapError"

    def test_probe_guard_is_3(self):
        # 6 coordinates at 13 bits each blows the enumeration budget
        code, _out, _err = run_cli("construct", "--p", "13", "--probe-k", "3")
        assert code == 3


class TestConfig:
    def test_default_warns_on_stderr(self):
        _code, _out, err = run_cli("construct", "sweep", "--pmax", "13")
        for name in ("prasad_c1", "prasad_c2", "belolipetsky_a",
                     "belolipetsky_b", "jordan_index", "epsilon", "lemma_C"):
            assert name in err
        assert "illustrative default" in err

    def test_stdout_stays_clean(self):
        _code, out, _err = run_cli("construct", "sweep", "--pmax", "13")
        assert "warning" not in out

    def test_config_file_shifts_values(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"belolipetsky_a": 2.0}))
        _c, base, _e = run_cli("construct", "sweep", "--pmax", "7")
        _c, shifted, err = run_cli("--config", str(cfg),
                                   "construct", "sweep", "--pmax", "7")
        assert base != shifted
        # overridden constant no longer warns
        assert "belolipetsky_a" not in err
        assert "belolipetsky_b" in err

    def test_env_var_honored(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"jordan_index": 120}))
        _c, _o, err = run_cli("construct", "sweep", "--pmax", "7",
                              env_extra={"TORSIONFREE_CONFIG": str(cfg)})
        assert "jordan_index" not in err

    def test_unknown_key_rejected(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"mystery_knob": 1}))
        code, _o, err = run_cli("--config", str(cfg),
                                "construct", "sweep", "--pmax", "7")
        assert code == 2

    def test_invalid_json_rejected(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text("{nope")
        code, _o, _e = run_cli("--config", str(cfg),
                               "construct", "sweep", "--pmax", "7")
        assert code == 2

    def test_missing_config_file_warns_but_runs(self, tmp_path):
        code, out, err = run_cli("--config", str(tmp_path / "absent.json"),
                                 "construct", "sweep", "--pmax", "7")
        assert code == 0
        assert "warning" in err

    def test_bad_threads_rejected(self):
        code, _o, _e = run_cli("--threads", "0", "level", "find",
                               str(DATA / "q.poly"), "--dimg", "3")
        assert code == 2


class TestDeterminism:
    CASES = [
        ["level", "find", str(DATA / "sqrt2.poly"), "--dimg", "3"],
        ["construct", "--p", "7"],
        ["torsion", "table", "--nmax", "6", "--d", "1"],
        ["construct", "sweep", "--pmax", "13"],
        ["grh", "threshold", "--d", "1", "--logd", "0"],
    ]

    @pytest.mark.parametrize("args", CASES, ids=lambda a: " ".join(a[:2]))
    def test_repeat_runs_identical(self, args):
        _c1, out1, _e = run_cli(*args)
        _c2, out2, _e = run_cli(*args)
        assert out1 == out2

    def test_threads_do_not_change_output(self):
        args = ["level", "find", str(DATA / "sqrt2.poly"), "--dimg", "3"]
        _c, out1, _e = run_cli("--threads", "1", *args)
        _c, out4, _e = run_cli("--threads", "4", *args)
        assert out1 == out4


class TestPolyFileParsing:
    def test_comments_and_whitespace(self, tmp_path):
        f = tmp_path / "ok.poly"
        f.write_text("# a comment\n\n  -2,  0, 1  \n# trailing\n")
        code, out, _e = run_cli("field", "analyze", str(f))
        assert code == 0
        assert json.loads(out)["report"]["poly"] == [-2, 0, 1]

    def test_two_data_lines_rejected(self, tmp_path):
        f = tmp_path / "two.poly"
        f.write_text("-2, 0, 1\n-3, 0, 1\n")
        code, _o, _e = run_cli("field", "analyze", str(f))
        assert code == 2


class TestProbeReport:
    def test_probe_block_contents(self):
        _c, out, _e = run_cli("construct", "--p", "5", "--probe-k", "2")
        probe = json.loads(out)["report"]["isotropy_probe"]
        assert probe["k"] == 2
        assert probe["solution_count"] == 192
        assert len(probe["solutions_sample"]) == 8

    def test_no_probe_block_without_flag(self):
        _c, out, _e = run_cli("construct", "--p", "5")
        assert "isotropy_probe" not in json.loads(out)["report"]
