"""Command-line harness: instance-file validation, exit-code contract, and
byte-determinism of machine reports across worker counts."""

import json

import pytest

from cornets.cli import (
    EXIT_INPUT,
    EXIT_PASS,
    EXIT_VIOLATION,
    CliError,
    load_instance,
    main,
)

SETQ_FILE = {
    "universe": {"kind": "setQ", "dim": 2, "wedge": "orthant", "repr": "discrete"},
    "elements": {
        "A": {"repr": "discrete", "generators": [["0", "1"], ["1", "0"]]},
        "Y": {"repr": "polytopic", "generators": [["0", "0"], ["2", "-1"]]},
        "Z": {"repr": "discrete", "generators": [["1", "1"]]},
    },
    "family": {"epsilons": ["1", "1/2"]},
    "options": {"seed": 0},
}


@pytest.fixture
def setq_path(tmp_path):
    path = tmp_path / "setq.json"
    path.write_text(json.dumps(SETQ_FILE))
    return str(path)


def _write(tmp_path, obj, name="inst.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(path)


class TestLoading:
    def test_valid_file(self, setq_path):
        loaded = load_instance(setq_path)
        assert loaded.kind == "setQ"
        assert set(loaded.elements) == {"A", "Y", "Z"}
        assert loaded.family is not None

    def test_missing_wedge(self, tmp_path):
        path = _write(tmp_path, {"universe": {"kind": "setQ", "dim": 2}})
        with pytest.raises(CliError, match="wedge"):
            load_instance(path)

    def test_unknown_field_rejected(self, tmp_path):
        bad = json.loads(json.dumps(SETQ_FILE))
        bad["universe"]["extra"] = 1
        path = _write(tmp_path, bad)
        with pytest.raises(CliError, match="extra"):
            load_instance(path)

    def test_malformed_json(self, tmp_path):
        path = _write(tmp_path, "{broken")
        with pytest.raises(CliError, match="line 1"):
            load_instance(path)

    def test_non_pointed_wedge_rejected(self, tmp_path):
        path = _write(
            tmp_path,
            {"universe": {"kind": "elemQ", "dim": 2, "wedge": {"rows": [[1, 0]]}}},
        )
        with pytest.raises(CliError, match="line"):
            load_instance(path)

    def test_setz_constraints(self, tmp_path):
        path = _write(
            tmp_path,
            {"universe": {"kind": "setZ", "dim": 1, "wedge": "orthant"}},
        )
        with pytest.raises(CliError, match="zero wedge"):
            load_instance(path)

    def test_setz_integer_generators(self, tmp_path):
        path = _write(
            tmp_path,
            {
                "universe": {"kind": "setZ", "dim": 1, "wedge": "zero"},
                "elements": {"A": {"repr": "discrete", "generators": [["1/2"]]}},
            },
        )
        with pytest.raises(CliError, match="integer"):
            load_instance(path)

    def test_fuzzy_element_parsing(self, tmp_path):
        path = _write(
            tmp_path,
            {
                "universe": {"kind": "fuzzyQ", "dim": 1, "wedge": "orthant", "p": "1/2"},
                "elements": {
                    "f": {
                        "levels": [
                            {"alpha": 1, "set": {"repr": "discrete", "generators": [["2"]]}},
                            {"alpha": "1/2", "set": {"repr": "discrete", "generators": [["0"]]}},
                        ]
                    }
                },
            },
        )
        loaded = load_instance(path)
        assert loaded.elements["f"].top == 1
        # p < 1: no Archimedean family, with the reason recorded.
        assert loaded.family is None and "Archimedean" in loaded.family_note


class TestExitCodes:
    def test_laws_pass(self, setq_path, capsys):
        assert main(["laws", setq_path, "--cases", "25"]) == EXIT_PASS
        assert "status: pass" in capsys.readouterr().out

    def test_laws_input_error(self, tmp_path, capsys):
        path = _write(tmp_path, {"universe": {"kind": "setQ", "dim": 2}})
        assert main(["laws", path]) == EXIT_INPUT
        assert "input error" in capsys.readouterr().err

    def test_mutated_universe_fails(self, tmp_path, capsys):
        path = _write(
            tmp_path,
            {
                "universe": {"kind": "setZ", "dim": 1, "wedge": "zero"},
                "options": {"mutate": "star-dot"},
            },
        )
        assert main(["laws", path, "--cases", "25", "--max-n", "4"]) == EXIT_VIOLATION
        out = capsys.readouterr().out
        assert "star-iv-reverse" in out and "counterexample" in out

    def test_cancel_informational(self, setq_path, capsys):
        code = main(["cancel", setq_path, "--x", "A", "--y", "Y", "--z", "Z"])
        assert code == EXIT_PASS
        assert "Verified" in capsys.readouterr().out

    def test_cancel_hypothesis_not_met(self, setq_path, capsys):
        # A is DISCRETE and not 2-convex; informational exit 0.
        code = main(["cancel", setq_path, "--x", "A", "--y", "A", "--z", "Z"])
        assert code == EXIT_PASS
        assert "HypothesisNotMet" in capsys.readouterr().out

    def test_cancel_undecidable_representation(self, setq_path, capsys):
        # Polytopic-within-discrete inclusion is not decided; input error.
        code = main(["cancel", setq_path, "--x", "Y", "--y", "A", "--z", "Z"])
        assert code == EXIT_INPUT
        assert "undecidable" in capsys.readouterr().err

    def test_cancel_unknown_element(self, setq_path):
        assert main(["cancel", setq_path, "--x", "A", "--y", "Y", "--z", "nope"]) == EXIT_INPUT

    def test_hunt_finds_and_exhausts(self, capsys):
        assert main(["hunt", "--range", "0..3", "--ablate", "convexity"]) == EXIT_VIOLATION
        assert "counterexample" in capsys.readouterr().out
        assert main(["hunt", "--range", "0..3", "--universe", "z1-intervals"]) == EXIT_PASS
        assert "exhausted" in capsys.readouterr().out
        assert main(["hunt", "--range", "0..0"]) == EXIT_PASS

    def test_hunt_bad_range(self):
        assert main(["hunt", "--range", "3..1"]) == EXIT_INPUT


class TestInspect:
    def test_hull(self, setq_path, capsys):
        assert main(["inspect", setq_path, "--element", "A", "--op", "hull", "--format", "json"]) == EXIT_PASS
        report = json.loads(capsys.readouterr().out)
        assert report["result"]["repr"] == "polytopic"

    def test_convex(self, setq_path, capsys):
        main(["inspect", setq_path, "--element", "A", "--op", "convex:2", "--format", "json"])
        assert json.loads(capsys.readouterr().out)["result"] is False

    def test_embed_set_to_fuzzy(self, setq_path, capsys):
        main(["inspect", setq_path, "--element", "A", "--op", "embed", "--format", "json"])
        report = json.loads(capsys.readouterr().out)
        assert report["target"] == "fuzzyQ"
        assert report["result"]["levels"][0]["alpha"] == "1"

    def test_embed_elem_to_set(self, tmp_path, capsys):
        path = _write(
            tmp_path,
            {
                "universe": {"kind": "elemQ", "dim": 2, "wedge": "orthant"},
                "elements": {"x": ["1", "1/2"]},
            },
        )
        main(["inspect", path, "--element", "x", "--op", "embed", "--format", "json"])
        report = json.loads(capsys.readouterr().out)
        assert report["target"] == "setQ"
        assert report["result"]["generators"] == [["1", "1/2"]]

    def test_inapplicable_op(self, setq_path):
        assert main(["inspect", setq_path, "--element", "A", "--op", "support"]) == EXIT_INPUT


class TestDeterminism:
    def test_jobs_do_not_change_bytes(self, setq_path, capsys):
        main(["laws", setq_path, "--cases", "30", "--jobs", "1", "--format", "json"])
        one = capsys.readouterr().out
        main(["laws", setq_path, "--cases", "30", "--jobs", "3", "--format", "json"])
        three = capsys.readouterr().out
        assert one == three
        assert json.loads(one)["status"] == "pass"

    def test_repeat_runs_identical(self, setq_path, capsys):
        main(["laws", setq_path, "--cases", "20", "--format", "json"])
        a = capsys.readouterr().out
        main(["laws", setq_path, "--cases", "20", "--format", "json"])
        assert a == capsys.readouterr().out
