"""Command-line surface: outputs, JSON documents, exit codes."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from anthyphairesis import __version__
from anthyphairesis.cli import main

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
ANGLER = str(FIXTURES / "angler.tree")
SOPHIST = str(FIXTURES / "sophist.tree")
INCONSISTENT = str(FIXTURES / "inconsistent.tree")


def run(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv: str) -> tuple[int, dict]:
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


GOLDEN_TEXT = {
    ("gcd", "1071", "462"): "quotients: 2 3 7\ngcd: 21\n",
    ("gcd", "5", "5"): "quotients: 1\ngcd: 5\n",
    ("expand", "sqrt(2)"): (
        "value: (0+1*sqrt(2))/1\npreperiod: 1\nperiod: 2\n"
        "repeat: states 1 and 2 coincide\ncommensurable: no\n"
    ),
    ("expand", "7/3"): "value: 7/3\nquotients: 2 3\ncommensurable: yes\n",
    ("prop", "sqrt(8)", "2", "sqrt(2)", "1"): "equal: yes\n",
    ("prop", "sqrt(2)", "1", "sqrt(3)", "1"): "equal: no\n",
    ("convergents", "sqrt(2)", "5"): "1/1\n3/2\n7/5\n17/12\n41/29\n",
    ("dialectic", "2", "4", "8", "9"): "dialectic_number: 3\n",
}

GOLDEN_JSON = {
    ("gcd", "1071", "462"): {
        "command": "gcd",
        "inputs": {"a": 1071, "b": 462},
        "result": {"quotients": [2, 3, 7], "gcd": 21},
        "version": __version__,
    },
    ("expand", "sqrt(2)"): {
        "command": "expand",
        "inputs": {"value": "sqrt(2)"},
        "result": {
            "kind": "periodic",
            "preperiod": [1],
            "period": [2],
            "repeat_at": [1, 2],
            "commensurable": False,
        },
        "version": __version__,
    },
    ("expand", "(1+1*sqrt(5))/2"): {
        "command": "expand",
        "inputs": {"value": "(1+1*sqrt(5))/2"},
        "result": {
            "kind": "periodic",
            "preperiod": [],
            "period": [1],
            "repeat_at": [0, 1],
            "commensurable": False,
        },
        "version": __version__,
    },
    ("dialectic", "2", "4", "8", "9"): {
        "command": "dialectic",
        "inputs": {"terms": [2, 4, 8, 9], "cycle": [], "scale": 1},
        "result": {"dialectic_number": 3},
        "version": __version__,
    },
}


class TestGolden:
    @pytest.mark.parametrize("argv,expected", sorted(GOLDEN_TEXT.items()))
    def test_text(self, capsys, argv, expected):
        code, out = run(capsys, *argv)
        assert code == 0
        assert out == expected

    @pytest.mark.parametrize("argv,expected", sorted(GOLDEN_JSON.items()))
    def test_json(self, capsys, argv, expected):
        code, doc = run_json(capsys, *argv)
        assert code == 0
        assert doc == expected


class TestTextJsonAgreement:
    def test_gcd_values_match(self, capsys):
        _, doc = run_json(capsys, "gcd", "1071", "462")
        _, text = run(capsys, "gcd", "1071", "462")
        quotients = [int(s) for s in text.splitlines()[0].split(":")[1].split()]
        gcd = int(text.splitlines()[1].split(":")[1])
        assert quotients == doc["result"]["quotients"]
        assert gcd == doc["result"]["gcd"]

    def test_expand_values_match(self, capsys):
        _, doc = run_json(capsys, "expand", "sqrt(3)")
        _, text = run(capsys, "expand", "sqrt(3)")
        lines = dict(line.split(": ", 1) for line in text.splitlines())
        assert [int(s) for s in lines["preperiod"].split()] == doc["result"]["preperiod"]
        assert [int(s) for s in lines["period"].split()] == doc["result"]["period"]
        assert (lines["commensurable"] == "yes") == doc["result"]["commensurable"]

    def test_tree_check_values_match(self, capsys):
        _, doc = run_json(capsys, "tree", "check", SOPHIST)
        _, text = run(capsys, "tree", "check", SOPHIST)
        lines = dict(line.split(": ", 1) for line in text.splitlines())
        assert (lines["valid"] == "yes") == doc["result"]["valid"]
        assert int(lines["period"]) == doc["result"]["period"]
        assert int(lines["dialectic_number"]) == doc["result"]["dialectic_number"]


class TestTree:
    def test_check_angler(self, capsys):
        code, doc = run_json(capsys, "tree", "check", ANGLER)
        assert code == 0
        assert doc["result"]["valid"] is True
        assert doc["result"]["period"] == 3

    def test_check_sophist(self, capsys):
        code, doc = run_json(capsys, "tree", "check", SOPHIST)
        assert code == 0
        assert doc["result"]["period"] == 3
        assert [(d["lhs_step"], d["rhs_step"]) for d in doc["result"]["declarations"]] \
            == [(2, 5), (3, 6), (4, 7)]

    def test_check_inconsistent_exits_1(self, capsys):
        code, doc = run_json(capsys, "tree", "check", INCONSISTENT)
        assert code == 1
        assert doc["result"]["valid"] is False

    def test_fmt_idempotent(self, capsys, tmp_path):
        code, once = run(capsys, "tree", "fmt", ANGLER)
        assert code == 0
        reformatted = tmp_path / "angler.tree"
        reformatted.write_text(once, encoding="utf-8")
        code, twice = run(capsys, "tree", "fmt", str(reformatted))
        assert code == 0
        assert once == twice


class TestExitCodes:
    @pytest.mark.parametrize("argv,code", [
        (("gcd", "1071", "462"), 0),
        (("gcd", "0", "4"), 2),
        (("gcd", "4", "0"), 2),
        (("gcd", "x", "4"), 2),
        (("expand", "sqrt(2)"), 0),
        (("expand", "blah"), 2),
        (("expand", "(-1+0*sqrt(2))/1"), 2),
        (("expand", "0"), 2),
        (("prop", "sqrt(2)", "1", "sqrt(2)", "1"), 0),
        (("prop", "sqrt(2)", "1", "sqrt(3)", "1"), 0),
        (("prop", "sqrt(2)", "0", "sqrt(3)", "1"), 2),
        (("convergents", "sqrt(2)", "5"), 0),
        (("convergents", "sqrt(2)", "0"), 2),
        (("dialectic", "2", "4", "8", "9"), 0),
        (("dialectic",), 2),
        (("dialectic", "0"), 2),
        (("tree", "check", ANGLER), 0),
        (("tree", "check", SOPHIST), 0),
        (("tree", "check", INCONSISTENT), 1),
        (("tree", "check", "no-such-file.tree"), 2),
        (("tree", "fmt", ANGLER), 0),
        (("nonsense",), 2),
        ((), 2),
    ])
    def test_matrix(self, capsys, argv, code):
        assert main(list(argv)) == code

    def test_parse_error_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.tree"
        bad.write_text("tree T\nroot r\nstep 1 keep A a\n", encoding="utf-8")
        assert main(["tree", "check", str(bad)]) == 2
        err = capsys.readouterr().err
        assert "line 3" in err


class TestMaxSteps:
    def test_bound_respected(self, capsys):
        # sqrt(1726) has a long period; an absurdly small bound trips it.
        code = main(["expand", "sqrt(1726)", "--max-steps", "3"])
        assert code == 1
        assert "no repeat within 3 steps" in capsys.readouterr().err

    def test_default_is_plenty(self, capsys):
        assert main(["expand", "sqrt(1726)"]) == 0
