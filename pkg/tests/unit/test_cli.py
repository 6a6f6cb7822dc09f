"""Tests for the command-line interface."""

import json
import re

import pytest
from click.testing import CliRunner

from regfact import __version__
from regfact.cli.main import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, cli

NODE_LINE = re.compile(r'^  "[^"]+";$')


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _generate(runner, tmp_path, family, param, fmt="json"):
    out = tmp_path / f"{family}-{param}.{fmt}"
    result = runner.invoke(
        cli,
        ["generate", "-f", family, "-p", str(param), "--format", fmt, "-o", str(out), "-q"],
    )
    return result, out


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_generate_json(runner, tmp_path):
    result, out = _generate(runner, tmp_path, "dicyclic", 2)
    assert result.exit_code == EXIT_OK
    raw = json.loads(out.read_text())
    assert raw["schema"] == 1
    assert len(raw["factorization"]["factors"]) == 7
    assert len(raw["trees"]["trees"]) == 4


def test_generate_family_is_case_insensitive(runner, tmp_path):
    result, out = _generate(runner, tmp_path, "Modular", 8)
    assert result.exit_code == EXIT_OK
    assert json.loads(out.read_text())["group"]["family"] == "modular"


@pytest.mark.parametrize(
    "family, param",
    [("abelian", 6), ("abelian", 2), ("dicyclic", 1), ("semidihedral", 12), ("modular", 4)],
)
def test_generate_rejects_unsupported_parameters(runner, tmp_path, family, param):
    result, out = _generate(runner, tmp_path, family, param)
    assert result.exit_code == EXIT_USAGE
    assert not out.exists()


def test_generate_dot(runner, tmp_path):
    result, out = _generate(runner, tmp_path, "semidihedral", 16, "dot")
    assert result.exit_code == EXIT_OK
    text = out.read_text()
    assert len({int(m) for m in re.findall(r"factor=(\d+)", text)}) == 31


def test_generate_edgelist_and_summary(runner, tmp_path):
    result, out = _generate(runner, tmp_path, "abelian", 4, "edgelist")
    assert result.exit_code == EXIT_OK
    assert len(out.read_text().splitlines()) == 1 + 4 * 7

    result, out = _generate(runner, tmp_path, "abelian", 4, "summary")
    assert result.exit_code == EXIT_OK
    assert "Z2xZ4" in out.read_text()


def test_generate_is_deterministic(runner, tmp_path):
    (tmp_path / "one").mkdir()
    (tmp_path / "two").mkdir()
    _, first = _generate(runner, tmp_path / "one", "dicyclic", 3)
    _, second = _generate(runner, tmp_path / "two", "dicyclic", 3)
    assert first.read_bytes() == second.read_bytes()


def test_verify_round_trip(runner, tmp_path):
    _, out = _generate(runner, tmp_path, "dicyclic", 4)
    result = runner.invoke(cli, ["verify", str(out), "--json", "-q"])
    assert result.exit_code == EXIT_OK
    report = json.loads(result.output)
    assert report["violations"] == []
    assert "trees.partition" in report["checked"]


def test_verify_catches_a_corrupted_edge(runner, tmp_path):
    _, out = _generate(runner, tmp_path, "dicyclic", 2)
    raw = json.loads(out.read_text())
    raw["trees"]["trees"][0][0] = raw["trees"]["trees"][1][0]
    out.write_text(json.dumps(raw))

    result = runner.invoke(cli, ["verify", str(out), "--json", "-q"])
    assert result.exit_code == EXIT_CHECK_FAILED
    report = json.loads(result.output)
    assert "trees.partition" in {v["condition"] for v in report["violations"]}


@pytest.mark.parametrize(
    "section, key, index, value, condition",
    [
        ("trees", "t1", 0, "[b,b*a^2]", "trees.provenance"),
        ("trees", "t2", 0, "[1,a^2]", "trees.provenance"),
        ("trees", "transversal", 1, "a^3", "trees.provenance"),
        ("factorization", "block_of", 0, 3, "factorization.blocks"),
    ],
)
def test_verify_checks_every_section(runner, tmp_path, section, key, index, value, condition):
    _, out = _generate(runner, tmp_path, "dicyclic", 2)
    raw = json.loads(out.read_text())
    raw[section][key][index] = value
    out.write_text(json.dumps(raw))

    result = runner.invoke(cli, ["verify", str(out), "--json", "-q"])
    assert result.exit_code == EXIT_CHECK_FAILED
    report = json.loads(result.output)
    assert condition in {v["condition"] for v in report["violations"]}


def test_verify_catches_overlapping_pieces(runner, tmp_path):
    _, out = _generate(runner, tmp_path, "dicyclic", 2)
    raw = json.loads(out.read_text())
    pieces = raw["lemma"]["pieces"]
    pieces["T''"].append(pieces["T'"][0])
    out.write_text(json.dumps(raw))

    result = runner.invoke(cli, ["verify", str(out), "--json", "-q"])
    assert result.exit_code == EXIT_CHECK_FAILED
    report = json.loads(result.output)
    assert {v["condition"] for v in report["violations"]} == {"lemma.pieces"}


@pytest.mark.parametrize("content", ["{", '{"schema": 7}', "[1, 2]"])
def test_verify_rejects_unreadable_files(runner, tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    result = runner.invoke(cli, ["verify", str(path), "-q"])
    assert result.exit_code == EXIT_USAGE


def test_search(runner, tmp_path):
    out = tmp_path / "search.json"
    result = runner.invoke(cli, ["search", "-f", "dicyclic", "-p", "2", "-o", str(out), "-q"])
    assert result.exit_code == EXIT_OK
    raw = json.loads(out.read_text())
    assert raw["complete"] is True
    assert raw["starters"]


def test_search_with_no_budget_is_incomplete(runner, tmp_path):
    out = tmp_path / "search.json"
    result = runner.invoke(
        cli, ["search", "-f", "abelian", "-p", "4", "--max-nodes", "0", "-o", str(out), "-q"]
    )
    assert result.exit_code == EXIT_OK
    assert json.loads(out.read_text())["complete"] is False


def test_search_refuses_large_groups(runner, tmp_path):
    result = runner.invoke(cli, ["search", "-f", "semidihedral", "-p", "16", "-q"])
    assert result.exit_code == EXIT_USAGE


def test_info(runner):
    result = runner.invoke(cli, ["info", "-f", "dicyclic", "-p", "2"])
    assert result.exit_code == EXIT_OK
    assert "Q8" in result.output
    assert "Starter blocks" in result.output


@pytest.mark.parametrize("family, param", [("modular", 8), ("abelian", 16)])
def test_figure(runner, tmp_path, family, param):
    out = tmp_path / "figure.dot"
    result = runner.invoke(cli, ["figure", "-f", family, "-p", str(param), "-o", str(out), "-q"])
    assert result.exit_code == EXIT_OK
    text = out.read_text()
    assert text.count("graph ") == 2
    nodes = sum(bool(NODE_LINE.match(line)) for line in text.splitlines())
    assert nodes == 2 * 2 * param
    assert text.count('class="bridge"') == 2


def test_config_file_caps_the_order(runner, tmp_path):
    config = tmp_path / "regfact.yaml"
    config.write_text("regfact:\n  version: 1\n  limits:\n    max_order: 16\n")
    out = tmp_path / "sd.json"
    result = runner.invoke(
        cli,
        ["--config", str(config), "generate", "-f", "semidihedral", "-p", "16", "-o", str(out)],
    )
    assert result.exit_code == EXIT_USAGE
    assert not out.exists()


def test_environment_caps_the_order(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("REGFACT_MAX_ORDER", "8")
    result, out = _generate(runner, tmp_path, "abelian", 8)
    assert result.exit_code == EXIT_USAGE

    result, out = _generate(runner, tmp_path, "abelian", 4)
    assert result.exit_code == EXIT_OK
