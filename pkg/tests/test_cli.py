"""End-to-end command-line behavior via click's test runner."""

import json

import pytest
from click.testing import CliRunner

from subsystem_codes.cli import main, parse_params
from subsystem_codes.codes import AdditiveCode
from subsystem_codes.known import bacon_shor_code, five_qubit_code


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def five_path(tmp_path):
    path = tmp_path / "five.json"
    five_qubit_code().save(path)
    return str(path)


@pytest.fixture()
def shor_path(tmp_path):
    path = tmp_path / "shor.json"
    bacon_shor_code().save(path)
    return str(path)


def test_analyze_five_qubit(runner, five_path):
    res = runner.invoke(main, ["analyze", five_path])
    assert res.exit_code == 0, res.output
    report = json.loads(res.output)
    assert report["bracket"] == "[[5,1,0,3]]_2"
    assert report["bounds"]["hamming"]["attained"] is True
    assert report["bounds"]["singleton"]["slack"] == 0


def test_analyze_text_format(runner, shor_path):
    res = runner.invoke(main, ["--format", "text", "analyze", shor_path])
    assert res.exit_code == 0, res.output
    assert "code: [[9,1,4,3]]_2" in res.output
    assert "purity: impure" in res.output
    assert "distance: 3 [exhaustive]" in res.output


def test_analyze_malformed_file(runner, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    res = runner.invoke(main, ["analyze", str(bad)])
    assert res.exit_code != 0
    assert "cannot load code file" in res.output


def test_transform_shrink_emits_code(runner, five_path, tmp_path):
    out_path = tmp_path / "shrunk.json"
    res = runner.invoke(main, ["--emit", str(out_path), "transform",
                               five_path, "--rule", "shrink-k"])
    assert res.exit_code == 0, res.output
    emitted = AdditiveCode.load(out_path)
    assert emitted.n == 5 and emitted.rank_p == 6    # ((5,1,2,3)) gauge group


def test_transform_grow_on_impure_fails(runner, shor_path):
    res = runner.invoke(main, ["transform", shor_path, "--rule", "grow-k"])
    assert res.exit_code != 0
    assert "grid" in res.output or "absorb" in res.output.lower()


def test_transform_shorten_params(runner):
    res = runner.invoke(main, ["transform", "--rule", "shorten-n",
                               "--params", "[[5,1,0,3]]_2 pure"])
    assert res.exit_code == 0, res.output
    payload = json.loads(res.output)
    assert payload["output"]["bracket"] == "[[4,2,0,2]]_2"


def test_transform_combine_params(runner):
    res = runner.invoke(main, [
        "transform", "--rule", "combine-nested", "-r", "0",
        "--subset-assumed",
        "--params", "[[5,1,0,3]]_2 pure", "--params", "[[5,1,0,3]]_2 pure"])
    assert res.exit_code == 0, res.output
    payload = json.loads(res.output)
    assert payload["output"]["bracket"] == "[[10,2,0,>=3]]_2"


def test_transform_missing_params(runner):
    res = runner.invoke(main, ["transform", "--rule", "combine-disjoint",
                               "--params", "[[5,1,0,3]]_2"])
    assert res.exit_code != 0
    assert "two --params" in res.output


def test_table1_csv(runner):
    res = runner.invoke(main, ["--format", "csv", "table1", "--q", "3"])
    assert res.exit_code == 0, res.output
    lines = res.output.strip().splitlines()
    assert lines[0].startswith("subsystem,parent,mark")
    assert len(lines) == 6
    assert "[[9,4,1,3]]_3" in lines[-1]


def test_table1_unknown_q(runner):
    res = runner.invoke(main, ["table1", "--q", "11"])
    assert res.exit_code != 0
    assert "no catalog rows" in res.output


def test_table1_strict_downgrade_exits_3(runner):
    # q = 4 distances rest on witnesses, so --strict must refuse
    res = runner.invoke(main, ["--strict", "table1", "--q", "4"])
    assert res.exit_code == 3


def test_family_command(runner):
    res = runner.invoke(main, ["family", "--family", "vi", "--q", "3",
                               "--delta", "1", "-r", "4"])
    assert res.exit_code == 0, res.output
    payload = json.loads(res.output)
    assert payload["output"]["bracket"] == "[[9,1,4,3]]_3"


def test_family_parameter_level(runner):
    res = runner.invoke(main, ["family", "--family", "i", "--q", "7",
                               "--n", "6", "--d", "3", "-r", "1"])
    assert res.exit_code == 0, res.output
    # the existence claim is asserted, which is flagged on stderr
    body = "".join(line for line in res.output.splitlines(keepends=True)
                   if not line.startswith("warning:"))
    payload = json.loads(body)
    assert payload["output"]["bracket"] == "[[6,1,1,3]]_7"
    assert payload["verification"]["[[6,1,1,3]]_7 exists"] == "asserted"


def test_family_bad_range(runner):
    res = runner.invoke(main, ["family", "--family", "iii", "--q", "3",
                               "--delta", "1"])
    assert res.exit_code != 0


def test_deterministic_output(runner, five_path):
    args = ["--seed", "7", "analyze", five_path]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.output == second.output


def test_parse_params():
    rec = parse_params("[[9,1,4,>=3]]_2 impure linear")
    assert (rec.n, int(rec.k), int(rec.r), rec.d) == (9, 1, 4, 3)
    assert rec.d_is_bound and rec.pure is False and rec.linear is True
    with pytest.raises(Exception):
        parse_params("[[9,1,4]]_2")
