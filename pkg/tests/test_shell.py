import json
import random
import subprocess
import sys

import pytest

from bocs_engine import set_data_path
from bocs_engine.config import BocsPATHS
from bocs_engine.dbq import DASHED, BiArrow, BiQuiver, DifferentialBiquiver, MixedElement
from bocs_engine.errors import BocsError, ParseError
from bocs_engine.pipelines import schur_an, two_simple
from bocs_engine.reduce import ReductionLog, ReductionMove, apply_move, run
from bocs_engine.shell import (
    FixtureRegistry,
    emit_algebra,
    emit_bocs,
    emit_log_json,
    emit_log_table,
    emit_script,
    load_algebra,
    load_bocs,
    load_script,
    parse_algebra,
    parse_bocs,
    parse_script,
    read_settings,
)
from bocs_engine.shell.cli import EXIT_ERROR, EXIT_LIMIT, EXIT_LOOP, EXIT_OK, main

WRONG_DEGREE = str(BocsPATHS.test_files / "wrong_degree.bocs")
DUAL = str(BocsPATHS.test_files / "dual.alg")


# ------------------------------ Parsers ------------------------------ #


def test_parse_bocs_reads_fixture_text(registry):
    dbq = registry["d3"].dbq
    assert dbq.name == "d3"
    assert dbq.counts() == (3, 5)
    assert str(dbq.d("c")) == "-b*phi"
    assert len(dbq.ideal) == 1


@pytest.mark.parametrize(
    "text, line, column, message",
    [
        ("order 1 2\nsolid a : 1 -> 3", 2, 7, "Unknown vertex '3'"),
        ("order 1 2\nsolid a : 1 -> 2\ndiff a = b", 3, 10, "Unknown arrow 'b'"),
        ("order 1 2\nsolid a : 1 => 2", 2, 7, "does not match"),
        ("order 1 2\n  frobnicate a", 2, 3, "Unknown keyword"),
        ("solid a : 1 -> 2", 1, 1, "after the 'order' line"),
    ],
)
def test_parse_bocs_errors_carry_position(text, line, column, message):
    with pytest.raises(ParseError, match=message) as error:
        parse_bocs(text)
    assert (error.value.line, error.value.column) == (line, column)


def test_relations_must_be_solid():
    text = "order 1 2\nsolid a : 1 -> 2\ndashed phi : 1 => 2\nrel phi"
    with pytest.raises(ParseError, match="only use solid arrows"):
        parse_bocs(text)


def test_parse_algebra_rejects_non_paths():
    text = "vertices 1 2\narrow a : 1 -> 2\nrel a*a"
    with pytest.raises(ParseError, match="not a path") as error:
        parse_algebra(text)
    assert error.value.line == 3


def test_parse_script_reports_bad_line():
    with pytest.raises(ParseError) as error:
        parse_script("# replay\nreduce a\nfrobnicate b\n")
    assert error.value.line == 3


@pytest.mark.parametrize("name", ["sl2", "a3_regular", "mazorchuk", "d3", "d4", "r4", "h4"])
def test_emitted_bocs_reads_back(registry, name):
    dbq = registry[name].dbq
    text = emit_bocs(dbq)
    again = parse_bocs(text)
    assert again.counts() == dbq.counts()
    assert again.differential == dbq.differential
    assert emit_bocs(again) == text


def _random_bocs(seed: int) -> DifferentialBiquiver:
    """A directed bocs whose solid arrows differ by dashed arrows, possibly through a solid one."""
    rng = random.Random(seed)
    vertices = [str(v) for v in range(1, rng.randint(2, 4) + 1)]
    arrows = []
    for i, source in enumerate(vertices):
        for target in vertices[i + 1 :]:
            for _ in range(rng.randint(0, 2)):
                arrows.append(BiArrow(f"a{len(arrows)}", source, target))
            for _ in range(rng.randint(0, 2)):
                arrows.append(BiArrow(f"phi{len(arrows)}", source, target, DASHED))
    quiver = BiQuiver(vertices, arrows)

    differential = {}
    for a in quiver.solid_arrows:
        words = [(x.name,) for x in quiver.dashed_arrows if (x.source, x.target) == (a.source, a.target)]
        words += [
            (b.name, x.name)
            for b in quiver.solid_arrows
            for x in quiver.dashed_arrows
            if b.name != a.name and b.target == a.target and x.source == a.source and x.target == b.source
        ]
        chosen = [w for w in words if rng.random() < 0.5]
        if chosen:
            terms = {w: rng.choice([-3, -2, -1, 1, 2, 3]) for w in chosen}
            differential[a.name] = MixedElement(terms, a.source, a.target)
    return DifferentialBiquiver(quiver, differential, name=f"random{seed}")


def _reduced_a3(registry):
    dbq = apply_move(registry["a3_regular"].dbq, ReductionMove("reduce", "a"))
    return apply_move(dbq, ReductionMove("reduce", "b_34"))


@pytest.mark.parametrize(
    "build",
    [lambda r, s=s, t=t: two_simple(s, t).dbq for s in range(3) for t in range(3)]
    + [lambda r, n=n: schur_an(n).dbq for n in (2, 3, 4)]
    + [_reduced_a3, lambda r: apply_move(r["mazorchuk"].dbq, ReductionMove("reduce", "a"))]
    + [lambda r, seed=seed: _random_bocs(seed) for seed in range(12)],
)
def test_generated_bocs_reads_back(registry, build):
    dbq = build(registry)
    text = emit_bocs(dbq)
    again = parse_bocs(text)
    assert again.vertices == dbq.vertices
    assert again.differential == dbq.differential
    assert emit_bocs(again) == text


def test_emitted_algebra_and_script_read_back(sl2):
    text = emit_algebra(sl2.algebra)
    assert text.splitlines()[0] == "algebra sl2"
    assert emit_algebra(parse_algebra(text)) == text

    script = "reduce a\nregularise *\neliminate d_45 @ 5 19\nauto\n"
    assert emit_script(parse_script(script)) == script


# ------------------------------ Exporters ------------------------------ #


def test_empty_log_is_only_a_header():
    assert emit_log_table(ReductionLog()) == "step  number of vertices  number of arrows\n"


def test_log_table_rows(sl2):
    result = run(sl2.dbq)
    lines = emit_log_table(result.log).splitlines()
    assert len(lines) == 3
    assert lines[1].split() == ["start", "2", "2"]
    assert lines[2].split() == ["minimal", "edge", "reduction", "at", "a", "3", "6"]


def test_log_json_records(sl2):
    records = json.loads(emit_log_json(run(sl2.dbq).log))
    assert records[0] == {"step": 0, "move": "start", "vertices": 2, "arrows": 2}
    assert records[-1]["arrows"] == 6


# ------------------------------ Fixtures ------------------------------ #


def test_registry_names(registry):
    assert sorted(registry.names) == ["a3_regular", "d3", "d4", "h4", "mazorchuk", "r4", "sl2"]
    assert "sl2" in registry
    assert "twosimple(2,1)" in registry
    assert "nope" not in registry


def test_registry_caches_fixtures(registry):
    assert registry.get("example:sl2") is registry["sl2"]


def test_registry_families(registry):
    fixture = registry["example:twosimple(1, 1)"]
    assert fixture.expected == {"right_algebra_dim": 5}
    assert registry["schur_an(3)"].algebra.name == "A3"
    with pytest.raises(ValueError):
        registry.get("schur_an(2,3)")


def test_registry_unknown_name(registry):
    with pytest.raises(KeyError, match="No fixture named 'nope'"):
        registry.get("nope")


def test_registry_reads_other_settings(tmp_path):
    (tmp_path / "fixtures").mkdir()
    (tmp_path / "fixtures" / "tiny.bocs").write_text("bocs tiny\norder 1 2\nsolid a : 1 -> 2\n")
    (tmp_path / "fixtures.json").write_text(json.dumps({"tiny": {"bocs": "tiny.bocs"}}))

    fixture = FixtureRegistry(tmp_path)["tiny"]
    assert fixture.dbq.counts() == (2, 1)
    assert fixture.algebra is None
    assert fixture.script is None
    assert not fixture.check_counts


@pytest.mark.parametrize(
    "entry, message",
    [
        ({"algebra": "tiny.alg"}, "needs a 'bocs' file name"),
        ({"bocs": "tiny.bocs", "scirpt": "tiny.moves"}, r"unknown keys \['scirpt'\]"),
        ({"bocs": "tiny.bocs", "check_counts": "yes"}, "must be true or false"),
        ({"bocs": "tiny.bocs", "expected": {"terminal_vertices": -1}}, "non-negative integer"),
        ({"bocs": "tiny.bocs", "expected": {"vertices": 3}}, "may only hold"),
        ("tiny.bocs", "must be an object"),
    ],
)
def test_registry_rejects_malformed_entries(tmp_path, entry, message):
    (tmp_path / "fixtures.json").write_text(json.dumps({"tiny": entry}))
    with pytest.raises(BocsError, match=message) as error:
        FixtureRegistry(tmp_path)
    assert "'tiny'" in str(error.value)


def test_builtin_settings_are_well_formed():
    entries = read_settings(BocsPATHS.settings / "fixtures.json")
    assert all(isinstance(entry["bocs"], str) for entry in entries.values())


def test_set_data_path(tmp_path, monkeypatch):
    for attribute in ("settings", "fixtures", "scripts"):
        monkeypatch.setattr(BocsPATHS, attribute, getattr(BocsPATHS, attribute))
    set_data_path(tmp_path)
    assert BocsPATHS.settings == tmp_path.resolve()
    assert BocsPATHS.scripts == tmp_path.resolve() / "scripts"


def test_loaders(registry):
    assert load_bocs("example:sl2", registry) is registry["sl2"].dbq
    assert load_algebra(DUAL).name == "dual"
    assert len(load_script("h4.moves", registry)) == 11
    with pytest.raises(KeyError):
        load_algebra("example:twosimple(1,1)", registry)


# ------------------------------ Command line ------------------------------ #


def test_validate_command(capsys):
    assert main(["validate", "example:sl2"]) == EXIT_OK
    assert capsys.readouterr().out == "sl2: valid, directed, 2 vertices, 2 arrows\n"


def test_validate_reports_wrong_degree(capsys):
    assert main(["validate", WRONG_DEGREE]) == EXIT_ERROR
    assert "degree" in capsys.readouterr().err


def test_reduce_command_json(capsys):
    assert main(["reduce", "example:sl2", "--log", "json"]) == EXIT_OK
    captured = capsys.readouterr()
    assert len(json.loads(captured.out)) == 2
    assert captured.err.startswith("verdict: terminal")


def test_log_file_records_moves(tmp_path, capsys):
    path = tmp_path / "sl2.log"
    assert main(["--log-file", str(path), "reduce", "example:sl2"]) == EXIT_OK
    text = path.read_text()
    assert "DEBUG" in text
    assert "minimal edge reduction at a" in text


def test_reduce_command_limit(capsys):
    assert main(["reduce", "example:a3_regular", "--max-steps", "1"]) == EXIT_LIMIT
    assert "limit" in capsys.readouterr().err


def test_ar_command_writes_dot(tmp_path, capsys):
    out = tmp_path / "sl2.dot"
    assert main(["ar", "example:sl2", "--dot", str(out)]) == EXIT_OK
    assert capsys.readouterr().out == "nodes=3 edges=3\n"
    assert out.read_text().startswith('digraph "')


def test_ar_command_on_a_loop(capsys):
    assert main(["ar", "example:twosimple(2,0)"]) == EXIT_LOOP
    assert "No AR quiver" in capsys.readouterr().err


def test_twosimple_command(capsys):
    assert main(["twosimple", "2", "0"]) == EXIT_LOOP
    assert main(["twosimple", "1", "1"]) == EXIT_OK
    assert "right algebra dimension 5 (expected 5)" in capsys.readouterr().out


def test_twosimple_emit(capsys):
    assert main(["twosimple", "0", "2", "--emit"]) == EXIT_OK
    assert parse_bocs(capsys.readouterr().out).counts() == (2, 2)


def test_p1_command(capsys):
    assert main(["p1", DUAL]) == EXIT_OK
    assert capsys.readouterr().out == "dual: finite: 2 indecomposables\n"


def test_standardize_command(capsys):
    assert main(["standardize", "example:sl2", "--against", "example:sl2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Ext^1(Delta(i), Delta(j))" in out
    assert "sl2: arrow and relation counts match" in out


def test_schur_command(capsys):
    assert main(["schur", "2"]) == EXIT_OK
    assert "right algebra: 5 (expected 5)" in capsys.readouterr().out


def test_oracle_command(capsys):
    assert main(["oracle", "example:sl2", "--char", "2", "--caps", "2,2"]) == EXIT_OK
    assert "3 indecomposables" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["example", "nope"],
        ["oracle", "example:sl2", "--char", "2", "--caps", "1,x"],
        ["oracle", "example:sl2", "--char", "2", "--caps", "1"],
        ["example", "twosimple(1,1)", "--emit", "algebra"],
    ],
)
def test_usage_and_input_errors(argv, capsys):
    assert main(argv) == EXIT_ERROR
    assert capsys.readouterr().err.startswith("error:")


@pytest.mark.slow
def test_h4_script_ends_on_thirteen_vertices(capsys):
    assert main(["reduce", "example:h4", "--script", "h4.moves"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[-1].split()[-2:] == ["13", "194"]


def test_module_entry_point():
    completed = subprocess.run(
        [sys.executable, "-m", "bocs_engine.shell.cli", "example", "sl2"],
        capture_output=True,
        text=True,
        cwd=BocsPATHS.project,
    )
    assert completed.returncode == 0
    assert completed.stdout.startswith("bocs sl2\norder 1 2\n")
