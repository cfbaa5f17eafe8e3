import hashlib
import json
import os

import pytest

from artifact.solver import solve
from artifact.superset import superset_classes
from artifact.serialize import serialize, deserialize
from artifact.render import render_svg, render_ascii
from artifact import cli

HERE = os.path.dirname(__file__)


def test_chamberset_roundtrip():
    cs = superset_classes("sp4", (0, 0), p_max=3, q_max=12, radius=4)
    text = serialize(cs)
    assert deserialize(text) == cs
    assert serialize(deserialize(text)) == text


def test_verdictmap_roundtrip():
    vm = solve("sl2", (4,), radius=10)
    text = serialize(vm)
    assert deserialize(text) == vm
    assert serialize(deserialize(text)) == text


def test_serialization_is_canonical_json():
    vm = solve("sl2", (0,), radius=4)
    text = serialize(vm)
    doc = json.loads(text)
    assert json.dumps(doc, sort_keys=True, separators=(",", ":")) == text
    assert text.isascii()


def test_byte_identity_across_threads():
    ref = None
    for n in (1, 4, 8):
        cs = superset_classes("sl3", (0, 0, 0), p_max=3, q_max=12,
                              radius=4, threads=n)
        text = serialize(cs)
        if ref is None:
            ref = text
        assert text == ref


def test_svg_deterministic_and_golden_hash():
    cs = superset_classes("sl3", (0, 0, 0), p_max=3, q_max=12, radius=4)
    svg = render_svg(cs)
    assert svg == render_svg(cs)
    assert svg.count("<polygon") == 31       # one per window alcove
    digest = hashlib.sha256(svg.encode()).hexdigest()
    path = os.path.join(HERE, "golden_svg_hash.txt")
    if not os.path.exists(path):
        with open(path, "w") as fh:
            fh.write(digest + "\n")
    with open(path) as fh:
        assert fh.read().strip() == digest


def test_ascii_has_legend_and_glyphs():
    vm = solve("sl2", (2,), radius=6)
    out = render_ascii(vm)
    assert "legend:" in out
    assert "N" in out


def test_cli_solve_json(capsys):
    rc = cli.main(["solve", "--group", "sl2", "--b", "2", "--radius", "6"])
    assert rc == 0
    out = capsys.readouterr().out
    obj = deserialize(out)
    assert obj.group == "sl2"


def test_cli_exit_codes(tmp_path, capsys):
    assert cli.main(["solve", "--group", "nope"]) in (1,)  # usage

    rc = cli.main(["solve", "--group", "sl3", "--b", "1,2,3"])
    assert rc == 2                                          # not trace zero

    rc = cli.main(["superset", "--group", "sl3", "--radius", "4",
                   "--pmax", "1", "--qmax", "2", "--strict"])
    assert rc == 3                                          # truncated
    capsys.readouterr()


def test_cli_usage_exit_is_one():
    with pytest.raises(SystemExit) as ei:
        cli.build_parser().parse_args(["solve", "--radius", "x"])
    assert ei.value.code == 1


def test_cli_config_defaults_and_flag_override(tmp_path, capsys):
    cfg = tmp_path / "cfg"
    cfg.write_text("radius=4\npmax=3\nqmax=12\n")
    rc = cli.main(["superset", "--group", "sl3",
                   "--config", str(cfg)])
    assert rc == 0
    a = capsys.readouterr().out
    assert json.loads(a)["header"]["window"] == 4
    rc = cli.main(["superset", "--group", "sl3", "--config", str(cfg),
                   "--radius", "3"])
    assert rc == 0
    b = capsys.readouterr().out
    assert json.loads(b)["header"]["window"] == 3


def test_cli_out_file_and_render(tmp_path):
    dest = tmp_path / "out.json"
    rc = cli.main(["solve", "--group", "sl2", "--b", "0", "--radius", "5",
                   "--out", str(dest)])
    assert rc == 0
    svg_dest = tmp_path / "out.svg"
    rc = cli.main(["render", str(dest), "--format", "svg",
                   "--out", str(svg_dest)])
    assert rc == 0
    assert svg_dest.read_text().startswith("<svg")


def test_cli_sl2_table(capsys):
    rc = cli.main(["sl2-table", "--smax", "1", "--imax", "3"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "s=0:" in out and "i=3: s in {0,1}" in out


def test_cli_fold_and_seed_only(capsys):
    rc = cli.main(["fold", "--group", "sl3", "0,1,2,1"])
    assert rc == 0
    capsys.readouterr()
    rc = cli.main(["subset", "--group", "sl3", "--seed-only",
                   "--radius", "4"])
    assert rc == 0
    obj = deserialize(capsys.readouterr().out)
    assert obj.kind == "Subset"
