from __future__ import annotations

import dataclasses
import json
import subprocess
import sys

import pytest

from bunchlinks import cli
from bunchlinks.bunch import embedding_from_dict
from bunchlinks.parent import diagram_from_dict
from conftest import RUNNING


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_orders_json(capsys):
    code, out, _ = run(capsys, "orders", "--word", RUNNING)
    assert code == 0
    d = json.loads(out)
    assert d["x_order"] == ["x2", "x1", "x4", "x5", "x3"]
    assert d["y_order"] == ["y5", "y2", "y1", "y4", "y3"]


def test_recipe_text(capsys):
    code, out, _ = run(capsys, "recipe", "--word", RUNNING, "--format", "text")
    assert code == 0
    lines = out.splitlines()
    assert lines[:7] == [
        "A^x_2: +1/2 annular filling",
        "A^x_5: +1/3 annular filling",
        "A^x_7: +1/2 annular filling",
        "A^x_10: +1/3 annular filling",
        "A^y_2: +1/2 annular filling",
        "A^y_3: +1/1 annular filling",
        "A^y_6: +1/3 annular filling",
    ]
    assert "V_2: -1/1" in lines and "V_3: trivial" in lines and "U: trivial" in lines


def test_word_forms(capsys):
    _, a, _ = run(capsys, "normalize", "--word", "xy", "--word", "x^2y")
    _, b, _ = run(capsys, "normalize", "--word", "xy, x^2y")
    assert a == b and json.loads(a)["nbar"] == 2


def test_json_outputs_round_trip(capsys):
    _, out, _ = run(capsys, "embed", "--word", RUNNING)
    emb = embedding_from_dict(json.loads(out))
    assert len(emb.used) == 44
    _, out, _ = run(capsys, "parent", "--word", RUNNING)
    d = json.loads(out)
    assert diagram_from_dict(d["diagram"]).nbar == 5
    assert d["crossings"]["total"] + 23 + 10 == d["iota_total"]


def test_bunches_and_bound(capsys):
    _, out, _ = run(capsys, "bunches", "--word", RUNNING)
    assert json.loads(out)["sizes"]["-1"] == 5
    _, out, _ = run(capsys, "bound", "--word", "x^3yx^2yxy", "--lorenz")
    d = json.loads(out)
    assert d["iota_total"] == 23 and d["complement"] == "lorenz"


def test_verify_random(capsys):
    code, out, _ = run(capsys, "verify", "--random", "200", "--max-period", "6", "--max-exp", "9", "--seed", "7")
    assert code == 0
    assert json.loads(out) == {"checked": 200, "passed": 200, "failures": []}


def test_verify_fail_exit_code(capsys, monkeypatch):
    real = cli.embed

    def broken(link):
        emb = real(link)
        used = list(emb.used)
        used[0], used[-1] = used[-1], used[0]
        return dataclasses.replace(emb, used=tuple(used))

    monkeypatch.setattr(cli, "embed", broken)
    code, out, _ = run(capsys, "verify", "--word", RUNNING)
    assert code == cli.EXIT_FAIL
    assert json.loads(out)["check"] == "a"


def test_domain_error(capsys):
    code, _, err = run(capsys, "orders", "--word", "xyxy")
    assert code == 1
    assert err.splitlines()[0] == "PeriodicWord"
    code, _, err = run(capsys, "orders", "--word", "xqy")
    assert code == 1 and err.splitlines()[0] == "SyntaxError"


@pytest.mark.parametrize(
    "argv",
    [[], ["orders"], ["frobnicate"], ["orders", "--word", "xy", "--format", "yaml"], ["batch"]],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        code = cli.run(argv)
        raise SystemExit(code)
    assert info.value.code == 2


def test_classify_against(capsys, tmp_path):
    f = tmp_path / "links.txt"
    f.write_text("# candidates\nx^3y^5x^2y^5x^2y^5\nxyxy^2\nx^2yxy\n\n")
    code, out, _ = run(capsys, "classify", "--word", "x^2yxyxy", "--against", str(f))
    assert code == 0
    groups = [c["links"] for c in json.loads(out)["classes"]]
    assert groups == [["x^2yxyxy", "x^3y^5x^2y^5x^2y^5"], ["xyxy^2"], ["x^2yxy"]]


def test_render_to_file(capsys, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for p in (a, b):
        assert run(capsys, "render", "--word", RUNNING, "--kind", "parent", "--out", str(p))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().startswith("<?xml")
    code, out, _ = run(capsys, "render", "--word", "xy", "--hide-unused", "--unit", "20")
    assert code == 0 and "slot unused" not in out


def test_batch_order_preserved(capsys, tmp_path):
    f = tmp_path / "in.txt"
    texts = ["x^3yx^2yxy", "xyxy", RUNNING, "xy, x^2y", "x^5y^5"]
    f.write_text("\n".join(texts) + "\n")
    _, seq, _ = run(capsys, "batch", "--input", str(f), "--op", "recipe")
    _, par, _ = run(capsys, "batch", "--input", str(f), "--op", "recipe", "--jobs", "2")
    assert seq == par
    lines = [json.loads(line) for line in seq.splitlines()]
    assert len(lines) == 5 and lines[1] == {"input": "xyxy", "error": "PeriodicWord"}
    code, _, err = run(capsys, "batch", "--input", str(tmp_path / "missing.txt"))
    assert code == 2


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--scales", "1,2", "--repeats", "2")
    rows = out.splitlines()
    assert rows[0] == "nbar,scale,items_ordered_bunch,items_ordered_williams,t_bunch,t_williams"
    assert [r.split(",")[:4] for r in rows[1:]] == [["5", "1", "10", "44"], ["5", "2", "10", "88"]]
    code, out, _ = run(capsys, "bench", "--kernels", "--scales", "1", "--repeats", "1")
    assert out.splitlines()[0] == "backend,scale,letters,t_naive_sort"
    assert {r.split(",")[0] for r in out.splitlines()[1:]} == {"numba", "numpy"}


def test_no_color(monkeypatch):
    monkeypatch.setattr(sys.stdout, "isatty", lambda: True, raising=False)
    monkeypatch.delenv("NO_COLOR", raising=False)
    assert cli._colour("PASS", "32") != "PASS"
    monkeypatch.setenv("NO_COLOR", "1")
    assert cli._colour("PASS", "32") == "PASS"


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "bunchlinks", "orders", "--word", "x^2y"], capture_output=True, text=True
    )
    assert out.returncode == 0 and json.loads(out.stdout)["x_order"] == ["x1"]
    out = subprocess.run([sys.executable, "-m", "bunchlinks", "orders", "--word", "yyy"], capture_output=True, text=True)
    assert out.returncode == 1 and out.stderr.startswith("SingleLetterWord")
    out = subprocess.run([sys.executable, "-m", "bunchlinks"], capture_output=True, text=True)
    assert out.returncode == 2
