import json
import subprocess
import sys
from pathlib import Path

import pytest

from dagfem.cli import execute, run

DATA = Path(__file__).resolve().parent.parent / "data"


def d(name):
    return str(DATA / name)


CASES = [
    (["validate", "category", d("z2.json")], 0),
    (["validate", "category", d("p2-zero.json")], 0),
    (["validate", "category", d("z2-bad-dagger.json")], 2),
    (["validate", "functor", d("z2-swap-functor.json")], 0),
    (["validate", "monad", d("ts-monad.json")], 0),
    (["validate", "monad", d("id-z2-monad.json")], 0),
    (["validate", "2category", "fixture:SIGMA_Z2"], 0),
    (["validate", "laxfunctor", d("ts-lax.json")], 0),
    (["validate", "laxfunctor", d("ts-lax-bad-unit.json")], 2),
    (["enumerate", "monads", d("z2.json")], 0),
    (["enumerate", "monads", "fixture:REL2"], 0),
    (["enumerate", "functors", d("z2.json"), d("p2.json")], 0),
    (["enumerate", "algebras", d("ts-monad.json")], 0),
    (["build", "fem", d("ts-monad.json")], 0),
    (["build", "kleisli", d("ts-monad.json")], 0),
    (["build", "dfmnd", "fixture:SIGMA_Z2"], 0),
    (["build", "fk-completion", "fixture:SIGMA_Z2"], 0),
    (["build", "fem-completion", "fixture:TERMINAL"], 0),
    (["check", "frobenius", d("ts-monad.json")], 0),
    (["check", "fem-algebra", d("ts-monad.json"), "--carrier", "*", "--structure", "s"], 0),
    (["check", "fem-algebra", d("ts-monad.json"), "--carrier", "*", "--structure", "1"], 1),
    (["check", "th1", "--arg-category", d("z2.json"), "--monad", d("ts-monad.json")], 0),
    (["check", "fk-universal", "--arg-category", d("z2.json"), "--monad", d("ts-monad.json")], 0),
    (["check", "comparison", "fixture:KL_TS"], 0),
    (["check", "monadic", "fixture:FEM_TS"], 0),
    (["check", "monadic", "fixture:NON_MONADIC"], 1),
    (["check", "fem-object", "fixture:TS", "--witness", "fixture:FEM_TS"], 0),
    (["check", "fem-object", "fixture:TS"], 0),
    (["check", "universal2", "fixture:FEM_TS"], 0),
    (["check", "universal2", "fixture:KL_TS"], 0),
    (["check", "eta-commutation", "fixture:TS_SIGMA"], 0),
    (["check", "pairs", "--source", "fixture:TS", "--target", "fixture:TS"], 0),
    (["check", "lax-limit", "fixture:TS"], 0),
    (["check", "lax-limit", "fixture:TS", "--limit", "ONE"], 1),
    (["validate", "category", d("missing.json")], 2),
    (["validate", "category", "{not json"], 2),
    (["validate", "monad", "fixture:NOPE"], 2),
]


@pytest.mark.parametrize("argv,code", CASES, ids=[" ".join(a[:2]) + f"-{i}" for i, (a, _) in enumerate(CASES)])
def test_exit_codes(argv, code, capsys):
    assert run(argv) == code
    out, err = capsys.readouterr()
    report = json.loads(out)
    assert report["verdict"] == {0: "pass", 1: "fail", 2: "error"}[code]
    assert err.strip()
    # pass exactly when there are no witnesses; each witness names cells
    assert (report["verdict"] == "pass") == (report["witnesses"] == [])
    for w in report["witnesses"]:
        assert w["cells"]


def test_report_field_order():
    r = execute(["validate", "category", d("z2.json")])
    assert list(r.to_dict()) == ["command", "inputs", "verdict", "witnesses", "result", "timing"]
    (inp,) = r.inputs
    assert inp["path"].endswith("z2.json") and len(inp["sha256"]) == 64


def test_nested_inputs_are_recorded():
    r = execute(["validate", "monad", d("ts-monad.json")])
    assert [Path(i["path"]).name for i in r.inputs] == ["ts-monad.json", "z2.json"]


@pytest.mark.parametrize("argv", [a for a, _ in CASES[:20]])
def test_reports_deterministic_modulo_timing(argv):
    assert execute(argv).to_json(with_timing=False) == execute(argv).to_json(with_timing=False)


def test_parallel_jobs_do_not_change_reports():
    a = execute(["enumerate", "monads", "fixture:REL2"]).to_json(with_timing=False)
    b = execute(["enumerate", "monads", "fixture:REL2", "--jobs", "3"]).to_json(with_timing=False)
    assert a == b


def test_max_search_forwarded(capsys):
    assert run(["enumerate", "monads", "fixture:REL2", "--max-search", "50"]) == 2
    assert "SearchSpaceTooLarge" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [[], ["validate"], ["validate", "nothing", "x"], ["check", "th1", "--monad", "fixture:TS"]])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv) == 2
    assert "usage" in capsys.readouterr().err


def test_golden_check_passes_and_detects_drift(tmp_path, capsys):
    assert run(["oracle", "regen-golden", "--check"]) == 0
    assert run(["oracle", "regen-golden", "--golden-dir", str(tmp_path)]) == 0
    p = tmp_path / "rel2_monads.json"
    assert p.exists()
    p.write_text("{}\n", encoding="utf-8")
    assert run(["oracle", "regen-golden", "--check", "--golden-dir", str(tmp_path)]) == 1
    assert run(["enumerate", "monads", "fixture:REL2", "--golden-dir", str(tmp_path)]) == 1
    capsys.readouterr()


def test_inline_json_category(capsys):
    doc = json.loads((DATA / "z2.json").read_text())
    assert run(["validate", "category", json.dumps(doc)]) == 0
    capsys.readouterr()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dagfem", "check", "frobenius", d("ts-monad.json")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"] == {"frobenius": True}
