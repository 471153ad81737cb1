import json

import pytest

from relmon.cli import main
from relmon.core import monoid_category, poset_category, presented_to_json


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def z3_json(broken=False):
    data = presented_to_json(monoid_category(range(3), lambda g, f: (g + f) % 3, 0, "Z3"))
    if broken:
        for entry in data["composition"]:
            if entry["first"] == entry["second"] == "1":
                entry["result"] = "0"
    return data


def test_check_builtin_passes(capsys):
    code, out, _ = run(["check", "--builtin", "powerset", "--kappa", "2", "--max-word", "2"],
                       capsys)
    assert code == 0
    assert out.strip().endswith("verdict: PASS")


def test_check_builtin_json(capsys):
    code, out, _ = run(["check", "--builtin", "identity", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "pass"
    assert doc["target"] == "builtin:identity"
    assert all("/" in a["id"] for a in doc["axioms"])


def test_check_broken_category_reports_witness(tmp_path, capsys):
    path = tmp_path / "z3.json"
    path.write_text(json.dumps(z3_json(broken=True)))
    code, out, _ = run(["check", path, "--format", "json"], capsys)
    assert code == 1
    doc = json.loads(out)
    failing = [a for a in doc["axioms"] if a["verdict"] == "fail"]
    assert any(a["id"] == "category:C/associativity" for a in failing)
    w = next(a for a in failing if a["id"].endswith("associativity"))["witness"]["witness"]
    assert set(w) == {"f", "g", "h"}


def test_check_lawful_bundle(tmp_path, capsys):
    chain = presented_to_json(poset_category(range(2), lambda a, b: a <= b, "Chain2"))
    ident = {"src": "C", "dst": "C",
             "on_obj": {o: o for o in chain["objects"]},
             "on_mor": {m["name"]: m["name"] for m in chain["morphisms"]}}
    bundle = {"categories": {"C": chain}, "functors": {"Id": ident}}
    path = tmp_path / "b.json"
    path.write_text(json.dumps(bundle))
    code, out, _ = run(["check", path], capsys)
    assert code == 0, out
    assert "functor:Id" in out


@pytest.mark.parametrize("text", ["{not json", json.dumps({"bogus": 1}),
                                  json.dumps({"objects": ["a"]})])
def test_malformed_input_exits_2(tmp_path, capsys, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    code, _, err = run(["check", path], capsys)
    assert code == 2 and err.startswith("relmon:")


def test_input_errors_exit_2(tmp_path, capsys):
    assert run(["check", "--builtin", "nope"], capsys)[0] == 2
    assert run(["check", "--builtin", "vecspace", "--semiring", "q7"], capsys)[0] == 2
    assert run(["check", "--builtin", "powerset", "--kappa", "0"], capsys)[0] == 2
    assert run(["check"], capsys)[0] == 2
    assert run(["check", tmp_path / "missing.json"], capsys)[0] == 2


def test_unlawful_semiring_file_exits_2(tmp_path, capsys):
    path = tmp_path / "r.json"
    # max for addition, xor for multiplication: xor does not distribute over max
    table = {"name": "maxxor", "carrier": [0, 1], "zero": 0, "one": 1,
             "add": [[a, b, max(a, b)] for a in (0, 1) for b in (0, 1)],
             "mul": [[a, b, a ^ b] for a in (0, 1) for b in (0, 1)]}
    path.write_text(json.dumps(table))
    code, _, err = run(["check", "--builtin", "vecspace", "--semiring", path], capsys)
    assert code == 2 and "semiring maxxor fails" in err, err


def test_report_round_trip(tmp_path, capsys):
    path = tmp_path / "z3.json"
    path.write_text(json.dumps(z3_json(broken=True)))
    rep = tmp_path / "rep.json"
    assert run(["check", path, "--format", "json", "--out", rep], capsys)[0] == 1
    code, out, _ = run(["report", rep], capsys)
    assert code == 1
    assert "[FAIL] associativity" in out and "witness" in out
    code, out, _ = run(["report", rep, "--format", "json"], capsys)
    assert json.loads(out) == json.loads(rep.read_text())
    bad = tmp_path / "notareport.json"
    bad.write_text("[]")
    assert run(["report", bad], capsys)[0] == 2


def test_convert_round_trip(tmp_path, capsys):
    flags = ["--kappa", "2", "--max-word", "2"]
    first = tmp_path / "ext.json"
    code, _, _ = run(["convert", "d-to-kleisli", "--builtin", "freemonoid-powerset",
                      "--verify", "--out", first, *flags], capsys)
    assert code == 0
    back = tmp_path / "d.json"
    code, _, err = run(["convert", "kleisli-to-d", first, "--verify", "--out", back, *flags],
                       capsys)
    assert code == 0, err
    a, b = json.loads(first.read_text()), json.loads(back.read_text())
    assert b["steps"][-1] == "kleisli-to-d"
    assert b["tables"]["d"] == a["tables"]["d"]


def test_convert_wrong_kind_exits_2(capsys):
    code, _, err = run(["convert", "lift-to-d", "--builtin", "freemonoid-powerset",
                        "--kappa", "2", "--max-word", "2"], capsys)
    assert code == 2


def test_export_kleisli(tmp_path, capsys):
    out = tmp_path / "kl.json"
    code, _, _ = run(["export", "kleisli", "--builtin", "vecspace", "--max-dim", "2",
                      "--verify", "--out", out], capsys)
    assert code == 0
    data = json.loads(out.read_text())
    assert len(data["objects"]) == 3
    assert len(data["morphisms"]) == sum(2 ** (n * m) for n in range(3) for m in range(3))
    assert run(["check", out], capsys)[0] == 0


def test_export_too_large_exits_2(capsys):
    code, _, err = run(["export", "kleisli", "--builtin", "vecspace", "--semiring", "z3"], capsys)
    assert code == 2
    assert "estimated size 729" in err


def test_enumeration_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("RELMON_MAX_ENUM", "10")
    code, _, err = run(["export", "em", "--builtin", "vecspace", "--max-dim", "2"], capsys)
    assert code == 2
    assert "resource limit" in err
