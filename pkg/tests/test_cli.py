import json

from click.testing import CliRunner

from qcluster.cli import main
from qcluster.quiver import quiver_from_dict, quiver_to_dict


def run(args, **kw):
    return CliRunner().invoke(main, args, **kw)


def test_build_disk_counts(tmp_path):
    out = tmp_path / "seed.json"
    res = run(["build", "--type", "A3", "--word", "123121", "--shape", "disk",
               "--out", str(out)])
    assert res.exit_code == 0, res.output
    assert "18 vertices" in res.output and "12 mutable" in res.output
    data = json.loads(out.read_text())
    assert len(data["vertices"]) == 18


def test_build_triangle_json():
    res = run(["build", "--type", "A3", "--word", "123121",
               "--shape", "triangle", "--json"])
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert len(data["vertices"]) == 12


def test_build_invalid_word():
    res = run(["build", "--type", "A3", "--word", "121", "--shape", "disk"])
    assert res.exit_code == 1
    err = json.loads(res.output or res.stderr)
    assert err["error"]["type"] == "NotLongest"


def test_mutate_golden4(tmp_path, golden4):
    seed = tmp_path / "fig1.json"
    seed.write_text(json.dumps(quiver_to_dict(golden4)))
    res = run(["mutate", "--seed", str(seed), "--at", "b", "--json"])
    assert res.exit_code == 0
    data = json.loads(res.output)
    out = quiver_from_dict(data)
    assert out.eps2_entry("c", "d") == 1  # eps'_cd = 1/2, the golden value
    res2 = run(["mutate", "--seed", str(seed), "--at", "c"])
    assert res2.exit_code == 1
    err = json.loads(res2.output or res2.stderr)
    assert err["error"]["type"] == "FrozenMutation"


def test_verify_a1():
    res = run(["verify", "--type", "A1", "--word", "1", "--quotient"])
    assert res.exit_code == 0
    assert "relation cases pass" in res.output


def test_verify_json_a2():
    res = run(["verify", "--type", "A2", "--word", "121", "--json"])
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["ok"] and len(report["cases"]) > 20


def test_transport_roundtrip(tmp_path, golden4):
    seed = tmp_path / "seed.json"
    seed.write_text(json.dumps(quiver_to_dict(golden4)))
    element = {"seed": "", "terms": [{"a": {"c": 1}, "coef": "1"}]}
    epath = tmp_path / "el.json"
    epath.write_text(json.dumps(element))
    res = run(["transport", "--seed", str(seed), "--element", str(epath),
               "--path", "b,b", "--json"])
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["terms"] == element["terms"]


def test_trop_commands(tmp_path, golden4):
    seed = tmp_path / "seed.json"
    seed.write_text(json.dumps(quiver_to_dict(golden4)))
    res = run(["trop", "mutate", "--seed", str(seed),
               "--point", json.dumps({"b": 1}), "--at", "b", "--json"])
    assert res.exit_code == 0
    assert json.loads(res.output) == {"b": -1}

    res2 = run(["trop", "count", "--type", "A1", "--word", "1",
                "--lam", "[[1],[1]]"])
    assert res2.exit_code == 0
    assert res2.output.strip() == "3"

    datum = {"word": [1], "a": [2], "lam": [5], "c": [1], "mu": [1]}
    res3 = run(["trop", "normal-form", "--type", "A1",
                "--datum", json.dumps(datum), "--json"])
    assert res3.exit_code == 0
    out = json.loads(res3.output)
    assert out["mu"] == [0] and out["lam"] == [4]


def test_cli_outputs_deterministic(tmp_path):
    a = run(["build", "--type", "A2", "--word", "121", "--json"]).output
    b = run(["build", "--type", "A2", "--word", "121", "--json"]).output
    assert a == b


def test_pbw_command():
    res = run(["pbw", "--type", "A2", "--word", "121", "--json"])
    assert res.exit_code == 0
    rows = json.loads(res.output)["pbw"]
    assert len(rows) == 3
    assert all(r["positive"] for r in rows)
    assert rows[0]["root"] == [1, 0]


def test_braid_command():
    res = run(["braid", "--type", "A2", "--word", "121",
               "--seq", "1,2,1", "--gen", "E1", "--json"])
    assert res.exit_code == 0
    a = json.loads(res.output)
    res2 = run(["braid", "--type", "A2", "--word", "121",
                "--seq", "2,1,2", "--gen", "E1", "--json"])
    b = json.loads(res2.output)
    assert a == b  # braid relation as a torus identity
