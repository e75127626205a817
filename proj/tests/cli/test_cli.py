"""End-to-end checks of the hyperspec binary: exit codes, outputs, determinism, schema."""
import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
BIN = os.environ.get("HYPERSPEC_BIN", str(ROOT / "build" / "hyperspec"))
SAMPLES = ROOT / "samples"
SCHEMA = json.loads((ROOT / "docs" / "report.schema.json").read_text())


def run(*args, stdin=None, env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    return subprocess.run([BIN, *map(str, args)], input=stdin, capture_output=True, text=True, env=full_env,
                          timeout=120)


def report(*args, code=0, **kw):
    proc = run(*args, "--json", **kw)
    assert proc.returncode == code, proc.stderr
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, SCHEMA)
    return doc


def sample(name):
    return SAMPLES / name


def test_info_example():
    doc = report("info", sample("example.txt"))
    r = doc["results"]
    assert r["mce"] == 3
    assert r["max_degree"] == 2
    assert r["component_count"] == 2
    assert r["degrees"] == [2, 1, 1, 1, 1]


def test_info_table_regular():
    proc = run("info", sample("regular3.txt"))
    assert proc.returncode == 0
    assert "regular k=3" in proc.stdout


def test_info_stdin_and_json_input():
    text = sample("example.txt").read_text()
    a = report("info", "-", stdin=text)
    b = report("info", sample("example.json"))
    assert a["input_digest"] == b["input_digest"]


def test_parse_errors_exit_2():
    doc = report("info", sample("empty_edge.json"), code=2)
    assert doc["error"]["code"] == "EmptyEdge"
    proc = run("info", "-", stdin="3\n1 2\n2 1\n")
    assert proc.returncode == 2
    assert "DuplicateEdge" in proc.stderr
    assert run("info", "/nonexistent/file.txt").returncode == 2
    assert run("eig", sample("example.txt"), "--type", "q").returncode == 2


def test_tensor_exact_entries():
    proc = run("tensor", sample("example.txt"), "--exact")
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert len(lines) == 13
    assert "1 1 1 1" in lines
    assert "2 3 3 1/3" in lines
    assert "1 4 5 1/2" in lines


def test_tensor_higher_order():
    doc = report("tensor", sample("example.txt"), "--order", "4", "--exact")
    assert "2 2 2 3 1/7" in doc["results"]["entries"]


def test_tensor_preconditions_exit_3():
    doc = report("tensor", "-", "--kind", "normalized-rw", stdin="3\n1 2\n", code=3)
    assert doc["error"]["code"] == "IsolatedVertex"
    assert report("tensor", sample("example.txt"), "--order", "2", code=3)["error"]["code"] == "OrderTooSmall"
    proc = run("tensor", sample("example.txt"), env={"HYPERSPEC_CAP": "5"})
    assert proc.returncode == 3
    assert "CapExceeded" in proc.stderr


def test_eig_regular():
    doc = report("eig", sample("regular3.txt"), "--type", "h")
    assert abs(doc["results"]["pairs"][0]["lambda"] - 3.0) < 1e-10
    z = report("eig", sample("regular3.txt"), "--type", "z")
    assert abs(z["results"]["pairs"][0]["lambda"] - 3 ** 0.5) < 1e-6
    assert all(b["pass"] for b in z["results"]["bounds"])


def test_eig_laplacian_z_has_zero():
    doc = report("eig", sample("example.txt"), "--kind", "laplacian", "--type", "z")
    assert any(abs(p["lambda"]) < 1e-8 for p in doc["results"]["pairs"])


def test_eig_not_converged_exit_4():
    doc = report("eig", sample("example.txt"), "--type", "h", code=4)
    assert doc["results"]["pairs"]
    assert doc["warnings"]
    ok = report("eig", sample("example.txt"), "--type", "h", "--perturbation", "1e-12")
    assert ok["results"]["pairs"][0]["residual"] < 1e-8


@pytest.mark.parametrize("args", [
    ("eig", "example.txt", "--type", "z", "--seed", "5", "--restarts", "7"),
    ("eig", "regular3.txt", "--kind", "signless", "--type", "z", "--seed", "3"),
    ("connectivity", "disconnected.txt", "--seed", "11", "--restarts", "3"),
])
def test_seed_determinism(args):
    cmd, name, *rest = args
    a = report(cmd, sample(name), *rest)
    b = report(cmd, sample(name), *rest)
    assert json.dumps(a["results"], sort_keys=True) == json.dumps(b["results"], sort_keys=True)


def test_connectivity_verdicts():
    doc = report("connectivity", sample("disconnected.txt"))
    r = doc["results"]
    assert r["alpha_g"] <= 1e-8
    assert r["component_count"] == 2
    assert r["verdicts_agree"]
    single = report("connectivity", sample("edge123.txt"))["results"]
    assert single["alpha_g"] > 0.01
    assert single["verdicts_agree"]


def test_connectivity_single_vertex():
    doc = report("connectivity", "-", stdin="1\n1\n")
    assert doc["results"]["alpha_g"] is None
    assert doc["warnings"]


def test_product(tmp_path):
    out = tmp_path / "p.txt"
    doc = report("product", sample("edge12.txt"), sample("edge123.txt"), "-o", out)
    r = doc["results"]
    assert (r["n"], r["edge_count"]) == (6, 5)
    assert [1, 2, 2] in r["index_map"]
    assert any("cardinality" in w for w in doc["warnings"])
    assert out.read_text().splitlines()[0] == "6"
    back = report("info", out)
    assert back["results"]["edge_count"] == 5


def test_product_edgeless_factor(tmp_path):
    edgeless = tmp_path / "none.txt"
    edgeless.write_text("2\n")
    out = tmp_path / "p.json"
    doc = report("product", sample("edge123.txt"), edgeless, "-o", out)
    assert doc["results"]["edge_count"] == 2
    assert json.loads(out.read_text())["n"] == 6


def test_charpoly():
    doc = report("charpoly", sample("edge12.txt"), "--order", "3", "--kind", "normalized-rw")
    r = doc["results"]
    assert r["degree"] == 4
    assert r["trace"] == {"expected": "4", "actual": "4", "pass": True}
    proc = run("charpoly", sample("edge12.txt"))
    assert proc.returncode == 0
    assert "λ^2 - 1" in proc.stdout
    assert report("charpoly", sample("edge123.txt"), code=3)["error"]["code"] == "DimensionNot2"


def test_report_file_and_stdout_table(tmp_path):
    out = tmp_path / "r.json"
    proc = run("info", sample("example.txt"), "-o", out)
    assert proc.returncode == 0
    assert not proc.stdout.lstrip().startswith("{")
    jsonschema.validate(json.loads(out.read_text()), SCHEMA)
