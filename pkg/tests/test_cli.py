from __future__ import annotations

import json
import subprocess
import sys

import pytest

from thrfix.cli import BUILTINS, main, parse_ring_expression, ring_from_spec, ring_to_spec
from thrfix.errors import InputError
from thrfix.ring_inv import cyclic_ring, finite_field, integers, matrix_ring, truncated_polynomial


def write(tmp_path, name, R):
    p = tmp_path / name
    p.write_text(json.dumps(ring_to_spec(R)), encoding="utf-8")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_f5(tmp_path, capsys):
    f = write(tmp_path, "f5.json", finite_field(5))
    code, out, _ = run(capsys, "compute", f)
    assert code == 0
    assert "invariant_factors: []" in out


def test_compute_integers(tmp_path, capsys):
    f = write(tmp_path, "z.json", integers())
    code, out, _ = run(capsys, "compute", f)
    assert code == 0
    assert "invariant_factors: [2]" in out
    assert "skipped: enumerate" in out


def test_compute_methods_and_witnesses(tmp_path, capsys):
    f = write(tmp_path, "a.json", truncated_polynomial(cyclic_ring(2), 2))
    for method in ("linear", "enumerate", "coequalizer", "all"):
        code, out, _ = run(capsys, "compute", f, "--method", method, "--witness")
        assert code == 0
        assert "invariant_factors: [2, 2, 2, 2]" in out
        assert out.count(" ⊗ ") == 4


def test_json_is_deterministic(tmp_path, capsys):
    f = write(tmp_path, "m.json", matrix_ring(cyclic_ring(2), 2))
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "compute", f, "--json", "--witness")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    data = json.loads(outs[0])
    assert data["invariant_factors"] == [2]
    assert data["cross_check"]["agree"] is True
    assert list(data) == sorted(data)


def test_exit_1_on_invalid_ring(tmp_path, capsys):
    spec = ring_to_spec(cyclic_ring(4))
    spec["involution"] = [[3]]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "validate", str(p))
    assert code == 1
    assert "involution_unit" in out
    code, _, err = run(capsys, "compute", str(p))
    assert code == 1
    assert "invalid ring" in err


def test_exit_1_on_shape_mismatch(tmp_path, capsys):
    spec = ring_to_spec(cyclic_ring(4))
    spec["unit"] = [1, 0]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(spec))
    assert run(capsys, "validate", str(p))[0] == 1


def test_exit_2_on_unsupported_input(tmp_path, capsys):
    z = write(tmp_path, "z.json", integers())
    assert run(capsys, "compute", z, "--method", "enumerate")[0] == 2
    m = write(tmp_path, "m.json", matrix_ring(cyclic_ring(2), 2))
    assert run(capsys, "witt", m)[0] == 2
    assert run(capsys, "witt", z)[0] == 2
    big = write(tmp_path, "big.json", truncated_polynomial(cyclic_ring(2), 4))
    assert run(capsys, "compute", big, "--method", "enumerate", "--max-enum", "8")[0] == 2
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run(capsys, "compute", str(junk))[0] == 2
    missing = tmp_path / "missing.json"
    missing.write_text(json.dumps({"name": "x"}))
    assert run(capsys, "validate", str(missing))[0] == 2
    assert run(capsys, "compute", str(tmp_path / "nope.json"))[0] == 2
    assert run(capsys, "builtin", "octonions")[0] == 2


def test_env_cap(tmp_path, capsys, monkeypatch):
    f = write(tmp_path, "a.json", truncated_polynomial(cyclic_ring(2), 3))
    monkeypatch.setenv("THRFIX_MAX_ENUM", "4")
    assert run(capsys, "compute", f, "--method", "enumerate")[0] == 2
    code, out, _ = run(capsys, "compute", f)
    assert code == 0 and "skipped: enumerate" in out


def test_exit_3_on_cross_check_failure(tmp_path, capsys, monkeypatch):
    import thrfix.oracle as oracle
    from dataclasses import replace

    real = oracle.coequalizer_pi0
    monkeypatch.setattr(oracle, "coequalizer_pi0", lambda R: replace(real(R), invariant_factors=(2, 2)))
    f = write(tmp_path, "f2.json", cyclic_ring(2))
    code, _, err = run(capsys, "compute", f)
    assert code == 3
    assert "cross-check failure" in err


def test_oracle_verb(tmp_path, capsys):
    f = write(tmp_path, "a.json", truncated_polynomial(cyclic_ring(2), 3))
    code, out, _ = run(capsys, "oracle", f, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["H1"] == data["Q"] == [2, 2, 2]
    assert all(data["checks"].values())
    z = write(tmp_path, "z.json", integers())
    code, out, _ = run(capsys, "oracle", z)
    assert code == 0 and "brute_force_dim_I: skipped" in out


def test_witt_verb(tmp_path, capsys):
    f = write(tmp_path, "f3.json", finite_field(3))
    code, out, _ = run(capsys, "witt", f)
    assert code == 0
    assert "witt_factors: [3, 3]" in out
    assert "geomfix_factors: []" in out
    assert "isomorphic_as_groups: false" in out


def test_defect_verb(tmp_path, capsys):
    a = write(tmp_path, "a.json", finite_field(3))
    code, out, _ = run(capsys, "defect", a, a)
    assert code == 0
    assert "injective: true" in out and "surjective: true" in out
    x = write(tmp_path, "x.json", truncated_polynomial(cyclic_ring(2), 3))
    code, out, _ = run(capsys, "defect", x, x, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["source"] == [2] * 10
    assert data["kernel_witnesses"] == []


def test_builtin_round_trip(tmp_path, capsys):
    exprs = [
        ("cyclic", ["4"]), ("cyclic", ["0"]), ("finite_field", ["3", "2", "frobenius_half"]),
        ("trunc_poly", ["finite_field(2)", "3"]), ("matrix", ["cyclic(2)", "2"]),
        ("group_ring", ["cyclic(2)", "C3"]), ("group_ring", ["cyclic(2)", "S3"]),
        ("group_ring", ["cyclic(3)", "V4"]), ("product", ["cyclic(2)", "cyclic(3)"]),
        ("gaussian", []), ("quaternion", ["2"]), ("matrix(product(cyclic(2), gaussian), 2)", []),
    ]
    for i, (family, params) in enumerate(exprs):
        code, out, _ = run(capsys, "builtin", family, *params)
        assert code == 0, (family, params)
        p = tmp_path / f"r{i}.json"
        p.write_text(out)
        assert run(capsys, "validate", str(p))[0] == 0
    assert set(BUILTINS) == {"cyclic", "finite_field", "trunc_poly", "matrix", "group_ring",
                             "product", "gaussian", "quaternion"}


def test_builtin_name_override(capsys):
    code, out, _ = run(capsys, "builtin", "cyclic", "4", "--name", "mine")
    assert json.loads(out)["name"] == "mine"


def test_expression_errors():
    with pytest.raises(InputError):
        parse_ring_expression("cyclic(")
    with pytest.raises(InputError):
        parse_ring_expression("__import__('os')")
    with pytest.raises(InputError):
        parse_ring_expression("4")
    with pytest.raises(InputError):
        parse_ring_expression("group_ring(cyclic(2), D4)")


def test_spec_fields_are_exact():
    spec = ring_to_spec(cyclic_ring(4))
    assert sorted(spec) == sorted(["name", "orders", "unit", "mul", "involution", "commutative"])
    spec["labels"] = ["1"]
    with pytest.raises(InputError):
        ring_from_spec(spec)


def test_big_integers_as_strings():
    n = 2 ** 70 + 1
    R = cyclic_ring(n)
    spec = ring_to_spec(R)
    assert spec["orders"] == [str(n)]
    text = json.dumps(spec)
    back = ring_from_spec(json.loads(text))
    assert back.orders == (n,)


def test_batch_sorted(tmp_path, capsys):
    d = tmp_path / "rings"
    d.mkdir()
    write(d, "b.json", integers())
    write(d, "a.json", finite_field(5))
    write(d, "c.json", cyclic_ring(2))
    (d / "notes.txt").write_text("ignored")
    code, out, _ = run(capsys, "compute", "--batch", str(d), "--json")
    assert code == 0
    data = json.loads(out)
    assert [r["file"] for r in data] == ["a.json", "b.json", "c.json"]
    assert [r["invariant_factors"] for r in data] == [[], [2], [2]]
    code, out, _ = run(capsys, "compute", "--batch", str(d))
    assert out.index("== a.json") < out.index("== b.json") < out.index("== c.json")


def test_batch_reports_worst_exit(tmp_path, capsys):
    d = tmp_path / "rings"
    d.mkdir()
    write(d, "a.json", finite_field(5))
    spec = ring_to_spec(cyclic_ring(4))
    spec["involution"] = [[3]]
    (d / "b.json").write_text(json.dumps(spec))
    code, out, _ = run(capsys, "compute", "--batch", str(d), "--json")
    assert code == 1
    data = json.loads(out)
    assert data[0]["invariant_factors"] == [] and data[1]["exit"] == 1


def test_module_entry_point(tmp_path):
    f = write(tmp_path, "f2.json", cyclic_ring(2))
    proc = subprocess.run([sys.executable, "-m", "thrfix", "compute", f],
                          capture_output=True, text=True, encoding="utf-8")
    assert proc.returncode == 0
    assert "invariant_factors: [2]" in proc.stdout
