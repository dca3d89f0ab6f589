import io
import json
import subprocess
import sys

import pytest

from linpoly.cli import main


def run(argv, lines=()):
    out, err = io.StringIO(), io.StringIO()
    stdin = io.StringIO("".join(json.dumps(x) + "\n" if not isinstance(x, str) else x for x in lines))
    code = main(argv, stdin, out, err)
    return code, out.getvalue(), err.getvalue()


def replies(out):
    return [json.loads(line) for line in out.splitlines()]


def test_field_commands():
    code, out, _ = run(["--q", "2", "--m", "2", "field", "make"])
    assert code == 0 and replies(out)[0]["modulus"] == [1, 1, 1]
    code, out, _ = run(["--m", "4", "field", "dual"])
    rep = replies(out)[0]
    assert len(rep["basis"]) == 4 and len(rep["dual_basis"]) == 4


def test_worked_f4_product_and_backends_agree():
    req = {"a": [0, 2], "b": [2]}
    _, naive, _ = run(["--q", "2", "--m", "2", "poly", "mul-naive"], [req])
    _, fast, _ = run(["--q", "2", "--m", "2", "poly", "mul-fast"], [req])
    assert replies(naive) == [{"c": [0, 1]}]
    assert naive == fast


def test_backends_agree_on_larger_inputs():
    reqs = [{"a": list(range(1, 40)), "b": list(range(200, 256)), "ell": e} for e in (1, 3)]
    outs = [run(["poly", op], reqs)[1] for op in ("mul-naive", "mul-fast")]
    outs.append(run(["--backend", "strassen", "--threshold", "2", "poly", "mul-fast"], reqs)[1])
    assert outs[0] == outs[1] == outs[2]


def test_poly_pipeline():
    _, out, _ = run(["poly", "msp"], [{"points": [1, 2, 4]}])
    M = replies(out)[0]["c"]
    assert len(M) == 4 and M[-1] == 1
    _, out, _ = run(["poly", "mpe"], [{"a": M, "points": [3, 5, 7, 6]}])
    assert replies(out)[0]["values"] == [0, 0, 0, 0]
    _, out, _ = run(["poly", "interp"], [{"x": [1, 2, 4], "y": [1, 2, 4]}])
    assert replies(out)[0]["c"] == [1]
    _, out, _ = run(["poly", "rdiv"], [{"a": [1, 2, 3], "b": [5, 1]}])
    rep = replies(out)[0]
    assert set(rep) == {"quo", "rem"}
    _, fwd, _ = run(["poly", "qt"], [{"a": [9, 8, 7]}])
    qa = replies(fwd)[0]
    _, back, _ = run(["poly", "iqt"], [{"a": qa["c"], "beta": qa["beta"]}])
    assert replies(back)[0]["c"] == [9, 8, 7]


def test_count_ops_flag():
    _, out, _ = run(["--count-ops", "poly", "mul-naive"], [{"a": [1, 1], "b": [1, 1, 1]}])
    rep = replies(out)[0]
    assert rep["muls"] == 6 and rep["adds"] == 2


def test_gab_round_trip():
    _, out, _ = run(["--m", "6", "gab", "encode", "--k", "2"], [{"f": [3, 5]}])
    cw = replies(out)[0]["codeword"]
    _, out, _ = run(["--m", "6", "gab", "decode", "--k", "2"], [{"r": cw}])
    assert replies(out)[0] == {"decoded": True, "f": [3, 5], "error_span": [1], "reason": ""}
    _, out, _ = run(["--m", "6", "gab", "channel", "--k", "2"], [{"codeword": cw, "t": 1, "rho": 1, "gamma": 1}])
    ch = replies(out)[0]
    _, out, _ = run(["--m", "6", "gab", "decode-ee", "--k", "2"], [{"r": ch["r"], "erasures": ch["erasures"]}])
    assert replies(out)[0]["f"] == [3, 5]


def test_bench_csv_shape_and_monotone():
    code, out, _ = run(["bench", "mul", "--sizes", "16,32,64"])
    rows = out.strip().splitlines()
    assert code == 0 and rows[0] == "s,muls,adds,nanos" and len(rows) == 4
    muls = [int(r.split(",")[1]) for r in rows[1:]]
    assert muls == sorted(muls) and muls[0] == 17 * 17


@pytest.mark.parametrize("target", ["msp", "mpe", "interp", "decode"])
def test_bench_targets(target):
    code, out, _ = run(["bench", target, "--sizes", "4,8"])
    assert code == 0 and len(out.strip().splitlines()) == 3


def test_exit_codes():
    code, _, err = run(["poly", "msp"], ["not json\n"])
    assert code == 2 and err.startswith("error:")
    code, _, _ = run(["poly", "msp"], [{"wrong": 1}])
    assert code == 2
    code, _, _ = run(["poly", "mul-naive"], [{"a": [999], "b": [1]}])
    assert code == 2
    code, _, err = run(["poly", "rdiv"], [{"a": [1], "b": []}])
    assert code == 1 and "DivisionByZeroPoly" in err
    code, _, _ = run(["--q", "4", "field", "make"])
    assert code == 1
    code, _, _ = run(["bench", "mul", "--sizes", "x"])
    assert code == 2


def test_console_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "linpoly.cli", "--q", "2", "--m", "2", "poly", "mul-naive"],
        input='{"a":[0,2],"b":[2]}\n', capture_output=True, text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"c": [0, 1]}
