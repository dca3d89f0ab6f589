"""Command-line front end.  Requests and replies are JSON lines on stdin/stdout."""

import argparse
import json
import random
import sys
import time

from .counting import OpCounter
from .errors import LinPolyError
from .fastmul import MatBackend, sp_mul_fast, use_backend
from .field import GF
from .gabidulin import (
    ErasureInfo,
    GabidulinCode,
    channel,
    decode_error_erasure,
    decode_errors,
    encode,
)
from .interp import interpolate
from .qtransform import QTContext, qt_forward, qt_inverse
from .skewpoly import SkewPoly, ldiv, mul_naive, rdiv
from .subspace import mpe_general, msp


class BadInput(Exception):
    pass


def _field(args, m=None):
    modulus = json.loads(args.modulus) if args.modulus else None
    return GF(args.q, m or args.m, modulus)


def _poly(F, rec, key, ell=None):
    try:
        coeffs = rec[key]
    except KeyError:
        raise BadInput(f"missing key {key!r}") from None
    if not isinstance(coeffs, dict):
        coeffs = {"coeffs": coeffs, "ell": rec.get("ell", 1)}
    try:
        p = SkewPoly.from_json(F, coeffs)
    except ValueError as exc:
        raise BadInput(str(exc)) from None
    return p if ell is None else SkewPoly(F, p.coeffs, ell)


def _elems(F, rec, key):
    try:
        xs = [int(x) for x in rec[key]]
    except KeyError:
        raise BadInput(f"missing key {key!r}") from None
    for x in xs:
        if not F.contains(x):
            raise BadInput(f"{x} is not an element of the field")
    return xs


def _records(stream):
    for line in stream:
        line = line.strip()
        if not line:
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise BadInput(f"bad JSON: {exc}") from None
        if not isinstance(rec, dict):
            raise BadInput("each line must be a JSON object")
        yield rec


def _emit(obj, out):
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _backend(args, counter=None):
    return MatBackend(args.backend, args.threshold, counter)


# -- field ----------------------------------------------------------------------


def cmd_field(args, inp, out):
    F = _field(args)
    reply = F.to_json()
    if args.action in ("normal", "dual"):
        reply["normal"] = F.normal_element
        reply["basis"] = F.normal_basis()
    if args.action == "dual":
        reply["dual"] = F.dual_element
        reply["dual_basis"] = F.conjugates(F.dual_element)
    _emit(reply, out)


# -- poly -----------------------------------------------------------------------


def _poly_op(F, args, rec):
    op = args.action
    counter = OpCounter() if args.count_ops else None
    if op in ("mul-naive", "mul-fast"):
        a, b = _poly(F, rec, "a"), _poly(F, rec, "b")
        if op == "mul-naive":
            c = mul_naive(a, b, counter)
        else:
            c = sp_mul_fast(a, b, _backend(args, counter))
        reply = {"c": list(c.coeffs)}
    elif op in ("rdiv", "ldiv"):
        a, b = _poly(F, rec, "a"), _poly(F, rec, "b")
        quo, rem = (rdiv if op == "rdiv" else ldiv)(a, b)
        reply = {"quo": list(quo.coeffs), "rem": list(rem.coeffs)}
    elif op in ("qt", "iqt"):
        ctx = QTContext(F, rec.get("s"), rec.get("beta"))
        a = _poly(F, rec, "a", ell=1)
        res = qt_forward(a, ctx) if op == "qt" else qt_inverse(a, ctx)
        reply = {"c": list(res.coeffs), "beta": ctx.beta}
    elif op == "msp":
        reply = {"c": list(msp(F, _elems(F, rec, "points")).coeffs)}
    elif op == "mpe":
        reply = {"values": mpe_general(_poly(F, rec, "a", ell=1), _elems(F, rec, "points"))}
    elif op == "interp":
        reply = {"c": list(interpolate(F, _elems(F, rec, "x"), _elems(F, rec, "y")).coeffs)}
    else:  # pragma: no cover - argparse restricts choices
        raise BadInput(op)
    if counter is not None:
        reply.update(muls=counter.muls, adds=counter.adds)
    return reply


def cmd_poly(args, inp, out):
    F = _field(args)
    for rec in _records(inp):
        _emit(_poly_op(F, args, rec), out)


# -- gab ------------------------------------------------------------------------


def _result_json(res):
    return {
        "decoded": res.decoded,
        "f": list(res.f.coeffs) if res.decoded else None,
        "error_span": list(res.error_span.coeffs) if res.error_span is not None else None,
        "reason": res.reason,
    }


def cmd_gab(args, inp, out):
    F = _field(args)
    n = args.n or F.m
    code = GabidulinCode(F, n, args.k, json.loads(args.points) if args.points else None)
    for i, rec in enumerate(_records(inp)):
        op = args.action
        if op == "encode":
            reply = {"codeword": encode(code, _poly(F, rec, "f", ell=1))}
        elif op == "decode":
            reply = _result_json(decode_errors(code, _elems(F, rec, "r")))
        elif op == "decode-ee":
            er = ErasureInfo.from_json(rec.get("erasures", {}))
            reply = _result_json(decode_error_erasure(code, _elems(F, rec, "r"), er))
        else:
            word = _elems(F, rec, "codeword")
            seed = rec.get("seed", args.seed + i)
            r, er, e = channel(code, word, rec.get("t", 0), rec.get("rho", 0), rec.get("gamma", 0), seed)
            reply = {"r": r, "erasures": er.to_json(), "e": e}
        _emit(reply, out)


# -- bench ----------------------------------------------------------------------


def _bench_one(args, s, rng):
    target = args.action
    counter = OpCounter()
    backend = _backend(args, counter)
    if target == "mul":
        F = _field(args)
        a, b = SkewPoly.random(F, s, rng), SkewPoly.random(F, s, rng)
        t0 = time.perf_counter_ns()
        if args.backend == "naive" and not args.fast:
            mul_naive(a, b, counter)
        else:
            sp_mul_fast(a, b, backend)
        return counter, time.perf_counter_ns() - t0
    # subspace-type targets need s independent points, so m >= s
    F = _field(args, max(args.m, s))
    if target == "decode":
        code = GabidulinCode(F, s, max(1, s // 2))
        f = SkewPoly.random(F, code.k - 1, rng)
        r, _, _ = channel(code, encode(code, f), code.radius, seed=rng.randrange(1 << 30))
        run = lambda: decode_errors(code, r)
    else:
        pts = F.conjugates(F.normal_element, s)
        a = SkewPoly.random(F, s - 1, rng)
        ys = [F.random(rng) for _ in range(s)]
        run = {
            "msp": lambda: msp(F, pts),
            "mpe": lambda: mpe_general(a, pts),
            "interp": lambda: interpolate(F, pts, ys, checked=False),
        }[target]
    with use_backend(backend):
        t0 = time.perf_counter_ns()
        run()
        return counter, time.perf_counter_ns() - t0


def cmd_bench(args, inp, out):
    try:
        sizes = [int(x) for x in args.sizes.split(",") if x.strip()]
    except ValueError:
        raise BadInput(f"bad --sizes {args.sizes!r}") from None
    if not sizes or min(sizes) < 1:
        raise BadInput("--sizes needs positive integers")
    rng = random.Random(args.seed)
    out.write("s,muls,adds,nanos\n")
    for s in sizes:
        counter, nanos = _bench_one(args, s, rng)
        out.write(f"{s},{counter.muls},{counter.adds},{nanos}\n")


# -- entry point ----------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="linpoly", description="Linearized polynomial toolkit")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--m", type=int, default=8)
    p.add_argument("--modulus", help="JSON list of modulus coefficients, low to high")
    p.add_argument("--backend", choices=["naive", "strassen"], default="naive")
    p.add_argument("--threshold", type=int, default=64, help="Strassen base-case size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count-ops", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("field")
    f.add_argument("action", choices=["make", "normal", "dual"])
    f.set_defaults(func=cmd_field)

    pl = sub.add_parser("poly")
    pl.add_argument("action", choices=["mul-naive", "mul-fast", "rdiv", "ldiv", "qt", "iqt", "msp", "mpe", "interp"])
    pl.set_defaults(func=cmd_poly)

    g = sub.add_parser("gab")
    g.add_argument("action", choices=["encode", "decode", "decode-ee", "channel"])
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--points", help="JSON list of evaluation points (default: normal basis)")
    g.set_defaults(func=cmd_gab)

    b = sub.add_parser("bench")
    b.add_argument("action", choices=["mul", "msp", "mpe", "interp", "decode"])
    b.add_argument("--sizes", default="16,32,64")
    b.add_argument("--fast", action="store_true", help="mul: use the fragment product with the naive backend")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        args.func(args, stdin, stdout)
    except (BadInput, json.JSONDecodeError, KeyError, TypeError) as exc:
        stderr.write(f"error: malformed input: {exc}\n")
        return 2
    except (LinPolyError, ZeroDivisionError, ValueError) as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
