"""``cliffordinv`` command line.

Every subcommand prints one JSON document (or ``key: value`` text) and exits
with 0 on success, 1 when a verification fails, 2 on bad usage, 3 for an
unknown code and 4 when a computation would exceed its budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from .errors import BudgetError, NotClaimedError, NotSelfDualError, UnknownCodeError, UnsupportedError
from .exact import dumps, to_jsonable, to_plain

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_UNKNOWN_CODE = 3
EXIT_BUDGET = 4

KINDS = ("real", "complex", "odd_p", "extraspecial", "extraspecial_p", "parabolic")
VARIANTS = ("real", "complex", "odd_p")


class Result:
    """Payload plus the verdict that decides the exit code."""

    def __init__(self, payload, ok=True, lines=None):
        self.payload = payload
        self.ok = ok
        self.lines = lines


# ---------------------------------------------------------------------------
# helpers


def _spec(args):
    from .groups import GroupKind, GroupSpec

    p = args.p if args.p is not None else (3 if args.kind in ("odd_p", "extraspecial_p") else 2)
    return GroupSpec(GroupKind(args.kind), args.m, p)


def _code(args):
    from .codes import named_code

    return named_code(args.code, getattr(args, "p", None))


def _code_json(code):
    return {
        "p": code.p,
        "length": code.length,
        "dim": code.dim,
        "generators": code.to_strings(),
        "weight_distribution": list(code.weight_distribution()),
    }


def _strip_seconds(obj):
    if isinstance(obj, dict):
        return {k: _strip_seconds(v) for k, v in obj.items() if k != "seconds"}
    if isinstance(obj, list):
        return [_strip_seconds(v) for v in obj]
    return obj


def _text(payload, prefix=""):
    lines = []
    for k in sorted(payload):
        v = payload[k]
        if isinstance(v, dict) and "text" in v:
            lines.append(f"{prefix}{k}: {v['text']}")
        elif isinstance(v, dict) and v:
            lines.extend(_text(v, f"{prefix}{k}."))
        else:
            s = v if isinstance(v, str) else json.dumps(v, sort_keys=True, ensure_ascii=False)
            lines.append(f"{prefix}{k}: {s}")
    return lines


# ---------------------------------------------------------------------------
# group


def cmd_group(args):
    from .groups import closure_for, generators_for, group_closure, molien_series, predicted_order

    spec = _spec(args)
    out = {"group": spec.describe()}
    if args.action == "closure":
        gens = generators_for(spec)
        out["generators"] = gens
        out["order"] = group_closure(gens, max_order=args.max_order, spec=spec, store=False).order
    elif args.action == "order":
        out["order"] = group_closure(generators_for(spec), max_order=args.max_order, spec=spec, store=False).order
    else:
        out["molien"] = molien_series(closure_for(spec, max_order=args.max_order), args.order)
        out["order"] = len(closure_for(spec, max_order=args.max_order))
    try:
        out["predicted_order"] = predicted_order(spec)
    except (UnsupportedError, NotImplementedError):
        pass
    ok = out.get("predicted_order", out["order"]) == out["order"]
    return Result(out, ok)


# ---------------------------------------------------------------------------
# codes and enumerators


def cmd_codes(args):
    from .codes import enumerate_self_dual, enumerate_self_orthogonal

    p = args.p or 2
    if args.self_orthogonal:
        classes = enumerate_self_orthogonal(args.length, p=p, contain_one=not args.any)
    else:
        classes = enumerate_self_dual(args.length, doubly_even=args.doubly_even, p=p)
    out = {
        "length": args.length,
        "p": p,
        "doubly_even": args.doubly_even,
        "self_orthogonal": args.self_orthogonal,
        "count": len(classes),
        "classes": [_code_json(cc.representative) for cc in classes],
    }
    return Result(out)


def cmd_cwe(args):
    from .enumerators import cwe, variable_names

    code = _code(args)
    poly = cwe(code, args.genus)
    return Result(
        {
            "code": _code_json(code),
            "genus": args.genus,
            "variables": variable_names(args.genus, code.p),
            "cwe": {**to_jsonable(poly), "text": poly.to_text(variable_names(args.genus, code.p))},
        }
    )


def cmd_hm(args):
    from .codes import hamming_code_8
    from .enumerators import cwe, h_m_explicit, h_m_term_count, variable_names

    h = h_m_explicit(args.genus)
    names = variable_names(args.genus)
    out = {
        "genus": args.genus,
        "h_m": {**to_jsonable(h), "text": h.to_text(names)},
        "term_count": h_m_term_count(args.genus),
        "expected_term_count": 2 ** (4 * args.genus),
    }
    ok = out["term_count"] == out["expected_term_count"]
    if args.genus <= 3:
        out["equals_cwe_H8"] = h == cwe(hamming_code_8(), args.genus)
        ok = ok and out["equals_cwe_H8"]
    return Result(out, ok)


def cmd_shadow(args):
    from .codes import shadow, shadow_vectors
    from .enumerators import hamming_we, w_quad
    from .exact import Polynomial, zeta

    code = _code(args)
    v0, _ = shadow_vectors(code)
    W = w_quad(code, v0)
    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    X = [Polynomial.variable(4, k) for k in range(4)]
    i = zeta(4)
    ident1 = W.substitute([x, y, x, y]) == hamming_we(code)
    ident2 = W.substitute([X[0], X[1].scale(i), X[2], X[3].scale(-i)]) == W
    S = shadow(code)
    out = {
        "code": _code_json(code),
        "v0": code.word_to_string(v0),
        "hwe": {**to_jsonable(hamming_we(code)), "text": hamming_we(code).to_text(["x", "y"])},
        "shadow_enumerator": {**to_jsonable(S), "text": S.to_text(["x", "y"])},
        "W": {**to_jsonable(W), "text": W.to_text(["x", "y", "z", "w"])},
        "W(x,y,x,y)=hwe": ident1,
        "W(x,iy,z,-iw)=W": ident2,
    }
    return Result(out, ident1 and ident2)


# ---------------------------------------------------------------------------
# verify


def _verify_runge(args):
    from .invariants import verify_runge

    r = verify_runge(args.length, args.genus, args.variant, args.p or (3 if args.variant == "odd_p" else 2))
    return Result(r.as_dict(), r.ok)


def _verify_lemma(args):
    from .invariants import lemma_rhs, verify_averaging_lemma

    code = _code(args)
    ok = verify_averaging_lemma(code, args.genus)
    return Result({"code": _code_json(code), "genus": args.genus, "holds": ok, "rhs": lemma_rhs(code, args.genus)}, ok)


def _verify_theorem(args):
    from .invariants import verify_averaging_theorem

    code = _code(args)
    r = verify_averaging_theorem(code, args.genus, args.variant)
    return Result(r.as_dict(), r.equal)


def _verify_parabolic(args):
    from .invariants import parabolic_basis

    b = parabolic_basis(args.length, args.genus, check_fixed_space=True)
    out = {
        "length": b.N,
        "genus": b.m,
        "size": len(b),
        "rank": b.rank,
        "independent": b.independent,
        "classes": [_code_json(cc.representative) for cc in b.classes],
    }
    return Result(out, b.independent)


def _verify_harmonic(args):
    from .invariants import verify_harmonic

    r = verify_harmonic(args.genus)
    out = {"genus": r.m, "invariant_dims": r.dims, "harmonic_dims": r.harmonic_dims, "f8": r.f8}
    return Result(out, r.ok)


def _verify_tensor(args):
    from .lattices import verify_rational_part, verify_tensor_decomposition

    tensor = verify_tensor_decomposition(args.m)
    control = verify_tensor_decomposition(args.m, perturb=True)
    rational = verify_rational_part(args.m)
    out = {"m": args.m, "tensor_identity": tensor, "perturbed_control": control, "rational_part_is_L_m": rational}
    return Result(out, tensor and rational and not control)


def _verify_automorphism(args):
    from .lattices import verify_automorphism_membership

    ok = verify_automorphism_membership(args.m, args.variant)
    return Result({"m": args.m, "variant": args.variant, "generators_stabilise": ok}, ok)


def _verify_span(args):
    from .groups import closure_for
    from .lattices import verify_span_maximal_order

    spec = _spec(args)
    ok = verify_span_maximal_order(closure_for(spec))
    return Result({"group": spec.describe(), "span_is_maximal_order": ok}, ok)


VERIFIERS = {
    "runge": _verify_runge,
    "averaging-lemma": _verify_lemma,
    "averaging-theorem": _verify_theorem,
    "parabolic-basis": _verify_parabolic,
    "harmonic8": _verify_harmonic,
    "tensor": _verify_tensor,
    "automorphism": _verify_automorphism,
    "span-order": _verify_span,
}


def cmd_verify(args):
    return VERIFIERS[args.check](args)


# ---------------------------------------------------------------------------
# lattices and designs


def cmd_lattice(args):
    from .lattices import balanced_lattice, barnes_wall

    L = balanced_lattice(args.m) if args.balanced else barnes_wall(args.m, args.primed)
    out = {
        "name": L.name,
        "ring": L.ring,
        "rank": L.rank,
        "basis": L.basis,
        "gram": L.gram,
        "gram_text": [[str(x) for x in row] for row in L.gram],
        "det": L.det(),
    }
    if L.ring == "Z" and L.rank <= 8:
        mn, count = L.minimum()
        out["minimum"] = mn
        out["minimal_vectors"] = count
    return Result(out)


def cmd_design(args):
    from .groups import GroupKind, GroupSpec, closure_for
    from .lattices import design_test, find_design_point

    n = 2**args.m
    extra = {}
    if args.point:
        point = [float(x) for x in args.point.split(",")]
        if len(point) != n:
            raise ValueError(f"--point needs {n} coordinates")
        mode = "given"
    elif args.point_mode == "random":
        point = np.random.default_rng(args.seed).normal(size=n).tolist()
        mode = "random"
    elif args.point_mode == "zero":
        x, err = find_design_point(args.m, seed=args.seed)
        point = x.tolist()
        mode = "zero"
        extra["max_abs_invariant"] = float(err)
    else:
        point = [1.0] + [0.0] * (n - 1)
        mode = "basis"
    r = design_test(closure_for(GroupSpec(GroupKind.REAL, args.m)), point, args.max_degree, args.tolerance)
    out = {**r.as_dict(), "point_mode": mode, "seed": args.seed, **extra}
    ok = args.expect_strength is None or r.strength == args.expect_strength
    return Result(out, ok)


def cmd_selftest(args):
    from .acceptance import LONG_ENV, required_passed, run_all

    if args.long:
        os.environ[LONG_ENV] = "1"
    selected = {int(x) for x in args.criteria.split(",")} if args.criteria else None
    checks = run_all(selected)
    out = {"checks": [c.as_dict() for c in checks], "required_passed": required_passed(checks)}
    if not args.timings:
        for c in checks:
            c.seconds = None
    lines = [c.line() for c in checks]
    return Result(out, out["required_passed"], lines)


# ---------------------------------------------------------------------------
# parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="thread cap (computation is single-threaded)")
    common.add_argument("--timings", action="store_true", help="include wall-clock times (makes output non-deterministic)")
    common.add_argument("--seed", type=int, default=0)

    ap = argparse.ArgumentParser(prog="cliffordinv", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version="cliffordinv 0.1.0")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", parents=[common], help="closure order, generators or Molien series")
    g.add_argument("action", choices=("order", "closure", "molien"))
    g.add_argument("--kind", choices=KINDS, default="real")
    g.add_argument("--m", type=int, default=1)
    g.add_argument("--p", type=int)
    g.add_argument("--order", type=int, default=16, help="truncation order of the Molien series")
    g.add_argument("--max-order", type=int, default=10**6)
    g.set_defaults(func=cmd_group)

    c = sub.add_parser("codes", parents=[common], help="classes of self-dual codes")
    c.add_argument("action", choices=("enumerate",))
    c.add_argument("--length", type=int, required=True)
    c.add_argument("--doubly-even", action="store_true")
    c.add_argument("--self-orthogonal", action="store_true", help="self-orthogonal codes instead of self-dual ones")
    c.add_argument("--any", action="store_true", help="with --self-orthogonal, do not require 1 in the code")
    c.add_argument("--p", type=int)
    c.set_defaults(func=cmd_codes)

    w = sub.add_parser("cwe", parents=[common], help="complete weight enumerator of C(m)")
    w.add_argument("--code", required=True)
    w.add_argument("--genus", type=int, default=1)
    w.add_argument("--p", type=int)
    w.set_defaults(func=cmd_cwe)

    h = sub.add_parser("hm", parents=[common], help="the explicit degree-8 invariant h_m")
    h.add_argument("--genus", type=int, default=1)
    h.set_defaults(func=cmd_hm)

    s = sub.add_parser("shadow", parents=[common], help="shadow enumerator and the four-variable identities")
    s.add_argument("--code", required=True)
    s.set_defaults(func=cmd_shadow)

    v = sub.add_parser("verify", parents=[common], help="check an identity; exit 0 iff it holds")
    v.add_argument("check", choices=tuple(VERIFIERS))
    v.add_argument("--length", type=int, default=8)
    v.add_argument("--genus", type=int, default=1)
    v.add_argument("--m", type=int, default=2)
    v.add_argument("--code", default="1^8")
    v.add_argument("--variant", choices=VARIANTS, default="real")
    v.add_argument("--kind", choices=KINDS, default="real", help="group for span-order")
    v.add_argument("--p", type=int)
    v.set_defaults(func=cmd_verify)

    lat = sub.add_parser("lattice", parents=[common], help="Barnes-Wall lattices")
    lat.add_argument("action", choices=("build",))
    lat.add_argument("--m", type=int, required=True)
    lat.add_argument("--primed", action="store_true")
    lat.add_argument("--balanced", action="store_true")
    lat.set_defaults(func=cmd_lattice)

    d = sub.add_parser("design-test", parents=[common], help="spherical-design strength of an orbit")
    d.add_argument("--m", type=int, default=1)
    d.add_argument("--max-degree", type=int, default=8)
    d.add_argument("--point", help="comma-separated coordinates")
    d.add_argument("--point-mode", choices=("basis", "random", "zero"), default="basis")
    d.add_argument("--tolerance", type=float, default=1e-9)
    d.add_argument("--expect-strength", type=int, help="exit 1 unless the strength equals this")
    d.set_defaults(func=cmd_design)

    st = sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    st.add_argument("--criteria", help="comma-separated criterion numbers")
    st.add_argument("--long", action="store_true", help="include the long optional checks")
    st.set_defaults(func=cmd_selftest)
    return ap


def _emit(args, result, elapsed):
    payload = dict(result.payload)
    if args.timings:
        payload["seconds"] = round(elapsed, 3)
    else:
        payload = _strip_seconds(payload)
    payload["ok"] = result.ok
    if args.format == "json":
        text = dumps(payload)
    elif result.lines is not None:
        text = "\n".join(result.lines + [f"ok: {str(result.ok).lower()}"]) + "\n"
    else:
        text = "\n".join(_text(to_plain(payload))) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be positive")
    for name in ("m", "genus", "length", "order", "max_order", "max_degree"):
        if getattr(args, name, 1) is not None and getattr(args, name, 1) < 0:
            parser.error(f"--{name.replace('_', '-')} must be non-negative")
    t = time.perf_counter()
    try:
        result = args.func(args)
    except UnknownCodeError as e:
        print(f"cliffordinv: {e.args[0]}", file=sys.stderr)
        return EXIT_UNKNOWN_CODE
    except BudgetError as e:
        print(f"cliffordinv: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (NotClaimedError, NotSelfDualError, UnsupportedError, ValueError) as e:
        print(f"cliffordinv: {e}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args, result, time.perf_counter() - t)
    return EXIT_OK if result.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
