"""``qfock`` command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
parse errors.  Output is canonical: identical flags give identical bytes.
"""
from __future__ import annotations

import argparse
import json
import sys

from .fock import FockVec, enumerate_basis, weight_of
from .heisenberg import B, gamma
from .parser import ParseError, apply_op, parse_op, parse_vec
from .report import Report
from .suites import SUITES, run_suite
from .tensor_oracle import verify_centrality, verify_hecke_relations, verify_intertwining
from .uq_fock import singular_vectors
from .vertex import (UnstableTruncation, certified_degree, minimal_kmax, omega_two_point,
                     phi_two_point, verify_factorization, xi_sign, xi_two_point)


class UsageError(Exception):
    pass


def _rank(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("rank must be >= 2")
    return n


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=_rank, required=True, help="rank n >= 2")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0, help="seed for random.Random")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qfock", description="q-wedge Fock space computations")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("act", help="apply an operator expression to a vector")
    _common(p)
    p.add_argument("--op", required=True)
    p.add_argument("--vec", required=True)

    p = sub.add_parser("normal-order", help="straighten a vector expression")
    _common(p)
    p.add_argument("--vec", required=True)

    p = sub.add_parser("bop", help="apply B_a to a vector")
    _common(p)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--vec", required=True)

    p = sub.add_parser("gamma", help="closed form of [B_a, B_-a]")
    _common(p)
    p.add_argument("--a", type=int, required=True)

    p = sub.add_parser("two-point", help="omega, xi and phi two-point series")
    _common(p)
    p.add_argument("--charge", type=int, default=0)
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--kmax", type=int, default=None)

    p = sub.add_parser("basis", help="basis wedges by partition size")
    _common(p)
    p.add_argument("--charge", type=int, default=0)
    p.add_argument("--depth", type=int, default=3)

    p = sub.add_parser("singular", help="singular vectors of weight Lambda_m - a delta")
    _common(p)
    p.add_argument("--charge", type=int, default=0)
    p.add_argument("--depth", type=int, default=3)

    p = sub.add_parser("hecke-oracle", help="affine Hecke relations on tensor words")
    _common(p)
    p.add_argument("--length", type=int, default=3, help="tensor length N")
    p.add_argument("--a", type=int, default=1, help="mode of the central element B_a")

    p = sub.add_parser("verify", help="run verification suites")
    _common(p)
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    return ap


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _emit_reports(args, reports: list[Report]) -> int:
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            for line in r.lines():
                print(line)
        ok = all(r.ok for r in reports)
        print(f"{'OK' if ok else 'FAILED'}: {sum(len(r.checks) for r in reports)} checks")
    return 0 if all(r.ok for r in reports) else 1


def _vector_out(args, v: FockVec) -> int:
    _emit(args, v.render(), v.to_json())
    return 0


def cmd_act(args) -> int:
    op = parse_op(args.op, args.n)
    v = parse_vec(args.vec, args.n)
    return _vector_out(args, apply_op(op, v))


def cmd_normal_order(args) -> int:
    return _vector_out(args, parse_vec(args.vec, args.n))


def cmd_bop(args) -> int:
    if args.a == 0:
        raise UsageError("--a must be nonzero")
    return _vector_out(args, B(args.a, parse_vec(args.vec, args.n)))


def cmd_gamma(args) -> int:
    if args.a < 1:
        raise UsageError("--a must be >= 1")
    g = gamma(args.a, args.n)
    _emit(args, str(g), {"n": args.n, "a": args.a, "gamma": str(g), "coeffs": g.to_json()})
    return 0


def cmd_two_point(args) -> int:
    if args.order < 1:
        raise UsageError("--order must be >= 1")
    n, order = args.n, args.order
    kmax = minimal_kmax(order, n) if args.kmax is None else args.kmax
    if kmax < 0:
        raise UsageError("--kmax must be non-negative")
    degree = certified_degree(n, kmax)
    om = omega_two_point(args.charge, order, n)
    xi = xi_two_point(order, n)
    ph = phi_two_point(order, n, kmax)
    rep = verify_factorization(args.charge, order, n, kmax, degree)
    sign = xi_sign(order, n)
    data = {
        "n": n, "charge": args.charge, "order": order, "kmax": kmax,
        "certified_degree": degree, "xi_sign": sign,
        "omega": om.to_json(), "xi": xi.to_json(), "phi": ph.to_json(),
        "factorization": rep.ok,
    }
    lines = [f"n={n} charge={args.charge} order={order} kmax={kmax} certified through q^{degree}"]
    for name, tp in (("omega", om), ("xi", xi), ("phi", ph)):
        lines.append(f"{name}:")
        lines.extend(f"  w^{b}: {c}" for b, c in tp.to_json())
    lines.append(f"xi sign: {sign:+d}")
    lines.append(f"omega = xi * phi through q^{degree}: {'PASS' if rep.ok else 'FAIL'}")
    _emit(args, "\n".join(lines), data)
    return 0 if rep.ok else 1


def cmd_basis(args) -> int:
    if args.depth < 0:
        raise UsageError("--depth must be non-negative")
    levels, lines = [], []
    for s in range(args.depth + 1):
        entries = []
        for wh in enumerate_basis(args.charge, s):
            w = weight_of(wh.head, args.charge, args.n)
            entries.append({"partition": list(wh.partition()), "head": list(wh.head),
                            "kexp": list(w.kexp), "ddeg": w.ddeg})
            lines.append(f"{s}  {list(wh.partition())}  {wh}  kexp={list(w.kexp)} ddeg={w.ddeg}")
        levels.append({"size": s, "wedges": entries})
    _emit(args, "\n".join(lines), {"n": args.n, "charge": args.charge, "levels": levels})
    return 0


def cmd_singular(args) -> int:
    if args.depth < 0:
        raise UsageError("--depth must be non-negative")
    dims, vectors, lines = [], [], []
    for a in range(args.depth + 1):
        dim, basis = singular_vectors(args.charge, a, args.n)
        dims.append(dim)
        vectors.append([v.to_json() for v in basis])
        lines.append(f"a={a} dim={dim}")
        lines.extend(f"  {v.render()}" for v in basis)
    _emit(args, "\n".join(lines),
          {"n": args.n, "charge": args.charge, "dimensions": dims, "vectors": vectors})
    return 0


def cmd_hecke_oracle(args) -> int:
    if args.length < 2:
        raise UsageError("--length must be >= 2")
    if args.a == 0:
        raise UsageError("--a must be nonzero")
    N, n, seed = args.length, args.n, args.seed
    reports = [verify_hecke_relations(N, samples=20, n=n, seed=seed),
               verify_intertwining(N, samples=10, n=n, seed=seed),
               verify_centrality(N, args.a, samples=10, n=n, seed=seed)]
    return _emit_reports(args, reports)


def cmd_verify(args) -> int:
    return _emit_reports(args, run_suite(args.suite, args.n, args.seed))


COMMANDS = {
    "act": cmd_act,
    "normal-order": cmd_normal_order,
    "bop": cmd_bop,
    "gamma": cmd_gamma,
    "two-point": cmd_two_point,
    "basis": cmd_basis,
    "singular": cmd_singular,
    "hecke-oracle": cmd_hecke_oracle,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args)
    except ParseError as e:
        print(f"qfock: parse error: {e.pretty()}", file=sys.stderr)
        return 2
    except UsageError as e:
        print(f"qfock: {e}", file=sys.stderr)
        return 2
    except UnstableTruncation as e:
        print(f"qfock: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"qfock: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
