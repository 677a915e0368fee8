"""Command-line front end.

Exit status 0 means success (and every checked identity held), 1 means a
checked identity failed, 2 means a usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import graded, hopf, kledger, parabolic, qcomb
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .laurent import LaurentPoly, parse_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class CheckFailed(Exception):
    """A verification ran and returned false."""


def nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("not an integer: %r" % text)
    if value < 0:
        raise argparse.ArgumentTypeError("degrees must be nonnegative, got %d" % value)
    return value


def pos_int(text: str) -> int:
    value = nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# --- subcommands: each returns the text to print or raises -----------------

def cmd_qbinom(args):
    poly = qcomb.q_binomial(args.N, args.k)
    if args.format == "json":
        return _dump({"N": args.N, "k": args.k, "poly": poly.to_json()})
    return str(poly)


def cmd_betti(args):
    b = qcomb.betti(args.k, args.l)
    oracle = qcomb.box_partitions(args.k, args.l)
    if b != oracle:
        raise CheckFailed("betti(%d, %d) = %r but box count gives %r" % (args.k, args.l, b.values, oracle.values))
    if args.format == "json":
        return _dump(b.to_json())
    return " ".join(str(v) for v in b.values)


def _report_text(r: hopf.CoherenceReport) -> str:
    lines = ["coherence n=%d m=%d p=%d q=%d" % (r.n, r.m, r.p, r.q), "lhs: %s" % r.lhs]
    for quad, c in r.terms:
        lines.append("  O(%d,%d,%d,%d): %s" % (quad + (c,)))
    lines.append("rhs: %s" % r.rhs)
    lines.append("equal: %s" % ("true" if r.equal else "false"))
    return "\n".join(lines)


def cmd_coherence(args):
    report = hopf.coherence_check(args.n, args.m, args.p, args.q)
    out = _dump(report.to_json()) if args.format == "json" else _report_text(report)
    if not report.equal:
        raise CheckFailed(out)
    return out


def sweep_tuples(bound: int):
    """All ``(n, m, p, q)`` with ``n + m = p + q <= bound``, in lexicographic order."""
    for s in range(bound + 1):
        for n in range(s + 1):
            for p in range(s + 1):
                yield n, s - n, p, s - p


def sweep(bound: int):
    checked, failures = 0, []
    for tup in sweep_tuples(bound):
        checked += 1
        report = hopf.coherence_check(*tup)
        if not report.equal:
            failures.append(report)
    return checked, failures


def cmd_sweep(args):
    checked, failures = sweep(args.bound)
    if args.format == "json":
        out = _dump({"bound": args.bound, "checked": checked, "failures": len(failures),
                     "failed": [f.to_json() for f in failures]})
    else:
        out = "bound %d: %d tuples checked, %d failures" % (args.bound, checked, len(failures))
        for f in failures:
            out += "\n" + _report_text(f)
    if failures:
        raise CheckFailed(out)
    return out


def cmd_orbits(args):
    quads = parabolic.quadruples(args.n, args.m, args.p, args.q)
    mats = parabolic.double_cosets((args.p, args.q), (args.n, args.m))
    if [parabolic.quadruple_to_matrix(x) for x in quads] != [m.entries for m in mats]:
        raise CheckFailed("quadruples and double cosets disagree")
    if args.format == "json":
        return _dump({"quadruples": [list(x) for x in quads], "double_cosets": [m.to_json() for m in mats]})
    lines = ["%d orbits" % len(quads)]
    for quad, mat in zip(quads, mats):
        lines.append("  O(%d,%d,%d,%d)  %s" % (quad + (mat.entries,)))
    return "\n".join(lines)


def cmd_shift_check(args):
    rng = np.random.default_rng(args.seed)
    perm = parabolic.braid_permutation(args.k, args.l)
    rows = []
    for _ in range(args.trials):
        grid = rng.integers(0, args.max_dim + 1, size=(args.k, args.l))
        inv = parabolic.weighted_inversions(perm, parabolic.flatten_dims(grid))
        shift = parabolic.shift_dimension(grid)
        quot = parabolic.unipotent_dims(grid).dim_quotient
        rows.append((grid, inv, shift, quot))
    bad = [r for r in rows if not (r[1] == r[2] == r[3])]
    if args.format == "json":
        out = _dump({"k": args.k, "l": args.l, "trials": args.trials, "seed": args.seed,
                     "permutation": perm, "failures": len(bad)})
    else:
        out = "s_{%d,%d} = %s\n%d grids checked, %d failures" % (args.k, args.l, perm, args.trials, len(bad))
    if bad:
        grid, inv, shift, quot = bad[0]
        raise CheckFailed(out + "\nfirst failure: grid %s inversions %d shift %d quotient %d"
                          % (grid.tolist(), inv, shift, quot))
    return out


def cmd_hilbert(args):
    series = graded.hilbert_series(args.parts, args.cutoff)
    if args.format == "json":
        return _dump(series.to_json())
    return " ".join(str(c) for c in series.coeffs)


def cmd_octahedron(args):
    report = kledger.octahedron_relations()
    values = {"R": parse_text(args.R), "Q": parse_text(args.Q), "F": parse_text(args.F)}
    solved = kledger.solve_octahedron(values)
    sat = [rel.satisfied(solved) for rel in report.relations]
    ok = report.consistent and all(sat)
    if args.format == "json":
        out = _dump({"relations": [r.to_json() for r in report.relations],
                     "via_z": report.via_z.to_json(), "via_s": report.via_s.to_json(),
                     "consistent": report.consistent,
                     "values": {k: v.to_json() for k, v in sorted(solved.items())},
                     "satisfied": sat})
    else:
        lines = ["%s  [%s]" % (rel, "ok" if s else "VIOLATED") for rel, s in zip(report.relations, sat)]
        lines.append("[Y] via Z: %s" % report.via_z)
        lines.append("[Y] via S: %s" % report.via_s)
        lines += ["%s = %s" % (k, v) for k, v in sorted(solved.items())]
        lines.append("consistent: %s" % ("true" if ok else "false"))
        out = "\n".join(lines)
    if not ok:
        raise CheckFailed(out)
    return out


def cmd_decompose(args):
    rel, verified = kledger.orbit_decomposition(args.n, args.m, args.p, args.q)
    if args.format == "json":
        out = _dump({"relation": rel.to_json(), "verified": verified})
    else:
        report = hopf.coherence_check(args.n, args.m, args.p, args.q)
        lines = [str(rel)]
        lines.append("  %s -> %s" % (kledger.total_label(args.n, args.m, args.p, args.q), report.lhs))
        lines += ["  %s -> %s" % (kledger.orbit_label(quad), c) for quad, c in report.terms]
        lines.append("verified: %s" % ("true" if verified else "false"))
        out = "\n".join(lines)
    if not verified:
        raise CheckFailed(out)
    return out


def cmd_hopf_eval(args):
    op, xs = args.op, args.args
    arity = {"mul": 2, "comul": 1, "braid": 2, "assoc": 3, "coassoc": 1}[op]
    if len(xs) != arity:
        raise DomainError("%s takes %d degrees, got %d" % (op, arity, len(xs)))
    if op == "mul":
        value = hopf.multiply(hopf.y(xs[0]), hopf.y(xs[1]))
    elif op == "comul":
        value = hopf.comultiply(hopf.y(xs[0]))
    elif op == "braid":
        value = hopf.braid(hopf.TensorElement.basis(xs[0], xs[1]))
    elif op == "assoc":
        ok = hopf.associativity_check(*xs)
    else:
        ok = hopf.coassociativity_check(*xs)
    if op in ("assoc", "coassoc"):
        out = _dump({"op": op, "args": xs, "holds": ok}) if args.format == "json" else ("true" if ok else "false")
        if not ok:
            raise CheckFailed(out)
        return out
    if args.format == "json":
        return _dump({"op": op, "args": xs, "value": value.to_json()})
    return str(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trihopf", description=__doc__.splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *ints):
        sp = sub.add_parser(name, parents=[fmt], help=help_text)
        for x in ints:
            sp.add_argument(x, type=nonneg_int)
        sp.set_defaults(func=func)
        return sp

    add("qbinom", cmd_qbinom, "Gaussian binomial in powers of q^-2", "N", "k")
    add("betti", cmd_betti, "Grassmannian Betti numbers, checked against a box count", "k", "l")
    add("coherence", cmd_coherence, "coherence equation on one component", "n", "m", "p", "q")
    sp = add("coherence-sweep", cmd_sweep, "coherence equation for all n+m=p+q <= bound")
    sp.add_argument("--bound", type=pos_int, default=12)
    add("orbits", cmd_orbits, "orbit quadruples and double-coset matrices", "n", "m", "p", "q")
    sp = sub.add_parser("shift-check", parents=[fmt], help="inversion count vs shift dimension")
    sp.add_argument("k", type=pos_int)
    sp.add_argument("l", type=pos_int)
    sp.add_argument("--trials", type=pos_int, default=100)
    sp.add_argument("--seed", type=nonneg_int, default=0)
    sp.add_argument("--max-dim", type=nonneg_int, default=4)
    sp.set_defaults(func=cmd_shift_check)
    sp = sub.add_parser("hilbert", parents=[fmt], help="Hilbert series of A_{n_1} (x) ... (x) A_{n_k}")
    sp.add_argument("parts", type=nonneg_int, nargs="*")
    sp.add_argument("--cutoff", type=nonneg_int, default=10)
    sp.set_defaults(func=cmd_hilbert)
    sp = sub.add_parser("ledger-octahedron", parents=[fmt], help="octahedron relations and their evaluation")
    sp.add_argument("--R", default="1")
    sp.add_argument("--Q", default="q^-2")
    sp.add_argument("--F", default="q^-4")
    sp.set_defaults(func=cmd_octahedron)
    add("decompose", cmd_decompose, "orbit decomposition of the full operation", "n", "m", "p", "q")
    sp = sub.add_parser("hopf-eval", parents=[fmt], help="evaluate mul/comul/braid on basis elements")
    sp.add_argument("op", choices=("mul", "comul", "braid", "assoc", "coassoc"))
    sp.add_argument("args", type=nonneg_int, nargs="+")
    sp.set_defaults(func=cmd_hopf_eval)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except CheckFailed as exc:
        print(str(exc), file=sys.stdout)
        print("identity check failed", file=sys.stderr)
        return EXIT_FAIL
    except ConsistencyError as exc:
        print("internal consistency failure: %s" % exc, file=sys.stderr)
        return EXIT_FAIL
    except (DomainError, ResourceLimitError, ValueError) as exc:
        print("%s: error: %s" % (parser.prog, exc), file=sys.stderr)
        return EXIT_USAGE
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
