"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 format error, 3 resource or size
limit, 4 certification failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import bounds, instances, jump, linext
from .errors import AlgorithmMismatch, DepthExceeded, FormatError, ResourceError, SizeError
from .estimate import estimate_resources
from .poset import brute_force_jump_witness, brute_force_le

EXIT_OK, EXIT_USAGE, EXIT_FORMAT, EXIT_RESOURCE, EXIT_CERT = 0, 1, 2, 3, 4

COUNT_ALGORITHMS = ("auto", "naive", "2d", "2d-star", "brute")
JUMP_ALGORITHMS = ("auto", "naive", "jn", "brute")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message} (see --help)\n")


def _read_instance(path: str, kind: str) -> instances.InstanceFile:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return instances.parse_instance(text, kind)


def _fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _stats_dict(stats):
    if stats is None:
        return None
    return {"n": stats.n, "m": stats.m, "t": stats.t, "q": stats.q,
            "alpha": _fraction(stats.alpha), "beta": _fraction(stats.beta),
            "gamma": _fraction(stats.gamma)}


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
        return
    for key, value in report.items():
        if isinstance(value, dict):
            value = ", ".join(f"{k}={v}" for k, v in value.items())
        elif isinstance(value, list):
            value = " ".join(str(v) for v in value)
        print(f"{key:<22} {value}")


def _summary(inst):
    return {"kind": inst.kind, "n": inst.n}


def cmd_count(args) -> int:
    inst = _read_instance(args.input, args.kind)
    algorithm = args.algorithm
    if algorithm == "auto":
        algorithm = "2d-star" if inst.kind == instances.PERMUTATION else "naive"
    if algorithm in ("2d", "2d-star") and inst.kind != instances.PERMUTATION:
        raise AlgorithmMismatch(f"algorithm {algorithm} needs a permutation instance")
    poset = inst.poset()
    start = time.perf_counter()
    if algorithm == "brute":
        count, states, stats, route = brute_force_le(poset), None, None, None
    else:
        run = {"naive": linext.count_le_dp, "2d": linext.count_le_2d,
               "2d-star": linext.count_le_2d_star}[algorithm]
        result = run(poset, max_states=args.max_states)
        count, states, stats, route = result.count, result.states_visited, result.stats, result.route
    elapsed = (time.perf_counter() - start) * 1000
    _emit({"instance": _summary(inst), "algorithm": algorithm, "count": str(count),
           "states_visited": states, "route": route, "stats": _stats_dict(stats),
           "elapsed_ms": round(elapsed, 3)}, args.json)
    return EXIT_OK


def cmd_jump(args) -> int:
    inst = _read_instance(args.input, args.kind)
    algorithm = "jn" if args.algorithm == "auto" else args.algorithm
    poset = inst.poset()
    start = time.perf_counter()
    if algorithm == "brute":
        value, witness = brute_force_jump_witness(poset)
        states, stats = None, None
    else:
        run = jump.jump_number_jn if algorithm == "jn" else jump.jump_number_naive
        result = run(poset, witness=args.witness, max_states=args.max_states)
        value, witness, states, stats = (result.jump_number, result.witness,
                                         result.states_visited, result.stats)
    elapsed = (time.perf_counter() - start) * 1000
    report = {"instance": _summary(inst), "algorithm": algorithm, "jump_number": str(value),
              "states_visited": states, "stats": _stats_dict(stats),
              "elapsed_ms": round(elapsed, 3)}
    if args.witness:
        report["witness"] = [x + 1 for x in witness]
    _emit(report, args.json)
    return EXIT_OK


def cmd_estimate(args) -> int:
    inst = _read_instance(args.input, "permutation")
    est = estimate_resources(inst.payload)
    _emit({"instance": _summary(inst), "downsets": str(est.downsets),
           "downsets_transformed": None if est.downsets_transformed is None
           else str(est.downsets_transformed),
           "predicted_states": str(est.predicted_states),
           "stats": _stats_dict(est.stats), "large_matching": est.large_matching,
           "tau": est.tau, "pi": est.pi, "strategy": est.strategy.value}, args.json)
    return EXIT_OK


def cmd_certify(args) -> int:
    try:
        bounds.resolve_target(args.expr)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    output = args.output or f"{args.expr.replace('+', '_')}_{args.threshold}.cert"
    try:
        cert = bounds.certify_bound(args.expr, args.threshold, max_depth=args.max_depth)
    except DepthExceeded as exc:
        with open(output, "w") as fh:
            fh.write(exc.certificate.to_text())
        _report_offending(exc.certificate)
        return EXIT_RESOURCE
    with open(output, "w") as fh:
        fh.write(cert.to_text())
    _emit({"expr": cert.expr, "threshold": cert.threshold, "status": cert.status,
           "boxes_processed": cert.boxes_processed, "leaves": len(cert.leaves),
           "max_corner_bound": cert.max_corner_bound, "certificate": output}, args.json)
    if not cert.certified:
        _report_offending(cert)
        return EXIT_CERT
    return EXIT_OK


def _report_offending(cert) -> None:
    box = cert.offending
    print(f"certification failed ({cert.reason}): {box.expr} box "
          f"lo={list(box.lo)} hi={list(box.hi)} bound={box.bound!r}", file=sys.stderr)


def cmd_gen(args) -> int:
    if args.n < 1:
        raise UsageError("n must be at least 1")
    if not 0.0 <= args.density <= 1.0:
        raise UsageError("density must lie in [0, 1]")
    sys.stdout.write(instances.render(instances.generate(args.kind, args.n, args.seed, args.density)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="posetcount", description="Linear extensions and jump numbers of posets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def instance_args(p, kinds=True):
        p.add_argument("input", help="instance file, or - for standard input")
        if kinds:
            p.add_argument("--kind", choices=("auto", "permutation", "edgelist"), default="auto")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("count", help="count linear extensions")
    instance_args(p)
    p.add_argument("--algorithm", choices=COUNT_ALGORITHMS, default="auto")
    p.add_argument("--max-states", type=int, default=linext.DEFAULT_MAX_STATES)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("jump", help="minimum jump number")
    instance_args(p)
    p.add_argument("--algorithm", choices=JUMP_ALGORITHMS, default="auto")
    p.add_argument("--witness", action="store_true", help="print an optimal linear extension")
    p.add_argument("--max-states", type=int, default=linext.DEFAULT_MAX_STATES)
    p.set_defaults(func=cmd_jump)

    p = sub.add_parser("estimate", help="predict DP state counts of a permutation instance")
    instance_args(p, kinds=False)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("certify", help="certify a bound expression below a threshold")
    p.add_argument("expr", help="expression id, e.g. TAU_LE or TAU_JN_ENTROPY+SIMPLE")
    p.add_argument("threshold", type=float)
    p.add_argument("--max-depth", type=int, default=bounds.DEFAULT_MAX_DEPTH)
    p.add_argument("-o", "--output", help="certificate path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("gen", help="write a pseudo-random instance to standard output")
    p.add_argument("kind", choices=("permutation", "dag"))
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=0.3)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, AlgorithmMismatch) as exc:
        print(f"posetcount: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"posetcount: format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except ResourceError as exc:
        print(f"posetcount: {exc}; run 'posetcount estimate' first or raise --max-states",
              file=sys.stderr)
        return EXIT_RESOURCE
    except SizeError as exc:
        print(f"posetcount: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
