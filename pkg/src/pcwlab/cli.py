"""
Command-line front end, installed as ``pcw-lab``.

Every subcommand reads a parity-check matrix with ``-H FILE`` and prints a
JSON report on standard output. Keys are sorted, so two runs with the same
input and parameters differ only in the ``timing`` field. Exit status is 0
on success, 1 for a negative verdict and 2 for usage, format or capacity
errors; diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .cone import cone_membership, dense_ray_witness, is_unscaled_pcw
from .covers import RNG_ALGORITHM, lift_codeword, pseudo_codeword, random_cover
from .errors import CapacityError, DimensionError, DomainError, ParseError, PcwError
from .gf2 import DEFAULT_MAX_DIMENSION, as_bit_vector, describe_code, enumerate_codewords, is_codeword, ml_decode_bsc
from .io import matrix_digest, read_matrix, write_alist
from .lifting import check_hypotheses, paths_to_json, realize, verify_conclusions
from .tanner import duplicate_checks, from_parity_matrix, is_bit_even, is_cycle_code, normal_graph, tanner_as_multigraph
from .zeta import DEFAULT_MAX_DIRECTED, bit_even_pcw, enumerate_cycle_pcw, zeta_reciprocal, zeta_series

TOOL = "pcw-lab"

# keyword bound -> command-line flag that raises it
FLAGS = {"max_dimension": "--max-dimension", "max_directed": "--max-directed"}


class UsageError(PcwError):
    pass


def parse_bits(text: str) -> list[int]:
    """'1011010' or '1,0,1,1,0,1,0'."""
    tokens = text.split(",") if "," in text else list(text.strip())
    try:
        bits = [int(t) for t in tokens]
    except ValueError:
        raise UsageError(f"cannot read {text!r} as bits") from None
    if any(b not in (0, 1) for b in bits):
        raise UsageError(f"bits must be 0 or 1: {text!r}")
    return bits


def parse_ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot read {text!r} as comma-separated integers") from None


def parse_rationals(text: str) -> list[Fraction]:
    try:
        return [Fraction(t.strip()) for t in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read {text!r} as comma-separated rationals p/q") from None


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _bitstring(v) -> str:
    return "".join(str(int(b)) for b in v)


def _cmd_info(H, args):
    T = from_parity_matrix(H)
    code = describe_code(H)
    return 0, {
        "rows": int(H.shape[0]),
        "columns": int(H.shape[1]),
        "dimension": code.dimension,
        "bit_degrees": list(T.bit_degrees),
        "check_degrees": list(T.check_degrees),
        "bit_even": is_bit_even(T),
        "cycle_code": is_cycle_code(T),
    }


def _cmd_codewords(H, args):
    words = enumerate_codewords(H, args.max_dimension)
    return 0, {"count": len(words), "codewords": [_bitstring(w) for w in words]}


def _cmd_decode(H, args):
    y = parse_bits(args.received)
    res = ml_decode_bsc(H, y, args.max_dimension)
    return 0, {
        "received": _bitstring(y),
        "codeword": _bitstring(res.codeword),
        "distance": res.distance,
        "unique": res.unique,
    }


def _cmd_cone_check(H, args):
    verdict = cone_membership(H, parse_rationals(args.vector))
    return (0 if verdict.member else 1), verdict.to_json()


def _cmd_cone_witness(H, args):
    v = parse_rationals(args.vector)
    w = dense_ray_witness(H, v, Fraction(args.eps))
    return 0, {
        "p": list(w.p),
        "alpha": _frac(w.alpha),
        "beta": w.beta,
        "pseudo_codeword": is_unscaled_pcw(H, w.p),
    }


def _cmd_pcw_verify(H, args):
    p = parse_ints(args.vector)
    if any(x < 0 for x in p):
        raise UsageError("pseudo-codeword candidates must be nonnegative")
    ok = is_unscaled_pcw(H, p)
    _, failures = check_hypotheses(from_parity_matrix(H), p)
    return (0 if ok else 1), {"verdict": ok, "failures": [str(f) for f in failures]}


def _cmd_realize(H, args):
    p = parse_ints(args.vector)
    T = from_parity_matrix(H)
    if len(p) != T.num_bits:
        raise DimensionError(f"expected a vector of length {T.num_bits}, got {len(p)}")
    if any(x < 0 for x in p):
        raise UsageError("multiplicities must be nonnegative")
    ok, failures = check_hypotheses(T, p)
    if not ok:
        return 1, {"realized": False, "failures": [str(f) for f in failures]}
    real = realize(H, p, debug=args.debug)
    check = verify_conclusions(real.cover, real.paths, p)
    unscaled, _ = pseudo_codeword(real.word)
    return 0, {
        "realized": True,
        "cover": real.cover.to_json(),
        "word": str(real.word),
        "paths": paths_to_json(real.paths),
        "pseudo_codeword": list(unscaled),
        "conclusions_hold": check.ok,
        "diagnostics": check.diagnostics,
    }


def _cmd_cover_random(H, args):
    if args.m < 1:
        raise UsageError("--m must be at least 1")
    cov = random_cover(from_parity_matrix(H), args.m, args.seed)
    return 0, {"rng": RNG_ALGORITHM, "cover": cov.to_json()}


def _cmd_lift(H, args):
    c = parse_bits(args.codeword)
    if len(c) != H.shape[1]:
        raise DimensionError(f"expected {H.shape[1]} bits, got {len(c)}")
    if args.m < 1:
        raise UsageError("--m must be at least 1")
    w = lift_codeword(as_bit_vector(c), args.m)
    return 0, {"word": str(w), "bits": _bitstring(w.bits), "codeword": is_codeword(H, c)}


def _cmd_reduce(H, args):
    T = from_parity_matrix(H)
    H2 = duplicate_checks(H)
    return 0, {
        "already_bit_even": is_bit_even(T),
        "rows": int(H2.shape[0]),
        "columns": int(H2.shape[1]),
        "matrix": H2.tolist(),
        "alist": write_alist(H2),
    }


def _graph_for(H, mode):
    T = from_parity_matrix(H)
    if mode == "auto":
        mode = "normal" if is_cycle_code(T) else "tanner"
    G = normal_graph(T) if mode == "normal" else tanner_as_multigraph(T)
    return mode, G


def _cmd_zeta(H, args):
    mode, G = _graph_for(H, args.graph)
    recip = zeta_reciprocal(G, args.max_directed, max_degree=args.degree)
    series = zeta_series(G, args.degree, args.max_directed)
    return 0, {
        "graph": mode,
        "variables": G.num_edges,
        "reciprocal": recip.to_json(),
        "series": series.to_json(),
    }


def _cmd_enumerate(H, args):
    T = from_parity_matrix(H)
    if is_cycle_code(T):
        pipeline = "cycle"
        vecs = enumerate_cycle_pcw(H, args.degree, args.max_directed)
    else:
        pipeline = "bit-even"
        Hb = H if is_bit_even(T) else duplicate_checks(H)
        if Hb is not H:
            pipeline = "bit-even (checks duplicated)"
        vecs = bit_even_pcw(Hb, args.degree, args.max_directed)
    return 0, {"pipeline": pipeline, "count": len(vecs), "vectors": [list(v) for v in vecs]}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-H", dest="matrix", required=True, metavar="FILE", help="parity-check matrix file")
    common.add_argument("--format", choices=("auto", "plain", "alist"), default="auto")

    parser = argparse.ArgumentParser(prog=TOOL, description="pseudo-codeword analysis of binary LDPC codes")
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(container, name, func, help_text):
        p = container.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def with_dim(p):
        p.add_argument("--max-dimension", type=int, default=DEFAULT_MAX_DIMENSION)
        return p

    leaf(sub, "info", _cmd_info, "dimensions, degrees and code class")
    with_dim(leaf(sub, "codewords", _cmd_codewords, "list every codeword"))
    p = with_dim(leaf(sub, "decode", _cmd_decode, "exhaustive ML decoding on the BSC"))
    p.add_argument("--received", required=True)

    cone = sub.add_parser("cone", help="fundamental cone queries")
    cone_sub = cone.add_subparsers(dest="action", required=True)
    p = leaf(cone_sub, "check", _cmd_cone_check, "cone membership")
    p.add_argument("--vector", required=True)
    p = leaf(cone_sub, "witness", _cmd_cone_witness, "pseudo-codeword ray close to a cone point")
    p.add_argument("--vector", required=True)
    p.add_argument("--eps", required=True)

    pcw = sub.add_parser("pcw", help="pseudo-codeword tests")
    pcw_sub = pcw.add_subparsers(dest="action", required=True)
    p = leaf(pcw_sub, "verify", _cmd_pcw_verify, "is the vector an unscaled pseudo-codeword")
    p.add_argument("--vector", required=True)

    p = leaf(sub, "realize", _cmd_realize, "build a cover codeword realizing a pseudo-codeword")
    p.add_argument("--vector", required=True)
    p.add_argument("--debug", action="store_true", help="check the builder invariant after every step")

    cover = sub.add_parser("cover", help="graph covers")
    cover_sub = cover.add_subparsers(dest="action", required=True)
    p = leaf(cover_sub, "random", _cmd_cover_random, "uniformly random M-cover")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)

    p = leaf(sub, "lift", _cmd_lift, "lift a codeword to the trivial M-cover")
    p.add_argument("--codeword", required=True)
    p.add_argument("--m", type=int, required=True)

    reduce = sub.add_parser("reduce", help="matrix reductions")
    reduce_sub = reduce.add_subparsers(dest="action", required=True)
    leaf(reduce_sub, "bit-even", _cmd_reduce, "duplicate every check row")

    p = leaf(sub, "zeta", _cmd_zeta, "edge zeta function and its expansion")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--normal", dest="graph", action="store_const", const="normal")
    g.add_argument("--tanner", dest="graph", action="store_const", const="tanner")
    p.set_defaults(graph="auto")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max-directed", type=int, default=DEFAULT_MAX_DIRECTED)

    p = leaf(sub, "enumerate", _cmd_enumerate, "pseudo-codewords from the zeta expansion")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max-directed", type=int, default=32)
    return parser


PARAMETER_KEYS = ("received", "vector", "eps", "m", "seed", "codeword", "degree", "graph", "max_dimension", "max_directed", "debug")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    command = args.command + (f" {args.action}" if getattr(args, "action", None) else "")
    start = time.perf_counter()
    try:
        if getattr(args, "degree", 0) < 0:
            raise UsageError("--degree must be nonnegative")
        H = read_matrix(args.matrix, args.format)
        code, results = args.func(H, args)
    except CapacityError as exc:
        flag = FLAGS.get(exc.bound, exc.bound)
        print(f"{TOOL}: {exc} (raise it with {flag})", file=stderr)
        return 2
    except (ParseError, OSError, UsageError, DimensionError, DomainError) as exc:
        print(f"{TOOL}: {exc}", file=stderr)
        return 2
    report = {
        "tool": TOOL,
        "version": __version__,
        "input_digest": matrix_digest(H),
        "command": command,
        "parameters": {k: getattr(args, k) for k in PARAMETER_KEYS if hasattr(args, k)},
        "results": results,
        "timing": {"seconds": round(time.perf_counter() - start, 6)},
    }
    print(json.dumps(report, sort_keys=True, indent=2), file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
