"""Command-line interface: generate instances, check them, run experiments,
and render plots.

Exit codes: 0 success, 1 input error (bad flags, malformed files, violated
preconditions), 2 capability error (the request is well-formed but exceeds
an implementation bound, e.g. exact checking above the oracle cutoff).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CapabilityError, InputError
from .harness import make_config, parse_config_text, run_experiment
from .hypercore import dump_hypergraph, isolated_vertices, load_hypergraph
from .oracle import exact_weak_hamiltonian
from .plotting import emit_plot
from .randmodels import GnmParams, GnpParams, SeededRng, m_from_c, p_from_c, sample_gnm, sample_gnp
from .weakpaths import rotation_extension_search, weak_to_json

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures to exit code 1
        raise InputError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="weakham", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="sample a random hypergraph to a text file")
    gen.add_argument("--n", type=int, required=True, help="number of vertices")
    gen.add_argument("--d", type=int, required=True, help="edge arity")
    gen.add_argument("--model", choices=("gnp", "gnm"), required=True)
    gen.add_argument("--p", type=float, default=None, help="edge probability (gnp)")
    gen.add_argument("--m", type=int, default=None, help="edge count (gnm)")
    gen.add_argument(
        "--c", type=float, default=None,
        help="threshold offset; maps to p or m via the critical window",
    )
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True, metavar="FILE")

    check = sub.add_parser("check", help="decide weak Hamiltonicity of a file")
    check.add_argument("--in", dest="infile", required=True, metavar="FILE")
    check.add_argument("--mode", choices=("exact", "heuristic"), default="exact")
    check.add_argument("--seed", type=int, default=0, help="heuristic search seed")
    check.add_argument(
        "--budget", type=int, default=0,
        help="heuristic rotation budget (0 = default)",
    )

    exp = sub.add_parser("exp", help="run an experiment to a CSV table")
    exp.add_argument(
        "kind",
        choices=("threshold", "gnm", "poisson", "process", "expansion", "pab"),
    )
    exp.add_argument("--config", default=None, metavar="FILE", help="key = value file")
    exp.add_argument("--n", type=int, default=None)
    exp.add_argument("--d", type=int, default=None)
    exp.add_argument(
        "--c-grid", default=None,
        help="comma-separated c values; write --c-grid=-1,0,1 for negatives",
    )
    exp.add_argument("--trials", type=int, default=None)
    exp.add_argument("--seed", type=int, default=None)
    exp.add_argument("--workers", type=int, default=None)
    exp.add_argument("--budget", type=int, default=None)
    exp.add_argument("--oracle-cutoff", type=int, default=None)
    exp.add_argument("--samples", type=int, default=None)
    exp.add_argument("--a-grid", default=None, help="comma-separated a values (pab)")
    exp.add_argument("--b-grid", default=None, help="comma-separated b values (pab)")
    exp.add_argument("--p-grid", default=None, help="comma-separated p values (pab)")
    exp.add_argument("--out", default=None, metavar="FILE")

    plot = sub.add_parser("plot", help="render a threshold CSV to SVG")
    plot.add_argument("--in", dest="infile", required=True, metavar="FILE")
    plot.add_argument("--out", required=True, metavar="FILE")

    return parser


def _cmd_gen(args) -> int:
    if args.model == "gnp":
        if (args.p is None) == (args.c is None):
            raise InputError("gnp needs exactly one of --p or --c")
        if args.m is not None:
            raise InputError("--m applies to gnm only")
        p = args.p if args.p is not None else p_from_c(args.n, args.d, args.c)
        H = sample_gnp(GnpParams(args.n, args.d, p), SeededRng(args.seed, 0))
    else:
        if (args.m is None) == (args.c is None):
            raise InputError("gnm needs exactly one of --m or --c")
        if args.p is not None:
            raise InputError("--p applies to gnp only")
        m = args.m if args.m is not None else m_from_c(args.n, args.d, args.c)
        H = sample_gnm(GnmParams(args.n, args.d, m), SeededRng(args.seed, 0))
    dump_hypergraph(H, args.out)
    print(f"wrote {args.out}: n={H.n} d={H.d} m={H.m}")
    return 0


def _cmd_check(args) -> int:
    H = load_hypergraph(args.infile)
    if args.mode == "exact":
        verdict = exact_weak_hamiltonian(H, method="dp")
        print(verdict.to_json())
        return 0
    budget = args.budget if args.budget > 0 else None
    iso = isolated_vertices(H)
    if H.n < 3:
        doc = {"answer": "no", "method": "heuristic", "note": f"n = {H.n} < 3",
               "witness": None, "rotations": 0}
    elif iso:
        doc = {
            "answer": "no", "method": "heuristic",
            "note": f"vertex {min(iso)} is isolated", "witness": None,
            "rotations": 0,
        }
    else:
        outcome = rotation_extension_search(
            H, budget=budget, rng=SeededRng(args.seed, 0)
        )
        if outcome.complete:
            doc = {
                "answer": "yes", "method": "heuristic", "note": None,
                "witness": json.loads(weak_to_json(outcome.cycle)),
                "rotations": outcome.rotations,
            }
        elif outcome.impossible is not None:
            doc = {
                "answer": "no", "method": "heuristic", "note": outcome.impossible,
                "witness": None, "rotations": outcome.rotations,
            }
        else:
            doc = {
                "answer": "unknown", "method": "heuristic",
                "note": "search gave up without a certificate", "witness": None,
                "rotations": outcome.rotations,
            }
    print(json.dumps(doc, separators=(",", ":"), sort_keys=True))
    return 0


_EXP_FLAG_KEYS = (
    "n", "d", "trials", "seed", "workers", "budget", "oracle_cutoff", "samples",
)
_EXP_LIST_KEYS = ("c_grid", "a_grid", "b_grid", "p_grid")


def _cmd_exp(args) -> int:
    options: dict[str, str] = {}
    if args.config is not None:
        with open(args.config, "r", encoding="utf-8") as fh:
            options.update(parse_config_text(fh.read()))
    for key in _EXP_FLAG_KEYS:
        value = getattr(args, key)
        if value is not None:
            options[key] = str(value)
    for key in _EXP_LIST_KEYS:
        value = getattr(args, key)
        if value is not None:
            options[key] = value
    out = args.out or options.pop("out", None) or f"{args.kind}.csv"
    options.pop("out", None)
    cfg = make_config(args.kind, options)
    table = run_experiment(cfg)
    table.save(out)
    print(f"wrote {out}: {len(table.rows)} rows")
    return 0


def _cmd_plot(args) -> int:
    emit_plot(args.infile, args.out)
    print(f"wrote {args.out}")
    return 0


_COMMANDS = {"gen": _cmd_gen, "check": _cmd_check, "exp": _cmd_exp, "plot": _cmd_plot}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapabilityError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
