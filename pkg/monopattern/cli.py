"""Command-line entry points.

    monopattern gen --style blocks --n 4096 --k 3 --eps 0.25 --out seq.f64
    monopattern find --input seq.f64 --k 3 --eps 0.25 --delta 0.1 --seed 7
    monopattern verify --input seq.f64 --witness outcome.json
    monopattern oracle --input seq.txt --k 3
    monopattern bench --style blocks --n 4096 --k 3 --eps 0.25 --trials 200 --out runs
    monopattern scaling --style blocks --n 1024 4096 16384 --k 3 --eps 0.25 --trials 50
    monopattern lis-test --input seq.f64 --k 2

Exit codes: 0 on success, 2 on usage or contract errors, 1 when an internal
invariant breaks.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from . import config
from .errors import MonopatternError, UnsupportedFormat
from .exact import distance_to_free, greedy_disjoint_family, lis_length, verify_witness
from .generators import gen_instance, save_instance
from .harness import (
    estimate_success,
    scaling_experiment,
    summarize,
    write_summary_csv,
    write_trials_jsonl,
)
from .models.constants import load_constants
from .models.instances import FAR_STYLES, FREE_STYLES, InstanceSpec
from .models.reports import BenchConfig, ScalingConfig
from .rng import Rng
from .tester import MonotoneTester
from .version import __version__
from .view import SequenceView, load_sequence

logger = logging.getLogger(__name__)

STYLES = FAR_STYLES + FREE_STYLES


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", type=Path, default=None, help="constants file (.toml or .json)")
    p.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="WARNING",
        help="logging level (default: %(default)s)",
    )


def _add_search(p: argparse.ArgumentParser, *, k_help: str = "pattern length") -> None:
    p.add_argument("--input", type=Path, required=True, help="sequence file (.txt or .f64)")
    p.add_argument("--k", type=int, required=True, help=k_help)
    p.add_argument("--eps", type=float, default=config.DEFAULT_EPS, help="density (default: %(default)s)")
    p.add_argument(
        "--delta", type=float, default=config.DEFAULT_DELTA, help="failure probability (default: %(default)s)"
    )
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED, help="random seed (default: %(default)s)")


def _add_instance(p: argparse.ArgumentParser) -> None:
    p.add_argument("--style", choices=STYLES, default="blocks", help="instance style (default: %(default)s)")
    p.add_argument("--k", type=int, required=True, help="pattern length")
    p.add_argument("--eps", type=float, default=config.DEFAULT_EPS, help="density (default: %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monopattern",
        description="Find length-k increasing patterns with O(log n) adaptive queries.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a certified instance")
    _add_instance(p)
    p.add_argument("--n", type=int, required=True, help="sequence length")
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED, help="instance seed (default: %(default)s)")
    p.add_argument("--out", type=Path, required=True, help="output file (.txt or .f64); certificate goes to <out>.json")
    _add_common(p)

    p = sub.add_parser("find", help="run find_monotone on a sequence file")
    _add_search(p)
    _add_common(p)

    p = sub.add_parser("verify", help="check a witness against a sequence file")
    p.add_argument("--input", type=Path, required=True, help="sequence file (.txt or .f64)")
    p.add_argument("--witness", type=Path, required=True, help="JSON index list or find output")
    _add_common(p)

    p = sub.add_parser("oracle", help="exact LIS, distance to free and greedy family size")
    p.add_argument("--input", type=Path, required=True, help="sequence file (.txt or .f64)")
    p.add_argument("--k", type=int, required=True, help="pattern length (>= 2)")
    _add_common(p)

    p = sub.add_parser("bench", help="estimate the success rate over seeded trials")
    _add_instance(p)
    p.add_argument("--n", type=int, required=True, help="sequence length")
    p.add_argument("--delta", type=float, default=config.DEFAULT_DELTA, help="failure probability (default: %(default)s)")
    p.add_argument("--trials", type=int, default=config.DEFAULT_TRIALS, help="trial count (default: %(default)s)")
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED, help="base trial seed (default: %(default)s)")
    p.add_argument("--instance-seed", type=int, default=0, help="instance seed (default: %(default)s)")
    p.add_argument("--workers", type=int, default=1, help="parallel trials (default: %(default)s)")
    p.add_argument("--out", type=Path, default=None, help="write <out>.jsonl and <out>.csv")
    _add_common(p)

    p = sub.add_parser("scaling", help="measure mean queries against log2 n")
    _add_instance(p)
    p.add_argument("--n", type=int, nargs="+", required=True, help="sequence lengths (at least 3)")
    p.add_argument("--delta", type=float, default=config.DEFAULT_DELTA, help="failure probability (default: %(default)s)")
    p.add_argument("--trials", type=int, default=50, help="trials per n (default: %(default)s)")
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED, help="base trial seed (default: %(default)s)")
    p.add_argument("--workers", type=int, default=1, help="parallel trials (default: %(default)s)")
    p.add_argument("--out", type=Path, default=None, help="write the report as JSON")
    _add_common(p)

    p = sub.add_parser("lis-test", help="test whether the LIS is at most k")
    _add_search(p, k_help="LIS bound; the search looks for k+1")
    _add_common(p)
    return parser


def _emit(data: dict) -> None:
    print(json.dumps(data))


def _instance_spec(args: argparse.Namespace, n: int, seed: int) -> InstanceSpec:
    far = args.style in FAR_STYLES
    return InstanceSpec(style=args.style, n=n, k=args.k, eps=args.eps if far else None, seed=seed)


def cmd_gen(args: argparse.Namespace) -> int:
    instance = gen_instance(_instance_spec(args, args.n, args.seed))
    sidecar = save_instance(args.out, instance)
    _emit({"out": str(args.out), "certificate": str(sidecar), "n": args.n, "style": args.style})
    return 0


def cmd_find(args: argparse.Namespace) -> int:
    view = SequenceView(load_sequence(args.input))
    tester = MonotoneTester(load_constants(args.config), Rng(args.seed))
    outcome = tester.find_monotone(view, args.k, args.eps, args.delta)
    _emit(outcome.to_dict())
    return 0


def _read_witness(path: Path) -> List[int]:
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
        if isinstance(data, dict):
            # A Fail outcome carries "witness": null.
            data = data.get("witness") or data.get("indices") or []
        return [int(i) for i in data]
    except (ValueError, TypeError) as exc:
        raise UnsupportedFormat(f"{path.name} holds no index list: {exc}", code="witness_format") from exc


def cmd_verify(args: argparse.Namespace) -> int:
    values = load_sequence(args.input)
    _emit({"valid": verify_witness(values, _read_witness(args.witness))})
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    values = load_sequence(args.input)
    _emit(
        {
            "lis": lis_length(values),
            "distance_k": distance_to_free(values, args.k),
            "greedy_family_size": len(greedy_disjoint_family(values, args.k)),
        }
    )
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    bench = BenchConfig(
        instance=_instance_spec(args, args.n, args.instance_seed),
        eps=args.eps,
        delta=args.delta,
        trials=args.trials,
        base_seed=args.seed,
        constants=load_constants(args.config),
        workers=args.workers,
    )
    estimate = estimate_success(bench)
    rows = summarize(estimate.records)
    if args.out is not None:
        write_trials_jsonl(args.out.with_name(args.out.name + ".jsonl"), estimate.records)
        write_summary_csv(args.out.with_name(args.out.name + ".csv"), rows)
    _emit(rows[0].model_dump())
    return 0


def cmd_scaling(args: argparse.Namespace) -> int:
    scaling = ScalingConfig(
        ns=args.n,
        style=args.style,
        k=args.k,
        eps=args.eps,
        delta=args.delta,
        trials=args.trials,
        base_seed=args.seed,
        constants=load_constants(args.config),
        workers=args.workers,
    )
    report = scaling_experiment(scaling)
    if args.out is not None:
        args.out.write_text(report.model_dump_json(indent=2), encoding="utf-8")
    _emit(report.model_dump())
    return 0


def cmd_lis_test(args: argparse.Namespace) -> int:
    view = SequenceView(load_sequence(args.input))
    tester = MonotoneTester(load_constants(args.config), Rng(args.seed))
    outcome = tester.test_far(view, args.k + 1, args.eps, args.delta)
    if outcome.found:
        print(f"LIS > {args.k}, witness {list(outcome.witness.indices)} ({outcome.queries} queries)")
    else:
        print(f"LIS ≤ {args.k} plausible ({outcome.queries} queries)")
    return 0


COMMANDS = {
    "gen": cmd_gen,
    "find": cmd_find,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "bench": cmd_bench,
    "scaling": cmd_scaling,
    "lis-test": cmd_lis_test,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except MonopatternError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValidationError as exc:
        print(f"error: invalid parameters\n{exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
