"""
coxinv - exact torus-invariant ring classifier for G/B

Builds root data for every simple type, enumerates Coxeter-semistable
indecomposable characters and decides polynomiality of their invariant rings,
all in exact integer and rational arithmetic.

Environment variables:
- COXINV_LOG_LEVEL: logging level (default: INFO)
- COXINV_THREADS: worker cap for batch classification (default: CPU count)
- COXINV_RANK_CAP: largest rank for Coxeter enumeration (default: 9)
- COXINV_WEYL_CAP: largest |W| for the Kostant oracle (default: 2000)
- COXINV_HEIGHT_BOUND: default enumeration height bound (default: 12)
- COXINV_DEGREE_BOUND: default Hilbert prefix length (default: 4)

Usage:
    python cli.py classify --family A --rank 3 --height-bound 16
"""
import os
import sys
import logging
import argparse
from datetime import datetime, timezone
from functools import partial
from typing import Any, Dict, List, Optional, Sequence

from lib.characters import enumerate_semistable_indecomposables
from lib.data_types import VERSION, Check, CoxinvException, IndexOutOfRange, Report, RootSystemSpec, Weight
from lib.multiplicity import kostant_multiplicity_oracle, weight_multiplicities, weight_multiplicity, weyl_dim
from lib.ringanalysis import DEGREE_BOUND, verdict
from lib.rootsystem import RootSystem, build
from lib.verification import SWEEP_HEIGHT, SuiteParameters, run_checks
from lib.weyl import (
    RANK_CAP,
    WEYL_CAP,
    enumerate_coxeter_elements,
    expected_coxeter_count,
    length,
    right_descents,
    weyl_group_order,
)
from utils.serialize import write_report
from utils.workers import THREADS, run_batch

LOG_LEVEL = os.environ.get("COXINV_LOG_LEVEL", "INFO").upper()
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format="%(asctime)s[%(levelname)-5s] %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)
log = logging.getLogger(__file__)

HEIGHT_BOUND = int(os.environ.get("COXINV_HEIGHT_BOUND", "12"))


def weight_arg(text: str) -> Weight:
    try:
        return Weight(int(part) for part in text.replace(" ", "").split(",") if part)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _root_system(args: argparse.Namespace) -> RootSystem:
    return build(RootSystemSpec(family=args.family.upper(), rank=args.rank))


def _parameters(args: argparse.Namespace, **extra: Any) -> Dict[str, Any]:
    params = {
        "command": args.command,
        "height_bound": args.height_bound,
        "degree_bound": args.degree_bound,
        "weyl_cap": args.weyl_cap,
        "rank_cap": RANK_CAP,
    }
    params.update(extra)
    return params


def _check_length(rs: RootSystem, weight: Sequence[int], what: str) -> None:
    if len(weight) != rs.rank:
        raise IndexOutOfRange({"root_system": rs.label, what: list(weight), "expected_length": rs.rank})


def cmd_roots(args: argparse.Namespace) -> Report:
    rs = _root_system(args)
    rows: List[Dict[str, Any]] = []
    for i, row in enumerate(rs.cartan.tolist(), start=1):
        rows.append({"kind": "cartan_row", "index": i, "values": row})
    rows.append({"kind": "symmetrizers", "values": list(rs.symmetrizers)})
    for k, root in enumerate(rs.positive_roots, start=1):
        rows.append({"kind": "positive_root", "index": k, "root_coords": list(root),
                     "weight": list(rs.positive_root_weights[k - 1]), "height": sum(root)})
    for i, coords in enumerate(rs.fundamental_weights, start=1):
        rows.append({"kind": "fundamental_weight", "index": i, "root_coords": list(coords)})
    rows.append({"kind": "rho", "weight": list(rs.rho)})
    rows.append({"kind": "highest_long_root", "weight": list(rs.highest_long_root),
                 "root_coords": list(rs.highest_long_root_coords)})
    return Report(VERSION, rs.spec.as_dict(), _parameters(args), rows=rows)


def cmd_coxeter(args: argparse.Namespace) -> Report:
    rs = _root_system(args)
    elements = enumerate_coxeter_elements(rs, RANK_CAP)
    rows = [
        {
            "word": list(c.word),
            "name": c.name,
            "matrix": c.element.matrix.tolist(),
            "length": length(c.element),
            "right_descents": sorted(right_descents(c.element)),
        }
        for c in elements
    ]
    checks = [Check.compare("coxeter_count", "distinct Coxeter elements = 2^(Dynkin edges)",
                            expected_coxeter_count(rs.spec), len(elements))]
    return Report(VERSION, rs.spec.as_dict(), _parameters(args), rows=rows, checks=checks)


def cmd_multiplicity(args: argparse.Namespace) -> Report:
    rs = _root_system(args)
    lam = args.highest_weight
    _check_length(rs, lam, "highest_weight")
    table = weight_multiplicities(rs, lam)
    if args.all:
        targets = table.dominant_weights()
    else:
        mu = args.weight if args.weight is not None else Weight([0] * rs.rank)
        _check_length(rs, mu, "weight")
        targets = [mu]
    rows, checks = [], []
    for mu in targets:
        m = weight_multiplicity(rs, lam, mu)
        row = {"highest_weight": list(lam), "weight": list(mu), "multiplicity": m}
        if args.oracle:
            oracle = kostant_multiplicity_oracle(rs, lam, mu, args.weyl_cap)
            row["kostant"] = oracle
            checks.append(Check.compare(f"oracle_{'_'.join(map(str, mu))}", "Freudenthal ≡ Kostant alternating sum", oracle, m))
        rows.append(row)
    checks.append(Check.compare("dimension", "Σ_μ m(μ) = Weyl dimension", weyl_dim(rs, lam), table.dimension()))
    return Report(VERSION, rs.spec.as_dict(), _parameters(args, oracle=args.oracle), rows=rows, checks=checks)


def cmd_enumerate(args: argparse.Namespace) -> Report:
    rs = _root_system(args)
    rows = [
        {
            "weight": list(e.character.weight),
            "root_coords": list(e.character.root_coords),
            "height": e.character.height,
            "witnesses": e.names,
        }
        for e in enumerate_semistable_indecomposables(rs, args.height_bound, RANK_CAP)
    ]
    return Report(VERSION, rs.spec.as_dict(), _parameters(args), rows=rows)


def cmd_classify(args: argparse.Namespace) -> Report:
    rs = _root_system(args)
    characters = [e.character for e in enumerate_semistable_indecomposables(rs, args.height_bound, RANK_CAP)]
    verdicts = run_batch(partial(verdict, rs, degree_bound=args.degree_bound), characters, THREADS)
    oracle = weyl_group_order(rs.spec) <= args.weyl_cap
    zero = [0] * rs.rank
    rows, checks = [], []
    for v in verdicts:
        rows.append(v.to_report().as_row())
        tag = "_".join(map(str, v.character.weight))
        if oracle:
            checks.append(Check.compare(f"{tag}_zero_weight_oracle", "Freudenthal ≡ Kostant alternating sum",
                                        kostant_multiplicity_oracle(rs, v.character.weight, zero, args.weyl_cap),
                                        v.zero_weight_dim))
        checks.append(Check(name=f"{tag}_coherent", anchor="polynomial iff dim H⁰(L_χ)ᵀ ≤ rank",
                            expected=True, actual=v.coherent, passed=v.coherent))
    if not oracle:
        log.info(f"|W({rs.label})| exceeds weyl_cap {args.weyl_cap}; zero-weight oracle skipped")
    return Report(VERSION, rs.spec.as_dict(), _parameters(args), rows=rows, checks=checks)


def cmd_verify_paper(args: argparse.Namespace) -> Report:
    params = SuiteParameters(max_rank=args.max_rank, weyl_cap=args.weyl_cap, sweep_height=args.height_bound,
                             degree_bound=args.degree_bound, threads=THREADS)
    checks = run_checks(params)
    return Report(VERSION, {"scope": "all simple types", "max_rank": args.max_rank},
                  {"command": args.command, **params.as_dict()}, checks=checks)


COMMANDS = {
    "roots": cmd_roots,
    "coxeter": cmd_coxeter,
    "multiplicity": cmd_multiplicity,
    "enumerate": cmd_enumerate,
    "classify": cmd_classify,
    "verify-paper": cmd_verify_paper,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cli.py",
        description="Exact torus-invariant ring classifier for G/B",
        epilog="""
Examples:
  # Root data of B3 as JSON
  python cli.py roots --family B --rank 3

  # Coxeter elements of D4 with their descent sets
  python cli.py coxeter --family D --rank 4 --format tsv

  # Multiplicity of the zero weight in V(2w1) of B3, cross-checked by Kostant
  python cli.py multiplicity --family B --rank 3 --highest-weight 2,0,0 --oracle

  # Polynomiality verdicts for A4
  python cli.py classify --family A --rank 4 --height-bound 20 --out a4.json

  # Every reproduction check; exit status 0 iff all pass
  python cli.py verify-paper
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree-bound", type=int, default=DEGREE_BOUND,
                        help=f"Hilbert prefix length D (default: {DEGREE_BOUND})")
    common.add_argument("--weyl-cap", type=int, default=WEYL_CAP,
                        help=f"Largest |W| for the Kostant oracle (default: {WEYL_CAP})")
    common.add_argument("--format", choices=["json", "tsv"], default="json", help="Report format (default: json)")
    common.add_argument("--out", help="Write the report to this path instead of stdout")
    common.add_argument("--timestamp", action="store_true", help="Add a generated_at header outside the canonical body")
    common.add_argument("--debug", action="store_true", help="Enable debug logging")

    typed = argparse.ArgumentParser(add_help=False, parents=[common])
    typed.add_argument("--height-bound", type=int, default=HEIGHT_BOUND,
                       help=f"Largest Σ of root coordinates to enumerate (default: {HEIGHT_BOUND})")
    typed.add_argument("--family", required=True, help="Cartan type letter, one of A B C D E F G")
    typed.add_argument("--rank", type=int, required=True, help="Rank of the root system")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("roots", parents=[typed], help="Cartan matrix, positive roots, fundamental weights, ρ, α₀")
    sub.add_parser("coxeter", parents=[typed], help="Distinct Coxeter elements with lengths and right descents")
    mult = sub.add_parser("multiplicity", parents=[typed], help="Weight multiplicities of V(λ)")
    mult.add_argument("--highest-weight", type=weight_arg, required=True, help="λ as comma-separated integers")
    mult.add_argument("--weight", type=weight_arg, help="μ as comma-separated integers (default: zero weight)")
    mult.add_argument("--all", action="store_true", help="Report every dominant weight of V(λ)")
    mult.add_argument("--oracle", action="store_true", help="Cross-check each value with the Kostant oracle")
    sub.add_parser("enumerate", parents=[typed], help="Coxeter-semistable indecomposable characters")
    sub.add_parser("classify", parents=[typed], help="Polynomiality verdict per semistable indecomposable")
    verify = sub.add_parser("verify-paper", parents=[common], help="Run every reproduction check")
    verify.add_argument("--max-rank", type=int, default=6, help="Largest classical rank in rank sweeps (default: 6)")
    verify.add_argument("--height-bound", type=int, default=SWEEP_HEIGHT,
                        help=f"Height bound of the rank sweep (default: {SWEEP_HEIGHT})")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.debug:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        report = COMMANDS[args.command](args)
    except CoxinvException as e:
        log.error(f"{args.command} failed: {e}")
        print(str(e), file=sys.stderr)
        return 2

    if args.timestamp:
        report.generated_at = datetime.now(timezone.utc).isoformat(timespec="seconds")
    text = write_report(report, args.format, args.out)
    if not args.out:
        sys.stdout.write(text)

    for check in report.failed_checks:
        log.error(f"check {check.name} failed: expected {check.expected}, got {check.actual}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
