import argparse
import json
import logging
import sys
from pathlib import Path

from paramodring.config import settings
from paramodring.core.rational import format_rational
from paramodring.database import SessionLocal, init_db
from paramodring.errors import ParamodError, WindowTooSmall, WindowUnstable
from paramodring.gralg.graded import monomials_of_weight, relations_in_weight
from paramodring.gralg.hilbert import CATALOGUE
from paramodring.gralg.presets import build_preset
from paramodring.gralg.stanley import cyclotomic_product_test, palindrome_test
from paramodring.paramod.eisenstein import jacobi_eisenstein
from paramodring.paramod.jacobi import format_jacobi, parse_jacobi
from paramodring.paramod.lift import LiftCoefficients, ParamodularSeries, gritsenko_lift
from paramodring.paramod.pullback import pullback_P4, pullback_P5, pullback_P8, witt_taylor
from paramodring.paramod.tables import check_data_dir
from paramodring.series.codec import series_to_json
from paramodring.suites.runner import SUITES, recent_runs, run_suites

logger = logging.getLogger("paramodring")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

RELATION_PRESETS = ("MG", "Astar", "gamma2")


def _configure_logging():
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.INFO),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _emit(payload, out: str | None = None):
    """Deterministic JSON to --out or stdout."""
    text = json.dumps(payload, indent=1, sort_keys=True) + "\n"
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("Wrote %s", path)
    else:
        sys.stdout.write(text)


# --- commands ---

def cmd_lift(args) -> int:
    phi = parse_jacobi(args.jacobi)
    if phi.index != args.level:
        raise ParamodError(f"table has index {phi.index}, --level is {args.level}")
    F = gritsenko_lift(phi, args.amax, args.cmax)
    logger.info("Lift of %s: %d nonzero coefficients on box %s", args.jacobi, len(F.items()), F.box)
    _emit(F.to_json(), args.out)
    return EXIT_OK


def _pullback_source(args):
    if args.series:
        return ParamodularSeries.from_json(json.loads(Path(args.series).read_text(encoding="utf-8")))
    phi = parse_jacobi(args.jacobi)
    if args.amax is not None or args.cmax is not None:
        if args.amax is None or args.cmax is None:
            raise ParamodError("--amax and --cmax go together")
        return gritsenko_lift(phi, args.amax, args.cmax)
    return LiftCoefficients(phi)


def cmd_pullback(args) -> int:
    source = _pullback_source(args)
    if args.op == "P1":
        if not isinstance(source, ParamodularSeries):
            raise ParamodError("P1 needs a materialised series: pass --series or --amax/--cmax")
        result = witt_taylor(source, args.taylor or 0)
    elif args.taylor is not None:
        raise ParamodError("--taylor only applies to P1")
    elif args.op == "P4":
        result = pullback_P4(source)
    elif args.op == "P5":
        result = pullback_P5(source)
    else:
        result = pullback_P8(source)
    _emit(series_to_json(result), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite in ("paramod", "all"):
        check_data_dir()
    record = True if args.record else None
    results = run_suites(args.suite, fail_fast=args.fail_fast, record=record)
    if args.json:
        _emit([r.to_dict() for r in results])
    else:
        sys.stdout.write("\n\n".join(r.table() for r in results) + "\n")
    return max((r.exit_code for r in results), default=EXIT_OK)


def cmd_relations(args) -> int:
    gens = build_preset(args.preset, args.weight_max)
    weights = []
    status = EXIT_OK
    for k in range(args.weight_max + 1):
        n_monomials = len(monomials_of_weight(gens, k))
        entry = {"weight": k, "monomials": n_monomials}
        try:
            relations = relations_in_weight(gens, k)
        except (WindowTooSmall, WindowUnstable) as e:
            logger.warning("weight %d undecided: %s", k, e)
            entry["undecided"] = str(e)
            status = EXIT_FAILED
        else:
            entry["rank"] = n_monomials - len(relations)
            entry["relations"] = [
                [{"monomial": gens.label_of(m), "coefficient": format_rational(c)} for m, c in rel]
                for rel in relations
            ]
        weights.append(entry)
    _emit({"preset": args.preset, "generators": gens.labels, "weights": weights})
    return status


def cmd_hilbert(args) -> int:
    series = CATALOGUE[args.series]
    _emit({
        "series": args.series,
        "numerator": series.numerator_coeffs(),
        "denominators": list(series.denominators),
        "expansion": series.expand(args.kmax),
        "palindromic": palindrome_test(series),
        "cyclotomic_product": cyclotomic_product_test(series),
    })
    return EXIT_OK


def cmd_eisenstein(args) -> int:
    data = jacobi_eisenstein(args.weight, args.level, args.max_n)
    text = format_jacobi(data, args.max_n)
    if args.out:
        path = Path(args.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("Wrote %s", path)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_history(args) -> int:
    init_db()
    db = SessionLocal()
    try:
        _emit(recent_runs(db, args.limit))
    finally:
        db.close()
    return EXIT_OK


COMMANDS = {
    "lift": cmd_lift,
    "pullback": cmd_pullback,
    "verify": cmd_verify,
    "relations": cmd_relations,
    "hilbert": cmd_hilbert,
    "eisenstein": cmd_eisenstein,
    "history": cmd_history,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paramodring",
        description="Exact computations with paramodular, Jacobi and degenerate Hilbert modular forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lift", help="Gritsenko lift of a Jacobi table on a box")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--jacobi", required=True)
    p.add_argument("--amax", type=int, required=True)
    p.add_argument("--cmax", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("pullback", help="P1 (with Taylor moments), P4, P5 or P8 of a paramodular expansion")
    p.add_argument("--op", choices=("P1", "P4", "P5", "P8"), required=True)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--series")
    source.add_argument("--jacobi")
    p.add_argument("--amax", type=int)
    p.add_argument("--cmax", type=int)
    p.add_argument("--taylor", type=int)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="Run a verification suite")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--json", action="store_true")
    p.add_argument("--record", action="store_true")
    p.add_argument("--fail-fast", action="store_true")

    p = sub.add_parser("relations", help="Ranks and relations of a generator preset by weight")
    p.add_argument("--preset", choices=RELATION_PRESETS, required=True)
    p.add_argument("--weight-max", type=int, required=True)

    p = sub.add_parser("hilbert", help="Expand a catalogued Hilbert series and test Stanley's criteria")
    p.add_argument("--series", choices=sorted(CATALOGUE), required=True)
    p.add_argument("--kmax", type=int, default=30)

    p = sub.add_parser("eisenstein", help="Write a Jacobi Eisenstein table")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("history", help="Recently recorded verification runs")
    p.add_argument("--limit", type=int, default=20)

    return parser


def main(argv=None) -> int:
    _configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (ParamodError, ValueError, OSError, KeyError) as e:
        logger.error("%s: %s", args.command, e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
