"""Command-line front end.

Exit codes: 0 result delivered, 1 internal error, 2 invalid input or
inapplicable, 3 reproduce failure, 4 nonslice found no certificate.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .branched_cover import Inapplicable, linking_form, moebius_obstruction
from .knots import resolve_knot
from .linalg import IntMatrix
from .obstruction import F_bound_exhaustive_check, certify_nonslice, search_seed_knot
from .report import Report, certificate_to_dict, frac_str
from .reproduce import Context, render, run_checks
from .signatures import lt_signature
from .surgery import FramedLinkPresentation, boundary_presentation, h1_of_presentation

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_REPRODUCE, EXIT_EMPTY = 0, 1, 2, 3, 4


def lambda_range(text: str) -> tuple[int, ...]:
    try:
        a, b = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b with integers, got {text!r}")
    if a > b:
        raise argparse.ArgumentTypeError(f"empty lambda range {text!r}")
    return tuple(range(a, b + 1))


def _global_options(defaults: bool) -> argparse.ArgumentParser:
    # the same flags are accepted before and after the subcommand; after it
    # they default to SUPPRESS so they do not clobber earlier values
    p = argparse.ArgumentParser(add_help=False)

    def dflt(v):
        return v if defaults else argparse.SUPPRESS

    p.add_argument("--json", action="store_true", default=dflt(False), help="machine-readable output")
    p.add_argument("--seed", type=int, default=dflt(0), help="seed for randomized checks")
    p.add_argument("--threads", type=int, default=dflt(1), help="worker processes")
    p.add_argument("--lambda-range", type=lambda_range, default=dflt(tuple(range(-3, 4))),
                   metavar="A:B", help="framing parameters to sweep (inclusive)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cgslice", parents=[_global_options(True)],
                                     description="Signature obstructions for knots in S^1 x S^2.")
    parser.add_argument("--version", action="version", version=f"cgslice {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_global_options(False)]

    p = sub.add_parser("sig", parents=common, help="Levine-Tristram signature at exp(2 pi i p/d)")
    p.add_argument("knot")
    p.add_argument("d", type=int)
    p.add_argument("p", type=int)

    p = sub.add_parser("nonslice", parents=common, help="certificate that K_w(J) is not slice")
    p.add_argument("w", type=int)
    p.add_argument("knot", nargs="?")
    p.add_argument("--search", action="store_true", help="search the two-torus-knot seed family")
    p.add_argument("--max-summands", type=int, default=40)

    p = sub.add_parser("moebius", parents=common, help="Moebius-band obstruction from the linking form")
    p.add_argument("knot")

    p = sub.add_parser("h1", parents=common, help="first homology of a framed surgery")
    p.add_argument("w", type=int, nargs="?")
    p.add_argument("f", type=int, nargs="?")
    p.add_argument("--matrix", type=Path, help="JSON linking-framing matrix")

    p = sub.add_parser("fbound", parents=common, help="exhaustive correction-term bound check")
    p.add_argument("a", type=int)
    p.add_argument("f", type=int)
    p.add_argument("d", type=int)

    sub.add_parser("reproduce", parents=common, help="replay every worked value and acceptance check")
    return parser


# --- commands ----------------------------------------------------------------

def cmd_sig(args) -> Report:
    J = resolve_knot(args.knot)
    if args.d < 2 or args.p % args.d == 0:
        raise ValueError(f"invalid root (d, p) = ({args.d}, {args.p}); need d >= 2 and d not dividing p")
    v = lt_signature(J, (args.d, args.p % args.d))
    return Report("sig", {"knot": args.knot, "d": args.d, "p": args.p},
                  {"sigma": v.sigma, "eta": v.eta, "genus": J.genus})


def cmd_nonslice(args) -> Report:
    if args.w <= 0:
        raise ValueError("winding number must be positive")
    if args.search == (args.knot is not None):
        raise ValueError("give exactly one of a knot or --search")
    lambdas = args.lambda_range
    params = {"w": args.w, "knot": args.knot, "search": args.search,
              "lambdas": [lambdas[0], lambdas[-1]]}
    if args.search:
        params["max_summands"] = args.max_summands
        found = search_seed_knot(args.w, args.max_summands, lambdas)
        cert = None if found is None else found.certificate
        result = {"seed": None if found is None else found.seed.spec}
    else:
        cert = certify_nonslice(args.w, resolve_knot(args.knot), lambdas)
        result = {}
    result["certificate"] = None if cert is None else certificate_to_dict(cert)
    result["verified"] = cert is not None and cert.verify()
    return Report("nonslice", params, result, EXIT_OK if cert is not None else EXIT_EMPTY)


def cmd_moebius(args) -> Report:
    J = resolve_knot(args.knot)
    verdict = moebius_obstruction(J)
    result = {"verdict": str(verdict)}
    try:
        lf = linking_form(J)
        result.update(order=lf.order, self_link=frac_str(lf.self_link))
    except Inapplicable as exc:
        result["reason"] = str(exc)
    return Report("moebius", {"knot": args.knot}, result)


def _read_matrix(path: Path) -> IntMatrix:
    data = json.loads(path.read_text())
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("matrix file must hold a JSON array of integer rows")
    try:
        return IntMatrix.from_rows(data)
    except TypeError as exc:
        raise ValueError(f"matrix file must hold integers: {exc}") from None


def cmd_h1(args) -> Report:
    if args.matrix is not None:
        if args.w is not None:
            raise ValueError("give either W F or --matrix, not both")
        L = _read_matrix(args.matrix)
        P = FramedLinkPresentation(L, tuple(f"x{i}" for i in range(L.rows)))
        params = {"matrix": L.to_rows()}
    else:
        if args.w is None or args.f is None:
            raise ValueError("need W and F (or --matrix)")
        P = boundary_presentation(args.w, args.f)
        params = {"w": args.w, "f": args.f}
    G = h1_of_presentation(P)
    result = {
        "group": str(G),
        "trivial": G.is_trivial,
        "factors": list(G.factors),
        "order": G.order,
        "generators": {g: {"coords": list(c), "order": G.generator_order(g)} for g, c in G.expressions.items()},
    }
    return Report("h1", params, result)


def cmd_fbound(args) -> Report:
    r = F_bound_exhaustive_check(args.a, args.f, args.d)
    result = {
        "holds": r.holds,
        "points": r.points,
        "violations": [list(v) for v in r.violations],
        "lower_margin": frac_str(r.lower_margin),
        "lower_at": list(r.lower_at),
        "upper_margin": frac_str(r.upper_margin),
        "upper_at": list(r.upper_at),
    }
    return Report("fbound", {"a": args.a, "f": args.f, "d": args.d}, result)


def cmd_reproduce(args) -> tuple[Report, str]:
    ctx = Context(seed=args.seed, threads=args.threads, lambdas=args.lambda_range)
    results = run_checks(ctx)
    ok = all(r.passed for r in results)
    report = Report(
        "reproduce",
        {"seed": ctx.seed, "lambdas": [ctx.lambdas[0], ctx.lambdas[-1]]},
        {"checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
         "passed": sum(r.passed for r in results), "total": len(results)},
        EXIT_OK if ok else EXIT_REPRODUCE,
    )
    return report, render(results, __version__, ctx)


COMMANDS = {
    "sig": cmd_sig,
    "nonslice": cmd_nonslice,
    "moebius": cmd_moebius,
    "h1": cmd_h1,
    "fbound": cmd_fbound,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.command == "reproduce":
            report, text = cmd_reproduce(args)
        else:
            report = COMMANDS[args.command](args)
            text = report.to_text()
    except Inapplicable as exc:
        params = {k: v for k, v in vars(args).items() if k not in ("command", "json", "threads", "lambda_range")}
        report = Report(args.command, params, {"inapplicable": str(exc)}, EXIT_INPUT)
        text = report.to_text()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover - last-resort guard
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(report.to_json() + "\n" if args.json else text)
    return report.status


if __name__ == "__main__":
    sys.exit(main())
