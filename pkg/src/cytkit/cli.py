"""Command-line front end.

Exit codes: 0 on success, 2 for bad input, 3 when a computed invariant fails.
Every number is printed exactly, rationals as ``p/q``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, painted, rootsys, ssq
from .errors import DomainError, MathAssertionError
from .exforms import cyt, strominger
from .exforms.presentations import (
    load_presentation,
    su2su2_complex_structure,
    su2su2_presentation,
)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _csv(values) -> str:
    return ",".join(str(v) for v in values)


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


# -- subcommands ----------------------------------------------------------------------

def cmd_roots(args) -> int:
    series = rootsys.Series.parse(args.series)
    total = rootsys.sum_positive_roots(series, args.rank)
    coeffs = rootsys.simple_root_coefficients(total, series, args.rank)
    roots = rootsys.positive_roots(series, args.rank)
    doc = {
        "series": series.value,
        "rank": args.rank,
        "sum": total.to_strings(),
        "sum_coefficients": [str(c) for c in coeffs],
        "positive_roots": [r.to_strings() for r in roots],
    }
    if args.sum and args.coeffs:
        text = " ".join(str(c) for c in coeffs)
    elif args.sum:
        text = _csv(total)
    elif args.coeffs:
        text = "\n".join(" ".join(str(c) for c in rootsys.simple_root_coefficients(r, series, args.rank)) for r in roots)
    else:
        text = "\n".join(_csv(r) for r in roots)
    _emit(args, doc, text)
    return 0


def cmd_koszul(args) -> int:
    d = painted.PaintedDiagram.parse(args.diagram)
    sigma = painted.koszul_form(d)
    doc = {
        "diagram": str(d),
        "koszul": sigma.to_strings(),
        "simple_root_coefficients": [str(c) for c in painted.koszul_coefficients(d)],
        "white_components": [
            {"series": c.series.value, "rank": c.rank, "nodes": list(c.nodes)} for c in painted.white_components(d)
        ],
    }
    if d.series is rootsys.Series.A:
        doc["chain_multipliers"] = {str(k): v for k, v in painted.chain_multipliers(d).items()}
    _emit(args, doc, _csv(sigma))
    return 0


def cmd_c1(args) -> int:
    d = painted.PaintedDiagram.parse(args.diagram)
    blocks = painted.BlockStructure.parse(args.blocks) if args.blocks else painted.block_structure(d)
    m = painted.c1_condition_matrix(d, blocks)
    doc = {"diagram": str(d), "blocks": str(blocks), "matrix": m.tolist()}
    lines = [f"diagram: {d}", str(blocks), "matrix:"] + ["  " + _csv(r) for r in m.tolist()]
    if args.enumerate is not None:
        lat = painted.enumerate_embeddings(d, blocks, args.enumerate)
        doc["kernel_rank"] = lat.kernel_rank
        doc["kernel"] = [list(v) for v in lat.kernel]
        doc["torus"] = [list(v) for v in lat.basis]
        doc["diagonal"] = [painted.diagonal_embedding(blocks, v) for v in lat.basis]
        doc["c1_vanishes"] = painted.c1_vanishes(d, blocks, lat.basis)
        doc["dimension"] = painted.quotient_dimension(d, args.enumerate)
        lines += [f"kernel rank: {lat.kernel_rank}", "torus:"] + ["  " + _csv(v) for v in lat.basis]
        lines += [f"c1 vanishes: {str(doc['c1_vanishes']).lower()}", f"dimension: {doc['dimension']}"]
    _emit(args, doc, "\n".join(lines))
    return 0


def _cohomology_doc(res: ssq.SpectralResult, rel: ssq.RingPresentation) -> dict:
    p = res.polys
    return {
        "weights": list(res.weights.weights),
        "M4": p.M4,
        "N6": p.N6,
        "K8": p.K8,
        "L": res.L,
        "eligible": True,
        "cohomology": {str(d): g.to_json() for d, g in sorted(res.cohomology.groups.items())},
        "relations": rel.relations,
        "presentation": rel.to_json(),
    }


def cmd_cohomology(args) -> int:
    res = ssq.spectral_sequence(args.k, args.l)
    rel = ssq.ring_relations(args.k, args.l)
    doc = _cohomology_doc(res, rel)
    if args.pages:
        doc["pages"] = [pg.to_json() for pg in res.pages]
    p = res.polys
    lines = [
        f"weights: {_csv(res.weights.weights)}",
        f"M4 = {p.M4}, N6 = {p.N6}, K8 = {p.K8}, L = {res.L}, |M4/L| = {rel.order}",
    ]
    lines += [f"H^{d} = {res.cohomology[d]}" for d in range(ssq.TOP_DIMENSION + 1)]
    lines.append("relations: " + " = ".join(rel.relations) + " = 0")
    if not rel.consistent:
        bad = rel.mismatches()
        lines.append(f"presentation disagrees with the computed groups in degree{'s' if len(bad) > 1 else ''} "
                     + ", ".join(str(d) for d in bad))
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_scan(args) -> int:
    rows = ssq.family_scan(args.k_max, with_cohomology=args.cohomology)
    doc = {"rows": [r.to_json() for r in rows], "distinct_orders": len({r.order for r in rows if r.eligible})}
    lines = ["k l L |M4/L| eligible" + (" H^4" if args.cohomology else "")]
    for r in rows:
        tail = f" {r.h4}" if args.cohomology else ""
        lines.append(f"{r.k} {r.l} {r.L} {r.order} {str(r.eligible).lower()}{tail}")
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_cyt_su2su2(args) -> int:
    a, b = args.a, args.b
    region = cyt.su2su2_cyt_region(a, b)
    doc = {"a": str(a), "b": str(b), "admissible": region}
    if region:
        g = cyt.su2su2_cyt_metric(a, b)
        q = su2su2_presentation()
        sigma = q.basis("a1") + q.basis("a2")
        doc["metric"] = g.to_json()
        doc["cyt_equation"] = cyt.cyt_equation_check(q, g, su2su2_complex_structure(q, a, b), sigma)
        text = "admissible: true, metric: " + "; ".join(_csv(r) for r in g.to_json())
    else:
        try:
            cyt.su2su2_cyt_metric(a, b)
            reason = ""
        except DomainError as exc:
            reason = str(exc)
        doc["reason"] = reason
        text = f"admissible: false ({reason})"
    _emit(args, doc, text)
    return 0


def cmd_cyt_su3(args) -> int:
    lam = {"alpha": args.alpha, "beta": args.beta, "alpha+beta": args.alpha_beta}
    ok, residual = cyt.su3_cyt_family(lam)
    delta = cyt.su3_codifferential(lam)
    doc = {
        "lambda": {k: str(v) for k, v in lam.items()},
        "cyt": ok,
        "residual": [str(x) for x in residual],
        "deltaF": delta.to_json(),
    }
    _emit(args, doc, f"cyt: {str(ok).lower()}, residual: {_csv(residual)}, deltaF: {delta}")
    return 0


def cmd_verify_strominger(args) -> int:
    data = load_presentation(args.presentation)
    rep = strominger.strominger_report(data, args.a, args.b)
    doc = rep.to_json()
    an = rep.anomaly
    lines = [
        f"F = {rep.F}",
        f"F^2 = {rep.F_squared}",
        f"dF^2 = {rep.dF_squared}",
        f"balanced: {'yes' if rep.balanced else 'no'}",
        f"integrable: {'yes' if rep.integrable else 'no'}",
        f"holomorphic volume form closed: {'yes' if rep.volume_form_closed else 'no'}",
        f"ddcF = {rep.ddcF}",
        f"trRR = {an.trRR}",
        f"trFA = {an.trFA}",
        f"solvable: {'yes' if an.solvable else 'no'}",
    ]
    if an.solvable:
        lines.append(f"alpha' = {an.alpha_prime}")
    else:
        lines.append(f"reason: {an.reason}")
    lines += [f"check {k}: {'ok' if v else 'FAILED'}" for k, v in rep.checks.items()]
    _emit(args, doc, "\n".join(lines))
    if not all(rep.checks.values()):
        raise MathAssertionError("tr R^R is not a^2 ddcF: " + ", ".join(k for k, v in rep.checks.items() if not v))
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        entries = catalog.ENTRIES
        doc = {"entries": [e.to_json() for e in entries]}
        text = "\n".join(f"{e.name:24} {e.title}  [{', '.join(sorted(e.tags))}]" for e in entries)
        _emit(args, doc, text)
        return 0
    if args.name == "all":
        results = catalog.check_all()
    elif args.name is None:
        raise DomainError("catalog check needs an entry name or 'all'")
    else:
        results = [catalog.check(args.name)]
    doc = {"results": [r.to_json() for r in results]}
    text = "\n".join(
        f"{r.entry.name}: {'ok' if r.ok else 'MISMATCH'} [{', '.join(sorted(r.derived))}]" for r in results
    )
    _emit(args, doc, text)
    bad = [r.entry.name for r in results if not r.ok]
    if bad:
        raise MathAssertionError(f"recomputed tags differ from the declared ones for {bad}")
    return 0


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="cytkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="positive roots of a classical series")
    p.add_argument("series")
    p.add_argument("rank", type=int)
    p.add_argument("--sum", action="store_true", help="sum of the positive roots")
    p.add_argument("--coeffs", action="store_true", help="simple-root coefficients")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("koszul", parents=[common], help="Koszul form of a painted diagram, e.g. A10:1,2,6,9")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_koszul)

    p = sub.add_parser("c1", parents=[common], help="c1 = 0 conditions on the torus variables")
    p.add_argument("diagram")
    p.add_argument("blocks", nargs="?", help="e.g. blocks=1,1,su4,su3,su2 (default: from the painting)")
    p.add_argument("--enumerate", type=int, metavar="DIM", help="report DIM integer torus directions")
    p.set_defaults(func=cmd_c1)

    p = sub.add_parser("cohomology", parents=[common], help="integral cohomology of SU(4)/U(1)")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--pages", action="store_true", help="include every page in the JSON output")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("scan", parents=[common], help="scan k = 1..K_MAX with l = 1")
    p.add_argument("k_max", type=int)
    p.add_argument("--cohomology", action="store_true", help="also compute H^4 for each row")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("cyt-su2su2", parents=[common], help="CYT metric for the complex structure (a, b)")
    p.add_argument("a", type=_rational)
    p.add_argument("b", type=_rational)
    p.set_defaults(func=cmd_cyt_su2su2)

    p = sub.add_parser("cyt-su3", parents=[common], help="root-plane scaled metrics on SU(3)")
    p.add_argument("alpha", type=_rational)
    p.add_argument("beta", type=_rational)
    p.add_argument("alpha_beta", type=_rational, metavar="alpha+beta")
    p.set_defaults(func=cmd_cyt_su3)

    p = sub.add_parser("verify-strominger", parents=[common], help="anomaly equation on a presentation file")
    p.add_argument("presentation", help="JSON file, or the name of a bundled presentation")
    p.add_argument("--a", type=_rational, default=Fraction(1), help="connection scale")
    p.add_argument("--b", type=_rational, default=Fraction(0), help="instanton coefficient")
    p.set_defaults(func=cmd_verify_strominger)

    p = sub.add_parser("catalog", parents=[common], help="list or re-check the worked examples")
    p.add_argument("action", choices=["list", "check"])
    p.add_argument("name", nargs="?", help="entry name, or 'all'")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MathAssertionError as exc:
        print(f"invariant failed: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
