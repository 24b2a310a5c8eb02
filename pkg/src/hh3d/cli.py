"""Command line interface: ``hh3d <subcommand> ...``.

Exit status is 0 for a definitive answer, 2 for an inconclusive verdict and
1 for errors (bad input, insufficient series order, ...).
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .algebra import format_rational, parse_rational
from .analysis import AnalysisConfig, analyze, report_serialize, verdict_dict
from .errors import HH3Error
from .homogeneous import candidate_hits, candidate_search, darboux_eigenvalues, gap_condition, obstructions
from .lame import classify_theoremB1, lame_coefficients, lame_residual
from .poisson import verify_case
from .variational import (VariationalSystem, residue_certificate, scan_residues, ve1_operator,
                          ve1_pair, lame_index_of)
from .weierstrass import gamma_h_solution

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


def _rat(text):
    try:
        return parse_rational(text)
    except HH3Error as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _emit(args, payload, text_lines):
    if args.format == "json":
        sys.stdout.write(json.dumps(_plain(payload), indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _plain(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def _config(args):
    return AnalysisConfig(order=args.order, s_bound=args.s_bound, l_bound=args.l_bound,
                          scan_rhs=args.scan_rhs)


# -- analyze ---------------------------------------------------------------------

def _analyze_row(job):
    row, config = job
    try:
        return analyze(*row, config=config), None
    except HH3Error as exc:
        return None, str(exc)


def _read_batch(path):
    rows = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 6:
                raise HH3Error(f"{path}:{lineno}: expected six rationals, got {len(parts)}")
            rows.append(tuple(parse_rational(p) for p in parts))
    return rows


def cmd_analyze(args):
    config = _config(args)
    if args.batch:
        rows = _read_batch(args.batch)
        jobs = [(r, config) for r in rows]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_analyze_row, jobs))
        else:
            results = [_analyze_row(j) for j in jobs]
        status = EXIT_OK
        for verdict, err in results:
            if err is not None:
                status = EXIT_ERROR
                if args.format == "json":
                    sys.stdout.write(json.dumps({"error": err}, sort_keys=True) + "\n")
                else:
                    sys.stdout.write(f"error: {err}\n\n")
                continue
            if not verdict.definitive and status == EXIT_OK:
                status = EXIT_INCONCLUSIVE
            if args.format == "json":
                sys.stdout.write(json.dumps(verdict_dict(verdict), sort_keys=True) + "\n")
            else:
                sys.stdout.write(report_serialize(verdict, "text").decode() + "\n")
        return status
    if args.params is None or len(args.params) != 6:
        raise HH3Error("analyze needs six rationals A B C alpha beta gamma (or --batch FILE)")
    verdict = analyze(*(parse_rational(p) for p in args.params), config=config)
    sys.stdout.write(report_serialize(verdict, args.format).decode())
    return EXIT_OK if verdict.definitive else EXIT_INCONCLUSIVE


# -- homogeneous ---------------------------------------------------------------

def cmd_homogeneous(args):
    if args.alpha1 is None:
        found = candidate_search(args.s_bound, args.l_bound)
        hits = candidate_hits(args.s_bound, args.l_bound)
        keep = [h for h in hits if h.alpha1 in found]
        payload = {
            "candidates": sorted(found),
            "hits": [{"relation": h.relation, "family": h.family, "s": h.s, "l": h.l, "alpha1": h.alpha1}
                     for h in keep],
            "bounds": {"s": args.s_bound, "l": args.l_bound},
        }
        lines = ["candidates: " + ", ".join(format_rational(a) for a in sorted(found))]
        lines += [f"  {h.relation:8s} {h.family} s={h.s} l={h.l} -> alpha1={format_rational(h.alpha1)}"
                  for h in keep]
        _emit(args, payload, lines)
        return EXIT_OK
    gamma1 = args.gamma1 if args.gamma1 is not None else args.alpha1
    triples = darboux_eigenvalues(args.alpha1, gamma1)
    certs = obstructions(args.alpha1, gamma1)
    rows = []
    for t in triples:
        try:
            gap = gap_condition(t.lambda1, t.lambda2)
            gap_text = gap.status + (f" (l = {gap.l})" if gap.satisfied else "")
        except HH3Error as exc:
            gap_text = f"irrational ({exc})"
        rows.append({"source": t.source, "lambda": [t.lambda1, t.lambda2, t.lambda3],
                     "degenerate": t.degenerate, "gap": gap_text})
    payload = {"alpha1": args.alpha1, "gamma1": gamma1, "triples": rows, "obstructions": certs}
    lines = [f"alpha1 = {format_rational(args.alpha1)}, gamma1 = {format_rational(gamma1)}"]
    for r in rows:
        lam = ", ".join(format_rational(x) for x in r["lambda"])
        lines.append(f"  {r['source']:12s} ({lam}){' degenerate' if r['degenerate'] else ''}  gap: {r['gap']}")
    lines.append(f"obstructions: {len(certs)}")
    lines += [f"  {c}" for c in _plain(certs)]
    _emit(args, payload, lines)
    return EXIT_OK


# -- lame ----------------------------------------------------------------------

def cmd_lame(args):
    branches = ("Xi1", "Xi2") if args.branch == "both" else (args.branch,)
    payload, lines = [], []
    for b in branches:
        data = lame_coefficients(args.alpha1, b)
        verdict = classify_theoremB1(data)
        residual_zero = lame_residual(data, args.order).is_zero()
        entry = {
            "branch": b,
            "coefficients": {k: str(v) for k, v in data.coefficients().items()},
            "case": verdict.case,
            "index": verdict.index,
            "alternatives": [[(lab, str(e)) for lab, e in alt] for alt in verdict.alternatives],
            "impossible": verdict.impossible,
            "reason": verdict.reason,
            "notes": list(verdict.notes),
            "series_residual_zero": residual_zero,
        }
        payload.append(entry)
        lines.append(f"branch {b}: case {verdict.case} ({verdict.reason})")
        lines += [f"  {k} = {v}" for k, v in entry["coefficients"].items()]
        for alt in entry["alternatives"]:
            lines.append("  require: " + ", ".join(f"{lab}: {e} = 0" for lab, e in alt))
        lines.append(f"  series residual vanishes: {residual_zero}")
    _emit(args, payload, lines)
    return EXIT_OK


# -- residue ------------------------------------------------------------------

def cmd_residue(args):
    certs = residue_certificate(args.alpha1, args.order)
    payload = {"certificates": [c.to_dict() for c in certs]}
    lines = [f"{c.integrand_id}: Res = {c.residue}" for c in certs]
    if args.scan_rhs:
        hits = scan_residues(args.alpha1, args.order)
        forms = sorted({str(h.residue) for h in hits})
        payload["scan"] = {"nonzero": len(hits), "distinct_forms": forms}
        lines.append(f"scan: {len(hits)} nonzero residues, {len(forms)} distinct forms")
    if args.dump_series:
        system = VariationalSystem(args.alpha1, args.order)
        dumps = {}
        for (j, i, k), s in sorted(system.series.items()):
            dumps[f"xi_{j}_{i}^({k})"] = s.dump()
        payload["series"] = dumps
        for name, d in dumps.items():
            lines.append(f"{name}:")
            lines += ["  " + x for x in d.splitlines()]
    _emit(args, payload, lines)
    return EXIT_OK


# -- verify-integrals -----------------------------------------------------------

def cmd_verify(args):
    cases = ("separable", "case_i", "case_ii", "case_iii") if args.case == "all" else (args.case,)
    payload, lines, ok = [], [], True
    for c in cases:
        rep = verify_case(c, equal_AC=args.equal_ac)
        ok = ok and rep.passed
        payload.append(rep.to_dict())
        lines.append(f"{c}: {'passed' if rep.passed else 'FAILED'}")
        lines += [f"  {n} = {'0' if b.is_zero() else f'nonzero ({len(b.terms)} terms)'}" for n, b in rep.checks]
        lines += [f"  diagnostic {n} = {'0' if b.is_zero() else f'nonzero ({len(b.terms)} terms)'}"
                  for n, b in rep.diagnostics]
        lines += [f"  {u}" for u in rep.unchecked]
        lines += [f"  note: {n}" for n in rep.notes]
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_ERROR


# -- series ------------------------------------------------------------------------

def cmd_series(args):
    if args.kind == "wp":
        s = gamma_h_solution(args.B1, args.order)
        title = "q3 = -B1/2 + wp"
    else:
        wp_coef, const = ve1_operator(args.component, args.alpha1)
        pair = ve1_pair(lame_index_of(wp_coef), const, args.B1, args.order)
        s = pair.sol_neg if args.kind == "neg" else pair.sol_pos
        title = f"component {args.component}, n = {pair.index_n}, K = {const}, {args.kind} exponent solution"
    payload = {"title": title, "dump": s.dump().splitlines()}
    _emit(args, payload, [title, s.dump()])
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--order", type=int, default=14, help="series truncation order")
    common.add_argument("--s-bound", type=int, default=50)
    common.add_argument("--l-bound", type=int, default=50)
    common.add_argument("--scan-rhs", action="store_true", help="scan all right-hand-side choices")

    p = argparse.ArgumentParser(prog="hh3d", description="Integrability analysis of the 3D Henon-Heiles family")
    p.add_argument("--version", action="version", version=f"hh3d {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="full decision pipeline")
    a.add_argument("params", nargs="*", metavar="A B C alpha beta gamma")
    a.add_argument("--batch", help="file with one six-rational row per line")
    a.add_argument("--jobs", type=int, default=1)
    a.set_defaults(func=cmd_analyze)

    h = sub.add_parser("homogeneous", parents=[common], help="eigenvalue tests for the cubic part")
    h.add_argument("--alpha1", type=_rat)
    h.add_argument("--gamma1", type=_rat)
    h.set_defaults(func=cmd_homogeneous)

    lm = sub.add_parser("lame", parents=[common], help="Lamé coefficients and classification")
    lm.add_argument("--alpha1", type=_rat, required=True)
    lm.add_argument("--branch", choices=("Xi1", "Xi2", "both"), default="both")
    lm.set_defaults(func=cmd_lame)

    r = sub.add_parser("residue", parents=[common], help="level-3 residue certificates")
    r.add_argument("--alpha1", type=_rat, required=True)
    r.add_argument("--dump-series", action="store_true")
    r.set_defaults(func=cmd_residue)

    v = sub.add_parser("verify-integrals", parents=[common], help="Poisson involution checks")
    v.add_argument("--case", choices=("separable", "case_i", "case_ii", "case_iii", "all"), default="all")
    v.add_argument("--equal-ac", action="store_true", help="case_ii with At = Ct")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("series", parents=[common], help="debug dumps of the basic series")
    s.add_argument("--kind", choices=("wp", "neg", "pos"), default="wp")
    s.add_argument("--component", type=int, choices=(1, 2, 3), default=1)
    s.add_argument("--alpha1", type=_rat, default=Fraction(1))
    s.add_argument("--B1", type=_rat, default=None)
    s.set_defaults(func=cmd_series)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors must not look like "inconclusive"
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR
    try:
        return args.func(args)
    except (HH3Error, ValueError, OSError) as exc:
        sys.stderr.write(f"hh3d: error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
