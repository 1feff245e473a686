"""Command line interface: ``schubdist <command> ...`` (also ``python -m schubdist``)."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .distance import Degree, complement, dist, pareto_min_degrees
from .qkcore import gw_two_point, metric, metric_truncated
from .rootsys import RootSystemError, build_root_system
from .verify import CHECKS, TableError, bundled_table, load_table, mobius_coeffs, run_checks
from .weyl import WeylGroup, parabolic_subset, weyl_group


def _vec(v) -> str:
    return ",".join(map(str, v))


def _group_and_parabolic(args) -> tuple[WeylGroup, frozenset[int]]:
    group = weyl_group(args.type)
    return group, parabolic_subset(args.parabolic, group.rank)


def _label(group: WeylGroup, p, text: str):
    w = group.from_word(text)
    if not group.is_min_rep(w, p):
        raise ValueError(f"{text!r} is not a minimal coset representative for parabolic "
                         f"{_vec(sorted(p)) or '(empty)'}")
    return w


def _degree(group, p, text: str) -> Degree:
    idx = complement(group, p)
    vals = tuple(int(x) for x in text.split(",") if x.strip())
    if len(vals) != len(idx):
        raise ValueError(f"degree {text!r} must have {len(idx)} components")
    return Degree(idx, vals)


def cmd_roots(args) -> int:
    rs = build_root_system(args.type)
    for a in rs.positive_roots:
        print(f"{_vec(a)}\t{_vec(rs.coroot(a))}")
    return 0


def cmd_weyl(args) -> int:
    group, p = _group_and_parabolic(args)
    for w in group.enumerate_WP(p):
        print(w)
    return 0


def _oracle_mismatch(group, u, v, p, d) -> bool:
    front = pareto_min_degrees(group, u, v, p)
    if front != {d}:
        print(f"oracle mismatch for u={u} v={v}: dist {d}, Pareto frontier "
              f"{sorted(str(x) for x in front)}", file=sys.stderr)
        return True
    return False


def cmd_dist(args) -> int:
    group, p = _group_and_parabolic(args)
    u, v = _label(group, p, args.u), _label(group, p, args.v)
    d = dist(group, u, v, p)
    print(d)
    if args.oracle and _oracle_mismatch(group, u, v, p, d):
        return 1
    return 0


def cmd_dist_table(args) -> int:
    group, p = _group_and_parabolic(args)
    bad = False
    print("u\tv\tdist")
    for u in group.enumerate_WP(p):
        for v in group.enumerate_WP(p):
            d = dist(group, u, v, p)
            print(f"{u}\t{v}\t{d}")
            if args.oracle:
                bad |= _oracle_mismatch(group, u, v, p, d)
    return 1 if bad else 0


def cmd_gw2(args) -> int:
    group, p = _group_and_parabolic(args)
    u, v = _label(group, p, args.u), _label(group, p, args.v)
    print(gw_two_point(group, u, v, p, _degree(group, p, args.d)))
    return 0


def cmd_metric(args) -> int:
    group, p = _group_and_parabolic(args)
    u, v = _label(group, p, args.u), _label(group, p, args.v)
    if args.cap is None:
        print(metric(group, u, v, p))
    else:
        series = metric_truncated(group, u, v, p, _degree(group, p, args.cap))
        print("degree\tcoeff")
        for d in sorted(series.coeffs, key=lambda d: (d.total(), d.values)):
            print(f"{d}\t{series.coeffs[d]}")
    return 0


def cmd_mobius(args) -> int:
    group, p = _group_and_parabolic(args)
    v = _label(group, p, args.v)
    print("z\tf_z")
    for z, f in sorted(mobius_coeffs(group, p, v).items(), key=lambda t: group.sort_key(t[0])):
        print(f"{z}\t{f}")
    return 0


def cmd_verify(args) -> int:
    try:
        if args.bundled:
            table = bundled_table(args.bundled)
        elif args.file:
            table = load_table(Path(args.file), strict=not args.no_validate)
        else:
            print("error: give a table file or --bundled NAME", file=sys.stderr)
            return 2
    except (TableError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = run_checks(table, args.check)
    if args.format == "json":
        print(report.to_json())
    else:
        if args.verbose:
            print("check\tu\tv\texpected\tactual\tresult")
            for r in report.results:
                print(r.tsv())
        for line in report.summary():
            print(line)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubdist",
        description="Distances between Schubert varieties in G/P and quantum K-theory checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def typed(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("type", help="Cartan type, e.g. A3 or G2")
        return sp

    def with_parabolic(sp):
        sp.add_argument("--parabolic", default="",
                        help="comma-separated simple roots in P (default: none, i.e. G/B)")
        return sp

    sp = typed("roots", "positive roots and their coroots")
    sp.set_defaults(func=cmd_roots)

    sp = with_parabolic(typed("weyl", "list W or W^P as canonical reduced words"))
    sp.set_defaults(func=cmd_weyl)

    sp = with_parabolic(typed("dist", "distance between X^u and X_v"))
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("--oracle", action="store_true", help="also run the Pareto chain search")
    sp.set_defaults(func=cmd_dist)

    sp = with_parabolic(typed("dist-table", "all distances as TSV"))
    sp.add_argument("--oracle", action="store_true", help="also run the Pareto chain search")
    sp.set_defaults(func=cmd_dist_table)

    sp = with_parabolic(typed("gw2", "2-point K-theoretic Gromov-Witten invariant <O^u, O_v>_d"))
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("d", help="degree, comma-separated")
    sp.set_defaults(func=cmd_gw2)

    sp = with_parabolic(typed("metric", "quantum K-metric ((O^u, O_v))"))
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("--cap", help="print the series truncated at this degree")
    sp.set_defaults(func=cmd_metric)

    sp = with_parabolic(typed("mobius", "coefficients f_z with O^v = sum f_z O_z"))
    sp.add_argument("v")
    sp.set_defaults(func=cmd_mobius)

    sp = sub.add_parser("verify", help="check a quantum K structure-constant table")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--bundled", choices=["p1", "p2"], help="use a table shipped with the package")
    sp.add_argument("--check", choices=[*CHECKS, "all"], default="all")
    sp.add_argument("--verbose", action="store_true")
    sp.add_argument("--format", choices=["tsv", "json"], default="tsv")
    sp.add_argument("--no-validate", action="store_true",
                    help="skip the symmetry and unit checks at load time")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RootSystemError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
