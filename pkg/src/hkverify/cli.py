"""Command line front end.

`hkverify report` recomputes every recorded claim and prints the
verification report; the other subcommands expose the individual
calculators (quartic integrals, Riemann-Roch, wall numerics, ampleness,
modularity, Chern numbers, fiber data, monodromy counts, simplicity).
Exit status: 0 on success (expected discrepancies included), 1 on a
failed recomputation or invalid domain input, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .abelian import IsogenyParams, is_simple_semihom, zeppola_integral
from .blowup import is_modular_bundle
from .chern import (
    ChernNumberTable,
    a_invariant,
    ch1_ch3,
    ch1_fourth,
    ch1sq_ch2_derived,
    ch1sq_ch2_stated,
    ch2_squared,
    ch4_integral,
    chi_bundle,
    chi_end,
    chi_end_traceless,
)
from .fiber import (
    SubsheafProfile,
    fiber_degrees,
    invariant_torsion_cosets,
    monodromy_fixed_points,
    monodromy_group_order,
    subsheaf_rank,
    trivial_torsion_coset,
)
from .kummer import fujiki_integral, riemann_roch, riemann_roch_from_square, two_class
from .lattice import AbelianSurfaceModel
from .report import ReportConfig, exit_code, run_report, to_json, to_markdown
from .walls import enumerate_wall_numerics, generate_wall_cases, is_ample_h

_CHERN_ENTRIES = {
    "ch1-fourth": ch1_fourth,
    "ch1sq-ch2-stated": ch1sq_ch2_stated,
    "ch1sq-ch2-derived": ch1sq_ch2_derived,
    "ch1-ch3": ch1_ch3,
    "ch2-squared": ch2_squared,
    "ch4": ch4_integral,
    "chi": chi_bundle,
    "chi-end": chi_end,
    "chi-end0": chi_end_traceless,
    "a-invariant": lambda a: a_invariant(),
}


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _class_coeffs(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"a class needs three comma-separated coefficients, got {text!r}"
        )
    return tuple(_fraction(p) for p in parts)


def _side_model(abar: int, d: int, side: str) -> AbelianSurfaceModel:
    # side A carries the doubled polarization square, side B the halved one
    return AbelianSurfaceModel(4 * abar if side == "A" else 2 * abar, d)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hkverify",
        description="Exact verification of the rank-4 modular bundle numerics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="recompute every recorded claim")
    rep.add_argument("--format", choices=("json", "md"), default="json")
    rep.add_argument("--only", default=None, help="keep claims with this id prefix")
    rep.add_argument("--abar-max", type=int, default=3)
    rep.add_argument("--d-max", type=int, default=None)
    rep.add_argument("--a-max", type=int, default=50)
    rep.add_argument("--md-max", type=int, default=41)
    rep.add_argument("--samples", type=int, default=50)
    rep.add_argument("--seed", type=int, default=1729)

    fuj = sub.add_parser("fujiki", help="integrate a product of four classes")
    fuj.add_argument("--abar", type=int, required=True)
    fuj.add_argument("--d", type=int, required=True)
    fuj.add_argument("--side", choices=("A", "B"), default="A")
    fuj.add_argument("classes", type=_class_coeffs, nargs=4, metavar="p,q,x")

    rr = sub.add_parser("rr", help="Euler characteristic of a line bundle")
    rr.add_argument("--q", type=_fraction, default=None, help="square of c1")
    rr.add_argument("--abar", type=int, default=None)
    rr.add_argument("--d", type=int, default=None)
    rr.add_argument("--side", choices=("A", "B"), default="A")
    rr.add_argument("--cls", type=_class_coeffs, default=None, metavar="p,q,x")

    sub.add_parser("walls", help="wall numerics for the moduli vector")

    amp = sub.add_parser("ample", help="decide ampleness of 2m*mu(omegabar) - delta")
    amp.add_argument("--abar", type=int, required=True)
    amp.add_argument("--d", type=int, required=True)
    amp.add_argument("--m", type=int, default=1)

    mod = sub.add_parser("modularity", help="test the discriminant proportionality")
    mod.add_argument("--x", type=_fraction, required=True)
    mod.add_argument("--y", type=_fraction, required=True)
    mod.add_argument("--abar", type=int, default=1)
    mod.add_argument("--d", type=int, default=3)

    che = sub.add_parser("chern", help="Chern numbers of the rank-4 bundle")
    che.add_argument("--a", type=int, required=True)
    che.add_argument("--entry", choices=sorted(_CHERN_ENTRIES), default=None)

    fib = sub.add_parser("fiber", help="fiber degrees and subsheaf ranks")
    fib.add_argument("--m", type=int, required=True)
    fib.add_argument("--d", type=int, required=True)
    fib.add_argument("--r1p", type=int, default=None)
    fib.add_argument("--r1pp", type=int, default=None)
    fib.add_argument("--r2", type=int, default=None)

    sub.add_parser("monodromy", help="monodromy counts on torsion points")

    sem = sub.add_parser("semihom", help="simplicity of a semi-homogeneous bundle")
    sem.add_argument("--deg-f", type=int, required=True)
    sem.add_argument("--n", type=int, required=True)
    sem.add_argument("--d0", type=int, required=True)

    return parser


def _cmd_report(args) -> int:
    config = ReportConfig(
        abar_max=args.abar_max,
        d_max=args.d_max,
        a_max=args.a_max,
        md_max=args.md_max,
        samples=args.samples,
        seed=args.seed,
        only=args.only,
    )
    report = run_report(config)
    text = to_json(report) if args.format == "json" else to_markdown(report)
    sys.stdout.write(text)
    return exit_code(report)


def _cmd_fujiki(args) -> int:
    model = _side_model(args.abar, args.d, args.side)
    cs = [two_class(model, *coeffs) for coeffs in args.classes]
    print(fujiki_integral(*cs))
    return 0


def _cmd_rr(args) -> int:
    if args.q is not None:
        print(riemann_roch_from_square(args.q))
        return 0
    if args.cls is None or args.abar is None or args.d is None:
        raise ValueError("rr needs either --q or --abar/--d/--cls")
    model = _side_model(args.abar, args.d, args.side)
    print(riemann_roch(two_class(model, *args.cls)))
    return 0


def _cmd_walls(args) -> int:
    for w in enumerate_wall_numerics():
        divs = ",".join(str(v) for v in sorted(w.div_candidates))
        print(f"ss={w.ss} sv={w.sv} n={w.n} q={w.q} div in {{{divs}}}")
    for w in generate_wall_cases():
        if not w.retained:
            print(f"discarded: ss={w.ss} sv={w.sv} (square {w.q} is not negative)")
    return 0


def _cmd_ample(args) -> int:
    print(is_ample_h(args.abar, args.d, args.m).render())
    return 0


def _cmd_modularity(args) -> int:
    model = AbelianSurfaceModel(4 * args.abar, args.d)
    modular, coeff = is_modular_bundle(args.x, args.y, model)
    print(f"Modular (coefficient {coeff})" if modular else "NotModular")
    return 0


def _cmd_chern(args) -> int:
    if args.entry is not None:
        print(_CHERN_ENTRIES[args.entry](args.a))
        return 0
    table = ChernNumberTable.compute(args.a)
    print(f"a = {table.a}")
    print(f"ch1^4 = {table.ch1_fourth}")
    print(f"ch1^2.ch2 (stated) = {table.ch1sq_ch2_stated}")
    print(f"ch1^2.ch2 (derived) = {table.ch1sq_ch2_derived}")
    print(f"ch1.ch3 = {table.ch1_ch3}")
    print(f"ch2^2 = {table.ch2_squared}")
    print(f"ch4 = {table.ch4}")
    print(f"chi = {table.chi_bundle}")
    print(f"chi(End) = {table.chi_end}")
    print(f"chi(End0) = {table.chi_end_traceless}")
    return 0


def _cmd_fiber(args) -> int:
    ranks = (args.r1p, args.r1pp, args.r2)
    if any(v is not None for v in ranks):
        if any(v is None for v in ranks):
            raise ValueError("a profile needs all of --r1p, --r1pp, --r2")
        profile = SubsheafProfile(*ranks)
        print(subsheaf_rank(profile, args.m, args.d))
        return 0
    deg_v, deg_delta = fiber_degrees(args.m, args.d)
    print(f"deg V component = {deg_v}")
    print(f"deg Delta component = {deg_delta}")
    return 0


def _cmd_monodromy(args) -> int:
    print(f"group order on 2-torsion: {monodromy_group_order(2)}")
    fixed = monodromy_fixed_points()
    zero_only = fixed == frozenset({((0, 0), (0, 0))})
    print(f"fixed 2-torsion points: {len(fixed)}" + (" (zero only)" if zero_only else ""))
    cosets = invariant_torsion_cosets()
    trivial = len(cosets) == 1 and cosets[0] == trivial_torsion_coset()
    print(
        f"invariant 2-torsion cosets in 4-torsion: {len(cosets)}"
        + (" (trivial coset)" if trivial else "")
    )
    return 0


def _cmd_semihom(args) -> int:
    simple, rank = is_simple_semihom(IsogenyParams(args.deg_f, args.n, args.d0))
    if simple:
        print(f"Simple (rank {rank}, fiber count {zeppola_integral(args.n, args.d0)})")
    else:
        print("NotSimple")
    return 0


_COMMANDS = {
    "report": _cmd_report,
    "fujiki": _cmd_fujiki,
    "rr": _cmd_rr,
    "walls": _cmd_walls,
    "ample": _cmd_ample,
    "modularity": _cmd_modularity,
    "chern": _cmd_chern,
    "fiber": _cmd_fiber,
    "monodromy": _cmd_monodromy,
    "semihom": _cmd_semihom,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main_entry() -> None:
    sys.exit(main())
