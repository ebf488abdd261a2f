"""
Command-line front end: point evaluations, distance sweeps, figure
reproduction and a self-check of the numerical paths.

    python cli.py force --a 197.3269804fm --mass 0
    python cli.py energy --a 1nat --species positronium
    python cli.py sweep --a 10:1e5 --species photon positronium --out sweep.csv --svg sweep.svg
    python cli.py reproduce fig2 --out figures/
    python cli.py species --precise
    python cli.py check

Distances take an ``fm`` (default) or ``nat`` (MeV^-1) suffix; masses are MeV
unless suffixed ``GeV``. Exit codes: 0 success, 2 usage, 3 numerical
failure, 4 I/O.
"""
import math
import re
import sys
import logging
import argparse
from pathlib import Path

from pydantic import ValidationError

import config
from abel_plana import BUILTIN_CHECKS, abel_plana_residual
from casimir import (
    compute_force, energy_bessel_series, energy_renormalized, force_bessel_series,
    force_eq4_direct, force_from_energy, method_flags, reduced_g_scaled, G_MASSLESS,
)
from errors import CasimirError, DomainError
from figures import FIGURES
from quadrature import DEFAULT_TOLERANCE, Tolerance
from species import (
    Ensemble, builtin_registry, contribution_ratio, crossover_distance,
    make_species, parse_mass, parse_species,
)
from svg_chart import render_svg
from sweep import SweepSpec, run_sweep, write_csv
from units import (
    compton_length_fm, fm_to_natural, natural_energy_to_joule_per_m2,
    natural_force_to_pascal, natural_to_fm, require_separation,
)

logger = logging.getLogger(__name__)

IO_EXIT_CODE = 4
VALUE_FORMAT = ".12g"

_LENGTH_TOKEN = re.compile(r"^\s*([0-9.eE+-]+)\s*(fm|nat)?\s*$", re.IGNORECASE)


### Argument parsing ###

def _parse_length(text: str):
    match = _LENGTH_TOKEN.match(str(text))
    if not match:
        raise DomainError(f"cannot read distance {text!r}; use e.g. 100fm or 1nat")
    try:
        value = float(match.group(1))
    except ValueError:
        raise DomainError(f"cannot read distance {text!r}") from None
    return value, (match.group(2) or "fm").lower()


def parse_length(text: str) -> float:
    """'100fm', '100' (fm) or '1nat' -> MeV^-1."""
    value, unit = _parse_length(text)
    if unit == "nat":
        return require_separation(value).value
    return fm_to_natural(value)


def parse_length_fm(text: str) -> float:
    """Same input forms as parse_length, returned in fm."""
    value, unit = _parse_length(text)
    if unit == "nat":
        return natural_to_fm(value)
    return require_separation(value).value


def parse_range_fm(text: str):
    """'MIN:MAX' with optional unit suffixes -> (min, max) in fm."""
    parts = str(text).split(":")
    if len(parts) != 2:
        raise DomainError(f"sweep distance must be MIN:MAX, got {text!r}")
    return parse_length_fm(parts[0]), parse_length_fm(parts[1])


def parse_tolerance(rel: float) -> Tolerance:
    try:
        return Tolerance(rel=rel, abs=DEFAULT_TOLERANCE.abs)
    except ValidationError as e:
        raise DomainError(f"tolerance {rel!r}: {e.errors()[0].get('msg')}") from None


def _single_species(args):
    """The species named by --mass or a single --species token."""
    if args.mass is not None:
        return make_species("custom", parse_mass(args.mass))
    if len(args.species) != 1:
        raise DomainError(f"{args.command} takes one species, got {len(args.species)}")
    return parse_species(args.species[0], builtin_registry(args.precise))


def _ensemble(args) -> Ensemble:
    registry = builtin_registry(args.precise)
    if not args.species:
        return registry
    return Ensemble.of(*(parse_species(token, registry) for token in args.species))


### Commands ###

def cmd_force(args) -> int:
    a = parse_length(args.a)
    s = _single_species(args)
    result = compute_force(a, s.mass, args.method, parse_tolerance(args.tol))
    print(f"a           = {a:{VALUE_FORMAT}} MeV^-1 ({natural_to_fm(a):{VALUE_FORMAT}} fm)")
    print(f"species     = {s.name} (m = {s.mass:{VALUE_FORMAT}} MeV)")
    print(f"|F|/S       = {result.magnitude:{VALUE_FORMAT}} MeV^4")
    print(f"|F|/S       = {abs(natural_force_to_pascal(result.force)):{VALUE_FORMAT}} Pa")
    print("sign        = attractive (F < 0)")
    print(f"method      = {result.method}")
    print(f"error est.  = {result.error_estimate:.3g} MeV^4")
    print(f"status      = {result.status}")
    return 0


def cmd_energy(args) -> int:
    a = parse_length(args.a)
    s = _single_species(args)
    name = method_flags().get(args.method, args.method)
    if name == "bessel-series":
        energy = energy_bessel_series(a, s.mass)
    elif name == "reduced-integral":
        energy = energy_renormalized(a, s.mass, parse_tolerance(args.tol))
    else:
        raise DomainError(f"method {args.method!r} has no energy path; use integral or bessel")
    print(f"a           = {a:{VALUE_FORMAT}} MeV^-1 ({natural_to_fm(a):{VALUE_FORMAT}} fm)")
    print(f"species     = {s.name} (m = {s.mass:{VALUE_FORMAT}} MeV)")
    print(f"E/S         = {energy.value:{VALUE_FORMAT}} MeV^3 (binding)")
    print(f"E/S         = {natural_energy_to_joule_per_m2(energy):{VALUE_FORMAT}} J/m^2")
    return 0


def _write_points(points, ensemble, out, comments=()):
    if out in (None, "-"):
        write_csv(points, ensemble, sys.stdout, comments)
        return None
    path = Path(out)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        write_csv(points, ensemble, fh, comments)
    logger.info("wrote %s", path)
    return path


def cmd_sweep(args) -> int:
    a_min, a_max = parse_range_fm(args.a)
    ensemble = _ensemble(args)
    try:
        spec = SweepSpec(a_min=a_min, a_max=a_max, points=args.points, spacing=args.spacing,
                         ensemble=ensemble, tolerance=parse_tolerance(args.tol), method=args.method)
    except ValidationError as e:
        raise DomainError(f"invalid sweep: {e.errors()[0].get('msg')}") from None
    if args.svg and args.out in (None, "-"):
        raise DomainError("--svg needs --out, the chart is drawn from the CSV file")
    points = run_sweep(spec)
    csv_path = _write_points(points, ensemble, args.out)
    if args.svg:
        ratios = ensemble.names if len(ensemble.names) > 1 else []
        render_svg(csv_path, args.svg, title="Casimir force vs distance",
                   ratio_species=ratios, show_total=len(ensemble.names) > 1)
    return 0


def cmd_reproduce(args) -> int:
    if args.points is not None and args.points < 2:
        raise DomainError(f"a sweep needs at least 2 points, got {args.points}")
    out_dir = Path(args.out or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    keys = list(FIGURES) if args.figure == "all" else [args.figure]
    for key in keys:
        figure = FIGURES[key]
        if args.points is not None:
            figure = figure.model_copy(update={"points": args.points})
        spec = SweepSpec.for_figure(figure, parse_tolerance(args.tol))
        points = run_sweep(spec)
        comments = [figure.title, f"caption: {figure.caption}"] + [f"note: {n}" for n in figure.notes]
        csv_path = _write_points(points, spec.ensemble, out_dir / f"{key}.csv", comments)
        svg_path = render_svg(csv_path, out_dir / f"{key}.svg", title=figure.title,
                              force_species=figure.force_species, ratio_species=figure.ratio_species,
                              show_total=figure.show_total)
        print(f"{key}: {csv_path} {svg_path}")
    return 0


def cmd_species_list(args) -> int:
    ensemble = _ensemble(args)
    print(f"{'name':<14}{'mass [MeV]':>14}{'hbar c/m [fm]':>16}")
    for s in ensemble.species:
        print(f"{s.name:<14}{s.mass:>14.10g}{compton_length_fm(s.mass):>16.6g}")
    return 0


### Self-check ###

def _relative(x: float, y: float) -> float:
    return abs(x - y) / abs(y)


def _check_report(results, name, ok, detail=""):
    results.append(ok)
    print(f"{'PASS' if ok else 'FAIL'}  {name}" + (f": {detail}" if detail else ""))


def cmd_check(args) -> int:
    """Reduced acceptance run over every computation path."""
    tol = parse_tolerance(args.tol)
    results = []

    rel = _relative(reduced_g_scaled(0.0, tol).value, G_MASSLESS)
    _check_report(results, "G(0) = pi^4/15", rel <= 1e-8, f"relative error {rel:.2e}")

    for a, m in ((1.0, 0.005), (1.0, 0.5), (0.5, 20.0)):
        integral = compute_force(a, m, "integral", tol).magnitude
        series = force_bessel_series(a, m).magnitude
        rel = _relative(integral, series)
        _check_report(results, f"integral vs bessel at a={a:g}, m={m:g}", rel <= 1e-8, f"relative {rel:.2e}")
    for a, m in ((1.0, 0.5), (2.0, 1.0)):
        direct = force_eq4_direct(a, m, tol).magnitude
        rel = _relative(direct, force_bessel_series(a, m).magnitude)
        _check_report(results, f"direct vs bessel at a={a:g}, m={m:g}", rel <= 1e-6, f"relative {rel:.2e}")

    lhs = compute_force(1.0, 2.0, "integral", tol).magnitude
    rhs = 2.0 ** 4 * compute_force(2.0, 1.0, "integral", tol).magnitude
    rel = _relative(lhs, rhs)
    _check_report(results, "a^4 |F| depends on am only", rel <= 1e-10, f"relative {rel:.2e}")

    a, m = 1.0, 1.0
    rel = _relative(force_from_energy(a, m, tol).magnitude, compute_force(a, m, "integral", tol).magnitude)
    _check_report(results, "force = -dE/da", rel <= 1e-6, f"relative {rel:.2e}")

    for family, params in BUILTIN_CHECKS:
        residual = abel_plana_residual(family, **params)
        label = ", ".join(f"{k}={v:g}" for k, v in params.items())
        _check_report(results, f"Abel-Plana {family} ({label})", residual <= 1e-9, f"residual {residual:.2e}")

    registry = builtin_registry(args.precise)
    pair = Ensemble.of(registry.get("photon"), registry.get("positronium"))
    m_ps = registry.get("positronium").mass
    small = contribution_ratio(1e-3 / (2 * m_ps), "positronium", pair, tol)
    _check_report(results, "positronium ratio -> 1/2 at small a", abs(small - 0.5) <= 1e-3, f"ratio {small:.6g}")
    large = contribution_ratio(30.0 / (2 * m_ps), "positronium", pair, tol)
    _check_report(results, "positronium ratio < 1e-6 at 2am = 30", large < 1e-6, f"ratio {large:.3g}")
    pion = contribution_ratio(fm_to_natural(0.2), "pi0", registry, tol)
    _check_report(results, "pi0 ratio ~ 1/3 at 0.2 fm", _relative(pion, 1 / 3) <= 0.02, f"ratio {pion:.6g}")

    a_star = crossover_distance("positronium", pair, tol)
    at_star = contribution_ratio(a_star, "positronium", pair, tol)
    _check_report(results, f"positronium crossover a* = {natural_to_fm(a_star):.4g} fm",
                  math.isclose(at_star, 0.25, rel_tol=1e-6), f"ratio at a* {at_star:.6g}")

    failed = results.count(False)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 3


### Entry point ###

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="casimir", description="Casimir force between parallel plates for massive mediators.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)
    flags = sorted(method_flags())

    def numerics(p, methods=flags):
        p.add_argument("--method", choices=methods, default="integral")
        p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE.rel, help="relative quadrature tolerance")
        p.add_argument("--precise", action="store_true", help="1.022 MeV positronium, 134.9768 MeV pi0")

    for name, handler, help_text in (("force", cmd_force, "force per area at one distance"),
                                     ("energy", cmd_energy, "renormalized energy per area at one distance")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--a", required=True, help="distance, e.g. 100fm or 1nat")
        who = p.add_mutually_exclusive_group(required=True)
        who.add_argument("--mass", help="mass in MeV, or e.g. 3GeV")
        who.add_argument("--species", nargs="+", help="built-in name or name=mass")
        numerics(p)
        p.set_defaults(handler=handler)

    p = sub.add_parser("sweep", help="force and ratios over a distance range, as CSV")
    p.add_argument("--a", required=True, help="MIN:MAX, e.g. 10:1e5 or 1nat:2nat")
    p.add_argument("--species", nargs="+", default=[], help="built-in names or name=mass (default: all built-in)")
    p.add_argument("--points", type=int, default=41)
    spacing = p.add_mutually_exclusive_group()
    spacing.add_argument("--log", dest="spacing", action="store_const", const="log")
    spacing.add_argument("--linear", dest="spacing", action="store_const", const="linear")
    p.add_argument("--out", default="-", help="CSV path, '-' for stdout")
    p.add_argument("--svg", help="also draw the CSV as an SVG chart")
    numerics(p)
    p.set_defaults(handler=cmd_sweep, spacing="log")

    p = sub.add_parser("reproduce", help="CSV and SVG for a published figure")
    p.add_argument("figure", choices=sorted(FIGURES) + ["all"])
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--points", type=int)
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE.rel)
    p.set_defaults(handler=cmd_reproduce)

    p = sub.add_parser("species", help="built-in species with Compton lengths")
    p.add_argument("--precise", action="store_true")
    p.add_argument("--species", nargs="+", default=[], help="list these instead, name or name=mass")
    p.set_defaults(handler=cmd_species_list)

    p = sub.add_parser("check", help="run the numerical self-check")
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE.rel)
    p.add_argument("--precise", action="store_true")
    p.set_defaults(handler=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else config.log_level(),
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.handler(args)
    except CasimirError as e:
        print(f"Error in {args.command}: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"Error in {args.command}: {e}", file=sys.stderr)
        return IO_EXIT_CODE


if __name__ == "__main__":
    sys.exit(main())
