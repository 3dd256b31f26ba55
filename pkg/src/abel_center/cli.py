"""``abel-center``: command-line front end.

Reads a system document (file argument or standard input), writes a report
to standard output and diagnostics to standard error.

Exit codes: 0 analysis completed, 1 malformed input, 2 internal check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import Optional

from . import __version__
from .errors import AbelError, InternalCheckFailed, NonZeroMean
from .odeverify import DEFAULT_ABS_TOL, DEFAULT_GRID, DEFAULT_REL_TOL, Tolerances, cross_validate, displacement_scan
from .pcc import check_pcc
from .planar import PlanarSystem, cherkas_reduce, radial_angular
from .returnmap import DEFAULT_ORDER, compute_return_series, derivative_identities_check, integral_conditions
from .signchange import moment_propagation_check
from .system import AbelSystem, moment_linear_system, moment_report

log = logging.getLogger("abel_center")

COMMANDS = ("moments", "series", "pcc", "signs", "reduce", "verify", "matrix", "full")
EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


class InputError(Exception):
    pass


def _parse_grid(text: str) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}") from exc
    if not vals:
        raise argparse.ArgumentTypeError("empty grid")
    return vals


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", default="-", help="JSON input file (default: stdin)")
    common.add_argument("--order", type=int, default=DEFAULT_ORDER, help="series order N")
    common.add_argument("--max-k", type=int, default=20, help="highest moment index K")
    common.add_argument("--rel-tol", type=float, default=DEFAULT_REL_TOL)
    common.add_argument("--abs-tol", type=float, default=DEFAULT_ABS_TOL)
    common.add_argument("--grid", type=_parse_grid, default=list(DEFAULT_GRID),
                        help="comma-separated initial values rho")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--csv", metavar="PATH", help="also write the displacement scan as CSV")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="abel-center",
        description="Center conditions for Abel equations x' = f(t) x^3 + g(t) x^2.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "matrix":
            p.add_argument("--n", type=int, required=True, help="even exponent n in g = t^(n-1)")
            p.add_argument("--degrees", type=_parse_ints, default=[0, 2, 4])
            p.add_argument("--indices", type=_parse_ints, default=[0, 1, 2])
    return parser


def _read_document(path: str) -> dict:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        doc = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON input: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("input must be a JSON object")
    return doc


def _load_abel(doc: dict) -> AbelSystem:
    try:
        return AbelSystem.from_json(doc)
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"malformed Abel system: {exc}") from exc


def _load_planar(doc: dict) -> PlanarSystem:
    try:
        return PlanarSystem.from_json(doc)
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"malformed planar system: {exc}") from exc


def monomial_exponent(sys: AbelSystem) -> Optional[tuple[int, Fraction]]:
    """``(n, c)`` when ``g = c t^(n-1)`` with ``n`` even on ``[-1, 1]``."""
    if not sys.is_poly or (sys.a, sys.b) != (-1, 1) or sys.g.is_zero:
        return None
    nz = [k for k, c in enumerate(sys.g.coeffs) if c]
    if len(nz) != 1 or (nz[0] + 1) % 2:
        return None
    return nz[0] + 1, sys.g.coeffs[nz[0]]


# -- individual analyses ------------------------------------------------------


def _moments(sys: AbelSystem, opts) -> dict:
    return moment_report(sys, opts.max_k).to_json()


def _series(sys: AbelSystem, opts) -> dict:
    series = compute_return_series(sys, opts.order)
    checks = derivative_identities_check(sys, series)
    if not all(checks):
        raise InternalCheckFailed(f"derivative identities violated: {checks}")
    ly = integral_conditions(sys, series)
    if ly[1:] != series.h_coeffs[2:]:
        raise InternalCheckFailed("integral conditions disagree with the H-series coefficients")
    doc = series.to_json()
    doc["integral_conditions"] = [str(v) for v in ly]
    doc["derivative_identities"] = list(checks)
    return doc


def _pcc(sys: AbelSystem, opts) -> dict:
    w = check_pcc(sys)
    return {"witness": None if w is None else w.to_json(sys)}


def _signs(sys: AbelSystem, opts) -> dict:
    detected = monomial_exponent(sys)
    if detected is None:
        raise InputError("signs needs g = c*t^(n-1) with n even on [-1, 1]")
    n, c = detected
    return moment_propagation_check(sys.f, n, opts.max_k, g_scale=c)


def _verify(sys: AbelSystem, opts) -> dict:
    tol = Tolerances(opts.rel_tol, opts.abs_tol)
    scan = displacement_scan(sys, opts.grid, tol)
    if opts.csv:
        with open(opts.csv, "w", encoding="utf-8") as fh:
            fh.write(scan.to_csv())
    doc = {"scan": scan.to_json()}
    if sys.is_poly:
        doc["cross_validation"] = cross_validate(sys, compute_return_series(sys, opts.order), scan)
    return doc


def _reduce(planar: PlanarSystem, opts) -> dict:
    A, B = radial_angular(planar)
    abel = cherkas_reduce(planar)
    doc = {"A": A.to_json(), "B": B.to_json(), "abel": abel.to_json(),
           "g_mean_zero": not abel.g.constant}
    if not abel.g.constant:
        doc["moments"] = moment_report(abel, opts.max_k).to_json()
    doc["caveat"] = ("validity region 1 + B(theta) r^(n-1) > 0 of the coordinate change "
                     "is not checked")
    return doc


def _full(sys: AbelSystem, opts) -> dict:
    sections: dict = {}
    try:
        sections["moments"] = _moments(sys, opts)
    except NonZeroMean as exc:
        sections["moments"] = {"error": str(exc)}
    if sys.is_poly:
        sections["series"] = _series(sys, opts)
        sections["pcc"] = _pcc(sys, opts)
    if monomial_exponent(sys) is not None:
        try:
            sections["signs"] = _signs(sys, opts)
        except AbelError as exc:
            if isinstance(exc, InternalCheckFailed):
                raise
            sections["signs"] = {"hypothesis_failed": str(exc)}
    sections["verify"] = _verify(sys, opts)

    m = sections["moments"]
    series_clear = sys.is_poly and sections["series"]["center_order"] is None
    witness = sys.is_poly and sections["pcc"]["witness"] is not None
    verdict = {
        "series_center_up_to_order": opts.order if series_clear else None,
        "first_series_obstruction": sections["series"]["center_order"] if sys.is_poly else None,
        "moment_status": (
            "unavailable" if "error" in m
            else f"zero up to k={opts.max_k}" if m["first_nonzero_index"] is None
            else f"m_{m['first_nonzero_index']} != 0"
        ),
        "pcc_witness": "present" if witness else "absent",
        "numeric_max_abs_d": sections["verify"]["scan"]["max_abs_d"],
    }
    if witness:
        verdict["conclusion"] = "center certified by a composition witness"
    elif sys.is_poly and not series_clear:
        verdict["conclusion"] = "not a center: nonzero return-map coefficient"
    else:
        verdict["conclusion"] = "no obstruction found up to the configured orders"
    sections["verdict"] = verdict
    return sections


HANDLERS = {"moments": _moments, "series": _series, "pcc": _pcc, "signs": _signs,
            "verify": _verify, "full": _full}


def run(opts) -> tuple[dict, int]:
    """Execute one request; returns the report document and the exit code."""
    if opts.command == "matrix":
        res = moment_linear_system(opts.n, opts.degrees, opts.indices)
        return {"command": "matrix", "result": res.to_json()}, EXIT_OK
    doc = _read_document(opts.input)
    if opts.command == "reduce":
        planar = _load_planar(doc)
        return {"command": "reduce", "system": planar.to_json(), "result": _reduce(planar, opts)}, EXIT_OK
    sys_ = _load_abel(doc)
    result = HANDLERS[opts.command](sys_, opts)
    return {"command": opts.command, "system": sys_.to_json(), "result": result}, EXIT_OK


def _text(doc, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, dict) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            elif isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            elif isinstance(v, list):
                lines.append(f"{pad}{k}: [{', '.join(map(str, v))}]")
            else:
                lines.append(f"{pad}{k}: {v}")
    else:
        for item in doc:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.extend(_text(item, indent + 1))
            elif isinstance(item, list):
                lines.append(f"{pad}- [{', '.join(map(str, item))}]")
            else:
                lines.append(f"{pad}- {item}")
    return lines


def render(doc: dict, fmt: str) -> str:
    if fmt == "text":
        return "\n".join(_text(doc)) + "\n"
    return json.dumps(doc, indent=2) + "\n"


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    opts = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if opts.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        doc, code = run(opts)
    except InputError as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except InternalCheckFailed as exc:
        log.error("internal check failed: %s", exc)
        return EXIT_INTERNAL
    except (AbelError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    sys.stdout.write(render(doc, opts.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
