"""Command-line front end.

    morsezeta validate  <input>
    morsezeta zeta      <input> [--order N]
    morsezeta torsion   <input> [--order N]
    morsezeta alexander <input>
    morsezeta census    <input> --depth N
    morsezeta check-all [--order N]

``<input>`` is ``builtin:trefoil``, ``builtin:twist:<n>``, ``builtin:pretzel555``
or the path of a JSON monodromy document.  ``--format json`` switches to
machine-readable output in which every number is an exact integer or a
rational string.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import catalog
from .acceptance import run_all
from .invariants import (
    ConsistencyError,
    IdentityViolation,
    alexander_recover,
    census,
    normalize_unit,
    torsion,
    zeta,
)
from .monodromy import InvalidMonodromy, MonodromyMatrix, validate
from .polyalg import DEFAULT_ORDER, IntPolynomial, RationalFunction, TruncatedSeries

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _poly_json(p: IntPolynomial) -> list[int]:
    return list(p.coeffs)


def _ratfun_json(r: RationalFunction) -> dict:
    return {
        "text": str(r),
        "numerator": _poly_json(r.numerator),
        "denominator": _poly_json(r.denominator),
    }


def _series_json(s: TruncatedSeries) -> list[str]:
    return [str(c) for c in s]


def _series_text(s: TruncatedSeries) -> str:
    return ", ".join(str(c) for c in s)


class _Output:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream
        self.doc: dict = {}

    def line(self, text: str = "") -> None:
        if self.fmt == "text":
            print(text, file=self.stream)

    def flush(self) -> None:
        if self.fmt == "json":
            json.dump(self.doc, self.stream, indent=2)
            self.stream.write("\n")


def _read_monodromy(spec: str) -> tuple[str, MonodromyMatrix]:
    if spec.startswith("builtin:"):
        rec = catalog.resolve(spec)
        return rec.name, rec.monodromy
    with open(spec, encoding="utf-8") as fh:
        name, G, _ = catalog.parse_document(catalog.parse_json(fh.read()))
    return name, G


def cmd_validate(args, out: _Output) -> int:
    name, G = _read_monodromy(args.input)
    report = validate(G)
    out.doc = {
        "knot": name,
        "validation": {
            "ok": report.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks
            ],
        },
    }
    out.line(f"knot: {name}")
    for c in report.checks:
        out.line(str(c))
    out.line("valid" if report.ok else "INVALID")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_zeta(args, out: _Output) -> int:
    rec = catalog.resolve(args.input)
    z = zeta(rec.monodromy, args.order)
    out.doc = {
        "knot": rec.name,
        "zeta": {
            "rational": _ratfun_json(z.rational),
            "series": _series_json(z.series),
            "lefschetz": list(z.lefschetz),
        },
    }
    out.line(f"knot: {rec.name}")
    out.line(f"zeta: {z.rational}")
    out.line(f"series (order {z.order}): {_series_text(z.series)}")
    out.line(f"lefschetz numbers L(g^1..g^{len(z.lefschetz)}): {list(z.lefschetz)}")
    return EXIT_OK


def cmd_torsion(args, out: _Output) -> int:
    rec = catalog.resolve(args.input)
    t = torsion(rec.monodromy, args.order)
    out.doc = {
        "knot": rec.name,
        "torsion": {
            "rational": _ratfun_json(t.rational),
            "series": _series_json(t.series),
            "flow_matrix": [[_ratfun_json(d) for d in row] for row in t.flow_matrix],
        },
    }
    out.line(f"knot: {rec.name}")
    out.line(f"torsion: {t.rational}")
    out.line(f"series (order {t.series.order}): {_series_text(t.series)}")
    for i, row in enumerate(t.flow_matrix, start=1):
        for j, d in enumerate(row, start=1):
            out.line(f"D_{i}{j}(t) = {d}")
    return EXIT_OK


def cmd_alexander(args, out: _Output) -> int:
    rec = catalog.resolve(args.input)
    res = alexander_recover(rec.monodromy, args.order)
    out.doc = {
        "knot": rec.name,
        "alexander": {"raw": _poly_json(res.raw), "normalized": _poly_json(res.normalized)},
    }
    out.line(f"knot: {rec.name}")
    out.line(f"alexander: {res.raw}")
    out.line(f"normalized: {res.normalized}")
    status = EXIT_OK
    if rec.alexander is not None:
        exact = res.raw == rec.alexander
        unit = res.normalized == normalize_unit(rec.alexander)
        out.doc["verification"] = {
            "stored": _poly_json(rec.alexander),
            "exact": exact,
            "up_to_unit": unit,
        }
        if exact:
            out.line("verification: exact match")
        elif unit:
            out.line(f"verification: match up to a unit (stored {rec.alexander})")
        else:
            out.line(f"verification: MISMATCH (stored {rec.alexander})")
        status = EXIT_OK if exact else EXIT_FAIL
    return status


def cmd_census(args, out: _Output) -> int:
    rec = catalog.resolve(args.input)
    rep = census(rec.monodromy, args.depth)
    out.doc = {
        "knot": rec.name,
        "census": [
            {
                "n": lv.n,
                "lefschetz": lv.lefschetz,
                "flow_counts": [list(r) for r in lv.flow_counts],
                "pairing_counts": [list(r) for r in lv.pairing_counts],
            }
            for lv in rep.levels
        ],
    }
    out.line(f"knot: {rec.name}")
    out.line(f"{'n':>4}  {'L(g^n)':>10}  flow counts D^(n)")
    for lv in rep.levels:
        flows = "; ".join(" ".join(str(x) for x in row) for row in lv.flow_counts) or "-"
        out.line(f"{lv.n:>4}  {lv.lefschetz:>10}  {flows}")
    return EXIT_OK


def cmd_check_all(args, out: _Output) -> int:
    results = run_all(args.order)
    out.doc = {
        "criteria": [
            {"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail}
            for r in results
        ]
    }
    for r in results:
        out.line(str(r))
    ok = all(r.passed for r in results)
    out.line("all criteria passed" if ok else "SOME CRITERIA FAILED")
    return EXIT_OK if ok else EXIT_FAIL


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morsezeta",
        description="Zeta functions, Novikov torsion and Alexander polynomials "
        "from integer monodromy matrices.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help, with_input=True):
        p = sub.add_parser(name, help=help)
        if with_input:
            p.add_argument("input", help="builtin:<name> or path to a JSON document")
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check the monodromy matrix invariants")
    add("zeta", cmd_zeta, "dynamical Lefschetz zeta function").add_argument(
        "--order", type=_positive, default=DEFAULT_ORDER
    )
    add("torsion", cmd_torsion, "Novikov torsion and flow matrix").add_argument(
        "--order", type=_positive, default=DEFAULT_ORDER
    )
    add("alexander", cmd_alexander, "recover the Alexander polynomial").add_argument(
        "--order", type=_positive, default=DEFAULT_ORDER
    )
    add("census", cmd_census, "per-level flow-line counts").add_argument(
        "--depth", type=_positive, required=True
    )
    add("check-all", cmd_check_all, "run the acceptance suite", with_input=False).add_argument(
        "--order", type=_positive, default=DEFAULT_ORDER
    )
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    out = _Output(args.format, stdout)
    try:
        status = args.func(args, out)
    except (InvalidMonodromy, ConsistencyError, IdentityViolation) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_FAIL
    except (catalog.DocumentError, OSError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_FAIL
    out.flush()
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
