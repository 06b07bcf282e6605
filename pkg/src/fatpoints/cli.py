"""Command-line front end: point-set files, reports, and the built-in
reproduction suite.

Point sets travel as JSON with every coordinate a rational string, never a
float; reports serialize deterministically (identical invocations produce
byte-identical output, timing aside).  Exit codes: 0 success, 1
verification failure, 2 input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import __version__
from .exactalg import MAX_PRIME, MIN_PRIME, RATIONAL, is_probable_prime
from .geometry import (
    GeometryError,
    Hyperplane,
    PointSet,
    ProjPoint,
    containing_hyperplane,
)
from .interpolation import InternalInvariantError, alpha, graded_dim
from .configurations import (
    ConfigurationError,
    coplanar_example,
    concurrent_lines_example,
    five_general_points,
    kummer_fixture,
    random_arrangement,
    random_points,
    star,
    validate_16_6,
)
from .analysis import (
    COPLANAR,
    NEITHER,
    STAR,
    AlphaReport,
    alpha_table,
    corollary_check,
    detect_star,
    waldschmidt_bounds,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


class InputError(Exception):
    """User-input problem; carries a machine-greppable code."""

    def __init__(self, code: str, message: str) -> None:
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# Point-set files
# ---------------------------------------------------------------------------

def parse_rational(text) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise InputError("INPUT_RATIONAL",
                         "expected a rational string like '2/3', got %r" % (text,))
    return Fraction(text)


def pointset_to_json(z: PointSet) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "dim": z.dim,
        "points": [[str(c) for c in p.coords] for p in z.points],
    }


def pointset_from_json(doc: dict) -> PointSet:
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA_VERSION:
        raise InputError("INPUT_SCHEMA", "expected a schema-%d point-set file"
                         % SCHEMA_VERSION)
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise InputError("INPUT_DIM", "'dim' must be a positive integer")
    raw = doc.get("points")
    if not isinstance(raw, list) or not raw:
        raise InputError("INPUT_POINTS", "'points' must be a nonempty list")
    points = []
    for idx, entry in enumerate(raw):
        if not isinstance(entry, list) or len(entry) != dim + 1:
            raise InputError("INPUT_POINT_SHAPE",
                             "points[%d]: expected %d coordinates" % (idx, dim + 1))
        coords = [parse_rational(c) for c in entry]
        if all(c == 0 for c in coords):
            raise InputError("INPUT_ZERO_VECTOR",
                             "points[%d]: all coordinates are zero" % idx)
        point = ProjPoint(tuple(coords))
        if point in points:
            raise InputError("INPUT_DUPLICATE_POINT",
                             "points[%d]: duplicates an earlier point" % idx)
        points.append(point)
    return PointSet(dim, tuple(points))


def load_pointset(path: str) -> PointSet:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError("INPUT_FILE", "cannot read %s: %s" % (path, exc)) from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("INPUT_JSON", "%s: %s" % (path, exc)) from exc
    return pointset_from_json(doc)


def fixtures_dir() -> Path:
    return Path(__file__).parent / "fixtures"


def load_fixture(name: str, directory: Optional[str] = None) -> PointSet:
    base = Path(directory) if directory else fixtures_dir()
    return load_pointset(str(base / (name + ".json")))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

def _field_label(field) -> str:
    return "rational" if field is RATIONAL else "prime:%d" % field


def report_to_json(report: AlphaReport, meta: dict) -> dict:
    witness = report.classification.witness
    if isinstance(witness, Hyperplane):
        witness_doc = {"covector": [str(c) for c in witness.covector]}
    elif witness is None:
        witness_doc = None
    else:
        witness_doc = {"hyperplanes": [[str(c) for c in h.covector]
                                       for h in witness.hyperplanes]}
    return {
        "schema": SCHEMA_VERSION,
        "n": report.n,
        "alphas": {str(k): v for k, v in sorted(report.alphas.items())},
        "hypothesisHolds": report.hypothesis_holds,
        "classification": {"tag": report.classification.tag, "witness": witness_doc},
        "waldschmidt": {
            "lower": str(report.waldschmidt.lower),
            "upper": str(report.waldschmidt.upper),
            "demaillyAssumptionsUnverified":
                report.waldschmidt.demailly_assumptions_unverified,
        },
        "meta": meta,
    }


def dump_report(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _parse_field(text: str):
    if text == "rational":
        return RATIONAL
    if text.startswith("prime:"):
        try:
            p = int(text.split(":", 1)[1])
        except ValueError:
            raise InputError("INPUT_FIELD", "malformed prime modulus in %r" % text)
        if not (MIN_PRIME < p <= MAX_PRIME):
            raise InputError("INPUT_FIELD",
                             "prime modulus must lie in (2^30, %d]" % MAX_PRIME)
        if not is_probable_prime(p):
            raise InputError("INPUT_FIELD", "%d is not prime" % p)
        return p
    raise InputError("INPUT_FIELD",
                     "--field must be 'rational' or 'prime:<p>', got %r" % text)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_alpha(args) -> int:
    field = _parse_field(args.field)
    z = load_pointset(args.input)
    k = args.power
    k_max = max(k, args.max_power or z.dim)
    start = time.perf_counter()
    report = alpha_table(z, max_power=k_max, field=field)
    elapsed_ms = 1000 * (time.perf_counter() - start)
    meta = {
        "input": args.input,
        "field": _field_label(field),
        "seed": None,
        "command": "alpha",
        "version": __version__,
        "timingMs": round(elapsed_ms, 3),
    }
    if args.json:
        doc = report_to_json(report, meta)
        if args.count_forms:
            doc["formCount"] = graded_dim(z, report.alphas[k], k, field=field)
        print(dump_report(doc))
    else:
        print("alpha(%d) = %d" % (k, report.alphas[k]))
        if args.count_forms:
            print("forms = %d" % graded_dim(z, report.alphas[k], k, field=field))
    return EXIT_OK


def cmd_classify(args) -> int:
    field = _parse_field(args.field)
    z = load_pointset(args.input)
    start = time.perf_counter()
    report = alpha_table(z, max_power=args.max_power, field=field)
    elapsed_ms = 1000 * (time.perf_counter() - start)
    meta = {
        "input": args.input,
        "field": _field_label(field),
        "seed": None,
        "command": "classify",
        "version": __version__,
        "timingMs": round(elapsed_ms, 3),
    }
    if args.json:
        print(dump_report(report_to_json(report, meta)))
    else:
        cls = report.classification
        print("classification = %s" % cls.tag)
        if cls.tag == COPLANAR:
            print("hyperplane = %r" % (cls.witness,))
        elif cls.tag == STAR:
            print("arrangement = %s"
                  % ", ".join(repr(h) for h in cls.witness.hyperplanes))
        print("hypothesis (alpha jumps by 1 up to n) = %s"
              % str(report.hypothesis_holds).lower())
        print("alphas = %s" % {k: v for k, v in sorted(report.alphas.items())})
    return EXIT_OK


def cmd_generate(args) -> int:
    seed = args.seed
    kind = args.kind
    if kind == "star":
        if args.n is None or args.d is None:
            raise InputError("INPUT_PARAMS", "star generation needs --n and --d")
        arrangement = random_arrangement(args.n, args.d,
                                         seed if seed is not None else 1)
        z = star(arrangement).points
    elif kind == "kummer":
        z = kummer_fixture() if seed is None else kummer_fixture(seed)
    elif kind == "random":
        if args.n is None or args.count is None:
            raise InputError("INPUT_PARAMS", "random generation needs --n and --count")
        z = random_points(args.n, args.count,
                          seed if seed is not None else 1,
                          coord_range=args.coord_range)
    elif kind == "paper-example":
        name = args.name
        if name == "five-points":
            z = five_general_points() if seed is None else five_general_points(seed)
        elif name == "concurrent-lines":
            z = concurrent_lines_example()
        elif name == "kummer":
            z = kummer_fixture() if seed is None else kummer_fixture(seed)
        else:
            raise InputError(
                "INPUT_PARAMS",
                "--name must be five-points, concurrent-lines or kummer")
    else:  # pragma: no cover - argparse restricts choices
        raise InputError("INPUT_PARAMS", "unknown generation kind %r" % kind)
    text = json.dumps(pointset_to_json(z), indent=2, sort_keys=True)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify-paper: the bundled reproduction suite
# ---------------------------------------------------------------------------

class _Suite:
    def __init__(self) -> None:
        self.failures = 0
        self.lines: list[str] = []

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        if not ok:
            self.failures += 1
        suffix = (" " + detail) if detail else ""
        self.lines.append("%s %s%s" % (status, name, suffix))


_STAR_SEED_BASE = 7000


def star_fixture(n: int, d: int):
    """Deterministic seeded star configuration used across the suite."""
    return star(random_arrangement(n, d, seed=_STAR_SEED_BASE + 10 * n + d))


def _verify_star_alpha_laws(suite: _Suite) -> None:
    for n in (2, 3):
        for d in range(3, 7):
            data = star_fixture(n, d)
            got = tuple(alpha(data.points, k) for k in range(1, n + 1))
            want = tuple(d - n + k for k in range(1, n + 1))
            suite.check("star-alpha-law n=%d d=%d" % (n, d), got == want,
                        "alphas=%s expected=%s" % (got, want))


def _verify_uniqueness(suite: _Suite) -> None:
    from .interpolation import divide_by_linear, forms_basis
    for n in (2, 3):
        for d in range(n + 1, 7):
            data = star_fixture(n, d)
            basis = forms_basis(data.points, d, n)
            ok = len(basis) == 1
            detail = "forms=%d" % len(basis)
            if ok:
                form = basis[0]
                for h in data.arrangement.hyperplanes:
                    form = divide_by_linear(form, h)
                    if form is None:
                        ok = False
                        detail = "division by %r failed" % (h,)
                        break
                if ok:
                    ok = form.degree == 0 and not form.is_zero()
                    detail = "quotient degree %d" % form.degree
            suite.check("star-unique-form n=%d d=%d" % (n, d), ok, detail)


def _verify_examples(suite: _Suite, directory: Optional[str]) -> None:
    five = five_general_points()
    suite.check("five-points fixture-file",
                load_fixture("five_general_points", directory) == five)
    got = tuple(alpha(five, k) for k in (1, 2, 3))
    suite.check("five-points alphas", got == (2, 4, 5), "alphas=%s" % (got,))
    suite.check("five-points not-hypothesis", got[2] != got[0] + 2)
    suite.check("five-points classify-neither",
                containing_hyperplane(five) is None and detect_star(five) is None)

    conc = concurrent_lines_example()
    suite.check("concurrent fixture-file",
                load_fixture("concurrent_lines", directory) == conc)
    got = tuple(alpha(conc, k) for k in (1, 2))
    suite.check("concurrent alphas", got == (2, 3), "alphas=%s" % (got,))
    suite.check("concurrent not-coplanar", containing_hyperplane(conc) is None)
    suite.check("concurrent not-star", detect_star(conc) is None)

    kum = kummer_fixture()
    suite.check("kummer fixture-file",
                load_fixture("kummer16", directory) == kum)
    suite.check("kummer 16-6", validate_16_6(kum))
    got = tuple(alpha(kum, k) for k in (1, 2))
    suite.check("kummer alphas", got == (3, 4), "alphas=%s" % (got,))
    suite.check("kummer no-quadric", graded_dim(kum, 2, 1) == 0)


def _verify_corollary(suite: _Suite) -> None:
    coplanar = coplanar_example()
    suite.check("corollary coplanar", corollary_check(coplanar) is True)
    star4 = star_fixture(3, 4)
    suite.check("corollary star-4", corollary_check(star4.points) is None)
    suite.check("corollary five-points",
                corollary_check(five_general_points()) is not False)


def _verify_waldschmidt(suite: _Suite) -> None:
    for d in range(4, 7):
        data = star_fixture(3, d)
        bounds = waldschmidt_bounds(data.points, 3)
        ok = (bounds.lower == bounds.upper == Fraction(d, 3)
              and not bounds.demailly_assumptions_unverified)
        suite.check("waldschmidt star d=%d" % d, ok,
                    "lower=%s upper=%s" % (bounds.lower, bounds.upper))
    bounds = waldschmidt_bounds(five_general_points(), 3)
    suite.check("waldschmidt five-points",
                bounds.lower == Fraction(4, 3) and bounds.upper == Fraction(5, 3),
                "lower=%s upper=%s" % (bounds.lower, bounds.upper))


def cmd_verify_paper(args) -> int:
    suite = _Suite()
    _verify_star_alpha_laws(suite)
    _verify_uniqueness(suite)
    _verify_examples(suite, args.fixtures_dir)
    _verify_corollary(suite)
    _verify_waldschmidt(suite)
    for line in suite.lines:
        print(line)
    total = len(suite.lines)
    print("%d/%d checks passed" % (total - suite.failures, total))
    return EXIT_OK if suite.failures == 0 else EXIT_VERIFY


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fatpoints",
        description="Exact initial degrees of symbolic powers of point ideals, "
                    "star configurations, and classification checks.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_alpha = sub.add_parser("alpha", help="initial degree of a symbolic power")
    p_alpha.add_argument("input", help="point-set JSON file")
    p_alpha.add_argument("-k", "--power", type=int, default=1,
                         help="symbolic power k (default 1)")
    p_alpha.add_argument("--max-power", type=int, default=None,
                         help="also tabulate alphas up to this power")
    p_alpha.add_argument("--field", default="rational",
                         help="rational | prime:<p> (default rational)")
    p_alpha.add_argument("--count-forms", action="store_true",
                         help="also print the kernel dimension at alpha")
    p_alpha.add_argument("--json", action="store_true")
    p_alpha.set_defaults(func=cmd_alpha)

    p_cls = sub.add_parser("classify", help="coplanar / star / neither")
    p_cls.add_argument("input")
    p_cls.add_argument("--max-power", type=int, default=None)
    p_cls.add_argument("--field", default="rational")
    p_cls.add_argument("--json", action="store_true")
    p_cls.set_defaults(func=cmd_classify)

    p_gen = sub.add_parser("generate", help="write a point-set file")
    p_gen.add_argument("kind", choices=["star", "kummer", "random", "paper-example"])
    p_gen.add_argument("--name", default=None,
                       help="paper-example name: five-points | concurrent-lines | kummer")
    p_gen.add_argument("--n", type=int, default=None, help="ambient dimension")
    p_gen.add_argument("--d", type=int, default=None, help="number of hyperplanes")
    p_gen.add_argument("--count", type=int, default=None, help="number of points")
    p_gen.add_argument("--coord-range", type=int, default=10)
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("-o", "--output", default=None)
    p_gen.set_defaults(func=cmd_generate)

    p_ver = sub.add_parser("verify-paper",
                           help="run the bundled reproduction suite")
    p_ver.add_argument("--fixtures-dir", default=None,
                       help="override the bundled fixture directory")
    p_ver.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except InputError as exc:
        print("ERROR %s: %s" % (exc.code, exc), file=sys.stderr)
        return EXIT_INPUT
    except (GeometryError, ConfigurationError) as exc:
        print("ERROR %s: %s" % (type(exc).__name__.upper(), exc), file=sys.stderr)
        return EXIT_INPUT
    except InternalInvariantError as exc:
        print("ERROR INTERNAL_INVARIANT: %s" % exc, file=sys.stderr)
        return EXIT_INTERNAL
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
