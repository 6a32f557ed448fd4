"""Command-line front end.

Four subcommands: ``classify`` for a single verdict, ``walls`` for the
candidate critical values of one type, ``scan`` to sweep a grid into a CSV
or JSON file, and ``witness`` to run one of the named certificates.

Exit codes: 0 success, 1 malformed flags, 2 domain error or failed
certificate hypothesis, 3 unwritable output path, 4 failed arithmetic
check in a certificate.  Output is a pure function of the flags; rationals
always serialize as "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Iterator, Optional, Sequence

from .classify import classify, nonss_window
from .core import CSType, CurveClass, DomainError, Verdict, format_rat
from .walls import candidate_walls
from .witness import (
    Certificate,
    certificate_hyp1,
    certificate_hyp2,
    certificate_hyp3,
    certificate_hyp4,
    example_d_gt_2n,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_OUTPUT = 3
EXIT_CHECK_FAILED = 4


class _Parser(argparse.ArgumentParser):
    """argparse variant honoring the exit-code contract (1 for bad flags)."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected n,d,k, got {text!r}")
    try:
        n, d, k = (int(p.strip()) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three integers, got {text!r}")
    return n, d, k


def _type_str(t: CSType) -> str:
    return f"{t.n},{t.d},{t.k}"


def _curve_for(genus: int, hyperelliptic: bool) -> CurveClass:
    # Every genus-2 curve is hyperelliptic, so the flag is implied there.
    return CurveClass(genus, hyperelliptic or genus == 2)


def _verdict_json(c: CurveClass, t: CSType, v: Verdict) -> dict[str, Any]:
    if v.exceptional is None:
        tag = None
    else:
        tag = {
            "kind": v.exceptional.kind.value,
            "type": _type_str(v.exceptional.cstype),
            "a": v.exceptional.a,
        }
    return {
        "genus": c.genus,
        "hyperelliptic": c.hyperelliptic,
        "type": _type_str(t),
        "u_nonempty": v.u_nonempty,
        "us_nonempty": v.us_nonempty,
        "b_nonempty": v.b_nonempty,
        "g_alpha_nonempty": v.g_alpha_nonempty,
        "beta": v.beta,
        "dim": v.dim,
        "irreducible": v.irreducible,
        "smooth_GL": v.smooth_gl.value,
        "generic_shape": v.generic_shape.value,
        "exceptional": tag,
    }


def _print_json(payload: Any) -> None:
    print(json.dumps(payload, indent=2))


def cmd_classify(args: argparse.Namespace) -> int:
    n, d, k = args.type
    try:
        c = _curve_for(args.genus, args.hyperelliptic)
        t = CSType(n, d, k)
        if d > 2 * n and args.allow_out_of_range:
            window = nonss_window(c.genus, t.n, t.d)
            payload = {
                "genus": c.genus,
                "hyperelliptic": c.hyperelliptic,
                "type": _type_str(t),
                "out_of_range": True,
                "nonss_window": None
                if window is None
                else {"lo": format_rat(window.lo), "hi": format_rat(window.hi)},
                "k_in_window": None if window is None else t.k in window,
            }
            _print_json(payload)
            return EXIT_OK
        verdict = classify(c, t)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    _print_json(_verdict_json(c, t, verdict))
    return EXIT_OK


def cmd_walls(args: argparse.Namespace) -> int:
    n, d, k = args.type
    try:
        t = CSType(n, d, k)
        wall_set = candidate_walls(t)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    payload = {
        "type": _type_str(t),
        "walls": [format_rat(w) for w in wall_set.walls],
        "sup": None if wall_set.admissible_sup is None else format_rat(wall_set.admissible_sup),
        "witnesses": {
            format_rat(w): [f"{n1},{d1},{k1}" for n1, d1, k1 in wall_set.witnesses[w]]
            for w in wall_set.walls
        },
    }
    _print_json(payload)
    return EXIT_OK


@dataclass(frozen=True)
class ScanSpec:
    """Grid description for ``scan``; per-cell degree never exceeds 2n."""

    g_min: int
    g_max: int
    curve: str  # hyperelliptic | nonhyperelliptic | both
    n_min: int
    n_max: int
    d_min: int = 1
    d_max: Optional[int] = None
    k_min: int = 1
    k_max: Optional[int] = None
    fmt: str = "csv"

    def __post_init__(self) -> None:
        if self.g_min < 2:
            raise DomainError(f"genus range must start at 2 or more, got {self.g_min}")
        if self.g_max < self.g_min or self.n_max < self.n_min:
            raise DomainError("empty scan range")
        if self.n_min < 1 or self.d_min < 1 or self.k_min < 1:
            raise DomainError("rank, degree, and section ranges start at 1")
        if self.curve not in ("hyperelliptic", "nonhyperelliptic", "both"):
            raise DomainError(f"unknown curve filter {self.curve!r}")
        if self.fmt not in ("csv", "json"):
            raise DomainError(f"unknown format {self.fmt!r}")


_SCAN_COLUMNS = (
    "g",
    "hyp",
    "n",
    "d",
    "k",
    "beta",
    "u",
    "us",
    "b",
    "g_alpha",
    "dim",
    "irreducible",
    "smooth_GL",
    "shape",
    "exceptional",
)


def scan_rows(spec: ScanSpec) -> Iterator[dict[str, Any]]:
    """Classify every cell of the grid, in (g, hyp, n, d, k) order.

    Genus-2 non-hyperelliptic slices do not exist and are skipped.
    """
    for g in range(spec.g_min, spec.g_max + 1):
        for hyp in (False, True):
            if spec.curve == "hyperelliptic" and not hyp:
                continue
            if spec.curve == "nonhyperelliptic" and hyp:
                continue
            if g == 2 and not hyp:
                continue
            c = CurveClass(g, hyp)
            for n in range(spec.n_min, spec.n_max + 1):
                d_hi = 2 * n if spec.d_max is None else min(2 * n, spec.d_max)
                k_hi = 2 * n + 2 if spec.k_max is None else min(2 * n + 2, spec.k_max)
                for d in range(spec.d_min, d_hi + 1):
                    for k in range(spec.k_min, k_hi + 1):
                        v = classify(c, CSType(n, d, k))
                        if v.exceptional is None:
                            tag = None
                        elif v.exceptional.a is None:
                            tag = v.exceptional.kind.value
                        else:
                            tag = f"{v.exceptional.kind.value}(a={v.exceptional.a})"
                        yield {
                            "g": g,
                            "hyp": hyp,
                            "n": n,
                            "d": d,
                            "k": k,
                            "beta": v.beta,
                            "u": v.u_nonempty,
                            "us": v.us_nonempty,
                            "b": v.b_nonempty,
                            "g_alpha": v.g_alpha_nonempty,
                            "dim": v.dim,
                            "irreducible": v.irreducible,
                            "smooth_GL": v.smooth_gl.value,
                            "shape": v.generic_shape.value,
                            "exceptional": tag,
                        }


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def render_scan(spec: ScanSpec) -> str:
    """The full scan as one deterministic string (CSV or JSON, LF endings)."""
    rows = list(scan_rows(spec))
    if spec.fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    lines = [",".join(_SCAN_COLUMNS)]
    for row in rows:
        lines.append(",".join(_csv_cell(row[col]) for col in _SCAN_COLUMNS))
    return "\n".join(lines) + "\n"


def cmd_scan(args: argparse.Namespace) -> int:
    try:
        spec = ScanSpec(
            g_min=args.genus_min,
            g_max=args.genus_max if args.genus_max is not None else args.genus_min,
            curve=args.curve,
            n_min=args.rank_min,
            n_max=args.rank_max,
            d_min=args.d_min,
            d_max=args.d_max,
            k_min=args.k_min,
            k_max=args.k_max,
            fmt=args.format,
        )
        text = render_scan(spec)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    try:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_OUTPUT
    return EXIT_OK


_WITNESS_PARAMS = {
    "hyp1": ("genus", "n"),
    "hyp2": ("genus", "n", "r"),
    "hyp3": ("genus", "r"),
    "hyp4": ("genus", "r"),
    "ex7": ("genus", "r"),
}


def _run_witness(name: str, genus: int, n: Optional[int], r: Optional[int]) -> Certificate:
    if name == "hyp1":
        assert n is not None
        return certificate_hyp1(genus, n)
    if name == "hyp2":
        assert n is not None and r is not None
        return certificate_hyp2(genus, n, r)
    if name == "hyp3":
        assert r is not None
        return certificate_hyp3(genus, r)
    if name == "hyp4":
        assert r is not None
        return certificate_hyp4(genus, r)
    assert r is not None
    return example_d_gt_2n(genus, r)


def cmd_witness(args: argparse.Namespace) -> int:
    needed = _WITNESS_PARAMS[args.name]
    provided = {"genus": args.genus, "n": args.n, "r": args.r}
    missing = [p for p in needed if provided[p] is None]
    if missing:
        flags = ", ".join(f"--{p}" for p in missing)
        print(f"error: certificate {args.name} requires {flags}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cert = _run_witness(args.name, args.genus, args.n, args.r)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = json.dumps(cert.to_json_dict(), indent=2)
    if args.output is not None:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_OUTPUT
    else:
        print(text)
    if not cert.hypotheses_ok:
        return EXIT_DOMAIN
    if not cert.passed:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cohsys", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="verdict for one curve class and type")
    p_classify.add_argument("--genus", type=int, required=True)
    p_classify.add_argument(
        "--hyperelliptic", action="store_true", help="curve is hyperelliptic (implied at genus 2)"
    )
    p_classify.add_argument("--type", type=_parse_triple, required=True, metavar="N,D,K")
    p_classify.add_argument(
        "--allow-out-of-range",
        action="store_true",
        help="for d > 2n, report the large-alpha emptiness window instead of erroring",
    )
    p_classify.set_defaults(func=cmd_classify)

    p_walls = sub.add_parser("walls", help="candidate critical values for one type")
    p_walls.add_argument("--type", type=_parse_triple, required=True, metavar="N,D,K")
    p_walls.set_defaults(func=cmd_walls)

    p_scan = sub.add_parser("scan", help="classify a grid into a CSV or JSON file")
    p_scan.add_argument("--genus-min", type=int, required=True)
    p_scan.add_argument("--genus-max", type=int, default=None)
    p_scan.add_argument(
        "--curve",
        choices=("hyperelliptic", "nonhyperelliptic", "both"),
        default="both",
    )
    p_scan.add_argument("--rank-min", type=int, default=1)
    p_scan.add_argument("--rank-max", type=int, required=True)
    p_scan.add_argument("--d-min", type=int, default=1)
    p_scan.add_argument("--d-max", type=int, default=None, help="extra cap; cells never exceed 2n")
    p_scan.add_argument("--k-min", type=int, default=1)
    p_scan.add_argument("--k-max", type=int, default=None, help="extra cap; cells never exceed 2n+2")
    p_scan.add_argument("--format", choices=("csv", "json"), default="csv")
    p_scan.add_argument("--output", required=True)
    p_scan.set_defaults(func=cmd_scan)

    p_witness = sub.add_parser("witness", help="run one arithmetic certificate")
    p_witness.add_argument("--name", choices=sorted(_WITNESS_PARAMS), required=True)
    p_witness.add_argument("--genus", type=int, required=True)
    p_witness.add_argument("--n", type=int, default=None)
    p_witness.add_argument("--r", type=int, default=None)
    p_witness.add_argument("--output", default=None)
    p_witness.set_defaults(func=cmd_witness)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
