"""Command-line front end: ``cfroots isolate|verify|bench``.

Polynomials are read as ascending dense coefficient lists (``"-2 0 1"`` is
``X**2 - 2``) or as sparse ``exponent:coefficient`` terms (``"2:1 0:-2"``).
Endpoints are always printed as exact ``p/q`` rationals.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 node ceiling hit.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from .families import FAMILIES, FamilySpec
from .poly import IntPoly
from .solver import IsolationReport, NodeCeilingExceeded, SolverConfig, isolate_all
from .sturm import verify_isolation

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_NODE_CEILING = 3


class PolynomialParseError(ValueError):
    pass


def parse_poly(text: str) -> IntPoly:
    """Parse dense ``"a0 a1 ... ad"`` or sparse ``"e:c ..."`` text."""
    tokens = text.replace("−", "-").replace(",", " ").split()
    if not tokens:
        raise PolynomialParseError("empty polynomial")
    try:
        if any(":" in t for t in tokens):
            terms: dict[int, int] = {}
            for t in tokens:
                e, c = t.split(":")
                e = int(e)
                if e < 0:
                    raise PolynomialParseError(f"negative exponent in {t!r}")
                terms[e] = terms.get(e, 0) + int(c)
            coeffs = [0] * (max(terms) + 1)
            for e, c in terms.items():
                coeffs[e] = c
        else:
            coeffs = [int(t) for t in tokens]
    except ValueError as exc:
        if isinstance(exc, PolynomialParseError):
            raise
        raise PolynomialParseError(f"cannot parse polynomial {text!r}: {exc}") from None
    A = IntPoly(coeffs)
    if A.is_zero():
        raise PolynomialParseError("the zero polynomial has no isolated roots")
    return A


def format_poly(A: IntPoly) -> str:
    return " ".join(str(a) for a in A.coeffs)


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


@dataclass
class RunRecord:
    input: str
    intervals: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @classmethod
    def from_report(cls, label: str, rep: IsolationReport, wall_time: float) -> "RunRecord":
        ivs = [
            {"kind": iv.kind, "lo": format_rational(iv.lo), "hi": format_rational(iv.hi),
             "multiplicity": iv.multiplicity}
            for iv in rep.intervals
        ]
        s = rep.stats
        stats = {
            "node_count": s.node_count,
            "shift_count": s.shift_count,
            "homothety_count": s.homothety_count,
            "max_coeff_bits": s.max_coeff_bits,
            "mean_partial_quotient_bits": s.mean_partial_quotient_bits,
        }
        return cls(label, ivs, stats, wall_time)

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    def text_lines(self, with_stats: bool = False) -> list[str]:
        lines = []
        for iv in self.intervals:
            lo, hi = _short(iv["lo"]), _short(iv["hi"])
            if iv["kind"] == "point":
                lines.append(f"[{lo}, {hi}] mult {iv['multiplicity']}")
            else:
                lines.append(f"({lo}, {hi}) mult {iv['multiplicity']}")
        if with_stats:
            lines.append(" ".join(f"{k}={v}" for k, v in self.stats.items())
                         + f" wall_time={self.wall_time:.4f}")
        return lines


def _short(s: str) -> str:
    return s[:-2] if s.endswith("/1") else s


def _config(args) -> SolverConfig:
    ceiling = os.environ.get("CF_NODE_CEILING")
    return SolverConfig(
        homothety_threshold=args.homothety_threshold,
        budan_pruning=not args.no_budan,
        node_ceiling=int(ceiling) if ceiling else None,
    )


def _read_input(args) -> tuple[str, IntPoly]:
    if args.family:
        spec = FamilySpec(args.family, args.degree, args.seed, args.coeff_bound)
        return f"{spec.family}({spec.degree})", spec.build()
    if args.file:
        with (sys.stdin if args.file == "-" else open(args.file)) as fh:
            text = fh.read()
    elif args.poly:
        text = " ".join(args.poly)
    else:
        text = sys.stdin.read()
    A = parse_poly(text)
    return format_poly(A), A


def _run(label: str, A: IntPoly, cfg: SolverConfig) -> tuple[IsolationReport, RunRecord]:
    t0 = time.perf_counter()
    rep = isolate_all(A, cfg)
    return rep, RunRecord.from_report(label, rep, time.perf_counter() - t0)


def cmd_isolate(args) -> int:
    label, A = _read_input(args)
    rep, rec = _run(label, A, _config(args))
    if args.format == "structured":
        print(rec.to_json())
    else:
        print("\n".join(rec.text_lines(args.stats)))
    return EXIT_OK


def cmd_verify(args) -> int:
    label, A = _read_input(args)
    rep, rec = _run(label, A, _config(args))
    verdict = verify_isolation(A, rep)
    if args.format == "structured":
        out = asdict(rec)
        out["verdict"] = "pass" if verdict else "fail"
        out["failures"] = verdict.failures
        print(json.dumps(out))
    else:
        print(f"{'pass' if verdict else 'fail'}: {len(rep.intervals)} intervals")
        for msg in verdict.failures:
            print(f"  {msg}")
        if args.stats:
            print(rec.text_lines(True)[-1])
    return EXIT_OK if verdict else EXIT_VERIFY_FAILED


def _bench_one(job: tuple[FamilySpec, SolverConfig, bool]) -> dict:
    spec, cfg, verify = job
    A = spec.build()
    rep, rec = _run(f"{spec.family}({spec.degree})", A, cfg)
    row = {
        "family": spec.family,
        "degree": spec.degree,
        "roots": len(rep.intervals),
        "node_count": rec.stats["node_count"],
        "wall_time": rec.wall_time,
    }
    if verify:
        row["verified"] = bool(verify_isolation(A, rep))
    return row


def cmd_bench(args) -> int:
    cfg = _config(args)
    families = [f for item in args.family for f in item.split(",") if f]
    degrees = [int(d) for item in args.degrees for d in item.split(",") if d]
    specs = sorted(
        (FamilySpec(f, d, args.seed, args.coeff_bound) for f in families for d in degrees),
        key=lambda s: (s.family, s.degree),
    )
    jobs = [(s, cfg, args.verify) for s in specs]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(j) for j in jobs]

    if args.format == "structured":
        for row in rows:
            print(json.dumps(row))
    else:
        cols = list(rows[0]) if rows else []
        print("\t".join(cols))
        for row in rows:
            print("\t".join(f"{v:.4f}" if isinstance(v, float) else str(v) for v in row.values()))
    if args.verify and not all(r["verified"] for r in rows):
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--no-budan", action="store_true", help="disable Budan pruning of the (0, 1) branch")
    p.add_argument("--homothety-threshold", type=int, default=16, metavar="N")
    p.add_argument("--stats", action="store_true", help="print solver statistics")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coeff-bound", type=int, default=1000)


def _input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("poly", nargs="*", help="coefficients a0 a1 ... ad, or e:c terms")
    p.add_argument("--file", help="read the polynomial from a file ('-' for stdin)")
    p.add_argument("--family", choices=sorted(FAMILIES))
    p.add_argument("--degree", type=int, default=10)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfroots", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("isolate", help="isolate the real roots of a polynomial")
    _input_flags(p)
    _solver_flags(p)
    p.set_defaults(func=cmd_isolate)

    p = sub.add_parser("verify", help="isolate, then check the result with Sturm sequences")
    _input_flags(p)
    _solver_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run benchmark families")
    p.add_argument("--family", action="append", required=True,
                   help="family name(s), repeatable or comma-separated")
    p.add_argument("--degrees", action="append", required=True, help="e.g. 50,100")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--verify", action="store_true")
    _solver_flags(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NodeCeilingExceeded as exc:
        print(f"cfroots: {exc}", file=sys.stderr)
        return EXIT_NODE_CEILING
    except (PolynomialParseError, ValueError, OSError) as exc:
        print(f"cfroots: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
