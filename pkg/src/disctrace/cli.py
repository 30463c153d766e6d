"""Command line interface: kernel / test / lemmas / extend.

Exit codes: 0 = verification passed, 1 = verification failed,
2 = usage error.  All randomness sits behind a single --seed flag and
reports are byte-stable across reruns.
"""

from __future__ import annotations

import argparse
import json
import sys

from .boundary import HermitianPolynomial
from .discs import disc_through_two_points
from .errors import (
    CollinearPoints,
    DegenerateSample,
    DiscTraceError,
    NotExtendible,
)
from .geometry import Complex2
from .moments import extendibility_test, extension_value
from .verification import (
    extension_consistency,
    kernel_experiment,
    lemma_suite,
    sample_disc_family,
)

MAX_DEGREE = 12


class UsageError(Exception):
    pass


def parse_point(text: str) -> Complex2:
    """Parse a C^2 point: "re,im;re,im", or the real shorthand "x,y" for
    the point (x, y)."""
    try:
        if ";" in text:
            parts = text.split(";")
            if len(parts) != 2:
                raise ValueError
            coords = []
            for p in parts:
                re_, im_ = p.split(",")
                coords.append(complex(float(re_), float(im_)))
            return Complex2(coords[0], coords[1])
        x, y = text.split(",")
        return Complex2(float(x), float(y))
    except (ValueError, IndexError) as exc:
        raise UsageError(f"cannot parse point {text!r}") from exc


def format_point(p: Complex2) -> str:
    return f"{p.z1.real},{p.z1.imag};{p.z2.real},{p.z2.imag}"


def _dump(doc: dict, path: str | None, to_stdout: bool) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if to_stdout or path is None:
        sys.stdout.write(text)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)


def _load_function(path: str) -> HermitianPolynomial:
    try:
        with open(path) as fh:
            doc = json.load(fh)
        return HermitianPolynomial.from_json_dict(doc)
    except FileNotFoundError as exc:
        raise UsageError(f"function file not found: {path}") from exc
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed function file {path}: {exc}") from exc


def _check_degree(d: int) -> None:
    if not 0 <= d <= MAX_DEGREE:
        raise UsageError(f"degree must be in [0, {MAX_DEGREE}]")


def cmd_kernel(args) -> int:
    _check_degree(args.degree)
    if args.discs < 1:
        raise UsageError("--discs must be at least 1")
    if args.svd_tol <= 0:
        raise UsageError("--svd-tol must be positive")
    points = [parse_point(t) for t in args.points]
    try:
        report = kernel_experiment(
            *points,
            d=args.degree,
            discs_per_point=args.discs,
            svd_tol=args.svd_tol,
            seed=args.seed,
        )
    except CollinearPoints as exc:
        raise UsageError(str(exc)) from exc
    except DegenerateSample as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    _dump(report.to_json_dict(), args.out, args.json_only)
    passed = (
        report.kernel_dimension == report.expected_holomorphic_dimension
        and report.max_principal_angle is not None
        and report.max_principal_angle < args.svd_tol
    )
    return 0 if passed else 1


def cmd_test(args) -> int:
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    if args.discs < 1:
        raise UsageError("--discs must be at least 1")
    f = _load_function(args.function)
    P = parse_point(args.point)
    discs = sample_disc_family(P, args.discs, args.seed)
    all_pass = True
    print("disc_id,max_negative_modulus,verdict")
    for i, disc in enumerate(discs):
        rep = extendibility_test(f, disc, args.tol)
        all_pass = all_pass and rep.verdict
        print(f"{i},{rep.max_negative_modulus:.3e},{str(rep.verdict).lower()}")
    print(f"summary,{'pass' if all_pass else 'fail'}")
    return 0 if all_pass else 1


def cmd_lemmas(args) -> int:
    report = lemma_suite(seed=args.seed)
    _dump(report.to_json_dict(), args.out, args.json_only)
    return 0 if report.all_passed else 1


def cmd_extend(args) -> int:
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    f = _load_function(args.function)
    points = [parse_point(t) for t in args.points]
    z = parse_point(args.at)
    if z.norm() >= 1.0:
        raise UsageError("evaluation point must be interior")
    # membership in the joint kernel at the function's own degree: f must
    # extend along every sampled disc through each of the three points
    for j, P in enumerate(points):
        for disc in sample_disc_family(P, args.discs, args.seed + j):
            rep = extendibility_test(f, disc, args.tol)
            if not rep.verdict:
                print(
                    "not extendible: max negative modulus "
                    f"{rep.max_negative_modulus:.3e} along a disc through "
                    f"{format_point(P)}",
                    file=sys.stderr,
                )
                return 1
    try:
        discrepancy = extension_consistency(f, *points, z=z, tol=args.tol)
        disc, tau_z, _ = disc_through_two_points(z, points[0])
        value = extension_value(f, disc, tau_z, args.tol)
    except NotExtendible as exc:
        print(f"not extendible: {exc}", file=sys.stderr)
        return 1
    print(f"value,{value.real!r},{value.imag!r}")
    print(f"discrepancy,{discrepancy!r}")
    return 0 if discrepancy < 1e-8 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="disctrace",
        description="Moment tests and nullspace experiments for straight "
        "discs of the unit ball in C^2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None, help="report output path")
        p.add_argument(
            "--json-only", action="store_true", help="print the report to stdout"
        )

    k = sub.add_parser("kernel", help="three-point nullspace experiment")
    k.add_argument("--points", nargs=3, required=True)
    k.add_argument("--degree", type=int, default=4)
    k.add_argument("--discs", type=int, default=60)
    k.add_argument("--svd-tol", type=float, default=1e-8)
    common(k)
    k.set_defaults(func=cmd_kernel)

    t = sub.add_parser("test", help="per-disc moment test of a function file")
    t.add_argument("--function", required=True)
    t.add_argument("--point", required=True)
    t.add_argument("--discs", type=int, default=100)
    t.add_argument("--tol", type=float, default=1e-10)
    t.add_argument("--seed", type=int, default=0)
    t.set_defaults(func=cmd_test)

    le = sub.add_parser("lemmas", help="run the lemma-level numerical checks")
    common(le)
    le.set_defaults(func=cmd_lemmas)

    e = sub.add_parser("extend", help="extension value with consistency check")
    e.add_argument("--function", required=True)
    e.add_argument("--points", nargs=3, required=True)
    e.add_argument("--at", required=True)
    e.add_argument("--discs", type=int, default=30)
    e.add_argument("--tol", type=float, default=1e-8)
    e.add_argument("--seed", type=int, default=0)
    e.set_defaults(func=cmd_extend)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DiscTraceError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
