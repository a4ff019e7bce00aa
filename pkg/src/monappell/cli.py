"""Command-line front end: generate sequences, verify the identities,
compare with the Fueter route, and validate user-supplied initial terms.

Exit status: 0 all checks pass, 1 verification failures, 2 usage errors,
3 internal errors.  Output is deterministic for a fixed configuration
and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import MonappellError
from .fueter import check_fueter_appell_match, check_fueter_identity, fueter_map
from .initial_terms import (
    BUILTIN_SOURCE,
    InitialTermSpec,
    load_initial_term,
    validate_initial_term,
)
from .latex import collected_term_latex
from .polynomials import CliffordPolynomial, first_difference
from .report import VerificationReport
from .sequences import SequenceSpec, generate_sequence, verify_axial, verify_sequence
from .suites import run_identity_suites

ENV_OUTPUT_DIR = "MONAPPELL_OUTPUT_DIR"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monappell",
        description="Exact monogenic Appell-type sequences: generation and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_pk=True):
        p.add_argument("--m", type=int, required=True, help="dimension m (generators)")
        p.add_argument("--k", type=int, required=True, help="degree of the initial term")
        if with_pk:
            p.add_argument(
                "--pk",
                default=BUILTIN_SOURCE,
                help="initial term: 'builtin' or a path to a JSON polynomial",
            )
        p.add_argument(
            "--output-dir",
            default=None,
            help=f"directory for JSON artifacts (default: ${ENV_OUTPUT_DIR})",
        )

    gen = sub.add_parser("generate", help="emit terms 0..n_max")
    common(gen)
    gen.add_argument("--n-max", type=int, required=True)
    gen.add_argument("--format", choices=("summary", "json", "latex"), default="summary")
    gen.set_defaults(func=cmd_generate)

    ver = sub.add_parser("verify", help="run the full identity report")
    common(ver)
    ver.add_argument("--n-max", type=int, required=True)
    ver.add_argument("--seed", type=int, default=0, help="seed for the randomized suites")
    ver.add_argument("--cases", type=int, default=25, help="cases per randomized identity")
    ver.add_argument("--format", choices=("summary", "json"), default="summary")
    ver.set_defaults(func=cmd_verify)

    fue = sub.add_parser("fueter-compare", help="compare the Fueter route with the sequence")
    common(fue)
    fue.add_argument(
        "--n-max", type=int, default=4, help="extra monomial powers / matched terms"
    )
    fue.add_argument("--format", choices=("summary", "json"), default="summary")
    fue.set_defaults(func=cmd_fueter_compare)

    val = sub.add_parser("validate-pk", help="validate a JSON initial term")
    val.add_argument("--file", required=True)
    val.add_argument("--k", type=int, required=True)
    val.add_argument("--format", choices=("summary", "json"), default="summary")
    val.set_defaults(func=cmd_validate_pk)

    return parser


def _resolve_spec(args, parser) -> SequenceSpec:
    try:
        pk = InitialTermSpec(m=args.m, k=args.k, source=args.pk).resolve()
        return SequenceSpec(m=args.m, k=args.k, pk=pk, n_max=args.n_max)
    except (MonappellError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        parser.error(str(exc))


def _output_dir(args) -> Path | None:
    target = args.output_dir or os.environ.get(ENV_OUTPUT_DIR)
    if target is None:
        return None
    path = Path(target)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _emit_report(report: VerificationReport, args, extra: dict | None = None) -> int:
    if args.format == "json":
        payload = dict(extra or {})
        payload.update(report.to_json())
        print(json.dumps(payload, indent=2))
    else:
        for key, value in (extra or {}).items():
            print(f"{key}: {value}")
        for line in report.summary_lines():
            print(line)
    outdir = _output_dir(args) if hasattr(args, "output_dir") else None
    if outdir is not None:
        payload = dict(extra or {})
        payload.update(report.to_json())
        (outdir / "report.json").write_text(json.dumps(payload, indent=2) + "\n")
    return 0 if report.all_passed else 1


def cmd_generate(args, parser) -> int:
    spec = _resolve_spec(args, parser)
    terms = generate_sequence(spec)
    if args.format == "json":
        payload = {
            "m": spec.m,
            "k": spec.k,
            "n_max": spec.n_max,
            "initial_term": spec.pk.to_json_dict(),
            "terms": [term.to_json_dict() for term in terms],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "latex":
        for n in range(spec.n_max + 1):
            rendered = collected_term_latex(spec.m, spec.k, n, spec.pk if spec.k else None)
            print(f"n={n}: {rendered}")
    else:
        for n, term in enumerate(terms):
            print(f"n={n}: {term}")
    outdir = _output_dir(args)
    if outdir is not None:
        for n, term in enumerate(terms):
            path = outdir / f"term_{n}.json"
            path.write_text(json.dumps(term.to_json_dict(), indent=2) + "\n")
    return 0


def cmd_verify(args, parser) -> int:
    spec = _resolve_spec(args, parser)
    report = verify_sequence(spec)
    report.extend(verify_axial(spec))
    report.extend(run_identity_suites(spec.m, args.seed, args.cases))
    return _emit_report(report, args, extra={"seed": args.seed})


def cmd_fueter_compare(args, parser) -> int:
    if args.m % 2 == 0:
        parser.error("fueter-compare requires an odd dimension m")
    spec = _resolve_spec(args, parser)
    threshold = 2 * spec.k + spec.m - 1
    report = VerificationReport()
    zero = CliffordPolynomial.zero(spec.context)
    for n in range(threshold):
        image = fueter_map(n, spec.pk, spec.k)
        report.add(
            "fueter_vanishing",
            {"m": spec.m, "k": spec.k, "n": n},
            image.is_zero(),
            first_difference(image, zero),
        )
    for n in range(threshold, threshold + spec.n_max + 1):
        report.extend(check_fueter_identity(n, spec.pk, spec.k))
    for n in range(spec.n_max + 1):
        report.extend(check_fueter_appell_match(spec, n))
    return _emit_report(report, args)


def cmd_validate_pk(args, parser) -> int:
    if args.k < 0:
        parser.error("k must be non-negative")
    try:
        candidate = load_initial_term(args.file)
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        parser.error(f"cannot read initial term: {exc}")
    report = validate_initial_term(candidate, args.k)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        for line in report.summary_lines():
            print(line)
    return 0 if report.all_passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except MonappellError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - internal failure path
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
