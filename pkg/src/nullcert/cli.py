"""Command-line driver: sweeps, certificates, tight examples, coefficients.

Exit codes, stable for CI pipelines:

* 0 -- success (sweep clean, certificate established, file verified)
* 1 -- a counterexample was found / a certificate failed re-verification
* 2 -- configuration error (bad flags, bad sets, non-prime modulus, ...)
* 3 -- certificate hypothesis unmet

All randomness is surfaced through a mandatory ``--seed`` whenever
``--samples`` is used, and every command is deterministic given its full flag
set: rerunning writes byte-identical files.  The environment variable
``NULLCERT_BUDGET`` overrides the default sweep budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import certify, search
from .field import PrimeField
from .poly import BivariatePolynomial, top_coefficient_interpolation
from .sets import ElementSet, GroupMode


def _parse_residues(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ValueError(f"bad set literal {text!r}; want comma-separated residues") from None


def _parse_primes(raw: list[str]) -> tuple[int, ...]:
    primes: list[int] = []
    for chunk in raw:
        primes.extend(int(part) for part in chunk.split(",") if part.strip() != "")
    if not primes:
        raise ValueError("at least one --prime is required")
    return tuple(primes)


def _element_set(p: int, mode: GroupMode, literal: str) -> ElementSet:
    field = PrimeField(p)
    values = _parse_residues(literal)
    for v in values:
        if not 0 <= v < p:
            raise ValueError(f"residue {v} out of range for GF({p})")
    return ElementSet(field, mode, values)


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nullcert",
        description="Restricted sumset/product-set bounds: sweeps and certificates over GF(p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run an exhaustive or sampled verification sweep")
    verify.add_argument("--theorem", required=True, choices=search.ALL_THEOREMS)
    verify.add_argument("--prime", action="append", required=True,
                        help="prime modulus; repeatable or comma-separated")
    verify.add_argument("--mode", choices=["add", "mult"],
                        help="group mode (required for --theorem ks)")
    verify.add_argument("--exhaustive", action="store_true")
    verify.add_argument("--samples", type=int, help="sampled sweep with this many draws")
    verify.add_argument("--seed", type=int, help="PRNG seed (mandatory with --samples)")
    verify.add_argument("--max-size", type=int, help="only subsets up to this size")
    verify.add_argument("--jobs", type=int, default=1, help="worker processes")
    verify.add_argument("--partitions", type=int, default=1,
                        help="static sweep partitions (merge is deterministic)")
    verify.add_argument("--budget", type=int, help="max hypothesis checks per sweep")
    verify.add_argument("--tight-cap", type=int, default=search.DEFAULT_TIGHT_CAP)
    verify.add_argument("--attach-certificates", action="store_true",
                        help="attach a certificate to each recorded tight instance")
    verify.add_argument("--out", help="report file path")
    verify.add_argument("--format", choices=["json", "csv"], default="json")

    cert = sub.add_parser("certificate", help="build one proof certificate")
    cert.add_argument("--theorem", choices=["additive", "mult", "main", "cover"],
                      help="defaults to 'additive' or 'mult' from --mode")
    cert.add_argument("--mode", required=True, choices=["add", "mult"])
    cert.add_argument("--prime", type=int, required=True)
    cert.add_argument("--a", required=True, dest="set_a", help="set literal, e.g. 1,2,4")
    cert.add_argument("--b", dest="set_b", help="second set literal")
    cert.add_argument("--c", dest="target", type=int, help="target element")
    cert.add_argument("--out", help="certificate file path")

    reverify = sub.add_parser("reverify", help="re-check an emitted certificate file")
    reverify.add_argument("--in", dest="path", required=True)

    tight = sub.add_parser("tight", help="construct the extremal root-of-unity example")
    tight.add_argument("--n", type=int, required=True, help="size of A (n >= 3)")
    tight.add_argument("--format", choices=["text", "json"], default="text")
    tight.add_argument("--out")

    coeff = sub.add_parser("coefficient", help="grid-interpolate a top coefficient")
    coeff.add_argument("--prime", type=int, required=True)
    coeff.add_argument("--poly", required=True,
                       help="JSON file holding [[i, j, coeff], ...] triples")
    coeff.add_argument("--a", required=True, dest="set_a")
    coeff.add_argument("--b", required=True, dest="set_b")

    return parser


def _cmd_verify(args) -> int:
    if args.samples is None and not args.exhaustive:
        raise ValueError("choose --exhaustive or --samples N --seed S")
    if args.samples is not None and args.exhaustive:
        raise ValueError("--exhaustive and --samples are mutually exclusive")
    budget = args.budget
    if budget is None:
        budget = int(os.environ.get("NULLCERT_BUDGET", search.DEFAULT_BUDGET))
    config = search.SweepConfig(
        theorem=args.theorem,
        primes=_parse_primes(args.prime),
        group_mode=GroupMode.parse(args.mode) if args.mode else None,
        max_set_size=args.max_size,
        samples=args.samples,
        seed=args.seed,
        partitions=args.partitions,
        budget=budget,
        tight_cap=args.tight_cap,
        attach_certificates=args.attach_certificates,
    )
    config.validate()
    if args.samples is not None:
        report = search.hunt_counterexample(config)
    else:
        report = search.exhaustive_verify(config, jobs=args.jobs)
    if args.out:
        text = report.to_json() if args.format == "json" else report.to_csv()
        Path(args.out).write_text(text)
    for stats in report.per_prime:
        print(
            f"p={stats.p}: examined={stats.examined} "
            f"hypothesis={stats.hypothesis_satisfying} "
            f"holding={stats.bound_holding} tight={stats.tight_count} "
            f"counterexamples={stats.counterexample_count}"
            + (f" contradictions={stats.contradictions}" if args.theorem == "main" else "")
        )
    print(
        f"{'OK' if report.ok() else 'COUNTEREXAMPLE'}: theorem={args.theorem} "
        f"wall={report.wall_time_s:.2f}s"
    )
    return 0 if report.ok() else 1


def _cmd_certificate(args) -> int:
    mode = GroupMode.parse(args.mode)
    theorem = args.theorem
    if theorem is None:
        theorem = "additive" if mode is GroupMode.ADDITIVE else "mult"
    expected_mode = GroupMode.ADDITIVE if theorem == "additive" else GroupMode.MULTIPLICATIVE
    if mode is not expected_mode:
        raise ValueError(f"theorem {theorem!r} needs --mode "
                         f"{'add' if expected_mode is GroupMode.ADDITIVE else 'mult'}")
    A = _element_set(args.prime, mode, args.set_a)
    if theorem == "main":
        if args.target is None:
            raise ValueError("--c is required for --theorem main")
        if args.set_b is not None and _parse_residues(args.set_b) != list(A.values):
            raise ValueError("--theorem main is a single-set bound; omit --b or repeat --a")
        cert = certify.symmetric_pair_certificate(A, args.target)
    else:
        if args.set_b is None:
            raise ValueError("--b is required for pair certificates")
        B = _element_set(args.prime, mode, args.set_b)
        if theorem == "cover":
            cert = certify.hyperbola_cover_certificate(A, B)
        else:
            if args.target is None:
                raise ValueError("--c is required for this certificate")
            builder = (
                certify.additive_cover_certificate
                if theorem == "additive"
                else certify.multiplicative_cover_certificate
            )
            cert = builder(A, B, args.target)
    _write_or_print(cert.to_json(), args.out)
    if args.out:
        print(f"{cert.verdict}: wrote {args.out}")
    return 0 if cert.verdict != certify.HYPOTHESIS_UNMET else 3


def _cmd_reverify(args) -> int:
    cert = certify.Certificate.from_json(Path(args.path).read_text())
    ok, problems = certify.verify_certificate(cert)
    if ok:
        print(f"valid: {cert.theorem} certificate, verdict {cert.verdict}")
        return 0
    for problem in problems:
        print(f"invalid: {problem}", file=sys.stderr)
    return 1


def _cmd_tight(args) -> int:
    if args.n < 3:
        raise ValueError("--n must be at least 3")
    example = search.construct_tight_example(args.n)
    if args.format == "json":
        text = json.dumps(example.to_json_dict(), sort_keys=True, indent=2) + "\n"
    else:
        data = example.to_json_dict()
        lines = [f"{key} = {data[key]}" for key in
                 ("n", "p", "w", "A", "B", "c", "product_size",
                  "unique_representation", "degenerate")]
        text = "\n".join(lines) + "\n"
    _write_or_print(text, args.out)
    return 0


def _cmd_coefficient(args) -> int:
    field = PrimeField(args.prime)
    triples = json.loads(Path(args.poly).read_text())
    f = BivariatePolynomial.from_triples(field, triples)
    avals = _parse_residues(args.set_a)
    bvals = _parse_residues(args.set_b)
    result = top_coefficient_interpolation(f, [field.element(v) for v in avals],
                                           [field.element(v) for v in bvals])
    direct = f.coefficient(len(avals) - 1, len(bvals) - 1)
    print(f"coefficient: {result.value}")
    print(f"direct: {direct.value}")
    if result != direct:
        raise AssertionError(
            f"interpolated {result.value} != direct {direct.value}; "
            "coefficient machinery broken"
        )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return 2 if exc.code not in (0,) else 0
    handlers = {
        "verify": _cmd_verify,
        "certificate": _cmd_certificate,
        "reverify": _cmd_reverify,
        "tight": _cmd_tight,
        "coefficient": _cmd_coefficient,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except certify.TheoremContradictionError as exc:
        print(f"counterexample: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
