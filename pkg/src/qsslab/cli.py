"""Command-line front end: encode states, emit reports, run verifications.

Exit codes: 0 success, 1 domain error (bad values, malformed files),
2 verification failure (indeterminate classification or a failed
--expect check). All numeric table/csv output carries 15 significant
digits; JSON uses exact round-trip floats.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Optional, Sequence

import numpy as np

from .access_analysis import (
    IndeterminateClassificationError,
    SecretPrior,
    access_structure_report,
    reconstruct_classical,
    reconstruct_quantum,
)
from .code5 import QubitSecret, encode_classical, encode_quantum, verify_distance
from .quantum_core import PureState, reduced_state, share_subset
from .classical_bound import ThresholdParams, check_bound, search_linear_schemes

STATE_FORMAT_VERSION = 1


def state_to_document(psi: PureState) -> dict:
    """JSON-ready document for a pure state (big-endian amplitude order)."""
    return {
        "format": STATE_FORMAT_VERSION,
        "num_qubits": psi.num_qubits,
        "amplitudes": [[float(a.real), float(a.imag)] for a in psi.amplitudes],
    }


def state_from_document(doc: dict) -> PureState:
    """Parse and validate a state document."""
    if not isinstance(doc, dict):
        raise ValueError("state document must be a JSON object")
    if doc.get("format") != STATE_FORMAT_VERSION:
        raise ValueError(f"unsupported state format: {doc.get('format')!r}")
    try:
        num_qubits = int(doc["num_qubits"])
        amps = np.array(
            [complex(re, im) for re, im in doc["amplitudes"]], dtype=complex
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed state document: {exc}") from exc
    return PureState(num_qubits, amps)


def read_state(path: str) -> PureState:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read state file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"state file {path} is not valid JSON: {exc}") from exc
    return state_from_document(doc)


def _dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"cannot parse complex number from {text!r} (use 're' or 're,im')")


def _parse_members(text: str) -> tuple[int, ...]:
    try:
        members = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError as exc:
        raise ValueError(f"cannot parse members from {text!r}") from exc
    return share_subset(members)


def _parse_prior(q0: float) -> SecretPrior:
    return SecretPrior.from_q0(q0)


def _cmd_encode(args: argparse.Namespace) -> int:
    if args.alpha0 is not None or args.alpha1 is not None:
        if args.secret is not None:
            raise ValueError("give either --secret or --alpha0/--alpha1, not both")
        if args.alpha0 is None or args.alpha1 is None:
            raise ValueError("--alpha0 and --alpha1 must be given together")
        secret = QubitSecret(_parse_complex(args.alpha0), _parse_complex(args.alpha1))
        psi = encode_quantum(secret)
    elif args.secret is not None:
        psi = encode_classical(args.secret)
    else:
        raise ValueError("encode needs --secret or --alpha0/--alpha1")
    _emit(_dump_json(state_to_document(psi)), args.out)
    return 0


def _report_table(report) -> str:
    rows = [("members", "holevo_bits", "trace_dist", "classification")]
    for rec in report.to_records():
        rows.append(
            (
                "{" + ",".join(str(i) for i in rec["members"]) + "}",
                _fmt(rec["holevo_bits"]),
                _fmt(rec["trace_dist"]),
                rec["classification"],
            )
        )
    widths = [max(len(row[c]) for row in rows) for c in range(4)]
    lines = ["  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip() for row in rows]
    lines.append(f"prior: q0={_fmt(report.prior.q0)} q1={_fmt(report.prior.q1)}")
    lines.append(f"threshold(3,5) structure: {str(report.is_threshold).lower()}")
    return "\n".join(lines) + "\n"


def _report_csv(report) -> str:
    lines = ["members,holevo_bits,trace_dist,classification"]
    for rec in report.to_records():
        members = ";".join(str(i) for i in rec["members"])
        lines.append(
            f"{members},{_fmt(rec['holevo_bits'])},{_fmt(rec['trace_dist'])},{rec['classification']}"
        )
    return "\n".join(lines) + "\n"


def _cmd_report(args: argparse.Namespace) -> int:
    report = access_structure_report(_parse_prior(args.prior))
    if args.format == "json":
        doc = {
            "prior": {"q0": report.prior.q0, "q1": report.prior.q1},
            "is_threshold": report.is_threshold,
            "subsets": report.to_records(),
        }
        _emit(_dump_json(doc), args.out)
    elif args.format == "csv":
        _emit(_report_csv(report), args.out)
    else:
        _emit(_report_table(report), args.out)
    return 0


def _cmd_distance(args: argparse.Namespace) -> int:
    report = verify_distance(args.max_weight, tolerance=args.tolerance)
    if args.format == "json":
        doc = {
            "max_weight": report.max_weight,
            "tolerance": report.tolerance,
            "certified_distance": report.certified_distance,
            "weights": [asdict(c) for c in report.checks],
        }
        _emit(_dump_json(doc), args.out)
    else:
        rows = [("weight", "operators", "max_off", "max_diagdiff", "violations", "first")]
        for c in report.checks:
            rows.append(
                (
                    str(c.weight),
                    str(c.operators_checked),
                    _fmt(c.max_off_diagonal),
                    _fmt(c.max_diagonal_difference),
                    str(c.violations),
                    c.first_violation or "-",
                )
            )
        widths = [max(len(row[i]) for row in rows) for i in range(6)]
        lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in rows]
        if report.certified_distance is None:
            lines.append(f"no violation up to weight {report.max_weight}")
        else:
            lines.append(f"certified distance: {report.certified_distance}")
        _emit("\n".join(lines) + "\n", args.out)
    if args.expect is not None and report.certified_distance != args.expect:
        print(
            f"verification failed: certified distance {report.certified_distance} != expected {args.expect}",
            file=sys.stderr,
        )
        return 2
    return 0


def _cmd_reconstruct(args: argparse.Namespace) -> int:
    members = _parse_members(args.members)
    psi = read_state(args.state)
    rho = reduced_state(psi, members)
    prior = _parse_prior(args.prior)
    doc: dict = {"members": list(members)}

    if args.mode in ("classical", "both"):
        classical = reconstruct_classical(members, rho, prior)
        doc["classical"] = {
            "guess": classical.guess,
            "success_probability": classical.success_probability,
            "support_overlap": classical.support_overlap,
        }
    if args.mode in ("quantum", "both"):
        if (args.expect_alpha0 is None) != (args.expect_alpha1 is None):
            raise ValueError("--expect-alpha0 and --expect-alpha1 must be given together")
        if args.expect_secret is not None and args.expect_alpha0 is not None:
            raise ValueError("give either --expect-secret or --expect-alpha0/1, not both")
        secret = None
        if args.expect_secret is not None:
            secret = QubitSecret(1.0, 0.0) if args.expect_secret == 0 else QubitSecret(0.0, 1.0)
        elif args.expect_alpha0 is not None:
            secret = QubitSecret(
                _parse_complex(args.expect_alpha0), _parse_complex(args.expect_alpha1)
            )
        quantum = reconstruct_quantum(members, rho, secret)
        doc["quantum"] = {
            "recovered": [
                [[float(x.real), float(x.imag)] for x in row]
                for row in quantum.recovered.matrix
            ],
            "fidelity": quantum.fidelity,
        }
    _emit(_dump_json(doc), args.out)
    return 0


def _cmd_search_classical(args: argparse.Namespace) -> int:
    report = search_linear_schemes(args.n, args.k, args.max_rand, prune=not args.no_prune)
    bound = check_bound(ThresholdParams(args.n, args.k, tuple([2] * args.n)))
    if args.format == "json":
        doc = {
            "verdict": "found" if report.found else "none",
            "search": asdict(report),
            "bound": {
                "average_share_size": bound.average_share_size,
                "required": bound.required,
                "satisfied": bound.satisfied,
            },
        }
        _emit(_dump_json(doc), args.out)
    else:
        lines = [
            f"verdict: {'found' if report.found else 'none'}",
            f"assignments tried: {report.assignments_tried}",
            f"schemes completed: {report.schemes_completed}",
            f"pruned (small subset qualified): {report.pruned_small_qualified}",
            f"pruned (k-subset unqualified): {report.pruned_large_unqualified}",
            f"share-size bound: average {_fmt(bound.average_share_size)} vs required {bound.required} -> "
            + ("satisfied" if bound.satisfied else "violated"),
        ]
        if report.witness is not None:
            lines.append(f"witness vectors: {report.witness.vectors}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsslab",
        description="Numerical laboratory for the five-qubit (3,5) quantum secret sharing scheme.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_encode = sub.add_parser("encode", help="encode a secret into five quantum shares")
    p_encode.add_argument("--secret", type=int, choices=(0, 1), default=None)
    p_encode.add_argument("--alpha0", type=str, default=None, help="quantum secret amplitude for |0> ('re' or 're,im')")
    p_encode.add_argument("--alpha1", type=str, default=None, help="quantum secret amplitude for |1>")
    p_encode.add_argument("--out", type=str, default=None)
    p_encode.set_defaults(func=_cmd_encode)

    p_report = sub.add_parser("report", help="classify all 31 share subsets")
    p_report.add_argument("--prior", type=float, default=0.5, help="probability q0 of secret bit 0")
    p_report.add_argument("--format", choices=("json", "table", "csv"), default="table")
    p_report.add_argument("--out", type=str, default=None)
    p_report.set_defaults(func=_cmd_report)

    p_dist = sub.add_parser("distance", help="run the error-operator distance certification")
    p_dist.add_argument("--max-weight", type=int, default=3)
    p_dist.add_argument("--tolerance", type=float, default=1e-9)
    p_dist.add_argument("--expect", type=int, default=None, help="fail (exit 2) unless the certified distance matches")
    p_dist.add_argument("--format", choices=("json", "table"), default="table")
    p_dist.add_argument("--out", type=str, default=None)
    p_dist.set_defaults(func=_cmd_distance)

    p_rec = sub.add_parser("reconstruct", help="reconstruct the secret from a subset of shares")
    p_rec.add_argument("--state", type=str, required=True, help="path to an encoded five-qubit state file")
    p_rec.add_argument("--members", type=str, required=True, help="comma-separated share indices, e.g. 1,2,3")
    p_rec.add_argument("--prior", type=float, default=0.5)
    p_rec.add_argument("--mode", choices=("classical", "quantum", "both"), default="both")
    p_rec.add_argument("--expect-secret", type=int, choices=(0, 1), default=None, help="report fidelity against |0> or |1>")
    p_rec.add_argument("--expect-alpha0", type=str, default=None)
    p_rec.add_argument("--expect-alpha1", type=str, default=None)
    p_rec.add_argument("--out", type=str, default=None)
    p_rec.set_defaults(func=_cmd_reconstruct)

    p_search = sub.add_parser("search-classical", help="search GF(2)-linear classical schemes")
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--k", type=int, required=True)
    p_search.add_argument("--max-rand", type=int, default=5, help="largest randomness bit count to enumerate")
    p_search.add_argument("--no-prune", action="store_true")
    p_search.add_argument("--format", choices=("json", "table"), default="table")
    p_search.add_argument("--out", type=str, default=None)
    p_search.set_defaults(func=_cmd_search_classical)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except IndeterminateClassificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
