"""Command-line frontend: claim verification, prime sweeps, identity
fuzzing, q-side checks, and proof-chain replays.

Exit codes: 0 when every check passes, 1 when any congruence or identity
fails (the failing record is still serialized), 2 on usage errors or
instances the engine cannot attempt.  Reports are deterministic given the
command line and seed; ``--test-mode`` zeroes the timing field so output
can be compared byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import claims, hyperkernel, qring

FORMATS = ("text", "json", "csv")


def _report_record(report: claims.CongruenceReport, test_mode: bool) -> dict:
    # Residues are decimal strings: p^6 exceeds 64 bits already at p = 41.
    return {
        "claim": report.claim,
        "p": report.p,
        "r": report.r,
        "modulus_exponent": report.modulus_exponent,
        "case_label": report.case_label,
        "lhs_residue": str(report.lhs_residue),
        "rhs_residue": str(report.rhs_residue),
        "witness_valuation": report.witness_valuation,
        "pass": report.passed,
        "elapsed_ms": 0 if test_mode else round(report.elapsed_ms, 3),
    }


def _chain_records(chain: claims.ProofChain, test_mode: bool) -> list[dict]:
    records = []
    for step in chain.steps:
        records.append(
            {
                "claim": chain.claim,
                "p": chain.p,
                "r": chain.r,
                "step": step.name,
                "modulus_exponent": step.modulus_exponent,
                "witness_valuation": step.witness_valuation,
                "pass": step.passed,
            }
        )
    if not chain.steps:  # skipped chain
        records.append(
            {
                "claim": chain.claim,
                "p": chain.p,
                "r": chain.r,
                "step": "skipped",
                "modulus_exponent": None,
                "witness_valuation": None,
                "pass": chain.status != "fail",
            }
        )
    return records


def _qreport_record(report: qring.QAnalogueReport, test_mode: bool) -> dict:
    return {
        "claim": "qthm1",
        "p": report.p,
        "r": report.r,
        "exponent_twist": report.exponent_twist,
        "ring_zero": report.ring_zero,
        "division_zero": report.division_zero,
        "methods_agree": report.methods_agree,
        "pass": report.zero,
        "elapsed_ms": 0 if test_mode else round(report.elapsed_ms, 3),
    }


def _emit(records: list[dict], fmt: str, out_path: str | None) -> None:
    if fmt == "json":
        text = json.dumps(records, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        if records:
            fields = list(records[0])
            writer.writerow(fields)
            for rec in records:
                writer.writerow([_fmt_value(rec[f], f) for f in fields])
        text = buf.getvalue()
    else:
        lines = []
        for rec in records:
            lines.append(
                "  ".join(
                    f"{key}={_fmt_value(value, key)}" for key, value in rec.items()
                )
            )
        text = "\n".join(lines) + ("\n" if lines else "")
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_value(value, key: str = ""):
    if value is None:
        # an exact step has no finite modulus; a zero difference has
        # infinite valuation
        return "inf" if key == "witness_valuation" else "exact"
    if value is True:
        return "true"
    if value is False:
        return "false"
    return value


def _summary(records: list[dict], skipped: int = 0, excluded: int = 0) -> str:
    passed = sum(1 for rec in records if rec["pass"])
    failed = len(records) - passed
    parts = [f"{passed} passed", f"{failed} failed"]
    if skipped:
        parts.append(f"{skipped} inadmissible skipped")
    if excluded:
        parts.append(f"{excluded} hand-verified excluded")
    return ", ".join(parts)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sclab",
        description="Exact verification of truncated hypergeometric "
        "supercongruences, prime by prime.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=FORMATS, default="text")
        sp.add_argument("--out", default=None, help="write the report here instead of stdout")
        sp.add_argument("--test-mode", action="store_true", help="zero the timing fields")

    p_verify = sub.add_parser("verify", help="verify one claim instance")
    p_verify.add_argument("--claim", required=True, choices=sorted(claims.FAMILIES))
    p_verify.add_argument("--p", required=True, type=int)
    p_verify.add_argument("--r", type=int, default=None)
    p_verify.add_argument(
        "--modk", type=int, default=None,
        help="lower the modulus exponent (never above the family default)",
    )
    common(p_verify)

    p_scan = sub.add_parser("scan", help="verify every admissible instance up to a bound")
    p_scan.add_argument("--claim", required=True, choices=sorted(claims.FAMILIES))
    p_scan.add_argument("--pmax", type=int, default=None,
                        help="largest prime to test (default: the family's desk-scale bound)")
    p_scan.add_argument("--r-set", default=None,
                        help="comma-separated r values (default: the family's list)")
    p_scan.add_argument("--modk", type=int, default=None)
    p_scan.add_argument(
        "--workers", type=int,
        default=int(os.environ.get("SCLAB_WORKERS", "1")),
        help="parallel workers for the sweep (default: SCLAB_WORKERS or 1)",
    )
    common(p_scan)

    p_ident = sub.add_parser("identity", help="fuzz the transformation/summation identities")
    p_ident.add_argument("--name", choices=sorted(hyperkernel.FUZZERS) + ["all"], default="all")
    p_ident.add_argument("--trials", type=int, default=200)
    p_ident.add_argument("--seed", type=int, default=0)
    common(p_ident)

    p_q = sub.add_parser("qverify", help="check the q-side analogue in Q[q]/(Phi_p^4)")
    p_q.add_argument("--p", required=True, type=int)
    p_q.add_argument("--r", required=True, type=int)
    p_q.add_argument(
        "--twist", type=int, default=0,
        help="per-term exponent twist; nonzero is the built-in negative control",
    )
    common(p_q)

    p_chain = sub.add_parser("proofchain", help="replay a derivation step by step")
    p_chain.add_argument("--claim", required=True, choices=["thm1", "thm2"])
    p_chain.add_argument("--p", required=True, type=int)
    p_chain.add_argument("--r", required=True, type=int)
    common(p_chain)

    return parser


def _run_verify(args) -> int:
    report = claims.verify(args.claim, args.p, args.r, args.modk)
    records = [_report_record(report, args.test_mode)]
    _emit(records, args.format, args.out)
    if args.format == "text":
        print(_summary(records))
    return 0 if report.passed else 1


def _run_scan(args) -> int:
    fam = claims.family(args.claim)
    p_max = fam.default_p_max if args.pmax is None else args.pmax
    r_values = None
    if args.r_set is not None:
        r_values = [int(tok) for tok in args.r_set.split(",") if tok.strip()]
    result = claims.scan(
        args.claim, p_max, r_values, args.modk, workers=max(args.workers, 1)
    )
    records = [_report_record(rep, args.test_mode) for rep in result.reports]
    _emit(records, args.format, args.out)
    if args.format == "text":
        print(_summary(records, result.skipped_inadmissible, len(result.excluded)))
        for p, r, reason in result.excluded:
            print(f"excluded (p={p}, r={r}): {reason}")
    return 0 if result.all_passed else 1


def _run_identity(args) -> int:
    names = sorted(hyperkernel.FUZZERS) if args.name == "all" else [args.name]
    records = []
    for name in names:
        result = hyperkernel.FUZZERS[name](trials=args.trials, seed=args.seed)
        records.append(
            {
                "identity": name,
                "trials": result.trials,
                "seed": result.seed,
                "failures": len(result.failures),
                "pass": result.passed,
            }
        )
    _emit(records, args.format, args.out)
    if args.format == "text":
        print(_summary(records))
    return 0 if all(rec["pass"] for rec in records) else 1


def _run_qverify(args) -> int:
    report = qring.verify_q_conjecture(args.p, args.r, exponent_twist=args.twist)
    records = [_qreport_record(report, args.test_mode)]
    _emit(records, args.format, args.out)
    if args.format == "text":
        verdict = "holds" if report.zero else "conjecture violated"
        if not report.methods_agree:
            verdict = "internal error: methods disagree"
        print(f"q-analogue at (p={args.p}, r={args.r}): {verdict}")
    if not report.methods_agree:
        return 2
    return 0 if report.zero else 1


def _run_proofchain(args) -> int:
    chain = (
        claims.proof_chain_thm1(args.p, args.r)
        if args.claim == "thm1"
        else claims.proof_chain_thm2(args.p, args.r)
    )
    records = _chain_records(chain, args.test_mode)
    _emit(records, args.format, args.out)
    if args.format == "text":
        print(f"chain status: {chain.status}" + (f" ({chain.reason})" if chain.reason else ""))
    return 0 if chain.status != "fail" else 1


_RUNNERS = {
    "verify": _run_verify,
    "scan": _run_scan,
    "identity": _run_identity,
    "qverify": _run_qverify,
    "proofchain": _run_proofchain,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _RUNNERS[args.command](args)
    except (
        claims.InadmissibleInstanceError,
        claims.UnsupportedInstanceError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
