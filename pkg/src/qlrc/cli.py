"""Command-line front end.

Three subcommands:

* ``construct`` builds a code from a descriptor and writes it to a file,
  printing measured parameters next to the family's claimed ones.
* ``verify`` runs the classical or quantum (r, delta) verifier on a code
  file and reports the verdict, certificate, bounds, and (for quantum
  dual-containing inputs) purity and optimality labels.
* ``weights`` prints a generalized weight hierarchy.

Exit codes are a stable scripting contract: 0 certified/attained,
1 refuted, 2 inconclusive, 3 usage or input error.

Descriptors::

    affine:q=<q>,n1=<n1>,n2=<n2>,delta=(rect:<i>,<j>|step2:<i>,<s>|step2s:<j>,<s>|custom:@file)
    grs:q2=<q2>,n=<n>,k=<k>
    hamming:m=<m>,q=<q>
    steane
    css:@file1,@file2

All searches are deterministic; ``--seed`` is accepted for interface
stability and recorded in reports, and ``--threads`` caps worker
parallelism (results never depend on it).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Tuple

from . import files
from .errors import BudgetExceeded, ParseError, QlrcError
from .code import (
    DEFAULT_BUDGET,
    LinearCode,
    dual_euclidean,
    dual_hermitian,
    generalized_hamming_weights,
    min_distance,
)
from .constructions import (
    DeltaSet,
    GridSpec,
    affine_variety_code,
    css_pair,
    delta_family,
    grs_code,
    hamming_code,
    hermitian_dc_grs_search,
    steane_symplectic,
)
from .gf import GF
from .locality import classical_singleton, verify_rdelta_lrc
from .qlocality import (
    bridge_classical_quantum,
    purity_check,
    quantum_r_lrc_bound,
    quantum_singleton,
    stabilizer_distance_symplectic,
    verify_quantum_rdelta_lrc,
)
from .symp import SymplecticCode, dual_symplectic, gsw_hierarchy, is_self_orthogonal

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


# ---------------------------------------------------------------------------
# descriptor parsing
# ---------------------------------------------------------------------------

def _split_fields(body: str) -> dict:
    """Split 'a=1,b=2,delta=rect:3,4' honoring values that contain commas."""
    out = {}
    key = None
    for tok in body.split(","):
        if "=" in tok:
            key, val = tok.split("=", 1)
            out[key.strip()] = val.strip()
        elif key is not None:
            out[key] += "," + tok.strip()
        else:
            raise ParseError(f"malformed descriptor field {tok!r}")
    return out


def _parse_delta(desc: str, n1: int, n2: int, p: int) -> DeltaSet:
    if ":" not in desc:
        raise ParseError(f"malformed delta {desc!r}")
    kind, args = desc.split(":", 1)
    if kind == "custom":
        if not args.startswith("@"):
            raise ParseError("custom delta takes @file of 'e1 e2' lines")
        pairs = []
        for ln in Path(args[1:]).read_text(encoding="utf-8").splitlines():
            ln = ln.split("#")[0].strip()
            if ln:
                a, b = ln.split()
                pairs.append((int(a), int(b)))
        return DeltaSet.custom(n1, n2, pairs)
    try:
        x, y = (int(t) for t in args.split(","))
    except ValueError as exc:
        raise ParseError(f"delta {kind} needs two integers") from exc
    if kind == "rect":
        try:
            return delta_family("rect", n1, n2, p, i=x, j=y)
        except QlrcError:
            return DeltaSet.rect(n1, n2, x, y)   # bare construction, no claims
    if kind == "step2":
        return delta_family("step2", n1, n2, p, i=x, s=y)
    if kind == "step2s":
        return delta_family("step2s", n1, n2, p, j=x, s=y)
    raise ParseError(f"unknown delta family {kind!r}")


def build_from_descriptor(desc: str, hermitian_dc: bool = False,
                          budget: int = DEFAULT_BUDGET):
    """Return (code, claims dict) for a construction descriptor."""
    name, _, body = desc.partition(":")
    if name == "steane":
        return steane_symplectic(), {"quantum": "[[7,1,3]]_2"}
    if name == "affine":
        kv = _split_fields(body)
        q, n1, n2 = int(kv["q"]), int(kv["n1"]), int(kv["n2"])
        field = GF(*_prime_power(q))
        delta = _parse_delta(kv["delta"], n1, n2, field.p)
        grid = GridSpec.build(field, n1, n2)
        code = affine_variety_code(grid, delta)
        claims = dict(delta.claims)
        out = {}
        if claims:
            out["locality"] = f"({claims['r']},{claims['delta']})"
            out["quantum"] = f"[[{claims['qn']},{claims['qk']},{claims['qd']}]]_{q}"
        return code, out
    if name == "grs":
        kv = _split_fields(body)
        q2, n, k = int(kv["q2"]), int(kv["n"]), int(kv["k"])
        field = GF(*_prime_power(q2))
        claims = {"mds": f"[{n},{k},{n - k + 1}]_{q2}"}
        if hermitian_dc:
            code, mult = hermitian_dc_grs_search(field, n, k)
            claims["multipliers"] = str(mult)
            claims["quantum"] = f"[[{n},{2 * k - n},{n - k + 1}]]_{field.subfield_order}"
            return code, claims
        return grs_code(field, n, k), claims
    if name == "hamming":
        kv = _split_fields(body)
        m, q = int(kv["m"]), int(kv["q"])
        code = hamming_code(m, GF(*_prime_power(q)))
        return code, {"classical": f"[{code.n},{code.k},3]_{q}"}
    if name == "css":
        if not body.startswith("@"):
            raise ParseError("css descriptor takes @file1,@file2")
        p1, p2 = body.split(",")
        C1 = files.load_code(p1.lstrip("@"))
        C2 = files.load_code(p2.lstrip("@"))
        if not isinstance(C1, LinearCode) or not isinstance(C2, LinearCode):
            raise ParseError("css inputs must be classical code files")
        S, params = css_pair(C1, C2, budget)
        return S, {"quantum": params.label() + f"_{C1.field.q}"}
    raise ParseError(f"unknown construction {name!r}")


def _prime_power(q: int) -> Tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            v = q
            while v % p == 0:
                v //= p
                m += 1
            if v != 1:
                raise ParseError(f"q={q} is not a prime power")
            return p, m
    raise ParseError(f"q={q} is not a prime power")


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def _emit(report: dict, json_path: Optional[str]) -> None:
    if json_path:
        Path(json_path).write_text(json.dumps(report, indent=2) + "\n",
                                   encoding="utf-8")


def _print_bounds(bounds) -> None:
    for b in bounds:
        star = "attained" if b.attained else "not attained"
        print(f"  bound {b.name}: lhs={b.lhs} rhs={b.rhs} ({star})")


def _verdict_exit(status: str) -> int:
    return {"certified": EXIT_OK, "refuted": EXIT_REFUTED,
            "inconclusive": EXIT_INCONCLUSIVE}[status]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_construct(args: argparse.Namespace) -> int:
    code, claims = build_from_descriptor(args.descriptor, args.hermitian_dc, args.budget)
    files.save_code(code, args.out)
    if isinstance(code, SymplecticCode):
        print(f"wrote symplectic code: n={code.n} dim={code.dim} -> {args.out}")
        try:
            d = stabilizer_distance_symplectic(code, args.budget)
            print(f"measured quantum parameters: [[{code.n},{code.n - code.dim},{d}]]")
        except BudgetExceeded:
            print("stabilizer distance skipped (budget)")
    else:
        try:
            d = min_distance(code, "auto", args.budget)
            dtxt = str(d)
        except BudgetExceeded:
            dtxt = "?"
        print(f"wrote classical code: [{code.n},{code.k},{dtxt}]_{code.field.q} -> {args.out}")
    for key, val in claims.items():
        print(f"claimed {key}: {val}")
    report = {"schema": SCHEMA_VERSION, "descriptor": args.descriptor,
              "out": str(args.out), "claims": claims}
    _emit(report, args.json)
    return EXIT_OK


def _quantum_verify_linear(C: LinearCode, form: str, args) -> Tuple[dict, int]:
    dual = dual_hermitian(C) if form == "hermitian" else dual_euclidean(C)
    report: dict = {}
    bounds = []
    if C.contains_code(dual):
        # dual-containing input: the derived code has k = 2 dim C - n
        res = bridge_classical_quantum(C, form, args.r, args.delta, args.budget)
        verdict = res.verdict
        k_q = 2 * C.k - C.n
        pur = purity_check(C, form, args.budget)
        bounds.append(quantum_singleton((C.n, k_q, pur.d_code), args.r, args.delta))
        # an (r, delta) code repairs one erasure from r + delta - 2 symbols
        bounds.append(quantum_r_lrc_bound((C.n, k_q, pur.d_code),
                                          args.r + args.delta - 2))
        if not pur.pure:
            label = "undefined (non-pure)"
        elif verdict.certified and all(b.attained for b in bounds[:1]):
            label = "optimal pure"
        else:
            label = "pure, bound not attained"
        report.update({
            "carrier": "dual-containing",
            "via": res.via,
            "quantum_k": k_q,
            "purity": {"pure": pur.pure, "d_code": pur.d_code, "d_dual": pur.d_dual},
            "optimality": label,
        })
        print(f"carrier: {form} dual-containing, quantum [[{C.n},{k_q},"
              f"{'' if pur.pure else '>='}{pur.d_code}]]_"
              f"{C.field.subfield_order if form == 'hermitian' else C.field.q}")
        print(f"purity: d(C)={pur.d_code} <= d(dual)={pur.d_dual}: {pur.pure}")
        print(f"verified via: {res.via} (dual distance {res.d_dual})")
        print(f"optimality: {label}")
    elif is_self_orthogonal(C, form):
        verdict = verify_quantum_rdelta_lrc(C, form, args.r, args.delta,
                                            budget=args.budget)
        k_q = C.n - 2 * C.k
        report.update({"carrier": "self-orthogonal", "quantum_k": k_q})
        print(f"carrier: {form} self-orthogonal stabilizer side, "
              f"quantum k = {k_q}")
    else:
        raise QlrcError(f"code is neither {form} dual-containing nor self-orthogonal")
    report["bounds"] = [b.to_json() for b in bounds]
    _print_bounds(bounds)
    return report, _finish_verdict(report, verdict)


def _finish_verdict(report: dict, verdict) -> int:
    report["verdict"] = verdict.status
    if verdict.certificate is not None:
        report["certificate"] = verdict.certificate.to_json()
    if verdict.reason:
        report["reason"] = verdict.reason
    print(f"verdict: {verdict.status}" + (f" ({verdict.reason})" if verdict.reason else ""))
    return _verdict_exit(verdict.status)


def cmd_verify(args: argparse.Namespace) -> int:
    code = files.load_code(args.code)
    cert = None
    report = {"schema": SCHEMA_VERSION, "mode": args.mode, "form": args.form,
              "r": args.r, "delta": args.delta, "seed": args.seed}

    if args.mode == "classical":
        if not isinstance(code, LinearCode):
            raise ParseError("classical verification needs a classical code file")
        if args.certificate:
            cert = files.load_certificate(args.certificate, code.n)
        verdict = verify_rdelta_lrc(code, args.r, args.delta, cert, args.budget)
        d = min_distance(code, "auto", args.budget)
        bounds = [classical_singleton((code.n, code.k, d), args.r, args.delta)]
        report["bounds"] = [b.to_json() for b in bounds]
        print(f"classical [{code.n},{code.k},{d}]_{code.field.q}")
        _print_bounds(bounds)
        rc = _finish_verdict(report, verdict)
        _emit(report, args.json)
        return rc

    # quantum mode
    form = args.form or ("symplectic" if isinstance(code, SymplecticCode) else "euclidean")
    report["form"] = form
    if form == "symplectic":
        if not isinstance(code, SymplecticCode):
            raise ParseError("symplectic form needs a symplectic code file")
        if args.certificate:
            cert = files.load_certificate(args.certificate, code.n)
        verdict = verify_quantum_rdelta_lrc(code, "symplectic", args.r, args.delta,
                                            cert, args.budget)
        k_q = code.n - code.dim
        bounds = []
        try:
            d_q = stabilizer_distance_symplectic(code, args.budget)
            bounds.append(quantum_r_lrc_bound((code.n, k_q, d_q),
                                              args.r + args.delta - 2))
            print(f"stabilizer code [[{code.n},{k_q},{d_q}]]_{code.field.q}")
        except BudgetExceeded:
            print(f"stabilizer code [[{code.n},{k_q},?]]_{code.field.q} "
                  "(distance skipped: budget)")
        report["bounds"] = [b.to_json() for b in bounds]
        _print_bounds(bounds)
        rc = _finish_verdict(report, verdict)
        _emit(report, args.json)
        return rc
    if form == "css":
        if not isinstance(code, LinearCode):
            raise ParseError("css form needs classical code files")
        other = files.load_code(args.pair) if args.pair else code
        verdict = verify_quantum_rdelta_lrc((code, other), "css", args.r, args.delta,
                                            budget=args.budget)
        rc = _finish_verdict(report, verdict)
        _emit(report, args.json)
        return rc
    if not isinstance(code, LinearCode):
        raise ParseError(f"{form} form needs a classical code file")
    sub_report, rc = _quantum_verify_linear(code, form, args)
    report.update(sub_report)
    _emit(report, args.json)
    return rc


def cmd_weights(args: argparse.Namespace) -> int:
    code = files.load_code(args.code)
    if args.kind == "gsw":
        if not isinstance(code, SymplecticCode):
            raise ParseError("gsw needs a symplectic code file")
        C = dual_symplectic(code) if args.dual else code
        t_max = args.t_max or C.dim
        hier = gsw_hierarchy(C, t_max, args.budget)
    else:
        if not isinstance(code, LinearCode):
            raise ParseError("ghw needs a classical code file")
        C = dual_euclidean(code) if args.dual else code
        t_max = args.t_max or C.k
        hier = generalized_hamming_weights(C, t_max, args.budget)
    label = f"{args.kind}{'(dual)' if args.dual else ''}"
    print(f"{label} hierarchy: {hier}")
    _emit({"schema": SCHEMA_VERSION, "kind": args.kind, "dual": args.dual,
           "hierarchy": list(hier)}, args.json)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                    help="work-unit cap for exhaustive steps")
    sp.add_argument("--threads", type=int, default=0,
                    help="worker cap (results are independent of this)")
    sp.add_argument("--seed", type=int, default=0,
                    help="seed echoed into reports (searches are deterministic)")
    sp.add_argument("--json", metavar="PATH", default=None,
                    help="also write the report as JSON")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qlrc",
        description="construct, verify, and bound classical/quantum "
                    "locally recoverable stabilizer codes")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", help="build a code and write it to a file")
    sp.add_argument("descriptor")
    sp.add_argument("--out", "-o", required=True)
    sp.add_argument("--hermitian-dc", action="store_true",
                    help="search GRS multipliers for a Hermitian dual-containing code")
    _add_common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="run the (r, delta) verifier on a code file")
    sp.add_argument("code")
    sp.add_argument("--mode", choices=("classical", "quantum"), default="classical")
    sp.add_argument("--form", choices=("symplectic", "hermitian", "euclidean", "css"),
                    default=None)
    sp.add_argument("-r", type=int, required=True)
    sp.add_argument("-d", "--delta", type=int, required=True, dest="delta")
    sp.add_argument("--certificate", default=None,
                    help="check this certificate instead of searching")
    sp.add_argument("--pair", default=None, help="second code file for --form css")
    _add_common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("weights", help="print a generalized weight hierarchy")
    sp.add_argument("code")
    sp.add_argument("--kind", choices=("ghw", "gsw"), required=True)
    sp.add_argument("--t-max", type=int, default=None)
    sp.add_argument("--dual", action="store_true")
    _add_common(sp)
    sp.set_defaults(func=cmd_weights)
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except QlrcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
