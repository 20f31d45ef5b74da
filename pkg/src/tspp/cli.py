"""Command line front end: ``tspp compute|verify|paths|tableaux``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional

from .dets import DetRoute, a_nk_via_det, alternating_binomial_sum, verify_giambelli_factorization
from .identities import (
    INFORMATIONAL,
    CheckReport,
    littlewood_plus,
    littlewood_signed,
    littlewood_square,
    littlewood_square_u_minus_one,
    littlewood_u_minus_one,
    pochhammer_check,
)
from .partitions import NegativeLeg, hook, partitions_of_size_at_most
from .paths import Model, dualise_e_to_h, dualise_e_to_mixed, enumerate_families, family_weight, gf_model
from .plane import a_nk_via_definition
from .ring import ONE, LaurentPoly, canonical_string, parse_poly
from .schur import schur_via_giambelli, schur_via_jacobi_trudi, schur_via_nk, schur_via_ssyt, skew_schur_via_ssyt
from .tableaux import enumerate_tspp_tableaux, gf_tableaux, tableau_weight

__all__ = ["main", "parse_poly", "compute", "run_suite"]

ROUTES = ("definition", "det-g1", "det-djt", "det-jt", "det-g2", "epaths", "hpaths", "mixed", "tableaux")
SUITES = ("theorem-main", "factorization", "littlewood", "pochhammer", "schur-classics", "dualisation")


class ConfigError(ValueError):
    """Invalid parameters for the requested computation."""


# computing --------------------------------------------------------------------


def compute(route: str, n: int, k: int, N: Optional[int] = None) -> LaurentPoly:
    """``A_{n+1,k}`` in ``N`` variables (default ``n + k``) by the named route."""
    if route not in ROUTES:
        raise ConfigError(f"unknown route {route!r}")
    if n < 0:
        raise ConfigError("n must be nonnegative")
    if k < -1:
        raise ConfigError("k must be at least -1")
    if N is None:
        N = n + k
    if N < 0:
        raise ConfigError("variable count must be nonnegative")
    try:
        if route == "definition":
            if k < 0:
                raise ConfigError("route definition needs k >= 0")
            return a_nk_via_definition(n + 1, k, N)
        if route.startswith("det-"):
            det_route = {"det-g1": DetRoute.G1, "det-djt": DetRoute.DJT, "det-jt": DetRoute.JT, "det-g2": DetRoute.G2}[route]
            if k < 0 and det_route is not DetRoute.DJT:
                raise ConfigError(f"route {route} is not defined for k = -1")
            return a_nk_via_det(det_route, n, k, N)
        if route == "tableaux":
            if N != n + k:
                raise ConfigError("route tableaux works in exactly n + k variables")
            return gf_tableaux(n, k)
        model = {"epaths": Model.E, "hpaths": Model.H, "mixed": Model.MIXED}[route]
        if k < 0:
            raise ConfigError(f"route {route} needs k >= 0")
        if N < n + k:
            raise ConfigError(f"route {route} needs at least n + k variables")
        if n == 0:
            return ONE
        return gf_model(model, n, k, N)
    except (NegativeLeg, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from exc


# verification suites -----------------------------------------------------------


def _fmt(value) -> str:
    if isinstance(value, LaurentPoly):
        return canonical_string(value)
    return str(value)


def _case(name: str, params: Dict, lhs, rhs, ok: bool, informational: bool = False) -> Dict:
    status = "informational" if informational else ("pass" if ok else "fail")
    return {"name": name, "params": params, "lhs": _fmt(lhs), "rhs": _fmt(rhs), "status": status}


def _from_report(rep: CheckReport) -> Dict:
    case = _case(rep.name, dict(rep.parameters), rep.lhs, rep.rhs, rep.equal, rep.status == INFORMATIONAL)
    case["equal"] = rep.equal
    if rep.mid is not None:
        case["mid"] = _fmt(rep.mid)
    return case


def suite_theorem_main(max_n: int, max_k: int, **_) -> List[Dict]:
    cases = []
    for n in range(1, max_n + 1):
        for k in range(0, max_k + 1):
            N = n + k
            ref = a_nk_via_definition(n + 1, k, N)
            for route in DetRoute:
                val = a_nk_via_det(route, n, k, N)
                cases.append(_case(f"{route.value} = definition", {"n": n, "k": k, "N": N}, val, ref, val == ref))
    return cases


def suite_factorization(max_n: int, max_k: int, **_) -> List[Dict]:
    cases = []
    for n in range(1, max_n + 1):
        for k in range(0, max_k + 1):
            for N in range(1, 4):
                rep = verify_giambelli_factorization(n, k, N)
                lhs = f"mismatches={len(rep.mismatches)} det(C1)={canonical_string(rep.det_c1)} det(C2)det(C3)={canonical_string(rep.det_c2_c3)}"
                cases.append(_case("A = C1*C2*B*C3", {"n": n, "k": k, "N": N}, lhs, "mismatches=0 det(C1)=1 det(C2)det(C3)=1", rep.ok))
    for i in range(0, 13):
        for l in range(0, i + 1):
            val = alternating_binomial_sum(i, l)
            want = (-1) ** i if l == i else 0
            cases.append(_case("alternating binomial sum", {"i": i, "l": l}, val, want, val == want))
    return cases


def suite_littlewood(**_) -> List[Dict]:
    cases = []
    for n in range(1, 5):
        cases.append(_from_report(littlewood_plus(n)))
    for n in range(1, 5):
        cases.append(_from_report(littlewood_signed(n)))
    for n in range(1, 4):
        cases.append(_from_report(littlewood_square(n)))
    for n in range(1, 5):
        cases.append(_from_report(littlewood_u_minus_one(n)))
    for n in range(1, 3):
        cases.append(_from_report(littlewood_square_u_minus_one(n)))
    # k = -1 with w kept symbolic: tableaux and the determinant continuation differ
    for n in range(1, 4):
        tab, det = gf_tableaux(n, -1), a_nk_via_det(DetRoute.DJT, n, -1, n - 1)
        cases.append(_case("tableaux = DJT at k=-1, symbolic w", {"n": n, "k": -1}, tab, det, tab == det, True))
    return cases


def suite_pochhammer(n: Optional[int] = None, **_) -> List[Dict]:
    ns = [n] if n is not None else list(range(2, 6))
    cases = []
    for m in ns:
        if m < 2:
            raise ConfigError("pochhammer needs n >= 2")
        cases.append(_from_report(pochhammer_check(m)))
        cases.append(_from_report(pochhammer_check(m, shifted=True)))
    return cases


def suite_schur_classics(**_) -> List[Dict]:
    cases = []
    for N in (2, 3, 4):
        for lam in sorted(partitions_of_size_at_most(6), key=lambda p: (p.size, tuple(p))):
            ref = schur_via_ssyt(lam, N)
            others = (schur_via_jacobi_trudi(lam, N), schur_via_nk(lam, N), schur_via_giambelli(lam, N))
            ok = all(o == ref for o in others)
            cases.append(_case("ssyt = jt = nk = giambelli", {"shape": list(lam), "N": N}, ref, others[0], ok))
    for N in range(1, 5):
        for m in range(1, 5):
            for c in range(1, 5):
                skew = skew_schur_via_ssyt((m,) * c, (m - 1,) * (c - 1), N)
                target = schur_via_ssyt(hook(m - 1, c - 1), N)
                cases.append(_case("skew hook", {"m": m, "c": c, "N": N}, skew, target, skew == target))
    return cases


DUALISATION_SIZES = ((1, 0), (1, 1), (2, 0), (2, 1), (3, 1))


def suite_dualisation(n: Optional[int] = None, k: Optional[int] = None, **_) -> List[Dict]:
    if (n is None) != (k is None):
        raise ConfigError("give both --n and --k or neither")
    sizes = [(n, k)] if n is not None else list(DUALISATION_SIZES)
    cases = []
    for a, b in sizes:
        if a < 1 or b < 0:
            raise ConfigError("dualisation needs n >= 1 and k >= 0")
        E = enumerate_families(Model.E, a, b)
        for name, fn, model in (("e -> h", dualise_e_to_h, Model.H), ("e -> mixed", dualise_e_to_mixed, Model.MIXED)):
            target = enumerate_families(model, a, b)
            images = [fn(f) for f in E]
            injective = len(set(images)) == len(E)
            onto = set(images) == set(target)
            weights = all(family_weight(f) == family_weight(g) for f, g in zip(E, images))
            lhs = f"families={len(E)} images={len(set(images))}"
            rhs = f"families={len(target)}"
            cases.append(_case(name, {"n": a, "k": b}, lhs, rhs, injective and onto and weights))
    return cases


_SUITES: Dict[str, Callable[..., List[Dict]]] = {
    "theorem-main": suite_theorem_main,
    "factorization": suite_factorization,
    "littlewood": suite_littlewood,
    "pochhammer": suite_pochhammer,
    "schur-classics": suite_schur_classics,
    "dualisation": suite_dualisation,
}

_DEFAULT_RANGES = {"theorem-main": (3, 2), "factorization": (4, 2)}


def run_suite(suite: str, max_n: Optional[int] = None, max_k: Optional[int] = None, n=None, k=None) -> Dict:
    if suite not in _SUITES:
        raise ConfigError(f"unknown suite {suite!r}")
    dn, dk = _DEFAULT_RANGES.get(suite, (None, None))
    max_n = dn if max_n is None else max_n
    max_k = dk if max_k is None else max_k
    if (max_n is not None and max_n < 0) or (max_k is not None and max_k < 0):
        raise ConfigError("ranges must be nonnegative")
    cases = _SUITES[suite](max_n=max_n, max_k=max_k, n=n, k=k)
    counts = {s: sum(1 for c in cases if c["status"] == s) for s in ("pass", "fail", "informational")}
    summary = {"total": len(cases), "passed": counts["pass"], "failed": counts["fail"], "informational": counts["informational"]}
    return {"suite": suite, "cases": cases, "summary": summary}


def report_json(report: Dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def report_text(report: Dict) -> str:
    lines = []
    for c in report["cases"]:
        tag = {"pass": "PASS", "fail": "FAIL", "informational": "INFO"}[c["status"]]
        params = ",".join(f"{key}={val}" for key, val in c["params"].items())
        lines.append(f"{tag} {c['name']} [{params}]: {c['lhs']} | {c['rhs']}")
    s = report["summary"]
    lines.append(f"{s['passed']} passed, {s['failed']} failed, {s['informational']} informational")
    return "\n".join(lines) + "\n"


# argument handling -------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tspp", description="Exact computations for the TSPP generating function.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_nk=True):
        sp.add_argument("--n", type=int, required=need_nk, default=None)
        sp.add_argument("--k", type=int, required=need_nk, default=None)
        sp.add_argument("--vars", type=int, default=None, help="number of x variables (default n + k)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", default=None, help="write output to this file instead of stdout")

    c = sub.add_parser("compute", help="print A_{n+1,k} by one route")
    c.add_argument("--route", choices=ROUTES, required=True)
    common(c)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--max-k", type=int, default=None)
    common(v, need_nk=False)

    pa = sub.add_parser("paths", help="list the non-intersecting families of a model")
    pa.add_argument("--model", choices=[m.value for m in Model], default="E")
    common(pa)

    t = sub.add_parser("tableaux", help="list TSPP tableaux with weights")
    common(t)
    return p


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "compute":
            value = compute(args.route, args.n, args.k, args.vars)
            text = canonical_string(value)
            if args.format == "json":
                obj = {"route": args.route, "n": args.n, "k": args.k, "N": args.vars if args.vars is not None else args.n + args.k, "value": text}
                text = json.dumps(obj, sort_keys=True)
            _emit(text + "\n", args.out)
            return 0
        if args.command == "verify":
            report = run_suite(args.suite, args.max_n, args.max_k, args.n, args.k)
            _emit(report_json(report) if args.format == "json" else report_text(report), args.out)
            return 0 if report["summary"]["failed"] == 0 else 1
        if args.command == "paths":
            if args.n < 1 or args.k < 0:
                raise ConfigError("paths needs n >= 1 and k >= 0")
            N = args.vars if args.vars is not None else args.n + args.k
            if N < args.n + args.k:
                raise ConfigError("paths needs at least n + k variables")
            fams = enumerate_families(args.model, args.n, args.k, N)
            rows = [
                {"starts": list(f.start_labels()), "points": [[list(p) for p in path.points()] for path in f.paths], "weight": canonical_string(family_weight(f))}
                for f in fams
            ]
            if args.format == "json":
                text = json.dumps({"model": args.model, "n": args.n, "k": args.k, "N": N, "families": rows}, sort_keys=True) + "\n"
            else:
                text = "".join(f"{' '.join(r['starts']) or '(none)'}: {r['weight']}\n" for r in rows)
                text += f"{len(rows)} families\n"
            _emit(text, args.out)
            return 0
        if args.command == "tableaux":
            if args.k < -1 or args.n < 0 or args.n + args.k < 0:
                raise ConfigError("tableaux needs k >= -1, n >= 0 and n + k >= 0")
            Ts = enumerate_tspp_tableaux(args.n, args.k)
            rows = [{"rows": [[str(e) for e in row] for row in T.rows()], "weight": canonical_string(tableau_weight(T))} for T in Ts]
            if args.format == "json":
                text = json.dumps({"n": args.n, "k": args.k, "tableaux": rows}, sort_keys=True, ensure_ascii=False) + "\n"
            else:
                text = "".join(f"{' / '.join(' '.join(r) for r in row['rows']) or '(empty)'}: {row['weight']}\n" for row in rows)
                text += f"{len(rows)} tableaux\n"
            _emit(text, args.out)
            return 0
    except ConfigError as exc:
        print(f"tspp: error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
