"""Command-line driver: suite registry, human summary and JSON report."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property

from .casimir_engine import (
    AlgebraError,
    check_poly,
    is_minimal,
    verify_brauer,
    verify_system,
    verify_ybe,
)
from .superlinalg import Q, dump_matrix, format_rational, linear_combination, supertrace
from . import osp_algebra as osp
from . import sl_algebra as sl
from . import vogel_universal as vg

SUITES = ("defining", "adjoint", "projectors", "ybe", "brauer", "vogel", "series")

# Default instances per suite when no (M, N) is given.
DEFAULT_MATRIX = {
    "defining": [("osp", 3, 2), ("osp", 5, 2), ("osp", 6, 2), ("osp", 7, 4), ("osp", 2, 2),
                 ("sl", 2, 1), ("sl", 3, 1), ("sl", 4, 1), ("sl", 5, 2)],
    "adjoint": [("osp", 5, 2), ("osp", 7, 2), ("osp", 6, 2), ("osp", 8, 2), ("osp", 2, 2), ("osp", 3, 2),
                ("sl", 4, 1), ("sl", 5, 1), ("sl", 2, 1), ("sl", 3, 1)],
    "projectors": [("osp", 5, 2), ("osp", 2, 2), ("osp", 3, 2), ("sl", 4, 1), ("sl", 2, 1), ("sl", 3, 1)],
    "ybe": [("osp", 5, 2), ("sl", 3, 1), ("sl", 4, 1)],
    "brauer": [("osp", 5, 2), ("sl", 4, 1)],
    "vogel": [("osp", 3, 2), ("osp", 5, 2), ("osp", 6, 2), ("osp", 7, 4), ("osp", 2, 2),
              ("sl", 2, 1), ("sl", 3, 1), ("sl", 4, 1), ("sl", 5, 2)],
    "series": [("osp", 5, 2), ("osp", 7, 2), ("sl", 4, 1), ("sl", 5, 1)],
}

YBE_SAMPLES = [("1/3", "1/5"), ("2/7", "-3/11"), ("-1/4", "2/9"), ("3/5", "-1/7")]

# Embedded V^4 checks are run only up to this size of V^4.
EMBED_LIMIT = 2401


@dataclass
class CheckRecord:
    suite: str
    name: str
    status: str
    expected: object = None
    computed: object = None
    reason: str = ""
    elapsed_ms: float = 0.0

    def to_json(self, timings: bool = False) -> dict:
        out = {"suite": self.suite, "name": self.name, "status": self.status}
        if self.expected is not None:
            out["expected"] = self.expected
        if self.computed is not None:
            out["computed"] = self.computed
        if self.reason:
            out["reason"] = self.reason
        if timings:
            out["elapsed_ms"] = round(self.elapsed_ms, 1)
        return out


class Instance:
    """Lazily built model, bundle and projector systems for one algebra."""

    def __init__(self, kind: str, M: int, N: int):
        if kind not in ("osp", "sl"):
            raise AlgebraError(f"unknown algebra {kind!r}")
        self.kind = kind
        self.model = osp.build_osp(M, N) if kind == "osp" else sl.build_sl(M, N)
        self.M, self.N = self.model.M, self.model.N

    @property
    def omega(self) -> int:
        return self.model.omega

    @property
    def label(self) -> str:
        return f"{self.kind}({self.M}|{self.N})"

    @cached_property
    def bundle(self):
        return osp.osp_adjoint_bundle(self.model) if self.kind == "osp" else sl.sl_adjoint_bundle(self.model)

    @cached_property
    def embedded(self):
        return osp.osp_embedded(self.bundle) if self.kind == "osp" else sl.sl_embedded(self.bundle)

    @cached_property
    def projectors(self):
        if self.kind == "osp":
            return osp.osp_adjoint_projectors(self.bundle)
        return sl.sl_adjoint_projectors(self.bundle)

    @cached_property
    def defining_projectors(self):
        if self.kind == "osp":
            return osp.osp_defining_projectors(self.model)
        return sl.sl_defining_projectors(self.model)

    def defining_casimir(self, route="closed"):
        if self.kind == "osp":
            return osp.osp_defining_casimir(self.model, route)
        return sl.sl_defining_casimir(self.model, route)

    def defining_roots(self):
        return osp.osp_defining_roots(self.omega) if self.kind == "osp" else sl.sl_defining_roots(self.omega)

    def char_identity(self):
        return osp.osp_char_identity(self.omega) if self.kind == "osp" else sl.sl_char_identity(self.omega)

    def expected_dims(self):
        try:
            if self.kind == "osp":
                return osp.osp_expected_dims(self.M, self.N)
            return sl.sl_expected_dims(self.M, self.N)
        except (AlgebraError, ZeroDivisionError):
            return None

    def r_matrix(self, u, form=None):
        if self.kind == "osp":
            return osp.osp_r_matrix(self.model, u, form or "PK")
        return sl.sl_r_matrix(self.model, u, form or "P")

    def r_poles(self):
        return osp.osp_r_poles(self.omega) if self.kind == "osp" else sl.sl_r_poles(self.omega)


class Recorder:
    def __init__(self, suite: str):
        self.suite = suite
        self.records: list[CheckRecord] = []

    def check(self, name: str, ok: bool, expected="holds", computed=None, started=None):
        rec = CheckRecord(self.suite, name, "pass" if ok else "fail")
        if not ok:
            rec.expected = expected
            rec.computed = computed if computed is not None else "violated"
        if started is not None:
            rec.elapsed_ms = (time.perf_counter() - started) * 1000
        self.records.append(rec)
        return ok

    def equal(self, name: str, expected, computed, started=None):
        ok = expected == computed
        rec = CheckRecord(self.suite, name, "pass" if ok else "fail", _payload(expected), _payload(computed))
        if started is not None:
            rec.elapsed_ms = (time.perf_counter() - started) * 1000
        self.records.append(rec)
        return ok

    def value(self, name: str, computed):
        """A reported quantity with no independent expectation."""
        self.records.append(CheckRecord(self.suite, name, "pass", computed=_payload(computed)))

    def skip(self, name: str, reason: str):
        self.records.append(CheckRecord(self.suite, name, "skipped", reason=reason))

    def checks(self, prefix: str, results: dict, started=None):
        for key, ok in results.items():
            self.check(f"{prefix}: {key}", bool(ok), started=started)


def _payload(value):
    if isinstance(value, tuple):
        return [_payload(v) for v in value]
    if isinstance(value, list):
        return [_payload(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _payload(v) for k, v in value.items()}
    if isinstance(value, (bool, str)) or value is None:
        return value
    try:
        return format_rational(Q(value))
    except (TypeError, ValueError):
        return str(value)


def _residual_text(report) -> str:
    return f"difference with max numerator {report.difference_max_numerator}"


# ---------------------------------------------------------------------------
# Suites


def suite_defining(inst: Instance) -> list[CheckRecord]:
    rec = Recorder("defining")
    t0 = time.perf_counter()
    C = inst.defining_casimir()
    rec.check("closed form = metric contraction", C == inst.defining_casimir("contraction"), started=t0)
    spec = inst.defining_roots()
    rep = check_poly(C, spec, None, inst.model.one)
    rec.check(f"characteristic identity [{spec.describe()}]", rep.equal, "0", _residual_text(rep))
    rec.check("characteristic identity minimal", is_minimal(C, spec, inst.model.one))
    rec.checks("Killing", osp.killing_pair_checks(inst.model) if inst.kind == "osp" else sl.killing_pair_checks(inst.model))
    if inst.kind == "osp":
        rec.check("metric invariance", not osp.metric_invariance_defects(inst.model))
    else:
        rec.checks("basis", sl.pair_basis_checks(inst.model))
    report = verify_system(inst.defining_projectors)
    rec.check("projectors complete", report.complete)
    rec.check("projectors orthogonal", report.orthogonal)
    rec.check("projectors idempotent", report.idempotent)
    for name in report.eigen:
        rec.check(f"{name} eigen-equation", report.eigen[name])
        rec.check(f"{name} multiplicity minimal", report.minimal[name])
    return rec.records


def suite_adjoint(inst: Instance) -> list[CheckRecord]:
    rec = Recorder("adjoint")
    b = inst.bundle
    rec.check("Jacobi identity", not inst.model.lie.jacobi_defects())
    rec.checks("relations", osp.bundle_relations(b))
    ci = inst.char_identity()
    expected = osp.residual_operator(b, ci.residual)
    t0 = time.perf_counter()
    rep = check_poly(b.C, ci.spec, expected, b.I)
    label = "characteristic identity" + (f" = {_describe_residual(ci.residual)}" if ci.residual else "")
    rec.check(f"{label} [{ci.spec.describe()}]", rep.equal, "exact equality", _residual_text(rep), t0)
    rec.check("characteristic identity minimal", is_minimal(b.C, ci.spec, b.I, expected))
    if ci.generalized is not None:
        rep = check_poly(b.C, ci.generalized, None, b.I)
        rec.check(f"generalised identity [{ci.generalized.describe()}]", rep.equal, "0", _residual_text(rep))
        rec.check("generalised identity minimal", is_minimal(b.C, ci.generalized, b.I))
    if inst.kind == "sl":
        rec.check("anticommutator identity part = g/w^2", sl.anticommutator_scalar_check(b))
        rec.check("symmetric constants match Dbar form", sl.d_bar_check(inst.model, b))
        rec.checks("Ct-", sl.ct_minus_relations(b))
        ct = sl.ct_minus_identity()
        rep = check_poly(b.extra["Ct_minus"], ct.spec, None, b.I)
        rec.check(f"Ct- identity [{ct.spec.describe()}]", rep.equal, "0", _residual_text(rep))
    if inst.model.V.dim ** 4 <= EMBED_LIMIT:
        for name, ok in cross_picture(inst).items():
            rec.check(name, ok)
    else:
        rec.skip("embedded picture", f"V^4 has dimension {inst.model.V.dim ** 4} > {EMBED_LIMIT}")
    return rec.records


def _describe_residual(residual: dict) -> str:
    return " + ".join(f"({v})*{k}" for k, v in residual.items())


def cross_picture(inst: Instance) -> dict[str, bool]:
    """Restricted operators against their V^4 forms, and the adjoint identity in both pictures."""
    b, e = inst.bundle, inst.embedded
    out = {}
    names = ["C", "K", "Cp", "Cm"] + (["Ct_minus"] if inst.kind == "sl" else [])
    for n in names:
        target = b.extra["Ct_minus"] if n == "Ct_minus" else getattr(b, n)
        out[f"embedded {n} restricts to bundle {n}"] = b.restrict(getattr(e, n)) == target
    out["embedded P restricts to bundle P"] = b.restrict(e.P) == b.P
    ci = inst.char_identity()
    expected_r = osp.residual_operator(b, ci.residual)
    restricted = check_poly(b.C, ci.spec, expected_r, b.I).equal
    expected_e = None
    if ci.residual:
        half = Q(1, 2)
        named = {"K": e.K, "I": e.I, "P": e.P, "P_plus": (e.I + e.P).scale(half), "Cp2": e.Cp @ e.Cp}
        expected_e = linear_combination([(Q(v), named[k]) for k, v in ci.residual.items()])
    embedded = check_poly(e.C, ci.spec, expected_e, e.I).equal
    out["identity in embedded picture"] = embedded
    out["identity outcomes agree across pictures"] = embedded == restricted
    return out


def suite_projectors(inst: Instance) -> list[CheckRecord]:
    rec = Recorder("projectors")
    system = inst.projectors
    t0 = time.perf_counter()
    report = verify_system(system)
    rec.check("complete", report.complete, started=t0)
    rec.check("orthogonal", report.orthogonal)
    rec.check("idempotent", report.idempotent)
    for name in report.eigen:
        k = system[name].multiplicity
        rec.check(f"{name} eigen-equation (k={k})", report.eigen[name])
        rec.check(f"{name} multiplicity minimal", report.minimal[name])
    for name, err in report.dim_errors.items():
        rec.check(f"{name} dims integral", False, "integers", err)
    total = sum(sum(d) for d in report.dims.values())
    rec.equal("total dimension = (dim g)^2", inst.model.dim ** 2, total)
    expected = inst.expected_dims()
    for name, dims in report.dims.items():
        if expected is not None and name in expected:
            rec.equal(f"{name} dims", list(expected[name]), list(dims))
    if inst.kind == "sl":
        rec.checks("Ct- eigen", sl.ct_minus_eigen_checks(inst.bundle, system))
    return rec.records


def projector_dims(inst: Instance) -> dict[str, list[int]]:
    report = verify_system(inst.projectors)
    return {name: list(d) for name, d in report.dims.items()}


def ybe_samples(inst: Instance) -> list[tuple]:
    poles = inst.r_poles()
    out = []
    for u, v in YBE_SAMPLES:
        u, v = Q(u), Q(v)
        if not {u, v, u + v, -u} & poles:
            out.append((u, v))
    return out


def suite_ybe(inst: Instance) -> list[CheckRecord]:
    rec = Recorder("ybe")
    poles = inst.r_poles()
    for res in verify_ybe(lambda u: inst.r_matrix(u), ybe_samples(inst), inst.model.V, lambda x: x in poles):
        tag = f"u={format_rational(res.u)}, v={format_rational(res.v)}"
        rec.check(f"YBE {tag}", res.ybe, "0 mismatches", f"{res.mismatches} mismatches")
        rec.check(f"unitarity u={format_rational(res.u)}", res.unitarity)
    u = Q(1, 3)
    ref = inst.r_matrix(u)
    forms = ("projectors", "casimir") if inst.omega != 0 else ()
    for form in forms:
        rec.check(f"R({format_rational(u)}) {form} form", inst.r_matrix(u, form) == ref)
    rec.check("R(0) = P", inst.r_matrix(0) == inst.model.P)
    return rec.records


def suite_brauer(inst: Instance) -> list[CheckRecord]:
    rec = Recorder("brauer")
    t0 = time.perf_counter()
    if inst.kind == "osp":
        res = verify_brauer(inst.model.V, inst.omega, 4, inst.model.P, inst.model.K)
    else:
        res = sl.sl_k_relations(inst.model)
    rec.checks("relation", res, t0)
    return rec.records


def suite_vogel(inst: Instance) -> list[CheckRecord]:
    rec = Recorder("vogel")
    try:
        p = vg.vogel_params(inst.kind, inst.M, inst.N)
    except AlgebraError as exc:
        rec.skip("parameters", str(exc))
        return rec.records
    b = inst.bundle
    rec.value("(alpha, beta, gamma, t)", list(p.triple) + [p.t])
    rec.equal("(mu1, mu2) = family formula", list(vg.family_mu(inst.kind, p.omega)), [p.mu1, p.mu2])
    if p.mu2:
        rec.equal("sdim from (mu1, mu2)", inst.model.sdim, vg.dim_from_mu(p.mu1, p.mu2))
    else:
        rec.skip("sdim from (mu1, mu2)", "mu2 = 0")
    rec.check("universal cubic residual = 0", vg.universal_cubic_residual(b, p).is_zero(), "0", "nonzero")
    for note in vg.exceptional_loci(p):
        rec.skip(f"exceptional locus {note}", "annotation only")
    reason = vg.degeneracy(p)
    if reason:
        rec.skip("universal superdimensions", reason)
        rec.skip("universal projectors", reason)
        return rec.records
    sd = vg.universal_sdims(p)
    rec.equal("sdim g universal", inst.model.sdim, sd["g"])
    system = vg.universal_projectors(b, p)
    for proj in system:
        key = proj.name[2:-1]
        rec.equal(f"str {proj.name} = universal sdim", sd[key], supertrace(proj.operator))
    match = vg.match_universal(b, p, inst.projectors)
    if match.skipped:
        rec.skip("universal = concrete projectors", match.skipped)
    else:
        for key, ok in match.equal.items():
            rec.check(f"P({key}) = {match.matches[key]}", ok)
    return rec.records


def suite_series(inst: Instance, order: int = 8) -> tuple[list[CheckRecord], dict]:
    rec = Recorder("series")
    try:
        p = vg.vogel_params(inst.kind, inst.M, inst.N)
        uni = vg.casimir_series_universal(p, order)
    except (AlgebraError, ZeroDivisionError) as exc:
        rec.skip("universal series", str(exc))
        uni = vg.SeriesReport(order)
    direct = vg.casimir_series_direct(inst.bundle, order)
    rep = direct.merge(uni)
    if rep.universal is not None:
        for k, (d, u) in enumerate(zip(rep.direct, rep.universal)):
            rec.equal(f"c_{k}", u, d)
    return rec.records, {"direct": _payload(rep.direct), "universal": _payload(rep.universal)}


def run_instance(kind: str, M: int, N: int, suites: list[str], order: int = 8) -> dict:
    inst = Instance(kind, M, N)
    records: list[CheckRecord] = []
    dims: dict = {}
    series: dict = {}
    for suite in suites:
        t0 = time.perf_counter()
        try:
            if suite == "series":
                recs, series = suite_series(inst, order)
            else:
                recs = SUITE_FUNCS[suite](inst)
            if suite == "projectors":
                dims = projector_dims(inst)
        except AlgebraError as exc:
            recs = [CheckRecord(suite, "suite", "skipped", reason=str(exc))]
        except Exception as exc:  # a crash is reported, not hidden
            recs = [CheckRecord(suite, "suite", "fail", "completes", f"{type(exc).__name__}: {exc}")]
        elapsed = (time.perf_counter() - t0) * 1000
        for r in recs:
            if not r.elapsed_ms:
                r.elapsed_ms = elapsed / max(len(recs), 1)
        records += recs
    return {"algebra": kind, "M": inst.M, "N": inst.N, "omega": inst.omega,
            "checks": records, "dims": dims, "series": series}


SUITE_FUNCS = {
    "defining": suite_defining,
    "adjoint": suite_adjoint,
    "projectors": suite_projectors,
    "ybe": suite_ybe,
    "brauer": suite_brauer,
    "vogel": suite_vogel,
}


# ---------------------------------------------------------------------------
# Output


def _print_instance(result: dict, out) -> None:
    head = f"{result['algebra']}({result['M']}|{result['N']})  omega={result['omega']}"
    print(head, file=out)
    for r in result["checks"]:
        tag = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[r.status]
        line = f"  [{tag}] {r.suite}: {r.name}"
        if r.status == "fail":
            line += f"  expected={r.expected} computed={r.computed}"
        elif r.status == "skipped":
            line += f"  ({r.reason})"
        print(line, file=out)


def _json_result(result: dict, timings: bool) -> dict:
    out = dict(result)
    out["checks"] = [r.to_json(timings) for r in result["checks"]]
    return out


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SUPERCAS_THREADS", "1")))
    except ValueError:
        return 1


def _run_many(jobs: list[tuple], order: int) -> list[dict]:
    n = min(_threads(), len(jobs))
    if n <= 1:
        return [run_instance(k, M, N, s, order) for k, M, N, s in jobs]
    with ProcessPoolExecutor(max_workers=n) as pool:
        futures = [pool.submit(run_instance, k, M, N, s, order) for k, M, N, s in jobs]
        return [f.result() for f in futures]


def _default_jobs(suites: list[str]) -> list[tuple]:
    plan: dict[tuple, list[str]] = {}
    for suite in suites:
        for inst in DEFAULT_MATRIX[suite]:
            plan.setdefault(inst, []).append(suite)
    return [(k, M, N, plan[(k, M, N)]) for k, M, N in plan]


def cmd_verify(args, out) -> int:
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    if args.M is None and args.N is None:
        jobs = _default_jobs(suites)
        if args.algebra:
            jobs = [j for j in jobs if j[0] == args.algebra]
    else:
        if args.algebra is None or args.M is None or args.N is None:
            raise UsageError("--algebra, --M and --N must be given together")
        Instance(args.algebra, args.M, args.N)  # validate before any work
        jobs = [(args.algebra, args.M, args.N, suites)]
    results = _run_many(jobs, args.order)
    failed = 0
    for res in results:
        _print_instance(res, out)
        failed += sum(1 for r in res["checks"] if r.status == "fail")
    total = sum(len(r["checks"]) for r in results)
    skipped = sum(1 for res in results for r in res["checks"] if r.status == "skipped")
    print(f"{total} checks, {total - failed - skipped} passed, {failed} failed, {skipped} skipped", file=out)
    if args.json:
        payload = [_json_result(r, args.timings) for r in results]
        doc = payload[0] if len(payload) == 1 else {"instances": payload}
        with open(args.json, "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 1 if failed else 0


def _space_label(name: str) -> str:
    if name.startswith("proj"):
        return "V" + name[4:]
    if name.startswith("P"):
        return "V" + name[1:]
    return name


def cmd_dims(args, out) -> int:
    inst = Instance(args.algebra, args.M, args.N)
    dims = projector_dims(inst)
    expected = inst.expected_dims() or {}
    print(f"{inst.label}  omega={inst.omega}  dim g={inst.model.dim}  sdim g={inst.model.sdim}", file=out)
    bad = 0
    for name, (e, o) in dims.items():
        line = f"  {_space_label(name):10s} = ({e}, {o})"
        if name in expected:
            ok = tuple(expected[name]) == (e, o)
            bad += not ok
            line += "  formula " + ("ok" if ok else f"MISMATCH {expected[name]}")
        print(line, file=out)
    total = sum(e + o for e, o in dims.values())
    print(f"  total = {total}", file=out)
    return 1 if bad or total != inst.model.dim ** 2 else 0


def cmd_series(args, out) -> int:
    inst = Instance(args.algebra, args.M, args.N)
    recs, series = suite_series(inst, args.order)
    for k, d in enumerate(series["direct"]):
        u = series["universal"][k] if series["universal"] else "-"
        print(f"c_{k} = {d}  (universal {u})", file=out)
    return 1 if any(r.status == "fail" for r in recs) else 0


def cmd_rmatrix(args, out) -> int:
    inst = Instance(args.algebra, args.M, args.N)
    u = Q(args.u)
    if u in inst.r_poles():
        raise UsageError(f"u={args.u} is a pole of R(u)")
    R = inst.r_matrix(u)
    if args.v is None:
        json.dump(dump_matrix(R), out, sort_keys=True)
        out.write("\n")
        return 0
    v = Q(args.v)
    poles = inst.r_poles()
    res = verify_ybe(lambda x: inst.r_matrix(x), [(u, v)], inst.model.V, lambda x: x in poles)[0]
    print(f"YBE: {'PASS' if res.ybe else 'FAIL'} ({res.mismatches} mismatches){' ' + res.note if res.note else ''}", file=out)
    print(f"unitarity: {'PASS' if res.unitarity else 'FAIL'}", file=out)
    return 0 if res.ybe and res.unitarity else 1


DUMPABLE = ("I", "P", "K", "C", "Cp", "Cm", "Ct_minus", "defining_C")


def cmd_dump(args, out) -> int:
    inst = Instance(args.algebra, args.M, args.N)
    name = args.operator
    if name == "defining_C":
        A = inst.defining_casimir()
    elif name == "Ct_minus":
        if inst.kind != "sl":
            raise UsageError("Ct_minus exists only for sl")
        A = inst.bundle.extra["Ct_minus"]
    else:
        A = getattr(inst.bundle, name)
    text = json.dumps(dump_matrix(A), sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        out.write(text + "\n")
    return 0


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supercas", description="Exact checks for split Casimir operators of osp(M|N) and sl(M|N).")
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_args(p, required=True):
        p.add_argument("--algebra", choices=("osp", "sl"), required=required)
        p.add_argument("--M", type=int, required=required)
        p.add_argument("--N", type=int, required=required)

    v = sub.add_parser("verify", help="run verification suites")
    instance_args(v, required=False)
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--order", type=int, default=8, help="highest c_k for the series suite")
    v.add_argument("--json", help="write a JSON report to this file")
    v.add_argument("--timings", action="store_true", help="include elapsed times in the JSON report")

    d = sub.add_parser("dims", help="dimension table of the adjoint projectors")
    instance_args(d)

    s = sub.add_parser("series", help="higher Casimir eigenvalues c_k")
    instance_args(s)
    s.add_argument("--order", type=int, default=8)

    r = sub.add_parser("rmatrix", help="dump R(u) or check YBE at (u, v)")
    instance_args(r)
    r.add_argument("--u", required=True)
    r.add_argument("--v")

    m = sub.add_parser("dump", help="dump an operator in the matrix format")
    instance_args(m)
    m.add_argument("--operator", choices=DUMPABLE, default="C")
    m.add_argument("--out")
    return parser


COMMANDS = {"verify": cmd_verify, "dims": cmd_dims, "series": cmd_series, "rmatrix": cmd_rmatrix, "dump": cmd_dump}


def _join_negative_values(argv: list[str]) -> list[str]:
    """Allow ``--u -1/3``: argparse would read ``-1/3`` as an option."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--u", "--v") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "order", 0) < 0:
        print("error: --order must be non-negative", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args, out)
    except (AlgebraError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
