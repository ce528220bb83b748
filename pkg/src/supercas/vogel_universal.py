"""Vogel-parameter layer: universal cubic identity, projectors, superdimensions
and the generating function of higher Casimir eigenvalues in the adjoint
representation."""

from __future__ import annotations

from dataclasses import dataclass, field

from .casimir_engine import AlgebraError, OperatorBundle, Projector, ProjectorSystem
from .superlinalg import Q, Rational, SuperMatrix, linear_combination, partial_supertrace_second, supertrace


@dataclass(frozen=True)
class VogelParams:
    kind: str
    M: int
    N: int
    alpha: Rational
    beta: Rational
    gamma: Rational
    t: Rational

    @property
    def omega(self) -> int:
        return self.M - self.N

    @property
    def h_vee(self) -> Rational:
        return self.t

    @property
    def mu1(self) -> Rational:
        a, b, c, t = self.alpha, self.beta, self.gamma, self.t
        return -(a * b + a * c + b * c) / (4 * t * t)

    @property
    def mu2(self) -> Rational:
        a, b, c, t = self.alpha, self.beta, self.gamma, self.t
        return -(a * b * c) / (16 * t ** 3)

    @property
    def triple(self) -> tuple[Rational, Rational, Rational]:
        return self.alpha, self.beta, self.gamma

    def roots(self) -> dict[str, Rational]:
        """Eigenvalues of ``C+`` on the symmetric subspaces."""
        t2 = 2 * self.t
        return {"alpha": -self.alpha / t2, "beta": -self.beta / t2, "gamma": -self.gamma / t2, "(-1)": Q(-1)}


def vogel_params(kind: str, M: int, N: int) -> VogelParams:
    """Vogel parameters ``(alpha, beta, gamma, t)`` with ``t`` the dual Coxeter number."""
    M, N = int(M), int(N)
    if kind == "sl":
        if M == N:
            raise AlgebraError(f"sl({M}|{N}): omega=0 is not covered by the parameter table")
        if M < N:
            # sl(M|N) and sl(N|M) are isomorphic; use the positive omega column
            M, N = N, M
        w = Q(M - N)
        return VogelParams("sl", M, N, Q(-2), Q(2), w, w)
    if kind == "osp":
        w = Q(M - N)
        if w == 2:
            raise AlgebraError("omega=2: Killing metric degenerate, h_vee = 0")
        upper = w > 1 if M % 2 else w > 0
        if upper:
            return VogelParams("osp", M, N, Q(-2), Q(4), w - 4, w - 2)
        return VogelParams("osp", M, N, Q(1), Q(-2), -(w - 4) / 2, -(w - 2) / 2)
    raise AlgebraError(f"unknown algebra kind {kind!r}")


def family_mu(kind: str, omega) -> tuple[Rational, Rational]:
    w = Q(omega)
    if kind == "osp":
        return -(w - 8) / (2 * (w - 2) ** 2), (w - 4) / (2 * (w - 2) ** 3)
    if kind == "sl":
        return 1 / (w * w), 1 / (4 * w * w)
    raise AlgebraError(f"unknown algebra kind {kind!r}")


def exceptional_loci(params: VogelParams) -> list[str]:
    """Names of vanishing ``3x - 2t`` factors; annotation only."""
    names = ("alpha", "beta", "gamma")
    return [f"3{n}-2t=0" for n, x in zip(names, params.triple) if 3 * x == 2 * params.t]


def dim_from_mu(mu1, mu2) -> Rational:
    mu1, mu2 = Q(mu1), Q(mu2)
    if mu2 == 0:
        raise ZeroDivisionError("mu2 = 0")
    return (2 * mu2 - mu1 + Q(1, 2)) / (2 * mu2)


def universal_cubic_residual(bundle: OperatorBundle, params: VogelParams) -> SuperMatrix:
    Cp = bundle.Cp
    Cp2 = Cp @ Cp
    return linear_combination([
        (1, Cp2 @ Cp),
        (Q(1, 2), Cp2),
        (-params.mu1, Cp),
        (-params.mu2, bundle.I + bundle.P - bundle.K.scale(2)),
    ])


# ---------------------------------------------------------------------------
# Superdimensions


def _str_pabg(a, b, c, t) -> Rational:
    return -((3 * a - 2 * t) * (b - 2 * t) * (c - 2 * t) * (b + t) * (c + t) * t) / (
        a * a * (a - b) * (a - c) * b * c)


def universal_sdims(params: VogelParams) -> dict[str, Rational]:
    """``sdim g`` and the superdimensions of the four symmetric subspaces."""
    a, b, c, t = params.alpha, params.beta, params.gamma, params.t
    if 0 in (a, b, c) or len({a, b, c}) < 3:
        raise ZeroDivisionError("universal superdimensions need distinct non-zero alpha, beta, gamma")
    return {
        "g": (a - 2 * t) * (b - 2 * t) * (c - 2 * t) / (a * b * c),
        "(-1)": Q(1),
        "alpha": _str_pabg(a, b, c, t),
        "beta": _str_pabg(b, a, c, t),
        "gamma": _str_pabg(c, a, b, t),
    }


# ---------------------------------------------------------------------------
# Universal projectors


def degeneracy(params: VogelParams) -> str | None:
    """Reason the universal projector formulas do not apply, or None."""
    a, b, c, t = params.alpha, params.beta, params.gamma, params.t
    if 0 in (a, b, c):
        return "a Vogel parameter vanishes"
    if 2 * t in (a, b, c):
        return "a Vogel parameter equals 2t"
    roots = list(params.roots().values())
    if len(set(roots)) < 4:
        return "eigenvalues of C+ collide"
    return None


def universal_projector(bundle: OperatorBundle, params: VogelParams, which: str) -> SuperMatrix:
    """``P(x|y,z)`` for ``which`` in alpha/beta/gamma, or ``(-1)`` for ``K/sdim``."""
    if which == "(-1)":
        return bundle.K.scale(Q(1, bundle.sdim))
    values = dict(zip(("alpha", "beta", "gamma"), params.triple))
    x = values.pop(which)
    y, z = values.values()
    t = params.t
    Cp = bundle.Cp
    inner = linear_combination([
        (1, Cp @ Cp),
        (Q(1, 2) - x / (2 * t), Cp),
        (y * z / (8 * t * t), bundle.I + bundle.P - bundle.K.scale(2 * x / (x - 2 * t))),
    ])
    return inner.scale(4 * t * t / ((y - x) * (z - x)))


def universal_projectors(bundle: OperatorBundle, params: VogelParams) -> ProjectorSystem:
    """The four symmetric-sector projectors; identity is ``P_+``."""
    reason = degeneracy(params)
    if reason:
        raise AlgebraError(f"universal projectors undefined: {reason}")
    roots = params.roots()
    projs = [Projector(f"P({k})", universal_projector(bundle, params, k), roots[k], "+")
             for k in ("alpha", "beta", "gamma", "(-1)")]
    return ProjectorSystem(projs, bundle.P_plus, bundle.Cp)


@dataclass
class UniversalMatch:
    matches: dict[str, str] = field(default_factory=dict)
    equal: dict[str, bool] = field(default_factory=dict)
    skipped: str | None = None

    @property
    def ok(self) -> bool:
        return self.skipped is None and bool(self.equal) and all(self.equal.values())


def match_universal(bundle: OperatorBundle, params: VogelParams, concrete: ProjectorSystem) -> UniversalMatch:
    """Compare universal projectors with concrete symmetric ones matched by eigenvalue."""
    reason = degeneracy(params)
    if reason:
        return UniversalMatch(skipped=reason)
    out = UniversalMatch()
    symmetric = [p for p in concrete if p.sector == "+"]
    for key, ev in params.roots().items():
        found = [p for p in symmetric if p.eigenvalue == ev]
        if len(found) != 1:
            return UniversalMatch(skipped=f"no unique concrete projector at eigenvalue {ev}")
        out.matches[key] = found[0].name
        out.equal[key] = universal_projector(bundle, params, key) == found[0].operator
    return out


# ---------------------------------------------------------------------------
# Higher Casimir eigenvalues


@dataclass
class SeriesReport:
    kmax: int
    direct: list[Rational] | None = None
    universal: list[Rational] | None = None

    @property
    def equal(self) -> list[bool]:
        if self.direct is None or self.universal is None:
            return []
        return [d == u for d, u in zip(self.direct, self.universal)]

    @property
    def ok(self) -> bool:
        flags = self.equal
        return len(flags) == self.kmax + 1 and all(flags)

    def merge(self, other: "SeriesReport") -> "SeriesReport":
        return SeriesReport(min(self.kmax, other.kmax),
                            self.direct if self.direct is not None else other.direct,
                            self.universal if self.universal is not None else other.universal)


def casimir_series_direct(bundle: OperatorBundle, kmax: int) -> SeriesReport:
    """``c_k`` from ``str_2(C^k) = c_k I``; raises if the result is not scalar."""
    if kmax < 0:
        raise ValueError("kmax must be non-negative")
    power = bundle.I
    coeffs = []
    for k in range(kmax + 1):
        if k:
            power = bundle.C @ power
        S = partial_supertrace_second(power)
        c = S[0, 0]
        if S != SuperMatrix.identity(S.row_space).scale(c):
            raise ArithmeticError(f"str_2(C^{k}) is not proportional to the identity")
        coeffs.append(c)
    return SeriesReport(kmax, direct=coeffs)


def poly_mul(p: list, q: list) -> list:
    out = [Q(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def series_divide(num: list, den: list, order: int) -> list[Rational]:
    """Taylor coefficients of ``num/den`` at 0 up to ``z^order``."""
    if not den or den[0] == 0:
        raise ZeroDivisionError("denominator vanishes at z = 0")
    num = [Q(x) for x in num]
    den = [Q(x) for x in den]
    out: list[Rational] = []
    for k in range(order + 1):
        s = num[k] if k < len(num) else Q(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            s -= den[j] * out[k - j]
        out.append(s / den[0])
    return out


def generating_function(params: VogelParams, literal_z3: bool = False) -> tuple[Rational, list, list]:
    """``(c0, numerator, denominator)`` of the generating function ``c(z)``.

    The ``z^3`` coefficient inside the fraction is ``13t^3 + 3t t2 - 4t3``;
    ``literal_z3`` uses ``13t`` instead, which breaks homogeneity in the
    parameters and does not reproduce the supertraces.
    """
    a, b, c, t = params.alpha, params.beta, params.gamma, params.t
    if 0 in (a, b, c):
        raise ZeroDivisionError("a Vogel parameter vanishes")
    t2 = a * a + b * b + c * c
    t3 = a ** 3 + b ** 3 + c ** 3
    c0 = (a - 2 * t) * (b - 2 * t) * (c - 2 * t) / (a * b * c)
    z3 = (13 * t if literal_z3 else 13 * t ** 3) + 3 * t * t2 - 4 * t3
    num = [0, 0, 96 * t ** 3, 168 * t ** 3, 6 * (14 * t ** 3 + t * t2 - t3), z3]
    den = [Q(6)]
    for lin in ([2 * t, a], [2 * t, b], [2 * t, c], [2, 1], [1, 1]):
        den = poly_mul(den, lin)
    return c0, num, den


def casimir_series_universal(params: VogelParams, kmax: int, literal_z3: bool = False) -> SeriesReport:
    c0, num, den = generating_function(params, literal_z3)
    coeffs = series_divide(num, den, kmax)
    coeffs[0] += c0
    return SeriesReport(kmax, universal=coeffs)


def casimir_series_from_projectors(bundle: OperatorBundle, params: VogelParams, kmax: int) -> list[Rational]:
    """Third route: spectral decomposition of ``C`` with universal ``C+`` projectors."""
    system = universal_projectors(bundle, params)
    Cm = bundle.Cm
    out = []
    for k in range(kmax + 1):
        if k == 0:
            op = bundle.I
        else:
            terms = [(p.eigenvalue ** k, p.operator) for p in system]
            terms.append((Q(-1, 2) ** (k - 1), Cm))
            op = linear_combination(terms)
        out.append(supertrace(op) / bundle.sdim)
    return out
