"""The orthosymplectic superalgebra osp(M|N).

Two pictures are kept side by side:

* the pair-space picture, where an element is a super-antisymmetric tensor
  ``X^{ij}`` in ``V (x) V`` and adjoint operators act on ``V^{(x)4}``;
* the restricted picture, built on the explicit basis ``M_ij`` (``i < j``,
  then ``M_ii`` for odd ``i``) where adjoint operators are square matrices of
  size ``(dim g)^2``.

Heavy polynomial work happens in the restricted picture.  The embedded
operators on ``V^{(x)4}`` are built on demand and carried over for
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .casimir_engine import (
    AlgebraError,
    LieSuperalgebra,
    OperatorBundle,
    PolySpec,
    Projector,
    ProjectorSystem,
    adjoint_bundle,
)
from .superlinalg import (
    ONE,
    GradedSpace,
    Q,
    Rational,
    SuperMatrix,
    inverse,
    left_inverse,
    linear_combination,
    place,
    place_pair,
    superperm,
    tensor,
)


def _sign(p: int) -> int:
    return -1 if p & 1 else 1


@dataclass
class OspModel:
    M: int
    N: int
    V: GradedSpace
    eps: SuperMatrix
    eps_inv: SuperMatrix
    labels: tuple
    lie: LieSuperalgebra

    @property
    def omega(self) -> int:
        return self.M - self.N

    @property
    def xi(self) -> int:
        return self.M + self.N

    @property
    def dim(self) -> int:
        return self.lie.dim

    @property
    def sdim(self) -> int:
        return self.lie.sdim

    @property
    def dim_parts(self) -> tuple[int, int]:
        sp = self.lie.space
        return sp.dim_even, sp.dim_odd

    def defining_rep(self, label) -> SuperMatrix:
        return self.lie.basis[self.lie.index(label)]

    # -- pair-space data --------------------------------------------------

    @cached_property
    def pair_space(self) -> GradedSpace:
        return tensor(self.V, self.V)

    @cached_property
    def P(self) -> SuperMatrix:
        return superperm(self.V)

    @cached_property
    def K(self) -> SuperMatrix:
        """``K^{k1 k2}_{m1 m2} = epsbar^{k1 k2} eps_{m1 m2}``."""
        d = self.V.dim
        rows = {}
        for (k1, k2), a in self.eps_inv.items():
            rows[k1 * d + k2] = {m1 * d + m2: a * b for (m1, m2), b in self.eps.items()}
        return SuperMatrix(self.pair_space, self.pair_space, rows)

    @cached_property
    def one(self) -> SuperMatrix:
        return SuperMatrix.identity(self.pair_space)

    @cached_property
    def I_hat(self) -> SuperMatrix:
        """Super-antisymmetriser on ``V (x) V``; the identity on the algebra."""
        return (self.one - self.P).scale(Q(1, 2))

    @cached_property
    def killing_pair(self) -> SuperMatrix:
        """``2(w-2)[eps_{i1 j2} eps_{i2 j1} - (-1)^{[j1][j2]} eps_{i1 j1} eps_{i2 j2}]``."""
        d, par, e = self.V.dim, self.V.parities, self.eps
        c = Q(2 * (self.omega - 2))
        rows = {}
        for i1 in range(d):
            for i2 in range(d):
                row = {}
                for j1 in range(d):
                    for j2 in range(d):
                        v = e[i1, j2] * e[i2, j1] - _sign(par[j1] * par[j2]) * e[i1, j1] * e[i2, j2]
                        if v:
                            row[j1 * d + j2] = c * v
                if row:
                    rows[i1 * d + i2] = row
        return SuperMatrix(self.pair_space, self.pair_space, rows)

    @cached_property
    def killing_inv_pair(self) -> SuperMatrix:
        """``1/(8(w-2)) (ebar^{i1 j2} ebar^{i2 j1} - (-1)^{[i1][i2]} ebar^{i1 j1} ebar^{i2 j2})``."""
        d, par, e = self.V.dim, self.V.parities, self.eps_inv
        c = Q(1, 8 * (self.omega - 2))
        rows = {}
        for i1 in range(d):
            for i2 in range(d):
                row = {}
                for j1 in range(d):
                    for j2 in range(d):
                        v = e[i1, j2] * e[i2, j1] - _sign(par[i1] * par[i2]) * e[i1, j1] * e[i2, j2]
                        if v:
                            row[j1 * d + j2] = c * v
                if row:
                    rows[i1 * d + i2] = row
        return SuperMatrix(self.pair_space, self.pair_space, rows)

    @cached_property
    def E(self) -> SuperMatrix:
        """Explicit coordinates -> super-antisymmetric pair coordinates ``X^{ij}``."""
        d, par = self.V.dim, self.V.parities
        rows: dict[int, dict[int, Rational]] = {}
        half = Q(1, 2)
        for a, (i, j) in enumerate(self.labels):
            if i == j:
                rows.setdefault(i * d + i, {})[a] = ONE
            else:
                rows.setdefault(i * d + j, {})[a] = half
                rows.setdefault(j * d + i, {})[a] = -half * _sign(par[i] * par[j])
        return SuperMatrix(self.pair_space, self.lie.space, rows)

    @cached_property
    def R(self) -> SuperMatrix:
        """Left inverse of ``E`` vanishing on super-symmetric tensors."""
        return left_inverse(self.E) @ self.I_hat


def _metric(V: GradedSpace, M: int, N: int) -> SuperMatrix:
    n = N // 2
    rows = {i: {i: ONE} for i in range(M)}
    for k in range(n):
        rows[M + k] = {M + n + k: ONE}
        rows[M + n + k] = {M + k: -ONE}
    return SuperMatrix(V, V, rows)


def _basis_matrix(V: GradedSpace, eps: SuperMatrix, i: int, j: int) -> SuperMatrix:
    """``(M_ij)^a_b = eps_{jb} d^a_i - (-1)^{[i][j]} eps_{ib} d^a_j``."""
    par = V.parities
    s = _sign(par[i] * par[j])
    entries = []
    for b in range(V.dim):
        x = eps[j, b]
        if x:
            entries.append(((i, b), x))
        y = eps[i, b]
        if y:
            entries.append(((j, b), -s * y))
    return SuperMatrix.from_entries(V, V, entries)


def osp_labels(M: int, N: int) -> tuple:
    xi = M + N
    labels = [(i, j) for i in range(xi) for j in range(i + 1, xi)]
    labels += [(i, i) for i in range(M, xi)]
    return tuple(labels)


def build_osp(M: int, N: int) -> OspModel:
    """Construct osp(M|N); raises ``AlgebraError`` on invalid parameters."""
    M, N = int(M), int(N)
    if M < 0 or N < 0:
        raise AlgebraError("M and N must be non-negative")
    if N % 2:
        raise AlgebraError(f"N={N} is odd: the symplectic block needs N even")
    if M - N == 2:
        raise AlgebraError("omega=2: Killing metric degenerate")
    V = GradedSpace.standard(M, N)
    eps = _metric(V, M, N)
    eps_inv = inverse(eps)
    labels = osp_labels(M, N)
    if not labels:
        raise AlgebraError("osp(M|N) is trivial for these parameters")
    par = V.parities
    basis = [_basis_matrix(V, eps, i, j) for i, j in labels]
    lie = LieSuperalgebra(V, labels, basis, [(par[i] + par[j]) & 1 for i, j in labels])
    model = OspModel(M, N, V, eps, eps_inv, labels, lie)
    lie.killing_inv  # degenerate metrics surface here
    return model


# ---------------------------------------------------------------------------
# Model checks


def metric_invariance_defects(model: OspModel) -> list:
    """Labels whose matrix violates ``A^c_a eps_cb + (-1)^{[a]+[a][b]} eps_ac A^c_b = 0``."""
    par = model.V.parities
    d = model.V.dim
    e = model.eps
    bad = []
    for lab, A in zip(model.labels, model.lie.basis):
        ok = True
        for a in range(d):
            for b in range(d):
                s = sum((A[c, a] * e[c, b] for c in range(d)), Q(0))
                t = sum((e[a, c] * A[c, b] for c in range(d)), Q(0))
                if s + _sign(par[a] + par[a] * par[b]) * t:
                    ok = False
        if not ok:
            bad.append(lab)
    return bad


def epsilon_symmetry_holds(model: OspModel) -> bool:
    """``eps_ba = (-1)^{[a]} eps_ab``."""
    par = model.V.parities
    d = model.V.dim
    return all(model.eps[b, a] == _sign(par[a]) * model.eps[a, b] for a in range(d) for b in range(d))


def killing_pair_checks(model: OspModel) -> dict[str, bool]:
    """Pair-space metric against its inverse and against the restricted metric."""
    G, Gi, Ih = model.killing_pair, model.killing_inv_pair, model.I_hat
    E, R = model.E, model.R
    from .superlinalg import transpose

    return {
        "gbar g = I_hat": Gi @ G == Ih,
        "g gbar = I_hat^T": G @ Gi == transpose(Ih),
        "I_hat idempotent": Ih @ Ih == Ih,
        "R E = 1": R @ E == SuperMatrix.identity(model.lie.space),
        "E R = I_hat": E @ R == Ih,
        "restricted g = E^T g E": transpose(E) @ G @ E == model.lie.killing,
        "restricted gbar = R gbar R^T": R @ Gi @ transpose(R) == model.lie.killing_inv,
    }


# ---------------------------------------------------------------------------
# Defining representation


def osp_defining_casimir(model: OspModel, route: str = "closed") -> SuperMatrix:
    """Split Casimir on ``V (x) V``: ``(P - K)/(2(w-2))`` or the metric contraction."""
    if route == "closed":
        return (model.P - model.K).scale(Q(1, 2 * (model.omega - 2)))
    if route == "contraction":
        return model.lie.split_casimir(model.lie.basis)
    raise ValueError(f"unknown route {route!r}")


def osp_defining_roots(omega: int) -> PolySpec:
    """Roots of the cubic identity; at ``w = 0`` the first and third coincide."""
    w = Q(omega)
    a1, a2, a3 = 1 / (2 * (w - 2)), -1 / (2 * (w - 2)), (1 - w) / (2 * (w - 2))
    if a1 == a3:
        return PolySpec([(a1, 2), (a2, 1)])
    return PolySpec.simple([a1, a2, a3])


def osp_defining_projectors(model: OspModel) -> ProjectorSystem:
    w = model.omega
    one, P, K = model.one, model.P, model.K
    half = Q(1, 2)
    roots = [a for a, _ in osp_defining_roots(w).roots]
    if w == 0:
        # K^2 = 0: the symmetric part is a single generalised eigenspace
        projs = [
            Projector("proj1+3", (one + P).scale(half), roots[0], "+", multiplicity=2),
            Projector("proj2", (one - P).scale(half), roots[1], "-"),
        ]
        return ProjectorSystem(projs, one, osp_defining_casimir(model))
    projs = [
        Projector("proj1", (one + P).scale(half) - K.scale(Q(1, w)), roots[0], "+"),
        Projector("proj2", (one - P).scale(half), roots[1], "-"),
        Projector("proj3", K.scale(Q(1, w)), roots[2], "+"),
    ]
    return ProjectorSystem(projs, one, osp_defining_casimir(model))


# ---------------------------------------------------------------------------
# R-matrix


def osp_r_poles(omega: int) -> set:
    w = Q(omega)
    return {Q(1), 1 - w / 2}


def osp_r_matrix(model: OspModel, u, form: str = "PK") -> SuperMatrix:
    """``R(u)`` in one of three equivalent forms: ``PK``, ``projectors``, ``casimir``."""
    u = Q(u)
    w = Q(model.omega)
    if u in osp_r_poles(model.omega):
        raise ValueError(f"u={u} is a pole of R(u)")
    one, P, K = model.one, model.P, model.K
    if form == "PK":
        core = one.scale(u) + P - K.scale(u / (u + w / 2 - 1))
        return core.scale(1 / (1 - u))
    if form == "projectors":
        if model.omega == 0:
            raise ValueError("projector form needs omega != 0")
        sysm = osp_defining_projectors(model)
        p1, p2, p3 = (p.operator for p in sysm)
        return linear_combination([((1 + u) / (1 - u), p1), (-1, p2), ((w / 2 - 1 - u) / (w / 2 - 1 + u), p3)])
    if form == "casimir":
        A = osp_defining_casimir(model).scale(w - 2).plus_scalar(Q(1, 2))
        try:
            denom = inverse(A.plus_scalar(-u))
        except ValueError:
            raise ValueError(f"casimir form is singular at u={u}") from None
        return A.plus_scalar(u) @ denom
    raise ValueError(f"unknown form {form!r}")


# ---------------------------------------------------------------------------
# Adjoint representation


class OspEmbedded:
    """Operators of the adjoint square realised on ``V^{(x)4}``."""

    def __init__(self, model: OspModel):
        self.model = model
        self.space = model.V.power(4)
        Pm = model.I_hat
        self.I = place(Pm, [1, 2], 4) @ place(Pm, [3, 4], 4)

    def P_(self, a: int, b: int) -> SuperMatrix:
        return place_pair(self.model.P, a, b, 4)

    def K_(self, a: int, b: int) -> SuperMatrix:
        return place_pair(self.model.K, a, b, 4)

    def sandwich(self, X: SuperMatrix) -> SuperMatrix:
        return self.I @ X @ self.I

    @cached_property
    def one(self) -> SuperMatrix:
        return SuperMatrix.identity(self.space)

    @cached_property
    def P(self) -> SuperMatrix:
        return self.sandwich(self.P_(1, 3) @ self.P_(2, 4))

    @cached_property
    def K(self) -> SuperMatrix:
        return self.sandwich(self.K_(1, 3) @ self.K_(2, 4))

    @cached_property
    def C(self) -> SuperMatrix:
        w = self.model.omega
        return self.sandwich(self.P_(1, 3) - self.K_(1, 3)).scale(Q(2, w - 2))

    @cached_property
    def C_from_defining(self) -> SuperMatrix:
        """``4 I (C_f)_13 I`` with ``C_f`` from the metric contraction."""
        Cf = osp_defining_casimir(self.model, "contraction")
        return self.sandwich(place_pair(Cf, 1, 3, 4)).scale(4)

    @cached_property
    def Cm(self) -> SuperMatrix:
        w = self.model.omega
        K13, P24 = self.K_(1, 3), self.P_(2, 4)
        return self.sandwich(K13 @ P24 - K13).scale(Q(1, w - 2))

    @cached_property
    def Cp(self) -> SuperMatrix:
        w = self.model.omega
        K13, P24 = self.K_(1, 3), self.P_(2, 4)
        return self.sandwich(P24.scale(2) - K13 - K13 @ P24).scale(Q(1, w - 2))

    def proj5_limit(self) -> SuperMatrix:
        """Limit of proj5 at ``w = 8``."""
        s = self.P_(1, 4) + self.P_(2, 3) + self.P_(1, 3) + self.P_(2, 4)
        core = self.one - s + self.P_(1, 3) @ self.P_(2, 4)
        return (core @ self.I).scale(Q(1, 6))

    def proj6_limit(self) -> SuperMatrix:
        """Limit of proj6 at ``w = 8``."""
        w = self.model.omega
        inner = (self.one + self.P_(2, 4)).scale(Q(1, 2)) - self.K_(2, 4).scale(Q(1, w))
        return self.sandwich(self.K_(1, 3) @ inner).scale(Q(4, w - 2))


def osp_adjoint_bundle(model: OspModel) -> OperatorBundle:
    """Restricted-picture bundle; ``bundle.extra['embedded']`` builds ``V^{(x)4}`` lazily."""
    bundle = adjoint_bundle(model.lie, "osp", model.omega, model.E, model.R)
    bundle.extra["model"] = model
    return bundle


def osp_embedded(bundle: OperatorBundle) -> OspEmbedded:
    emb = bundle.extra.get("embedded")
    if emb is None:
        emb = OspEmbedded(bundle.extra["model"])
        bundle.extra["embedded"] = emb
    return emb


def bundle_relations(bundle: OperatorBundle) -> dict[str, bool]:
    """Generic relations among ``I, P, K, C, C+, C-`` (either algebra)."""
    I, P, K, C, Cp, Cm = bundle.I, bundle.P, bundle.K, bundle.C, bundle.Cp, bundle.Cm
    s = Q(bundle.sdim)
    return {
        "P^2 = I": P @ P == I,
        "KP = PK = K": K @ P == K and P @ K == K,
        "K^2 = sdim K": K @ K == K.scale(s),
        "C P = P C": C @ P == P @ C,
        "C K = K C = -K": C @ K == -K and K @ C == -K,
        "C = C+ + C-": Cp + Cm == C,
        "C+ C- = C- C+ = 0": (Cp @ Cm).is_zero() and (Cm @ Cp).is_zero(),
        "P C+ = C+": P @ Cp == Cp,
        "P C- = -C-": P @ Cm == -Cm,
        "K C- = C- K = 0": (K @ Cm).is_zero() and (Cm @ K).is_zero(),
        "K C+ = C+ K = -K": K @ Cp == -K and Cp @ K == -K,
        "C-^2 = -C-/2": Cm @ Cm == Cm.scale(Q(-1, 2)),
    }


# ---------------------------------------------------------------------------
# Characteristic identities


@dataclass
class CharIdentity:
    """Roots with multiplicities plus the expected right-hand side.

    ``residual`` maps operator names of the bundle (``K``, ``I``, ``P``,
    ``Cp2`` for ``C+^2``, ``P_plus``) to coefficients; empty means zero.
    """

    operator: str
    spec: PolySpec
    residual: dict = field(default_factory=dict)
    generalized: PolySpec | None = None

    @property
    def residual_is_zero(self) -> bool:
        return not self.residual


def residual_operator(bundle: OperatorBundle, residual: dict) -> SuperMatrix | None:
    if not residual:
        return None
    named = {
        "K": bundle.K,
        "I": bundle.I,
        "P": bundle.P,
        "P_plus": bundle.P_plus,
        "Cp2": bundle.Cp @ bundle.Cp,
    }
    return linear_combination([(Q(v), named[k]) for k, v in residual.items()])


def osp_generic_roots(omega: int) -> list[Rational]:
    w = Q(omega)
    return [Q(0), Q(-1, 2), Q(-1), 1 / (w - 2), -2 / (w - 2), (4 - w) / (2 * (w - 2))]


# Degenerate values of omega: one factor per distinct root, expected residual.
_OSP_DEGENERATE = {
    0: ([0, "-1/2", -1, 1], {"K": "1/2"}, [(0, 1), ("-1/2", 1), (-1, 2), (1, 1)]),
    1: ([0, "-1/2", -1, 2, "-3/2"], {"K": "-3/2"}, [(0, 1), ("-1/2", 1), (-1, 2), (2, 1), ("-3/2", 1)]),
    4: ([0, "-1/2", -1, "1/2"], {}, None),
    6: ([0, "-1/2", -1, "1/4", "-1/4"], {}, None),
    8: ([0, "-1/2", -1, "1/6", "-1/3"], {}, None),
}


def osp_char_identity(omega: int) -> CharIdentity:
    """Characteristic identity of the adjoint split Casimir of osp at ``omega``."""
    omega = int(omega)
    if omega == 2:
        raise AlgebraError("omega=2: Killing metric degenerate")
    if omega in _OSP_DEGENERATE:
        roots, residual, gen = _OSP_DEGENERATE[omega]
        return CharIdentity("C", PolySpec.simple(roots), dict(residual), PolySpec(gen) if gen else None)
    return CharIdentity("C", PolySpec.simple(osp_generic_roots(omega)))


# ---------------------------------------------------------------------------
# Projectors on the adjoint square


def _combo(bundle: OperatorBundle, Cp2: SuperMatrix, cI_P=0, cK=0, cCp=0, cCp2=0, cCm=0, cImP=0) -> SuperMatrix:
    I, P = bundle.I, bundle.P
    terms = []
    if cI_P:
        terms.append((Q(cI_P), I + P))
    if cImP:
        terms.append((Q(cImP), I - P))
    if cK:
        terms.append((Q(cK), bundle.K))
    if cCp:
        terms.append((Q(cCp), bundle.Cp))
    if cCp2:
        terms.append((Q(cCp2), Cp2))
    if cCm:
        terms.append((Q(cCm), bundle.Cm))
    return linear_combination(terms)


def osp_adjoint_projectors(bundle: OperatorBundle) -> ProjectorSystem:
    """Projectors onto the (generalised) eigenspaces of the adjoint split Casimir."""
    w = bundle.omega
    if w == 2:
        raise AlgebraError("omega=2: Killing metric degenerate")
    W = Q(w)
    Cp2 = bundle.Cp @ bundle.Cp
    c = lambda **kw: _combo(bundle, Cp2, **kw)
    half = Q(1, 2)
    notes = []
    if w == 0:
        projs = [
            Projector("proj1", c(cImP=half, cCm=2), Q(0), "-"),
            Projector("proj2", c(cCm=-2, cI_P=Q(2, 3), cK=Q(4, 3), cCp2=Q(-4, 3)), Q(-1, 2), "+-"),
            Projector("proj3", c(cI_P=Q(-1, 4), cK=Q(-5, 4), cCp=-half, cCp2=1), Q(-1), "+", multiplicity=2),
            Projector("proj4", c(cI_P=Q(1, 12), cK=Q(-1, 12), cCp=half, cCp2=Q(1, 3)), Q(1), "+"),
        ]
    elif w == 1:
        projs = [
            Projector("proj1", c(cImP=half, cCm=2), Q(0), "-"),
            Projector("proj2", c(cCm=-2), Q(-1, 2), "-"),
            Projector("proj3", c(cI_P=1, cK=Q(-10, 3), cCp=Q(1, 3), cCp2=Q(-2, 3)), Q(-1), "+", multiplicity=2),
            Projector("proj4", c(cI_P=Q(1, 14), cK=Q(-2, 21), cCp=Q(5, 21), cCp2=Q(2, 21)), Q(2), "+"),
            Projector("proj5", c(cI_P=Q(-4, 7), cK=Q(24, 7), cCp=Q(-4, 7), cCp2=Q(4, 7)), Q(-3, 2), "+"),
        ]
    else:
        a = osp_generic_roots(w)
        projs = [
            Projector("proj1", c(cImP=half, cCm=2), a[0], "-"),
            Projector("proj2", c(cCm=-2), a[1], "-"),
            Projector("proj3", bundle.K.scale(Q(2) / ((W - 1) * W)), a[2], "+"),
            Projector("proj4", c(cCp2=Q(2, 3) * (W - 2), cCp=W / 3, cI_P=(W - 4) / (3 * (W - 2)),
                                 cK=-2 * (W - 4) / (3 * (W - 2) * (W - 1))), a[3], "+"),
        ]
        if w == 8:
            emb = osp_embedded(bundle)
            projs.append(Projector("proj5", bundle.restrict(emb.proj5_limit()), a[4], "+"))
            projs.append(Projector("proj6", bundle.restrict(emb.proj6_limit()), a[5], "+"))
            notes.append("omega=8: proj5, proj6 from the pole-free limit formulas on V^4")
        else:
            projs.append(Projector("proj5", c(cCp2=-2 * (W - 2) ** 2 / (3 * (W - 8)),
                                              cCp=-(W - 2) * (W - 6) / (3 * (W - 8)),
                                              cI_P=(W - 4) / (6 * (W - 8)), cK=Q(2) / (3 * (W - 8))), a[4], "+"))
            projs.append(Projector("proj6", c(cCp2=4 * (W - 2) / (W - 8), cCp=Q(4) / (W - 8),
                                              cI_P=-4 / ((W - 2) * (W - 8)),
                                              cK=-8 * (W - 4) / (W * (W - 2) * (W - 8))), a[5], "+"))
    return ProjectorSystem(projs, bundle.I, bundle.C, notes)


def osp_proj2_split(bundle: OperatorBundle, use_square: bool = True) -> tuple[SuperMatrix, SuperMatrix]:
    """Symmetric and antisymmetric parts of proj2 at ``w = 0``.

    ``use_square=False`` gives the variant with ``C+`` in place of ``C+^2``.
    """
    Cp2 = bundle.Cp @ bundle.Cp
    last = Cp2 if use_square else bundle.Cp
    plus = linear_combination([(Q(2, 3), bundle.I + bundle.P), (Q(4, 3), bundle.K), (Q(-4, 3), last)])
    return plus, bundle.Cm.scale(-2)


# ---------------------------------------------------------------------------
# Dimension tables


def osp_expected_traces(M: int, N: int) -> dict[str, tuple[Rational, Rational]]:
    """Closed-form ``(tr, str)`` of proj1..proj6."""
    w, x = Q(M - N), Q(M + N)
    if w in (0, 1, 2):
        raise AlgebraError(f"omega={w}: closed-form dimension tables need omega not in {{0, 1, 2}}")
    tr = {
        "proj1": (x**4 - 2 * x**2 * (w + 2) - w * (w - 6)) / 8,
        "proj2": (x**2 - w) / 2,
        "proj3": Q(1),
        "proj4": (x**4 - 10 * x**2 + 3 * w * (w - 2)) / 12,
        # sign of the middle term fixed; the other sign disagrees with the dimension table
        "proj5": (x**4 - 2 * x**2 * (3 * w - 4) + 3 * w * (w - 2)) / 24,
        "proj6": (x**2 + w - 2) / 2,
    }
    st = {
        "proj1": w * (w - 1) * (w + 2) * (w - 3) / 8,
        "proj2": w * (w - 1) / 2,
        "proj3": Q(1),
        "proj4": w * (w + 1) * (w + 2) * (w - 3) / 12,
        "proj5": w * (w - 1) * (w - 2) * (w - 3) / 24,
        "proj6": (w - 1) * (w + 2) / 2,
    }
    return {k: (tr[k], st[k]) for k in tr}


def osp_expected_dims(M: int, N: int) -> dict[str, tuple[int, int]]:
    """Closed-form ``(dim_even, dim_odd)`` of the six invariant subspaces."""
    if (M - N) in (0, 1, 2):
        raise AlgebraError(f"omega={M - N}: closed-form dimension tables need omega not in {{0, 1, 2}}")
    m, n = Q(M), Q(N)
    even = {
        "proj1": m * (m - 1) * (m + 2) * (m - 3) / 8 + n * (n + 1) * (n - 2) * (n + 3) / 8
        + m * n * (3 * m * n + m - n + 1) / 4,
        "proj2": m * (m - 1) / 2 + n * (n + 1) / 2,
        "proj3": Q(1),
        "proj4": m * (m + 1) * (m + 2) * (m - 3) / 12 + n * (n - 1) * (n - 2) * (n + 3) / 12
        + m * n * (m * n - 1) / 2,
        "proj5": m * (m - 1) * (m - 2) * (m - 3) / 24 + n * (n + 1) * (n + 2) * (n + 3) / 24
        + m * n * (m - 1) * (n + 1) / 4,
        "proj6": (m - 1) * (m + 2) / 2 + n * (n - 1) / 2,
    }
    odd = {
        "proj1": m * n * (m * (m - 1) + (n - 1) * (n + 2)) / 2,
        "proj2": m * n,
        "proj3": Q(0),
        "proj4": m * n * (m * m + n * n - 5) / 3,
        "proj5": m * n * ((m - 1) * (m - 2) + (n + 1) * (n + 2)) / 6,
        "proj6": m * n,
    }
    return {k: (int(even[k]), int(odd[k])) for k in even}
