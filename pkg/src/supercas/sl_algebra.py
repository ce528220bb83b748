"""The special linear superalgebra sl(M|N), M != N.

The pair-space picture identifies an element with its matrix entries
``X^{ij}`` (a supertraceless tensor in ``V (x) V``); the restricted picture
uses the explicit basis ``e_ij`` (``i != j``) and
``h_k = e_kk - (-1)^{[k]+[k+1]} e_{k+1,k+1}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
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
from .osp_algebra import CharIdentity
from .superlinalg import (
    ONE,
    GradedSpace,
    Q,
    Rational,
    SuperMatrix,
    graded_kron,
    inverse,
    left_inverse,
    linear_combination,
    place,
    place_pair,
    superperm,
    supertrace,
    tensor,
    transpose,
)


def _sign(p: int) -> int:
    return -1 if p & 1 else 1


@dataclass
class SlModel:
    M: int
    N: int
    V: GradedSpace
    labels: tuple
    lie: LieSuperalgebra
    swapped: bool = False

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

    def T(self, i: int, j: int) -> SuperMatrix:
        """``(T_ij)^a_b = (e_ij)^a_b - (-1)^{[i][j]} d_ij d^a_b / w``."""
        par = self.V.parities
        entries = [((i, j), ONE)]
        if i == j:
            c = Q(_sign(par[i]), self.omega)
            entries += [((a, a), -c) for a in range(self.V.dim)]
        return SuperMatrix.from_entries(self.V, self.V, entries)

    # -- pair-space data --------------------------------------------------

    @cached_property
    def pair_space(self) -> GradedSpace:
        return tensor(self.V, self.V)

    @cached_property
    def one(self) -> SuperMatrix:
        return SuperMatrix.identity(self.pair_space)

    @cached_property
    def P(self) -> SuperMatrix:
        return superperm(self.V)

    @cached_property
    def K(self) -> SuperMatrix:
        """``K^{i1 i2}_{j1 j2} = (-1)^{[j1][j2]} d^{i1 i2} d_{j1 j2}``."""
        d, par = self.V.dim, self.V.parities
        rows = {i * d + i: {j * d + j: Q(_sign(par[j])) for j in range(d)} for i in range(d)}
        return SuperMatrix(self.pair_space, self.pair_space, rows)

    @cached_property
    def I_bar(self) -> SuperMatrix:
        return self.one - self.K.scale(Q(1, self.omega))

    @cached_property
    def killing_pair(self) -> SuperMatrix:
        """``2w((-1)^{[i1][j2]} d_{j1 i2} d_{i1 j2} - (-1)^{[i1]+[j2]}/w d_{i1 i2} d_{j1 j2})``."""
        d, par, w = self.V.dim, self.V.parities, self.omega
        entries = []
        for i1 in range(d):
            for i2 in range(d):
                # first term: j1 = i2, j2 = i1
                entries.append(((i1 * d + i2, i2 * d + i1), 2 * w * _sign(par[i1] * par[i1])))
        for i in range(d):
            for j in range(d):
                entries.append(((i * d + i, j * d + j), -2 * _sign(par[i] + par[j])))
        return SuperMatrix.from_entries(self.pair_space, self.pair_space, entries)

    @cached_property
    def killing_inv_pair(self) -> SuperMatrix:
        """``1/(2w)((-1)^{[j1][i2]} d^{j1 i2} d^{i1 j2} - 1/w d^{i1 i2} d^{j1 j2})``."""
        d, par, w = self.V.dim, self.V.parities, self.omega
        entries = []
        for i1 in range(d):
            for i2 in range(d):
                entries.append(((i1 * d + i2, i2 * d + i1), Q(_sign(par[i2] * par[i2]), 2 * w)))
        for i in range(d):
            for j in range(d):
                entries.append(((i * d + i, j * d + j), Q(-1, 2 * w * w)))
        return SuperMatrix.from_entries(self.pair_space, self.pair_space, entries)

    @cached_property
    def E(self) -> SuperMatrix:
        """Explicit coordinates -> matrix entries ``X^{ij}``."""
        vec = self.lie.vectorization
        return SuperMatrix(self.pair_space, self.lie.space, {r: vec.row(r) for r in range(vec.shape[0]) if vec.row(r)})

    @cached_property
    def R(self) -> SuperMatrix:
        return left_inverse(self.E) @ self.I_bar


def sl_labels(M: int, N: int) -> tuple:
    xi = M + N
    labels = [("e", i, j) for i in range(xi) for j in range(xi) if i != j]
    labels += [("h", k, k + 1) for k in range(xi - 1)]
    return tuple(labels)


def build_sl(M: int, N: int) -> SlModel:
    """Construct sl(M|N); ``M < N`` is normalised to sl(N|M)."""
    M, N = int(M), int(N)
    if M < 0 or N < 0:
        raise AlgebraError("M and N must be non-negative")
    if M == N:
        raise AlgebraError(f"sl({M}|{N}) is not simple: Killing metric degenerate")
    swapped = M < N
    if swapped:
        M, N = N, M
    if M + N < 2:
        raise AlgebraError("sl(M|N) is trivial for these parameters")
    V = GradedSpace.standard(M, N)
    par = V.parities
    labels = sl_labels(M, N)
    basis = []
    parities = []
    for kind, i, j in labels:
        if kind == "e":
            basis.append(SuperMatrix.from_entries(V, V, [((i, j), 1)]))
            parities.append((par[i] + par[j]) & 1)
        else:
            s = _sign(par[i] + par[j])
            basis.append(SuperMatrix.from_entries(V, V, [((i, i), 1), ((j, j), -s)]))
            parities.append(0)
    lie = LieSuperalgebra(V, labels, basis, parities)
    lie.killing_inv
    return SlModel(M, N, V, labels, lie, swapped)


def killing_pair_checks(model: SlModel) -> dict[str, bool]:
    G, Gi, Ib = model.killing_pair, model.killing_inv_pair, model.I_bar
    E, R = model.E, model.R
    return {
        "I_bar idempotent": Ib @ Ib == Ib,
        "gbar g = I_bar": Gi @ G == Ib,
        "g gbar = I_bar^T": G @ Gi == transpose(Ib),
        "R E = 1": R @ E == SuperMatrix.identity(model.lie.space),
        "E R = I_bar": E @ R == Ib,
        "restricted g = E^T g E": transpose(E) @ G @ E == model.lie.killing,
        "restricted gbar = R gbar R^T": R @ Gi @ transpose(R) == model.lie.killing_inv,
    }


def pair_basis_checks(model: SlModel) -> dict[str, bool]:
    """Supertracelessness of every ``T_ij`` and of every adjoint matrix."""
    xi = model.xi
    return {
        "str T_ij = 0": all(supertrace(model.T(i, j)) == 0 for i in range(xi) for j in range(xi)),
        "sum_i T_ii = 0": linear_combination([(1, model.T(i, i)) for i in range(xi)]).is_zero(),
        "str ad = 0": all(supertrace(A) == 0 for A in model.lie.ad),
        "tr I_bar": model.I_bar.trace() == xi * xi - 1,
        "str I_bar": supertrace(model.I_bar) == model.omega ** 2 - 1,
    }


# ---------------------------------------------------------------------------
# Defining representation


def sl_defining_casimir(model: SlModel, route: str = "closed") -> SuperMatrix:
    w = model.omega
    if route == "closed":
        return (model.P - model.one.scale(Q(1, w))).scale(Q(1, 2 * w))
    if route == "contraction":
        return model.lie.split_casimir(model.lie.basis)
    raise ValueError(f"unknown route {route!r}")


def sl_defining_roots(omega: int) -> PolySpec:
    w = Q(omega)
    return PolySpec.simple([(w - 1) / (2 * w * w), -(w + 1) / (2 * w * w)])


def sl_defining_projectors(model: SlModel) -> ProjectorSystem:
    half = Q(1, 2)
    a_plus, a_minus = (a for a, _ in sl_defining_roots(model.omega).roots)
    projs = [
        Projector("proj+", (model.one + model.P).scale(half), a_plus, "+"),
        Projector("proj-", (model.one - model.P).scale(half), a_minus, "-"),
    ]
    return ProjectorSystem(projs, model.one, sl_defining_casimir(model))


def sl_r_poles(omega: int) -> set:
    return {Q(1)}


def sl_r_matrix(model: SlModel, u, form: str = "P") -> SuperMatrix:
    """``R(u) = (u + P)/(1 - u)`` in three forms: ``P``, ``projectors``, ``casimir``."""
    u = Q(u)
    if u == 1:
        raise ValueError("u=1 is a pole of R(u)")
    if form == "P":
        return (model.one.scale(u) + model.P).scale(1 / (1 - u))
    if form == "projectors":
        p_plus, p_minus = (p.operator for p in sl_defining_projectors(model))
        return linear_combination([((1 + u) / (1 - u), p_plus), (-1, p_minus)])
    if form == "casimir":
        w = Q(model.omega)
        A = sl_defining_casimir(model).scale(w).plus_scalar((1 + w) / (2 * w))
        try:
            denom = inverse(A.plus_scalar(-u))
        except ValueError:
            raise ValueError(f"casimir form is singular at u={u}") from None
        return A.plus_scalar(u) @ denom
    raise ValueError(f"unknown form {form!r}")


# ---------------------------------------------------------------------------
# Adjoint representation


def symmetric_structure(model: SlModel) -> tuple[list[SuperMatrix], SuperMatrix]:
    """``D_b`` matrices and the scalar part of the anticommutators.

    ``[X_b, X_d]_+ = D^c_{bd} X_c + s_{bd} 1`` with ``(D_b)^c_d = D^c_{bd}``.
    """
    lie = model.lie
    w = Q(model.omega)
    D = lie.dim
    par = lie.parities
    rows = [dict() for _ in range(D)]
    scalar = {}
    for b in range(D):
        Xb = lie.basis[b]
        for d in range(D):
            Xd = lie.basis[d]
            anti = Xb @ Xd + (Xd @ Xb).scale(_sign(par[b] * par[d]))
            s = supertrace(anti) / w
            if s:
                scalar.setdefault(b, {})[d] = s
            traceless = anti.plus_scalar(-s) if s else anti
            for c, v in lie.coordinates(traceless).items():
                rows[b].setdefault(c, {})[d] = v
    mats = [SuperMatrix(lie.space, lie.space, r) for r in rows]
    return mats, SuperMatrix(lie.space, lie.space, scalar)


def sl_adjoint_bundle(model: SlModel) -> OperatorBundle:
    """Restricted-picture bundle including ``Ct_minus`` from the ``D`` constants."""
    bundle = adjoint_bundle(model.lie, "sl", model.omega, model.E, model.R)
    lie = model.lie
    Dmats, scalar = symmetric_structure(model)
    Ct = linear_combination([(v, graded_kron(lie.ad[a], Dmats[b])) for (a, b), v in lie.killing_inv.items()])
    IminusP = bundle.I - bundle.P
    Ct_minus = (IminusP @ Ct @ IminusP).scale(Q(model.omega, 4))
    bundle.extra.update(model=model, D=Dmats, anticomm_scalar=scalar, Ct=Ct, Ct_minus=Ct_minus)
    return bundle


class SlEmbedded:
    """Operators of the adjoint square realised on ``V^{(x)4}``."""

    def __init__(self, model: SlModel):
        self.model = model
        self.space = model.V.power(4)
        Ib = model.I_bar
        self.I = place(Ib, [1, 2], 4) @ place(Ib, [3, 4], 4)
        self.w = Q(model.omega)

    def P_(self, a: int, b: int) -> SuperMatrix:
        return place_pair(self.model.P, a, b, 4)

    def K_(self, a: int, b: int) -> SuperMatrix:
        return place_pair(self.model.K, a, b, 4)

    @cached_property
    def one(self) -> SuperMatrix:
        return SuperMatrix.identity(self.space)

    @cached_property
    def P4(self) -> SuperMatrix:
        return self.P_(1, 3) @ self.P_(2, 4)

    @cached_property
    def P(self) -> SuperMatrix:
        return self.I @ self.P4

    @cached_property
    def C(self) -> SuperMatrix:
        return (self.P_(1, 3) + self.P_(2, 4) - self.K_(3, 2) - self.K_(1, 4)).scale(1 / (2 * self.w))

    @cached_property
    def K(self) -> SuperMatrix:
        w = self.w
        K12K34 = self.K_(1, 2) @ self.K_(3, 4)
        K32K14 = self.K_(3, 2) @ self.K_(1, 4)
        return linear_combination([
            (1, K32K14),
            (-1 / w, self.P_(2, 4) @ K12K34),
            (-1 / w, self.P_(1, 3) @ K32K14),
            (1 / (w * w), K12K34),
        ])

    @cached_property
    def Cm(self) -> SuperMatrix:
        return ((self.P4 - self.one) @ (self.K_(1, 4) + self.K_(3, 2))).scale(1 / (4 * self.w))

    @cached_property
    def Cp(self) -> SuperMatrix:
        sym = self.one + self.P4
        core = (self.P_(1, 3) + self.P_(2, 4)).scale(2) - sym @ self.K_(3, 2) - sym @ self.K_(1, 4)
        return core.scale(1 / (4 * self.w))

    @cached_property
    def Ct_minus(self) -> SuperMatrix:
        w = self.w
        Ks = self.K_(1, 2) + self.K_(3, 4) + self.K_(3, 2) + self.K_(1, 4)
        return ((self.P_(1, 3) - self.P_(2, 4)) @ (self.one - Ks.scale(1 / w))).scale(Q(1, 2))


def sl_embedded(bundle: OperatorBundle) -> SlEmbedded:
    emb = bundle.extra.get("embedded")
    if emb is None:
        emb = SlEmbedded(bundle.extra["model"])
        bundle.extra["embedded"] = emb
    return emb


def ct_minus_relations(bundle: OperatorBundle) -> dict[str, bool]:
    Ct, Cm = bundle.extra["Ct_minus"], bundle.Cm
    Pp, Pm, I = bundle.P_plus, bundle.P_minus, bundle.I
    return {
        "P+ Ct- = Ct- P+ = 0": (Pp @ Ct).is_zero() and (Ct @ Pp).is_zero(),
        "Ct- C- = C- Ct- = 0": (Ct @ Cm).is_zero() and (Cm @ Ct).is_zero(),
        "Ct-^2 = 2 C- + P-": Ct @ Ct == Cm.scale(2) + Pm,
        "Ct-(Ct- + I)(Ct- - I) = 0": (Ct @ (Ct + I) @ (Ct - I)).is_zero(),
    }


def anticommutator_scalar_check(bundle: OperatorBundle) -> bool:
    """The identity part of ``[X_b, X_d]_+`` equals ``g_bd / w^2``."""
    model = bundle.extra["model"]
    w = Q(model.omega)
    return bundle.extra["anticomm_scalar"] == model.lie.killing.scale(1 / (w * w))


def d_bar_check(model: SlModel, bundle: OperatorBundle) -> bool:
    """``D`` from the anticommutator against ``(1 - K/w) Dbar`` on pair coordinates."""
    w = Q(model.omega)
    d = model.V.dim
    par = model.V.parities
    Ib = model.I_bar
    E = model.E
    pair = model.pair_space
    for b in range(model.dim):
        # Dbar^{rs}_{ij,km} contracted with the pair coordinates of X_b over (ij)
        col_b = {r: v for (r, c), v in E.items() if c == b}
        rows: dict[int, dict[int, Rational]] = {}
        for ij, xb in col_b.items():
            i, j = divmod(ij, d)
            for k in range(d):
                for m in range(d):
                    km = k * d + m
                    terms = []
                    if j == k:
                        terms.append((i * d + m, ONE))
                    if i == m:
                        terms.append((k * d + j, Q(_sign((par[i] + par[j]) * (par[k] + par[m])))))
                    if i == j:
                        terms.append((k * d + m, -2 * Q(_sign(par[i])) / w))
                    if k == m:
                        terms.append((i * d + j, -2 * Q(_sign(par[m])) / w))
                    for rs, v in terms:
                        line = rows.setdefault(rs, {})
                        line[km] = line.get(km, Q(0)) + xb * v
        Dbar_b = SuperMatrix(pair, pair, rows)
        expected = model.R @ Ib @ Dbar_b @ E
        if expected != bundle.extra["D"][b]:
            return False
    return True


# ---------------------------------------------------------------------------
# Characteristic identities


def sl_generic_roots(omega: int) -> list[Rational]:
    w = Q(omega)
    return [Q(0), Q(-1), 1 / w, -1 / w, Q(-1, 2)]


def sl_char_identity(omega: int) -> CharIdentity:
    omega = int(omega)
    if omega <= 0:
        raise AlgebraError(f"omega={omega}: sl(M|N) requires M > N")
    if omega == 1:
        return CharIdentity("C", PolySpec.simple([0, -1, 1, "-1/2"]), {"K": "1/2"},
                            PolySpec([(0, 1), (-1, 2), (1, 1), ("-1/2", 1)]))
    if omega == 2:
        return CharIdentity("C", PolySpec.simple([0, -1, "1/2", "-1/2"]),
                            {"P_plus": "1/16", "K": "1/16", "Cp2": "-1/4"},
                            PolySpec([(0, 1), (-1, 1), ("1/2", 1), ("-1/2", 2)]))
    return CharIdentity("C", PolySpec.simple(sl_generic_roots(omega)))


def ct_minus_identity() -> CharIdentity:
    return CharIdentity("Ct_minus", PolySpec.simple([0, 1, -1]))


# ---------------------------------------------------------------------------
# Projectors


def sl_adjoint_projectors(bundle: OperatorBundle) -> ProjectorSystem:
    w = bundle.omega
    if w <= 0:
        raise AlgebraError(f"omega={w}: sl(M|N) requires M > N")
    W = Q(w)
    Cp, Cm, K = bundle.Cp, bundle.Cm, bundle.K
    Cp2 = Cp @ Cp
    Pp, Pm = bundle.P_plus, bundle.P_minus
    Ct = bundle.extra["Ct_minus"]
    half = Q(1, 2)
    lc = lambda *t: linear_combination([(Q(k), op) for k, op in t])
    projs = [
        Projector("Pt-1(-)", lc((1, Cm), (half, Pm), (-half, Ct)), Q(0), "-"),
        Projector("Pt1(-)", lc((1, Cm), (half, Pm), (half, Ct)), Q(0), "-"),
        Projector("P2(-)", Cm.scale(-2), Q(-1, 2), "-"),
    ]
    if w == 1:
        projs += [
            Projector("P1(+)", lc((-half, Pp), (Q(-5, 4), K), (-half, Cp), (1, Cp2)), Q(-1), "+", multiplicity=2),
            Projector("P2(+)", lc((Q(1, 6), Pp), (Q(-1, 12), K), (half, Cp), (Q(1, 3), Cp2)), Q(1), "+"),
            Projector("P3(+)", lc((Q(4, 3), Pp), (Q(4, 3), K), (Q(-4, 3), Cp2)), Q(-1, 2), "+"),
        ]
    elif w == 2:
        projs += [
            Projector("P1(+)", K.scale(Q(1, 3)), Q(-1), "+"),
            Projector("P2(+)", lc((Q(1, 4), Pp), (Q(-1, 12), K), (1, Cp), (1, Cp2)), Q(1, 2), "+"),
            Projector("P3(+)", lc((Q(3, 4), Pp), (Q(-1, 4), K), (-1, Cp), (-1, Cp2)), Q(-1, 2), "+", multiplicity=2),
        ]
    else:
        projs += [
            Projector("P1(+)", K.scale(1 / (W * W - 1)), Q(-1), "+"),
            Projector("P2(+)", lc((-W / (2 * (W + 1) * (W + 2)), K), (W * W / (W + 2), Cp2), (W / 2, Cp),
                                  (W / (2 * (W + 2)), Pp)), 1 / W, "+"),
            Projector("P3(+)", lc((W / (2 * (W - 1) * (W - 2)), K), (-W * W / (W - 2), Cp2), (-W / 2, Cp),
                                  (W / (2 * (W - 2)), Pp)), -1 / W, "+"),
            Projector("P4(+)", lc((W * W, Cp2), (-1, Pp), (-1, K)).scale(4 / (W * W - 4)), Q(-1, 2), "+"),
        ]
    return ProjectorSystem(projs, bundle.I, bundle.C)


def ct_minus_eigen_checks(bundle: OperatorBundle, system: ProjectorSystem) -> dict[str, bool]:
    Ct = bundle.extra["Ct_minus"]
    out = {}
    for name, ev in (("Pt-1(-)", -1), ("Pt1(-)", 1), ("P2(-)", 0)):
        p = system[name].operator
        out[name] = Ct @ p == p.scale(ev)
    return out


# ---------------------------------------------------------------------------
# Dimension tables


def sl_expected_traces(M: int, N: int) -> dict[str, tuple[Rational, Rational]]:
    w, x = Q(M - N), Q(M + N)
    if w in (0, 1, 2) or w < 0:
        raise AlgebraError(f"omega={w}: closed-form dimension tables need omega >= 3")
    x2 = x * x
    tr = {
        "Pt-1(-)": ((x2 - 2) ** 2 - w * w) / 4,
        "Pt1(-)": ((x2 - 2) ** 2 - w * w) / 4,
        "P2(-)": x2 - 1,
        "P1(+)": Q(1),
        "P2(+)": ((x2 - 1) ** 2 + 2 * (x2 + 1) * (w - 1) + (w - 1) ** 2) / 4,
        "P3(+)": ((x2 - 1) ** 2 - 2 * (x2 + 1) * (w + 1) + (w + 1) ** 2) / 4,
        "P4(+)": x2 - 1,
    }
    st = {
        "Pt-1(-)": (w * w - 1) * (w * w - 4) / 4,
        "Pt1(-)": (w * w - 1) * (w * w - 4) / 4,
        "P2(-)": w * w - 1,
        "P1(+)": Q(1),
        "P2(+)": w * w * (w - 1) * (w + 3) / 4,
        "P3(+)": w * w * (w + 1) * (w - 3) / 4,
        "P4(+)": w * w - 1,
    }
    return {k: (tr[k], st[k]) for k in tr}


def sl_expected_dims(M: int, N: int) -> dict[str, tuple[int, int]]:
    if M < N:
        M, N = N, M
    if M - N in (0, 1, 2):
        raise AlgebraError(f"omega={M - N}: closed-form dimension tables need omega >= 3")
    m, n = Q(M), Q(N)
    t = (m * m - 1) * (m * m - 4) / 4 + (n * n - 1) * (n * n - 4) / 4 + (m * n + 1) * (3 * m * n - 2) / 2
    even = {
        "Pt-1(-)": t,
        "Pt1(-)": t,
        "P2(-)": m * m + n * n - 1,
        "P1(+)": Q(1),
        "P2(+)": m * m * (m - 1) * (m + 3) / 4 + n * n * (n + 1) * (n - 3) / 4 + m * n * (3 * m * n - m + n - 1) / 2,
        "P3(+)": m * m * (m + 1) * (m - 3) / 4 + n * n * (n - 1) * (n + 3) / 4 + m * n * (3 * m * n + m - n - 1) / 2,
        "P4(+)": m * m + n * n - 1,
    }
    odd = {
        "Pt-1(-)": m * n * (m * m + n * n - 2),
        "Pt1(-)": m * n * (m * m + n * n - 2),
        "P2(-)": 2 * m * n,
        "P1(+)": Q(0),
        "P2(+)": m * n * (m * (m + 1) + n * (n - 1) - 2),
        "P3(+)": m * n * (m * (m - 1) + n * (n + 1) - 2),
        "P4(+)": 2 * m * n,
    }
    return {k: (int(even[k]), int(odd[k])) for k in even}


# ---------------------------------------------------------------------------
# Relations among P and K placements on V^{(x)4}


def sl_k_relations(model: SlModel) -> dict[str, bool]:
    """The relation set for ``P_ab``, ``K_ab`` on ``V^{(x)4}`` over all distinct slots."""
    w = Q(model.omega)
    P = {(a, b): place_pair(model.P, a, b, 4) for a in range(1, 5) for b in range(1, 5) if a != b}
    K = {(a, b): place_pair(model.K, a, b, 4) for a in range(1, 5) for b in range(1, 5) if a != b}
    res = {
        "K_ab K_ab = w K_ab": all(K[k] @ K[k] == K[k].scale(w) for k in K),
        "P_ab K_ad K_bc = P_cd K_ad K_bc": True,
        "K_ad K_bc P_ab = K_ad K_bc P_cd": True,
        "K_ab P_ab K_bc = K_ab P_ab P_ac": True,
        "K_ab P_ab P_ac = P_ac P_bc K_bc": True,
        "K_ab P_bc K_bc = K_ab P_ab P_ac": True,
    }
    for a, b, c, d in itertools.permutations(range(1, 5), 4):
        KK = K[a, d] @ K[b, c]
        if P[a, b] @ KK != P[c, d] @ KK:
            res["P_ab K_ad K_bc = P_cd K_ad K_bc"] = False
        if KK @ P[a, b] != KK @ P[c, d]:
            res["K_ad K_bc P_ab = K_ad K_bc P_cd"] = False
        mid = K[a, b] @ P[a, b] @ P[a, c]
        if K[a, b] @ P[a, b] @ K[b, c] != mid:
            res["K_ab P_ab K_bc = K_ab P_ab P_ac"] = False
        if mid != P[a, c] @ P[b, c] @ K[b, c]:
            res["K_ab P_ab P_ac = P_ac P_bc K_bc"] = False
        if K[a, b] @ P[b, c] @ K[b, c] != mid:
            res["K_ab P_bc K_bc = K_ab P_ab P_ac"] = False
    return res
