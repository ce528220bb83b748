"""Algebra-agnostic split Casimir machinery.

* ``LieSuperalgebra``: a matrix Lie superalgebra given by an explicit
  homogeneous basis of defining matrices; structure constants, adjoint
  matrices, Cartan-Killing metric and its inverse, split Casimir operators.
* characteristic polynomials with exact residuals, projectors onto
  (generalised) eigenspaces, dimensions of projector images;
* component-wise graded Yang-Baxter and unitarity checks, Brauer relations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .superlinalg import (
    ONE,
    ZERO,
    GradedSpace,
    Q,
    Rational,
    SuperMatrix,
    format_rational,
    graded_kron,
    inverse,
    left_inverse,
    linear_combination,
    outer,
    place,
    superperm,
    supertrace,
    tensor,
    trace,
)


class AlgebraError(ValueError):
    """Invalid algebra parameters (reported as a usage error)."""


# ---------------------------------------------------------------------------
# Lie superalgebra from an explicit matrix basis


class LieSuperalgebra:
    """Lie superalgebra spanned by homogeneous matrices acting on ``V``."""

    def __init__(self, V: GradedSpace, labels: Sequence, basis: Sequence[SuperMatrix], parities: Sequence[int]):
        if not (len(labels) == len(basis) == len(parities)):
            raise ValueError("labels, basis and parities differ in length")
        self.V = V
        self.labels = tuple(labels)
        self.basis = tuple(basis)
        self.parities = tuple(int(p) for p in parities)
        self.space = GradedSpace(self.parities)
        self.dim = len(self.basis)
        self._index = {lab: a for a, lab in enumerate(self.labels)}
        self._vec = _vectorize(V, self.basis)
        self._coord = left_inverse(self._vec)
        self._ad = None
        self._killing = None
        self._killing_inv = None

    def index(self, label) -> int:
        return self._index[label]

    @property
    def sdim(self) -> int:
        return self.space.sdim

    @property
    def vectorization(self) -> SuperMatrix:
        """Columns are the flattened basis matrices (row-major ``(a, b)``)."""
        return self._vec

    def coordinates(self, A: SuperMatrix, check: bool = True) -> dict[int, Rational]:
        """Expansion coefficients of ``A`` in the basis."""
        d = self.V.dim
        vec = {r * d + c: v for (r, c), v in A.items()}
        coords: dict[int, Rational] = {}
        for a, row in self._coord._rows.items():
            s = ZERO
            for k, w in row.items():
                x = vec.get(k)
                if x:
                    s += w * x
            if s:
                coords[a] = s
        if check:
            back = linear_combination([(v, self.basis[a]) for a, v in coords.items()]) if coords else SuperMatrix.zero(self.V)
            if back != A:
                raise ValueError("matrix does not lie in the span of the basis")
        return coords

    def bracket(self, a: int, b: int) -> SuperMatrix:
        X, Y = self.basis[a], self.basis[b]
        if self.parities[a] and self.parities[b]:
            return X @ Y + Y @ X
        return X @ Y - Y @ X

    @property
    def ad(self) -> tuple[SuperMatrix, ...]:
        """Adjoint matrices ``ad(X_a)^c_b = X^c_{ab}``."""
        if self._ad is None:
            D = self.dim
            rows = [dict() for _ in range(D)]
            for a in range(D):
                for b in range(D):
                    coords = self.coordinates(self.bracket(a, b))
                    for c, v in coords.items():
                        rows[a].setdefault(c, {})[b] = v
            self._ad = tuple(SuperMatrix(self.space, self.space, r) for r in rows)
        return self._ad

    def structure_constant(self, c: int, a: int, b: int) -> Rational:
        return self.ad[a][c, b]

    @property
    def killing(self) -> SuperMatrix:
        """``g_ab = str(ad(X_a) ad(X_b))``."""
        if self._killing is None:
            ad = self.ad
            par = self.parities
            D = self.dim
            rows = {}
            for a in range(D):
                A = ad[a]
                for b in range(D):
                    if par[a] != par[b]:
                        continue
                    B = ad[b]
                    s = ZERO
                    for c, arow in A._rows.items():
                        for d_, x in arow.items():
                            y = B[d_, c]
                            if y:
                                s = s - x * y if par[c] else s + x * y
                    if s:
                        rows.setdefault(a, {})[b] = s
            self._killing = SuperMatrix(self.space, self.space, rows)
        return self._killing

    @property
    def killing_inv(self) -> SuperMatrix:
        if self._killing_inv is None:
            try:
                self._killing_inv = inverse(self.killing)
            except ValueError:
                raise AlgebraError("Killing metric degenerate") from None
        return self._killing_inv

    def split_casimir(self, rep: Sequence[SuperMatrix]) -> SuperMatrix:
        """``sum gbar^{ab} T(X_a) (x) T(X_b)`` for representation matrices ``rep``."""
        gi = self.killing_inv
        terms = [(v, graded_kron(rep[a], rep[b])) for (a, b), v in gi.items()]
        return linear_combination(terms)

    def jacobi_defects(self, triples: Iterable[tuple[int, int, int]] | None = None) -> list[tuple[int, int, int]]:
        """Basis triples on which the graded Jacobi identity fails."""
        ad = self.ad
        p = self.parities
        bad = []
        D = self.dim
        it = triples if triples is not None else itertools.product(range(D), repeat=3)
        for x, y, z in it:
            # (-1)^{xz}[X,[Y,Z]] + (-1)^{yx}[Y,[Z,X]] + (-1)^{zy}[Z,[X,Y]]
            total: dict[int, Rational] = {}
            for s1, u, v, w in ((p[x] * p[z], x, y, z), (p[y] * p[x], y, z, x), (p[z] * p[y], z, x, y)):
                for c in range(D):
                    coeff = ad[v][c, w]
                    if not coeff:
                        continue
                    for e in range(D):
                        val = ad[u][e, c]
                        if val:
                            t = coeff * val
                            total[e] = total.get(e, ZERO) + (-t if s1 & 1 else t)
            if any(total.values()):
                bad.append((x, y, z))
        return bad


def _vectorize(V: GradedSpace, basis: Sequence[SuperMatrix]) -> SuperMatrix:
    d = V.dim
    rows: dict[int, dict[int, Rational]] = {}
    for a, X in enumerate(basis):
        for (r, c), v in X.items():
            rows.setdefault(r * d + c, {})[a] = v
    pair = tensor(V, V)
    return SuperMatrix(pair, GradedSpace([_parity_of(X, V) for X in basis]), rows)


def _parity_of(X: SuperMatrix, V: GradedSpace) -> int:
    blocks = X.parity_blocks()
    if len(blocks) != 1:
        raise ValueError("basis matrices must be homogeneous and nonzero")
    return blocks.pop()


# ---------------------------------------------------------------------------
# Operator bundle


@dataclass
class OperatorBundle:
    """Ad-invariant operators on ``V_ad (x) V_ad`` in the explicit adjoint basis.

    ``extra`` holds algebra-specific operators (e.g. ``Ct_minus`` for sl).
    ``E`` maps explicit coordinates to pair coordinates in ``V (x) V`` and
    ``R`` is the matching left inverse, so ``R @ E = 1``.
    """

    algebra: str
    omega: int
    sdim: int
    I: SuperMatrix
    P: SuperMatrix
    K: SuperMatrix
    C: SuperMatrix
    Cp: SuperMatrix
    Cm: SuperMatrix
    E: SuperMatrix
    R: SuperMatrix
    extra: dict = field(default_factory=dict)
    _E4: SuperMatrix | None = None
    _R4: SuperMatrix | None = None

    @property
    def P_plus(self) -> SuperMatrix:
        return (self.I + self.P).scale(Q(1, 2))

    @property
    def P_minus(self) -> SuperMatrix:
        return (self.I - self.P).scale(Q(1, 2))

    def restrict(self, X: SuperMatrix) -> SuperMatrix:
        """Carry an operator on ``V^{(x)4}`` over to the explicit adjoint basis."""
        if self._E4 is None:
            self._E4 = graded_kron(self.E, self.E)
            self._R4 = graded_kron(self.R, self.R)
        return self._R4 @ X @ self._E4


def adjoint_bundle(lie: LieSuperalgebra, algebra: str, omega: int, E: SuperMatrix, R: SuperMatrix) -> OperatorBundle:
    """Restricted-picture bundle built by metric contraction of adjoint matrices."""
    W = lie.space
    I = SuperMatrix.identity(tensor(W, W))
    P = superperm(W)
    K = outer(lie.killing_inv, lie.killing)
    C = lie.split_casimir(lie.ad)
    half = Q(1, 2)
    Cp = ((I + P) @ C).scale(half)
    Cm = ((I - P) @ C).scale(half)
    return OperatorBundle(algebra, omega, lie.sdim, I, P, K, C, Cp, Cm, E, R)


# ---------------------------------------------------------------------------
# Polynomials in an operator


@dataclass(frozen=True)
class PolySpec:
    """Roots with multiplicities of ``prod (C - a_i)^{k_i}``."""

    roots: tuple[tuple[Rational, int], ...]

    def __init__(self, roots):
        items = tuple((Q(a), int(k)) for a, k in roots)
        if len({a for a, _ in items}) != len(items):
            raise ValueError("roots must be pairwise distinct")
        if any(k < 1 for _, k in items):
            raise ValueError("multiplicities must be >= 1")
        object.__setattr__(self, "roots", items)

    @classmethod
    def simple(cls, roots: Iterable) -> "PolySpec":
        return cls([(a, 1) for a in roots])

    @property
    def degree(self) -> int:
        return sum(k for _, k in self.roots)

    def describe(self) -> str:
        return ", ".join(f"{format_rational(a)}^{k}" if k > 1 else format_rational(a) for a, k in self.roots)


def shifted(C: SuperMatrix, a, identity: SuperMatrix) -> SuperMatrix:
    a = Q(a)
    return C - identity.scale(a) if a else C


def poly_product(C: SuperMatrix, spec: PolySpec, identity: SuperMatrix) -> SuperMatrix:
    """``prod_i (C - a_i * identity)^{k_i}``.

    ``identity`` is the embedded identity of the representation space; for
    restricted operators it is the true identity.
    """
    result = identity
    for a, k in spec.roots:
        factor = shifted(C, a, identity)
        for _ in range(k):
            result = result @ factor
    return result


@dataclass
class PolyReport:
    equal: bool
    residual: SuperMatrix
    difference_max_numerator: int

    @property
    def is_zero(self) -> bool:
        return self.residual.is_zero()


def check_poly(C: SuperMatrix, spec: PolySpec, expected: SuperMatrix | None, identity: SuperMatrix) -> PolyReport:
    """Compare ``prod (C - a_i)^{k_i}`` against ``expected`` (zero if ``None``)."""
    residual = poly_product(C, spec, identity)
    diff = residual if expected is None else residual - expected
    return PolyReport(diff.is_zero(), residual, diff.max_abs_numerator())


def is_minimal(C: SuperMatrix, spec: PolySpec, identity: SuperMatrix, expected: SuperMatrix | None = None) -> bool:
    """True if lowering any multiplicity by one breaks ``prod = expected``."""
    for i, (a, k) in enumerate(spec.roots):
        reduced = [r for r in spec.roots]
        if k == 1:
            del reduced[i]
        else:
            reduced[i] = (a, k - 1)
        if not reduced:
            # the empty product is the identity itself
            test = identity
        else:
            test = poly_product(C, PolySpec(reduced), identity)
        target = expected if expected is not None else None
        holds = test.is_zero() if target is None else test == target
        if holds:
            return False
    return True


def _lagrange_factor(C, spec, j, identity):
    aj, _ = spec.roots[j]
    result = identity
    for i, (ai, ki) in enumerate(spec.roots):
        if i == j:
            continue
        denom = aj - ai
        if not denom:
            raise ZeroDivisionError("coincident roots")
        factor = shifted(C, ai, identity).scale(1 / denom)
        for _ in range(ki):
            result = result @ factor
    return result


def projector_from_roots(C: SuperMatrix, spec: PolySpec, j: int, identity: SuperMatrix) -> SuperMatrix:
    """Eigenprojector ``prod_{i != j} (C - a_i)/(a_j - a_i)``."""
    if any(k != 1 for _, k in spec.roots):
        raise ValueError("repeated roots: use generalized_projectors")
    return _lagrange_factor(C, spec, j, identity)


def generalized_projectors(C: SuperMatrix, spec: PolySpec, identity: SuperMatrix,
                           check_minimal: bool = True) -> list[SuperMatrix]:
    """Projectors onto generalised eigenspaces.

    ``P_j = 1 - (1 - prod_{i != j} ((C - a_i)/(a_j - a_i))^{k_i})^{k_j}``.
    """
    if check_minimal:
        if not poly_product(C, spec, identity).is_zero():
            raise ValueError(f"operator does not satisfy the identity with roots {spec.describe()}")
        if not is_minimal(C, spec, identity):
            raise ValueError(f"multiplicities not minimal for roots {spec.describe()}")
    out = []
    for j, (aj, kj) in enumerate(spec.roots):
        q = _lagrange_factor(C, spec, j, identity)
        if kj == 1:
            out.append(q)
            continue
        comp = identity - q
        acc = comp
        for _ in range(kj - 1):
            acc = acc @ comp
        out.append(identity - acc)
    return out


def dims_of(projector: SuperMatrix, check: bool = True) -> tuple[int, int]:
    """``((tr + str)/2, (tr - str)/2)`` of an idempotent."""
    if check and projector @ projector != projector:
        raise ValueError("operator is not idempotent")
    tr = trace(projector)
    st = supertrace(projector)
    even = (tr + st) / 2
    odd = (tr - st) / 2
    if even.denominator != 1 or odd.denominator != 1 or even < 0 or odd < 0:
        raise ValueError(f"non-integer or negative dimensions ({even}, {odd})")
    return int(even), int(odd)


# ---------------------------------------------------------------------------
# Projector systems


@dataclass
class Projector:
    name: str
    operator: SuperMatrix
    eigenvalue: Rational | None
    sector: str = ""
    multiplicity: int = 1
    expected_dims: tuple[int, int] | None = None

    @property
    def generalized(self) -> bool:
        return self.multiplicity > 1


@dataclass
class ProjectorSystem:
    """Named projectors together with the operator whose eigenspaces they cut."""

    projectors: list[Projector]
    identity: SuperMatrix
    generator: SuperMatrix | None = None
    notes: list[str] = field(default_factory=list)

    def __iter__(self):
        return iter(self.projectors)

    def __getitem__(self, name: str) -> Projector:
        for p in self.projectors:
            if p.name == name:
                return p
        raise KeyError(name)

    @property
    def names(self) -> list[str]:
        return [p.name for p in self.projectors]

    def total(self) -> SuperMatrix:
        return linear_combination([(1, p.operator) for p in self.projectors])


@dataclass
class SystemReport:
    complete: bool
    orthogonal: bool
    idempotent: bool
    eigen: dict[str, bool]
    minimal: dict[str, bool]
    dims: dict[str, tuple[int, int]]
    dim_errors: dict[str, str]

    @property
    def ok(self) -> bool:
        return (self.complete and self.orthogonal and self.idempotent and all(self.eigen.values())
                and all(self.minimal.values()) and not self.dim_errors)


def verify_system(system: ProjectorSystem, generator: SuperMatrix | None = None) -> SystemReport:
    """Completeness, orthogonality, idempotence, eigen-equations and dimensions."""
    C = generator if generator is not None else system.generator
    ops = [p.operator for p in system.projectors]
    products = {}
    for i, A in enumerate(ops):
        for j, B in enumerate(ops):
            products[i, j] = A @ B
    idempotent = all(products[i, i] == ops[i] for i in range(len(ops)))
    orthogonal = all(products[i, j].is_zero() for i in range(len(ops)) for j in range(len(ops)) if i != j)
    complete = system.total() == system.identity
    eigen, minimal, dims, errors = {}, {}, {}, {}
    for p in system.projectors:
        if C is not None and p.eigenvalue is not None:
            factor = shifted(C, p.eigenvalue, system.identity)
            acc = p.operator
            previous = acc
            for _ in range(p.multiplicity):
                previous = acc
                acc = factor @ acc
            eigen[p.name] = acc.is_zero()
            minimal[p.name] = not previous.is_zero()
        try:
            dims[p.name] = dims_of(p.operator, check=False)
        except ValueError as exc:
            errors[p.name] = str(exc)
    return SystemReport(complete, orthogonal, idempotent, eigen, minimal, dims, errors)


# ---------------------------------------------------------------------------
# Yang-Baxter and Brauer checks


@dataclass
class YBEResult:
    u: Rational
    v: Rational
    ybe: bool
    unitarity: bool
    mismatches: int
    note: str = ""


def _components(R: SuperMatrix, d: int) -> dict[int, list[tuple[int, int, int, Rational]]]:
    """R entries grouped by the first upper index: i1 -> [(i2, j1, j2, value)]."""
    out: dict[int, list] = {}
    for (r, c), v in R.items():
        i1, i2 = divmod(r, d)
        j1, j2 = divmod(c, d)
        out.setdefault(i1, []).append((i2, j1, j2, v))
    return out


def ybe_sides(Ru: SuperMatrix, Ruv: SuperMatrix, Rv: SuperMatrix, par: Sequence[int]) -> tuple[dict, dict]:
    """Both sides of the component graded Yang-Baxter equation.

    LHS = R^{i1 i2}_{j1 j2}(u) (-1)^{[j1][j2]} R^{j1 i3}_{k1 j3}(u+v) (-1)^{[k1][j2]} R^{j2 j3}_{k2 k3}(v)
    RHS = R^{i2 i3}_{j2 j3}(v) (-1)^{[i1][j2]} R^{i1 j3}_{j1 k3}(u+v) (-1)^{[j1][j2]} R^{j1 j2}_{k1 k2}(u)
    Keys are ``(i1, i2, i3, k1, k2, k3)``.
    """
    d = len(par)
    by_row = lambda R: {r: R.row(r) for r in range(R.shape[0]) if R.row(r)}
    rows_uv = by_row(Ruv)
    rows_v = by_row(Rv)
    rows_u = by_row(Ru)
    lhs: dict = {}
    for (r1, c1), a in Ru.items():
        i1, i2 = divmod(r1, d)
        j1, j2 = divmod(c1, d)
        s1 = -a if par[j1] & par[j2] else a
        for i3 in range(d):
            row2 = rows_uv.get(j1 * d + i3)
            if not row2:
                continue
            for c2, b in row2.items():
                k1, j3 = divmod(c2, d)
                s2 = s1 * b
                if par[k1] & par[j2]:
                    s2 = -s2
                row3 = rows_v.get(j2 * d + j3)
                if not row3:
                    continue
                for c3, c in row3.items():
                    k2, k3 = divmod(c3, d)
                    key = (i1, i2, i3, k1, k2, k3)
                    lhs[key] = lhs.get(key, ZERO) + s2 * c
    rhs: dict = {}
    for (r1, c1), a in Rv.items():
        i2, i3 = divmod(r1, d)
        j2, j3 = divmod(c1, d)
        for i1 in range(d):
            s1 = -a if par[i1] & par[j2] else a
            row2 = rows_uv.get(i1 * d + j3)
            if not row2:
                continue
            for c2, b in row2.items():
                j1, k3 = divmod(c2, d)
                s2 = s1 * b
                if par[j1] & par[j2]:
                    s2 = -s2
                row3 = rows_u.get(j1 * d + j2)
                if not row3:
                    continue
                for c3, c in row3.items():
                    k1, k2 = divmod(c3, d)
                    key = (i1, i2, i3, k1, k2, k3)
                    rhs[key] = rhs.get(key, ZERO) + s2 * c
    strip = lambda m: {k: v for k, v in m.items() if v}
    return strip(lhs), strip(rhs)


def verify_ybe(R: Callable[[Rational], SuperMatrix], samples: Sequence[tuple], V: GradedSpace,
               poles: Callable[[Rational], bool] | None = None) -> list[YBEResult]:
    """Component graded YBE and unitarity ``P R(u) P R(-u) = 1`` per sample."""
    P = superperm(V)
    one = SuperMatrix.identity(tensor(V, V))
    out = []
    for u, v in samples:
        u, v = Q(u), Q(v)
        bad = [x for x in (u, v, u + v, -u) if poles is not None and poles(x)]
        if bad:
            out.append(YBEResult(u, v, False, False, -1, f"pole hit at {format_rational(bad[0])}"))
            continue
        lhs, rhs = ybe_sides(R(u), R(u + v), R(v), V.parities)
        keys = set(lhs) | set(rhs)
        mism = sum(1 for k in keys if lhs.get(k, ZERO) != rhs.get(k, ZERO))
        unit = P @ R(u) @ P @ R(-u) == one
        out.append(YBEResult(u, v, mism == 0, unit, mism))
    return out


def brauer_relations(P2: SuperMatrix, K2: SuperMatrix, omega, s: int = 4) -> dict[str, bool]:
    """Brauer algebra relations for adjacent placements of ``P2`` and ``K2``."""
    omega = Q(omega)
    sig = {a: place(P2, [a, a + 1], s) for a in range(1, s)}
    kap = {a: place(K2, [a, a + 1], s) for a in range(1, s)}
    one = SuperMatrix.identity(sig[1].row_space)
    res: dict[str, bool] = {}
    for a in range(1, s):
        S, Kx = sig[a], kap[a]
        res[f"s{a}^2=1"] = S @ S == one
        res[f"k{a}^2=w k{a}"] = Kx @ Kx == Kx.scale(omega)
        res[f"s{a}k{a}=k{a}"] = S @ Kx == Kx
        res[f"k{a}s{a}=k{a}"] = Kx @ S == Kx
    for a in range(1, s):
        for b in range(a + 2, s):
            res[f"s{a}s{b}=s{b}s{a}"] = sig[a] @ sig[b] == sig[b] @ sig[a]
            res[f"k{a}k{b}=k{b}k{a}"] = kap[a] @ kap[b] == kap[b] @ kap[a]
            res[f"s{a}k{b}=k{b}s{a}"] = sig[a] @ kap[b] == kap[b] @ sig[a]
            res[f"s{b}k{a}=k{a}s{b}"] = sig[b] @ kap[a] == kap[a] @ sig[b]
    for a in range(1, s - 1):
        S1, S2, K1, K2_ = sig[a], sig[a + 1], kap[a], kap[a + 1]
        res[f"braid s{a}"] = S1 @ S2 @ S1 == S2 @ S1 @ S2
        res[f"k{a}k{a+1}k{a}=k{a}"] = K1 @ K2_ @ K1 == K1
        res[f"k{a+1}k{a}k{a+1}=k{a+1}"] = K2_ @ K1 @ K2_ == K2_
        res[f"s{a}k{a+1}k{a}=s{a+1}k{a}"] = S1 @ K2_ @ K1 == S2 @ K1
        res[f"k{a+1}k{a}s{a+1}=k{a+1}s{a}"] = K2_ @ K1 @ S2 == K2_ @ S1
    return res


def verify_brauer(space: GradedSpace, omega, s: int, P2: SuperMatrix | None = None,
                  K2: SuperMatrix | None = None) -> dict[str, bool]:
    """Brauer relations on ``space^{(x)s}``; ``P2`` defaults to the superpermutation."""
    if s > 4 or s < 2:
        raise ValueError("s must be 2, 3 or 4")
    if P2 is None:
        P2 = superperm(space)
    if K2 is None:
        raise ValueError("a contraction operator K is required")
    return brauer_relations(P2, K2, omega, s)
