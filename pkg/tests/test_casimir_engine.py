import gmpy2
import pytest
from hypothesis import given, settings, strategies as st

from supercas.casimir_engine import (
    LieSuperalgebra,
    PolySpec,
    Projector,
    ProjectorSystem,
    brauer_relations,
    check_poly,
    dims_of,
    generalized_projectors,
    is_minimal,
    poly_product,
    projector_from_roots,
    verify_system,
    verify_ybe,
)
from supercas.superlinalg import GradedSpace, Q, SuperMatrix, superperm, supertrace, tensor

half = Q(1, 2)


def diag(parities, values):
    V = GradedSpace(parities)
    return SuperMatrix.from_entries(V, V, {(i, i): v for i, v in enumerate(values)})


@pytest.fixture(scope="module")
def osp12():
    """osp(1|2) from its 3x3 defining matrices (even h, e, f and odd x, y)."""
    V = GradedSpace([0, 1, 1])

    def m(entries):
        return SuperMatrix.from_entries(V, V, entries)

    basis = [
        m({(1, 1): 1, (2, 2): -1}),
        m({(1, 2): 1}),
        m({(2, 1): 1}),
        m({(0, 2): 1, (1, 0): 1}),
        m({(0, 1): 1, (2, 0): -1}),
    ]
    return LieSuperalgebra(V, ["h", "e", "f", "x", "y"], basis, [0, 0, 0, 1, 1])


def test_polyspec_validation():
    assert PolySpec.simple([0, "1/2"]).degree == 2
    assert PolySpec([(1, 2), (0, 1)]).describe() == "1^2, 0"
    with pytest.raises(ValueError):
        PolySpec.simple([1, 1])
    with pytest.raises(ValueError):
        PolySpec([(1, 0)])


def test_minimal_polynomial_of_diagonal():
    C = diag([0, 0, 1], [1, 1, 2])
    one = SuperMatrix.identity(C.row_space)
    spec = PolySpec.simple([1, 2])
    assert check_poly(C, spec, None, one).equal
    assert is_minimal(C, spec, one)
    # an extra root is not minimal
    assert not is_minimal(C, PolySpec.simple([1, 2, 3]), one)


def test_jordan_block_needs_multiplicity_two():
    V = GradedSpace([0, 0, 1])
    C = SuperMatrix.from_entries(V, V, {(0, 0): 1, (0, 1): 1, (1, 1): 1, (2, 2): -1})
    one = SuperMatrix.identity(V)
    assert not poly_product(C, PolySpec.simple([1, -1]), one).is_zero()
    spec = PolySpec([(1, 2), (-1, 1)])
    assert check_poly(C, spec, None, one).equal and is_minimal(C, spec, one)
    p1, p2 = generalized_projectors(C, spec, one)
    assert p1 == diag([0, 0, 1], [1, 1, 0])
    assert p2 == diag([0, 0, 1], [0, 0, 1])


def test_projector_from_roots_and_dims():
    C = diag([0, 1, 1, 0], [3, 3, 5, 5])
    one = SuperMatrix.identity(C.row_space)
    spec = PolySpec.simple([3, 5])
    P3 = projector_from_roots(C, spec, 0, one)
    assert P3 == diag([0, 1, 1, 0], [1, 1, 0, 0])
    assert dims_of(P3) == (1, 1)
    with pytest.raises(ValueError):
        dims_of(C)


def test_verify_system_reports_failures():
    one = SuperMatrix.identity(GradedSpace([0, 0]))
    a = diag([0, 0], [1, 0])
    good = ProjectorSystem([Projector("a", a, Q(1)), Projector("b", one - a, Q(0))], one, a)
    assert verify_system(good).ok
    bad = ProjectorSystem([Projector("a", a, Q(1)), Projector("b", a, Q(0))], one, a)
    rep = verify_system(bad)
    assert not rep.complete and not rep.orthogonal and not rep.eigen["b"]


def test_osp12_structure(osp12):
    assert osp12.jacobi_defects() == []
    g = osp12.killing
    assert osp12.killing_inv @ g == SuperMatrix.identity(osp12.space)
    # graded symmetry of the Killing form: g_ab = (-1)^{[a][b]} g_ba
    par = osp12.parities
    for (a, b), v in g.items():
        assert g[b, a] == (-1) ** (par[a] * par[b]) * v
    # ad is a representation: [ad a, ad b} = f^c_ab ad c
    ad = osp12.ad
    for a in range(5):
        for b in range(5):
            s = -1 if not (par[a] and par[b]) else 1
            lhs = ad[a] @ ad[b] + (ad[b] @ ad[a]).scale(s)
            rhs = SuperMatrix.zero(osp12.space)
            for c in range(5):
                if ad[a][c, b]:
                    rhs = rhs + ad[c].scale(ad[a][c, b])
            assert lhs == rhs


def test_osp12_casimir_commutes_and_trace(osp12):
    C = osp12.split_casimir(osp12.basis)
    V = osp12.V
    P = superperm(V)
    assert C @ P == P @ C
    # str C = sum gbar^{ab} str X_a str X_b = 0 for supertraceless generators
    assert supertrace(C) == 0
    Cad = osp12.split_casimir(osp12.ad)
    # the quadratic Casimir in the adjoint is 1 with the Killing normalisation
    from supercas.superlinalg import partial_supertrace_second
    W = osp12.space
    two = partial_supertrace_second(Cad @ Cad)
    assert two == SuperMatrix.identity(W)


def _r_yang(V):
    P = superperm(V)
    one = SuperMatrix.identity(tensor(V, V))
    return lambda u: (one.scale(u) + P).scale(1 / (1 - u))


@settings(max_examples=10, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=3),
       st.fractions(min_value=-3, max_value=3, max_denominator=7),
       st.fractions(min_value=-3, max_value=3, max_denominator=7))
def test_yang_r_matrix_solves_ybe(pars, u, v):
    V = GradedSpace(pars)
    u, v = Q(u), Q(v)
    poles = lambda x: x == 1
    for res in verify_ybe(_r_yang(V), [(u, v)], V, poles):
        if res.note:
            continue
        assert res.ybe and res.unitarity


@settings(max_examples=10, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=2, max_size=3),
       st.integers(1, 5))
def test_ybe_negative_control(pars, k):
    """Deforming R(u) = u + P by a non-invariant diagonal term must be detected."""
    V = GradedSpace(pars)
    d = V.dim
    base = _r_yang(V)
    bump = SuperMatrix.from_entries(tensor(V, V), tensor(V, V), {(0, 0): k})

    def R(u):
        return base(u) + bump.scale(u)

    res = verify_ybe(R, [(Q(1, 3), Q(1, 5)), (Q(2, 7), Q(-3, 11))], V, lambda x: x == 1)
    assert not all(r.ybe for r in res)


def test_brauer_relations_for_orthogonal_vector_space():
    V = GradedSpace([0, 0, 0])
    d = V.dim
    W = tensor(V, V)
    K = SuperMatrix.from_entries(W, W, {(i * d + i, j * d + j): 1 for i in range(d) for j in range(d)})
    assert all(brauer_relations(superperm(V), K, 3).values())
    assert not all(brauer_relations(superperm(V), K, 2).values())
    assert not all(brauer_relations(superperm(V), K.scale(2), 3).values())
