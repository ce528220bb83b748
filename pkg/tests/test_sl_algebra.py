import pytest
from hypothesis import assume, given, settings, strategies as st

from supercas.casimir_engine import AlgebraError, check_poly, is_minimal, verify_system, verify_ybe
from supercas.osp_algebra import bundle_relations, residual_operator
from supercas.sl_algebra import (
    anticommutator_scalar_check,
    build_sl,
    ct_minus_eigen_checks,
    ct_minus_identity,
    ct_minus_relations,
    d_bar_check,
    killing_pair_checks,
    pair_basis_checks,
    sl_adjoint_projectors,
    sl_char_identity,
    sl_defining_casimir,
    sl_defining_projectors,
    sl_defining_roots,
    sl_embedded,
    sl_expected_dims,
    sl_expected_traces,
    sl_k_relations,
    sl_r_matrix,
)
from supercas.superlinalg import Q, supertrace

from conftest import sl_instance


def sl_dim_oracle(M, N):
    """gl(M|N) minus the identity: even M^2 + N^2 - 1, odd 2MN."""
    return M * M + N * N - 1, 2 * M * N


@pytest.mark.parametrize("M,N", [(2, 1), (3, 1), (4, 1), (1, 3), (5, 2)])
def test_dimensions_and_normalisation(M, N):
    model = build_sl(M, N)
    assert model.dim_parts == sl_dim_oracle(M, N)
    assert model.sdim == (M - N) ** 2 - 1
    assert model.omega > 0
    assert model.swapped == (M < N)


def test_equal_m_n_rejected():
    with pytest.raises(AlgebraError, match="Killing metric degenerate"):
        build_sl(2, 2)


def test_pair_space_metric(sl41):
    model, _ = sl41
    assert all(killing_pair_checks(model).values())
    assert all(pair_basis_checks(model).values())
    K = model.K
    assert K @ K == K.scale(model.omega)


def test_defining_identity_and_projectors(sl41):
    model, _ = sl41
    C = sl_defining_casimir(model)
    assert C == sl_defining_casimir(model, "contraction")
    spec = sl_defining_roots(model.omega)
    # (w-1)/(2w^2) and -(w+1)/(2w^2) at w = 3
    assert spec.roots == ((Q(1, 9), 1), (Q(-2, 9), 1))
    assert check_poly(C, spec, None, model.one).equal
    assert is_minimal(C, spec, model.one)
    assert verify_system(sl_defining_projectors(model)).ok


def test_defining_projector_dims_graded_squares():
    model = build_sl(4, 1)
    rep = verify_system(sl_defining_projectors(model))
    M, N = 4, 1
    # graded symmetric square: S^2(even) + Lambda^2(odd) even, M*N odd
    assert rep.dims["proj+"] == (M * (M + 1) // 2 + N * (N - 1) // 2, M * N)
    assert rep.dims["proj-"] == (M * (M - 1) // 2 + N * (N + 1) // 2, M * N)


def test_r_matrix_forms_and_ybe(sl31):
    model, _ = sl31
    u = Q(3, 7)
    R = sl_r_matrix(model, u)
    assert R == sl_r_matrix(model, u, "projectors") == sl_r_matrix(model, u, "casimir")
    assert sl_r_matrix(model, 0) == model.P
    res = verify_ybe(lambda x: sl_r_matrix(model, x), [(Q(1, 3), Q(1, 5)), (Q(-2, 7), Q(3, 11))], model.V,
                     lambda x: x == 1)
    assert all(r.ybe and r.unitarity for r in res)
    with pytest.raises(ValueError):
        sl_r_matrix(model, 0, "casimir")


def test_symmetric_structure_constants(sl41):
    model, b = sl41
    assert anticommutator_scalar_check(b)
    assert d_bar_check(model, b)


def test_bundle_and_ct_minus_relations(sl41):
    _, b = sl41
    assert all(bundle_relations(b).values())
    assert all(ct_minus_relations(b).values())
    ct = ct_minus_identity()
    assert check_poly(b.extra["Ct_minus"], ct.spec, None, b.I).equal
    assert is_minimal(b.extra["Ct_minus"], ct.spec, b.I)


@pytest.mark.parametrize("MN", [(4, 1), (3, 1), (2, 1)])
def test_embedded_operators_restrict(MN):
    _, b = sl_instance(*MN)
    emb = sl_embedded(b)
    for name in ("C", "K", "Cp", "Cm"):
        assert b.restrict(getattr(emb, name)) == getattr(b, name)
    assert b.restrict(emb.Ct_minus) == b.extra["Ct_minus"]
    assert b.restrict(emb.P) == b.P
    # bold K squares to (w^2 - 1) K on the embedded side
    w = b.omega
    assert emb.K @ emb.K == emb.K.scale(w * w - 1)


def test_quintic_identity(sl41):
    _, b = sl41
    ci = sl_char_identity(3)
    assert ci.residual_is_zero
    assert check_poly(b.C, ci.spec, None, b.I).equal
    assert is_minimal(b.C, ci.spec, b.I)


@pytest.mark.parametrize("MN,residual", [((2, 1), {"K": "1/2"}),
                                          ((3, 1), {"P_plus": "1/16", "K": "1/16", "Cp2": "-1/4"})])
def test_degenerate_residuals(MN, residual):
    _, b = sl_instance(*MN)
    ci = sl_char_identity(b.omega)
    assert ci.residual == residual
    expected = residual_operator(b, residual)
    assert check_poly(b.C, ci.spec, expected, b.I).equal
    assert not check_poly(b.C, ci.spec, None, b.I).equal
    assert check_poly(b.C, ci.generalized, None, b.I).equal
    assert is_minimal(b.C, ci.generalized, b.I)


@pytest.mark.parametrize("MN", [(4, 1), (2, 1), (3, 1)])
def test_projector_systems(MN):
    model, b = sl_instance(*MN)
    system = sl_adjoint_projectors(b)
    rep = verify_system(system)
    assert rep.ok
    assert sum(e + o for e, o in rep.dims.values()) == model.dim ** 2
    assert all(ct_minus_eigen_checks(b, system).values())


def test_sl41_dimension_table(sl41):
    _, b = sl41
    rep = verify_system(sl_adjoint_projectors(b))
    assert rep.dims == sl_expected_dims(4, 1)
    assert rep.dims["P1(+)"] == (1, 0)
    assert sum(e + o for e, o in rep.dims.values()) == 576
    for name, (tr, st_) in sl_expected_traces(4, 1).items():
        P = sl_adjoint_projectors(b)[name].operator
        assert (P.trace(), supertrace(P)) == (tr, st_)


def test_sl_m_relations():
    for MN in [(2, 1), (4, 1)]:
        res = sl_k_relations(build_sl(*MN))
        assert all(res.values()), res


sl_params = st.tuples(st.integers(1, 12), st.integers(0, 8))


@settings(max_examples=60, deadline=None)
@given(sl_params)
def test_dimension_formulas_consistent(mn):
    M, N = mn
    assume(M - N >= 3)
    dims = sl_expected_dims(M, N)
    even, odd = sl_dim_oracle(M, N)
    assert sum(e + o for e, o in dims.values()) == (even + odd) ** 2
    for k, (tr, st_) in sl_expected_traces(M, N).items():
        assert dims[k] == ((tr + st_) / 2, (tr - st_) / 2)


def test_classical_sl_limit():
    """N = 0 gives the classical sl(M) decomposition of the adjoint square."""
    M = 5
    d = sl_expected_dims(M, 0)
    assert d["P2(+)"][0] == M * M * (M - 1) * (M + 3) // 4
    assert d["P3(+)"][0] == M * M * (M + 1) * (M - 3) // 4
    assert d["Pt-1(-)"][0] == (M * M - 1) * (M * M - 4) // 4
