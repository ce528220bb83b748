from math import comb

import pytest
from hypothesis import assume, given, settings, strategies as st

from supercas.casimir_engine import AlgebraError, check_poly, generalized_projectors, is_minimal, verify_system, verify_ybe
from supercas.osp_algebra import (
    bundle_relations,
    build_osp,
    epsilon_symmetry_holds,
    killing_pair_checks,
    metric_invariance_defects,
    osp_adjoint_projectors,
    osp_char_identity,
    osp_defining_casimir,
    osp_defining_projectors,
    osp_defining_roots,
    osp_embedded,
    osp_expected_dims,
    osp_expected_traces,
    osp_proj2_split,
    osp_r_matrix,
    osp_r_poles,
    residual_operator,
)
from supercas.superlinalg import Q, SuperMatrix, supertrace

from conftest import osp_instance


def osp_dim_oracle(M, N):
    """so(M) + sp(N) even part and M*N odd part."""
    return M * (M - 1) // 2 + N * (N + 1) // 2, M * N


@pytest.mark.parametrize("M,N", [(1, 2), (3, 2), (5, 2), (2, 2), (4, 0), (0, 2)])
def test_dimensions(M, N):
    model = build_osp(M, N)
    assert model.dim_parts == osp_dim_oracle(M, N)
    assert model.sdim == (M - N) * (M - N - 1) // 2


@pytest.mark.parametrize("M,N,msg", [(4, 2, "omega=2: Killing metric degenerate"), (3, 1, "odd"), (2, 0, "omega=2")])
def test_invalid_parameters(M, N, msg):
    with pytest.raises(AlgebraError, match=msg):
        build_osp(M, N)


def test_metric_and_killing(osp52):
    model, _ = osp52
    assert epsilon_symmetry_holds(model)
    assert metric_invariance_defects(model) == []
    assert all(killing_pair_checks(model).values())
    assert model.lie.jacobi_defects() == []


def test_defining_casimir_routes_and_identity(osp52):
    model, _ = osp52
    C = osp_defining_casimir(model)
    assert C == osp_defining_casimir(model, "contraction")
    spec = osp_defining_roots(model.omega)
    assert check_poly(C, spec, None, model.one).equal
    assert is_minimal(C, spec, model.one)


def test_defining_projector_dims(osp52):
    model, _ = osp52
    rep = verify_system(osp_defining_projectors(model))
    assert rep.ok
    M, N = 5, 2
    # graded symmetric square minus the trace; graded antisymmetric square
    sym = (comb(M + 1, 2) + comb(N, 2) - 1, M * N)
    anti = (comb(M, 2) + comb(N + 1, 2), M * N)
    assert rep.dims == {"proj1": sym, "proj2": anti, "proj3": (1, 0)}


def test_defining_identity_at_omega_zero():
    model = build_osp(2, 2)
    spec = osp_defining_roots(0)
    assert spec.roots == ((Q(-1, 4), 2), (Q(1, 4), 1))
    C = osp_defining_casimir(model)
    assert check_poly(C, spec, None, model.one).equal and is_minimal(C, spec, model.one)
    assert verify_system(osp_defining_projectors(model)).ok


def test_r_matrix_forms_and_ybe(osp52):
    model, _ = osp52
    u = Q(2, 5)
    R = osp_r_matrix(model, u)
    assert R == osp_r_matrix(model, u, "projectors") == osp_r_matrix(model, u, "casimir")
    assert osp_r_matrix(model, 0) == model.P
    poles = osp_r_poles(model.omega)
    res = verify_ybe(lambda x: osp_r_matrix(model, x), [(Q(1, 3), Q(1, 5)), (Q(-1, 4), Q(2, 9))], model.V,
                     lambda x: x in poles)
    assert all(r.ybe and r.unitarity for r in res)
    with pytest.raises(ValueError):
        osp_r_matrix(model, 1)


def test_bundle_relations(osp52):
    _, b = osp52
    assert all(bundle_relations(b).values())


def test_embedded_operators_restrict(osp52):
    _, b = osp52
    emb = osp_embedded(b)
    for name in ("C", "K", "Cp", "Cm"):
        assert b.restrict(getattr(emb, name)) == getattr(b, name)
    assert b.restrict(emb.C_from_defining) == b.C


def test_sextic_identity_and_projectors(osp52):
    _, b = osp52
    ci = osp_char_identity(3)
    assert ci.residual_is_zero
    assert check_poly(b.C, ci.spec, None, b.I).equal
    assert is_minimal(b.C, ci.spec, b.I)
    rep = verify_system(osp_adjoint_projectors(b))
    assert rep.ok
    assert rep.dims == osp_expected_dims(5, 2)
    assert rep.dims["proj3"] == (1, 0)
    assert rep.dims["proj6"] == (15, 10)
    assert sum(e + o for e, o in rep.dims.values()) == 23 ** 2


@pytest.mark.parametrize("M,N,coeff", [(2, 2, "1/2"), (3, 2, "-3/2")])
def test_degenerate_residuals(M, N, coeff):
    _, b = osp_instance(M, N)
    ci = osp_char_identity(M - N)
    assert ci.residual == {"K": coeff}
    expected = b.K.scale(Q(coeff))
    assert check_poly(b.C, ci.spec, expected, b.I).equal
    assert not check_poly(b.C, ci.spec, None, b.I).equal
    assert is_minimal(b.C, ci.generalized, b.I)
    system = osp_adjoint_projectors(b)
    rep = verify_system(system)
    assert rep.ok
    assert sum(e + o for e, o in rep.dims.values()) == b.I.shape[0]
    # the listed projectors agree with the generic construction from the roots
    gens = generalized_projectors(b.C, ci.generalized, b.I)
    by_root = {p.eigenvalue: p.operator for p in system}
    for (a, _), P in zip(ci.generalized.roots, gens):
        assert by_root[a] == P


def test_nilpotent_k_at_omega_zero():
    _, b = osp_instance(2, 2)
    assert (b.K @ b.K).is_zero()


def test_proj2_split_at_omega_zero():
    _, b = osp_instance(2, 2)
    plus, minus = osp_proj2_split(b)
    assert plus @ plus == plus and minus @ minus == minus
    assert plus + minus == osp_adjoint_projectors(b)["proj2"].operator
    wrong, _ = osp_proj2_split(b, use_square=False)
    assert wrong @ wrong != wrong


def test_merged_roots_omega_four():
    _, b = osp_instance(6, 2)
    ci = osp_char_identity(4)
    assert check_poly(b.C, ci.spec, None, b.I).equal
    assert is_minimal(b.C, ci.spec, b.I)
    rep = verify_system(osp_adjoint_projectors(b))
    assert rep.ok


def test_omega_eight_limits_on_so8():
    model, b = osp_instance(8, 0)
    ci = osp_char_identity(8)
    assert check_poly(b.C, ci.spec, None, b.I).equal
    system = osp_adjoint_projectors(b)
    rep = verify_system(system)
    assert rep.ok
    # classical so(8): Lambda^4 = 70 and the symmetric traceless square = 35
    assert rep.dims["proj5"] == (70, 0)
    assert rep.dims["proj6"] == (35, 0)
    merged = generalized_projectors(b.C, ci.spec, b.I)[4]
    assert merged == system["proj5"].operator + system["proj6"].operator


def test_so5_classical_decomposition():
    """N = 0 reduces to the classical so(M) decomposition of the adjoint square."""
    M = 5
    _, b = osp_instance(M, 0)
    rep = verify_system(osp_adjoint_projectors(b))
    classical = {
        "proj1": M * (M - 1) * (M + 2) * (M - 3) // 8,
        "proj2": M * (M - 1) // 2,
        "proj3": 1,
        "proj4": M * (M + 1) * (M + 2) * (M - 3) // 12,
        "proj5": comb(M, 4),
        "proj6": (M - 1) * (M + 2) // 2,
    }
    assert {k: v[0] for k, v in rep.dims.items()} == classical


osp_params = st.tuples(st.integers(0, 12), st.integers(0, 6).map(lambda k: 2 * k))


@settings(max_examples=60, deadline=None)
@given(osp_params)
def test_dimension_formulas_consistent(mn):
    M, N = mn
    assume(M - N not in (0, 1, 2))
    dims = osp_expected_dims(M, N)
    traces = osp_expected_traces(M, N)
    even, odd = osp_dim_oracle(M, N)
    assert sum(e + o for e, o in dims.values()) == (even + odd) ** 2
    for k, (tr, st_) in traces.items():
        assert dims[k] == ((tr + st_) / 2, (tr - st_) / 2)


def test_residual_operator_names(osp52):
    _, b = osp52
    assert residual_operator(b, {}) is None
    assert residual_operator(b, {"K": 2, "I": -1}) == b.K.scale(2) - b.I
    assert supertrace(b.K) == b.sdim
