import pytest
from hypothesis import assume, given, settings, strategies as st

from supercas.casimir_engine import AlgebraError
from supercas.osp_algebra import osp_adjoint_projectors
from supercas.sl_algebra import sl_adjoint_projectors
from supercas.superlinalg import Q, supertrace
from supercas.vogel_universal import (
    casimir_series_direct,
    casimir_series_from_projectors,
    casimir_series_universal,
    degeneracy,
    dim_from_mu,
    exceptional_loci,
    match_universal,
    series_divide,
    family_mu,
    universal_cubic_residual,
    universal_projector,
    universal_projectors,
    universal_sdims,
    vogel_params,
)

from conftest import osp_instance, sl_instance


@pytest.mark.parametrize("kind,M,N,expected", [
    ("sl", 4, 1, (-2, 2, 3, 3)),
    ("osp", 5, 2, (-2, 4, -1, 1)),
    ("osp", 3, 4, (1, -2, Q(5, 2), Q(3, 2))),
])
def test_vogel_parameter_examples(kind, M, N, expected):
    p = vogel_params(kind, M, N)
    assert (p.alpha, p.beta, p.gamma, p.t) == tuple(Q(x) for x in expected)
    assert p.h_vee == p.t


def test_vogel_column_boundaries():
    # odd M: omega = 1 falls in the right column; even M: omega = 0 does
    assert vogel_params("osp", 3, 2).alpha == 1
    assert vogel_params("osp", 2, 2).alpha == 1
    assert vogel_params("osp", 4, 2 - 2).alpha == -2
    with pytest.raises(AlgebraError):
        vogel_params("osp", 4, 2)
    with pytest.raises(AlgebraError):
        vogel_params("sl", 2, 2)


def test_mu_values():
    assert vogel_params("osp", 5, 2).mu1 == Q(5, 2)
    assert vogel_params("osp", 5, 2).mu2 == Q(-1, 2)
    p = vogel_params("sl", 4, 1)
    assert (p.mu1, p.mu2) == (Q(1, 9), Q(1, 36))


osp_mn = st.tuples(st.integers(0, 14), st.integers(0, 7).map(lambda k: 2 * k))
sl_mn = st.tuples(st.integers(0, 14), st.integers(0, 14))


@settings(max_examples=80, deadline=None)
@given(osp_mn)
def test_osp_params_reproduce_tables(mn):
    M, N = mn
    w = M - N
    assume(w != 2 and M + N > 0)
    p = vogel_params("osp", M, N)
    assert p.alpha + p.beta + p.gamma == p.t
    assert (p.mu1, p.mu2) == family_mu("osp", w)
    if w != 4:
        # sdim g = w(w-1)/2 both from (mu1, mu2) and from the product formula
        assert dim_from_mu(p.mu1, p.mu2) == Q(w * (w - 1), 2)
    if 0 not in (p.alpha, p.beta, p.gamma) and len({p.alpha, p.beta, p.gamma}) == 3:
        assert universal_sdims(p)["g"] == Q(w * (w - 1), 2)


@settings(max_examples=80, deadline=None)
@given(sl_mn)
def test_sl_params_reproduce_tables(mn):
    M, N = mn
    assume(M != N)
    p = vogel_params("sl", M, N)
    w = abs(M - N)
    assert p.alpha + p.beta + p.gamma == p.t
    assert (p.mu1, p.mu2) == family_mu("sl", w)
    assert dim_from_mu(p.mu1, p.mu2) == w * w - 1


def test_universal_cubic_zero_residual():
    for inst in (osp_instance(5, 2), osp_instance(2, 2), osp_instance(3, 2), sl_instance(4, 1),
                 sl_instance(2, 1), sl_instance(3, 1)):
        model, b = inst
        p = vogel_params(b.algebra, model.M, model.N)
        assert universal_cubic_residual(b, p).is_zero()


def test_universal_projectors_sl41(sl41):
    model, b = sl41
    p = vogel_params("sl", 4, 1)
    assert exceptional_loci(p) == ["3beta-2t=0"]
    concrete = sl_adjoint_projectors(b)
    # gamma = w: eigenvalue -gamma/2t = -1/2 picks P4(+)
    assert universal_projector(b, p, "gamma") == concrete["P4(+)"].operator
    m = match_universal(b, p, concrete)
    assert m.ok
    assert m.matches == {"alpha": "P2(+)", "beta": "P3(+)", "gamma": "P4(+)", "(-1)": "P1(+)"}


def test_universal_projectors_osp52(osp52):
    model, b = osp52
    p = vogel_params("osp", 5, 2)
    system = universal_projectors(b, p)
    assert system["P((-1))"].operator == b.K.scale(Q(1, 3))
    sd = universal_sdims(p)
    for proj in system:
        assert supertrace(proj.operator) == sd[proj.name[2:-1]]
    assert system.total() == b.P_plus
    assert match_universal(b, p, osp_adjoint_projectors(b)).ok


@pytest.mark.parametrize("kind,M,N", [("osp", 8, 0), ("sl", 3, 1), ("osp", 6, 2), ("sl", 2, 1)])
def test_degenerate_configurations_are_skipped(kind, M, N):
    p = vogel_params(kind, M, N)
    assert degeneracy(p) is not None
    with pytest.raises(AlgebraError):
        universal_projectors(None, p)


def test_series_division():
    # 1/(1 - z) = 1 + z + z^2 + ...
    assert series_divide([1], [1, -1], 4) == [1] * 5
    # (1 + z)/(1 - z)^2 = sum (2k + 1) z^k
    assert series_divide([1, 1], [1, -2, 1], 4) == [1, 3, 5, 7, 9]
    with pytest.raises(ZeroDivisionError):
        series_divide([1], [0, 1], 2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["osp", "sl"]), st.integers(3, 20), st.integers(0, 6))
def test_series_low_orders(kind, w, N):
    N = 2 * N if kind == "osp" else N
    M = N + w
    p = vogel_params(kind, M, N)
    assume(0 not in p.triple)
    c = casimir_series_universal(p, 3).universal
    sdim = w * (w - 1) // 2 if kind == "osp" else w * w - 1
    assert c == [sdim, 0, 1, Q(-1, 4)]


@pytest.mark.parametrize("kind,M,N", [("osp", 5, 2), ("sl", 4, 1), ("sl", 3, 1), ("osp", 3, 2)])
def test_series_direct_equals_universal(kind, M, N):
    _, b = osp_instance(M, N) if kind == "osp" else sl_instance(M, N)
    p = vogel_params(kind, M, N)
    rep = casimir_series_direct(b, 8).merge(casimir_series_universal(p, 8))
    assert rep.ok
    assert rep.direct[:4] == [b.sdim, 0, 1, Q(-1, 4)]


def test_series_literal_z3_term_disagrees(sl41):
    """With 13t in place of 13t^3 the expansion departs from the supertraces at c_5."""
    _, b = sl41
    p = vogel_params("sl", 4, 1)
    direct = casimir_series_direct(b, 6).direct
    literal = casimir_series_universal(p, 6, literal_z3=True).universal
    assert literal[:5] == direct[:5]
    assert literal[5] != direct[5]


def test_series_from_universal_projectors(osp52):
    _, b = osp52
    p = vogel_params("osp", 5, 2)
    assert casimir_series_from_projectors(b, p, 8) == casimir_series_universal(p, 8).universal
