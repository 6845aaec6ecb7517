import pytest

from conftest import threevar_system, fivevar_specialized, fivevar_system
from sparseproj.mpoly import SparsePoly
from sparseproj.projection import (
    GenericityFailure,
    MuNotPrimitive,
    ProjectionProblem,
    geom_res_proj,
    parametric_toric_geomres,
    q_projection,
    verify_resolution,
)
from sparseproj.rat import rat
from sparseproj.ratfun import RatFun, ratfun_normalize
from sparseproj.upoly import UniPoly
from sparseproj.zerodim import GeometricResolution


def F1(num_terms, den_terms=None):
    num = SparsePoly(1, num_terms)
    den = SparsePoly(1, den_terms) if den_terms else SparsePoly.const(1, 1)
    return ratfun_normalize(num, den)


def F2(num_terms, den_terms=None):
    num = SparsePoly(2, num_terms)
    den = SparsePoly(2, den_terms) if den_terms else SparsePoly.const(2, 1)
    return ratfun_normalize(num, den)


@pytest.fixture(scope="module")
def res3():
    return parametric_toric_geomres(threevar_system(), 1, (0, 1), xi=(1,))


@pytest.fixture(scope="module")
def res5(request):
    return parametric_toric_geomres(fivevar_specialized(), 2, (0, 1), xi=(2, 3))


def test_threevar_parametric_golden(res3):
    den = {(2,): 4, (1,): 2, (0,): -1}
    assert res3.q == UniPoly([
        F1({(2,): -9, (0,): 8}, den),
        F1({(3,): -12, (2,): -6, (1,): 6}, den),
        RatFun.from_const(1, 1),
    ])
    assert res3.params[1] == UniPoly([
        F1({(1,): rat(-3, 4)}),
        F1({(2,): -1, (1,): rat(-1, 2), (0,): rat(1, 4)}),
    ])
    assert res3.params[2] == UniPoly([RatFun.from_const(1, 0), RatFun.from_const(1, 1)])


def test_fivevar_parametric_golden(res5):
    q = res5.q
    assert q.degree() == 10 and q.is_monic()
    assert q[8] == F2({(2, 0): rat(-2, 5)})
    assert q[6] == F2({(4, 0): rat(1, 25), (0, 0): rat(6, 5)})
    assert q[4] == F2({(2, 0): rat(2, 75)})
    assert q[2] == F2({(3, 4): -28, (4, 0): -4, (0, 0): 27}, {(0, 0): 75})
    assert q[0] == F2({(2, 0): rat(4, 25)})
    assert not any(q[k] for k in (1, 3, 5, 7, 9))
    w3 = res5.params[2]
    assert w3[4] == F2({(0, 0): -5}, {(1, 1): 2})
    assert w3[2] == F2({(1, 0): 1}, {(0, 1): 2})
    assert w3[0] == F2({(0, 0): -3}, {(1, 1): 2})
    assert res5.params[3] == UniPoly([RatFun.from_const(2, 0), RatFun.from_const(2, 1)])


def test_fivevar_projection_golden(res5):
    proj = geom_res_proj(res5, (2,), (1,))
    assert proj.q == UniPoly([
        F2({(1, 3): 49}, {(0, 0): 6}),
        F2({(2, 4): 49, (3, 0): 7}, {(0, 0): 9}),
        F2({(0, 4): -63, (1, 0): 10}, {(0, 3): 9}),
        F2({(1, 4): -14, (2, 0): -1}, {(0, 2): 3}),
        F2({(0, 0): 3}, {(1, 1): 2}),
        RatFun.from_const(2, 1),
    ])
    assert proj.params[2] == UniPoly([RatFun.from_const(2, 0), RatFun.from_const(2, 1)])
    report = verify_resolution(proj, (res5, (2,), (1,)))
    assert report.passed


def test_identity_projection(res3):
    proj = geom_res_proj(res3, (1, 2), (0, 1))
    assert proj.q == res3.q
    assert proj.params[1] == res3.params[1]
    assert proj.params[2] == res3.params[2]


def test_rank_example_constant_parametrization():
    # (Y^2 - X1; X2 -> Y; X3 -> X1): projecting X3 gives delta = 1
    x1 = F1({(1,): 1})
    res = GeometricResolution((0,), (1, 2), (1, 0),
                              UniPoly([-x1, RatFun.from_const(1, 0),
                                       RatFun.from_const(1, 1)]),
                              {1: UniPoly([RatFun.from_const(1, 0),
                                           RatFun.from_const(1, 1)]),
                               2: UniPoly([x1])})
    proj = geom_res_proj(res, (2,), (1,))
    assert proj.q == UniPoly([-x1, RatFun.from_const(1, 1)])
    # the parametrization is the reduced representative of Y modulo q_mu
    assert proj.params[2] == UniPoly([x1])
    # projecting X2 and X3 jointly with mu = X3 is rank-defective in X2
    with pytest.raises(MuNotPrimitive):
        geom_res_proj(res, (1, 2), (0, 1))


def test_monotone_consistency(res3):
    # projecting {X2, X3} with mu = X3 and then {X2} agrees with projecting
    # {X2} directly
    step = geom_res_proj(res3, (1, 2), (0, 1))
    twice = geom_res_proj(step, (1,), (1,))
    direct = geom_res_proj(res3, (1,), (1,))
    assert twice.q == direct.q
    assert twice.params[1] == direct.params[1]


def test_verify_detects_mutation(res3):
    bad_q = UniPoly([res3.q[0] + 1, res3.q[1], res3.q[2]])
    mutated = GeometricResolution(res3.free_vars, res3.dep_vars, res3.lam,
                                  bad_q, res3.params)
    report = verify_resolution(mutated, threevar_system())
    assert not report.passed
    bad_params = dict(res3.params)
    bad_params[1] = res3.params[1] + UniPoly([RatFun.from_const(1, rat(1, 7))])
    mutated2 = GeometricResolution(res3.free_vars, res3.dep_vars, res3.lam,
                                   res3.q, bad_params)
    assert not verify_resolution(mutated2, threevar_system()).passed


def test_t_zero_projection_of_points():
    # V = {(1,2), (-1,-2)}; projection to X1 has minimal polynomial Y^2 - 1
    system = [SparsePoly(2, {(2, 0): 1, (0, 0): -1}),
              SparsePoly(2, {(0, 1): 1, (1, 0): -2})]
    prob = ProjectionProblem(system, 1, seed=3, mu=(1,))
    result = q_projection(prob)
    assert not result.dense_image
    assert result.order.t == 0
    assert result.resolution.q == UniPoly([rat(-1), rat(0), rat(1)])
    assert result.provenance["projected_degree"] == 2


def test_dense_image_marker():
    system = [SparsePoly(2, {(0, 1): 1, (2, 0): -1})]  # X2 - X1^2
    result = q_projection(ProjectionProblem(system, 1, seed=5))
    assert result.dense_image
    assert result.order.t == 1
    assert result.resolution is None


def test_determinism_same_seed():
    system = fivevar_system()
    prob1 = ProjectionProblem(system, 3, seed=9, lam=(0, 1), mu=(1,), b=(1,),
                              xi=(2, 3))
    prob2 = ProjectionProblem(system, 3, seed=9, lam=(0, 1), mu=(1,), b=(1,),
                              xi=(2, 3))
    r1 = q_projection(prob1)
    r2 = q_projection(prob2)
    assert r1.provenance == r2.provenance
    assert r1.resolution.q == r2.resolution.q
    assert r1.resolution.params == r2.resolution.params


def test_pinned_mu_failure_is_genericity_failure():
    system = [SparsePoly(2, {(2, 0): 1, (0, 0): -1}),
              SparsePoly(2, {(0, 1): 1, (1, 0): -2})]
    with pytest.raises((GenericityFailure, MuNotPrimitive)):
        q_projection(ProjectionProblem(system, 1, seed=3, mu=(0,)))


def test_degree_bound_recorded(res5):
    proj = geom_res_proj(res5, (2,), (1,))
    assert proj.degree() == 5 <= 66


def test_probabilistic_rank_agrees(res5):
    exact = geom_res_proj(res5, (2,), (1,))
    fast = geom_res_proj(res5, (2,), (1,), probabilistic_rank=True)
    assert fast.q == exact.q
    assert fast.params == exact.params
