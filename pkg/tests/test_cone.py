import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from socdisj import ConeSpec, InvalidInputError, Membership, classify_porder, classify_soc, p_norm
from socdisj.cone import sample_cone_point, sample_cone_points

finite = st.floats(-1e3, 1e3, allow_nan=False)


@pytest.mark.parametrize("v, tag", [
    ((0, 0, 1), Membership.INTERIOR_K),
    ((1, 0, 1), Membership.BOUNDARY_K),
    ((1, 0, 0), Membership.OUTSIDE),
    ((0, 0, -1), Membership.INTERIOR_NEG_K),
    ((0, 1, -1), Membership.BOUNDARY_NEG_K),
    ((0, 0, 0), Membership.BOUNDARY_K),
])
def test_classify_soc(v, tag):
    assert classify_soc(v) is tag


def test_classify_porder_examples():
    assert classify_porder((1, 1, 2 ** (1 / 3)), 3) is Membership.BOUNDARY_K
    assert classify_porder((0, 0, 1), 1.5) is Membership.INTERIOR_K
    assert classify_porder((1, 0, 1), 2) is Membership.BOUNDARY_K


@pytest.mark.parametrize("bad", [[1.0, np.nan, 2.0], [np.inf, 0.0, 1.0]])
def test_non_finite_rejected(bad):
    with pytest.raises(InvalidInputError):
        classify_soc(bad)


@pytest.mark.parametrize("p", [1.0, 0.5, np.inf])
def test_bad_exponent(p):
    with pytest.raises(InvalidInputError):
        classify_porder((0, 0, 1), p)


def test_bad_tolerance():
    with pytest.raises(InvalidInputError):
        classify_soc((0, 0, 1), 0.0)


def test_p_norm():
    assert p_norm([3, 4], 2) == pytest.approx(5)
    assert p_norm([1, 1], 3) == pytest.approx(2 ** (1 / 3))
    assert p_norm(np.zeros(4), 1.7) == 0.0
    assert p_norm([1, -2], 1) == pytest.approx(3)
    with pytest.raises(InvalidInputError):
        p_norm([1, 1], 0.9)


def test_cone_spec():
    spec = ConeSpec.p_order(4, 3)
    assert spec.q == pytest.approx(1.5)
    assert 1 / spec.p + 1 / spec.q == pytest.approx(1)
    assert spec.dual().p == pytest.approx(1.5)
    with pytest.raises(InvalidInputError):
        ConeSpec.second_order(1)
    with pytest.raises(InvalidInputError):
        ConeSpec.p_order(3, 1.0)


def test_sampling_regions():
    rng = np.random.default_rng(7)
    v = sample_cone_point(ConeSpec.second_order(3), "interior", rng)
    assert v[-1] - np.linalg.norm(v[:-1]) > 1e-9
    v = sample_cone_point(ConeSpec.second_order(3), "boundary", np.random.default_rng(7))
    assert abs(v[-1] - np.linalg.norm(v[:-1])) <= 1e-9
    v = sample_cone_point(ConeSpec.p_order(4, 3), "interior", np.random.default_rng(1))
    assert v[-1] > np.linalg.norm(v[:-1], ord=3)


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
@pytest.mark.parametrize("n", [2, 3, 5])
def test_sampling_classifies(p, n):
    rng = np.random.default_rng(0)
    spec = ConeSpec.p_order(n, p)
    for region, tag in (("interior", Membership.INTERIOR_K), ("boundary", Membership.BOUNDARY_K)):
        X = sample_cone_points(spec, region, 500, rng)
        assert all(classify_porder(x, p) is tag for x in X)


def test_sampling_deterministic():
    spec = ConeSpec.second_order(4)
    a = sample_cone_points(spec, "interior", 10, np.random.default_rng(3))
    b = sample_cone_points(spec, "interior", 10, np.random.default_rng(3))
    assert_allclose(a, b, rtol=0, atol=0)


def test_self_duality_surrogate():
    rng = np.random.default_rng(11)
    spec = ConeSpec.second_order(4)
    U = np.vstack([sample_cone_points(spec, r, 5000, rng) for r in ("interior", "boundary")])
    V = np.vstack([sample_cone_points(spec, r, 5000, rng) for r in ("interior", "boundary")])
    assert np.min(np.sum(U * V[rng.permutation(len(V))], axis=1)) >= -1e-9


@pytest.mark.parametrize("p", [1.5, 3.0, 5.0])
def test_p_cone_duality(p):
    rng = np.random.default_rng(5)
    spec = ConeSpec.p_order(4, p)
    U = sample_cone_points(spec, "boundary", 5000, rng)
    V = sample_cone_points(spec.dual(), "boundary", 5000, rng)
    assert np.min(np.sum(U * V, axis=1)) >= -1e-9


@settings(max_examples=300, deadline=None)
@given(st.lists(finite, min_size=2, max_size=6))
def test_negation_mirrors(v):
    v = np.array(v)
    a, b = classify_soc(v), classify_soc(-v)
    if a is Membership.BOUNDARY_K and b is Membership.BOUNDARY_K:
        return  # the origin neighbourhood ties to BoundaryK on both sides
    assert b is a.negated()


def test_porder_two_matches_soc():
    rng = np.random.default_rng(9)
    X = rng.normal(size=(10_000, 4))
    X[::3, -1] = np.linalg.norm(X[::3, :-1], axis=1)
    assert all(classify_porder(x, 2.0) is classify_soc(x) for x in X)
