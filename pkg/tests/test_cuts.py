import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from socdisj import (AssumptionViolation, DomainError, InvalidArgumentError, LinearCut,
                     Member, NoCertificateError, Separated, b_sets, beta_star, conic_form_vector,
                     convex_cut_margin, cqr_holds, cut_family, inf_f, linear_certificate,
                     linear_cut, membership, membership_batch, n_coefficient, normalize,
                     point_quadratics, separate)
from socdisj.cone import Membership, classify_soc, sample_cone_points, soc_slack
from socdisj.cuts import beta_grid, cut_at, envelope_value, f_values, raw_b_set
from socdisj.intervals import BetaInterval
from socdisj.oracle import sample_hull_points

from conftest import K3, random_instances, random_split


def boundary_roots(d, bs):
    """(side, beta) pairs where beta lies in B and beta c - c_o is on the cone boundary."""
    out = []
    for k in (1, 2):
        roots = bs.roots1 if k == 1 else bs.roots2
        c, o = d.side(k)
        for r in roots or ():
            v = r * c - o
            if bs.get(k).contains(r) and classify_soc(v, 1e-9 * max(1.0, np.abs(v).max())) is Membership.BOUNDARY_K:
                out.append((k, r))
    return out


# ------------------------------------------------------------ worked examples

def test_single_example_bsets(d_single):
    bs = b_sets(d_single)
    assert bs.collapsed and bs.B1 == BetaInterval.point(1.0) and bs.B2 == BetaInterval.point(1.0)
    raw = b_sets(d_single, collapse=False)
    assert raw.B1 == BetaInterval.closed(1.0, 2.0)


def test_single_example_cut(d_single):
    assert convex_cut_margin(d_single, 1.0, 1, [0, 0, 1]) == pytest.approx(1.0)
    assert convex_cut_margin(d_single, 1.0, 1, [0, 0, 0.4]) == pytest.approx(-0.8)
    assert not membership(d_single, [0, 0, 0.4])
    assert membership(d_single, [0, 0, 1])
    res = separate(d_single, [0, 0, 0.4])
    assert isinstance(res, Separated)
    assert res.violation == pytest.approx(0.8, abs=1e-9)
    assert res.cut.kind == "convex-radical" and res.beta_used == 1.0
    assert cqr_holds(d_single, 1.0) == "No"


def test_single_example_linear(d_single):
    cut = linear_cut(d_single, 2.0, 1)
    np.testing.assert_allclose(cut.a, [0, 0, 2])
    assert cut.rhs == 1.0
    with pytest.raises(InvalidArgumentError):
        linear_cut(d_single, 1.5, 1)


def test_multiple_example(d_multi):
    bs = b_sets(d_multi)
    assert bs.B1 == BetaInterval(1.0, math.inf, True, False)
    assert bs.B2.is_empty()
    res = separate(d_multi, [0, 2, 3])
    assert isinstance(res, Separated)
    assert isinstance(res.cut, LinearCut)
    np.testing.assert_allclose(res.cut.a, [0, -1, 0], atol=1e-12)
    assert res.cut.rhs == -1.0
    assert res.violation == pytest.approx(1.0, abs=1e-9)
    assert isinstance(separate(d_multi, [0.5, 0.5, 1.0]), Member)
    val, arg = inf_f(d_multi, [0, 0, 1])
    assert (val, arg) == pytest.approx((1.0, 1.0))
    np.testing.assert_allclose(linear_cut(d_multi, 1.0, 1).a, [0, -1, 0], atol=1e-12)


def test_multiple_example_beta_star(d_multi):
    X = sample_cone_points(K3, "interior", 1000, np.random.default_rng(2))
    for x in X:
        want = x[1] / (x[2] - abs(x[0]))
        assert beta_star(d_multi, x) == pytest.approx(want, rel=1e-10, abs=1e-14)
    with pytest.raises(InvalidArgumentError):
        beta_star(d_multi, [1, 0, 1])


def test_split_example(d_split):
    bs = b_sets(d_split)
    assert bs.B1 == BetaInterval.point(1.0)
    assert cqr_holds(d_split, 1.0) == "Yes"
    np.testing.assert_allclose(conic_form_vector(d_split, 1.0, 1, [0, 0, 1]), [-4, 0, 4])
    np.testing.assert_allclose(conic_form_vector(d_split, 1.0, 1, [0, 0, 0.9]), [-4, 0, 3.6])
    kinds = [c.kind for c in cut_family(d_split)]
    assert "conic-quadratic" in kinds


def test_split_certificates(d_split):
    cert = linear_certificate(d_split, 1.0, 1, [-1.0, 0.0])
    assert cert.s == pytest.approx(1.0)
    np.testing.assert_allclose(cert.mu, [0, 0, 1])
    assert cert.mu0 == 1.0
    with pytest.raises(NoCertificateError):
        linear_certificate(d_split, 1.0, 1, [0.0, 1.0])


def test_single_certificate(d_single):
    cert = linear_certificate(d_single, 1.0, 1, [1.0, 0.0])
    assert cert.s == pytest.approx(0.5)
    np.testing.assert_allclose(cert.mu, [0.5, 0, 1.5])
    with pytest.raises(InvalidArgumentError):
        linear_certificate(d_single, 1.0, 1, [1.0, 1.0])


def test_domain_errors(d_single):
    with pytest.raises(DomainError):
        inf_f(d_single, [2, 0, 1])
    assert not membership(d_single, [2, 0, 1])
    res = separate(d_single, [2, 0, 1])
    assert res.cone and res.violation == pytest.approx(1.0)


# ------------------------------------------------------------ properties

@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10_000), st.floats(-5, 5))
def test_point_quadratics_identity(seed, beta):
    rng = np.random.default_rng(seed)
    d = random_instances(1, rng)[0]
    x = rng.normal(size=d.n)
    pq = point_quadratics(d, x)
    lhs = pq.radicand(beta)
    rhs = float((beta * d.c1 - d.c2) @ x) ** 2 + n_coefficient(d, beta, 1) * float(soc_slack(x))
    mag = 1 + abs(pq.R * beta * beta) + abs(pq.P * beta) + abs(pq.Q)
    assert abs(lhs - rhs) <= 1e-9 * mag


def test_b_set_members(rng):
    for d in random_instances(100, rng):
        bs = b_sets(d, collapse=False)
        for k in (1, 2):
            B = bs.get(k)
            c, o = d.side(k)
            for beta in beta_grid(B):
                assert beta > 0 and beta * d.rhs(k) >= d.rhs(3 - k) - 1e-12
                v = beta * c - o
                tag = classify_soc(v, 1e-8 * max(1.0, np.abs(v).max()))
                assert tag not in (Membership.INTERIOR_K, Membership.INTERIOR_NEG_K)
            roots = bs.roots1 if k == 1 else bs.roots2
            for r in roots or ():
                assert abs(n_coefficient(d, r, k)) <= 1e-8 * (1 + r * r) * (1 + np.abs(c).max() + np.abs(o).max()) ** 2


def test_beta_zero_excluded():
    d = normalize(K3, [0, 0, 1], 0, [0, 1, 0], 0)
    for k in (1, 2):
        B, _ = raw_b_set(d, k)
        assert not B.contains(0.0)


def test_validity_family(rng):
    for d in random_instances(30, rng, allow_trivial=False):
        cuts = cut_family(d)
        X, _ = sample_hull_points(d, 2000, rng)
        for cut in cuts:
            assert np.min(cut.margin(X)) >= -1e-7


def test_hull_samples_are_members(rng):
    for d in random_instances(40, rng):
        X, _ = sample_hull_points(d, 500, rng)
        assert np.all(membership_batch(d, X))


def test_linear_reduction(rng):
    found = 0
    while found < 10:
        d = random_instances(1, rng, allow_trivial=False)[0]
        pairs = boundary_roots(d, b_sets(d))
        if not pairs:
            continue
        found += 1
        X = np.vstack([sample_cone_points(d.cone, r, 500, rng) for r in ("interior", "boundary")])
        for k, beta in pairs:
            lin = linear_cut(d, beta, k).margin(X)
            rad = np.array([convex_cut_margin(d, beta, k, x) for x in X])
            tie = (np.abs(lin) <= 1e-7) | (np.abs(rad) <= 1e-7)
            assert np.all((np.sign(lin) == np.sign(rad)) | tie)


def test_conic_equivalence(rng):
    for _ in range(10):
        d = random_split(rng)
        assert cqr_holds(d, 1.0) == "Yes"
        X = np.vstack([sample_cone_points(d.cone, r, 500, rng) for r in ("interior", "boundary")])
        rad = np.array([convex_cut_margin(d, 1.0, 1, x) for x in X])
        V = np.array([conic_form_vector(d, 1.0, 1, x) for x in X])
        cm = V[:, -1] - np.linalg.norm(V[:, :-1], axis=1)
        tie = (np.abs(rad) <= 1e-7) | (np.abs(cm) <= 1e-7)
        assert np.all(((rad >= 0) == (cm >= 0)) | tie)


def test_envelope(rng):
    for d in random_instances(20, rng, allow_trivial=False):
        bs = b_sets(d)
        k = 1 if not bs.B1.is_empty() else 2
        beta = float(beta_grid(bs.get(k), 5)[len(beta_grid(bs.get(k), 5)) // 2])
        if n_coefficient(d, beta, k) <= 1e-9:
            continue
        dirs = rng.normal(size=(3000, d.n - 1))
        dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
        certs = []
        for w in dirs:
            try:
                certs.append(linear_certificate(d, beta, k, w))
            except NoCertificateError:
                pass
        assert len(certs) >= 200
        c, o = d.side(k)
        for cert in certs:
            np.testing.assert_allclose(cert.alpha1 + cert.beta1 * d.c1, cert.mu, atol=1e-9)
            np.testing.assert_allclose(cert.alpha2 + cert.beta2 * d.c2, cert.mu, atol=1e-9)
            for a in (cert.alpha1, cert.alpha2):
                assert abs(a[-1] - np.linalg.norm(a[:-1])) <= 1e-8 * max(1.0, np.abs(a).max())
            assert cert.mu0 == min(cert.beta1 * d.c1_0, cert.beta2 * d.c2_0)
            if k == 1:
                v = beta * d.c1 - d.c2
                mh = cert.mu[:-1] @ v[:-1] - cert.mu[-1] * v[-1]
                assert mh == pytest.approx(cert.M_half, abs=1e-8 * (1 + abs(cert.M_half)))
        M = np.array([cert.mu for cert in certs])
        X = sample_cone_points(d.cone, "interior", 200, rng)
        for x in X:
            assert np.min(M @ x) >= envelope_value(d, beta, k, x) - 1e-9 * (1 + np.abs(M @ x).max())


def test_convexity_dichotomy(rng):
    checked = 0
    for d in random_instances(60, rng, allow_trivial=False):
        bs = b_sets(d, collapse=False)
        if bs.B1.is_empty() or bs.B1.is_singleton():
            continue
        lo, hi = max(bs.B1.lo, 1e-3), min(bs.B1.hi, 50.0)
        if hi - lo < 1e-6:
            continue
        X = sample_cone_points(d.cone, "interior", 50, rng)
        for x in X:
            pq = point_quadratics(d, x)
            t = np.sort(rng.uniform(lo, hi, (20, 2)), axis=1)
            mid = t.mean(axis=1)
            fa, fb = f_values(d, x, 1, t[:, 0]), f_values(d, x, 1, t[:, 1])
            fm = f_values(d, x, 1, mid)
            gap = fm - 0.5 * (fa + fb)
            tol = 1e-9 * (1 + np.abs(fa) + np.abs(fb))
            disc = pq.P ** 2 - pq.Q * pq.R
            if disc > 1e-9 * (1 + abs(pq.Q * pq.R)):
                assert np.all(gap >= -tol)
            elif disc < -1e-9 * (1 + abs(pq.Q * pq.R)):
                assert np.all(gap <= tol)
            checked += 1
    assert checked > 0


def test_separation_contract(rng):
    for d in random_instances(40, rng, allow_trivial=False):
        bs = b_sets(d)
        X = sample_cone_points(d.cone, "interior", 200, rng, scale=(0.05, 3.0))
        H, _ = sample_hull_points(d, 1000, rng)
        member = membership_batch(d, X, bs)
        for x, m in zip(X, member):
            res = separate(d, x, bs)
            assert isinstance(res, Member) == bool(m)
            if isinstance(res, Separated):
                assert res.violation > 0
                assert float(res.cut.margin(x[None, :])[0]) == pytest.approx(-res.violation)
                assert bs.get(res.side).contains(res.beta_used)
                assert np.min(res.cut.margin(H)) >= -1e-7


def test_cut_at_classification(d_multi):
    assert cut_at(d_multi, 1.0, 1).kind == "linear"
    assert cut_at(d_multi, 2.0, 1).kind == "convex-radical"


def test_assumption_errors():
    d = normalize(K3, [0, 0, 1], 1, [0, 0, 1], 0)
    with pytest.raises(AssumptionViolation):
        separate(d, [0, 0, 1])


def test_trivial_hull_has_no_cuts():
    d = normalize(K3, [0, 0, 1], 1, [1, 0, 0], 0)
    bs = b_sets(d)
    assert bs.trivial and cut_family(d) == []
    assert membership(d, [5, 0, 5])


def test_rounding_on_zero_plane():
    """Rounding noise in c.x on the plane c.x = 0 does not flip membership."""
    d = normalize(K3, [0.7478729421405462, 0.9808759091945427, -0.1104186881258106], 0,
                  [-0.57103290179359012, 7.8552506258776095e-04, -1.0636427168871747], -1)
    # a boundary ray on the plane c1.x = 0, stored with c1.x of order -1e-16
    x = np.array([-6.634679311561772, 6.071007499176053, 8.993114122611681])
    c = d.c1 if not d.swapped else d.c2
    assert -1e-15 < float(x @ c) < 0
    assert membership(d, x)
