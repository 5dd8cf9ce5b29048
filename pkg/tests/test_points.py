import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perfolab import (
    Ball,
    DomainSpec,
    MomentDivergenceError,
    RadiusLaw,
    count,
    dump_realization,
    empirical_moment,
    holes,
    load_realization,
    sample_realization,
    thin,
)
from perfolab.points import MarkedRealization

UNIT_CUBE = DomainSpec("box", 0.5)


def make_manual(points, radii, eps=0.1, d=3):
    return MarkedRealization(
        d=d, epsilon=eps, intensity=1.0, seed=0, domain=UNIT_CUBE,
        law=RadiusLaw(family="constant", value=1.0),
        points=np.asarray(points, dtype=float), radii=np.asarray(radii, dtype=float),
    )


def test_poisson_mean_unit_cube():
    # lam=1, const rho=1, eps=0.5, d=3 -> mean count 1/0.125 = 8
    law = RadiusLaw(family="constant", value=1.0)
    counts = [
        sample_realization(UNIT_CUBE, 1.0, law, 0.5, seed, d=3).n_points
        for seed in range(400)
    ]
    mean = np.mean(counts)
    se = np.std(counts) / np.sqrt(len(counts))
    assert abs(mean - 8.0) <= 3 * se + 1e-9


def test_zero_intensity_empty():
    law = RadiusLaw(family="constant", value=1.0)
    r = sample_realization(UNIT_CUBE, 0.0, law, 0.3, 1)
    assert r.n_points == 0
    assert holes(r) == []


def test_poisson_mean_pareto_many_seeds():
    # lam=40, Pareto(1,2.5), eps=0.1: mean count = 40 / 1e-3 = 40000
    law = RadiusLaw(family="pareto", min_scale=1.0, tail_exponent=2.5, beta=0.4)
    counts = np.array(
        [sample_realization(UNIT_CUBE, 40.0, law, 0.1, s).n_points for s in range(200)]
    )
    se = counts.std() / np.sqrt(len(counts))
    assert abs(counts.mean() - 40000.0) <= 3 * se
    # Poissonity: mean approximately equals variance
    assert abs(counts.var() - 40000.0) <= 4 * 40000.0 / np.sqrt(len(counts)) * np.sqrt(2)


def test_determinism():
    law = RadiusLaw(family="pareto", min_scale=1.0, tail_exponent=2.5)
    a = sample_realization(UNIT_CUBE, 5.0, law, 0.2, 123)
    b = sample_realization(UNIT_CUBE, 5.0, law, 0.2, 123)
    assert np.array_equal(a.points, b.points) and np.array_equal(a.radii, b.radii)


def test_holes_formula():
    r = make_manual([[1.0, 0, 0]], [2.0], eps=0.1)
    (b,) = holes(r)
    assert np.allclose(b.center, (0.1, 0, 0))
    assert b.radius == pytest.approx(0.1**3 * 2, rel=1e-12)


def test_holes_dimension_exponent():
    r = make_manual([[1.0, 0, 0, 0]], [1.0], eps=0.1, d=4)
    (b,) = holes(r)
    assert b.radius == pytest.approx(0.1**2, rel=1e-12)  # d/(d-2) = 2


def test_thin_mutual_violation_removes_both():
    r = make_manual([[0, 0, 0], [0.5, 0, 0]], [1, 1])
    assert thin(r, 1.0).n_points == 0
    assert thin(r, 0.25).n_points == 2


def test_thin_triple():
    # pair at 0.9 eta, third point far: only the third survives
    eta = 1.0
    pts = [[0, 0, 0], [0.9 * eta, 0, 0], [5, 5, 5]]
    r = make_manual(pts, [1, 1, 1])
    kept = thin(r, eta)
    assert kept.n_points == 1
    assert np.allclose(kept.points[0], [5, 5, 5])


def test_thin_idempotent_random():
    law = RadiusLaw(family="pareto", min_scale=1.0, tail_exponent=2.5)
    r = sample_realization(UNIT_CUBE, 30.0, law, 0.2, 7)
    once = thin(r, 0.8)
    twice = thin(once, 0.8)
    assert np.array_equal(once.points, twice.points)


def test_count_regions():
    law = RadiusLaw(family="constant", value=1.0)
    r = sample_realization(UNIT_CUBE, 20.0, law, 0.2, 3)
    assert count(r, UNIT_CUBE) == r.n_points
    far = Ball((10.0, 0.0, 0.0), 0.1)
    assert count(r, far) == 0


def test_count_half_box_binomial():
    law = RadiusLaw(family="constant", value=1.0)
    half = DomainSpec("box", 0.25)  # one octant-scale sub-box
    frac = []
    for s in range(100):
        r = sample_realization(UNIT_CUBE, 20.0, law, 0.2, s)
        if r.n_points:
            frac.append(count(r, half) / r.n_points)
    mean = np.mean(frac)
    se = np.std(frac) / np.sqrt(len(frac))
    assert abs(mean - 0.125) <= 3 * se + 1e-3


def test_moments():
    assert empirical_moment(RadiusLaw(family="constant", value=2.0), 1) == 2.0
    pareto = RadiusLaw(family="pareto", min_scale=1.0, tail_exponent=3.0)
    assert empirical_moment(pareto, 1) == pytest.approx(1.5, rel=1e-12)
    assert pareto.moment_quadrature(1) == pytest.approx(1.5, rel=1e-6)
    with pytest.raises(MomentDivergenceError):
        empirical_moment(RadiusLaw(family="pareto", min_scale=1.0, tail_exponent=2.5), 3)


@settings(max_examples=20, deadline=None)
@given(p=st.floats(0.1, 2.2))
def test_pareto_moment_matches_quadrature(p):
    law = RadiusLaw(family="pareto", min_scale=1.0, tail_exponent=2.5)
    assert law.moment(p) == pytest.approx(law.moment_quadrature(p), rel=1e-5)


def test_hole_radius_scaling_in_epsilon():
    pts, rho = [[1.0, 2.0, 3.0]], [1.7]
    r1 = make_manual(pts, rho, eps=0.2)
    r2 = make_manual(pts, rho, eps=0.1)
    assert r2.hole_radii[0] / r1.hole_radii[0] == pytest.approx((0.1 / 0.2) ** 3, rel=1e-12)


def test_serialization_roundtrip():
    law = RadiusLaw(family="pareto", min_scale=1.0, tail_exponent=2.5, beta=0.4)
    r = sample_realization(UNIT_CUBE, 10.0, law, 0.25, 42)
    text = dump_realization(r)
    r2 = load_realization(text)
    assert r2.d == r.d and r2.seed == r.seed
    assert np.array_equal(r2.points, r.points)
    assert np.array_equal(r2.radii, r.radii)
    assert dump_realization(r2) == text


def test_invalid_law_rejected():
    from perfolab import ConfigurationError

    law = RadiusLaw(family="pareto", min_scale=1.0, tail_exponent=1.2, beta=0.4)
    with pytest.raises(ConfigurationError):
        sample_realization(UNIT_CUBE, 1.0, law, 0.5, 0)  # alpha <= d-2+beta
