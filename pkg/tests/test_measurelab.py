"""Mass profiles, energies, dimension estimators, and the constants chain."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracvis.fractals import (
    DiscreteMeasure,
    circle,
    koch_generalized,
    polyline,
    uniform_measure,
)
from fracvis.geom import Annulus, Cone, ParallelTube, Point, RadialTube
from fracvis.measurelab import (
    DimEstimate,
    ball_mass,
    box_dimension,
    check_frostman,
    dyadic_scales,
    energy_dimension,
    fit_loglog,
    frostman_exponent,
    frostman_rescale,
    frostman_sup_profile,
    mass_bound_constants,
    riesz_energy,
    sector_mass_bound,
    sector_mass_check,
    tube_mass,
    tube_scaling_exponent,
)

KOCH_CLASSIC = math.log(4) / math.log(3)


@pytest.fixture(scope="module")
def seg_measure(unit_segment):
    return uniform_measure(unit_segment, 4096)


# ---------------------------------------------------------------------------
# ball and tube masses
# ---------------------------------------------------------------------------


def test_ball_mass_counts_closed_ball():
    mu = DiscreteMeasure(np.array([[0.0, 0.0], [1.0, 0.0]]), np.array([0.3, 0.7]))
    assert ball_mass(mu, (0.0, 0.0), 0.5) == pytest.approx(0.3)
    assert ball_mass(mu, (0.0, 0.0), 1.0) == pytest.approx(1.0)
    assert ball_mass(mu, (0.5, 0.0), 0.4) == pytest.approx(0.0)


def test_tube_mass_parallel(seg_measure):
    tube = ParallelTube(Point(0.5, -0.01), 0.1, "plus")
    assert tube_mass(seg_measure, tube) == pytest.approx(0.2, abs=2e-3)


def test_tube_mass_radial_splits_at_anchor(seg_measure):
    # wide half-tubes split the segment at the anchor circle through x=0.5
    far = RadialTube(Point(-10.0, 0.0), Point(0.5, 0.0), 5.0, "plus")
    near = RadialTube(Point(-10.0, 0.0), Point(0.5, 0.0), 5.0, "minus")
    assert tube_mass(seg_measure, far) == pytest.approx(0.5, abs=1e-3)
    assert tube_mass(seg_measure, near) == pytest.approx(0.5, abs=1e-3)


def test_tube_scaling_exponent_length_like(seg_measure):
    r_grid = np.geomspace(0.2, 0.01, 8)
    beta = tube_scaling_exponent(seg_measure, (0.5, -0.01), None, r_grid)
    assert beta == pytest.approx(1.0, abs=0.02)


def test_tube_scaling_exponent_atom_is_flat():
    mu = DiscreteMeasure(np.array([[0.5, 0.0]] * 3), np.full(3, 1 / 3))
    r_grid = np.geomspace(0.2, 0.01, 8)
    assert tube_scaling_exponent(mu, (0.5, -0.01), None, r_grid) == 0.0


def test_tube_scaling_exponent_rejects_bad_grids(seg_measure):
    with pytest.raises(ValueError):
        tube_scaling_exponent(seg_measure, (0.5, -0.01), None, [0.1, 0.2, 0.3, 0.4])
    with pytest.raises(ValueError):
        tube_scaling_exponent(seg_measure, (0.5, -0.01), None, [0.2, 0.1])
    mu = DiscreteMeasure(np.array([[5.0, 5.0], [6.0, 5.0]]), np.array([0.5, 0.5]))
    with pytest.raises(ValueError, match="zero"):
        tube_scaling_exponent(mu, (0.5, -0.01), None, np.geomspace(0.2, 0.01, 8))


# ---------------------------------------------------------------------------
# frostman profile machinery
# ---------------------------------------------------------------------------


def test_frostman_sup_profile_monotone(seg_measure):
    r = np.geomspace(0.005, 2.0, 12)
    sup = frostman_sup_profile(seg_measure, r)
    assert np.all(np.diff(sup) >= 0.0)
    assert sup[-1] == pytest.approx(1.0)


def test_frostman_rescale_then_check(seg_measure):
    r = np.geomspace(1e-3, 2.0, 16)
    assert not check_frostman(seg_measure, 1.0, r)
    nu = frostman_rescale(seg_measure, 1.0, r)
    assert check_frostman(nu, 1.0, r)
    assert np.array_equal(nu.points, seg_measure.points)
    assert nu.total_mass < seg_measure.total_mass


def test_frostman_exponent_values(seg_measure):
    assert frostman_exponent(seg_measure, np.geomspace(0.01, 0.3, 8)) == pytest.approx(
        1.0018372148566352
    )
    point_mass = DiscreteMeasure(np.zeros((5, 2)), np.full(5, 0.2))
    assert frostman_exponent(point_mass, np.geomspace(0.01, 0.3, 8)) == 0.0
    k6 = uniform_measure(koch_generalized(1.5, 6), 4096)
    got = frostman_exponent(k6, np.geomspace(0.02, 0.5, 10))
    assert got == pytest.approx(1.3904101434169742)
    assert abs(got - 1.5) < 0.15


def test_frostman_exponent_rejects_degenerate_inputs():
    single = DiscreteMeasure(np.array([[0.0, 0.0]]), np.array([1.0]))
    with pytest.raises(ValueError):
        frostman_exponent(single, np.geomspace(0.01, 0.3, 8))
    two = DiscreteMeasure(np.array([[0.0, 0.0], [1.0, 0.0]]), np.array([0.5, 0.5]))
    with pytest.raises(ValueError):
        frostman_exponent(two, [0.1, 0.2])


# ---------------------------------------------------------------------------
# sector mass bound
# ---------------------------------------------------------------------------


def test_sector_mass_bound_trivial_cases():
    assert sector_mass_bound(0.0, 1.0, 1.5) == 0.0
    assert sector_mass_bound(-1.0, 1.0, 1.5) == 0.0
    assert sector_mass_bound(0.8, 2.0, 1.5) == pytest.approx(2.0**1.5)
    # at s = 1 the narrow-sector bound is constant in theta
    assert sector_mass_bound(0.1, 1.0, 1.0) == pytest.approx(3.0 / math.sqrt(2.0))
    assert sector_mass_bound(0.4, 1.0, 1.0) == pytest.approx(3.0 / math.sqrt(2.0))


def test_sector_mass_bound_monotone_in_theta():
    thetas = np.linspace(1e-3, 0.5, 50)
    vals = [sector_mass_bound(float(t), 1.0, 1.5) for t in thetas]
    assert np.all(np.diff(vals) > 0.0)


def test_sector_mass_check_circle():
    mu = uniform_measure(circle((0.0, 0.0), 1.0, 1024), 2048)
    grid = np.geomspace(1e-3, 4.0, 32)
    nu = frostman_rescale(mu, 1.0, grid, margin=2.0)
    x = (3.0, 0.0)
    ann = Annulus(Point(*x), 1.0, 3.0)
    sector = Cone(Point(*x), (-1.0, 0.0), 0.2)
    res = sector_mass_check(nu, x, sector, ann, 1.0, assume_frostman=True)
    assert res.ok
    assert res.lhs <= res.rhs + 1e-9


def test_sector_mass_check_rejects_fat_annulus():
    mu = DiscreteMeasure(np.array([[0.0, 0.0], [1.0, 0.0]]), np.array([0.5, 0.5]))
    ann = Annulus(Point(5.0, 0.0), 3.0, 4.0)
    sector = Cone(Point(5.0, 0.0), (-1.0, 0.0), 0.2)
    with pytest.raises(ValueError):
        sector_mass_check(mu, (5.0, 0.0), sector, ann, 1.0, assume_frostman=True)


# ---------------------------------------------------------------------------
# riesz energy
# ---------------------------------------------------------------------------


def test_riesz_energy_two_points():
    mu = DiscreteMeasure(
        np.array([[0.0, 0.0], [1.0, 0.0]]), np.array([0.5, 0.5])
    )
    for s in (0.5, 1.0, 1.7):
        assert riesz_energy(mu, s) == pytest.approx(0.5)


def test_riesz_energy_scaling_homogeneity(rng):
    pts = rng.random((40, 2))
    w = rng.random(40)
    w /= w.sum()
    mu = DiscreteMeasure(pts, w)
    lam = 3.0
    scaled = DiscreteMeasure(pts * lam, w)
    s = 1.3
    assert riesz_energy(scaled, s) == pytest.approx(
        lam ** (-s) * riesz_energy(mu, s), rel=1e-12
    )


def test_riesz_energy_rejects_coincident_atoms():
    mu = DiscreteMeasure(np.zeros((2, 2)), np.array([0.5, 0.5]))
    with pytest.raises(ValueError):
        riesz_energy(mu, 1.0)


def test_riesz_energy_growth_on_segment(unit_segment):
    # length-1 sets at s = 1.5 show energy growing like sqrt(n)
    ns = [2**k for k in range(8, 14)]
    energies = [
        riesz_energy(uniform_measure(unit_segment, n), 1.5) for n in ns
    ]
    slope, _, _, _ = fit_loglog(ns, energies)
    assert slope == pytest.approx(0.5, abs=0.1)


# ---------------------------------------------------------------------------
# dimension estimators
# ---------------------------------------------------------------------------


def test_box_dimension_segment_exact(unit_segment):
    est = box_dimension(unit_segment, scale_window=(1 / 256, 1 / 4))
    assert est.value == pytest.approx(1.0, abs=1e-12)
    assert est.r_squared == pytest.approx(1.0, abs=1e-12)
    assert est.is_valid


def test_box_dimension_koch(koch7):
    est = box_dimension(koch7)
    assert est.value == pytest.approx(1.2990606085670868, abs=1e-9)
    assert abs(est.value - KOCH_CLASSIC) < 0.05
    assert est.r_squared >= 0.98


def test_box_dimension_random_points_fill_the_plane():
    pts = np.random.default_rng(42).random((10000, 2))
    est = box_dimension(pts, scale_window=(1 / 64, 1 / 4))
    assert est.value == pytest.approx(2.0, abs=0.1)


def test_box_dimension_rejects_bad_windows(unit_segment):
    with pytest.raises(ValueError):
        box_dimension(unit_segment, scale_window=(0.5, 0.5))
    with pytest.raises(ValueError):
        box_dimension(unit_segment, scale_window=(1 / 8, 4.0))
    with pytest.raises(ValueError):
        box_dimension(np.random.default_rng(0).random((10, 2)))


def test_energy_dimension_fixture_values(unit_segment, koch7, circle_1024):
    e_seg = energy_dimension(unit_segment)
    e_koch = energy_dimension(koch7)
    e_circ = energy_dimension(circle_1024)
    assert e_seg.value == pytest.approx(1.0400650428301783, abs=1e-6)
    assert e_koch.value == pytest.approx(1.313815669990394, abs=1e-6)
    assert e_circ.value == pytest.approx(1.0444403750232527, abs=1e-6)
    # estimators must agree within the documented envelope
    assert abs(e_seg.value - 1.0) <= 0.15
    assert abs(e_koch.value - box_dimension(koch7).value) <= 0.15
    assert abs(e_circ.value - box_dimension(circle_1024).value) <= 0.15


def test_energy_dimension_rejects_bad_grids(unit_segment):
    with pytest.raises(ValueError):
        energy_dimension(unit_segment, s_grid=[1.0])
    with pytest.raises(ValueError):
        energy_dimension(unit_segment, s_grid=[0.5, 2.5])
    with pytest.raises(ValueError):
        energy_dimension(unit_segment, s_grid=[1.0, 0.5])
    with pytest.raises(ValueError):
        energy_dimension(unit_segment, n_grid=[64, 128, 256])
    with pytest.raises(ValueError):
        energy_dimension(unit_segment, n_grid=[8, 16, 32, 64])


def test_dyadic_scales_halving():
    scales = dyadic_scales((1 / 64, 1 / 4))
    assert scales == pytest.approx([1 / 4, 1 / 8, 1 / 16, 1 / 32, 1 / 64])
    with pytest.raises(ValueError):
        dyadic_scales((0.5, 0.25))
    with pytest.raises(ValueError):
        dyadic_scales((1 / 8, 1 / 4), n_scales=10)


def test_fit_loglog_exact_power_law():
    x = np.array([1.0, 2.0, 4.0, 8.0])
    y = 3.0 * x**2
    slope, intercept, stderr, r2 = fit_loglog(x, y)
    assert slope == pytest.approx(2.0, abs=1e-12)
    assert intercept == pytest.approx(math.log(3.0), abs=1e-12)
    assert stderr == pytest.approx(0.0, abs=1e-9)
    assert r2 == pytest.approx(1.0, abs=1e-12)


def test_dim_estimate_validation_and_round_trip():
    est = DimEstimate(1.26, 0.02, (0.01, 0.25), 5, 0.999)
    assert est.is_valid
    back = DimEstimate.from_dict(est.to_dict())
    assert back == est
    with pytest.raises(ValueError):
        DimEstimate(1.0, 0.01, (0.25, 0.01), 5, 0.99)
    with pytest.raises(ValueError):
        DimEstimate(1.0, 0.01, (0.01, 0.25), 1, 0.99)


# ---------------------------------------------------------------------------
# constants chain
# ---------------------------------------------------------------------------


def test_mass_bound_constants_reference_point():
    c = mass_bound_constants(2.0, 0.5, 12.0, 1.0, 1.0, 1.0)
    assert c.d0 == pytest.approx(0.5, abs=1e-9)
    assert c.r2 == pytest.approx(0.25, abs=1e-9)
    assert c.alpha0 == pytest.approx(60.0, abs=1e-9)
    assert c.alpha1 == pytest.approx(14884.0, abs=1e-9)
    assert c.c1 == pytest.approx(952576.0, abs=1e-9)


def test_mass_bound_constants_rejects_bad_inputs():
    with pytest.raises(ValueError):
        mass_bound_constants(1.0, 0.5, 12.0, 1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        mass_bound_constants(2.0, 1.5, 12.0, 1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        mass_bound_constants(2.0, 0.5, 12.0, 2.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        mass_bound_constants(2.0, 0.5, 12.0, 1.0, 1.0, 2.0)
    with pytest.raises(ValueError):
        mass_bound_constants(2.0, 0.5, -1.0, 1.0, 1.0, 1.0)


@given(
    s=st.floats(1.05, 1.95),
    xi_frac=st.floats(0.05, 0.95),
    M=st.floats(0.1, 100.0),
    d_minus=st.floats(0.01, 2.0),
    ratio=st.floats(1.0, 10.0),
    r1=st.floats(0.01, 1.0),
)
def test_mass_bound_constants_invariants(s, xi_frac, M, d_minus, ratio, r1):
    xi = xi_frac * (s - 1.0)
    if not (0.0 < xi < s - 1.0):
        return
    c = mass_bound_constants(s, xi, M, d_minus, d_minus * ratio, r1)
    vals = [c.d0, c.r2, c.alpha0, c.alpha1, c.d1, c.c1, c.d2, c.c2]
    assert all(math.isfinite(v) and v > 0.0 for v in vals)
    assert c.r2 <= r1 / math.sqrt(2.0) + 1e-12
    assert c.d1 <= d_minus / c.alpha0 + 1e-12
    assert c.d2 <= c.d1 + 1e-12
