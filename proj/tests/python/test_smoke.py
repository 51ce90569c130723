import cmath
from fractions import Fraction

import pytest

import deltares


def test_stirling_and_coefficients():
    assert deltares.stirling_cycle(4, 2) == 11
    assert deltares.stirling_cycle(30, 1) == 8841761993739701954543616000000
    assert deltares.series_coefficient(0, 3) == Fraction(1, 3)
    assert deltares.series_coefficient(1, 1) == -1
    with pytest.raises(ValueError):
        deltares.stirling_cycle(200, 1)


def test_lambert_w_branches_agree():
    p = deltares.ModelParams(0.1, 0.7)
    bv = deltares.w_series(p, 7)
    wh = deltares.w_halley(p, 7)
    assert abs(bv.w - wh) <= bv.tail_bound + 1e-12
    assert abs(deltares.w_halley(1.0, 0) - 1.0) < 1e-13
    assert deltares.remainder_tail_check(p, 3).ok


def test_resonance_and_residual():
    p = deltares.ModelParams(0.1, 0.7, 0.3)
    r = deltares.resonance_from_branch(p, 5)
    assert abs(r.z_refined - complex(-1.4976084434510454, -0.089676589158201997)) < 1e-12
    assert abs(deltares.residual(p, r.z_refined)) < 1e-9
    assert deltares.branch_range(deltares.ModelParams(0.1, 1.0, 0.5)) == (1, 12)
    with pytest.raises(ValueError):
        deltares.resonance_from_branch(p, 0)
    with pytest.raises(ValueError):
        deltares.ModelParams(-1.0, 0.7)


def test_certify_and_widths():
    rep = deltares.certify_bounds(deltares.ModelParams(0.02, 2.0, 0.3))
    assert rep["regime"] == "big_alpha"
    assert rep["violations"] == 0
    assert all(row["pass"] == "pass" for row in rep["rows"])
    p = deltares.ModelParams(0.1, 0.7)
    assert deltares.width_small_alpha(p, 1.0) == pytest.approx(0.069196135422907949, rel=1e-14)
    assert deltares.reflection_coefficient(0.01, 2.0, 1.0).real > 0.99


def test_contour_scan_matches_branches():
    p = deltares.ModelParams(0.1, 2.0, 0.3)
    out = deltares.contour_scan(p, [0.2, 2.0, -0.05, 0.0], [400, 200])
    zs = sorted(out["intersections"], key=lambda z: z.real)
    rs = sorted((r.z_refined for r in out["window_resonances"]), key=lambda z: z.real)
    assert len(zs) == len(rs) == 6
    assert all(abs(a - b) < 1e-6 for a, b in zip(zs, rs))
    assert out["real_part_curves"] and out["imag_part_curves"]
