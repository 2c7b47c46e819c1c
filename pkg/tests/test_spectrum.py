import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hiddenshift import (
    DEFAULT_ENUM_CEILING,
    ResourceCeilingError,
    conditional_mass,
    draw_samples,
    make_params,
    make_shift,
    p_closed,
)
from hiddenshift.spectrum import _p_grid


def test_point_values():
    p = make_params(1, 4)
    sh = make_shift((2,), p)
    # <u, y> = 1 makes the cosine -1; the off-axis factor is cos(pi/8)
    high = p_closed((1.0,), sh, p)
    low = p_closed((2.0,), sh, p)
    assert high == pytest.approx((1 + math.cos(math.pi / 8)) / 2, abs=1e-15)
    assert low == pytest.approx((1 - math.cos(math.pi / 8)) / 2, abs=1e-15)
    assert high == pytest.approx(0.9619397662556434, abs=1e-15)
    assert low == pytest.approx(0.038060233744356626, abs=1e-15)


def test_zero_shift_is_flat_zero():
    p = make_params(2, 4)
    sh = make_shift((0, 0), p)
    for y in [(0.0, 0.0), (0.5, 1.25), (3.0, 2.0)]:
        assert p_closed(y, sh, p) == 0.0


@given(st.integers(0, 2), st.integers(0, 2),
       st.floats(-8.0, 8.0), st.floats(-8.0, 8.0))
def test_value_range(u1, u2, y1, y2):
    p = make_params(2, 4)
    sh = make_shift((u1, u2), p)
    v = p_closed((y1, y2), sh, p)
    assert 0.0 <= v <= 1.0


@pytest.mark.parametrize("n,q,u", [
    (1, 4, (2,)), (2, 4, (1, 2)), (3, 4, (2, 1, 2)),
    (1, 8, (3,)), (2, 8, (4, 1)), (3, 8, (2, 3, 4)),
])
def test_grid_sum_is_half_the_grid(n, q, u):
    p = make_params(n, q)
    sh = make_shift(u, p)
    total = float(_p_grid(sh, p).sum())
    target = p.grid_size**n / 2
    assert abs(total - target) <= 1e-9 * p.grid_size**n


def test_conditional_mass_normalizes():
    p = make_params(2, 4)
    sh = make_shift((2, 2), p)
    mass = conditional_mass(sh, p)
    assert len(mass) == p.grid_size**2
    assert sum(mass.values()) == pytest.approx(1.0, abs=1e-12)
    # the normalizer is exactly half the grid, so mass = 2 p / N^n
    scale = 2.0 / p.grid_size**2
    for y, m in mass.items():
        y_real = tuple(v / p.delta_big for v in y)
        assert m == pytest.approx(p_closed(y_real, sh, p) * scale, abs=1e-12)


def test_conditional_mass_rejects_zero_shift():
    p = make_params(1, 4)
    with pytest.raises(ValueError):
        conditional_mass(make_shift((0,), p), p)


def test_orthogonal_mass_formula_and_bound():
    # conditional mass of the orthogonal set is (N_orth / N^n)(1 - rho),
    # which the uniform-count bound 2^-3k dominates
    p = make_params(2, 4)
    sh = make_shift((2, 2), p)
    mass = conditional_mass(sh, p)
    orth = sum(m for y, m in mass.items()
               if (2 * y[0] + 2 * y[1]) % p.grid_size == 0)
    rho = math.cos(math.pi * 2 / 16) ** 2
    expect = (32 / 256) * (1 - rho)
    assert orth == pytest.approx(expect, abs=1e-12)
    assert orth <= 2.0 ** (-3 * p.k)


def test_draw_determinism_and_support():
    p = make_params(2, 4)
    sh = make_shift((2, 1), p)
    a = draw_samples(sh, p, 200, 7)
    b = draw_samples(sh, p, 200, 7)
    assert a == b
    c = draw_samples(sh, p, 200, 8)
    assert a != c
    for s in a:
        assert s.c in (0, 1)
        assert all(0 <= v < p.grid_size for v in s.y_tilde)


def test_draw_rejects_bad_requests():
    p = make_params(1, 4)
    with pytest.raises(ValueError):
        draw_samples(make_shift((2,), p), p, 0, 1)
    with pytest.raises(ValueError):
        draw_samples(make_shift((0,), p), p, 10, 1)
    with pytest.raises(ResourceCeilingError):
        draw_samples(make_shift((2,), p), p, 10, 1, max_enum=4, rejection=False)


def test_rejection_path_matches_distribution():
    p = make_params(1, 4)
    sh = make_shift((2,), p)
    # force the rejection path with a tiny ceiling and check the c = 1
    # histogram against the exact conditional law
    samples = draw_samples(sh, p, 40_000, 5, max_enum=4)
    assert draw_samples(sh, p, 40_000, 5, max_enum=4) == samples
    ys = [s.y_tilde[0] for s in samples if s.c == 1]
    counts = np.bincount(ys, minlength=16)
    mass = conditional_mass(sh, p)
    expected = np.array([mass[(y,)] for y in range(16)]) * len(ys)
    chi2 = float(((counts - expected) ** 2 / expected).sum())
    # 15 degrees of freedom; 1e-3 critical value is ~37.7
    assert chi2 < 37.7


def test_branch_frequencies_split_evenly():
    p = make_params(1, 4)
    sh = make_shift((1,), p)
    samples = draw_samples(sh, p, 20_000, 3)
    ones = sum(s.c for s in samples)
    # binomial(20000, 1/2): five sigma is ~354
    assert abs(ones - 10_000) < 5 * math.sqrt(20_000 * 0.25)
