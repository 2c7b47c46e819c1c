import math

import pytest

from hiddenshift import (
    build_state,
    fourier_measure,
    is_zero_shift,
    make_oracle,
    make_params,
    make_shift,
)
from hiddenshift.simulator import QuantumState


def _instance(n, q, u):
    p = make_params(n, q)
    sh = make_shift(u, p)
    return p, sh, make_oracle(sh, p)


@pytest.mark.parametrize("n,q,u", [(1, 4, (1,)), (1, 4, (2,)), (2, 4, (2, 1))])
def test_state_norm_and_support(n, q, u):
    p, _, oracle = _instance(n, q, u)
    state = build_state(p, oracle)
    assert state.squared_norm() == pytest.approx(1.0, abs=1e-12)
    # the window vanishes exactly on the x_i = 0 slices, nowhere else
    assert len(state.amplitudes) == 2 * (p.grid_size - 1) ** n
    for (x, c, z), a in state.amplitudes.items():
        assert a != 0.0
        expect = tuple((xi - c * ui) % p.grid_size for xi, ui in zip(x, oracle.shift.u_tilde))
        assert z == expect


def test_state_rejects_mismatched_params():
    p1 = make_params(1, 4)
    p2 = make_params(2, 4)
    oracle = make_oracle(make_shift((1,), p1), p1)
    with pytest.raises(ValueError):
        build_state(p2, oracle)


def test_measure_requires_normalized_state():
    p = make_params(1, 4)
    bad = QuantumState(amplitudes={((1,), 0, (1,)): 0.5}, params=p)
    with pytest.raises(ValueError):
        fourier_measure(bad)


@pytest.mark.parametrize("n,q,u", [(1, 4, (2,)), (2, 4, (1, 2)), (1, 8, (3,))])
def test_measure_unitarity_and_branch_symmetry(n, q, u):
    p, _, oracle = _instance(n, q, u)
    dist = fourier_measure(build_state(p, oracle))
    assert dist.total() == pytest.approx(1.0, abs=1e-12)
    flat = 1.0 / p.grid_size**n
    for y in {y for (y, _) in dist.mass}:
        # the cosine modulations of the two branches cancel in the sum
        assert dist.mass[(y, 0)] + dist.mass[(y, 1)] == pytest.approx(flat, abs=1e-12)


def test_zero_shift_kills_branch_one():
    p, _, oracle = _instance(2, 4, (0, 0))
    dist = fourier_measure(build_state(p, oracle))
    assert dist.branch_mass(1) == pytest.approx(0.0, abs=1e-12)
    assert max(v for (y, c), v in dist.mass.items() if c == 1) <= 1e-15


def test_zero_shift_detector():
    p = make_params(2, 4)
    assert is_zero_shift(make_oracle(make_shift((0, 0), p), p))
    assert not is_zero_shift(make_oracle(make_shift((2, 2), p), p))
    assert not is_zero_shift(make_oracle(make_shift((0, 1), p), p))


def test_mass_values_clamped_nonnegative():
    p, _, oracle = _instance(1, 8, (4,))
    dist = fourier_measure(build_state(p, oracle))
    assert min(dist.mass.values()) >= 0.0
