import numpy as np
import pytest

from entropy_profile import (
    clip_decomposition,
    eval_F,
    make_density,
    make_distribution,
    norm_inf,
    norm_one,
    oracle_consistency,
    random_split_norms,
    spectrum_of,
    witness_search,
)
from entropy_profile.oracle import clip_levels

from randstates import random_density, random_distribution

W = [0.5, 0.25, 0.25]


class TestClip:
    def test_sequence_example(self):
        d = clip_decomposition(make_distribution(W), 0.3)
        np.testing.assert_allclose(d.u.entries, [0.2, 0, 0], atol=1e-15)
        np.testing.assert_allclose(d.v.entries, [0.3, 0.25, 0.25], atol=1e-15)
        assert norm_one(d.u) == pytest.approx(0.2, abs=1e-15)

    def test_nothing_to_clip(self):
        w = make_distribution(W)
        d = clip_decomposition(w, 0.7)
        assert norm_one(d.u) == 0
        np.testing.assert_array_equal(d.v.entries, w.entries)
        rho = random_density(np.random.default_rng(70), 4)
        d = clip_decomposition(rho, 1.0)
        np.testing.assert_allclose(d.v.to_complex(), rho.to_complex(), atol=1e-14)

    def test_density_example(self):
        d = clip_decomposition(make_density([[0.5, 0.5], [0.5, 0.5]]), 0.4)
        assert norm_one(d.u) == pytest.approx(0.6, abs=1e-12)
        assert norm_inf(d.v) == pytest.approx(0.4, abs=1e-12)

    def test_norm_matches_profile(self):
        rng = np.random.default_rng(71)
        for _ in range(50):
            state = random_density(rng, 5) if rng.random() < 0.5 else random_distribution(rng, 9)
            r = rng.uniform(0, 0.6)
            d = clip_decomposition(state, r)
            assert norm_inf(d.v) <= r + 1e-12
            assert norm_one(d.u) == pytest.approx(eval_F(spectrum_of(state), r), abs=1e-10)


def test_clip_levels_inside_open_interval():
    for rinf in (1e-6, 0.3, 1.0):
        lv = clip_levels(rinf)
        assert 0 < lv.min() and lv.max() < rinf
        assert len(lv) == 64


class TestWitnessSearch:
    def test_finds_witness(self):
        v = witness_search(make_distribution(W), 0.25, 0.3, samples=1000, seed=0)
        assert v.intersects
        assert norm_one(v.witness.u) < 0.25 and norm_inf(v.witness.v) < 0.3
        np.testing.assert_allclose(v.witness.u.entries + v.witness.v.entries, W, atol=1e-12)

    def test_empty_ball(self):
        rng = np.random.default_rng(72)
        for state in (make_distribution(W), random_density(rng, 3)):
            assert not witness_search(state, 0.0, 0.3, samples=100, seed=1).intersects

    def test_no_witness_below_profile(self):
        v = witness_search(make_distribution(W), 0.1, 0.3, samples=10**4, seed=2)
        assert not v.intersects
        assert v.best_found_norm1 >= 0.2 - 1e-9

    def test_zero_rinf(self):
        v = witness_search(make_distribution(W), 0.5, 0.0, samples=10, seed=0)
        assert not v.intersects and v.best_found_norm1 == float("inf")

    def test_density_witness_verified(self):
        rho = random_density(np.random.default_rng(73), 4)
        f = eval_F(spectrum_of(rho), 0.2)
        v = witness_search(rho, f + 0.01, 0.2, samples=200, seed=3)
        assert v.intersects
        assert norm_one(v.witness.u) < f + 0.01 and norm_inf(v.witness.v) < 0.2
        np.testing.assert_allclose(v.witness.u.to_complex() + v.witness.v.to_complex(), rho.to_complex(), atol=1e-12)

    def test_deterministic(self):
        rho = random_density(np.random.default_rng(74), 3)
        a = witness_search(rho, 0.3, 0.2, samples=50, seed=9)
        b = witness_search(rho, 0.3, 0.2, samples=50, seed=9)
        assert a.as_dict() == b.as_dict()

    def test_best_found_non_increasing_in_rinf(self):
        rng = np.random.default_rng(75)
        for state in (random_distribution(rng, 12), random_density(rng, 5)):
            best = [witness_search(state, 1.0, r, samples=100, seed=4).best_found_norm1 for r in np.linspace(0.01, 0.8, 25)]
            assert all(b <= a + 1e-9 for a, b in zip(best, best[1:]))


class TestConsistency:
    def grid(self, state, factor):
        s = spectrum_of(state)
        return [(factor * eval_F(s, r), r) for r in np.linspace(0.02, 0.9 * s.values[0], 10)]

    def test_below_profile(self):
        rng = np.random.default_rng(76)
        for state in (random_distribution(rng, 10), random_density(rng, 4)):
            rep = oracle_consistency(state, self.grid(state, 0.9), samples=300, seed=5)
            assert rep.ok
            assert not any(p["intersects"] for p in rep.points)

    def test_above_profile(self):
        rng = np.random.default_rng(77)
        for state in (random_distribution(rng, 10), random_density(rng, 4)):
            rep = oracle_consistency(state, self.grid(state, 1.1), samples=100, seed=6)
            assert rep.ok
            assert all(p["intersects"] for p in rep.points)

    def test_empty_grid(self):
        rep = oracle_consistency(make_distribution(W), [], samples=10)
        assert rep.points == [] and rep.ok


class TestClipOptimality:
    def test_sequences(self):
        rng = np.random.default_rng(78)
        for _ in range(10):
            w = random_distribution(rng, int(rng.integers(1, 15)))
            rinf = rng.uniform(0, w.entries.max())
            f = eval_F(spectrum_of(w), rinf)
            assert random_split_norms(w, rinf, 1000, seed=1).min() >= f - 1e-9
            near = clip_decomposition(w, rinf * (1 - 1e-6))
            assert norm_one(near.u) <= f + 1e-5

    def test_densities(self):
        rng = np.random.default_rng(79)
        for _ in range(5):
            rho = random_density(rng, int(rng.integers(1, 9)))
            rinf = rng.uniform(0, 0.5)
            f = eval_F(spectrum_of(rho), rinf)
            assert random_split_norms(rho, rinf, 300, seed=2).min(initial=np.inf) >= f - 1e-9
