"""Shared samplers for randomized property tests (seeded, reproducible)."""

from __future__ import annotations

import numpy as np
import pytest

from gpi1d import CouplingScheme, GreekParams, HalflineParams


def random_greek(rng: np.random.Generator, beta_min: float = 0.05,
                 allow_beta_zero: bool = False) -> GreekParams:
    """A generic coupled matrix-form sample away from degeneracies.

    Rejects decoupled points and (unless allowed) small beta, so that every
    conversion denominator stays above ~1e-2.
    """
    while True:
        alpha = rng.uniform(-3.0, 3.0)
        if allow_beta_zero and rng.uniform() < 0.25:
            beta = 0.0
        else:
            beta = rng.uniform(-3.0, 3.0)
            if abs(beta) < beta_min:
                continue
        gamma = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        g = GreekParams(alpha, beta, gamma)
        if abs(g.det - 4.0) < 1e-2 and abs(gamma.imag) < 1e-2:
            continue
        return g


def random_halfline(rng: np.random.Generator, den_min: float = 1e-2) -> HalflineParams:
    """Coupled halfline sample with all conversion denominators bounded below."""
    while True:
        a = rng.uniform(-3.0, 3.0)
        b = rng.uniform(-3.0, 3.0)
        c = complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0))
        h = HalflineParams(a, b, c)
        if abs(c) < den_min:
            continue
        if abs(a + b - 2 * c.real) < den_min:
            continue
        if abs(a * b - abs(c) ** 2) < den_min:
            continue
        return h


def random_scheme(rng: np.random.Generator, allow_beta_zero: bool = False) -> CouplingScheme:
    return CouplingScheme.from_greek(random_greek(rng, allow_beta_zero=allow_beta_zero))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260810)
