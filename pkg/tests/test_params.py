"""Parametrization records, exact conversions, and classification."""

from __future__ import annotations

import cmath
import math

import numpy as np
import pytest

from gpi1d import (CarreauParams, ChernoffHughesParams, CouplingScheme,
                   DegenerateParametrization, GreekParams, HalflineBoundary,
                   HalflineParams, InverseParams, SebaParams, TransferParams,
                   carreau_to_halfline, chernoff_hughes_to_greek,
                   chernoff_hughes_to_inverse, classify_symmetries,
                   gauge_transform, greek_to_halfline, greek_to_inverse,
                   greek_to_transfer, halfline_to_greek, halfline_to_inverse,
                   halfline_to_transfer, inverse_to_greek, inverse_to_halfline,
                   is_decoupled, seba_to_halfline, transfer_to_greek,
                   transfer_to_halfline)
from conftest import random_greek, random_halfline


def close(x, y, tol=1e-12):
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


# ---------------------------------------------------------------------------
# matrix <-> halfline
# ---------------------------------------------------------------------------

def test_greek_to_halfline_direct_substitution():
    h = greek_to_halfline(GreekParams(4.0, 4.0, -2.0))
    assert close(h.a, 1.0) and close(h.b, 2.0) and close(h.c, 1.0)


def test_greek_to_halfline_delta_prime_anchor():
    # delta' of strength beta has a = b = -c = 1/beta
    for beta in (-2.0, 0.7, 3.0):
        h = greek_to_halfline(GreekParams(0.0, beta, 0.0))
        assert close(h.a, 1 / beta) and close(h.b, 1 / beta) and close(h.c, -1 / beta)


def test_greek_to_halfline_decoupled_point_gives_c_zero():
    h = greek_to_halfline(GreekParams(0.0, 1.0, 2.0))  # det = 4, Im gamma = 0
    assert abs(h.c) < 1e-14


def test_greek_to_halfline_requires_beta():
    with pytest.raises(DegenerateParametrization):
        greek_to_halfline(GreekParams(1.0, 0.0, 0.0))


def test_halfline_to_greek_direct():
    g = halfline_to_greek(HalflineParams(1.0, 2.0, 1.0))
    assert close(g.alpha, 4.0) and close(g.beta, 4.0) and close(g.gamma, -2.0)


def test_halfline_to_greek_delta_prime():
    g = halfline_to_greek(HalflineParams(0.5, 0.5, -0.5))  # 1/beta = 0.5
    assert close(g.alpha, 0.0) and close(g.beta, 2.0) and close(g.gamma, 0.0)


def test_halfline_to_greek_requires_denominator():
    with pytest.raises(DegenerateParametrization):
        halfline_to_greek(HalflineParams(1.0, 1.0, 1.0))


def test_c_zero_round_trips_to_decoupling_locus(rng):
    for _ in range(50):
        a, b = rng.uniform(-3, 3, 2)
        if abs(a + b) < 1e-2:
            continue
        g = halfline_to_greek(HalflineParams(a, b, 0.0))
        assert close(g.det, 4.0, 1e-10)
        assert abs(g.gamma.imag) < 1e-12


def test_det_identity(rng):
    # det = 4 (a+b+2Re c)/(a+b-2Re c) wherever both sides are defined
    for _ in range(300):
        h = random_halfline(rng)
        g = halfline_to_greek(h)
        lhs = g.det
        rhs = 4.0 * (h.a + h.b + 2 * h.c.real) / (h.a + h.b - 2 * h.c.real)
        assert close(lhs, rhs, 1e-10)


def test_greek_halfline_round_trip(rng):
    for _ in range(500):
        g = random_greek(rng)
        g2 = halfline_to_greek(greek_to_halfline(g))
        assert close(g2.alpha, g.alpha, 1e-10)
        assert close(g2.beta, g.beta, 1e-10)
        assert close(g2.gamma, g.gamma, 1e-10)


# ---------------------------------------------------------------------------
# halfline <-> inverse
# ---------------------------------------------------------------------------

def test_halfline_to_inverse_values():
    # exact inversion of the boundary map: (A,B,C) = (b, a, -c)/(ab - |c|^2)
    i = halfline_to_inverse(HalflineParams(1.0, 2.0, 1.0))
    assert close(i.A, 2.0) and close(i.B, 1.0) and close(i.C, -1.0)


def test_inverse_preserves_spectral_condition(rng):
    # defining property: (1 + kappa A)(1 + kappa B) - kappa^2 |C|^2 and
    # (a + kappa)(b + kappa) - |c|^2 must share their roots
    for _ in range(200):
        h = random_halfline(rng)
        i = halfline_to_inverse(h)
        roots = np.roots([1.0, h.a + h.b, h.a * h.b - abs(h.c) ** 2])
        for kappa in roots:
            val = (1 + kappa * i.A) * (1 + kappa * i.B) - kappa ** 2 * abs(i.C) ** 2
            assert abs(val) < 1e-9


def test_halfline_inverse_round_trip(rng):
    for _ in range(500):
        h = random_halfline(rng)
        h2 = inverse_to_halfline(halfline_to_inverse(h))
        assert close(h2.a, h.a, 1e-10)
        assert close(h2.b, h.b, 1e-10)
        assert close(h2.c, h.c, 1e-10)


def test_delta_anchor_inverse_form():
    # the delta interaction of strength alpha is A = B = C = 1/alpha
    for alpha in (-2.0, 1.5):
        g = inverse_to_greek(InverseParams(1 / alpha, 1 / alpha, 1 / alpha))
        assert close(g.alpha, alpha) and close(g.beta, 0.0) and close(g.gamma, 0.0)
        i = greek_to_inverse(GreekParams(alpha, 0.0, 0.0))
        assert close(i.A, 1 / alpha) and close(i.B, 1 / alpha) and close(i.C, 1 / alpha)


def test_inverse_decoupling_criterion(rng):
    for _ in range(50):
        a, b = rng.uniform(-3, 3, 2)
        if abs(a * b) < 1e-2:
            continue
        i = halfline_to_inverse(HalflineParams(a, b, 0.0))
        assert abs(i.C) < 1e-14


def test_inverse_degeneracies():
    # delta' has no inverse form (ab = |c|^2); delta has no halfline form (AB = |C|^2)
    with pytest.raises(DegenerateParametrization):
        halfline_to_inverse(HalflineParams(0.5, 0.5, -0.5))
    with pytest.raises(DegenerateParametrization):
        inverse_to_halfline(InverseParams(0.5, 0.5, 0.5))


# ---------------------------------------------------------------------------
# transfer form
# ---------------------------------------------------------------------------

def test_transfer_delta_routes():
    t = TransferParams(1.0, 1.0, 0.0, -2.0, 1.0)  # delta, alpha = tc = -2
    with pytest.raises(DegenerateParametrization):
        transfer_to_halfline(t)
    g = transfer_to_greek(t)
    assert close(g.alpha, -2.0) and close(g.beta, 0.0) and close(g.gamma, 0.0)


def test_transfer_delta_prime():
    t = TransferParams(1.0, 1.0, -2.0, 0.0, 1.0)  # delta', beta = tb = -2
    g = transfer_to_greek(t)
    assert close(g.alpha, 0.0) and close(g.beta, -2.0) and close(g.gamma, 0.0)


def test_transfer_identity_is_free():
    g = transfer_to_greek(TransferParams(1.0, 1.0, 0.0, 0.0, 1.0))
    assert close(g.alpha, 0.0) and close(g.beta, 0.0) and close(g.gamma, 0.0)


def test_transfer_invariants_enforced():
    with pytest.raises(ValueError):
        TransferParams(1.0, 1.0, 1.0, 1.0, 1.0)  # det 0
    with pytest.raises(ValueError):
        TransferParams(2.0, 1.0, 0.0, 0.0, 1.0)  # |omega| != 1


def test_transfer_round_trip_consistency(rng):
    # both images of a transfer record describe the same operator
    for _ in range(1000):
        h = random_halfline(rng)
        t = halfline_to_transfer(h)
        h2 = transfer_to_halfline(t)
        assert close(h2.a, h.a, 1e-10) and close(h2.b, h.b, 1e-10) and close(h2.c, h.c, 1e-10)
        g2 = transfer_to_greek(t)
        g = halfline_to_greek(h)
        assert close(g2.alpha, g.alpha, 1e-10) and close(g2.beta, g.beta, 1e-10)
        assert close(g2.gamma, g.gamma, 1e-10)


def test_transfer_matrix_reproduces_boundary_conditions(rng):
    # (f(0+), f'(0+)) = omega * M (f(0-), f'(0-)) must solve the halfline conditions
    for _ in range(200):
        h = random_halfline(rng)
        t = halfline_to_transfer(h)
        f0, d0 = (complex(*rng.uniform(-2, 2, 2)) for _ in range(2))
        vec = t.omega * (t.matrix @ np.array([f0, d0]))
        fp, dp = vec
        assert abs(dp - (h.a * fp + h.c * f0)) < 1e-10
        assert abs(-d0 - (np.conj(h.c) * fp + h.b * f0)) < 1e-10


def test_greek_to_transfer_beta_zero(rng):
    # beta = 0 couplings get a tb = 0 transfer form satisfying the matrix conditions
    for _ in range(100):
        alpha = rng.uniform(-3, 3)
        gamma = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        g = GreekParams(alpha, 0.0, gamma)
        if abs(g.det - 4) < 1e-2 and abs(gamma.imag) < 1e-2:
            continue
        t = greek_to_transfer(g)
        assert t.tb == 0.0
        f0, d0 = complex(0.3, -0.8), complex(1.1, 0.4)
        fp, dp = t.omega * (t.matrix @ np.array([f0, d0]))
        gb = np.conj(g.gamma)
        r1 = dp - d0 - (g.alpha / 2) * (fp + f0) - (g.gamma / 2) * (dp + d0)
        r2 = fp - f0 + (gb / 2) * (fp + f0)
        assert abs(r1) < 1e-9 and abs(r2) < 1e-9


# ---------------------------------------------------------------------------
# literature forms
# ---------------------------------------------------------------------------

def test_carreau_examples():
    h = carreau_to_halfline(CarreauParams(1.0, 2.0, 1.0, math.pi))
    assert close(h.a, 3.0) and close(h.b, 2.0) and close(h.c, 1.0, 1e-12)
    # rho_c alone is delta' with beta = 1/rho_c
    h = carreau_to_halfline(CarreauParams(0.0, 0.0, 2.5, 0.0))
    g = halfline_to_greek(h)
    assert close(g.alpha, 0.0) and close(g.beta, 1 / 2.5) and close(g.gamma, 0.0)
    # rho_c = 0 decouples
    h = carreau_to_halfline(CarreauParams(1.0, -0.5, 0.0, 0.0))
    assert h.c == 0


def test_carreau_matrix_image_closed_form(rng):
    # the matrix image has the closed form with common denominator
    # alpha_c + beta_c + 4 rho_c cos^2(theta_c/2)
    for _ in range(200):
        p = CarreauParams(rng.uniform(-2, 2), rng.uniform(-2, 2),
                          rng.uniform(0, 2), rng.uniform(0, 2 * math.pi))
        den = p.alpha_c + p.beta_c + 4 * p.rho_c * math.cos(p.theta_c / 2) ** 2
        if abs(den) < 1e-2:
            continue
        g = halfline_to_greek(carreau_to_halfline(p))
        assert close(g.alpha, 4 * (p.alpha_c * p.beta_c
                                   + p.rho_c * (p.alpha_c + p.beta_c)) / den, 1e-10)
        assert close(g.beta, 4 / den, 1e-10)
        assert close(g.gamma, 2 * (p.beta_c - p.alpha_c
                                   - 2j * p.rho_c * math.sin(p.theta_c)) / den, 1e-10)


def test_carreau_validation():
    with pytest.raises(ValueError):
        CarreauParams(0.0, 0.0, -1.0, 0.0)
    with pytest.raises(ValueError):
        CarreauParams(0.0, 0.0, 1.0, 7.0)


def test_seba_examples():
    h = seba_to_halfline(SebaParams(-1.0, 0.0, -1.0, 1.0))
    assert close(h.a, -1.0) and close(h.b, -1.0) and close(h.c, 1.0)
    # gamma_s = -1, delta_s = -beta is delta' of strength beta
    beta = 1.7
    h = seba_to_halfline(SebaParams(-1.0, 0.0, -1.0, -beta))
    g = halfline_to_greek(h)
    assert close(g.alpha, 0.0) and close(g.beta, beta) and close(g.gamma, 0.0)


def test_seba_images_are_time_reversal_invariant(rng):
    # c = 1/delta_s is real, so the matrix image always has Im gamma = 0
    for _ in range(100):
        gs = rng.uniform(-4, 2)
        ds = rng.uniform(-3, 3)
        if abs(ds) < 1e-2:
            continue
        als = -2.0 - gs
        bs = (als * gs - 1.0) / ds
        h = seba_to_halfline(SebaParams(als, bs, gs, ds))
        assert h.c.imag == 0.0
        if abs(h.a + h.b - 2 * h.c.real) > 1e-2:
            # matrix image closed form: alpha = (gamma_s+1)^2/delta_s,
            # beta = -delta_s, gamma = gamma_s + 1 (real)
            g = halfline_to_greek(h)
            assert abs(g.gamma.imag) < 1e-12
            assert close(g.alpha, (gs + 1.0) ** 2 / ds, 1e-9)
            assert close(g.gamma, gs + 1.0, 1e-9)
            assert close(g.beta, -ds, 1e-9)


def test_seba_requires_delta_s():
    with pytest.raises(DegenerateParametrization):
        seba_to_halfline(SebaParams(-1.0, 0.0, -1.0, 0.0))


def test_chernoff_hughes_examples():
    # r = 0, z real: off-diagonal coupling alpha = beta = 0, gamma real
    g = chernoff_hughes_to_greek(ChernoffHughesParams(0.0, math.log(3.0)))
    assert close(g.alpha, 0.0) and close(g.beta, 0.0)
    assert abs(g.gamma.imag) < 1e-14 and close(g.gamma.real, 2 * (3 - 1) / (3 + 1))
    # z = 0 is free
    g = chernoff_hughes_to_greek(ChernoffHughesParams(1.0, 0.0))
    assert close(g.alpha, 0.0) and close(g.gamma, 0.0)
    # r = 1, z = log 2
    g = chernoff_hughes_to_greek(ChernoffHughesParams(1.0, math.log(2.0)))
    assert close(g.alpha, 4.0 / 3.0) and close(g.beta, 0.0) and close(g.gamma, 2.0 / 3.0)


def test_chernoff_hughes_beta_always_zero(rng):
    for _ in range(100):
        p = ChernoffHughesParams(rng.uniform(-2, 2),
                                 complex(rng.uniform(-1, 1), rng.uniform(-2, 2)))
        if abs(1 + cmath.exp(p.z)) < 1e-2:
            continue
        assert chernoff_hughes_to_greek(p).beta == 0.0


def test_chernoff_hughes_inverse_route_agrees(rng):
    # the inverse-form record must describe the same operator as the matrix form
    for _ in range(100):
        p = ChernoffHughesParams(rng.uniform(0.1, 2), complex(rng.uniform(-1, 1), rng.uniform(-1, 1)))
        if abs(p.r * (math.exp(2 * p.z.real) - 1)) < 1e-2:
            continue
        g_direct = chernoff_hughes_to_greek(p)
        g_via_inverse = inverse_to_greek(chernoff_hughes_to_inverse(p))
        assert close(g_via_inverse.alpha, g_direct.alpha, 1e-9)
        assert close(g_via_inverse.beta, g_direct.beta, 1e-9)
        assert close(g_via_inverse.gamma, g_direct.gamma, 1e-9)


def test_chernoff_hughes_rejects_exp_z_minus_one():
    with pytest.raises(DegenerateParametrization):
        chernoff_hughes_to_greek(ChernoffHughesParams(1.0, 1j * math.pi))


# ---------------------------------------------------------------------------
# decoupling, symmetries, gauge
# ---------------------------------------------------------------------------

def test_is_decoupled_examples():
    assert is_decoupled(CouplingScheme.from_greek(GreekParams(0.0, 1.0, 2.0)))
    assert not is_decoupled(CouplingScheme.from_greek(GreekParams(-2.0, 0.0, 0.0)))
    assert is_decoupled(CouplingScheme.from_halfline(HalflineParams(1.0, -2.0, 0.0)))


def test_decoupled_greek_canonicalizes_to_robin_pair():
    s = CouplingScheme.from_greek(GreekParams(1.5, 2.0, 1.0))  # det = 4, gamma = 1
    assert s.is_separated
    assert s.separated.right == HalflineBoundary.robin((2 + 1) / 2)
    assert s.separated.left == HalflineBoundary.robin((2 - 1) / 2)


def test_decoupled_greek_beta_zero_gives_dirichlet_side():
    s = CouplingScheme.from_greek(GreekParams(4.0, 0.0, 2.0))
    assert s.is_separated
    assert s.separated.right.kind == "dirichlet"
    assert s.separated.left == HalflineBoundary.robin(1.0)  # alpha/4
    s = CouplingScheme.from_greek(GreekParams(4.0, 0.0, -2.0))
    assert s.separated.left.kind == "dirichlet"
    assert s.separated.right == HalflineBoundary.robin(1.0)


def test_robin_zero_is_neumann():
    assert HalflineBoundary.robin(0.0).kind == "neumann"


def test_from_halfline_rejects_missing_matrix_form():
    with pytest.raises(DegenerateParametrization):
        CouplingScheme.from_halfline(HalflineParams(1.0, 1.0, 1.0))


def test_classify_symmetries_examples():
    flags = classify_symmetries(CouplingScheme.from_greek(GreekParams(0.0, -2.0, 0.0)))
    assert (flags.time_reversal, flags.space_reflection, flags.quasifree) == (True, True, False)
    flags = classify_symmetries(CouplingScheme.from_halfline(HalflineParams(1.0, 2.0, 1j)))
    assert (flags.time_reversal, flags.space_reflection, flags.quasifree) == (False, False, False)
    flags = classify_symmetries(CouplingScheme.from_greek(GreekParams(0.0, 0.0, 0.0)))
    assert (flags.time_reversal, flags.space_reflection, flags.quasifree) == (True, True, True)
    # phase-equivalent ("quasifree") family: gamma purely imaginary
    flags = classify_symmetries(CouplingScheme.from_greek(GreekParams(0.0, 0.0, 0.7j)))
    assert flags.quasifree and not flags.time_reversal


def test_space_reflection_implies_time_reversal(rng):
    for _ in range(300):
        g = random_greek(rng, allow_beta_zero=True)
        flags = classify_symmetries(CouplingScheme.from_greek(g))
        assert (not flags.space_reflection) or flags.time_reversal


def test_gauge_transform():
    h = gauge_transform(HalflineParams(-3.0, -1.0, 0.5), math.pi / 2)
    assert close(h.a, -3.0) and close(h.b, -1.0) and close(h.c, 0.5j)
    h0 = HalflineParams(1.0, 2.0, 0.3 - 0.4j)
    assert gauge_transform(h0, 0.0) == h0
    assert abs(abs(gauge_transform(h0, 2.1).c) - abs(h0.c)) < 1e-15
