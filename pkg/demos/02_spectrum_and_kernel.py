"""Bound states, resonances, antibound states, and the resolvent kernel.

The spectral denominator (a - ik)(b - ik) - |c|^2 has its roots on the
imaginary wavenumber axis, kappa = -ik.  Positive kappa is a bound state,
negative kappa an antibound state hidden on the second energy sheet, and
kappa = 0 is either a genuine zero-energy resonance or a spurious root with
vanishing kernel residue (the delta' pathology).
"""

import numpy as np

import gpi1d as g

print("Two bound states of a doubly attractive weakly coupled pair:")
h = g.HalflineParams(-3.0, -1.0, 0.5)
scheme = g.CouplingScheme.from_halfline(h)
for p in g.point_spectrum(scheme):
    print(f"  kappa = {p.kappa:+.6f}  energy = {p.energy:+.6f}  {p.kind.value}"
          + (f"  (mu, nu) = ({p.mu:.4f}, {p.nu:.4f})" if p.mu is not None else ""))

print("\nBinding regimes across the (a, b) sign quadrants:")
for label, hh in [("mixed sign", g.HalflineParams(1.0, -1.0, 0.7)),
                  ("conspiracy", g.HalflineParams(1.0, 3.0, 2.1)),
                  ("two bound", g.HalflineParams(-3.0, -1.0, 0.5)),
                  ("crossing", g.HalflineParams(-1.0, -1.0, 0.0)),
                  ("repulsive, none", g.HalflineParams(1.0, 3.0, 0.5))]:
    reg = g.binding_regime(hh)
    n = sum(p.kind is g.PointKind.BOUND
            for p in g.point_spectrum(g.CouplingScheme.from_halfline(hh)))
    print(f"  {label:16s} -> {reg.kind.value:20s} bound states: {n}")
print("  ('binding by conspiracy': both halfline pieces are repulsive, yet a")
print("   strong enough coupling |c| > sqrt(ab) binds.)")

print("\nThe delta' spurious root: kappa = 0 solves the spectral condition but")
print("the kernel residue cancels against the free kernel, so nothing happens:")
for p in g.point_spectrum(g.CouplingScheme.from_greek(g.GreekParams(0.0, -2.0, 0.0))):
    print(f"  kappa = {p.kappa:+.3f}  {p.kind.value}")
res = g.kernel_residue(g.CouplingScheme.from_greek(g.GreekParams(0.0, -2.0, 0.0)),
                       0.0, 0.7, 1.3)
print(f"  kernel residue at k = 0 equals the free one i/2: {res}")

print("\nA genuine zero-energy resonance (ab = |c|^2 without the delta' shape):")
for p in g.point_spectrum(g.CouplingScheme.from_halfline(g.HalflineParams(2.0, 0.5, 1.0))):
    print(f"  kappa = {p.kappa:+.3f}  {p.kind.value}")

print("\nKernel checks at k = 0.4 + 1.1j (upper half plane):")
k = 0.4 + 1.1j
v_h = g.green_kernel_halfline(g.greek_to_halfline(g.GreekParams(1.0, 2.0, 0.5j)),
                              0.7, -1.2, k)
v_g = g.green_kernel_greek(g.GreekParams(1.0, 2.0, 0.5j), 0.7, -1.2, k)
print(f"  halfline form: {v_h:.12f}")
print(f"  matrix form:   {v_g:.12f}   (identical expressions)")
jump = g.kernel_derivative_jump(g.CouplingScheme.from_greek(g.GreekParams(1.0, 2.0, 0.5j)),
                                0.9, k)
print(f"  derivative jump across x = x': {jump:.12f}  (the unit source)")

x = np.array([0.35, 0.7, 1.4])
scheme = g.CouplingScheme.from_greek(g.GreekParams(-2.0, 0.0, 0.0))
vals = [g.green_kernel(scheme, float(xx), 2.0, 1.5j) for xx in x]
print("\nAttractive delta kernel at energy -2.25 (between the bound state and")
print("the continuum), decaying exponentially away from the source:")
for xx, vv in zip(x, vals):
    print(f"  G({xx:.2f}, 2.0; 1.5i) = {vv:.6f}")
