"""Tour of the coupling parametrizations and their exact conversions.

A point interaction at the origin is fixed by four real parameters, but no
single coordinate chart covers the whole family: the halfline (Robin-coupled)
chart misses the delta family (beta = 0), the inverse chart misses alpha = 0,
and the matrix chart misses a thin exceptional set.  This script walks one
coupling through every chart and shows the anchors where familiar
interactions live.
"""

import gpi1d as g

print("A generic coupling in matrix form (alpha, beta, gamma):")
greek = g.GreekParams(4.0, 4.0, -2.0)
print(f"  alpha = {greek.alpha},  beta = {greek.beta},  gamma = {greek.gamma}")
print(f"  derived determinant alpha*beta + |gamma|^2 = {greek.det}")

h = g.greek_to_halfline(greek)
print(f"\nHalfline chart  f'(0+) = a f(0+) + c f(0-):  a = {h.a}, b = {h.b}, c = {h.c}")

i = g.halfline_to_inverse(h)
print(f"Inverse chart   f(0+) = A f'(0+) - C f'(0-): A = {i.A}, B = {i.B}, C = {i.C}")

t = g.halfline_to_transfer(h)
print(f"Transfer chart  omega = {t.omega:.3f}, M = [[{t.ta:.3f}, {t.tb:.3f}], "
      f"[{t.tc:.3f}, {t.td:.3f}]]  (det M = {t.ta * t.td - t.tb * t.tc:.12f})")

back = g.halfline_to_greek(g.inverse_to_halfline(i))
print(f"\nRound trip greek -> halfline -> inverse -> halfline -> greek: "
      f"({back.alpha:.12f}, {back.beta:.12f}, {back.gamma:.12f})")

print("\nAnchors:")
print("  delta of strength alpha = -2:")
print("    matrix form (alpha, 0, 0); inverse form A = B = C = 1/alpha:",
      g.greek_to_inverse(g.GreekParams(-2.0, 0.0, 0.0)))
print("  delta' of strength beta = -2:")
print("    matrix form (0, beta, 0); halfline form a = b = -c = 1/beta:",
      g.greek_to_halfline(g.GreekParams(0.0, -2.0, 0.0)))

print("\nLiterature charts map in as well:")
print("  carreau(0, 0, rho=2.5, theta=0)  ->",
      g.halfline_to_greek(g.carreau_to_halfline(g.CarreauParams(0, 0, 2.5, 0))),
      " (a delta' of strength 1/rho)")
print("  seba(gamma_s=-1, delta_s=1)      ->",
      g.seba_to_halfline(g.SebaParams(-1.0, 0.0, -1.0, 1.0)))
ch = g.ChernoffHughesParams(1.0, complex(0.6931471805599453))  # z = log 2
print("  chernoff-hughes(r=1, z=log 2)    ->", g.chernoff_hughes_to_greek(ch),
      " (always beta = 0)")

print("\nDecoupling: the line splits into two halflines iff c = 0, i.e. det = 4")
print("and Im gamma = 0.  Such matrix parameters canonicalize to an explicit")
print("separated pair:")
dec = g.CouplingScheme.from_greek(g.GreekParams(1.5, 2.0, 1.0))
print(f"  (1.5, 2.0, 1.0):  right = {dec.separated.right}, left = {dec.separated.left}")

print("\nSymmetries (time reversal iff Im gamma = 0; space reflection iff gamma = 0;")
print("the phase-equivalent 'quasifree' family has alpha = beta = 0, Re gamma = 0):")
for name, gp in [("delta'", g.GreekParams(0, -2, 0)),
                 ("complex-coupled", g.GreekParams(1, 2, 1j)),
                 ("free", g.GreekParams(0, 0, 0)),
                 ("quasifree", g.GreekParams(0, 0, 0.7j))]:
    flags = g.classify_symmetries(g.CouplingScheme.from_greek(gp))
    print(f"  {name:16s} T = {flags.time_reversal!s:5s}  P = {flags.space_reflection!s:5s}"
          f"  quasifree = {flags.quasifree}")

print("\nGauge action: rotating the phase of c is a unitary equivalence, so the")
print("spectrum cannot move:")
h0 = g.HalflineParams(-3.0, -1.0, 0.5)
h1 = g.gauge_transform(h0, 2.1)
e0 = [p.energy for p in g.point_spectrum(g.CouplingScheme.from_halfline(h0))]
e1 = [p.energy for p in g.point_spectrum(g.CouplingScheme.from_halfline(h1))]
print(f"  energies before: {e0}")
print(f"  energies after:  {e1}")
