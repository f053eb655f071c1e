"""The generalized Kronig-Penney model and its three high-energy regimes.

An equidistant array of identical point couplings always has infinitely many
gaps (unless phase-equivalent to the free line), but their growth at high
energy depends on the coupling:

  beta != 0          band widths approach a constant, gaps grow linearly;
  beta  = 0, Re g != 0  bands and gaps both grow, ratio constant;
  beta  = 0, Re g  = 0  gap widths approach a constant, anchored at (pi m)^2.
"""

import math

import gpi1d as g

ELL = 1.0


def show(title, spec, m_range):
    bands, gaps = g.band_structure(spec, m_range[1] + 1)
    print(f"\n{title}")
    print(f"  {'m':>4s} {'band':>24s} {'width':>10s} {'gap above':>12s}")
    gap_by_m = {gp.m: gp for gp in gaps}
    for b in bands:
        if not (m_range[0] <= b.m <= m_range[1]):
            continue
        gp = gap_by_m.get(b.m)
        gap_w = f"{gp.width:12.5f}" if gp else " " * 12
        print(f"  {b.m:4d} [{b.e_lo:10.4f}, {b.e_hi:10.4f}] {b.width:10.5f} {gap_w}")
    rep = g.asymptotic_regime(spec, m_range)
    print(f"  regime: {rep.regime.value}")
    print(f"  predicted {rep.predicted}  measured "
          f"{ {k: round(v, 6) for k, v in rep.measured.items()} }")
    print(f"  relative error {rep.relative_error:.2e}")
    return bands, gaps


# delta'-like: constant band widths 2|w|/(|beta| ell) = 8, growing gaps
spec = g.LatticeSpec(g.CouplingScheme.from_greek(g.GreekParams(0.0, 1.0, 0.0)), ELL)
show("delta' array (beta = 1): high-energy decoupling, nearly flat narrow bands",
     spec, (40, 46))

# delta-like: constant gaps 8|alpha|/((4+|gamma|^2) ell) anchored at (pi m)^2
spec = g.LatticeSpec(g.CouplingScheme.from_greek(g.GreekParams(1.0, 0.0, 0.0)), ELL)
bands, gaps = show("delta array (alpha = 1): classical Kronig-Penney behaviour",
                   spec, (40, 46))
gp = gaps[42]
print(f"  gap {gp.m} starts at {gp.e_lo:.8f}; (pi m)^2 = {(math.pi * gp.m) ** 2:.8f}")

# intermediate: both widths grow, per-period split 2 asin|t|, 2 acos|t| in k
spec = g.LatticeSpec(g.CouplingScheme.from_greek(g.GreekParams(0.0, 0.0, 1.0)), ELL)
show("scaling coupling (gamma = 1): intermediate regime, |t(inf)| = 3/5",
     spec, (40, 46))
print(f"  2 asin(3/5) = {2 * math.asin(0.6):.6f}, 2 acos(3/5) = {2 * math.acos(0.6):.6f}")

# an attractive array has a negative-energy band
spec = g.LatticeSpec(g.CouplingScheme.from_greek(g.GreekParams(-2.0, 0.0, 0.0)), ELL)
bands, _ = g.band_structure(spec, 3)
print(f"\nAttractive delta array (alpha = -2): the lowest band is "
      f"[{bands[0].e_lo:.5f}, {bands[0].e_hi:.5f}] (dips below zero).")

# dispersion inside one band
spec = g.LatticeSpec(g.CouplingScheme.from_greek(g.GreekParams(1.0, 0.0, 0.0)), ELL)
bands, _ = g.band_structure(spec, 2)
band1 = next(b for b in bands if b.m == 1)
print("\nBloch dispersion across the first band of the delta array:")
print(f"  {'energy':>10s} {'theta':>8s}")
for e, th in g.dispersion(spec, band1, 7):
    print(f"  {e:10.5f} {th:8.5f}")

# the free line is one band, no gaps
spec = g.LatticeSpec(g.CouplingScheme.from_greek(g.GreekParams(0.0, 0.0, 0.0)), ELL)
bands, gaps = g.band_structure(spec, 3)
print(f"\nFree line: {len(bands)} band {bands[0].e_lo:.1e}..{bands[0].e_hi}, "
      f"{len(gaps)} gaps.")
