"""Parametrizations of the one-dimensional generalized point interaction.

A single point coupling at x = 0 for H = -d^2/dx^2 (units 2m = hbar = 1) is a
self-adjoint matching condition between the boundary values f(0+-), f'(0+-).
The full family has four real parameters; no single coordinate chart covers it,
which is why several parametrizations coexist and exact conversions matter.

Matrix ("Greek") form, coefficients alpha, beta real, gamma complex::

    f'(0+) - f'(0-) =  (alpha/2) (f(0+)+f(0-)) + (gamma/2) (f'(0+)+f'(0-))
    f(0+)  - f(0-)  = -(conj(gamma)/2) (f(0+)+f(0-)) + (beta/2) (f'(0+)+f'(0-))

with the derived determinant det = alpha*beta + |gamma|^2.  The line decouples
into two independent halflines iff det = 4 and Im gamma = 0.

Halfline (Robin-coupled) form, a, b real, c complex, all 1/length::

    f'(0+) = a f(0+) + c f(0-)       -f'(0-) = conj(c) f(0+) + b f(0-)

Decoupled iff c = 0; does not exist when beta = 0 (pure delta family).

Inverse form (boundary values from derivatives), A, B real, C complex::

    f(0+) = A f'(0+) - C f'(0-)      f(0-) = conj(C) f'(0+) - B f'(0-)

Decoupled iff C = 0; does not exist when alpha = 0.  The halfline/inverse
correspondence is the involution (A, B, C) = (b, a, -c) / (ab - |c|^2).

Transfer form: (f(0+), f'(0+))^T = omega * M (f(0-), f'(0-))^T with |omega| = 1
and M real with det M = 1; covers every coupled scheme (and only those).

Three further forms from the literature (Carreau; Seba; Chernoff-Hughes) are
provided as one-way maps into the charts above, each with its validity domain.

Anchors: the delta interaction of strength alpha is (alpha, 0, 0) in matrix
form and A = B = C = 1/alpha in inverse form; the delta' interaction of
strength beta is (0, beta, 0), i.e. a = b = -c = 1/beta in halfline form.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateParametrization

#: Relative tolerance deciding "denominator is zero" and symmetry/decoupling flags.
DEGENERACY_TOL = 1e-12


def _check_denominator(value: complex, scale: float, name: str) -> None:
    if abs(value) <= DEGENERACY_TOL * max(1.0, scale):
        raise DegenerateParametrization(name, abs(value))


def _require_finite(*values: complex) -> None:
    for v in values:
        if not (math.isfinite(v.real if isinstance(v, complex) else float(v))
                and math.isfinite(v.imag if isinstance(v, complex) else 0.0)):
            raise ValueError("parameters must be finite")


# ---------------------------------------------------------------------------
# Parameter records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GreekParams:
    """Matrix-form coefficients (alpha, beta, gamma)."""

    alpha: float
    beta: float
    gamma: complex

    def __post_init__(self):
        _require_finite(self.alpha, self.beta, complex(self.gamma))
        object.__setattr__(self, "gamma", complex(self.gamma))

    @property
    def det(self) -> float:
        """Determinant alpha*beta + |gamma|^2 of the coupling matrix (derived, never stored)."""
        return self.alpha * self.beta + abs(self.gamma) ** 2

    @property
    def scale(self) -> float:
        return max(abs(self.alpha), abs(self.beta), abs(self.gamma), 1.0)


@dataclass(frozen=True)
class HalflineParams:
    """Robin-coupled halfline coefficients (a, b, c), dimension 1/length."""

    a: float
    b: float
    c: complex

    def __post_init__(self):
        _require_finite(self.a, self.b, complex(self.c))
        object.__setattr__(self, "c", complex(self.c))

    @property
    def scale(self) -> float:
        return max(abs(self.a), abs(self.b), abs(self.c), 1.0)


@dataclass(frozen=True)
class InverseParams:
    """Value-from-derivative coefficients (A, B, C), dimension length."""

    A: float
    B: float
    C: complex

    def __post_init__(self):
        _require_finite(self.A, self.B, complex(self.C))
        object.__setattr__(self, "C", complex(self.C))

    @property
    def scale(self) -> float:
        return max(abs(self.A), abs(self.B), abs(self.C), 1.0)


@dataclass(frozen=True)
class TransferParams:
    """Transfer form omega * [[ta, tb], [tc, td]] with |omega| = 1, ta*td - tb*tc = 1."""

    omega: complex
    ta: float
    tb: float
    tc: float
    td: float

    def __post_init__(self):
        _require_finite(complex(self.omega), self.ta, self.tb, self.tc, self.td)
        object.__setattr__(self, "omega", complex(self.omega))
        if abs(abs(self.omega) - 1.0) > 1e-12:
            raise ValueError(f"|omega| must be 1, got {abs(self.omega)!r}")
        det = self.ta * self.td - self.tb * self.tc
        if abs(det - 1.0) > 1e-12 * max(1.0, abs(self.ta * self.td), abs(self.tb * self.tc)):
            raise ValueError(f"ta*td - tb*tc must be 1, got {det!r}")

    @property
    def matrix(self) -> np.ndarray:
        """The real unimodular 2x2 factor."""
        return np.array([[self.ta, self.tb], [self.tc, self.td]], dtype=float)


@dataclass(frozen=True)
class CarreauParams:
    """(alpha_c, beta_c, rho_c, theta_c) with rho_c >= 0 and theta_c in [0, 2*pi)."""

    alpha_c: float
    beta_c: float
    rho_c: float
    theta_c: float

    def __post_init__(self):
        _require_finite(self.alpha_c, self.beta_c, self.rho_c, self.theta_c)
        if self.rho_c < 0:
            raise ValueError("rho_c must be nonnegative")
        if not (0.0 <= self.theta_c < 2 * math.pi):
            raise ValueError("theta_c must lie in [0, 2*pi)")


@dataclass(frozen=True)
class SebaParams:
    """(alpha_s, beta_s, gamma_s, delta_s) constrained by alpha_s + gamma_s = -2, alpha_s*gamma_s - beta_s*delta_s = 1."""

    alpha_s: float
    beta_s: float
    gamma_s: float
    delta_s: float

    def __post_init__(self):
        _require_finite(self.alpha_s, self.beta_s, self.gamma_s, self.delta_s)
        if abs(self.alpha_s + self.gamma_s + 2.0) > 1e-12 * max(1.0, abs(self.alpha_s), abs(self.gamma_s)):
            raise ValueError("alpha_s + gamma_s must equal -2")
        det = self.alpha_s * self.gamma_s - self.beta_s * self.delta_s
        if abs(det - 1.0) > 1e-12 * max(1.0, abs(self.alpha_s * self.gamma_s), abs(self.beta_s * self.delta_s)):
            raise ValueError("alpha_s*gamma_s - beta_s*delta_s must equal 1")


@dataclass(frozen=True)
class ChernoffHughesParams:
    """(r, z) with r real and z complex; covers beta = 0 couplings."""

    r: float
    z: complex

    def __post_init__(self):
        _require_finite(self.r, complex(self.z))
        object.__setattr__(self, "z", complex(self.z))


# ---------------------------------------------------------------------------
# Separated (decoupled) boundary conditions
# ---------------------------------------------------------------------------

ROBIN = "robin"
DIRICHLET = "dirichlet"
NEUMANN = "neumann"


@dataclass(frozen=True)
class HalflineBoundary:
    """One decoupled side: Robin slope (f' = slope * f toward the origin), Dirichlet, or Neumann.

    Robin with slope 0 is identified with Neumann; Dirichlet and Neumann are
    symbolic, never infinite slopes.
    """

    kind: str
    slope: float = 0.0

    def __post_init__(self):
        if self.kind not in (ROBIN, DIRICHLET, NEUMANN):
            raise ValueError(f"unknown boundary kind {self.kind!r}")
        _require_finite(self.slope)
        if self.kind == ROBIN and self.slope == 0.0:
            object.__setattr__(self, "kind", NEUMANN)
        if self.kind in (DIRICHLET, NEUMANN):
            object.__setattr__(self, "slope", 0.0)

    @staticmethod
    def robin(slope: float) -> "HalflineBoundary":
        return HalflineBoundary(ROBIN, slope)

    @staticmethod
    def dirichlet() -> "HalflineBoundary":
        return HalflineBoundary(DIRICHLET)

    @staticmethod
    def neumann() -> "HalflineBoundary":
        return HalflineBoundary(NEUMANN)


@dataclass(frozen=True)
class SeparatedHalflineBC:
    """Decoupled pair: right side f'(0+) = a f(0+), left side -f'(0-) = b f(0-)."""

    right: HalflineBoundary
    left: HalflineBoundary


# ---------------------------------------------------------------------------
# Coupling scheme (tagged union)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CouplingScheme:
    """Either a genuinely coupled scheme in matrix form, or a separated pair.

    Construct through :meth:`from_greek` / :meth:`from_halfline` /
    :meth:`from_separated`; the constructors canonicalize decoupled matrix
    parameters into the explicit separated representation.
    """

    greek: GreekParams | None = None
    separated: SeparatedHalflineBC | None = None

    def __post_init__(self):
        if (self.greek is None) == (self.separated is None):
            raise ValueError("exactly one of greek/separated must be given")

    @property
    def is_separated(self) -> bool:
        return self.separated is not None

    @property
    def halfline(self) -> HalflineParams | None:
        """The halfline form, or None when it does not exist (separated or beta = 0)."""
        if self.greek is None:
            return None
        if abs(self.greek.beta) <= DEGENERACY_TOL * self.greek.scale:
            return None
        return greek_to_halfline(self.greek)

    @classmethod
    def from_greek(cls, greek: GreekParams) -> "CouplingScheme":
        if _greek_is_decoupled(greek):
            return cls(separated=_separated_from_decoupled_greek(greek))
        return cls(greek=greek)

    @classmethod
    def from_halfline(cls, h: HalflineParams) -> "CouplingScheme":
        if abs(h.c) <= DEGENERACY_TOL * h.scale:
            return cls(separated=SeparatedHalflineBC(
                right=HalflineBoundary.robin(h.a), left=HalflineBoundary.robin(h.b)))
        return cls(greek=halfline_to_greek(h))

    @classmethod
    def from_separated(cls, right: HalflineBoundary, left: HalflineBoundary) -> "CouplingScheme":
        return cls(separated=SeparatedHalflineBC(right=right, left=left))


def _greek_is_decoupled(g: GreekParams) -> bool:
    tol = DEGENERACY_TOL * max(1.0, abs(g.det), g.scale)
    return abs(g.det - 4.0) <= tol and abs(g.gamma.imag) <= tol


def _separated_from_decoupled_greek(g: GreekParams) -> SeparatedHalflineBC:
    if abs(g.beta) > DEGENERACY_TOL * g.scale:
        # Robin slopes from the halfline form at det = 4, Im gamma = 0.
        a = (2.0 + g.gamma.real) / g.beta
        b = (2.0 - g.gamma.real) / g.beta
        return SeparatedHalflineBC(right=HalflineBoundary.robin(a),
                                   left=HalflineBoundary.robin(b))
    # beta = 0 forces gamma = +-2: one Dirichlet side, one Robin side of slope alpha/4.
    if g.gamma.real > 0:
        return SeparatedHalflineBC(right=HalflineBoundary.dirichlet(),
                                   left=HalflineBoundary.robin(g.alpha / 4.0))
    return SeparatedHalflineBC(right=HalflineBoundary.robin(g.alpha / 4.0),
                               left=HalflineBoundary.dirichlet())


# ---------------------------------------------------------------------------
# Exact conversions
# ---------------------------------------------------------------------------

def greek_to_halfline(g: GreekParams) -> HalflineParams:
    """Matrix form -> halfline form; requires beta != 0.

    (a, c; conj(c), b) = (1/(4 beta)) * (4+det+4 Re g,  -4+det-4i Im g;
                                         -4+det+4i Im g, 4+det-4 Re g)
    """
    _check_denominator(g.beta, g.scale, "beta")
    det = g.det
    a = (4.0 + det + 4.0 * g.gamma.real) / (4.0 * g.beta)
    b = (4.0 + det - 4.0 * g.gamma.real) / (4.0 * g.beta)
    c = (-4.0 + det - 4.0j * g.gamma.imag) / (4.0 * g.beta)
    return HalflineParams(a, b, c)


def halfline_to_greek(h: HalflineParams) -> GreekParams:
    """Halfline form -> matrix form; requires a + b - 2 Re c != 0."""
    den = h.a + h.b - 2.0 * h.c.real
    _check_denominator(den, h.scale, "a+b-2Re(c)")
    alpha = 4.0 * (h.a * h.b - abs(h.c) ** 2) / den
    gamma = 4.0 * (0.5 * (h.a - h.b) - 1.0j * h.c.imag) / den
    beta = 4.0 / den
    return GreekParams(alpha, beta, gamma)


def halfline_to_inverse(h: HalflineParams) -> InverseParams:
    """Halfline form -> inverse form; requires ab - |c|^2 != 0.

    (A, B, C) = (b, a, -c) / (ab - |c|^2).  The same map with (A, B, C) in
    place of (a, b, c) is its own inverse, and it preserves the spectral
    condition: (1 + kappa A)(1 + kappa B) - kappa^2 |C|^2 = 0 has the same
    roots as (a + kappa)(b + kappa) - |c|^2 = 0.
    """
    den = h.a * h.b - abs(h.c) ** 2
    _check_denominator(den, h.scale ** 2, "a*b-|c|^2")
    return InverseParams(h.b / den, h.a / den, -h.c / den)


def inverse_to_halfline(i: InverseParams) -> HalflineParams:
    """Inverse form -> halfline form; requires AB - |C|^2 != 0."""
    den = i.A * i.B - abs(i.C) ** 2
    _check_denominator(den, i.scale ** 2, "A*B-|C|^2")
    return HalflineParams(i.B / den, i.A / den, -i.C / den)


def greek_to_inverse(g: GreekParams) -> InverseParams:
    """Matrix form -> inverse form; requires alpha != 0.

    Mirror of greek_to_halfline under the alpha <-> beta duality:
    (A, C; conj(C), B) = (1/(4 alpha)) * (4+det-4 Re g,  4-det+4i Im g;
                                          4-det-4i Im g, 4+det+4 Re g).
    """
    _check_denominator(g.alpha, g.scale, "alpha")
    det = g.det
    A = (4.0 + det - 4.0 * g.gamma.real) / (4.0 * g.alpha)
    B = (4.0 + det + 4.0 * g.gamma.real) / (4.0 * g.alpha)
    C = (4.0 - det + 4.0j * g.gamma.imag) / (4.0 * g.alpha)
    return InverseParams(A, B, C)


def inverse_to_greek(i: InverseParams) -> GreekParams:
    """Inverse form -> matrix form; requires A + B + 2 Re C != 0."""
    den = i.A + i.B + 2.0 * i.C.real
    _check_denominator(den, i.scale, "A+B+2Re(C)")
    alpha = 4.0 / den
    beta = 4.0 * (i.A * i.B - abs(i.C) ** 2) / den
    gamma = (2.0 * (i.B - i.A) + 4.0j * i.C.imag) / den
    return GreekParams(alpha, beta, gamma)


def transfer_to_halfline(t: TransferParams) -> HalflineParams:
    """Transfer form -> halfline form; requires tb != 0.

    a = td/tb, b = ta/tb, c = -omega/tb.
    """
    scale = max(abs(t.ta), abs(t.tb), abs(t.tc), abs(t.td), 1.0)
    _check_denominator(t.tb, scale, "tb")
    return HalflineParams(t.td / t.tb, t.ta / t.tb, -t.omega / t.tb)


def transfer_to_greek(t: TransferParams) -> GreekParams:
    """Transfer form -> matrix form; requires ta + td + 2 Re omega != 0.

    alpha = 4 tc / E, beta = 4 tb / E, gamma = (2 (td - ta) + 4i Im omega) / E
    with E = ta + td + 2 Re omega.
    """
    den = t.ta + t.td + 2.0 * t.omega.real
    scale = max(abs(t.ta), abs(t.td), 1.0)
    _check_denominator(den, scale, "ta+td+2Re(omega)")
    alpha = 4.0 * t.tc / den
    beta = 4.0 * t.tb / den
    gamma = (2.0 * (t.td - t.ta) + 4.0j * t.omega.imag) / den
    return GreekParams(alpha, beta, gamma)


def halfline_to_transfer(h: HalflineParams) -> TransferParams:
    """Halfline form -> transfer form; requires c != 0 (coupled).

    omega = -c/|c|, (ta, tb, tc, td) = (b, 1, ab-|c|^2, a)/|c|.
    """
    _check_denominator(h.c, h.scale, "c")
    m = abs(h.c)
    return TransferParams(-h.c / m, h.b / m, 1.0 / m, (h.a * h.b - m * m) / m, h.a / m)


def greek_to_transfer(g: GreekParams) -> TransferParams:
    """Matrix form -> transfer form; exists for every coupled scheme.

    For beta != 0 this routes through the halfline form.  For beta = 0 the
    solution of the defining relations with tb = 0 is
    omega = ((4 - det) + 4i Im gamma)/|w|, E = 16/|w|,
    ta,td = (E - 2 Re omega -+ E Re gamma / 2)/2, tc = alpha E / 4,
    where |w| = hypot(4 - det, 4 Im gamma).
    """
    if abs(g.beta) > DEGENERACY_TOL * g.scale:
        return halfline_to_transfer(greek_to_halfline(g))
    det = g.det
    wmod = math.hypot(4.0 - det, 4.0 * g.gamma.imag)
    _check_denominator(wmod, max(1.0, det), "|4-det+4i*Im(gamma)|")
    omega = complex(4.0 - det, 4.0 * g.gamma.imag) / wmod
    e = 16.0 / wmod
    ta = (e - 2.0 * omega.real - e * g.gamma.real / 2.0) / 2.0
    td = (e - 2.0 * omega.real + e * g.gamma.real / 2.0) / 2.0
    return TransferParams(omega, ta, 0.0, g.alpha * e / 4.0, td)


def scheme_to_transfer(scheme: CouplingScheme) -> TransferParams:
    """Transfer form of a coupled scheme; separated schemes have none."""
    if scheme.is_separated:
        raise DegenerateParametrization("c (separated scheme has no transfer form)")
    return greek_to_transfer(scheme.greek)


def carreau_to_halfline(p: CarreauParams) -> HalflineParams:
    """a = rho_c + beta_c, b = rho_c + alpha_c, c = -rho_c * exp(-i theta_c); total on its domain."""
    c = -p.rho_c * cmath.exp(-1.0j * p.theta_c)
    return HalflineParams(p.rho_c + p.beta_c, p.rho_c + p.alpha_c, c)


def seba_to_halfline(s: SebaParams) -> HalflineParams:
    """a = -(gamma_s + 2)/delta_s, b = gamma_s/delta_s, c = 1/delta_s; requires delta_s != 0."""
    scale = max(abs(s.alpha_s), abs(s.beta_s), abs(s.gamma_s), abs(s.delta_s), 1.0)
    _check_denominator(s.delta_s, scale, "delta_s")
    return HalflineParams(-(s.gamma_s + 2.0) / s.delta_s, s.gamma_s / s.delta_s,
                          complex(1.0 / s.delta_s))


def chernoff_hughes_to_greek(p: ChernoffHughesParams) -> GreekParams:
    """alpha = 4 r (e^{2 Re z} - 1)/|1 + e^z|^2, beta = 0, gamma = 2 (e^{conj(z)} - 1)/(e^{conj(z)} + 1).

    Requires e^z != -1.
    """
    ez = cmath.exp(p.z)
    _check_denominator(1.0 + ez, max(1.0, abs(ez)), "1+exp(z)")
    ezb = cmath.exp(p.z.conjugate())
    alpha = 4.0 * p.r * (math.exp(2.0 * p.z.real) - 1.0) / abs(1.0 + ez) ** 2
    gamma = 2.0 * (ezb - 1.0) / (ezb + 1.0)
    return GreekParams(alpha, 0.0, gamma)


def chernoff_hughes_to_inverse(p: ChernoffHughesParams) -> InverseParams:
    """A = 1/d, B = e^{2 Re z}/d, C = e^{conj(z)}/d with d = r (e^{2 Re z} - 1) != 0."""
    den = p.r * (math.exp(2.0 * p.z.real) - 1.0)
    _check_denominator(den, max(1.0, abs(p.r)), "r*(exp(2Re(z))-1)")
    return InverseParams(1.0 / den, math.exp(2.0 * p.z.real) / den,
                         cmath.exp(p.z.conjugate()) / den)


# ---------------------------------------------------------------------------
# Classification and gauge action
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymmetryFlags:
    time_reversal: bool
    space_reflection: bool
    quasifree: bool


def is_decoupled(scheme: CouplingScheme) -> bool:
    """True iff the scheme separates the two halflines (det = 4 and Im gamma = 0, i.e. c = 0)."""
    if scheme.is_separated:
        return True
    return _greek_is_decoupled(scheme.greek)


def classify_symmetries(scheme: CouplingScheme) -> SymmetryFlags:
    """Symmetry flags of a coupling.

    Time reversal (complex conjugation) holds iff Im gamma = 0 (c real);
    space reflection iff gamma = 0 (a = b and c real), which implies time
    reversal; "quasifree" flags the family unitarily equivalent to the free
    Hamiltonian by a piecewise-constant phase: alpha = beta = 0 with gamma
    purely imaginary (the free case gamma = 0 included).
    """
    if scheme.is_separated:
        sep = scheme.separated
        return SymmetryFlags(time_reversal=True,
                             space_reflection=(sep.right == sep.left),
                             quasifree=False)
    g = scheme.greek
    tol = DEGENERACY_TOL * g.scale
    time_reversal = abs(g.gamma.imag) <= tol
    space_reflection = abs(g.gamma) <= tol
    quasifree = abs(g.alpha) <= tol and abs(g.beta) <= tol and abs(g.gamma.real) <= tol
    return SymmetryFlags(time_reversal, space_reflection, quasifree)


def gauge_transform(h: HalflineParams, phi: float) -> HalflineParams:
    """Rotate the coupling phase: (a, b, c) -> (a, b, c e^{i phi}).

    The transformed operator is unitarily equivalent (multiplication by a
    piecewise-constant phase), hence isospectral; |c| is preserved exactly.
    """
    return HalflineParams(h.a, h.b, h.c * cmath.exp(1.0j * phi))
