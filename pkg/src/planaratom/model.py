"""Physical constants, atom definitions, and dimensionless effective potentials.

Everything downstream works in the dimensionless radial coordinate ``rho``;
the physical radius in Bohr radii is ``r = rho / sqrt(zeta)`` (applied in
:mod:`planaratom.observables`). Energies are carried as twice the Hartree
value, which is numerically the energy in rydberg.

Supported interactions:

``coulomb3d``
    ``U_eff = -2 sqrt(zeta)/rho + l(l+1)/rho^2``
``coulomb2d``
    ``U_eff = -2 sqrt(zeta)/rho + (l^2 - 1/4)/rho^2``
``chern_simons``
    ``U_eff = -(1/pi) K0(lambda rho / (alpha sqrt(zeta))) + (l^2 - 1/4)/rho^2``
``chern_simons_jordan``
    same K0 argument but prefactor ``lambda/(pi alpha)`` — the (incorrect)
    prefactor used by an earlier planar-atom prediction, kept as a
    first-class variant so the discrepancy is executable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import bessel_k0_array

# Inverse fine-structure constant as used throughout: the speed of light in
# atomic units. Deliberately not a CODATA refinement; the embedded reference
# tables were produced with this value.
INV_ALPHA = 137.0356

# Potential-strength unit factor; fixed so rho_0 is the atomic length unit.
V0 = 1.0

# Unit conversion: energies are reported in rydberg = hartree / 2.
RYDBERG_PER_HARTREE = 2.0

# Electron rest energy in eV, used by the CLI to convert photon masses.
ELECTRON_MASS_EV = 510998.95

# Particle masses in units of the electron mass.
PARTICLE_MASSES = {
    "e": 1.0,
    "mu": 206.7682830,
    "p": 1836.15267343,
    "d": 3670.48296788,
    "t": 5496.92153573,
}

ATOM_NAMES = ("pe", "de", "te", "pmu", "dmu", "tmu")

COULOMB_KINDS = ("coulomb3d", "coulomb2d")
CHERN_SIMONS_KINDS = ("chern_simons", "chern_simons_jordan")
POTENTIAL_KINDS = COULOMB_KINDS + CHERN_SIMONS_KINDS

# CLI tokens use hyphens; internal kinds use underscores.
POTENTIAL_TOKENS = {
    "coulomb3d": "coulomb3d",
    "coulomb2d": "coulomb2d",
    "chern-simons": "chern_simons",
    "chern-simons-jordan": "chern_simons_jordan",
}


@dataclass(frozen=True)
class AtomSpec:
    """A neutral two-body atom: orbiting particle plus nucleus.

    ``zeta`` is the reduced mass in electron masses; it sets the Coulomb
    depth through ``sqrt(zeta)`` and the length scaling ``r = rho/sqrt(zeta)``.
    """

    name: str
    orbiter_mass: float
    nucleus_mass: float

    def __post_init__(self):
        if self.orbiter_mass <= 0 or self.nucleus_mass <= 0:
            raise ValueError("particle masses must be positive")

    @property
    def zeta(self) -> float:
        m1, m2 = self.orbiter_mass, self.nucleus_mass
        return m1 * m2 / (m1 + m2)

    @property
    def sqrt_zeta(self) -> float:
        return math.sqrt(self.zeta)


_ATOM_CONSTITUENTS = {
    "pe": ("e", "p"),
    "de": ("e", "d"),
    "te": ("e", "t"),
    "pmu": ("mu", "p"),
    "dmu": ("mu", "d"),
    "tmu": ("mu", "t"),
}


def make_atom(name: str) -> AtomSpec:
    """Build one of the six supported atoms from its token.

    Raises
    ------
    ValueError
        If ``name`` is not one of ``pe de te pmu dmu tmu``.
    """
    try:
        orbiter, nucleus = _ATOM_CONSTITUENTS[name]
    except KeyError:
        raise ValueError(
            f"unknown atom {name!r}; expected one of {', '.join(ATOM_NAMES)}"
        ) from None
    return AtomSpec(
        name=name,
        orbiter_mass=PARTICLE_MASSES[orbiter],
        nucleus_mass=PARTICLE_MASSES[nucleus],
    )


@dataclass(frozen=True)
class PotentialSpec:
    """Interaction choice plus, for massive-photon kinds, the mass ratio.

    ``lam`` is the photon topological mass over the electron mass; it is
    required for the Chern-Simons kinds and must be absent for Coulomb.
    """

    kind: str
    lam: float | None = None

    def __post_init__(self):
        if self.kind not in POTENTIAL_KINDS:
            raise ValueError(f"unknown potential kind {self.kind!r}")
        if self.kind in CHERN_SIMONS_KINDS:
            if self.lam is None or not (self.lam > 0):
                raise ValueError(f"{self.kind} requires a positive lambda")
        elif self.lam is not None:
            raise ValueError(f"{self.kind} takes no lambda")

    @property
    def dimension(self) -> int:
        return 3 if self.kind == "coulomb3d" else 2


@dataclass(frozen=True)
class EffectivePotentialParams:
    """Full problem definition: interaction, atom, and angular momentum."""

    potential: PotentialSpec
    atom: AtomSpec
    ell: int = 0

    def __post_init__(self):
        if self.ell < 0 or self.ell != int(self.ell):
            raise ValueError("ell must be a non-negative integer")

    @property
    def dimension(self) -> int:
        return self.potential.dimension

    @property
    def centrifugal_coefficient(self) -> float:
        """l(l+1) in 3D, l^2 - 1/4 in 2D."""
        if self.dimension == 3:
            return float(self.ell * (self.ell + 1))
        return self.ell * self.ell - 0.25

    @property
    def k0_prefactor(self) -> float:
        """Coefficient of -K0(...) in U_eff; 0 for Coulomb kinds."""
        kind = self.potential.kind
        if kind == "chern_simons":
            return 1.0 / math.pi
        if kind == "chern_simons_jordan":
            return self.potential.lam * INV_ALPHA / math.pi
        return 0.0

    @property
    def k0_argument_scale(self) -> float:
        """K0 argument per unit rho: lambda/(alpha sqrt(zeta)); 0 for Coulomb."""
        if self.potential.kind in CHERN_SIMONS_KINDS:
            return self.potential.lam * INV_ALPHA / self.atom.sqrt_zeta
        return 0.0

    @property
    def coulomb_coefficient(self) -> float:
        """Coefficient of -1/rho in U_eff; 0 for Chern-Simons kinds."""
        if self.potential.kind in COULOMB_KINDS:
            return 2.0 * self.atom.sqrt_zeta
        return 0.0


def effective_potential(params: EffectivePotentialParams, rho) -> np.ndarray | float:
    """Dimensionless effective potential U_eff(rho).

    Accepts a scalar or array of strictly positive radii; returns the same
    shape. Arguments of K0 past the underflow threshold contribute exactly 0.
    """
    arr = np.asarray(rho, dtype=float)
    if arr.size and (not np.all(np.isfinite(arr)) or np.any(arr <= 0.0)):
        raise ValueError("rho must be positive and finite")
    cent = params.centrifugal_coefficient
    u = cent / (arr * arr) if cent != 0.0 else np.zeros_like(arr)
    c = params.coulomb_coefficient
    if c:
        u = u - c / arr
    pref = params.k0_prefactor
    if pref:
        u = u - pref * bessel_k0_array(params.k0_argument_scale * arr)
    if np.isscalar(rho):
        return float(u)
    return u


def jordan_variant_gap(params: EffectivePotentialParams) -> float:
    """Ratio of the jordan-variant K0 prefactor to the standard one.

    Equal to ``lambda / alpha``; below 1 the variant binds much more weakly.
    """
    if params.potential.kind not in CHERN_SIMONS_KINDS:
        raise ValueError("jordan_variant_gap applies to Chern-Simons kinds only")
    return params.potential.lam * INV_ALPHA


def lambda_from_ev(mgamma_ev: float) -> float:
    """Photon topological mass in eV -> mass ratio lambda."""
    if not (mgamma_ev > 0):
        raise ValueError("photon mass must be positive")
    return mgamma_ev / ELECTRON_MASS_EV
