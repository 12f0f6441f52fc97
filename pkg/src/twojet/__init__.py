"""Spectral toolkit for the two-jet zonal flow on the unit sphere.

The package assembles the linearized vorticity operators in the
spherical-harmonic basis (one zonal wavenumber at a time), evolves them by
matrix exponentials, measures spectra, resolvent norms and semigroup decay,
and evaluates the scalar certificates and inequality oracles that rule out
nonzero eigenvalues of the mixing operator.
"""

__version__ = "0.1.0"

from . import certificates, evolution, harmonics, operators, spectra

__all__ = [
    "__version__",
    "certificates",
    "evolution",
    "harmonics",
    "operators",
    "spectra",
]
