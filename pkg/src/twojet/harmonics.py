"""Latitude-direction machinery of the spherical-harmonic basis.

All operators in this package decouple across the zonal wavenumber m, so the
only basis data ever needed are scalar quantities per fixed m: the
Laplace-Beltrami eigenvalues ``n⋅(n+1)``, the three-term recurrence
coefficients that express multiplication by cos(theta), the normalized
latitude profiles ``Ytil_n^m(cos theta)`` with
``Y_n^m(theta, phi) = Ytil_n^m(cos theta) e^{i m phi}``, and Gauss-Legendre
quadrature for inner products over the sphere.

Normalization convention: ``2*pi * integral_{-1}^{1} Ytil_n^m Ytil_k^m ds =
delta_{nk}``, i.e. the full spherical harmonics are orthonormal on the unit
sphere.  The Condon-Shortley phase is kept, so ``Ytil_1^1(0) =
-sqrt(3/(8*pi))`` and ``Ytil_n^{-m} = (-1)^m Ytil_n^m``.
"""

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Quadrature",
    "default_node_count",
    "gauss_quadrature",
    "laplace_eigenvalue",
    "latitude_derivative_table",
    "latitude_function",
    "latitude_seed_constant",
    "latitude_table",
    "mode_inner_product",
    "recurrence_coeff",
]


def laplace_eigenvalue(n: int) -> int:
    """Eigenvalue n*(n+1) of the negative Laplace-Beltrami operator."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    return n * (n + 1)


def recurrence_coeff(n: int, m: int) -> float:
    """Coefficient a_n^m = sqrt((n-m)(n+m) / ((2n-1)(2n+1))).

    These couple neighboring degrees under multiplication by cos(theta):
    ``s*Ytil_n^m = a_n^m Ytil_{n-1}^m + a_{n+1}^m Ytil_{n+1}^m``.  The value
    is zero exactly when n == |m| and depends on m only through |m|.
    """
    if n < 1:
        raise ValueError(f"recurrence coefficient needs n >= 1, got {n}")
    if n < abs(m):
        raise ValueError(f"need n >= |m|, got n={n}, m={m}")
    return math.sqrt((n - m) * (n + m) / ((2 * n - 1) * (2 * n + 1)))


def latitude_seed_constant(m: int) -> float:
    """Constant C with ``Ytil_{|m|}^m(s) = C * (1 - s^2)^{|m|/2}``.

    Computed from the stable product form
    ``C^2 = (2|m|+1)/(4*pi) * prod_{k=1}^{|m|} (2k-1)/(2k)``; the sign is
    (-1)^m for m >= 0 and +1 for m < 0 (Condon-Shortley).
    """
    am = abs(m)
    c2 = (2 * am + 1) / (4.0 * math.pi)
    for k in range(1, am + 1):
        c2 *= (2 * k - 1) / (2 * k)
    c = math.sqrt(c2)
    if m > 0 and m % 2 == 1:
        return -c
    return c


def _check_latitude_args(n: int, m: int, s: np.ndarray) -> None:
    if n < abs(m):
        raise ValueError(f"need n >= |m|, got n={n}, m={m}")
    if np.any(np.abs(s) > 1.0):
        raise ValueError("latitude argument must satisfy |s| <= 1")


def latitude_table(n_max: int, m: int, s) -> np.ndarray:
    """All latitude profiles Ytil_n^m(s) for n = |m| .. n_max.

    Returns an array of shape ``(n_max - |m| + 1,) + s.shape``, row k holding
    degree ``|m| + k``.  Rows are generated by the upward three-term
    recursion from the closed-form seed at n = |m|, which is stable in this
    direction for the degree ranges used here.
    """
    s = np.atleast_1d(np.asarray(s, dtype=float))
    _check_latitude_args(n_max, m, s)
    am = abs(m)
    out = np.empty((n_max - am + 1,) + s.shape)
    prev = np.zeros_like(s)
    cur = latitude_seed_constant(m) * (1.0 - s * s) ** (am / 2.0)
    out[0] = cur
    for n in range(am, n_max):
        a_next = recurrence_coeff(n + 1, m)
        a_cur = recurrence_coeff(n, m) if n >= max(1, am) else 0.0
        prev, cur = cur, (s * cur - a_cur * prev) / a_next
        out[n + 1 - am] = cur
    return out


def latitude_function(n: int, m: int, s):
    """Normalized latitude profile Ytil_n^m evaluated at s = cos(theta).

    Accepts a scalar or array ``s`` with |s| <= 1 and returns matching shape.
    """
    s_arr = np.atleast_1d(np.asarray(s, dtype=float))
    _check_latitude_args(n, m, s_arr)
    am = abs(m)
    prev = np.zeros_like(s_arr)
    cur = latitude_seed_constant(m) * (1.0 - s_arr * s_arr) ** (am / 2.0)
    for k in range(am, n):
        a_next = recurrence_coeff(k + 1, m)
        a_cur = recurrence_coeff(k, m) if k >= max(1, am) else 0.0
        prev, cur = cur, (s_arr * cur - a_cur * prev) / a_next
    if np.isscalar(s) or np.ndim(s) == 0:
        return float(cur[0])
    return cur


def latitude_derivative_table(n_max: int, m: int, s) -> np.ndarray:
    """Derivatives d/ds Ytil_n^m(s) for n = |m| .. n_max, |s| < 1 strictly.

    Uses ``(1-s^2) d/ds Ytil_n^m = (2n+1) a_n^m Ytil_{n-1}^m - n s Ytil_n^m``
    so the table shares the stability of the upward recursion.  The rows blow
    up at s = +-1 for m = 0; callers keep quadrature nodes interior.
    """
    s = np.atleast_1d(np.asarray(s, dtype=float))
    if np.any(np.abs(s) >= 1.0):
        raise ValueError("derivative table requires |s| < 1")
    am = abs(m)
    tab = latitude_table(n_max, m, s)
    out = np.empty_like(tab)
    one_minus = 1.0 - s * s
    for k, n in enumerate(range(am, n_max + 1)):
        below = tab[k - 1] if k > 0 else np.zeros_like(s)
        a_n = recurrence_coeff(n, m) if n >= max(1, am) else 0.0
        out[k] = ((2 * n + 1) * a_n * below - n * s * tab[k]) / one_minus
    return out


def default_node_count(n_max: int) -> int:
    """Quadrature size 2*n_max + 16: exactness margin for degree <= 2*n_max
    polynomial integrands."""
    return 2 * n_max + 16


@dataclass(frozen=True)
class Quadrature:
    """Gauss-Legendre rule on [-1, 1]: nodes in (-1, 1), positive weights."""

    nodes: np.ndarray
    weights: np.ndarray


def gauss_quadrature(k: int) -> Quadrature:
    """K-node Gauss-Legendre rule, exact for polynomials of degree <= 2K-1."""
    if k < 1:
        raise ValueError(f"need at least one node, got {k}")
    nodes, weights = np.polynomial.legendre.leggauss(k)
    return Quadrature(nodes=nodes, weights=weights)


def mode_inner_product(f, g, quad: Quadrature) -> complex:
    """Sphere inner product of two fixed-m fields from latitude samples.

    For ``u = F(cos theta) e^{i m phi}`` and ``v = G(cos theta) e^{i m phi}``
    sampled at ``quad.nodes``, returns
    ``2*pi * sum_k w_k F(s_k) conj(G(s_k))``.
    """
    f = np.asarray(f)
    g = np.asarray(g)
    if f.shape != quad.nodes.shape or g.shape != quad.nodes.shape:
        raise ValueError("samples must match the quadrature nodes")
    return complex(2.0 * math.pi * np.sum(quad.weights * f * np.conj(g)))
