"""
Certified spectral radii of integer matrices.

The characteristic polynomial is computed exactly and made squarefree. Its
roots are located numerically, polished by Newton's method at high precision,
and then enclosed in Weierstrass inclusion disks evaluated with interval
arithmetic. Each connected union of disks holds as many roots as it has
disks, which gives rigorous lower and upper bounds on the spectral radius.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np
from mpmath import iv, mp
from sympy import ZZ, Poly, symbols
from sympy.polys.matrices import DomainMatrix

from .braids import BraidWord
from .errors import InconsistencyError
from .representations import burau_at_minus_one, symplectic_action

REL_TOL = 1e-12
_X = symbols("x")


@dataclass(frozen=True)
class SpectralBound:
    lower: mpmath.mpf
    upper: mpmath.mpf

    @property
    def value(self) -> float:
        return float((self.lower + self.upper) / 2)

    @property
    def relative_width(self) -> float:
        if self.upper == 0:
            return 0.0
        return float((self.upper - self.lower) / self.upper)


def charpoly(matrix: list[list[int]]) -> list[int]:
    """Exact characteristic polynomial, coefficients from highest degree down."""
    n = len(matrix)
    if n == 0:
        return [1]
    dm = DomainMatrix([[ZZ(int(v)) for v in row] for row in matrix], (n, n), ZZ)
    return [int(c) for c in dm.charpoly()]


def squarefree_part(coeffs: list[int]) -> list[int]:
    p = Poly(coeffs, _X, domain=ZZ).sqf_part()
    return [int(c) for c in p.all_coeffs()]


def _newton(coeffs, z, tol):
    n = len(coeffs) - 1
    deriv = [coeffs[k] * (n - k) for k in range(n)]
    z = mpmath.mpc(z)
    for _ in range(200):
        dz = mpmath.polyval(coeffs, z) / mpmath.polyval(deriv, z)
        z -= dz
        if abs(dz) < tol:
            break
    return z


def _inclusion_bound(coeffs: list[int], zs) -> SpectralBound | None:
    """Bounds from Weierstrass disks around the approximations zs, or None."""
    n = len(coeffs) - 1
    izs = [iv.mpc(z.real, z.imag) for z in zs]
    radii = []
    for i, zi in enumerate(izs):
        pv = iv.mpc(0)
        for a in coeffs:
            pv = pv * zi + a
        den = iv.mpc(coeffs[0])
        for j, zj in enumerate(izs):
            if j != i:
                den = den * (zi - zj)
        if 0 in abs(den):
            return None
        radii.append(mpmath.mpf((n * abs(pv / den)).b))
    # connected components of overlapping disks
    parent = list(range(n))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for i in range(n):
        for j in range(i + 1, n):
            if abs(zs[i] - zs[j]) <= radii[i] + radii[j]:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    mods = [abs(z) for z in zs]
    upper = max(mods[i] + radii[i] for i in range(n))
    lower = max(max(min(mods[i] - radii[i] for i in g), mpmath.mpf(0)) for g in groups.values())
    return SpectralBound(lower, upper)


def polynomial_root_radius(coeffs: list[int], rel_tol: float = REL_TOL) -> SpectralBound:
    """Certified enclosure of the largest root modulus of an integer polynomial."""
    sqf = squarefree_part(coeffs)
    n = len(sqf) - 1
    if n == 0:
        return SpectralBound(mpmath.mpf(0), mpmath.mpf(0))
    if n == 1:
        r = mpmath.mpf(abs(mpmath.mpf(sqf[1]) / sqf[0]))
        return SpectralBound(r, r)
    approx = np.roots(np.array(sqf, dtype=float))
    saved = (mp.prec, iv.prec)
    try:
        for dps in (60, 120, 240):
            mp.dps = dps
            iv.dps = dps
            tol = mpmath.mpf(10) ** (-dps + 10)
            if dps == 60:
                zs = [_newton(sqf, complex(z), tol) for z in approx]
            else:
                zs = mpmath.polyroots(sqf, maxsteps=400, extraprec=dps * 4)
                zs = [_newton(sqf, z, tol) for z in zs]
            bound = _inclusion_bound(sqf, zs)
            if bound is not None and bound.relative_width <= rel_tol:
                return bound
    finally:
        mp.prec, iv.prec = saved
    raise InconsistencyError("could not certify the spectral radius to the requested precision")


def spectral_radius(matrix: list[list[int]], rel_tol: float = REL_TOL) -> SpectralBound:
    return polynomial_root_radius(charpoly(matrix), rel_tol)


def homological_dilatation(b: BraidWord) -> float:
    """max(1, spectral radius of the reduced Burau matrix at t = -1)."""
    if b.n < 2:
        return 1.0
    return max(1.0, spectral_radius(burau_at_minus_one(b)).value)


def symplectic_dilatation(b: BraidWord) -> float:
    """max(1, spectral radius of the symplectic action)."""
    return max(1.0, spectral_radius(symplectic_action(b)).value)
