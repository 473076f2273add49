"""Maximization of the majorant surfaces over the region Omega, and sampling checks.

For ``x = |c1|``, ``y = |c2|`` the triangle inequality and the Schwarz
coefficient bounds give

    48   |H| <= F(x, y) = x^4 + 6x(1 - x^2 - y^2/(1+x)) + 6x^2 y + 12 y^2    (S*_S)
    2304 |H| <= G(x, y) = 11x^4 + 36x(1 - x^2 - y^2/(1+x)) + 20x^2 y + 64 y^2 (K_S)

on ``Omega = {0 <= x <= 1, 0 <= y <= 1 - x^2}``.  Omega is gridded through
``(x, s) -> (x, s(1 - x^2))`` with ``(x, s)`` in the unit square.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .families import Family, h21_from_schwarz_array
from .schwarz import sample_schur_array, schur_coefficients_array

VIOLATION_TOL = 1e-12
OMEGA_TOL = 1e-12

#: Denominator of the majorant: |H| <= max / SCALE.
SCALE = {Family.STARLIKE_SYM: 48, Family.CONVEX_SYM: 2304}
SHARP_BOUND = {Family.STARLIKE_SYM: Fraction(1, 4), Family.CONVEX_SYM: Fraction(1, 36)}

# (quartic, cubic, cross, y^2) weights: F = (1, 6, 6, 12), G = (11, 36, 20, 64)
_WEIGHTS = {Family.STARLIKE_SYM: (1, 6, 6, 12), Family.CONVEX_SYM: (11, 36, 20, 64)}

# Restriction polynomials, lowest degree first.
RESTRICTIONS = {
    Family.STARLIKE_SYM: {
        "y=0": (0, 6, 0, -6, 1),  # x^4 - 6x^3 + 6x
        "x=0": (0, 0, 12),  # 12 y^2
        "y=1-x^2": (12, 0, -12, 0, 1),  # x^4 - 12x^2 + 12
    },
    Family.CONVEX_SYM: {
        "y=0": (0, 36, 0, -36, 11),
        "x=0": (0, 0, 64),
        "y=1-x^2": (64, 0, -72, 0, 19),
    },
}


@dataclass(frozen=True)
class RegionPoint:
    x: float
    y: float

    def __post_init__(self):
        if not in_omega(self.x, self.y):
            raise ValueError(f"({self.x}, {self.y}) lies outside Omega")

    @property
    def interior(self) -> bool:
        return 0 < self.x < 1 and 0 < self.y < 1 - self.x * self.x


def in_omega(x: float, y: float, tol: float = OMEGA_TOL) -> bool:
    return -tol <= x <= 1 + tol and -tol <= y <= 1 - x * x + tol


def surface_array(family: Family, x, y):
    """F (or G) evaluated elementwise; no region check."""
    q, c, m, s = _WEIGHTS[family]
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return q * x ** 4 + c * x * (1 - x * x - y * y / (1 + x)) + m * x * x * y + s * y * y


def surface_value(family: Family, p: RegionPoint) -> float:
    return float(surface_array(family, p.x, p.y))


def critical_residuals_array(family: Family, x, y):
    """(dF/dx, cleared dF/dy) as written for the critical-point system."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if family is Family.STARLIKE_SYM:
        rx = 4 * x ** 3 - 18 * x * x + 12 * x * y - 6 * y * y / (1 + x) ** 2 + 6
        ry = x * x + x ** 3 + 4 * y + 2 * x * y
    else:
        rx = 44 * x ** 3 - 108 * x * x + 40 * x * y - 36 * y * y / (1 + x) ** 2 + 36
        ry = 5 * x * x + 5 * x ** 3 + 32 * y + 14 * x * y
    return rx, ry


def critical_residuals(family: Family, p: RegionPoint) -> tuple[float, float]:
    if not p.interior:
        raise ValueError(f"{p} is on the boundary of Omega")
    rx, ry = critical_residuals_array(family, p.x, p.y)
    return float(rx), float(ry)


# -- boundary -----------------------------------------------------------------


def _polyval(coeffs, t):
    acc = np.zeros_like(np.asarray(t, dtype=float))
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _polyder(coeffs):
    return tuple(k * c for k, c in enumerate(coeffs))[1:] or (0,)


def maximize_univariate(coeffs, lo: float = 0.0, hi: float = 1.0,
                        pieces: int = 10_000, xtol: float = 1e-12) -> tuple[float, float]:
    """Max of a polynomial on [lo, hi]: endpoints plus bisected derivative sign changes.

    Returns ``(value, argument)``; ties go to the smallest argument.
    """
    d = _polyder(coeffs)
    knots = np.linspace(lo, hi, pieces + 1)
    dv = _polyval(d, knots)
    candidates = [lo, hi]
    for i in np.flatnonzero(dv == 0):
        candidates.append(float(knots[i]))
    for i in np.flatnonzero(dv[:-1] * dv[1:] < 0):
        a, b = float(knots[i]), float(knots[i + 1])
        fa = float(dv[i])
        while b - a > xtol:
            mid = 0.5 * (a + b)
            fm = float(_polyval(d, mid))
            if (fm < 0) == (fa < 0) and fm != 0:
                a, fa = mid, fm
            else:
                b = mid
        candidates.append(0.5 * (a + b))
    candidates.sort()
    values = [float(_polyval(coeffs, t)) for t in candidates]
    best = max(range(len(values)), key=lambda k: (values[k], -candidates[k]))
    return values[best], candidates[best]


@dataclass(frozen=True)
class BoundaryMax:
    label: str
    value: float
    argmax: RegionPoint


def boundary_maxima(family: Family) -> dict[str, BoundaryMax]:
    """Maxima of the surface restricted to the three pieces of the boundary of Omega."""
    out = {}
    for label, coeffs in RESTRICTIONS[family].items():
        value, t = maximize_univariate(coeffs)
        if label == "y=0":
            p = RegionPoint(t, 0.0)
        elif label == "x=0":
            p = RegionPoint(0.0, t)
        else:
            p = RegionPoint(t, 1 - t * t)
        out[label] = BoundaryMax(label, value, p)
    return out


# -- global maximization --------------------------------------------------------


@dataclass
class SurfaceReport:
    family: Family
    max_value: float
    argmax: RegionPoint
    grid_size: int
    refinement_steps: int
    boundary_maxima: dict[str, BoundaryMax] = field(default_factory=dict)
    interior_ry_min: float = float("nan")

    @property
    def interior_critical_free(self) -> bool:
        return self.interior_ry_min > 0


def _omega_grid(n: int):
    xs = np.linspace(0.0, 1.0, n)
    ss = np.linspace(0.0, 1.0, n)
    X, S = np.meshgrid(xs, ss, indexing="ij")
    return X, S * (1 - X * X), S


def interior_ry_min(family: Family, n: int, y_min: float = 0.0) -> float:
    """Smallest cleared y-residual over the interior points of an ``n x n`` Omega grid."""
    X, Y, S = _omega_grid(n)
    mask = (X > 0) & (X < 1) & (S > 0) & (S < 1) & (Y >= y_min)
    _, ry = critical_residuals_array(family, X[mask], Y[mask])
    return float(ry.min())


def maximize_surface(family: Family, grid: int = 1001, tol: float = 1e-9) -> SurfaceReport:
    """Grid search on the (x, s) square followed by compass refinement.

    The compass step starts at one grid cell and halves whenever no neighbour
    improves; it stops once the step falls below ``tol``.
    """
    if grid < 101:
        raise ValueError("grid must be >= 101")
    if tol <= 0:
        raise ValueError("tol must be positive")
    X, Y, S = _omega_grid(grid)
    V = surface_array(family, X, Y)
    # argmax returns the first hit in row-major (x, then s) order: smallest x, then y
    i, j = np.unravel_index(int(np.argmax(V)), V.shape)
    bx, bs, best = float(X[i, j]), float(S[i, j]), float(V[i, j])

    def value(x, s):
        return float(surface_array(family, x, s * (1 - x * x)))

    step = 1.0 / (grid - 1)
    steps = 0
    while step >= tol:
        moved = False
        for dx, ds in ((-step, 0), (step, 0), (0, -step), (0, step)):
            x = min(1.0, max(0.0, bx + dx))
            s = min(1.0, max(0.0, bs + ds))
            v = value(x, s)
            if v > best:
                bx, bs, best, moved = x, s, v, True
                break
        steps += 1
        if not moved:
            step /= 2

    return SurfaceReport(
        family=family,
        max_value=best,
        argmax=RegionPoint(bx, bs * (1 - bx * bx)),
        grid_size=grid,
        refinement_steps=steps,
        boundary_maxima=boundary_maxima(family),
        interior_ry_min=interior_ry_min(family, grid),
    )


def bound_from_surface(family: Family, report: SurfaceReport) -> Fraction:
    """The implied bound on |H| as an exact rational of the (float) maximum."""
    return Fraction(report.max_value) / SCALE[family]


# -- sampling -------------------------------------------------------------------


@dataclass(frozen=True)
class SampleBatch:
    """Schur parameters, Schwarz coefficients and H values, one row per sample."""

    t: np.ndarray
    c: np.ndarray
    h: np.ndarray


def sample_h(family: Family, count: int, seed: int) -> SampleBatch:
    t = sample_schur_array(count, seed)
    c = schur_coefficients_array(t)
    return SampleBatch(t, c, h21_from_schwarz_array(family, c))


@dataclass
class StressReport:
    family: Family
    count: int
    seed: int
    bound: Fraction
    max_abs_h: float
    argmax_index: int
    argmax_params: tuple
    violations: list[tuple[int, float]]
    triangle_gap_max: float

    @property
    def passed(self) -> bool:
        return not self.violations


def triangle_gap(family: Family, c: np.ndarray, h: np.ndarray) -> np.ndarray:
    """``SCALE*|H| - surface(|c1|, |c2|)``: never positive beyond rounding."""
    x = np.abs(c[:, 0])
    y = np.abs(c[:, 1])
    return SCALE[family] * np.abs(h) - surface_array(family, x, y)


def stress_test(family: Family, count: int, seed: int) -> StressReport:
    """Search ``count`` realizable Schwarz functions for violations of the sharp bound."""
    batch = sample_h(family, count, seed)
    habs = np.abs(batch.h)
    limit = float(SHARP_BOUND[family]) + VIOLATION_TOL
    bad = np.flatnonzero(habs > limit)
    k = int(np.argmax(habs))
    return StressReport(
        family=family,
        count=count,
        seed=seed,
        bound=SHARP_BOUND[family],
        max_abs_h=float(habs[k]),
        argmax_index=k,
        argmax_params=tuple(complex(v) for v in batch.t[k]),
        violations=[(int(i), float(habs[i])) for i in bad],
        triangle_gap_max=float(triangle_gap(family, batch.c, batch.h).max()),
    )
