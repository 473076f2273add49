"""Schwarz functions: coefficient admissibility and the Schur-parameter chain.

Every point of the closed polydisk ``|t_k| <= 1`` yields a genuine Schwarz
function through the Möbius chain

    g_3 = t_3,   g_k = (t_k + z g_{k+1}) / (1 + conj(t_k) z g_{k+1}),   w = z g_1,

so sampling Schur parameters never produces a non-realizable coefficient
triple.  The coefficient bounds checked by :func:`validate_schwarz_triple` are
necessary conditions only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterator

import numpy as np

from .series import EXACT, FLOAT, TruncatedSeries, series_div

TOL = 1e-12

#: Always emitted first by the samplers: t=(0,1,0) gives w=z^2, t=(1,0,0) gives w=z.
EXTREMAL_PREFIX = ((0, 1, 0), (1, 0, 0))


def _conj(v):
    return v.conjugate()


def _is_exact(*values) -> bool:
    return all(isinstance(v, Rational) for v in values)


@dataclass(frozen=True)
class SchwarzTriple:
    c1: complex
    c2: complex
    c3: complex

    def __iter__(self):
        return iter((self.c1, self.c2, self.c3))


@dataclass(frozen=True)
class Admissibility:
    valid: bool
    slacks: tuple  # (1-|c1|, 1-|c1|^2-|c2|, 1-|c1|^2-|c2|^2/(1+|c1|)-|c3|)

    def __bool__(self) -> bool:
        return self.valid


def validate_schwarz_triple(c: SchwarzTriple, tol: float = TOL) -> Admissibility:
    """Check |c1| <= 1, |c2| <= 1-|c1|^2, |c3| <= 1-|c1|^2-|c2|^2/(1+|c1|)."""
    if _is_exact(*c):
        a1, a2, a3 = (abs(Fraction(v)) for v in c)
        tol = 0
    else:
        a1, a2, a3 = (abs(complex(v)) for v in c)
    s1 = 1 - a1
    s2 = 1 - a1 * a1 - a2
    s3 = 1 - a1 * a1 - a2 * a2 / (1 + a1) - a3
    valid = s1 >= -tol and s2 >= -tol and s3 >= -tol
    return Admissibility(bool(valid), (s1, s2, s3))


@dataclass(frozen=True)
class SchurParams:
    t1: complex
    t2: complex
    t3: complex

    def __post_init__(self):
        for k, t in enumerate(self, start=1):
            if abs(t) > 1:
                raise ValueError(f"Schur parameter t{k}={t!r} lies outside the closed unit disk")

    def __iter__(self):
        return iter((self.t1, self.t2, self.t3))

    @property
    def exact(self) -> bool:
        return _is_exact(*self)


def schur_coefficients(t: SchurParams) -> SchwarzTriple:
    """First three Taylor coefficients of :func:`schwarz_from_schur` in closed form."""
    t1, t2, t3 = t
    d1 = 1 - t1 * _conj(t1)
    d2 = 1 - t2 * _conj(t2)
    return SchwarzTriple(t1, d1 * t2, d1 * (d2 * t3 - _conj(t1) * t2 * t2))


def schwarz_from_schur(t: SchurParams, order: int, backend: str | None = None) -> TruncatedSeries:
    """Truncated series of the Schwarz function built by the Möbius chain."""
    if order < 3:
        raise ValueError("order must be at least 3")
    if backend is None:
        backend = EXACT if t.exact else FLOAT
    if backend == EXACT and not t.exact:
        raise TypeError("exact backend needs rational Schur parameters")
    n = order - 1
    g = TruncatedSeries.constant(t.t3, n, backend)
    for tk in (t.t2, t.t1):
        if abs(tk) == 1:
            # the Möbius map collapses to the constant tk
            g = TruncatedSeries.constant(tk, n, backend)
            continue
        u = g.shift_up().truncate(n)
        g = series_div(tk + u, 1 + _conj(tk) * u)
    return g.shift_up()


def sample_schur_array(count: int, seed: int) -> np.ndarray:
    """``(count, 3)`` complex array of Schur parameters, extremal prefix first.

    Each parameter is uniform on the closed unit disk (radius sqrt(U), angle
    2*pi*U) drawn from a PCG64 generator seeded with ``seed``.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    out = np.empty((count, 3), dtype=complex)
    k = min(count, len(EXTREMAL_PREFIX))
    out[:k] = np.array(EXTREMAL_PREFIX[:k], dtype=complex)
    rest = count - k
    if rest:
        rng = np.random.default_rng(seed)
        radius = np.sqrt(rng.random((rest, 3)))
        angle = 2 * math.pi * rng.random((rest, 3))
        out[k:] = radius * np.exp(1j * angle)
    return out


def sample_schur(count: int, seed: int) -> Iterator[SchurParams]:
    """Deterministic stream of :class:`SchurParams`; see :func:`sample_schur_array`."""
    for row in sample_schur_array(count, seed):
        yield SchurParams(*(complex(v) for v in row))


def schur_coefficients_array(t: np.ndarray) -> np.ndarray:
    """Vectorized :func:`schur_coefficients` over rows of a ``(n, 3)`` array."""
    t1, t2, t3 = t[:, 0], t[:, 1], t[:, 2]
    d1 = 1 - np.abs(t1) ** 2
    d2 = 1 - np.abs(t2) ** 2
    return np.stack([t1, d1 * t2, d1 * (d2 * t3 - np.conj(t1) * t2 * t2)], axis=1)
