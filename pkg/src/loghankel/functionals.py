"""Logarithmic coefficients and Hankel determinants of normalized series.

For ``f(z) = z + a_2 z^2 + ...`` the logarithmic coefficients are defined by
``log(f(z)/z) = 2 * sum(gamma_n z^n)``.  The second Hankel determinant of
``F_f/2`` is ``gamma_1*gamma_3 - gamma_2**2``; that definitional form is the
ground truth here, and its expansion in Taylor coefficients carries a factor
``1/4`` (see :func:`h21_log_closed_form`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .series import EXACT, SeriesDomainError, TruncatedSeries, series_log_unit


class EntryKind(enum.Enum):
    TAYLOR = "taylor"
    LOGARITHMIC = "logarithmic"


@dataclass(frozen=True)
class HankelSpec:
    q: int
    n: int
    entry_kind: EntryKind = EntryKind.LOGARITHMIC

    def __post_init__(self):
        if self.q < 1 or self.n < 1:
            raise ValueError(f"Hankel determinant needs q, n >= 1 (got q={self.q}, n={self.n})")

    @property
    def max_index(self) -> int:
        return self.n + 2 * (self.q - 1)


@dataclass(frozen=True)
class LogCoefficientVector:
    gammas: tuple
    source_order: int

    def __post_init__(self):
        if len(self.gammas) > self.source_order:
            raise ValueError("more logarithmic coefficients than the source order supports")

    def __getitem__(self, n: int):
        """1-based access: ``vec[1]`` is gamma_1."""
        if n < 1:
            raise IndexError("logarithmic coefficients are indexed from 1")
        return self.gammas[n - 1]

    def __len__(self) -> int:
        return len(self.gammas)


def _half(backend: str):
    return 0.5 if backend != EXACT else Fraction(1, 2)


def _check_normalized(f: TruncatedSeries) -> None:
    if f.order < 2:
        raise SeriesDomainError("need order >= 2 to read any logarithmic coefficient")
    if f[0] != 0 or f[1] != 1:
        raise SeriesDomainError(f"f is not normalized: a0={f[0]}, a1={f[1]}")


def log_coefficients(f: TruncatedSeries, m: int | None = None) -> LogCoefficientVector:
    """gamma_1..gamma_m of a normalized ``f``; ``m`` defaults to ``order(f) - 1``."""
    _check_normalized(f)
    usable = f.order - 1
    if m is None:
        m = usable
    if not 0 <= m <= usable:
        raise SeriesDomainError(f"f of order {f.order} yields at most {usable} gammas, asked for {m}")
    log_quotient = series_log_unit(f.shift_down())
    half = _half(f.backend)
    return LogCoefficientVector(
        tuple(half * log_quotient[n] for n in range(1, m + 1)), f.order
    )


def gamma_from_taylor(a2, a3, a4):
    """(gamma_1, gamma_2, gamma_3) in closed form from (a_2, a_3, a_4)."""
    half = Fraction(1, 2)
    third = Fraction(1, 3)
    if any(isinstance(v, (float, complex)) for v in (a2, a3, a4)):
        half, third = 0.5, 1 / 3
    g1 = half * a2
    g2 = half * (a3 - half * a2 * a2)
    g3 = half * (a4 - a2 * a3 + third * a2 ** 3)
    return g1, g2, g3


def h21_log_closed_form(a2, a3, a4):
    """gamma_1*gamma_3 - gamma_2**2 == (a2*a4 - a3**2 + a2**4/12) / 4."""
    if any(isinstance(v, (float, complex)) for v in (a2, a3, a4)):
        return (a2 * a4 - a3 * a3 + a2 ** 4 / 12) / 4
    return (a2 * a4 - a3 * a3 + Fraction(a2) ** 4 / 12) / 4


def determinant(matrix: Sequence[Sequence]):
    """Determinant by Gaussian elimination.

    Rational entries are eliminated exactly; complex/float entries use
    partial pivoting on modulus.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    exact = not any(isinstance(v, (float, complex)) for row in matrix for v in row)
    a = [[Fraction(v) if exact else complex(v) for v in row] for row in matrix]
    det = Fraction(1) if exact else 1 + 0j
    for col in range(n):
        if exact:
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        else:
            pivot = max(range(col, n), key=lambda r: abs(a[r][col]))
            if a[pivot][col] == 0:
                pivot = None
        if pivot is None:
            return Fraction(0) if exact else 0j
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            factor = a[r][col] / p
            if factor:
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
    return det


def _hankel_matrix(entry, spec: HankelSpec):
    return [[entry(spec.n + i + j) for j in range(spec.q)] for i in range(spec.q)]


def hankel_taylor(f: TruncatedSeries, spec: HankelSpec):
    """H_{q,n}(f) with entries a_{n+i+j-2} (``a_1`` is read from f, 1 if normalized)."""
    if spec.entry_kind is not EntryKind.TAYLOR:
        raise ValueError("hankel_taylor needs entry_kind TAYLOR")
    if f.order < spec.max_index:
        raise SeriesDomainError(
            f"H_{{{spec.q},{spec.n}}} needs a_{spec.max_index}, series has order {f.order}"
        )
    return determinant(_hankel_matrix(lambda k: f[k], spec))


def hankel_log(f: TruncatedSeries, spec: HankelSpec):
    """H_{q,n}(F_f/2): the Hankel determinant of the logarithmic coefficients."""
    if spec.entry_kind is not EntryKind.LOGARITHMIC:
        raise ValueError("hankel_log needs entry_kind LOGARITHMIC")
    _check_normalized(f)
    if f.order - 1 < spec.max_index:
        raise SeriesDomainError(
            f"H_{{{spec.q},{spec.n}}}(F_f/2) needs gamma_{spec.max_index}, "
            f"series of order {f.order} gives only {f.order - 1}"
        )
    gammas = log_coefficients(f, spec.max_index)
    return determinant(_hankel_matrix(lambda k: gammas[k], spec))


def h21_log(f: TruncatedSeries):
    """Shorthand for ``hankel_log(f, HankelSpec(2, 1))``."""
    return hankel_log(f, HankelSpec(2, 1, EntryKind.LOGARITHMIC))
