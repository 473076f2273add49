"""The classes of functions starlike / convex with respect to symmetric points.

``STARLIKE_SYM``:  2 z f'(z) / (f(z) - f(-z))        = (1 + w) / (1 - w)
``CONVEX_SYM``:    2 (z f'(z))' / (f(z) - f(-z))'    = (1 + w) / (1 - w)

for a Schwarz function ``w``.  Series are generated by equating coefficients
in the denominator-cleared identities, which avoids dividing by
``f(z) - f(-z)`` (it has zero constant term).
"""

from __future__ import annotations

import cmath
import enum
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .schwarz import SchwarzTriple, validate_schwarz_triple
from .series import EXACT, SeriesDomainError, TruncatedSeries

logger = logging.getLogger(__name__)


class Family(enum.Enum):
    STARLIKE_SYM = "ss"
    CONVEX_SYM = "ks"

    @property
    def label(self) -> str:
        return {"ss": "S*_S", "ks": "K_S"}[self.value]


class Named(enum.Enum):
    F1 = "f1"  # z/(1-z^2)
    F2 = "f2"  # z/(1-z)
    F3 = "f3"  # (1/2) log((1+z)/(1-z))
    F4 = "f4"  # -log(1-z)
    KOEBE = "koebe"  # z/(1-z)^2


@dataclass(frozen=True)
class TaylorTriple:
    a2: complex
    a3: complex
    a4: complex

    def __iter__(self):
        return iter((self.a2, self.a3, self.a4))


def _require_admissible(c: SchwarzTriple) -> None:
    verdict = validate_schwarz_triple(c)
    if not verdict:
        raise ValueError(f"inadmissible Schwarz triple {c} (slacks {verdict.slacks})")


def _frac(p, q, exact: bool):
    return Fraction(p, q) if exact else p / q


def _exact(*values) -> bool:
    return not any(isinstance(v, (float, complex)) for v in values)


def taylor_from_schwarz(family: Family, c: SchwarzTriple) -> TaylorTriple:
    """(a2, a3, a4) of the function generated by a Schwarz function with these c's."""
    _require_admissible(c)
    c1, c2, c3 = c
    ex = _exact(c1, c2, c3)
    a4_core = c3 + 3 * c1 * c2 + 2 * c1 ** 3
    if family is Family.STARLIKE_SYM:
        return TaylorTriple(c1, c2 + c1 * c1, a4_core * _frac(1, 2, ex))
    return TaylorTriple(
        c1 * _frac(1, 2, ex), (c2 + c1 * c1) * _frac(1, 3, ex), a4_core * _frac(1, 8, ex)
    )


def h21_from_schwarz(family: Family, c: SchwarzTriple):
    """gamma_1 gamma_3 - gamma_2^2 of the generated function, in Schwarz coordinates."""
    _require_admissible(c)
    c1, c2, c3 = c
    ex = _exact(c1, c2, c3)
    if family is Family.STARLIKE_SYM:
        num = c1 ** 4 + 6 * c1 * c3 - 12 * c2 * c2 - 6 * c1 * c1 * c2
        return num * _frac(1, 48, ex) if ex else num / 48
    num = 11 * c1 ** 4 + 36 * c1 * c3 - 20 * c1 * c1 * c2 - 64 * c2 * c2
    return num * _frac(1, 2304, ex) if ex else num / 2304


def h21_from_schwarz_array(family: Family, c):
    """Vectorized :func:`h21_from_schwarz` over a ``(n, 3)`` complex array (no admissibility check)."""
    c1, c2, c3 = c[:, 0], c[:, 1], c[:, 2]
    if family is Family.STARLIKE_SYM:
        return (c1 ** 4 + 6 * c1 * c3 - 12 * c2 * c2 - 6 * c1 * c1 * c2) / 48
    return (11 * c1 ** 4 + 36 * c1 * c3 - 20 * c1 * c1 * c2 - 64 * c2 * c2) / 2304


def build_function_series(family: Family, w: TruncatedSeries, order: int) -> TruncatedSeries:
    """The normalized ``f`` satisfying the family's subordination identity to ``order``.

    With ``g = f(z) - f(-z)`` (so ``g_k = 2 a_k`` for odd k, else 0), the
    coefficient of ``z^n`` (STARLIKE_SYM) or ``z^(n-1)`` (CONVEX_SYM) gives

        lead(n) a_n = 2 sum_j w_j P_{n-j} + sum_j w_j Q_{n-j}

    with ``P_k = k a_k``, ``Q_k = g_k`` and ``lead = 2n - 2[n odd]`` for
    STARLIKE_SYM, and ``P_k = k^2 a_k``, ``Q_k = k g_k`` and
    ``lead = 2n^2 - 2n[n odd]`` for CONVEX_SYM.  ``lead > 0`` for n >= 2.
    """
    if order < 4:
        raise ValueError("order must be at least 4")
    if w[0] != 0:
        raise SeriesDomainError("w(0) must vanish for a Schwarz function")
    if w.order < order - 1:
        raise SeriesDomainError(f"need w to order {order - 1}, got {w.order}")
    backend = w.backend
    ex = backend == EXACT
    starlike = family is Family.STARLIKE_SYM

    a = [0] * (order + 1)
    a[1] = 1
    P = [0] * (order + 1)
    Q = [0] * (order + 1)

    def record(k: int) -> None:
        g = 2 * a[k] if k % 2 else 0
        P[k] = (k if starlike else k * k) * a[k]
        Q[k] = g if starlike else k * g

    record(1)
    for n in range(2, order + 1):
        acc = 0
        for j in range(1, n):
            acc += w[j] * (2 * P[n - j] + Q[n - j])
        odd = n % 2
        lead = (2 * n - 2 * odd) if starlike else (2 * n * n - 2 * n * odd)
        a[n] = acc * _frac(1, lead, ex)
        record(n)
    return TruncatedSeries(tuple(a), backend)


def _horner(coeffs, z: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + complex(c)
    return acc


def _family_ratio(family: Family, f: TruncatedSeries, z: complex) -> complex:
    d1 = [k * f[k] for k in range(1, f.order + 1)]
    if family is Family.STARLIKE_SYM:
        num = 2 * z * _horner(d1, z)
        den = f.evaluate(z) - f.evaluate(-z)
    else:
        # (z f')' = sum k^2 a_k z^(k-1);  (f(z) - f(-z))' = f'(z) + f'(-z)
        d_zf = [k * k * f[k] for k in range(1, f.order + 1)]
        num = 2 * _horner(d_zf, z)
        den = _horner(d1, z) + _horner(d1, -z)
    if abs(den) < 1e-300:
        raise ZeroDivisionError(f"family ratio denominator vanishes at z={z}")
    return num / den


def truncation_tail(f: TruncatedSeries, radius: float, terms: int = 3) -> float:
    """Largest ``|a_k| r^k`` among the top ``terms`` coefficients (heuristic tail size)."""
    ks = range(max(0, f.order - terms + 1), f.order + 1)
    return max(abs(complex(f[k])) * radius ** k for k in ks)


def membership_residual(
    family: Family, f: TruncatedSeries, radius: float = 0.9, grid: int = 64, tail_tol: float = 1e-3
) -> float:
    """Minimum real part of the family ratio on ``|z| = radius`` (evidence, not proof)."""
    if not 0 < radius < 1:
        raise ValueError("radius must lie in (0, 1)")
    if grid < 8:
        raise ValueError("grid must be >= 8")
    tail = truncation_tail(f, radius)
    if tail > tail_tol:
        logger.warning(
            "truncation tail %.3g at radius %s exceeds %.1g; residual is rough evidence only",
            tail, radius, tail_tol,
        )
    points = (radius * cmath.exp(2j * math.pi * k / grid) for k in range(grid))
    return min(_family_ratio(family, f, z).real for z in points)


def named_function(tag: Named | str, order: int) -> TruncatedSeries:
    """Exact rational truncation of f1..f4 or the Koebe function."""
    if order < 4:
        raise ValueError("order must be at least 4")
    tag = Named(tag) if not isinstance(tag, Named) else tag
    coeff = {
        Named.F1: lambda k: 1 if k % 2 else 0,
        Named.F2: lambda k: 1,
        Named.F3: lambda k: Fraction(1, k) if k % 2 else 0,
        Named.F4: lambda k: Fraction(1, k),
        Named.KOEBE: lambda k: k,
    }[tag]
    return TruncatedSeries((0,) + tuple(coeff(k) for k in range(1, order + 1)), EXACT)


#: Schwarz functions that generate the named functions inside each family.
GENERATING_SCHWARZ = {
    (Family.STARLIKE_SYM, Named.F1): (0, 0, 1),
    (Family.STARLIKE_SYM, Named.F2): (0, 1),
    (Family.CONVEX_SYM, Named.F3): (0, 0, 1),
    (Family.CONVEX_SYM, Named.F4): (0, 1),
}

