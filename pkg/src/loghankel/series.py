"""Truncated formal power series over an exact-rational or complex-float backend.

A :class:`TruncatedSeries` stores the coefficients of ``z**0 .. z**N`` and is
exact in every stored coefficient: truncation is the only approximation in the
exact backend.  Results never extend past the smallest input order.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from numbers import Complex, Rational
from typing import Iterable, Sequence

EXACT = "exact"
FLOAT = "float"
BACKENDS = (EXACT, FLOAT)


class BackendMismatchError(TypeError):
    """Raised when series from different scalar backends are combined."""


class SeriesDomainError(ValueError):
    """Raised when an operation's precondition on the coefficients fails."""


def _coerce(value, backend: str):
    if backend == EXACT:
        if isinstance(value, Rational):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"exact backend needs rational coefficients, got {value!r}")
    if not isinstance(value, Complex):
        raise TypeError(f"float backend needs numeric coefficients, got {value!r}")
    value = complex(value)
    if not (cmath.isfinite(value)):
        raise FloatingPointError(f"non-finite coefficient {value!r}")
    return value


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``coeffs[k]`` of ``z**k`` for ``k = 0..order``."""

    coeffs: tuple
    backend: str = EXACT

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise ValueError(f"unknown backend {self.backend!r}")
        if len(self.coeffs) < 1:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(
            self, "coeffs", tuple(_coerce(c, self.backend) for c in self.coeffs)
        )

    # -- construction -----------------------------------------------------

    @classmethod
    def from_coeffs(
        cls, coeffs: Iterable, order: int, backend: str = EXACT
    ) -> "TruncatedSeries":
        """Pad with zeros (or cut) so the result has exactly ``order + 1`` terms."""
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = list(coeffs)[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        return cls(tuple(cs), backend)

    @classmethod
    def zero(cls, order: int, backend: str = EXACT) -> "TruncatedSeries":
        return cls.from_coeffs((), order, backend)

    @classmethod
    def constant(cls, value, order: int, backend: str = EXACT) -> "TruncatedSeries":
        return cls.from_coeffs((value,), order, backend)

    @classmethod
    def one(cls, order: int, backend: str = EXACT) -> "TruncatedSeries":
        return cls.constant(1, order, backend)

    @classmethod
    def identity(cls, order: int, backend: str = EXACT) -> "TruncatedSeries":
        """The series ``z``."""
        return cls.from_coeffs((0, 1), order, backend)

    # -- basic access -----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesDomainError(
                f"cannot extend a series known to order {self.order} to {order}"
            )
        return TruncatedSeries(self.coeffs[: order + 1], self.backend)

    def to_float(self) -> "TruncatedSeries":
        """Explicit promotion to the complex-float backend."""
        if self.backend == FLOAT:
            return self
        return TruncatedSeries(tuple(complex(c) for c in self.coeffs), FLOAT)

    def shift_down(self) -> "TruncatedSeries":
        """Divide by ``z``; the constant term must vanish.  Order drops by one."""
        if self.coeffs[0] != 0:
            raise SeriesDomainError("shift_down needs a zero constant term")
        if self.order < 1:
            raise SeriesDomainError("shift_down needs order >= 1")
        return TruncatedSeries(self.coeffs[1:], self.backend)

    def shift_up(self) -> "TruncatedSeries":
        """Multiply by ``z``.  Order grows by one (the new top term is exact)."""
        return TruncatedSeries((0,) + self.coeffs, self.backend)

    def scale(self, factor) -> "TruncatedSeries":
        return TruncatedSeries(tuple(factor * c for c in self.coeffs), self.backend)

    def evaluate(self, z: complex) -> complex:
        """Horner evaluation of the truncated polynomial at a complex point."""
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    # -- operators --------------------------------------------------------

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order, self.backend)

    def __add__(self, other):
        return series_add(self, self._lift(other))

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return series_add(self, -self._lift(other))

    def __rsub__(self, other):
        return series_add(self._lift(other), -self)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return series_div(self, self._lift(other))

    def __rtruediv__(self, other):
        return series_div(self._lift(other), self)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            terms.append(f"({c})*{mono}" if mono else f"({c})")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(z^{self.order + 1})"


def _check_backends(*series: TruncatedSeries) -> str:
    backends = {s.backend for s in series}
    if len(backends) != 1:
        raise BackendMismatchError(f"mixed backends {sorted(backends)}")
    return backends.pop()


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    backend = _check_backends(a, b)
    n = min(a.order, b.order)
    return TruncatedSeries(tuple(a[k] + b[k] for k in range(n + 1)), backend)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller order."""
    backend = _check_backends(a, b)
    n = min(a.order, b.order)
    out = []
    for k in range(n + 1):
        acc = 0
        for i in range(k + 1):
            acc += a[i] * b[k - i]
        out.append(acc)
    return TruncatedSeries(tuple(out), backend)


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Return ``q`` with ``q * b == a`` up to the smaller order."""
    backend = _check_backends(a, b)
    if b[0] == 0:
        raise SeriesDomainError("divisor has zero constant term")
    n = min(a.order, b.order)
    inv = 1 / b[0] if backend == FLOAT else Fraction(1) / b[0]
    q: list = []
    for k in range(n + 1):
        acc = a[k]
        for i in range(1, k + 1):
            acc -= b[i] * q[k - i]
        q.append(acc * inv)
    return TruncatedSeries(tuple(q), backend)


def series_derivative(a: TruncatedSeries) -> TruncatedSeries:
    if a.order < 1:
        raise SeriesDomainError("derivative needs order >= 1")
    return TruncatedSeries(tuple(k * a[k] for k in range(1, a.order + 1)), a.backend)


def _integer_inverse(k: int, backend: str):
    return 1.0 / k if backend == FLOAT else Fraction(1, k)


def series_log_unit(u: TruncatedSeries) -> TruncatedSeries:
    """Formal ``log u`` for ``u(0) == 1``, from ``u * L' == u'``."""
    if u[0] != 1:
        raise SeriesDomainError("log needs a unit constant term equal to 1")
    backend = u.backend
    L = [0] * (u.order + 1)
    for n in range(1, u.order + 1):
        acc = n * u[n]
        for k in range(1, n):
            acc -= k * L[k] * u[n - k]
        L[n] = acc * _integer_inverse(n, backend)
    return TruncatedSeries(tuple(L), backend)


def series_exp_zero(v: TruncatedSeries) -> TruncatedSeries:
    """Formal ``exp v`` for ``v(0) == 0``, from ``E' == v' * E``."""
    if v[0] != 0:
        raise SeriesDomainError("exp needs a zero constant term")
    backend = v.backend
    E = [0] * (v.order + 1)
    E[0] = 1
    for n in range(1, v.order + 1):
        acc = 0
        for k in range(1, n + 1):
            acc += k * v[k] * E[n - k]
        E[n] = acc * _integer_inverse(n, backend)
    return TruncatedSeries(tuple(E), backend)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(z))`` by Horner's scheme; ``inner(0)`` must vanish."""
    backend = _check_backends(outer, inner)
    if inner[0] != 0:
        raise SeriesDomainError("inner series must have zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = TruncatedSeries.constant(outer[n], n, backend)
    for k in range(n - 1, -1, -1):
        acc = series_mul(acc, inner)
        acc = TruncatedSeries((acc[0] + outer[k],) + acc.coeffs[1:], backend)
    return acc


def series_odd_part_reflect(f: TruncatedSeries) -> TruncatedSeries:
    """``f(z) - f(-z)``: doubles odd coefficients and drops even ones."""
    return TruncatedSeries(
        tuple(2 * c if k % 2 else 0 * c for k, c in enumerate(f.coeffs)), f.backend
    )


def as_series(coeffs: Sequence, backend: str = EXACT) -> TruncatedSeries:
    """Shorthand: the order is ``len(coeffs) - 1``."""
    return TruncatedSeries(tuple(coeffs), backend)
