"""
Real-coefficient polynomials and rational transfer functions in s.

Coefficients are stored in ascending powers (``coeffs[k]`` multiplies ``s**k``).
Values are immutable; nothing here cancels common factors, so equality is
checked pointwise by cross-multiplication rather than coefficient identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np
from numpy.polynomial import polynomial as P

from sea_mtt.exceptions import IdenticallySingular, PoleAtFrequency

Scalar = Union[int, float]


def _normalize(coeffs: Iterable[float]) -> tuple[float, ...]:
    """Drop trailing exact zeros; the zero polynomial is ``(0.0,)``."""
    values = [float(c) for c in coeffs]
    while len(values) > 1 and values[-1] == 0.0:
        values.pop()
    if not values:
        values = [0.0]
    return tuple(values)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial in s with real coefficients, ascending powers."""

    coeffs: tuple[float, ...]

    def __init__(self, coeffs: Iterable[float] | Scalar):
        if isinstance(coeffs, (int, float)):
            coeffs = [coeffs]
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    @classmethod
    def s(cls) -> "Polynomial":
        """The polynomial ``s``."""
        return cls([0.0, 1.0])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c == 0.0 for c in self.coeffs)

    def __call__(self, s: complex | np.ndarray) -> complex | np.ndarray:
        # numpy's polyval is a Horner loop over the ascending coefficients
        return P.polyval(s, self.coeffs)

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return poly_add(self, _as_poly(other))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return poly_add(self, -_as_poly(other))

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return poly_mul(self, _as_poly(other))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0.0 and self.degree > 0:
                continue
            if k == 0:
                terms.append(f"{c:g}")
            elif k == 1:
                terms.append(f"{c:g}*s")
            else:
                terms.append(f"{c:g}*s^{k}")
        return "Polynomial(" + " + ".join(terms).replace("+ -", "- ") + ")"


def _as_poly(value: "Polynomial | Scalar") -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial([value])


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    """Coefficient-wise sum, normalized."""
    return Polynomial(P.polyadd(a.coeffs, b.coeffs))


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """Convolution of the coefficient lists, normalized."""
    return Polynomial(P.polymul(a.coeffs, b.coeffs))


@dataclass(frozen=True)
class RationalTF:
    """Ratio of two real polynomials in s.

    The denominator must not be identically zero. No pole-zero cancellation is
    ever attempted.
    """

    num: Polynomial
    den: Polynomial

    def __post_init__(self) -> None:
        if self.den.is_zero():
            raise IdenticallySingular("Denominator polynomial is identically zero")

    @classmethod
    def constant(cls, value: Scalar) -> "RationalTF":
        return cls(Polynomial([value]), Polynomial([1.0]))

    @classmethod
    def from_coeffs(cls, num: Iterable[float], den: Iterable[float]) -> "RationalTF":
        """Build from ascending coefficient lists."""
        return cls(Polynomial(num), Polynomial(den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __call__(self, s: complex | np.ndarray) -> complex | np.ndarray:
        return evaluate(self, s)

    def __add__(self, other: "RationalTF | Scalar") -> "RationalTF":
        return tf_add(self, _as_tf(other))

    __radd__ = __add__

    def __neg__(self) -> "RationalTF":
        return tf_scale(self, -1.0)

    def __sub__(self, other: "RationalTF | Scalar") -> "RationalTF":
        return tf_add(self, -_as_tf(other))

    def __mul__(self, other: "RationalTF | Scalar") -> "RationalTF":
        if isinstance(other, (int, float)):
            return tf_scale(self, other)
        return tf_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: "RationalTF | Scalar") -> "RationalTF":
        if isinstance(other, (int, float)):
            return tf_scale(self, 1.0 / other)
        return tf_div(self, other)

    def is_close(
        self,
        other: "RationalTF",
        omegas: Iterable[float],
        rtol: float = 1e-10,
    ) -> bool:
        """Pointwise equality on ``s = jω`` by cross-multiplication."""
        s = 1j * np.asarray(list(omegas), dtype=float)
        lhs = self.num(s) * other.den(s)
        rhs = other.num(s) * self.den(s)
        scale = np.maximum(np.abs(lhs), np.abs(rhs))
        return bool(np.all(np.abs(lhs - rhs) <= rtol * scale))

    def __repr__(self) -> str:
        return f"RationalTF(num={self.num!r}, den={self.den!r})"


def _as_tf(value: "RationalTF | Scalar") -> RationalTF:
    if isinstance(value, RationalTF):
        return value
    return RationalTF.constant(value)


def tf_add(a: RationalTF, b: RationalTF) -> RationalTF:
    """a/b + c/d = (ad + cb)/(bd)."""
    return RationalTF(a.num * b.den + b.num * a.den, a.den * b.den)


def tf_mul(a: RationalTF, b: RationalTF) -> RationalTF:
    """(a/b)(c/d) = ac/bd."""
    return RationalTF(a.num * b.num, a.den * b.den)


def tf_scale(a: RationalTF, k: Scalar) -> RationalTF:
    """Scale the numerator by a real constant."""
    return RationalTF(a.num * float(k), a.den)


def tf_div(a: RationalTF, b: RationalTF) -> RationalTF:
    """(a/b)/(c/d) = ad/bc."""
    if b.is_zero():
        raise IdenticallySingular("Division by an identically zero transfer function")
    return RationalTF(a.num * b.den, a.den * b.num)


def feedback(forward: RationalTF, loop: RationalTF) -> RationalTF:
    """Return forward / (1 + forward·loop) as a single rational function.

    Raises:
        IdenticallySingular: if 1 + forward·loop is identically zero.
    """
    den = forward.den * loop.den + forward.num * loop.num
    if den.is_zero():
        raise IdenticallySingular("1 + forward*loop is identically zero")
    return RationalTF(forward.num * loop.den, den)


def evaluate(g: RationalTF, s: complex | np.ndarray) -> complex | np.ndarray:
    """Evaluate g at arbitrary complex s (scalar or array)."""
    num = g.num(s)
    den = g.den(s)
    if np.any(den == 0):
        bad = np.atleast_1d(np.asarray(s))[np.atleast_1d(den == 0)][0]
        raise PoleAtFrequency(float(abs(np.imag(bad))))
    return num / den


def eval_jw(g: RationalTF, omega: float) -> complex:
    """Evaluate g(jω) for a non-negative frequency in rad/s."""
    if omega < 0:
        raise ValueError(f"omega must be non-negative, got {omega}")
    return complex(evaluate(g, 1j * float(omega)))


def freqresp(g: RationalTF, omegas: Iterable[float] | np.ndarray) -> np.ndarray:
    """Evaluate g(jω) on an array of non-negative frequencies.

    Samples sitting on a pole come back as ``nan``; callers decide whether
    that is fatal.
    """
    w = np.asarray(omegas, dtype=float)
    if np.any(w < 0):
        raise ValueError("omega must be non-negative")
    s = 1j * w
    num = g.num(s)
    den = g.den(s)
    out = np.full(w.shape, np.nan + 0j, dtype=complex)
    ok = den != 0
    out[ok] = num[ok] / den[ok]
    return out
