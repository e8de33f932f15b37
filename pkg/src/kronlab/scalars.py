"""Scalar arithmetic backends.

Three interchangeable backends cover every computation in the library:

* ``rational``  -- exact rationals (:class:`fractions.Fraction`),
* ``gaussian``  -- exact complex numbers with rational parts
  (:class:`GaussianRational`),
* ``complex64`` -- double-precision complex floats (builtin :class:`complex`).

The two exact backends satisfy the field axioms bit-exactly, which is what
makes the identity checks elsewhere in the library decidable.  There is no
implicit promotion between backends: mixing, say, a Gaussian rational with a
float complex raises instead of silently losing exactness.  Plain ``int``
values are accepted anywhere as backend-neutral integers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Union

Rational = Union[int, Fraction]


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an integer or Fraction, got {type(x).__name__}")


class GaussianRational:
    """A complex number ``re + im*i`` with exact rational parts.

    Values are immutable; arithmetic with ``int`` and ``Fraction`` operands
    is allowed (the rationals embed exactly), arithmetic with floats or
    ``complex`` is refused.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0):
        object.__setattr__(self, "re", _to_fraction(re))
        object.__setattr__(self, "im", _to_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _parts(x):
        if isinstance(x, GaussianRational):
            return x.re, x.im
        if isinstance(x, (int, Fraction)):
            return Fraction(x), Fraction(0)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        return GaussianRational(self.re * c - self.im * d, self.re * d + self.im * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        n = c * c + d * d
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational((self.re * c + self.im * d) / n, (self.im * c - self.re * d) / n)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(p[0], p[1]) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def squared_modulus(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        # agrees with hash(Fraction) when the value is real
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def _rand_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _rand_gaussian(rng: random.Random) -> GaussianRational:
    return GaussianRational(_rand_rational(rng), _rand_rational(rng))


def _rand_complex(rng: random.Random) -> complex:
    return complex(rng.uniform(-1, 1), rng.uniform(-1, 1))


def _parse_rational(obj) -> Fraction:
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        return Fraction(obj.strip())
    raise ValueError(f"cannot parse rational scalar from {obj!r}")


def _format_rational(x) -> str:
    return str(_to_fraction(x))


def _parse_gaussian(obj) -> GaussianRational:
    if isinstance(obj, int):
        return GaussianRational(obj)
    if not isinstance(obj, str):
        raise ValueError(f"cannot parse gaussian scalar from {obj!r}")
    s = obj.strip().replace(" ", "")
    if not s.endswith("i"):
        return GaussianRational(Fraction(s))
    body = s[:-1]
    # split at the sign separating real and imaginary parts; a leading sign
    # or the sign of a numerator after '/' never qualifies
    split = -1
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "+-/":
            split = i
            break
    if split < 0:
        return GaussianRational(0, Fraction(body))
    re_part, im_part = body[:split], body[split:]
    if im_part in ("+", "-"):
        im_part += "1"
    return GaussianRational(Fraction(re_part), Fraction(im_part))


def _format_gaussian(x) -> str:
    if isinstance(x, (int, Fraction)):
        x = GaussianRational(x)
    return str(x)


def _parse_complex(obj) -> complex:
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return complex(float(obj[0]), float(obj[1]))
    if isinstance(obj, (int, float)):
        return complex(obj)
    raise ValueError(f"cannot parse complex scalar from {obj!r} (expected [re, im])")


def _format_complex(x) -> list:
    z = complex(x)
    return [z.real, z.imag]


@dataclass(frozen=True)
class Backend:
    """One scalar arithmetic, bundling identities, parsing and generation."""

    name: str
    zero: Any
    one: Any
    exact: bool
    random: Callable[[random.Random], Any] = field(repr=False)
    parse: Callable[[Any], Any] = field(repr=False)
    format: Callable[[Any], Any] = field(repr=False)


RATIONAL = Backend("rational", Fraction(0), Fraction(1), True,
                   _rand_rational, _parse_rational, _format_rational)
GAUSSIAN = Backend("gaussian", GaussianRational(0), GaussianRational(1), True,
                   _rand_gaussian, _parse_gaussian, _format_gaussian)
COMPLEX = Backend("complex64", complex(0), complex(1), False,
                  _rand_complex, _parse_complex, _format_complex)

BACKENDS = {b.name: b for b in (RATIONAL, GAUSSIAN, COMPLEX)}


def get_backend(name: str) -> Backend:
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; choose from {sorted(BACKENDS)}") from None


def backend_of(x) -> Backend:
    """Classify a scalar value.  Plain ints count as rational."""
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return RATIONAL
    if isinstance(x, GaussianRational):
        return GAUSSIAN
    if isinstance(x, (float, complex)):
        return COMPLEX
    raise TypeError(f"not a supported scalar: {x!r}")


def _check_same(a, b) -> None:
    ba, bb = backend_of(a), backend_of(b)
    if ba is not bb:
        raise ValueError(f"backend mismatch: {ba.name} vs {bb.name}")


def add(a, b):
    _check_same(a, b)
    return a + b


def sub(a, b):
    _check_same(a, b)
    return a - b


def mul(a, b):
    _check_same(a, b)
    return a * b


def div(a, b):
    _check_same(a, b)
    if b == 0:
        raise ZeroDivisionError("scalar division by zero")
    return a / b


def conj(a):
    """Complex conjugate; identity on rationals."""
    return a.conjugate()


def to_rational(x) -> Fraction:
    """Explicit conversion into the rational backend."""
    if isinstance(x, GaussianRational):
        if x.im != 0:
            raise ValueError(f"{x} has a nonzero imaginary part")
        return x.re
    if isinstance(x, (float, complex)):
        raise ValueError("refusing implicit float-to-rational conversion")
    return _to_fraction(x)


def to_gaussian(x) -> GaussianRational:
    """Explicit conversion into the Gaussian-rational backend."""
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(_to_fraction(x))


def to_complex(x) -> complex:
    """Explicit (lossy for exact inputs) conversion into complex floats."""
    if isinstance(x, GaussianRational):
        return complex(float(x.re), float(x.im))
    if isinstance(x, Fraction):
        return complex(float(x))
    return complex(x)
