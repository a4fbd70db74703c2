"""Points on the unit circle, stored as angles in turns.

An angle is either an exact ``Fraction`` p/q in lowest terms (roots of
unity) or a plain ``float``.  All integer powers are computed on the angle:
exact points use modular arithmetic on p*k mod q, so exponents as large as
j! stay exact; float points use (k*angle) mod 1.

Complex values are produced by :func:`turn_to_complex`, which reduces the
angle to the first octant before calling cos/sin.  Two consequences the
rest of the library relies on:

* identical angles always map to bit-identical complex values, so sums
  over a fixed atom list cancel exactly when the reduced angles match;
* quarter-turn points (1, i, -1, -i) are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Angle = Union[Fraction, float]

# float fractional parts this close to 1 are snapped to 0 (cell boundary fuzz)
FRAC_SNAP = 1e-13


def frac_part(x: float) -> float:
    """Fractional part in [0, 1), snapping values within FRAC_SNAP of 1 to 0."""
    f = x % 1.0
    if f > 1.0 - FRAC_SNAP:
        return 0.0
    return f


def turn_to_complex(t: Angle) -> complex:
    """e^{2*pi*i*t} for t in [0, 1), via quadrant reduction.

    Deterministic in the angle: equal t (exact or float) give bit-equal
    results.  Angles that are multiples of 1/4 are exact.
    """
    if isinstance(t, Fraction):
        q, r = divmod(4 * t, 1)
        quadrant = int(q) % 4
        r_f = float(r) / 4.0
    else:
        u = t % 1.0
        quadrant = int(4.0 * u) % 4
        r_f = u - quadrant * 0.25
        if r_f < 0.0:
            r_f = 0.0
    if r_f <= 0.125:
        x = math.cos(2.0 * math.pi * r_f)
        y = math.sin(2.0 * math.pi * r_f)
    else:
        s = 0.25 - r_f
        x = math.sin(2.0 * math.pi * s)
        y = math.cos(2.0 * math.pi * s)
    if quadrant == 0:
        return complex(x, y)
    if quadrant == 1:
        return complex(-y, x)
    if quadrant == 2:
        return complex(-x, -y)
    return complex(y, -x)


@dataclass(frozen=True)
class CirclePoint:
    """A point lambda = e^{2*pi*i*angle} on the unit circle."""

    angle: Angle

    def __post_init__(self):
        a = self.angle
        if isinstance(a, Fraction):
            if not (0 <= a < 1):
                object.__setattr__(self, "angle", a % 1)
        elif isinstance(a, float):
            object.__setattr__(self, "angle", frac_part(a))
        elif isinstance(a, int):
            object.__setattr__(self, "angle", Fraction(0))
        else:
            raise TypeError(f"angle must be Fraction or float, got {type(a)!r}")

    @classmethod
    def exact(cls, p: int, q: int) -> "CirclePoint":
        """Root-of-unity point at p/q turns (reduced to lowest terms)."""
        if q <= 0:
            raise ValueError("denominator must be positive")
        return cls(Fraction(p, q) % 1)

    @classmethod
    def real(cls, t: float) -> "CirclePoint":
        return cls(frac_part(float(t)))

    @property
    def is_exact(self) -> bool:
        return isinstance(self.angle, Fraction)

    @property
    def order(self) -> int | None:
        """Order as a root of unity, or None for float angles."""
        return self.angle.denominator if self.is_exact else None

    def power(self, k: int) -> "CirclePoint":
        """lambda^k as a circle point; exact points stay exact for any int k."""
        if self.is_exact:
            p, q = self.angle.numerator, self.angle.denominator
            return CirclePoint(Fraction((p * k) % q, q))
        return CirclePoint(frac_part(self.angle * k))

    def value(self) -> complex:
        return turn_to_complex(self.angle)

    def angle_float(self) -> float:
        return float(self.angle)

    def __repr__(self) -> str:
        if self.is_exact:
            return f"CirclePoint({self.angle.numerator}/{self.angle.denominator})"
        return f"CirclePoint({self.angle!r})"


def roots_of_unity(q: int) -> list[CirclePoint]:
    """All q-th roots of unity, sorted by angle."""
    return [CirclePoint.exact(p, q) for p in range(q)]


def angle_of(point_or_angle) -> Angle:
    if isinstance(point_or_angle, CirclePoint):
        return point_or_angle.angle
    return point_or_angle
