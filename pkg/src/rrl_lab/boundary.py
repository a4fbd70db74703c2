"""Numeric natural-boundary diagnostics: arc L1 growth and radial blow-up.

A strong natural boundary means the arc integrals of |g| blow up as the
radius approaches 1 on every arc.  Finite radius schedules can only
collect evidence for or against that; results carry the schedule and a
ratio indicator, never a divergence claim.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .circle import CirclePoint
from .errors import EvalFailure, ValidationError

# default radius schedule 1 - 10^(-k/2), k = 2..6
DEFAULT_RADII = tuple(1.0 - 10.0 ** (-k / 2.0) for k in range(2, 7))


@dataclass(frozen=True)
class ArcProbeResult:
    """Trapezoid estimates of int_{w1}^{w2} |g(r e^{i w})| dw per radius."""

    omega1: float
    omega2: float
    radii: np.ndarray
    integrals: np.ndarray
    quadrature_n: int

    @property
    def ratio(self) -> float:
        """integrals[last] / integrals[first]; the blow-up indicator."""
        return float(self.integrals[-1] / self.integrals[0])

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["radius", "integral", "ratio_to_first"])
        first = float(self.integrals[0])
        for r, v in zip(self.radii, self.integrals):
            writer.writerow([repr(float(r)), repr(float(v)), repr(float(v) / first)])
        return out.getvalue()


def _safe_eval(g: Callable[[complex], complex], z: complex) -> complex:
    try:
        return complex(g(z))
    except Exception as exc:  # propagate as a typed probe failure
        raise EvalFailure(f"evaluator failed at z = {z}: {exc}") from exc


def arc_l1_growth(
    g: Callable[[complex], complex],
    omega1: float,
    omega2: float,
    radii: Sequence[float] | None = None,
    quadrature_n: int = 256,
) -> ArcProbeResult:
    """Composite-trapezoid arc integrals of |g| over an increasing radius grid.

    ``quadrature_n`` is the panel count (>= 64).  The returned ratio of the
    last to the first integral indicates blow-up; it is evidence only.
    """
    if not omega1 < omega2:
        raise ValidationError("need omega1 < omega2")
    rs = np.asarray(list(radii) if radii is not None else DEFAULT_RADII, dtype=float)
    if np.any(rs <= 0) or np.any(rs >= 1) or np.any(np.diff(rs) <= 0):
        raise ValidationError("radii must be increasing inside (0, 1)")
    if quadrature_n < 64:
        raise ValidationError("quadrature_n must be >= 64")
    omegas = np.linspace(omega1, omega2, quadrature_n + 1)
    ints = np.empty(len(rs))
    for i, r in enumerate(rs):
        vals = np.array(
            [abs(_safe_eval(g, r * complex(np.cos(o), np.sin(o)))) for o in omegas]
        )
        ints[i] = np.trapezoid(vals, omegas)
    return ArcProbeResult(
        omega1=float(omega1),
        omega2=float(omega2),
        radii=rs,
        integrals=ints,
        quadrature_n=int(quadrature_n),
    )


def radial_blowup(
    g: Callable[[complex], complex],
    point: CirclePoint,
    radii: Sequence[float] | None = None,
) -> np.ndarray:
    """Samples |g(r * lambda)| along the ray toward a circle point.

    For a pole series with an atom of weight w at lambda the samples grow
    like |w| / (1 - r).
    """
    rs = np.asarray(list(radii) if radii is not None else DEFAULT_RADII, dtype=float)
    if np.any(rs <= 0) or np.any(rs >= 1):
        raise ValidationError("radii must lie in (0, 1)")
    lam = point.value()
    return np.array([abs(_safe_eval(g, r * lam)) for r in rs])
