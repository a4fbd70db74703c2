"""Simple pole series: finitely many simple poles on the unit circle.

A measure is a finite list of (circle point, complex weight) atoms plus a
declared tail mass for truncated infinite supports.  The series

    g(z) = sum_atoms  weight / (z - lambda)

restricts to an inner function on |z| < 1 and an outer function on |z| > 1;
both have Taylor coefficients

    b_n = - sum_atoms  weight * lambda^(-n-1),   n in Z,

computed here through the angle representation so that equal reduced
angles contribute bit-identical summands (atoms are summed in a fixed
angle-sorted order).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .circle import CirclePoint, turn_to_complex
from .errors import DuplicatePole, NonConvergent, PoleCollision, ValidationError

DEFAULT_EXCLUSION = 1e-12


class PoleMeasure:
    """Finite weighted set of distinct unit-circle poles.

    Atoms are kept sorted by angle; ``tail_mass`` records the weight of the
    discarded tail when the measure truncates an infinite one (0 for exact
    finite measures).
    """

    def __init__(self, atoms: Sequence[tuple[CirclePoint, complex]],
                 tail_mass: float = 0.0):
        if tail_mass < 0:
            raise ValidationError("tail_mass must be nonnegative")
        pts = [a[0] for a in atoms]
        if len(set(p.angle for p in pts)) != len(pts):
            raise DuplicatePole("atom points must be pairwise distinct")
        self.atoms: list[tuple[CirclePoint, complex]] = sorted(
            ((p, complex(w)) for p, w in atoms), key=lambda a: a[0].angle
        )
        self.tail_mass = float(tail_mass)

    @property
    def total_mass(self) -> float:
        return sum(abs(w) for _, w in self.atoms)

    @property
    def points(self) -> list[CirclePoint]:
        return [p for p, _ in self.atoms]

    def largest_angle_gap(self) -> float:
        """Largest gap (in turns) between consecutive sorted atom angles."""
        if not self.atoms:
            return 1.0
        angles = [float(p.angle) for p, _ in self.atoms]
        gaps = [b - a for a, b in zip(angles, angles[1:])]
        gaps.append(1.0 - angles[-1] + angles[0])
        return max(gaps)

    def __len__(self) -> int:
        return len(self.atoms)

    def __repr__(self) -> str:
        return f"PoleMeasure({len(self.atoms)} atoms, tail_mass={self.tail_mass})"

    # -- serialization: JSON array of atom objects, angle either {p, q} or float

    def to_json_obj(self):
        arr = []
        for p, w in self.atoms:
            if p.is_exact:
                ang = {"p": p.angle.numerator, "q": p.angle.denominator}
            else:
                ang = p.angle
            arr.append({"angle": ang, "re": w.real, "im": w.imag})
        if self.tail_mass == 0.0:
            return arr
        return {"atoms": arr, "tail_mass": self.tail_mass}

    @classmethod
    def from_json_obj(cls, obj) -> "PoleMeasure":
        tail = 0.0
        if isinstance(obj, dict):
            tail = float(obj.get("tail_mass", 0.0))
            obj = obj["atoms"]
        atoms = []
        for rec in obj:
            ang = rec["angle"]
            if isinstance(ang, dict):
                pt = CirclePoint(Fraction(int(ang["p"]), int(ang["q"])))
            else:
                pt = CirclePoint.real(float(ang))
            atoms.append((pt, complex(rec["re"], rec.get("im", 0.0))))
        return cls(atoms, tail_mass=tail)

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> "PoleMeasure":
        return cls.from_json_obj(json.loads(text))


def uniform_roots_measure(q: int, weight: complex | None = None) -> PoleMeasure:
    """Uniform measure on the q-th roots of unity (default weight 1/q each)."""
    w = complex(weight) if weight is not None else 1.0 / q
    return PoleMeasure([(CirclePoint.exact(p, q), w) for p in range(q)])


def psp_eval(m: PoleMeasure, z: complex,
             exclusion_radius: float = DEFAULT_EXCLUSION) -> complex:
    """Evaluate the pole series at z, atoms in angle order.

    Raises PoleCollision when z is within the exclusion radius of an atom.
    """
    z = complex(z)
    total = 0j
    for p, w in m.atoms:
        d = z - p.value()
        if abs(d) <= exclusion_radius:
            raise PoleCollision(f"z = {z} within {exclusion_radius} of pole {p}")
        total += w / d
    return total


def taylor_coefficient(m: PoleMeasure, n: int) -> complex:
    """b_n = -sum weight * lambda^(-n-1), valid for any integer n."""
    total = 0j
    for p, w in m.atoms:
        total += w * turn_to_complex(p.power(-n - 1).angle)
    return -total


def taylor_inner(m: PoleMeasure, n_max: int) -> np.ndarray:
    """Inner coefficients b_0 .. b_{n_max}."""
    if n_max < 0:
        raise ValidationError("n_max must be >= 0")
    return np.array([taylor_coefficient(m, n) for n in range(n_max + 1)])


def taylor_outer(m: PoleMeasure, n_count: int) -> np.ndarray:
    """Outer coefficients b_{-1} .. b_{-n_count}."""
    if n_count < 0:
        raise ValidationError("n_count must be >= 0")
    return np.array([taylor_coefficient(m, -k) for k in range(1, n_count + 1)])


@dataclass(frozen=True)
class ResidueTrace:
    """Radial limit samples of (z - lambda) * g(z) along z = r*lambda."""

    radii: np.ndarray
    samples: np.ndarray

    @property
    def estimate(self) -> complex:
        return complex(self.samples[-1])


def recover_residue(
    g: Callable[[complex], complex],
    point: CirclePoint,
    radii: Sequence[float],
    oscillation_tol: float | None = None,
) -> ResidueTrace:
    """Estimate the weight at ``point`` from radial samples of (z-lambda)*g(z).

    ``radii`` must be strictly increasing with last radius <= 1 - 1e-8.  For
    a pole series the samples converge to the atom weight (0 off support).
    When ``oscillation_tol`` is given, the step between the two finest
    samples must not exceed it, else NonConvergent is raised.
    """
    rs = np.asarray(list(radii), dtype=float)
    if rs.size < 1 or np.any(np.diff(rs) <= 0):
        raise ValidationError("radii must be strictly increasing")
    if rs[-1] > 1.0 - 1e-8:
        raise ValidationError("last radius must be <= 1 - 1e-8")
    lam = point.value()
    samples = np.array([(r * lam - lam) * g(r * lam) for r in rs])
    if oscillation_tol is not None and len(samples) >= 2:
        osc = abs(samples[-1] - samples[-2])
        if osc > oscillation_tol:
            raise NonConvergent(
                f"trace still moves by {osc} at finest radius {rs[-1]}"
            )
    return ResidueTrace(radii=rs, samples=samples)


def fourier_psp(fhat: Sequence[tuple[int, complex]], theta: float) -> PoleMeasure:
    """Pole measure whose inner coefficients are b_n = sum_j fhat_j e^{2 pi i j n theta}.

    Pole for frequency j sits at angle {-j*theta} with weight
    -lambda_j * fhat_j.  Raises DuplicatePole when two supplied frequencies
    collide on the circle (rational theta).
    """
    seen: dict = {}
    atoms = []
    for j, c in fhat:
        pt = CirclePoint.real(-j * theta)
        if pt.angle in seen:
            raise DuplicatePole(
                f"frequencies {seen[pt.angle]} and {j} give the same pole"
            )
        seen[pt.angle] = j
        atoms.append((pt, -pt.value() * complex(c)))
    return PoleMeasure(atoms)
