"""Bounded one-sided coefficient sequences backed by named generators."""

from __future__ import annotations

from typing import Callable, Optional, Sequence

import numpy as np

from .errors import ValidationError

# slack allowed when checking |a_k| <= bound on materialized values
BOUND_SLACK = 1e-12


class CoeffStream:
    """A bounded sequence {a_k}, k >= 0, with a named generating rule.

    ``fn`` produces a_k for a single k; ``vec_fn`` (optional) produces a
    whole prefix as an array and is used by bulk consumers.  A materialized
    prefix may be attached; every materialized value is checked against the
    declared bound.
    """

    def __init__(
        self,
        name: str,
        fn: Callable[[int], complex],
        bound: float,
        vec_fn: Optional[Callable[[np.ndarray], np.ndarray]] = None,
        prefix: Optional[Sequence[complex]] = None,
    ):
        if bound < 0:
            raise ValidationError("bound must be nonnegative")
        self.name = name
        self.fn = fn
        self.bound = float(bound)
        self.vec_fn = vec_fn
        self.prefix: Optional[np.ndarray] = None
        if prefix is not None:
            self.prefix = self._checked(np.asarray(prefix, dtype=complex))

    def _checked(self, arr: np.ndarray) -> np.ndarray:
        worst = float(np.max(np.abs(arr))) if arr.size else 0.0
        if worst > self.bound + BOUND_SLACK:
            raise ValidationError(
                f"stream {self.name!r}: |a_k| = {worst} exceeds bound {self.bound}"
            )
        return arr

    def a(self, k: int) -> complex:
        """Single coefficient a_k (k >= 0)."""
        if k < 0:
            raise ValidationError("stream index must be >= 0")
        if self.prefix is not None and k < len(self.prefix):
            return complex(self.prefix[k])
        return complex(self.fn(k))

    def take(self, n: int) -> np.ndarray:
        """Materialize a_0 .. a_{n-1} as a complex array."""
        if self.prefix is not None and len(self.prefix) >= n:
            return self.prefix[:n].copy()
        if self.vec_fn is not None:
            arr = np.asarray(self.vec_fn(np.arange(n)), dtype=complex)
        else:
            arr = np.array([self.fn(k) for k in range(n)], dtype=complex)
        return self._checked(arr)

    def materialize(self, n: int) -> "CoeffStream":
        """Copy of the stream with a_0 .. a_{n-1} stored as a prefix."""
        return CoeffStream(self.name, self.fn, self.bound, self.vec_fn, self.take(n))

    def __repr__(self) -> str:
        return f"CoeffStream({self.name!r}, bound={self.bound})"


def from_values(values: Sequence[complex], name: str = "values") -> CoeffStream:
    """Finite sequence, implicitly zero past the end."""
    vals = np.asarray(values, dtype=complex)
    bound = float(np.max(np.abs(vals))) if vals.size else 0.0

    def fn(k: int) -> complex:
        return complex(vals[k]) if k < len(vals) else 0j

    return CoeffStream(name, fn, bound, prefix=vals)


def periodic(cycle: Sequence[complex], name: str = "periodic") -> CoeffStream:
    cyc = np.asarray(cycle, dtype=complex)
    if cyc.size == 0:
        raise ValidationError("cycle must be nonempty")
    bound = float(np.max(np.abs(cyc)))
    return CoeffStream(
        name,
        lambda k: complex(cyc[k % len(cyc)]),
        bound,
        vec_fn=lambda ks: cyc[np.mod(ks, len(cyc))],
    )


def preperiodic(head: Sequence[complex], cycle: Sequence[complex],
                name: str = "preperiodic") -> CoeffStream:
    h = np.asarray(head, dtype=complex)
    cyc = np.asarray(cycle, dtype=complex)
    if cyc.size == 0:
        raise ValidationError("cycle must be nonempty")
    bound = float(max(np.max(np.abs(h)) if h.size else 0.0, np.max(np.abs(cyc))))

    def fn(k: int) -> complex:
        if k < len(h):
            return complex(h[k])
        return complex(cyc[(k - len(h)) % len(cyc)])

    def vec_fn(ks: np.ndarray) -> np.ndarray:
        out = cyc[np.mod(ks - len(h), len(cyc))]
        small = ks < len(h)
        out[small] = h[ks[small]]
        return out

    return CoeffStream(name, fn, bound, vec_fn=vec_fn)


def partial_sum(stream: CoeffStream, z: complex, n_terms: int) -> tuple[complex, float]:
    """(sum_{k<n_terms} a_k z^k, geometric tail bound) for |z| < 1.

    The bound is B*|z|^n/(1-|z|); +inf when |z| >= 1.
    """
    ks = np.arange(n_terms)
    coeffs = stream.take(n_terms)
    value = complex(np.sum(coeffs * np.power(complex(z), ks)))
    r = abs(z)
    tail = stream.bound * r**n_terms / (1.0 - r) if r < 1.0 else float("inf")
    return value, tail
