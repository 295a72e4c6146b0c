"""Concrete point spaces with tolerance-aware equality and sampling.

Four spaces are supported: the unit circle (points are angles in
``[-pi, pi)``), Euclidean space, the unit sphere of complex q-space, and
finite products of cyclic groups. Points are plain values (float, real
array, complex array, integer tuple); the space objects own canonical
forms, metrics, and equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import ExhaustedSampling, SpaceMismatch, TooManyPoints, WrongSpaceKind

EQ_TOL = 1e-9
MIN_SEP = 1e-3
UNIT_NORM_TOL = 1e-12

_TWO_PI = 2.0 * math.pi


def _wrap_angle(a: float) -> float:
    return (a + math.pi) % _TWO_PI - math.pi


@dataclass(frozen=True)
class Space:
    """Base class; concrete spaces are the dataclasses below."""

    def canonicalize(self, x):
        raise NotImplementedError

    def distance(self, x, y) -> float:
        raise NotImplementedError

    def points_equal(self, x, y) -> bool:
        return self.distance(x, y) <= self.eq_tol

    def random_point(self, rng: np.random.Generator):
        raise NotImplementedError


@dataclass(frozen=True)
class Circle(Space):
    eq_tol: float = EQ_TOL

    def canonicalize(self, x) -> float:
        try:
            return _wrap_angle(float(x))
        except (TypeError, ValueError) as exc:
            raise SpaceMismatch(f"not a circle angle: {x!r}") from exc

    def distance(self, x, y) -> float:
        return abs(_wrap_angle(self.canonicalize(x) - self.canonicalize(y)))

    def random_point(self, rng: np.random.Generator) -> float:
        return float(rng.uniform(-math.pi, math.pi))


@dataclass(frozen=True)
class Euclidean(Space):
    dim: int
    eq_tol: float = EQ_TOL

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("Euclidean dimension must be at least 1")

    def canonicalize(self, x) -> np.ndarray:
        arr = np.asarray(x, dtype=np.float64)
        if arr.shape != (self.dim,):
            raise SpaceMismatch(f"expected a vector of length {self.dim}, got {x!r}")
        return arr

    def distance(self, x, y) -> float:
        d = self.canonicalize(x) - self.canonicalize(y)
        return math.sqrt(float(d @ d))

    def random_point(self, rng: np.random.Generator) -> np.ndarray:
        return rng.standard_normal(self.dim)


@dataclass(frozen=True)
class ComplexSphere(Space):
    """Unit sphere of complex q-space; the chordal metric measures distance."""

    dim: int
    eq_tol: float = EQ_TOL

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ComplexSphere dimension must be at least 1")

    def canonicalize(self, x) -> np.ndarray:
        arr = np.asarray(x, dtype=np.complex128)
        if arr.shape != (self.dim,):
            raise SpaceMismatch(f"expected a complex vector of length {self.dim}, got {x!r}")
        norm = math.sqrt(float(np.vdot(arr, arr).real))
        if abs(norm - 1.0) > UNIT_NORM_TOL:
            raise SpaceMismatch(f"point norm {norm} is not 1 within {UNIT_NORM_TOL}")
        return arr

    def distance(self, x, y) -> float:
        d = self.canonicalize(x) - self.canonicalize(y)
        return math.sqrt(float(np.vdot(d, d).real))

    def random_point(self, rng: np.random.Generator) -> np.ndarray:
        v = rng.standard_normal(self.dim) + 1j * rng.standard_normal(self.dim)
        return v / np.linalg.norm(v)


@dataclass(frozen=True)
class FiniteAbelian(Space):
    """Product of cyclic groups Z_q1 x ... x Z_ql, written additively.

    Equality is exact, so ``eq_tol`` plays no role here.
    """

    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(q) for q in self.orders)
        if not orders or any(q < 2 for q in orders):
            raise ValueError("every cyclic factor must have order at least 2")
        object.__setattr__(self, "orders", orders)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def eq_tol(self) -> float:
        return 0.0

    def canonicalize(self, x) -> tuple[int, ...]:
        if isinstance(x, (int, np.integer)):
            x = (int(x),)
        try:
            coords = tuple(int(c) for c in x)
        except (TypeError, ValueError) as exc:
            raise SpaceMismatch(f"not a group element: {x!r}") from exc
        if len(coords) != len(self.orders):
            raise SpaceMismatch(f"expected {len(self.orders)} coordinates, got {x!r}")
        return tuple(c % q for c, q in zip(coords, self.orders))

    def distance(self, x, y) -> float:
        return 0.0 if self.canonicalize(x) == self.canonicalize(y) else 1.0

    def points_equal(self, x, y) -> bool:
        return self.canonicalize(x) == self.canonicalize(y)

    def elements(self) -> list[tuple[int, ...]]:
        return [tuple(e) for e in product(*(range(q) for q in self.orders))]

    def index_of(self, x) -> int:
        coords = self.canonicalize(x)
        idx = 0
        for c, q in zip(coords, self.orders):
            idx = idx * q + c
        return idx

    def random_point(self, rng: np.random.Generator) -> tuple[int, ...]:
        return tuple(int(rng.integers(q)) for q in self.orders)


def points_equal(space: Space, x, y) -> bool:
    """True iff the two points coincide within the space's tolerance."""
    return space.points_equal(x, y)


def pairwise_distinct(space: Space, points) -> bool:
    pts = list(points)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if space.points_equal(pts[i], pts[j]):
                return False
    return True


def sample_distinct(space: Space, n: int, min_sep: float = MIN_SEP, seed=None) -> list:
    """Draw ``n`` points with pairwise distance above ``min_sep``.

    Deterministic for a given ``seed`` (PCG64). On a finite abelian group
    the draw is a uniform subset without replacement and ``min_sep`` is
    ignored; on continuous spaces a bounded rejection loop is used.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    rng = np.random.default_rng(seed)
    if isinstance(space, FiniteAbelian):
        if n > space.order:
            raise TooManyPoints(f"requested {n} points from a group of order {space.order}")
        elems = space.elements()
        picks = rng.permutation(space.order)[:n]
        return [elems[i] for i in picks]
    if min_sep <= space.eq_tol:
        raise ValueError("min_sep must exceed the space's eq_tol")
    points: list = []
    attempts = 0
    budget = 1000 * max(n, 1)
    while len(points) < n:
        if attempts >= budget:
            raise ExhaustedSampling(
                f"placed {len(points)} of {n} points after {attempts} attempts"
            )
        attempts += 1
        cand = space.canonicalize(space.random_point(rng))
        if all(space.distance(cand, p) > min_sep for p in points):
            points.append(cand)
    return points


def group_elements(space: Space) -> list[tuple[int, ...]]:
    """All elements of a finite abelian space in lexicographic order."""
    if not isinstance(space, FiniteAbelian):
        raise WrongSpaceKind(f"group_elements needs a FiniteAbelian space, got {space!r}")
    return space.elements()
