"""Symmetry maps, finite evidence for their properties, and orbit splitting.

Aperiodicity and center membership are universally quantified statements
over infinite sets, so the checkers here gather finite evidence (probe
points, a power bound) and report violations; they never claim proof.
Map parameters are stored as plain tuples so maps compare by value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InjectivityViolation, PeriodicityDetected, SpaceMismatch
from .spaces import (
    Circle,
    ComplexSphere,
    Euclidean,
    FiniteAbelian,
    Space,
    points_equal,
)


@dataclass(frozen=True)
class SymmetryMap:
    """A map of a space into itself; subclasses define the action.

    ``adjoint_kind`` selects the involution partner used by adjoint
    invariance checks: ``"self"`` for self-adjoint actions, ``"inverse"``
    for actions whose partner is the inverse action, ``None`` when no
    partner is declared.
    """

    space: Space

    action_kind = "abstract"

    def apply(self, x):
        raise NotImplementedError

    def _inverse(self) -> "SymmetryMap":
        raise NotImplementedError(f"{self.action_kind} has no inverse action")

    @property
    def adjoint(self) -> "SymmetryMap | None":
        kind = getattr(self, "adjoint_kind", None)
        if kind is None:
            return None
        if kind == "self":
            return self
        if kind == "inverse":
            return self._inverse()
        raise ValueError(f"unknown adjoint_kind {kind!r}")

    @property
    def params(self) -> dict:
        return {}


@dataclass(frozen=True)
class CircleRotation(SymmetryMap):
    angle: float = 0.0
    adjoint_kind: str | None = "inverse"

    action_kind = "circle_rotation"

    def __post_init__(self):
        if not isinstance(self.space, Circle):
            raise SpaceMismatch("CircleRotation acts on a Circle space")

    def apply(self, x):
        return self.space.canonicalize(self.space.canonicalize(x) + self.angle)

    def _inverse(self):
        return CircleRotation(self.space, -self.angle, self.adjoint_kind)

    @property
    def params(self):
        return {"angle": self.angle}


@dataclass(frozen=True)
class EuclideanTranslation(SymmetryMap):
    offset: tuple[float, ...] = ()
    adjoint_kind: str | None = None

    action_kind = "euclidean_translation"

    def __post_init__(self):
        if not isinstance(self.space, Euclidean):
            raise SpaceMismatch("EuclideanTranslation acts on a Euclidean space")
        offset = tuple(float(c) for c in np.atleast_1d(self.offset))
        if len(offset) != self.space.dim:
            raise SpaceMismatch("offset length must match the space dimension")
        object.__setattr__(self, "offset", offset)

    @cached_property
    def _offset_arr(self) -> np.ndarray:
        arr = np.asarray(self.offset, dtype=np.float64)
        arr.setflags(write=False)
        return arr

    def apply(self, x):
        return self.space.canonicalize(x) + self._offset_arr

    def _inverse(self):
        return EuclideanTranslation(self.space, tuple(-c for c in self.offset), self.adjoint_kind)

    @property
    def params(self):
        return {"offset": list(self.offset)}


@dataclass(frozen=True)
class EuclideanScaling(SymmetryMap):
    ratio: float = 1.0
    adjoint_kind: str | None = "self"

    action_kind = "euclidean_scaling"

    def __post_init__(self):
        if not isinstance(self.space, Euclidean):
            raise SpaceMismatch("EuclideanScaling acts on a Euclidean space")

    def apply(self, x):
        return self.ratio * self.space.canonicalize(x)

    def _inverse(self):
        if self.ratio == 0.0:
            raise ValueError("scaling by 0 has no inverse")
        return EuclideanScaling(self.space, 1.0 / self.ratio, self.adjoint_kind)

    @property
    def params(self):
        return {"ratio": self.ratio}


@dataclass(frozen=True)
class ComplexSphereRotation(SymmetryMap):
    """Multiplication by the unit scalar exp(i*angle), a unitary map."""

    angle: float = 0.0
    adjoint_kind: str | None = "inverse"

    action_kind = "complex_sphere_rotation"

    def __post_init__(self):
        if not isinstance(self.space, ComplexSphere):
            raise SpaceMismatch("ComplexSphereRotation acts on a ComplexSphere space")

    def apply(self, x):
        moved = np.exp(1j * self.angle) * self.space.canonicalize(x)
        return moved / math.sqrt(float(np.vdot(moved, moved).real))

    def _inverse(self):
        return ComplexSphereRotation(self.space, -self.angle, self.adjoint_kind)

    @property
    def params(self):
        return {"angle": self.angle}


@dataclass(frozen=True)
class GroupTranslation(SymmetryMap):
    element: tuple[int, ...] = ()
    adjoint_kind: str | None = "inverse"

    action_kind = "group_translation"

    def __post_init__(self):
        if not isinstance(self.space, FiniteAbelian):
            raise SpaceMismatch("GroupTranslation acts on a FiniteAbelian space")
        object.__setattr__(self, "element", self.space.canonicalize(self.element))

    def apply(self, x):
        coords = self.space.canonicalize(x)
        return tuple((c + g) % q for c, g, q in zip(coords, self.element, self.space.orders))

    def _inverse(self):
        inv = tuple((-g) % q for g, q in zip(self.element, self.space.orders))
        return GroupTranslation(self.space, inv, self.adjoint_kind)

    @property
    def params(self):
        return {"element": list(self.element)}


def apply(phi: SymmetryMap, x):
    """Image of ``x`` under the map, canonicalized in the space."""
    return phi.apply(x)


@dataclass(frozen=True)
class AperiodicityEvidence:
    """Finite evidence that no probe returns to itself under iteration."""

    m_max: int
    n_probes: int
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class CenterEvidence:
    """Finite evidence that the map commutes with every generator."""

    n_generators: int
    n_probes: int
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def check_aperiodic(phi: SymmetryMap, probes, m_max: int) -> AperiodicityEvidence:
    """Iterate the map up to ``m_max`` times from each probe.

    Reports every (probe, m) with phi^m(probe) == probe. Absence of
    violations is evidence, not proof.
    """
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    space = phi.space
    violations = []
    probes = list(probes)
    for x in probes:
        x = space.canonicalize(x)
        y = x
        for m in range(1, m_max + 1):
            y = phi.apply(y)
            if points_equal(space, x, y):
                violations.append((x, m))
                break
    return AperiodicityEvidence(m_max=m_max, n_probes=len(probes), violations=tuple(violations))


def check_injective_on(phi: SymmetryMap, points) -> bool:
    """True iff the images of the (distinct) points are pairwise distinct."""
    space = phi.space
    images = [phi.apply(p) for p in points]
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            if points_equal(space, images[i], images[j]):
                return False
    return True


def check_center(phi: SymmetryMap, generators, probes) -> CenterEvidence:
    """Compare phi(psi(x)) with psi(phi(x)) for each generator and probe."""
    space = phi.space
    violations = []
    generators = list(generators)
    probes = list(probes)
    for psi in generators:
        if psi.space != space:
            raise SpaceMismatch("generators must act on the same space as phi")
        for x in probes:
            left = phi.apply(psi.apply(x))
            right = psi.apply(phi.apply(x))
            if not points_equal(space, left, right):
                violations.append((psi, x, space.distance(left, right)))
    return CenterEvidence(
        n_generators=len(generators), n_probes=len(probes), violations=tuple(violations)
    )


@dataclass(frozen=True)
class OrbitDecomposition:
    """Split of a point list and its image list into m + 2p distinct points.

    ``F`` holds the indices whose image is again one of the input points and
    ``tau`` maps each such index to the index of its image. ``z_points``
    lists the union of inputs and images in three blocks: the m points hit
    by tau, the p fresh images, and the p inputs that tau never reaches.
    Within each block, order follows the ascending index of the underlying
    input point.
    """

    F: tuple[int, ...]
    tau: dict[int, int]
    m: int
    p: int
    z_points: tuple

    @property
    def block_sizes(self) -> tuple[int, int, int]:
        return (self.m, self.p, self.p)

    def blocks(self) -> tuple[tuple, tuple, tuple]:
        m, p = self.m, self.p
        z = self.z_points
        return (z[:m], z[m : m + p], z[m + p :])


def orbit_decompose(phi: SymmetryMap, points) -> OrbitDecomposition:
    """Decompose {phi(x_i)} union {x_i} for an injective aperiodic map.

    Raises ``InjectivityViolation`` when two points share an image and
    ``PeriodicityDetected`` when every image stays inside the input list or
    the index map tau closes a cycle; both certify that the map violates
    the caller-asserted hypotheses on these points.
    """
    space = phi.space
    pts = [space.canonicalize(p) for p in points]
    n = len(pts)
    if n == 0:
        raise ValueError("points must be nonempty")
    images = [phi.apply(p) for p in pts]

    for i in range(n):
        for j in range(i + 1, n):
            if points_equal(space, images[i], images[j]):
                raise InjectivityViolation(
                    f"points at indices {i} and {j} share an image"
                )

    tau: dict[int, int] = {}
    for mu, img in enumerate(images):
        matches = [nu for nu, p in enumerate(pts) if points_equal(space, img, p)]
        if len(matches) > 1:
            raise InjectivityViolation(
                f"image of index {mu} matches several input points {matches}; "
                "point separation is too small for the equality tolerance"
            )
        if matches:
            tau[mu] = matches[0]
    F = sorted(tau)
    m = len(F)
    p = n - m
    if m == n:
        raise PeriodicityDetected("every image is again an input point, so tau is a permutation")

    # Escape check: following tau from any mu in F must leave F; a revisit
    # means phi is periodic on these points.
    F_set = set(F)
    for mu in F:
        seen = {mu}
        cur = mu
        while cur in F_set:
            cur = tau[cur]
            if cur in seen:
                raise PeriodicityDetected(f"tau cycles through index {cur}")
            seen.add(cur)

    tau_image = set(tau.values())
    block_hit = [pts[tau[mu]] for mu in sorted(F, key=lambda mu: tau[mu])]
    block_fresh = [images[mu] for mu in range(n) if mu not in F_set]
    block_left = [pts[mu] for mu in range(n) if mu not in tau_image]
    z_points = tuple(block_hit + block_fresh + block_left)
    return OrbitDecomposition(F=tuple(F), tau=tau, m=m, p=p, z_points=z_points)
