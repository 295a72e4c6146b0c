"""Scalar and matrix-valued kernel evaluation, projections, and Gram assembly.

The scalar catalog covers the circle kernel exp(cos(theta - vartheta)), the
Gaussian exp(-sigma ||x - y||^2), the exponential dot-product kernel, the
torus product kernel, and synthesized kernels on finite abelian groups.
Matrix-valued kernels are stored as a grid of scalar kernels, so scalar
projections reduce to sesquilinear combinations of grid entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicatePoints,
    MissingAdjoint,
    SpaceMismatch,
    ZeroVector,
)
from .numcore import RESID_TOL, HermitianMatrix
from .spaces import Circle, ComplexSphere, Euclidean, FiniteAbelian, Space, pairwise_distinct
from .symmetry import SymmetryMap


class ScalarKernel:
    """Base class for evaluable Hermitian scalar kernels."""

    space: Space

    def eval(self, x, y) -> complex:
        raise NotImplementedError

    def __call__(self, x, y) -> complex:
        return self.eval(x, y)


@dataclass(frozen=True)
class CircleExpCos(ScalarKernel):
    """k(theta, vartheta) = exp(cos(theta - vartheta)) on the circle."""

    space: Circle

    def eval(self, x, y) -> complex:
        x = self.space.canonicalize(x)
        y = self.space.canonicalize(y)
        return complex(math.exp(math.cos(x - y)))


@dataclass(frozen=True)
class Gaussian(ScalarKernel):
    """k(x, y) = exp(-sigma ||x - y||^2) on Euclidean space."""

    space: Euclidean
    sigma: float = 1.0

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")

    def eval(self, x, y) -> complex:
        d = self.space.canonicalize(x) - self.space.canonicalize(y)
        return complex(math.exp(-self.sigma * float(d @ d)))


@dataclass(frozen=True)
class DotExp(ScalarKernel):
    """k(x, y) = exp(scale * Re<x, y>) + shift.

    On Euclidean space the real part is vacuous; on the complex sphere the
    real part of the Hermitian inner product keeps the kernel Hermitian and
    invariant under multiplication of both arguments by a unit scalar.
    """

    space: Space
    scale: float = 1.0
    shift: float = 0.0

    def __post_init__(self):
        if not isinstance(self.space, (Euclidean, ComplexSphere)):
            raise SpaceMismatch("DotExp needs an inner-product space")

    def eval(self, x, y) -> complex:
        xc = self.space.canonicalize(x)
        yc = self.space.canonicalize(y)
        inner = float(np.vdot(yc, xc).real)
        return complex(math.exp(self.scale * inner) + self.shift)


@dataclass(frozen=True)
class TorusProduct(ScalarKernel):
    """k(x, y) = prod_m 2 / (2 - exp(i (x_m - y_m))).

    Coordinates are treated as angles; the formula is 2*pi periodic in each
    coordinate difference, so Circle and Euclidean points both work.
    """

    space: Space

    def __post_init__(self):
        if not isinstance(self.space, (Circle, Euclidean)):
            raise SpaceMismatch("TorusProduct needs angle-like coordinates")

    def eval(self, x, y) -> complex:
        dx = np.atleast_1d(self.space.canonicalize(x)) - np.atleast_1d(self.space.canonicalize(y))
        return complex(np.prod(2.0 / (2.0 - np.exp(1j * dx))))


@dataclass(frozen=True)
class GroupFourier(ScalarKernel):
    """k(x, y) = sum_g c_g xi_g(x) conj(xi_g(y)) on a finite abelian group.

    Coefficients are indexed by the lexicographic element order. They are
    real and nonnegative for a positive definite kernel, but the class also
    accepts complex coefficients so it can serve as a grid entry of a
    matrix-valued synthesis.
    """

    space: FiniteAbelian
    coefficients: tuple[complex, ...]

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in np.atleast_1d(np.asarray(self.coefficients)))
        if len(coeffs) != self.space.order:
            raise DimensionMismatch(
                f"need {self.space.order} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coefficients", coeffs)

    @cached_property
    def _difference_table(self) -> np.ndarray:
        # psi(d) = sum_g c_g xi_g(d), evaluated once per group element.
        from .fourier import character_table

        table = character_table(self.space)
        return np.asarray(self.coefficients) @ table

    def eval(self, x, y) -> complex:
        xc = self.space.canonicalize(x)
        yc = self.space.canonicalize(y)
        diff = tuple((a - b) % q for a, b, q in zip(xc, yc, self.space.orders))
        return complex(self._difference_table[self.space.index_of(diff)])


@dataclass(frozen=True)
class Composed(ScalarKernel):
    """Base kernel with a map applied to the left and/or right argument."""

    base: ScalarKernel
    left: SymmetryMap | None = None
    right: SymmetryMap | None = None

    def __post_init__(self):
        for m in (self.left, self.right):
            if m is not None and m.space != self.base.space:
                raise SpaceMismatch("pre-composition maps must act on the kernel's space")

    @property
    def space(self) -> Space:
        return self.base.space

    def eval(self, x, y) -> complex:
        xm = self.left.apply(x) if self.left is not None else x
        ym = self.right.apply(y) if self.right is not None else y
        return self.base.eval(xm, ym)


@dataclass(frozen=True)
class OffsetKernel(ScalarKernel):
    """Base kernel plus a real additive constant."""

    base: ScalarKernel
    offset: float = 0.0

    @property
    def space(self) -> Space:
        return self.base.space

    def eval(self, x, y) -> complex:
        return self.base.eval(x, y) + self.offset


@dataclass(frozen=True)
class ZeroKernel(ScalarKernel):
    space: Space

    def eval(self, x, y) -> complex:
        return 0j


@dataclass(frozen=True)
class MatrixKernel:
    """An ell x ell grid of scalar kernels evaluated entrywise."""

    space: Space
    ell: int
    entries: tuple[tuple[ScalarKernel, ...], ...]

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be at least 1")
        grid = tuple(tuple(row) for row in self.entries)
        if len(grid) != self.ell or any(len(row) != self.ell for row in grid):
            raise DimensionMismatch("entries must form an ell x ell grid")
        for row in grid:
            for entry in row:
                if entry.space != self.space:
                    raise SpaceMismatch("all grid entries must live on the same space")
        object.__setattr__(self, "entries", grid)

    def eval(self, x, y) -> np.ndarray:
        out = np.empty((self.ell, self.ell), dtype=np.complex128)
        for i in range(self.ell):
            for j in range(self.ell):
                out[i, j] = self.entries[i][j].eval(x, y)
        return out

    def __call__(self, x, y) -> np.ndarray:
        return self.eval(x, y)

    def project(self, v) -> "ProjectedKernel":
        return project(self, v)


@dataclass(frozen=True)
class ProjectedKernel(ScalarKernel):
    """Scalar projection K_v(x, y) = <K(x, y) v, v> of a matrix kernel."""

    matrix: MatrixKernel
    v: tuple[complex, ...]

    @property
    def space(self) -> Space:
        return self.matrix.space

    @cached_property
    def _vec(self) -> np.ndarray:
        vec = np.asarray(self.v, dtype=np.complex128)
        vec.setflags(write=False)
        return vec

    def eval(self, x, y) -> complex:
        vec = self._vec
        return complex(np.vdot(vec, self.matrix.eval(x, y) @ vec))


def eval_scalar(kernel: ScalarKernel, x, y) -> complex:
    return kernel.eval(x, y)


def eval_matrix(kernel: MatrixKernel, x, y) -> np.ndarray:
    return kernel.eval(x, y)


def project(kernel: MatrixKernel, v) -> ProjectedKernel:
    """Project a matrix kernel onto a nonzero direction v."""
    vec = np.asarray(v, dtype=np.complex128)
    if vec.shape != (kernel.ell,):
        raise DimensionMismatch(f"projection vector must have length {kernel.ell}")
    if float(np.linalg.norm(vec)) == 0.0:
        raise ZeroVector("projection vector must be nonzero")
    return ProjectedKernel(matrix=kernel, v=tuple(complex(c) for c in vec))


def gram(kernel, points) -> HermitianMatrix:
    """Gram matrix over pairwise distinct points.

    Scalar kernels give an n x n matrix. Matrix kernels give an
    (ell n) x (ell n) matrix in coordinate-major block layout: row index
    i*n + mu holds coordinate i at point mu, so block (i, j) is the n x n
    Gram of grid entry (i, j).
    """
    pts = list(points)
    space = kernel.space
    if not pairwise_distinct(space, pts):
        raise DuplicatePoints("gram needs pairwise distinct points")
    n = len(pts)
    if isinstance(kernel, MatrixKernel):
        ell = kernel.ell
        out = np.empty((ell * n, ell * n), dtype=np.complex128)
        for i in range(ell):
            for j in range(ell):
                entry = kernel.entries[i][j]
                for mu in range(n):
                    for nu in range(n):
                        out[i * n + mu, j * n + nu] = entry.eval(pts[mu], pts[nu])
        return HermitianMatrix(out)
    out = np.empty((n, n), dtype=np.complex128)
    for mu in range(n):
        for nu in range(n):
            out[mu, nu] = kernel.eval(pts[mu], pts[nu])
    return HermitianMatrix(out)


@dataclass(frozen=True)
class InvarianceEvidence:
    """Largest residual seen over sampled probe pairs and maps."""

    max_residual: float
    scale: float
    tol: float
    n_probes: int
    n_maps: int

    @property
    def ok(self) -> bool:
        return self.max_residual <= self.tol * self.scale


def _eval_any(kernel, x, y) -> np.ndarray:
    if isinstance(kernel, MatrixKernel):
        return kernel.eval(x, y)
    return np.asarray([[kernel.eval(x, y)]])


def check_unitary_invariance(kernel, maps, probes, tol: float = RESID_TOL) -> InvarianceEvidence:
    """Measure max ||K(phi(x), phi(y)) - K(x, y)|| over probe pairs."""
    space = kernel.space
    maps = list(maps)
    probes = list(probes)
    for phi in maps:
        if phi.space != space:
            raise SpaceMismatch("maps must act on the kernel's space")
    max_resid = 0.0
    scale = 0.0
    for x, y in probes:
        base = _eval_any(kernel, x, y)
        scale = max(scale, float(np.linalg.norm(base)))
        for phi in maps:
            moved = _eval_any(kernel, phi.apply(x), phi.apply(y))
            scale = max(scale, float(np.linalg.norm(moved)))
            max_resid = max(max_resid, float(np.linalg.norm(moved - base)))
    return InvarianceEvidence(
        max_residual=max_resid, scale=scale, tol=tol, n_probes=len(probes), n_maps=len(maps)
    )


def check_adjoint_invariance(kernel, maps, probes, tol: float = RESID_TOL) -> InvarianceEvidence:
    """Measure max ||K(x, phi(y)) - K(phi*(x), y)|| over probe pairs."""
    space = kernel.space
    maps = list(maps)
    probes = list(probes)
    for phi in maps:
        if phi.space != space:
            raise SpaceMismatch("maps must act on the kernel's space")
        if phi.adjoint is None:
            raise MissingAdjoint(f"{phi.action_kind} carries no involution partner")
    max_resid = 0.0
    scale = 0.0
    for x, y in probes:
        for phi in maps:
            left = _eval_any(kernel, x, phi.apply(y))
            right = _eval_any(kernel, phi.adjoint.apply(x), y)
            scale = max(scale, float(np.linalg.norm(left)), float(np.linalg.norm(right)))
            max_resid = max(max_resid, float(np.linalg.norm(left - right)))
    return InvarianceEvidence(
        max_residual=max_resid, scale=scale, tol=tol, n_probes=len(probes), n_maps=len(maps)
    )
