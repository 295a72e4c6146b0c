"""Dense complex Hermitian linear algebra with tolerance-aware verdicts.

All thresholds are relative to the spectral scale of the matrix at hand
(largest absolute eigenvalue), because Gram entries of the kernel catalog
span several orders of magnitude. Everything here is pure and safe to use
from concurrent workers.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonHermitianInput, SolverError

PD_TOL = 1e-9
HERM_TOL = 1e-12
RESID_TOL = 1e-8


class PDKind(enum.Enum):
    POSITIVE_DEFINITE = "positive_definite"
    POSITIVE_SEMIDEFINITE_DEGENERATE = "positive_semidefinite_degenerate"
    INDEFINITE = "indefinite"


@dataclass(frozen=True)
class HermitianMatrix:
    """A square complex matrix, Hermitian up to ``herm_tol`` times its scale.

    Kernel evaluation introduces rounding asymmetry, so the constructor
    accepts matrices whose asymmetry stays below ``herm_tol`` relative to
    the largest entry magnitude. Entries are stored read-only.
    """

    entries: np.ndarray
    herm_tol: float = HERM_TOL

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise DimensionMismatch(f"expected a square matrix, got shape {arr.shape}")
        entry_scale = float(np.max(np.abs(arr))) if arr.size else 0.0
        asym = float(np.max(np.abs(arr - arr.conj().T)))
        if asym > self.herm_tol * max(entry_scale, 1e-300):
            raise NonHermitianInput(
                f"asymmetry {asym:.3e} exceeds {self.herm_tol:.1e} * scale {entry_scale:.3e}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def symmetrized(self) -> np.ndarray:
        return 0.5 * (self.entries + self.entries.conj().T)


@dataclass(frozen=True)
class PDVerdict:
    """Outcome of classifying a Hermitian matrix.

    ``null_vectors`` holds orthonormal columns spanning the numerical null
    space; it is empty unless the matrix is degenerate. ``scale`` is the
    largest absolute eigenvalue and normalizes every threshold.
    """

    kind: PDKind
    min_eigenvalue: float
    numeric_rank: int
    null_vectors: np.ndarray
    scale: float

    @property
    def is_positive_definite(self) -> bool:
        return self.kind is PDKind.POSITIVE_DEFINITE

    @property
    def is_degenerate(self) -> bool:
        return self.kind is PDKind.POSITIVE_SEMIDEFINITE_DEGENERATE


def _coerce(matrix) -> HermitianMatrix:
    if isinstance(matrix, HermitianMatrix):
        return matrix
    return HermitianMatrix(np.asarray(matrix))


def _eigh(matrix: HermitianMatrix) -> tuple[np.ndarray, np.ndarray]:
    try:
        return np.linalg.eigh(matrix.symmetrized())
    except np.linalg.LinAlgError as exc:
        raise SolverError(str(exc)) from exc


def classify(matrix, tol: float = PD_TOL) -> PDVerdict:
    """Classify a Hermitian matrix as PD, degenerate PSD, or indefinite.

    Parameters
    ----------
    matrix : HermitianMatrix or array_like
        The matrix to classify; symmetrized before decomposition.
    tol : float
        Relative eigenvalue threshold (default ``PD_TOL``). An eigenvalue
        counts as zero when its magnitude is at most ``tol`` times the
        spectral scale.

    A full eigendecomposition is used rather than a Cholesky attempt so
    that degenerate verdicts can return null vectors as witnesses.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    mat = _coerce(matrix)
    eigvals, eigvecs = _eigh(mat)
    scale = float(np.max(np.abs(eigvals)))
    cutoff = tol * scale
    min_eig = float(eigvals[0])
    rank = int(np.count_nonzero(np.abs(eigvals) > cutoff))

    if min_eig > cutoff:
        kind = PDKind.POSITIVE_DEFINITE
        null = np.zeros((mat.dim, 0), dtype=np.complex128)
    elif min_eig < -cutoff:
        kind = PDKind.INDEFINITE
        null = np.zeros((mat.dim, 0), dtype=np.complex128)
    else:
        kind = PDKind.POSITIVE_SEMIDEFINITE_DEGENERATE
        null = eigvecs[:, np.abs(eigvals) <= cutoff]
    return PDVerdict(
        kind=kind,
        min_eigenvalue=min_eig,
        numeric_rank=rank,
        null_vectors=null,
        scale=scale,
    )


def quadratic_form(matrix, coefficients) -> float:
    """Return the real part of ``c* M c``.

    A warning is emitted when the imaginary part exceeds ``RESID_TOL``
    times the spectral scale proxy (largest entry magnitude), which signals
    a matrix that is not Hermitian enough for the form to be real.
    """
    mat = _coerce(matrix)
    c = np.asarray(coefficients, dtype=np.complex128)
    if c.shape != (mat.dim,):
        raise DimensionMismatch(f"coefficient length {c.shape} does not match dim {mat.dim}")
    value = complex(np.vdot(c, mat.entries @ c))
    entry_scale = float(np.max(np.abs(mat.entries)))
    norm_sq = float(np.vdot(c, c).real)
    if abs(value.imag) > RESID_TOL * entry_scale * max(norm_sq, 1.0):
        warnings.warn(
            f"quadratic form has imaginary part {value.imag:.3e}", stacklevel=2
        )
    return float(value.real)


def numeric_rank(matrix, tol: float = PD_TOL) -> int:
    """Count eigenvalues whose magnitude exceeds ``tol`` times the scale."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    mat = _coerce(matrix)
    eigvals, _ = _eigh(mat)
    scale = float(np.max(np.abs(eigvals)))
    return int(np.count_nonzero(np.abs(eigvals) > tol * scale))
