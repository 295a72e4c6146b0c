"""Characters and Fourier analysis on finite products of cyclic groups.

A translation-invariant kernel on G = Z_q1 x ... x Z_ql has the form
K(x, y) = psi(x - y) with psi(d) = sum_g a_g xi_g(d), where
xi_g(x) = prod_r exp(2 pi i g_r x_r / q_r). The kernel is positive
definite exactly when all a_g are nonnegative, and strictly positive
definite exactly when all a_g are positive; the matrix-valued analogue
replaces a_g by Hermitian matrices A_g and positivity by positive
definiteness of every A_g. Analysis uses direct O(|G|^2) summation,
which is exact enough and ample at the supported sizes.

The group is written additively; x - y componentwise mod q_r plays the
role of composing with the inverse element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import TooLarge, WrongLength, WrongSpaceKind
from .kernels import GroupFourier, MatrixKernel, ScalarKernel, gram
from .numcore import PDVerdict, classify
from .spaces import FiniteAbelian

STRICT_TOL = 1e-10
SYNTH_TOL = 1e-10
MAX_BRUTE_SIZE = 200


def character(g, x, group: FiniteAbelian) -> complex:
    """Value of the character indexed by g at the element x."""
    if not isinstance(group, FiniteAbelian):
        raise WrongSpaceKind("characters live on a FiniteAbelian space")
    gc = group.canonicalize(g)
    xc = group.canonicalize(x)
    angle = 2.0 * math.pi * sum(gr * xr / q for gr, xr, q in zip(gc, xc, group.orders))
    return complex(np.exp(1j * angle))


@lru_cache(maxsize=32)
def character_table(group: FiniteAbelian) -> np.ndarray:
    """Table T[g_index, x_index] = xi_g(x) over the lexicographic order."""
    elems = group.elements()
    n = len(elems)
    table = np.empty((n, n), dtype=np.complex128)
    for gi, g in enumerate(elems):
        for xi, x in enumerate(elems):
            table[gi, xi] = character(g, x, group)
    table.setflags(write=False)
    return table


@dataclass(frozen=True)
class FourierSpectrum:
    """Coefficient family indexed by group elements in lexicographic order.

    Scalar spectra store a real vector of shape (|G|,); matrix spectra
    store a complex stack of shape (|G|, ell, ell) of Hermitian matrices.
    ``analysis_residual`` records how much imaginary (or anti-Hermitian)
    content the analysis discarded; a large value is evidence that the
    analyzed function does not come from a positive definite kernel.
    """

    group: FiniteAbelian
    coefficients: np.ndarray
    analysis_residual: float = 0.0

    def __post_init__(self):
        coeffs = np.asarray(self.coefficients)
        if coeffs.ndim == 1:
            coeffs = coeffs.astype(np.float64)
        elif coeffs.ndim == 3 and coeffs.shape[1] == coeffs.shape[2]:
            coeffs = coeffs.astype(np.complex128)
        else:
            raise WrongLength(f"coefficients must be (|G|,) or (|G|, ell, ell), got {coeffs.shape}")
        if coeffs.shape[0] != self.group.order:
            raise WrongLength(
                f"need {self.group.order} coefficients, got {coeffs.shape[0]}"
            )
        coeffs.setflags(write=False)
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def is_matrix(self) -> bool:
        return self.coefficients.ndim == 3

    @property
    def ell(self) -> int:
        return self.coefficients.shape[1] if self.is_matrix else 1

    def min_coefficient(self) -> float:
        """Smallest coefficient (scalar) or smallest eigenvalue (matrix)."""
        if self.is_matrix:
            sym = 0.5 * (self.coefficients + np.conj(np.transpose(self.coefficients, (0, 2, 1))))
            return float(min(np.linalg.eigvalsh(a)[0] for a in sym))
        return float(np.min(self.coefficients))


def analyze(values, group: FiniteAbelian) -> FourierSpectrum:
    """Recover coefficients from a table of function values over G.

    ``values`` lists psi over the lexicographic element order, either as
    |G| scalars or as |G| square matrices. Coefficients come out as
    a_g = (1/|G|) sum_x psi(x) conj(xi_g(x)); the representation is unique.
    Imaginary parts (scalar case) and anti-Hermitian parts (matrix case)
    are split off into ``analysis_residual`` as non-positive-definiteness
    evidence.
    """
    vals = np.asarray(values)
    n = group.order
    if vals.shape[0] != n:
        raise WrongLength(f"need {n} values, got {vals.shape[0]}")
    table = character_table(group)
    if vals.ndim == 1:
        raw = table.conj() @ vals.astype(np.complex128) / n
        residual = float(np.max(np.abs(raw.imag)))
        return FourierSpectrum(group=group, coefficients=raw.real, analysis_residual=residual)
    if vals.ndim == 3 and vals.shape[1] == vals.shape[2]:
        raw = np.einsum("gx,xij->gij", table.conj(), vals.astype(np.complex128)) / n
        herm = 0.5 * (raw + np.conj(np.transpose(raw, (0, 2, 1))))
        residual = float(np.max(np.abs(raw - herm)))
        return FourierSpectrum(group=group, coefficients=herm, analysis_residual=residual)
    raise WrongLength(f"values must be (|G|,) or (|G|, ell, ell), got {vals.shape}")


def synthesize(spectrum: FourierSpectrum) -> np.ndarray:
    """Tabulate psi(x) = sum_g a_g xi_g(x) over the lexicographic order.

    The induced translation-invariant kernel is K(x, y) = psi(x - y);
    see ``spectrum_kernel`` for an evaluable kernel object.
    """
    table = character_table(spectrum.group)
    if spectrum.is_matrix:
        return np.einsum("gx,gij->xij", table, spectrum.coefficients)
    return spectrum.coefficients.astype(np.complex128) @ table


def spectrum_kernel(spectrum: FourierSpectrum) -> ScalarKernel | MatrixKernel:
    """Evaluable kernel K(x, y) = sum_g a_g xi_g(x) conj(xi_g(y))."""
    group = spectrum.group
    if not spectrum.is_matrix:
        return GroupFourier(group, tuple(complex(c) for c in spectrum.coefficients))
    ell = spectrum.ell
    grid = tuple(
        tuple(
            GroupFourier(group, tuple(complex(c) for c in spectrum.coefficients[:, i, j]))
            for j in range(ell)
        )
        for i in range(ell)
    )
    return MatrixKernel(space=group, ell=ell, entries=grid)


def strict_criterion(spectrum: FourierSpectrum, strict_tol: float = STRICT_TOL) -> bool:
    """Coefficient test for strict positive definiteness of the synthesis.

    Scalar spectra must have every coefficient above ``strict_tol``;
    matrix spectra must have every coefficient matrix positive definite.
    """
    if spectrum.is_matrix:
        return all(
            classify(0.5 * (a + a.conj().T)).is_positive_definite
            for a in spectrum.coefficients
        )
    return bool(np.all(spectrum.coefficients > strict_tol))


def brute_force_strict(kernel, max_size: int = MAX_BRUTE_SIZE) -> PDVerdict:
    """Ground-truth strictness oracle: classify the Gram over all of G."""
    group = kernel.space
    if not isinstance(group, FiniteAbelian):
        raise WrongSpaceKind("brute_force_strict needs a kernel on a FiniteAbelian space")
    ell = kernel.ell if isinstance(kernel, MatrixKernel) else 1
    size = group.order * ell
    if size > max_size:
        raise TooLarge(f"dense Gram of size {size} exceeds the {max_size} cap")
    return classify(gram(kernel, group.elements()))
