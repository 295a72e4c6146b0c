"""JSON codecs for spaces, points, maps, kernels, spectra, and matrices.

Complex numbers are encoded as [re, im] pairs, complex matrices as nested
arrays of such pairs. Points follow the space convention: a circle angle is
a bare number, a Euclidean point an array, a complex-sphere point an array
of [re, im] pairs, a group element an integer array.
"""

from __future__ import annotations

import numpy as np

from .counterexample import (
    CounterexampleKernel,
    Variant,
    build_adjoint,
    build_shifted,
    build_unitary,
    embed,
)
from .errors import ConfigError
from .fourier import FourierSpectrum
from .kernels import (
    CircleExpCos,
    Composed,
    DotExp,
    Gaussian,
    GroupFourier,
    MatrixKernel,
    OffsetKernel,
    ScalarKernel,
    TorusProduct,
    ZeroKernel,
)
from .spaces import Circle, ComplexSphere, Euclidean, FiniteAbelian, Space
from .symmetry import (
    CircleRotation,
    ComplexSphereRotation,
    EuclideanScaling,
    EuclideanTranslation,
    GroupTranslation,
    OrbitDecomposition,
    SymmetryMap,
)

SCHEMA_VERSION = 1


def complex_to_json(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def complex_from_json(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    re, im = v
    return complex(re, im)


def matrix_to_json(matrix) -> list:
    arr = np.asarray(matrix, dtype=np.complex128)
    return [[complex_to_json(z) for z in row] for row in arr]


def matrix_from_json(rows) -> np.ndarray:
    return np.asarray([[complex_from_json(v) for v in row] for row in rows], dtype=np.complex128)


def space_to_json(space: Space) -> dict:
    if isinstance(space, Circle):
        return {"kind": "circle", "eq_tol": space.eq_tol}
    if isinstance(space, Euclidean):
        return {"kind": "euclidean", "dim": space.dim, "eq_tol": space.eq_tol}
    if isinstance(space, ComplexSphere):
        return {"kind": "complex_sphere", "dim": space.dim, "eq_tol": space.eq_tol}
    if isinstance(space, FiniteAbelian):
        return {"kind": "finite_abelian", "orders": list(space.orders)}
    raise ConfigError(f"unknown space {space!r}")


def space_from_json(data: dict) -> Space:
    kind = data.get("kind")
    if kind == "circle":
        return Circle(eq_tol=float(data.get("eq_tol", Circle().eq_tol)))
    if kind == "euclidean":
        return Euclidean(dim=int(data["dim"]), eq_tol=float(data.get("eq_tol", 1e-9)))
    if kind == "complex_sphere":
        return ComplexSphere(dim=int(data["dim"]), eq_tol=float(data.get("eq_tol", 1e-9)))
    if kind == "finite_abelian":
        return FiniteAbelian(orders=tuple(int(q) for q in data["orders"]))
    raise ConfigError(f"unknown space kind {kind!r}")


def point_to_json(space: Space, point):
    point = space.canonicalize(point)
    if isinstance(space, Circle):
        return float(point)
    if isinstance(space, Euclidean):
        return [float(c) for c in point]
    if isinstance(space, ComplexSphere):
        return [complex_to_json(c) for c in point]
    if isinstance(space, FiniteAbelian):
        return [int(c) for c in point]
    raise ConfigError(f"unknown space {space!r}")


def point_from_json(space: Space, data):
    if isinstance(space, ComplexSphere):
        return space.canonicalize([complex_from_json(c) for c in data])
    return space.canonicalize(data)


def map_to_json(phi: SymmetryMap) -> dict:
    return {
        "space": space_to_json(phi.space),
        "action_kind": phi.action_kind,
        "parameters": phi.params,
        "adjoint": getattr(phi, "adjoint_kind", None),
    }


def map_from_json(data: dict) -> SymmetryMap:
    space = space_from_json(data["space"])
    kind = data.get("action_kind")
    params = data.get("parameters", {})
    adjoint = data.get("adjoint")
    if kind == "circle_rotation":
        return CircleRotation(space, float(params["angle"]), adjoint)
    if kind == "euclidean_translation":
        return EuclideanTranslation(space, tuple(params["offset"]), adjoint)
    if kind == "euclidean_scaling":
        return EuclideanScaling(space, float(params["ratio"]), adjoint)
    if kind == "complex_sphere_rotation":
        return ComplexSphereRotation(space, float(params["angle"]), adjoint)
    if kind == "group_translation":
        return GroupTranslation(space, tuple(params["element"]), adjoint)
    raise ConfigError(f"unknown action kind {kind!r}")


def scalar_kernel_to_json(kernel: ScalarKernel) -> dict:
    if isinstance(kernel, CircleExpCos):
        return {"form": "circle_exp_cos", "space": space_to_json(kernel.space)}
    if isinstance(kernel, Gaussian):
        return {
            "form": "gaussian",
            "space": space_to_json(kernel.space),
            "sigma": kernel.sigma,
        }
    if isinstance(kernel, DotExp):
        return {
            "form": "dot_exp",
            "space": space_to_json(kernel.space),
            "scale": kernel.scale,
            "shift": kernel.shift,
        }
    if isinstance(kernel, TorusProduct):
        return {"form": "torus_product", "space": space_to_json(kernel.space)}
    if isinstance(kernel, GroupFourier):
        return {
            "form": "group_fourier",
            "space": space_to_json(kernel.space),
            "coefficients": [complex_to_json(c) for c in kernel.coefficients],
        }
    if isinstance(kernel, Composed):
        return {
            "form": "composed",
            "base": scalar_kernel_to_json(kernel.base),
            "left": map_to_json(kernel.left) if kernel.left is not None else None,
            "right": map_to_json(kernel.right) if kernel.right is not None else None,
        }
    if isinstance(kernel, OffsetKernel):
        return {
            "form": "offset",
            "base": scalar_kernel_to_json(kernel.base),
            "offset": kernel.offset,
        }
    if isinstance(kernel, ZeroKernel):
        return {"form": "zero", "space": space_to_json(kernel.space)}
    raise ConfigError(f"cannot serialize kernel {kernel!r}")


def scalar_kernel_from_json(data: dict) -> ScalarKernel:
    form = data.get("form")
    if form == "circle_exp_cos":
        return CircleExpCos(space_from_json(data["space"]))
    if form == "gaussian":
        return Gaussian(space_from_json(data["space"]), sigma=float(data.get("sigma", 1.0)))
    if form == "dot_exp":
        return DotExp(
            space_from_json(data["space"]),
            scale=float(data.get("scale", 1.0)),
            shift=float(data.get("shift", 0.0)),
        )
    if form == "torus_product":
        return TorusProduct(space_from_json(data["space"]))
    if form == "group_fourier":
        space = space_from_json(data["space"])
        coeffs = tuple(complex_from_json(c) for c in data["coefficients"])
        return GroupFourier(space, coeffs)
    if form == "composed":
        base = scalar_kernel_from_json(data["base"])
        left = map_from_json(data["left"]) if data.get("left") else None
        right = map_from_json(data["right"]) if data.get("right") else None
        return Composed(base, left, right)
    if form == "offset":
        return OffsetKernel(scalar_kernel_from_json(data["base"]), float(data["offset"]))
    if form == "zero":
        return ZeroKernel(space_from_json(data["space"]))
    raise ConfigError(f"unknown kernel form {form!r}")


def matrix_kernel_to_json(kernel: MatrixKernel) -> dict:
    return {
        "space": space_to_json(kernel.space),
        "ell": kernel.ell,
        "entries": [[scalar_kernel_to_json(e) for e in row] for row in kernel.entries],
    }


def matrix_kernel_from_json(data: dict) -> MatrixKernel:
    space = space_from_json(data["space"])
    entries = tuple(
        tuple(scalar_kernel_from_json(e) for e in row) for row in data["entries"]
    )
    return MatrixKernel(space=space, ell=int(data["ell"]), entries=entries)


def counterexample_to_json(cex: CounterexampleKernel) -> dict:
    out = {
        "variant": cex.variant.value,
        "base": scalar_kernel_to_json(cex.base),
        "map": map_to_json(cex.map),
    }
    if cex.origin is not None:
        out["origin"] = point_to_json(cex.as_matrix.space, cex.origin)
    return out


def counterexample_from_json(data: dict) -> CounterexampleKernel:
    base = scalar_kernel_from_json(data["base"])
    phi = map_from_json(data["map"])
    variant = data.get("variant")
    if variant == Variant.UNITARY.value:
        cex = build_unitary(base, phi)
    elif variant == Variant.ADJOINT.value:
        cex = build_adjoint(base, phi)
    elif variant == Variant.SHIFTED_ADJOINT.value:
        origin = point_from_json(base.space, data["origin"])
        cex = build_shifted(base, phi, origin)
    else:
        raise ConfigError(f"unknown counterexample variant {variant!r}")
    ell = data.get("ell")
    if ell is not None and int(ell) != 2:
        filler = scalar_kernel_from_json(data["filler"]) if data.get("filler") else base
        matrix = embed(cex.as_matrix, int(ell), filler)
        return CounterexampleKernel(
            base=cex.base, map=cex.map, variant=cex.variant, as_matrix=matrix, origin=cex.origin
        )
    return cex


def kernel_from_json(data: dict):
    """Dispatch on the config shape: counterexample, matrix grid, or scalar."""
    if "variant" in data:
        return counterexample_from_json(data).as_matrix
    if "entries" in data:
        return matrix_kernel_from_json(data)
    if "form" in data:
        return scalar_kernel_from_json(data)
    raise ConfigError("kernel config needs a 'variant', 'entries', or 'form' field")


def spectrum_to_json(spectrum: FourierSpectrum) -> dict:
    if spectrum.is_matrix:
        coeffs = [matrix_to_json(a) for a in spectrum.coefficients]
    else:
        coeffs = [float(c) for c in spectrum.coefficients]
    return {
        "schema_version": SCHEMA_VERSION,
        "group": list(spectrum.group.orders),
        "coefficients": coeffs,
        "analysis_residual": spectrum.analysis_residual,
    }


def spectrum_from_json(data: dict) -> FourierSpectrum:
    group = FiniteAbelian(orders=tuple(int(q) for q in data["group"]))
    raw = data["coefficients"]
    if raw and isinstance(raw[0], list):
        coeffs = np.stack([matrix_from_json(a) for a in raw])
    else:
        coeffs = np.asarray([float(c) for c in raw])
    return FourierSpectrum(
        group=group,
        coefficients=coeffs,
        analysis_residual=float(data.get("analysis_residual", 0.0)),
    )


def orbit_to_json(space: Space, decomposition: OrbitDecomposition) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "F": list(decomposition.F),
        "tau": {str(k): v for k, v in sorted(decomposition.tau.items())},
        "m": decomposition.m,
        "p": decomposition.p,
        "block_sizes": list(decomposition.block_sizes),
        "z_points": [point_to_json(space, z) for z in decomposition.z_points],
    }
