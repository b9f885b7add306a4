"""
Sampled fields with dual physical/spectral representations.

Normalization: the spectral coefficient at xi is (1/N^2) * DFT, so a
constant field c has coefficient c at xi = 0. Physical data is real.
Fields are immutable values; every transform returns a new field.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterator, Tuple, Union

import numpy as np
import scipy.fft as sfft

from src.foundation.errors import RepresentationError
from src.spectral.grid import Grid2D


class Representation(enum.Enum):
    PHYSICAL = "physical"
    SPECTRAL = "spectral"


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def forward_transform(values: np.ndarray) -> np.ndarray:
    return sfft.fft2(values, norm="forward")


def inverse_transform(coeffs: np.ndarray) -> np.ndarray:
    return sfft.ifft2(coeffs, norm="forward").real


@dataclass(frozen=True, eq=False)
class ScalarField:
    """N x N samples on a grid, held in exactly one representation."""

    grid: Grid2D
    data: np.ndarray
    representation: Representation

    def __post_init__(self) -> None:
        expected = (self.grid.N, self.grid.N)
        if self.data.shape != expected:
            raise RepresentationError(
                f"field data has shape {self.data.shape}, grid expects {expected}"
            )
        dtype = float if self.representation is Representation.PHYSICAL else complex
        object.__setattr__(self, "data", _frozen(np.array(self.data, dtype=dtype, copy=True)))

    @classmethod
    def physical(cls, grid: Grid2D, values: np.ndarray) -> "ScalarField":
        return cls(grid, np.asarray(values), Representation.PHYSICAL)

    @classmethod
    def spectral(cls, grid: Grid2D, coeffs: np.ndarray) -> "ScalarField":
        return cls(grid, np.asarray(coeffs), Representation.SPECTRAL)

    @classmethod
    def zeros(cls, grid: Grid2D) -> "ScalarField":
        return cls.physical(grid, np.zeros((grid.N, grid.N)))

    @classmethod
    def from_function(cls, grid: Grid2D, fn: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> "ScalarField":
        x = grid.coordinates
        x1, x2 = np.meshgrid(x, x, indexing="ij")
        return cls.physical(grid, fn(x1, x2))

    @property
    def is_physical(self) -> bool:
        return self.representation is Representation.PHYSICAL

    @property
    def is_spectral(self) -> bool:
        return self.representation is Representation.SPECTRAL

    def to_spectral(self) -> "ScalarField":
        return to_spectral(self)

    def to_physical(self) -> "ScalarField":
        return to_physical(self)

    def as_spectral(self) -> "ScalarField":
        """Spectral view, converting only if needed."""
        return self if self.is_spectral else to_spectral(self)

    def as_physical(self) -> "ScalarField":
        return self if self.is_physical else to_physical(self)

    def with_representation(self, representation: Representation) -> "ScalarField":
        if representation is Representation.SPECTRAL:
            return self.as_spectral()
        return self.as_physical()

    def _combine(self, other: "ScalarField", op: Callable) -> "ScalarField":
        if other.grid != self.grid:
            raise RepresentationError("fields live on different grids")
        rhs = other.with_representation(self.representation)
        return ScalarField(self.grid, op(self.data, rhs.data), self.representation)

    def __add__(self, other: "ScalarField") -> "ScalarField":
        return self._combine(other, np.add)

    def __sub__(self, other: "ScalarField") -> "ScalarField":
        return self._combine(other, np.subtract)

    def __mul__(self, scalar: float) -> "ScalarField":
        return ScalarField(self.grid, self.data * scalar, self.representation)

    __rmul__ = __mul__

    def __neg__(self) -> "ScalarField":
        return self * -1.0


@dataclass(frozen=True, eq=False)
class VectorField2:
    """Two scalar components sharing one grid and one representation."""

    u1: ScalarField
    u2: ScalarField

    def __post_init__(self) -> None:
        if self.u1.grid != self.u2.grid:
            raise RepresentationError("vector components live on different grids")
        if self.u1.representation is not self.u2.representation:
            raise RepresentationError("vector components have different representations")

    @classmethod
    def zeros(cls, grid: Grid2D) -> "VectorField2":
        return cls(ScalarField.zeros(grid), ScalarField.zeros(grid))

    @classmethod
    def from_arrays(cls, grid: Grid2D, a1: np.ndarray, a2: np.ndarray) -> "VectorField2":
        return cls(ScalarField.physical(grid, a1), ScalarField.physical(grid, a2))

    @property
    def grid(self) -> Grid2D:
        return self.u1.grid

    @property
    def representation(self) -> Representation:
        return self.u1.representation

    @property
    def is_physical(self) -> bool:
        return self.u1.is_physical

    @property
    def is_spectral(self) -> bool:
        return self.u1.is_spectral

    def components(self) -> Tuple[ScalarField, ScalarField]:
        return (self.u1, self.u2)

    def __iter__(self) -> Iterator[ScalarField]:
        return iter(self.components())

    def map(self, fn: Callable[[ScalarField], ScalarField]) -> "VectorField2":
        return VectorField2(fn(self.u1), fn(self.u2))

    def to_spectral(self) -> "VectorField2":
        return self.map(to_spectral)

    def to_physical(self) -> "VectorField2":
        return self.map(to_physical)

    def as_spectral(self) -> "VectorField2":
        return self if self.is_spectral else self.to_spectral()

    def as_physical(self) -> "VectorField2":
        return self if self.is_physical else self.to_physical()

    def with_representation(self, representation: Representation) -> "VectorField2":
        return self.map(lambda c: c.with_representation(representation))

    def __add__(self, other: "VectorField2") -> "VectorField2":
        return VectorField2(self.u1 + other.u1, self.u2 + other.u2)

    def __sub__(self, other: "VectorField2") -> "VectorField2":
        return VectorField2(self.u1 - other.u1, self.u2 - other.u2)

    def __mul__(self, scalar: float) -> "VectorField2":
        return VectorField2(self.u1 * scalar, self.u2 * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "VectorField2":
        return self * -1.0


Field = Union[ScalarField, VectorField2]


def to_spectral(f: ScalarField) -> ScalarField:
    """Physical samples -> spectral coefficients.

    Raises:
        RepresentationError: the field is already spectral.
    """
    if not f.is_physical:
        raise RepresentationError("to_spectral expects a physical field")
    return ScalarField.spectral(f.grid, forward_transform(f.data))


def to_physical(f: ScalarField) -> ScalarField:
    """Spectral coefficients -> real physical samples.

    Raises:
        RepresentationError: the field is already physical.
    """
    if not f.is_spectral:
        raise RepresentationError("to_physical expects a spectral field")
    return ScalarField.physical(f.grid, inverse_transform(f.data))


def field_components(f: Field) -> Tuple[ScalarField, ...]:
    if isinstance(f, VectorField2):
        return f.components()
    return (f,)


def map_field(f: Field, fn: Callable[[ScalarField], ScalarField]) -> Field:
    if isinstance(f, VectorField2):
        return f.map(fn)
    return fn(f)
