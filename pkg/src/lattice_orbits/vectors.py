"""Vectors in a lattice: norms, primitivity, characteristic type.

A vector is a coordinate tuple in the basis of its lattice. A vector w is
characteristic when <w, x> = <x, x> mod 2 for every x; since both sides are
linear resp. quadratic mod 2 and c^2 = c mod 2, it is enough to test the basis
vectors, which keeps the check at rank^2 integer operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import matrix
from .errors import (
    LatticeShapeMismatch,
    NotCharacteristic,
    NotUnimodular,
    RankMismatch,
    ZeroVector,
)
from .lattices import BASE_PLUS_I11, Lattice, inner, is_unimodular, signature


class VectorType(Enum):
    CHARACTERISTIC = "characteristic"
    ORDINARY = "ordinary"


@dataclass(frozen=True)
class LatticeVector:
    lattice: Lattice
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.lattice.rank:
            raise RankMismatch(
                f"{self.lattice.name} needs {self.lattice.rank} coordinates, got {len(self.coords)}"
            )


def vec(lattice: Lattice, coords) -> LatticeVector:
    return LatticeVector(lattice, tuple(int(c) for c in coords))


def norm(v: LatticeVector) -> int:
    return inner(v.lattice, v.coords, v.coords)


def pair(v: LatticeVector, w: LatticeVector) -> int:
    if v.lattice != w.lattice:
        raise RankMismatch("vectors live in different lattices")
    return inner(v.lattice, v.coords, w.coords)


def is_primitive(v: LatticeVector) -> bool:
    """gcd of the coordinates is 1; invariant under unimodular basis change."""
    if not any(v.coords):
        raise ZeroVector("the zero vector is neither primitive nor imprimitive")
    return math.gcd(*v.coords) == 1


def vector_type(v: LatticeVector) -> VectorType:
    """Characteristic or ordinary, decided by pairings against the basis."""
    gram = v.lattice.gram
    gv = matrix.mat_vec(gram, v.coords)
    for i in range(v.lattice.rank):
        if (gv[i] - gram[i][i]) % 2 != 0:
            return VectorType.ORDINARY
    return VectorType.CHARACTERISTIC


def is_characteristic(v: LatticeVector) -> bool:
    return vector_type(v) is VectorType.CHARACTERISTIC


def characteristic_by_parity(v: LatticeVector) -> bool:
    """Parity shortcut on base + I_1_1 lattices.

    With an even unimodular leading block, a vector is characteristic exactly
    when its two trailing coordinates are odd and every leading coordinate is
    even. Unimodularity matters: it makes "gram * a even" equivalent to
    "a even" for the leading block.
    """
    shape = v.lattice.shape
    if shape is None or shape.kind != BASE_PLUS_I11:
        raise LatticeShapeMismatch(f"{v.lattice.name} is not a tagged base + I_1_1 lattice")
    r = shape.base.rank
    leading_even = all(c % 2 == 0 for c in v.coords[:r])
    trailing_odd = v.coords[r] % 2 != 0 and v.coords[r + 1] % 2 != 0
    return leading_even and trailing_odd


def wall_congruence_holds(v: LatticeVector) -> bool:
    """Wall's congruence: a characteristic vector of a unimodular lattice has
    norm = (s - t) mod 8 for signature (s, t)."""
    if not is_unimodular(v.lattice):
        raise NotUnimodular(f"{v.lattice.name} has |det| != 1")
    if vector_type(v) is not VectorType.CHARACTERISTIC:
        raise NotCharacteristic("congruence is only claimed for characteristic vectors")
    sig = signature(v.lattice)
    return (norm(v) - (sig.positive - sig.negative)) % 8 == 0
