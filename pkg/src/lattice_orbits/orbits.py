"""Orbit labels for primitive vectors of the tagged base(2) + U lattices.

A primitive vector of norm 2n falls into exactly one labeled orbit of the
isometry group:

    odd                  n odd (one orbit)
    even_characteristic  n even and the vector pairs like the form mod 2
    even_ordinary        n even otherwise

For n even three criteria coincide and are cross-checked on every call: the
characteristic property, both trailing coordinates even, and integrality of the
norm-halving image. Beware the convention flip under the halving map: an
even_ordinary vector has a characteristic double image, while the integral
image of an even_characteristic vector is ordinary.

The even-type test and its witnesses are specific to the rank-12 built-in
"Lminus" sitting inside the rank-22 unimodular "Lambda" next to its invariant
partner "Lplus": a primitive vector of norm divisible by 4 has even type when
some primitive vector of the partner with equal norm lands in 2*Lambda after
adding the embedded images. That holds exactly when the halving image is
integral; the blocked case is a parity obstruction in the last two coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product

from .dilatation import dilate, is_integral
from .errors import (
    EvenTypeUndefinedForOddN,
    LabelParityMismatch,
    LatticeShapeMismatch,
    NonPrimitive,
    OddNormInEvenLattice,
    ZeroVector,
)
from .lattices import TWISTED_PLUS_U, Lattice, resolve
from .vectors import LatticeVector, VectorType, is_primitive, norm, vec, vector_type


class OrbitLabel(Enum):
    ODD = "odd"
    EVEN_CHARACTERISTIC = "even_characteristic"
    EVEN_ORDINARY = "even_ordinary"


@dataclass(frozen=True)
class ClassificationReport:
    vector: LatticeVector
    norm: int
    n: int
    primitive: bool
    vtype: VectorType
    phi_integral: bool
    label: OrbitLabel


@dataclass(frozen=True)
class WitnessResult:
    witness: LatticeVector | None
    parity_obstruction: bool
    bound: int


@dataclass(frozen=True)
class HeegnerComponent:
    label: OrbitLabel
    representative: LatticeVector


@dataclass(frozen=True)
class HeegnerReport:
    n: int
    norm: int
    components: tuple[HeegnerComponent, ...]


def _require_split(v: LatticeVector) -> Lattice:
    shape = v.lattice.shape
    if shape is None or shape.kind != TWISTED_PLUS_U:
        raise LatticeShapeMismatch(f"{v.lattice.name} is not a tagged base(2) + U lattice")
    return shape.base


def _require_primitive(v: LatticeVector):
    if not any(v.coords):
        raise ZeroVector("the zero vector has no orbit label")
    if not is_primitive(v):
        raise NonPrimitive(f"coordinates {v.coords} have gcd > 1")


def classify(v: LatticeVector) -> ClassificationReport:
    """Label a primitive vector; all invariants are recomputed and cross-checked."""
    base = _require_split(v)
    _require_primitive(v)
    value = norm(v)
    half = value // 2  # the lattice is even, so this is exact
    b1, b2 = v.coords[base.rank], v.coords[base.rank + 1]
    vtype = vector_type(v)
    integral = is_integral(dilate(v))
    if half % 2 != 0:
        label = OrbitLabel.ODD
    else:
        char = vtype is VectorType.CHARACTERISTIC
        both_even = b1 % 2 == 0 and b2 % 2 == 0
        # three equivalent criteria for even n; any split is a bug
        assert char == both_even == integral, (v, char, both_even, integral)
        label = OrbitLabel.EVEN_CHARACTERISTIC if char else OrbitLabel.EVEN_ORDINARY
    return ClassificationReport(v, value, half, True, vtype, integral, label)


def representative(value: int, label: OrbitLabel, lattice: Lattice | None = None) -> LatticeVector:
    """Canonical primitive vector of the given norm and label.

    Odd and even_ordinary orbits use (0, ..., 0, 1, n); the even_characteristic
    orbit places (1, n/2) in the trailing hyperbolic block of the twisted part.
    The construction is re-validated through classify before returning.
    """
    lattice = lattice if lattice is not None else resolve("Lminus")
    if lattice.shape is None or lattice.shape.kind != TWISTED_PLUS_U:
        raise LatticeShapeMismatch(f"{lattice.name} is not a tagged base(2) + U lattice")
    if value % 2 != 0:
        raise OddNormInEvenLattice(f"norm {value} is impossible in an even lattice")
    half = value // 2
    if label is OrbitLabel.ODD and half % 2 == 0:
        raise LabelParityMismatch(f"norm {value} has even n = {half}, not an odd orbit")
    if label is not OrbitLabel.ODD and half % 2 != 0:
        raise LabelParityMismatch(f"norm {value} has odd n = {half}, only the odd label fits")
    r = lattice.shape.base.rank
    coords = [0] * lattice.rank
    if label is OrbitLabel.EVEN_CHARACTERISTIC:
        tail = tuple(tuple(row[r - 2 : r]) for row in lattice.shape.base.gram[r - 2 : r])
        if tail != ((0, 1), (1, 0)):
            raise LatticeShapeMismatch(
                f"base {lattice.shape.base.name} does not end in a hyperbolic block"
            )
        coords[r - 2] = 1
        coords[r - 1] = half // 2
    else:
        coords[r] = 1
        coords[r + 1] = half
    rep = vec(lattice, coords)
    report = classify(rep)
    assert report.norm == value and report.label is label, report
    return rep


def embed_anti_invariant(v: LatticeVector) -> LatticeVector:
    """Fixed embedding of the rank-12 lattice into the rank-22 unimodular one:
    (e, u, w) -> (e, -e, u, -u, w), blockwise."""
    if v.lattice != resolve("Lminus"):
        raise LatticeShapeMismatch("anti-invariant embedding is defined on Lminus")
    e, u, w = v.coords[:8], v.coords[8:10], v.coords[10:]
    neg = tuple(-c for c in e) + tuple(-c for c in u)
    return LatticeVector(resolve("Lambda"), e + neg[:8] + u + neg[8:] + w)


def embed_invariant(w: LatticeVector) -> LatticeVector:
    """Fixed embedding of the invariant partner: (e, u) -> (e, e, u, u, 0)."""
    if w.lattice != resolve("Lplus"):
        raise LatticeShapeMismatch("invariant embedding is defined on Lplus")
    e, u = w.coords[:8], w.coords[8:]
    return LatticeVector(resolve("Lambda"), e + e + u + u + (0, 0))


def is_even_type(v: LatticeVector) -> bool:
    """Even type for primitive vectors of norm divisible by 4.

    Equivalent to integrality of the norm-halving image; for the rank-12
    built-in this matches the existence of an invariant-partner witness.
    """
    _require_split(v)
    _require_primitive(v)
    half = norm(v) // 2
    if half % 2 != 0:
        raise EvenTypeUndefinedForOddN(f"norm {2 * half} is not divisible by 4")
    return is_integral(dilate(v))


def _witness_ok(v: LatticeVector, w: LatticeVector) -> bool:
    if norm(w) != norm(v) or not is_primitive(w):
        return False
    left = embed_anti_invariant(v)
    right = embed_invariant(w)
    return all((a + b) % 2 == 0 for a, b in zip(left.coords, right.coords))


def even_witness(v: LatticeVector, bound: int = 2) -> WitnessResult:
    """Search the invariant partner for a witness of even type.

    Candidates must match v's leading coordinates mod 2, so the scan runs over
    a parity-constrained box. Vectors whose two trailing coordinates vanish get
    their witness written down directly. A trailing odd coordinate is a hard
    parity obstruction: every candidate sum keeps an odd entry, so the result
    says NotFound regardless of the bound. Otherwise absence within the bound
    is only absence within the bound.
    """
    if v.lattice != resolve("Lminus"):
        raise LatticeShapeMismatch("even-type witnesses are defined on Lminus")
    _require_primitive(v)
    if (norm(v) // 2) % 2 != 0:
        raise EvenTypeUndefinedForOddN(f"norm {norm(v)} is not divisible by 4")
    plus = resolve("Lplus")
    b1, b2 = v.coords[10], v.coords[11]
    if b1 % 2 != 0 or b2 % 2 != 0:
        return WitnessResult(None, True, bound)
    if b1 == 0 and b2 == 0:
        direct = LatticeVector(plus, v.coords[:10])
        if _witness_ok(v, direct):
            return WitnessResult(direct, False, bound)
    axes = [
        [x for x in range(-bound, bound + 1) if (x - c) % 2 == 0] for c in v.coords[:10]
    ]
    for cand in product(*axes):
        if not any(cand):
            continue
        w = LatticeVector(plus, cand)
        if _witness_ok(v, w):
            return WitnessResult(w, False, bound)
    return WitnessResult(None, False, bound)


def heegner_report(n: int, lattice: Lattice | None = None) -> HeegnerReport:
    """Orbit components of the degree-n locus: one for odd n, two for even n."""
    labels = (
        (OrbitLabel.ODD,)
        if n % 2 != 0
        else (OrbitLabel.EVEN_CHARACTERISTIC, OrbitLabel.EVEN_ORDINARY)
    )
    comps = tuple(
        HeegnerComponent(lab, representative(2 * n, lab, lattice)) for lab in labels
    )
    return HeegnerReport(n, 2 * n, comps)


def heegner_range(n_min: int, n_max: int, lattice: Lattice | None = None):
    """Reports for every n in [n_min, n_max]; empty when the range is empty."""
    return tuple(heegner_report(n, lattice) for n in range(n_min, n_max + 1))
