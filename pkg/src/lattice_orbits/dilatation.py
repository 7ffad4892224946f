"""Norm-halving change of coordinates.

On a tagged base(2) + U lattice the map

    (a_1, ..., a_r, b_1, b_2)  ->  (a_1, ..., a_r, (b_1+b_2)/2, (b_1-b_2)/2)

is a module isomorphism onto a half-integral sublattice of base + I_1_1 that
halves the quadratic form. Images are stored with doubled integer coordinates
so everything stays exact: a doubled tuple is valid when its leading r entries
are even and its last two entries share a parity.

The image of v is integral (all doubled entries even) exactly when the two
trailing coordinates of v have equal parity; for vectors of norm divisible by 4
that happens exactly when v is characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import LatticeShapeMismatch, NotInHalfLattice, RankMismatch
from .lattices import BASE_PLUS_I11, TWISTED_PLUS_U, Lattice, base_plus_i11, inner, resolve
from .vectors import LatticeVector


@dataclass(frozen=True)
class HalfVector:
    """A vector with possibly half-integral trailing coordinates, kept doubled."""

    base: Lattice
    doubled_coords: tuple[int, ...]

    def __post_init__(self):
        shape = self.base.shape
        if shape is None or shape.kind != BASE_PLUS_I11:
            raise LatticeShapeMismatch(f"{self.base.name} is not a tagged base + I_1_1 lattice")
        if len(self.doubled_coords) != self.base.rank:
            raise RankMismatch(f"expected {self.base.rank} doubled coordinates")
        r = shape.base.rank
        if any(d % 2 != 0 for d in self.doubled_coords[:r]):
            raise NotInHalfLattice("leading coordinates must be integral")
        if (self.doubled_coords[r] - self.doubled_coords[r + 1]) % 2 != 0:
            raise NotInHalfLattice("trailing half-coordinates must share a parity")


# domain lattice recovered from the image lattice, filled in by half_target
_DOMAINS: dict[Lattice, Lattice] = {}
_KNOWN_DOMAINS = {"E8_U_I11": "Lminus", "U_I11": "U2U"}


def half_target(domain: Lattice) -> Lattice:
    """The base + I_1_1 lattice receiving dilatation images of `domain`."""
    shape = domain.shape
    if shape is None or shape.kind != TWISTED_PLUS_U:
        raise LatticeShapeMismatch(f"{domain.name} is not a tagged base(2) + U lattice")
    target = base_plus_i11(shape.base, name=f"{shape.base.name}_I11")
    _DOMAINS.setdefault(target, domain)
    return target


def _domain_for(target: Lattice) -> Lattice:
    found = _DOMAINS.get(target)
    if found is not None:
        return found
    name = _KNOWN_DOMAINS.get(target.name)
    if name is not None:
        domain = resolve(name)
        if half_target(domain) == target:
            return domain
    raise LatticeShapeMismatch(f"no known dilatation domain for {target.name}")


def dilate(v: LatticeVector) -> HalfVector:
    """Apply the norm-halving map; requires a tagged base(2) + U lattice."""
    target = half_target(v.lattice)
    r = v.lattice.shape.base.rank
    b1, b2 = v.coords[r], v.coords[r + 1]
    doubled = tuple(2 * a for a in v.coords[:r]) + (b1 + b2, b1 - b2)
    return HalfVector(target, doubled)


def dilate_inverse(h: HalfVector) -> LatticeVector:
    """Invert the map back to the tagged base(2) + U lattice."""
    domain = _domain_for(h.base)
    r = h.base.shape.base.rank
    dx, dy = h.doubled_coords[r], h.doubled_coords[r + 1]
    coords = tuple(d // 2 for d in h.doubled_coords[:r]) + ((dx + dy) // 2, (dx - dy) // 2)
    return LatticeVector(domain, coords)


def is_integral(h: HalfVector) -> bool:
    """True when the image has integer coordinates in base + I_1_1."""
    return all(d % 2 == 0 for d in h.doubled_coords)


def double(h: HalfVector) -> LatticeVector:
    """Twice the half vector, always an honest vector of base + I_1_1."""
    return LatticeVector(h.base, h.doubled_coords)


def integral_image(h: HalfVector) -> LatticeVector:
    """The half vector as an honest vector of base + I_1_1; integral images only."""
    if not is_integral(h):
        raise NotInHalfLattice("image has half-integral coordinates")
    return LatticeVector(h.base, tuple(d // 2 for d in h.doubled_coords))


def half_norm(h: HalfVector) -> int:
    """Quadratic form value of the half vector; an integer for every valid one."""
    quadruple = inner(h.base, h.doubled_coords, h.doubled_coords)
    if quadruple % 4 != 0:
        raise NotInHalfLattice("form value is not integral")  # unreachable on valid input
    return quadruple // 4


def true_coords(h: HalfVector) -> tuple[Fraction, ...]:
    """Actual (possibly half-integral) coordinates, for display."""
    return tuple(Fraction(d, 2) for d in h.doubled_coords)
