"""Integral lattices as integer Gram matrices.

A lattice here is a free Z-module of finite rank with a fixed basis and a
symmetric integer Gram matrix; all arithmetic is exact. Direct sums concatenate
coordinates left to right, so the built-in "Lminus" = E8(2) + U(2) + U keeps its
E8(2) block at indices 0..7, the twisted hyperbolic block at 8..9 and the
unimodular hyperbolic block at 10..11.

Lattices built by `twisted_plus_u` / `base_plus_i11` carry a shape tag recording
the even unimodular base of the leading block; the dilatation and orbit modules
only accept tagged lattices, because their coordinate formulas depend on that
split.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import matrix
from .errors import EmptyLattice, LatticeShapeMismatch, RankMismatch, UnknownLattice, ZeroTwist

TWISTED_PLUS_U = "twisted_plus_u"
BASE_PLUS_I11 = "base_plus_i11"


@dataclass(frozen=True)
class SplitShape:
    """Structural tag: leading block is `base` (twisted or not), trailing block rank 2."""

    kind: str
    base: "Lattice"


@dataclass(frozen=True)
class Lattice:
    name: str
    rank: int
    gram: matrix.IntMatrix
    shape: SplitShape | None = None

    def __post_init__(self):
        if self.rank <= 0:
            raise EmptyLattice("lattice rank must be positive")
        if len(self.gram) != self.rank or any(len(row) != self.rank for row in self.gram):
            raise RankMismatch(f"gram matrix is not {self.rank}x{self.rank}")
        if not matrix.is_symmetric(self.gram):
            raise LatticeShapeMismatch("gram matrix is not symmetric")


@dataclass(frozen=True)
class Signature:
    positive: int
    negative: int
    zero: int


def make_u() -> Lattice:
    """Hyperbolic plane: two isotropic basis vectors pairing to 1."""
    return Lattice("U", 2, ((0, 1), (1, 0)))


# Dynkin diagram of E8, nodes 1..8: chain 1-3-4-5-6-7-8 with node 2 hung off node 4.
_E8_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


def make_e8() -> Lattice:
    """Negative definite E8: the negated Cartan matrix in the node order above."""
    rows = [[0] * 8 for _ in range(8)]
    for i in range(8):
        rows[i][i] = -2
    for a, b in _E8_EDGES:
        rows[a - 1][b - 1] = 1
        rows[b - 1][a - 1] = 1
    return Lattice("E8", 8, matrix.freeze(rows))


def make_i(s: int, t: int) -> Lattice:
    """Odd unimodular diagonal lattice with s entries +1 and t entries -1."""
    if s < 0 or t < 0:
        raise RankMismatch("signature counts must be nonnegative")
    if s + t == 0:
        raise EmptyLattice("I_0_0 has no basis vectors")
    diag = [1] * s + [-1] * t
    rows = [[diag[i] if i == j else 0 for j in range(s + t)] for i in range(s + t)]
    return Lattice(f"I_{s}_{t}", s + t, matrix.freeze(rows))


def twist(lattice: Lattice, n: int, name: str | None = None) -> Lattice:
    """Same module, form scaled by n. Twisting by 1 is the identity."""
    if n == 0:
        raise ZeroTwist("twist by zero degenerates the form")
    if n == 1 and name is None:
        return lattice
    rows = tuple(tuple(n * x for x in row) for row in lattice.gram)
    return Lattice(name or f"{lattice.name}({n})", lattice.rank, rows)


def direct_sum(left: Lattice, right: Lattice, name: str | None = None) -> Lattice:
    """Orthogonal direct sum; coordinates of `left` come first."""
    n, m = left.rank, right.rank
    rows = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            rows[i][j] = left.gram[i][j]
    for i in range(m):
        for j in range(m):
            rows[n + i][n + j] = right.gram[i][j]
    return Lattice(name or f"{left.name}+{right.name}", n + m, matrix.freeze(rows))


def _check_split_base(base: Lattice):
    # the split shapes only make sense over an even unimodular base,
    # whose signature difference is then forced to be 0 mod 8
    if not is_even(base):
        raise LatticeShapeMismatch(f"base {base.name} is not even")
    if not is_unimodular(base):
        raise LatticeShapeMismatch(f"base {base.name} is not unimodular")
    sig = signature(base)
    if (sig.positive - sig.negative) % 8 != 0:
        raise LatticeShapeMismatch(f"base {base.name} signature difference not 0 mod 8")


def twisted_plus_u(base: Lattice, name: str) -> Lattice:
    """base(2) + U with a shape tag; the orbit classifier works on these."""
    _check_split_base(base)
    body = direct_sum(twist(base, 2, name=f"{base.name}(2)"), make_u())
    return Lattice(name, body.rank, body.gram, SplitShape(TWISTED_PLUS_U, base))


def base_plus_i11(base: Lattice, name: str) -> Lattice:
    """base + I_1_1 with a shape tag; dilatation images live here."""
    _check_split_base(base)
    body = direct_sum(base, make_i(1, 1))
    return Lattice(name, body.rank, body.gram, SplitShape(BASE_PLUS_I11, base))


def inner(lattice: Lattice, v, w) -> int:
    """Bilinear form value for two coordinate tuples."""
    if len(v) != lattice.rank or len(w) != lattice.rank:
        raise RankMismatch(f"expected {lattice.rank} coordinates")
    return sum(vi * gv for vi, gv in zip(v, matrix.mat_vec(lattice.gram, w)))


def determinant(lattice: Lattice) -> int:
    return matrix.det(lattice.gram)


def is_even(lattice: Lattice) -> bool:
    """True when every vector has even norm; equivalent to an even diagonal."""
    return all(lattice.gram[i][i] % 2 == 0 for i in range(lattice.rank))


def is_unimodular(lattice: Lattice) -> bool:
    return abs(determinant(lattice)) == 1


def signature(lattice: Lattice) -> Signature:
    """Inertia by symmetric congruence elimination over the rationals.

    The pivot count is basis independent (Sylvester); zero pivots count the
    radical, so degenerate forms report a nonzero third component.
    """
    n = lattice.rank
    a = [[Fraction(x) for x in row] for row in lattice.gram]
    pos = neg = zero = 0
    for k in range(n):
        if a[k][k] == 0:
            j = next((t for t in range(k + 1, n) if a[t][t] != 0), None)
            if j is not None:
                a[k], a[j] = a[j], a[k]
                for row in a:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((t for t in range(k + 1, n) if a[k][t] != 0), None)
                if j is not None:
                    # both diagonals vanish, so this leaves 2*a[k][j] on the pivot
                    for c in range(n):
                        a[k][c] += a[j][c]
                    for r in range(n):
                        a[r][k] += a[r][j]
        p = a[k][k]
        if p == 0:
            zero += 1
            continue
        if p > 0:
            pos += 1
        else:
            neg += 1
        col = [a[i][k] for i in range(n)]
        for i in range(k + 1, n):
            if col[i] == 0:
                continue
            for j in range(k + 1, n):
                a[i][j] -= col[i] * col[j] / p
        for i in range(k + 1, n):
            a[i][k] = a[k][i] = Fraction(0)
    return Signature(pos, neg, zero)


def _make_e8_u() -> Lattice:
    return direct_sum(make_e8(), make_u(), name="E8_U")


def _make_lminus() -> Lattice:
    return twisted_plus_u(_make_e8_u(), name="Lminus")


def _make_u2u() -> Lattice:
    return twisted_plus_u(make_u(), name="U2U")


def _make_lambda() -> Lattice:
    body = direct_sum(make_e8(), make_e8())
    for _ in range(3):
        body = direct_sum(body, make_u())
    return Lattice("Lambda", body.rank, body.gram)


def _make_lplus() -> Lattice:
    return direct_sum(
        twist(make_e8(), 2, name="E8_2"), twist(make_u(), 2, name="U2"), name="Lplus"
    )


_BUILDERS = {
    "U": make_u,
    "U2": lambda: twist(make_u(), 2, name="U2"),
    "E8": make_e8,
    "E8_2": lambda: twist(make_e8(), 2, name="E8_2"),
    "Lminus": _make_lminus,
    "Lambda": _make_lambda,
    "B_U": make_u,  # alias: the hyperbolic plane in its role as a rank-2 base
    "U2U": _make_u2u,
    "Lplus": _make_lplus,
    "U_I11": lambda: base_plus_i11(make_u(), name="U_I11"),
    "E8_U_I11": lambda: base_plus_i11(_make_e8_u(), name="E8_U_I11"),
}

_I_NAME = re.compile(r"I_(\d+)_(\d+)")


@lru_cache(maxsize=None)
def resolve(name: str) -> Lattice:
    """Look up a built-in lattice by name ("U", "E8_2", "I_2_3", "Lminus", ...)."""
    builder = _BUILDERS.get(name)
    if builder is not None:
        return builder()
    m = _I_NAME.fullmatch(name)
    if m:
        return make_i(int(m.group(1)), int(m.group(2)))
    raise UnknownLattice(f"no built-in lattice named {name!r}")


def builtin_names() -> tuple[str, ...]:
    """Registry names, plus the I_s_t pattern resolved on demand."""
    return tuple(sorted(_BUILDERS)) + ("I_s_t",)
