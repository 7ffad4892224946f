"""Isometries of a lattice, and deterministic random words in them.

An isometry is an integer matrix M with M^T G M = G and |det M| = 1, acting on
coordinate columns. Construction always certifies; there is no way to hold an
uncertified Isometry.

Random words are drawn from curated generator recipes per built-in lattice:
reflections in short vectors (precomputed pools), hyperbolic block swaps,
global negation, and (on even lattices) transvections along an isotropic basis
vector of the unimodular hyperbolic block. Sampling is reproducible: the same
seed and length give the same matrix.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import matrix as intmat
from .enumeration import short_vectors_definite
from .errors import (
    IsotropicReflectionVector,
    LatticeMismatch,
    NoGeneratorRecipe,
    NotIntegralReflection,
    NotIsometry,
    NotIsotropic,
    NotOrthogonal,
    OddLattice,
    RankMismatch,
)
from .lattices import Lattice, inner, is_even, resolve
from .vectors import LatticeVector


@dataclass(frozen=True)
class Isometry:
    lattice: Lattice
    matrix: intmat.IntMatrix

    def __post_init__(self):
        g = self.lattice.gram
        m = self.matrix
        n = self.lattice.rank
        if len(m) != n or any(len(row) != n for row in m):
            raise NotIsometry(f"matrix is not {n}x{n}")
        if intmat.mat_mul(intmat.transpose(m), intmat.mat_mul(g, m)) != g:
            raise NotIsometry("matrix does not preserve the form")
        if abs(intmat.det(m)) != 1:
            raise NotIsometry("matrix is not invertible over the integers")


def certify(lattice: Lattice, rows) -> Isometry:
    """Validate an untrusted matrix; the only door for external input."""
    rows = tuple(tuple(row) for row in rows)
    for row in rows:
        for x in row:
            if not isinstance(x, int):
                raise NotIsometry(f"matrix entries must be integers, got {x!r}")
    return Isometry(lattice, rows)


def apply(g: Isometry, v: LatticeVector) -> LatticeVector:
    if v.lattice != g.lattice:
        raise LatticeMismatch("isometry and vector live in different lattices")
    return LatticeVector(g.lattice, intmat.mat_vec(g.matrix, v.coords))


def compose(g: Isometry, h: Isometry) -> Isometry:
    """g after h."""
    if g.lattice != h.lattice:
        raise LatticeMismatch("cannot compose isometries of different lattices")
    return Isometry(g.lattice, intmat.mat_mul(g.matrix, h.matrix))


def identity(lattice: Lattice) -> Isometry:
    return Isometry(lattice, intmat.identity(lattice.rank))


def negation(lattice: Lattice) -> Isometry:
    return Isometry(
        lattice,
        tuple(tuple(-1 if i == j else 0 for j in range(lattice.rank)) for i in range(lattice.rank)),
    )


def reflection(lattice: Lattice, delta) -> Isometry:
    """Reflection in a non-isotropic vector, when it is integral on the lattice.

    w -> w - (2<w, delta>/<delta, delta>) delta. Integrality is checked against
    every basis vector before the matrix is assembled.
    """
    delta = tuple(int(x) for x in delta)
    if len(delta) != lattice.rank:
        raise RankMismatch(f"expected {lattice.rank} coordinates")
    nd = inner(lattice, delta, delta)
    if nd == 0:
        raise IsotropicReflectionVector("cannot reflect in an isotropic vector")
    gdelta = intmat.mat_vec(lattice.gram, delta)
    coeffs = []
    for i in range(lattice.rank):
        twice = 2 * gdelta[i]
        if twice % nd != 0:
            raise NotIntegralReflection(
                f"2<e_{i}, delta> = {twice} is not divisible by <delta, delta> = {nd}"
            )
        coeffs.append(twice // nd)
    rows = tuple(
        tuple((1 if r == cidx else 0) - coeffs[cidx] * delta[r] for cidx in range(lattice.rank))
        for r in range(lattice.rank)
    )
    return Isometry(lattice, rows)


def transvection(lattice: Lattice, e, x) -> Isometry:
    """Eichler transvection w -> w - <x,w>e + <e,w>x - (<x,x>/2)<e,w>e.

    Needs an even lattice, isotropic e, and x orthogonal to e; then the matrix
    is integral and certifies.
    """
    if not is_even(lattice):
        raise OddLattice("transvections need an even lattice")
    e = tuple(int(c) for c in e)
    x = tuple(int(c) for c in x)
    if len(e) != lattice.rank or len(x) != lattice.rank:
        raise RankMismatch(f"expected {lattice.rank} coordinates")
    if inner(lattice, e, e) != 0:
        raise NotIsotropic("e must be isotropic")
    if inner(lattice, e, x) != 0:
        raise NotOrthogonal("x must be orthogonal to e")
    half = inner(lattice, x, x) // 2
    ge = intmat.mat_vec(lattice.gram, e)
    gx = intmat.mat_vec(lattice.gram, x)
    rows = tuple(
        tuple(
            (1 if r == c else 0) - gx[c] * e[r] + ge[c] * x[r] - half * ge[c] * e[r]
            for c in range(lattice.rank)
        )
        for r in range(lattice.rank)
    )
    return Isometry(lattice, rows)


def block_swap(lattice: Lattice, start: int) -> Isometry:
    """Exchange basis vectors start and start+1 (hyperbolic block swap)."""
    n = lattice.rank
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rows[start][start] = rows[start + 1][start + 1] = 0
    rows[start][start + 1] = rows[start + 1][start] = 1
    return Isometry(lattice, intmat.freeze(rows))


@dataclass(frozen=True)
class _Recipe:
    # coordinate windows scanned with a box of 3 for reflection vectors
    windows: tuple[tuple[int, ...], ...]
    # (start, stop) definite blocks whose short vectors are enumerated exactly
    definite_blocks: tuple[tuple[int, int], ...]
    # start indices of swappable hyperbolic blocks
    swap_blocks: tuple[int, ...]
    # start index of the unimodular U block used for transvections, if any
    transvection_block: int | None


_RECIPES = {
    "Lminus": _Recipe(((8, 9), (10, 11)), ((0, 8),), (8, 10), 10),
    "U2U": _Recipe(((0, 1), (2, 3)), (), (0, 2), 2),
    "E8_U_I11": _Recipe(((8, 9), (10, 11)), ((0, 8),), (8,), None),
    "U_I11": _Recipe(((0, 1), (2, 3)), (), (0,), None),
}

_I_NAME = re.compile(r"I_(\d+)_(\d+)")
_REFLECTION_NORMS = (-1, 1, -2, 2, -4, 4)
_POOL_BOX = 3


def _recipe_for(lattice: Lattice) -> _Recipe:
    known = _RECIPES.get(lattice.name)
    if known is not None and resolve(lattice.name) == lattice:
        return known
    m = _I_NAME.fullmatch(lattice.name)
    if m and resolve(lattice.name) == lattice:
        idx = range(lattice.rank)
        windows = tuple((i,) for i in idx) + tuple((i, j) for i in idx for j in idx if i < j)
        return _Recipe(windows, (), (), None)
    raise NoGeneratorRecipe(f"no sampling recipe for lattice {lattice.name!r}")


def _is_primitive_tuple(coords) -> bool:
    return math.gcd(*coords) == 1


def _reflection_candidates(lattice: Lattice, recipe: _Recipe):
    n = lattice.rank
    for window in recipe.windows:
        for values in product(range(-_POOL_BOX, _POOL_BOX + 1), repeat=len(window)):
            if not any(values):
                continue
            delta = [0] * n
            for pos, val in zip(window, values):
                delta[pos] = val
            yield tuple(delta)
    for start, stop in recipe.definite_blocks:
        block = Lattice(
            f"{lattice.name}[{start}:{stop}]",
            stop - start,
            tuple(tuple(row[start:stop]) for row in lattice.gram[start:stop]),
        )
        for target in _REFLECTION_NORMS:
            hits = short_vectors_definite(block, target)
            if not hits:
                continue
            for small in hits:
                delta = [0] * n
                delta[start : start + len(small)] = small
                yield tuple(delta)
            break  # smallest usable norm is enough; deeper shells add thousands


@lru_cache(maxsize=None)
def _generator_pool(lattice: Lattice) -> tuple[Isometry, ...]:
    """Certified reflections for the lattice, deterministic order, sign-deduped."""
    recipe = _recipe_for(lattice)
    pool = []
    seen = set()
    for delta in _reflection_candidates(lattice, recipe):
        if not _is_primitive_tuple(delta):
            continue
        canonical = delta
        for c in delta:
            if c != 0:
                if c < 0:
                    canonical = tuple(-x for x in delta)
                break
        if canonical in seen:
            continue
        seen.add(canonical)
        if inner(lattice, canonical, canonical) not in _REFLECTION_NORMS:
            continue
        try:
            pool.append(reflection(lattice, canonical))
        except (IsotropicReflectionVector, NotIntegralReflection):
            continue
    return tuple(pool)


def _random_transvection(lattice: Lattice, start: int, rng: random.Random) -> Isometry:
    which = rng.choice((0, 1))
    e = [0] * lattice.rank
    e[start + which] = 1
    partner = start + (1 - which)
    x = [rng.randint(-2, 2) for _ in range(lattice.rank)]
    x[partner] = 0  # kills <x, e>
    return transvection(lattice, e, x)


def sample_word(lattice: Lattice, seed: int, length: int) -> Isometry:
    """Deterministic product of `length` random generators; length 0 is the identity."""
    recipe = _recipe_for(lattice)
    pool = _generator_pool(lattice)
    kinds = []
    if pool:
        kinds.append("reflection")
    if recipe.transvection_block is not None and is_even(lattice):
        kinds.append("transvection")
    if recipe.swap_blocks:
        kinds.append("swap")
    kinds.append("negation")
    rng = random.Random(seed)
    word = intmat.identity(lattice.rank)
    for _ in range(length):
        kind = rng.choice(kinds)
        if kind == "reflection":
            step = rng.choice(pool)
        elif kind == "transvection":
            step = _random_transvection(lattice, recipe.transvection_block, rng)
        elif kind == "swap":
            step = block_swap(lattice, rng.choice(recipe.swap_blocks))
        else:
            step = negation(lattice)
        word = intmat.mat_mul(step.matrix, word)
    return Isometry(lattice, word)
