"""Exact vector enumeration.

Two engines: a coordinate box walker (any lattice, lexicographic order) and a
recursive short-vector enumerator for definite forms. The definite engine
completes the square over the rationals once, then bounds each coordinate by an
exact interval, so no vector is missed regardless of how skew the basis is;
integer square roots only ever widen the candidate interval and every candidate
is accepted by an exact comparison.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

from .errors import LatticeShapeMismatch
from .lattices import Lattice


def box_vectors(rank: int, bound: int):
    """All coordinate tuples in [-bound, bound]^rank, lexicographic order."""
    return product(range(-bound, bound + 1), repeat=rank)


def _completed_square(gram) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Positive definite gram -> (d, c) with Q(v) = sum_i d[i]*(v_i + sum_{j>i} c[i][j] v_j)^2."""
    n = len(gram)
    a = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    d = [Fraction(0)] * n
    c = [[Fraction(0)] * n for _ in range(n)]
    for k in range(n):
        d[k] = a[k][k]
        if d[k] <= 0:
            raise LatticeShapeMismatch("form is not positive definite")
        for j in range(k + 1, n):
            c[k][j] = a[k][j] / d[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] -= a[i][k] * a[k][j] / d[k]
    return d, c


def _sqrt_upper(x: Fraction) -> Fraction:
    # any rational >= sqrt(x); off by at most 1/denominator
    return Fraction(math.isqrt(x.numerator * x.denominator) + 1, x.denominator)


def short_vectors_definite(lattice: Lattice, target: int) -> tuple[tuple[int, ...], ...]:
    """All nonzero v with <v, v> == target in a definite lattice, sorted.

    Works for either sign of definiteness; a target of the wrong sign gives the
    empty tuple.
    """
    n = lattice.rank
    lead = lattice.gram[0][0]
    if lead == 0:
        raise LatticeShapeMismatch(f"{lattice.name} is not definite")
    if lead > 0:
        gram, goal = lattice.gram, target
    else:
        gram = tuple(tuple(-x for x in row) for row in lattice.gram)
        goal = -target
    if goal < 0:
        return ()
    d, c = _completed_square(gram)
    found: list[tuple[int, ...]] = []
    v = [0] * n

    def descend(i: int, rem: Fraction):
        if i < 0:
            if rem == 0 and any(v):
                found.append(tuple(v))
            return
        center = sum(c[i][j] * v[j] for j in range(i + 1, n))
        radius = _sqrt_upper(rem / d[i])
        lo = math.ceil(-center - radius)
        hi = math.floor(-center + radius)
        for x in range(lo, hi + 1):
            used = d[i] * (x + center) ** 2
            if used <= rem:
                v[i] = x
                descend(i - 1, rem - used)
        v[i] = 0

    descend(n - 1, Fraction(goal))
    return tuple(sorted(found))
