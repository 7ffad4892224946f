import random

import pytest

from lattice_orbits.errors import (
    EmptyLattice,
    LatticeShapeMismatch,
    RankMismatch,
    UnknownLattice,
    ZeroTwist,
)
from lattice_orbits.lattices import (
    Lattice,
    base_plus_i11,
    builtin_names,
    determinant,
    direct_sum,
    inner,
    is_even,
    is_unimodular,
    make_e8,
    make_i,
    make_u,
    resolve,
    signature,
    twist,
    twisted_plus_u,
)


def test_u_gram_and_determinant():
    u = make_u()
    assert u.gram == ((0, 1), (1, 0))
    assert determinant(u) == -1
    assert is_even(u) and is_unimodular(u)


def test_e8_shape():
    e8 = make_e8()
    assert e8.rank == 8
    assert all(e8.gram[i][i] == -2 for i in range(8))
    assert determinant(e8) == 1
    sig = signature(e8)
    assert (sig.positive, sig.negative, sig.zero) == (0, 8, 0)
    assert is_even(e8) and is_unimodular(e8)


def test_e8_offdiagonal_entries():
    e8 = make_e8()
    ones = sum(
        1 for i in range(8) for j in range(i + 1, 8) if e8.gram[i][j] == 1
    )
    assert ones == 7  # tree with 8 nodes
    assert all(
        e8.gram[i][j] in (0, 1) for i in range(8) for j in range(8) if i != j
    )


def test_make_i():
    i11 = make_i(1, 1)
    assert i11.gram == ((1, 0), (0, -1))
    assert not is_even(i11)
    sig = signature(make_i(3, 2))
    assert (sig.positive, sig.negative, sig.zero) == (3, 2, 0)
    with pytest.raises(EmptyLattice):
        make_i(0, 0)
    with pytest.raises(RankMismatch):
        make_i(-1, 2)


def test_twist():
    u2 = twist(make_u(), 2)
    assert u2.gram == ((0, 2), (2, 0))
    assert not is_unimodular(u2)
    assert twist(make_u(), 1) == make_u()
    e82 = twist(make_e8(), 2)
    assert all(e82.gram[i][i] == -4 for i in range(8))
    with pytest.raises(ZeroTwist):
        twist(make_u(), 0)


def test_direct_sum_blocks():
    s = direct_sum(make_u(), make_i(1, 1))
    assert s.rank == 4
    for i in range(2):
        for j in range(2, 4):
            assert s.gram[i][j] == 0 and s.gram[j][i] == 0
    assert s.gram[0][1] == 1 and s.gram[2][2] == 1 and s.gram[3][3] == -1


def test_direct_sum_signature_additive():
    rng = random.Random(3)
    for _ in range(20):
        a = make_i(rng.randint(0, 2) + 1, rng.randint(0, 2))
        b = make_i(rng.randint(0, 2), rng.randint(0, 2) + 1)
        sa, sb = signature(a), signature(b)
        ss = signature(direct_sum(a, b))
        assert (ss.positive, ss.negative) == (
            sa.positive + sb.positive,
            sa.negative + sb.negative,
        )


def test_lminus_structure():
    lminus = resolve("Lminus")
    assert lminus.rank == 12
    sig = signature(lminus)
    assert (sig.positive, sig.negative, sig.zero) == (2, 10, 0)
    assert determinant(lminus) == 1024  # 2^8 * 1 * (-4) * (-1)
    assert is_even(lminus)
    # block layout: E8(2) at 0..7, U(2) at 8..9, U at 10..11
    assert lminus.gram[0][0] == -4
    assert lminus.gram[8][9] == 2
    assert lminus.gram[10][11] == 1


def test_lambda_structure():
    lam = resolve("Lambda")
    assert lam.rank == 22
    assert is_even(lam) and is_unimodular(lam)
    sig = signature(lam)
    assert (sig.positive, sig.negative) == (3, 19)


def test_inner_values():
    u = make_u()
    assert inner(u, (1, 0), (0, 1)) == 1
    lminus = resolve("Lminus")
    for n in (-2, 0, 3, 7):
        v = (0,) * 10 + (1, n)
        assert inner(lminus, v, v) == 2 * n
    assert inner(u, (0, 0), (5, -3)) == 0
    with pytest.raises(RankMismatch):
        inner(u, (1, 0, 0), (0, 1))


def test_inner_symmetric_bilinear():
    lminus = resolve("Lminus")
    rng = random.Random(11)
    for _ in range(50):
        v = tuple(rng.randint(-4, 4) for _ in range(12))
        w = tuple(rng.randint(-4, 4) for _ in range(12))
        x = tuple(rng.randint(-4, 4) for _ in range(12))
        assert inner(lminus, v, w) == inner(lminus, w, v)
        vw = tuple(a + b for a, b in zip(v, w))
        assert inner(lminus, vw, x) == inner(lminus, v, x) + inner(lminus, w, x)


def test_is_even_matches_random_norms():
    rng = random.Random(5)
    for name in ("U", "E8", "I_2_2", "Lminus", "U2U"):
        lattice = resolve(name)
        even = is_even(lattice)
        for _ in range(1000):
            v = tuple(rng.randint(-3, 3) for _ in range(lattice.rank))
            if inner(lattice, v, v) % 2 != 0:
                assert not even
                break
        else:
            assert even


def test_signature_degenerate():
    flat = Lattice("flat", 2, ((0, 0), (0, 0)))
    sig = signature(flat)
    assert sig.zero == 2
    line = Lattice("line", 2, ((2, 2), (2, 2)))
    sig = signature(line)
    assert (sig.positive, sig.negative, sig.zero) == (1, 0, 1)


def test_signature_zero_diagonal_pivot():
    sig = signature(make_u())
    assert (sig.positive, sig.negative, sig.zero) == (1, 1, 0)
    u2u = resolve("U2U")
    sig = signature(u2u)
    assert (sig.positive, sig.negative, sig.zero) == (2, 2, 0)


def test_lattice_validation():
    with pytest.raises(LatticeShapeMismatch):
        Lattice("bad", 2, ((0, 1), (2, 0)))
    with pytest.raises(RankMismatch):
        Lattice("bad", 3, ((0, 1), (1, 0)))
    with pytest.raises(EmptyLattice):
        Lattice("bad", 0, ())


def test_resolve_names():
    assert resolve("U") == make_u()
    assert resolve("B_U") == make_u()
    assert resolve("U2").gram == ((0, 2), (2, 0))
    assert resolve("E8_2").gram[0][0] == -4
    assert resolve("I_4_2") == make_i(4, 2)
    with pytest.raises(UnknownLattice):
        resolve("A_7")
    names = builtin_names()
    for expected in ("U", "E8", "Lminus", "Lambda", "U2U", "I_s_t"):
        assert expected in names


def test_shape_tags():
    u2u = resolve("U2U")
    assert u2u.shape is not None and u2u.shape.base == make_u()
    target = resolve("U_I11")
    assert target.shape is not None and target.shape.base == make_u()
    assert resolve("Lminus").shape.base.name == "E8_U"


def test_split_constructors_reject_bad_bases():
    with pytest.raises(LatticeShapeMismatch):
        twisted_plus_u(make_i(1, 1), name="bad")  # odd base
    with pytest.raises(LatticeShapeMismatch):
        base_plus_i11(twist(make_u(), 2), name="bad")  # non-unimodular base
