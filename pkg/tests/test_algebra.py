import itertools

import numpy as np
import pytest

from linemark.algebra import (
    FieldSpec,
    circledast,
    circledast_table,
    default_qprime,
    find_irreducible,
    index_digits,
    is_irreducible,
    q_field,
    q_general,
    q_prime,
    shift_identity_prime,
)
from linemark.grid import GroupSpec


def test_q_prime_examples():
    assert q_prime([0] * 9, 2, 1, 3) == (0, 0)
    assert q_prime([0, 1, 0], 1, 1, 3) == (1,)
    # k=3, m=1, r=2, block sums (0, 2, 2)
    assert q_prime([0, 0, 1, 1, 2, 0], 1, 2, 3) == (0,)


def test_q_prime_length_mismatch():
    with pytest.raises(ValueError):
        q_prime([0, 1], 1, 1, 3)
    with pytest.raises(ValueError):
        q_prime([0] * 4, 1, 1, 4)


@pytest.mark.parametrize("k,m,r", [(2, 2, 1), (3, 1, 2), (3, 2, 1), (5, 1, 2)])
def test_q_prime_linear(k, m, r):
    rng = np.random.default_rng(k * 100 + m * 10 + r)
    width = k**m * r
    for _ in range(1000):
        x = rng.integers(0, k, width)
        y = rng.integers(0, k, width)
        lhs = q_prime(list((x + y) % k), m, r, k)
        rhs = tuple((u + v) % k for u, v in zip(q_prime(list(x), m, r, k), q_prime(list(y), m, r, k)))
        assert lhs == rhs


def test_shift_identity_examples():
    x = [0, 2, 0]  # q(x) = 2 for k=3, m=1
    assert q_prime(x, 1, 1, 3) == (2,)
    assert shift_identity_prime(x, 1, 1, 0, 1, 1, 3) == (1,)
    for s in (1, 2):
        assert shift_identity_prime(x, s, 0, 0, 1, 1, 3) == q_prime(x, 1, 1, 3)


def test_shift_injective_k5_m2():
    rng = np.random.default_rng(5)
    x = list(rng.integers(0, 5, 25))
    for s in range(1, 5):
        vals = {shift_identity_prime(x, s, i, 0, 2, 1, 5) for i in range(25)}
        assert len(vals) == 25


@pytest.mark.parametrize("k,m,r", [(2, 1, 2), (3, 2, 1), (5, 1, 1)])
def test_shift_identity_closed_form(k, m, r):
    rng = np.random.default_rng(7)
    for _ in range(10):
        x = list(rng.integers(0, k, k**m * r))
        q = q_prime(x, m, r, k)
        for s in range(1, k):
            for i in range(k**m):
                for j in range(r):
                    want = tuple((qc - s * ic) % k for qc, ic in zip(q, index_digits(i, k, m)))
                    assert shift_identity_prime(x, s, i, j, m, r, k) == want


def test_circledast_examples():
    g6 = GroupSpec.of_order(6)
    u = g6.encode((1, 2))
    v = g6.encode((1, 1))
    assert g6.decode(circledast(u, v, g6, g6)) == (1, 2)
    for k in (4, 6, 12):
        g = GroupSpec.of_order(k)
        for v in range(k):
            assert circledast(g.ones, v, g, g) == v
            assert circledast(0, v, g, g) == 0


def test_circledast_rejects_foreign_prime():
    with pytest.raises(ValueError):
        circledast(1, 1, GroupSpec.of_order(4), GroupSpec.of_order(3))


def test_circledast_uses_last_digit_of_block():
    g4, g2 = GroupSpec.of_order(4), GroupSpec.of_order(2)
    # u = (1, 0) has last digit 0, so it annihilates
    assert circledast(g4.encode((1, 0)), 1, g4, g2) == 0
    assert circledast(g4.encode((0, 1)), 1, g4, g2) == 1


def test_circledast_table_matches():
    g12, g6 = GroupSpec.of_order(12), GroupSpec.of_order(6)
    tab = circledast_table(g12, g6)
    assert tab.shape == (12, 6)
    assert all(tab[u, v] == circledast(u, v, g12, g6) for u in range(12) for v in range(6))


def test_q_general_zero():
    g = GroupSpec.of_order(6)
    assert q_general([0] * 6, g, g) == 0


@pytest.mark.parametrize("k,b", [(2, 2), (3, 3), (4, 4), (4, 2), (6, 6), (6, 3), (12, 12), (12, 4)])
def test_q_general_unique_zero_shift(k, b):
    kspec, bspec = GroupSpec.of_order(k), GroupSpec.of_order(b)
    rng = np.random.default_rng(k * 31 + b)
    for _ in range(200):
        x = [int(v) for v in rng.integers(0, k, b)]
        zeros = []
        for i in range(b):
            y = list(x)
            y[i] = kspec.sub(y[i], kspec.ones)
            if q_general(y, kspec, bspec) == 0:
                zeros.append(i)
        assert zeros == [q_general(x, kspec, bspec)]


def test_find_irreducible_examples():
    assert find_irreducible(2, 1) == (0, 1)
    assert find_irreducible(2, 2) == (1, 1, 1)
    assert find_irreducible(3, 2) == (1, 0, 1)
    # both cubics 1+x+x^3 and 1+x^2+x^3 are irreducible; (1,0,1,1) sorts first
    assert find_irreducible(2, 3) == (1, 0, 1, 1)


def test_irreducibility_by_root_counting():
    # degree 2 and 3: irreducible iff no roots
    for p in (2, 3, 5):
        for deg in (2, 3):
            for tail in itertools.product(range(p), repeat=deg):
                poly = tail + (1,)
                has_root = any(sum(c * x**i for i, c in enumerate(poly)) % p == 0 for x in range(p))
                assert is_irreducible(poly, p) == (not has_root)


def test_field_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 0, 1))


@pytest.mark.parametrize("p,s", [(2, 2), (2, 3), (3, 2)])
def test_field_axioms_small(p, s):
    f = FieldSpec.of(p, s)
    N = f.order
    mul = np.array([[f.mul(x, y) for y in range(N)] for x in range(N)])
    add = np.array([[f.add(x, y) for y in range(N)] for x in range(N)])
    a, b, c = np.meshgrid(range(N), range(N), range(N), indexing="ij")
    assert (mul[mul[a, b], c] == mul[a, mul[b, c]]).all()
    assert (add[add[a, b], c] == add[a, add[b, c]]).all()
    assert (mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]).all()
    assert (mul == mul.T).all()
    for x in range(1, N):
        assert f.mul(x, f.inv(x)) == 1
        assert f.add(x, f.neg(x)) == 0
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_scale_all_matches_mul():
    f = FieldSpec.of(3, 3)
    for c in (0, 1, 5, 26):
        assert list(f.scale_all(c)) == [f.mul(c, e) for e in f.elements()]
    x = np.arange(27)
    assert [int(v) for v in f.add_arrays(x, 13)] == [f.add(int(e), 13) for e in x]


# GF(4) written out by hand with alpha^2 = alpha + 1; 0, 1, alpha, alpha+1 -> 0, 1, 2, 3
GF4_MUL = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]


def gf4_q(x, r, qprime):
    acc = 0
    for i in range(4):
        row = sum(x[i * r : (i + 1) * r]) % 4
        acc ^= GF4_MUL[qprime[row]][i]
    return acc


def test_gf4_table_agrees_with_fieldspec():
    f = FieldSpec.of(2, 2)
    assert [[f.mul(x, y) for y in range(4)] for x in range(4)] == GF4_MUL


def test_q_field_examples():
    f = FieldSpec.of(2, 2)
    qp = default_qprime(4, f)
    assert q_field([0] * 4, f, 1, 4, qp) == 0
    for i in range(4):
        x = [0] * 4
        x[i] = 1  # q'(1) = 1
        assert q_field(x, f, 1, 4, qp) == i


@pytest.mark.parametrize("r", [1, 2])
def test_q_field_cross_implementation(r):
    f = FieldSpec.of(2, 2)
    rng = np.random.default_rng(r)
    for trial in range(100):
        qp = [int(v) for v in rng.integers(0, 4, 4)] if trial % 2 else default_qprime(4, f)
        x = [int(v) for v in rng.integers(0, 4, 4 * r)]
        assert q_field(x, f, r, 4, qp) == gf4_q(x, r, qp)


def test_q_field_dimension_checks():
    f = FieldSpec.of(2, 2)
    with pytest.raises(ValueError):
        q_field([0] * 3, f, 1, 4, [0, 1, 2, 3])
    with pytest.raises(ValueError):
        q_field([0] * 4, f, 1, 4, [0, 1])
