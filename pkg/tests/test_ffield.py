import itertools

import numpy as np
import pytest

from brauerkit.ffield import (
    GF,
    FieldSpec,
    Subspace,
    field_from_text,
    field_to_text,
    full_space,
    is_irreducible_poly,
    mat_from_text,
    mat_to_text,
    poly_eq,
    poly_factor,
    poly_mul,
    poly_scalar,
)

F2 = GF(2)
F3 = GF(3)
F4 = GF(2, 2)
F9 = GF(3, 2)


def test_fieldspec_validation():
    with pytest.raises(ValueError):
        FieldSpec(4)
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (0, 0, 1))  # x^2 = x*x reducible
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 1))  # wrong degree
    assert FieldSpec(2, 2, (1, 1, 1)).q == 4


@pytest.mark.parametrize("field", [F2, F3, F4, F9, GF(2, 4), GF(5)])
def test_field_axioms_random(field):
    rng = np.random.default_rng(0)
    trials = field.rand_elements(rng, (1000, 3))
    for a, b, c in trials:
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
        assert field.add(a, field.neg(a)) == 0
    for a in range(1, min(field.q, 64)):
        assert field.mul(a, field.inv(a)) == 1


def test_frobenius_is_inverse_pair():
    for field in (F4, F9, GF(2, 4)):
        for a in range(field.q):
            assert field.frob_inv(field.frob(a)) == a
            assert field.frob(a) == field.pow(a, field.p)


def test_mat_rank_examples():
    assert F2.rank(F2.identity(3)) == 3
    assert F2.rank(np.ones((2, 2), dtype=np.int64)) == 1
    assert F2.rank(np.zeros((3, 4), dtype=np.int64)) == 0


def test_rref_idempotent_and_transpose_rank():
    rng = np.random.default_rng(1)
    for field in (F2, F3, F4):
        for _ in range(20):
            m = field.rand_elements(rng, (5, 7))
            r1, _ = field.rref(m)
            r2, _ = field.rref(r1)
            assert np.array_equal(r1, r2)
            assert field.rank(m) == field.rank(m.T)


def test_solve_examples():
    b = np.array([1, 0, 1], dtype=np.int64)
    x, ns = F2.solve(F2.identity(3), b)
    assert np.array_equal(x, b)
    x, ns = F2.solve(F2.zeros(2, 2), np.zeros(2, dtype=np.int64))
    assert not np.any(x)
    assert ns.shape[0] == 2
    assert F2.solve(np.array([[1, 1], [0, 0]]), np.array([1, 1])) is None


def test_solve_random_consistency():
    rng = np.random.default_rng(7)
    for field in (F3, F4):
        for _ in range(25):
            a = field.rand_elements(rng, (4, 6))
            xs = field.rand_elements(rng, 6)
            b = field.matvec(a, xs)
            x, ns = field.solve(a, b)
            assert np.array_equal(field.matvec(a, x), b)
            for row in ns:
                assert not np.any(field.matvec(a, row))


def test_kron():
    assert np.array_equal(F2.kron(F2.identity(2), F2.identity(3)), F2.identity(6))
    a = np.array([[1, 2], [0, 1]], dtype=np.int64)
    assert np.array_equal(F3.kron(a, np.array([[1]])), a)
    rng = np.random.default_rng(3)
    for _ in range(10):
        a = F3.rand_elements(rng, (3, 3))
        b = F3.rand_elements(rng, (3, 3))
        assert F3.rank(F3.kron(a, b)) == F3.rank(a) * F3.rank(b)


def test_kron_mixed_product():
    rng = np.random.default_rng(4)
    a, b, c, d = (F4.rand_elements(rng, (2, 2)) for _ in range(4))
    lhs = F4.matmul(F4.kron(a, b), F4.kron(c, d))
    rhs = F4.kron(F4.matmul(a, c), F4.matmul(b, d))
    assert np.array_equal(lhs, rhs)


def test_matmul_against_slow_reference():
    rng = np.random.default_rng(5)
    for field in (F4, F9):
        a = field.rand_elements(rng, (4, 5))
        b = field.rand_elements(rng, (5, 3))
        slow = field.zeros(4, 3)
        for i in range(4):
            for j in range(3):
                acc = 0
                for t in range(5):
                    acc = field.add(acc, field.mul(a[i, t], b[t, j]))
                slow[i, j] = acc
        assert np.array_equal(field.matmul(a, b), slow)


def test_charpoly_matches_poly_of_companion():
    # companion matrix of f has charpoly f
    for field in (F2, F3, F4):
        f = (1, 0, 2 % field.q, 1)  # x^3 + 2x^2 + 1 style
        d = 3
        comp = field.zeros(d, d)
        for i in range(1, d):
            comp[i, i - 1] = 1
        for i in range(d):
            comp[i, d - 1] = field.neg(f[i])
        assert poly_eq(field.charpoly(comp), f)


def test_charpoly_block_cases():
    assert F2.charpoly(F2.identity(2)) == (1, 0, 1)  # (x-1)^2 = x^2+1
    f5 = GF(5)
    nil = np.array([[0, 1], [0, 0]])
    assert f5.charpoly(nil) == (0, 0, 1)


def test_subspace_ops():
    u = Subspace(F2, 2, [[1, 0]])
    v = Subspace(F2, 2, [[0, 1]])
    assert u.intersect(u) == u
    assert u.add(Subspace(F2, 2)) == u
    assert u.intersect(v).dim == 0
    assert u.add(v) == full_space(F2, 2)
    assert u.contains([1, 0]) and not u.contains([1, 1])


def test_zassenhaus_dimension_formula():
    rng = np.random.default_rng(11)
    for field in (F2, F3):
        for _ in range(30):
            n = int(rng.integers(2, 13))
            u = Subspace(field, n, field.rand_elements(rng, (int(rng.integers(1, n + 1)), n)))
            v = Subspace(field, n, field.rand_elements(rng, (int(rng.integers(1, n + 1)), n)))
            assert u.add(v).dim + u.intersect(v).dim == u.dim + v.dim


def test_poly_factor_examples():
    lead, facs = poly_factor(F2, (1, 1, 1))
    assert facs == [((1, 1, 1), 1)]
    lead, facs = poly_factor(F2, (1, 0, 1))  # x^2+1 = (x+1)^2
    assert facs == [((1, 1), 2)]
    lead, facs = poly_factor(F2, (0, 1, 0, 1))  # x^3+x = x(x+1)^2
    assert facs == [((0, 1), 1), ((1, 1), 2)]


def test_poly_factor_roundtrip_random():
    rng = np.random.default_rng(13)
    for field in (F2, F3, F4):
        count = 0
        while count < 200:
            deg = int(rng.integers(1, 13))
            coeffs = list(field.rand_elements(rng, deg + 1))
            if coeffs[-1] == 0:
                continue
            count += 1
            f = tuple(int(c) for c in coeffs)
            lead, facs = poly_factor(field, f, seed=count)
            prod = (1,)
            for irr, mult in facs:
                assert is_irreducible_poly(field, irr)
                for _ in range(mult):
                    prod = poly_mul(field, prod, irr)
            assert poly_eq(poly_scalar(field, lead, prod), f)


def test_poly_factor_zero_rejected():
    with pytest.raises(ValueError):
        poly_factor(F2, ())


def test_text_formats():
    assert field_from_text(field_to_text(F9)) == F9
    assert field_to_text(F4) == "field p=2 n=2 poly=1,1,1"
    m = np.array([[0, 1], [3, 2]], dtype=np.int64)
    assert np.array_equal(mat_from_text(mat_to_text(m), F4), m)
    with pytest.raises(ValueError):
        mat_from_text("mat r=1 c=1\n7", F4)
