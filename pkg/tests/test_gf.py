"""Finite field arithmetic tests."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from subsystem_codes.gf import (FieldElement, FieldSpec, TowerSpec,
                                conway_polynomial)

# classical table values for the standard (Conway) moduli, as coefficient
# lists c_0..c_m of x^m + c_{m-1} x^{m-1} + ... + c_0
KNOWN_MODULI = {
    (2, 1): [1, 1],
    (2, 2): [1, 1, 1],
    (2, 3): [1, 1, 0, 1],
    (2, 4): [1, 1, 0, 0, 1],
    (3, 1): [1, 1],
    (3, 2): [2, 2, 1],
    (5, 2): [2, 4, 1],
    (7, 2): [3, 6, 1],
}


@pytest.mark.parametrize("pm,coeffs", KNOWN_MODULI.items())
def test_standard_moduli(pm, coeffs):
    p, m = pm
    assert conway_polynomial(p, m) == tuple(coeffs)


@pytest.mark.parametrize("p,m", [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1),
                                 (5, 2), (7, 2)])
def test_field_axioms_sampled(p, m):
    f = FieldSpec(p, m)
    rng = np.random.default_rng(0)
    xs = rng.integers(0, f.q, size=30)
    ys = rng.integers(0, f.q, size=30)
    zs = rng.integers(0, f.q, size=30)
    for x, y, z in zip(xs, ys, zs):
        x, y, z = int(x), int(y), int(z)
        assert f.add(x, y) == f.add(y, x)
        assert f.mul(x, y) == f.mul(y, x)
        assert f.add(f.add(x, y), z) == f.add(x, f.add(y, z))
        assert f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z))
        assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
        assert f.add(x, f.neg(x)) == 0
        if x != 0:
            assert f.mul(x, f.inv(x)) == 1


@pytest.mark.parametrize("p,m", [(2, 2), (3, 2), (2, 4)])
def test_generator_is_primitive(p, m):
    f = FieldSpec(p, m)
    seen = set()
    cur = 1
    for _ in range(f.q - 1):
        seen.add(cur)
        cur = f.mul(cur, f.generator)
    assert len(seen) == f.q - 1
    assert cur == 1


@pytest.mark.parametrize("p,m", [(2, 2), (3, 2), (5, 2), (2, 4)])
def test_trace_properties(p, m):
    f = FieldSpec(p, m)
    # trace is F_p-linear, surjective onto F_p, and Frobenius-invariant
    vals = set()
    for x in range(f.q):
        t = f.trace(x)
        assert 0 <= t < p
        vals.add(t)
        assert f.trace(f.pow(x, p)) == t
    assert vals == set(range(p))
    for x in range(min(f.q, 16)):
        for y in range(min(f.q, 16)):
            assert f.trace(f.add(x, y)) == (f.trace(x) + f.trace(y)) % p


@given(st.integers(0, 8), st.integers(0, 8))
@settings(max_examples=50, deadline=None)
def test_field_element_ops(a, b):
    f = FieldSpec(3, 2)
    x, y = FieldElement(f, a), FieldElement(f, b)
    assert (x + y).value == f.add(a, b)
    assert (x * y).value == f.mul(a, b)
    assert (x - y).value == f.sub(a, b)
    assert (-x).value == f.neg(a)


@pytest.mark.parametrize("p,m", [(2, 1), (2, 2), (3, 1), (5, 1), (7, 1)])
def test_tower_embedding(p, m):
    base = FieldSpec(p, m)
    tw = TowerSpec(base)
    q = base.q
    # the embedding is a ring homomorphism
    for a in range(q):
        for b in range(q):
            assert tw.embed(base.add(a, b)) == tw.top.add(tw.embed(a),
                                                          tw.embed(b))
            assert tw.embed(base.mul(a, b)) == tw.top.mul(tw.embed(a),
                                                          tw.embed(b))
    # expand/combine are mutually inverse
    for x in range(tw.top.q):
        u, v = tw.expand(x)
        assert tw.combine(u, v) == x
    # conjugation fixes exactly the base field
    fixed = [x for x in range(tw.top.q) if tw.conj(x) == x]
    assert sorted(fixed) == sorted(tw.embed(a) for a in range(q))


def test_vectorized_ops_match_scalar():
    f = FieldSpec(3, 2)
    rng = np.random.default_rng(1)
    a = rng.integers(0, 9, size=40)
    b = rng.integers(0, 9, size=40)
    add = f.add_arr(a, b)
    neg = f.neg_arr(a)
    for i in range(40):
        assert add[i] == f.add(int(a[i]), int(b[i]))
        assert neg[i] == f.neg(int(a[i]))
    for c in range(9):
        mul = f.mul_arr(a, c)
        for i in range(40):
            assert mul[i] == f.mul(int(a[i]), c)


def test_invalid_field_parameters():
    with pytest.raises(ValueError):
        FieldSpec(4)          # not prime
    with pytest.raises(ValueError):
        FieldSpec(2, 0)
