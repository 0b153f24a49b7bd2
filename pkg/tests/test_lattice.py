import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import nonzero_vectors, unimodular_matrices, vectors
from torifan.errors import NotStrictlyConvex, NotUnimodular, ZeroVector
from torifan.lattice import (Cone2, LatticeVector, basis_completion, det2, det3,
                             LatticeVector3, egcd, matrix_det2, primitive,
                             singularity_order, unimodular_apply)

V = LatticeVector


@pytest.mark.parametrize("u, v, d", [
    (V(1, 0), V(0, 1), 1),
    (V(0, -1), V(3, 2), 3),
    (V(2, 1), V(3, 2), 1),
])
def test_det2_examples(u, v, d):
    assert det2(u, v) == d


@pytest.mark.parametrize("v, p", [(V(4, 6), V(2, 3)), (V(0, -5), V(0, -1)), (V(7, 0), V(1, 0))])
def test_primitive_examples(v, p):
    assert primitive(v) == p


def test_primitive_of_zero():
    with pytest.raises(ZeroVector):
        primitive(V(0, 0))


@pytest.mark.parametrize("a, b, d", [
    ((1, 0), (0, 1), 1),
    ((0, -1), (3, 2), 3),
    ((3, 2), (-1, 0), 2),
])
def test_singularity_order(a, b, d):
    assert singularity_order(Cone2(V(*a), V(*b))) == d


def test_cone_rejects_degenerate():
    with pytest.raises(NotStrictlyConvex):
        Cone2(V(1, 0), V(-1, 0))
    with pytest.raises(ZeroVector):
        Cone2(V(0, 0), V(1, 0))


@pytest.mark.parametrize("m, pts, out", [
    (((1, 0), (0, 1)), [V(3, 2)], [V(3, 2)]),
    (((0, 1), (1, 0)), [V(1, 0), V(0, 1)], [V(0, 1), V(1, 0)]),
    (((1, 1), (0, 1)), [V(1, 0)], [V(1, 0)]),
])
def test_unimodular_apply_examples(m, pts, out):
    assert unimodular_apply(m, pts) == out


def test_unimodular_apply_rejects_det2_matrix():
    with pytest.raises(NotUnimodular):
        unimodular_apply(((2, 0), (0, 1)), [V(1, 0)])


def test_vector_arithmetic_and_repr():
    assert V(1, 2) + V(3, -1) == V(4, 1)
    assert 3 * V(1, -2) == V(3, -6)
    assert -V(1, 2) == V(-1, -2)
    assert repr(V(3, 2)) == "(3,2)"
    assert det3(LatticeVector3(1, 0, 0), LatticeVector3(0, 1, 0), LatticeVector3(0, 0, 1)) == 1


@given(vectors, vectors)
def test_det2_alternating(u, v):
    assert det2(u, v) == -det2(v, u)


@given(unimodular_matrices(), vectors, vectors)
def test_det2_equivariance(m, u, v):
    mu, mv = unimodular_apply(m, [u, v])
    assert det2(mu, mv) == matrix_det2(m) * det2(u, v)


@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), vectors, vectors)
def test_det2_equivariance_any_integer_matrix(a, b, c, d, u, v):
    def apply(p):
        return V(a * p.x + b * p.y, c * p.x + d * p.y)
    assert det2(apply(u), apply(v)) == (a * d - b * c) * det2(u, v)


@given(nonzero_vectors)
def test_primitive_idempotent_and_ray_preserving(v):
    p = primitive(v)
    assert primitive(p) == p
    k = v.x // p.x if p.x else v.y // p.y
    assert k > 0 and k * p == v


@given(unimodular_matrices(), nonzero_vectors, nonzero_vectors)
def test_singularity_order_invariant(m, u, v):
    u, v = primitive(u), primitive(v)
    if det2(u, v) == 0:
        return
    mu, mv = unimodular_apply(m, [u, v])
    assert singularity_order(Cone2(u, v)) == singularity_order(Cone2(mu, mv))


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_egcd_bezout(a, b):
    g, s, t = egcd(a, b)
    assert s * a + t * b == g >= 0


@given(nonzero_vectors)
def test_basis_completion(v):
    u = primitive(v)
    assert det2(u, basis_completion(u)) == 1


def test_big_integers_are_exact():
    big = 10**40 + 1
    assert det2(V(big, 1), V(big - 1, 1)) == 1
