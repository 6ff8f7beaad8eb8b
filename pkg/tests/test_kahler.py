import random

import pytest

from azumaya.kahler import (
    MorphismToAffine,
    MPolyMatrix,
    classical_d,
    d,
    leibniz_expand,
    pullback,
    pullback_form,
    tensor,
    trace_form,
)
from azumaya.poly import MultiPoly
from azumaya.scalars import gr
from helpers import rand_scalar


V1 = ("z",)
V2 = ("x", "y")


def rand_mpoly(rng, variables=V2, degree=1):
    terms = {}
    for _ in range(3):
        e = tuple(rng.randrange(0, degree + 1) for _ in variables)
        if sum(e) <= degree:
            terms[e] = rand_scalar(rng)
    return MultiPoly(variables, terms)


def rand_mmatrix(rng, r=2, variables=V2, degree=1):
    return MPolyMatrix(
        variables, [[rand_mpoly(rng, variables, degree) for _ in range(r)] for _ in range(r)]
    )


def commuting_pair(rng, r=2, variables=V2):
    """Two polynomials in one random matrix; they always commute."""
    w = rand_mmatrix(rng, r, variables)
    ident = MPolyMatrix.identity(variables, r)

    def poly_of(mat):
        acc = MPolyMatrix.zeros(variables, r)
        power = ident
        for _ in range(3):
            acc = acc + power * rand_scalar(rng)
            power = power * mat
        return acc

    return poly_of(w), poly_of(w)


def test_d_linearity_under_trace():
    rng = random.Random(1)
    for _ in range(20):
        m = rand_mmatrix(rng)
        mp = rand_mmatrix(rng)
        a, b = rand_scalar(rng), rand_scalar(rng)
        lhs = trace_form(d(m * a + mp * b))
        rhs = trace_form(d(m)).scale(a) + trace_form(d(mp)).scale(b)
        assert lhs == rhs
    zero = MPolyMatrix.zeros(V2, 2)
    assert trace_form(d(zero)).is_zero()


def test_leibniz_under_trace():
    rng = random.Random(2)
    for _ in range(20):
        m = rand_mmatrix(rng)
        mp = rand_mmatrix(rng)
        assert trace_form(d(m * mp)) == trace_form(leibniz_expand(m, mp))


def test_pass_over_under_trace_for_all_matrices():
    # trace cyclicity makes m (dm') - (dm') m vanish with no hypotheses
    rng = random.Random(3)
    for _ in range(20):
        m = rand_mmatrix(rng)
        mp = rand_mmatrix(rng)
        w = d(mp).left_mul(m) - d(mp).right_mul(m)
        assert trace_form(w).is_zero()


def test_trace_form_examples():
    for r in (1, 2, 3):
        zi = MPolyMatrix.identity(V1, r) * MultiPoly.variable(V1, "z")
        assert trace_form(d(zi)).coefficient_list() == [MultiPoly.constant(V1, r)]
    e12 = MPolyMatrix(V1, [[0, 1], [0, 0]])
    e21 = MPolyMatrix(V1, [[0, 0], [1, 0]])
    assert trace_form(d(e21).left_mul(e12)).is_zero()


def test_diagonal_leibniz_doubling():
    # for one diagonal matrix, trace(d(m^2)) = 2 trace(m dm)
    zvar = MultiPoly.variable(V1, "z")
    m = MPolyMatrix(V1, [[zvar, 0], [0, zvar * gr(2)]])
    lhs = trace_form(d(m * m))
    rhs = trace_form(d(m).left_mul(m)).scale(2)
    assert lhs == rhs


def test_tensor_examples():
    z1 = MPolyMatrix.identity(V1, 1) * MultiPoly.variable(V1, "z")
    two = tensor(d(z1), d(z1))
    tf = trace_form(two)
    assert tf.degree == 2
    assert tf.coefficient((0, 0)) == MultiPoly.constant(V1, 1)

    e11z = MPolyMatrix(V1, [[MultiPoly.variable(V1, "z"), 0], [0, 0]])
    tf2 = trace_form(tensor(d(e11z), d(e11z)))
    assert tf2.coefficient((0, 0)) == MultiPoly.constant(V1, 1)


def test_tensor_middle_relator_under_trace():
    rng = random.Random(5)
    for _ in range(15):
        m1 = rand_mmatrix(rng)
        m2 = rand_mmatrix(rng)
        m = rand_mmatrix(rng)
        lhs = tensor(d(m1).right_mul(m), d(m2))
        rhs = tensor(d(m1), d(m2).left_mul(m))
        assert trace_form(lhs) == trace_form(rhs)


def test_pullback_function_multiplicative():
    rng = random.Random(6)
    for _ in range(15):
        m1, m2 = commuting_pair(rng)
        phi = MorphismToAffine(("u", "v"), (m1, m2))
        f = rand_mpoly(rng, ("u", "v"), 2)
        g = rand_mpoly(rng, ("u", "v"), 2)
        assert pullback(phi, f * g) == pullback(phi, f) * pullback(phi, g)


def test_pullback_form_examples():
    zvar = MultiPoly.variable(V1, "z")
    m = MPolyMatrix(V1, [[zvar, 1], [0, zvar]])
    phi = MorphismToAffine(("y",), (m,))
    f = MultiPoly(("y",), {(2,): 1})
    assert pullback(phi, f) == m * m
    pbf = pullback_form(phi, classical_d(f))
    assert trace_form(pbf) == trace_form(d(m * m))
    # constant functions pull back to the zero form
    const = MultiPoly.constant(("y",), 7)
    assert trace_form(pullback_form(phi, classical_d(const))).is_zero()
    # identity embedding: y -> z I has trace r dz
    for r in (1, 2, 3):
        zi = MPolyMatrix.identity(V1, r) * zvar
        phi_r = MorphismToAffine(("y",), (zi,))
        got = trace_form(pullback_form(phi_r, [MultiPoly.constant(("y",), 1)]))
        assert got.coefficient_list() == [MultiPoly.constant(V1, r)]


def test_pullback_chain_rule_under_trace():
    rng = random.Random(7)
    for _ in range(25):
        m1, m2 = commuting_pair(rng)
        phi = MorphismToAffine(("u", "v"), (m1, m2))
        f = rand_mpoly(rng, ("u", "v"), 2)
        g = rand_mpoly(rng, ("u", "v"), 2)
        lhs = trace_form(pullback_form(phi, classical_d(f * g)))
        rhs = trace_form(
            pullback_form(phi, classical_d(g)).left_mul(pullback(phi, f))
            + pullback_form(phi, classical_d(f)).right_mul(pullback(phi, g))
        )
        assert lhs == rhs


def test_commuting_families_pass_precondition():
    rng = random.Random(8)
    for _ in range(20):
        m1, m2 = commuting_pair(rng, r=3)
        MorphismToAffine(("u", "v"), (m1, m2))  # must not raise


def test_non_commuting_images_rejected():
    a = MPolyMatrix(V1, [[0, 1], [0, 0]])
    b = MPolyMatrix(V1, [[0, 0], [1, 0]])
    with pytest.raises(ValueError):
        MorphismToAffine(("u", "v"), (a, b))


def test_formal_form_syntactic_equality():
    m = MPolyMatrix(V1, [[MultiPoly.variable(V1, "z"), 0], [0, 1]])
    assert d(m).same_terms(d(m))
    assert not d(m).same_terms(d(m).scale(2))
    assert (d(m) - d(m)).terms == () or trace_form(d(m) - d(m)).is_zero()
