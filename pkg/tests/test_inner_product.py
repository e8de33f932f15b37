import random
from fractions import Fraction

import pytest

from kronlab.index_space import Shape
from kronlab.inner_product import (ConjugateBilinearForm, eval_form,
                                   induced_inner_product, inner_product_form,
                                   product_form, validate_inner_product)
from kronlab.scalars import COMPLEX, GAUSSIAN, GaussianRational, conj
from kronlab.tensor import build_model, pure


def rand_vec(rng, n, backend=GAUSSIAN):
    return [backend.random(rng) for _ in range(n)]


def rand_form(rng, p, q, backend=GAUSSIAN):
    gram = tuple(tuple(backend.random(rng) for _ in range(q)) for _ in range(p))
    return ConjugateBilinearForm(p, q, gram)


def identity_form(n):
    return ConjugateBilinearForm(
        n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def test_eval_orthonormal_unit_vectors():
    phi = identity_form(4)
    e2 = [0, 1, 0, 0]
    assert eval_form(phi, e2, e2) == 1
    assert eval_form(phi, e2, [1, 0, 0, 0]) == 0


def test_eval_orthonormal_is_a_conjugated_dot_product():
    rng = random.Random(61)
    phi = identity_form(5)
    for _ in range(20):
        a = rand_vec(rng, 5)
        b = rand_vec(rng, 5)
        want = sum((x * conj(y) for x, y in zip(a, b)), GaussianRational(0))
        assert eval_form(phi, a, b) == want


def test_second_slot_is_conjugate_homogeneous():
    rng = random.Random(62)
    phi = rand_form(rng, 3, 3)
    for _ in range(20):
        a, b = rand_vec(rng, 3), rand_vec(rng, 3)
        c = GAUSSIAN.random(rng)
        scaled = [c * v for v in b]
        assert eval_form(phi, a, scaled) == conj(c) * eval_form(phi, a, b)
        assert eval_form(phi, [c * v for v in a], b) == c * eval_form(phi, a, b)


def test_conjugate_bilinearity_in_both_slots():
    rng = random.Random(63)
    phi = rand_form(rng, 3, 2)
    for _ in range(10):
        a1, a2 = rand_vec(rng, 3), rand_vec(rng, 3)
        b1, b2 = rand_vec(rng, 2), rand_vec(rng, 2)
        c, d = GAUSSIAN.random(rng), GAUSSIAN.random(rng)
        mixed = [c * u + d * v for u, v in zip(a1, a2)]
        assert eval_form(phi, mixed, b1) == \
            c * eval_form(phi, a1, b1) + d * eval_form(phi, a2, b1)
        mixed = [c * u + d * v for u, v in zip(b1, b2)]
        assert eval_form(phi, a1, mixed) == \
            conj(c) * eval_form(phi, a1, b1) + conj(d) * eval_form(phi, a1, b2)


def test_eval_length_checks():
    phi = identity_form(3)
    with pytest.raises(ValueError):
        eval_form(phi, [1, 2], [1, 2, 3])
    with pytest.raises(ValueError):
        eval_form(phi, [1, 2, 3], [1, 2])


def test_product_form_of_identity_factors_is_identity():
    shape = Shape((2, 3))
    phi = product_form([identity_form(2), identity_form(3)], shape, shape)
    n = shape.size
    for i in range(n):
        for j in range(n):
            assert phi.gram[i][j] == (1 if i == j else 0)


def test_product_form_single_factor_passthrough():
    rng = random.Random(64)
    f = rand_form(rng, 3, 2)
    phi = product_form([f], Shape((3,)), Shape((2,)))
    assert phi.gram == f.gram


def test_product_form_gram_is_the_factor_product():
    rng = random.Random(65)
    lshape, rshape = Shape((2, 3)), Shape((3, 2))
    f1 = rand_form(rng, 2, 3)
    f2 = rand_form(rng, 3, 2)
    phi = product_form([f1, f2], lshape, rshape)
    for a, alpha in enumerate(lshape.indices()):
        for b, beta in enumerate(rshape.indices()):
            want = f1.gram[alpha[0] - 1][beta[0] - 1] * f2.gram[alpha[1] - 1][beta[1] - 1]
            assert phi.gram[a][b] == want


def test_product_form_factorizes_on_pure_tensors():
    rng = random.Random(66)
    lshape, rshape = Shape((2, 3)), Shape((2, 3))
    factors = [rand_form(rng, 2, 2), rand_form(rng, 3, 3)]
    phi = product_form(factors, lshape, rshape)
    lmodel, rmodel = build_model(lshape), build_model(rshape)
    for _ in range(40):
        xs = [rand_vec(rng, n) for n in lshape.dims]
        ys = [rand_vec(rng, n) for n in rshape.dims]
        lhs = eval_form(phi, pure(lmodel, xs).coeffs, pure(rmodel, ys).coeffs)
        rhs = eval_form(factors[0], xs[0], ys[0]) * eval_form(factors[1], xs[1], ys[1])
        assert lhs == rhs


def test_product_form_uniqueness():
    # any form agreeing with the factor product on basis pairs has the
    # same gram table, hence is the product form
    rng = random.Random(67)
    lshape, rshape = Shape((2, 2)), Shape((2, 2))
    factors = [rand_form(rng, 2, 2), rand_form(rng, 2, 2)]
    phi = product_form(factors, lshape, rshape)
    rebuilt = []
    for alpha in lshape.indices():
        row = []
        for beta in rshape.indices():
            ex = [[1 if k == alpha[i] else 0 for k in (1, 2)] for i in range(2)]
            ey = [[1 if k == beta[i] else 0 for k in (1, 2)] for i in range(2)]
            row.append(eval_form(factors[0], ex[0], ey[0]) *
                       eval_form(factors[1], ex[1], ey[1]))
        rebuilt.append(tuple(row))
    assert phi.gram == tuple(rebuilt)


def test_product_form_shape_mismatch():
    rng = random.Random(68)
    with pytest.raises(ValueError):
        product_form([rand_form(rng, 2, 2)], Shape((2, 2)), Shape((2, 2)))
    with pytest.raises(ValueError):
        product_form([rand_form(rng, 2, 2), rand_form(rng, 2, 2)],
                     Shape((2, 3)), Shape((2, 2)))


def test_induced_inner_product_orthonormal_basis():
    shape = Shape((2, 2))
    ip = induced_inner_product(shape)
    model = build_model(shape)
    for g in shape.indices():
        for h in shape.indices():
            v = ip.eval(model.basis_tensor(g).coeffs, model.basis_tensor(h).coeffs)
            assert v == (1 if g == h else 0)


def test_induced_inner_product_factorizes():
    rng = random.Random(69)
    shape = Shape((2, 3))
    ip = induced_inner_product(shape)
    model = build_model(shape)
    for _ in range(20):
        xs = [rand_vec(rng, n) for n in shape.dims]
        ys = [rand_vec(rng, n) for n in shape.dims]
        lhs = ip.eval(pure(model, xs).coeffs, pure(model, ys).coeffs)
        rhs = GaussianRational(1)
        for x, y in zip(xs, ys):
            rhs = rhs * sum((u * conj(v) for u, v in zip(x, y)), GaussianRational(0))
        assert lhs == rhs


def test_induced_inner_product_positive_definite():
    rng = random.Random(70)
    shape = Shape((2, 3))
    ip = induced_inner_product(shape)
    n = shape.size
    for _ in range(50):
        a = rand_vec(rng, n)
        if all(v == 0 for v in a):
            a[0] = GaussianRational(1)
        v = ip.eval(a, a)
        assert v.im == 0 and v.re > 0
    zero = [GaussianRational(0)] * n
    assert ip.eval(zero, zero) == 0


def test_validate_rejects_asymmetric_gram():
    bad = ConjugateBilinearForm(2, 2, ((1, GaussianRational(0, 1)),
                                       (GaussianRational(0, 1), 1)))
    with pytest.raises(ValueError, match="conjugate symmetric"):
        validate_inner_product(bad)


def test_validate_rejects_indefinite_gram():
    bad = ConjugateBilinearForm(2, 2, ((1, 2), (2, 1)))
    with pytest.raises(ValueError, match="positive definite"):
        validate_inner_product(bad)
    semidefinite = ConjugateBilinearForm(2, 2, ((1, 1), (1, 1)))
    with pytest.raises(ValueError, match="positive definite"):
        validate_inner_product(semidefinite)


def test_validate_rejects_rectangular_gram():
    with pytest.raises(ValueError):
        validate_inner_product(ConjugateBilinearForm(1, 2, ((1, 0),)))


def test_inner_product_form_accepts_valid_gram():
    gram = ((Fraction(2), Fraction(1)), (Fraction(1), Fraction(2)))
    ip = inner_product_form(gram)
    assert ip.dim == 2
    assert ip.eval([1, 0], [0, 1]) == 1


def test_inner_product_form_accepts_hermitian_gaussian_gram():
    i = GaussianRational(0, 1)
    gram = ((GaussianRational(2), i), (conj(i), GaussianRational(2)))
    ip = inner_product_form(gram)
    v = ip.eval([GaussianRational(1), GaussianRational(1)],
                [GaussianRational(1), GaussianRational(1)])
    assert v.im == 0 and v.re > 0


def test_float_backend_uses_tolerance():
    eps = 1e-14
    gram = ((complex(1), complex(0, eps)), (complex(0, -eps + 2e-15), complex(1)))
    ip = inner_product_form(gram)  # within 1e-12, accepted
    assert abs(ip.eval([1 + 0j, 0j], [1 + 0j, 0j]) - 1) < 1e-12
    bad = ((complex(1), complex(0.5)), (complex(-0.5), complex(1)))
    with pytest.raises(ValueError):
        inner_product_form(bad)
