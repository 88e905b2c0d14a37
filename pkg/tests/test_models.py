import random
from fractions import Fraction

import pytest

from qkernel import models as M
from qkernel.models import ModelId

EXPECTED_STEPS = {
    ModelId.A: {(-1, 1), (1, 1), (1, -1)},
    ModelId.B: {(-1, 1), (0, 1), (1, 0), (1, -1)},
    ModelId.C: {(-1, 1), (0, 1), (1, 1), (1, 0), (1, -1)},
    ModelId.D: {(-1, 1), (0, 1), (1, -1)},
    ModelId.E: {(-1, 1), (0, 1), (1, 1), (1, -1)},
}


@pytest.mark.parametrize("model", ModelId)
def test_step_sets(model):
    steps = M.step_set(model)
    assert set(steps) == EXPECTED_STEPS[model]
    assert len(set(steps.steps)) == len(steps.steps)
    # every singular model contains NW and SE
    assert (-1, 1) in set(steps) and (1, -1) in set(steps)


def test_cardinalities_and_symmetry():
    sizes = {m: len(M.step_set(m)) for m in ModelId}
    assert sizes == {ModelId.A: 3, ModelId.B: 4, ModelId.C: 5, ModelId.D: 3, ModelId.E: 4}
    assert [M.is_symmetric(m) for m in ModelId] == [True, True, True, False, False]


@pytest.mark.parametrize("model", ModelId)
def test_inventory_counts(model):
    inv = M.inventory_counts(model)
    assert inv.p_minus1 + inv.p_0 + inv.p_1 == len(M.step_set(model))
    assert inv.q_minus1 + inv.q_0 + inv.q_1 == len(M.step_set(model))
    # structural facts common to the five models
    assert inv.p_minus1 == 1
    assert inv.p_0 in (0, 1)
    assert inv.p_1 in (1, 2, 3)
    assert inv.q_minus1 == 1


@pytest.mark.parametrize("model", ModelId)
def test_decomposition_reconstructs_inventory(model):
    """x*P1(y)+P0(y)+P_{-1}(y)/x and y*Q1(x)+Q0(x)+Q_{-1}(x)/y give the steps."""
    from_p = {}
    for i in (-1, 0, 1):
        for j in M.p_poly_exponents(model, i):
            from_p[(i, j)] = from_p.get((i, j), 0) + 1
    from_q = {}
    for j in (-1, 0, 1):
        for i in M.q_poly_exponents(model, j):
            from_q[(i, j)] = from_q.get((i, j), 0) + 1
    expected = {s: 1 for s in M.step_set(model)}
    assert from_p == expected
    assert from_q == expected


def test_kernel_coeffs_t_symbolic_model_a():
    # (-t(1+x^2), x, -t x^2) as a polynomial identity, checked at random rationals
    rnd = random.Random(7)
    for _ in range(20):
        x = Fraction(rnd.randrange(-9, 10), rnd.randrange(1, 7))
        t = Fraction(rnd.randrange(-9, 10), rnd.randrange(1, 7))
        a2, a1, a0 = M.kernel_coeffs_t(ModelId.A, x, t)
        assert a2 == -t * (1 + x * x)
        assert a1 == x
        assert a0 == -t * x * x


def test_kernel_coeffs_t_model_b_at_one():
    t = Fraction(5, 17)
    a2, a1, a0 = M.kernel_coeffs_t(ModelId.B, Fraction(1), t)
    assert (a2, a1, a0) == (-2 * t, 1 - t, -t)


@pytest.mark.parametrize("model", ModelId)
def test_kernel_degenerates_at_t_zero(model):
    x = Fraction(3, 2)
    a2, a1, a0 = M.kernel_coeffs_t(model, x, Fraction(0))
    assert (a2, a1, a0) == (0, x, 0)


@pytest.mark.parametrize("model,expected", [
    (ModelId.A, lambda q: (-2 * q, 1 + q * q, -q)),
    (ModelId.D, lambda q: (-2 * q, 1 + q * q, -q)),
    (ModelId.E, lambda q: (-3 * q, 1 + q * q, -q)),
])
def test_kernel_coeffs_q_at_one(model, expected):
    q = Fraction(3, 5)
    assert M.kernel_coeffs_q(model, Fraction(1), q) == expected(q)


@pytest.mark.parametrize("model", ModelId)
def test_q_kernel_matches_t_kernel(model):
    """kernel_coeffs_q == (1+q^2) * kernel_coeffs_t at t = q/(1+q^2)."""
    rnd = random.Random(11)
    for _ in range(12):
        x = Fraction(rnd.randrange(1, 9), rnd.randrange(1, 7))
        q = Fraction(rnd.randrange(1, 9), rnd.randrange(1, 7))
        t = q / (1 + q * q)
        lift = 1 + q * q
        cq = M.kernel_coeffs_q(model, x, q)
        ct = M.kernel_coeffs_t(model, x, t)
        assert cq == tuple(lift * c for c in ct)


def test_x_kernel_coeffs_q_examples():
    y, q = Fraction(4, 3), Fraction(2, 7)
    b2, b1, b0 = M.x_kernel_coeffs_q(ModelId.D, y, q)
    assert (b2, b1, b0) == (-q, (1 + q * q) * y - q * y * y, -q * y * y)
    b2, b1, b0 = M.x_kernel_coeffs_q(ModelId.E, y, q)
    assert (b2, b1, b0) == (-q * (1 + y * y), (1 + q * q) * y - q * y * y, -q * y * y)
    assert M.x_kernel_coeffs_q(ModelId.D, Fraction(1), Fraction(1)) == (-1, 1, -1)


def test_q_kernel_rejects_singular_q():
    with pytest.raises(ValueError):
        M.kernel_coeffs_q(ModelId.A, Fraction(1), 0)
    with pytest.raises(ValueError):
        M.x_kernel_coeffs_q(ModelId.D, Fraction(1), 1j)


@pytest.mark.parametrize("model", ModelId)
def test_vieta_product_of_y_roots(model):
    """Product of the two y-roots is a0/a2 (used as a downstream check)."""
    x, q = Fraction(1), Fraction(2, 5)
    a2, a1, a0 = M.kernel_coeffs_q(model, x, q)
    inv = M.inventory_counts(model)
    # at x=1 the ratio a0/a2 reflects the q_{-1}/q_1 structure: 1/q_1 here
    assert a0 / a2 == Fraction(1, inv.q_1)


def test_model_from_string():
    assert ModelId.from_string("a") is ModelId.A
    with pytest.raises(ValueError):
        ModelId.from_string("F")
