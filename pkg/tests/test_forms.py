"""Wedge products, pullbacks, evaluation, and the form JSON format."""

import itertools
import json
from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_affine_form
from whitneyforms import (
    AffineForm,
    AffineFunction,
    ConstantForm,
    DegreeOverflow,
    DimensionMismatch,
    Face,
    evaluate,
    form_from_json,
    form_to_json,
    is_constant,
    pullback,
    scale_by_affine,
    wedge,
)


def dx(n, *idx):
    return ConstantForm.basis(n, idx)


def affine(n, const, *grad):
    return AffineFunction(n, Fraction(const), tuple(Fraction(g) for g in grad))


def test_constant_form_normalization():
    f = ConstantForm(3, 2, {(1, 2): Fraction(0), (1, 3): Fraction(2)})
    assert f.coeffs == {(1, 3): Fraction(2)}
    with pytest.raises(ValueError):
        ConstantForm(3, 2, {(2, 1): Fraction(1)})
    with pytest.raises(DegreeOverflow):
        ConstantForm(2, 3, {})


def test_wedge_basis_examples():
    a = dx(3, 1) + dx(3, 2)
    assert wedge(a, dx(3, 3)).coeffs == {
        (1, 3): Fraction(1),
        (2, 3): Fraction(1),
    }
    assert wedge(dx(3, 2), dx(3, 1)).coeffs == {(1, 2): Fraction(-1)}
    assert wedge(dx(3, 1), dx(3, 1)).is_zero()


def test_wedge_degree_overflow():
    with pytest.raises(DegreeOverflow):
        wedge(dx(2, 1), wedge(dx(2, 1), dx(2, 2)))


def test_wedge_sign_matches_sorting_parity():
    for perm in itertools.permutations((1, 2, 3)):
        product = dx(3, perm[0])
        for i in perm[1:]:
            product = wedge(product, dx(3, i))
        inversions = sum(
            1 for a in range(3) for b in range(a + 1, 3) if perm[a] > perm[b]
        )
        want = Fraction(-1 if inversions % 2 else 1)
        assert product.coeffs == {(1, 2, 3): want}


def test_scale_by_affine():
    f = affine(2, 0, 1, 0)  # x1
    form = scale_by_affine(f, dx(2, 2))
    assert form.coeffs == {(2,): f}


def test_pullback_of_rotational_edge_form():
    # x1 dx2 - x2 dx1 restricted to the edge from e1 to e2 is the unit form dt
    form = AffineForm(
        2, 1, {(1,): affine(2, 0, 0, -1), (2,): affine(2, 0, 1, 0)}
    )
    pulled = pullback(form, Face(2, (1, 2)))
    assert pulled == AffineForm(1, 1, {(1,): affine(1, 1, 0)})


def test_pullback_ignores_face_sign():
    form = AffineForm(2, 1, {(1,): affine(2, 1, 0, 0)})
    plus = pullback(form, Face(2, (0, 1)))
    minus = pullback(form, Face(2, (0, 1), sign=-1))
    assert plus == minus


def test_pullback_to_lower_degree_face_rejected():
    form = AffineForm(2, 1, {(1,): affine(2, 1, 0, 0)})
    with pytest.raises(DimensionMismatch):
        pullback(form, Face(2, (1,)))


def test_pullback_of_zero_form_is_composition():
    form = AffineForm(2, 0, {(): affine(2, 1, -1, 0)})  # 1 - x1
    pulled = pullback(form, Face(2, (1,)))
    assert pulled == AffineForm(0, 0, {(): AffineFunction(0, Fraction(0), ())})
    pulled_edge = pullback(form, Face(2, (0, 1)))
    assert pulled_edge == AffineForm(1, 0, {(): affine(1, 1, -1)})


def test_evaluate_against_hand_values():
    form = AffineForm(2, 1, {(2,): affine(2, 0, 1, 0)})  # x1 dx2
    e1 = (Fraction(1), Fraction(0))
    e2 = (Fraction(0), Fraction(1))
    assert evaluate(form, (Fraction(1, 2), Fraction(0)), [e2]) == Fraction(1, 2)
    area = AffineForm.from_constant(dx(2, 1, 2))
    assert evaluate(area, (Fraction(0), Fraction(0)), [e2, e1]) == Fraction(-1)


def test_evaluate_checks_arity():
    form = AffineForm(2, 1, {(1,): affine(2, 1, 0, 0)})
    with pytest.raises(DimensionMismatch):
        evaluate(form, (Fraction(0), Fraction(0)), [])


def test_is_constant():
    assert is_constant(AffineForm(2, 1, {(1,): affine(2, 3, 0, 0)}))
    assert not is_constant(AffineForm(2, 1, {(1,): affine(2, 0, 1, 0)}))
    assert is_constant(AffineForm.zero(2, 1))


def test_form_json_round_trip():
    form = AffineForm(
        2, 1, {(1,): affine(2, 1, 0, -1), (2,): affine(2, 0, 1, 0)}
    )
    data = form_to_json(form)
    assert data == {
        "n": 2,
        "k": 1,
        "terms": [
            {"dx": [1], "const": "1", "grad": ["0", "-1"]},
            {"dx": [2], "const": "0", "grad": ["1", "0"]},
        ],
    }
    assert form_from_json(json.loads(json.dumps(data))) == form


def test_form_json_folds_unsorted_dx():
    data = {
        "n": 2,
        "k": 2,
        "terms": [
            {"dx": [2, 1], "const": "1", "grad": ["0", "0"]},
            {"dx": [1, 2], "const": "3", "grad": ["0", "0"]},
        ],
    }
    form = form_from_json(data)
    assert form == AffineForm(2, 2, {(1, 2): affine(2, 2, 0, 0)})


def test_form_json_rejects_garbage():
    with pytest.raises(ValueError):
        form_from_json({"n": 2, "k": 1, "terms": [{"dx": [1, 1], "const": "1", "grad": ["0", "0"]}]})
    with pytest.raises(ValueError):
        form_from_json({"n": 2, "k": 1, "terms": [{"dx": [1], "const": "1"}]})
    with pytest.raises(ValueError):
        form_from_json({"n": 2})


small_form_cases = st.integers(1, 3).flatmap(
    lambda n: st.integers(0, n).flatmap(
        lambda k: st.tuples(st.just(n), st.just(k), st.integers(0, 10 ** 6))
    )
)


@given(small_form_cases)
@settings(max_examples=40, deadline=None)
def test_pullback_is_linear(case):
    n, k, seed = case
    rng = Random(seed)
    a = random_affine_form(rng, n, k)
    b = random_affine_form(rng, n, k)
    for face in [Face(n, tuple(range(k + 1))), Face(n, tuple(range(n - k, n + 1)))]:
        assert pullback(a + b, face) == pullback(a, face) + pullback(b, face)
        assert pullback(3 * a, face) == 3 * pullback(a, face)


@given(st.integers(1, 4), st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_wedge_anticommutes_on_one_forms(n, seed):
    rng = Random(seed)
    a = ConstantForm(
        n, 1, {(i,): Fraction(rng.randint(-5, 5)) for i in range(1, n + 1)}
    )
    b = ConstantForm(
        n, 1, {(i,): Fraction(rng.randint(-5, 5)) for i in range(1, n + 1)}
    )
    if n >= 2:
        assert wedge(a, b) == -wedge(b, a)
        assert wedge(a, a).is_zero()
