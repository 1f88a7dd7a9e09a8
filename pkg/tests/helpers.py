"""Independent oracles and generators shared across the test modules.

Everything here deliberately avoids the library's own code paths: parity
comes from bubble sort, subset counts from explicit enumeration, and
integrals from a floating-point quadrature rule built on numpy.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from random import Random

import numpy as np

from whitneyforms import AffineForm, AffineFunction, Face, vertex_point


def bubble_sort_parity(seq) -> int:
    """Sign of the sorting permutation by counting adjacent swaps."""
    items = list(seq)
    sign = 1
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if items[j] > items[j + 1]:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    return sign


def count_subsets(n: int, k: int) -> int:
    """Number of k-subsets of an n-set, by enumeration."""
    return sum(1 for _ in itertools.combinations(range(n), k))


def random_affine_form(rng: Random, n: int, k: int) -> AffineForm:
    """Form with small random rational coefficients on every multi-index."""
    coeffs = {}
    for idx in itertools.combinations(range(1, n + 1), k):
        constant = Fraction(rng.randint(-10, 10), rng.randint(1, 10))
        grad = tuple(
            Fraction(rng.randint(-10, 10), rng.randint(1, 10)) for _ in range(n)
        )
        coeffs[idx] = AffineFunction(n, constant, grad)
    return AffineForm(n, k, coeffs)


def quadrature_integral(form: AffineForm, face: Face) -> float:
    """Centroid-rule integral of an affine-coefficient form over a face.

    Pure float pipeline: numpy determinants for the pullback minors and a
    one-point rule at the barycenter, which is exact for affine integrands.
    """
    k = face.degree
    points = [
        np.array([float(x) for x in vertex_point(face.n, v)]) for v in face.vertices
    ]
    origin = points[0]
    directions = [p - origin for p in points[1:]]
    centroid = origin + sum(directions, np.zeros(face.n)) / (k + 1)
    total = 0.0
    for idx, f in form.coeffs.items():
        if k:
            minor = np.array([[directions[s][i - 1] for s in range(k)] for i in idx])
            d = float(np.linalg.det(minor))
        else:
            d = 1.0
        value = float(f.constant) + sum(
            float(g) * centroid[j] for j, g in enumerate(f.gradient)
        )
        total += d * value
    return face.sign * total / math.factorial(k)
