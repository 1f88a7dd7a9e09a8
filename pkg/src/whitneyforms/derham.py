"""Face-wise integration of affine-coefficient forms.

Integrating a k-form over an oriented k-face reduces, after pulling back
to the standard k-simplex, to two closed-form moments:

    integral of 1    over the standard k-simplex = 1/k!
    integral of t^s  over the standard k-simplex = 1/(k+1)!

so no numerical quadrature is needed and every value is an exact rational.
Collecting the integrals over all canonical k-faces into a cochain gives
the map that sends a form to its face-integral data.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .forms import AffineForm, DimensionMismatch, pullback
from .simplicial import AffineFunction, Cochain, DegreeMismatch, Face, enumerate_faces

__all__ = [
    "simplex_integral",
    "integrate_over_face",
    "derham",
]


def simplex_integral(f: AffineFunction) -> Fraction:
    """Exact integral of an affine function over the standard simplex.

    In dimension 0 the simplex is a point and the integral is evaluation.
    """
    if f.n == 0:
        return f.constant
    return Fraction(f.constant, math.factorial(f.n)) + Fraction(
        sum(f.gradient, Fraction(0)), math.factorial(f.n + 1)
    )


def integrate_over_face(form: AffineForm, face: Face) -> Fraction:
    """Integral of a k-form over an oriented k-face, exactly.

    The pullback to the face's parameter simplex is a top-degree form there,
    a single affine coefficient times dt^1^...^dt^k; its simplex integral,
    times the face's orientation sign, is the answer. A 0-form is simply
    evaluated at the vertex.
    """
    if face.n != form.n:
        raise DimensionMismatch("face and form live in different dimensions")
    if face.degree != form.k:
        raise DegreeMismatch(
            f"cannot integrate a degree-{form.k} form over a {face.degree}-face"
        )
    pulled = pullback(form, face)
    top = tuple(range(1, face.degree + 1))
    coeff = pulled.coeffs.get(top, AffineFunction.zero(face.degree))
    return face.sign * simplex_integral(coeff)


def derham(form: AffineForm) -> Cochain:
    """All face integrals of the form, as a cochain on the canonical faces."""
    terms = {
        face.vertices: integrate_over_face(form, face)
        for face in enumerate_faces(form.n, form.k)
    }
    return Cochain(form.n, form.k, terms)
