"""The standard n-simplex: oriented faces, barycentric functions, cochains.

The ambient simplex is fixed once and for all as [0, e_1, ..., e_n], so a
vertex is just a label in 0..n: label 0 is the origin and label i is the
unit point on the i-th coordinate axis. Faces carry their orientation in
the vertex order, with an explicit sign for reversals; cochains store one
coefficient per unoriented face by keying on the increasing vertex tuple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Iterable, Sequence

from .linalg import format_rational, parse_rational

__all__ = [
    "BadDegree",
    "DegreeMismatch",
    "Face",
    "Cochain",
    "AffineFunction",
    "FaceParametrization",
    "canonicalize",
    "permutation_sign",
    "enumerate_faces",
    "barycentric_functions",
    "vertex_point",
    "face_parametrization",
    "cochain_eval",
    "random_cochain",
    "cochain_to_json",
    "cochain_from_json",
]


class BadDegree(ValueError):
    """Degree outside the valid range 0..n."""


class DegreeMismatch(ValueError):
    """Operands disagree on degree or ambient dimension."""


@dataclass(frozen=True)
class Face:
    """An oriented k-face of the standard n-simplex.

    The vertex tuple orders the face and thereby orients it; ``sign`` flips
    that orientation without reordering. Canonical faces have increasing
    vertices and sign +1.
    """

    n: int
    vertices: tuple[int, ...]
    sign: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        if self.n < 1:
            raise ValueError("ambient dimension must be at least 1")
        if not 1 <= len(self.vertices) <= self.n + 1:
            raise BadDegree(f"a face of the {self.n}-simplex has 1..{self.n + 1} vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"repeated vertex label in {self.vertices}")
        if any(not 0 <= v <= self.n for v in self.vertices):
            raise ValueError(f"vertex labels must lie in 0..{self.n}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def degree(self) -> int:
        return len(self.vertices) - 1

    @property
    def is_canonical(self) -> bool:
        return self.sign == 1 and all(a < b for a, b in zip(self.vertices, self.vertices[1:]))


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation that sorts seq ascending: +1 even, -1 odd."""
    inversions = sum(
        1
        for i in range(len(seq))
        for j in range(i + 1, len(seq))
        if seq[i] > seq[j]
    )
    return -1 if inversions % 2 else 1


def canonicalize(face: Face) -> Face:
    """Sort the vertices and fold the sorting permutation's sign into the face."""
    if face.is_canonical:
        return face
    return Face(face.n, tuple(sorted(face.vertices)), face.sign * permutation_sign(face.vertices))


def enumerate_faces(n: int, k: int) -> list[Face]:
    """All canonical k-faces in lexicographic vertex order."""
    if not 0 <= k <= n:
        raise BadDegree(f"k={k} outside 0..{n}")
    return [Face(n, combo) for combo in itertools.combinations(range(n + 1), k + 1)]


@dataclass(frozen=True)
class AffineFunction:
    """b + sum_j g_j x^j with exact rational constant and gradient."""

    n: int
    constant: Fraction
    gradient: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "constant", Fraction(self.constant))
        object.__setattr__(self, "gradient", tuple(Fraction(g) for g in self.gradient))
        if self.n < 0:
            raise ValueError("dimension must be nonnegative")
        if len(self.gradient) != self.n:
            raise ValueError("gradient length must equal the dimension")

    @classmethod
    def zero(cls, n: int) -> "AffineFunction":
        return cls(n, Fraction(0), (Fraction(0),) * n)

    @classmethod
    def const(cls, n: int, value: object) -> "AffineFunction":
        return cls(n, Fraction(value), (Fraction(0),) * n)

    def __call__(self, point: Sequence[object]) -> Fraction:
        pt = tuple(Fraction(x) for x in point)
        if len(pt) != self.n:
            raise ValueError("point has the wrong dimension")
        return self.constant + sum((g * x for g, x in zip(self.gradient, pt) if g and x), Fraction(0))

    def __add__(self, other: "AffineFunction") -> "AffineFunction":
        if not isinstance(other, AffineFunction):
            return NotImplemented
        if self.n != other.n:
            raise DegreeMismatch("affine functions live in different dimensions")
        return AffineFunction(
            self.n,
            self.constant + other.constant,
            tuple(a + b for a, b in zip(self.gradient, other.gradient)),
        )

    def __sub__(self, other: "AffineFunction") -> "AffineFunction":
        return self + (-other)

    def __neg__(self) -> "AffineFunction":
        return AffineFunction(self.n, -self.constant, tuple(-g for g in self.gradient))

    def __mul__(self, scalar: object) -> "AffineFunction":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        s = Fraction(scalar)
        return AffineFunction(self.n, s * self.constant, tuple(s * g for g in self.gradient))

    __rmul__ = __mul__

    @property
    def is_constant(self) -> bool:
        return all(g == 0 for g in self.gradient)

    def is_zero(self) -> bool:
        return self.constant == 0 and self.is_constant


def barycentric_functions(n: int) -> list[AffineFunction]:
    """The n+1 barycentric coordinates of the standard simplex.

    Index 0 is 1 - (x^1 + ... + x^n); index i >= 1 is x^i. They sum to the
    constant 1 and take value 1 at their own vertex, 0 at the others.
    """
    if n < 1:
        raise ValueError("ambient dimension must be at least 1")
    funcs = [AffineFunction(n, Fraction(1), (Fraction(-1),) * n)]
    for i in range(1, n + 1):
        grad = tuple(Fraction(1) if j == i else Fraction(0) for j in range(1, n + 1))
        funcs.append(AffineFunction(n, Fraction(0), grad))
    return funcs


def vertex_point(n: int, label: int) -> tuple[Fraction, ...]:
    """Coordinates of a vertex: the origin for label 0, else a unit point."""
    if not 0 <= label <= n:
        raise ValueError(f"vertex label {label} outside 0..{n}")
    return tuple(Fraction(1) if i == label else Fraction(0) for i in range(1, n + 1))


@dataclass(frozen=True)
class FaceParametrization:
    """Affine map t -> origin + sum_s t^s direction_s onto a face.

    Domain is the standard k-simplex in the t coordinates; the basis
    (direction_1, ..., direction_k) fixes the orientation convention that
    every integral downstream inherits.
    """

    origin: tuple[Fraction, ...]
    directions: tuple[tuple[Fraction, ...], ...]

    @property
    def k(self) -> int:
        return len(self.directions)

    @property
    def n(self) -> int:
        return len(self.origin)

    def __call__(self, t: Sequence[object]) -> tuple[Fraction, ...]:
        ts = tuple(Fraction(x) for x in t)
        if len(ts) != self.k:
            raise ValueError("parameter point has the wrong dimension")
        point = list(self.origin)
        for value, direction in zip(ts, self.directions):
            if value == 0:
                continue
            for i, d in enumerate(direction):
                if d:
                    point[i] += value * d
        return tuple(point)


def face_parametrization(face: Face) -> FaceParametrization:
    """Map the standard k-simplex onto the face, vertices in tuple order."""
    points = [vertex_point(face.n, v) for v in face.vertices]
    origin = points[0]
    directions = tuple(
        tuple(a - b for a, b in zip(p, origin)) for p in points[1:]
    )
    return FaceParametrization(origin, directions)


@dataclass(frozen=True)
class Cochain:
    """Formal rational combination of the canonical k-faces.

    ``terms`` maps increasing vertex tuples to coefficients; evaluating on a
    reordered face picks up the permutation sign. Zero coefficients are
    dropped on construction so structural equality is exact equality.
    """

    n: int
    k: int
    terms: dict[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not 0 <= self.k <= self.n:
            raise BadDegree(f"k={self.k} outside 0..{self.n}")
        cleaned: dict[tuple[int, ...], Fraction] = {}
        for key in sorted(self.terms):
            coeff = Fraction(self.terms[key])
            verts = tuple(int(v) for v in key)
            if len(verts) != self.k + 1:
                raise DegreeMismatch(f"key {verts} is not a degree-{self.k} face")
            if any(a >= b for a, b in zip(verts, verts[1:])):
                raise ValueError(f"cochain keys must be strictly increasing: {verts}")
            if verts[0] < 0 or verts[-1] > self.n:
                raise ValueError(f"vertex labels must lie in 0..{self.n}")
            if coeff:
                cleaned[verts] = coeff
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls, n: int, k: int) -> "Cochain":
        return cls(n, k)

    @classmethod
    def basis(cls, face: Face) -> "Cochain":
        """The dual of a single face (its sign folded into the coefficient)."""
        canon = canonicalize(face)
        return cls(face.n, face.degree, {canon.vertices: Fraction(canon.sign)})

    @classmethod
    def from_terms(
        cls, n: int, k: int, items: Iterable[tuple[Face | Sequence[int], object]]
    ) -> "Cochain":
        """Accumulate (face, coefficient) pairs, canonicalizing and summing."""
        acc: dict[tuple[int, ...], Fraction] = {}
        for face, coeff in items:
            if not isinstance(face, Face):
                face = Face(n, tuple(face))
            canon = canonicalize(face)
            acc[canon.vertices] = acc.get(canon.vertices, Fraction(0)) + canon.sign * Fraction(coeff)
        return cls(n, k, acc)

    def __add__(self, other: "Cochain") -> "Cochain":
        if not isinstance(other, Cochain):
            return NotImplemented
        if (self.n, self.k) != (other.n, other.k):
            raise DegreeMismatch("cochains live in different degrees")
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, Fraction(0)) + coeff
        return Cochain(self.n, self.k, merged)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __neg__(self) -> "Cochain":
        return Cochain(self.n, self.k, {key: -c for key, c in self.terms.items()})

    def __mul__(self, scalar: object) -> "Cochain":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        s = Fraction(scalar)
        return Cochain(self.n, self.k, {key: s * c for key, c in self.terms.items()})

    __rmul__ = __mul__


def cochain_eval(c: Cochain, face: Face) -> Fraction:
    """The coefficient of the face, with the orientation sign applied."""
    if face.n != c.n or face.degree != c.k:
        raise DegreeMismatch(
            f"face of degree {face.degree} in dimension {face.n} against a "
            f"({c.n}, {c.k}) cochain"
        )
    canon = canonicalize(face)
    return canon.sign * c.terms.get(canon.vertices, Fraction(0))


def random_cochain(rng: Random, n: int, k: int) -> Cochain:
    """Reproducible cochain with small rational coefficients (|p|, q <= 10)."""
    terms = {
        face.vertices: Fraction(rng.randint(-10, 10), rng.randint(1, 10))
        for face in enumerate_faces(n, k)
    }
    return Cochain(n, k, terms)


def cochain_to_json(c: Cochain) -> dict:
    """JSON form: faces as increasing vertex lists, coefficients as "p/q"."""
    return {
        "n": c.n,
        "k": c.k,
        "terms": [
            {"face": list(key), "coeff": format_rational(coeff)}
            for key, coeff in sorted(c.terms.items())
        ],
    }


def cochain_from_json(data: dict) -> Cochain:
    """Parse a cochain; faces may come in any vertex order and are folded."""
    try:
        n = int(data["n"])
        k = int(data["k"])
        raw_terms = data.get("terms", [])
        items = [
            (Face(n, tuple(int(v) for v in entry["face"])), parse_rational(entry["coeff"]))
            for entry in raw_terms
        ]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed cochain JSON: {exc}") from exc
    return Cochain.from_terms(n, k, items)
