"""The linear system that pins a form down by its face data, and its analysis.

Among k-forms with affine coefficients on the standard n-simplex, two
conditions on each k-face -- the pullback is constant, and the integral
equals a prescribed value -- determine a unique form. This module builds
those conditions as an exact linear system over the flat vector of
coefficient unknowns, solves it, certifies uniqueness by a trivial kernel,
and replays the two-stage elimination that proves uniqueness row by row.

Unknowns are blocked per multi-index I: the constant term b_I, then the
gradient entries a_{I,1}, ..., a_{I,n}. Labels follow that naming, e.g.
"b_(1,2)" and "a_(1,2),3".
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property

from .derham import simplex_integral
from .forms import AffineForm, MultiIndex, pullback
from .linalg import (
    LinearSolver,
    Matrix,
    NoSolution,
    NotUnique,
    nullspace,
    rank,
    vstack,
)
from .simplicial import (
    AffineFunction,
    BadDegree,
    Cochain,
    DegreeMismatch,
    Face,
    barycentric_functions,
    enumerate_faces,
)

__all__ = [
    "NonUnique",
    "Inconsistent",
    "TraceIncomplete",
    "UnknownLayout",
    "ConstraintSystem",
    "build_system",
    "lambda_e_dimension",
    "solve_characterization",
    "KernelReport",
    "kernel_is_trivial",
    "Stage1Kill",
    "Stage2Kill",
    "ProofTrace",
    "proof_trace",
]


class NonUnique(RuntimeError):
    """The constraint system failed to determine every unknown."""


class Inconsistent(RuntimeError):
    """The constraint system admits no solution (or an internal check failed)."""


class TraceIncomplete(RuntimeError):
    """The elimination replay hit a row that does not isolate one unknown."""


@dataclass(frozen=True)
class UnknownLayout:
    """Flat ordering of the coefficient unknowns of an affine k-form.

    One block of n+1 unknowns per multi-index, multi-indices lexicographic.
    """

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ambient dimension must be at least 1")
        if not 0 <= self.k <= self.n:
            raise BadDegree(f"k={self.k} outside 0..{self.n}")

    @cached_property
    def multi_indices(self) -> tuple[MultiIndex, ...]:
        return tuple(itertools.combinations(range(1, self.n + 1), self.k))

    @cached_property
    def _offsets(self) -> dict[MultiIndex, int]:
        return {idx: i * (self.n + 1) for i, idx in enumerate(self.multi_indices)}

    @property
    def size(self) -> int:
        return len(self.multi_indices) * (self.n + 1)

    def position(self, idx: MultiIndex, j: int | None = None) -> int:
        """Index of b_idx (j omitted) or a_{idx,j} in the flat vector."""
        base = self._offsets[tuple(idx)]
        if j is None:
            return base
        if not 1 <= j <= self.n:
            raise ValueError(f"gradient slot {j} outside 1..{self.n}")
        return base + j

    def label(self, idx: MultiIndex, j: int | None = None) -> str:
        inner = ",".join(str(i) for i in idx)
        return f"b_({inner})" if j is None else f"a_({inner}),{j}"

    @cached_property
    def labels(self) -> tuple[str, ...]:
        out: list[str] = []
        for idx in self.multi_indices:
            out.append(self.label(idx))
            out.extend(self.label(idx, j) for j in range(1, self.n + 1))
        return tuple(out)

    @cached_property
    def unit_forms(self) -> tuple[AffineForm, ...]:
        """The form each unknown multiplies: position p maps to unit_forms[p]."""
        out: list[AffineForm] = []
        for idx in self.multi_indices:
            out.append(AffineForm(self.n, self.k, {idx: AffineFunction.const(self.n, 1)}))
            for j in range(1, self.n + 1):
                grad = tuple(Fraction(1) if i == j else Fraction(0) for i in range(1, self.n + 1))
                out.append(AffineForm(self.n, self.k, {idx: AffineFunction(self.n, Fraction(0), grad)}))
        return tuple(out)

    def form_from_vector(self, vec: list[Fraction] | tuple[Fraction, ...]) -> AffineForm:
        if len(vec) != self.size:
            raise ValueError(f"expected a vector of length {self.size}")
        coeffs: dict[MultiIndex, AffineFunction] = {}
        for idx in self.multi_indices:
            base = self._offsets[idx]
            coeffs[idx] = AffineFunction(
                self.n, vec[base], tuple(vec[base + 1 : base + self.n + 1])
            )
        return AffineForm(self.n, self.k, coeffs)

    def vector_from_form(self, form: AffineForm) -> tuple[Fraction, ...]:
        if (form.n, form.k) != (self.n, self.k):
            raise DegreeMismatch("form does not match this layout")
        vec: list[Fraction] = []
        for idx in self.multi_indices:
            f = form.coeffs.get(idx, AffineFunction.zero(self.n))
            vec.append(f.constant)
            vec.extend(f.gradient)
        return tuple(vec)


@cache
def _pulled_unit_coefficients(
    n: int, k: int
) -> tuple[UnknownLayout, tuple[Face, ...], tuple[tuple[AffineFunction, ...], ...]]:
    """Per canonical face, the pulled-back top coefficient of each unit form.

    Everything the constraint system needs is a linear functional of these,
    so they are computed once per (n, k) and shared.
    """
    layout = UnknownLayout(n, k)
    faces = tuple(enumerate_faces(n, k))
    top = tuple(range(1, k + 1))
    zero = AffineFunction.zero(k)
    data = tuple(
        tuple(pullback(uform, face).coeffs.get(top, zero) for uform in layout.unit_forms)
        for face in faces
    )
    return layout, faces, data


@cache
def _system_matrices(n: int, k: int) -> tuple[Matrix, Matrix]:
    """(constancy rows, integral rows) over the flat unknown vector."""
    layout, faces, data = _pulled_unit_coefficients(n, k)
    constancy_rows: list[list[Fraction]] = []
    integral_rows: list[list[Fraction]] = []
    for pulled in data:
        for s in range(k):
            constancy_rows.append([f.gradient[s] for f in pulled])
        integral_rows.append([simplex_integral(f) for f in pulled])
    return (
        Matrix.from_rows(constancy_rows, cols=layout.size),
        Matrix.from_rows(integral_rows, cols=layout.size),
    )


@dataclass(frozen=True)
class ConstraintSystem:
    """Stacked exact constraints: constancy block on top, integrals below.

    The constancy block has k rows per face (each gradient entry of the
    pulled-back coefficient must vanish) with zero right-hand side; the
    integral block has one row per canonical face with the prescribed
    value on the right.
    """

    layout: UnknownLayout
    faces: tuple[Face, ...]
    constancy: Matrix
    integrals: Matrix
    values: tuple[Fraction, ...]

    @property
    def stacked(self) -> Matrix:
        return vstack(self.constancy, self.integrals)

    @property
    def rhs(self) -> tuple[Fraction, ...]:
        return (Fraction(0),) * self.constancy.rows + self.values


def build_system(n: int, k: int, cochain: Cochain | None = None) -> ConstraintSystem:
    """Assemble the system for prescribed face integrals (zero if omitted).

    Degrees 0 and n run through the same general path as everything else;
    their closed-form answers serve as cross-checks elsewhere, not as
    special cases here.
    """
    layout, faces, _ = _pulled_unit_coefficients(n, k)
    constancy, integrals = _system_matrices(n, k)
    if cochain is None:
        values = (Fraction(0),) * len(faces)
    else:
        if (cochain.n, cochain.k) != (n, k):
            raise DegreeMismatch("cochain does not match the requested degrees")
        values = tuple(cochain.terms.get(face.vertices, Fraction(0)) for face in faces)
    return ConstraintSystem(layout, faces, constancy, integrals, values)


@cache
def lambda_e_dimension(n: int, k: int) -> int:
    """Dimension of the affine-coefficient forms with constant face pullbacks.

    Counted as unknowns minus the rank of the constancy block. It always
    comes out to the number of k-faces, which is what makes prescribing one
    integral per face a square problem.
    """
    constancy, _ = _system_matrices(n, k)
    return UnknownLayout(n, k).size - rank(constancy)


@cache
def _stacked_solver(n: int, k: int) -> LinearSolver:
    constancy, integrals = _system_matrices(n, k)
    return LinearSolver(vstack(constancy, integrals))


def _closed_form_check(n: int, k: int, cochain: Cochain, result: AffineForm) -> None:
    """At the extreme degrees an independent closed form must agree.

    Degree 0 is interpolation of the vertex values by barycentric
    coordinates; degree n is the volume form scaled by n! times the single
    prescribed integral.
    """
    if k == 0:
        nu = barycentric_functions(n)
        f = AffineFunction.zero(n)
        for i in range(n + 1):
            value = cochain.terms.get((i,), Fraction(0))
            if value:
                f = f + value * nu[i]
        expected = AffineForm(n, 0, {(): f})
    elif k == n:
        value = cochain.terms.get(tuple(range(n + 1)), Fraction(0))
        coeff = AffineFunction.const(n, math.factorial(n) * value)
        expected = AffineForm(n, n, {tuple(range(1, n + 1)): coeff})
    else:
        return
    if result != expected:
        raise Inconsistent(
            f"solution at (n={n}, k={k}) disagrees with the closed form"
        )


def solve_characterization(n: int, k: int, cochain: Cochain) -> AffineForm:
    """The unique affine-coefficient k-form with the prescribed face integrals.

    Solves the stacked system exactly; raises NonUnique or Inconsistent if
    the system ever failed to have exactly one solution.
    """
    if (cochain.n, cochain.k) != (n, k):
        raise DegreeMismatch("cochain does not match the requested degrees")
    layout, faces, _ = _pulled_unit_coefficients(n, k)
    solver = _stacked_solver(n, k)
    rhs = [Fraction(0)] * (k * len(faces)) + [
        cochain.terms.get(face.vertices, Fraction(0)) for face in faces
    ]
    try:
        vec = solver.solve(rhs)
    except NotUnique as exc:
        raise NonUnique(f"underdetermined system at (n={n}, k={k})") from exc
    except NoSolution as exc:
        raise Inconsistent(f"unsolvable system at (n={n}, k={k})") from exc
    result = layout.form_from_vector(vec)
    _closed_form_check(n, k, cochain, result)
    return result


@dataclass(frozen=True)
class KernelReport:
    """Outcome of the homogeneous uniqueness check.

    When the kernel is nontrivial, ``certificate`` holds a basis of
    offending forms so the failure is inspectable.
    """

    n: int
    k: int
    trivial: bool
    certificate: tuple[AffineForm, ...]

    def __bool__(self) -> bool:
        return self.trivial


def kernel_is_trivial(n: int, k: int) -> KernelReport:
    """Nullspace of the stacked system; trivial kernel means uniqueness."""
    layout, _, _ = _pulled_unit_coefficients(n, k)
    constancy, integrals = _system_matrices(n, k)
    basis = nullspace(vstack(constancy, integrals))
    forms = tuple(layout.form_from_vector(v) for v in basis)
    return KernelReport(n, k, not forms, forms)


@dataclass(frozen=True)
class Stage1Kill:
    """One face through the origin and the unknowns its rows determined."""

    face: tuple[int, ...]
    killed: tuple[str, ...]


@dataclass(frozen=True)
class Stage2Kill:
    """One inclined face (base vertex m, span L) and the unknown it determined."""

    multi_index: tuple[int, ...]
    m: int
    killed: str


@dataclass(frozen=True)
class ProofTrace:
    """Record of the elimination: every unknown must fall to exactly one step."""

    n: int
    k: int
    stage1: tuple[Stage1Kill, ...]
    stage2: tuple[Stage2Kill, ...]
    complete: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "stage1": [
                {"face": list(s.face), "killed": list(s.killed)} for s in self.stage1
            ],
            "stage2": [
                {"L": list(s.multi_index), "m": s.m, "killed": s.killed}
                for s in self.stage2
            ],
            "complete": self.complete,
        }


def _constant_term_row(layout: UnknownLayout, face: Face) -> list[Fraction]:
    """Constant term of each unit form's pulled-back face coefficient."""
    top = tuple(range(1, layout.k + 1))
    row: list[Fraction] = []
    for uform in layout.unit_forms:
        coeff = pullback(uform, face).coeffs.get(top)
        row.append(coeff.constant if coeff is not None else Fraction(0))
    return row


def proof_trace(n: int, k: int) -> ProofTrace:
    """Replay the elimination that forces uniqueness, one unknown per row.

    Stage 1 walks the faces containing vertex 0. On such a face the
    pulled-back coefficient involves only its own multi-index block, so each
    constancy row names a single gradient unknown outright and the integral
    row then names the block's constant unknown. Stage 2 walks the faces
    [m, l_1, ..., l_k] spanned by unit points: the constant term of the
    pulled-back coefficient, restricted to the unknowns still alive, is
    exactly the lone unknown a_{L,m} with coefficient one. Any row that
    fails to isolate one unknown aborts the replay.
    """
    if not 1 <= k <= n - 1:
        raise BadDegree(f"the elimination replay needs 1 <= k <= n-1, got n={n}, k={k}")
    layout, faces, data = _pulled_unit_coefficients(n, k)
    alive = [True] * layout.size

    stage1: list[Stage1Kill] = []
    for face, pulled in zip(faces, data):
        if face.vertices[0] != 0:
            continue
        rows = [[f.gradient[s] for f in pulled] for s in range(k)]
        rows.append([simplex_integral(f) for f in pulled])
        killed_here: list[int] = []
        for row in rows:
            support = [(pos, v) for pos, v in enumerate(row) if alive[pos] and v]
            if len(support) != 1:
                raise TraceIncomplete(
                    f"a row on face {list(face.vertices)} involves "
                    f"{len(support)} live unknowns, expected exactly one"
                )
            pos = support[0][0]
            alive[pos] = False
            killed_here.append(pos)
        span = face.vertices[1:]
        expected = {layout.position(span)} | {layout.position(span, t) for t in span}
        if set(killed_here) != expected:
            raise TraceIncomplete(
                f"face {list(face.vertices)} determined unexpected unknowns"
            )
        stage1.append(
            Stage1Kill(face.vertices, tuple(layout.labels[p] for p in sorted(killed_here)))
        )

    stage2: list[Stage2Kill] = []
    for span in layout.multi_indices:
        for m in range(1, n + 1):
            if m in span:
                continue
            row = _constant_term_row(layout, Face(n, (m,) + span))
            support = [(pos, v) for pos, v in enumerate(row) if alive[pos] and v]
            target = layout.position(span, m)
            if support != [(target, Fraction(1))]:
                raise TraceIncomplete(
                    f"evaluation at vertex {m} of face {[m, *span]} does not "
                    f"isolate {layout.label(span, m)} with coefficient one"
                )
            alive[target] = False
            stage2.append(Stage2Kill(span, m, layout.labels[target]))

    return ProofTrace(n, k, tuple(stage1), tuple(stage2), not any(alive))
