"""Sweep dimensions and degrees, checking every claim end to end.

For each pair (n, k) in range this runs the whole gauntlet: the dimension
count, the round trip from cochain to form and back on the basis plus a
batch of seeded random cochains, agreement of the linear-system solution
with the direct construction, triviality of the kernel, and completeness
of the elimination replay where it applies.
"""

from __future__ import annotations

import math
from random import Random

from .characterize import (
    Inconsistent,
    NonUnique,
    TraceIncomplete,
    kernel_is_trivial,
    lambda_e_dimension,
    proof_trace,
    solve_characterization,
)
from .derham import derham
from .forms import form_to_json
from .simplicial import Cochain, cochain_to_json, enumerate_faces, random_cochain
from .whitney import whitney

__all__ = ["verify_cell", "run_verification"]

CHECK_NAMES = ("dimension", "rw_identity", "characterization", "kernel", "proof_trace")


def verify_cell(n: int, k: int, samples: int = 20, seed: int = 0) -> dict:
    """All checks for one (n, k); returns a dict of named booleans plus "pass".

    The "proof_trace" entry is None at the extreme degrees, where the
    two-stage replay does not apply; None does not count against "pass".
    On failure a "counterexample" entry records the first offending input
    in serialized form.
    """
    cell: dict = {"n": n, "k": k}
    counterexample: dict | None = None

    cell["dimension"] = lambda_e_dimension(n, k) == math.comb(n + 1, k + 1)
    if not cell["dimension"]:
        counterexample = {
            "check": "dimension",
            "computed": lambda_e_dimension(n, k),
            "expected": math.comb(n + 1, k + 1),
        }

    rng = Random(seed * 1_000_003 + n * 101 + k)
    cochains = [Cochain.basis(face) for face in enumerate_faces(n, k)]
    cochains += [random_cochain(rng, n, k) for _ in range(samples)]

    bad = next((c for c in cochains if derham(whitney(c)) != c), None)
    cell["rw_identity"] = bad is None
    if bad is not None and counterexample is None:
        counterexample = {"check": "rw_identity", "cochain": cochain_to_json(bad)}

    cell["characterization"] = True
    for c in cochains:
        try:
            agrees = solve_characterization(n, k, c) == whitney(c)
        except (NonUnique, Inconsistent):
            agrees = False
        if not agrees:
            cell["characterization"] = False
            if counterexample is None:
                counterexample = {
                    "check": "characterization",
                    "cochain": cochain_to_json(c),
                }
            break

    kernel = kernel_is_trivial(n, k)
    cell["kernel"] = bool(kernel)
    if not cell["kernel"] and counterexample is None:
        counterexample = {
            "check": "kernel",
            "kernel_form": form_to_json(kernel.certificate[0]),
        }

    if 1 <= k <= n - 1:
        try:
            trace = proof_trace(n, k)
        except TraceIncomplete as exc:
            cell["proof_trace"] = False
            if counterexample is None:
                counterexample = {"check": "proof_trace", "error": str(exc)}
        else:
            cell["proof_trace"] = trace.complete
            if not trace.complete and counterexample is None:
                counterexample = {
                    "check": "proof_trace",
                    "error": "elimination left unknowns undetermined",
                }
    else:
        cell["proof_trace"] = None

    cell["pass"] = all(cell[name] is not False for name in CHECK_NAMES)
    if counterexample is not None:
        cell["counterexample"] = counterexample
    return cell


def run_verification(
    n_max: int, k: int | None = None, samples: int = 20, seed: int = 0
) -> dict:
    """Run every cell with n <= n_max (optionally a single k) and summarize."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if k is not None and k < 0:
        raise ValueError("k must be nonnegative")
    cells = []
    for n in range(1, n_max + 1):
        degrees = range(n + 1) if k is None else ([k] if k <= n else [])
        for kk in degrees:
            cells.append(verify_cell(n, kk, samples=samples, seed=seed))
    failures = [(c["n"], c["k"]) for c in cells if not c["pass"]]
    first = next(
        (c["counterexample"] for c in cells if "counterexample" in c), None
    )
    return {
        "n_max": n_max,
        "k": k,
        "samples": samples,
        "seed": seed,
        "cells": cells,
        "failures": failures,
        "first_counterexample": first,
        "pass": not failures,
    }
