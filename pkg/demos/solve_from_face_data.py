"""Recover a form from nothing but its face data.

Prescribe an integral for every edge of the tetrahedron, demand constant
pullbacks, and solve the resulting exact linear system. The solution
always coincides with the directly constructed Whitney form, and the
homogeneous system has only the zero solution, so nothing else works.
"""

from random import Random

from whitneyforms import (
    build_system,
    kernel_is_trivial,
    random_cochain,
    render_cochain,
    render_form,
    solve_characterization,
    whitney,
)

n, k = 3, 1
c = random_cochain(Random(11), n, k)
print(f"Prescribed edge integrals: {render_cochain(c)}")

system = build_system(n, k, c)
print(
    f"System shape: {system.constancy.rows} constancy rows + "
    f"{system.integrals.rows} integral rows over {system.layout.size} unknowns"
)

solved = solve_characterization(n, k, c)
print(f"Solved form:  {render_form(solved)}")

direct = whitney(c)
print(f"Construction: {render_form(direct)}")
print(f"Identical: {solved == direct}")

report = kernel_is_trivial(n, k)
print(f"Kernel of the homogeneous system is trivial: {report.trivial}")
