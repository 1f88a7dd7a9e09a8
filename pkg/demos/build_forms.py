"""Build Whitney forms and look at them.

Walks the three flavors on the 2-simplex (vertex, edge, whole triangle),
then shows a higher-dimensional example and linear combination.
"""

from fractions import Fraction

from whitneyforms import Cochain, Face, render_form, whitney, whitney_basis_form

print("Vertex forms on the triangle are the barycentric coordinates:")
for i in range(3):
    form = whitney_basis_form(Face(2, (i,)))
    print(f"  vertex {i}:  {render_form(form)}")

print()
print("Edge forms on the triangle:")
for verts in [(0, 1), (0, 2), (1, 2)]:
    form = whitney_basis_form(Face(2, verts))
    print(f"  edge {list(verts)}:  {render_form(form)}")

print()
print("Reversing an edge negates its form:")
print(f"  edge [2,1]:  {render_form(whitney_basis_form(Face(2, (2, 1))))}")

print()
print("The top face gives the volume form scaled by n factorial:")
for n in (2, 3, 4):
    form = whitney_basis_form(Face(n, tuple(range(n + 1))))
    print(f"  n={n}:  {render_form(form)}")

print()
print("The construction is linear in the cochain:")
c = Cochain(2, 1, {(0, 1): Fraction(3, 2), (1, 2): Fraction(-1)})
print(f"  3/2 [0,1] - [1,2]  ->  {render_form(whitney(c))}")
