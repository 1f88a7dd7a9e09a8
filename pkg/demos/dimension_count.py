"""Count the forms with constant face pullbacks.

An affine-coefficient k-form has C(n,k) * (n+1) free coefficients. The
constancy conditions cut that down, and what survives matches the number
of k-faces exactly, one dimension per face. That equality is why one
prescribed integral per face pins the form down.
"""

import math

from whitneyforms import lambda_e_dimension

for n in range(1, 6):
    print(f"n = {n}")
    print("  k  unknowns  dimension  faces")
    for k in range(n + 1):
        unknowns = math.comb(n, k) * (n + 1)
        dim = lambda_e_dimension(n, k)
        faces = math.comb(n + 1, k + 1)
        marker = "" if dim == faces else "  <- MISMATCH"
        print(f"  {k}  {unknowns:8}  {dim:9}  {faces:5}{marker}")
    print()
