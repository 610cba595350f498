#!/usr/bin/env python3
"""Frozen membership cross-checks.

(1) Monomial-curve Rees-algebra memberships: for
    p = (y^4 - x^3 z, x y^3 - z^3, x^4 - y z^2) in QQ[x,y,z] and
    b = x^7 y^2 - 3 x^3 y^3 z^2 + x^2 z^5 + y^7 z:
    b in p^2 (expected False), b^2 in p^4 (True), b^3 in p^6 (True),
    plus b in p (False) so the element genuinely fails at t-degree 2.
(2) Rabinowitsch radical membership of x1*x2 in the 2x2-minors ideal of
    the 5x4 Jacobian of the ht-2 linear-pair presentation.
"""
import json
import itertools
import sympy as sp
from sympy import symbols, groebner

def power_ideal(gens, k):
    return [sp.expand(sp.Mul(*c)) for c in itertools.combinations_with_replacement(gens, k)]

def member(f, gens, syms):
    gb = groebner(gens, *syms, order="grevlex")
    return gb.reduce(sp.expand(f))[1] == 0

def main():
    out = {}
    x, y, z = symbols("x y z")
    p = [y**4 - x**3 * z, x * y**3 - z**3, x**4 - y * z**2]
    b = x**7 * y**2 - 3 * x**3 * y**3 * z**2 + x**2 * z**5 + y**7 * z
    syms = (x, y, z)
    out["b_in_p"] = member(b, p, syms)
    out["b_in_p2"] = member(b, power_ideal(p, 2), syms)
    out["b2_in_p4"] = member(b**2, power_ideal(p, 4), syms)
    out["b3_in_p6"] = member(b**3, power_ideal(p, 6), syms)

    y1, y2, zz, x1, x2, w = symbols("y1 y2 zz x1 x2 w")
    gens = [-y1 * x2 + x1 * y2, y1**2 - zz * x1**2,
            y1 * y2 - zz * x1 * x2, y2**2 - zz * x2**2]
    rows = [y1, y2]  # column order: syzygy column then the three products
    jac_vars = [x1, x2, y1, y2, zz]
    J = sp.Matrix([[sp.diff(g, v) for g in gens] for v in jac_vars])
    minors = []
    for r in itertools.combinations(range(5), 2):
        for c in itertools.combinations(range(4), 2):
            minors.append(sp.expand(J[r, c].det()))
    minors = [m for m in minors if m != 0]
    out["minor_count_nonzero"] = len(minors)
    rab = minors + [1 - w * x1 * x2]
    gb = groebner(rab, w, y1, y2, zz, x1, x2, order="grevlex")
    out["x1x2_in_radical_I2"] = list(gb.exprs) == [sp.Integer(1)]
    print(json.dumps(out, indent=2))

if __name__ == "__main__":
    main()
