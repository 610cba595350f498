#!/usr/bin/env python3
"""Frozen cross-checks for the linked ideal J = C + (g_even, g_odd), m = 2.

Verifies with sympy that the four closed-form generators are already a
Groebner basis under lex y1 > y2 > z > x1 > x2, freezes the reduced GB,
the initial ideal, and the normal form of y1*y2, plus the resultant-based
elimination check and the sign-variant kernel intersection.
"""
import json
import sympy as sp
from sympy import symbols, groebner, resultant

def main():
    y1, y2, z, x1, x2 = symbols("y1 y2 z x1 x2")
    out = {}

    # J for f = (x1, x2): C + (g2_even, g2_odd)
    f1, f2 = x1, x2
    gens = [y1**2 - z * f1**2, y2**2 - z * f2**2,
            y1 * y2 + z * f1 * f2, f2 * y1 + f1 * y2]
    gb = groebner(gens, y1, y2, z, x1, x2, order="lex")
    out["J_m2_reduced_gb"] = [sp.sstr(sp.expand(p)) for p in gb.exprs]
    out["J_m2_initial_ideal"] = [sp.sstr(sp.LT(p, [y1, y2, z, x1, x2], order="lex")) for p in gb.exprs]
    out["J_m2_nf_y1y2"] = sp.sstr(sp.expand(gb.reduce(y1 * y2)[1]))

    # resultant elimination cross-check: eliminate t from (y - x t, z - t^2)
    x, y, t = symbols("x y t")
    out["resultant_y_xt_z_t2"] = sp.sstr(sp.expand(resultant(y - x * t, z - t**2, t)))

    # sign-variant kernel intersection for f = (x1, x2):
    # ker(+,+) cap ker(+,-) should equal C = (y1^2 - z x1^2, y2^2 - z x2^2).
    def kernel(fs):
        tt = symbols("tt")
        gens = [y1 - fs[0] * tt, y2 - fs[1] * tt, z - tt**2]
        gbk = groebner(gens, tt, y1, y2, z, x1, x2, order="lex")
        return [p for p in gbk.exprs if tt not in p.free_symbols]

    kpp = kernel([x1, x2])
    kpm = kernel([x1, -x2])
    u = symbols("u")
    mix = [u * p for p in kpp] + [(1 - u) * q for q in kpm]
    gbi = groebner(mix, u, y1, y2, z, x1, x2, order="lex")
    inter = [sp.sstr(sp.expand(p)) for p in gbi.exprs if u not in p.free_symbols]
    out["kernel_pp_cap_pm"] = inter
    C = groebner([y1**2 - z * x1**2, y2**2 - z * x2**2], u, y1, y2, z, x1, x2, order="lex")
    out["C_m2_reduced_gb"] = [sp.sstr(sp.expand(p)) for p in C.exprs]
    out["intersection_equals_C"] = sorted(inter) == sorted(out["C_m2_reduced_gb"])

    print(json.dumps(out, indent=2))

if __name__ == "__main__":
    main()
