#!/usr/bin/env python3
"""Frozen Fedder-criterion verdicts over GF(3).

Computes (I^[3] : I) via tag-variable intersections and checks containment
in m^[3], with all Groebner/division arithmetic mod 3. The two base-ring
cases are also verified by hand (monomial colon arithmetic) and must agree.
"""
import json
import sympy as sp
from sympy import symbols, groebner, Poly

P = 3

def intersect(A, B, syms):
    u = symbols("u_tag")
    mix = [sp.expand(u * p) for p in A] + [sp.expand((1 - u) * q) for q in B]
    gb = groebner(mix, u, *syms, order="lex", modulus=P)
    return [p.as_expr() if isinstance(p, Poly) else p
            for p in gb.exprs if u not in p.free_symbols]

def colon_principal(A, g, syms):
    inter = intersect(A, [g], syms)
    out = []
    for p in inter:
        q, r = sp.div(Poly(p, *syms, modulus=P), Poly(g, *syms, modulus=P))
        assert r.is_zero, "principal colon division left a remainder"
        out.append(q.as_expr())
    return out

def colon(A, gens, syms):
    cur = None
    for g in gens:
        c = colon_principal(A, g, syms)
        cur = c if cur is None else intersect(cur, c, syms)
    return cur

def in_ideal(f, gens, syms):
    gb = groebner(gens, *syms, order="grevlex", modulus=P)
    return gb.reduce(sp.expand(f))[1] == 0

def fedder(gens, syms):
    frob = [sp.expand(g**P) for g in gens]
    col = colon(frob, gens, syms)
    mp = [s**P for s in syms]
    return any(not in_ideal(c, mp, syms) for c in col)

def main():
    out = {}
    x1, x2 = symbols("x1 x2")
    out["fedder_S_x1x2"] = fedder([x1 * x2], (x1, x2))
    out["fedder_S_x1_x2"] = fedder([x1, x2], (x1, x2))
    y1, z = symbols("y1 z")
    out["fedder_RLP_x1x2"] = fedder([y1**2 - z * x1**2 * x2**2], (y1, z, x1, x2))
    y2 = symbols("y2")
    rlp = [-y1 * x2 + x1 * y2, y1**2 - z * x1**2,
           y1 * y2 - z * x1 * x2, y2**2 - z * x2**2]
    out["fedder_RLP_x1_x2"] = fedder(rlp, (y1, y2, z, x1, x2))
    print(json.dumps(out, indent=2))

if __name__ == "__main__":
    main()
