#!/usr/bin/env python3
"""Independent cross-check values for the Rees-like presentation kernel.

Uses sympy (a second, unrelated CAS) to eliminate t from
(y_i - f_i t, z - t^2) and freeze the resulting generators. Run once;
output is committed next to this script.
"""
import json
import sympy as sp
from sympy import symbols, groebner, QQ

def kernel(fs, xs, ynames):
    t = symbols("t")
    ys = list(sp.sympify(symbols(ynames, seq=True)))
    z = symbols("z")
    gens = [y - f * t for y, f in zip(ys, fs)] + [z - t**2]
    # lex with t first is an elimination order for t
    ordered = [t] + ys + [z] + list(xs)
    gb = groebner(gens, *ordered, order="lex")
    elim = [p for p in gb.exprs if t not in p.free_symbols]
    return [sp.sstr(sp.expand(p)) for p in elim]

def main():
    x1, x2 = symbols("x1 x2")
    out = {}
    out["kernel_x1_x2"] = kernel([x1, x2], [x1, x2], "y1 y2")
    out["kernel_sq"] = kernel([x1**2, x1 * x2, x2**2], [x1, x2], "y1 y2 y3")
    out["kernel_x1x2"] = kernel([x1 * x2], [x1, x2], "y1")
    print(json.dumps(out, indent=2))

if __name__ == "__main__":
    main()
