#!/usr/bin/env python3
"""Exact moments of abar_1, abar_2, abar_3 by direct expectation.

abar = 2 cos(theta) with density (2/pi) sin^2(theta) on [0, pi]; its moments come from
expanding (2 cos theta)^m into exponentials, where E[cos(k theta)] is 1, -1/2 or 0 for
k = 0, +-2 and otherwise. The trace t = chi4(sigma) runs over group elements of S4, read
from the shipped table.
"""
import argparse
import cmath
import json
import sys
from fractions import Fraction
from math import comb
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2]


def semicircle_moment(m):
    total = Fraction(0)
    for j in range(m + 1):
        k = abs(m - 2 * j)
        w = Fraction(1) if k == 0 else Fraction(-1, 2) if k == 2 else Fraction(0)
        total += comb(m, j) * w
    return total


def value(v):
    if isinstance(v, int):
        return v
    z = sum(cmath.exp(2j * cmath.pi * k / v["m"]) for k in v["roots"])
    r = round(z.real)
    assert abs(z - r) < 1e-9, v
    return r


def traces(path):
    g = json.loads(path.read_text())
    chi4 = next(c for c in g["characters"] if c["name"] == "chi4")
    return [(cl["size"], value(v)) for cl, v in zip(g["classes"], chi4["values"])], g["order"]


def poly_mul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return out


def poly_pow(a, n):
    r = {0: Fraction(1)}
    for _ in range(n):
        r = poly_mul(r, a)
    return r


def abar_poly(i, t):
    # polynomial in abar with coefficients depending on t
    if i == 1:
        return {1: Fraction(t)}
    if i == 2:
        return {2: Fraction(t), 0: Fraction(t * (t - 2))}
    return {3: Fraction(1), 1: Fraction(t * t - 3)}


def moment(i, n, classes, order):
    total = Fraction(0)
    for size, t in classes:
        p = poly_pow(abar_poly(i, t), n)
        total += size * sum(c * semicircle_moment(k) for k, c in p.items())
    return total / order


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--table", default=str(ROOT / "data" / "groups" / "S4.json"))
    ap.add_argument("--check", help="compare against an expected-values file")
    args = ap.parse_args()
    classes, order = traces(Path(args.table))
    rows = [{"coefficient": i, "order": n, "value": str(moment(i, n, classes, order))}
            for i in (1, 2, 3) for n in range(0, 7)]
    if args.check:
        want = json.loads(Path(args.check).read_text())
        if want != rows:
            print("oracle disagrees with", args.check, file=sys.stderr)
            return 1
        print("ok", len(rows), "values")
        return 0
    json.dump(rows, sys.stdout, indent=1)
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
