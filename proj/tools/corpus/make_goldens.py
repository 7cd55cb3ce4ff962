#!/usr/bin/env python3
"""Regenerate the .golden files of the bundled corpus.

Expected ideals are either written out by hand or computed here with an
independent graded linear-algebra colon, (J*W + I) : W, which is valid for
ideals J with J + I primary to the homogeneous maximal ideal.  Every ideal is
then canonicalized as the reduced grevlex Groebner basis of (ideal + I) using
sympy.

Run from any directory:  python3 tools/corpus/make_goldens.py
"""

import itertools
import os
import sys

import sympy
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grevlex

HERE = os.path.dirname(os.path.abspath(__file__))


def monomials(gens, d):
    out = []
    for combo in itertools.combinations_with_replacement(range(len(gens)), d):
        e = [0] * len(gens)
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def power(gens, k):
    return [sympy.Mul(*c) for c in itertools.combinations_with_replacement(gens, k)]


def to_dict(f, gens):
    return {m: sympy.QQ(c.p, c.q) for m, c in sympy.Poly(f, *gens).terms()}


def shift(poly, mono):
    return {tuple(a + b for a, b in zip(m, mono)): c for m, c in poly.items()}


class Graded:
    """Homogeneous pieces of A = QQ[gens] as coordinate vectors."""

    def __init__(self, gens):
        self.gens = gens
        self.cache = {}

    def basis(self, d):
        if d not in self.cache:
            ms = monomials(self.gens, d)
            self.cache[d] = (ms, {m: i for i, m in enumerate(ms)})
        return self.cache[d]

    def vector(self, poly, d):
        ms, index = self.basis(d)
        row = [sympy.QQ(0)] * len(ms)
        for m, c in poly.items():
            row[index[m]] = c
        return row

    def echelon(self, ideal, d):
        """Reduced row echelon basis of ideal ∩ A_d as (rows, pivots)."""
        ms, _ = self.basis(d)
        rows = []
        for g in ideal:
            e = sum(next(iter(g)))
            if e > d:
                continue
            for m in monomials(self.gens, d - e):
                rows.append(self.vector(shift(g, m), d))
        if not rows:
            return [], []
        mat, pivots = DomainMatrix(rows, (len(rows), len(ms)), sympy.QQ).rref()
        dense = mat.to_list()
        return [dense[i] for i in range(len(pivots))], list(pivots)


def reduce(v, rows, pivots):
    v = list(v)
    for row, p in zip(rows, pivots):
        if v[p]:
            c = v[p]
            v = [a - c * b for a, b in zip(v, row)]
    return v


def colon(gens, relations, j, w):
    """(J*W + I) : W for homogeneous data with J + I primary to m."""
    g = Graded(gens)
    jd = [to_dict(f, gens) for f in j]
    wd = [to_dict(f, gens) for f in w]
    rd = [to_dict(f, gens) for f in relations]
    q = []
    for a in j:
        for b in w:
            q.append(to_dict(sympy.expand(a * b), gens))
    q += rd
    top = 0
    while len(g.echelon(jd + rd, top)[0]) < len(g.basis(top)[0]):
        top += 1
    wdeg = [sum(next(iter(x))) for x in wd]
    result = list(j)
    echelons = {}
    for d in range(top):
        ms, _ = g.basis(d)
        columns = []
        for wi, e in zip(wd, wdeg):
            if d + e not in echelons:
                echelons[d + e] = g.echelon(q, d + e)
            rows, pivots = echelons[d + e]
            free = [c for c in range(len(g.basis(d + e)[0])) if c not in set(pivots)]
            block = []
            for m in ms:
                v = reduce(g.vector(shift(wi, m), d + e), rows, pivots)
                block.append([v[c] for c in free])
            columns.append(block)
        # f = sum c_k m_k lies in the colon iff every reduced image vanishes
        system = []
        for block in columns:
            width = len(block[0]) if block else 0
            for coord in range(width):
                system.append([block[k][coord] for k in range(len(ms))])
        if not system:
            result += [sympy.Mul(*[v**e for v, e in zip(gens, m)]) for m in ms]
            continue
        kernel = DomainMatrix(system, (len(system), len(ms)), sympy.QQ).nullspace().to_Matrix()
        for r in range(kernel.shape[0]):
            f = sum(kernel[r, k] * sympy.Mul(*[v**e for v, e in zip(gens, ms[k])]) for k in range(len(ms)))
            if f != 0:
                result.append(sympy.expand(f))
    result += [sympy.Mul(*[v**e for v, e in zip(gens, m)]) for m in monomials(gens, top)]
    return result


def canonical(gens, relations, ideal):
    gb = sympy.groebner(list(ideal) + list(relations), *gens, order="grevlex")
    polys = [sympy.Poly(p, *gens) for p in gb.exprs]
    polys = [p.monic() for p in polys]
    polys.sort(key=lambda p: grevlex(p.monoms(order="grevlex")[0]), reverse=True)
    return [fmt(p.as_expr()) for p in polys]


def fmt(expr):
    return str(expr).replace("**", "^").replace(" ", "")


def main():
    x, y, z, w = sympy.symbols("x y z w")
    m3 = [x, y, z]
    out = {}

    def ring(name, gens, relations, mult):
        out[name] = (gens, relations, mult, [])

    def add(name, task, ideal=None, status=None):
        gens, relations, _, tasks = out[name]
        tasks.append((task, canonical(gens, relations, ideal) if ideal is not None else [status]))

    def by_colon(name, j):
        gens, relations, mult, _ = out[name]
        return colon(gens, relations, j, mult)

    checks = ["colon-211", "colon-212", "colon-312", "colon-322", "depth"]

    # cubic cone, W = m
    ring("cubic", m3, [x**3 + y**3 + z**3], m3)
    add("cubic", "xy", [x, y, z**2])
    add("cubic", "diagonal2", [x**2, y**2, z**2])
    add("cubic", "diagonal3", [x**3, y**3, z**3, x**2 * y**2 * z**2])
    add("cubic", "brenner", [y**2, x * y, -y**3, x * z**3])
    add("cubic", "x2y2", by_colon("cubic", [x**2, y**2]))
    add("cubic", "xy2", by_colon("cubic", [x, y**2]))
    add("cubic", "xy-homology", [x, y, z**2])
    add("cubic", "xy-clpi", by_colon("cubic", [x, y]))
    add("cubic", "x2y2-clpi", by_colon("cubic", [x**2, y**2]))
    add("cubic", "xy2-clpi", by_colon("cubic", [x, y**2]))
    add("cubic", "xy-hir", by_colon("cubic", [x, y]))
    add("cubic", "tau", m3)
    for c in checks + ["axioms"]:
        add("cubic", c, status="pass")

    # quartic cone in four variables, W = m
    m4 = [x, y, z, w]
    ring("quartic", m4, [x**4 + y**4 + z**4 + w**4], m4)
    add("quartic", "diagonal3", [x**3, y**3, z**3, w**3])
    add("quartic", "xyz", by_colon("quartic", [x, y, z]))
    add("quartic", "x2y2z2", by_colon("quartic", [x**2, y**2, z**2]))
    add("quartic", "xyz-clpi", by_colon("quartic", [x, y, z]))
    add("quartic", "x2y2z2-clpi", by_colon("quartic", [x**2, y**2, z**2]))
    add("quartic", "tau", m4)
    for c in checks:
        add("quartic", c, status="pass")

    # quintic cone, W = m^3
    hir = [y**2, x * y, x**2, z**3, y * z**2, x * z**2]
    for name in ("quintic", "quintic-extras"):
        ring(name, m3, [x**5 + y**5 + z**5], power(m3, 3))
    add("quintic", "IKH", [y, x, z**2])
    add("quintic", "I2KH", [y**2, x * y, x**2, z**4, y * z**3, x * z**3])
    add("quintic", "IxKH", [x * y, x**2, x * z**3, y**5 + z**5])
    add("quintic", "I2Hir", hir)
    add("quintic-extras", "I2sHir", hir)
    add("quintic-extras", "I2Hir-hull", hir)
    add("quintic-extras", "xy-clpi", by_colon("quintic-extras", [x, y]))
    add("quintic-extras", "x2y2-clpi", by_colon("quintic-extras", [x**2, y**2]))
    add("quintic-extras", "xy2-clpi", by_colon("quintic-extras", [x, y**2]))
    add("quintic-extras", "tau", power(m3, 3))
    for c in ["semiprime", "star", "bs-witness"] + checks:
        add("quintic-extras", c, status="pass")

    # septic cone, W = m^5
    ring("septic", m3, [x**7 + y**7 + z**7], power(m3, 5))
    add("septic", "diagonal4", [z**4, y**4, x**4, x**2 * y**3 * z**3, x**3 * y**2 * z**3, x**3 * y**3 * z**2])
    add("septic", "diagonal4-clpi", by_colon("septic", [x**4, y**4, z**4]))
    add("septic", "xy-clpi", by_colon("septic", [x, y]))
    add("septic", "x2y2-clpi", by_colon("septic", [x**2, y**2]))
    add("septic", "xy", by_colon("septic", [x, y]))
    add("septic", "tau", power(m3, 5))
    for c in checks:
        add("septic", c, status="pass")

    # rational examples: every ideal is closed and the test ideal is R
    ring("smooth", [x, y], [], [sympy.Integer(1)])
    add("smooth", "xy", [x, y])
    add("smooth", "mixed", [x**2, x * y**3, y**5])
    add("smooth", "principal", [x**2 * y - y**3])
    add("smooth", "mixed-clpi", [x**2, x * y**3, y**5])
    add("smooth", "tau", [sympy.Integer(1)])
    for c in checks:
        add("smooth", c, status="pass")

    ring("a1", m3, [x**2 + y**2 + z**2], [sympy.Integer(1)])
    add("a1", "xy", [x, y])
    add("a1", "x2yz", [x**2, y * z])
    add("a1", "xz3", [x * y, z**3])
    add("a1", "xy-clpi", by_colon("a1", [x, y]))
    add("a1", "tau", [sympy.Integer(1)])
    for c in checks:
        add("a1", c, status="pass")

    for name, (_, _, _, tasks) in out.items():
        path = os.path.join(HERE, name + ".golden")
        with open(path, "w") as f:
            f.write("# generated by make_goldens.py\n")
            for task, lines in tasks:
                f.write("\n[" + task + "]\n")
                for line in lines:
                    f.write(line + "\n")
        print("wrote", path, file=sys.stderr)


if __name__ == "__main__":
    main()
