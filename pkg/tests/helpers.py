"""Independent reference computations used by several test modules."""
from fractions import Fraction

import sympy


def naive_rank(M):
    """Textbook Gaussian elimination over Fraction."""
    A = [[Fraction(x) for x in row] for row in M]
    if not A:
        return 0
    rank, ncols = 0, len(A[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(A)) if A[r][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(len(A)):
            if r != rank and A[r][c] != 0:
                f = A[r][c] / A[rank][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[rank])]
        rank += 1
    return rank


X, Y, Z = sympy.symbols("x y z")


def sympy_jet_matrix(points, degree):
    """Conditions via sympy: every partial derivative of order < m of every
    degree-d monomial, evaluated at the point in the chart of its last
    nonzero coordinate."""
    mons = [X**a * Y**b * Z**(degree - a - b)
            for a in range(degree, -1, -1) for b in range(degree - a, -1, -1)]
    rows = []
    for xyz, mult in points:
        xyz = [sympy.Rational(str(v)) for v in xyz]
        chart = max(i for i, v in enumerate(xyz) if v != 0)
        gens = [X, Y, Z]
        free = [g for i, g in enumerate(gens) if i != chart]
        subs_chart = {gens[chart]: 1}
        at = {gens[i]: xyz[i] / xyz[chart] for i in range(3) if i != chart}
        for order in range(mult):
            for a in range(order, -1, -1):
                b = order - a
                row = []
                for m in mons:
                    f = m.subs(subs_chart)
                    if a:
                        f = sympy.diff(f, free[0], a)
                    if b:
                        f = sympy.diff(f, free[1], b)
                    row.append(Fraction(str(sympy.nsimplify(f.subs(at)))))
                rows.append(row)
    return rows
