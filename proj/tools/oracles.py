#!/usr/bin/env python3
"""Independent reference values frozen into the C++ tests.

Run: python3 tools/oracles.py
"""
from fractions import Fraction
from itertools import product
from math import ceil

ORDER = [-4, -1, -2, -3, 3, 2, 1, 4]


# ---------------------------------------------------------------- vector-matrix octonions

def cross(u, v):
    return [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def zmul(x, y):
    """(a, w, c, b) with w on e1..e3 and c the coordinates of φ on e-1..e-3, φ(w) = -c·w."""
    a, w, c, b = x
    a2, w2, c2, b2 = y
    phi2_w = -dot(c2, w)
    phi_w2 = -dot(c, w2)
    # Both wedge identifications are taken with the sign giving e1e2 = e-3 and e-1e-2 = e3.
    wedge_phi = [-z for z in cross(c, c2)]
    wedge_w = cross(w, w2)
    return (a * a2 + phi2_w,
            [a * w2[i] + b2 * w[i] - wedge_phi[i] for i in range(3)],
            [a2 * c[i] + b * c2[i] + wedge_w[i] for i in range(3)],
            b * b2 + phi_w2)


def zbasis(label):
    a, w, c, b = 0, [0, 0, 0], [0, 0, 0], 0
    if label == -4:
        a = 1
    elif label == 4:
        b = 1
    elif label > 0:
        w[label - 1] = 1
    else:
        c[-label - 1] = 1
    return (a, w, c, b)


def zcoords(x):
    a, w, c, b = x
    out = {-4: a, 4: b}
    for i in range(3):
        out[i + 1] = w[i]
        out[-(i + 1)] = c[i]
    return out


def mult_table():
    rows = []
    for k in ORDER:
        row = []
        for l in ORDER:
            co = {lab: v for lab, v in zcoords(zmul(zbasis(k), zbasis(l))).items() if v}
            assert len(co) <= 1
            row.append("0" if not co else ("+" if list(co.values())[0] > 0 else "-") + str(list(co)[0]))
        rows.append(row)
    return rows


# ---------------------------------------------------------------- truncated series over F_p

def series_mul(x, y, p, n):
    out = [0] * n
    for i, a in enumerate(x):
        for j, b in enumerate(y):
            if i + j < n:
                out[i + j] = (out[i + j] + a * b) % p
    return out


def series_inv(x, p, n):
    inv0 = pow(x[0], p - 2, p)
    out = [0] * n
    for k in range(n):
        s = (1 if k == 0 else 0) - sum(x[j] * out[k - j] for j in range(1, min(k, len(x) - 1) + 1))
        out[k] = (s * inv0) % p
    return out


def series_sqrt(x, p, n):
    """Square root with constant term 1, coefficient by coefficient."""
    out = [1] + [0] * (n - 1)
    half = pow(2, p - 2, p)
    for k in range(1, n):
        s = (x[k] if k < len(x) else 0) - sum(out[j] * out[k - j] for j in range(1, k))
        out[k] = (s * half) % p
    return out


def fmt(coeffs, n):
    terms = [("1" if c == 1 and k == 0 else str(c)) + ("" if k == 0 else "*t" if k == 1 else f"*t^{k}")
             for k, c in enumerate(coeffs) if c]
    return " + ".join(terms) + f" + O(t^{n})"


# ---------------------------------------------------------------- Hilbert symbol on F_p((t))

def legendre(a, p):
    a %= p
    return 0 if a == 0 else (1 if pow(a, (p - 1) // 2, p) == 1 else -1)


def hilbert(a, b, p):
    """a = a0 t^α, b = b0 t^β: (a, b) = ((-1)^{αβ} a0^β b0^{-α} / p)."""
    (a0, al), (b0, be) = a, b
    v = pow(-1, al * be) * pow(a0, be % (p - 1), p) * pow(pow(b0, p - 2, p), al % (p - 1), p)
    return legendre(v, p)


# ---------------------------------------------------------------- lattice exponents

def exponents(values, m, i):
    return [ceil(Fraction(i, m) - v) for v in values]


# ---------------------------------------------------------------- symplectic brute force

def span(vecs, p, n):
    s = {tuple([0] * n)}
    for v in vecs:
        s = {tuple((x[i] + c * v[i]) % p for i in range(n)) for x in s for c in range(p)}
    return frozenset(s)


def all_subspaces(p, n):
    found = {span([], p, n)}
    frontier = list(found)
    allv = list(product(range(p), repeat=n))
    while frontier:
        nxt = []
        for s in frontier:
            for v in allv:
                if v not in s:
                    t = frozenset(tuple((x[i] + c * v[i]) % p for i in range(n)) for x in s for c in range(p))
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
        frontier = nxt
    return found


def apply(g, v, p):
    return tuple(sum(g[i][j] * v[j] for j in range(len(v))) % p for i in range(len(v)))


def form(j, u, v, p):
    return sum(u[a] * j[a][b] * v[b] for a in range(len(u)) for b in range(len(v))) % p


def gamma_perp_counts(p, j, g):
    subs = all_subspaces(p, len(j))
    allv = list(product(range(p), repeat=len(j)))
    fixed = frozenset(v for v in allv if apply(g, v, p) == v)
    stable = [s for s in subs if all(apply(g, v, p) in s for v in s)]
    bad = 0
    for x in stable:
        xf = x & fixed
        lhs = frozenset(v for v in fixed if all(form(j, v, w, p) == 0 for w in xf))
        xperp = frozenset(v for v in allv if all(form(j, v, w, p) == 0 for w in x))
        bad += lhs != (xperp & fixed)
    return len(subs), len(stable), bad


def main(quick=False):
    print("multiplication table, rows and columns in storage order", ORDER)
    for row in mult_table():
        print("  " + " ".join(f"{e:>3}" for e in row))
    for p in (5, 7):
        n = 8
        print(f"p={p}")
        print("  inv(1 + t + 2t^2) =", fmt(series_inv([1, 1, 2], p, n), n))
        print("  sqrt(1 + t)       =", fmt(series_sqrt([1, 1], p, n), n))
        nu = next(a for a in range(2, p) if legendre(a, p) == -1)
        elems = [(1, 0), (nu, 0), (1, 1), (nu, 1), (p - 1, 0)]
        print(f"  hilbert on (1, ν={nu}, t, νt, -1):", [[hilbert(a, b, p) for b in elems] for a in elems])
    vals = [Fraction(0), Fraction(0), Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3), Fraction(-1, 3), Fraction(-1, 3), Fraction(2, 3)]
    for i in range(4):
        print(f"exponents m=3, i={i}:", exponents(vals, 3, i))
    if quick:
        return
    j4 = [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]
    g4 = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    total, stable, bad = gamma_perp_counts(5, j4, g4)
    print(f"F5^4: {total} subspaces, {stable} γ-stable, {bad} GammaPerp failures")


if __name__ == "__main__":
    import sys
    main(quick="--quick" in sys.argv)
