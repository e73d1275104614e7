"""Independent reference values for the frozen oracle test.

Everything here is computed with sympy and fractions, without the C++ library.
Run `python3 tests/oracle/oracle.py` to regenerate; paste the output into
tests/unit/test_oracle.cpp when inputs change.
"""

import json
from fractions import Fraction

import sympy as sp

z, zeta = sp.symbols("z zeta")


def frac(x):
    x = sp.nsimplify(x)
    return str(Fraction(int(sp.numer(x)), int(sp.denom(x))))


def series_product():
    a = 1 + 2 * z - sp.Rational(1, 3) * z**2 + 5 * z**4
    b = sp.Rational(1, 2) - z + 3 * z**3 - z**5
    prod = sp.expand(a * b)
    return [[k, frac(prod.coeff(z, k))] for k in range(0, 8) if prod.coeff(z, k) != 0]


def series_inverse():
    a = 2 - z + sp.Rational(1, 2) * z**2 + 3 * z**3
    inv = sp.series(1 / a, z, 0, 8).removeO()
    return [[k, frac(inv.coeff(z, k))] for k in range(0, 8) if inv.coeff(z, k) != 0]


def jordan_semisimple():
    m = sp.Matrix([[2, 1, 0], [0, 2, 0], [1, 0, 3]])
    p, j = m.jordan_form()
    s = p * sp.diag(*[j[i, i] for i in range(3)]) * p.inv()
    return [[frac(s[i, k]) for k in range(3)] for i in range(3)]


def gauge(g, a, var):
    return sp.simplify(g * a * g.inv() + g.diff(var) * g.inv())


def shear_example():
    # E21 z^-2 dz pulled back along z = zeta^2, then gauged by zeta^{-H} with H = diag(1,-1).
    e21 = sp.Matrix([[0, 0], [1, 0]])
    pulled = (e21 * zeta**-4) * 2 * zeta
    g = sp.diag(zeta**-1, zeta)
    out = sp.expand(gauge(g, pulled, zeta) * zeta)
    return [[frac(out[i, k]) for k in range(2)] for i in range(2)]


def boalch_example():
    y = sp.symbols("y")
    a = (sp.diag(1, 0) + sp.Matrix([[0, 0], [z, 0]])) / z
    g = sp.eye(2) + y * z * sp.Matrix([[0, 0], [1, 0]])
    out = sp.expand(gauge(g, a, z) * z)
    sol = sp.solve(out[1, 0], y)
    assert len(sol) == 1
    res = sp.expand(out.subs(y, sol[0]))
    return {"y": frac(sol[0]), "zA": [[frac(res[i, k]) for k in range(2)] for i in range(2)]}


def cochar_example():
    g = sp.diag(z, 1)
    out = sp.expand(gauge(g, sp.zeros(2, 2), z) * z)
    return [[frac(out[i, k]) for k in range(2)] for i in range(2)]


def companion_slopes():
    out = {}
    for n, k in [(2, 3), (2, 5), (3, 4), (3, 5), (3, 7)]:
        # slope = max over i < n of ((v_n - n) - (v_i - i)) / (n - i) with v_n = 0, v_0 = -k.
        s = max(Fraction(0), Fraction((0 - n) - (-k - 0), n - 0))
        out[f"{n}:{k}"] = str(s)
    return out


def springer_dim(theta, a_terms, c, window):
    """dim {X : dX - [A,X] has dz-depth >= -c} / p_theta, X supported in [-window, window]."""
    n = len(theta)
    grade = lambda i, j: theta[i] - theta[j]
    syms = {}
    x = sp.zeros(n, n)
    for i in range(n):
        for j in range(n):
            for k in range(-window, window + 1):
                s = sp.Symbol(f"x_{i}_{j}_{k}")
                syms[(i, j, k)] = s
                x[i, j] += s * z**k
    a = sp.zeros(n, n)
    for (i, j, k, v) in a_terms:
        a[i, j] += v * z**k
    d = sp.expand(x.diff(z) - (a * x - x * a))
    eqs = []
    for i in range(n):
        for j in range(n):
            poly = sp.expand(d[i, j] * z ** (window + c + 10))
            for m in range(-window - c - 10, window + 10):
                coeff = poly.coeff(z, m + window + c + 10)
                if coeff != 0 and grade(i, j) + m + c < 0:
                    eqs.append(coeff)
    allv = list(syms.values())
    pv = [s for (i, j, k), s in syms.items() if grade(i, j) + k >= 0]
    mat = sp.Matrix([[e.coeff(v) for v in allv] for e in eqs]) if eqs else sp.zeros(0, len(allv))
    kdim = len(allv) - mat.rank()
    pmat = sp.Matrix([[e.coeff(v) for v in pv] for e in eqs]) if eqs else sp.zeros(0, len(pv))
    kp = len(pv) - pmat.rank()
    return kdim - kp


def springer_values():
    h = [(0, 0, -2, 1), (1, 1, -2, -1)]
    out = {f"diag_w{w}": springer_dim([0, 0], h, 2, w) for w in range(0, 4)}
    e12 = [(0, 1, -2, 1)]
    half = [sp.Rational(1, 2), 0]
    out.update({f"iwahori_e12_w{w}": springer_dim(half, e12, 2, w) for w in range(0, 3)})
    log = [(0, 0, -1, 1), (0, 1, -1, 1)]
    out.update({f"log_w{w}": springer_dim([0, 0], log, 1, w) for w in range(0, 3)})
    return out


def main():
    print(json.dumps({
        "series_product": series_product(),
        "series_inverse": series_inverse(),
        "jordan_semisimple": jordan_semisimple(),
        "shear": shear_example(),
        "boalch": boalch_example(),
        "cochar": cochar_example(),
        "companion_slopes": companion_slopes(),
        "springer": springer_values(),
    }, indent=1))


if __name__ == "__main__":
    main()
