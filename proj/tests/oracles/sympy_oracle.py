"""Independent reference values for the C++ test-suite.

Everything here is computed with sympy from the defining formulas only
(Gram systems on monomials, symbolic differentiation, sympy's own
assoc_laguerre); none of the library's algorithms are reused. The printed
values are frozen into the C++ tests and tests/golden/.
"""
from sympy import (Poly, Rational as R, assoc_laguerre, diff, expand, factorial,
                   linsolve, rf, symbols)

x, y = symbols("x y")


def laguerre(n, a):
    return expand(assoc_laguerre(n, a, x))


def u(p, a):
    p = Poly(expand(p), x)
    return sum(c * rf(a + 1, k) for (k,), c in p.terms())


def inner(f, g, a, masses):
    s = u(f * g, a)
    for c, nu, mu in masses:
        s += mu * diff(f, x, nu).subs(x, c) * diff(g, x, nu).subs(x, c)
    return s


def sobolev(n, a, masses):
    lead = R((-1) ** n, factorial(n))
    q = symbols("q0:%d" % max(n, 1))
    p = lead * x**n + sum(q[i] * x**i for i in range(n))
    if n == 0:
        return expand(p)
    (sol,) = linsolve([inner(p, x**m, a, masses) for m in range(n)], q[:n])
    return expand(p.subs(dict(zip(q, sol))))


def modified(n, a, w):
    lead = R((-1) ** n, factorial(n))
    q = symbols("m0:%d" % max(n, 1))
    p = lead * x**n + sum(q[i] * x**i for i in range(n))
    if n == 0:
        return expand(p)
    (sol,) = linsolve([u(w * p * x**m, a) for m in range(n)], q[:n])
    return expand(p.subs(dict(zip(q, sol))))


def coeffs(p):
    return [str(c) for c in reversed(Poly(p, x).all_coeffs())]


def kernel(n, a):
    return sum(laguerre(k, a) * laguerre(k, a).subs(x, y) / (rf(a + 1, k) / factorial(k))
               for k in range(n + 1))


if __name__ == "__main__":
    A = (0, [(0, 0, 1)])
    print("# golden: S_n for alpha=0, (c=0, nu=0, mu=1)")
    print("n,coefficients")
    for n in range(6):
        print(",".join([str(n)] + coeffs(sobolev(n, *A))))

    D = (2, [(1, 2, 5)])
    for n in (3, 4):
        print("S_%d alpha=2 (1,2,5):" % n, coeffs(sobolev(n, *D)))

    B = (1, [(0, 0, 1), (2, 1, R(1, 3))])
    print("S_3 alpha=1 (0,0,1),(2,1,1/3):", coeffs(sobolev(3, *B)))

    # zeta expansion for B, n = 4; ladder x, x(x-2), x(x-2)^2
    n = 4
    zs = [1, x, x * (x - 2), x * (x - 2) ** 2]
    basis = [expand(zs[j] * modified(n - j, 1, zs[j] ** 2)) for j in range(4)]
    lam = symbols("l0:4")
    (sol,) = linsolve(Poly(expand(sobolev(n, *B) - sum(lam[j] * basis[j] for j in range(4))), x).all_coeffs(), lam)
    print("lambda B n=4:", [str(s) for s in sol])

    print("P_2^[x^2] alpha=0:", coeffs(modified(2, 0, x**2)))

    C = (R(1, 2), [(0, 0, 1), (0, 1, 1)])
    for n in (2, 3):
        xi = symbols("xi0:3")
        e = expand(sobolev(n, *C) - sum(xi[k] * laguerre(n - k, R(1, 2) + k) for k in range(3)))
        (sol,) = linsolve(Poly(e, x).all_coeffs(), xi)
        print("xi C n=%d:" % n, [str(s) for s in sol])

    K = kernel(3, R(1, 2))
    print("K_3^(1,2)(1/3,2) alpha=1/2:", diff(K, x, 1, y, 2).subs({x: R(1, 3), y: 2}))
    print("K_4^(0,0)(1/2,-3/2) alpha=1:", kernel(4, 1).subs({x: R(1, 2), y: R(-3, 2)}))
