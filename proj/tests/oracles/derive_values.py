"""Independent reference values frozen into the C++ tests.

Harmonics are built from sympy's spherical harmonics and Gegenbauer
polynomials; every theta_j factor is normalized by direct symbolic
integration instead of a closed-form constant. Run with python3.
"""
import mpmath as mp
import sympy as sp

mp.mp.dps = 25
phi, t2, t3, t4 = sp.symbols("phi theta2 theta3 theta4", real=True)
thetas = [t2, t3, t4]


def ylm(l, m, th, ph):
    return sp.expand_func(sp.Ynm(l, m, th, ph)).rewrite(sp.cos)


def theta_factor(j, lo, hi, th):
    lam = sp.Rational(lo) + sp.Rational(j - 1, 2)
    f = sp.sin(th) ** lo * sp.gegenbauer(hi - lo, lam, sp.cos(th))
    norm2 = sp.integrate(sp.expand(f**2 * sp.sin(th) ** (j - 1)), (th, 0, sp.pi))
    return f / sp.sqrt(sp.nsimplify(norm2))


def complex_harmonic(d, l, m):
    tup = list(m) + [l]
    expr = ylm(tup[1], tup[0], t2, phi)
    for j in range(3, d + 1):
        expr *= theta_factor(j, tup[j - 2], tup[j - 1], thetas[j - 2])
    return expr


def real_harmonic(d, l, q):
    a = abs(q[0])
    if a == 0:
        return complex_harmonic(d, l, q)
    ym = complex_harmonic(d, l, [-a] + list(q[1:]))
    yp = complex_harmonic(d, l, [a] + list(q[1:]))
    if q[0] > 0:
        return (ym + (-1) ** a * yp) / sp.sqrt(2)
    return sp.I * (ym - (-1) ** a * yp) / sp.sqrt(2)


def triple(d, p, q, k, m, n):
    f = real_harmonic(d, p, q) * complex_harmonic(d, k, m) * sp.conjugate(complex_harmonic(d, k, n))
    meas = sp.sin(t2)
    for j in range(3, d + 1):
        meas *= sp.sin(thetas[j - 2]) ** (j - 1)
    fn = sp.lambdify([phi] + thetas[: d - 1], f * meas, "mpmath")
    # The azimuthal dependence is a trigonometric polynomial of low degree,
    # so a 16-point trapezoid rule in phi is exact.
    nphi = 16

    def g(*th):
        return sum(fn(2 * mp.pi * i / nphi, *th) for i in range(nphi)) * 2 * mp.pi / nphi

    # Integrands are analytic in each theta, so a fixed 30-point
    # Gauss-Legendre rule per angle is far below the 1e-16 level.
    nodes, weights = gauss_legendre_0_pi(30)

    def nest(prefix):
        if len(prefix) == d - 1:
            return g(*prefix)
        return sum(w * nest(prefix + [x]) for x, w in zip(nodes, weights))

    return nest([])


def gauss_legendre_0_pi(n):
    xs, ws = [], []
    for i in range(1, n + 1):
        x = mp.cos(mp.pi * (i - mp.mpf(1) / 4) / (n + mp.mpf(1) / 2))
        for _ in range(100):
            p0, p1 = mp.mpf(1), x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1)
            dx = p1 / dp
            x -= dx
            if abs(dx) < mp.mpf(10) ** (-mp.mp.dps + 2):
                break
        xs.append(mp.pi / 2 * (x + 1))
        ws.append(mp.pi / 2 * 2 / ((1 - x * x) * dp * dp))
    return xs, ws


if __name__ == "__main__":
    print("lgamma(0.5)", mp.log(mp.gamma(0.5)))
    z = sp.Rational(1, 2)
    x = sp.symbols("x")
    rod = sp.simplify(sp.gegenbauer(3, 2, x))
    print("C_3^(2)(1/2)", rod.subs(x, z), sp.N(rod.subs(x, z), 20))
    print("W d=3 p=2 q=(0,2) k=1 m=n=(1,1)", triple(3, 2, [0, 2], 1, [1, 1], [1, 1]))
    print("W d=3 p=2 q=(0,2) k=2 m=n=(2,2)", triple(3, 2, [0, 2], 2, [2, 2], [2, 2]))
    print("W d=3 p=2 q=(1,2) k=1 m=(0,1) n=(1,1)", triple(3, 2, [1, 2], 1, [0, 1], [1, 1]))
    print("W d=3 p=2 q=(-1,2) k=1 m=(0,1) n=(1,1)", triple(3, 2, [-1, 2], 1, [0, 1], [1, 1]))
    print("W d=3 p=4 q=(2,3) k=2 m=(-1,2) n=(1,1)", triple(3, 4, [2, 3], 2, [-1, 2], [1, 1]))
    print("W d=4 p=2 q=(0,2,2) k=1 m=n=(1,1,1)", triple(4, 2, [0, 2, 2], 1, [1, 1, 1], [1, 1, 1]))
    from sympy.physics.wigner import wigner_3j

    for args in [(1, 1, 2, 0, 0, 0), (2, 2, 2, 0, 0, 0), (1, 1, 1, 1, -1, 0), (3, 2, 1, 1, -1, 0),
                 (2, 1, 1, -1, 0, 1), (4, 3, 2, 2, -3, 1), (10, 6, 8, 0, 0, 0), (7, 5, 4, -3, 1, 2)]:
        v = wigner_3j(*args)
        print("3j", args, v, "squared", sp.nsimplify(v**2))
