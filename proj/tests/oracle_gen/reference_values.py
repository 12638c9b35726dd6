"""Independent high-precision reference values frozen into the C++ tests.

Everything here is computed with mpmath: numerical quadrature for radial
integrals and bisection for the bound-state mass, never the closed forms.
"""
from fractions import Fraction
import mpmath as mp

mp.mp.dps = 40


def kummer(n, c, x):
    return mp.hyp1f1(-n, c, x)


def mass_bisect(n, l, alpha, m=1):
    xi = mp.sqrt((l + mp.mpf(1) / 2) ** 2 - mp.mpf(alpha) ** 2 / 4)
    N = n + mp.mpf(1) / 2 + xi
    f = lambda M: M * alpha / (2 * mp.sqrt(4 * m * m - M * M)) - N
    lo, hi = mp.mpf(0), mp.mpf(2 * m)
    for _ in range(300):
        mid = (lo + hi) / 2
        if f(mid) > 0:
            hi = mid
        else:
            lo = mid
    M = (lo + hi) / 2
    return xi, N, M, mp.sqrt(4 * m * m - M * M)


def rho_moment_quad(n, xi, s):
    c = 2 * xi + 1
    w = lambda r: r ** (2 * xi + 1) * mp.exp(-r) * kummer(n, c, r) ** 2
    num = mp.quad(lambda r: r ** s * w(r), [0, 1, 10, 40, mp.inf])
    den = mp.quad(w, [0, 1, 10, 40, mp.inf])
    return num / den


def raw_integral_quad(n, xi):
    c = 2 * xi + 1
    return mp.quad(lambda r: r ** (2 * xi + 1) * mp.exp(-r) * kummer(n, c, r) ** 2,
                   [0, 1, 10, 40, mp.inf])


print("lgamma(0.5)", mp.nstr(mp.loggamma(0.5), 20))
print("kummer(2,1.8660254,1)", mp.nstr(kummer(2, mp.mpf("1.8660254"), 1), 20))
print("laguerre(3,0.5,1.25)", mp.nstr(mp.laguerre(3, 0.5, 1.25), 20))
t = Fraction(0)
k, n, a = 2, 1, Fraction(3, 2)
term = Fraction(1)
for j in range(0, 3):
    if j > 0:
        term *= Fraction((-k + j - 1) * (k + 1 + j - 1) * (-n + j - 1), j * (a + 1 + j - 1) * j)
    t += term
print("3F2(2,1,1.5)", t, float(t))

for (n, l, al) in [(2, 0, 0.5), (0, 0, 0.5), (1, 1, 1.0), (3, 1, 2.25)]:
    xi, N, M, k = mass_bisect(n, l, mp.mpf(al))
    print("state", n, l, al, "xi", mp.nstr(xi, 17), "N", mp.nstr(N, 17), "M", mp.nstr(M, 17),
          "k", mp.nstr(k, 17), "2-M", mp.nstr(2 - M, 17))

for (n, l, al) in [(0, 0, 0.5), (1, 0, 0.5), (2, 0, 0.5), (3, 1, 2.25), (4, 2, 1.3)]:
    xi = mp.sqrt((l + mp.mpf(1) / 2) ** 2 - mp.mpf(al) ** 2 / 4)
    vals = [mp.nstr(rho_moment_quad(n, xi, s), 17) for s in (-2, -1, 1, 2)]
    print("moments", n, l, al, "rho^-2,-1,1,2", vals, "raw", mp.nstr(raw_integral_quad(n, xi), 17))

# larger n, where the alternating coefficient sum cancels hardest
for n in (5, 6, 7, 8):
    for xi in ("0.1", "0.45", "1.7", "3.3"):
        x = mp.mpf(xi)
        v = mp.quad(lambda r: r ** (2 * x + 1) * mp.exp(-r) * kummer(n, 2 * x + 1, r) ** 2,
                    [0, 5, 15, 40, 100, mp.inf])
        print("raw", n, xi, mp.nstr(v, 17))
