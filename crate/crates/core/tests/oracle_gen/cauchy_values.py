"""Reference values for the Cauchy problems by numerical Laplace inversion
(mpmath, Talbot contour) of the transformed equations, independent of any
Mittag-Leffler summation."""
import mpmath as mp

mp.mp.dps = 40


def cp1(a1, a2, mu, lam, A, B, fpow, t):
    # fpow: list of (c, gamma) for f(t) = sum c t^gamma
    def F(s):
        num = A * (s ** (a1 - 1) + mu * s ** (a2 - 1)) + B * s ** (a1 - 2)
        num += sum(c * mp.gamma(g + 1) / s ** (g + 1) for c, g in fpow)
        return num / (s ** a1 + mu * s ** a2 + lam)
    return mp.invertlaplace(F, t, method='talbot')


def cp2(beta, lam, C, G, fpow, tau):
    def F(s):
        num = C * s ** (beta - 1) + G * s ** (beta - 2)
        num += sum(c * mp.gamma(g + 1) / s ** (g + 1) for c, g in fpow)
        return num / (s ** beta + lam)
    return mp.invertlaplace(F, tau, method='talbot')


cases1 = [
    (1.5, 0.5, 1.0, mp.pi ** 2, 1.0, 0.0, [], 0.4),
    (1.5, 0.5, 1.0, mp.pi ** 2, 0.5, -1.0, [(1.0, 0), (1.0, 1)], 0.7),
    (1.8, 0.3, 2.5, 40.0, 0.0, 1.0, [(2.0, 0.5)], 1.3),
    (1.2, 0.7, 0.3, 3.0, 1.0, 0.5, [], 2.0),
]
cases2 = [
    (1.2, 4.0, 1.0, 0.0, [], 0.5),
    (1.25, 9.869604401089358, 0.3, -0.7, [(1.0, 0), (2.0, 1)], 0.8),
    (1.7, 100.0, -1.0, 2.0, [(3.0, 1.5)], 1.0),
]
print("const CP1_REFERENCE: &[([f64; 6], &[(f64, f64)], f64, f64)] = &[")
for a1, a2, mu, lam, A, B, fp, t in cases1:
    v = cp1(mp.mpf(a1), mp.mpf(a2), mp.mpf(mu), mp.mpf(lam), A, B, fp, mp.mpf(t))
    print(f"    ([{a1}, {a2}, {mu}, {mp.nstr(mp.mpf(lam), 20)}, {A}, {B}], &{[(float(c), float(g)) for c, g in fp]}, {t}, {mp.nstr(v, 20)}),")
print("];")
print("const CP2_REFERENCE: &[([f64; 4], &[(f64, f64)], f64, f64)] = &[")
for beta, lam, C, G, fp, tau in cases2:
    v = cp2(mp.mpf(beta), mp.mpf(lam), C, G, fp, mp.mpf(tau))
    print(f"    ([{beta}, {lam}, {C}, {G}], &{[(float(c), float(g)) for c, g in fp]}, {tau}, {mp.nstr(v, 20)}),")
print("];")
