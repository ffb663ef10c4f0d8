"""Independent high-precision oracle for the frozen test values.

Uses mpmath only; nothing here shares code with the C++ implementation.
Run: python3 tests/oracles/frozen_values.py
"""
from mpmath import mp, mpf, zeta, loggamma, log, pi, euler, glaisher, tanh, cosh

mp.dps = 40


def zp_minus1():
    return mpf(1) / 12 - log(glaisher)


def barnes_prime0_commensurate(p, q, x):
    """d/ds zeta_B(s; p, q, x) at s=0 for positive integers p, q.

    Groups the lattice sum by k = p*m + q*n and reduces each residue class
    mod p*q to Hurwitz zeta functions.
    """
    L = p * q
    total = mpf(0)
    zb0 = mpf(0)
    # m = q*i + u, n = p*j + v with 0 <= u < q, 0 <= v < p
    # p*m + q*n = L*(i+j) + p*u + q*v; number of (i,j) with i+j=t is t+1, so
    # zeta_B(s) = L^{-s} sum_{u,v} [zeta_H(s-1,c) + (1-c) zeta_H(s,c)], c = (p*u + q*v + x)/L
    for u in range(q):
        for v in range(p):
            c = (p * u + q * v + x) / mpf(L)
            zb0 += zeta(-1, c) + (1 - c) * zeta(0, c)
            total += zeta(-1, c, 1) + (1 - c) * zeta(0, c, 1)
    return total - log(L) * zb0


def orbifold(w):
    s = sum(j * loggamma(mpf(j) / w) for j in range(1, w))
    return zp_minus1() / w - log(w) / (12 * w) - s / w + (w - 1) * log(2 * pi) / 4


def logdet_orbifold(w, eta):
    s = sum(j * loggamma(mpf(j) / w) for j in range(1, w))
    return (-(w + mpf(1) / w) / 6 * log(tanh(eta / 2)) + (3 - 8 * cosh(eta)) / (12 * w)
            - 2 * zp_minus1() / w + 2 * s / w - w * log(2 * pi) / 2 + (w + 3 + mpf(2) / w) * log(w) / 6)


def poincare(eta):
    t = tanh(eta / 2)
    return -log(t) / 3 - 2 * zp_minus1() + mpf(11) / 12 - mpf(4) / 3 / (1 - t * t) - log(2 * pi) / 2


def im_loggamma_taylor(p, q):
    return loggamma(mpf(p) + 1j * mpf(q)).imag


if __name__ == "__main__":
    print("zeta_R'(-1)        ", zp_minus1())
    print("log Gamma(1/2)     ", loggamma(mpf(1) / 2))
    print("psi(1/2)           ", -euler - 2 * log(2))
    print("euler              ", +euler)
    for w in [1, 2, 3, 6]:
        print(f"orbifold zeta_B'({w})", orbifold(w))
    for (p, q, x) in [(1, 1, 1), (1, 2, 1), (2, 1, 1), (1, 2, mpf(1) / 2), (2, 3, mpf(7) / 10), (1, 3, 5)]:
        print(f"barnes'({p},{q},{x})", barnes_prime0_commensurate(p, q, mpf(x)))
    print("logdet_orbifold(2,1)", logdet_orbifold(2, mpf(1)))
    print("poincare(1)        ", poincare(mpf(1)))
    print("flat_disk(1)       ", log(2) / 3 - 2 * zp_minus1() - mpf(5) / 12 - log(2 * pi) / 2)
    for (p, q) in [(1, mpf("1e-3")), (mpf("0.3"), mpf(2)), (mpf(5), mpf(40))]:
        print(f"Im logGamma({p}+{q}i)", im_loggamma_taylor(p, q))
    for (s, x) in [(mpf("-2.5"), mpf("0.3")), (mpf("3.5"), mpf(2)), (mpf("0.5"), mpf("0.1")), (mpf(-1), mpf("2.7"))]:
        print(f"hurwitz({s},{x})", zeta(s, x), "deriv", zeta(s, x, 1))
