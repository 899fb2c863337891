"""Independent reference values computed with sympy.

Jack functions come from Gram-Schmidt in the power-sum basis, and the
operators act through rational functions cancelled by sympy rather than
through exact polynomial division.

Run: python3 oracles/sympy_oracle.py
"""
from functools import lru_cache
from itertools import product
from math import factorial
from collections import Counter

import sympy as sp

th = sp.Symbol("theta")


def partitions(k, mx=None):
    if mx is None:
        mx = k
    if k == 0:
        yield ()
        return
    for p in range(min(k, mx), 0, -1):
        for rest in partitions(k - p, p):
            yield (p,) + rest


def z(lam):
    out = 1
    for part, mult in Counter(lam).items():
        out *= part**mult * factorial(mult)
    return out


def dominated(mu, lam):
    if mu == lam:
        return False
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a > b:
            return False
    return True


def p_to_m_coeff(mu, lam):
    # brute force: count maps parts(mu) -> rows(lam) with matching sums
    count = 0
    for f in product(range(len(lam)), repeat=len(mu)):
        sums = [0] * len(lam)
        for k, i in enumerate(f):
            sums[i] += mu[k]
        count += list(sums) == list(lam)
    return count


@lru_cache(None)
def m_in_p(k):
    labels = list(partitions(k))
    A = sp.Matrix([[p_to_m_coeff(mu, lam) for lam in labels] for mu in labels])
    B = A.inv()
    return labels, {lam: {labels[j]: B[i, j] for j in range(len(labels))} for i, lam in enumerate(labels)}


def sprod(f, g):
    return sp.cancel(sum(c * g.get(l, 0) * z(l) * th ** (-len(l)) for l, c in f.items()))


@lru_cache(None)
def jack(lam):
    k = sum(lam)
    labels, mp = m_in_p(k)
    f = dict(mp[lam])
    for mu in labels:
        if dominated(mu, lam):
            pm = jack(mu)
            c = sprod(mp[lam], pm) / sprod(pm, pm)
            for l, v in pm.items():
                f[l] = f.get(l, 0) - c * v
    return {l: sp.cancel(v) for l, v in f.items() if sp.cancel(v) != 0}


def setup(n, m):
    xs = sp.symbols(f"x1:{n+1}")
    ys = sp.symbols(f"y1:{m+1}")
    return list(xs) + list(ys)


def phi(f, n, m, vs):
    def pr(r):
        return sum(v**r for v in vs[:n]) - sum(v**r for v in vs[n:]) / th
    out = 0
    for lam, c in f.items():
        t = c
        for r in lam:
            t *= pr(r)
        out += t
    return sp.expand(sp.cancel(sp.expand(out)))


def par(k, n):
    return 0 if k < n else 1


def partials(r, p, n, vs, trig):
    N = len(vs)

    def first(k, q):
        d = vs[k] * sp.diff(q, vs[k]) if trig else sp.diff(q, vs[k])
        return (-th) ** par(k, n) * d

    level = [first(k, p) for k in range(N)]
    for _ in range(1, r):
        new = []
        for i in range(N):
            acc = first(i, level[i])
            for j in range(N):
                if j == i:
                    continue
                frac = (level[i] - level[j]) / (vs[i] - vs[j])
                if trig:
                    frac = frac * (vs[i] + vs[j]) / 2
                acc -= (-th) ** (1 - par(j, n)) * frac
            new.append(sp.together(acc))
        level = new
    return level


def integral(r, p, n, vs, trig=False):
    parts = partials(r, p, n, vs, trig)
    tot = sum((-th) ** (-par(k, n)) * d for k, d in enumerate(parts))
    return sp.expand(sp.cancel(sp.together(tot)))


def show(label, value):
    print(f"{label}: {sp.factor(value)}")


def main():
    n, m = 1, 1
    vs = setup(n, m)
    sp_ = {lam: phi(jack(lam), n, m, vs) for k in range(4) for lam in partitions(k)}

    print("# trigonometric eigenvalues, n=m=1")
    for lam in [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]:
        for r in (2, 3):
            img = integral(r, sp_[lam], n, vs, trig=True)
            ratio = sp.cancel(img / sp_[lam])
            assert not ratio.free_symbols - {th}, (lam, r, ratio)
            show(f"eig {lam} r={r}", ratio)

    print("# L = L^(2) on SP_(1,1), n=m=1")
    l11 = integral(2, sp_[(1, 1)], n, vs)
    show("L SP_(1,1)", l11)
    show("SH_(1,1)", sp.expand(sp_[(1, 1)] - l11 / 2))

    print("# bilinear form (P_mu, P_lam) on n=m=1, degree 2")
    for mu in [(2,), (1, 1)]:
        for lam in [(2,), (1, 1)]:
            acc = 0
            for nu, c in jack(mu).items():
                q = sp_[lam]
                for r in nu:
                    q = integral(r, q, n, vs)
                acc += c * q
            show(f"form {mu} {lam}", sp.cancel(acc))

    print("# trig eigenvalues, (n,m)=(2,1)")
    vs21 = setup(2, 1)
    for lam in [(1,), (2,), (1, 1), (2, 1)]:
        f = phi(jack(lam), 2, 1, vs21)
        for r in (2, 3):
            ratio = sp.cancel(integral(r, f, 2, vs21, trig=True) / f)
            assert not ratio.free_symbols - {th}
            show(f"eig21 {lam} r={r}", ratio)


if __name__ == "__main__":
    main()
