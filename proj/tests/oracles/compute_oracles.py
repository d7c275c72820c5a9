"""Independent reference values for the test suite.

Plain numpy / mpmath re-implementations, sharing no code with the library.
Run once; the printed numbers are frozen in oracles.hpp.
"""
import math

import mpmath as mp
import numpy as np

mp.mp.dps = 400
PHI = (1 + mp.sqrt(5)) / 2


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def nearest(x):
    return abs(x - mp.nint(x))


def expand(rules, start, times):
    w = [start]
    for _ in range(times):
        w = [y for x in w for y in rules[x]]
    return w


def eps_dual(points, eps, window):
    d = math.asin(eps / 2) / math.pi
    iv = [(0.0, window)]
    for a in sorted({abs(x) for x in points if x != 0}):
        nxt = []
        for lo, hi in iv:
            for k in range(math.ceil(lo * a - d), math.floor(hi * a + d) + 1):
                l, h = max(lo, (k - d) / a), min(hi, (k + d) / a)
                if h > l:
                    nxt.append((l, h))
        iv = nxt
    mids = [(l + h) / 2 for l, h in iv]
    gaps = [mids[0]] + [b - a for a, b in zip(mids, mids[1:])] + [window - mids[-1]]
    return iv, max(gaps)


def obstruction():
    levels = {3: 3, 5: 15, 7: 63, 9: 255}
    print("# golden obstruction, beta = 1/sqrt5")
    for k, n in levels.items():
        vs = [fib(n - m) * PHI ** (n + 1) for m in (1, 2)]
        print(k, [mp.nstr(nearest(v / mp.sqrt(5)), 14) for v in vs])
    worst_late = 1
    for a in range(-3, 4):
        for b in range(-3, 4):
            if a == 0 and b == 0:
                continue
            beta = (a + b * PHI) / mp.sqrt(5)
            row = [max(nearest(beta * fib(n - m) * PHI ** (n + 1)) for m in (1, 2)) for n in levels.values()]
            worst_late = min(worst_late, min(row[2:]))
    print("# golden candidates, smallest max-distance over kappa in {7, 9}:", mp.nstr(worst_late, 14))
    worst = 1
    for a in range(-3, 4):
        for b in range(-3, 4):
            if b == 0:
                continue
            beta = a + b * PHI
            for n in levels.values():
                worst = min(worst, min(nearest(beta * fib(n - m) * fib(n + 2)) for m in (1, 2)))
    print("# unit, non-integral a+b*phi, smallest min-distance:", mp.nstr(worst, 14))


def eps_duals():
    phi = float(PHI)
    w = expand({0: [0, 1], 1: [0]}, 0, 20)[:999]
    pos = np.concatenate([[0], np.cumsum([phi if c == 0 else 1.0 for c in w])])
    iv, gap = eps_dual(pos, 0.5, 10)
    print("# golden eps-dual (1000 vertices): intervals", len(iv), "maxGap", repr(gap))
    lengths = abc_lengths(2)
    ww = expand({0: [0, 1, 2, 0], 1: [0, 1, 1], 2: [0, 2]}, 0, 9)
    for n in (100, 1000, 10000):
        pos = np.concatenate([[0], np.cumsum(lengths[ww[: n - 1]])])
        print("# abc xi3 eps-dual", n, "maxGap", repr(eps_dual(pos, 0.5, 10)[1]))


def abc_lengths(index):
    m = np.array([[2, 1, 1], [1, 2, 0], [1, 0, 1]], float)
    ev, vec = np.linalg.eig(m)
    order = np.argsort(-ev)
    vec = vec[:, order] / vec[1, order]
    return 1 + vec[:, index] / 8


def abc_statistics():
    w = np.array(expand({0: [0, 1, 2, 0], 1: [0, 1, 1], 2: [0, 2]}, 0, 12), dtype=np.int8)
    prefix = np.zeros((len(w) + 1, 3), np.int64)
    for c in range(3):
        prefix[1:, c] = np.cumsum(w == c)

    def pops(p, n):
        d = p[n:] - p[:-n]
        return np.unique(d[:, 0] * 10**12 + d[:, 1] * 10**6 + d[:, 2])

    print("# abc spacing counts", [len(pops(prefix, n)) for n in (100, 1000, 10000, 100000)])
    for index in (1, 2):
        f = np.abs(prefix[: 10**6 + 1] @ (abc_lengths(index) - 1))
        sup = np.maximum.accumulate(f)
        print("# cochain xi%d running sup" % (index + 1), [repr(sup[n]) for n in (100, 1000, 10000, 100000, 500000, 1000000)])
    lengths = abc_lengths(2)
    head = prefix[:200001]
    keys = set()
    for m in range(1, 10001):
        keys.update(int(k) for k in pops(head, m))
        if m in (100, 1000, 10000):
            ks = np.array(sorted(keys))
            vals = np.sort((ks // 10**12) * lengths[0] + (ks // 10**6 % 10**6) * lengths[1] + (ks % 10**6) * lengths[2])
            d = np.diff(vals)
            print("# abc xi3 union gap", m, repr(d[d > 1e-9].min()))
    print("# populations of length 10^4 inside the 2e5 prefix", len(pops(head, 10000)))


if __name__ == "__main__":
    obstruction()
    eps_duals()
    abc_statistics()
