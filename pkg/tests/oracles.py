"""Slow, independent reference implementations used as test oracles.

Nothing here touches the package's table-driven field, its CRT storage or
its skew multiplication; ring elements are dicts mapping a frozenset of
variable indices (the monomial prod u_e) to a field int.
"""

from __future__ import annotations

from itertools import combinations


def gf_mul(a: int, b: int, modulus: int) -> int:
    """Schoolbook shift-and-add multiply with reduction after every shift."""
    deg = modulus.bit_length() - 1
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> deg & 1:
            a ^= modulus
    return r


def gf_pow(a: int, e: int, modulus: int) -> int:
    r = 1
    for _ in range(e):
        r = gf_mul(r, a, modulus)
    return r


def gf_beta_power(i: int, modulus: int) -> int:
    """y^i, computed by repeated multiplication by y."""
    return gf_pow(0b10, i, modulus)


def gf_frobenius(a: int, k: int, modulus: int) -> int:
    """a^(4^k) by plain repeated multiplication."""
    return gf_pow(a, 4**k, modulus) if a else 0


def multiplicative_order(a: int, modulus: int) -> int:
    x, n = a, 1
    while x != 1:
        x = gf_mul(x, a, modulus)
        n += 1
    return n


def is_reducible_bruteforce(f: int) -> bool:
    """Try every product of two polynomials of positive degree."""
    d = f.bit_length() - 1
    for a in range(2, 1 << d):
        for b in range(2, 1 << d):
            if (a.bit_length() - 1) + (b.bit_length() - 1) != d:
                continue
            r = 0
            x, y = a, b
            while y:
                if y & 1:
                    r ^= x
                x <<= 1
                y >>= 1
            if r == f:
                return True
    return False


# monomial-basis ring --------------------------------------------------


class MonoRing:
    def __init__(self, k: int, s: int, modulus: int):
        self.k, self.s, self.modulus = k, s, modulus

    def clean(self, a: dict) -> dict:
        return {m: c for m, c in a.items() if c}

    def add(self, a: dict, b: dict) -> dict:
        out = dict(a)
        for m, c in b.items():
            out[m] = out.get(m, 0) ^ c
        return self.clean(out)

    def mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = m1 | m2  # u_e^2 = u_e
                out[m] = out.get(m, 0) ^ gf_mul(c1, c2, self.modulus)
        return self.clean(out)

    def theta(self, a: dict) -> dict:
        """a -> a^(4^k) on coefficients and u_e -> u_e + 1, expanded."""
        out: dict = {}
        for m, c in a.items():
            fc = gf_frobenius(c, self.k, self.modulus)
            mlist = sorted(m)
            for r in range(len(mlist) + 1):
                for sub in combinations(mlist, r):
                    key = frozenset(sub)
                    out[key] = out.get(key, 0) ^ fc
        return self.clean(out)

    def const(self, c: int) -> dict:
        return self.clean({frozenset(): c})

    def var(self, e: int) -> dict:
        return {frozenset([e]): 1}

    def evaluate(self, a: dict, point: dict[int, int]) -> int:
        acc = 0
        for m, c in a.items():
            if all(point[e] for e in m):
                acc ^= c
        return acc

    def to_crt(self, a: dict, tuples) -> list[int]:
        """Substitute u_e := 1 - r_e for each T_i = (r_1..r_s)."""
        return [self.evaluate(a, {e + 1: 1 - r for e, r in enumerate(t)}) for t in tuples]

    def from_coeffs(self, b, tuples) -> dict:
        """sum_j b_j U_j with U_j the monomial whose exponent tuple is T_j."""
        out: dict = {}
        for bj, t in zip(b, tuples):
            m = frozenset(e + 1 for e, r in enumerate(t) if r)
            out[m] = out.get(m, 0) ^ bj
        return self.clean(out)


def skew_mul_mono(R: MonoRing, f: list[dict], g: list[dict]) -> list[dict]:
    """sum_{i,j} f_i theta^i(g_j) x^(i+j) with theta applied i times literally."""
    out = [dict() for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            tb = b
            for _ in range(i):
                tb = R.theta(tb)
            out[i + j] = R.add(out[i + j], R.mul(a, tb))
    return out


def right_rem_mono(R: MonoRing, f: list[dict], g: list[dict]) -> list[dict]:
    """Remainder of f under right division by monic g, by long division."""
    r = [dict(c) for c in f]
    dg = len(g) - 1
    for top in range(len(r) - 1, dg - 1, -1):
        c = r[top]
        if not c:
            continue
        d = top - dg
        term = skew_mul_mono(R, [dict() for _ in range(d)] + [c], g)
        for i, t in enumerate(term):
            r[i] = R.add(r[i], t)
    return r[:dg]


def min_hamming_bruteforce(strings) -> int:
    strings = list(strings)
    best = None
    for i in range(len(strings)):
        for j in range(len(strings)):
            if i != j and strings[i] != strings[j]:
                d = sum(1 for x, y in zip(strings[i], strings[j]) if x != y)
                best = d if best is None else min(best, d)
    return best
