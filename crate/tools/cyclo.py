"""Exact cyclotomic arithmetic over the Zumbroich basis (Fraction coefficients).

Mirror of the Rust implementation; used to canonicalize exported values and to
verify the table against the paper-style linear forms before the Rust side
exists.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def factorize(n):
    fac = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            fac.append((d, d ** e))
        d += 1
    if n > 1:
        fac.append((n, n))
    return tuple(fac)


def phi(n):
    r = n
    for p, _ in factorize(n):
        r = r // p * (p - 1)
    return r


def moebius(n):
    r = 1
    for p, q in factorize(n):
        if q != p:
            return 0
        r = -r
    return r


@lru_cache(maxsize=None)
def forbidden_residues(n):
    """Per prime power q || n: set of residues mod q excluded from the basis."""
    out = []
    for p, q in factorize(n):
        m = n // q
        if p == 2:
            bad = frozenset((m * j) % q for j in range(q // 2, q))
        else:
            half = (q // p - 1) // 2
            bad = frozenset((m * j) % q for j in range(-half, half + 1))
        out.append((p, q, bad))
    return out


def in_basis(n, e):
    return all((e % q) not in bad for _, q, bad in forbidden_residues(n))


@lru_cache(maxsize=None)
def zumbroich_basis(n):
    b = tuple(e for e in range(n) if in_basis(n, e))
    assert len(b) == phi(n), (n, b)
    return b


def reduce_exponent(n, e):
    """ζ_n^e as a dict basis-exponent -> ±1 coefficient."""
    e %= n
    for p, q, bad in forbidden_residues(n):
        if (e % q) in bad:
            out = {}
            for j in range(1, p):
                for e2, c in reduce_exponent(n, e + j * (n // p)).items():
                    out[e2] = out.get(e2, 0) - c
                    if out[e2] == 0:
                        del out[e2]
            return out
    return {e: 1}


class Cyc:
    """conductor n (never 2 mod 4), coeffs: basis exponent -> Fraction, minimal."""

    __slots__ = ("n", "c")

    def __init__(self, n, c, normalize=True):
        self.n = n
        self.c = {e: Fraction(v) for e, v in c.items() if v != 0}
        if normalize:
            self._minimize()

    @staticmethod
    def rat(v):
        v = Fraction(v)
        return Cyc(1, {0: v} if v else {}, normalize=False)

    @staticmethod
    def root(n, e=1):
        """ζ_n^e, fully normalized."""
        e %= n
        g = gcd(e, n)
        n, e = n // g, e // g
        sign = 1
        if n % 4 == 2:
            # ζ_{2m} = -ζ_m^{(m+1)//2} for odd m
            m = n // 2
            sign = -1 if e % 2 else 1
            e = (e * ((m + 1) // 2)) % m
            n = m
        c = {}
        for e2, s in reduce_exponent(n, e).items():
            c[e2] = c.get(e2, 0) + sign * s
        return Cyc(n, c)

    def is_rational(self):
        return self.n == 1

    def rational_value(self):
        assert self.n == 1
        return self.c.get(0, Fraction(0))

    def _embed_coeffs(self, new_n):
        """coeff map of self in the Zumbroich basis of Q(ζ_new_n)."""
        assert new_n % self.n == 0
        f = new_n // self.n
        out = {}
        for e, v in self.c.items():
            for e2, s in reduce_exponent(new_n, e * f).items():
                out[e2] = out.get(e2, Fraction(0)) + s * v
                if out[e2] == 0:
                    del out[e2]
        return out

    def galois_raw(self, j):
        """ζ -> ζ^j without re-minimization (j coprime to n keeps conductor)."""
        assert gcd(j, self.n) == 1
        out = {}
        for e, v in self.c.items():
            for e2, s in reduce_exponent(self.n, e * j).items():
                out[e2] = out.get(e2, Fraction(0)) + s * v
                if out[e2] == 0:
                    del out[e2]
        return Cyc(self.n, out, normalize=False)

    def _minimize(self):
        if not self.c:
            self.n = 1
            return
        if self.n == 1:
            return
        n = self.n
        divisors = sorted(d for d in range(1, n) if n % d == 0 and d % 4 != 2)
        for m in divisors:
            js = [j for j in range(1, n) if gcd(j, n) == 1 and (j - 1) % m == 0]
            if all(self.galois_raw(j).c == self.c for j in js):
                # element lies in Q(ζ_m): solve for its coefficients there
                basis_m = zumbroich_basis(m)
                cols = []
                for e in basis_m:
                    cols.append(Cyc(m, {e: 1}, normalize=False)._embed_coeffs(n))
                sol = _solve_sparse(zumbroich_basis(n), cols, self.c)
                self.n = m
                self.c = {e: v for e, v in zip(basis_m, sol) if v != 0}
                return

    def __add__(self, other):
        n = lcm(self.n, other.n)
        a = self._embed_coeffs(n)
        for e, v in other._embed_coeffs(n).items():
            a[e] = a.get(e, Fraction(0)) + v
            if a[e] == 0:
                del a[e]
        return Cyc(n, a)

    def __neg__(self):
        return Cyc(self.n, {e: -v for e, v in self.c.items()}, normalize=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        n = lcm(self.n, other.n)
        a = self._embed_coeffs(n)
        b = other._embed_coeffs(n)
        out = {}
        for e1, v1 in a.items():
            for e2, v2 in b.items():
                for e3, s in reduce_exponent(n, e1 + e2).items():
                    out[e3] = out.get(e3, Fraction(0)) + s * v1 * v2
                    if out[e3] == 0:
                        del out[e3]
        return Cyc(n, out)

    def scale(self, r):
        r = Fraction(r)
        if r == 0:
            return Cyc.rat(0)
        return Cyc(self.n, {e: v * r for e, v in self.c.items()}, normalize=False)

    def galois(self, j):
        assert gcd(j, self.n) == 1
        return self.galois_raw(j)

    def trace(self):
        """Trace to Q over the element's own field Q(ζ_n)."""
        t = Fraction(0)
        for e, v in self.c.items():
            t += v * root_trace(self.n, e)
        return t

    def trace_in(self, n):
        assert n % self.n == 0
        return self.trace() * phi(n) // phi(self.n)

    def __eq__(self, other):
        return self.n == other.n and self.c == other.c

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.c.items()))))

    def __repr__(self):
        return f"Cyc({self.n},{self.c})"

    def to_string(self):
        if self.n == 1:
            return str(self.c.get(0, Fraction(0)))
        parts = []
        for e in sorted(self.c):
            v = self.c[e]
            atom = f"E({self.n})" + (f"^{e}" if e != 1 else "")
            if e == 0:
                term = str(abs(v))
            elif abs(v) == 1:
                term = atom
            else:
                term = f"{abs(v)}*{atom}"
            parts.append(("-" if v < 0 else "+", term))
        s = ("" if parts[0][0] == "+" else "-") + parts[0][1]
        for sign, term in parts[1:]:
            s += sign + term
        return s


def lcm(a, b):
    return a // gcd(a, b) * b


def root_trace(n, m):
    g = gcd(m % n, n)
    return Fraction(moebius(n // g) * phi(n), phi(n // g))


def _solve_sparse(row_index, cols, target):
    """Solve sum_j x_j cols[j] = target; cols/target are sparse dicts over
    the exponents in row_index. Exact, asserts consistency."""
    idx = {e: i for i, e in enumerate(row_index)}
    rows = len(row_index)
    ncols = len(cols)
    M = [[Fraction(0)] * (ncols + 1) for _ in range(rows)]
    for j, col in enumerate(cols):
        for e, v in col.items():
            M[idx[e]][j] = v
    for e, v in target.items():
        M[idx[e]][ncols] = v
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pv = M[r][c]
        M[r] = [v / pv for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [M[i][t] - f * M[r][t] for t in range(ncols + 1)]
        piv_cols.append(c)
        r += 1
    for i in range(r, rows):
        assert M[i][ncols] == 0, "inconsistent descent system"
    x = [Fraction(0)] * ncols
    for ri, c in enumerate(piv_cols):
        x[c] = M[ri][ncols]
    return x


def from_multiplicities(m, cs):
    """sum_t cs[t] * ζ_m^t."""
    total = Cyc.rat(0)
    for t, c in enumerate(cs):
        if c:
            total = total + Cyc.root(m, t).scale(c)
    return total


if __name__ == "__main__":
    # quick self-checks
    z3 = Cyc.root(3)
    assert (z3 + z3 * z3).rational_value() == -1
    z8 = Cyc.root(8)
    assert (z8 * z8) == Cyc.root(4)
    assert Cyc.root(11).trace() == -1
    assert root_trace(5, 1) == -1 and root_trace(12, 0) == 4
    s = sum((Cyc.root(8, 2).galois(j) for j in (3, 5, 7)), Cyc.root(8, 2))
    assert s.rational_value() == Cyc.root(8, 2).trace() == 0
    x = Cyc.root(5) + Cyc.rat(Fraction(7, 2))
    assert Cyc.root(5, 2) * x == x * Cyc.root(5, 2)
    print("cyclo ok")
