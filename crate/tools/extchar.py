"""Eigenvalue multiplicities of matrices over GF(q), q = p^t, without ever
building matrix arithmetic over the big splitting field.

For a matrix R over F0 = GF(q) and an element of p'-order m, x^m - 1 factors
over F0 into one irreducible f_O per orbit O of multiplication by q on Z/m
(relative to a chosen root lambda of order m in GF(q^k), k = ord of q mod m).
The F0-nullity of f_O(R) is |O| times the common multiplicity of the
eigenvalues {lambda^a : a in O}.

Matrices over F0 are stored as coefficient tensors of shape (n, n, t) with
entries mod p.
"""

import numpy as np

from gf import SmallField


# ---------- polynomials over a SmallField (lists of codes, low -> high) ----------

def ptrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def pmul(f, g, F):
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return ptrim(out)


def pmod(f, g, F):
    f = list(f)
    dg = len(g) - 1
    inv_lead = F.inv(g[-1])
    while len(f) - 1 >= dg and f:
        c = F.mul(f[-1], inv_lead)
        shift = len(f) - 1 - dg
        for i, b in enumerate(g):
            f[shift + i] = F.add(f[shift + i], F.neg(F.mul(c, b)))
        ptrim(f)
        if not f:
            break
    return f


def ppowmod(f, e, g, F):
    r = [1]
    b = pmod(f, g, F)
    while e:
        if e & 1:
            r = pmod(pmul(r, b, F), g, F)
        b = pmod(pmul(b, b, F), g, F)
        e >>= 1
    return r


def find_ext_modpoly(F, k):
    """Deterministic monic irreducible of degree k over F (lowest coefficient
    codes in lexicographic order). Returned as full coefficient list (monic)."""
    if k == 1:
        return [0, 1]

    def irreducible(g):
        x = [0, 1]
        if ppowmod(x, F.q ** k, g, F) != pmod(x, g, F):
            return False
        for d in range(1, k):
            if k % d == 0 and ppowmod(x, F.q ** d, g, F) == pmod(x, g, F):
                return False
        return True

    # enumerate tails in lex order of code tuples
    def rec(tail):
        if len(tail) == k:
            g = list(tail) + [1]
            return g if irreducible(g) else None
        for c in range(F.q):
            r = rec(tail + [c])
            if r is not None:
                return r
        return None

    g = rec([])
    assert g is not None
    return g


class ExtField:
    """GF(q^k) as polynomials over a SmallField F modulo modpoly."""

    def __init__(self, F, k):
        self.F = F
        self.k = k
        self.q = F.q ** k
        self.modpoly = find_ext_modpoly(F, k)

    def one(self):
        return [1]

    def embed(self, code):
        return [code] if code else []

    def mul(self, a, b):
        return pmod(pmul(a, b, self.F), self.modpoly, self.F)

    def add(self, a, b):
        out = [0] * max(len(a), len(b))
        for i, c in enumerate(a):
            out[i] = c
        for i, c in enumerate(b):
            out[i] = self.F.add(out[i], c)
        return ptrim(out)

    def neg(self, a):
        return [self.F.neg(c) for c in a]

    def pow(self, a, e):
        r = [1]
        b = a
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def element_order(self, a):
        o = 1
        b = a
        while b != [1]:
            b = self.mul(b, a)
            o += 1
            assert o <= self.q
        return o

    def root_of_order(self, m):
        """Deterministic element of multiplicative order m."""
        assert (self.q - 1) % m == 0
        if m == 1:
            return [1]
        e = (self.q - 1) // m
        cand = 0
        while True:
            cand += 1
            assert cand < self.q
            # enumerate field elements deterministically: cand -> coefficient
            # codes in base |F|
            digits = []
            c = cand
            while c:
                digits.append(c % self.F.q)
                c //= self.F.q
            a = ptrim([d for d in digits])
            if not a:
                continue
            b = self.pow(a, e)
            if b and b != [1] and self.element_order(b) == m:
                return b


# ---------- matrices over F0 as (n, n, t) coefficient tensors ----------

def ext_from_codes(A, F):
    n = A.shape[0]
    T = np.zeros((n, n, F.t), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            T[i, j] = F.decode(int(A[i, j]))
    return T


def reduction_matrix(F):
    """RED[u, v]: coefficient of x^v in the reduction of x^u, u < 2t-1."""
    t = F.t
    RED = np.zeros((2 * t - 1, t), dtype=np.int64)
    for u in range(t):
        RED[u, u] = 1
    for u in range(t, 2 * t - 1):
        # x^u = x^(u-t) * x^t = x^(u-t) * red poly
        for i, c in enumerate(F.red):
            if c:
                RED[u] = (RED[u] + c * RED[u - t + i]) % F.p
    return RED


def ext_matmul(A, B, F):
    p, t = F.p, F.t
    n, m = A.shape[0], B.shape[1]
    tmp = np.zeros((n, m, 2 * t - 1), dtype=np.int64)
    for a in range(t):
        for b in range(t):
            tmp[:, :, a + b] = (tmp[:, :, a + b] + A[:, :, a] @ B[:, :, b]) % p
    RED = reduction_matrix(F)
    return np.tensordot(tmp, RED, axes=([2], [0])) % p


def ext_eye(n, F):
    E = np.zeros((n, n, F.t), dtype=np.int64)
    E[np.arange(n), np.arange(n), 0] = 1
    return E


def ext_scalar_mat(code, n, F):
    E = np.zeros((n, n, F.t), dtype=np.int64)
    d = F.decode(code)
    for i in range(n):
        E[i, i] = d
    return E


def ext_poly_mat(coeffs, A, F):
    """coeffs: codes low -> high; Horner."""
    n = A.shape[0]
    R = np.zeros((n, n, F.t), dtype=np.int64)
    for c in reversed(coeffs):
        R = ext_matmul(R, A, F)
        R[np.arange(n), np.arange(n)] = (
            R[np.arange(n), np.arange(n)] + F.decode(c)) % F.p
    return R


def scalar_row_mul(code, R, F):
    """Multiply every entry of rows R (shape (..., t)) by the scalar code."""
    t = F.t
    Mf = np.zeros((t, t), dtype=np.int64)
    x = 1  # code of x^0
    for i in range(t):
        Mf[i] = F.decode(F.mul(code, x))
        x = F.mul(x, F.encode([0, 1][:t] if t > 1 else [0]))  # times x
    return np.tensordot(R, Mf, axes=([R.ndim - 1], [0])) % F.p


def ext_rank(A, F):
    """Rank over F0 of matrix A given as (r, c, t) tensor."""
    p, t = F.p, F.t
    A = A.copy() % p
    r, c, _ = A.shape
    # precompute multiplication matrices lazily
    row = 0
    for col in range(c):
        if row >= r:
            break
        pr = None
        for i in range(row, r):
            if A[i, col].any():
                pr = i
                break
        if pr is None:
            continue
        if pr != row:
            A[[row, pr]] = A[[pr, row]]
        code = F.encode([int(x) for x in A[row, col]])
        A[row] = scalar_row_mul(F.inv(code), A[row], F)
        for i in range(r):
            if i != row and A[i, col].any():
                fcode = F.encode([int(x) for x in A[i, col]])
                A[i] = (A[i] - scalar_row_mul(fcode, A[row], F)) % p
        row += 1
    return row


def eigen_multiplicities(R, m, F):
    """R: (n, n, t) matrix over F0 with R^m = 1, m coprime to p.
    Returns dict a -> multiplicity of lambda^a, for a deterministic root
    lambda of order m in the splitting field."""
    n = R.shape[0]
    q = F.q
    k = 1
    while (q ** k - 1) % m != 0:
        k += 1
    E = ExtField(F, k)
    lam = E.root_of_order(m)
    # orbits of multiplication by q on Z/m
    seen = set()
    mult = {}
    for a in range(m):
        if a in seen:
            continue
        orbit = []
        b = a
        while b not in orbit:
            orbit.append(b)
            b = (b * q) % m
        seen.update(orbit)
        # f_O = prod (x - lam^b) over E, coefficients must drop to F0
        f = [E.one()]
        for b in orbit:
            root = E.pow(lam, b)
            f = [E.add(lo, hi) for lo, hi in
                 zip([E.mul(E.neg(root), cf) for cf in f] + [[]],
                     [[]] + f)]
        codes = []
        for cf in f:
            assert len(cf) <= 1, "factor coefficients not in the base field"
            codes.append(cf[0] if cf else 0)
        N = ext_poly_mat(codes, R, F)
        nullity = n - ext_rank(N, F)
        assert nullity % len(orbit) == 0, (m, a, nullity, len(orbit))
        c = nullity // len(orbit)
        for b in orbit:
            mult[b] = c
    assert sum(mult.values()) == n, (m, mult, n)
    return mult
