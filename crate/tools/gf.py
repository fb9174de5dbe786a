"""Finite-field linear algebra helpers for the Brauer-table computation.

Prime fields use numpy int64 matrices mod p. Small extension fields GF(p^t)
are handled with integer element codes (base-p digit vectors) and lookup
tables; extensions of those (for eigenvalue work) use scalar polynomial
arithmetic, which is cheap at these sizes.
"""

import numpy as np
from functools import lru_cache


# ---------- GF(p) matrices ----------

def rref(A, p):
    """Reduced row echelon form. Returns (R, pivot_cols)."""
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    piv = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = (A[r] * pow(int(A[r, c]), p - 2, p)) % p
        mask = np.nonzero(A[:, c])[0]
        mask = mask[mask != r]
        A[mask] = (A[mask] - np.outer(A[mask, c], A[r])) % p
        piv.append(c)
        r += 1
    return A[:r], piv


def nullspace(A, p):
    """Basis (rows) of the right nullspace of A mod p."""
    R, piv = rref(A, p)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for ri, pc in enumerate(piv):
            basis[i, pc] = (-R[ri, fc]) % p
    return basis


def rank(A, p):
    return rref(A, p)[0].shape[0]


def inverse(A, p):
    n = A.shape[0]
    R, piv = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
    assert piv == list(range(n)), "singular matrix"
    return R[:, n:]


def mat_mul(A, B, p):
    # chunked to keep int64 sums below overflow (p < 2^16, dims < 2^31 fine)
    return (A @ B) % p


def poly_of_matrix(coeffs, A, p):
    """coeffs[i] x^i evaluated at A (Horner)."""
    n = A.shape[0]
    R = np.zeros((n, n), dtype=np.int64)
    for c in reversed(coeffs):
        R = (mat_mul(R, A, p) + int(c) % p * np.eye(n, dtype=np.int64)) % p
    return R


def min_poly_of_vector(A, v, p):
    """Monic generator of {f : v f(A) = 0} for the row vector v (acting on the
    right). Coefficient list low -> high; Krylov iteration with combo tracking."""
    rows = []        # echelon (not reduced) rows
    piv_of = []
    combos = []      # combos[r][i]: coefficient of v A^i in rows[r]
    cur = np.array(v, dtype=np.int64) % p
    k = 0
    while True:
        w = cur.copy()
        combo = np.zeros(k + 1, dtype=np.int64)
        combo[k] = 1
        for row, pc, rc in zip(rows, piv_of, combos):
            f = int(w[pc])
            if f:
                w = (w - f * row) % p
                combo[:len(rc)] = (combo[:len(rc)] - f * rc) % p
        nz = np.nonzero(w)[0]
        if nz.size == 0:
            # sum combo[i] v A^i = 0 with combo[k] = 1: this is the min poly
            return [int(c) for c in combo]
        pc = int(nz[0])
        f = pow(int(w[pc]), p - 2, p)
        rows.append((w * f) % p)
        piv_of.append(pc)
        combos.append((combo * f) % p)
        k += 1
        cur = (cur @ A) % p


# ---------- extension field scalars GF(p^t), code-based ----------

class SmallField:
    """GF(p^t) with elements encoded as ints (base-p digit vectors, little-endian),
    defined by a monic irreducible modpoly (list of t coefficients of x^t = ...)."""

    def __init__(self, p, modpoly_low):
        # modpoly_low: coefficients c so that x^t = sum c[i] x^i
        self.p = p
        self.t = len(modpoly_low)
        self.q = p ** self.t
        self.red = [c % p for c in modpoly_low]

    def encode(self, digits):
        v = 0
        for d in reversed(digits):
            v = v * self.p + (d % self.p)
        return v

    def decode(self, code):
        p, t = self.p, self.t
        return [(code // p ** i) % p for i in range(t)]

    def add(self, a, b):
        return self.encode([x + y for x, y in zip(self.decode(a), self.decode(b))])

    def neg(self, a):
        return self.encode([-x for x in self.decode(a)])

    def mul(self, a, b):
        p, t = self.p, self.t
        da, db = self.decode(a), self.decode(b)
        prod = [0] * (2 * t - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for k in range(2 * t - 2, t - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i, r in enumerate(self.red):
                    prod[k - t + i] = (prod[k - t + i] + c * r) % p
        return self.encode(prod[:t])

    def pow(self, a, e):
        r = 1
        b = a
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def inv(self, a):
        assert a != 0
        return self.pow(a, self.q - 2)

    def element_order(self, a):
        assert a != 0
        o = 1
        b = a
        while b != 1:
            b = self.mul(b, a)
            o += 1
        return o


def find_irreducible(p, t, rng_seed=1):
    """Deterministic monic irreducible of degree t over GF(p): smallest by
    lexicographic coefficient order, via nullspace-free trial: test
    irreducibility by gcd(x^(p^d) - x, f) for d | t, d < t."""
    from itertools import product
    for tail in product(range(p), repeat=t):
        # f = x^t - sum tail[i] x^i ; represent low coeffs of x^t
        F = SmallField(p, list(tail))
        # f irreducible iff x^(p^t) = x in GF and x^(p^d) != x for proper d
        X = F.encode([0, 1] + [0] * (t - 2)) if t >= 2 else F.encode([0])
        if t == 1:
            return F
        ok = F.pow(X, p ** t) == X
        if not ok:
            continue
        good = True
        for d in range(1, t):
            if t % d == 0 and F.pow(X, p ** d) == X:
                good = False
                break
        if good:
            return F
    raise RuntimeError("no irreducible found")


@lru_cache(maxsize=None)
def small_field(p, t):
    return find_irreducible(p, t)
