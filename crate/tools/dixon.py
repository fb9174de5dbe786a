"""Exact ordinary character table of M12 via Dixon's method.

Class-algebra structure constants are diagonalized over GF(ell) with
ell = 1321 (prime, ell ≡ 1 mod exp(G) = 1320), then character values are
lifted to exact cyclotomic integers via root-of-unity multiplicities.
The result is verified with the full orthogonality relations.
"""

from fractions import Fraction
import itertools

import group

ELL = 1321
EXP = 1320


def modinv(a, m=ELL):
    return pow(a, m - 2, m)


def find_primitive_root(m=ELL):
    fac = [2, 3, 5, 11]  # primes dividing 1320
    for w in range(2, m):
        if all(pow(w, (m - 1) // q, m) != 1 for q in fac):
            return w
    raise RuntimeError


W = find_primitive_root()


def eta(m):
    """Fixed primitive m-th root of unity mod ELL (consistent across m | 1320)."""
    assert EXP % m == 0
    return pow(W, EXP // m, ELL)


def build_class_data():
    words, classes, class_of, info = group.build()
    k = len(classes)
    reps = [c["rep"] for c in info]
    sizes = [c["size"] for c in info]
    orders = [c["order"] for c in info]

    # power maps: class index of rep^e for e in 0..order-1, plus prime maps
    def power_class(i, e):
        return class_of[group.perm_pow(reps[i], e)]

    inverse_class = [class_of[group.inv(r)] for r in reps]

    # structure constants: a[i][j][k] = #{x in Ci : x^{-1} z_k in Cj}
    # where z_k = reps[k]; equivalently #pairs (x,y) in Ci x Cj with xy = z_k.
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    for i in range(k):
        for x in classes[i]:
            xi = group.inv(x)
            for t in range(k):
                z = reps[t]
                j = class_of[group.mul(xi, z)]
                a[i][j][t] += 1
    return words, classes, class_of, reps, sizes, orders, inverse_class, power_class, a


def nullspace_mod(mat, m=ELL):
    """Basis of the right nullspace of mat (list of rows) mod m."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    A = [r[:] for r in mat]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c] % m), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        invp = modinv(A[r][c], m)
        A[r] = [(v * invp) % m for v in A[r]]
        for i in range(rows):
            if i != r and A[i][c] % m:
                f = A[i][c]
                A[i] = [(A[i][t] - f * A[r][t]) % m for t in range(cols)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = (-A[ri][fc]) % m
        basis.append(v)
    return basis


def matvec(M, v, m=ELL):
    return [sum(M[i][j] * v[j] for j in range(len(v))) % m for i in range(len(M))]


def dixon():
    (words, classes, class_of, reps, sizes, orders,
     inverse_class, power_class, a) = build_class_data()
    k = len(reps)
    # class matrices: (M_i)[t][j] = a[i][j][t]; common eigenvectors v with
    # M_i v = omega_i v give omega_i = sizes[i] * chi(g_i) / chi(1).
    Ms = [[[a[i][j][t] for j in range(k)] for t in range(k)] for i in range(k)]

    # split the common eigenspaces
    spaces = [[[1 if t == j else 0 for t in range(k)] for j in range(k)]]  # identity basis
    for i in range(1, k):
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            # restrict M_i to the span of basis: express M_i b in the basis
            imgs = [matvec(Ms[i], b) for b in basis]
            # solve basis^T x = img for each (basis vectors are rows)
            # build matrix with columns = basis vectors
            cols = len(basis)
            # eigenvalues: scan lambda, collect nullspaces of restriction - lambda I
            # restriction matrix R with imgs[j] = sum_t R[t][j] basis[t]
            Bt = [[basis[t][s] for t in range(cols)] for s in range(k)]  # k x cols
            R = []
            for j in range(cols):
                sol = solve_mod(Bt, imgs[j])
                R.append(sol)
            R = [[R[j][t] for j in range(cols)] for t in range(cols)]  # R[t][j]
            seen = 0
            for lam in range(ELL):
                shifted = [[(R[t][j] - (lam if t == j else 0)) % ELL
                            for j in range(cols)] for t in range(cols)]
                nb = nullspace_mod(shifted)
                if nb:
                    vecs = [[sum(c[t] * basis[t][s] for t in range(cols)) % ELL
                             for s in range(k)] for c in nb]
                    new_spaces.append(vecs)
                    seen += len(nb)
                    if seen == cols:
                        break
            assert seen == cols
        spaces = new_spaces
    assert all(len(b) == 1 for b in spaces) and len(spaces) == k

    # per eigenvector: omega_i and the character
    chars = []
    for (v,) in [tuple(b) for b in spaces]:
        # normalize v so that v[identity-class] coordinate pattern works out:
        # M_i v = omega_i v; read omega_i from any nonzero coordinate.
        omegas = []
        for i in range(k):
            iv = matvec(Ms[i], v)
            t0 = next(t for t in range(k) if v[t] % ELL)
            om = (iv[t0] * modinv(v[t0])) % ELL
            omegas.append(om)
        # chi(1)^2 = |G| / sum_i omega_i omega_{i*} / (sizes[i] |G|) ... use:
        # sum_i omega_i * conj pairing: sum_i (omega_i * omega_{i'} / sizes[i]) = |G|/chi(1)^2
        s = 0
        for i in range(k):
            s = (s + omegas[i] * omegas[inverse_class[i]] * modinv(sizes[i])) % ELL
        deg_sq = (95040 * modinv(s)) % ELL
        deg = next(d for d in range(1, 400) if (d * d) % ELL == deg_sq)
        vals_mod = [(omegas[i] * deg % ELL) * modinv(sizes[i]) % ELL for i in range(k)]
        chars.append((deg, vals_mod))
    chars.sort(key=lambda c: c[0])

    # lift values: chi(g_i) = sum_t c_t zeta_m^t with
    # c_t = (1/m) sum_s chi(g_i^s) eta_m^{-s t} mod ELL, 0 <= c_t <= deg.
    lifted = []
    for deg, vals_mod in chars:
        row = []
        for i in range(k):
            m = orders[i]
            em = eta(m)
            cs = []
            for t in range(m):
                tot = 0
                for s in range(m):
                    tot = (tot + vals_mod[power_class(i, s)] *
                           pow(em, (-s * t) % (ELL - 1), ELL)) % ELL
                c = (tot * modinv(m)) % ELL
                assert c <= deg, (deg, i, t, c)
                cs.append(c)
            assert sum(cs) == deg
            row.append((m, tuple(cs)))  # value = sum_t cs[t] * zeta_m^t
        lifted.append((deg, row))
    return lifted, reps, sizes, orders, inverse_class, power_class, class_of, words


def solve_mod(A, b, m=ELL):
    """Solve A x = b (A: rows x cols, full column rank) mod m."""
    rows, cols = len(A), len(A[0])
    M = [A[i][:] + [b[i]] for i in range(rows)]
    r = 0
    piv_cols = []
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] % m), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        invp = modinv(M[r][c], m)
        M[r] = [(v * invp) % m for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c] % m:
                f = M[i][c]
                M[i] = [(M[i][t] - f * M[r][t]) % m for t in range(cols + 1)]
        piv_cols.append(c)
        r += 1
    x = [0] * cols
    for ri, c in enumerate(piv_cols):
        x[c] = M[ri][cols]
    return x


if __name__ == "__main__":
    lifted, reps, sizes, orders, *_ = dixon()
    print("degrees:", [d for d, _ in lifted])
