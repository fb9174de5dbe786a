"""A small MeatAxe over prime fields: chop modules into irreducibles,
compute endomorphism rings, and rewrite modules over the endomorphism field.

Row-vector convention throughout: vectors act on the right of matrices,
submodules are row spans. Based on the Parker/Norton algorithm with the
Holt-Rees certification step.
"""

import numpy as np
import random

from gf import rref, nullspace, inverse, min_poly_of_vector, SmallField
import sympy


class Module:
    def __init__(self, p, gens):
        self.p = p
        self.gens = [np.array(g, dtype=np.int64) % p for g in gens]
        self.dim = self.gens[0].shape[0]

    def word(self, w):
        """Product of generators by index list, as a matrix."""
        A = np.eye(self.dim, dtype=np.int64)
        for i in w:
            A = (A @ self.gens[i]) % self.p
        return A


def lnull(A, p):
    """Rows spanning {v : v A = 0}."""
    return nullspace(A.T, p)


def poly_mat(coeffs, A, p):
    n = A.shape[0]
    R = np.zeros((n, n), dtype=np.int64)
    for c in reversed(coeffs):
        R = (R @ A + int(c) % p * np.eye(n, dtype=np.int64)) % p
    return R


def spin(vecs, gens, p):
    """Row span closure under right multiplication; returns RREF basis rows
    and pivot columns."""
    d = gens[0].shape[0]
    basis = np.zeros((0, d), dtype=np.int64)
    piv = []
    queue = []

    def absorb(v):
        nonlocal basis
        w = v % p
        for r, pc in enumerate(piv):
            f = int(w[pc])
            if f:
                w = (w - f * basis[r]) % p
        nz = np.nonzero(w)[0]
        if nz.size == 0:
            return False
        pc = int(nz[0])
        w = (w * pow(int(w[pc]), p - 2, p)) % p
        # keep fully reduced (RREF): clear column pc in existing rows
        if len(piv):
            col = basis[:, pc].copy()
            basis = (basis - np.outer(col, w)) % p
        basis = np.vstack([basis, w])
        piv.append(pc)
        queue.append(w)
        return True

    for v in vecs:
        absorb(v)
    while queue:
        v = queue.pop()
        for g in gens:
            absorb((v @ g) % p)
            if len(piv) == d:
                # full space: finish without draining the queue
                return basis, piv
    # sort rows by pivot for a canonical form
    order = np.argsort(piv)
    return basis[order], sorted(piv)


def sub_quotient(M, S, piv):
    """Given an invariant RREF row space S, return (submodule, quotient,
    change data) as Modules."""
    p = M.p
    d = M.dim
    s = len(piv)
    sub_gens = []
    for g in M.gens:
        img = (S @ g) % p
        coords = img[:, piv]
        assert np.array_equal((coords @ S) % p, img), "subspace not invariant"
        sub_gens.append(coords)
    nonpiv = [c for c in range(d) if c not in piv]
    B = np.vstack([S, np.eye(d, dtype=np.int64)[nonpiv]])
    Binv = inverse(B, p)
    quo_gens = []
    for g in M.gens:
        full = (((B @ g) % p) @ Binv) % p
        # rows of the invariant part only touch the first s coordinates
        assert not full[:s, s:].any(), "quotient block not clean"
        quo_gens.append(full[s:, s:])
    return Module(p, sub_gens), Module(p, quo_gens)


def random_algebra_element(M, rng, nwords=4, maxlen=6):
    p = M.p
    d = M.dim
    A = np.zeros((d, d), dtype=np.int64)
    for _ in range(nwords):
        w = [rng.randrange(len(M.gens)) for _ in range(rng.randrange(1, maxlen + 1))]
        c = rng.randrange(1, p)
        A = (A + c * M.word(w)) % p
    return A


def factor_poly(coeffs, p):
    """Irreducible factors (as low->high coeff lists) with multiplicities."""
    x = sympy.symbols("x")
    f = sum(int(c) * x ** i for i, c in enumerate(coeffs))
    _, facs = sympy.Poly(f, x, modulus=p).factor_list()
    out = []
    for g, mult in facs:
        cs = [int(c) % p for c in reversed(g.all_coeffs())]
        out.append((cs, mult))
    out.sort(key=lambda t: len(t[0]))
    return out


def chop(M, rng, depth=0):
    """Composition factors of M (with multiplicity), as a list of Modules."""
    p = M.p
    d = M.dim
    if d == 0:
        return []
    if d == 1:
        return [M]
    for attempt in range(60):
        theta = random_algebra_element(M, rng)
        v = np.array([rng.randrange(p) for _ in range(d)], dtype=np.int64)
        if not v.any():
            continue
        f = min_poly_of_vector(theta, v, p)
        factors = factor_poly(f, p)
        cert = None
        for h, mult in factors:
            N = poly_mat(h, theta, p)
            ns = lnull(N, p)
            if ns.shape[0] == 0:
                continue
            for w in ns[:4]:
                S, piv = spin([w], M.gens, p)
                if len(piv) < d:
                    sub, quo = sub_quotient(M, S, piv)
                    return chop(sub, rng, depth + 1) + chop(quo, rng, depth + 1)
            if cert is None and mult == 1 and ns.shape[0] == len(h) - 1:
                cert = (h, N)
        if cert is None:
            continue
        # every null vector of a multiplicity-one factor generates M; check the
        # transpose module to rule out submodules invisible from this side
        h, N = cert
        nst = lnull(N.T, p)
        tgens = [g.T for g in M.gens]
        St, pivt = spin([nst[0]], tgens, p)
        if len(pivt) == d:
            return [M]
        # proper transpose-submodule: its perp is a proper submodule here
        U = nullspace(St, p)
        S, piv = spin(U, M.gens, p)
        assert 0 < len(piv) < d
        sub, quo = sub_quotient(M, S, piv)
        return chop(sub, rng, depth + 1) + chop(quo, rng, depth + 1)
    raise RuntimeError(f"chop failed to decide module of dim {d}")


def good_seed(M, rng):
    """For irreducible M: (theta, h, nullbasis) with h a multiplicity-one
    irreducible factor of the min poly and nullity deg h."""
    p = M.p
    d = M.dim
    for attempt in range(80):
        theta = random_algebra_element(M, rng)
        v = np.array([rng.randrange(p) for _ in range(d)], dtype=np.int64)
        if not v.any():
            continue
        f = min_poly_of_vector(theta, v, p)
        for h, mult in factor_poly(f, p):
            if mult != 1:
                continue
            N = poly_mat(h, theta, p)
            ns = lnull(N, p)
            if ns.shape[0] == len(h) - 1:
                return theta, h, ns
    raise RuntimeError("no good seed found")


def spin_with_words(v, M):
    """Spin a single vector, recording for each basis row the word (list of
    generator indices applied to v, left to right)."""
    p = M.p
    d = M.dim
    rows = []
    words = []
    piv = []

    def reduce(w):
        w = w % p
        for row, pc in zip(rows, piv):
            f = int(w[pc])
            if f:
                w = (w - f * row) % p
        return w

    def add(vec, word):
        w = reduce(vec)
        nz = np.nonzero(w)[0]
        if nz.size == 0:
            return False
        pc = int(nz[0])
        # normalize the stored row so reduce() cancels pivots correctly; the
        # recorded word still refers to the raw vector
        rows.append((w * pow(int(w[pc]), p - 2, p)) % p)
        words.append(word)
        piv.append(pc)
        return True

    add(v, [])
    i = 0
    while i < len(rows) and len(rows) < d:
        # regenerate the actual vector for words[i] and extend
        base = v % p
        for gi in words[i]:
            base = (base @ M.gens[gi]) % p
        for gi in range(len(M.gens)):
            add((base @ M.gens[gi]) % p, words[i] + [gi])
            if len(rows) == d:
                break
        i += 1
    assert len(rows) == d, "vector does not generate"
    return words


def hom_space(M, N, rng):
    """Basis of Hom(M, N) for M irreducible; list of d_M x d_N matrices.

    Standard-basis method: a hom is determined by the image of a generating
    vector v0, and the candidate images lie in the null space of h(theta) on
    the N side, for theta a shared algebra element (same words both sides)
    with a multiplicity-one irreducible min poly factor h of full nullity."""
    p = M.p
    Bmat = np.zeros((M.dim, M.dim), dtype=np.int64)
    for attempt in range(80):
        wordsA = [[rng.randrange(len(M.gens))
                   for _ in range(rng.randrange(1, 7))] for _ in range(4)]
        coeffs = [rng.randrange(1, p) for _ in range(4)]
        thM = np.zeros((M.dim, M.dim), dtype=np.int64)
        for w, c in zip(wordsA, coeffs):
            thM = (thM + c * M.word(w)) % p
        v = np.array([rng.randrange(p) for _ in range(M.dim)], dtype=np.int64)
        if not v.any():
            continue
        f = min_poly_of_vector(thM, v, p)
        pick = None
        for hh, mult in factor_poly(f, p):
            if mult == 1:
                Nh = poly_mat(hh, thM, p)
                ns = lnull(Nh, p)
                if ns.shape[0] == len(hh) - 1:
                    pick = (hh, ns)
                    break
        if pick is None:
            continue
        hh, nsM2 = pick
        thN = np.zeros((N.dim, N.dim), dtype=np.int64)
        for w, c in zip(wordsA, coeffs):
            thN = (thN + c * N.word(w)) % p
        nsN = lnull(poly_mat(hh, thN, p), p)
        if nsN.shape[0] == 0:
            return []
        v0 = nsM2[0]
        words = spin_with_words(v0, M)
        for i, w in enumerate(words):
            x = v0 % p
            for gi in w:
                x = (x @ M.gens[gi]) % p
            Bmat[i] = x
        Binv = inverse(Bmat, p)
        # F candidate for image w in nsN: Bmat F = Img with Img rows
        # = w * same words in N
        mats = []
        for w_img in nsN:
            Img = np.zeros((M.dim, N.dim), dtype=np.int64)
            for i, wd in enumerate(words):
                x = w_img % p
                for gi in wd:
                    x = (x @ N.gens[gi]) % p
                Img[i] = x
            F = (Binv @ Img) % p
            mats.append(F)
        # valid homs: combinations with g_M F = F g_N for all generators
        resid = []
        for F in mats:
            r = []
            for gM, gN in zip(M.gens, N.gens):
                r.append((((gM @ F) - (F @ gN)) % p).ravel())
            resid.append(np.concatenate(r))
        resid = np.array(resid, dtype=np.int64)
        # combinations c with sum c_i resid_i = 0 give the valid homs
        sol = nullspace(resid.T, p)
        homs = []
        for c in sol:
            F = np.zeros((M.dim, N.dim), dtype=np.int64)
            for ci, Fi in zip(c, mats):
                F = (F + int(ci) * Fi) % p
            homs.append(F)
        return homs
    raise RuntimeError("hom_space failed")


def endo_field_degree(M, rng):
    return len(hom_space(M, M, rng))


def is_isomorphic(M, N, rng):
    if M.dim != N.dim:
        return False
    return len(hom_space(M, N, rng)) > 0


def rewrite_over_endo(M, rng):
    """For irreducible M with End = GF(p^t), t > 1: return (field, gens) where
    field is a SmallField for GF(p^t) with modulus the min poly of the chosen
    endo generator W, and gens are (n, n) integer-code matrices over it,
    n = dim/t."""
    p = M.p
    homs = hom_space(M, M, rng)
    t = len(homs)
    assert t > 1
    # find W with irreducible min poly of degree t
    for attempt in range(100):
        W = np.zeros((M.dim, M.dim), dtype=np.int64)
        for F in homs:
            W = (W + rng.randrange(p) * F) % p
        v = np.array([rng.randrange(p) for _ in range(M.dim)], dtype=np.int64)
        if not v.any() or not W.any():
            continue
        f = min_poly_of_vector(W, v, p)
        if len(f) != t + 1:
            continue
        facs = factor_poly(f, p)
        if len(facs) == 1 and facs[0][1] == 1:
            break
    else:
        raise RuntimeError("no field generator found")
    # field GF(p)[W]: x^t = -(f[0] + f[1] x + ...)
    red = [(-c) % p for c in f[:t]]
    field = SmallField(p, red)
    # adapted basis: u_j, u_j W, ..., u_j W^{t-1}; greedy with an incremental
    # echelon basis to test independence
    n = M.dim // t
    assert n * t == M.dim
    rows = []
    ech = []
    ech_piv = []

    def try_add(vs):
        added = []
        for v in vs:
            w = v % p
            for r, pc in zip(ech, ech_piv):
                f = int(w[pc])
                if f:
                    w = (w - f * r) % p
            nz = np.nonzero(w)[0]
            if nz.size == 0:
                # roll back: blocks are all-or-nothing
                for _ in added:
                    ech.pop()
                    ech_piv.pop()
                return False
            pc = int(nz[0])
            ech.append((w * pow(int(w[pc]), p - 2, p)) % p)
            ech_piv.append(pc)
            added.append(pc)
        return True

    for e in range(M.dim):
        if len(rows) == M.dim:
            break
        u = np.eye(M.dim, dtype=np.int64)[e]
        block = [u]
        for _ in range(t - 1):
            block.append((block[-1] @ W) % p)
        if try_add(block):
            rows.extend(block)
    assert len(rows) == M.dim, "adapted basis incomplete"
    T = np.array(rows, dtype=np.int64)
    Tinv = inverse(T, p)
    gens_q = []
    for g in M.gens:
        coords = (((T @ g) % p) @ Tinv) % p
        A = np.zeros((n, n), dtype=np.int64)
        for j0 in range(n):
            r = coords[j0 * t]      # image of u_{j0}
            for j1 in range(n):
                digits = [int(r[j1 * t + i]) for i in range(t)]
                A[j0, j1] = field.encode(digits)
        gens_q.append(A)
    return field, gens_q
