"""Independent brute-force check of the order-20 case systems.

Rebuilds the scaled mu_l forms straight from the Python-computed ordinary
table and certified Brauer tables (no Rust code involved), then scans an
integer box around the origin for admissible partial augmentation tuples in
each composed case profile from cases20.jsonl. Regenerate the case list
with:

    cargo run --example case_profiles -- 20 > tools/cases20.jsonl

Finding zero admissible tuples in every case confirms the engine's
elimination of order-20 torsion units independently of the Rust code.
"""

import json
import pickle
import sys

import numpy as np

import ordinary
from cyclo import Cyc

K = 20
VARS = ["2a", "2b", "4a", "4b", "5a", "10a"]  # classes with order dividing 20
BOX = 5  # half-width of the scan box

values, info, _aux = ordinary.assemble()
names = info["names"]
name_idx = {n: j for j, n in enumerate(names)}

with open("brauer.pkl", "rb") as f:
    brauer = pickle.load(f)

# tables usable at k=20: ordinary plus p-Brauer with gcd(p, 20) = 1
tables = []  # list of (label, {class_name: Cyc per character row})
tables.append(("ord", [{names[j]: row[j] for j in range(15)} for row in values]))
for p in (3, 11):
    reg = brauer[p]["regular"]
    rows = brauer[p]["rows"]
    tables.append((f"mod{p}", [{names[j]: r[i] for i, j in enumerate(reg)} for r in rows]))


def trace_in(x, n):
    t = x.trace_in(n) if hasattr(x, "trace_in") else None
    assert t is not None
    return t


def root(n, e):
    return Cyc.root(n, e % n)


def forms_for_case(case):
    """Integer (coeffs, const) pairs for every scaled mu_l over VARS."""
    out = []
    for _, rows in tables:
        for chi in rows:
            chi1 = chi["1a"].rational_value()
            # chi(u^d) for proper divisors d>1 of K, keyed by m = K/d
            chi_pow = {}
            for m_str, tup in case.items():
                m = int(m_str)
                acc = Cyc.rat(0)
                for cname, nu in tup.items():
                    acc = acc + chi[cname] * Cyc.rat(nu)
                chi_pow[m] = acc
            for l in range(K):
                coeffs = []
                for cname in VARS:
                    v = (chi[cname] * root(K, -l)).trace_in(K)
                    assert v.denominator == 1
                    coeffs.append(int(v))
                const = chi1  # d = K term
                for m, x in chi_pow.items():
                    t = (x * root(m, -l)).trace_in(m)
                    assert t.denominator == 1
                    const += int(t)
                assert const == int(const)
                out.append((coeffs, int(const)))
    return out


def scan(case):
    forms = forms_for_case(case)
    A = np.array([c for c, _ in forms], dtype=np.int64)
    b = np.array([k for _, k in forms], dtype=np.int64)
    r = np.arange(-BOX, BOX + 1, dtype=np.int64)
    grids = np.meshgrid(*([r] * (len(VARS) - 1)), indexing="ij")
    X = np.stack([g.ravel() for g in grids], axis=0)  # (5, N)
    last = 1 - X.sum(axis=0, keepdims=True)
    X = np.concatenate([X, last], axis=0)  # (6, N), sum = 1
    vals = A @ X + b[:, None]
    ok = ((vals >= 0) & (vals % K == 0)).all(axis=0)
    return X[:, ok].T


def main():
    cases = [json.loads(line) for line in open("cases20.jsonl")]
    total = 0
    for i, case in enumerate(cases):
        sols = scan(case)
        total += len(sols)
        if len(sols):
            print(f"case {i + 1}: {len(sols)} solutions: {sols.tolist()}")
    print(f"checked {len(cases)} cases, box +/-{BOX}, total solutions: {total}")


if __name__ == "__main__":
    main()
