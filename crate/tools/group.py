"""M12 as a permutation group on 12 points: elements, classes, power maps.

Generators: the classical Mathieu construction, M11 = <x, y> extended by z.
Everything downstream is verified against |G| = 95040 and the known class
structure, so a wrong generator set fails loudly.
"""

from collections import deque

N = 12

X = (2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 1, 12)  # (1..11) as image tuple, 1-based
# y = (3,7,11,8)(4,10,5,6)
# z = (1,12)(2,11)(3,6)(4,8)(5,9)(7,10)


def cycles_to_perm(cycles, n=N):
    img = list(range(1, n + 1))
    for cyc in cycles:
        for i, a in enumerate(cyc):
            img[a - 1] = cyc[(i + 1) % len(cyc)]
    return tuple(img)


GEN_X = cycles_to_perm([tuple(range(1, 12))])
GEN_Y = cycles_to_perm([(3, 7, 11, 8), (4, 10, 5, 6)])
GEN_Z = cycles_to_perm([(1, 12), (2, 11), (3, 6), (4, 8), (5, 9), (7, 10)])
GENS = [GEN_X, GEN_Y, GEN_Z]

IDENT = tuple(range(1, N + 1))


def mul(a, b):
    """(a*b)(i) = a(b(i))."""
    return tuple(a[b[i] - 1] for i in range(N))


def inv(a):
    img = [0] * N
    for i in range(N):
        img[a[i] - 1] = i + 1
    return tuple(img)


def perm_order(a):
    k = 1
    b = a
    while b != IDENT:
        b = mul(a, b)
        k += 1
    return k


def perm_pow(a, e):
    r = IDENT
    b = a
    e = e % perm_order(a) if e < 0 else e
    while e:
        if e & 1:
            r = mul(r, b)
        b = mul(b, b)
        e >>= 1
    return r


def enumerate_group():
    """BFS over the Cayley graph; returns dict element -> word (gen indices)."""
    words = {IDENT: ()}
    frontier = deque([IDENT])
    while frontier:
        g = frontier.popleft()
        w = words[g]
        for i, s in enumerate(GENS):
            h = mul(s, g)
            if h not in words:
                words[h] = (i,) + w
                frontier.append(h)
    return words


def conjugacy_classes(elements):
    """Partition into classes by conjugation-orbit BFS with the generators."""
    class_of = {}
    classes = []
    gen_invs = [inv(s) for s in GENS]
    for g in elements:
        if g in class_of:
            continue
        idx = len(classes)
        orbit = [g]
        class_of[g] = idx
        qu = deque([g])
        while qu:
            h = qu.popleft()
            for s, si in zip(GENS, gen_invs):
                c = mul(s, mul(h, si))
                if c not in class_of:
                    class_of[c] = idx
                    orbit.append(c)
                    qu.append(c)
        classes.append(orbit)
    return classes, class_of


def build():
    words = enumerate_group()
    assert len(words) == 95040, f"group order {len(words)} != 95040"
    classes, class_of = conjugacy_classes(list(words))
    assert len(classes) == 15, f"{len(classes)} classes"
    info = []
    for idx, orb in enumerate(classes):
        rep = min(orb)
        o = perm_order(rep)
        info.append({
            "index": idx,
            "rep": rep,
            "order": o,
            "size": len(orb),
            "centralizer": 95040 // len(orb),
        })
    orders = sorted(c["order"] for c in info)
    assert orders == [1, 2, 2, 3, 3, 4, 4, 5, 6, 6, 8, 8, 10, 11, 11], orders
    return words, classes, class_of, info


if __name__ == "__main__":
    words, classes, class_of, info = build()
    for c in sorted(info, key=lambda c: (c["order"], -c["centralizer"])):
        print(c["order"], c["size"], c["centralizer"])
