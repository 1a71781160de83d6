"""Independent oracle for the integral input and E-infinity orders of the extraspecial
group's classifying space through degree 7.

Rebuilds the mod-2 ring from scratch (F_2[x1..x4, w4] modulo the Steenrod closure of
q = x1 x2 + x3 x4, w2 found by brute force over all degree-2 polynomials against the
singular planes of q), then reads off per degree s = 1..7:

    s  dim  rank(Sq^1 into s)  t_s  higher_s  rank(Sq^3 out of s)  rank(Sq^3 into s)  log2|K_s|  log2|K_s/I_s|

with t_s from universal coefficients, higher_s the summands of order >= 4 (counted
at their lower bound 4), K_s = ker Sq^3 and I_s = im Sq^3.

    python3 tests/oracles/einfty_oracle.py > tests/golden/einfty_bg.txt
"""
from itertools import product

TOP = 10
NX = 4
DEG = (1, 1, 1, 1, 4)


def deg(m):
    return sum(e * d for e, d in zip(m, DEG))


def pmul(a, b):
    out = set()
    for x in a:
        for y in b:
            out ^= {tuple(i + j for i, j in zip(x, y))}
    return frozenset(out)


def padd(a, b):
    return frozenset(set(a) ^ set(b))


def monos(d, nvars=5):
    out = []

    def rec(i, left, cur):
        if i == nvars:
            if left == 0:
                out.append(tuple(cur) + (0,) * (5 - nvars))
            return
        step = DEG[i]
        for e in range(left // step, -1, -1):
            rec(i + 1, left - e * step, cur + [e])

    rec(0, d, [])
    return out


def gen(i):
    e = [0] * 5
    e[i] = 1
    return frozenset({tuple(e)})


ONE = frozenset({(0,) * 5})


def homog(p, d):
    return frozenset(m for m in p if deg(m) == d)


# total squares of generators; w4's is filled in once w2, w3 are known
TOTAL = {i: padd(gen(i), pmul(gen(i), gen(i))) for i in range(NX)}


def total_sq(p):
    out = frozenset()
    for m in p:
        t = ONE
        for i, e in enumerate(m):
            for _ in range(e):
                t = frozenset(x for x in pmul(t, TOTAL[i]) if deg(x) <= TOP)
        out = padd(out, t)
    return out


def sq(k, p):
    if not p:
        return frozenset()
    d = deg(next(iter(p)))
    return homog(total_sq(p), d + k)


class Space:
    """F_2-span inside the monomials of one degree, as integer bitmasks."""

    def __init__(self, basis_monos):
        self.index = {m: i for i, m in enumerate(basis_monos)}
        self.rows = {}  # pivot -> vector

    def vec(self, p):
        v = 0
        for m in p:
            v ^= 1 << self.index[m]
        return v

    def reduce(self, v):
        while v:
            top = v.bit_length() - 1
            if top not in self.rows:
                return v
            v ^= self.rows[top]
        return 0

    def insert(self, v):
        v = self.reduce(v)
        if v:
            self.rows[v.bit_length() - 1] = v
            return True
        return False


def ideal_spaces(gens, nvars):
    spaces = {}
    for d in range(TOP + 1):
        sp = Space(monos(d))
        for g in gens:
            gd = deg(next(iter(g)))
            if gd > d:
                continue
            for m in monos(d - gd, nvars):
                sp.insert(sp.vec(pmul(g, frozenset({m}))))
        spaces[d] = sp
    return spaces


q = padd(pmul(gen(0), gen(1)), pmul(gen(2), gen(3)))

# Steenrod closure of q inside F_2[x1..x4]
ideal = [q]
changed = True
while changed:
    changed = False
    spaces = ideal_spaces(ideal, NX)
    for g in list(ideal):
        gd = deg(next(iter(g)))
        for k in range(1, TOP - gd + 1):
            s = sq(k, g)
            if s and spaces[gd + k].reduce(spaces[gd + k].vec(s)):
                ideal.append(s)
                changed = True
                break
        if changed:
            break

# singular planes: 2-dim subspaces of F_2^4 on which q vanishes
vectors = [v for v in product((0, 1), repeat=4) if any(v)]


def qform(v):
    return (v[0] * v[1] + v[2] * v[3]) % 2


planes = set()
for a in vectors:
    for b in vectors:
        if a < b:
            c = tuple((x + y) % 2 for x, y in zip(a, b))
            if qform(a) == qform(b) == qform(c) == 0:
                planes.add(frozenset({a, b, c}))
planes = [sorted(p)[:2] for p in planes]
assert len(planes) == 6


def restrict(p, basis):
    # polynomial in a, b as a set of (i, j) exponent pairs
    a, b = basis
    out = set()
    for m in p:
        if m[4]:
            raise ValueError("w4 not restricted here")
        term = {(0, 0)}
        for i in range(NX):
            lin = []
            if a[i]:
                lin.append((1, 0))
            if b[i]:
                lin.append((0, 1))
            for _ in range(m[i]):
                nxt = set()
                for t in term:
                    for l in lin:
                        nxt ^= {(t[0] + l[0], t[1] + l[1])}
                term = nxt
        out ^= term
    return frozenset(out)


def elementary(k):
    # e_k of the characters {0, a, b, a + b}
    chars = [set(), {(1, 0)}, {(0, 1)}, {(1, 0), (0, 1)}]
    out = set()
    for sub in product((0, 1), repeat=4):
        if sum(sub) != k:
            continue
        term = {(0, 0)}
        for use, ch in zip(sub, chars):
            if use:
                nxt = set()
                for t in term:
                    for l in ch:
                        nxt ^= {(t[0] + l[0], t[1] + l[1])}
                term = nxt
        out ^= term
    return frozenset(out)


target2 = elementary(2)
deg2 = monos(2, NX)
solutions = []
for bits in product((0, 1), repeat=len(deg2)):
    p = frozenset(m for m, bit in zip(deg2, bits) if bit)
    if all(restrict(p, pl) == target2 for pl in planes):
        solutions.append(p)
assert solutions
spaces = ideal_spaces(ideal, NX)
w2 = solutions[0]
# all solutions agree modulo the ideal
assert all(not spaces[2].reduce(spaces[2].vec(padd(w2, s))) for s in solutions)
w3 = sq(1, w2)
assert all(restrict(w3, pl) == elementary(3) for pl in planes)

# Wu formula for an oriented 4-plane bundle: Sq w4 = w4 + w2 w4 + w3 w4 + w4^2
w4 = gen(4)
TOTAL[4] = padd(padd(w4, pmul(w2, w4)), padd(pmul(w3, w4), pmul(w4, w4)))

# quotient ring in degrees 0..TOP: ideal spans include w4 multiples
full = ideal_spaces(ideal, 5)


def coords(p, d):
    return full[d].reduce(full[d].vec(p))


def rank(vectors):
    rows = {}
    r = 0
    for v in vectors:
        while v:
            t = v.bit_length() - 1
            if t not in rows:
                rows[t] = v
                r += 1
                break
            v ^= rows[t]
    return r


def quotient_basis(d):
    # monomials that are not pivots of the ideal span
    return [m for m in monos(d) if (full[d].index[m]) not in full[d].rows]


basis = {d: quotient_basis(d) for d in range(TOP + 1)}
dim = {d: len(basis[d]) for d in range(TOP + 1)}


def sq_images(k, d, elems):
    return [coords(sq(k, e), d + k) for e in elems]


sq1_in = {0: 0}
for s in range(1, 8):
    sq1_in[s] = rank(sq_images(1, s - 1, [frozenset({m}) for m in basis[s - 1]]))
t = {0: 0}
for s in range(7):
    t[s + 1] = dim[s] - (1 if s == 0 else 0) - t[s]


def reduce_poly(p, d):
    v = coords(p, d)
    idx = {i: m for m, i in full[d].index.items()}
    return frozenset(idx[i] for i in range(v.bit_length()) if (v >> i) & 1)


# mod-2 reductions of integral generators: im Sq^1, then ker Sq^1 extended with w4 first
rho = {}
for s in range(1, 8):
    vecs, polys = [], []
    for m in basis[s - 1]:
        p = reduce_poly(sq(1, frozenset({m})), s)
        if p and rank(vecs + [coords(p, s)]) > len(vecs):
            vecs.append(coords(p, s))
            polys.append(p)
    higher = t[s] - len(polys)
    if higher:
        cands = [w4] if s == 4 else []
        cands += [frozenset({m}) for m in basis[s]]
        for c in cands:
            if len(polys) == t[s]:
                break
            if not coords(sq(1, c), s + 1) and rank(vecs + [coords(c, s)]) > len(vecs):
                vecs.append(coords(c, s))
                polys.append(c)
    rho[s] = (polys, higher)

sq3_out = {s: 0 for s in range(1, 8)}
for s in range(1, 5):
    sq3_out[s] = rank(sq_images(3, s, rho[s][0]))

for s in range(1, 8):
    higher = rho[s][1]
    into = sq3_out[s - 3] if s >= 4 else 0
    log_h = t[s] + higher  # higher summands at exponent 2
    log_k = log_h - sq3_out[s]
    print(s, dim[s], sq1_in[s], t[s], higher, sq3_out[s], into, log_k, log_k - into)
