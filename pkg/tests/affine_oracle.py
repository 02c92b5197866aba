"""Independent brute-force count of involution classes in affine Coxeter groups.

Uses the semidirect description W = Q x| W0: the finite Weyl group W0
acting on its coroot lattice Q = Z^n in coroot coordinates.  An
involution is a pair (v, w) with w^2 = 1 and (1 + w) v = 0; two
involutions are conjugate iff their linear parts are W0-conjugate and
their translation parts agree in K_w / (1 - w) Z^n up to the action of
the centralizer of w, where K_w = ker(1 + w) (intersected with Z^n and
saturated).  Since 2 K_w <= (1 - w) Z^n, that quotient is an F2 vector
space and the centralizer acts on it linearly.

The rank of an involution (v, w) equals dim ker(1 + w): every affine
involution fixes a point, so it lives in a finite point group where the
rank of its parabolic closure is the (-1)-eigenvalue multiplicity of w.

Everything here is exact integer / F2 arithmetic.  The module is
deliberately self-contained: it shares no code, no diagram parsing and
no ideas with the odd-graph pipeline it cross-checks, which is what
makes the agreement test meaningful.
"""

import math
import sys
from fractions import Fraction

import numpy as np

# ---------------------------------------------------------------- Cartan data


def cartan(kind, n):
    """Cartan matrix of the finite root system whose affinization we take."""
    A = 2 * np.eye(n, dtype=np.int64)

    def link(i, j, a=-1, b=-1):
        A[i, j] = a
        A[j, i] = b

    if kind == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif kind == "B":
        for i in range(n - 1):
            link(i, i + 1)
        A[n - 1, n - 2] = -2
    elif kind == "C":
        for i in range(n - 1):
            link(i, i + 1)
        A[n - 2, n - 1] = -2
    elif kind == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif kind == "E":
        for i in range(n - 2):
            link(i, i + 1)
        link(2, n - 1)
    elif kind == "F":
        for i in range(3):
            link(i, i + 1)
        A[2, 1] = -2
    elif kind == "G":
        link(0, 1, -1, -3)
    else:
        raise ValueError(kind)
    return A


def group_order(kind, n):
    table = {("G", 2): 12, ("F", 4): 1152,
             ("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600}
    if (kind, n) in table:
        return table[(kind, n)]
    if kind == "A":
        return math.factorial(n + 1)
    if kind in ("B", "C"):
        return 2 ** n * math.factorial(n)
    if kind == "D":
        return 2 ** (n - 1) * math.factorial(n)
    raise ValueError((kind, n))


def simple_reflections(A):
    n = A.shape[0]
    gens = []
    for i in range(n):
        M = np.eye(n, dtype=np.int64)
        M[i, :] = -A[:, i]
        M[i, i] = -1
        gens.append(M)
    return gens


def enumerate_weyl(kind, n):
    """All elements as int8 matrices in coroot coordinates, plus index dict."""
    A = cartan(kind, n)
    gens = simple_reflections(A)
    eye = np.eye(n, dtype=np.int64)
    for g in gens:
        assert np.array_equal(g @ g, eye), "generator is not an involution"
    gens32 = np.stack(gens).astype(np.int32)

    blocks = [np.eye(n, dtype=np.int8)[None]]
    index = {blocks[0][0].tobytes(): 0}
    count = 1
    frontier = blocks[0].astype(np.int32)
    while len(frontier):
        prods = np.einsum("gij,ejk->geik", gens32, frontier).reshape(-1, n, n)
        assert abs(prods).max() < 127, "int8 overflow"
        prods8 = prods.astype(np.int8)
        fresh = []
        for m in prods8:
            key = m.tobytes()
            if key not in index:
                index[key] = count
                count += 1
                fresh.append(m)
        if not fresh:
            break
        block = np.stack(fresh)
        blocks.append(block)
        frontier = block.astype(np.int32)
    elems = np.concatenate(blocks)
    want = group_order(kind, n)
    assert len(elems) == want, f"{kind}{n}: enumerated {len(elems)} != {want}"
    return elems, index, [index[g.astype(np.int8).tobytes()] for g in gens]


# ------------------------------------------------------------- lattice algebra


def smith_normal_form(M):
    """(U, D, V) with U M V = D diagonal, U and V unimodular.  Exact."""
    D = [[int(x) for x in row] for row in M]
    rows, cols = len(D), len(D[0])
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def add_row(src, dst, f):
        D[dst] = [a + f * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, f):
        for r in D:
            r[dst] += f * r[src]
        for r in V:
            r[dst] += f * r[src]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(rows, cols):
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if D[i][j] and (piv is None or abs(D[i][j]) < abs(D[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, D, V


def kernel_basis(M):
    """Integer basis (columns) of {x in Z^c : M x = 0}; saturated."""
    rows, cols = M.shape
    U, D, V = smith_normal_form(M.tolist())
    basis = [[V[i][j] for i in range(cols)]
             for j in range(cols)
             if j >= rows or D[j][j] == 0]
    if not basis:
        return np.zeros((cols, 0), dtype=np.int64)
    return np.array(basis, dtype=np.int64).T


class ImageLattice:
    """Membership oracle for M * Z^c."""

    def __init__(self, M):
        rows, cols = M.shape
        U, D, _ = smith_normal_form(M.tolist())
        self.U = U
        self.diag = [D[i][i] if i < cols else 0 for i in range(rows)]
        self.rows = rows

    def __contains__(self, v):
        for i in range(self.rows):
            w = sum(self.U[i][k] * int(v[k]) for k in range(self.rows))
            d = self.diag[i]
            if (d == 0 and w != 0) or (d != 0 and w % d):
                return False
        return True


def left_inverse(K):
    """Fraction matrix P with P K = I (K integer, full column rank)."""
    n, r = K.shape
    G = [[Fraction(sum(int(K[a, i]) * int(K[a, j]) for a in range(n)))
          for j in range(r)] for i in range(r)]
    aug = [row + [Fraction(int(i == j)) for j in range(r)] for i, row in enumerate(G)]
    for c in range(r):
        p = next(i for i in range(c, r) if aug[i][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(r):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    Ginv = [row[r:] for row in aug]
    return [[sum(Ginv[i][k] * Fraction(int(K[a, k])) for k in range(r))
             for a in range(n)] for i in range(r)]


def express_mod2(P, vec):
    """Coordinates of vec in the kernel basis (via left inverse P), mod 2."""
    mask = 0
    for i, row in enumerate(P):
        c = sum(f * int(x) for f, x in zip(row, vec))
        assert c.denominator == 1, "vector not in the kernel lattice"
        if int(c) & 1:
            mask |= 1 << i
    return mask


# ------------------------------------------------------- F2 coset-space orbits


def f2_echelon(masks):
    basis = []
    for v in masks:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return basis


def f2_reduce(v, basis):
    for b in basis:
        v = min(v, v ^ b)
    return v


# ----------------------------------------------------------------- main engine


def involution_classes_affine(kind, n, verbose=False):
    """Per-rank involution class counts of the affinization of (kind, n).

    Returns a list c with c[r-1] = number of conjugacy classes of
    involutions of rank r, for r = 1..n.
    """
    elems, index, gen_idx = enumerate_weyl(kind, n)
    N = len(elems)
    eye8 = np.eye(n, dtype=np.int8)
    eye = np.eye(n, dtype=np.int64)

    invol = []
    chunk = 65536
    for lo in range(0, N, chunk):
        blk = elems[lo:lo + chunk].astype(np.int32)
        sq = np.einsum("eij,ejk->eik", blk, blk)
        for off in np.nonzero((sq == eye8).all(axis=(1, 2)))[0]:
            if lo + off != index[eye8.tobytes()]:
                invol.append(lo + off)

    per_rank = [0] * n
    done = set()
    for start in invol:
        if start in done:
            continue
        w = elems[start].astype(np.int64)
        # conjugacy-class BFS carrying the transversal and its inverse
        trans = {start: (eye, eye)}
        frontier = [start]
        schreier = {}
        while frontier:
            nxt = []
            for xi in frontier:
                x = elems[xi].astype(np.int64)
                tx, tx_inv = trans[xi]
                for gi in gen_idx:
                    g = elems[gi].astype(np.int64)
                    y = g @ x @ g
                    yi = index[y.astype(np.int8).tobytes()]
                    if yi not in trans:
                        trans[yi] = (g @ tx, tx_inv @ g)
                        nxt.append(yi)
                    else:
                        u = trans[yi][1] @ g @ tx
                        schreier[u.astype(np.int8).tobytes()] = u
            frontier = nxt
        done.update(trans)

        K = kernel_basis(eye + w)
        r = K.shape[1]
        assert r >= 1
        img = ImageLattice(eye - w)

        # translation parts live in K_w / (1-w)Z^n; list the subgroup of
        # masks that are hit by (1-w)Z^n, then reduce everything mod it
        masks_in_image = [m for m in range(1, 2 ** r)
                          if (K @ np.array([(m >> i) & 1 for i in range(r)],
                                           dtype=np.int64)) in img]
        Ubasis = f2_echelon(masks_in_image)
        reps = sorted({f2_reduce(m, Ubasis) for m in range(2 ** r)})
        rep_pos = {m: i for i, m in enumerate(reps)}

        # distinct centralizer actions on the kernel lattice, then on F2^r
        P = left_inverse(K)
        kernel_actions = {}
        for u in schreier.values():
            kernel_actions[(u @ K).tobytes()] = u @ K
        actions = set()
        for UK in kernel_actions.values():
            actions.add(tuple(express_mod2(P, UK[:, j]) for j in range(r)))

        parent = list(range(len(reps)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for act in actions:
            for m in reps:
                out = 0
                for i in range(r):
                    if (m >> i) & 1:
                        out ^= act[i]
                a, b = find(rep_pos[m]), find(rep_pos[f2_reduce(out, Ubasis)])
                if a != b:
                    parent[a] = b
        orbits = len({find(i) for i in range(len(reps))})
        per_rank[r - 1] += orbits
        if verbose:
            print(f"  linear class size {len(trans)}: rank {r}, "
                  f"|Q|={len(reps)}, centralizer orbits {orbits}", flush=True)
    return per_rank


if __name__ == "__main__":
    jobs = sys.argv[1:] or ["G2", "C2", "C3", "C4", "B4", "A2", "A3"]
    for job in jobs:
        per = involution_classes_affine(job[0], int(job[1:]))
        print(f"~{job}: per-rank {per}  total {sum(per)}", flush=True)
