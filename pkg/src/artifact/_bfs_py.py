"""Pure numpy enumeration kernel (fallback lane).

Walks the orbit of a tracking row vector under right multiplication by
the generator matrices, chunk by chunk.  The compiled kernel in
_bfs_cy.pyx implements the same two entry points; this one is kept
deliberately straightforward since it anchors the differential test.
"""

import numpy as np

NAME = "python"

GUARD = 1e-6
_CHUNK = 4096


def _keys(block):
    # 6-decimal grid; adding 0.0 folds -0.0 into +0.0 so keys are canonical
    return np.round(block, 6) + 0.0


def _double(vectors, parent, pgen, right):
    vectors = np.vstack([vectors, np.zeros_like(vectors)])
    parent = np.concatenate([parent, np.full(len(parent), -1, np.int32)])
    pgen = np.concatenate([pgen, np.full(len(pgen), -1, np.int8)])
    right = np.vstack([right, np.full(right.shape, -1, np.int32)])
    return vectors, parent, pgen, right


def bfs(gens, v0, cap):
    """Enumerate the orbit of ``v0`` under ``w -> w @ gens[i]``.

    Parameters
    ----------
    gens : float64 array of shape (g, n, n)
    v0 : float64 array of shape (n,)
    cap : int, abort once this many elements have been found

    Returns
    -------
    (vectors, parent, pgen, right, closed, count) where vectors is the
    (count, n) orbit in discovery order, parent/pgen give the BFS tree
    (parent[0] = -1), right is the (count, g) right-multiplication
    table (-1 where never expanded, only possible when not closed) and
    closed says whether the walk exhausted the orbit below the cap.

    Raises
    ------
    RuntimeError
        If two orbit points share a key but differ by more than GUARD
        (tracking-vector collision).
    """
    gens = np.ascontiguousarray(gens, dtype=np.float64)
    g = gens.shape[0]
    n = int(v0.shape[0])
    cap = int(cap)

    alloc = 1024
    vectors = np.zeros((alloc, n), dtype=np.float64)
    parent = np.full(alloc, -1, dtype=np.int32)
    pgen = np.full(alloc, -1, dtype=np.int8)
    right = np.full((alloc, g), -1, dtype=np.int32)

    vectors[0] = v0
    index = {_keys(np.asarray(v0, dtype=np.float64)).tobytes(): 0}
    count = 1
    head = 0

    def finish(closed):
        return (
            vectors[:count].copy(),
            parent[:count].copy(),
            pgen[:count].copy(),
            right[:count].copy(),
            closed,
            count,
        )

    while head < count:
        hi = min(count, head + _CHUNK)
        block = vectors[head:hi]
        for i in range(g):
            images = block @ gens[i]
            keyed = _keys(images)
            hit_rows, hit_ids = [], []
            for r in range(hi - head):
                key = keyed[r].tobytes()
                j = index.get(key)
                if j is None:
                    if count >= cap:
                        return finish(False)
                    if count == len(parent):
                        vectors, parent, pgen, right = _double(vectors, parent, pgen, right)
                    vectors[count] = images[r]
                    parent[count] = head + r
                    pgen[count] = i
                    right[head + r, i] = count
                    index[key] = count
                    count += 1
                else:
                    right[head + r, i] = j
                    hit_rows.append(r)
                    hit_ids.append(j)
            if hit_rows:
                drift = np.abs(vectors[hit_ids] - images[hit_rows]).max()
                if drift > GUARD:
                    raise RuntimeError(
                        f"tracking-vector collision: equal keys, points {drift:.3e} apart"
                    )
        head = hi
    return finish(True)


def left_inverse(parent, pgen, right):
    """Left-multiplication table and inverse permutation of a closed walk.

    left[e][i] is the index of s_i * e; inv[e] is the index of e^-1.
    Both come from one dynamic program over the BFS tree: if e = p*s_j
    then s_i*e = (s_i*p)*s_j and e^-1 = s_j*(p^-1).
    """
    N, g = right.shape
    left = np.empty((N, g), dtype=np.int32)
    left[0] = right[0]
    for e in range(1, N):
        left[e] = right[left[parent[e]], pgen[e]]
    inv = np.empty(N, dtype=np.int32)
    inv[0] = 0
    for e in range(1, N):
        inv[e] = left[inv[parent[e]], pgen[e]]
    return left, inv
