"""Independent checker built on the geometric reflection representation.

Nothing in here knows about the diagram combinatorics used by the main
pipeline: the group is enumerated element by element as matrices (via a
tracking vector), multiplication tables are built, and involution
classes are read off by direct conjugation.  Agreement between this
module and the graph-based counts is the strongest test in the suite.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .classify import decompose, group_order, is_spherical
from .diagram import INFINITY, CoxeterMatrix

from . import _bfs_py

try:
    from . import _bfs_cy
except ImportError:  # compiled lane is optional
    _bfs_cy = None

DEFAULT_CAP = 10**6
CAP_ENV_VAR = "ARTIFACT_ORACLE_CAP"
KERNEL_ENV_VAR = "ARTIFACT_FORCE_KERNEL"


class CapExceededError(RuntimeError):
    """The walk found more elements than the cap allows."""

    def __init__(self, name, cap, count):
        self.name = name
        self.cap = cap
        self.count = count
        super().__init__(
            f"enumeration of {name} stopped at cap {cap}: "
            f"{count} elements reached and the group is larger"
        )


class OrbitIntegrityError(RuntimeError):
    """The walk closed on something that cannot be the full group."""


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None or raw == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{CAP_ENV_VAR} must be positive, got {cap}")
    return cap


def available_kernels():
    out = {"py": _bfs_py}
    if _bfs_cy is not None:
        out["cy"] = _bfs_cy
    return out


def _resolve_kernel(kernel):
    if kernel is None:
        kernel = os.environ.get(KERNEL_ENV_VAR) or None
    if kernel is None:
        return _bfs_cy if _bfs_cy is not None else _bfs_py
    if not isinstance(kernel, str):
        return kernel  # already a module implementing bfs/left_inverse
    table = {"py": _bfs_py, "python": _bfs_py, "cy": _bfs_cy, "cython": _bfs_cy}
    if kernel not in table:
        raise ValueError(f"unknown kernel {kernel!r} (expected 'py' or 'cy')")
    mod = table[kernel]
    if mod is None:
        raise RuntimeError("compiled kernel requested but not built")
    return mod


def kernel_name(kernel=None) -> str:
    return _resolve_kernel(kernel).NAME


def _primes(count):
    out, x = [], 7  # start past the radicals sqrt(2), sqrt(3), sqrt(5) that bond angles live in
    while len(out) < count:
        if all(x % p for p in range(2, int(math.isqrt(x)) + 1)):
            out.append(x)
        x += 2
    return out


class ReflectionRep:
    """Geometric representation of the Coxeter group of a bond matrix.

    bilinear[i][j] = -cos(pi / m_ij) (with -1 for INFINITY); generator i
    acts on column vectors as the identity with row i replaced by
    e_i - 2 * bilinear[i].  ``tracking_vector`` is a fixed generic row
    vector whose orbit under w -> w @ M_e is free for finite groups: its
    entries 1 + sqrt(p)/4 (p = 7, 11, 13, ...) are independent of the
    quadratic fields the matrix entries live in, so it misses every
    reflection hyperplane of the transposed action.
    """

    def __init__(self, mat: CoxeterMatrix):
        n = mat.rank
        bilinear = np.ones((n, n), dtype=np.float64)
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                m = mat.entries[i][j]
                bilinear[i, j] = -1.0 if m == INFINITY else -math.cos(math.pi / m)
        gens = np.empty((n, n, n), dtype=np.float64)
        for i in range(n):
            gens[i] = np.eye(n)
            gens[i][i, :] -= 2.0 * bilinear[i, :]
        self.mat = mat
        self.n = n
        self.bilinear = bilinear
        self.gens = gens
        self.tracking_vector = np.array(
            [1.0 + math.sqrt(p) / 4.0 for p in _primes(n)], dtype=np.float64
        )

    def generator(self, i: int) -> np.ndarray:
        return self.gens[i].copy()


def evaluate_word(rep: ReflectionRep, word) -> np.ndarray:
    """Matrix of the product s_{word[0]} * s_{word[1]} * ... ."""
    out = np.eye(rep.n)
    for letter in word:
        if not isinstance(letter, (int, np.integer)) or not 0 <= letter < rep.n:
            raise ValueError(f"word letter {letter!r} out of range for rank {rep.n}")
        out = out @ rep.gens[letter]
    return out


class GroupTable:
    """Enumerated group with multiplication tables.

    Index 0 is the identity.  Elements are stored as (parent, generator)
    BFS-tree entries plus their tracking vectors; full matrices are
    rebuilt on demand from words.  ``right[e][i]`` is the index of
    e * s_i; the left table and the inverse permutation are derived
    lazily from one dynamic program.
    """

    def __init__(self, mat, rep, kernel, vectors, parent, pgen, right, count):
        self.mat = mat
        self.rep = rep
        self.kernel = kernel
        self.vectors = vectors
        self.parent = parent
        self.pgen = pgen
        self.right = right
        self.count = count
        self.group_order = count
        self._left = None
        self._inv = None

    def __len__(self):
        return self.count

    def word(self, e: int):
        """Reduced-by-construction word of element e (BFS tree path)."""
        letters = []
        while e != 0:
            letters.append(int(self.pgen[e]))
            e = int(self.parent[e])
        letters.reverse()
        return letters

    def matrix(self, e: int) -> np.ndarray:
        return evaluate_word(self.rep, self.word(e))

    def index_of_word(self, word) -> int:
        """Index of the element the word multiplies out to (exact, table-driven)."""
        e = 0
        for letter in word:
            if not 0 <= letter < self.right.shape[1]:
                raise ValueError(f"word letter {letter!r} out of range")
            e = int(self.right[e, letter])
        return e

    def left_inverse(self):
        if self._left is None:
            self._left, self._inv = self.kernel.left_inverse(
                self.parent, self.pgen, self.right
            )
        return self._left, self._inv

    def inverse(self):
        return self.left_inverse()[1]


def enumerate_group(mat: CoxeterMatrix, cap=None, name=None, kernel=None) -> GroupTable:
    """Enumerate the Coxeter group of ``mat`` by its reflection matrices.

    Walks right multiplication from the identity, hashing tracking
    vectors on a 1e-6 grid.  Aborts with CapExceededError after ``cap``
    elements (default 10^6, overridable via ARTIFACT_ORACLE_CAP), so a
    non-spherical input ends in a cap error rather than looping forever.
    On closure the count is cross-checked against the known group order;
    any mismatch raises OrbitIntegrityError rather than returning a
    corrupt table.
    """
    if cap is None:
        cap = default_cap()
    cap = int(cap)
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    label = name or f"rank-{mat.rank} diagram"
    mod = _resolve_kernel(kernel)
    rep = ReflectionRep(mat)
    vectors, parent, pgen, right, closed, count = mod.bfs(
        rep.gens, rep.tracking_vector, cap
    )
    if not closed:
        raise CapExceededError(label, cap, count)
    dec = decompose(mat)
    if is_spherical(dec):
        expected = group_order(dec)
        if count != expected:
            raise OrbitIntegrityError(
                f"walk over {label} closed at {count} elements, expected {expected}; "
                "tracking-vector degeneracy"
            )
    else:
        raise OrbitIntegrityError(
            f"walk over {label} closed at {count} elements but the group is infinite; "
            "tracking-vector degeneracy"
        )
    return GroupTable(mat, rep, mod, vectors, parent, pgen, right, count)


@dataclass(frozen=True)
class InvolutionClass:
    size: int
    rank: int
    representative_index: int


def _involution_rank(table: GroupTable, e: int) -> int:
    """Dimension of the (-1)-eigenspace, computed two ways."""
    M = table.matrix(e)
    n = table.rep.n
    by_trace = (n - float(np.trace(M))) / 2.0
    r = int(round(by_trace))
    if abs(by_trace - r) > 1e-6:
        raise OrbitIntegrityError(
            f"involution at index {e}: trace gives non-integral rank {by_trace}"
        )
    by_kernel = int(np.linalg.matrix_rank(M - np.eye(n), tol=1e-6))
    if r != by_kernel:
        raise OrbitIntegrityError(
            f"involution at index {e}: rank {r} by trace but {by_kernel} by eigenspace"
        )
    return r


def involution_classes(table: GroupTable):
    """Conjugacy classes of involutions, sorted by representative index.

    Each class is found by closing the conjugation orbit x -> s_i x s_i
    over the involution set (involutions are exactly the fixed points of
    the inverse permutation, identity excluded).
    """
    left, inv = table.left_inverse()
    N = len(table)
    g = table.right.shape[1]
    indices = np.arange(N)
    invol = np.nonzero((inv == indices) & (indices != 0))[0]
    if len(invol) == 0:
        return []
    conj = np.empty((len(invol), g), dtype=np.int64)
    for i in range(g):
        conj[:, i] = table.right[left[invol, i], i]
    pos = {int(e): k for k, e in enumerate(invol)}
    seen = np.zeros(len(invol), dtype=bool)
    classes = []
    for k in range(len(invol)):
        if seen[k]:
            continue
        seen[k] = True
        stack = [k]
        size = 0
        while stack:
            cur = stack.pop()
            size += 1
            for i in range(g):
                nxt = pos[int(conj[cur, i])]
                if not seen[nxt]:
                    seen[nxt] = True
                    stack.append(nxt)
        rep_index = int(invol[k])
        classes.append(
            InvolutionClass(
                size=size, rank=_involution_rank(table, rep_index), representative_index=rep_index
            )
        )
    return classes
