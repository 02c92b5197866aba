"""Recognition of finite (spherical) diagram types.

Eight families cover every irreducible finite Coxeter group:
A_n (n>=1), B_n (n>=2), D_n (n>=4), E6/E7/E8, F4, G2, H3/H4 and the
dihedral I2(m).  Everything else classifies as NON_SPHERICAL.  Low-rank
coincidences are normalized on construction (I2(3)=A2, I2(4)=B2,
I2(6)=G2, H2=I2(5), B1=A1, D3=A3), so equal groups get equal labels.
"""

from __future__ import annotations

import math

from .diagram import INFINITY, CoxeterMatrix, components, induced

_E_LEGS = {(1, 2, 2): 6, (1, 2, 3): 7, (1, 2, 4): 8}


class IrreducibleType:
    """One irreducible factor: a family letter plus rank (plus m for I2)."""

    __slots__ = ("family", "rank", "param")

    def __init__(self, family, rank=None, param=None):
        if family == "nonspherical":
            rank, param = 0, None
        elif family == "I2":
            if param == 2:
                raise ValueError("I2(2) is reducible (A1+A1)")
            if param == INFINITY:
                raise ValueError("the infinite dihedral group is not a finite type")
            if not isinstance(param, int) or param < 3:
                raise ValueError(f"invalid I2 parameter {param!r}")
            rank = 2
            if param == 3:
                family, rank, param = "A", 2, None
            elif param == 4:
                family, rank, param = "B", 2, None
            elif param == 6:
                family, rank, param = "G", 2, None
        else:
            if param is not None:
                raise ValueError(f"family {family} takes no parameter")
            if not isinstance(rank, int) or rank < 1:
                raise ValueError(f"invalid rank {rank!r} for family {family}")
            if family == "H" and rank == 2:
                family, param = "I2", 5
            elif family == "B" and rank == 1:
                family = "A"
            elif family == "D" and rank == 3:
                family = "A"
            ok = {
                "A": rank >= 1,
                "B": rank >= 2,
                "D": rank >= 4,
                "E": rank in (6, 7, 8),
                "F": rank == 4,
                "G": rank == 2,
                "H": rank in (3, 4),
                "I2": rank == 2,  # only via the H2 = I2(5) rewrite
            }.get(family)
            if not ok:
                raise ValueError(f"no finite type {family}{rank}")
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "param", param)

    def __setattr__(self, name, value):
        raise AttributeError("IrreducibleType is immutable")

    def _key(self):
        return (self.family, self.rank, 0 if self.param is None else self.param)

    def __eq__(self, other):
        if not isinstance(other, IrreducibleType):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        if self.family == "nonspherical":
            return "nonspherical"
        if self.family == "I2":
            return f"I2({self.param})"
        return f"{self.family}{self.rank}"

    def __repr__(self):
        return f"IrreducibleType({self})"


NON_SPHERICAL = IrreducibleType("nonspherical")


class TypeDecomposition:
    """Multiset of irreducible factors of a (sub-)diagram.

    Serializes sorted with "+" separators, e.g. ``A1+A1+B3``; the empty
    decomposition (rank-0 diagram, trivial group) prints as ``1``.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        object.__setattr__(self, "parts", tuple(sorted(parts, key=IrreducibleType._key)))

    def __setattr__(self, name, value):
        raise AttributeError("TypeDecomposition is immutable")

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        if not isinstance(other, TypeDecomposition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        return "+".join(str(p) for p in self.parts) if self.parts else "1"

    def __repr__(self):
        return f"TypeDecomposition({self})"


def classify_irreducible(mat: CoxeterMatrix) -> IrreducibleType:
    """Finite type of a connected diagram, or NON_SPHERICAL.

    The caller guarantees connectivity (a disconnected matrix raises
    ValueError).  The test is the usual decision tree: a spherical
    diagram is a tree with at most one bond label >= 4 or one branch
    vertex, never both, and the label/branch positions pin the family.
    """
    n = mat.rank
    if n == 0:
        raise ValueError("cannot classify the empty diagram")
    if len(components(mat)) != 1:
        raise ValueError("classify_irreducible needs a connected diagram")
    if n == 1:
        return IrreducibleType("A", 1)
    edges = mat.edges()
    if any(m == INFINITY for _, _, m in edges):
        return NON_SPHERICAL
    if n == 2:
        return IrreducibleType("I2", param=edges[0][2])
    # connected with n-1 edges means tree; any extra edge closes a cycle
    if len(edges) != n - 1:
        return NON_SPHERICAL
    labeled = [(i, j, m) for i, j, m in edges if m >= 4]
    if len(labeled) >= 2:
        return NON_SPHERICAL
    deg = [len(mat.neighbours(v)) for v in range(n)]
    if max(deg) >= 4:
        return NON_SPHERICAL
    branch = [v for v in range(n) if deg[v] == 3]
    if len(branch) >= 2:
        return NON_SPHERICAL

    if branch:
        if labeled:
            return NON_SPHERICAL
        legs = []
        b = branch[0]
        for u in mat.neighbours(b):
            length, prev, cur = 1, b, u
            while deg[cur] == 2:
                nxt = [w for w in mat.neighbours(cur) if w != prev][0]
                prev, cur = cur, nxt
                length += 1
            legs.append(length)
        legs.sort()
        if legs[0] == 1 and legs[1] == 1:
            return IrreducibleType("D", n)
        e_rank = _E_LEGS.get(tuple(legs))
        if e_rank is not None:
            return IrreducibleType("E", e_rank)
        return NON_SPHERICAL

    # plain path: walk it from one endpoint and locate the label
    ends = [v for v in range(n) if deg[v] == 1]
    order = [min(ends)]
    prev = None
    while len(order) < n:
        nxt = [w for w in mat.neighbours(order[-1]) if w != prev][0]
        prev = order[-1]
        order.append(nxt)
    bonds = [mat.bond(order[i], order[i + 1]) for i in range(n - 1)]
    if not labeled:
        return IrreducibleType("A", n)
    pos = next(i for i, m in enumerate(bonds) if m >= 4)
    m = bonds[pos]
    offset = min(pos, len(bonds) - 1 - pos)  # distance of label from the nearer end
    if m == 4:
        if offset == 0:
            return IrreducibleType("B", n)
        if n == 4 and offset == 1:
            return IrreducibleType("F", 4)
    elif m == 5 and offset == 0 and n in (3, 4):
        return IrreducibleType("H", n)
    return NON_SPHERICAL


def decompose(mat: CoxeterMatrix, subset=None) -> TypeDecomposition:
    """Type multiset of the sub-diagram spanned by ``subset`` (default: all)."""
    if subset is not None:
        mat = induced(mat, subset)
    return TypeDecomposition(
        classify_irreducible(induced(mat, comp)) for comp in components(mat)
    )


def is_spherical(dec) -> bool:
    """True iff every irreducible part is a finite type.

    Accepts a TypeDecomposition or a CoxeterMatrix (decomposed first).
    """
    if isinstance(dec, CoxeterMatrix):
        dec = decompose(dec)
    return all(p != NON_SPHERICAL for p in dec)


def has_central_longest(t: IrreducibleType) -> bool:
    """True iff the longest element of the (finite) type is central.

    Those are exactly A1, B_n (n>=2), D_n for even n, E7, E8, F4, G2,
    H3, H4 and the even dihedrals I2(2m).
    """
    f = t.family
    if f == "A":
        return t.rank == 1
    if f == "B" or f == "F" or f == "G":
        return True
    if f == "D":
        return t.rank % 2 == 0
    if f == "E":
        return t.rank in (7, 8)
    if f == "H":
        return True
    if f == "I2":
        return t.param % 2 == 0
    return False


def all_parts_central(dec: TypeDecomposition) -> bool:
    """True iff every part of the decomposition has a central longest element."""
    return all(has_central_longest(p) for p in dec)


def coxeter_number(t: IrreducibleType) -> int:
    """Coxeter number h of a finite irreducible type."""
    f, n = t.family, t.rank
    if f == "A":
        return n + 1
    if f == "B":
        return 2 * n
    if f == "D":
        return 2 * n - 2
    if f == "E":
        return {6: 12, 7: 18, 8: 30}[n]
    if f == "F":
        return 12
    if f == "G":
        return 6
    if f == "H":
        return {3: 10, 4: 30}[n]
    if f == "I2":
        return t.param
    raise ValueError("coxeter_number is only defined for finite types")


def group_order(t) -> int:
    """Order of the Coxeter group of a finite type (or TypeDecomposition)."""
    if isinstance(t, TypeDecomposition):
        return math.prod(group_order(p) for p in t)
    f, n = t.family, t.rank
    if f == "A":
        return math.factorial(n + 1)
    if f == "B":
        return 2**n * math.factorial(n)
    if f == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if f == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if f == "F":
        return 1152
    if f == "G":
        return 12
    if f == "H":
        return {3: 120, 4: 14400}[n]
    if f == "I2":
        return 2 * t.param
    raise ValueError("group_order is only defined for finite types")
