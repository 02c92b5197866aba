"""Coxeter diagrams as symmetric matrices of bond orders.

A diagram on n vertices is a symmetric n x n matrix m with m[i][i] = 1
and off-diagonal entries in {2, 3, 4, ...} or INFINITY.  An edge of the
diagram is a pair with m[i][j] >= 3 (INFINITY included); m[i][j] = 2
means the two generators commute and the vertices are not adjacent.

Vertex indices are 0-based everywhere in this package.  The 1-based
``s1, s2, ...`` names that are customary in print only appear in
rendered output (DOT files, tables).
"""

from __future__ import annotations

import json
import math
import re
from typing import Iterable

INFINITY = math.inf

VertexSet = tuple  # sorted tuple of 0-based vertex indices


class DiagramError(ValueError):
    """Malformed matrix, name, edge list or vertex set."""


def _is_bond(value) -> bool:
    if value == INFINITY:
        return True
    return isinstance(value, int) and not isinstance(value, bool) and value >= 2


class CoxeterMatrix:
    """Immutable symmetric matrix of bond orders.

    Parameters
    ----------
    entries : sequence of sequences
        Square, symmetric, 1 on the diagonal; off-diagonal entries are
        integers >= 2 or INFINITY.
    labels : sequence of str, optional
        One display label per vertex.

    Raises
    ------
    DiagramError
        If the matrix is not square/symmetric, a diagonal entry is not 1,
        an off-diagonal entry is not a valid bond order, or the label
        count does not match the rank.
    """

    __slots__ = ("entries", "labels")

    def __init__(self, entries, labels=None):
        rows = [list(row) for row in entries]
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DiagramError(
                    f"matrix is not square: row {i} has length {len(row)}, expected {n}"
                )
        for i in range(n):
            if rows[i][i] != 1 or isinstance(rows[i][i], bool):
                raise DiagramError(f"diagonal entry at index {i} must be 1, got {rows[i][i]!r}")
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise DiagramError(
                        f"matrix is not symmetric at ({i}, {j}): "
                        f"{rows[i][j]!r} != {rows[j][i]!r}"
                    )
                if not _is_bond(rows[i][j]):
                    raise DiagramError(
                        f"invalid bond order at ({i}, {j}): {rows[i][j]!r} "
                        "(expected an integer >= 2, or INFINITY)"
                    )
        object.__setattr__(self, "entries", tuple(tuple(row) for row in rows))
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise DiagramError(f"{len(labels)} labels for {n} vertices")
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("CoxeterMatrix is immutable")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def bond(self, i: int, j: int):
        return self.entries[i][j]

    def edges(self):
        """All pairs (i, j, m) with i < j and m != 2, sorted."""
        out = []
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                m = self.entries[i][j]
                if m != 2:
                    out.append((i, j, m))
        return out

    def neighbours(self, v: int) -> tuple:
        return tuple(j for j in range(self.rank) if j != v and self.entries[v][j] != 2)

    def label_of(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return f"s{v + 1}"

    def __eq__(self, other):
        if not isinstance(other, CoxeterMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"CoxeterMatrix(rank={self.rank})"


def check_subset(mat: CoxeterMatrix, subset: Iterable[int]) -> tuple:
    """Return ``subset`` as a sorted tuple, validating indices against ``mat``."""
    seen = set()
    out = []
    for v in subset:
        if not isinstance(v, int) or isinstance(v, bool):
            raise DiagramError(f"vertex index {v!r} is not an integer")
        if v < 0 or v >= mat.rank:
            raise DiagramError(f"vertex index {v} out of range for rank {mat.rank}")
        if v in seen:
            raise DiagramError(f"duplicate vertex index {v}")
        seen.add(v)
        out.append(v)
    return tuple(sorted(out))


def parse_matrix(source) -> CoxeterMatrix:
    """Parse the JSON matrix format.

    The input is a JSON object ``{"matrix": [[...]], "labels": [...]}``
    (labels optional), or an already-decoded dict of the same shape.
    The integer 0 encodes INFINITY.
    """
    if isinstance(source, (bytes, bytearray)):
        source = source.decode("utf-8")
    if isinstance(source, str):
        try:
            source = json.loads(source)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"invalid JSON: {exc}") from exc
    if not isinstance(source, dict) or "matrix" not in source:
        raise DiagramError('expected a JSON object with a "matrix" key')
    raw = source["matrix"]
    if not isinstance(raw, list) or any(not isinstance(r, list) for r in raw):
        raise DiagramError('"matrix" must be a list of rows')
    rows = []
    for i, row in enumerate(raw):
        new = []
        for j, m in enumerate(row):
            if m == 0:
                new.append(INFINITY)
            elif isinstance(m, int) and not isinstance(m, bool) and (m == 1 or m >= 2):
                new.append(m)
            else:
                raise DiagramError(
                    f"invalid matrix entry at ({i}, {j}): {m!r} "
                    "(expected 1, an integer >= 2, or 0 for INFINITY)"
                )
        rows.append(new)
    return CoxeterMatrix(rows, source.get("labels"))


def _empty(n):
    return [[1 if i == j else 2 for j in range(n)] for i in range(n)]


def _set(rows, i, j, m):
    rows[i][j] = m
    rows[j][i] = m


def _path(n, bonds):
    # bonds[i] sits on edge (i, i+1)
    rows = _empty(n)
    for i, m in enumerate(bonds):
        _set(rows, i, i + 1, m)
    return rows


def _parse_param(text: str, what: str):
    text = text.strip()
    if text in ("inf", "Inf", "INF", "infinity"):
        return INFINITY
    if not text.isdigit():
        raise DiagramError(f"invalid {what}: {text!r}")
    return int(text)


_TERM_RE = re.compile(r"^(~?)([A-Z][a-z]*)(.*)$")


def _named_term(term: str):
    """Matrix rows for one summand of a diagram name."""
    m = _TERM_RE.match(term)
    if not m:
        raise DiagramError(f"cannot parse diagram name {term!r}")
    affine, fam, rest = m.group(1) == "~", m.group(2), m.group(3)

    if fam == "I" and rest.startswith("2(") and rest.endswith(")"):
        if affine:
            raise DiagramError(f"cannot parse diagram name {term!r}")
        p = _parse_param(rest[2:-1], "I2 parameter")
        if p != INFINITY and p < 2:
            raise DiagramError(f"I2({p}) needs parameter >= 2")
        return _path(2, [p])
    if fam == "Delta" and rest.startswith("(") and rest.endswith(")"):
        parts = rest[1:-1].split(",")
        if len(parts) != 3 or affine:
            raise DiagramError(f"cannot parse diagram name {term!r}")
        p, q, r = (_parse_param(x, "triangle bond") for x in parts)
        for v in (p, q, r):
            if v != INFINITY and v < 2:
                raise DiagramError(f"triangle bond {v} must be >= 2 or inf")
        rows = _empty(3)
        _set(rows, 0, 1, p)
        _set(rows, 0, 2, q)
        _set(rows, 1, 2, r)
        return rows

    if not rest.isdigit():
        raise DiagramError(f"cannot parse diagram name {term!r}")
    n = int(rest)

    def need(ok, lo=None):
        if not ok:
            what = f"needs rank >= {lo}" if lo else f"does not exist in rank {n}"
            raise DiagramError(f"{term!r}: family {'~' + fam if affine else fam} {what}")

    if not affine:
        if fam == "A":
            need(n >= 1, 1)
            return _path(n, [3] * (n - 1))
        if fam in ("B", "C"):
            need(n >= 2, 2)
            return _path(n, [3] * (n - 2) + [4])
        if fam == "D":
            need(n >= 4, 4)
            rows = _empty(n)
            for i in range(n - 3):
                _set(rows, i, i + 1, 3)
            _set(rows, n - 3, n - 2, 3)
            _set(rows, n - 3, n - 1, 3)
            return rows
        if fam == "E":
            need(n in (6, 7, 8))
            rows = _empty(n)
            for i in range(n - 2):
                _set(rows, i, i + 1, 3)
            _set(rows, 2, n - 1, 3)
            return rows
        if fam == "F":
            need(n == 4)
            return _path(4, [3, 4, 3])
        if fam == "G":
            need(n == 2)
            return _path(2, [6])
        if fam == "H":
            need(n in (2, 3, 4))
            return _path(n, [3] * (n - 2) + [5])
        if fam == "U":
            need(n >= 1, 1)
            rows = _empty(n)
            for i in range(n):
                for j in range(i + 1, n):
                    _set(rows, i, j, INFINITY)
            return rows
        raise DiagramError(f"unknown family {fam!r} in {term!r}")

    # affine types: "~X n" has rank n + 1
    if fam in ("A", "I"):
        need(n >= 1, 1)
        if n == 1:
            return _path(2, [INFINITY])
        if fam == "I":
            raise DiagramError(f"cannot parse diagram name {term!r}")
        rows = _empty(n + 1)
        for i in range(n):
            _set(rows, i, i + 1, 3)
        _set(rows, 0, n, 3)
        return rows
    if fam in ("B", "C"):
        if fam == "B":
            need(n >= 3, 3)
            rows = _empty(n + 1)
            _set(rows, 0, 1, 4)
            for i in range(1, n - 1):
                _set(rows, i, i + 1, 3)
            _set(rows, n - 2, n, 3)
            return rows
        need(n >= 2, 2)
        return _path(n + 1, [4] + [3] * (n - 2) + [4])
    if fam == "D":
        need(n >= 4, 4)
        rows = _empty(n + 1)
        _set(rows, 0, 2, 3)
        _set(rows, 1, 2, 3)
        for i in range(2, n - 2):
            _set(rows, i, i + 1, 3)
        _set(rows, n - 2, n - 1, 3)
        _set(rows, n - 2, n, 3)
        return rows
    if fam == "E":
        need(n in (6, 7, 8))
        rows = _empty(n + 1)
        if n == 6:
            for i in range(4):
                _set(rows, i, i + 1, 3)
            _set(rows, 2, 5, 3)
            _set(rows, 5, 6, 3)
        elif n == 7:
            for i in range(6):
                _set(rows, i, i + 1, 3)
            _set(rows, 3, 7, 3)
        else:
            for i in range(7):
                _set(rows, i, i + 1, 3)
            _set(rows, 2, 8, 3)
        return rows
    if fam == "F":
        need(n == 4)
        return _path(5, [3, 3, 4, 3])
    if fam == "G":
        need(n == 2)
        return _path(3, [6, 3])
    raise DiagramError(f"unknown affine family ~{fam} in {term!r}")


def parse_name(name: str) -> CoxeterMatrix:
    """Build the matrix of a named diagram.

    Grammar: terms joined by "+" (disjoint union), each term one of
    ``A4``, ``B3`` (= ``C3``), ``D5``, ``E6``/``E7``/``E8``, ``F4``,
    ``G2``, ``H2``/``H3``/``H4``, ``I2(m)`` (m >= 2 or ``inf``),
    ``Delta(p,q,r)`` (triangle with bonds m01=p, m02=q, m12=r),
    ``U n`` (all bonds INFINITY), or an affine ``~X n`` of rank n+1
    (``~A1``/``~I1`` is the infinite dihedral pair).
    """
    if not isinstance(name, str):
        raise DiagramError(f"diagram name must be a string, got {type(name).__name__}")
    cleaned = name.replace(" ", "")
    if not cleaned:
        raise DiagramError("empty diagram name")
    blocks = []
    for term in cleaned.split("+"):
        if not term:
            raise DiagramError(f"empty term in diagram name {name!r}")
        blocks.append(_named_term(term))
    total = sum(len(b) for b in blocks)
    rows = _empty(total)
    base = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                rows[base + i][base + j] = b[i][j]
        base += k
    return CoxeterMatrix(rows)


def parse_edge_list(text: str) -> CoxeterMatrix:
    """Parse the plain-text edge list format.

    First non-comment line is ``rank n``; every following line is
    ``i j m`` with 0-based vertex indices and the bond order m (an
    integer >= 3, or ``inf``/``0`` for INFINITY; a bare ``i j`` line
    means m = 3).  Pairs that are never listed default to m = 2.
    Lines starting with ``#`` and blank lines are skipped.
    """
    rank = None
    rows = None
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if rank is None:
            if len(parts) != 2 or parts[0] != "rank" or not parts[1].isdigit():
                raise DiagramError(f"line {lineno}: expected header 'rank n', got {raw!r}")
            rank = int(parts[1])
            rows = _empty(rank)
            continue
        if len(parts) == 2:
            parts = parts + ["3"]
        if len(parts) != 3:
            raise DiagramError(f"line {lineno}: expected 'i j m', got {raw!r}")
        if not (parts[0].lstrip("-").isdigit() and parts[1].lstrip("-").isdigit()):
            raise DiagramError(f"line {lineno}: bad vertex indices in {raw!r}")
        i, j = int(parts[0]), int(parts[1])
        m = _parse_param(parts[2], f"bond order on line {lineno}")
        if m == 0:
            m = INFINITY
        if not (0 <= i < rank and 0 <= j < rank):
            raise DiagramError(f"line {lineno}: vertex index out of range for rank {rank}")
        if i == j:
            raise DiagramError(f"line {lineno}: self-bond at vertex {i}")
        if m != INFINITY and m < 2:
            raise DiagramError(f"line {lineno}: bond order must be >= 2 or inf")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DiagramError(f"line {lineno}: bond ({i}, {j}) listed twice")
        seen.add(key)
        _set(rows, i, j, m)
    if rank is None:
        raise DiagramError("edge list has no 'rank n' header")
    return CoxeterMatrix(rows)


def disjoint_union(*mats: CoxeterMatrix) -> CoxeterMatrix:
    """Block-diagonal join of diagrams (vertices renumbered left to right)."""
    total = sum(m.rank for m in mats)
    rows = _empty(total)
    labels = []
    base = 0
    for m in mats:
        for i in range(m.rank):
            for j in range(m.rank):
                rows[base + i][base + j] = m.entries[i][j]
        labels.extend(m.labels if m.labels is not None else [None] * m.rank)
        base += m.rank
    if any(x is not None for x in labels):
        labels = [x if x is not None else f"s{i + 1}" for i, x in enumerate(labels)]
        return CoxeterMatrix(rows, labels)
    return CoxeterMatrix(rows)


def induced(mat: CoxeterMatrix, subset: Iterable[int]) -> CoxeterMatrix:
    """Sub-diagram spanned by ``subset`` (indices ascending)."""
    sub = check_subset(mat, subset)
    rows = [[mat.entries[i][j] for j in sub] for i in sub]
    labels = None
    if mat.labels is not None:
        labels = [mat.labels[i] for i in sub]
    return CoxeterMatrix(rows, labels)


def components(mat: CoxeterMatrix):
    """Connected components as sorted vertex tuples, ordered by smallest member.

    Adjacency means bond != 2; INFINITY counts as an edge.
    """
    seen = [False] * mat.rank
    out = []
    for start in range(mat.rank):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(mat.rank):
                if not seen[w] and mat.entries[v][w] != 2:
                    seen[w] = True
                    stack.append(w)
        out.append(tuple(sorted(comp)))
    return out


def neighbourhood(mat: CoxeterMatrix, subset: Iterable[int]) -> tuple:
    """Vertices outside ``subset`` adjacent to at least one of its members."""
    sub = check_subset(mat, subset)
    inside = set(sub)
    out = set()
    for v in sub:
        for w in range(mat.rank):
            if w not in inside and mat.entries[v][w] != 2:
                out.add(w)
    return tuple(sorted(out))
