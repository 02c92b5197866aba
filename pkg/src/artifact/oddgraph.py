"""Odd graphs over a diagram and the involution-class counts they carry.

For 1 <= k <= n the graph Gamma^k has one vertex for every k-subset of
generators whose sub-diagram decomposes into factors with a central
longest element, and an edge whenever two subsets differ by exchanging
one generator across an odd bond, the exchanged generators being
isolated inside their respective subsets.  Connected components
correspond to conjugacy classes of rank-k involutions, so the total
count is the sum over k of the number of components.

Edges are generated per odd bond (every retained set K disjoint from
the bond's neighbourhood contributes the edge K+{i} -- K+{j}); the
pairwise predicate ``odd_adjacent`` is the second, independent route
and the two are tested against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classify import (
    NON_SPHERICAL,
    IrreducibleType,
    TypeDecomposition,
    all_parts_central,
    classify_irreducible,
    coxeter_number,
    decompose,
    has_central_longest,
)
from .diagram import INFINITY, CoxeterMatrix, DiagramError, check_subset, induced
from .diagram import components as diagram_components

DEFAULT_BUDGET = 10_000_000

_A1 = IrreducibleType("A", 1)


class EnumerationBudgetError(RuntimeError):
    """Subset sweep visited more candidates than the budget allows."""


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _classify_component(mat, members):
    """Type of one connected component (members: ascending tuple)."""
    if len(members) == 1:
        return _A1
    rows = [[mat.entries[i][j] for j in members] for i in members]
    return classify_irreducible(CoxeterMatrix(rows))


def _sweep(mat, max_size, budget):
    """All spherical subsets up to max_size, components tracked incrementally.

    Returns (central, spherical): ``central[k]`` lists (subset, comps)
    pairs where comps is a tuple of (members, type) per connected
    component and every type has a central longest element;
    ``spherical`` is the list of all nonempty spherical subsets.

    Subsets grow by ascending vertex index, so output is in
    lexicographic order.  A subtree is abandoned as soon as a component
    goes non-spherical (supersets only ever merge more vertices into
    it, and a parabolic of a finite group stays finite, so the prune is
    sound).  Every candidate subset counts against ``budget``.
    """
    n = mat.rank
    entries = mat.entries
    central = {k: [] for k in range(1, max_size + 1)}
    spherical = []
    type_cache = {}
    central_cache = {}
    nodes = 0

    def comp_type(members):
        t = type_cache.get(members)
        if t is None:
            t = _classify_component(mat, members)
            type_cache[members] = t
        return t

    def is_central(t):
        c = central_cache.get(t)
        if c is None:
            c = has_central_longest(t)
            central_cache[t] = c
        return c

    def rec(subset, comps, deficit, start):
        nonlocal nodes
        for v in range(start, n):
            nodes += 1
            if nodes > budget:
                raise EnumerationBudgetError(
                    f"subset sweep exceeded budget of {budget} candidates "
                    f"(rank {n} diagram)"
                )
            touched, untouched = [], []
            row = entries[v]
            for comp in comps:
                if any(row[u] != 2 for u in comp[0]):
                    touched.append(comp)
                else:
                    untouched.append(comp)
            if touched:
                members = []
                for comp in touched:
                    members.extend(comp[0])
                members.append(v)
                members = tuple(sorted(members))
                t = comp_type(members)
                if t == NON_SPHERICAL:
                    continue
            else:
                members, t = (v,), _A1
            new_comps = tuple(untouched) + ((members, t),)
            new_deficit = (
                deficit
                - sum(0 if is_central(c[1]) else 1 for c in touched)
                + (0 if is_central(t) else 1)
            )
            new_subset = subset + (v,)
            spherical.append(new_subset)
            if new_deficit == 0:
                central[len(new_subset)].append((new_subset, new_comps))
            if len(new_subset) < max_size:
                rec(new_subset, new_comps, new_deficit, v + 1)

    if max_size >= 1:
        rec((), (), 0, 0)
    return central, spherical


@dataclass(frozen=True)
class OddGraph:
    """One graph Gamma^k (or Omega^k): vertices, edges, component ids."""

    k: int
    vertices: tuple
    edges: tuple
    component_id: dict
    kind: str = "gamma"

    @property
    def n_components(self):
        return len(set(self.component_id.values())) if self.component_id else 0

    def to_dict(self):
        return {
            "k": self.k,
            "kind": self.kind,
            "vertices": [list(v) for v in self.vertices],
            "component_of": [self.component_id[v] for v in self.vertices],
            "edges": [[list(a), list(b)] for a, b in self.edges],
        }


def _odd_bonds(mat):
    out = []
    for i, j, m in mat.edges():
        if m != INFINITY and m % 2 == 1:
            excluded = set(mat.neighbours(i)) | set(mat.neighbours(j)) | {i, j}
            out.append((i, j, excluded))
    return out


def _gamma_edges(mat, verts):
    """Edges among ``verts`` (a set of same-size vertex tuples), per odd bond."""
    vertset = set(verts)
    edges = set()
    for i, j, excluded in _odd_bonds(mat):
        for v in verts:
            if i not in v or j in v:
                continue
            kept = tuple(x for x in v if x != i)
            if any(x in excluded for x in kept):
                continue
            other = tuple(sorted(kept + (j,)))
            if other not in vertset:
                raise AssertionError(
                    f"swap across odd bond ({i},{j}) left the vertex set: {v} -> {other}"
                )
            edges.add((v, other) if v < other else (other, v))
    return sorted(edges)


def _components(verts, edges):
    index = {v: i for i, v in enumerate(verts)}
    uf = _UnionFind(len(verts))
    for a, b in edges:
        uf.union(index[a], index[b])
    component_id = {}
    next_id = 0
    roots = {}
    for v in verts:  # verts are lexicographically sorted
        root = uf.find(index[v])
        if root not in roots:
            roots[root] = next_id
            next_id += 1
        component_id[v] = roots[root]
    return component_id


def _check_k(mat, k):
    if not isinstance(k, int) or isinstance(k, bool):
        raise DiagramError(f"k must be an integer, got {k!r}")
    if k < 1 or k > mat.rank:
        raise DiagramError(f"k={k} out of range for a rank-{mat.rank} diagram")


def gamma_k(mat: CoxeterMatrix, k: int, budget=DEFAULT_BUDGET) -> OddGraph:
    """The graph Gamma^k of the diagram."""
    _check_k(mat, k)
    central, _ = _sweep(mat, k, budget)
    verts = [s for s, _ in central[k]]
    edges = _gamma_edges(mat, verts)
    return OddGraph(
        k=k,
        vertices=tuple(verts),
        edges=tuple(edges),
        component_id=_components(verts, edges),
    )


def odd_adjacent(mat: CoxeterMatrix, J, K) -> bool:
    """Single-swap adjacency test for two vertex subsets.

    True iff J and K differ by one generator swapped across a finite
    odd bond, the swapped generators are isolated inside their own
    subsets, and both subsets are genuine Gamma^k vertices (every
    component type has a central longest element).  Total on arbitrary
    subset pairs: anything else is simply not adjacent.
    """
    J = check_subset(mat, J)
    K = check_subset(mat, K)
    if len(J) != len(K) or J == K:
        return False
    sj, sk = set(J), set(K)
    only_j, only_k = sj - sk, sk - sj
    if len(only_j) != 1 or len(only_k) != 1:
        return False
    l, m = only_j.pop(), only_k.pop()
    bond = mat.bond(l, m)
    if bond == INFINITY or bond == 2 or bond % 2 == 0:
        return False
    if any(mat.bond(l, x) != 2 for x in sj if x != l):
        return False
    if any(mat.bond(m, x) != 2 for x in sk if x != m):
        return False
    return all_parts_central(decompose(mat, J)) and all_parts_central(decompose(mat, K))


def longest_element_word(mat: CoxeterMatrix, subset) -> list:
    """Word for the longest element of the (central-list) parabolic on subset.

    Per irreducible component, the ascending generators repeated h/2
    times (the longest element is the h/2-th power of the component's
    Coxeter element; central-list types have all exponents odd, which
    makes that power well defined and central).
    """
    subset = check_subset(mat, subset)
    comps = []
    sub = induced(mat, subset)
    for local in diagram_components(sub):
        members = tuple(subset[i] for i in local)
        comps.append((members, _classify_component(mat, members)))
    return _word_from_components(comps)


def _word_from_components(comps):
    word = []
    for members, t in sorted(comps):
        if t == NON_SPHERICAL or not has_central_longest(t):
            raise DiagramError(
                f"component {members} has no central longest element (type {t})"
            )
        h = coxeter_number(t)
        word.extend(list(members) * (h // 2))
    return word


@dataclass(frozen=True)
class ClassInfo:
    """One conjugacy class of involutions: rank, defining subset, type, word."""

    rank: int
    subset: tuple
    decomposition: TypeDecomposition
    word: tuple

    def to_dict(self):
        return {
            "rank": self.rank,
            "subset": list(self.subset),
            "type": str(self.decomposition),
            "word": list(self.word),
        }


@dataclass(frozen=True)
class Bounds:
    omega_lower: int
    maximal_spherical_upper: int
    numeric_upper: int
    is_finite: bool

    def to_dict(self):
        return {
            "omega_lower": self.omega_lower,
            "maximal_spherical_upper": self.maximal_spherical_upper,
            "numeric_upper": self.numeric_upper,
            "is_finite": self.is_finite,
        }


@dataclass(frozen=True)
class InvolutionClassReport:
    per_rank: tuple
    total: int
    classes: tuple
    bounds: Optional[Bounds] = None

    def to_dict(self):
        out = {
            "per_rank": list(self.per_rank),
            "total": self.total,
            "classes": [c.to_dict() for c in self.classes],
        }
        if self.bounds is not None:
            out["bounds"] = self.bounds.to_dict()
        return out


def _graphs_from_sweep(mat, central):
    """One OddGraph per k from a completed sweep."""
    graphs = {}
    for k, items in central.items():
        verts = [s for s, _ in items]
        edges = _gamma_edges(mat, verts)
        graphs[k] = OddGraph(
            k=k,
            vertices=tuple(verts),
            edges=tuple(edges),
            component_id=_components(verts, edges),
        )
    return graphs


def cc2(mat: CoxeterMatrix, include_bounds=False, budget=DEFAULT_BUDGET) -> InvolutionClassReport:
    """Count and describe all conjugacy classes of involutions.

    per_rank[k-1] is the number of components of Gamma^k; every class
    is reported with its lexicographically smallest vertex subset and
    a word for the longest element of the parabolic on that subset.
    """
    n = mat.rank
    central, _ = _sweep(mat, n, budget)
    comps_of = {s: c for k in central for s, c in central[k]}
    graphs = _graphs_from_sweep(mat, central)
    per_rank = []
    classes = []
    for k in range(1, n + 1):
        graph = graphs[k]
        per_rank.append(graph.n_components)
        seen = set()
        for v in graph.vertices:  # lex order: first hit per component is its smallest subset
            cid = graph.component_id[v]
            if cid in seen:
                continue
            seen.add(cid)
            comps = comps_of[v]
            classes.append(
                ClassInfo(
                    rank=k,
                    subset=v,
                    decomposition=TypeDecomposition(t for _, t in comps),
                    word=tuple(_word_from_components(comps)),
                )
            )
    report_bounds = bounds(mat, budget=budget) if include_bounds else None
    return InvolutionClassReport(
        per_rank=tuple(per_rank),
        total=sum(per_rank),
        classes=tuple(classes),
        bounds=report_bounds,
    )


def omega_k(mat: CoxeterMatrix, k: int, budget=DEFAULT_BUDGET) -> OddGraph:
    """The coarser graph Omega^k: for k >= 2, vertices are adjacent iff
    their parabolic subgroups are isomorphic, i.e. iff their type
    multisets coincide; Omega^1 is Gamma^1 verbatim."""
    _check_k(mat, k)
    if k == 1:
        g = gamma_k(mat, 1, budget=budget)
        return OddGraph(
            k=1, vertices=g.vertices, edges=g.edges, component_id=g.component_id,
            kind="omega",
        )
    central, _ = _sweep(mat, k, budget)
    verts = [s for s, _ in central[k]]
    by_type = {}
    dec_of = {s: TypeDecomposition(t for _, t in c) for s, c in central[k]}
    for s in verts:
        by_type.setdefault(dec_of[s], []).append(s)
    edges = []
    for group in by_type.values():
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                x, y = group[a], group[b]
                edges.append((x, y) if x < y else (y, x))
    edges.sort()
    return OddGraph(
        k=k,
        vertices=tuple(verts),
        edges=tuple(edges),
        component_id=_components(verts, edges),
        kind="omega",
    )


def bounds(mat: CoxeterMatrix, budget=DEFAULT_BUDGET) -> Bounds:
    """Lower and upper estimates for the involution class count.

    Lower: components of Omega^k summed over k (for k >= 2 that is the
    number of distinct type multisets, since same-type vertices are
    directly adjacent).  Upper: the count summed over all
    inclusion-maximal spherical subsets, plus the blunt numeric bound
    2^n - 1 (finite) / 2^n - 2 (infinite).
    """
    n = mat.rank
    central, spherical = _sweep(mat, n, budget)
    sph_set = set(spherical)
    finite = n == 0 or tuple(range(n)) in sph_set
    omega_lower = 0
    if n >= 1:
        g1 = _graphs_from_sweep(mat, {1: central[1]})[1]
        omega_lower += g1.n_components
        for k in range(2, n + 1):
            decs = {TypeDecomposition(t for _, t in c) for _, c in central[k]}
            omega_lower += len(decs)

    maximal = []
    for s in sph_set:
        inside = set(s)
        if all(
            tuple(sorted(s + (v,))) not in sph_set
            for v in range(n)
            if v not in inside
        ):
            maximal.append(s)
    upper = 0
    for s in sorted(maximal):
        upper += cc2(induced(mat, s), budget=budget).total

    numeric = 2**n - 1 if finite else 2**n - 2
    return Bounds(
        omega_lower=omega_lower,
        maximal_spherical_upper=upper,
        numeric_upper=numeric,
        is_finite=finite,
    )


def _vertex_name(v):
    return "W_{" + ",".join(str(i + 1) for i in v) + "}"


def export_dot(graph: OddGraph, title=None) -> str:
    """Graphviz source: one cluster subgraph per connected component."""
    name = title or f"{graph.kind}{graph.k}"
    by_component = {}
    for v in graph.vertices:
        by_component.setdefault(graph.component_id[v], []).append(v)
    lines = [f'graph "{name}" {{']
    for cid in sorted(by_component):
        lines.append(f"  subgraph cluster_{cid} {{")
        for v in by_component[cid]:
            lines.append(f'    "{_vertex_name(v)}";')
        for a, b in graph.edges:
            if graph.component_id[a] == cid:
                lines.append(f'    "{_vertex_name(a)}" -- "{_vertex_name(b)}";')
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
