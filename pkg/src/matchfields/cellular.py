"""Hypergraph view of a matching ideal and the co-interval property.

The generators of a matching ideal form a 3-uniform hypergraph on the x, y, z
vertices.  Slicing it along a z-vertex (and then a y-vertex) gives nested
layers; relabeling the vertices by first appearance turns the hypergraph into
a graph on integers 1..N whose min-vertex layers are recursively nested.
That recursive nesting is the co-interval property checked here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Optional

from .algebra import Monomial, VariableId, xvar, yvar, zvar
from .errors import ArityTooSmallError
from .matching import BlockStructure, MonomialIdeal, generator_triples, sort_generators


@dataclass(frozen=True)
class DGraph:
    """A d-uniform hypergraph: edges are sorted d-tuples of vertices."""

    d: int
    vertices: frozenset
    edges: frozenset

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("arity d must be at least 1")
        for e in self.edges:
            if len(e) != self.d or len(set(e)) != self.d:
                raise ValueError(f"edge {e} is not a {self.d}-set")
            if tuple(sorted(e)) != e:
                raise ValueError(f"edge {e} is not sorted")
            if not set(e) <= self.vertices:
                raise ValueError(f"edge {e} uses unknown vertices")

    @classmethod
    def from_edges(
        cls, d: int, edges: Iterable[Iterable[Hashable]], extra_vertices: Iterable = ()
    ) -> "DGraph":
        es = frozenset(tuple(sorted(e)) for e in edges)
        vs = frozenset(v for e in es for v in e) | frozenset(extra_vertices)
        return cls(d, vs, es)

    def sorted_edges(self) -> list[tuple]:
        return sorted(self.edges)


def hypergraph_H(a: BlockStructure) -> DGraph:
    """3-graph with one edge {x_l, y_u, z_v} per matching-field generator."""
    edges = [
        (xvar(t.x), yvar(t.y), zvar(t.z)) for t in generator_triples(a)
    ]
    return DGraph.from_edges(3, edges)


def z_layer(h: DGraph, k: int) -> DGraph:
    """2-graph of the {x, y} pairs appearing with z_k."""
    zk = zvar(k)
    edges = [tuple(v for v in e if v != zk) for e in h.edges if zk in e]
    return DGraph.from_edges(2, edges)


def zy_layer(h: DGraph, k: int, l: int) -> DGraph:
    """1-graph of the x vertices appearing with both z_k and y_l."""
    zk, yl = zvar(k), yvar(l)
    edges = [
        tuple(v for v in e if v != zk and v != yl)
        for e in h.edges
        if zk in e and yl in e
    ]
    return DGraph.from_edges(1, edges)


@dataclass(frozen=True)
class LayerReport:
    """Outcome of the layer-nesting checks on one matching field."""

    ok: bool
    witnesses: tuple[str, ...]
    lower_layers_nested: bool  # informational: y-nesting also held below the top


def check_layer_containment(a: BlockStructure) -> LayerReport:
    """Verify the nesting of z-layers and of y-layers within the top z-layer.

    For occurring z-values v < v' the z_v-layer is contained in the z_{v'}
    layer (the layer of a generator later in the block ordering sits inside
    that of an earlier one).  Within the top z-layer, the x-sets shrink along
    the block ordering of the y-values.  The same y-wise nesting evaluated in
    the lower z-layers is reported in lower_layers_nested without affecting
    ok.
    """
    h = hypergraph_H(a)
    witnesses: list[str] = []

    zvals = sorted({e[2].index for e in h.edges})
    for v, v2 in combinations(zvals, 2):
        if not z_layer(h, v).edges <= z_layer(h, v2).edges:
            witnesses.append(f"z_{v}-layer not contained in z_{v2}-layer")

    ordered = sort_generators(a)

    def y_nesting_holds(ztop: int, record: bool) -> bool:
        seen: list[int] = []
        for t in ordered:
            if t.z != ztop or t.y in seen:
                continue
            seen.append(t.y)
        good = True
        for earlier, later in combinations(seen, 2):
            if not zy_layer(h, ztop, later).edges <= zy_layer(h, ztop, earlier).edges:
                good = False
                if record:
                    witnesses.append(
                        f"in z_{ztop}-layer: y_{later} x-set not inside y_{earlier} x-set"
                    )
        return good

    top = zvals[-1]
    y_nesting_holds(top, record=True)
    lower_ok = all(y_nesting_holds(v, record=False) for v in zvals[:-1])

    return LayerReport(
        ok=not witnesses,
        witnesses=tuple(witnesses),
        lower_layers_nested=lower_ok,
    )


@dataclass(frozen=True)
class RelabelMap:
    """Vertex relabeling onto 1..m+k+l.

    m counts the distinct z-values; the largest z gets label 1.  k counts the
    distinct y-values of the top z-layer, labeled m+1.. in order of first
    appearance in the block ordering.  l counts the x-values of the
    (top z, first y) layer, labeled m+k+1.. in order of appearance.
    """

    m: int
    k: int
    l: int
    assignment: tuple[tuple[VariableId, int], ...]

    def as_dict(self) -> dict[VariableId, int]:
        return dict(self.assignment)

    @property
    def size(self) -> int:
        return self.m + self.k + self.l


def relabel_f(a: BlockStructure) -> RelabelMap:
    """Build the relabeling; every vertex of the hypergraph must be covered."""
    ordered = sort_generators(a)
    zvals = sorted({t.z for t in ordered})
    m = len(zvals)
    assignment: dict[VariableId, int] = {}
    for i, v in enumerate(reversed(zvals)):
        assignment[zvar(v)] = i + 1

    top = zvals[-1]
    yseq: list[int] = []
    for t in ordered:
        if t.z == top and t.y not in yseq:
            yseq.append(t.y)
    k = len(yseq)
    for i, u in enumerate(yseq):
        assignment[yvar(u)] = m + i + 1

    first_y = yseq[0]
    xseq: list[int] = []
    for t in ordered:
        if t.z == top and t.y == first_y and t.x not in xseq:
            xseq.append(t.x)
    l = len(xseq)
    for i, x in enumerate(xseq):
        assignment[xvar(x)] = m + k + i + 1

    missing = sorted(
        str(v)
        for t in ordered
        for v in (xvar(t.x), yvar(t.y), zvar(t.z))
        if v not in assignment
    )
    if missing:
        raise ValueError(f"relabeling does not cover: {', '.join(missing)}")

    return RelabelMap(m=m, k=k, l=l, assignment=tuple(sorted(assignment.items())))


def graph_G(a: BlockStructure) -> DGraph:
    """The relabeled 3-graph on the integer vertices 1..m+k+l."""
    f = relabel_f(a).as_dict()
    edges = [
        (f[zvar(t.z)], f[yvar(t.y)], f[xvar(t.x)])
        for t in generator_triples(a)
    ]
    return DGraph.from_edges(3, edges)


def v_layer(h: DGraph, v) -> DGraph:
    """Edges having v as their strict minimum, with v removed.

    The layer's vertex set is the support of its own edges: vertices of the
    parent that end up isolated do not carry over.
    """
    if h.d < 2:
        raise ArityTooSmallError("a 1-graph has no layers")
    edges = [e[1:] for e in h.edges if e[0] == v]
    return DGraph.from_edges(h.d - 1, edges)


def is_cointerval(h: DGraph) -> tuple[bool, Optional[tuple]]:
    """Recursive co-interval test.

    Every 1-graph is co-interval.  For d >= 2: every vertex layer must be
    co-interval and, for occurring vertices i < j, the j-layer must be an
    edge-subgraph of the i-layer.  A vertex lying in no edge has no bearing
    on the property.  Returns (ok, witness); the witness is a pair of
    vertices whose layers break the containment, or None.
    """
    if h.d == 1:
        return True, None
    vs = sorted({v for e in h.edges for v in e})
    layers = {v: v_layer(h, v) for v in vs}
    for i, j in combinations(vs, 2):
        if not layers[j].edges <= layers[i].edges:
            return False, (i, j)
    for v in vs:
        ok, witness = is_cointerval(layers[v])
        if not ok:
            return False, witness
    return True, None


def relabeled_ideal(a: BlockStructure) -> MonomialIdeal:
    """Squarefree ideal of the relabeled graph's edges.

    Lives in fresh variables t_1..t_N (N = m+k+l); they are represented as
    the x-family of an N-column single-family ring, which is all a monomial
    ideal needs.
    """
    g = graph_G(a)
    n = max(g.vertices)
    monos = [
        Monomial.of(n, xvar(e[0]), xvar(e[1]), xvar(e[2])) for e in g.edges
    ]
    return MonomialIdeal(frozenset(monos))
