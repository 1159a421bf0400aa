"""Cartan graphs built by closing a seed datum under odd reflections.

Vertices are ordered root bases written in the coordinates of the seed
lattice; two vertices coincide only when their ordered bases coincide.
Loops are stored as ordinary edges with ``source == target``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Sequence

from .cartan import (
    SerreMatrix,
    SymmetricCartanDatum,
    is_odd_isotropic,
    odd_reflect_datum,
    serre_matrix,
)
from .errors import NotIsotropic, VertexCapExceeded

RootBase = tuple[tuple[int, ...], ...]

DEFAULT_MAX_VERTICES = 10_000


@dataclass(frozen=True)
class Vertex:
    """A vertex of a Cartan graph.

    Engine-built vertices carry ``root_base`` and ``datum``; vertices of the
    combinatorial family graphs carry a ``key`` (a family vertex) instead.
    """

    id: int
    serre: SerreMatrix
    root_base: RootBase | None = None
    datum: SymmetricCartanDatum | None = None
    key: object = None

    @property
    def label(self) -> str | None:
        return None if self.key is None else str(self.key)


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    color: int

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


class CartanGraph:
    """An edge-colored graph with a Serre matrix at every vertex.

    Colors run over ``1..color_count``.  The graph is not required to satisfy
    the Cartan graph axioms; see :func:`verify_axioms`.
    """

    def __init__(self, color_count: int, vertices: Sequence[Vertex],
                 edges: Sequence[Edge], seed: SymmetricCartanDatum | None = None):
        self.color_count = color_count
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self.seed = seed
        for k, v in enumerate(self.vertices):
            if v.id != k:
                raise ValueError(f"vertex at position {k} has id {v.id}")
        self._incident: dict[tuple[int, int], list[int]] = {}
        for e in self.edges:
            self._incident.setdefault((e.source, e.color), []).append(e.target)
            if not e.is_loop:
                self._incident.setdefault((e.target, e.color), []).append(e.source)

    def __len__(self):
        return len(self.vertices)

    @property
    def colors(self) -> range:
        return range(1, self.color_count + 1)

    def serre(self, x: int) -> SerreMatrix:
        return self.vertices[x].serre

    def neighbors(self, x: int, i: int) -> list[int]:
        return list(self._incident.get((x, i), ()))

    def neighbor(self, x: int, i: int) -> int:
        """``r_i(x)``; raises if vertex ``x`` does not have exactly one ``i``-edge."""
        nbrs = self._incident.get((x, i), ())
        if len(nbrs) != 1:
            raise ValueError(f"vertex {x} has {len(nbrs)} edges of color {i}")
        return nbrs[0]

    def label(self, x: int) -> str:
        lab = self.vertices[x].label
        return str(x) if lab is None else lab


def reflect_root_base(base: RootBase, datum: SymmetricCartanDatum, i: int) -> RootBase:
    """Ordered root base after the odd reflection at color ``i``.

    ``alpha_i`` is negated and every ``alpha_j`` pairing nontrivially with it
    becomes ``alpha_j + alpha_i``.
    """
    if not is_odd_isotropic(datum, i):
        raise NotIsotropic(f"simple root {i} is not odd isotropic")
    ai = base[i - 1]
    out = []
    for j, aj in enumerate(base, start=1):
        if j == i:
            out.append(tuple(-c for c in ai))
        elif datum.b(i, j) == 0:
            out.append(aj)
        else:
            out.append(tuple(a + b for a, b in zip(aj, ai)))
    return tuple(out)


def build_cartan_graph(seed: SymmetricCartanDatum,
                       max_vertices: int = DEFAULT_MAX_VERTICES) -> CartanGraph:
    """Connected component of the Cartan graph containing ``seed``.

    Breadth-first, colors in increasing order, so vertex ids are
    deterministic.  Raises :class:`VertexCapExceeded` when the component has
    more than ``max_vertices`` vertices.
    """
    n = seed.n
    identity = tuple(tuple(int(r == c) for c in range(n)) for r in range(n))
    vertices = [Vertex(0, serre_matrix(seed), identity, seed)]
    index = {identity: 0}
    edges, seen_edges = [], set()
    queue = deque([0])
    while queue:
        x = queue.popleft()
        vx = vertices[x]
        for i in range(1, n + 1):
            if not is_odd_isotropic(vx.datum, i):
                edges.append(Edge(x, x, i))
                continue
            base = reflect_root_base(vx.root_base, vx.datum, i)
            y = index.get(base)
            if y is None:
                if len(vertices) >= max_vertices:
                    raise VertexCapExceeded(max_vertices)
                y = len(vertices)
                datum = odd_reflect_datum(vx.datum, i)
                vertices.append(Vertex(y, serre_matrix(datum), base, datum))
                index[base] = y
                queue.append(y)
            key = (min(x, y), max(x, y), i)
            if key not in seen_edges:
                seen_edges.add(key)
                edges.append(Edge(x, y, i))
    return CartanGraph(n, vertices, edges, seed)


@dataclass
class AxiomReport:
    cg1: bool = True
    cg2: bool = True
    cg3: bool = True
    cg4: bool = True
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.cg1 and self.cg2 and self.cg3 and self.cg4

    def summary(self) -> str:
        return " ".join(
            f"{name.upper()}: {'pass' if getattr(self, name) else 'FAIL'}"
            for name in ("cg1", "cg2", "cg3", "cg4")
        )


def verify_axioms(g: CartanGraph, roots) -> AxiomReport:
    """Check (CG1)-(CG4) given the real roots computed on ``g``.

    ``roots`` maps vertex ids to sets of coordinate vectors.  CG3 and CG4
    are only meaningful once CG1 holds, so they are skipped (reported
    False) when it fails.
    """
    from .groupoid import coxeter_matrix

    rep = AxiomReport()
    for v in g.vertices:
        counts = Counter()
        for e in g.edges:
            if e.source == v.id or e.target == v.id:
                counts[e.color] += 1
        for i in g.colors:
            if counts[i] != 1:
                rep.cg1 = False
                rep.counterexamples.append(
                    ("CG1", v.id, i, f"{counts[i]} edges of color {i}")
                )
    for e in g.edges:
        if e.is_loop:
            continue
        a, b = g.serre(e.source), g.serre(e.target)
        if a[e.color - 1] != b[e.color - 1]:
            rep.cg2 = False
            rep.counterexamples.append(
                ("CG2", (e.source, e.target), e.color, "Serre rows differ")
            )
    if not rep.cg1:
        rep.cg3 = rep.cg4 = False
        return rep
    for v in g.vertices:
        for r in roots[v.id]:
            if any(c > 0 for c in r) and any(c < 0 for c in r):
                rep.cg3 = False
                rep.counterexamples.append(("CG3", v.id, r, "mixed signs"))
                break
    cox = coxeter_matrix(g, roots)
    for v in g.vertices:
        m = cox[v.id]
        for i in g.colors:
            for j in g.colors:
                y = v.id
                for _ in range(m[i - 1][j - 1]):
                    y = g.neighbor(g.neighbor(y, j), i)
                if y != v.id:
                    rep.cg4 = False
                    rep.counterexamples.append(
                        ("CG4", v.id, (i, j), f"(r_i r_j)^{m[i - 1][j - 1]} ends at {y}")
                    )
    return rep
