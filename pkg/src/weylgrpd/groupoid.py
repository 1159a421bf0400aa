"""Weyl groupoid of a Cartan graph: morphisms, real roots, Coxeter data.

A morphism ``x -> y`` is an integer matrix acting on column coordinate
vectors with respect to the bases ``alpha^x`` and ``alpha^y``.  Two
morphisms are equal iff source, target and matrix agree; the word that
produced a morphism is kept for provenance only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import StateCapExceeded
from .graph import CartanGraph

IntMatrix = tuple[tuple[int, ...], ...]
RealRootSet = dict[int, frozenset[tuple[int, ...]]]
CoxeterMatrix = dict[int, IntMatrix]

DEFAULT_STATE_CAP = 10**6
DEFAULT_PUSH_CAP = 10**6


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def apply(a: IntMatrix, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


@dataclass(frozen=True)
class GroupoidMorphism:
    source: int
    target: int
    matrix: IntMatrix
    word: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    def then(self, other: GroupoidMorphism) -> GroupoidMorphism:
        """``other`` after ``self``."""
        if other.source != self.target:
            raise ValueError(
                f"cannot compose: {self.target} is not the source {other.source}"
            )
        return GroupoidMorphism(
            self.source, other.target, matmul(other.matrix, self.matrix),
            self.word + other.word,
        )

    @property
    def is_identity(self) -> bool:
        return self.source == self.target and self.matrix == identity_matrix(len(self.matrix))


def _generator(a, i: int) -> IntMatrix:
    # column j is e_j - a_ij e_i
    n = len(a)
    return tuple(
        tuple(int(r == c) - (a[i - 1][c] if r == i - 1 else 0) for c in range(n))
        for r in range(n)
    )


def generator_matrix(g: CartanGraph, x: int, i: int) -> GroupoidMorphism:
    """The simple reflection ``(s_i)_x : x -> r_i(x)``."""
    return GroupoidMorphism(x, g.neighbor(x, i), _generator(g.serre(x), i), ((x, i),))


def identity(g: CartanGraph, x: int) -> GroupoidMorphism:
    return GroupoidMorphism(x, x, identity_matrix(g.color_count))


def evaluate_word(g: CartanGraph, x: int, colors: Iterable[int]) -> GroupoidMorphism:
    """Compose generators left to right, starting at ``x``.

    ``colors = (i, j)`` applies ``s_i`` at ``x`` first and then ``s_j`` at
    ``r_i(x)``.
    """
    mor = identity(g, x)
    for i in colors:
        mor = mor.then(generator_matrix(g, mor.target, i))
    return mor


def _generator_table(g: CartanGraph):
    return {
        (v.id, i): (g.neighbor(v.id, i), _generator(v.serre, i))
        for v in g.vertices for i in g.colors
    }


def real_roots(g: CartanGraph, max_pushes: int = DEFAULT_PUSH_CAP) -> RealRootSet:
    """Real roots at every vertex, in the coordinates of that vertex.

    Seeds each vertex with ``+-alpha_i`` and pushes roots along every
    generator until nothing new appears.
    """
    n = g.color_count
    table = _generator_table(g)
    sets = {v.id: set() for v in g.vertices}
    work = deque()
    for v in g.vertices:
        for k in range(n):
            for s in (1, -1):
                r = tuple(s * int(c == k) for c in range(n))
                sets[v.id].add(r)
                work.append((v.id, r))
    pushes = 0
    while work:
        x, r = work.popleft()
        for i in g.colors:
            pushes += 1
            if pushes > max_pushes:
                raise StateCapExceeded(max_pushes)
            y, mat = table[x, i]
            r2 = apply(mat, r)
            if r2 not in sets[y]:
                sets[y].add(r2)
                work.append((y, r2))
    return {x: frozenset(s) for x, s in sets.items()}


def coxeter_exponent(roots_x: Iterable[tuple[int, ...]], i: int, j: int) -> int:
    """Number of real roots in ``N_0 alpha_i + N_0 alpha_j``."""
    keep = {i - 1, j - 1}
    return sum(
        1 for r in roots_x
        if all(c == 0 for k, c in enumerate(r) if k not in keep)
        and all(r[k] >= 0 for k in keep)
    )


def coxeter_matrix(g: CartanGraph, roots: RealRootSet) -> CoxeterMatrix:
    n = g.color_count
    return {
        v.id: tuple(
            tuple(coxeter_exponent(roots[v.id], i, j) for j in range(1, n + 1))
            for i in range(1, n + 1)
        )
        for v in g.vertices
    }


def coxeter_from_serre(a_ij: int, a_ji: int) -> int | None:
    """Order of ``s_i s_j`` predicted by the Serre matrix entries.

    Only products 0, 1, 2 are covered; anything else returns None.
    """
    return {0: 2, 1: 3, 2: 4}.get(a_ij * a_ji)


def coxeter_rule_violations(g: CartanGraph, cox: CoxeterMatrix) -> list:
    """Entries where ``m(x)_ij`` disagrees with the Serre-matrix rule."""
    bad = []
    for v in g.vertices:
        a = v.serre
        for i in g.colors:
            for j in g.colors:
                if i == j:
                    continue
                want = coxeter_from_serre(a[i - 1][j - 1], a[j - 1][i - 1])
                got = cox[v.id][i - 1][j - 1]
                if want != got:
                    bad.append((v.id, i, j, want, got))
    return bad


def braid_relation_holds(g: CartanGraph, x: int, i: int, j: int, m: int) -> bool:
    """Whether ``(s_i s_j)^m`` starting at ``x`` is the identity of ``x``."""
    return evaluate_word(g, x, (j, i) * m).is_identity


def hom_set(g: CartanGraph, x: int, y: int,
            cap: int = DEFAULT_STATE_CAP) -> set[GroupoidMorphism]:
    """All morphisms ``x -> y``, found by BFS over (vertex, matrix) states."""
    table = _generator_table(g)
    start = (x, identity_matrix(g.color_count))
    words = {start: ()}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        v, mat = state
        for i in g.colors:
            w, gen = table[v, i]
            nxt = (w, matmul(gen, mat))
            if nxt not in words:
                if len(words) >= cap:
                    raise StateCapExceeded(cap)
                words[nxt] = words[state] + ((v, i),)
                queue.append(nxt)
    return {
        GroupoidMorphism(x, v, mat, word)
        for (v, mat), word in words.items() if v == y
    }


def aut_order(g: CartanGraph, x: int, cap: int = DEFAULT_STATE_CAP) -> int:
    return len(hom_set(g, x, x, cap))
