"""Partition combinatorics for sl(m|n), gl(n|n), osp(2m+1|2n) and osp(2m|2n).

Borel subalgebras with a fixed even part are labelled by partitions fitting
in an ``m x n`` rectangle (plus a sign for osp(2m|2n)).  Young diagrams are
drawn with the longest row at the bottom; rows are counted from the top,
so the box in row ``r`` and column ``c`` carries the number ``r + c - 1``.
Odd reflections add or remove a single box.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .cartan import EVEN, ODD, CartanDatum, Parity, SerreMatrix, symmetrize
from .graph import CartanGraph, Edge, Vertex, build_cartan_graph

FAMILIES = ("sl", "gl", "osp_odd", "osp_even")

WeightVector = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]
    m: int
    n: int

    def __post_init__(self):
        parts = tuple(p for p in self.parts if p)
        object.__setattr__(self, "parts", parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts {parts} are not weakly decreasing")
        if len(parts) > self.m or (parts and parts[0] > self.n):
            raise ValueError(f"{parts} does not fit in a {self.m}x{self.n} rectangle")

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __len__(self):
        return sum(self.parts)

    def part(self, k: int) -> int:
        """``lambda_k`` (1-based), zero past the last part."""
        return self.parts[k - 1] if k <= len(self.parts) else 0

    def row(self, r: int) -> int:
        """Length of row ``r`` counted from the top of the rectangle."""
        return self.part(self.m + 1 - r)

    def __contains__(self, box):
        r, c = box
        return 1 <= r <= self.m and 1 <= c <= self.row(r)

    def boxes(self):
        return [(r, c) for r in range(1, self.m + 1) for c in range(1, self.row(r) + 1)]

    def _with_row(self, r: int, length: int) -> Partition:
        rows = [self.row(k) for k in range(1, self.m + 1)]
        rows[r - 1] = length
        return Partition(tuple(reversed(rows)), self.m, self.n)

    def addable(self, r: int, c: int) -> bool:
        return (1 <= r <= self.m and 1 <= c <= self.n and self.row(r) == c - 1
                and (r == self.m or self.row(r + 1) >= c))

    def removable(self, r: int, c: int) -> bool:
        return (1 <= r <= self.m and self.row(r) == c >= 1
                and (r == 1 or self.row(r - 1) < c))

    def add_box(self, k: int) -> Partition | None:
        """Add the box numbered ``k`` if one is addable."""
        for r in range(1, self.m + 1):
            c = k + 1 - r
            if self.addable(r, c):
                return self._with_row(r, c)
        return None

    def remove_box(self, k: int) -> Partition | None:
        for r in range(1, self.m + 1):
            c = k + 1 - r
            if self.removable(r, c):
                return self._with_row(r, c - 1)
        return None

    def toggle_box(self, k: int) -> Partition | None:
        """Add or remove the box numbered ``k``; at most one of the two applies."""
        return self.add_box(k) or self.remove_box(k)


@dataclass(frozen=True)
class Shuffle:
    """An ``(m, n)``-shuffle given by its values ``sigma(1), ..., sigma(m+n)``."""

    values: tuple[int, ...]
    m: int
    n: int

    def __post_init__(self):
        v, m, n = self.values, self.m, self.n
        if sorted(v) != list(range(1, m + n + 1)):
            raise ValueError(f"{v} is not a permutation of 1..{m + n}")
        low = [x for x in v if x <= m]
        high = [x for x in v if x > m]
        if low != sorted(low) or high != sorted(high):
            raise ValueError(f"{v} is not an ({m},{n})-shuffle")

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def path(self) -> str:
        return "".join("d" if x <= self.m else "r" for x in self.values)


def partitions_in_rectangle(m: int, n: int) -> list[Partition]:
    """All partitions in an ``m x n`` rectangle, by size then reverse lex."""
    out = []
    for downs in combinations(range(m + n), m):
        out.append(shuffle_to_partition(_shuffle_from_downs(downs, m, n)))
    return sorted(out, key=lambda p: (len(p), tuple(-x for x in p.parts)))


def all_shuffles(m: int, n: int) -> list[Shuffle]:
    return [_shuffle_from_downs(d, m, n) for d in combinations(range(m + n), m)]


def _shuffle_from_downs(downs, m, n) -> Shuffle:
    low, high = iter(range(1, m + 1)), iter(range(m + 1, m + n + 1))
    downs = set(downs)
    return Shuffle(tuple(next(low) if k in downs else next(high)
                         for k in range(m + n)), m, n)


def shuffle_to_partition(s: Shuffle) -> Partition:
    """Boxes below the lattice path (down for ``sigma(i) <= m``, else right)."""
    rows, rights = [], 0
    for step in s.path():
        if step == "r":
            rights += 1
        else:
            rows.append(rights)
    return Partition(tuple(reversed(rows)), s.m, s.n)


def partition_to_shuffle(p: Partition) -> Shuffle:
    m, n = p.m, p.n
    path, prev = [], 0
    for r in range(1, m + 1):
        path += ["r"] * (p.row(r) - prev) + ["d"]
        prev = p.row(r)
    path += ["r"] * (n - prev)
    return _shuffle_from_downs([k for k, st in enumerate(path) if st == "d"], m, n)


@dataclass(frozen=True)
class FamilyVertex:
    """A Borel subalgebra ``b(lambda)`` or ``b(lambda, sign)``."""

    family: str
    m: int
    n: int
    lam: Partition
    sign: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if (self.lam.m, self.lam.n) != (self.m, self.n):
            raise ValueError("partition box does not match (m, n)")
        full = self.lam.part(1) == self.n
        if self.family != "osp_even":
            if self.sign is not None:
                raise ValueError("only osp_even vertices carry a sign")
        elif full and self.sign != "±":
            raise ValueError("lambda_1 = n forces the sign ±")
        elif not full and self.sign not in ("+", "-"):
            raise ValueError("sign must be + or - when lambda_1 < n")

    def __str__(self):
        return str(self.lam) + (self.sign or "")

    @property
    def rank(self) -> int:
        return family_rank(self.family, self.m, self.n)

    @property
    def shuffle(self) -> Shuffle:
        return partition_to_shuffle(self.lam)


def family_rank(family: str, m: int, n: int) -> int:
    return m + n - 1 if family in ("sl", "gl") else m + n


def _check_mn(family, m, n):
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if family_rank(family, m, n) < 1:
        raise ValueError("rank must be positive")


def _vertex(family, m, n, lam, sign=None) -> FamilyVertex:
    if family == "osp_even":
        if lam.part(1) == n:
            sign = "±"
        return FamilyVertex(family, m, n, lam, sign)
    return FamilyVertex(family, m, n, lam)


def family_vertices(family: str, m: int, n: int) -> list[FamilyVertex]:
    _check_mn(family, m, n)
    out = []
    for lam in partitions_in_rectangle(m, n):
        if family == "osp_even" and lam.part(1) < n:
            out += [FamilyVertex(family, m, n, lam, "+"), FamilyVertex(family, m, n, lam, "-")]
        else:
            out.append(_vertex(family, m, n, lam))
    return out


def standard_vertex(family: str, m: int, n: int) -> FamilyVertex:
    _check_mn(family, m, n)
    return _vertex(family, m, n, Partition((), m, n), "+")


def expected_vertex_count(family: str, m: int, n: int) -> int:
    if family == "osp_even":
        return 2 * comb(m + n, m) - comb(m + n - 1, n)
    return comb(m + n, m)


def box_moves(v: FamilyVertex) -> list[tuple[int, FamilyVertex]]:
    """Non-loop odd reflections at ``v`` as ``(color, target)`` pairs."""
    fam, m, n, lam = v.family, v.m, v.n, v.lam
    top = m + n - 1  # number of the bottom-right box
    out = []
    for i in range(1, v.rank + 1):
        new, sign = None, v.sign
        if fam != "osp_even":
            if i <= top:
                new = lam.toggle_box(i)
        elif v.sign == "+":
            if i <= top:
                new = lam.toggle_box(i)
        elif v.sign == "-":
            if i < top:
                new = lam.toggle_box(i)
            elif i == top + 1:
                new = lam.add_box(top)
        else:
            if i < top:
                new = lam.toggle_box(i)
            else:
                new = lam.remove_box(top)
                sign = "+" if i == top else "-"
        if new is not None:
            out.append((i, _vertex(fam, m, n, new, sign)))
    return out


def _unit(k: int, size: int, c: int = 1) -> list[int]:
    v = [0] * size
    v[k - 1] = c
    return v


def _eps_diff(a: int, b: int, size: int) -> list[int]:
    v = _unit(a, size)
    v[b - 1] -= 1
    return v


def _parity(a: int, b: int, m: int) -> Parity:
    return EVEN if (a <= m) == (b <= m) else ODD


def _row(size: int, i: int, entries: dict[int, int]) -> list[int]:
    row = [0] * size
    for offset, val in entries.items():
        j = i + offset
        if 1 <= j <= size:
            row[j - 1] = val
    return row


def _chain_row(size: int, i: int, t: Parity) -> list[int]:
    return _row(size, i, {-1: -1, 0: 2, 1: -1} if t == EVEN else {-1: -1, 0: 0, 1: 1})


def simple_roots(v: FamilyVertex) -> tuple[list[WeightVector], CartanDatum]:
    """Ordered simple roots in epsilon coordinates and the Cartan datum.

    The datum is the closed form read off row by row; it is not symmetric in
    general.  For osp roots, ``epsilon_{-k}`` is written as ``-epsilon_k``.
    """
    fam, m, n = v.family, v.m, v.n
    s, size, r = v.shuffle, m + n, v.rank
    roots = [_eps_diff(s(i), s(i + 1), size) for i in range(1, size)]
    tau = [_parity(s(i), s(i + 1), m) for i in range(1, size)]
    if fam in ("sl", "gl"):
        B = [_chain_row(r, i, tau[i - 1]) for i in range(1, r + 1)]
    elif fam == "osp_odd":
        roots.append(_unit(s(size), size))
        tau.append(EVEN if s(size) <= m else ODD)
        B = [_chain_row(r, i, tau[i - 1]) for i in range(1, r)]
        B.append(_row(r, r, {-1: -1, 0: 1}))
    elif s(size) == size:
        roots.append(_unit(size, size, 2))
        tau.append(EVEN)
        B = []
        for i in range(1, r + 1):
            if i != r - 1:
                B.append(_chain_row(r, i, tau[i - 1]))
            elif tau[i - 1] == EVEN:
                B.append(_row(r, i, {-1: -1, 0: 2, 1: -2}))
            else:
                B.append(_row(r, i, {-1: -1, 0: 0, 1: 2}))
        if v.sign == "-":
            for root in roots:
                root[m - 1] = -root[m - 1]
            swap = list(range(r - 2)) + [r - 1, r - 2]
            roots = [roots[k] for k in swap]
            tau = [tau[k] for k in swap]
            B = [[B[a][b] for b in swap] for a in swap]
    else:
        roots.append(_eps_diff(s(size - 1), m, size))
        roots[-1][m - 1] = 1
        tau.append(tau[-1])
        B = []
        for i in range(1, r + 1):
            even = tau[i - 1] == EVEN
            if i < r - 2:
                B.append(_chain_row(r, i, tau[i - 1]))
            elif i == r - 2:
                B.append(_row(r, i, {-1: -1, 0: 2, 1: -1, 2: -1} if even
                              else {-1: -1, 0: 0, 1: 1, 2: 1}))
            elif i == r - 1:
                B.append(_row(r, i, {-1: -1, 0: 2, 1: 0} if even
                              else {-1: -1, 0: 0, 1: 2}))
            else:
                B.append(_row(r, i, {-2: -1, -1: 0, 0: 2} if even
                              else {-2: -1, -1: 2, 0: 0}))
    return [tuple(x) for x in roots], CartanDatum(B, tau)


def _a_type(r: int) -> list[list[int]]:
    return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(r)]
            for i in range(r)]


def _swap_last_two(a):
    r = len(a)
    p = list(range(r - 2)) + [r - 1, r - 2]
    return [[a[i][j] for j in p] for i in p]


def cartan_matrix_of_type(kind: str, r: int) -> SerreMatrix:
    """Named generalized Cartan matrices, with ``a_ij = <alpha_j, alpha_i^vee>``.

    ``kind`` is one of ``A, B, C, D, A', C', X``; ``X`` is the non-Dynkin
    matrix that is ``A_r`` plus a ``-1`` coupling between the last and the
    third-to-last node.
    """
    a = _a_type(r)
    base = kind.rstrip("'")
    if base == "B":
        a[r - 1][r - 2] = -2
    elif base == "C":
        a[r - 2][r - 1] = -2
    elif base == "D" and r >= 3:
        a[r - 2][r - 1] = a[r - 1][r - 2] = 0
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1
    elif base == "X" and r >= 3:
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1
    elif base not in ("A", "D", "X"):
        raise ValueError(f"unknown Cartan type {kind!r}")
    if kind.endswith("'"):
        a = _swap_last_two(a)
    return tuple(tuple(row) for row in a)


def serre_type(v: FamilyVertex) -> str:
    """Type name of the Serre matrix at ``v`` (``X`` is the non-Dynkin one)."""
    if v.family in ("sl", "gl"):
        return "A"
    if v.family == "osp_odd":
        return "B"
    n, l1, l2 = v.n, v.lam.part(1), v.lam.part(2)
    if l1 < n - 1:
        return "C" if v.sign == "+" else "C'"
    if l1 == n - 1:
        return "A" if v.sign == "+" else "A'"
    return "D" if l2 == n else "X"


def family_serre_matrix(v: FamilyVertex) -> SerreMatrix:
    """Serre matrix at ``v`` from the closed-form list, not from the datum."""
    return cartan_matrix_of_type(serre_type(v), v.rank)


def family_cartan_graph(family: str, m: int, n: int) -> CartanGraph:
    """The Cartan graph on family vertices, edges given by box moves."""
    fvs = family_vertices(family, m, n)
    index = {fv: k for k, fv in enumerate(fvs)}
    vertices = [Vertex(k, family_serre_matrix(fv), key=fv) for k, fv in enumerate(fvs)]
    edges, seen = [], set()
    r = family_rank(family, m, n)
    for x, fv in enumerate(fvs):
        moves = dict(box_moves(fv))
        for i in range(1, r + 1):
            if i not in moves:
                edges.append(Edge(x, x, i))
                continue
            y = index[moves[i]]
            key = (min(x, y), max(x, y), i)
            if key not in seen:
                seen.add(key)
                edges.append(Edge(x, y, i))
    return CartanGraph(r, vertices, edges)


def standard_seed(family: str, m: int, n: int):
    return symmetrize(simple_roots(standard_vertex(family, m, n))[1])


def engine_graph(family: str, m: int, n: int, max_vertices: int = 10_000) -> CartanGraph:
    """Generic odd-reflection closure seeded at the standard Borel of a family."""
    return build_cartan_graph(standard_seed(family, m, n), max_vertices)


def graphs_isomorphic(a: CartanGraph, b: CartanGraph, anchor=None) -> dict[int, int] | None:
    """Color- and Serre-preserving isomorphism ``a -> b`` as a vertex map.

    Starting from an anchor pair, colors force the extension, so a single
    BFS decides each anchor.  Without an explicit anchor, vertex 0 of ``a``
    is tried against every vertex of ``b``.
    """
    if len(a) != len(b) or a.color_count != b.color_count or len(a.edges) != len(b.edges):
        return None
    anchors = [anchor] if anchor is not None else [(0, y) for y in range(len(b))]
    for x0, y0 in anchors:
        phi = _extend(a, b, x0, y0)
        if phi is not None:
            return phi
    return None


def _extend(a, b, x0, y0):
    phi, used = {x0: y0}, {y0}
    queue = deque([x0])
    while queue:
        x = queue.popleft()
        y = phi[x]
        if a.serre(x) != b.serre(y):
            return None
        for i in a.colors:
            nx, ny = sorted(a.neighbors(x, i)), sorted(b.neighbors(y, i))
            if len(nx) != 1 or len(ny) != 1:
                return None
            u, w = nx[0], ny[0]
            if u in phi:
                if phi[u] != w:
                    return None
            elif w in used:
                return None
            else:
                phi[u] = w
                used.add(w)
                queue.append(u)
    if len(phi) != len(a):
        return None
    return phi


def relabel(g: CartanGraph, keys: dict[int, object]) -> CartanGraph:
    """Copy of ``g`` whose vertices carry the given keys (used for labels)."""
    vertices = [
        Vertex(v.id, v.serre, v.root_base, v.datum, keys.get(v.id, v.key))
        for v in g.vertices
    ]
    return CartanGraph(g.color_count, vertices, g.edges, g.seed)


def labelled_engine_graph(family: str, m: int, n: int, max_vertices: int = 10_000):
    """Engine graph with each vertex labelled by its family vertex."""
    eg = engine_graph(family, m, n, max_vertices)
    fg = family_cartan_graph(family, m, n)
    phi = graphs_isomorphic(fg, eg, anchor=(0, 0))
    if phi is None:
        raise RuntimeError(f"engine and family graphs disagree for {family}({m}|{n})")
    return relabel(eg, {y: fg.vertices[x].key for x, y in phi.items()})
