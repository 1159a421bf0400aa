"""Explicit supermatrix realizations used as ground truth.

Matrices are sparse dicts keyed by ``(row_label, col_label)``.  For
gl/sl the labels are ``1..m+n``.  For osp the labels are, in display order,
``0, 1..m, -1..-m, m+1..m+n, -(m+1)..-(m+n)``, with ``0`` left out for
osp(2m|2n).  A label is odd iff its absolute value exceeds ``m``.

Weights live in epsilon coordinates over ``1..m+n``; ``epsilon_{-k}`` is
``-epsilon_k`` and ``epsilon_0`` is zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .cartan import EVEN, ODD, CartanDatum, Parity, serre_matrix
from .errors import GradingMismatch, NonDiagonalCoroot, WeylGroupoidError
from .families import (
    FamilyVertex,
    box_moves,
    family_vertices,
    simple_roots,
)

Position = tuple[int, int]


class SuperMatrix:
    """A square matrix over Q indexed by labels, with a Z/2 grading on labels."""

    __slots__ = ("entries", "labels", "odd")

    def __init__(self, entries: Mapping[Position, object], labels, odd):
        self.labels = tuple(labels)
        self.odd = frozenset(odd)
        self.entries = {k: Fraction(v) for k, v in entries.items() if v != 0}

    @classmethod
    def unit(cls, p, q, labels, odd, coeff=1) -> SuperMatrix:
        return cls({(p, q): coeff}, labels, odd)

    def _like(self, entries) -> SuperMatrix:
        return SuperMatrix(entries, self.labels, self.odd)

    def _check(self, other):
        if self.labels != other.labels or self.odd != other.odd:
            raise GradingMismatch("supermatrices have different gradings")

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return (self.labels, self.odd, self.entries) == (other.labels, other.odd, other.entries)

    def __hash__(self):
        return hash((self.labels, frozenset(self.entries.items())))

    def __getitem__(self, pos: Position) -> Fraction:
        return self.entries.get(pos, Fraction(0))

    def __add__(self, other):
        self._check(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return self._like(out)

    def __neg__(self):
        return self._like({k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        c = Fraction(c)
        return self._like({k: c * v for k, v in self.entries.items()})

    def __matmul__(self, other):
        self._check(other)
        rows = {}
        for (p, q), v in other.entries.items():
            rows.setdefault(p, []).append((q, v))
        out = {}
        for (p, r), u in self.entries.items():
            for q, v in rows.get(r, ()):
                out[p, q] = out.get((p, q), 0) + u * v
        return self._like(out)

    def __bool__(self):
        return bool(self.entries)

    def __repr__(self):
        terms = " + ".join(f"{v}*E[{p},{q}]" for (p, q), v in sorted(self.entries.items()))
        return f"SuperMatrix({terms or '0'})"

    def _is_odd_pos(self, p, q) -> bool:
        return (p in self.odd) != (q in self.odd)

    def parity(self) -> Parity | None:
        """Parity of a homogeneous matrix, None if it mixes parities.

        The zero matrix counts as even.
        """
        kinds = {self._is_odd_pos(p, q) for p, q in self.entries}
        if len(kinds) > 1:
            return None
        return ODD if kinds == {True} else EVEN

    def homogeneous_parts(self) -> tuple[SuperMatrix, SuperMatrix]:
        even = {k: v for k, v in self.entries.items() if not self._is_odd_pos(*k)}
        odd = {k: v for k, v in self.entries.items() if self._is_odd_pos(*k)}
        return self._like(even), self._like(odd)

    def is_diagonal(self) -> bool:
        return all(p == q for p, q in self.entries)


def supercommutator(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    """``[x, y] = xy - (-1)^{|x||y|} yx``, extended bilinearly."""
    x._check(y)
    out = x._like({})
    for a, pa in zip(x.homogeneous_parts(), (0, 1)):
        if not a:
            continue
        for b, pb in zip(y.homogeneous_parts(), (0, 1)):
            if not b:
                continue
            ab, ba = a @ b, b @ a
            out = out + (ab + ba if pa and pb else ab - ba)
    return out


def osp_sign(p: int, q: int, m: int) -> int:
    """The sign ``s`` in the osp constraint ``X[p,q] = s * X[-q,-p]``."""
    if abs(p) <= m:
        return 1 if q > m else -1
    if p > 0:
        return 1 if q < -m else -1
    return -1 if q < -m else 1


@dataclass(frozen=True)
class AlgebraSpec:
    family: str
    m: int
    n: int

    @property
    def is_osp(self) -> bool:
        return self.family.startswith("osp")

    @property
    def labels(self) -> tuple[int, ...]:
        m, n = self.m, self.n
        if not self.is_osp:
            return tuple(range(1, m + n + 1))
        evens = list(range(1, m + 1)) + [-k for k in range(1, m + 1)]
        odds = list(range(m + 1, m + n + 1)) + [-k for k in range(m + 1, m + n + 1)]
        return tuple(([0] if self.family == "osp_odd" else []) + evens + odds)

    @property
    def odd_labels(self) -> frozenset[int]:
        return frozenset(p for p in self.labels if abs(p) > self.m)

    def E(self, p, q, coeff=1) -> SuperMatrix:
        return SuperMatrix.unit(p, q, self.labels, self.odd_labels, coeff)

    def zero(self) -> SuperMatrix:
        return SuperMatrix({}, self.labels, self.odd_labels)

    def is_odd_label(self, p) -> bool:
        return abs(p) > self.m

    def weight(self, p: int, q: int) -> tuple[int, ...]:
        """Weight of ``E_pq`` under the diagonal Cartan subalgebra."""
        w = [0] * (self.m + self.n)
        for lab, sgn in ((p, 1), (q, -1)):
            if lab:
                w[abs(lab) - 1] += sgn if lab > 0 else -sgn
        return tuple(w)

    def forced_zero(self, p: int, q: int) -> bool:
        """Positions that vanish on every member of the algebra."""
        return self.is_osp and q == -p and osp_sign(p, q, self.m) == -1

    def contains(self, x: SuperMatrix) -> bool:
        if x.labels != self.labels or x.odd != self.odd_labels:
            return False
        if self.family == "gl":
            return True
        if self.family == "sl":
            return sum(v if p not in x.odd else -v
                       for (p, q), v in x.entries.items() if p == q) == 0
        m = self.m
        keys = set(x.entries) | {(-q, -p) for p, q in x.entries}
        return all(x[p, q] == osp_sign(p, q, m) * x[-q, -p] for p, q in keys)

    def basis_element(self, p: int, q: int) -> SuperMatrix:
        """The basis vector of ``g`` supported on the orbit of ``(p, q)``."""
        if not self.is_osp or (p, q) == (-q, -p):
            return self.E(p, q)
        return self.E(p, q) + self.E(-q, -p, osp_sign(p, q, self.m))

    def cartan_basis(self) -> list[SuperMatrix]:
        if not self.is_osp:
            labs = self.labels
            if self.family == "gl":
                return [self.E(k, k) for k in labs]
            sgn = [(-1) ** self.is_odd_label(k) for k in labs]
            return [self.E(labs[k], labs[k]) - sgn[k] * sgn[k + 1] * self.E(labs[k + 1], labs[k + 1])
                    for k in range(len(labs) - 1)]
        return [self.E(k, k) - self.E(-k, -k) for k in range(1, self.m + self.n + 1)]


RootSpaceTable = dict[tuple[int, ...], list[SuperMatrix]]


def root_decomposition(spec: AlgebraSpec) -> RootSpaceTable:
    """Root spaces of ``g`` under the diagonal Cartan subalgebra."""
    table: RootSpaceTable = {}
    seen = set()
    for p in spec.labels:
        for q in spec.labels:
            if (p, q) in seen or spec.forced_zero(p, q):
                continue
            w = spec.weight(p, q)
            seen.add((p, q))
            if spec.is_osp:
                seen.add((-q, -p))
            if any(w):
                table.setdefault(w, []).append(spec.basis_element(p, q))
    return dict(sorted(table.items()))


def reduced_roots(spec: AlgebraSpec) -> frozenset[tuple[int, ...]]:
    """Roots ``alpha`` such that ``alpha / 2`` is not a root.

    These are the roots that arise as images of simple roots under odd and
    even reflections; ``2 delta`` for an odd non-isotropic ``delta`` is
    dropped.
    """
    roots = set(root_decomposition(spec))
    return frozenset(
        r for r in roots
        if not (all(c % 2 == 0 for c in r) and tuple(c // 2 for c in r) in roots)
    )


# -- Borel subalgebras ------------------------------------------------------

def _box(lam, i: int, k: int) -> bool:
    return (i, k) in lam


def _even_positive(spec: AlgebraSpec, p: int, q: int) -> bool:
    # standard even Borel: the functional epsilon_i -> m+1-i, epsilon_{m+k} -> n+1-k
    m = spec.m
    f = [m + 1 - i for i in range(1, m + 1)] + [spec.n + 1 - k for k in range(1, spec.n + 1)]
    return sum(c * v for c, v in zip(spec.weight(p, q), f)) > 0


def borel_shape(spec: AlgebraSpec, v: FamilyVertex) -> frozenset[Position]:
    """Positions allowed to be nonzero in ``b(lambda)`` or ``b(lambda, sign)``.

    Built block by block from the partition: the even part is the standard
    even Borel, the odd blocks are read off the Young diagram, and the
    remaining odd positions follow from the osp symmetry.  Positions that
    vanish on all of ``g`` are left out.
    """
    m, n, lam = spec.m, spec.n, v.lam
    labels = spec.labels
    allowed = set()
    for p in labels:
        for q in labels:
            if spec.is_odd_label(p) == spec.is_odd_label(q) and not spec.forced_zero(p, q):
                if p == q or _even_positive(spec, p, q):
                    allowed.add((p, q))
    if not spec.is_osp:
        for i in range(1, m + 1):
            for k in range(1, n + 1):
                allowed.add((i, m + k) if not _box(lam, i, k) else (m + k, i))
        return frozenset(allowed)
    top = set()
    for k in range(1, n + 1):
        if 0 in labels:
            top.add((0, -(m + k)))
        for i in range(1, m + 1):
            top.add((i, -(m + k)))
            top.add((i, m + k) if not _box(lam, i, k) else (-i, -(m + k)))
    if v.sign == "-":
        swap = {m: -m, -m: m}
        top = {(swap.get(p, p), q) for p, q in top}
    allowed |= top
    allowed |= {(-q, -p) for p, q in top}
    return frozenset(allowed)


def positive_functional(v: FamilyVertex) -> tuple[int, ...]:
    """A functional positive exactly on the roots of ``b``.

    ``epsilon_{sigma(k)} -> m+n+1-k``; for osp(2m|2n) with sign ``-`` the
    value on ``epsilon_m`` is negated.
    """
    s = v.shuffle
    size = v.m + v.n
    f = [0] * size
    for k in range(1, size + 1):
        f[s(k) - 1] = size + 1 - k
    if v.sign == "-":
        f[v.m - 1] = -f[v.m - 1]
    return tuple(f)


def borel_shape_from_functional(spec: AlgebraSpec, v: FamilyVertex) -> frozenset[Position]:
    f = positive_functional(v)
    out = set()
    for p in spec.labels:
        for q in spec.labels:
            if spec.forced_zero(p, q):
                continue
            w = spec.weight(p, q)
            if p == q or (any(w) and sum(a * b for a, b in zip(w, f)) > 0):
                out.add((p, q))
    return frozenset(out)


def shape_pattern(spec: AlgebraSpec, shape: Iterable[Position]) -> list[str]:
    """Rows of ``*`` and ``0`` in label order, as in a printed Borel display."""
    shape = set(shape)
    return [" ".join("*" if (p, q) in shape else "0" for q in spec.labels) for p in spec.labels]


# -- Chevalley generators ---------------------------------------------------

def _generators_for_root(spec: AlgebraSpec, root) -> tuple[SuperMatrix, SuperMatrix]:
    m, E = spec.m, spec.E
    support = {k + 1: c for k, c in enumerate(root) if c}
    pos = sorted(k for k, c in support.items() if c > 0)
    neg = sorted(k for k, c in support.items() if c < 0)
    if not spec.is_osp:
        (a,), (b,) = pos, neg
        return E(a, b), E(b, a)
    if len(pos) == 1 and len(neg) == 1:
        a, b = pos[0], neg[0]
        e = E(a, b) + E(-b, -a, 1 if a <= m < b else -1)
        f = E(b, a) + E(-a, -b, 1 if a > m >= b else -1)
        return e, f
    if len(pos) == 1 and not neg:
        (k,) = pos
        if support[k] == 2:
            return E(k, -k), E(-k, k)
        return E(k, 0) - E(0, -k), E(0, k) + E(-k, 0, 1 if k > m else -1)
    if len(pos) == 2:
        a = pos[0] if pos[1] == m else pos[1]
        if m not in pos:
            raise ValueError(f"no generator rule for root {root}")
        return E(a, -m) - E(m, -a), E(-m, a) + E(-a, m, 1 if a > m else -1)
    if len(neg) == 2 and m in neg:
        b = neg[0] if neg[1] == m else neg[1]
        return E(-m, b) + E(-b, m, 1 if b > m else -1), E(b, -m) - E(m, -b)
    raise ValueError(f"no generator rule for root {root}")


@dataclass(frozen=True)
class Generators:
    roots: list
    e: list
    f: list
    h: list


def chevalley_generators(spec: AlgebraSpec, v: FamilyVertex) -> Generators:
    """Chevalley generators ``e_i, f_i`` with ``h_i = [e_i, f_i]``."""
    roots, _ = simple_roots(v)
    es, fs = zip(*(_generators_for_root(spec, r) for r in roots))
    hs = [supercommutator(e, f) for e, f in zip(es, fs)]
    return Generators(list(roots), list(es), list(fs), hs)


def evaluate_weight(spec: AlgebraSpec, root, h: SuperMatrix) -> Fraction:
    """``alpha(h)`` for a diagonal ``h``."""
    if not h.is_diagonal():
        raise NonDiagonalCoroot(f"{h!r} is not diagonal")
    return sum((c * h[k, k] for k, c in enumerate(root, start=1) if c), Fraction(0))


def cartan_datum_from_generators(spec: AlgebraSpec, roots, h, e) -> CartanDatum:
    """``b_ij = alpha_j(h_i)`` and ``tau_i`` the parity of ``e_i``."""
    B = [[evaluate_weight(spec, rj, hi) for rj in roots] for hi in h]
    return CartanDatum(B, [x.parity() for x in e])


def ad_power(x: SuperMatrix, y: SuperMatrix, k: int) -> SuperMatrix:
    for _ in range(k):
        y = supercommutator(x, y)
    return y


def matrix_weight(spec: AlgebraSpec, x: SuperMatrix):
    """The common weight of all entries of ``x``, or None if there is none."""
    ws = {spec.weight(p, q) for p, q in x.entries}
    return ws.pop() if len(ws) == 1 else None


def _rescaled_match(got: CartanDatum, want: CartanDatum) -> bool:
    if got.tau != want.tau:
        return False
    for rg, rw in zip(got.B, want.B):
        ratios = {a / b for a, b in zip(rg, rw) if b}
        if any((a == 0) != (b == 0) for a, b in zip(rg, rw)):
            return False
        if len(ratios) > 1 or 0 in ratios:
            return False
    return True


# -- end-to-end check -------------------------------------------------------

CHECKS = ("borel_shape", "cartan_datum", "serre_relations", "reflected_bases")


@dataclass
class VertexReport:
    vertex: str
    results: dict = field(default_factory=dict)
    datum_mode: str | None = None

    @property
    def ok(self) -> bool:
        return all(r["ok"] for r in self.results.values())


@dataclass
class AppendixReport:
    family: str
    m: int
    n: int
    vertices: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.vertices)

    def failures(self):
        return [(v.vertex, name, r["detail"]) for v in self.vertices
                for name, r in v.results.items() if not r["ok"]]

    def to_text(self) -> str:
        lines = [f"{self.family}({self.m}|{self.n}): {len(self.vertices)} vertices"]
        for v in self.vertices:
            cells = " ".join(f"{k}={'pass' if r['ok'] else 'FAIL'}" for k, r in v.results.items())
            lines.append(f"  {v.vertex:<12} {cells} datum={v.datum_mode}")
            for k, r in v.results.items():
                if not r["ok"]:
                    lines.append(f"    {k}: {r['detail']}")
        lines.append("overall: " + ("pass" if self.ok else "FAIL"))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "family": self.family, "m": self.m, "n": self.n, "ok": self.ok,
            "vertices": [
                {"vertex": v.vertex, "datum_mode": v.datum_mode, "ok": v.ok,
                 "checks": {k: dict(r) for k, r in v.results.items()}}
                for v in self.vertices
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)


def _result(ok, detail=""):
    return {"ok": bool(ok), "detail": detail}


def _check_shape(spec, v, gens):
    shape = borel_shape(spec, v)
    for i, (e, f) in enumerate(zip(gens.e, gens.f), start=1):
        if not spec.contains(e) or not spec.contains(f):
            return _result(False, f"generator {i} is not in {spec.family}: e={e!r} f={f!r}")
        for p, q in e.entries:
            if p == q or (p, q) not in shape:
                return _result(False, f"e_{i} = {e!r} has entry ({p},{q}) outside b")
        for p, q in f.entries:
            if p == q or (q, p) not in shape:
                return _result(False, f"f_{i} = {f!r} has entry ({p},{q}) outside the opposite of b")
    return _result(True)


def _check_relations(spec, v, gens, a):
    r = len(gens.e)
    for i in range(r):
        for j in range(r):
            br = supercommutator(gens.e[i], gens.f[j])
            want = gens.h[i] if i == j else spec.zero()
            if br != want:
                return _result(False, f"[e_{i + 1}, f_{j + 1}] = {br!r}, expected {want!r}")
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            k = 1 - a[i][j]
            x = ad_power(gens.e[i], gens.e[j], k)
            if x:
                return _result(False, f"(ad e_{i + 1})^{k}(e_{j + 1}) = {x!r}")
    return _result(True)


def _check_reflections(spec, v, gens, datum):
    moves = dict(box_moves(v))
    r = len(gens.e)
    for i in range(1, r + 1):
        isotropic = datum.tau[i - 1] == ODD and datum.b(i, i) == 0
        if isotropic != (i in moves):
            return _result(False, f"color {i}: isotropic={isotropic} but box move present={i in moves}")
        if not isotropic:
            continue
        ei = gens.e[i - 1]
        new = []
        for j in range(1, r + 1):
            if j == i:
                new.append(tuple(-c for c in gens.roots[i - 1]))
                continue
            br = supercommutator(ei, gens.e[j - 1])
            if datum.b(i, j) == 0:
                if br:
                    return _result(False, f"b_{i}{j} = 0 but [e_{i}, e_{j}] = {br!r}")
                new.append(gens.roots[j - 1])
            else:
                w = matrix_weight(spec, br)
                if w is None:
                    return _result(False, f"[e_{i}, e_{j}] = {br!r} is not a root vector")
                new.append(w)
        target_roots, _ = simple_roots(moves[i])
        if new != list(target_roots):
            return _result(False, f"color {i}: reflected base {new} != {list(target_roots)} at {moves[i]}")
    return _result(True)


def verify_vertex(spec: AlgebraSpec, v: FamilyVertex) -> VertexReport:
    rep = VertexReport(str(v))
    gens = chevalley_generators(spec, v)
    _, want = simple_roots(v)
    rep.results["borel_shape"] = _check_shape(spec, v, gens)
    got = cartan_datum_from_generators(spec, gens.roots, gens.h, gens.e)
    if got == want:
        rep.datum_mode = "exact"
        rep.results["cartan_datum"] = _result(True)
    elif _rescaled_match(got, want):
        rep.datum_mode = "rescaled"
        rep.results["cartan_datum"] = _result(True)
    else:
        rep.results["cartan_datum"] = _result(
            False, f"bracket datum {[list(map(str, r)) for r in got.B]} tau={list(map(str, got.tau))}"
                   f" != closed form {[list(map(str, r)) for r in want.B]}")
    try:
        a = serre_matrix(want)
    except WeylGroupoidError as exc:
        # a closed form with no integral Serre matrix fails both remaining checks
        rep.results["serre_relations"] = _result(False, str(exc))
        rep.results["reflected_bases"] = _result(False, str(exc))
        return rep
    rep.results["serre_relations"] = _check_relations(spec, v, gens, a)
    rep.results["reflected_bases"] = _check_reflections(spec, v, gens, want)
    return rep


def verify_appendix(family: str, m: int, n: int) -> AppendixReport:
    """Re-derive every family vertex from explicit matrices and compare."""
    spec = AlgebraSpec(family, m, n)
    rep = AppendixReport(family, m, n)
    for v in family_vertices(family, m, n):
        rep.vertices.append(verify_vertex(spec, v))
    return rep
