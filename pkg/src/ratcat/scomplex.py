"""Finite simplicial complexes given by facets.

Faces are frozensets of vertex labels; labels only need a total order
(integers, or tuples such as polygon diagonals).  The complex with no
vertices still has the empty face, so its f-vector is (1,) and its only
reduced homology sits in degree -1.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb, gcd
from typing import Hashable, Iterable, Sequence

from .errors import InternalError, PreconditionError, RatcatError

__all__ = [
    "SimplicialComplex",
    "FHVector",
    "ShellingCertificate",
    "ShellingError",
    "NotPure",
    "MultipleMinimalNewFaces",
    "NoNewFace",
    "CollapseFailure",
    "ProvedImpossible",
    "BudgetExhausted",
    "DEFAULT_BUDGET",
    "build",
    "f_h_vectors",
    "h_to_f",
    "reduced_euler",
    "verify_shelling",
    "collapse_to",
    "betti_numbers",
    "reduced_betti",
    "rank_exact",
    "to_json",
    "from_json",
]

Face = frozenset
DEFAULT_BUDGET = 10**7


def _face_key(face) -> tuple:
    return (len(face), tuple(sorted(face)))


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    vertices: tuple
    facets: tuple  # of frozensets, canonical order

    @cached_property
    def faces(self) -> frozenset:
        out = {frozenset()}
        for F in self.facets:
            items = sorted(F)
            for k in range(1, len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, k))
        return frozenset(out)

    @property
    def dim(self) -> int:
        return max((len(F) for F in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        return len({len(F) for F in self.facets}) <= 1

    def __contains__(self, face) -> bool:
        return frozenset(face) in self.faces

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self.facets) == set(other.facets)

    def __hash__(self):
        return hash(frozenset(self.facets))

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return all(F in other for F in self.facets)

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dim}, vertices={len(self.vertices)}, facets={len(self.facets)})"


def build(vertices: Iterable[Hashable], facets: Iterable[Iterable[Hashable]]) -> SimplicialComplex:
    """Complex on ``vertices`` generated by the inclusion-maximal sets in ``facets``."""
    verts = tuple(sorted(set(vertices)))
    vset = set(verts)
    fam = {frozenset(F) for F in facets}
    for F in fam:
        if not F <= vset:
            raise PreconditionError(f"facet {sorted(F)} uses vertices outside the ground set")
    containing: dict = {}
    for F in fam:
        for v in F:
            containing.setdefault(v, set()).add(F)

    def is_maximal(F):
        if not F:
            return len(fam) == 1
        others = set.intersection(*(containing[v] for v in F))
        return len(others) == 1

    maximal = [F for F in fam if is_maximal(F)]
    if not maximal:
        maximal = [frozenset()]
    return SimplicialComplex(verts, tuple(sorted(maximal, key=_face_key)))


@dataclass(frozen=True)
class FHVector:
    """f = (f_-1, ..., f_d) and h = (h_-1, ..., h_d) stored as plain tuples."""

    f: tuple[int, ...]
    h: tuple[int, ...]
    d: int


def _f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    counts = [0] * (K.dim + 2)
    for S in K.faces:
        counts[len(S)] += 1
    return tuple(counts)


def _f_to_h(f: Sequence[int]) -> tuple[int, ...]:
    # sum_i f_i (t-1)^(d-i) = sum_k h_k t^(d-k); list index j stands for i = j-1
    n = len(f)
    coeffs = [0] * n  # coefficient of t^e
    for j, fi in enumerate(f):
        e = n - 1 - j
        for s in range(e + 1):
            coeffs[s] += fi * comb(e, s) * (-1) ** (e - s)
    return tuple(coeffs[n - 1 - j] for j in range(n))


def h_to_f(h: Sequence[int]) -> tuple[int, ...]:
    """Invert the f-to-h transform: substitute t -> t+1 in sum_k h_k t^(d-k)."""
    n = len(h)
    coeffs = [0] * n
    for j, hk in enumerate(h):
        e = n - 1 - j
        for s in range(e + 1):
            coeffs[s] += hk * comb(e, s)
    return tuple(coeffs[n - 1 - j] for j in range(n))


def f_h_vectors(K: SimplicialComplex) -> FHVector:
    f = _f_vector(K)
    return FHVector(f, _f_to_h(f), K.dim)


def reduced_euler(K: SimplicialComplex) -> int:
    """sum_{i=-1}^{d} (-1)^i f_i."""
    return sum((-1) ** (j + 1) * fi for j, fi in enumerate(_f_vector(K)))


# -- shelling ---------------------------------------------------------------

class ShellingError(RatcatError):
    pass


class NotPure(ShellingError):
    pass


class MultipleMinimalNewFaces(ShellingError):
    def __init__(self, k: int, faces):
        self.k = k
        self.faces = faces
        super().__init__(f"facet #{k} has {len(faces)} minimal new faces: {faces}")


class NoNewFace(ShellingError):
    def __init__(self, k: int):
        self.k = k
        super().__init__(f"facet #{k} adds no new face")


@dataclass(frozen=True)
class ShellingCertificate:
    order: tuple
    minimal_faces: tuple
    h_census: tuple[int, ...] = field(default=())


def _minimal_new_faces(facet_items: Sequence, olds: list[int]) -> list[int]:
    """Bitmasks of minimal subsets of the facet not inside any mask in ``olds``."""
    n = len(facet_items)

    def is_old(mask):
        return any(mask & g == mask for g in olds)

    found = []
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if is_old(mask):
                continue
            if any(m & mask == m for m in found):
                continue
            found.append(mask)
    return found


def verify_shelling(K: SimplicialComplex, order: Sequence[Iterable]) -> ShellingCertificate:
    """Certify ``order`` by the unique-minimal-new-face criterion.

    Raises a :class:`ShellingError` subclass naming the first failing facet
    (1-based index in ``order``).
    """
    order = tuple(frozenset(F) for F in order)
    if not K.is_pure():
        raise NotPure("complex is not pure")
    facets = set(K.facets)
    if any(F not in facets for F in order):
        raise PreconditionError("order contains a set that is not a facet")

    minimal = []
    for k, F in enumerate(order):
        items = sorted(F)
        index = {v: i for i, v in enumerate(items)}
        olds = []
        for G in order[:k]:
            m = 0
            for v in F & G:
                m |= 1 << index[v]
            olds.append(m)
        olds = [g for g in set(olds) if not any(g != h and g & h == g for h in olds)]
        if F in order[:k]:
            raise NoNewFace(k + 1)
        new = _minimal_new_faces(items, olds)
        if len(new) != 1:
            faces = [frozenset(items[i] for i in range(len(items)) if m >> i & 1) for m in new]
            raise MultipleMinimalNewFaces(k + 1, faces)
        m = new[0]
        minimal.append(frozenset(items[i] for i in range(len(items)) if m >> i & 1))

    if len(order) != len(facets):
        raise PreconditionError("order does not list every facet")
    census = [0] * (K.dim + 2)
    for M in minimal:
        census[len(M)] += 1
    h = f_h_vectors(K).h
    if tuple(census) != h:
        raise InternalError(f"minimal-face census {census} disagrees with h-vector {h}")
    return ShellingCertificate(order, tuple(minimal), tuple(census))


# -- collapses --------------------------------------------------------------

class CollapseFailure(RatcatError):
    def __init__(self, msg: str, nodes: int):
        self.nodes = nodes
        super().__init__(msg)


class ProvedImpossible(CollapseFailure):
    pass


class BudgetExhausted(CollapseFailure):
    pass


def collapse_to(
    K: SimplicialComplex, target: SimplicialComplex, budget: int = DEFAULT_BUDGET
) -> list[tuple[frozenset, frozenset]]:
    """Find elementary collapses taking K exactly onto ``target``.

    Returns the sequence of removed pairs (F, F') with F' a codimension-one
    face of F.  Depth-first search with a visited-state memo; free pairs are
    tried in lexicographic order of their sorted labels.  Raises
    :class:`ProvedImpossible` when the search space is exhausted and
    :class:`BudgetExhausted` after ``budget`` expanded nodes.
    """
    faces = K.faces
    keep = target.faces
    if not keep <= faces:
        raise PreconditionError("target is not a subcomplex of K")
    removable = sorted(faces - keep, key=lambda S: tuple(sorted(S)))
    if len(removable) % 2:
        raise ProvedImpossible("odd number of faces to remove", 0)
    idx = {S: i for i, S in enumerate(removable)}

    # coface lists restricted to one dimension up; all faces of K participate
    cofaces: dict[frozenset, list[frozenset]] = {S: [] for S in faces}
    for S in faces:
        for v in S:
            cofaces[S - {v}].append(S)
    up = {S: len(c) for S, c in cofaces.items()}
    alive = set(faces)

    def free_pairs():
        out = []
        for G in removable:
            if G in alive and up[G] == 1:
                F = next(C for C in cofaces[G] if C in alive)
                if up[F] == 0 and F in idx:
                    out.append((F, G))
        out.sort(key=lambda p: (tuple(sorted(p[0])), tuple(sorted(p[1]))))
        return out

    def remove(S):
        alive.discard(S)
        for v in S:
            up[S - {v}] -= 1

    def restore(S):
        alive.add(S)
        for v in S:
            up[S - {v}] += 1

    seen = set()
    seq: list[tuple[frozenset, frozenset]] = []
    nodes = 0
    remaining = len(removable)

    def dfs(state: int) -> bool:
        nonlocal nodes, remaining
        if remaining == 0:
            return True
        if state in seen:
            return False
        seen.add(state)
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(f"no decision after {budget} nodes", nodes)
        for F, G in free_pairs():
            remove(F)
            remove(G)
            remaining -= 2
            seq.append((F, G))
            if dfs(state | (1 << idx[F]) | (1 << idx[G])):
                return True
            seq.pop()
            remaining += 2
            restore(G)
            restore(F)
        return False

    if dfs(0):
        return list(seq)
    raise ProvedImpossible(f"no collapse sequence exists ({nodes} states searched)", nodes)


# -- homology ---------------------------------------------------------------

def _reduce(rows: Iterable[dict]) -> tuple[int, dict]:
    """Fraction-free row reduction; returns the rank and the pivot rows by column."""
    pivots: dict = {}
    rank = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            c = max(row)
            prow = pivots.get(c)
            if prow is None:
                pivots[c] = row
                rank += 1
                break
            pv, rv = prow[c], row[c]
            if pv == rv:
                new = dict(row)
                for k, v in prow.items():
                    new[k] = new.get(k, 0) - v
            elif pv == -rv:
                new = dict(row)
                for k, v in prow.items():
                    new[k] = new.get(k, 0) + v
            else:
                new = {k: pv * v for k, v in row.items()}
                for k, v in prow.items():
                    new[k] = new.get(k, 0) - rv * v
            row = {k: v for k, v in new.items() if v}
            g = 0
            for v in row.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                row = {k: v // g for k, v in row.items()}
    return rank, pivots


def rank_exact(rows: Iterable[dict]) -> int:
    """Rank over Q of a sparse integer matrix given as {column: value} rows.

    Fraction-free elimination: a row is reduced against the stored pivot
    row for its largest column by integer cross-multiplication, then divided
    by the gcd of its entries.
    """
    return _reduce(rows)[0]


def _boundary_ranks(K: SimplicialComplex) -> tuple[list[int], list[int]]:
    """Chain dimensions n_k and ranks of the augmented boundary maps, k = -1..d.

    Dimensions are reduced top-down with clearing: a face that is the pivot
    of a reduced boundary one dimension up has a boundary that depends on
    earlier rows, so it is skipped without changing the rank.
    """
    by_dim: list[list] = [[] for _ in range(K.dim + 2)]
    for S in K.faces:
        by_dim[len(S)].append(tuple(sorted(S)))
    for lst in by_dim:
        lst.sort()
    n = [len(lst) for lst in by_dim]
    ranks = [0] * (len(by_dim) + 1)  # ranks[j]: boundary out of faces of size j
    cleared: set = set()
    for j in range(len(by_dim) - 1, 0, -1):
        lower = {S: i for i, S in enumerate(by_dim[j - 1])}
        skip = cleared

        def rows(j=j, lower=lower, skip=skip):
            for i, S in enumerate(by_dim[j]):
                if i not in skip:
                    yield {lower[S[:t] + S[t + 1:]]: (-1) ** t for t in range(len(S))}

        ranks[j], pivots = _reduce(rows())
        cleared = set(pivots)
    return n, ranks


def reduced_betti(K: SimplicialComplex) -> dict[int, int]:
    """Reduced Betti numbers over Q for degrees -1..d."""
    n, ranks = _boundary_ranks(K)
    return {j - 1: n[j] - ranks[j] - ranks[j + 1] for j in range(len(n))}


def betti_numbers(K: SimplicialComplex) -> tuple[int, ...]:
    """Reduced Betti numbers over Q in degrees 0..d."""
    rb = reduced_betti(K)
    return tuple(rb[i] for i in range(0, K.dim + 1))


# -- serialization ----------------------------------------------------------

def _jsonable(v):
    return list(v) if isinstance(v, tuple) else v


def _from_jsonable(v):
    return tuple(v) if isinstance(v, list) else v


def to_json(K: SimplicialComplex) -> str:
    doc = {
        "vertices": [_jsonable(v) for v in K.vertices],
        "facets": [[_jsonable(v) for v in sorted(F)] for F in K.facets],
    }
    return json.dumps(doc, sort_keys=True)


def from_json(text: str) -> SimplicialComplex:
    doc = json.loads(text)
    return build(
        (_from_jsonable(v) for v in doc["vertices"]),
        ([_from_jsonable(v) for v in F] for F in doc["facets"]),
    )
