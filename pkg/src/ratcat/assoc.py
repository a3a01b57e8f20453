"""Rational associahedra Ass(a,b) and their flag closures.

Polygon vertices are labeled 1..b+1 clockwise and a diagonal is a sorted
pair (u, v).  A Dyck path contributes one diagonal per laser: the laser
from P ending on the east step whose right end is Q gives (P.x+1, Q.x+1).
"""
from __future__ import annotations

import networkx as nx

from . import dyck, numbers, scomplex
from .dyck import DyckPath
from .errors import PreconditionError
from .numbers import CoprimePair
from .report import Report, Verdict

__all__ = [
    "Diagonal",
    "admissible_set",
    "is_admissible",
    "all_diagonals",
    "admissible_diagonals",
    "diagonal_of_laser",
    "facet",
    "valley_face",
    "noncrossing",
    "build_ass",
    "build_ass_hat",
    "shelling_order",
    "check_identities",
    "check_collapse_conjecture",
    "check_alexander_duality",
]

Diagonal = tuple[int, int]


def _pair_lt(pair) -> CoprimePair:
    p = CoprimePair.of(pair)
    if p.a > p.b:
        raise PreconditionError(f"associahedra are built for a < b only, got {p}")
    return p


def admissible_set(pair) -> frozenset[int]:
    """S(a,b) = { floor(i*b/a) : 1 <= i < a }."""
    p = _pair_lt(pair)
    return frozenset(i * p.b // p.a for i in range(1, p.a))


def all_diagonals(b: int) -> list[Diagonal]:
    """Every diagonal of the (b+1)-gon."""
    n = b + 1
    return [(u, v) for u in range(1, n + 1) for v in range(u + 2, n + 1) if not (u == 1 and v == n)]


def is_admissible(pair, d: Diagonal) -> bool:
    p = _pair_lt(pair)
    u, v = sorted(d)
    i = v - u - 1
    s = admissible_set(p)
    return i in s or (p.b - 1 - i) in s


def admissible_diagonals(pair) -> list[Diagonal]:
    p = _pair_lt(pair)
    return [d for d in all_diagonals(p.b) if is_admissible(p, d)]


def diagonal_of_laser(path: DyckPath, source) -> Diagonal:
    las = dyck.fire_laser(path, source)
    return (source[0] + 1, las.hit[0] + 1)


def _diag(las: dyck.Laser) -> Diagonal:
    return (las.source[0] + 1, las.hit[0] + 1)


def facet(path: DyckPath) -> frozenset[Diagonal]:
    """F(D): the diagonals of all lasers from non-origin north-step bottoms."""
    _pair_lt(path.pair)
    return frozenset(_diag(las) for las in dyck.fire_lasers(path))


def valley_face(path: DyckPath) -> frozenset[Diagonal]:
    """V(D): the diagonals of the lasers fired from valleys."""
    valleys = dyck.statistics(path).valleys
    return frozenset(_diag(las) for las in dyck.fire_lasers(path, valleys))


def noncrossing(d1: Diagonal, d2: Diagonal) -> bool:
    """True unless the endpoints strictly interleave around the polygon."""
    u1, v1 = sorted(d1)
    u2, v2 = sorted(d2)
    return not (u1 < u2 < v1 < v2 or u2 < u1 < v2 < v1)


def build_ass(pair) -> scomplex.SimplicialComplex:
    p = _pair_lt(pair)
    facets = [facet(D) for D in dyck.enumerate_paths(p)]
    return scomplex.build(admissible_diagonals(p), facets)


def build_ass_hat(pair) -> scomplex.SimplicialComplex:
    """Flag complex of pairwise noncrossing admissible diagonals."""
    p = _pair_lt(pair)
    verts = admissible_diagonals(p)
    g = nx.Graph()
    g.add_nodes_from(verts)
    g.add_edges_from(
        (d1, d2) for i, d1 in enumerate(verts) for d2 in verts[i + 1:] if noncrossing(d1, d2)
    )
    return scomplex.build(verts, nx.find_cliques(g) if verts else [()])


def shelling_order(pair) -> list[tuple[DyckPath, frozenset, frozenset]]:
    """(path, facet, valley face) triples in lexicographic order of the partition."""
    p = _pair_lt(pair)
    return [(D, facet(D), valley_face(D)) for D in dyck.enumerate_paths(p)]


def check_identities(pair) -> Report:
    """Shelling certificate plus the Kirkman/Narayana/derived Catalan identities."""
    p = _pair_lt(pair)
    rep = Report(p)
    K = build_ass(p)
    order = shelling_order(p)

    try:
        cert = scomplex.verify_shelling(K, [F for _, F, _ in order])
    except scomplex.ShellingError as exc:
        rep.fail("shelling", str(exc))
    else:
        bad = [k for k, ((_, _, V), M) in enumerate(zip(order, cert.minimal_faces), 1) if V != M]
        rep.expect("shelling", not bad, f"minimal face differs from valley face at facet #{bad[:1]}")

    fh = scomplex.f_h_vectors(K)
    nar = tuple(numbers.narayana(p, i) for i in range(1, p.a + 1))
    rep.expect_equal("f=kirkman", fh.f, tuple(numbers.kirkman(p, i) for i in range(1, p.a + 1)))
    rep.expect_equal("h=narayana", fh.h, nar)

    cat_d = numbers.derived_catalan(p)
    chi = scomplex.reduced_euler(K)
    rep.expect_equal("euler", abs(chi), cat_d)
    # with chi = sum (-1)^i f_i the signed identity reads chi = (-1)^a Cat'
    rep.expect_equal("euler_sign", -chi, (-1) ** (p.a + 1) * cat_d)

    rb = scomplex.reduced_betti(K)
    top = p.a - 2
    expected = {i: (cat_d if i == top else 0) for i in rb}
    rep.expect_equal("betti", rb, expected)
    return rep


def check_collapse_conjecture(pair, budget: int = scomplex.DEFAULT_BUDGET) -> Verdict:
    """Search for elementary collapses from the flag complex onto Ass(a,b)."""
    p = _pair_lt(pair)
    big, small = build_ass_hat(p), build_ass(p)
    if big == small:
        return Verdict("verified", {"collapses": []})
    try:
        seq = scomplex.collapse_to(big, small, budget)
    except scomplex.ProvedImpossible as exc:
        return Verdict("refuted", {"reason": str(exc), "nodes": exc.nodes})
    except scomplex.BudgetExhausted as exc:
        return Verdict("inconclusive", {"reason": str(exc), "nodes": exc.nodes})
    return Verdict("verified", {"collapses": [[sorted(F), sorted(G)] for F, G in seq]})


def check_alexander_duality(pair) -> Report:
    """Betti pairing of the flag complexes for (a,b) and (b-a,b) inside the (b-3)-sphere."""
    p = _pair_lt(pair)
    q = CoprimePair(p.b - p.a, p.b)
    rep = Report(p)
    mine, theirs = set(admissible_diagonals(p)), set(admissible_diagonals(q))
    every = set(all_diagonals(p.b))
    rep.expect(
        "alexander_vertices",
        not (mine & theirs) and (mine | theirs) == every,
        f"overlap {sorted(mine & theirs)}, missing {sorted(every - mine - theirs)}",
    )
    x = scomplex.reduced_betti(build_ass_hat(p))
    y = scomplex.reduced_betti(build_ass_hat(q))
    top = p.b - 3  # sphere dimension
    bad = []
    for i in range(-1, top + 1):
        j = top - 1 - i
        if x.get(i, 0) != y.get(j, 0):
            bad.append(i)
    rep.expect(
        "alexander_betti",
        not bad,
        f"degree {bad[:1]}: betti {[x.get(i, 0) for i in bad[:1]]} vs dual degree "
        f"{[top - 1 - i for i in bad[:1]]}",
    )
    return rep
