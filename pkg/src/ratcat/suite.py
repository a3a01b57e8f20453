"""Registry of per-pair verification checks driven by ``ratcat verify``.

Each entry maps a check name to a function ``(pair, options) -> Report``.
Proven statements report pass/fail; conjecture probes report
verified/refuted/inconclusive and never fail a run.
"""
from __future__ import annotations

import time
from collections import Counter
from math import gcd
from typing import Callable

from . import assoc, dyck, ncpart, numbers, scomplex
from .numbers import CoprimePair
from .report import Report

CheckFn = Callable[[CoprimePair, dict], Report]
REGISTRY: dict[str, CheckFn] = {}


def register(name: str):
    def deco(fn: CheckFn) -> CheckFn:
        REGISTRY[name] = fn
        return fn

    return deco


def pairs_up_to(max_sum: int, *, max_b: int | None = None) -> list[CoprimePair]:
    """Coprime a < b with a + b <= max_sum, ordered by a + b then a."""
    out = []
    for s in range(3, max_sum + 1):
        for a in range(1, (s + 1) // 2):
            b = s - a
            if gcd(a, b) == 1 and (max_b is None or b <= max_b):
                out.append(CoprimePair(a, b))
    return out


def compositions(total: int, parts: int):
    """Weak compositions of ``total`` into ``parts`` nonnegative entries."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@register("numbers")
def check_numbers(p: CoprimePair, opts: dict) -> Report:
    rep = Report(p)
    cat = numbers.rational_catalan(p)
    rep.expect_equal("catalan_symmetry", numbers.rational_catalan(p.swapped()), cat)
    rep.expect_equal("narayana_sum", sum(numbers.narayana(p, i) for i in range(1, p.a + 1)), cat)
    rep.expect_equal("kreweras_sum", sum(numbers.kreweras(p, r) for r in numbers.run_types(p)), cat)
    alt = sum((-1) ** (i + 1) * numbers.kirkman(p, i) for i in range(1, p.a + 1))
    rep.expect_equal("kirkman_alternating", alt, (-1) ** (p.a + 1) * numbers.derived_catalan(p))
    rep.expect_equal(
        "derived_duality", numbers.derived_catalan(CoprimePair(p.b - p.a, p.b)), numbers.derived_catalan(p)
    )
    rep.expect_equal("q_catalan_at_1", numbers.q_rational_catalan(p)(1), cat)
    return rep


@register("dyck")
def check_dyck(p: CoprimePair, opts: dict) -> Report:
    rep = Report(p)
    paths = list(dyck.enumerate_paths(p))
    rep.expect_equal("enumeration", len(paths), numbers.rational_catalan(p))
    stats = [dyck.statistics(D) for D in paths]
    runs = Counter(s.nontrivial_runs for s in stats)
    rep.expect_equal(
        "narayana_census",
        tuple(runs.get(i, 0) for i in range(1, p.a + 1)),
        tuple(numbers.narayana(p, i) for i in range(1, p.a + 1)),
    )
    types = Counter(s.run_type for s in stats)
    rep.expect_equal(
        "kreweras_census",
        {r: types.get(r, 0) for r in numbers.run_types(p)},
        {r: numbers.kreweras(p, r) for r in numbers.run_types(p)},
    )
    lams = [dyck.to_partition(D) for D in paths]
    rep.expect("lex_order", lams == sorted(lams), "enumeration is not in lex order of partitions")
    rep.expect(
        "partition_roundtrip",
        all(dyck.from_partition(p, lam) == D for lam, D in zip(lams, paths)),
        "from_partition does not invert to_partition",
    )
    rep.expect(
        "runword_roundtrip",
        all(dyck.from_run_word(p, dyck.run_word(D, k)) == D for D in paths for k in "xy"),
        "from_run_word does not invert run_word",
    )
    ok = True
    for D in paths:
        lasers = dyck.fire_lasers(D)
        intercepts = [p.b * L.source[1] - p.a * L.source[0] for L in lasers]
        if any(L.end_x.denominator == 1 for L in lasers) or len(set(intercepts)) != len(intercepts):
            ok = False
            break
    rep.expect("lasers", ok, f"laser invariant broken on {D}")
    return rep


@register("cycle_lemma")
def check_cycle_lemma(p: CoprimePair, opts: dict) -> Report:
    rep = Report(p)
    if p.a + p.b > opts.get("cycle_max_sum", 10):
        rep.add("cycle_lemma", "pass", "skipped above cycle_max_sum")
        return rep
    bad = None
    for w in compositions(p.a, p.b):
        conj = {w[k:] + w[:k] for k in range(p.b)}
        valid = [c for c in conj if dyck.kernels.rectify_offset(c, p.a, p.b) == 0]
        if len(conj) != p.b or len(valid) != 1:
            bad = w
            break
    rep.expect("cycle_lemma", bad is None, f"word {bad} violates the cycle lemma")
    return rep


@register("identities")
def check_identities(p: CoprimePair, opts: dict) -> Report:
    return assoc.check_identities(p)


@register("fuss")
def check_fuss(p: CoprimePair, opts: dict) -> Report:
    rep = Report(p)
    equal = assoc.build_ass(p) == assoc.build_ass_hat(p)
    if p.b % p.a == 1:
        rep.expect("fuss_equality", equal, "Ass differs from its flag closure")
    else:
        rep.add("fuss_equality", "pass", {"not_fuss": True, "equal": equal})
    return rep


@register("collapse")
def check_collapse(p: CoprimePair, opts: dict) -> Report:
    rep = Report(p)
    v = assoc.check_collapse_conjecture(p, opts.get("budget", scomplex.DEFAULT_BUDGET))
    witness = v.witness
    if v.status == "verified":
        witness = {"collapses": len(v.witness["collapses"])}
    rep.add("collapse", v.status, witness)
    return rep


@register("alexander")
def check_alexander(p: CoprimePair, opts: dict) -> Report:
    return assoc.check_alexander_duality(p)


@register("promotion")
def check_promotion(p: CoprimePair, opts: dict) -> Report:
    return ncpart.verify_promotion_rotation(p)


@register("csp")
def check_csp(p: CoprimePair, opts: dict) -> Report:
    return ncpart.csp_check(p)


@register("homogeneous")
def check_homogeneous(p: CoprimePair, opts: dict) -> Report:
    rep = Report(p)
    paths = list(dyck.enumerate_paths(p))
    parts = [ncpart.homogeneous(D) for D in paths]
    rep.expect("homogeneous_noncrossing", all(map(ncpart.is_noncrossing, parts)), "crossing output")
    rep.expect_equal("homogeneous_injective", len(set(parts)), len(paths))
    labels_ok = True
    for D, mu in zip(paths, parts):
        # internal point t is the top of step t, so these are the north-step tops
        tops = [t + 1 for t, s in enumerate(D.steps) if s == "N"]
        if sorted(B[0] for B in mu.blocks) != tops:
            labels_ok = False
            break
    rep.expect("homogeneous_minima", labels_ok, f"block minima mismatch on {D}")
    if p.b % p.a == 1:
        k = p.b // p.a
        rep.expect(
            "homogeneous_fuss",
            all(len(B) == k + 1 for mu in parts for B in mu.blocks),
            f"some block size differs from {k + 1}",
        )
    return rep


@register("inhomogeneous")
def check_inhomogeneous(p: CoprimePair, opts: dict) -> Report:
    rep = Report(p)
    paths = list(dyck.enumerate_paths(p))
    parts = [ncpart.inhomogeneous(D) for D in paths]
    rep.expect("inhomogeneous_noncrossing", all(map(ncpart.is_noncrossing, parts)), "crossing output")
    rep.expect_equal("inhomogeneous_injective", len(set(parts)), len(paths))
    rep.expect(
        "inhomogeneous_blocks",
        all(len(pi) == dyck.statistics(D).nontrivial_runs for D, pi in zip(paths, parts)),
        "block count differs from the number of vertical runs",
    )
    rep.extend(ncpart.verify_order_filter(p))
    if p.b % p.a == 1:
        k = p.b // p.a
        rep.expect(
            "inhomogeneous_fuss",
            all(len(B) % k == 0 for pi in parts for B in pi.blocks),
            f"some block size is not divisible by {k}",
        )
    return rep


@register("rotation_probe")
def check_rotation_probe(p: CoprimePair, opts: dict) -> Report:
    rep = Report(p)
    v = ncpart.probe_inhomogeneous_rotation(p)
    witness = None if v.status == "verified" else v.witness
    rep.add("inhomogeneous_rotation", v.status, witness)
    return rep


def run_pair(p: CoprimePair, only: list[str] | None = None, opts: dict | None = None) -> Report:
    opts = opts or {}
    names = only or list(REGISTRY)
    rep = Report(p)
    t0 = time.perf_counter()
    for name in names:
        rep.extend(REGISTRY[name](p, opts))
    rep.timing = time.perf_counter() - t0
    return rep


def _run_pair_args(args):
    a, b, only, opts = args
    return run_pair(CoprimePair(a, b), only, opts).to_dict()
