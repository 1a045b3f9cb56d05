"""Exhaustive verification suites used by ``catalan-hopf verify``.

Each suite returns ``(ok, lines)``; output is buffered per suite so runs are
deterministic whether or not they execute in parallel.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from math import comb, factorial

from .errors import ClosureViolation
from .formal import FormalSum
from .sharp import DEFAULT_STRATEGY, associativity_failures, hash_product, tableaux_up_to
from .lab import SplittingViolation, shape_census, verify_canopy_splitting
from .lr import lr_product, lr_product_sum
from .perms import all_permutations, mr_product, mr_product_sum, updown
from .tableaux import enumerate_all, is_valid, transpose
from .trees import LEAF, canopy, enumerate_trees, fiber, psi

DEFAULT_SEED = 20240601


def suite_census(n_max: int = 10, **_) -> tuple[bool, list[str]]:
    lines, ok = [], True
    for n in range(1, n_max + 1):
        c = shape_census(n)
        good = not c.mismatches
        ok &= good
        lines.append(f"n={n}: {len(c.per_shape)} shapes, totals {c.totals}, {'ok' if good else c.mismatches}")
    return ok, lines


def suite_splitting(n_max: int = 7, **_) -> tuple[bool, list[str]]:
    try:
        r = verify_canopy_splitting(n_max)
    except SplittingViolation as exc:
        return False, [f"violation: {exc}"]
    info = r.to_json()
    return True, [
        f"{info['pairs_checked']} pairs, {info['terms_checked']} terms, 0 violations",
        f"pairs missing a connector: {len(info['one_sided_pairs'])}",
        f"coefficients: {info['coefficient_histogram']}",
    ]


def suite_fibers(n_max: int = 7, **_) -> tuple[bool, list[str]]:
    lines, ok = [], True
    for n in range(n_max + 1):
        seen: set = set()
        total = 0
        for t in enumerate_trees(n):
            z = fiber(t).perms
            ok &= not (seen & z)
            seen |= z
            total += len(z)
            ok &= all(psi(s) == t for s in z)
            if n:
                ok &= all(updown(s) == canopy(t) for s in z)
        ok &= total == factorial(n)
        lines.append(f"n={n}: sum of fiber sizes {total} = {n}!")
    return ok, lines


def suite_closure(n_max: int = 7, **_) -> tuple[bool, list[str]]:
    pairs = 0
    for n in range(n_max + 1):
        for k in range(n + 1):
            for t1, t2 in product(enumerate_trees(k), enumerate_trees(n - k)):
                try:
                    ref = lr_product(t1, t2, "reference")
                except ClosureViolation as exc:
                    return False, [f"closure violated: {exc}"]
                if any(c <= 0 for c in ref.coefficients()):
                    return False, [f"non-positive coefficient in {t1} * {t2}"]
                if ref != lr_product(t1, t2, "fast"):
                    return False, [f"fast path differs on {t1} * {t2}"]
                pairs += 1
    return True, [f"{pairs} pairs closed under fibers; fast path identical"]


def suite_lr_laws(n_max: int = 7, **_) -> tuple[bool, list[str]]:
    trees = {n: enumerate_trees(n) for n in range(n_max + 1)}
    one = FormalSum.from_basis
    triples = 0
    for a, b in product(range(n_max + 1), repeat=2):
        for c in range(n_max + 1 - a - b):
            for t1, t2, t3 in product(trees[a], trees[b], trees[c]):
                left = lr_product_sum(lr_product(t1, t2, "fast"), one([t3]), "fast")
                right = lr_product_sum(one([t1]), lr_product(t2, t3, "fast"), "fast")
                if left != right:
                    return False, [f"associativity fails on {t1}, {t2}, {t3}"]
                triples += 1
    for n in range(n_max + 1):
        for t in trees[n]:
            if lr_product(LEAF, t) != one([t]) or lr_product(t, LEAF) != one([t]):
                return False, [f"leaf is not a unit for {t}"]
    return True, [f"associativity on {triples} triples; leaf is a two-sided unit"]


def suite_mr(n_max: int = 6, samples: int = 200, seed: int = DEFAULT_SEED, **_):
    perms = {n: all_permutations(n) for n in range(n_max + 1)}
    for k, l in product(range(n_max + 1), repeat=2):
        if k + l > n_max:
            continue
        for s, t in product(perms[k], perms[l]):
            p = mr_product(s, t)
            if len(p) != comb(k + l, k) or set(p.coefficients()) - {1}:
                return False, [f"term count wrong for {s} * {t}"]
    triples = 0
    one = FormalSum.from_basis
    for a, b in product(range(n_max + 1), repeat=2):
        for c in range(n_max + 1 - a - b):
            for s, t, u in product(perms[a], perms[b], perms[c]):
                if mr_product_sum(mr_product(s, t), one([u])) != mr_product_sum(one([s]), mr_product(t, u)):
                    return False, [f"associativity fails on {s}, {t}, {u}"]
                triples += 1
    rng = random.Random(seed)
    for _ in range(samples):
        total = rng.choice((7, 8))
        a = rng.randint(0, total)
        b = rng.randint(0, total - a)
        s, t, u = (_random_perm(rng, m) for m in (a, b, total - a - b))
        if mr_product_sum(mr_product(s, t), one([u])) != mr_product_sum(one([s]), mr_product(t, u)):
            return False, [f"associativity fails on {s}, {t}, {u}"]
    return True, [f"term counts and associativity on {triples} triples; {samples} random triples at size 7-8 (seed {seed})"]


def _random_perm(rng, n):
    from .perms import Permutation

    w = list(range(1, n + 1))
    rng.shuffle(w)
    return Permutation(w)


def suite_hash(n_max: int = 6, samples: int = 50, seed: int = DEFAULT_SEED, strategy: str = DEFAULT_STRATEGY, **_):
    for triple, left, right in associativity_failures(n_max, strategy, limit=1):
        return False, [f"associativity fails on {[str(x) for x in triple]}: {len(left)} vs {len(right)} terms"]
    by_size = tableaux_up_to(n_max)
    one = FormalSum.from_basis
    from .sharp import UNIT

    for ts in by_size.values():
        for t in ts:
            if hash_product(UNIT, t, strategy) != one([t]) or hash_product(t, UNIT, strategy) != one([t]):
                return False, [f"empty tableau is not a unit for {t}"]
    rng = random.Random(seed)
    big = tableaux_up_to(7)
    for _ in range(samples):
        a = rng.randint(0, 7)
        b = rng.randint(0, 7 - a)
        x, y, z = (rng.choice(big[m]) for m in (a, b, 7 - a - b))
        mul = lambda p, q: hash_product(p, q, strategy)
        if hash_product(x, y, strategy).map_bilinear(one([z]), mul) != one([x]).map_bilinear(hash_product(y, z, strategy), mul):
            return False, [f"associativity fails on {x}, {y}, {z}"]
    return True, [f"strategy {strategy!r}: associative to total size {n_max}, unit ok, {samples} random triples at size 7 (seed {seed})"]


def suite_transpose(n_max: int = 8, **_):
    count = 0
    for m in range(n_max + 1):
        for t in enumerate_all(m):
            u = transpose(t)
            if not is_valid(u) or transpose(u) != t:
                return False, [f"transpose fails on {t}"]
            count += 1
    return True, [f"{count} tableaux: transpose is a validity-preserving involution"]


SUITES = {
    "census": suite_census,
    "splitting": suite_splitting,
    "fibers": suite_fibers,
    "closure": suite_closure,
    "lr-laws": suite_lr_laws,
    "mr": suite_mr,
    "hash": suite_hash,
    "transpose": suite_transpose,
}


def _run_one(args):
    name, kwargs = args
    try:
        ok, lines = SUITES[name](**kwargs)
    except Exception as exc:  # a crashing suite is a failed suite
        ok, lines = False, [f"error: {exc!r}"]
    return name, ok, lines


def run_suites(names=None, seed: int = DEFAULT_SEED, jobs: int = 1) -> list[tuple[str, bool, list[str]]]:
    names = list(names or SUITES)
    tasks = [(n, {"seed": seed}) for n in names]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, tasks))
    return [_run_one(t) for t in tasks]
