"""Cross-checks between trees, permutations and tableaux.

``shape_census`` and ``verify_canopy_splitting`` turn the structural
statements about canopies into exhaustive computations.  The explorer
searches for tree-tableau bijections that make the Loday-Ronco product
literally a block picture on tableaux, and reports how far the product
constraints pin them down; it never claims more than it enumerated.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, field
from itertools import product

from .errors import InvalidArgument
from .sharp import DEFAULT_STRATEGY, embed
from .lr import canopy_split
from .perms import format_signs
from .tableaux import Tableau, all_shapes, completions, count_tableaux, enumerate_tableaux
from .trees import canopy, canopy_counts, enumerate_trees


@dataclass
class ShapeCensus:
    n: int
    per_shape: dict[tuple[int, ...], tuple[int, int]]

    @property
    def totals(self) -> tuple[int, int]:
        return (
            sum(t for t, _ in self.per_shape.values()),
            sum(c for _, c in self.per_shape.values()),
        )

    @property
    def mismatches(self) -> list[tuple[int, ...]]:
        return [s for s, (t, c) in self.per_shape.items() if t != c]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "per_shape": [
                {"shape": list(s), "tree_count": t, "tableau_count": c}
                for s, (t, c) in sorted(self.per_shape.items())
            ],
            "totals": list(self.totals),
            "all_equal": not self.mismatches,
        }

    @classmethod
    def from_json(cls, obj: dict) -> ShapeCensus:
        return cls(
            obj["n"],
            {
                tuple(row["shape"]): (row["tree_count"], row["tableau_count"])
                for row in obj["per_shape"]
            },
        )


def shape_census(n: int) -> ShapeCensus:
    """Trees of size ``n`` per canopy against tableaux per shape of length n-1."""
    if not 1 <= n <= 12:
        raise InvalidArgument("census size must be in 1..12")
    trees = canopy_counts(n)
    return ShapeCensus(n, {s: (trees[s], count_tableaux(s)) for s in all_shapes(n - 1)})


class SplittingViolation(AssertionError):
    pass


@dataclass
class SplittingReport:
    n_max: int
    pairs_checked: int = 0
    terms_checked: int = 0
    # pairs whose product misses one of the two connectors
    one_sided_pairs: list = field(default_factory=list)
    # (t1, t2, connector, class size, tableau count of that shape)
    classes: list = field(default_factory=list)
    coefficients: Counter = field(default_factory=Counter)

    @property
    def multiplicity_free(self) -> bool:
        return set(self.coefficients) <= {1}

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "pairs_checked": self.pairs_checked,
            "terms_checked": self.terms_checked,
            "violations": 0,
            "one_sided_pairs": self.one_sided_pairs,
            "class_size_exceeds_tableau_count": sum(
                1 for *_, size, tabs in self.classes if size > tabs
            ),
            "coefficient_histogram": {str(k): v for k, v in sorted(self.coefficients.items())},
            "multiplicity_free": self.multiplicity_free,
        }


def verify_canopy_splitting(n_max: int, method: str = "fast") -> SplittingReport:
    """Check that every term of T1 * T2 has canopy Q(T1), +-1, Q(T2).

    Runs over all pairs of non-leaf trees with total size <= ``n_max`` and
    raises SplittingViolation naming the first offending pair.
    """
    if n_max > 8:
        raise InvalidArgument("n_max above 8 is not supported")
    report = SplittingReport(n_max)
    tab_counts: dict = {}
    for n in range(2, n_max + 1):
        for k in range(1, n):
            for t1, t2 in product(enumerate_trees(k), enumerate_trees(n - k)):
                q1, q2 = canopy(t1), canopy(t2)
                allowed = {q1 + (1,) + q2: 1, q1 + (-1,) + q2: -1}
                split = canopy_split(t1, t2, method)
                for key, terms in split.items():
                    if key not in allowed:
                        raise SplittingViolation(
                            f"{t1} * {t2}: term canopy {format_signs(key)} is not "
                            f"{format_signs(q1)}(+/-){format_signs(q2)}"
                        )
                    if key not in tab_counts:
                        tab_counts[key] = count_tableaux(key)
                    report.classes.append(
                        (str(t1), str(t2), allowed[key], len(terms), tab_counts[key])
                    )
                    report.terms_checked += len(terms)
                    report.coefficients.update(terms.coefficients())
                if any(not terms for terms in split.values()):
                    report.one_sided_pairs.append((str(t1), str(t2)))
                report.pairs_checked += 1
    return report


# correspondence explorer ---------------------------------------------------


@dataclass
class MatchReport:
    strategy: str
    n_max: int
    levels: list = field(default_factory=list)
    status: str = "unknown"
    bijection: dict | None = None

    def to_json(self) -> dict:
        return asdict(self)


def _matchings(trees, cand, cap):
    """Bijections trees -> tableaux with each image in its candidate set."""
    order = sorted(trees, key=lambda t: len(cand[t]))
    out = []
    used: set = set()
    current: dict = {}

    def go(i):
        if len(out) >= cap:
            return
        if i == len(order):
            out.append(dict(current))
            return
        t = order[i]
        for c in sorted(cand[t]):
            if c not in used:
                used.add(c)
                current[t] = c
                go(i + 1)
                used.discard(c)
                del current[t]

    go(0)
    return out


def explore_correspondence(
    n_max: int, strategy: str = DEFAULT_STRATEGY, cap: int = 64
) -> MatchReport:
    """Search for shape-preserving bijections phi: trees -> tableaux such that
    for all T1, T2 the terms of T1 * T2 of canopy Q(T1) c Q(T2) are exactly
    phi^-1 of the valid fillings of ``embed(phi(T1), phi(T2), strategy, [c])``.

    Works level by level.  Partial bijections on smaller trees are extended
    with every per-shape matching compatible with the product classes; at
    most ``cap`` partial bijections are carried forward, so counts at or
    above ``cap`` are lower bounds.
    """
    if not 1 <= n_max <= 6:
        raise InvalidArgument("n_max must be in 1..6")
    report = MatchReport(strategy, n_max)
    single = enumerate_trees(1)[0]
    partials = [{single: Tableau(())}]
    report.levels.append(
        {"n": 1, "partials_in": 1, "constraints": 0, "shapes": {"ε": {"trees": 1, "matchings": [1]}},
         "contradictions": [], "contradiction_count": 0, "partials_out": 1}
    )
    for n in range(2, n_max + 1):
        trees = enumerate_trees(n)
        by_shape: dict = {}
        for t in trees:
            by_shape.setdefault(canopy(t), []).append(t)
        tabs = {s: set(enumerate_tableaux(s)) for s in by_shape}
        classes = []
        for k in range(1, n):
            for t1, t2 in product(enumerate_trees(k), enumerate_trees(n - k)):
                for key, terms in canopy_split(t1, t2, "fast").items():
                    classes.append((t1, t2, key[k - 1], key, frozenset(terms.keys())))
        level = {
            "n": n,
            "partials_in": len(partials),
            "constraints": len(classes),
            "shapes": {format_signs(s): {"trees": len(v), "matchings": []} for s, v in by_shape.items()},
            "contradictions": [],
            "contradiction_count": 0,
        }
        extended = []
        for phi in partials:
            cand = {t: set(tabs[canopy(t)]) for t in trees}
            bad = None
            for t1, t2, conn, key, oracle in classes:
                e = embed(phi[t1], phi[t2], strategy, (conn,))
                predicted = set(completions(e.combined_shape, e.fixed))
                if len(predicted) != len(oracle):
                    bad = {
                        "pair": [str(t1), str(t2)],
                        "connector": conn,
                        "oracle_class_size": len(oracle),
                        "predicted_class_size": len(predicted),
                    }
                    break
                for t in by_shape[key]:
                    if t in oracle:
                        cand[t] &= predicted
                    else:
                        cand[t] -= predicted
            if bad is None:
                per_shape = {}
                for s, ts in by_shape.items():
                    per_shape[s] = _matchings(ts, cand, cap)
                    level["shapes"][format_signs(s)]["matchings"].append(len(per_shape[s]))
                    if not per_shape[s]:
                        bad = {"shape": format_signs(s), "reason": "no bijection fits the candidate sets"}
                        break
            if bad is not None:
                level["contradiction_count"] += 1
                if len(level["contradictions"]) < 8:
                    level["contradictions"].append(bad)
                continue
            for combo in product(*per_shape.values()):
                if len(extended) >= cap:
                    break
                nxt = dict(phi)
                for m in combo:
                    nxt.update(m)
                extended.append(nxt)
        for info in level["shapes"].values():
            counts = info.pop("matchings")
            info["matchings_min"] = min(counts) if counts else 0
            info["matchings_max"] = max(counts) if counts else 0
        level["partials_out"] = len(extended)
        report.levels.append(level)
        partials = extended
        if not partials:
            report.status = f"contradiction at n={n}"
            return report
    if len(partials) == 1:
        report.status = "unique"
        report.bijection = {str(t): str(c) for t, c in sorted(partials[0].items())}
    else:
        report.status = f"ambiguous ({len(partials)}{'+' if len(partials) >= cap else ''} bijections)"
    return report
