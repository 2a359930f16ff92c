"""Quota-constrained squad selection and squad comparison.

The exact selector seats players into category slots to maximize the total
rating. Each player fills at most one slot, and every category quota is met
exactly. Among optimal squads, the one whose sorted ``(category, player_id)``
list is lexicographically smallest wins. Categories sort in
:class:`RoleCategory` declaration order.
"""

from __future__ import annotations

import itertools
import math
import re
import unicodedata
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .rating import RatingPoint, RoleCategory
from .validation import check_nonnegative_int

BRUTE_FORCE_LIMIT = 20
SQUAD_SIZE = 15

SELECTED = "selected"
FORCED = "forced-include"
WILDCARD = "wildcard"


class SelectionError(ValueError):
    """Quotas cannot be met or overrides contradict each other."""

    def __init__(self, message: str, category: RoleCategory | None = None):
        super().__init__(message)
        self.category = category


# --------------------------------------------------------------------------
# Templates and overrides
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SquadTemplate:
    quotas: Mapping[RoleCategory, int]
    name: str = "custom"

    def __post_init__(self) -> None:
        quotas = {}
        for cat, n in self.quotas.items():
            cat = RoleCategory.parse(cat) if isinstance(cat, str) else cat
            quotas[cat] = check_nonnegative_int(n, f"quota for {cat.value}")
        object.__setattr__(self, "quotas", {c: quotas.get(c, 0) for c in RoleCategory})

    @property
    def size(self) -> int:
        return sum(self.quotas.values())

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "quotas": {c.value: n for c, n in self.quotas.items()}}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "SquadTemplate":
        quotas = data.get("quotas", data)
        return cls({k: v for k, v in quotas.items() if k != "name"}, name=data.get("name", "custom"))


# Composition of the recommended squad: 3 openers, 2 middle, 2 lower, a keeper,
# 2 spinners, 3 pacers and 2 all-rounders.
DEFAULT_TEMPLATE = SquadTemplate(
    {
        RoleCategory.OPENER: 3,
        RoleCategory.MIDDLE_ORDER: 2,
        RoleCategory.LOWER_ORDER: 2,
        RoleCategory.WICKETKEEPER: 1,
        RoleCategory.SPINNER: 2,
        RoleCategory.PACER: 3,
        RoleCategory.ALL_ROUNDER: 2,
    },
    name="default",
)

# 6 specialist batsmen, 6 specialist bowlers, 1 keeper, 2 all-rounders.
BALANCED_TEMPLATE = SquadTemplate(
    {
        RoleCategory.OPENER: 3,
        RoleCategory.MIDDLE_ORDER: 2,
        RoleCategory.LOWER_ORDER: 1,
        RoleCategory.WICKETKEEPER: 1,
        RoleCategory.SPINNER: 2,
        RoleCategory.PACER: 4,
        RoleCategory.ALL_ROUNDER: 2,
    },
    name="balanced",
)

TEMPLATES = {"default": DEFAULT_TEMPLATE, "balanced": BALANCED_TEMPLATE}


@dataclass(frozen=True)
class Overrides:
    force_include: tuple[tuple[str, RoleCategory], ...] = ()
    exclude: frozenset[str] = frozenset()
    wildcards: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        forced = tuple(
            (pid, RoleCategory.parse(cat) if isinstance(cat, str) else cat) for pid, cat in self.force_include
        )
        object.__setattr__(self, "force_include", forced)
        object.__setattr__(self, "exclude", frozenset(self.exclude))
        object.__setattr__(self, "wildcards", frozenset(self.wildcards))

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Overrides":
        forced = []
        for item in data.get("force_include", ()):
            if isinstance(item, str):
                pid, _, cat = item.partition(":")
                forced.append((pid, cat))
            elif isinstance(item, Mapping):
                forced.append((item["player_id"], item["category"]))
            else:
                forced.append(tuple(item))
        return cls(tuple(forced), frozenset(data.get("exclude", ())), frozenset(data.get("wildcards", ())))

    def merged(self, other: "Overrides") -> "Overrides":
        return Overrides(
            self.force_include + other.force_include, self.exclude | other.exclude, self.wildcards | other.wildcards
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "force_include": [f"{pid}:{cat.value}" for pid, cat in self.force_include],
            "exclude": sorted(self.exclude),
            "wildcards": sorted(self.wildcards),
        }


# --------------------------------------------------------------------------
# Squads
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Slot:
    player_id: str
    category: RoleCategory
    score: float
    provenance: str = SELECTED


@dataclass(frozen=True)
class Squad:
    slots: tuple[Slot, ...]
    total_score: float
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def player_ids(self) -> list[str]:
        return [s.player_id for s in self.slots]

    def key(self) -> list[tuple[int, str]]:
        return sorted((s.category.rank, s.player_id) for s in self.slots)

    def by_category(self) -> dict[RoleCategory, list[Slot]]:
        out: dict[RoleCategory, list[Slot]] = {}
        for s in self.slots:
            out.setdefault(s.category, []).append(s)
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "slots": [
                {"player_id": s.player_id, "category": s.category.value, "score": s.score, "provenance": s.provenance}
                for s in self.slots
            ],
            "total_score": self.total_score,
        }


def _make_squad(slots: Iterable[Slot], warnings: Iterable[str] = ()) -> Squad:
    ordered = tuple(sorted(slots, key=lambda s: (s.category.rank, -s.score, s.player_id)))
    return Squad(ordered, math.fsum(s.score for s in ordered), tuple(warnings))


# --------------------------------------------------------------------------
# Problem preparation (shared by every strategy)
# --------------------------------------------------------------------------


def _as_score_table(pools: Mapping[Any, Iterable]) -> dict[RoleCategory, dict[str, float]]:
    table: dict[RoleCategory, dict[str, float]] = {}
    for cat, items in pools.items():
        cat = RoleCategory.parse(cat) if isinstance(cat, str) else cat
        scores: dict[str, float] = {}
        for item in items:
            if isinstance(item, RatingPoint):
                pid, score = item.player_id, item.score
            else:
                pid, score = item
            if pid in scores:
                raise ValueError(f"player {pid!r} appears twice in the {cat.value} pool")
            score = float(score)
            if not math.isfinite(score):
                raise ValueError(f"score for {pid!r} in {cat.value} is not finite")
            scores[pid] = score
        table[cat] = scores
    return table


@dataclass
class _Problem:
    forced: list[Slot]
    quotas: dict[RoleCategory, int]
    candidates: dict[RoleCategory, dict[str, float]]
    wildcards: frozenset[str]
    warnings: list[str]

    def pairs(self) -> list[tuple[RoleCategory, str, float]]:
        return sorted(
            ((c, pid, s) for c, pool in self.candidates.items() for pid, s in pool.items()),
            key=lambda t: (t[0].rank, t[1]),
        )

    def slot(self, cat: RoleCategory, pid: str) -> Slot:
        prov = WILDCARD if pid in self.wildcards else SELECTED
        return Slot(pid, cat, self.candidates[cat][pid], prov)


def _prepare(pools, template: SquadTemplate, overrides: Overrides | None) -> _Problem:
    overrides = overrides or Overrides()
    table = _as_score_table(pools)
    clash = sorted({pid for pid, _ in overrides.force_include} & overrides.exclude)
    if clash:
        raise SelectionError(f"player(s) both forced and excluded: {', '.join(clash)}")
    forced: list[Slot] = []
    warnings: list[str] = []
    seen: set[str] = set()
    quotas = dict(template.quotas)
    for pid, cat in overrides.force_include:
        if pid in seen:
            raise SelectionError(f"player {pid!r} is forced into more than one slot")
        seen.add(pid)
        if quotas[cat] == 0:
            raise SelectionError(
                f"forced includes exceed the {cat.value} quota of {template.quotas[cat]}", category=cat
            )
        quotas[cat] -= 1
        pool = table.get(cat, {})
        if pid not in pool:
            warnings.append(f"forced player {pid!r} has no {cat.value} rating; seated with score 0")
        forced.append(Slot(pid, cat, pool.get(pid, 0.0), FORCED))
    candidates: dict[RoleCategory, dict[str, float]] = {}
    for cat in RoleCategory:
        if quotas[cat] == 0:
            continue
        pool = {
            pid: s for pid, s in table.get(cat, {}).items() if pid not in overrides.exclude and pid not in seen
        }
        if len(pool) < quotas[cat]:
            raise SelectionError(
                f"not enough {cat.value} candidates: need {quotas[cat]}, have {len(pool)}", category=cat
            )
        candidates[cat] = pool
    return _Problem(forced, quotas, candidates, overrides.wildcards, warnings)


def _tolerance(value: float) -> float:
    return 1e-9 * max(1.0, abs(value))


# --------------------------------------------------------------------------
# Exact selection
# --------------------------------------------------------------------------


def _best_assignment(
    problem: _Problem, fixed: set[tuple[RoleCategory, str]], banned: set[tuple[RoleCategory, str]]
) -> tuple[float, set[tuple[RoleCategory, str]]] | None:
    """Optimal completion of ``fixed`` avoiding ``banned`` pairs, or None when infeasible."""
    used = {pid for _, pid in fixed}
    open_quota = dict(problem.quotas)
    for cat, _ in fixed:
        open_quota[cat] -= 1
    cols = [cat for cat in RoleCategory for _ in range(max(0, open_quota[cat]))]
    if any(n < 0 for n in open_quota.values()):
        return None
    chosen = set(fixed)
    if cols:
        players = sorted({pid for pool in problem.candidates.values() for pid in pool} - used)
        if len(players) < len(cols):
            return None
        cost = np.full((len(players), len(cols)), np.inf)
        for j, cat in enumerate(cols):
            pool = problem.candidates[cat]
            for i, pid in enumerate(players):
                if pid in pool and (cat, pid) not in banned:
                    cost[i, j] = -pool[pid]
        try:
            rows, assigned = linear_sum_assignment(cost)
        except ValueError:
            return None
        if not np.all(np.isfinite(cost[rows, assigned])):
            return None
        chosen |= {(cols[j], players[i]) for i, j in zip(rows, assigned)}
    value = math.fsum(problem.candidates[cat][pid] for cat, pid in chosen)
    return value, chosen


def _select_exact(problem: _Problem) -> set[tuple[RoleCategory, str]]:
    best = _best_assignment(problem, set(), set())
    if best is None:
        raise SelectionError("quotas cannot be met: too few distinct candidates across categories")
    optimum, current = best
    floor = optimum - _tolerance(optimum)
    target = sum(problem.quotas.values())
    fixed: set[tuple[RoleCategory, str]] = set()
    banned: set[tuple[RoleCategory, str]] = set()
    used: set[str] = set()
    # Walk pairs in ascending (category, player) order, keeping each pair
    # whenever some optimal squad still contains it; for equal-size sets this
    # yields the lexicographically smallest sorted list.
    for cat, pid, _ in problem.pairs():
        if len(fixed) == target:
            break
        pair = (cat, pid)
        if pid in used:
            continue
        if pair in current:
            fixed.add(pair)
            used.add(pid)
            continue
        trial = _best_assignment(problem, fixed | {pair}, banned)
        if trial is not None and trial[0] >= floor:
            fixed.add(pair)
            used.add(pid)
            current = trial[1]
        else:
            banned.add(pair)
    return fixed


def _select_greedy(problem: _Problem) -> set[tuple[RoleCategory, str]]:
    # highest score first; a multi-category player lands in the category where
    # they rate best among those with room left
    room = dict(problem.quotas)
    chosen: set[tuple[RoleCategory, str]] = set()
    used: set[str] = set()
    for cat, pid, _ in sorted(problem.pairs(), key=lambda t: (-t[2], t[0].rank, t[1])):
        if room[cat] > 0 and pid not in used:
            chosen.add((cat, pid))
            used.add(pid)
            room[cat] -= 1
    for cat, left in room.items():
        if left > 0:
            raise SelectionError(f"greedy selection left {left} {cat.value} slot(s) unfilled", category=cat)
    return chosen


STRATEGIES = ("exact", "greedy")


def select_squad(
    pools: Mapping[Any, Iterable],
    template: SquadTemplate = DEFAULT_TEMPLATE,
    overrides: Overrides | None = None,
    strategy: str = "exact",
) -> Squad:
    """Choose the squad maximizing total rating under ``template``.

    ``pools`` maps each category to its rated players, given either as
    :class:`RatingPoint` objects or ``(player_id, score)`` pairs. Forced
    includes are seated first (with score 0 when they have no rating in that
    category), excluded players never appear, and the remaining slots are
    filled by the chosen ``strategy``.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    problem = _prepare(pools, template, overrides)
    chosen = _select_exact(problem) if strategy == "exact" else _select_greedy(problem)
    return _make_squad(problem.forced + [problem.slot(c, p) for c, p in chosen], problem.warnings)


def brute_force_select(
    pools: Mapping[Any, Iterable], template: SquadTemplate = DEFAULT_TEMPLATE, overrides: Overrides | None = None
) -> Squad:
    """Enumerate every quota-exact assignment; reference answer for small instances."""
    problem = _prepare(pools, template, overrides)
    players = {pid for pool in problem.candidates.values() for pid in pool} | {s.player_id for s in problem.forced}
    if len(players) > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force is limited to {BRUTE_FORCE_LIMIT} candidates, got {len(players)}")
    cats = [c for c in RoleCategory if problem.quotas[c] > 0]

    chosen: list[tuple[RoleCategory, str]] = []
    used: set[str] = set()
    best = -math.inf
    near: list[tuple[float, list[tuple[int, str]]]] = []  # assignments within tolerance of the running best

    def visit(i: int) -> None:
        nonlocal best, near
        if i == len(cats):
            total = math.fsum(problem.candidates[c][p] for c, p in chosen)
            if total > best:
                best = total
                near = [(v, k) for v, k in near if v >= best - _tolerance(best)]
            if total >= best - _tolerance(best):
                near.append((total, sorted((c.rank, p) for c, p in chosen)))
            return
        cat = cats[i]
        eligible = sorted(pid for pid in problem.candidates[cat] if pid not in used)
        for group in itertools.combinations(eligible, problem.quotas[cat]):
            chosen.extend((cat, pid) for pid in group)
            used.update(group)
            visit(i + 1)
            used.difference_update(group)
            del chosen[len(chosen) - len(group):]

    visit(0)
    if not near:
        raise SelectionError("quotas cannot be met: too few distinct candidates across categories")
    winner = min(k for v, k in near if v >= best - _tolerance(best))
    by_rank = {c.rank: c for c in RoleCategory}
    return _make_squad(
        problem.forced + [problem.slot(by_rank[r], p) for r, p in winner], problem.warnings
    )


class SquadSelector(BaseEstimator):
    """Estimator wrapper around :func:`select_squad`.

    Parameters
    ----------
    template : SquadTemplate, str or mapping, default="default"
        A template object, a preset name (``"default"``, ``"balanced"``) or a
        ``{category: quota}`` mapping.
    strategy : {"exact", "greedy"}, default="exact"
    force_include : sequence of (player_id, category), default=()
    exclude : sequence of player_id, default=()
    wildcards : sequence of player_id, default=()

    Attributes
    ----------
    squad_ : Squad
    template_ : SquadTemplate
    """

    def __init__(self, template="default", strategy="exact", force_include=(), exclude=(), wildcards=()):
        self.template = template
        self.strategy = strategy
        self.force_include = force_include
        self.exclude = exclude
        self.wildcards = wildcards

    def fit(self, pools, y=None):
        self.template_ = resolve_template(self.template)
        overrides = Overrides(tuple(self.force_include), frozenset(self.exclude), frozenset(self.wildcards))
        self.squad_ = select_squad(pools, self.template_, overrides, self.strategy)
        return self

    def predict(self, pools=None) -> list[str]:
        """Player ids of the fitted squad (refit first when ``pools`` is given)."""
        if pools is not None:
            self.fit(pools)
        check_is_fitted(self, "squad_")
        return self.squad_.player_ids


def resolve_template(template) -> SquadTemplate:
    if isinstance(template, SquadTemplate):
        return template
    if isinstance(template, str):
        try:
            return TEMPLATES[template]
        except KeyError:
            raise ValueError(f"unknown template {template!r} (presets: {', '.join(TEMPLATES)})") from None
    return SquadTemplate.from_dict(template)


# --------------------------------------------------------------------------
# Comparison
# --------------------------------------------------------------------------


def normalize_name(name: str) -> str:
    """Case-fold, strip accents and punctuation, collapse whitespace."""
    text = unicodedata.normalize("NFKD", name)
    text = "".join(ch for ch in text if not unicodedata.combining(ch)).casefold()
    text = re.sub(r"[^\w\s]|_", " ", text)
    return " ".join(text.split())


@dataclass(frozen=True)
class SquadComparison:
    common: frozenset[str]
    only_a: frozenset[str]
    only_b: frozenset[str]
    mismatch_count: int
    jaccard: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "common": sorted(self.common),
            "only_a": sorted(self.only_a),
            "only_b": sorted(self.only_b),
            "mismatch_count": self.mismatch_count,
            "jaccard": self.jaccard,
        }


def compare_squads(
    squad_a: Sequence[str], squad_b: Sequence[str], aliases: Mapping[str, str] | None = None
) -> SquadComparison:
    """Set comparison of two name lists.

    Names match after :func:`normalize_name`; ``aliases`` maps variant
    spellings to a canonical spelling before matching. Reported names use
    the spelling of the list they come from (``squad_a`` for common names).
    """
    alias = {normalize_name(k): normalize_name(v) for k, v in (aliases or {}).items()}

    def keyed(names: Sequence[str], label: str) -> dict[str, str]:
        if not names:
            raise ValueError(f"squad {label} is empty")
        out: dict[str, str] = {}
        for name in names:
            key = normalize_name(name)
            key = alias.get(key, key)
            if key in out:
                raise ValueError(f"duplicate name in squad {label}: {name!r}")
            out[key] = name
        return out

    a, b = keyed(squad_a, "a"), keyed(squad_b, "b")
    common = a.keys() & b.keys()
    only_a = a.keys() - b.keys()
    only_b = b.keys() - a.keys()
    union = a.keys() | b.keys()
    return SquadComparison(
        common=frozenset(a[k] for k in common),
        only_a=frozenset(a[k] for k in only_a),
        only_b=frozenset(b[k] for k in only_b),
        mismatch_count=len(only_a),
        jaccard=len(common) / len(union),
    )
