"""Role classification and pool-relative rating points on a 0-100 scale.

Every category is rated the same way: each raw statistic is min-max
normalized over the category pool onto ``[0, weight]``, the contributions
are summed, an optional bonus multiplier applies, and the result is capped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Iterable, Mapping, Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .aggregate import AllRounderDelta, BattingStats, BowlingStats, aggregate_all, recent_internationals
from .datastore import BowlingStyle, MatchScorecard, MatchStore, PlayerRecord
from .validation import check_orientations, check_pool, check_weights

SCORE_CAP = 100.0


class RoleCategory(str, Enum):
    OPENER = "opener"
    MIDDLE_ORDER = "middle_order"
    LOWER_ORDER = "lower_order"
    WICKETKEEPER = "wicketkeeper"
    SPINNER = "spinner"
    PACER = "pacer"
    ALL_ROUNDER = "all_rounder"

    @property
    def rank(self) -> int:
        return _CATEGORY_ORDER[self]

    @classmethod
    def parse(cls, text: str) -> "RoleCategory":
        key = text.strip().lower().replace("-", "_").replace(" ", "_")
        key = _CATEGORY_ALIASES.get(key, key)
        try:
            return cls(key)
        except ValueError:
            allowed = ", ".join(c.value for c in cls)
            raise ValueError(f"unknown category {text!r} (expected one of: {allowed})") from None


_CATEGORY_ORDER = {c: i for i, c in enumerate(RoleCategory)}
_CATEGORY_ALIASES = {
    "openers": "opener",
    "middle": "middle_order",
    "lower": "lower_order",
    "keeper": "wicketkeeper",
    "wicket_keeper": "wicketkeeper",
    "spinners": "spinner",
    "pacers": "pacer",
    "allrounder": "all_rounder",
    "allrounders": "all_rounder",
    "all_rounders": "all_rounder",
}


# --------------------------------------------------------------------------
# Normalization
# --------------------------------------------------------------------------


class PoolMinMaxScaler(TransformerMixin, BaseEstimator):
    """Min-max scale each raw statistic of a pool onto ``[0, weight]``.

    The best finite value in the pool maps to ``weight``, the worst to 0.
    Non-finite values (the WORST sentinel) always map to 0. When every
    finite value in a column is equal, each of them maps to ``weight / 2``.

    Parameters
    ----------
    orientation : {"higher", "lower"} or sequence of them, default="higher"
        Whether larger raw values are better, per column.
    weight : float or sequence of float, default=1.0
        Upper end of the output range, per column.

    Attributes
    ----------
    data_min_ : ndarray of shape (n_terms,)
        Smallest finite oriented value per column (NaN when a column has none).
    data_max_ : ndarray of shape (n_terms,)
        Largest finite oriented value per column.
    n_features_in_ : int
    """

    def __init__(self, orientation="higher", weight=1.0):
        self.orientation = orientation
        self.weight = weight

    def _oriented(self, X: np.ndarray) -> np.ndarray:
        signs = np.array([-1.0 if o == "lower" else 1.0 for o in self.orientation_])
        # negation is exact, so lower-better equals higher-better on -x bit for bit
        return np.where(signs < 0, -X, X)

    def fit(self, X, y=None):
        X = check_pool(X, estimator=self)
        self.n_features_in_ = X.shape[1]
        self.orientation_ = check_orientations(self.orientation, X.shape[1])
        self.weight_ = check_weights(self.weight, X.shape[1])
        Z = self._oriented(X)
        finite = np.isfinite(Z)
        lo = np.where(finite, Z, np.inf).min(axis=0)
        hi = np.where(finite, Z, -np.inf).max(axis=0)
        none = ~finite.any(axis=0)
        self.data_min_ = np.where(none, np.nan, lo)
        self.data_max_ = np.where(none, np.nan, hi)
        return self

    def transform(self, X):
        check_is_fitted(self, "data_min_")
        X = check_pool(X, estimator=self)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} columns, expected {self.n_features_in_}")
        Z = self._oriented(X)
        out = np.zeros_like(Z)
        for j in range(Z.shape[1]):
            col = Z[:, j]
            ok = np.isfinite(col)
            lo, hi, w = self.data_min_[j], self.data_max_[j], self.weight_[j]
            if not np.isfinite(lo):
                continue
            span = hi - lo
            if span > 0:
                out[ok, j] = np.clip((col[ok] - lo) / span, 0.0, 1.0) * w
            else:
                out[ok, j] = np.where(col[ok] == lo, w / 2, np.where(col[ok] > lo, w, 0.0))
        return out


def normalize(values: Sequence[float], orientation: str = "higher", weight: float = 1.0) -> np.ndarray:
    """Min-max normalize one pool of raw values onto ``[0, weight]``.

    >>> normalize([4.0, 5.0, 6.0], "lower", 50).tolist()
    [50.0, 25.0, 0.0]
    """
    if len(values) == 0:
        raise ValueError("cannot normalize an empty pool")
    return PoolMinMaxScaler(orientation, weight).fit_transform(np.asarray(values, dtype=float)).ravel()


# --------------------------------------------------------------------------
# Configuration
# --------------------------------------------------------------------------

# term -> orientation; the weights live in RatingConfig
TERM_ORIENTATION = {
    "average": "higher",
    "strike_rate_bat": "higher",
    "boundary_rate": "higher",
    "economy": "lower",
    "strike_rate_bowl": "lower",
    "delta": "higher",
}

DEFAULT_WEIGHTS: dict[RoleCategory, dict[str, float]] = {
    RoleCategory.OPENER: {"average": 50.0, "strike_rate_bat": 50.0},
    RoleCategory.MIDDLE_ORDER: {"average": 70.0, "strike_rate_bat": 30.0},
    RoleCategory.LOWER_ORDER: {"strike_rate_bat": 60.0, "boundary_rate": 40.0},
    RoleCategory.WICKETKEEPER: {"average": 70.0, "strike_rate_bat": 30.0},
    RoleCategory.SPINNER: {"economy": 50.0, "strike_rate_bowl": 50.0},
    RoleCategory.PACER: {"economy": 50.0, "strike_rate_bowl": 50.0},
    RoleCategory.ALL_ROUNDER: {"delta": 100.0},
}

DEFAULT_BANDS: dict[RoleCategory, tuple[int, int]] = {
    RoleCategory.OPENER: (1, 2),
    RoleCategory.MIDDLE_ORDER: (3, 5),
    RoleCategory.LOWER_ORDER: (6, 7),
}


@dataclass
class RatingConfig:
    """Weights, eligibility thresholds, bonuses and batting-position bands."""

    weights: dict[RoleCategory, dict[str, float]] = field(
        default_factory=lambda: {c: dict(w) for c, w in DEFAULT_WEIGHTS.items()}
    )
    min_innings_bat: int = 3
    min_balls_bowled: int = 60
    opener_strike_rate: float = 100.0
    international_multiplier: float = 1.10
    part_time_multiplier: float = 1.10
    cap: float = SCORE_CAP
    bands: dict[RoleCategory, tuple[int, int]] = field(default_factory=lambda: dict(DEFAULT_BANDS))

    def __post_init__(self) -> None:
        if self.min_innings_bat < 0 or self.min_balls_bowled < 0 or self.opener_strike_rate < 0:
            raise ValueError("eligibility thresholds must be >= 0")
        if self.international_multiplier <= 0 or self.part_time_multiplier <= 0:
            raise ValueError("bonus multipliers must be > 0")
        for cat, terms in self.weights.items():
            for term, w in terms.items():
                if term not in TERM_ORIENTATION:
                    raise ValueError(f"unknown rating term {term!r} for {cat.value}")
                if not w > 0:
                    raise ValueError(f"weight for {cat.value}.{term} must be > 0")
        for cat, (lo, hi) in self.bands.items():
            if not 1 <= lo <= hi <= 11:
                raise ValueError(f"position band for {cat.value} must satisfy 1 <= lo <= hi <= 11")

    def band(self, category: RoleCategory) -> range:
        lo, hi = self.bands[category]
        return range(lo, hi + 1)

    def to_dict(self) -> dict[str, Any]:
        return {
            "weights": {c.value: dict(w) for c, w in self.weights.items()},
            "min_innings_bat": self.min_innings_bat,
            "min_balls_bowled": self.min_balls_bowled,
            "opener_strike_rate": self.opener_strike_rate,
            "international_multiplier": self.international_multiplier,
            "part_time_multiplier": self.part_time_multiplier,
            "cap": self.cap,
            "bands": {c.value: list(b) for c, b in self.bands.items()},
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "RatingConfig":
        cfg = cls()
        kw: dict[str, Any] = {}
        if "weights" in data:
            weights = {c: dict(w) for c, w in cfg.weights.items()}
            for key, terms in data["weights"].items():
                weights[RoleCategory.parse(key)] = {t: float(v) for t, v in terms.items()}
            kw["weights"] = weights
        if "bands" in data:
            bands = dict(cfg.bands)
            for key, (lo, hi) in data["bands"].items():
                bands[RoleCategory.parse(key)] = (int(lo), int(hi))
            kw["bands"] = bands
        for name in ("min_innings_bat", "min_balls_bowled"):
            if name in data:
                kw[name] = int(data[name])
        for name in ("opener_strike_rate", "international_multiplier", "part_time_multiplier", "cap"):
            if name in data:
                kw[name] = float(data[name])
        return replace(cfg, **kw)


# --------------------------------------------------------------------------
# Rating points
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    term: str
    raw: float
    contribution: float


@dataclass(frozen=True)
class RatingPoint:
    player_id: str
    category: RoleCategory
    score: float
    components: tuple[Component, ...] = ()
    bonus_applied: bool = False
    multiplier: float = 1.0
    cap: float = SCORE_CAP

    def recompute(self) -> float:
        return min(self.cap, sum(c.contribution for c in self.components) * self.multiplier)

    def to_dict(self) -> dict[str, Any]:
        return {
            "player_id": self.player_id,
            "category": self.category.value,
            "score": self.score,
            "components": [
                {"term": c.term, "raw": c.raw if math.isfinite(c.raw) else None, "contribution": c.contribution}
                for c in self.components
            ],
            "bonus_applied": self.bonus_applied,
            "multiplier": self.multiplier,
            "cap": self.cap,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "RatingPoint":
        return cls(
            player_id=data["player_id"],
            category=RoleCategory.parse(data["category"]),
            score=float(data["score"]),
            components=tuple(
                Component(c["term"], math.inf if c["raw"] is None else float(c["raw"]), float(c["contribution"]))
                for c in data.get("components", ())
            ),
            bonus_applied=bool(data.get("bonus_applied", False)),
            multiplier=float(data.get("multiplier", 1.0)),
            cap=float(data.get("cap", SCORE_CAP)),
        )


def ranked(points: Iterable[RatingPoint]) -> list[RatingPoint]:
    """Score descending, ties broken by player_id."""
    return sorted(points, key=lambda p: (-p.score, p.player_id))


def _raw_term(item, term: str) -> float:
    if term == "strike_rate_bat" or term == "strike_rate_bowl":
        return float(item.strike_rate)
    return float(getattr(item, term))


class RoleRater(BaseEstimator):
    """Rate one category pool; ``fit`` stores the ranked list in ``ratings_``.

    Parameters
    ----------
    category : RoleCategory or str
    config : RatingConfig, optional
        Defaults to ``RatingConfig()``.

    Attributes
    ----------
    ratings_ : list of RatingPoint
        Ranked by score descending, then player_id.
    scaler_ : PoolMinMaxScaler or None
        The fitted normalizer (None for an empty pool).
    terms_ : tuple of str
    """

    def __init__(self, category="pacer", config=None):
        self.category = category
        self.config = config

    def fit(self, pool: Sequence, bonus_ids: Iterable[str] = ()):
        """Rate ``pool``, a sequence of stats objects (one per player).

        Players in ``bonus_ids`` get the category's bonus multiplier.
        """
        category = RoleCategory.parse(self.category) if isinstance(self.category, str) else self.category
        cfg = self.config or RatingConfig()
        weights = cfg.weights[category]
        self.terms_ = tuple(weights)
        self.category_ = category
        ids = [item.player_id for item in pool]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate player in {category.value} pool")
        if not pool:
            self.scaler_ = None
            self.ratings_ = []
            return self
        X = np.array([[_raw_term(item, t) for t in self.terms_] for item in pool], dtype=float)
        self.scaler_ = PoolMinMaxScaler(
            orientation=[TERM_ORIENTATION[t] for t in self.terms_],
            weight=[weights[t] for t in self.terms_],
        )
        contrib = self.scaler_.fit_transform(X)
        multiplier = _bonus_multiplier(category, cfg)
        bonus = set(bonus_ids)
        points = []
        for i, pid in enumerate(ids):
            applied = multiplier is not None and pid in bonus
            mult = multiplier if applied else 1.0
            components = tuple(
                Component(_term_label(t), float(X[i, j]), float(contrib[i, j])) for j, t in enumerate(self.terms_)
            )
            base = sum(c.contribution for c in components)
            points.append(
                RatingPoint(pid, category, min(cfg.cap, base * mult), components, applied, mult, cfg.cap)
            )
        self.ratings_ = ranked(points)
        return self

    def scores(self) -> dict[str, float]:
        check_is_fitted(self, "ratings_")
        return {p.player_id: p.score for p in self.ratings_}


def _term_label(term: str) -> str:
    return "strike_rate" if term.startswith("strike_rate") else term


def _bonus_multiplier(category: RoleCategory, cfg: RatingConfig) -> float | None:
    if category in (RoleCategory.PACER, RoleCategory.SPINNER):
        return cfg.international_multiplier
    if category is RoleCategory.LOWER_ORDER:
        return cfg.part_time_multiplier
    return None


def rate_pacer(pool: Sequence[BowlingStats], internationals: Iterable[str] = (), config: RatingConfig | None = None):
    """Pacers: economy and bowling strike rate, with the recent-international bonus."""
    return RoleRater(RoleCategory.PACER, config).fit(pool, internationals).ratings_


def rate_spinner(pool: Sequence[BowlingStats], internationals: Iterable[str] = (), config: RatingConfig | None = None):
    return RoleRater(RoleCategory.SPINNER, config).fit(pool, internationals).ratings_


def rate_opener(pool: Sequence[BattingStats], config: RatingConfig | None = None):
    return RoleRater(RoleCategory.OPENER, config).fit(pool).ratings_


def rate_middle(pool: Sequence[BattingStats], config: RatingConfig | None = None):
    return RoleRater(RoleCategory.MIDDLE_ORDER, config).fit(pool).ratings_


def rate_lower(pool: Sequence[BattingStats], part_time_bowlers: Iterable[str] = (), config: RatingConfig | None = None):
    """Lower order: strike rate and boundaries per innings; part-time bowlers get a bonus."""
    return RoleRater(RoleCategory.LOWER_ORDER, config).fit(pool, part_time_bowlers).ratings_


def rate_allrounder(pool: Sequence[AllRounderDelta], config: RatingConfig | None = None):
    return RoleRater(RoleCategory.ALL_ROUNDER, config).fit(pool).ratings_


def rate_keeper(pool: Sequence[BattingStats], config: RatingConfig | None = None):
    """Keepers are rated on the middle-order batting terms over the keeper pool."""
    return RoleRater(RoleCategory.WICKETKEEPER, config).fit(pool).ratings_


# --------------------------------------------------------------------------
# Role classification
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RoleProfile:
    player_id: str
    roles: frozenset[RoleCategory]
    evidence: tuple[tuple[RoleCategory, str], ...] = ()

    def __contains__(self, category: object) -> bool:
        return category in self.roles


def classify_roles(
    registry: Mapping[str, PlayerRecord],
    batting: Mapping[str, BattingStats],
    bowling: Mapping[str, BowlingStats],
    config: RatingConfig | None = None,
    wildcards: Iterable[str] = (),
) -> dict[str, RoleProfile]:
    """Eligibility sets per player; a player may hold several roles.

    Wildcard players skip the innings and balls thresholds but still need
    the qualifying evidence (a position played, a bowling style, a wicket).
    """
    cfg = config or RatingConfig()
    wild = set(wildcards)
    out = {}
    for pid in sorted(registry):
        rec = registry[pid]
        bat = batting.get(pid, BattingStats(pid))
        bowl = bowling.get(pid, BowlingStats(pid))
        min_inn = 0 if pid in wild else cfg.min_innings_bat
        min_balls = 0 if pid in wild else cfg.min_balls_bowled
        bats = bat.innings >= max(min_inn, 1)
        bowls = bowl.balls >= max(min_balls, 1)
        ev: list[tuple[RoleCategory, str]] = []

        opened = bat.innings_in(cfg.band(RoleCategory.OPENER))
        middle = bat.innings_in(cfg.band(RoleCategory.MIDDLE_ORDER))
        lower = bat.innings_in(cfg.band(RoleCategory.LOWER_ORDER))
        lower_ok = bats and lower >= 1
        if bats and opened >= 1:
            ev.append((RoleCategory.OPENER, f"opened {opened} innings"))
        elif lower_ok and bat.strike_rate > cfg.opener_strike_rate:
            ev.append((RoleCategory.OPENER, f"lower order with strike rate {bat.strike_rate:.2f}"))
        if bats and middle >= 1:
            ev.append((RoleCategory.MIDDLE_ORDER, f"{middle} innings in middle band"))
        if lower_ok:
            ev.append((RoleCategory.LOWER_ORDER, f"{lower} innings in lower band"))
        if rec.is_wicketkeeper and bats:
            ev.append((RoleCategory.WICKETKEEPER, "designated keeper"))
        if bowls and rec.bowling_style is BowlingStyle.PACE:
            ev.append((RoleCategory.PACER, f"{bowl.balls} balls of pace"))
        if bowls and rec.bowling_style.is_spin:
            ev.append((RoleCategory.SPINNER, f"{bowl.balls} balls of {rec.bowling_style.value}"))
        top_order = opened + middle + lower
        if bats and bowls and bowl.wickets >= 1 and top_order >= 1:
            ev.append((RoleCategory.ALL_ROUNDER, f"batting avg {bat.average:.2f}, bowling avg {bowl.average:.2f}"))
        out[pid] = RoleProfile(pid, frozenset(c for c, _ in ev), tuple(ev))
    return out


@dataclass
class RatedPools:
    """Everything one rating run produces."""

    ratings: dict[RoleCategory, list[RatingPoint]]
    profiles: dict[str, RoleProfile]
    batting: dict[str, BattingStats]
    bowling: dict[str, BowlingStats]
    reference_date: Any = None
    warnings: list[str] = field(default_factory=list)


def rate_store(
    store: MatchStore,
    matches: Iterable[MatchScorecard] | None = None,
    config: RatingConfig | None = None,
    reference_date=None,
    wildcards: Iterable[str] = (),
) -> RatedPools:
    """Aggregate ``matches`` (default: whole store) and rate every category pool.

    The international bonus looks at the whole store, not only ``matches``,
    so a domestic-only window still sees recent internationals.
    """
    cfg = config or RatingConfig()
    matches = store.matches if matches is None else tuple(matches)
    wild = set(wildcards)
    unknown = sorted(wild - set(store.players))
    if unknown:
        raise KeyError(f"unknown wildcard player(s): {', '.join(unknown)}")
    batting, bowling = aggregate_all(store, matches)
    profiles = classify_roles(store.players, batting, bowling, cfg, wild)
    ref = store.effective_reference_date(reference_date)
    intl = recent_internationals(store, ref)
    registry = store.players

    def members(cat: RoleCategory) -> list[str]:
        return [pid for pid, prof in profiles.items() if cat in prof]

    part_timers = {
        pid for pid, rec in registry.items() if rec.bowling_style is not BowlingStyle.NONE and bowling[pid].balls > 0
    }
    allrounders = [AllRounderDelta.from_stats(batting[p], bowling[p]) for p in members(RoleCategory.ALL_ROUNDER)]
    ratings = {
        RoleCategory.OPENER: rate_opener([batting[p] for p in members(RoleCategory.OPENER)], cfg),
        RoleCategory.MIDDLE_ORDER: rate_middle([batting[p] for p in members(RoleCategory.MIDDLE_ORDER)], cfg),
        RoleCategory.LOWER_ORDER: rate_lower(
            [batting[p] for p in members(RoleCategory.LOWER_ORDER)], part_timers, cfg
        ),
        RoleCategory.WICKETKEEPER: rate_keeper([batting[p] for p in members(RoleCategory.WICKETKEEPER)], cfg),
        RoleCategory.SPINNER: rate_spinner([bowling[p] for p in members(RoleCategory.SPINNER)], intl, cfg),
        RoleCategory.PACER: rate_pacer([bowling[p] for p in members(RoleCategory.PACER)], intl, cfg),
        RoleCategory.ALL_ROUNDER: rate_allrounder([a for a in allrounders if a is not None], cfg),
    }
    plain = classify_roles(store.players, batting, bowling, cfg) if wild else profiles
    warnings = []
    for pid in sorted(wild):
        gained = profiles[pid].roles - plain[pid].roles
        if gained:
            warnings.append(
                f"wildcard {pid!r} is below the eligibility thresholds for "
                f"{', '.join(sorted(c.value for c in gained))} "
                f"({batting[pid].innings} innings, {bowling[pid].balls} balls in the window)"
            )
    return RatedPools(ratings, profiles, batting, bowling, ref, warnings)
