"""Per-player batting and bowling aggregates over a window of matches."""

from __future__ import annotations

import datetime as dt
import math
from dataclasses import asdict, dataclass, fields
from typing import Any, Iterable

from .datastore import MatchScorecard, MatchStore

# Bowling strike rate of a wicketless bowler; normalization treats any
# non-finite raw value as the worst in its pool.
WORST = math.inf

RECENT_WINDOW_DAYS = 365

OPENER_POSITIONS = range(1, 3)
MIDDLE_POSITIONS = range(3, 6)
LOWER_POSITIONS = range(6, 8)


@dataclass(frozen=True)
class BattingStats:
    player_id: str
    innings: int = 0
    runs: int = 0
    balls: int = 0
    dismissals: int = 0
    fours: int = 0
    sixes: int = 0
    # innings count per batting position 1..11
    position_counts: tuple[int, ...] = (0,) * 11

    @property
    def average(self) -> float:
        # not-out innings never blow the average up to infinity
        return self.runs / max(1, self.dismissals)

    @property
    def strike_rate(self) -> float:
        return 100.0 * self.runs / self.balls if self.balls else 0.0

    @property
    def boundary_rate(self) -> float:
        return (self.fours + self.sixes) / self.innings if self.innings else 0.0

    def innings_in(self, positions: Iterable[int]) -> int:
        return sum(self.position_counts[p - 1] for p in positions)

    @property
    def opened_count(self) -> int:
        return self.innings_in(OPENER_POSITIONS)

    @property
    def middle_count(self) -> int:
        return self.innings_in(MIDDLE_POSITIONS)

    @property
    def lower_count(self) -> int:
        return self.innings_in(LOWER_POSITIONS)

    def __add__(self, other: "BattingStats") -> "BattingStats":
        return _sum_counts(self, other)

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["position_counts"] = list(self.position_counts)
        d.update(
            opened_count=self.opened_count,
            average=self.average,
            strike_rate=self.strike_rate,
            boundary_rate=self.boundary_rate,
        )
        return d


@dataclass(frozen=True)
class BowlingStats:
    player_id: str
    balls: int = 0
    runs_conceded: int = 0
    wickets: int = 0

    @property
    def economy(self) -> float:
        return 6.0 * self.runs_conceded / self.balls if self.balls else 0.0

    @property
    def strike_rate(self) -> float:
        return self.balls / self.wickets if self.wickets else WORST

    @property
    def average(self) -> float | None:
        """Runs conceded per wicket; undefined (None) without a wicket."""
        return self.runs_conceded / self.wickets if self.wickets else None

    def __add__(self, other: "BowlingStats") -> "BowlingStats":
        return _sum_counts(self, other)

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        sr = self.strike_rate
        d.update(economy=self.economy, strike_rate=sr if math.isfinite(sr) else None, average=self.average)
        return d


@dataclass(frozen=True)
class AllRounderDelta:
    player_id: str
    batting_average: float
    bowling_average: float

    @property
    def delta(self) -> float:
        return self.batting_average - self.bowling_average

    @classmethod
    def from_stats(cls, batting: BattingStats, bowling: BowlingStats) -> "AllRounderDelta | None":
        if bowling.average is None:
            return None
        return cls(batting.player_id, batting.average, bowling.average)


def _sum_counts(a, b):
    if type(a) is not type(b) or a.player_id != b.player_id:
        raise ValueError("can only add aggregates of the same kind and player")
    counts = {}
    for f in fields(a):
        x, y = getattr(a, f.name), getattr(b, f.name)
        if f.name == "player_id":
            continue
        counts[f.name] = tuple(i + j for i, j in zip(x, y)) if isinstance(x, tuple) else x + y
    return type(a)(player_id=a.player_id, **counts)


def _require(store: MatchStore | None, player_id: str) -> None:
    if store is not None and player_id not in store.players:
        raise KeyError(f"unknown player {player_id!r}")


def batting_aggregate(
    player_id: str, matches: Iterable[MatchScorecard], store: MatchStore | None = None
) -> BattingStats:
    """Sum a player's batting entries over ``matches``.

    When ``store`` is given, the player must be registered in it.
    """
    _require(store, player_id)
    counts = dict.fromkeys(("innings", "runs", "balls", "dismissals", "fours", "sixes"), 0)
    positions = [0] * 11
    for match in matches:
        for inn in match.innings:
            for e in inn.batting:
                if e.player_id != player_id:
                    continue
                counts["innings"] += 1
                counts["runs"] += e.runs
                counts["balls"] += e.balls_faced
                counts["dismissals"] += int(e.dismissed)
                counts["fours"] += e.fours
                counts["sixes"] += e.sixes
                positions[e.batting_position - 1] += 1
    return BattingStats(player_id, **counts, position_counts=tuple(positions))


def bowling_aggregate(
    player_id: str, matches: Iterable[MatchScorecard], store: MatchStore | None = None
) -> BowlingStats:
    _require(store, player_id)
    balls = runs = wickets = 0
    for match in matches:
        for inn in match.innings:
            for e in inn.bowling:
                if e.player_id == player_id:
                    balls += e.balls_bowled
                    runs += e.runs_conceded
                    wickets += e.wickets
    return BowlingStats(player_id, balls, runs, wickets)


def aggregate_all(
    store: MatchStore, matches: Iterable[MatchScorecard]
) -> tuple[dict[str, BattingStats], dict[str, BowlingStats]]:
    """Batting and bowling aggregates for every registered player in one pass."""
    matches = tuple(matches)
    ids = sorted(store.players)
    bat = {pid: BattingStats(pid) for pid in ids}
    bowl = {pid: BowlingStats(pid) for pid in ids}
    for pid in set().union(*(m.player_ids() for m in matches)):
        bat[pid] = batting_aggregate(pid, matches)
        bowl[pid] = bowling_aggregate(pid, matches)
    return bat, bowl


def played_international_recent(
    store: MatchStore, player_id: str, reference_date: dt.date | None = None
) -> bool:
    """True iff the player appeared in an international within the year up to ``reference_date``.

    The window is inclusive at both ends. Without an explicit date the
    store's effective reference date is used.
    """
    _require(store, player_id)
    ref = store.effective_reference_date(reference_date)
    if ref is None:
        return False
    start = ref - dt.timedelta(days=RECENT_WINDOW_DAYS)
    for m in store.query_matches(date_from=start, date_to=ref, international=True):
        if player_id in m.player_ids():
            return True
    return False


def recent_internationals(store: MatchStore, reference_date: dt.date | None = None) -> set[str]:
    ref = store.effective_reference_date(reference_date)
    if ref is None:
        return set()
    start = ref - dt.timedelta(days=RECENT_WINDOW_DAYS)
    ids: set[str] = set()
    for m in store.query_matches(date_from=start, date_to=ref, international=True):
        ids |= m.player_ids()
    return ids
