"""Seeded random generators for valid stores and selection instances."""

from __future__ import annotations

import datetime as dt

import numpy as np

from cricsquad import (
    BattingEntry,
    BowlingEntry,
    BowlingStyle,
    Innings,
    MatchScorecard,
    MatchStore,
    PlayerRecord,
    RoleCategory,
)

STYLES = list(BowlingStyle)
COMPETITIONS = ["DPL-2014", "DPL-2015", "DPL-2016", "BPL-2015", "ODI"]


def random_players(rng: np.random.Generator, n: int) -> list[PlayerRecord]:
    return [
        PlayerRecord(
            player_id=f"p{i:02d}",
            display_name=f"Player {i}",
            bowling_style=STYLES[rng.integers(len(STYLES))],
            is_wicketkeeper=bool(rng.random() < 0.2),
        )
        for i in range(n)
    ]


def random_innings(rng: np.random.Generator, players: list[PlayerRecord]) -> Innings:
    n_bat = int(rng.integers(0, min(11, len(players)) + 1))
    batters = rng.choice(len(players), size=n_bat, replace=False)
    positions = rng.choice(np.arange(1, 12), size=n_bat, replace=False)
    batting = []
    for idx, pos in zip(batters, positions):
        fours = int(rng.integers(0, 8))
        sixes = int(rng.integers(0, 4))
        runs = 4 * fours + 6 * sixes + int(rng.integers(0, 60))
        balls = int(rng.integers(0, 120)) if runs == 0 else int(rng.integers(1, 150))
        batting.append(BattingEntry(players[idx].player_id, int(pos), runs, balls, fours, sixes, bool(rng.random() < 0.7)))
    bowlers = [p for p in players if p.bowling_style is not BowlingStyle.NONE]
    n_bowl = int(rng.integers(0, min(6, len(bowlers)) + 1))
    chosen = rng.choice(len(bowlers), size=n_bowl, replace=False) if n_bowl else []
    bowling = []
    wickets_left = 10
    for idx in chosen:
        balls = int(rng.integers(0, 61))
        if balls == 0:
            bowling.append(BowlingEntry(bowlers[idx].player_id, 0, 0, 0))
            continue
        w = int(rng.integers(0, min(wickets_left, 5) + 1))
        wickets_left -= w
        bowling.append(BowlingEntry(bowlers[idx].player_id, balls, int(rng.integers(0, 80)), w))
    return Innings(tuple(batting), tuple(bowling))


def random_matches(rng: np.random.Generator, players: list[PlayerRecord], n: int, prefix: str = "m") -> list[MatchScorecard]:
    start = dt.date(2014, 1, 1)
    matches = []
    for i in range(n):
        comp = COMPETITIONS[rng.integers(len(COMPETITIONS))]
        matches.append(
            MatchScorecard(
                match_id=f"{prefix}{i:03d}",
                date=start + dt.timedelta(days=int(rng.integers(0, 3 * 365))),
                competition=comp,
                is_international=comp == "ODI",
                innings=tuple(random_innings(rng, players) for _ in range(int(rng.integers(1, 3)))),
            )
        )
    return matches


def random_store(rng: np.random.Generator, max_players: int = 12, max_matches: int = 6) -> MatchStore:
    players = random_players(rng, int(rng.integers(1, max_players + 1)))
    matches = random_matches(rng, players, int(rng.integers(0, max_matches + 1)))
    ref = dt.date(2016, 12, 31) if rng.random() < 0.5 else None
    return MatchStore(players, matches, reference_date=ref)


def random_selection_instance(rng: np.random.Generator, integer_scores: bool | None = None):
    """Pools, quotas and overrides for at most 20 candidates over at most 4 categories.

    Quotas are kept small enough that plain enumeration stays cheap; integer
    scores (chosen half the time) make exact ties common.
    """
    all_cats = list(RoleCategory)
    cats = [all_cats[i] for i in rng.choice(len(all_cats), size=int(rng.integers(1, 5)), replace=False)]
    n_players = int(rng.integers(1, 21))
    ids = [f"c{i:02d}" for i in range(n_players)]
    if integer_scores is None:
        integer_scores = bool(rng.random() < 0.5)
    pools = {c: [] for c in cats}
    for pid in ids:
        k = int(rng.integers(1, min(3, len(cats)) + 1))
        for c in rng.choice(len(cats), size=k, replace=False):
            score = float(rng.integers(0, 6)) if integer_scores else float(np.round(rng.uniform(0, 100), 3))
            pools[cats[c]].append((pid, score))
    quotas = {}
    budget = 7
    for c in cats:
        q = int(rng.integers(0, min(3, len(pools[c]), budget) + 1))
        quotas[c] = q
        budget -= q
    force, exclude = [], set()
    if rng.random() < 0.4:
        open_cats = [c for c in cats if quotas[c] > 0 and pools[c]]
        if open_cats:
            c = open_cats[rng.integers(len(open_cats))]
            pid = pools[c][rng.integers(len(pools[c]))][0]
            force.append((pid, c))
    if rng.random() < 0.4:
        pid = ids[rng.integers(len(ids))]
        if all(pid != f for f, _ in force):
            exclude.add(pid)
    return pools, quotas, force, exclude
