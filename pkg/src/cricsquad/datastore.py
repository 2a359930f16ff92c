"""Scorecard data model, document parsing and store persistence.

Two equivalent document encodings are accepted:

* an object (JSON) document with top-level ``players`` and ``matches`` keys,
  each match carrying ``innings: [{"batting": [...], "bowling": [...]}]``;
* a flat delimited (CSV) table with a ``record_type`` column whose value is
  one of ``player``, ``match``, ``batting`` or ``bowling``.

Every document is imported atomically: any violation rejects the whole
document and leaves the store untouched.
"""

from __future__ import annotations

import csv
import datetime as dt
import io
import json
import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, Iterator, Mapping, Sequence

FORMAT_VERSION = 1
MAX_BATTERS = 11
MAX_WICKETS = 10
MAX_INNINGS = 2


class ScorecardError(ValueError):
    """A document failed to parse or validate.

    ``location`` pinpoints the offending record: ``line N`` for delimited
    documents, a JSON path such as ``matches[0].innings[1].batting[3]`` for
    object documents.
    """

    def __init__(self, message: str, location: str | None = None, source: str | None = None):
        self.message = message
        self.location = location
        self.source = source
        super().__init__(str(self))

    def __str__(self) -> str:
        where = ":".join(p for p in (self.source, self.location) if p)
        return f"{where}: {self.message}" if where else self.message


class StoreFormatError(ValueError):
    """Persisted store is unreadable or carries an unsupported version."""


class BowlingStyle(str, Enum):
    PACE = "pace"
    OFF_BREAK = "off-break"
    LEG_BREAK = "leg-break"
    SLOW_LEFT_ARM = "slow-left-arm"
    NONE = "none"

    @property
    def is_spin(self) -> bool:
        return self in (BowlingStyle.OFF_BREAK, BowlingStyle.LEG_BREAK, BowlingStyle.SLOW_LEFT_ARM)


@dataclass(frozen=True)
class PlayerRecord:
    player_id: str
    display_name: str
    bowling_style: BowlingStyle = BowlingStyle.NONE
    is_wicketkeeper: bool = False


@dataclass(frozen=True)
class BattingEntry:
    player_id: str
    batting_position: int
    runs: int
    balls_faced: int
    fours: int = 0
    sixes: int = 0
    dismissed: bool = True


@dataclass(frozen=True)
class BowlingEntry:
    player_id: str
    balls_bowled: int
    runs_conceded: int
    wickets: int = 0


@dataclass(frozen=True)
class Innings:
    batting: tuple[BattingEntry, ...] = ()
    bowling: tuple[BowlingEntry, ...] = ()

    def player_ids(self) -> set[str]:
        return {e.player_id for e in self.batting} | {e.player_id for e in self.bowling}


@dataclass(frozen=True)
class MatchScorecard:
    match_id: str
    date: dt.date
    competition: str
    is_international: bool = False
    innings: tuple[Innings, ...] = ()

    def player_ids(self) -> set[str]:
        ids: set[str] = set()
        for inn in self.innings:
            ids |= inn.player_ids()
        return ids


# --------------------------------------------------------------------------
# Field coercion
# --------------------------------------------------------------------------

_TRUE = {"true", "1", "yes", "y", "t"}
_FALSE = {"false", "0", "no", "n", "f", ""}


def _as_int(value: Any, name: str, loc: str) -> int:
    if isinstance(value, bool):
        raise ScorecardError(f"field '{name}' must be an integer, got {value!r}", loc)
    if isinstance(value, int):
        return value
    if isinstance(value, str) and value.strip().lstrip("-").isdigit():
        return int(value.strip())
    raise ScorecardError(f"field '{name}' must be an integer, got {value!r}", loc)


def _as_count(value: Any, name: str, loc: str) -> int:
    n = _as_int(value, name, loc)
    if n < 0:
        raise ScorecardError(f"field '{name}' must be >= 0, got {n}", loc)
    return n


def _as_bool(value: Any, name: str, loc: str) -> bool:
    if isinstance(value, bool):
        return value
    if isinstance(value, str) and value.strip().lower() in _TRUE | _FALSE:
        return value.strip().lower() in _TRUE
    raise ScorecardError(f"field '{name}' must be a boolean, got {value!r}", loc)


def _as_str(value: Any, name: str, loc: str, *, required: bool = True) -> str:
    if value is None or (isinstance(value, str) and not value.strip()):
        if required:
            raise ScorecardError(f"missing field '{name}'", loc)
        return ""
    if not isinstance(value, str):
        raise ScorecardError(f"field '{name}' must be a string, got {value!r}", loc)
    return value.strip()


def _as_date(value: Any, name: str, loc: str) -> dt.date:
    text = _as_str(value, name, loc)
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        raise ScorecardError(f"field '{name}' is not an ISO date (YYYY-MM-DD): {text!r}", loc) from None


def _as_style(value: Any, loc: str) -> BowlingStyle:
    text = _as_str(value, "bowling_style", loc, required=False) or "none"
    try:
        return BowlingStyle(text)
    except ValueError:
        allowed = ", ".join(s.value for s in BowlingStyle)
        raise ScorecardError(f"field 'bowling_style' must be one of {{{allowed}}}, got {text!r}", loc) from None


def _get(record: Mapping[str, Any], name: str, loc: str, default: Any = ...) -> Any:
    value = record.get(name)
    if value is None or value == "":
        if default is ...:
            raise ScorecardError(f"missing field '{name}'", loc)
        return default
    return value


def _player(record: Mapping[str, Any], loc: str) -> PlayerRecord:
    pid = _as_str(record.get("player_id"), "player_id", loc)
    return PlayerRecord(
        player_id=pid,
        display_name=_as_str(record.get("display_name"), "display_name", loc, required=False) or pid,
        bowling_style=_as_style(record.get("bowling_style"), loc),
        is_wicketkeeper=_as_bool(_get(record, "is_wicketkeeper", loc, False), "is_wicketkeeper", loc),
    )


def _batting(record: Mapping[str, Any], loc: str) -> BattingEntry:
    entry = BattingEntry(
        player_id=_as_str(record.get("player_id"), "player_id", loc),
        batting_position=_as_int(_get(record, "batting_position", loc), "batting_position", loc),
        runs=_as_count(_get(record, "runs", loc), "runs", loc),
        balls_faced=_as_count(_get(record, "balls_faced", loc), "balls_faced", loc),
        fours=_as_count(_get(record, "fours", loc, 0), "fours", loc),
        sixes=_as_count(_get(record, "sixes", loc, 0), "sixes", loc),
        dismissed=_as_bool(_get(record, "dismissed", loc), "dismissed", loc),
    )
    if not 1 <= entry.batting_position <= MAX_BATTERS:
        raise ScorecardError(f"batting_position must be in 1..{MAX_BATTERS}, got {entry.batting_position}", loc)
    if 4 * entry.fours + 6 * entry.sixes > entry.runs:
        raise ScorecardError(
            f"boundary runs exceed total ({entry.fours} fours, {entry.sixes} sixes, {entry.runs} runs)", loc
        )
    return entry


def _bowling(record: Mapping[str, Any], loc: str) -> BowlingEntry:
    entry = BowlingEntry(
        player_id=_as_str(record.get("player_id"), "player_id", loc),
        balls_bowled=_as_count(_get(record, "balls_bowled", loc), "balls_bowled", loc),
        runs_conceded=_as_count(_get(record, "runs_conceded", loc), "runs_conceded", loc),
        wickets=_as_count(_get(record, "wickets", loc, 0), "wickets", loc),
    )
    if entry.wickets > MAX_WICKETS:
        raise ScorecardError(f"wickets must be <= {MAX_WICKETS}, got {entry.wickets}", loc)
    if entry.balls_bowled == 0 and (entry.wickets > 0 or entry.runs_conceded > 0):
        raise ScorecardError("bowling entry with 0 balls cannot take wickets or concede runs", loc)
    return entry


# --------------------------------------------------------------------------
# Document readers
# --------------------------------------------------------------------------


@dataclass
class ParsedDocument:
    """Raw content of one document before cross-record validation."""

    players: list[tuple[PlayerRecord, str]] = field(default_factory=list)
    matches: list[tuple[MatchScorecard, str, list[list[str]]]] = field(default_factory=list)


def _parse_object(text: str) -> ParsedDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScorecardError(f"malformed document: {exc.msg}", f"line {exc.lineno} col {exc.colno}") from None
    if not isinstance(data, dict):
        raise ScorecardError("document must be an object with 'players' and 'matches'", "$")
    doc = ParsedDocument()
    players = data.get("players", [])
    matches = data.get("matches", [])
    if not isinstance(players, list) or not isinstance(matches, list):
        raise ScorecardError("'players' and 'matches' must be lists", "$")
    for i, rec in enumerate(players):
        loc = f"players[{i}]"
        if not isinstance(rec, dict):
            raise ScorecardError("player record must be an object", loc)
        doc.players.append((_player(rec, loc), loc))
    for i, rec in enumerate(matches):
        loc = f"matches[{i}]"
        if not isinstance(rec, dict):
            raise ScorecardError("match record must be an object", loc)
        raw_innings = rec.get("innings", [])
        if not isinstance(raw_innings, list):
            raise ScorecardError("'innings' must be a list", loc)
        innings = []
        entry_locs: list[list[str]] = []
        for j, inn in enumerate(raw_innings):
            iloc = f"{loc}.innings[{j}]"
            if not isinstance(inn, dict):
                raise ScorecardError("innings must be an object", iloc)
            bat_recs = inn.get("batting", [])
            bowl_recs = inn.get("bowling", [])
            if not isinstance(bat_recs, list) or not isinstance(bowl_recs, list):
                raise ScorecardError("'batting' and 'bowling' must be lists", iloc)
            for k, r in enumerate(bat_recs + bowl_recs):
                if not isinstance(r, dict):
                    raise ScorecardError("entry must be an object", f"{iloc}.entry[{k}]")
            bat = tuple(_batting(r, f"{iloc}.batting[{k}]") for k, r in enumerate(bat_recs))
            bowl = tuple(_bowling(r, f"{iloc}.bowling[{k}]") for k, r in enumerate(bowl_recs))
            innings.append(Innings(bat, bowl))
            entry_locs.append(
                [f"{iloc}.batting[{k}]" for k in range(len(bat))] + [f"{iloc}.bowling[{k}]" for k in range(len(bowl))]
            )
        match = MatchScorecard(
            match_id=_as_str(rec.get("match_id"), "match_id", loc),
            date=_as_date(rec.get("date"), "date", loc),
            competition=_as_str(rec.get("competition"), "competition", loc),
            is_international=_as_bool(_get(rec, "is_international", loc, False), "is_international", loc),
            innings=tuple(innings),
        )
        doc.matches.append((match, loc, entry_locs))
    return doc


def _parse_table(text: str) -> ParsedDocument:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or "record_type" not in reader.fieldnames:
        raise ScorecardError("delimited document needs a 'record_type' column", "line 1")
    doc = ParsedDocument()
    match_rows: dict[str, tuple[dict[str, Any], str]] = {}
    entries: dict[str, list[tuple[int, str, Any]]] = {}
    order: list[str] = []
    for row in reader:
        loc = f"line {reader.line_num}"
        if None in row:
            raise ScorecardError("row has more fields than the header", loc)
        kind = (row.get("record_type") or "").strip()
        if kind == "player":
            doc.players.append((_player(row, loc), loc))
        elif kind == "match":
            mid = _as_str(row.get("match_id"), "match_id", loc)
            if mid in match_rows:
                raise ScorecardError(f"duplicate match_id {mid!r}", loc)
            match_rows[mid] = (row, loc)
            order.append(mid)
        elif kind in ("batting", "bowling"):
            mid = _as_str(row.get("match_id"), "match_id", loc)
            idx = _as_int(_get(row, "innings", loc), "innings", loc)
            if not 1 <= idx <= MAX_INNINGS:
                raise ScorecardError(f"innings must be in 1..{MAX_INNINGS}, got {idx}", loc)
            entry = _batting(row, loc) if kind == "batting" else _bowling(row, loc)
            entries.setdefault(mid, []).append((idx, loc, entry))
        else:
            raise ScorecardError(f"unknown record_type {kind!r}", loc)
    for mid, rows in entries.items():
        if mid not in match_rows:
            raise ScorecardError(f"entry references undeclared match {mid!r}", rows[0][1])
    for mid in order:
        row, loc = match_rows[mid]
        rows = entries.get(mid, [])
        n_innings = max([idx for idx, _, _ in rows], default=0)
        bat: list[list[BattingEntry]] = [[] for _ in range(n_innings)]
        bowl: list[list[BowlingEntry]] = [[] for _ in range(n_innings)]
        bat_locs: list[list[str]] = [[] for _ in range(n_innings)]
        bowl_locs: list[list[str]] = [[] for _ in range(n_innings)]
        for idx, eloc, entry in rows:
            if isinstance(entry, BattingEntry):
                bat[idx - 1].append(entry)
                bat_locs[idx - 1].append(eloc)
            else:
                bowl[idx - 1].append(entry)
                bowl_locs[idx - 1].append(eloc)
        match = MatchScorecard(
            match_id=mid,
            date=_as_date(row.get("date"), "date", loc),
            competition=_as_str(row.get("competition"), "competition", loc),
            is_international=_as_bool(_get(row, "is_international", loc, False), "is_international", loc),
            innings=tuple(Innings(tuple(b), tuple(w)) for b, w in zip(bat, bowl)),
        )
        doc.matches.append((match, loc, [bl + wl for bl, wl in zip(bat_locs, bowl_locs)]))
    return doc


def parse_document(text: str) -> ParsedDocument:
    """Dispatch on the encoding: object documents start with ``{``."""
    if text.lstrip().startswith("{"):
        return _parse_object(text)
    return _parse_table(text)


# --------------------------------------------------------------------------
# Store
# --------------------------------------------------------------------------


class MatchStore:
    """In-memory match store with a player registry.

    Entries are frozen once imported; the only mutation is the atomic
    :meth:`import_document`, which either adds a whole document or nothing.
    """

    def __init__(
        self,
        players: Iterable[PlayerRecord] = (),
        matches: Iterable[MatchScorecard] = (),
        reference_date: dt.date | None = None,
    ):
        self._players: dict[str, PlayerRecord] = {}
        self._matches: dict[str, MatchScorecard] = {}
        self.reference_date = reference_date
        doc = ParsedDocument(
            players=[(p, f"players[{i}]") for i, p in enumerate(players)],
            matches=[(m, f"matches[{i}]", _default_locs(m, f"matches[{i}]")) for i, m in enumerate(matches)],
        )
        self._commit(doc)

    # -- read access -------------------------------------------------------

    @property
    def players(self) -> Mapping[str, PlayerRecord]:
        return dict(self._players)

    @property
    def matches(self) -> tuple[MatchScorecard, ...]:
        return tuple(sorted(self._matches.values(), key=lambda m: (m.date, m.match_id)))

    def player(self, player_id: str) -> PlayerRecord:
        try:
            return self._players[player_id]
        except KeyError:
            raise KeyError(f"unknown player {player_id!r}") from None

    def __len__(self) -> int:
        return len(self._matches)

    def __contains__(self, match_id: object) -> bool:
        return match_id in self._matches

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatchStore):
            return NotImplemented
        return (
            self._players == other._players
            and self.matches == other.matches
            and self.reference_date == other.reference_date
        )

    def __repr__(self) -> str:
        return f"MatchStore({len(self._players)} players, {len(self._matches)} matches)"

    def latest_date(self) -> dt.date | None:
        return max((m.date for m in self._matches.values()), default=None)

    def effective_reference_date(self, override: dt.date | None = None) -> dt.date | None:
        """Explicit override, else the configured store date, else the latest match date."""
        return override or self.reference_date or self.latest_date()

    # -- import ------------------------------------------------------------

    def import_document(self, source: str | io.TextIOBase, name: str | None = None) -> int:
        """Parse and add one scorecard document; returns the number of matches added."""
        text = source if isinstance(source, str) else source.read()
        try:
            doc = parse_document(text)
            return self._commit(doc)
        except ScorecardError as exc:
            exc.source = name
            raise

    def _commit(self, doc: ParsedDocument) -> int:
        players = dict(self._players)
        for rec, loc in doc.players:
            known = players.get(rec.player_id)
            if known is not None and known != rec:
                raise ScorecardError(f"player {rec.player_id!r} conflicts with the registered record", loc)
            players[rec.player_id] = rec
        seen: set[str] = set()
        for match, loc, entry_locs in doc.matches:
            if match.match_id in self._matches or match.match_id in seen:
                raise ScorecardError(f"duplicate match_id {match.match_id!r}", loc)
            seen.add(match.match_id)
            _validate_match(match, players, loc, entry_locs)
        self._players = players
        for match, _, _ in doc.matches:
            self._matches[match.match_id] = match
        return len(doc.matches)

    # -- queries -----------------------------------------------------------

    def query_matches(
        self,
        competitions: Iterable[str] | None = None,
        date_from: dt.date | None = None,
        date_to: dt.date | None = None,
        international: bool | None = None,
    ) -> tuple[MatchScorecard, ...]:
        """Matches satisfying every given clause, ordered by (date, match_id)."""
        if date_from and date_to and date_from > date_to:
            raise ValueError(f"inverted date range: {date_from} > {date_to}")
        comps = set(competitions) if competitions is not None else None
        out = []
        for m in self.matches:
            if comps is not None and m.competition not in comps:
                continue
            if date_from and m.date < date_from:
                continue
            if date_to and m.date > date_to:
                continue
            if international is not None and m.is_international != international:
                continue
            out.append(m)
        return tuple(out)

    # -- persistence -------------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        return {
            "format_version": FORMAT_VERSION,
            "reference_date": self.reference_date.isoformat() if self.reference_date else None,
            "players": [player_to_dict(p) for p in sorted(self._players.values(), key=lambda p: p.player_id)],
            "matches": [match_to_dict(m) for m in self.matches],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "MatchStore":
        version = data.get("format_version")
        if version != FORMAT_VERSION:
            raise StoreFormatError(f"unsupported store format_version {version!r} (expected {FORMAT_VERSION})")
        ref = data.get("reference_date")
        store = cls(reference_date=dt.date.fromisoformat(ref) if ref else None)
        store.import_document(json.dumps({"players": data.get("players", []), "matches": data.get("matches", [])}))
        return store

    def save(self, path: str | os.PathLike) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh, indent=1)
            fh.write("\n")

    @classmethod
    def load(cls, path: str | os.PathLike) -> "MatchStore":
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise StoreFormatError(f"cannot read store {os.fspath(path)!r}: {exc}") from exc
        if not isinstance(data, dict):
            raise StoreFormatError("store file must hold an object")
        return cls.from_dict(data)


def _default_locs(match: MatchScorecard, loc: str) -> list[list[str]]:
    return [
        [f"{loc}.innings[{j}].batting[{k}]" for k in range(len(inn.batting))]
        + [f"{loc}.innings[{j}].bowling[{k}]" for k in range(len(inn.bowling))]
        for j, inn in enumerate(match.innings)
    ]


def _validate_match(
    match: MatchScorecard, players: Mapping[str, PlayerRecord], loc: str, entry_locs: Sequence[Sequence[str]]
) -> None:
    if not match.match_id:
        raise ScorecardError("match_id must be non-empty", loc)
    if len(match.innings) > MAX_INNINGS:
        raise ScorecardError(f"a match has at most {MAX_INNINGS} innings, got {len(match.innings)}", loc)
    for j, inn in enumerate(match.innings):
        locs = entry_locs[j]
        if len(inn.batting) > MAX_BATTERS:
            raise ScorecardError(f"innings {j + 1} has {len(inn.batting)} batting entries (max {MAX_BATTERS})", loc)
        positions: set[int] = set()
        batters: set[str] = set()
        for entry, eloc in zip(inn.batting, locs):
            if entry.player_id not in players:
                raise ScorecardError(f"unknown player {entry.player_id!r}", eloc)
            if entry.batting_position in positions:
                raise ScorecardError(f"duplicate batting_position {entry.batting_position} in innings", eloc)
            if entry.player_id in batters:
                raise ScorecardError(f"player {entry.player_id!r} bats twice in one innings", eloc)
            positions.add(entry.batting_position)
            batters.add(entry.player_id)
        bowlers: set[str] = set()
        wickets = 0
        for entry, eloc in zip(inn.bowling, locs[len(inn.batting) :]):
            player = players.get(entry.player_id)
            if player is None:
                raise ScorecardError(f"unknown player {entry.player_id!r}", eloc)
            if player.bowling_style is BowlingStyle.NONE:
                raise ScorecardError(f"player {entry.player_id!r} has bowling_style 'none' but bowls", eloc)
            if entry.player_id in bowlers:
                raise ScorecardError(f"player {entry.player_id!r} bowls twice in one innings", eloc)
            bowlers.add(entry.player_id)
            wickets += entry.wickets
        if wickets > MAX_WICKETS:
            raise ScorecardError(f"innings {j + 1} credits {wickets} wickets to bowlers (max {MAX_WICKETS})", loc)


# --------------------------------------------------------------------------
# Object encoding
# --------------------------------------------------------------------------


def player_to_dict(p: PlayerRecord) -> dict[str, Any]:
    return {
        "player_id": p.player_id,
        "display_name": p.display_name,
        "bowling_style": p.bowling_style.value,
        "is_wicketkeeper": p.is_wicketkeeper,
    }


def match_to_dict(m: MatchScorecard) -> dict[str, Any]:
    return {
        "match_id": m.match_id,
        "date": m.date.isoformat(),
        "competition": m.competition,
        "is_international": m.is_international,
        "innings": [
            {
                "batting": [
                    {
                        "player_id": b.player_id,
                        "batting_position": b.batting_position,
                        "runs": b.runs,
                        "balls_faced": b.balls_faced,
                        "fours": b.fours,
                        "sixes": b.sixes,
                        "dismissed": b.dismissed,
                    }
                    for b in inn.batting
                ],
                "bowling": [
                    {
                        "player_id": w.player_id,
                        "balls_bowled": w.balls_bowled,
                        "runs_conceded": w.runs_conceded,
                        "wickets": w.wickets,
                    }
                    for w in inn.bowling
                ],
            }
            for inn in m.innings
        ],
    }


TABLE_COLUMNS = (
    "record_type",
    "player_id",
    "display_name",
    "bowling_style",
    "is_wicketkeeper",
    "match_id",
    "date",
    "competition",
    "is_international",
    "innings",
    "batting_position",
    "runs",
    "balls_faced",
    "fours",
    "sixes",
    "dismissed",
    "balls_bowled",
    "runs_conceded",
    "wickets",
)


def iter_table_rows(players: Iterable[PlayerRecord], matches: Iterable[MatchScorecard]) -> Iterator[dict[str, Any]]:
    """Rows of the flat delimited encoding for the given records."""
    for p in players:
        yield {"record_type": "player", **player_to_dict(p)}
    for m in matches:
        yield {
            "record_type": "match",
            "match_id": m.match_id,
            "date": m.date.isoformat(),
            "competition": m.competition,
            "is_international": m.is_international,
        }
        for j, inn in enumerate(m.innings, start=1):
            for b in inn.batting:
                yield {
                    "record_type": "batting",
                    "match_id": m.match_id,
                    "innings": j,
                    "player_id": b.player_id,
                    "batting_position": b.batting_position,
                    "runs": b.runs,
                    "balls_faced": b.balls_faced,
                    "fours": b.fours,
                    "sixes": b.sixes,
                    "dismissed": b.dismissed,
                }
            for w in inn.bowling:
                yield {
                    "record_type": "bowling",
                    "match_id": m.match_id,
                    "innings": j,
                    "player_id": w.player_id,
                    "balls_bowled": w.balls_bowled,
                    "runs_conceded": w.runs_conceded,
                    "wickets": w.wickets,
                }


def to_table(players: Iterable[PlayerRecord], matches: Iterable[MatchScorecard]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(iter_table_rows(players, matches))
    return buf.getvalue()


def to_document(players: Iterable[PlayerRecord], matches: Iterable[MatchScorecard]) -> str:
    return json.dumps(
        {"players": [player_to_dict(p) for p in players], "matches": [match_to_dict(m) for m in matches]}, indent=1
    )
