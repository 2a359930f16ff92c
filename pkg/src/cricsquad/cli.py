"""Command-line front end: import, stats, rate, select, compare, plotdata.

Data goes to stdout, diagnostics to stderr. A command exits 0 exactly when
it printed no ``error:`` line.
"""

from __future__ import annotations

import argparse
import csv
import datetime as dt
import json
import math
import sys
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from .aggregate import AllRounderDelta
from .datastore import MatchStore, ScorecardError, StoreFormatError
from .rating import RatingConfig, RatingPoint, RoleCategory, rate_store
from .selection import (
    Overrides,
    SelectionError,
    Squad,
    compare_squads,
    resolve_template,
    select_squad,
)

FORMATS = ("table", "csv", "json-lines")
FIGURES = ("spinners", "openers", "allrounders")


class CliError(Exception):
    """Reported as ``error: ...`` with exit status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 2 with an error: line
        self.print_usage(sys.stderr)
        self.exit(2, f"error: {message}\n")


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _info(msg: str) -> None:
    print(msg, file=sys.stderr)


def _date(text: str) -> dt.date:
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an ISO date (YYYY-MM-DD): {text!r}") from None


def _include(text: str) -> tuple[str, RoleCategory]:
    pid, sep, cat = text.partition(":")
    if not sep or not pid:
        raise argparse.ArgumentTypeError(f"expected player_id:category, got {text!r}")
    try:
        return pid, RoleCategory.parse(cat)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _category(text: str) -> RoleCategory:
    try:
        return RoleCategory.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # subcommands repeat the globals without defaults so they never clobber
    # values given before the subcommand name
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g = parser.add_argument_group("global options")
    g.add_argument("--store", default=d("store.json"), help="match store file (default: store.json)")
    g.add_argument("--config", default=d(None), help="configuration document (JSON)")
    g.add_argument("--format", choices=FORMATS, default=d(None), help="output format (default: table)")
    g.add_argument("--reference-date", type=_date, default=d(None), help="anchor for the recent-international window")
    g.add_argument("--competitions", default=d(None), help="comma-separated competition tags to include")
    g.add_argument("--from", dest="date_from", type=_date, default=d(None), help="first match date to include")
    g.add_argument("--to", dest="date_to", type=_date, default=d(None), help="last match date to include")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)

    parser = _Parser(prog="cricsquad", description=__doc__.splitlines()[0])
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("import", parents=[common], help="import scorecard documents into the store")
    p.add_argument("paths", nargs="+", help="scorecard documents (JSON object or CSV table)")

    p = sub.add_parser("stats", parents=[common], help="batting and bowling aggregates for one player")
    p.add_argument("player")

    p = sub.add_parser("rate", parents=[common], help="ranked ratings for one category")
    p.add_argument("category", type=_category)

    p = sub.add_parser("select", parents=[common], help="recommend a squad")
    p.add_argument("--template", help="preset name (default, balanced) or template JSON file")
    p.add_argument("--include", action="append", type=_include, default=[], metavar="ID:CATEGORY")
    p.add_argument("--exclude", action="append", default=[], metavar="ID")
    p.add_argument("--wildcard", action="append", default=[], metavar="ID")
    p.add_argument("--strategy", choices=("exact", "greedy"), default="exact")
    p.add_argument("--ratings", help="pre-rated pools document; skips rating the store")
    p.add_argument("--compare", metavar="FILE", help="name list to compare the squad against")

    p = sub.add_parser("compare", parents=[common], help="compare two squad name lists")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("plotdata", parents=[common], help="point series behind the figures")
    p.add_argument("figure", choices=FIGURES)
    return parser


# --------------------------------------------------------------------------
# Configuration
# --------------------------------------------------------------------------


def _read_json(path: str | Path, what: str) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {what} {str(path)!r}: {exc}") from None


class RunConfig:
    """Effective settings for one invocation: flags override the config document."""

    def __init__(self, args: argparse.Namespace):
        doc: Mapping[str, Any] = _read_json(args.config, "config") if args.config else {}
        if not isinstance(doc, Mapping):
            raise CliError("config document must be an object")
        self.store_path = args.store
        try:
            self.rating = RatingConfig.from_dict(doc.get("rating", {}))
            self.overrides = Overrides.from_dict(doc.get("overrides", {}))
        except (ValueError, KeyError, TypeError) as exc:
            raise CliError(f"invalid config: {exc}") from None
        self.aliases: dict[str, str] = dict(doc.get("aliases", {}))
        self.format = args.format or doc.get("format", "table")
        if self.format not in FORMATS:
            raise CliError(f"format must be one of {FORMATS}")
        comps = args.competitions if args.competitions is not None else doc.get("competitions")
        if isinstance(comps, str):
            comps = [c.strip() for c in comps.split(",") if c.strip()]
        self.competitions = sorted(comps) if comps is not None else None
        self.date_from = args.date_from or _opt_date(doc.get("from"))
        self.date_to = args.date_to or _opt_date(doc.get("to"))
        self.reference_date = args.reference_date or _opt_date(doc.get("reference_date"))
        self.template_choice = getattr(args, "template", None) or doc.get("template", "default")

    def template(self):
        choice = self.template_choice
        if isinstance(choice, str) and choice.endswith(".json"):
            choice = _read_json(choice, "template")
        try:
            return resolve_template(choice)
        except (ValueError, TypeError) as exc:
            raise CliError(str(exc)) from None

    def to_dict(self) -> dict[str, Any]:
        return {
            "store": self.store_path,
            "competitions": self.competitions,
            "from": self.date_from.isoformat() if self.date_from else None,
            "to": self.date_to.isoformat() if self.date_to else None,
            "reference_date": self.reference_date.isoformat() if self.reference_date else None,
            "format": self.format,
            "rating": self.rating.to_dict(),
        }


def _opt_date(value) -> dt.date | None:
    if value is None:
        return None
    try:
        return dt.date.fromisoformat(value)
    except (TypeError, ValueError):
        raise CliError(f"invalid date in config: {value!r}") from None


def _load_store(cfg: RunConfig, *, must_exist: bool = True) -> MatchStore:
    path = Path(cfg.store_path)
    if not path.exists():
        if must_exist:
            raise CliError(f"store {cfg.store_path!r} does not exist; run 'import' first")
        return MatchStore()
    try:
        return MatchStore.load(path)
    except (StoreFormatError, ScorecardError) as exc:
        raise CliError(str(exc)) from None


def _window(store: MatchStore, cfg: RunConfig):
    try:
        return store.query_matches(cfg.competitions, cfg.date_from, cfg.date_to)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _rated(store: MatchStore, cfg: RunConfig, wildcards: Iterable[str] = ()):
    matches = _window(store, cfg)
    if cfg.reference_date is None and store.reference_date is None:
        _info(f"reference date: {store.latest_date()} (latest match in store)")
    try:
        pools = rate_store(store, matches, cfg.rating, cfg.reference_date, wildcards)
    except KeyError as exc:
        raise CliError(exc.args[0]) from None
    for w in pools.warnings:
        _warn(w)
    return pools


# --------------------------------------------------------------------------
# Output
# --------------------------------------------------------------------------


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.4f}" if math.isfinite(value) else "inf"
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def emit(rows: Sequence[Mapping[str, Any]], columns: Sequence[str], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json-lines":
        for row in rows:
            out.write(json.dumps(_jsonable(row)) + "\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _cell(row.get(k)) for k in columns})
    else:
        cells = [[_cell(row.get(k)) for k in columns] for row in rows]
        widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
        out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
        for r in cells:
            out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def _jsonable(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, Mapping):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _rating_rows(points: Sequence[RatingPoint], names: Mapping[str, str]) -> tuple[list[dict], list[str]]:
    terms = [c.term for c in points[0].components] if points else []
    rows = []
    for rank, p in enumerate(points, start=1):
        row = {"rank": rank, "player_id": p.player_id, "name": names.get(p.player_id, p.player_id)}
        for c in p.components:
            row[c.term] = c.raw
            row[f"{c.term}_points"] = c.contribution
        row.update(bonus=p.bonus_applied, score=p.score)
        rows.append(row)
    cols = ["rank", "player_id", "name"] + [x for t in terms for x in (t, f"{t}_points")] + ["bonus", "score"]
    return rows, cols


# --------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------


def cmd_import(args, cfg: RunConfig) -> int:
    store = _load_store(cfg, must_exist=False)
    ok = 0
    added = 0
    for path in args.paths:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            print(f"error: {path}: cannot read: {exc}", file=sys.stderr)
            continue
        try:
            n = store.import_document(text, name=path)
        except ScorecardError as exc:
            print(f"error: {exc}", file=sys.stderr)
            continue
        ok += 1
        added += n
        print(f"{path}: {n} matches")
    store.save(cfg.store_path)
    failed = len(args.paths) - ok
    summary = f"{ok} files, {added} matches"
    print(summary if not failed else f"{summary} ({failed} of {len(args.paths)} files rejected)")
    return 1 if failed else 0


def cmd_stats(args, cfg: RunConfig) -> int:
    store = _load_store(cfg)
    if args.player not in store.players:
        raise CliError(f"unknown player {args.player!r}")
    pools = _rated(store, cfg)
    bat = pools.batting[args.player].to_dict()
    bowl = pools.bowling[args.player].to_dict()
    roles = sorted((c.value for c in pools.profiles[args.player].roles), key=lambda v: RoleCategory(v).rank)
    if cfg.format == "json-lines":
        emit([{"player_id": args.player, "batting": bat, "bowling": bowl, "roles": roles}], [], cfg.format)
        return 0
    rows = [{"section": "batting", "field": k, "value": v} for k, v in bat.items() if k != "player_id"]
    rows += [{"section": "bowling", "field": k, "value": v} for k, v in bowl.items() if k != "player_id"]
    rows.append({"section": "roles", "field": "eligible", "value": ",".join(roles)})
    emit(rows, ["section", "field", "value"], cfg.format)
    return 0


def cmd_rate(args, cfg: RunConfig) -> int:
    store = _load_store(cfg)
    pools = _rated(store, cfg)
    points = pools.ratings[args.category]
    if not points:
        _warn(f"no eligible {args.category.value} players in the window")
    if cfg.format == "json-lines":
        emit([p.to_dict() for p in points], [], cfg.format)
        return 0
    names = {pid: rec.display_name for pid, rec in store.players.items()}
    rows, cols = _rating_rows(points, names)
    emit(rows, cols, cfg.format)
    return 0


def load_ratings_document(path: str) -> tuple[dict[RoleCategory, list[tuple[str, float]]], dict[str, str]]:
    """Pre-rated pools: ``{"players": [...], "pools": {category: [{player_id, score}]}}``."""
    doc = _read_json(path, "ratings")
    try:
        names = {p["player_id"]: p.get("display_name", p["player_id"]) for p in doc.get("players", [])}
        pools = {
            RoleCategory.parse(cat): [(e["player_id"], float(e["score"])) for e in entries]
            for cat, entries in doc["pools"].items()
        }
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise CliError(f"malformed ratings document {path!r}: {exc}") from None
    return pools, names


def _read_names(path: str) -> list[str]:
    text = Path(path).read_text(encoding="utf-8") if Path(path).exists() else None
    if text is None:
        raise CliError(f"cannot read name list {path!r}")
    if text.lstrip().startswith("["):
        return [str(n) for n in json.loads(text)]
    return [line.strip() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]


def _squad_rows(squad: Squad, names: Mapping[str, str]) -> list[dict]:
    return [
        {
            "category": s.category.value,
            "player_id": s.player_id,
            "name": names.get(s.player_id, s.player_id),
            "score": s.score,
            "provenance": s.provenance,
        }
        for s in squad.slots
    ]


def cmd_select(args, cfg: RunConfig) -> int:
    overrides = cfg.overrides.merged(
        Overrides(tuple(args.include), frozenset(args.exclude), frozenset(args.wildcard))
    )
    template = cfg.template()
    if args.ratings:
        pools, names = load_ratings_document(args.ratings)
    else:
        store = _load_store(cfg)
        rated = _rated(store, cfg, overrides.wildcards)
        pools = rated.ratings
        names = {pid: rec.display_name for pid, rec in store.players.items()}
    try:
        squad = select_squad(pools, template, overrides, args.strategy)
    except SelectionError as exc:
        raise CliError(str(exc)) from None
    except ValueError as exc:
        raise CliError(str(exc)) from None
    for w in squad.warnings:
        _warn(w)
    rows = _squad_rows(squad, names)
    cols = ["category", "player_id", "name", "score", "provenance"]
    if cfg.format == "table":
        emit(rows, cols, cfg.format)
        print(f"total  {squad.total_score:.4f}  ({len(squad.slots)} players, template {template.name})")
    else:
        emit(rows, cols, cfg.format)
    if args.compare:
        other = _read_names(args.compare)
        mine = [r["name"] for r in rows]
        _print_comparison(compare_squads(mine, other, cfg.aliases), cfg.format)
    return 0


def _print_comparison(result, fmt: str) -> None:
    if fmt == "json-lines":
        emit([result.to_dict()], [], fmt)
        return
    rows = (
        [{"set": "common", "name": n} for n in sorted(result.common)]
        + [{"set": "only_a", "name": n} for n in sorted(result.only_a)]
        + [{"set": "only_b", "name": n} for n in sorted(result.only_b)]
    )
    emit(rows, ["set", "name"], fmt)
    if fmt == "table":
        print(f"mismatch_count {result.mismatch_count}  common {len(result.common)}  jaccard {result.jaccard:.4f}")


def cmd_compare(args, cfg: RunConfig) -> int:
    try:
        result = compare_squads(_read_names(args.a), _read_names(args.b), cfg.aliases)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _print_comparison(result, cfg.format)
    return 0


def cmd_plotdata(args, cfg: RunConfig) -> int:
    store = _load_store(cfg)
    pools = _rated(store, cfg)
    names = {pid: rec.display_name for pid, rec in store.players.items()}

    def members(cat):
        return sorted(pid for pid, prof in pools.profiles.items() if cat in prof)

    if args.figure == "spinners":
        cols = ["player_id", "name", "economy", "strike_rate"]
        rows = [
            {"player_id": p, "name": names[p], "economy": pools.bowling[p].economy, "strike_rate": pools.bowling[p].strike_rate}
            for p in members(RoleCategory.SPINNER)
        ]
    elif args.figure == "openers":
        cols = ["player_id", "name", "strike_rate", "average"]
        rows = [
            {"player_id": p, "name": names[p], "strike_rate": pools.batting[p].strike_rate, "average": pools.batting[p].average}
            for p in members(RoleCategory.OPENER)
        ]
    else:
        cols = ["player_id", "name", "delta"]
        rows = []
        for p in members(RoleCategory.ALL_ROUNDER):
            d = AllRounderDelta.from_stats(pools.batting[p], pools.bowling[p])
            if d is not None:
                rows.append({"player_id": p, "name": names[p], "delta": d.delta})
    if not rows:
        _warn(f"no data points for figure {args.figure!r}")
    emit(rows, cols, cfg.format)
    return 0


COMMANDS = {
    "import": cmd_import,
    "stats": cmd_stats,
    "rate": cmd_rate,
    "select": cmd_select,
    "compare": cmd_compare,
    "plotdata": cmd_plotdata,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args)
        _info("config: " + json.dumps(cfg.to_dict(), sort_keys=True))
        return COMMANDS[args.command](args, cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
