"""Classify every rule under one evolution protocol and reconcile the
result with the published rule tables.

Default protocol: single seed at (40, 40) on an 80x80 null-boundary grid,
15 iterations.
"""

from __future__ import annotations

import csv
import io
import json
import re
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from xorca.connectivity import Connectivity, classify_connectivity
from xorca.evolve import evolve
from xorca.grid import check_dimensions, new_grid, place_seed, snapshot
from xorca.rules import ALL_RULES, check_rule, group_of
from xorca.shape import ShapeClass, classify_shape, convex_hull

CSV_FIELDS = ("rule", "group", "shape", "connectivity", "cell_count", "touched_boundary")


class ConfigError(ValueError):
    pass


class TableParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<table>"):
        self.line = line
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


@dataclass(frozen=True)
class CensusConfig:
    rows: int = 80
    cols: int = 80
    seed: tuple[int, int] = (40, 40)
    iterations: int = 15
    rules: tuple[int, ...] = ALL_RULES

    def validate(self) -> CensusConfig:
        try:
            check_dimensions(self.rows, self.cols)
            for r in self.rules:
                check_rule(r)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        r, c = self.seed
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise ConfigError(f"seed {self.seed} outside {self.rows}x{self.cols} grid")
        if self.iterations < 0:
            raise ConfigError("iterations must be non-negative")
        if not self.rules:
            raise ConfigError("empty rule set")
        return self


@dataclass(frozen=True)
class CensusRecord:
    rule: int
    group: int
    shape: ShapeClass
    connectivity: Connectivity
    cell_count: int
    touched_boundary: bool
    # seed-relative occupied cells; not part of the CSV row
    pattern: frozenset = field(default=frozenset(), compare=False, repr=False)

    def csv_row(self) -> list[str]:
        return [
            str(self.rule),
            str(self.group),
            self.shape.name,
            self.connectivity.value,
            str(self.cell_count),
            "true" if self.touched_boundary else "false",
        ]


def classify_rule(rule: int, config: CensusConfig = CensusConfig()) -> CensusRecord:
    start = place_seed(new_grid(config.rows, config.cols), *config.seed)
    grid, touched = evolve(start, rule, config.iterations)
    snap = snapshot(grid, config.iterations, rule, touched)
    hull = convex_hull(snap.coords) if snap.coords else None
    return CensusRecord(
        rule=rule,
        group=group_of(rule),
        shape=classify_shape(snap, hull),
        connectivity=classify_connectivity(snap, hull),
        cell_count=len(snap.coords),
        touched_boundary=touched,
        pattern=snap.relative_to(config.seed),
    )


def _classify_many(config: CensusConfig, rules: list[int]) -> list[CensusRecord]:
    return [classify_rule(r, config) for r in rules]


def run_census(config: CensusConfig = CensusConfig(), workers: int = 1) -> list[CensusRecord]:
    """One record per rule, ordered by rule number whatever ``workers`` is."""
    config.validate()
    rules = sorted(set(config.rules))
    if workers <= 1 or len(rules) < 2:
        records = _classify_many(config, rules)
    else:
        chunks = [rules[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_classify_many, [config] * len(chunks), chunks)
            records = [rec for part in parts for rec in part]
    return sorted(records, key=lambda rec: rec.rule)


def to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for rec in records:
        writer.writerow(rec.csv_row())
    return buf.getvalue()


def read_csv(text: str) -> list[CensusRecord]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_FIELDS:
        raise ValueError(f"census CSV header must be {','.join(CSV_FIELDS)}")
    return [
        CensusRecord(
            rule=int(row["rule"]),
            group=int(row["group"]),
            shape=ShapeClass.from_name(row["shape"]),
            connectivity=Connectivity(row["connectivity"]),
            cell_count=int(row["cell_count"]),
            touched_boundary=row["touched_boundary"] == "true",
        )
        for row in reader
    ]


# -- published tables ------------------------------------------------------

_LABEL = re.compile(r"^(?:group(?P<group>\d+)|row(?P<row>\d+))(?:/(?P<cls>[a-z0-9-]+))?$")


@dataclass(frozen=True)
class TableEntry:
    label: str
    rule: int
    line: int
    group: int | None = None
    claim: str | None = None


@dataclass
class PaperTable:
    """Rule lists as printed. ``kind`` is ``"shape"`` for row labels and
    ``"connectivity"`` for group labels."""

    name: str
    kind: str
    entries: list[TableEntry]

    def labels(self) -> list[str]:
        return list(dict.fromkeys(e.label for e in self.entries))


def parse_table(text: str, name: str = "table") -> PaperTable:
    entries: list[TableEntry] = []
    kinds = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        label, sep, body = line.partition(":")
        label = label.strip()
        m = _LABEL.match(label)
        if not sep or not m:
            raise TableParseError(f"expected '<groupN|rowN>[/class]: rules', got {raw!r}", lineno, name)
        cls = m.group("cls")
        if m.group("group") is not None:
            kinds.add("connectivity")
            if cls not in ("discrete", "continuous"):
                raise TableParseError(f"group label needs /discrete or /continuous: {label!r}", lineno, name)
            group = int(m.group("group"))
        else:
            kinds.add("shape")
            group = None
            if cls is not None:
                try:
                    ShapeClass.from_name(cls)
                except ValueError:
                    raise TableParseError(f"unknown shape {cls!r}", lineno, name) from None
        for tok in body.split(","):
            tok = tok.strip().rstrip(".")
            if not tok:
                continue
            if not tok.isdigit() or int(tok) > 511:
                raise TableParseError(f"bad rule number {tok!r}", lineno, name)
            entries.append(TableEntry(label, int(tok), lineno, group, cls))
    if len(kinds) != 1:
        raise TableParseError("table must use only group labels or only row labels", None, name)
    return PaperTable(name, kinds.pop(), entries)


def load_table(path) -> PaperTable:
    path = Path(path)
    return parse_table(path.read_text(encoding="ascii"), path.stem)


def shipped_table(name: str) -> PaperTable:
    """``"table4"`` (shapes) or ``"table5"`` (discrete/continuous)."""
    text = resources.files("xorca.data").joinpath(f"{name}.txt").read_text(encoding="ascii")
    return parse_table(text, name)


@dataclass
class TableDiff:
    table: str
    agreed: list[int] = field(default_factory=list)
    disagreements: list[dict] = field(default_factory=list)
    paper_anomalies: list[dict] = field(default_factory=list)
    labels: dict[str, str] = field(default_factory=dict)
    not_computed: list[int] = field(default_factory=list)

    @property
    def agreements(self) -> int:
        return len(self.agreed)

    def to_json(self) -> str:
        doc = {
            "table": self.table,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "paper_anomalies": self.paper_anomalies,
            "labels": self.labels,
            "agreed_rules": self.agreed,
            "not_computed": self.not_computed,
        }
        return json.dumps(doc, indent=2) + "\n"


def render_pattern(pattern) -> list[str]:
    """Bounding-box picture of a seed-relative pattern, top row first."""
    if not pattern:
        return []
    r0 = min(r for r, _ in pattern)
    r1 = max(r for r, _ in pattern)
    c0 = min(c for _, c in pattern)
    c1 = max(c for _, c in pattern)
    return [
        "".join("#" if (r, c) in pattern else "." for c in range(c0, c1 + 1))
        for r in range(r0, r1 + 1)
    ]


_GROUP1_NOTE = (
    "group-1 labeling question: the table calls single-cell patterns discrete, "
    "while a lone cell has no second vertex to be disconnected from"
)


def _row_labels(table: PaperTable, by_rule: dict[int, CensusRecord], counts: Counter) -> dict[str, str]:
    labels = {}
    for label in table.labels():
        entries = [e for e in table.entries if e.label == label]
        if entries[0].claim:
            labels[label] = entries[0].claim
            continue
        votes = Counter(
            by_rule[e.rule].shape for e in entries if counts[e.rule] == 1 and e.rule in by_rule
        )
        if votes:
            # plurality; ties go to the fewer-vertex shape
            best = min(votes, key=lambda s: (-votes[s], s.vertices))
            labels[label] = best.name
    return labels


def diff_against_paper(records, table: PaperTable) -> TableDiff:
    """Split every listed rule into agreed, disagreement or paper anomaly.

    A rule listed more than once, or under a group whose size differs from
    the rule's own group, is a paper anomaly and is never scored.
    """
    by_rule = {rec.rule: rec for rec in records}
    listings: dict[int, list[TableEntry]] = defaultdict(list)
    for e in table.entries:
        listings[e.rule].append(e)
    counts = Counter({rule: len(es) for rule, es in listings.items()})

    diff = TableDiff(table.name)
    if table.kind == "shape":
        diff.labels = _row_labels(table, by_rule, counts)
    else:
        diff.labels = {label: label.split("/")[1] for label in table.labels()}

    for rule in sorted(listings):
        es = listings[rule]
        rec = by_rule.get(rule)
        if rec is None:
            diff.not_computed.append(rule)
            continue
        where = [f"{e.label} (line {e.line})" for e in es]
        if len(es) > 1:
            kind = "duplicate" if len({e.label for e in es}) == 1 else "contradictory"
            diff.paper_anomalies.append(
                {"rule": rule, "kind": kind, "description": f"listed {len(es)} times: " + ", ".join(where)}
            )
            continue
        e = es[0]
        if e.group is not None and e.group != rec.group:
            diff.paper_anomalies.append(
                {
                    "rule": rule,
                    "kind": "group-mismatch",
                    "description": f"listed under {e.label} but depends on {rec.group} cells",
                }
            )
            continue
        computed = rec.shape.name if table.kind == "shape" else rec.connectivity.value
        claim = diff.labels.get(e.label)
        if computed == claim:
            diff.agreed.append(rule)
            continue
        entry = {
            "rule": rule,
            "group": rec.group,
            "label": e.label,
            "computed": computed,
            "paper_claim": claim,
            "cell_count": rec.cell_count,
            "pattern": [list(p) for p in sorted(rec.pattern)],
            "picture": render_pattern(rec.pattern),
        }
        if table.kind == "connectivity" and e.group == 1:
            entry["note"] = _GROUP1_NOTE
        diff.disagreements.append(entry)
    return diff
