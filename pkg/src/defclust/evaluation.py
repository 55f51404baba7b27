"""Adapted recall and precision, threshold sweep, and zone reporting.

Recall is the proportion of documents integrated into a reported group
out of the whole collection; precision is the proportion of grouped
documents that are not intruders.  Both take the value 0 when no group
of at least two documents exists, and they are reported separately (no
F-measure): precision rests on sense judgments while recall is purely
mechanical, so combining them would blur the results.

Intruder identification mechanizes the human reading it replaces: within
each group the majority gold-sense label is the group's sense, and every
member carrying a different label is an intruder.

The alpha axis divides into behavior zones.  The published bounds
overlap at 0.85 and leave (0.70, 0.75) unassigned, so classification
here uses the repaired half-open partition

    zone1:  alpha <= 0.70        zone2: 0.70 < alpha <= 0.85
    zone3:  0.85 < alpha < 1.00  absolute: alpha = 1.00

which every zone-annotated output of this package follows.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from .errors import DataError
from .hac import Clustering, Dendrogram, cut_at_threshold

ZONES = ("zone1", "zone2", "zone3", "absolute")

ZONE_NOTE = (
    "zones: zone1 a<=0.70, zone2 0.70<a<=0.85, zone3 0.85<a<1.00, "
    "absolute a=1.00 (half-open repair of overlapping published bounds)"
)

SWEEP_CSV_HEADER = ("alpha", "num_groups", "precision", "recall", "zone")


@dataclass(frozen=True)
class GoldAnnotation:
    """Gold sense label (acception id) for every document under evaluation."""

    sense_of: Mapping

    @classmethod
    def from_documents(cls, docs) -> "GoldAnnotation":
        missing = [doc.id for doc in docs if doc.gold_sense is None]
        if missing:
            raise DataError(
                f"documents without gold_sense: {', '.join(map(repr, missing[:5]))}"
                + (" ..." if len(missing) > 5 else "")
            )
        return cls(sense_of={doc.id: doc.gold_sense for doc in docs})

    @classmethod
    def load(cls, path: str | Path) -> "GoldAnnotation":
        """Gold file: JSONL of {"id": string, "sense": string}."""
        sense_of: dict[str, str] = {}
        for lineno, line in enumerate(
            Path(path).read_text(encoding="utf-8").splitlines(), 1
        ):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"{path}:{lineno}: invalid JSON ({exc.msg})") from None
            if not isinstance(record, dict) or "id" not in record or "sense" not in record:
                raise DataError(f"{path}:{lineno}: expected an object with id and sense")
            if record["id"] in sense_of:
                raise DataError(f"{path}:{lineno}: duplicate id {record['id']!r}")
            sense_of[record["id"]] = record["sense"]
        return cls(sense_of=sense_of)


def recall(clustering: Clustering, total: int) -> float:
    """Grouped documents / total documents; 0 when nothing is grouped."""
    if total < 1:
        raise ValueError("total document count must be at least 1")
    return clustering.grouped_count() / total


def identify_intruders(clustering: Clustering, gold: GoldAnnotation) -> set:
    """Members whose label conflicts with their group's majority sense.

    Ties on the majority count resolve toward the label of the lowest
    document id among the tied labels' carriers.
    """
    intruders: set = set()
    for group in clustering.labeled_groups():
        labels = []
        for member in group:
            try:
                labels.append(gold.sense_of[member])
            except KeyError:
                raise DataError(
                    f"no gold sense for grouped document {member!r}"
                ) from None
        counts = Counter(labels)
        top = max(counts.values())
        tied = {sense for sense, count in counts.items() if count == top}
        group_sense = min(
            (member, label) for member, label in zip(group, labels) if label in tied
        )[1]
        intruders.update(
            member for member, label in zip(group, labels) if label != group_sense
        )
    return intruders


def precision(clustering: Clustering, intruders: set) -> float:
    """(grouped - intruders) / grouped; 0 when no group is formed."""
    grouped = {member for group in clustering.labeled_groups() for member in group}
    stray = set(intruders) - grouped
    if stray:
        raise ValueError(f"intruders not in any group: {sorted(stray, key=repr)}")
    if not grouped:
        return 0.0
    return (len(grouped) - len(intruders)) / len(grouped)


def classify_zone(alpha: float) -> str:
    """Behavior zone of a threshold value (see module docstring)."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    if alpha <= 0.70:
        return "zone1"
    if alpha <= 0.85:
        return "zone2"
    if alpha < 1.00:
        return "zone3"
    return "absolute"


def _to_fraction(value) -> Fraction:
    # str(float) round-trips the shortest repr, so Fraction("0.01") and
    # friends come out exact instead of inheriting binary noise.
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


@dataclass(frozen=True)
class SweepGrid:
    """Threshold grid start..end in exact steps (kept as Fractions).

    Alpha values are generated as start + k*step in rational arithmetic,
    never by repeated floating addition, so grid points land exactly on
    hundredths and zone boundaries stay put.
    """

    start: Fraction
    end: Fraction
    step: Fraction

    def __init__(self, start="0.01", end="1.00", step="0.01"):
        object.__setattr__(self, "start", _to_fraction(start))
        object.__setattr__(self, "end", _to_fraction(end))
        object.__setattr__(self, "step", _to_fraction(step))
        if not 0 < self.start <= self.end <= 1:
            raise ValueError(
                f"grid must satisfy 0 < start <= end <= 1, got "
                f"{float(self.start)}..{float(self.end)}"
            )
        if self.step <= 0:
            raise ValueError(f"grid step must be positive, got {float(self.step)}")

    @classmethod
    def parse(cls, text: str) -> "SweepGrid":
        """Parse the ``START:END:STEP`` flag syntax."""
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid must look like START:END:STEP, got {text!r}")
        try:
            return cls(*parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid grid {text!r}: {exc}") from None

    def alphas(self) -> list[Fraction]:
        out = []
        k = 0
        while True:
            alpha = self.start + k * self.step
            if alpha > self.end:
                break
            out.append(alpha)
            k += 1
        return out


DEFAULT_GRID = SweepGrid("0.01", "1.00", "0.01")


@dataclass(frozen=True)
class EvalRow:
    alpha: float
    num_groups: int
    recall: float
    precision: float
    zone: str


def run_sweep(
    tree: Dendrogram,
    total: int,
    gold: GoldAnnotation,
    grid: SweepGrid = DEFAULT_GRID,
    min_size: int = 2,
) -> list[EvalRow]:
    """One EvalRow per grid point (the default grid yields 100 rows).

    Each row cuts the shared dendrogram at its alpha and scores the
    partition.  Recall is checked to be non-decreasing along the sweep,
    which threshold-cut monotonicity guarantees.
    """
    rows: list[EvalRow] = []
    previous_recall = -1.0
    for exact_alpha in grid.alphas():
        alpha = float(exact_alpha)
        clustering = cut_at_threshold(tree, alpha, min_size=min_size)
        r = recall(clustering, total)
        p = precision(clustering, identify_intruders(clustering, gold))
        if r < previous_recall:
            raise AssertionError(
                f"recall decreased along the sweep at alpha={alpha}"
            )
        previous_recall = r
        rows.append(
            EvalRow(
                alpha=alpha,
                num_groups=len(clustering.groups),
                recall=r,
                precision=p,
                zone=classify_zone(alpha),
            )
        )
    return rows


def sweep_to_csv(rows: Sequence[EvalRow], path: str | Path | None = None) -> str:
    """Sweep CSV with header ``alpha,num_groups,precision,recall,zone``.

    Alpha prints with two decimals; metrics with six.  Returns the CSV
    text and, when ``path`` is given, also writes it there.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SWEEP_CSV_HEADER)
    for row in rows:
        writer.writerow(
            [
                f"{row.alpha:.2f}",
                row.num_groups,
                f"{row.precision:.6f}",
                f"{row.recall:.6f}",
                row.zone,
            ]
        )
    text = buffer.getvalue()
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def format_cluster_report(
    clustering: Clustering,
    texts: Mapping | None = None,
    gold: GoldAnnotation | None = None,
) -> str:
    """Human-readable groups: member texts in id order, sense, intruders."""
    lines = []
    grouped = clustering.grouped_count()
    total = grouped + len(clustering.ungrouped)
    lines.append(
        f"clustering at alpha={clustering.alpha:g} "
        f"({classify_zone(clustering.alpha)}): "
        f"{len(clustering.groups)} group(s), {grouped}/{total} documents grouped"
    )
    lines.append(ZONE_NOTE)
    intruders = identify_intruders(clustering, gold) if gold is not None else set()
    for k, group in enumerate(clustering.labeled_groups(), 1):
        members = sorted(group, key=str)
        header = f"group {k} ({len(members)} members"
        if gold is not None:
            senses = Counter(gold.sense_of[m] for m in members)
            top = max(senses.values())
            tied = {s for s, c in senses.items() if c == top}
            sense = min(
                (m, gold.sense_of[m]) for m in members if gold.sense_of[m] in tied
            )[1]
            header += f", sense={sense}"
        lines.append(header + ")")
        for member in members:
            flag = "!" if member in intruders else " "
            text = f"  {flag} {member}"
            if texts is not None and member in texts:
                text += f"  {texts[member]}"
            lines.append(text)
    ungrouped = sorted(clustering.labeled_ungrouped(), key=str)
    if ungrouped:
        lines.append("ungrouped: " + ", ".join(str(u) for u in ungrouped))
    return "\n".join(lines) + "\n"
