"""Complete-linkage agglomerative clustering with a threshold stop.

The distance between two groups is the largest distance between a member
of one and a member of the other, which favors small, cohesive, sharply
delimited groups.  Agglomeration merges the closest pair of groups until
one group remains; a partition is then obtained by keeping exactly the
merges at distance <= alpha.  Because complete linkage is monotone
(merge distances never decrease), building the full dendrogram once and
cutting it per threshold is behavior-identical to stopping the
agglomeration loop at the first merge above alpha, and far cheaper when
sweeping 100 thresholds.

Tie-breaking: when several group pairs share the minimal distance, each
group is represented by its smallest member index and the pair with the
lexicographically least (smaller representative, larger representative)
is merged.  This makes dendrograms identical across runs and platforms.

Threshold comparison is inclusive (<= alpha) and exact: no epsilon is
applied, since distances arrive as deterministic values from the
distance module and an epsilon would silently move zone boundaries.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from .distance import PairwiseDistances, pair_distance


@dataclass(frozen=True)
class Merge:
    left: int
    right: int
    distance: float
    new_id: int


@dataclass(frozen=True)
class Dendrogram:
    """Full merge tree over n items.

    Leaves carry ids 0..n-1; the k-th merge creates cluster id n+k.  The
    ``left`` side of a merge is the cluster containing the smaller item
    index.  ``ids`` optionally maps item indices to external labels
    (document ids).
    """

    n: int
    merges: tuple[Merge, ...]
    ids: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.merges) != self.n - 1:
            raise ValueError(
                f"a dendrogram over {self.n} items needs {self.n - 1} merges, "
                f"got {len(self.merges)}"
            )
        for earlier, later in zip(self.merges, self.merges[1:]):
            if later.distance < earlier.distance:
                raise ValueError("merge distances must be non-decreasing")
        if self.ids is not None and len(self.ids) != self.n:
            raise ValueError("ids length must match n")


@dataclass(frozen=True)
class Clustering:
    """Threshold-cut partition: groups of >= min_size items plus the rest."""

    alpha: float
    groups: tuple[tuple[int, ...], ...]
    ungrouped: tuple[int, ...]
    min_size: int = 2
    ids: tuple[str, ...] | None = None

    def label(self, item: int):
        return self.ids[item] if self.ids is not None else item

    def labeled_groups(self) -> list[list]:
        return [[self.label(i) for i in group] for group in self.groups]

    def labeled_ungrouped(self) -> list:
        return [self.label(i) for i in self.ungrouped]

    def grouped_count(self) -> int:
        return sum(len(group) for group in self.groups)

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "groups": self.labeled_groups(),
            "ungrouped": self.labeled_ungrouped(),
        }


def complete_linkage_distance(
    a: Iterable[int], b: Iterable[int], dist: PairwiseDistances
) -> float:
    """Largest pairwise distance between a member of ``a`` and one of ``b``."""
    set_a, set_b = set(a), set(b)
    if not set_a or not set_b:
        raise ValueError("clusters must be non-empty")
    if set_a & set_b:
        raise ValueError(f"clusters overlap: {sorted(set_a & set_b)}")
    return max(pair_distance(dist, i, j) for i in set_a for j in set_b)


def build_dendrogram(dist: PairwiseDistances) -> Dendrogram:
    """Agglomerate all items under complete linkage.

    Runs the standard loop on a square distance matrix with
    maximum-update (Lance-Williams for complete linkage): after merging
    clusters a and b, the distance of the union to any other cluster is
    max(d(a, .), d(b, .)).
    """
    n = dist.n
    if n < 2:
        raise ValueError("need at least two items to cluster")
    d = dist.as_square()
    np.fill_diagonal(d, np.inf)
    rep = np.arange(n)  # smallest original member of the cluster in each slot
    cluster_id = np.arange(n)
    merges = []
    for step in range(n - 1):
        m = d.min()
        rows, cols = np.nonzero(d == m)
        best_key = None
        best = (-1, -1)
        for a, b in zip(rows, cols):
            if a >= b:
                continue
            ra, rb = int(rep[a]), int(rep[b])
            key = (ra, rb) if ra < rb else (rb, ra)
            if best_key is None or key < best_key:
                best_key = key
                best = (int(a), int(b))
        a, b = best
        if rep[a] > rep[b]:
            a, b = b, a
        # a keeps the merged cluster, b goes inactive
        merged_row = np.maximum(d[a], d[b])
        d[a, :] = merged_row
        d[:, a] = merged_row
        d[a, a] = np.inf
        d[b, :] = np.inf
        d[:, b] = np.inf
        new_id = n + step
        merges.append(
            Merge(
                left=int(cluster_id[a]),
                right=int(cluster_id[b]),
                distance=float(m),
                new_id=new_id,
            )
        )
        cluster_id[a] = new_id
    # Dendrogram.__post_init__ re-checks that distances are non-decreasing,
    # which complete linkage guarantees.
    return Dendrogram(n=n, merges=tuple(merges), ids=dist.ids)


def cut_at_threshold(
    tree: Dendrogram, alpha: float, min_size: int = 2
) -> Clustering:
    """Partition obtained by keeping merges at distance <= alpha.

    Merges are replayed in order and replay stops at the first merge
    exceeding alpha.  Resulting clusters with at least ``min_size``
    members are reported as groups; all other items are ungrouped.  At
    alpha = 1.0 every item falls into one absolute group, since all
    distances are at most 1 by construction.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    if min_size < 1:
        raise ValueError(f"min_size must be positive, got {min_size}")
    members: dict[int, list[int]] = {i: [i] for i in range(tree.n)}
    for merge in tree.merges:
        if merge.distance > alpha:
            break
        merged = members.pop(merge.left) + members.pop(merge.right)
        members[merge.new_id] = merged
    groups = []
    ungrouped: list[int] = []
    for cluster in members.values():
        if len(cluster) >= min_size:
            groups.append(tuple(sorted(cluster)))
        else:
            ungrouped.extend(cluster)
    groups.sort(key=lambda g: g[0])
    return Clustering(
        alpha=alpha,
        groups=tuple(groups),
        ungrouped=tuple(sorted(ungrouped)),
        min_size=min_size,
        ids=tree.ids,
    )


def clustering_from_json_dict(record: dict) -> Clustering:
    """Rebuild a Clustering from its JSON form (labels become items)."""
    for field in ("alpha", "groups", "ungrouped"):
        if field not in record:
            raise ValueError(f"clustering JSON is missing field {field!r}")
    labels = sorted(
        {label for group in record["groups"] for label in group}
        | set(record["ungrouped"])
    )
    position = {label: i for i, label in enumerate(labels)}
    groups = tuple(
        tuple(sorted(position[label] for label in group))
        for group in record["groups"]
    )
    return Clustering(
        alpha=float(record["alpha"]),
        groups=tuple(sorted(groups, key=lambda g: g[0])),
        ungrouped=tuple(sorted(position[label] for label in record["ungrouped"])),
        min_size=min((len(g) for g in groups), default=1),
        ids=tuple(labels),
    )


def dendrogram_to_csv(tree: Dendrogram, path: str | Path | None = None) -> str:
    """Merge-list CSV: one ``left_id,right_id,distance,new_id`` row per merge.

    Distances are written with repr so they round-trip exactly.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["left_id", "right_id", "distance", "new_id"])
    for merge in tree.merges:
        writer.writerow([merge.left, merge.right, repr(merge.distance), merge.new_id])
    text = buffer.getvalue()
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def clustering_to_json(clustering: Clustering, path: str | Path | None = None) -> str:
    text = json.dumps(clustering.to_json_dict(), ensure_ascii=False, indent=2)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text
