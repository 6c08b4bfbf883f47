"""Synthetic scenario-event generator and CSV ingestion.

Events carry four raw tactical factors in physical units. The latent score
encodes the two operator rules (more fuel / more weapons raise the score,
longer intercept time / higher danger lower it) and drives stratified
sampling so all three decision regions are well represented.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

#: Closed physical ranges, in field order (fuel, intercept_time, weapon, danger).
FACTOR_RANGES = (
    ("fuel", 0.0, 1000.0),
    ("intercept_time", 0.0, 60.0),
    ("weapon", 0.0, 100.0),
    ("danger", 0.0, 10.0),
)

CSV_HEADER = ("fuel", "intercept_time", "weapon", "danger")


@dataclass(frozen=True)
class ScenarioEvent:
    """One tactical event: fuel (litres), intercept_time (minutes),
    weapon (percent), danger (points)."""

    fuel: float
    intercept_time: float
    weapon: float
    danger: float

    def __post_init__(self):
        for (name, lo, hi), value in zip(FACTOR_RANGES, self.as_tuple()):
            if not (lo <= value <= hi):
                raise ValueError(f"{name}={value} outside [{lo}, {hi}]")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.fuel, self.intercept_time, self.weapon, self.danger)


@dataclass(frozen=True)
class MasterDataset:
    events: tuple[ScenarioEvent, ...]
    seed: int

    @property
    def size(self) -> int:
        return len(self.events)


def latent_score(event: ScenarioEvent) -> float:
    """Equal-weight favorability in [0, 1].

    Increasing in fuel and weapon, decreasing in intercept_time and danger.
    """
    return (
        event.fuel / 1000.0
        + (1.0 - event.intercept_time / 60.0)
        + event.weapon / 100.0
        + (1.0 - event.danger / 10.0)
    ) / 4.0


def score_band(score: float) -> int:
    """Latent-score third: 0 for [0, 1/3), 1 for [1/3, 2/3), 2 for [2/3, 1]."""
    if score < 1.0 / 3.0:
        return 0
    if score < 2.0 / 3.0:
        return 1
    return 2


def generate_master(size: int, seed: int) -> MasterDataset:
    """Stratified uniform sampling over the three latent-score thirds.

    Events are split into (near-)equal strata. Within stratum k each
    factor's favorability is drawn uniformly from [k/3, (k+1)/3) and mapped
    to physical units, so every event's latent score lands in stratum k's
    third, the strata form three separated regions in normalized feature
    space, and each field's overall marginal stays uniform over its full
    range. The order is shuffled; everything derives from one seeded
    generator, so the dataset is a pure function of (size, seed).
    """
    if size < 10:
        raise ValueError(f"size must be >= 10, got {size}")
    rng = np.random.default_rng(seed)

    base = size // 3
    quotas = [base + (1 if k < size % 3 else 0) for k in range(3)]
    blocks = []
    for k, quota in enumerate(quotas):
        g = (k + rng.random((quota, 4))) / 3.0  # per-factor favorability
        blocks.append(g)
    G = np.vstack(blocks)[rng.permutation(size)]

    events = tuple(
        ScenarioEvent(
            fuel=g[0] * 1000.0,
            intercept_time=(1.0 - g[1]) * 60.0,
            weapon=g[2] * 100.0,
            danger=(1.0 - g[3]) * 10.0,
        )
        for g in G
    )
    return MasterDataset(events=events, seed=seed)


def write_csv(dataset: MasterDataset, path: str | Path) -> None:
    """Header row plus one row per event, trailing newline included."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for event in dataset.events:
            writer.writerow([repr(v) for v in event.as_tuple()])


def read_csv(path: str | Path, seed: int = -1) -> MasterDataset:
    """Ingest a dataset CSV of the shape write_csv emits.

    Accepts externally produced files with the same header; seed is only
    provenance and defaults to -1 for foreign data.
    """
    path = Path(path)
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(h.strip() for h in header) != CSV_HEADER:
            raise ValueError(
                f"{path}: expected header {','.join(CSV_HEADER)}, got {header}"
            )
        events = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 4:
                raise ValueError(f"{path}:{lineno}: expected 4 fields, got {len(row)}")
            try:
                values = [float(v) for v in row]
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
            events.append(ScenarioEvent(*values))
    if len(events) < 1:
        raise ValueError(f"{path}: no data rows")
    return MasterDataset(events=tuple(events), seed=seed)
