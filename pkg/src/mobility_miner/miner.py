"""Frequent sequential pattern mining over visit sequences.

PrefixSpan specialized to single-item elements (one place per check-in
event), with pseudo-projected databases and two growth constraints: a
pattern length cap and an optional gap bound between consecutive pattern
elements. Support is sequence-level: a sequence counts once no matter how
many embeddings it holds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .serialize import canonical_json
from .sessionize import VisitSequence


class ConfigError(ValueError):
    """Invalid mining configuration."""


@dataclass(frozen=True, slots=True)
class SequentialPattern:
    items: tuple[str, ...]
    support: int

    def to_dict(self) -> dict:
        return {"items": list(self.items), "support": self.support}


@dataclass(frozen=True, slots=True)
class MiningConfig:
    """Mining knobs.

    min_support: an int is an absolute sequence count (>= 1); a float is a
    fraction of the sequence count in (0, 1], converted with ceil.
    max_gap: None allows arbitrary gaps, 0 demands contiguous elements,
    g allows at most g skipped items between consecutive pattern elements.
    """

    min_support: int | float = 2
    max_pattern_length: int = 10
    max_gap: int | None = None

    def validate(self) -> None:
        ms = self.min_support
        if isinstance(ms, bool) or not isinstance(ms, (int, float)):
            raise ConfigError(f"min_support must be an int or float, got {ms!r}")
        if isinstance(ms, int) and ms < 1:
            raise ConfigError(f"absolute min_support must be >= 1, got {ms}")
        if isinstance(ms, float) and not 0.0 < ms <= 1.0:
            raise ConfigError(f"relative min_support must be in (0, 1], got {ms}")
        if self.max_pattern_length < 1:
            raise ConfigError(
                f"max_pattern_length must be >= 1, got {self.max_pattern_length}")
        if self.max_gap is not None and self.max_gap < 0:
            raise ConfigError(f"max_gap must be >= 0, got {self.max_gap}")

    def absolute_min_support(self, sequence_count: int) -> int:
        if isinstance(self.min_support, float):
            return max(1, math.ceil(self.min_support * sequence_count))
        return self.min_support

    def cache_key(self) -> tuple:
        # 2 and 2.0 hash alike but mean different things; keep the type.
        return (type(self.min_support).__name__, self.min_support,
                self.max_pattern_length, self.max_gap)


def mine(sequences: Sequence[VisitSequence], config: MiningConfig) -> list[SequentialPattern]:
    """Return every pattern with support >= min_support, length <=
    max_pattern_length, and gap-feasible embeddings, with exact supports.

    Output order is total: descending support, then ascending length, then
    lexicographic items. Projections are (sequence index, match-end
    positions) pairs; suffixes are never copied. With an unrestricted gap
    only the earliest match end matters, so the frontier collapses to one
    position; under a gap bound the full frontier of feasible end positions
    is carried, because a greedy leftmost match can miss later embeddings.
    """
    config.validate()
    items_per_seq = [tuple(s.items) for s in sequences]
    if not items_per_seq:
        return []
    min_support = config.absolute_min_support(len(items_per_seq))
    max_length = config.max_pattern_length
    max_gap = config.max_gap
    found: list[SequentialPattern] = []

    def expand(prefix: tuple[str, ...],
               projection: list[tuple[int, tuple[int, ...]]]) -> None:
        # Group feasible extension positions by item, one entry per sequence.
        candidates: dict[str, list[tuple[int, tuple[int, ...]]]] = {}
        for seq_index, ends in projection:
            seq = items_per_seq[seq_index]
            per_item: dict[str, list[int]] = {}
            if max_gap is None:
                for pos in range(ends[0] + 1, len(seq)):
                    item = seq[pos]
                    if item not in per_item:
                        per_item[item] = [pos]
            else:
                feasible: set[int] = set()
                for end in ends:
                    feasible.update(
                        range(end + 1, min(end + max_gap + 1, len(seq) - 1) + 1))
                for pos in sorted(feasible):
                    per_item.setdefault(seq[pos], []).append(pos)
            for item, positions in per_item.items():
                candidates.setdefault(item, []).append(
                    (seq_index, tuple(positions)))
        for item in sorted(candidates):
            entries = candidates[item]
            if len(entries) < min_support:
                continue
            pattern = prefix + (item,)
            found.append(SequentialPattern(pattern, len(entries)))
            if len(pattern) < max_length:
                expand(pattern, entries)

    # Level 1: the gap constraint does not restrict where a pattern starts.
    initial: dict[str, list[tuple[int, tuple[int, ...]]]] = {}
    for seq_index, seq in enumerate(items_per_seq):
        positions: dict[str, list[int]] = {}
        for pos, item in enumerate(seq):
            positions.setdefault(item, []).append(pos)
        for item, plist in positions.items():
            ends = tuple(plist) if max_gap is not None else (plist[0],)
            initial.setdefault(item, []).append((seq_index, ends))
    for item in sorted(initial):
        entries = initial[item]
        if len(entries) < min_support:
            continue
        pattern = (item,)
        found.append(SequentialPattern(pattern, len(entries)))
        if max_length > 1:
            expand(pattern, entries)

    found.sort(key=lambda p: (-p.support, len(p.items), p.items))
    return found


def contains_pattern(items: Sequence[str], pattern: Sequence[str],
                     max_gap: int | None = None) -> bool:
    """Direct scan: does items contain pattern as a subsequence under the gap
    rule? Kept free of the miner's projection machinery on purpose."""
    if not pattern:
        raise ValueError("pattern must be non-empty")
    frontier = [i for i, item in enumerate(items) if item == pattern[0]]
    for element in pattern[1:]:
        if not frontier:
            return False
        if max_gap is None:
            start = frontier[0] + 1
            frontier = [i for i in range(start, len(items))
                        if items[i] == element]
        else:
            reachable: set[int] = set()
            for end in frontier:
                for pos in range(end + 1,
                                 min(end + max_gap + 1, len(items) - 1) + 1):
                    if items[pos] == element:
                        reachable.add(pos)
            frontier = sorted(reachable)
    return bool(frontier)


def count_support(pattern: Sequence[str], sequences: Sequence[VisitSequence],
                  max_gap: int | None = None) -> int:
    """Number of sequences containing the pattern; each counts at most once."""
    pat = tuple(pattern)
    return sum(1 for s in sequences if contains_pattern(s.items, pat, max_gap))


def patterns_to_dicts(patterns: Sequence[SequentialPattern]) -> list[dict]:
    return [p.to_dict() for p in patterns]


def patterns_to_json(patterns: Sequence[SequentialPattern]) -> str:
    return canonical_json(patterns_to_dicts(patterns))
