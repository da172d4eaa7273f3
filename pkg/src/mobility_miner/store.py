"""In-memory dataset store: immutable versioned snapshots with atomic swap,
single-writer uploads, and an LRU memo for mining results."""

from __future__ import annotations

import os
import threading
from collections import OrderedDict
from dataclasses import dataclass
from datetime import timezone
from pathlib import Path

from .graph import MobilityGraph, build_graph
from .ingest import INPUT_ENCODING, IngestReport, UserHistory, ingest_file, ingest_text, merge_histories
from .miner import MiningConfig, SequentialPattern, mine
from .sessionize import VisitSequence, sessionize
from .taxonomy import LabelTaxonomy, LabeledVisit, identity_taxonomy, relabel

# Mining defaults for the parameterless read paths (graph, stats).
DEFAULT_VIEW_CONFIG = MiningConfig(min_support=2)
TOP_PATTERN_COUNT = 10
PATTERN_CACHE_SIZE = 256


class UnknownUserError(KeyError):
    pass


class UploadRejectedError(ValueError):
    """No line of the upload parsed; the store was left untouched."""


@dataclass(frozen=True, slots=True)
class UserData:
    history: UserHistory
    visits: tuple[LabeledVisit, ...]
    sessions: tuple[VisitSequence, ...]


@dataclass(frozen=True, slots=True)
class Snapshot:
    version: int
    taxonomy_name: str
    taxonomy: LabelTaxonomy
    users: dict[str, UserData]  # never mutated after construction


def _derive(history: UserHistory, tax: LabelTaxonomy) -> UserData:
    visits = relabel(history, tax)
    return UserData(history, tuple(visits), tuple(sessionize(visits)))


def _timestamp(moment) -> str:
    return moment.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


class DatasetStore:
    """Many concurrent readers, one writer at a time. Readers grab the
    current snapshot once per request and never see a mix of versions."""

    def __init__(self, histories: dict[str, UserHistory] | None = None,
                 taxonomy: LabelTaxonomy | None = None,
                 taxonomy_name: str = "identity",
                 upload_dir: str | os.PathLike | None = None):
        tax = taxonomy if taxonomy is not None else identity_taxonomy()
        users = {uid: _derive(h, tax) for uid, h in (histories or {}).items()}
        self._snapshot = Snapshot(1, taxonomy_name, tax, users)
        self._write_lock = threading.Lock()
        self._upload_dir = Path(upload_dir) if upload_dir is not None else None
        self._pattern_cache: OrderedDict[tuple, list[SequentialPattern]] = OrderedDict()
        self._cache_lock = threading.Lock()

    @property
    def snapshot(self) -> Snapshot:
        return self._snapshot

    def list_users(self, snap: Snapshot | None = None) -> list[dict]:
        """All users, most records first (user id breaks ties)."""
        snap = snap or self._snapshot
        rows = []
        for user_id in sorted(snap.users,
                              key=lambda u: (-len(snap.users[u].history.records), u)):
            records = snap.users[user_id].history.records
            rows.append({
                "user_id": user_id,
                "record_count": len(records),
                "first_time": _timestamp(records[0].utc_time),
                "last_time": _timestamp(records[-1].utc_time),
            })
        return rows

    def _user(self, snap: Snapshot, user_id: str) -> UserData:
        try:
            return snap.users[user_id]
        except KeyError:
            raise UnknownUserError(user_id)

    def get_patterns(self, user_id: str, config: MiningConfig,
                     snap: Snapshot | None = None) -> list[SequentialPattern]:
        """Mine a user's sessions, memoized per (user, version, config)."""
        snap = snap or self._snapshot
        data = self._user(snap, user_id)
        config.validate()
        key = (user_id, snap.version, config.cache_key())
        with self._cache_lock:
            if key in self._pattern_cache:
                self._pattern_cache.move_to_end(key)
                return self._pattern_cache[key]
        patterns = mine(list(data.sessions), config)
        with self._cache_lock:
            self._pattern_cache[key] = patterns
            self._pattern_cache.move_to_end(key)
            while len(self._pattern_cache) > PATTERN_CACHE_SIZE:
                self._pattern_cache.popitem(last=False)
        return patterns

    def get_graph(self, user_id: str, snap: Snapshot | None = None) -> MobilityGraph:
        snap = snap or self._snapshot
        data = self._user(snap, user_id)
        patterns = self.get_patterns(user_id, DEFAULT_VIEW_CONFIG, snap)
        return build_graph(data.visits, data.sessions, patterns)

    def get_stats(self, user_id: str, snap: Snapshot | None = None) -> dict:
        snap = snap or self._snapshot
        data = self._user(snap, user_id)
        patterns = self.get_patterns(user_id, DEFAULT_VIEW_CONFIG, snap)
        return {
            "record_count": len(data.history.records),
            "distinct_labels": len({v.label for v in data.visits}),
            "session_count": len(data.sessions),
            "top_patterns": [p.to_dict() for p in patterns[:TOP_PATTERN_COUNT]],
        }

    def upload(self, text: str) -> tuple[IngestReport, int]:
        """Merge an upload into a new snapshot; returns (report, new version).

        Rejects the whole upload (store untouched) when nothing parses.
        """
        new_histories, report = ingest_text(text)
        if report.parsed == 0:
            raise UploadRejectedError("no line of the upload parsed")
        with self._write_lock:
            snap = self._snapshot
            users = dict(snap.users)
            for user_id, history in new_histories.items():
                if user_id in users:
                    history = merge_histories(users[user_id].history, history)
                users[user_id] = _derive(history, snap.taxonomy)
            version = snap.version + 1
            self._snapshot = Snapshot(version, snap.taxonomy_name,
                                      snap.taxonomy, users)
            if self._upload_dir is not None:
                self._upload_dir.mkdir(parents=True, exist_ok=True)
                path = self._upload_dir / f"upload-{version:06d}.tsv"
                path.write_bytes(text.encode(INPUT_ENCODING, errors="replace"))
        return report, version

    def set_taxonomy(self, name: str, tax: LabelTaxonomy) -> int:
        """Swap the labeling rules, rederiving every user; returns the new version."""
        with self._write_lock:
            snap = self._snapshot
            users = {uid: _derive(data.history, tax)
                     for uid, data in snap.users.items()}
            version = snap.version + 1
            self._snapshot = Snapshot(version, name, tax, users)
        return version


def build_store(input_path: str | os.PathLike,
                taxonomy: LabelTaxonomy | None = None,
                taxonomy_name: str = "identity",
                upload_dir: str | os.PathLike | None = None) -> DatasetStore:
    """Ingest the base dataset and replay any previously written-through
    uploads from upload_dir (sorted, i.e. original version order)."""
    histories, _ = ingest_file(input_path)
    if upload_dir is not None:
        for path in sorted(Path(upload_dir).glob("*.tsv")):
            replayed, _ = ingest_file(path)
            for user_id, history in replayed.items():
                if user_id in histories:
                    history = merge_histories(histories[user_id], history)
                histories[user_id] = history
    return DatasetStore(histories, taxonomy, taxonomy_name, upload_dir)
