"""Split one user's labeled visits into per-day visit sequences."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, timedelta
from itertools import groupby

from .taxonomy import LabeledVisit


@dataclass(frozen=True, slots=True)
class VisitSequence:
    user_id: str
    session_key: date  # local calendar date
    items: tuple[str, ...]  # length >= 1, within-day visit order


def local_date(visit: LabeledVisit) -> date:
    return (visit.utc_time + timedelta(minutes=visit.tz_offset_minutes)).date()


def sessionize(visits: list[LabeledVisit],
               collapse_adjacent_duplicates: bool = True) -> list[VisitSequence]:
    """Group visits into one sequence per non-empty local calendar day.

    The day is taken from each record's own timezone offset. Within a day,
    items keep visit-time order; sequences come back sorted by date. With
    collapsing on (the default), runs of equal adjacent labels shrink to one
    item, so a day of repeated check-ins at one place cannot manufacture
    spurious self-transitions.

    Visits must belong to a single user and be time-sorted. If a timezone
    change makes local dates regress, same-day visits still land in that
    day's single sequence (day grouping, not run splitting).
    """
    if not visits:
        return []
    user_id = visits[0].user_id
    by_day: dict[date, list[str]] = {}
    for visit in visits:
        if visit.user_id != user_id:
            raise ValueError("sessionize expects visits of a single user")
        by_day.setdefault(local_date(visit), []).append(visit.label)
    sequences = []
    for day in sorted(by_day):
        labels = by_day[day]
        if collapse_adjacent_duplicates:
            labels = [label for label, _ in groupby(labels)]
        sequences.append(VisitSequence(user_id, day, tuple(labels)))
    return sequences
