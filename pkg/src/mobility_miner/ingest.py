"""Parsing of check-in history files: 8-column TSV, one check-in per line.

Columns: user_id, venue_id, venue_category_id, venue_category_name,
latitude, longitude, tz_offset_minutes, utc_time.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone

from .serialize import canonical_json

FIELD_COUNT = 8

LAT_RANGE = (-90.0, 90.0)
LON_RANGE = (-180.0, 180.0)
TZ_OFFSET_RANGE = (-14 * 60, 14 * 60)
YEAR_RANGE = (1990, 2100)

# The distributed check-in files are single-byte Western European, not UTF-8.
INPUT_ENCODING = "latin-1"

WEEKDAY_NAMES = ("Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun")
MONTH_NAMES = ("Jan", "Feb", "Mar", "Apr", "May", "Jun",
               "Jul", "Aug", "Sep", "Oct", "Nov", "Dec")
_MONTH_INDEX = {name: i + 1 for i, name in enumerate(MONTH_NAMES)}
_HMS_RE = re.compile(r"^(\d{2}):(\d{2}):(\d{2})$")
_OFFSET_RE = re.compile(r"^([+-])(\d{2})(\d{2})$")


class IngestError(ValueError):
    """Base class for per-line parse failures; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
        self.reason = message


class FieldCountError(IngestError):
    """Wrong number of tab-separated fields, or a mandatory field is empty."""


class NumericRangeError(IngestError):
    """Latitude, longitude, or timezone offset is non-numeric or out of range."""


class TimestampError(IngestError):
    """Timestamp is unparseable or outside the sanity window."""


@dataclass(frozen=True, slots=True)
class CheckinRecord:
    user_id: str
    venue_id: str
    venue_category_id: str
    venue_category_name: str
    latitude: float
    longitude: float
    tz_offset_minutes: int
    utc_time: datetime  # timezone-aware, UTC


@dataclass(slots=True)
class UserHistory:
    user_id: str
    records: list[CheckinRecord]  # ascending by utc_time, input order on ties


@dataclass(slots=True)
class IngestReport:
    total_lines: int = 0
    parsed: int = 0
    rejected_field_count: int = 0
    rejected_numeric: int = 0
    rejected_timestamp: int = 0
    # (line_number, error class name, message) for every rejected line
    failures: list[tuple[int, str, str]] = field(default_factory=list)

    @property
    def rejected(self) -> int:
        return (self.rejected_field_count + self.rejected_numeric
                + self.rejected_timestamp)

    def to_dict(self) -> dict:
        return {
            "total_lines": self.total_lines,
            "parsed": self.parsed,
            "rejected": {
                "field_count": self.rejected_field_count,
                "numeric": self.rejected_numeric,
                "timestamp": self.rejected_timestamp,
            },
        }

    def to_json(self) -> str:
        return canonical_json(self.to_dict())


def _parse_float(text: str, name: str, lo: float, hi: float,
                 line_number: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise NumericRangeError(line_number, f"{name} is not a number: {text!r}")
    if not math.isfinite(value):
        raise NumericRangeError(line_number, f"{name} is not finite: {text!r}")
    if not lo <= value <= hi:
        raise NumericRangeError(
            line_number, f"{name} {value} outside [{lo}, {hi}]")
    return value


def _parse_offset_minutes(text: str, line_number: int) -> int:
    try:
        value = int(text)
    except ValueError:
        raise NumericRangeError(
            line_number, f"tz_offset_minutes is not an integer: {text!r}")
    lo, hi = TZ_OFFSET_RANGE
    if not lo <= value <= hi:
        raise NumericRangeError(
            line_number, f"tz_offset_minutes {value} outside [{lo}, {hi}]")
    return value


def _parse_timestamp(text: str, line_number: int) -> datetime:
    """Accepts the dataset's textual layout ('Tue Apr 03 18:00:09 +0000 2012')
    or ISO-8601; returns an aware UTC datetime at second precision."""
    tokens = text.split()
    if len(tokens) == 6:
        weekday, month_s, day_s, hms, offset_s, year_s = tokens
        if weekday not in WEEKDAY_NAMES:
            raise TimestampError(line_number, f"bad weekday {weekday!r}")
        month = _MONTH_INDEX.get(month_s)
        if month is None:
            raise TimestampError(line_number, f"bad month {month_s!r}")
        hms_m = _HMS_RE.match(hms)
        off_m = _OFFSET_RE.match(offset_s)
        if hms_m is None or off_m is None:
            raise TimestampError(line_number, f"bad time of day in {text!r}")
        sign = 1 if off_m.group(1) == "+" else -1
        offset = sign * (int(off_m.group(2)) * 60 + int(off_m.group(3)))
        try:
            moment = datetime(
                int(year_s), month, int(day_s),
                int(hms_m.group(1)), int(hms_m.group(2)), int(hms_m.group(3)),
                tzinfo=timezone(timedelta(minutes=offset)),
            )
        except ValueError as exc:
            raise TimestampError(line_number, f"{exc}: {text!r}")
    else:
        iso = text.strip()
        if iso.endswith(("Z", "z")):
            iso = iso[:-1] + "+00:00"
        try:
            moment = datetime.fromisoformat(iso)
        except ValueError:
            raise TimestampError(line_number, f"unparseable timestamp {text!r}")
        if moment.tzinfo is None:
            moment = moment.replace(tzinfo=timezone.utc)
        moment = moment.replace(microsecond=0)
    utc = moment.astimezone(timezone.utc)
    if not YEAR_RANGE[0] <= utc.year <= YEAR_RANGE[1]:
        raise TimestampError(
            line_number, f"year {utc.year} outside {YEAR_RANGE}")
    return utc


def parse_line(line: str, line_number: int = 1) -> CheckinRecord:
    """Parse one 8-field TSV line into a validated CheckinRecord.

    Raises FieldCountError, NumericRangeError, or TimestampError; every error
    carries the given 1-based line number. Empty mandatory string fields count
    as field-count violations (the field is effectively missing).
    """
    fields = line.rstrip("\r\n").split("\t")
    if len(fields) != FIELD_COUNT:
        raise FieldCountError(
            line_number,
            f"expected {FIELD_COUNT} tab-separated fields, got {len(fields)}")
    user_id, venue_id, category_id, category_name, lat_s, lon_s, off_s, time_s = fields
    category_name = category_name.strip()
    for name, value in (("user_id", user_id), ("venue_id", venue_id),
                        ("venue_category_name", category_name)):
        if not value:
            raise FieldCountError(line_number, f"empty {name} field")
    return CheckinRecord(
        user_id=user_id,
        venue_id=venue_id,
        venue_category_id=category_id,
        venue_category_name=category_name,
        latitude=_parse_float(lat_s, "latitude", *LAT_RANGE, line_number),
        longitude=_parse_float(lon_s, "longitude", *LON_RANGE, line_number),
        tz_offset_minutes=_parse_offset_minutes(off_s, line_number),
        utc_time=_parse_timestamp(time_s, line_number),
    )


def render_line(record: CheckinRecord) -> str:
    """Inverse of parse_line for valid records: the 8-field tab join with the
    timestamp in the dataset's textual layout (always +0000)."""
    t = record.utc_time.astimezone(timezone.utc)
    time_s = (f"{WEEKDAY_NAMES[t.weekday()]} {MONTH_NAMES[t.month - 1]} "
              f"{t.day:02d} {t:%H:%M:%S} +0000 {t.year}")
    return "\t".join((
        record.user_id,
        record.venue_id,
        record.venue_category_id,
        record.venue_category_name,
        repr(record.latitude),
        repr(record.longitude),
        str(record.tz_offset_minutes),
        time_s,
    ))


def _split_lines(text: str) -> list[str]:
    # Exactly LF / CRLF, never unicode line boundaries (latin-1 decoded bytes
    # such as 0x85 must stay inside fields).
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return [line[:-1] if line.endswith("\r") else line for line in lines]


_ERROR_CLASSES = {
    FieldCountError: "rejected_field_count",
    NumericRangeError: "rejected_numeric",
    TimestampError: "rejected_timestamp",
}


def parse_records(lines: list[str]) -> tuple[dict[str, UserHistory], IngestReport]:
    """Parse lines into per-user, time-sorted histories plus a tally report.

    Malformed lines are counted per error class and recorded in
    report.failures; they never abort the run.
    """
    report = IngestReport(total_lines=len(lines))
    grouped: dict[str, list[CheckinRecord]] = {}
    for i, line in enumerate(lines, start=1):
        try:
            record = parse_line(line, line_number=i)
        except IngestError as exc:
            attr = _ERROR_CLASSES[type(exc)]
            setattr(report, attr, getattr(report, attr) + 1)
            report.failures.append((i, type(exc).__name__, exc.reason))
            continue
        report.parsed += 1
        grouped.setdefault(record.user_id, []).append(record)
    histories = {
        user_id: UserHistory(user_id, sorted(records, key=lambda r: r.utc_time))
        for user_id, records in grouped.items()
    }
    return histories, report


def ingest_text(text: str) -> tuple[dict[str, UserHistory], IngestReport]:
    """Ingest TSV content already decoded to text (e.g. an upload body)."""
    return parse_records(_split_lines(text))


def ingest_file(path: str | os.PathLike) -> tuple[dict[str, UserHistory], IngestReport]:
    """Ingest a check-in file. IO errors propagate; malformed lines do not."""
    with open(path, "rb") as handle:
        text = handle.read().decode(INPUT_ENCODING, errors="replace")
    return ingest_text(text)


def merge_histories(base: UserHistory, extra: UserHistory) -> UserHistory:
    """Merge two histories of one user, re-sorting by time (stable: on ties,
    base records stay ahead of extra records)."""
    if base.user_id != extra.user_id:
        raise ValueError("cannot merge histories of different users")
    merged = sorted(base.records + extra.records, key=lambda r: r.utc_time)
    return UserHistory(base.user_id, merged)
