"""Shared builders, random generators, and the malformed-line corpus."""

from __future__ import annotations

import random
import string
from datetime import date, datetime, timedelta, timezone
from pathlib import Path

from mobility_miner import (
    CheckinRecord,
    FieldCountError,
    NumericRangeError,
    TimestampError,
    VisitSequence,
)

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXTURE_TSV = REPO_ROOT / "data" / "synthetic_checkins.tsv"


def make_sequences(item_lists, user_id="u"):
    day0 = date(2012, 4, 3)
    return [VisitSequence(user_id, day0 + timedelta(days=i), tuple(items))
            for i, items in enumerate(item_lists)]


def tsv_line(user="470", venue="v1", cat_id="c1", cat="Park",
             lat="40.7", lon="-73.9", off="-240",
             time="Tue Apr 03 18:00:09 +0000 2012"):
    return "\t".join((user, venue, cat_id, cat, lat, lon, off, time))


_ID_CHARS = string.ascii_letters + string.digits
_CATEGORY_WORDS = [
    "Thai", "Restaurant", "Café", "Bar", "Gym", "Park", "Crêperie",
    "Bäckerei", "Office", "Museum", "Sushi", "Pizza", "Deli", "Ñoño",
]


def random_record(rng: random.Random) -> CheckinRecord:
    """A valid record; rendering then parsing it must give it back exactly."""
    category = " ".join(rng.sample(_CATEGORY_WORDS, rng.randint(1, 3)))
    epoch_lo = int(datetime(1990, 1, 2, tzinfo=timezone.utc).timestamp())
    epoch_hi = int(datetime(2100, 12, 30, tzinfo=timezone.utc).timestamp())
    moment = datetime.fromtimestamp(rng.randint(epoch_lo, epoch_hi), tz=timezone.utc)
    return CheckinRecord(
        user_id="".join(rng.choices(_ID_CHARS, k=rng.randint(1, 8))),
        venue_id="".join(rng.choices(_ID_CHARS, k=rng.randint(1, 12))),
        venue_category_id=rng.choice(["", "4bf58dd8d48988d1" + "%02x" % rng.randrange(256)]),
        venue_category_name=category,
        latitude=rng.uniform(-90.0, 90.0),
        longitude=rng.uniform(-180.0, 180.0),
        tz_offset_minutes=rng.randint(-840, 840),
        utc_time=moment,
    )


def random_valid_line(rng: random.Random, user_pool=None) -> str:
    from dataclasses import replace

    from mobility_miner import render_line

    record = random_record(rng)
    if user_pool is not None:
        record = replace(record, user_id=rng.choice(user_pool))
    return render_line(record)


# (line, expected error class), with intentionally broad coverage per class.
MALFORMED_CASES = [
    ("", FieldCountError),
    ("no tabs at all", FieldCountError),
    ("a\tb", FieldCountError),
    ("only\tseven\tfields\there\t40.7\t-73.9\t-240", FieldCountError),
    (tsv_line() + "\textra", FieldCountError),
    (tsv_line(user=""), FieldCountError),
    (tsv_line(venue=""), FieldCountError),
    (tsv_line(cat="   "), FieldCountError),
    (tsv_line(lat="91.0"), NumericRangeError),
    (tsv_line(lat="-90.0001"), NumericRangeError),
    (tsv_line(lon="181"), NumericRangeError),
    (tsv_line(lon="-200.5"), NumericRangeError),
    (tsv_line(lat="abc"), NumericRangeError),
    (tsv_line(lat="nan"), NumericRangeError),
    (tsv_line(lon="inf"), NumericRangeError),
    (tsv_line(off="abc"), NumericRangeError),
    (tsv_line(off="900"), NumericRangeError),
    (tsv_line(off="-900"), NumericRangeError),
    (tsv_line(off="12.5"), NumericRangeError),
    (tsv_line(time="Foo Apr 03 18:00:09 +0000 2012"), TimestampError),
    (tsv_line(time="Tue Pix 03 18:00:09 +0000 2012"), TimestampError),
    (tsv_line(time="Tue Apr 31 18:00:09 +0000 2012"), TimestampError),
    (tsv_line(time="Tue Apr 03 25:00:09 +0000 2012"), TimestampError),
    (tsv_line(time="Tue Apr 03 18:00:09 0000 2012"), TimestampError),
    (tsv_line(time="not a time"), TimestampError),
    (tsv_line(time="Tue Apr 03 18:00:09 +0000 1899"), TimestampError),
    (tsv_line(time="Tue Apr 03 18:00:09 +0000 2101"), TimestampError),
]
