#!/usr/bin/env python3
"""Regenerate data/synthetic_checkins.tsv, the bundled check-in fixture.

Deterministic (fixed seed). One heavy routine-driven user stresses the
miner; the rest are light. A handful of malformed lines of each error
class keep the ingest report path honest. Prints the frozen counts the
acceptance suite asserts.
"""

from __future__ import annotations

import random
from datetime import datetime, timedelta, timezone
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "data" / "synthetic_checkins.tsv"

SEED = 20120403
HEAVY_USER = "7"
N_LIGHT_USERS = 59

WEEKDAYS = ("Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun")
MONTHS = ("Jan", "Feb", "Mar", "Apr", "May", "Jun",
          "Jul", "Aug", "Sep", "Oct", "Nov", "Dec")

CATEGORIES = [
    "Thai Restaurant", "thai restaurant", "Sushi Restaurant", "Pizza Place",
    "Burger Joint", "Café", "Coffee Shop", "coffee shop", "Crêperie",
    "Bakery", "Bar", "Pub", "Office", "Coworking Space", "Gym",
    "Gym / Fitness Center", "Park", "Playground", "Subway", "Bus Station",
    "Train Station", "Home (private)", "Apartment Building", "Grocery Store",
    "Deli / Bodega", "Drugstore", "Bookstore", "Clothing Store", "Movie Theater",
    "Museum", "Art Gallery", "Hospital", "School", "University",
]

# Weekday routine slots for the heavy user: (hour, candidate categories).
ROUTINE = [
    (8, ["Home (private)"]),
    (9, ["Coffee Shop", "Café", "coffee shop"]),
    (10, ["Office", "Coworking Space"]),
    (12, ["Thai Restaurant", "thai restaurant", "Sushi Restaurant", "Pizza Place"]),
    (14, ["Office", "Coworking Space"]),
    (18, ["Gym", "Gym / Fitness Center", "Park"]),
    (20, ["Home (private)", "Bar", "Grocery Store"]),
]


def fmt_time(utc: datetime) -> str:
    return (f"{WEEKDAYS[utc.weekday()]} {MONTHS[utc.month - 1]} "
            f"{utc.day:02d} {utc:%H:%M:%S} +0000 {utc.year}")


def make_line(rng: random.Random, user: str, category: str, utc: datetime,
              offset: int) -> str:
    venue = f"4b{rng.randrange(16 ** 10):010x}"
    cat_id = "" if rng.random() < 0.05 else f"4bf58dd8d48988d1{rng.randrange(256):02x}"
    lat = round(40.55 + rng.random() * 0.35, 8)
    lon = round(-74.05 + rng.random() * 0.30, 8)
    return "\t".join((user, venue, cat_id, category, repr(lat), repr(lon),
                      str(offset), fmt_time(utc)))


def heavy_user_lines(rng: random.Random) -> list[str]:
    lines = []
    day0 = datetime(2012, 4, 3, tzinfo=timezone.utc)
    for day_index in range(220):
        day = day0 + timedelta(days=day_index)
        offset = -240 if day.month in (4, 5, 6, 7, 8, 9, 10) else -300
        if day.weekday() < 5:
            slots = [s for s in ROUTINE if rng.random() > 0.15]
        else:
            hours = sorted(rng.sample(range(9, 23), rng.randint(3, 6)))
            slots = [(h, CATEGORIES) for h in hours]
        for hour, choices in slots:
            local = day.replace(hour=hour, minute=rng.randrange(60),
                                second=rng.randrange(60))
            utc = local - timedelta(minutes=offset)
            lines.append(make_line(rng, HEAVY_USER, rng.choice(choices), utc, offset))
    return lines


def light_user_lines(rng: random.Random) -> list[str]:
    lines = []
    day0 = datetime(2012, 4, 3, tzinfo=timezone.utc)
    for i in range(N_LIGHT_USERS):
        user = str(100 + i)
        for _ in range(rng.randint(20, 150)):
            utc = (day0 + timedelta(days=rng.randrange(210),
                                    hours=rng.randrange(24),
                                    minutes=rng.randrange(60),
                                    seconds=rng.randrange(60)))
            offset = rng.choice((-240, -300))
            lines.append(make_line(rng, user, rng.choice(CATEGORIES), utc, offset))
    return lines


MALFORMED = [
    # field count
    "only\tseven\tfields\there\t40.7\t-73.9\t-240",
    "1\t2\t3\t4\t40.7\t-73.9\t-240\tTue Apr 03 18:00:09 +0000 2012\textra",
    "",
    "no tabs at all",
    # numeric
    "9\tV1\tC1\tPark\t95.0\t-73.9\t-240\tTue Apr 03 18:00:09 +0000 2012",
    "9\tV1\tC1\tPark\t40.7\t-200.5\t-240\tTue Apr 03 18:00:09 +0000 2012",
    "9\tV1\tC1\tPark\t40.7\t-73.9\tabc\tTue Apr 03 18:00:09 +0000 2012",
    "9\tV1\tC1\tPark\tnan\t-73.9\t-240\tTue Apr 03 18:00:09 +0000 2012",
    # timestamp
    "9\tV1\tC1\tPark\t40.7\t-73.9\t-240\tFoo Apr 03 18:00:09 +0000 2012",
    "9\tV1\tC1\tPark\t40.7\t-73.9\t-240\tTue Apr 31 18:00:09 +0000 2012",
    "9\tV1\tC1\tPark\t40.7\t-73.9\t-240\tnot a time",
    "9\tV1\tC1\tPark\t40.7\t-73.9\t-240\tTue Apr 03 18:00:09 +0000 1899",
]


def main() -> None:
    rng = random.Random(SEED)
    lines = heavy_user_lines(rng) + light_user_lines(rng) + MALFORMED
    rng.shuffle(lines)
    OUT.write_text("\n".join(lines) + "\n", encoding="latin-1")
    print(f"wrote {OUT}")
    print(f"total_lines={len(lines)} parsed={len(lines) - len(MALFORMED)} "
          f"rejected={len(MALFORMED)}")


if __name__ == "__main__":
    main()
