import random
from datetime import datetime, timezone

import pytest
from helpers import MALFORMED_CASES, random_record, tsv_line

from mobility_miner import (
    FieldCountError,
    IngestError,
    NumericRangeError,
    TimestampError,
    UserHistory,
    ingest_file,
    ingest_text,
    merge_histories,
    parse_line,
    render_line,
)


def test_parse_line_dataset_layout():
    line = "470\tV49\tCatID\tThai Restaurant\t40.7\t-73.9\t-240\tTue Apr 03 18:00:09 +0000 2012"
    record = parse_line(line)
    assert record.user_id == "470"
    assert record.venue_id == "V49"
    assert record.venue_category_id == "CatID"
    assert record.venue_category_name == "Thai Restaurant"
    assert record.latitude == 40.7
    assert record.longitude == -73.9
    assert record.tz_offset_minutes == -240
    assert record.utc_time == datetime(2012, 4, 3, 18, 0, 9, tzinfo=timezone.utc)


def test_parse_line_trims_category_name():
    record = parse_line(tsv_line(cat="  Thai Restaurant  "))
    assert record.venue_category_name == "Thai Restaurant"


def test_parse_line_accepts_iso_timestamps():
    for stamp in ("2012-04-03T18:00:09Z", "2012-04-03T18:00:09+00:00",
                  "2012-04-03 18:00:09"):
        record = parse_line(tsv_line(time=stamp))
        assert record.utc_time == datetime(2012, 4, 3, 18, 0, 9, tzinfo=timezone.utc)


def test_parse_line_iso_with_offset_converts_to_utc():
    record = parse_line(tsv_line(time="2012-04-03T14:00:09-04:00"))
    assert record.utc_time == datetime(2012, 4, 3, 18, 0, 9, tzinfo=timezone.utc)


def test_field_count_error_carries_line_number():
    with pytest.raises(FieldCountError) as excinfo:
        parse_line("only\tthree\tfields", line_number=17)
    assert excinfo.value.line_number == 17
    assert "17" in str(excinfo.value)


def test_latitude_out_of_range():
    with pytest.raises(NumericRangeError):
        parse_line(tsv_line(lat="91.0"))


@pytest.mark.parametrize("line,expected", MALFORMED_CASES)
def test_malformed_line_corpus(line, expected):
    with pytest.raises(expected):
        parse_line(line)


def test_error_classes_are_ingest_errors():
    for cls in (FieldCountError, NumericRangeError, TimestampError):
        assert issubclass(cls, IngestError)


def test_ingest_groups_by_user_and_sorts_by_time(tmp_path):
    lines = [
        tsv_line(user="u1", venue="v2", time="Tue Apr 03 19:00:00 +0000 2012"),
        tsv_line(user="u2", venue="v3", time="Wed Apr 04 08:00:00 +0000 2012"),
        tsv_line(user="u1", venue="v1", time="Tue Apr 03 08:00:00 +0000 2012"),
    ]
    path = tmp_path / "three.tsv"
    path.write_text("\n".join(lines) + "\n")
    histories, report = ingest_file(path)
    assert report.total_lines == 3 and report.parsed == 3
    assert set(histories) == {"u1", "u2"}
    assert [r.venue_id for r in histories["u1"].records] == ["v1", "v2"]


def test_ingest_empty_file(tmp_path):
    path = tmp_path / "empty.tsv"
    path.write_text("")
    histories, report = ingest_file(path)
    assert histories == {}
    assert report.total_lines == 0 and report.parsed == 0 and report.rejected == 0


def test_ingest_crlf_lines():
    text = tsv_line(user="a") + "\r\n" + tsv_line(user="b") + "\r\n"
    histories, report = ingest_text(text)
    assert report.parsed == 2
    assert set(histories) == {"a", "b"}


def test_ingest_latin1_bytes(tmp_path):
    # 0xE9 is é; 0x85 must stay inside the field, not split the line.
    line = tsv_line(cat="Caf\xe9 Zi\x85g").encode("latin-1")
    path = tmp_path / "latin.tsv"
    path.write_bytes(line + b"\n")
    histories, report = ingest_file(path)
    assert report.total_lines == 1 and report.parsed == 1
    (record,) = histories["470"].records
    assert record.venue_category_name == "Caf\xe9 Zi\x85g"


def test_malformed_lines_counted_not_fatal():
    lines = [tsv_line(), "", tsv_line(lat="99"), tsv_line(time="nope"), tsv_line()]
    histories, report = ingest_text("\n".join(lines))
    assert report.total_lines == 5
    assert report.parsed == 2
    assert report.to_dict()["rejected"] == {"field_count": 1, "numeric": 1,
                                            "timestamp": 1}
    assert report.total_lines == report.parsed + report.rejected
    assert [f[0] for f in report.failures] == [2, 3, 4]


def test_report_json_schema():
    _, report = ingest_text(tsv_line() + "\n")
    assert report.to_dict() == {
        "total_lines": 1,
        "parsed": 1,
        "rejected": {"field_count": 0, "numeric": 0, "timestamp": 0},
    }


def test_duplicate_lines_kept_as_distinct_events():
    text = tsv_line() + "\n" + tsv_line() + "\n"
    histories, report = ingest_text(text)
    assert report.parsed == 2
    assert len(histories["470"].records) == 2


def test_time_ties_keep_input_order():
    stamp = "Tue Apr 03 18:00:09 +0000 2012"
    text = "\n".join([tsv_line(venue="first", time=stamp),
                      tsv_line(venue="second", time=stamp)])
    histories, _ = ingest_text(text)
    assert [r.venue_id for r in histories["470"].records] == ["first", "second"]


def test_render_parse_round_trip_sampled():
    rng = random.Random(7)
    for _ in range(100):
        record = random_record(rng)
        assert parse_line(render_line(record)) == record


def test_record_count_conservation():
    rng = random.Random(11)
    lines = [render_line(random_record(rng)) for _ in range(60)]
    histories, report = ingest_text("\n".join(lines))
    assert sum(len(h.records) for h in histories.values()) == report.parsed


def test_merge_histories_resorts_and_keeps_tie_order():
    base_record = parse_line(tsv_line(venue="old", time="Tue Apr 03 18:00:09 +0000 2012"))
    late = parse_line(tsv_line(venue="late", time="Tue Apr 03 19:00:00 +0000 2012"))
    tie = parse_line(tsv_line(venue="tie", time="Tue Apr 03 18:00:09 +0000 2012"))
    merged = merge_histories(UserHistory("470", [base_record, late]),
                             UserHistory("470", [tie]))
    assert [r.venue_id for r in merged.records] == ["old", "tie", "late"]


def test_merge_histories_rejects_user_mismatch():
    a = UserHistory("a", [])
    b = UserHistory("b", [])
    with pytest.raises(ValueError):
        merge_histories(a, b)
