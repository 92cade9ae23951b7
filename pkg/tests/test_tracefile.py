"""Trace file format: round-trips, canonical bytes, malformed inputs."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from urbasis import (
    ExplicitReaches,
    LogLogGrowth,
    TraceFormatError,
    extend,
    initial_state,
    run_greedy,
    run_with_growth,
)
from urbasis.tracefile import parse, read_file, serialize, write_file


def explicit_trace(slack):
    """Build a trace from per-stage reach slack, collecting the reaches used."""
    s = initial_state()
    reaches = []
    for extra in slack:
        reaches.append(s.radius + extra)
        s = extend(s, reaches[-1])
    return run_with_growth(ExplicitReaches(tuple(reaches)), len(slack) + 1)


class TestRoundTrip:
    def test_greedy(self):
        trace = run_greedy(5)
        assert parse(serialize(trace)) == trace

    def test_slow_growth_mode_preserved(self, slow10):
        again = parse(serialize(slow10))
        assert again == slow10
        assert again.mode == "threshold:loglog,2,4,3"

    def test_single_stage(self):
        trace = run_greedy(1)
        assert parse(serialize(trace)) == trace

    def test_file_round_trip(self, tmp_path):
        trace = run_greedy(4)
        path = str(tmp_path / "t.trace")
        write_file(trace, path)
        assert read_file(path) == trace

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(0, 30), min_size=1, max_size=6))
    def test_any_explicit_trace(self, slack):
        trace = explicit_trace(slack)
        assert parse(serialize(trace)) == trace


class TestCanonicalBytes:
    def test_serialize_is_deterministic(self):
        trace = run_greedy(6)
        assert serialize(trace) == serialize(trace)

    def test_reserialize_after_parse_is_identical(self, slow10):
        text = serialize(slow10)
        assert serialize(parse(text)) == text

    def test_layout(self):
        lines = serialize(run_greedy(2)).splitlines()
        assert len(lines) == 3
        header = json.loads(lines[0])
        assert header == {"format": "urbasis-trace", "version": "1", "mode": "greedy"}
        row = json.loads(lines[2])
        assert row["k"] == 2
        assert row["elements"] == ["-4", "0", "1", "3"]
        assert (row["d"], row["b"], row["branch"]) == ("4", "2", "negative")
        assert "c" not in row  # final stage not yet extended

    def test_integers_travel_as_decimal_strings(self, slow10):
        row = json.loads(serialize(slow10).splitlines()[-1])
        assert isinstance(row["d"], str)
        assert len(row["d"]) > 1000  # slow-growth radii are huge
        assert int(row["d"]) == slow10.final.radius


class TestMalformed:
    def test_empty(self):
        with pytest.raises(TraceFormatError):
            parse("")

    def test_header_only(self):
        text = serialize(run_greedy(2)).splitlines()[0]
        with pytest.raises(TraceFormatError, match="no stages"):
            parse(text)

    def test_truncated_line(self):
        text = serialize(run_greedy(3))
        with pytest.raises(TraceFormatError, match="not valid JSON"):
            parse(text[:-30])

    def test_bad_header(self):
        with pytest.raises(TraceFormatError, match="header"):
            parse('{"format":"something-else","version":"1"}\n{"k":1}')

    def test_unknown_version(self):
        text = serialize(run_greedy(2)).replace('"version":"1"', '"version":"99"')
        with pytest.raises(TraceFormatError, match="version"):
            parse(text)

    def test_stage_gap(self):
        lines = serialize(run_greedy(3)).splitlines()
        with pytest.raises(TraceFormatError, match="1..K in order"):
            parse("\n".join([lines[0], lines[1], lines[3]]))

    def test_unsorted_elements(self):
        text = serialize(run_greedy(2)).replace('["-4","0","1","3"]', '["0","-4","1","3"]')
        with pytest.raises(TraceFormatError, match="strictly increasing"):
            parse(text)

    def test_non_decimal_field(self):
        text = serialize(run_greedy(2)).replace('"d":"4"', '"d":"four"')
        with pytest.raises(TraceFormatError, match="decimal"):
            parse(text)

    def test_numeric_instead_of_string(self):
        text = serialize(run_greedy(2)).replace('"d":"4"', '"d":4')
        with pytest.raises(TraceFormatError, match="decimal string"):
            parse(text)

    def test_bad_branch(self):
        text = serialize(run_greedy(2)).replace('"branch":"negative"', '"branch":"sideways"')
        with pytest.raises(TraceFormatError, match="branch"):
            parse(text)

    def test_missing_elements(self):
        with pytest.raises(TraceFormatError, match="elements"):
            parse('{"format":"urbasis-trace","version":"1","mode":""}\n'
                  '{"k":1,"d":"1","b":"1","branch":"negative"}')
