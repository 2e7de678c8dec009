import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qwsearch.series import (
    RESOURCE_COLUMNS,
    ResourceSeries,
    SeriesFormatError,
    extrema_coincide,
    extremal_set,
    format_cell,
    parse_cell,
)

cells = st.one_of(
    st.none(),
    st.floats(allow_nan=False, allow_infinity=False, width=64),
    st.integers(-10**6, 10**6),
)


def test_format_cell():
    assert format_cell(None) == ""
    assert format_cell(True) == "true"
    assert format_cell(3) == "3"
    assert format_cell(0.1 + 0.2) == "0.3"
    assert format_cell(1 / 3) == "0.333333333333"
    assert format_cell(-0.0) == "0"
    assert format_cell(1.5e-20) == "1.5e-20"


@given(st.lists(st.tuples(cells, cells, cells), max_size=20))
def test_round_trip_bytes(rows):
    series = ResourceSeries(["t", "backend", "P", "C_l1", "flag"])
    for t, row in enumerate(rows):
        series.add(t=t, backend="closed", P=row[0], C_l1=row[1], flag=row[2] is None)
    text = series.to_csv()
    again = ResourceSeries.from_csv(text)
    assert again.to_csv() == text
    assert ResourceSeries.from_csv(again.to_csv()).to_csv() == text


def test_parsed_values_close_to_originals():
    series = ResourceSeries(list(RESOURCE_COLUMNS))
    series.add(t=0, backend="closed", P=math.pi / 10, MC=None)
    back = ResourceSeries.from_csv(series.to_csv())
    assert back.column("P")[0] == pytest.approx(math.pi / 10, rel=1e-11)
    assert back.column("MC") == [None]


def test_header_and_line_endings():
    series = ResourceSeries(list(RESOURCE_COLUMNS))
    series.add(t=1, backend="closed", P=0.5)
    text = series.to_csv()
    assert text.splitlines()[0] == ",".join(RESOURCE_COLUMNS)
    assert "\r" not in text and text.endswith("\n")
    assert text.splitlines()[1] == "1,closed,0.5,,,,,,,"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "t,P\n1,0.5,3\n",
        "t,P\n2,0.5\n1,0.5\n",
        "t,P\n1,0.5\n1,0.4\n",
        "t,P\nx,0.5\n",
        "P\n0.5\n",
        ",P\n1,2\n",
    ],
)
def test_malformed(text):
    with pytest.raises(SeriesFormatError):
        ResourceSeries.from_csv(text)


def test_backend_pairs_allowed():
    text = "t,backend,P\n0,closed,1\n0,full,1\n2,closed,0.5\n2,full,0.5\n"
    assert ResourceSeries.from_csv(text).to_csv() == text
    with pytest.raises(SeriesFormatError):
        ResourceSeries.from_csv("t,backend,P\n0,full,1\n0,closed,1\n")


def test_read_missing_file(tmp_path):
    with pytest.raises(SeriesFormatError):
        ResourceSeries.read(tmp_path / "nope.csv")


def test_add_unknown_column():
    with pytest.raises(KeyError):
        ResourceSeries(["t"]).add(t=0, P=1.0)


def test_parse_cell():
    assert parse_cell("") is None
    assert parse_cell("4") == 4
    assert parse_cell("0.25") == 0.25
    assert parse_cell("closed") == "closed"


def test_extremal_sets():
    steps = [0, 2, 4, 6, 8]
    p = [0.1, 0.5, 0.1, 0.1, 0.5]
    c = [0.9, 0.6, 0.6, 0.9, 0.6]
    assert extremal_set(steps, p, "max") == [2, 8]
    assert extremal_set(steps, c, "min") == [2, 4, 8]
    assert extrema_coincide(steps, p, c)
    assert not extrema_coincide(steps, [0, 1, 0, 0, 0], [1, 1, 0, 1, 1])
    assert extremal_set([], [], "max") == []
    with pytest.raises(ValueError):
        extremal_set(steps, p, "median")
