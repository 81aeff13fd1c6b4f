import json

import numpy as np
import pytest

from hartley_bessel.errors import GridMismatch, InvalidConfig
from hartley_bessel.inequalities import InequalityReport
from hartley_bessel.quadrature import build_grid, make_test_function
from hartley_bessel.serialize import (
    REPORT_COLUMNS,
    format_report_csv,
    format_report_json,
    format_sampled,
    parse_sampled,
    read_sampled,
    write_sampled,
)


@pytest.fixture()
def sample_fn(small_grid):
    return make_test_function("gaussian", [1.0], small_grid)


def test_sampled_round_trip_is_bitwise(tmp_path, small_grid, sample_fn):
    path = tmp_path / "f.csv"
    write_sampled(path, sample_fn)
    fn, header = read_sampled(path, small_grid)
    np.testing.assert_array_equal(fn.values, sample_fn.values)
    assert header["scheme"] == small_grid.scheme
    assert int(header["n"]) == small_grid.size
    # writing the parsed function reproduces the file byte for byte
    assert format_sampled(fn) == path.read_text()


def test_spectral_kind_header(sample_fn):
    text = format_sampled(sample_fn, kind="spectral")
    assert text.splitlines()[0].endswith("kind=spectral")


def test_parse_sampled_rejects_malformed():
    with pytest.raises(InvalidConfig):
        parse_sampled("1.0,2.0\n")  # no header
    with pytest.raises(InvalidConfig):
        parse_sampled("# alpha=1 radius=12 n=1 bogus\n0,1\n")
    with pytest.raises(InvalidConfig):
        parse_sampled("# alpha=1 radius=12 n=1\n0,1\n")  # missing scheme
    with pytest.raises(InvalidConfig):
        parse_sampled(
            "# alpha=1 radius=12 n=2 scheme=trapezoid\n0,1\n"
        )  # row count mismatch
    with pytest.raises(InvalidConfig):
        parse_sampled(
            "# alpha=1 radius=12 n=1 scheme=trapezoid\n0,1,2\n"
        )  # bad row


def test_read_sampled_rejects_foreign_grid(tmp_path, small_grid, sample_fn):
    path = tmp_path / "f.csv"
    write_sampled(path, sample_fn)
    other = build_grid(1.0, 10.0, 40, 3)
    with pytest.raises(GridMismatch):
        read_sampled(path, other)


def _rows():
    return [
        InequalityReport(lhs=0.5, constant=2.0, rhs=1.0, ratio=0.5,
                         passed=True, p=1.5, q=1.5, r=1.5, prior_ratio=0.25,
                         witness_ids=("a", "b")),
        InequalityReport(lhs=2.0, constant=1.0, rhs=1.0, ratio=2.0,
                         passed=False, p=2.0, witness_ids=("c",)),
    ]


def test_report_csv_layout():
    text = format_report_csv(_rows())
    lines = text.splitlines()
    assert lines[0] == ",".join(REPORT_COLUMNS)
    assert len(lines) == 4  # header + 2 trials + summary
    assert lines[1].startswith("0,1.5,1.5,1.5,2,")
    assert lines[1].endswith(",a;b,1")
    assert lines[2].endswith(",c,0")
    assert lines[3].startswith("summary")
    assert lines[3].endswith(",0")  # one failed trial fails the run
    assert "2" in lines[3]  # max ratio


def test_report_json_structure():
    doc = json.loads(format_report_json(_rows(), {"suite": "young"}))
    assert doc["metadata"] == {"suite": "young"}
    assert doc["max_ratio"] == 2.0
    assert doc["all_pass"] is False
    assert len(doc["trials"]) == 2
    assert doc["trials"][0]["witness_ids"] == ["a", "b"]


def test_seventeen_digit_round_trip(tmp_path, small_grid):
    from hartley_bessel.quadrature import SampledFunction

    rng = np.random.default_rng(3)
    vals = rng.standard_normal(small_grid.size) * 10.0 ** rng.integers(
        -8, 8, small_grid.size
    )
    fn = SampledFunction(small_grid, vals)
    path = tmp_path / "r.csv"
    write_sampled(path, fn)
    back, _ = read_sampled(path, small_grid)
    np.testing.assert_array_equal(back.values, vals)
