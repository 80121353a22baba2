import pytest

from p3count.bench import BENCH_COLUMNS, parse_n_range, run_bench
from p3count.errors import PreconditionError


def test_parse_n_range():
    assert parse_n_range("4..10") == (4, 10)
    assert parse_n_range("7") == (7, 7)


@pytest.mark.parametrize("text", ["a..b", "5..3", "0..2", "4.."])
def test_parse_n_range_errors(text):
    with pytest.raises(PreconditionError):
        parse_n_range(text)


def test_complete_family():
    frame = run_bench(families=["complete"], n_range=(3, 5), variants=["A"])
    assert list(frame.columns) == BENCH_COLUMNS
    assert list(frame["n"]) == [3, 4, 5]
    assert list(frame["colorings_enumerated"]) == [5, 6, 7]
    assert list(frame["noc"]) == ["5", "6", "7"]
    assert (frame["colorings_enumerated"] == frame["colorings_predicted"]).all()


def test_cycle_starts_at_three():
    frame = run_bench(families=["cycle"], n_range=(1, 4), variants=["B"])
    assert list(frame["n"]) == [3, 4]


def test_capped_runs_are_skipped():
    frame = run_bench(families=["path"], n_range=(20, 20), variants=["A"], cap=2)
    assert frame.empty
    assert list(frame.columns) == BENCH_COLUMNS


def test_default_run_is_deterministic():
    first = run_bench(n_range=(4, 6), seed=3)
    second = run_bench(n_range=(4, 6), seed=3)
    assert len(first) == 5 * 3 * 3
    assert first.drop(columns="wall_time_ms").equals(second.drop(columns="wall_time_ms"))


@pytest.mark.parametrize("kwargs", [{"families": ["lattice"]}, {"variants": ["D"]}])
def test_unknown_names(kwargs):
    with pytest.raises(PreconditionError):
        run_bench(n_range=(4, 4), **kwargs)
