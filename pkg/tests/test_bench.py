import json

import pytest

from chipoly.bench import run_bench


def test_bench_small_dim_agreement():
    from chipoly.eulerchi import chi_polynomial

    report = run_bench(5, repetitions=2)
    assert report.dim == 5
    assert report.agreement is True
    by_name = {t.method: t for t in report.timings}
    assert set(by_name) == {"matrix", "recursive"}
    for t in by_name.values():
        assert len(t.seconds) == 2
        assert t.median_seconds is not None
        assert t.terms == len(chi_polynomial(None, 5))
    text = report.to_text()
    assert "identical polynomials" in text
    assert "dim=5" in text


def test_bench_single_method_no_comparison():
    report = run_bench(3, methods=("recursive",), repetitions=1)
    assert report.agreement is None
    assert "not comparable" in report.to_text()


def test_bench_dim_one():
    report = run_bench(1, repetitions=1)
    assert report.agreement is True
    assert all(t.terms == 2 for t in report.timings)


def test_bench_matrix_cutoff_skip():
    report = run_bench(17, methods=("matrix",), repetitions=1)
    timing = report.timings[0]
    assert timing.seconds == []
    assert timing.note and "skipped" in timing.note
    assert report.agreement is None


def test_bench_timeout_kills_matrix():
    # matrix at dim 12 needs seconds; recursive finishes well inside 1s
    report = run_bench(12, repetitions=1, timeout=1.0)
    by_name = {t.method: t for t in report.timings}
    assert by_name["matrix"].timed_out
    assert by_name["matrix"].median_seconds is None
    assert not by_name["recursive"].timed_out
    assert report.agreement is None
    assert "timed out" in report.to_text()


def test_bench_json_report():
    report = run_bench(4, repetitions=1)
    payload = json.loads(report.to_json())
    assert payload["dim"] == 4
    assert payload["agreement"] is True
    assert {m["method"] for m in payload["methods"]} == {"matrix", "recursive"}
    for m in payload["methods"]:
        assert m["median_seconds"] > 0
        assert m["timed_out"] is False


def test_bench_validation():
    with pytest.raises(ValueError):
        run_bench(3, repetitions=0)
    with pytest.raises(ValueError):
        run_bench(3, methods=("sideways",))
