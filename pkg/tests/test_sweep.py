import json

import pytest

from rptc.sweep import CACHE_ENV, RowCache, SweepConfig, format_rows, run_sweep, sweep_rows
from rptc.zcl import gap_table


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(5, 4)
    with pytest.raises(ValueError):
        SweepConfig(1, 4, jobs=0)
    with pytest.raises(ValueError):
        SweepConfig(1, 4, s_max=1)
    assert list(SweepConfig(1, 4).s_range(7)) == [2]
    assert list(SweepConfig(1, 4).s_range(6)) == [2, 3, 4, 5, 6, 7]


def test_rows_agree_with_gap_table():
    rows = sweep_rows(SweepConfig(1, 20, s_max=4))
    for m in range(1, 21):
        got = [r["gap"] for r in rows if r["m"] == m]
        assert got == [g.gap for g in gap_table(m, 4)]


def test_output_independent_of_jobs():
    a = run_sweep(SweepConfig(1, 60, fmt="csv", jobs=1))
    b = run_sweep(SweepConfig(1, 60, fmt="csv", jobs=2))
    assert a == b
    assert a.splitlines()[0] == "m,s,zcl,gap,witness"


def test_jsonl_schema():
    text = run_sweep(SweepConfig(6, 6, s_max=3, fmt="jsonl"))
    recs = [json.loads(x) for x in text.splitlines()]
    assert recs == [
        {"m": 6, "s": 2, "zcl": 7, "gap": 5, "witness": [7]},
        {"m": 6, "s": 3, "zcl": 14, "gap": 4, "witness": [7, 7]},
    ]


def test_cache_reproduces_fresh_values(tmp_path):
    cfg = SweepConfig(1, 30, cache=str(tmp_path / "c.jsonl"))
    fresh = run_sweep(cfg)
    assert RowCache(cfg.cache_path()).rows
    assert run_sweep(cfg) == fresh
    assert run_sweep(SweepConfig(1, 30)) == fresh


def test_cache_env_and_corrupt_lines(tmp_path, monkeypatch, caplog):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    cfg = SweepConfig(1, 10)
    fresh = run_sweep(cfg)
    path = tmp_path / "sweep-cache.jsonl"
    lines = path.read_text().splitlines()
    lines[3] = lines[3][:10]
    lines.append('{"m": 2, "s": 2, "zcl": 99, "gap": 0, "witness": [], "version": "old"}')
    path.write_text("\n".join(lines) + "\n")
    with caplog.at_level("WARNING"):
        again = run_sweep(cfg)
    assert again == fresh
    assert "corrupt cache line 4" in caplog.text


def test_output_file(tmp_path):
    out = tmp_path / "rows.csv"
    text = run_sweep(SweepConfig(3, 4, fmt="csv", output=str(out)))
    assert out.read_text() == text
    with pytest.raises(ValueError):
        format_rows([], "xml")
