"""Graphs against hand-transcribed figure data in tests/golden."""

import pytest

from helpers import GOLDEN, edge_table, load_golden

FILES = sorted(p.name for p in GOLDEN.glob("*.json"))


def test_all_golden_files_present():
    assert len(FILES) == 12


@pytest.mark.parametrize("name", FILES)
def test_golden_graph(name):
    spec = load_golden(name)
    keys, built, golden = edge_table(spec)
    assert sorted(keys) == sorted(spec["vertices"])
    assert built == golden
