from __future__ import annotations

import json

import pytest

from forestcalc.qo import antichain, chain
from forestcalc.terms import parse_term

ACCEPTANCE_LINES: list = []


@pytest.fixture
def anti2():
    return antichain(["a", "b"])


@pytest.fixture
def chain2():
    return chain(["a", "b"])


@pytest.fixture
def parse(anti2):
    return lambda text: parse_term(text, anti2)


@pytest.fixture
def qo_files(tmp_path):
    anti = tmp_path / "anti2.qo"
    anti.write_text(json.dumps({"labels": ["a", "b"], "leq": []}), encoding="utf-8")
    ch = tmp_path / "chain2.qo"
    ch.write_text(json.dumps({"labels": ["a", "b"], "leq": [["a", "b"]]}), encoding="utf-8")
    return {"anti2": anti, "chain2": ch}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
