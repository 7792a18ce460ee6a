from pathlib import Path

import pytest

from divmon import Monoid, enumerate_hypercubes, load_presentation, synthesize

DATA = Path(__file__).resolve().parent.parent / "data"

SAMPLES = {
    "divisibility": "xyz", "squares": "xyz", "cyclic": "xyz",
}


def data_file(name: str) -> str:
    return str(DATA / f"{name}.mon")


def build(name: str) -> Monoid:
    return Monoid(load_presentation(data_file(name)))


@pytest.fixture(scope="session")
def monoids():
    return {name: build(name) for name in ("divisibility", "squares", "cyclic", "free2", "trace2", "bad")}


@pytest.fixture(scope="session")
def tables(monoids):
    return {name: enumerate_hypercubes(monoids[name]) for name in ("divisibility", "squares", "cyclic",
                                                                   "free2", "trace2")}


@pytest.fixture(scope="session")
def machines(tables):
    return {name: synthesize(t) for name, t in tables.items()}


@pytest.fixture(params=["divisibility", "squares", "cyclic"])
def sample(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, detail = RESULTS[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {detail}")
