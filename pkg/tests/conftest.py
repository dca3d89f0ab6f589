import random

import pytest

from linpoly.field import GF


@pytest.fixture(scope="session")
def f4():
    return GF(2, 2)


@pytest.fixture(scope="session")
def f16():
    return GF(2, 4)


@pytest.fixture(scope="session")
def f256():
    return GF(2, 8)


@pytest.fixture
def rng():
    return random.Random(1234)


def span(F, xs):
    """Every F_q-combination of xs (brute force, small cases only)."""
    out = {0}
    for x in xs:
        out = {F.add(v, F.mul(c, x)) for v in out for c in range(F.q)}
    return out


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
