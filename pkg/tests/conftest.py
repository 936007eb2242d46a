from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from homlie import fixtures as fx
from homlie.oracle import GenSpec, random_instance

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("long", max_examples=300, deadline=None)
settings.load_profile("default")


@pytest.fixture
def fixture_dir() -> Path:
    return FIXTURES


def named_algebras():
    """(label, algebra) for every small fixture, p = 2 unless noted."""
    return [
        ("nonab2", fx.nonab2()),
        ("nonab2/3", fx.nonab2(3)),
        ("ex34", fx.ex34()),
        ("heis3", fx.heis3()),
        ("heis3/3", fx.heis3(3)),
        ("nr3", fx.nr3()),
        ("ab1", fx.ab1()),
        ("g2", fx.g2()),
        ("sl2/3", fx.sl2(3)),
    ]


# -- strategies ----------------------------------------------------------------

SMALL = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2)]


@st.composite
def instances(draw, constructions=("yau-twist", "nilpotent", "direct-sum"), shapes=SMALL, with_p=False):
    """A generated (algebra, p-structure or None) pair."""
    p, dim = draw(st.sampled_from(shapes))
    construction = draw(st.sampled_from(constructions))
    if construction == "direct-sum" and dim < 2:
        construction = "yau-twist"
    seed = draw(st.integers(0, 10_000))
    L, P = random_instance(GenSpec(p, dim, seed, construction))
    return (L, P) if with_p else L


def restricted_instances(shapes=SMALL):
    """Restrictable generated instances with their canonical p-structure."""
    from homlie.restricted import is_restrictable

    def attach(L):
        cert = is_restrictable(L)
        return (L, cert.witness) if cert.decision else None

    return instances(shapes=shapes).map(attach).filter(lambda t: t is not None)


def vectors(p: int, n: int):
    return st.tuples(*[st.integers(0, p - 1) for _ in range(n)])


@pytest.fixture(scope="session")
def suite_report():
    """One full run of the property suite, shared by the manifest and
    acceptance tests (about 15 s)."""
    import time

    from homlie.suite import run

    t0 = time.perf_counter()
    report = run()
    return report, time.perf_counter() - t0


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
    missing = [n for n in range(1, 13) if n not in mod.RESULTS]
    for n in missing:
        terminalreporter.write_line(f"[FAIL] {n:2d}. not run")
