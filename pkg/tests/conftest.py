import pytest
from hypothesis import HealthCheck, settings

from pathsets import Alphabet, PointedGraph
from pathsets.constructions import full_shift
from pathsets.corpus import gen_cycle, gen_golden, gen_prefix_example, oracle_prefixes, random_suite
from pathsets.graph_core import prune

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("fast", deadline=None, max_examples=10)
settings.load_profile("default")


def prefixes(p, n):
    """Brute-force prefix strings (joined) of a presentation."""
    return oracle_prefixes(prune(p), n).strings()


@pytest.fixture
def golden():
    return gen_golden()


@pytest.fixture
def cycle():
    return PointedGraph(gen_cycle(), 0)


@pytest.fixture
def z0():
    return gen_prefix_example(2, 0)


@pytest.fixture
def z1():
    return gen_prefix_example(2, 1)


@pytest.fixture
def full2():
    return full_shift(Alphabet.digits(2))


@pytest.fixture(scope="session")
def suite():
    return random_suite(200)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.line(n))
