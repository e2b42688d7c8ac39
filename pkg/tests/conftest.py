"""
Shared fixtures: settings and the small graphs most tests look at
"""
import pytest

from fibsetgraph.config import Settings
from fibsetgraph.generators.families import EdgeSemantics, gen_fib_sum_set_graph

ENV_VARS = (
    "FIBSET_MAX_N", "FIBSET_BUDGET", "FIBSET_HAMILTONIAN_MAX_N", "FIBSET_LOOP_MAX_N",
    "FIBSET_DOT_EDGE_CAP", "FIBSET_WORKERS", "FIBSET_LOG_LEVEL",
)


@pytest.fixture
def settings():
    return Settings(max_n=7, budget=2_000_000, hamiltonian_max_n=5, loop_max_n=16, workers=1)


@pytest.fixture(scope="session")
def strict3():
    return gen_fib_sum_set_graph(3, sem=EdgeSemantics.STRICT)


@pytest.fixture(scope="session")
def inclusive3():
    return gen_fib_sum_set_graph(3, sem=EdgeSemantics.INCLUSIVE)


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)

