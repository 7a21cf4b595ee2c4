import sys

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from memqec.channel import ChannelParams
from memqec.codes import build_code
from memqec.pauli import PauliString

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def paulis(n):
    top = (1 << n) - 1
    return st.builds(
        PauliString, st.just(n), st.integers(0, top), st.integers(0, top)
    )


unit = st.floats(0.0, 1.0, allow_nan=False)


@st.composite
def alpha_triples(draw):
    raw = [draw(st.floats(0.0, 1.0)) for _ in range(3)]
    total = sum(raw)
    if total < 1e-6:
        return (1 / 3, 1 / 3, 1 / 3)
    return tuple(x / total for x in raw)


@st.composite
def channel_params(draw, symmetric=False):
    alphas = (1 / 3, 1 / 3, 1 / 3) if symmetric else draw(alpha_triples())
    return ChannelParams(draw(unit), draw(unit), alphas)


@pytest.fixture(scope="session")
def five():
    return build_code("five_qubit")


@pytest.fixture(scope="session")
def set1():
    return build_code("seven_qubit_set1")


@pytest.fixture(scope="session")
def set2():
    return build_code("seven_qubit_set2", allow_collisions=True)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "LINES", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
