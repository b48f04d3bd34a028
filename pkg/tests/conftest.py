import pytest
from hypothesis import HealthCheck, settings

from modwidth.gen import connected_atlas, random_corpus

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

_VERDICTS = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def atlas():
    """Every connected graph on 1..7 vertices, one per isomorphism class."""
    return connected_atlas(7)


@pytest.fixture(scope="session")
def random_graphs():
    """Seeded random corpus with n <= 9."""
    return random_corpus(500, 9, seed=20240601)


@pytest.fixture(scope="session")
def corpus(atlas, random_graphs):
    return atlas + random_graphs


@pytest.fixture
def verdict(request, capsys):
    """Record and print a PASS/FAIL line for an acceptance criterion."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'} {label}" + (f" ({detail})" if detail else "")
        request.config.stash.setdefault(_VERDICTS, []).append(line)
        with capsys.disabled():
            print(f"\n{line}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_VERDICTS, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
