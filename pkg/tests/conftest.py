import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("jwq", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("jwq")

_acceptanceKey = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Recorder for acceptance lines: acceptance(label, failures)."""
    lines = request.config.stash.setdefault(_acceptanceKey, [])

    def record(label, failures):
        line = "%s: %s" % (label, "PASS" if not failures else "FAIL " + ", ".join(failures))
        lines.append(line)
        print(line)
        return not failures

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_acceptanceKey, [])
    if lines:
        terminalreporter.section("acceptance")
        for line in lines:
            terminalreporter.write_line(line)
