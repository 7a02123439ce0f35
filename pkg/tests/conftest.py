import pytest

from cartan_forge.jet import JetSpace

CRITERIA = {
    1: "exterior calculus: d o d = 0 and d(C^p) in C^p on random forms",
    2: "Euler/IBP: Euler(d_h eta) = 0, IBP source term vs adjoint oracle, order independence",
    3: "Noether identity residual vanishes (corpus + random Lagrangians)",
    4: "correction form identity holds exactly (corpus + random Lagrangians)",
    5: "internal Lagrangians: restricted dl has contact degree >= 2",
    6: "action round trip certificates (a), (b), (c) on the corpus",
    7: "presymplectic cocycle check and the hand-derived wave form",
    8: "maxwell4d: non-zero presymplectic form (not hidden at representative level)",
    9: "determinism: byte-identical 'corpus all' reports",
}

_outcomes: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        ok = report.outcome == "passed"
        _outcomes[crit] = _outcomes.get(crit, True) and ok


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n not in _outcomes:
            continue
        verdict = "PASS" if _outcomes[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {verdict}  {CRITERIA[n]}")


@pytest.fixture
def xt():
    return JetSpace(("x", "t"), ("u",))


@pytest.fixture
def x1():
    return JetSpace(("x",), ("u",))
