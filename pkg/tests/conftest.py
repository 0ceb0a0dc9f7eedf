"""Per-criterion pass/fail summary for the acceptance suite."""

import pytest

CRITERIA = {
    1: "alternating phi/psi sums match the case-split closed forms, n <= 8",
    2: "stable-subset formulas for beta(Q-bar), beta(R-bar) as characters, with homology cross-check",
    3: "derangement benchmark: homology dimension 2 (n=3) and 9 (n=4)",
    4: "type A gamma expansions to z-degree 8 and the n=4 tables",
    5: "type B xi/gamma expansions to z-degree 6, n=2 tables, x=0 specializations",
    6: "signed Rees product homology vs series, ideal homology identity",
    7: "K_n: h-polynomial, B_n^+ series, Stembridge sum, local gamma-positivity",
    8: "toric B_n gamma coefficients Schur-positive, B_n(t) dimension identity",
    9: "property suites: RSK, characters, ch_B, E*H(-z)=1, flag round trips",
}

_outcomes: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call" and not (call.when == "setup" and call.excinfo):
        return
    k = marker.args[0]
    ok = call.excinfo is None
    _outcomes[k] = _outcomes.get(k, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        if k in _outcomes:
            status = "PASS" if _outcomes[k] else "FAIL"
            terminalreporter.write_line(f"criterion {k}: {status}  {CRITERIA[k]}")
