import json

import pytest

from reesgamma import verify as vf
from reesgamma.symfunc import VirtualCharacter, sym_s
from reesgamma.tpoly import T


def test_small_checks_pass():
    for report in (vf.check_lemma32(3), vf.check_main_theorem("boolean", 2, 2),
                   vf.check_prop43(1, 1), vf.check_toric(2), vf.check_Kn(2)):
        assert report.passed, report


@pytest.mark.parametrize("report", [
    vf.check_lemma32(9),
    vf.check_main_theorem("boolean", 5, 1),
    vf.check_main_theorem("signed", 2, 3),
    vf.check_main_theorem("nosuch", 1, 1),
    vf.check_prop46(4, 1),
    vf.check_Kn(5),
    vf.check_gessel(9),
], ids=lambda r: r.name)
def test_out_of_range_is_skipped(report):
    assert report.status == "skipped" and report.actual


def test_reports_are_deterministic():
    a = list(vf.run_suite("lemma32", n=4))
    b = list(vf.run_suite("lemma32", n=4))
    assert a == b
    assert [vf.render_json(r) for r in a] == [vf.render_json(r) for r in b]


def test_parallel_run_matches_serial():
    serial = list(vf.run_suite("main-theorem", n=2, jobs=1))
    parallel = list(vf.run_suite("main-theorem", n=2, jobs=2))
    assert serial == parallel


def test_json_key_order_and_timing():
    report = vf.check_lemma32(2)
    doc = json.loads(vf.render_json(report))
    assert list(doc) == ["suite", "name", "params", "status", "expected", "actual", "elapsed_ms"]
    assert doc["elapsed_ms"] is None
    assert isinstance(json.loads(vf.render_json(report, True))["elapsed_ms"], float)


def test_character_failure_names_the_class():
    run = vf._Run("demo", "demo", {})
    a = VirtualCharacter.trivial("S", 3)
    run.characters("trivial vs doubled", a, a * 2)
    report = run.report()
    assert report.failed
    assert "class" in report.expected and report.expected != report.actual


def test_symf_failure_names_shape_and_power():
    run = vf._Run("demo", "demo", {})
    run.symf("demo", 3, sym_s((2, 1)) * T, sym_s((2, 1)) * (T * T))
    run.eq("second", 1, 2)
    report = run.report()
    assert "n=3, lambda=(2,1), mu=(), t^1" in report.expected
    assert report.actual.endswith("(+1 more)")


def test_validate():
    vf.validate("all")
    vf.validate("kn", n=4)
    with pytest.raises(ValueError):
        vf.validate("kn", n=9)
    with pytest.raises(ValueError):
        vf.validate("gessel", t=1)
    with pytest.raises(ValueError):
        vf.validate("nosuch")


def test_suite_jobs_cover_every_suite():
    for suite in vf.SUITES:
        assert vf.suite_jobs(suite)
    with pytest.raises(KeyError):
        vf.suite_jobs("nosuch")


def test_default_jobs_env(monkeypatch):
    monkeypatch.setenv("REESGAMMA_JOBS", "3")
    assert vf.default_jobs() == 3
    monkeypatch.setenv("REESGAMMA_JOBS", "bad")
    assert vf.default_jobs() == 1


def test_markdown_rendering():
    text = vf.render_markdown([vf.check_lemma32(1)])
    assert text.splitlines()[0] == "| suite | name | status | expected | actual |"
    assert "| lemma32 | lemma32[n=1] | pass |" in text
