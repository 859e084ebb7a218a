"""Tests for the verification registry and suite runner."""

import pytest

import gqlab.atlas
import gqlab.planes
import gqlab.quadrangle
from gqlab.checks import (
    COVERED_OPERATIONS,
    REGISTRY,
    UnknownCheckIdError,
    check_ids,
    run_suite,
    suite_to_dict,
)


def test_registry_ids_unique_and_well_formed():
    ids = check_ids()
    assert len(ids) == len(set(ids))
    for check_id in ids:
        section, _, name = check_id.partition(".")
        assert section in ("sec2", "sec3", "sec4", "sec5")
        assert name and name == name.lower()


def test_registry_in_section_order():
    sections = [check_id.split(".")[0] for check_id in check_ids()]
    assert sections == sorted(sections)


def test_full_suite_passes():
    suite = run_suite()
    assert suite.passed
    assert len(suite.reports) == len(REGISTRY)
    for report in suite.reports:
        assert report.passed, f"{report.check_id}: {report.actual}"
        assert report.elapsed >= 0.0


def test_reports_come_back_in_registry_order():
    suite = run_suite()
    assert [r.check_id for r in suite.reports] == list(check_ids())


def test_prefix_filter():
    suite = run_suite("sec3.")
    assert all(r.check_id.startswith("sec3.") for r in suite.reports)
    assert len(suite.reports) == 6
    single = run_suite("sec4.klein-quadric")
    assert len(single.reports) == 1


def test_unknown_prefix_raises():
    with pytest.raises(UnknownCheckIdError):
        run_suite("nonexistent.")


def test_registry_covers_domain_check_operations():
    # every *_check / *_survey operation in the domain modules must be wired
    # into the registry under its documented id
    found = {}
    for module in (gqlab.atlas, gqlab.planes, gqlab.quadrangle):
        for name, obj in vars(module).items():
            if callable(obj) and (name.endswith("_check") or name.endswith("_survey")):
                if obj.__module__ == module.__name__:
                    found[f"{module.__name__}.{name}"] = obj
    assert set(found) == set(COVERED_OPERATIONS)
    ids = set(check_ids())
    for qualname, check_id in COVERED_OPERATIONS.items():
        assert check_id in ids, f"{qualname} is not registered"


def test_domain_ops_report_their_registry_id():
    registry = dict(REGISTRY)
    for qualname, check_id in COVERED_OPERATIONS.items():
        fn = registry[check_id]
        report = fn()
        assert report.check_id == check_id


def test_suite_json_schema():
    payload = suite_to_dict(run_suite("sec2."))
    assert payload["schema"] == 1
    assert payload["passed"] is True
    for entry in payload["checks"]:
        assert set(entry) == {"id", "description", "expected", "actual", "pass", "elapsed_ms"}
