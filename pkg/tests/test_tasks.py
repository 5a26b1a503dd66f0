"""Audit cases dispatched through Celery in eager mode."""
import pytest

from app.config import Budgets, active_faults, enable_fault
from app.harness import AuditCase, reports_document, run_audit
from app.tasks.celery_app import celery_app
from app.tasks.verification import run_verification


@pytest.fixture(autouse=True)
def eager():
    celery_app.conf.task_always_eager = True
    yield
    celery_app.conf.task_always_eager = False


CASES = [
    AuditCase("gir1", "cycle:2:4"),
    AuditCase("join", "cycle:2:3", {"p": 1, "k_range": [1, 4]}),
    AuditCase("evencyc", "cycle:2:4", {"edge": 0}),
]


def test_distributed_audit_matches_local():
    local = reports_document(run_audit(CASES))
    distributed = reports_document(run_audit(CASES, distributed=True))
    assert distributed == local


def test_faults_travel_with_the_task():
    enable_fault("cwd-exponent")
    (report,) = run_audit([AuditCase("gir1", "cycle:3:4")], distributed=True)
    assert report.status == "violated"
    assert active_faults() == ("cwd-exponent",)


def test_task_restores_caller_faults():
    enable_fault("cwd-exponent")
    result = run_verification.apply(args=(CASES[0].to_dict(), Budgets().to_dict(), []))
    assert result.get()[0]["status"] == "verified"
    assert active_faults() == ("cwd-exponent",)


def test_unmet_precondition_yields_no_reports():
    case = AuditCase("gir1", "file:data/mixed.hg").to_dict()
    assert run_verification.apply(args=(case, Budgets().to_dict(), [])).get() == []
