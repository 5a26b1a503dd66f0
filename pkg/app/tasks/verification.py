"""Celery task running one audit case on a worker."""
from typing import Any

from app.chromatic import PolynomialMemo
from app.config import Budgets, active_faults, disable_faults, enable_fault
from app.errors import HypothesisError
from app.harness.audit import AuditCase, run_case
from app.tasks.celery_app import celery_app
from app.utils.logging import logger


@celery_app.task(name="run_verification")
def run_verification(case: dict[str, Any], budgets: dict[str, int], faults: list[str]) -> list[dict]:
    """Reports for one case as json dicts; an unmet precondition yields no report."""
    audit_case = AuditCase.from_dict(case)
    # faults travel with the task so workers audit the same build variant
    previous = active_faults()
    disable_faults()
    for name in faults:
        enable_fault(name)
    try:
        reports = run_case(audit_case, Budgets(**budgets), PolynomialMemo())
    except HypothesisError as exc:
        logger.info("Skipping %s on %s: %s", audit_case.verifier, audit_case.instance, exc)
        return []
    except Exception as exc:
        logger.error("Error verifying %s on %s: %s", audit_case.verifier, audit_case.instance, exc, exc_info=True)
        raise
    finally:
        disable_faults()
        for name in previous:
            enable_fault(name)
    return [report.to_dict() for report in reports]
