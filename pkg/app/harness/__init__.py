from app.harness.apex import (
    ApexCover,
    ApexDecomposition,
    LevelCheck,
    apex_decomposition,
    apex_layout,
    apex_specs,
    level_mapping_check,
)
from app.harness.audit import AuditCase, default_corpus, run_audit, run_case
from app.harness.reports import (
    CLAIM_IDS,
    EXIT_DATA,
    EXIT_INCONCLUSIVE,
    EXIT_INTERNAL,
    EXIT_NO_INPUT,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VIOLATED,
    SCHEMA_VERSION,
    Status,
    VerificationReport,
    exit_code,
    reports_document,
    sort_reports,
    to_jsonable,
)
from app.harness.verifiers import (
    verify_even_cyc,
    verify_gir1,
    verify_join_identity,
    verify_join_theorems,
    verify_lemma2_1,
    verify_lemma2_2,
    verify_lemma9,
    verify_level,
    verify_prop1_1,
)

__all__ = [
    "ApexCover",
    "ApexDecomposition",
    "AuditCase",
    "CLAIM_IDS",
    "EXIT_DATA",
    "EXIT_INCONCLUSIVE",
    "EXIT_INTERNAL",
    "EXIT_NO_INPUT",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_VIOLATED",
    "LevelCheck",
    "SCHEMA_VERSION",
    "Status",
    "VerificationReport",
    "apex_decomposition",
    "apex_layout",
    "apex_specs",
    "default_corpus",
    "exit_code",
    "level_mapping_check",
    "reports_document",
    "run_audit",
    "run_case",
    "sort_reports",
    "to_jsonable",
    "verify_even_cyc",
    "verify_gir1",
    "verify_join_identity",
    "verify_join_theorems",
    "verify_lemma2_1",
    "verify_lemma2_2",
    "verify_lemma9",
    "verify_level",
    "verify_prop1_1",
]
