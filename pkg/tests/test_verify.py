import io
import json

import pytest

from fibsetgraph.config import Settings
from fibsetgraph.errors import DomainError
from fibsetgraph.generators.families import EdgeSemantics
from fibsetgraph.numseq.sequences import SequenceKind
from fibsetgraph.verify.claims import REGISTRY, ClaimStatus
from fibsetgraph.verify.suite import ClaimReport, check_prop_2_9, deviations, run_suite, write_report_lines

CLAIM_IDS = [
    "ORDER_SIZE_CHAIN", "THM_2_1", "COR_2_2", "COR_2_3", "LEM_2_4", "THM_2_5", "THM_2_6",
    "THM_2_7", "COR_2_8", "PROP_2_9", "PROP_2_9_PROOF_VALUES", "FIG_2_GOLDEN",
    "CHI_FIB_SUM", "POPPED_NOT_BIPARTITE", "DOUBLING",
]


def _find(reports, claim_id, n, sem):
    return next(r for r in reports if (r.claim_id, r.n, r.semantics) == (claim_id, n, EdgeSemantics(sem)))


@pytest.fixture(scope="module")
def reports():
    return run_suite(range(1, 6), budgets=Settings())


def test_registry_order():
    assert [claim.claim_id for claim in REGISTRY] == CLAIM_IDS


def test_suite_has_no_deviations(reports):
    assert deviations(reports) == []
    assert len(reports) == len(CLAIM_IDS) * 5 * 2


def test_reports_are_ordered_by_claim_n_semantics(reports):
    keys = [(CLAIM_IDS.index(r.claim_id), r.n, r.semantics is EdgeSemantics.INCLUSIVE) for r in reports]
    assert keys == sorted(keys)


def test_every_failure_names_a_witness(reports):
    for report in reports:
        if report.status is ClaimStatus.FAIL:
            assert report.witness


def test_even_degrees_split_by_semantics(reports):
    assert _find(reports, "THM_2_7", 3, "strict").status is ClaimStatus.PASS
    inclusive = _find(reports, "THM_2_7", 3, "inclusive")
    assert inclusive.status is ClaimStatus.FAIL
    assert inclusive.witness == "v_{1,1} degree 7"
    assert not inclusive.expected
    assert _find(reports, "COR_2_8", 3, "inclusive").status is ClaimStatus.FAIL


@pytest.mark.parametrize("claim_id", [
    "ORDER_SIZE_CHAIN", "THM_2_1", "COR_2_2", "COR_2_3", "LEM_2_4", "THM_2_5", "THM_2_6",
    "POPPED_NOT_BIPARTITE", "DOUBLING", "CHI_FIB_SUM",
])
def test_claims_holding_under_both_semantics(reports, claim_id):
    for report in reports:
        if report.claim_id == claim_id:
            assert report.status in (ClaimStatus.PASS, ClaimStatus.NOT_APPLICABLE), report


def test_trivial_instance_has_no_failures(reports):
    assert all(r.status is not ClaimStatus.FAIL for r in reports if r.n == 1)


def test_golden_and_proof_values(reports):
    assert _find(reports, "FIG_2_GOLDEN", 3, "inclusive").status is ClaimStatus.PASS
    assert _find(reports, "FIG_2_GOLDEN", 4, "inclusive").status is ClaimStatus.NOT_APPLICABLE
    for n in (2, 3):
        assert _find(reports, "PROP_2_9_PROOF_VALUES", n, "inclusive").status is ClaimStatus.PASS
    values = _find(reports, "PROP_2_9_PROOF_VALUES", 3, "inclusive").details
    assert values["eps_sum"] == 15 and values["vertex_deleted_size"] == 13


def test_hamiltonian_details(reports):
    report = _find(reports, "COR_2_3", 3, "strict")
    assert report.details["cycle_length"] == 7
    assert report.details["odd_cycle"] is True


def test_order_size_chain_records_both_readings(reports):
    details = _find(reports, "ORDER_SIZE_CHAIN", 3, "inclusive").details
    assert details["sum_graph_edges"] == 2
    assert details["set_graph_edges"] == 15
    assert details["total_reading"] == 38
    assert details["popped_reading"] == 19


def test_popped_size_bound_small_n():
    for n in (2, 3):
        for sem in EdgeSemantics:
            assert check_prop_2_9(n, sem, Settings()).status is ClaimStatus.PASS


def test_popped_size_bound_fails_from_four():
    report = check_prop_2_9(4, EdgeSemantics.STRICT, Settings())
    assert report.status is ClaimStatus.FAIL
    assert report.witness == "92 > 14 + 42"
    assert report.details["popped_size"] == 92
    assert not report.expected
    assert not report.deviates


STRUCTURAL_CLAIMS = ["LEM_2_4", "THM_2_1", "COR_2_2", "THM_2_7", "COR_2_8"]


def test_structural_claims_hold_up_to_seven():
    reports = run_suite(range(1, 8), [EdgeSemantics.STRICT], Settings(max_n=7), claims=STRUCTURAL_CLAIMS)
    assert len(reports) == len(STRUCTURAL_CLAIMS) * 7
    assert all(r.status is ClaimStatus.PASS for r in reports)
    assert {r.n for r in reports if r.claim_id == "LEM_2_4"} == set(range(1, 8))


def test_caps_turn_into_skips():
    reports = run_suite([4], [EdgeSemantics.STRICT], Settings(max_n=3, hamiltonian_max_n=3))
    assert _find(reports, "THM_2_1", 4, "strict").status is ClaimStatus.SKIPPED_BUDGET
    assert _find(reports, "COR_2_3", 4, "strict").status is ClaimStatus.SKIPPED_BUDGET
    assert _find(reports, "THM_2_5", 4, "strict").status is ClaimStatus.PASS


def test_exhausted_solver_is_a_skip():
    reports = run_suite([4], [EdgeSemantics.STRICT], Settings(budget=1), claims=["COR_2_3"])
    assert [r.status for r in reports] == [ClaimStatus.SKIPPED_BUDGET]


def test_lucas_run_is_record_only():
    reports = run_suite(range(1, 4), budgets=Settings(), sequence=SequenceKind.LUCAS)
    assert not any(r.expected for r in reports)
    assert _find(reports, "THM_2_5", 3, "strict").status is ClaimStatus.NOT_APPLICABLE
    assert all(r.details["note"] for r in reports)


def test_worker_threads_do_not_change_results():
    single = run_suite(range(1, 5), budgets=Settings(workers=1))
    threaded = run_suite(range(1, 5), budgets=Settings(workers=3))
    assert single == threaded


def test_runtime_excluded_from_equality():
    a = ClaimReport("THM_2_1", 2, EdgeSemantics.STRICT, ClaimStatus.PASS, runtime=1.0)
    b = ClaimReport("THM_2_1", 2, EdgeSemantics.STRICT, ClaimStatus.PASS, runtime=2.0)
    assert a == b


def test_report_lines_are_json(reports):
    stream = io.StringIO()
    write_report_lines(reports[:3], stream)
    records = [json.loads(line) for line in stream.getvalue().splitlines()]
    assert [r["claim"] for r in records] == ["ORDER_SIZE_CHAIN"] * 3
    assert {"n", "semantics", "status", "witness", "expected_pass", "details"} <= set(records[0])


def test_bad_arguments():
    with pytest.raises(DomainError):
        run_suite([0], budgets=Settings())
    with pytest.raises(DomainError):
        run_suite([1], budgets=Settings(), claims=["NOPE"])
    with pytest.raises(DomainError):
        run_suite([1], [], Settings())
