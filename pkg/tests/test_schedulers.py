"""Golden results for the three bundled cases plus edge-case behavior.

Expected totals and orders were frozen from hand traces of each algorithm's
path and cross-checked against the exhaustive oracle where applicable.
"""

import pytest

from seeksim.model import DiskGeometry
from seeksim.schedulers import (
    QueueTooLargeError,
    brute_force_optimal,
    plan_odsa,
    schedule_cscan,
    schedule_fifo,
    schedule_look,
    schedule_odsa,
    schedule_scan,
    schedule_sstf,
)
from seeksim.workload import reference_case

GEOM = DiskGeometry()


def case(case_id):
    queue, head, _ = reference_case(case_id)
    return list(queue), head.position


# ---------------------------------------------------------------- FIFO

def test_fifo_case1():
    q, h = case(1)
    s = schedule_fifo(q, h)
    assert s.service_order == tuple(q)
    assert s.total_seek == 384
    assert s.step_seeks == (20, 15, 141, 19, 108, 16, 28, 37)


def test_fifo_case2():
    q, h = case(2)
    assert schedule_fifo(q, h).total_seek == 311


def test_fifo_case3():
    q, h = case(3)
    assert schedule_fifo(q, h).total_seek == 283


def test_fifo_single_request():
    assert schedule_fifo([100], 45).total_seek == 55


# ---------------------------------------------------------------- SSTF

def test_sstf_case1():
    s = schedule_sstf(*case(1))
    assert s.service_order == (46, 62, 74, 111, 151, 170, 25, 10)
    assert s.total_seek == 285


def test_sstf_case2():
    s = schedule_sstf(*case(2))
    assert s.service_order == (63, 75, 80, 116, 30, 24, 21, 16)
    assert s.total_seek == 156


def test_sstf_case3():
    s = schedule_sstf(*case(3))
    assert s.service_order == (110, 90, 64, 54, 40, 33, 25, 160)
    assert s.total_seek == 235


def test_sstf_tie_resolves_low_when_costs_equal():
    # both orders cost 30 (verified by the oracle below), so the tie falls
    # back to the lower track
    s = schedule_sstf([40, 60], 50)
    assert s.service_order == (40, 60)
    assert s.total_seek == 30
    assert brute_force_optimal([40, 60], 50).total_seek == 30


def test_sstf_tie_prefers_cheaper_continuation():
    # 50 -> 40 -> 60 -> 100 costs 70; 50 -> 60 -> 40 -> 100 costs 90
    s = schedule_sstf([40, 60, 100], 50)
    assert s.service_order == (40, 60, 100)
    assert s.total_seek == 70


def test_sstf_duplicates_serviced_consecutively():
    s = schedule_sstf([50, 50, 30], 40)
    assert s.service_order == (30, 50, 50)
    assert s.total_seek == 30


def test_sstf_request_at_head_goes_first():
    s = schedule_sstf([45, 45, 60], 45)
    assert s.service_order == (45, 45, 60)
    assert s.total_seek == 15


# ---------------------------------------------------------------- SCAN

def test_scan_case1_sweeps_up_to_disk_end():
    s = schedule_scan(*case(1), GEOM)
    assert s.service_order == (46, 62, 74, 111, 151, 170, 25, 10)
    assert s.preliminary_moves == (180,)
    assert s.head_path() == (45, 46, 62, 74, 111, 151, 170, 180, 25, 10)
    assert s.total_seek == 305


def test_scan_case2_sweeps_down():
    s = schedule_scan(*case(2), GEOM)
    assert s.preliminary_moves == (0,)
    assert s.service_order == (63, 30, 24, 21, 16, 75, 80, 116)
    assert s.total_seek == 182


def test_scan_case3():
    s = schedule_scan(*case(3), GEOM)
    assert s.total_seek == 285
    assert s.preliminary_moves == (0,)


def test_scan_request_at_physical_end_is_serviced_there():
    s = schedule_scan([50, 180], 45, GEOM)
    assert s.service_order == (50, 180)
    assert s.preliminary_moves == ()
    assert s.total_seek == 135


def test_scan_runs_to_end_even_with_nothing_behind():
    s = schedule_scan([50], 45, GEOM)
    assert s.preliminary_moves == (180,)
    assert s.total_seek == 135


# ---------------------------------------------------------------- C-SCAN

def test_cscan_case1_wrap_costs_full_width():
    s = schedule_cscan(*case(1), GEOM)
    assert s.service_order == (46, 62, 74, 111, 151, 170, 10, 25)
    assert s.preliminary_moves == (180, 0)
    assert s.step_seeks == (1, 16, 12, 37, 40, 19, 10, 180, 10, 15)
    assert s.total_seek == 340


def test_cscan_case2():
    s = schedule_cscan(*case(2), GEOM)
    assert s.service_order == (63, 30, 24, 21, 16, 116, 80, 75)
    assert s.preliminary_moves == (0, 180)
    assert s.total_seek == 351


def test_cscan_case3():
    s = schedule_cscan(*case(3), GEOM)
    assert s.total_seek == 325


def test_cscan_no_wrap_when_nothing_remains():
    s = schedule_cscan([50], 45, GEOM)
    assert s.preliminary_moves == (180,)
    assert s.total_seek == 135


def test_cscan_wrap_landing_on_requested_end_track():
    # direction ties 1v1, nearer extreme is 0 -> sweep down; wrap lands on a
    # serviced request at 180
    s = schedule_cscan([0, 180], 45, GEOM)
    assert s.service_order == (0, 180)
    assert s.preliminary_moves == ()
    assert s.total_seek == 225


# ---------------------------------------------------------------- LOOK

def test_look_case1():
    s = schedule_look(*case(1))
    assert s.service_order == (46, 62, 74, 111, 151, 170, 25, 10)
    assert s.preliminary_moves == ()
    assert s.total_seek == 285


def test_look_case2():
    s = schedule_look(*case(2))
    assert s.service_order == (63, 30, 24, 21, 16, 75, 80, 116)
    assert s.total_seek == 150


def test_look_case3():
    s = schedule_look(*case(3))
    assert s.service_order == (110, 90, 64, 54, 40, 33, 25, 160)
    assert s.total_seek == 235


def test_look_direction_majority_wins():
    # two below vs one above: sweep down first
    s = schedule_look([10, 20, 100], 50)
    assert s.service_order == (20, 10, 100)


def test_look_direction_tie_goes_to_nearer_extreme():
    # one each side; 60 is nearer than 10 -> up first
    s = schedule_look([10, 60], 50)
    assert s.service_order == (60, 10)
    assert s.total_seek == 60


def test_look_full_tie_sweeps_up():
    s = schedule_look([40, 60], 50)
    assert s.service_order == (60, 40)
    assert s.total_seek == 30


# ---------------------------------------------------------------- ODSA

def test_odsa_case1_jumps_to_nearer_low_extreme():
    s = schedule_odsa(*case(1))
    assert s.service_order == (10, 25, 46, 62, 74, 111, 151, 170)
    assert s.step_seeks == (35, 15, 21, 16, 12, 37, 40, 19)
    assert s.total_seek == 195
    assert s.preliminary_moves == ()


def test_odsa_case2_tie_starts_low():
    s = schedule_odsa(*case(2))
    assert s.service_order == (16, 21, 24, 30, 63, 75, 80, 116)
    assert s.total_seek == 150


def test_odsa_case3_jumps_high_and_sweeps_down():
    s = schedule_odsa(*case(3))
    assert s.service_order == (160, 110, 90, 64, 54, 40, 33, 25)
    assert s.total_seek == 170


def test_odsa_head_outside_span():
    # oracle over both permutations: [50,10] costs 90, [10,50] costs 130
    s = schedule_odsa([10, 50], 100)
    assert s.service_order == (50, 10)
    assert s.total_seek == 90
    assert brute_force_optimal([10, 50], 100).total_seek == 90


def test_odsa_plan_case1():
    p = plan_odsa([25, 10, 151, 170, 62, 46, 74, 111], 45)
    assert (p.lowest, p.highest) == (10, 170)
    assert p.initial_seek == 35
    assert p.start_end == "low"


def test_odsa_plan_tie_prefers_low_end():
    p = plan_odsa([16, 116], 66)
    assert p.initial_seek == 50
    assert p.start_end == "low"


# ------------------------------------------------------ exhaustive oracle

def test_oracle_matches_odsa_on_case1():
    q, h = case(1)
    assert brute_force_optimal(q, h).total_seek == 195


def test_oracle_single_request():
    s = brute_force_optimal([70], 45)
    assert s.total_seek == 25
    assert s.service_order == (70,)


def test_oracle_empty_queue():
    assert brute_force_optimal([], 45).total_seek == 0


def test_oracle_rejects_more_than_nine_requests():
    with pytest.raises(QueueTooLargeError):
        brute_force_optimal(list(range(10)), 45)


def test_oracle_accepts_nine_requests():
    s = brute_force_optimal(list(range(0, 90, 10)), 45)
    assert s.total_seek == 115  # min(|45-0|, |45-80|) + span


def test_oracle_tie_breaks_lexicographically():
    s = brute_force_optimal([40, 60], 50)
    assert s.service_order == (40, 60)


# ---------------------------------------------------------------- edges

@pytest.mark.parametrize(
    "run",
    [
        lambda: schedule_fifo([], 45),
        lambda: schedule_sstf([], 45),
        lambda: schedule_scan([], 45, GEOM),
        lambda: schedule_cscan([], 45, GEOM),
        lambda: schedule_look([], 45),
        lambda: schedule_odsa([], 45),
    ],
)
def test_empty_queue_gives_zero_seek_schedule(run):
    s = run()
    assert s.total_seek == 0
    assert s.service_order == ()
    assert s.preliminary_moves == ()


@pytest.mark.parametrize(
    "run",
    [
        lambda: schedule_sstf([45, 45], 45),
        lambda: schedule_scan([45, 45], 45, GEOM),
        lambda: schedule_cscan([45, 45], 45, GEOM),
        lambda: schedule_look([45, 45], 45),
        lambda: schedule_odsa([45, 45], 45),
    ],
)
def test_all_requests_at_head_cost_nothing(run):
    s = run()
    assert s.total_seek == 0
    assert s.service_order == (45, 45)
