import pytest

from seeksim.model import (
    DiskGeometry,
    EmptyGeometryError,
    HeadState,
    InvalidModelError,
    OutOfRangeError,
    RequestQueue,
    Schedule,
    TransferModel,
    Visit,
    validate_instance,
)

CASE1_QUEUE = [25, 10, 151, 170, 62, 46, 74, 111]


def test_default_geometry_bounds():
    g = DiskGeometry()
    assert (g.min_track, g.max_track, g.width) == (0, 180, 180)
    assert g.contains(0) and g.contains(180) and not g.contains(181)


@pytest.mark.parametrize("lo,hi", [(5, 5), (10, 3)])
def test_geometry_rejects_empty_range(lo, hi):
    with pytest.raises(EmptyGeometryError):
        DiskGeometry(lo, hi)


def test_transfer_model_defaults():
    m = TransferModel()
    assert (m.bytes_to_transfer, m.bytes_per_track, m.rotation_speed) == (30000, 32256, 120.0)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"bytes_to_transfer": 0},
        {"bytes_per_track": -1},
        {"rotation_speed": 0},
    ],
)
def test_transfer_model_rejects_nonpositive(kwargs):
    with pytest.raises(InvalidModelError):
        TransferModel(**kwargs)


def test_validate_case1_instance():
    inst = validate_instance(CASE1_QUEUE, 45)
    assert list(inst.queue) == CASE1_QUEUE
    assert inst.head == HeadState(45)
    assert inst.geometry == DiskGeometry()


def test_validate_accepts_empty_queue():
    inst = validate_instance([], 45)
    assert len(inst.queue) == 0


def test_validate_rejects_track_past_bound_by_one():
    with pytest.raises(OutOfRangeError) as err:
        validate_instance([181], 45)
    assert err.value.offending == (181,)


def test_validate_reports_every_offender():
    with pytest.raises(OutOfRangeError) as err:
        validate_instance([181, 50, 999], 200)
    assert err.value.offending == (181, 999, 200)


def test_validate_is_idempotent():
    inst = validate_instance(CASE1_QUEUE, 45)
    again = validate_instance(inst.queue, inst.head, inst.geometry)
    assert again == inst


def test_queue_preserves_arrival_order_and_duplicates():
    q = RequestQueue([5, 5, 3])
    assert list(q) == [5, 5, 3]
    assert len(q) == 3
    assert q[0] == 5


def test_schedule_derives_fields_from_visits():
    s = Schedule("SCAN", 45, (Visit(50), Visit(180, serviced=False), Visit(20)))
    assert s.service_order == (50, 20)
    assert s.preliminary_moves == (180,)
    assert s.head_path() == (45, 50, 180, 20)
    assert s.step_seeks == (5, 130, 160)
    assert s.total_seek == 295


def test_schedule_empty():
    s = Schedule("FIFO", 45, ())
    assert s.total_seek == 0
    assert s.head_path() == (45,)


def test_value_types_are_immutable():
    g = DiskGeometry()
    with pytest.raises(AttributeError):
        g.min_track = 5
    s = Schedule("FIFO", 0, (Visit(3),))
    with pytest.raises(AttributeError):
        s.total_seek = 99
