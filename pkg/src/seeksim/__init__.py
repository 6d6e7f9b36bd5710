"""seeksim: disk-arm scheduling simulation and comparison."""

from .metrics import (
    EmptyScheduleError,
    MetricRow,
    average_seek,
    display,
    rotational_overhead,
    summarize,
    transfer_time,
)
from .model import (
    DiskGeometry,
    EmptyGeometryError,
    HeadState,
    Instance,
    InvalidModelError,
    OutOfRangeError,
    RequestQueue,
    Schedule,
    SchedulingError,
    SeekSummary,
    TransferModel,
    Visit,
    validate_instance,
)
from .report import (
    ALGORITHM_ORDER,
    CampaignFailure,
    CampaignSummary,
    ComparisonReport,
    HeadPathSeries,
    PUBLISHED_TABLES,
    emit,
    head_path_series,
    run_comparison,
    run_property_campaign,
    run_schedule,
)
from .schedulers import (
    OdsaPlan,
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
from .workload import (
    BENCHMARK_CASES,
    NegativeTrackError,
    ParseError,
    UnknownCaseError,
    WorkloadSpec,
    generate,
    parse_requests,
    reference_case,
    render_requests,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHM_ORDER",
    "BENCHMARK_CASES",
    "CampaignFailure",
    "CampaignSummary",
    "ComparisonReport",
    "DiskGeometry",
    "EmptyGeometryError",
    "EmptyScheduleError",
    "HeadPathSeries",
    "HeadState",
    "Instance",
    "InvalidModelError",
    "MetricRow",
    "OdsaPlan",
    "OutOfRangeError",
    "ParseError",
    "NegativeTrackError",
    "PUBLISHED_TABLES",
    "QueueTooLargeError",
    "RequestQueue",
    "Schedule",
    "SchedulingError",
    "SeekSummary",
    "TransferModel",
    "UnknownCaseError",
    "Visit",
    "WorkloadSpec",
    "average_seek",
    "brute_force_optimal",
    "display",
    "emit",
    "generate",
    "head_path_series",
    "parse_requests",
    "plan_odsa",
    "reference_case",
    "render_requests",
    "rotational_overhead",
    "run_comparison",
    "run_property_campaign",
    "run_schedule",
    "schedule_cscan",
    "schedule_fifo",
    "schedule_look",
    "schedule_odsa",
    "schedule_scan",
    "schedule_sstf",
    "summarize",
    "transfer_time",
    "validate_instance",
]
