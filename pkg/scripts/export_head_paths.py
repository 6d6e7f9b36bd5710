#!/usr/bin/env python3
"""Write plot-ready head-path series (one CSV per benchmark case).

Each file holds algorithm,step,track rows covering the full head itinerary,
preliminary sweep stops included, for all six algorithms.

Usage: python scripts/export_head_paths.py [--outdir OUT]
"""

import argparse
from pathlib import Path

from seeksim.model import validate_instance
from seeksim.report import emit, head_path_series
from seeksim.workload import reference_case


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="out", help="output directory (default ./out)")
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for case_id in (1, 2, 3):
        queue, head, geometry = reference_case(case_id)
        instance = validate_instance(queue, head, geometry)
        path = outdir / f"head_paths_case{case_id}.csv"
        path.write_text(emit(head_path_series(instance), "csv"), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
