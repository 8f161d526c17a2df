"""Run the twice-odd census for several valences and write one JSON per valence.

    python3 scripts/run_census.py --out results/ --jobs 4
"""

import argparse
import json
import logging
import time
from pathlib import Path

from bicirc.census import CensusJob, search

DEFAULT_RUNS = [(6, 50), (7, 50), (8, 50), (9, 38), (10, 38)]


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", default="results")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--all-parities", action="store_true")
    args = p.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    summary = []
    for d, cap in DEFAULT_RUNS:
        t0 = time.perf_counter()
        res = search(CensusJob(d, cap, twice_odd=not args.all_parities, jobs=args.jobs))
        elapsed = time.perf_counter() - t0
        (out / f"census_d{d}_le{cap}.json").write_text(res.to_json())
        row = {"d": d, "max_order": cap, "seconds": round(elapsed, 1),
               "classes": [c["representative"] for c in res.classes], **res.counts["total"]}
        summary.append(row)
        print(json.dumps(row))
    (out / "summary.json").write_text(json.dumps(summary, indent=1))


if __name__ == "__main__":
    main()
