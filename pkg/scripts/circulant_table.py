"""Case table for every connected arc-transitive circulant up to a given order.

    python3 scripts/circulant_table.py --max-n 30 > circulants.csv
"""

import argparse
import sys
from collections import Counter

from bicirc.circulant import exhaustive_case_coverage


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=30)
    args = p.parse_args()
    rep = exhaustive_case_coverage(args.max_n, bound=max(30, args.max_n))
    sys.stdout.write(rep.to_csv())
    tally = Counter(k for r in rep.rows for k in set(r.kinds))
    print(f"{len(rep.rows)} circulants, unclassified {len(rep.unclassified)}, "
          f"cases {dict(sorted(tally.items()))}", file=sys.stderr)


if __name__ == "__main__":
    main()
