"""Print the per-five-cycle cardinalities behind the A5/S5 checks."""

from bicirc.section5 import run_section5


def main():
    rep = run_section5()
    for row in rep["rows"]:
        detail = row.get("cardinalities") or row.get("witness")
        print(f"{row['claim']:17s} {row['variant']} {row['sigma']:12s} {detail} "
              f"{'ok' if row['pass'] else 'FAIL'}")
    for c in rep["claims"]:
        print(("PASS " if c["pass"] else "FAIL ") + c["claim"])


if __name__ == "__main__":
    main()
