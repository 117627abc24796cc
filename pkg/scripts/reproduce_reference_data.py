#!/usr/bin/env python3
"""Regenerate the published tables and figure data into ./out.

Equivalent to running the CLI three times; kept as a one-shot script so the
full reproduction is a single command.
"""

import pathlib
import sys

from nfftlab.cli import main

OUT = pathlib.Path("out")


def run():
    OUT.mkdir(exist_ok=True)
    rc = 0
    rc |= main(["table1", "--out", str(OUT / "table1.csv")])
    rc |= main(["table2", "--out", str(OUT / "table2.csv")])
    rc |= main(["figure71", "--out", str(OUT / "figure71.csv")])
    print(f"wrote {OUT}/table1.csv, table2.csv, figure71.csv (+ _ref companion)")
    return rc


if __name__ == "__main__":
    sys.exit(run())
