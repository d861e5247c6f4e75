#!/usr/bin/env python3
"""Export exact terms of the bundled integer/rational sequence families.

Writes one CSV per family, suitable for spot-checking against published
tables.
"""

from __future__ import annotations

import argparse
import pathlib
import sys
from fractions import Fraction

from binomsums import FamilyTag, bnk, classic_sequence, franel, moment


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="sequences")
    parser.add_argument("--count", type=int, default=16)
    args = parser.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    n_range = range(args.count)

    tables: dict[str, list[Fraction]] = {
        "catalan": [classic_sequence(FamilyTag.CATALAN, n) for n in n_range],
        "daehee": [classic_sequence(FamilyTag.DAEHEE, n) for n in n_range],
        "changhee": [classic_sequence(FamilyTag.CHANGHEE, n) for n in n_range],
        "central_binomial": [moment(0, 2, n) for n in n_range],
        "franel3": [franel(3, 0, n, Fraction(1)) for n in n_range],
        "franel4": [franel(4, 0, n, Fraction(1)) for n in n_range],
        "bnk_d1": [bnk(1, n) for n in n_range],
        "bnk_d2": [bnk(2, n) for n in n_range],
    }
    for name, values in tables.items():
        path = out / f"{name}.csv"
        with path.open("w") as fh:
            fh.write("n,value\n")
            for n, v in zip(n_range, values):
                fh.write(f"{n},{v}\n")
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
