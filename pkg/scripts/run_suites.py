#!/usr/bin/env python3
"""Run the whole verification battery at desk scale and print reports.

Boolean suites run exhaustively; tropical suites run seeded.  With
--json-dir the byte-stable JSON reports are also written to disk for
regression diffing.
"""

import argparse
import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from greenmat.cli import format_report
from greenmat.semiring import Semifield
from greenmat.verify import SuiteParams, run_suite

BATTERY = [
    ("t1", SuiteParams(semifield=Semifield.BOOLEAN, n=2)),
    ("t2", SuiteParams(semifield=Semifield.BOOLEAN, n=2)),
    ("corollaries", SuiteParams(semifield=Semifield.BOOLEAN, n=2)),
    ("h_theorem", SuiteParams(semifield=Semifield.BOOLEAN, n=2)),
    ("lemma_bg", SuiteParams(semifield=Semifield.BOOLEAN, n=2)),
    ("invertibles", SuiteParams(semifield=Semifield.BOOLEAN, n=2)),
    ("invertibles", SuiteParams(semifield=Semifield.BOOLEAN, n=3)),
    ("rank_j_monotone", SuiteParams(semifield=Semifield.BOOLEAN, n=2)),
    ("remark_2_6_regression", SuiteParams()),
]


def tropical_battery(seed: int, trials: int, monomial_pairs: int):
    yield "h_theorem", SuiteParams(
        semifield=Semifield.TROPICAL, n=2, seed=seed, trials=trials
    )
    yield "h_theorem", SuiteParams(
        semifield=Semifield.TROPICAL_INT, n=2, seed=seed, trials=trials
    )
    for n in (2, 3):
        yield "corollaries", SuiteParams(
            semifield=Semifield.TROPICAL, n=n, seed=seed, trials=trials,
            monomial_pairs=monomial_pairs,
        )
    yield "t1", SuiteParams(semifield=Semifield.BOOLEAN, n=3, seed=seed, trials=trials)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=42, help="seed for the randomized suites")
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--monomial-pairs", type=int, default=100)
    parser.add_argument("--json-dir", type=pathlib.Path, default=None)
    args = parser.parse_args()

    runs = list(BATTERY) + list(
        tropical_battery(args.seed, args.trials, args.monomial_pairs)
    )
    failures = 0
    for name, params in runs:
        report = run_suite(name, params)
        print(format_report(report, "text"))
        if not report.passed:
            failures += 1
        if args.json_dir is not None:
            args.json_dir.mkdir(parents=True, exist_ok=True)
            stem = f"{name}_{report.semifield}_n{report.n}_{report.mode}"
            path = args.json_dir / f"{stem}.json"
            path.write_text(json.dumps(report.to_json_dict(), indent=2) + "\n")
    print(f"{len(runs) - failures}/{len(runs)} suites passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
