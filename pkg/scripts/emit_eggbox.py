#!/usr/bin/env python3
"""Emit egg-box diagrams of the boolean matrix monoids M_n(B), n <= 3."""

import argparse
import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from greenmat.eggbox import eggbox, eggbox_to_dot, eggbox_to_json


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[1, 2, 3])
    parser.add_argument("--format", default="dot", choices=["dot", "json"])
    parser.add_argument(
        "--out-dir", type=pathlib.Path, default=None,
        help="write files instead of printing to stdout",
    )
    args = parser.parse_args()

    for n in args.n:
        box = eggbox(n)
        text = (
            eggbox_to_dot(box)
            if args.format == "dot"
            else json.dumps(eggbox_to_json(box), indent=2) + "\n"
        )
        summary = (
            f"n={n}: {len(box.d_classes)} D-classes, "
            f"{sum(len(d.h_classes) for d in box.d_classes)} H-classes, "
            f"{sum(d.size for d in box.d_classes)} matrices"
        )
        if args.out_dir is None:
            print(text, end="")
            print(f"// {summary}" if args.format == "dot" else f"# {summary}")
        else:
            args.out_dir.mkdir(parents=True, exist_ok=True)
            path = args.out_dir / f"eggbox_n{n}.{args.format}"
            path.write_text(text)
            print(f"{path}: {summary}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
