"""Build the language automaton for each group config and export it.

Writes <name>.json and <name>.dot per group into the output directory.
"""

from __future__ import annotations

import argparse
import pathlib
import sys

from voracious import CoxeterSystem, WallGeometry, build_automaton, load_group_file


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--groups-dir", default="groups")
    ap.add_argument("--out-dir", default="automata")
    ap.add_argument("--cap", type=int, default=8, help="pivot length cap")
    ap.add_argument(
        "--only", nargs="*", default=None, help="group names (file stems) to run"
    )
    args = ap.parse_args()

    groups_dir = pathlib.Path(args.groups_dir)
    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    for path in sorted(groups_dir.glob("*.json")):
        name = path.stem
        if args.only is not None and name not in args.only:
            continue
        geometry = WallGeometry(CoxeterSystem(load_group_file(str(path))))
        aut = build_automaton(geometry, pivot_cap=args.cap)
        (out_dir / f"{name}.json").write_text(aut.to_json(), encoding="utf-8")
        (out_dir / f"{name}.dot").write_text(aut.to_dot(), encoding="utf-8")
        note = " (pivot cap saturated)" if aut.pivot_saturated else ""
        print(
            f"{name:<14} universe={len(aut.universe)} states={len(aut.states)} "
            f"edges={len(aut.edges)}{note}"
        )

    return 0


if __name__ == "__main__":
    sys.exit(main())
