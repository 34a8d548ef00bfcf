"""Run the verification suite over a directory of group configs.

Writes one JSON report per group and prints a summary table.  Exits
nonzero if any check fails.
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

from voracious import CoxeterSystem, Verifier, VerifierConfig, WallGeometry, load_group_file


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--groups-dir", default="groups")
    ap.add_argument("--out-dir", default="reports")
    ap.add_argument("--radius", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument(
        "--only", nargs="*", default=None, help="group names (file stems) to run"
    )
    args = ap.parse_args()

    groups_dir = pathlib.Path(args.groups_dir)
    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    failed = []
    for path in sorted(groups_dir.glob("*.json")):
        name = path.stem
        if args.only is not None and name not in args.only:
            continue
        t0 = time.perf_counter()
        geometry = WallGeometry(CoxeterSystem(load_group_file(str(path))))
        config = VerifierConfig(radius=args.radius, seed=args.seed)
        report = Verifier(geometry, config).run_suite()
        elapsed = time.perf_counter() - t0
        out_path = out_dir / f"{name}.report.json"
        out_path.write_text(report.to_json(), encoding="utf-8")
        c = report.constants
        status = "pass" if report.passed else "FAIL"
        print(
            f"{name:<14} {status:<5} C_hat={c.C_hat} N_hat={c.N_hat} "
            f"Q_hat={c.Q_hat} ft_ii={c.ft_ii_max} ft_iii={c.ft_iii_max} "
            f"({elapsed:.2f}s) -> {out_path}"
        )
        for check in report.checks:
            if check.status != "pass":
                print(f"    {check.name}: {check.status}")
        for warning in report.warnings:
            print(f"    warning: {warning}")
        if not report.passed:
            failed.append(name)

    if failed:
        print(f"failed: {', '.join(failed)}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
