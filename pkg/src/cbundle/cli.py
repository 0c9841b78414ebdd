"""``cbundle`` command line: run a JSON config or a shipped preset.

Exit codes: 0 success, 2 hypothesis violation, 1 error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import CbundleError
from .workbench import emit_config, load_preset, parse_config, preset_names, report_csv, run


def _add_run_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, help="override experiment.seed")
    p.add_argument("--out", type=Path, help="write the JSON report here (default: stdout)")
    p.add_argument("--csv", type=Path, help="write per-sample orbit rows here")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cbundle", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)
    p_run = sub.add_parser("run", help="run a JSON configuration")
    p_run.add_argument("config", type=Path)
    _add_run_options(p_run)
    p_pre = sub.add_parser("preset", help="run a shipped preset")
    p_pre.add_argument("name", nargs="?", help="one of: " + ", ".join(preset_names()))
    p_pre.add_argument("--list", action="store_true", help="list presets and exit")
    p_pre.add_argument("--show", action="store_true", help="print the preset config and exit")
    _add_run_options(p_pre)
    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.cmd == "run":
            cfg = parse_config(args.config.read_text())
        else:
            if args.list or not args.name:
                print("\n".join(preset_names()))
                return 0
            cfg = load_preset(args.name)
            if args.show:
                sys.stdout.write(emit_config(cfg))
                return 0
    except (CbundleError, KeyError, OSError) as exc:
        print(f"cbundle: {exc}", file=sys.stderr)
        return 1
    if args.seed is not None:
        cfg = cfg.with_seed(args.seed)
    report = run(cfg)
    if args.out:
        args.out.write_text(report.to_json())
        sys.stdout.write(report.to_text())
    else:
        sys.stdout.write(report.to_json())
    if args.csv:
        rows = report_csv(report)
        if rows is None:
            print("cbundle: no orbit experiment ran; CSV not written", file=sys.stderr)
        else:
            args.csv.write_text(rows)
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
