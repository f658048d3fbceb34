"""``lab <experiment> --config <path>`` command-line entry point.

Exit codes: 0 success, 2 hypothesis-guard refusal, 3 budget exceeded,
4 malformed config.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from .errors import BudgetExceeded, GuardRefusal, LabError
from .harness import EXPERIMENTS, ReportRow, rows_to_csv, rows_to_json, run

EXIT_OK, EXIT_GUARD, EXIT_BUDGET, EXIT_CONFIG = 0, 2, 3, 4

log = logging.getLogger("sumprod")


def _dicts_to_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    if records:
        w = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow(
                {k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()}
            )
    return buf.getvalue()


def render(result, fmt: str) -> str:
    if result and isinstance(result[0], ReportRow):
        return rows_to_csv(result) if fmt == "csv" else rows_to_json(result) + "\n"
    if fmt == "csv":
        return _dicts_to_csv(result)
    return json.dumps(result, indent=2, sort_keys=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lab", description="Exact sum-product experiments.")
    p.add_argument("experiment", choices=EXPERIMENTS)
    p.add_argument("--config", required=True, type=Path, help="JSON config file")
    p.add_argument("--out", type=Path, help="output path (default: config 'output' or stdout)")
    p.add_argument("--format", choices=("csv", "json"), help="default: config 'format' or json")
    p.add_argument("--threads", type=int, default=1, help="worker processes")
    p.add_argument("--budget", type=int, help="tuple-enumeration budget override")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s"
    )
    try:
        config = json.loads(args.config.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        print(f"lab: cannot read config: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    if isinstance(config, dict):
        if args.budget is not None:
            config.setdefault("budgets", {})["tuples"] = args.budget
        out = args.out or (Path(config["output"]) if config.get("output") else None)
        fmt = args.format or config.get("format", "json")
    else:
        out, fmt = args.out, args.format or "json"

    try:
        result = run(args.experiment, config, workers=max(1, args.threads))
    except GuardRefusal as exc:
        print(f"lab: refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except BudgetExceeded as exc:
        print(f"lab: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (LabError, ValueError, KeyError, TypeError) as exc:
        print(f"lab: malformed config: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    text = render(result, fmt)
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)
        log.info("wrote %d rows to %s", len(result), out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
