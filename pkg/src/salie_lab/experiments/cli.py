"""Command-line front end: ``salie-lab <kind> [--config FILE] [overrides]``.

Exit codes: 0 success, 1 invariant failure, 2 spec error, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from ..errors import ResourceExceeded, SalieLabError, SpecParse
from .report import emit
from .runner import run
from .spec import KINDS, ExperimentSpec

log = logging.getLogger("salie_lab")

# flag -> spec key
OVERRIDES = {
    "q": "q", "a": "a", "b": "b", "lambda": "lambda", "shifts": "shifts",
    "M": "M", "N": "N", "P": "P", "U": "U", "V": "V", "J": "J", "hmax": "hmax",
    "seeds": "seeds", "cal_c": "cal_c", "cal_kappa": "cal_kappa", "seed": "seed",
    "out": "out", "format": "format", "budget": "budget",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="flat key = value spec file")
    for flag in ("q", "a", "b", "lambda", "M", "N", "P", "U", "V", "J", "hmax"):
        common.add_argument(f"--{flag}", dest=flag, help="comma-separated values (q^e allowed)")
    common.add_argument("--shifts", help="random:count:seed")
    common.add_argument("--seeds", help="weight draws per grid point")
    common.add_argument("--cal-c", dest="cal_c")
    common.add_argument("--cal-kappa", dest="cal_kappa")
    common.add_argument("--seed")
    common.add_argument("--out", help="output path, '-' for stdout")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--budget", help="maximum predicted term count")
    common.add_argument("--threads", type=int,
                        default=int(os.environ.get("SALIE_LAB_THREADS", "1")))
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="salie-lab",
        description="Run a Salie-sum experiment sweep and emit a CSV or JSON report.",
        epilog="exit codes: 0 ok, 1 invariant failure, 2 spec error, 3 budget refusal",
    )
    sub = parser.add_subparsers(dest="kind", required=True)
    for kind in KINDS:
        sub.add_parser(kind, parents=[common])
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        text = args.config.read_text() if args.config else ""
        overrides = {key: getattr(args, attr) for attr, key in OVERRIDES.items()}
        overrides["kind"] = args.kind
        spec = ExperimentSpec.from_text(text, overrides)
        report = run(spec, threads=args.threads)
        payload = emit(report, spec.format)
    except ResourceExceeded as exc:
        print(f"salie-lab: {exc}", file=sys.stderr)
        return 3
    except (SpecParse, OSError) as exc:
        print(f"salie-lab: {exc}", file=sys.stderr)
        return 2
    except SalieLabError as exc:
        print(f"salie-lab: {exc}", file=sys.stderr)
        return 2
    if spec.out == "-":
        sys.stdout.buffer.write(payload)
    else:
        Path(spec.out).write_bytes(payload)
        log.info("wrote %d records to %s", len(report.records), spec.out)
    if not report.ok:
        print("salie-lab: invariant check failed", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
