"""Command-line front end.

Every run writes one JSON envelope to stdout (or CSV rows for ``classify
--format csv``); diagnostics go to stderr. Exit codes:

    0  success / all checks pass
    1  a verification found a counterexample
    2  usage or parameter error
    3  internal invariant breach (overflow, divisibility failure, ...)
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from typing import Sequence

from . import divisors as dv
from . import quadform as qf
from . import series as ps
from . import verifier as vf
from .params import FineParams, InvariantError, Level, ParameterError

SCHEMA_VERSION = "1"
N_MAX_CAP = 10**6
FORMAT_ENV = "FINEFORMS_FORMAT"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

log = logging.getLogger("fineforms")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse from exiting on its own
        raise UsageError(message)


def _n_max(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    if value > N_MAX_CAP:
        raise argparse.ArgumentTypeError(f"refusing n-max {value} > {N_MAX_CAP}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fineforms", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pr(cmd, required=True):
        cmd.add_argument("--p", type=int, required=required)
        cmd.add_argument("--r", type=int, required=required)

    cmd = sub.add_parser("expand", help="coefficients of the Fine product")
    pr(cmd)
    cmd.add_argument("--n-max", type=_n_max, required=True)
    cmd.add_argument("--squared", action="store_true", help="q^r times the square")

    cmd = sub.add_parser("divisor-seq", help="divisor-side coefficient sequence")
    pr(cmd)
    cmd.add_argument("--n-max", type=_n_max, required=True)
    cmd.add_argument("--identity", choices=("fine1", "fine2"), required=True)

    cmd = sub.add_parser("represent", help="cone representations of n")
    pr(cmd)
    cmd.add_argument("--n", type=int, required=True)

    cmd = sub.add_parser("classify", help="balanced/positive/negative per n")
    pr(cmd)
    cmd.add_argument("--n-max", type=_n_max, required=True)
    cmd.add_argument(
        "--format", choices=("json", "csv"), default=os.environ.get(FORMAT_ENV, "json")
    )

    cmd = sub.add_parser("verify", help="check one identity")
    pr(cmd, required=False)
    cmd.add_argument("--identity", choices=vf.IDENTITIES, required=True)
    cmd.add_argument("--n-max", type=_n_max, required=True)

    cmd = sub.add_parser("sweep", help="all identities over all valid (p, r)")
    cmd.add_argument("--p-max", type=int, required=True)
    cmd.add_argument("--n-max", type=_n_max, required=True)
    return parser


def _params(args, level: Level) -> FineParams:
    params = FineParams(args.p, args.r)
    params.require(level)
    return params


def _expand(args) -> tuple[dict, str]:
    params = FineParams(args.p, args.r)
    series = ps.fine_product(params, args.n_max)
    if args.squared:
        series = ps.shifted_square(series, params.r)
    return {"start": 0, "coefficients": series.to_list()}, "ok"


def _divisor_seq(args) -> tuple[dict, str]:
    if args.identity == "fine1":
        params = _params(args, Level.STRONG)
        return {"start": 0, "coefficients": dv.fine1_sequence(params, args.n_max)}, "ok"
    params = _params(args, Level.WEAK)
    if args.n_max < 1:
        raise ParameterError("fine2 starts at n = 1; need --n-max >= 1")
    return {"start": 1, "coefficients": dv.fine2_sequence(params, args.n_max)[1:]}, "ok"


def _represent(args) -> tuple[dict, str]:
    params = FineParams(args.p, args.r)
    if args.n < 0:
        raise ParameterError(f"n must be >= 0, got {args.n}")
    reps = qf.representations(params, args.n)
    parity = qf.parity_counts(params, args.n)
    data = {
        "representations": [{"k": x.k, "l": x.l, "sign": x.sign} for x in reps],
        "even": parity.even,
        "odd": parity.odd,
        "signed": parity.signed,
    }
    return data, "ok"


def _classify_rows(args) -> list[dict]:
    params = _params(args, Level.STRONG)
    return [vf.classify(params, n).as_dict() for n in range(args.n_max + 1)]


def _verify(args) -> tuple[dict, str]:
    params = None
    if args.identity != "andrews":
        if args.p is None or args.r is None:
            raise ParameterError(f"--identity {args.identity} needs --p and --r")
        params = FineParams(args.p, args.r)
    report = vf.verify(args.identity, params, args.n_max)
    return report.as_dict(), "ok" if report.passed else "fail"


def _sweep(args) -> tuple[dict, str]:
    if args.p_max < 2:
        raise ParameterError(f"--p-max must be >= 2, got {args.p_max}")
    reports = vf.sweep(args.p_max, args.n_max)
    failed = sorted(key for key, rep in reports.items() if not rep.passed)
    data = {
        "cells": {key: rep.as_dict() for key, rep in sorted(reports.items())},
        "cell_count": len(reports),
        "failed_cells": failed,
    }
    return data, "fail" if failed else "ok"


HANDLERS = {
    "expand": _expand,
    "divisor-seq": _divisor_seq,
    "represent": _represent,
    "verify": _verify,
    "sweep": _sweep,
}


def _emit(command: str, params: dict, data, status: str, out) -> None:
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "data": data,
        "status": status,
    }
    json.dump(envelope, out, indent=1)
    out.write("\n")


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    command = argv[0] if argv else ""
    echo: dict = {"argv": argv}
    try:
        args = build_parser().parse_args(argv)
        echo = {k: v for k, v in vars(args).items() if k != "command"}
        if args.command == "classify":
            rows = _classify_rows(args)
            if args.format == "csv":
                writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
                writer.writeheader()
                writer.writerows(rows)
            else:
                _emit(command, echo, rows, "ok", out)
            return EXIT_OK
        data, status = HANDLERS[args.command](args)
    except (UsageError, ParameterError) as exc:
        log.error("%s", exc)
        _emit(command, echo, {"message": str(exc)}, "error", out)
        return EXIT_USAGE
    except (InvariantError, OverflowError) as exc:
        log.error("internal invariant breach: %s", exc)
        _emit(command, echo, {"message": str(exc)}, "error", out)
        return EXIT_INTERNAL
    except Exception as exc:  # every termination path maps to an exit code
        log.exception("unexpected failure")
        _emit(command, echo, {"message": repr(exc)}, "error", out)
        return EXIT_INTERNAL
    _emit(command, echo, data, status, out)
    return EXIT_OK if status == "ok" else EXIT_FAIL


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
