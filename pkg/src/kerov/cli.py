"""``kerov`` command line: exact verification suites and Monte Carlo experiments.

Exit codes: 0 pass, 1 identity violation, 2 resource bound exceeded, 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from kerov import clt, moments, verify, walk
from kerov.errors import DisconnectedGraphError, DomainError, ResourceBoundError
from kerov.growth import sample_path
from kerov.measures import as_alpha, jack_distribution
from kerov.partitions import format_partition
from kerov.report import FAIL, fraction_str
from kerov.symfunc import theta_table

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_RESOURCE = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    subcommand: str
    max_n: int | None = None
    bound: int = verify.DEFAULT_SUITE_BOUND
    alphas: list[Fraction] = field(default_factory=list)
    n_values: list[int] = field(default_factory=list)
    r_values: list[int] = field(default_factory=list)
    samples: int | None = None
    seed: int = 0
    delta: float = 1.0
    out: str | None = None
    report: str | None = None
    threads: int | None = None
    eta: str | None = None
    eta_file: str | None = None


def _alpha_list(text: str) -> list[Fraction]:
    try:
        return [as_alpha(t.strip()) for t in text.split(",") if t.strip()]
    except DomainError as exc:
        raise UsageError(f"bad alpha list {text!r}: {exc}") from exc


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad {what} list {text!r}") from exc


def _config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(args.command, seed=getattr(args, "seed", 0), threads=getattr(args, "threads", None))
    if cfg.threads is not None and cfg.threads < 1:
        raise UsageError("--threads must be positive")
    if hasattr(args, "alpha"):
        cfg.alphas = _alpha_list(args.alpha)
        if not cfg.alphas:
            raise UsageError("--alpha is empty")
    if args.command == "verify":
        if args.max_n < 0:
            raise UsageError("--max-n must be nonnegative")
        if args.bound < 0:
            raise UsageError("--bound must be nonnegative")
        cfg.max_n, cfg.bound, cfg.report = args.max_n, args.bound, args.report
    elif args.command == "clt":
        if len(cfg.alphas) != 1:
            raise UsageError("clt takes a single alpha")
        cfg.n_values = _int_list(args.n, "n")
        if not cfg.n_values or min(cfg.n_values) < 2:
            raise UsageError("--n needs sizes >= 2")
        if args.samples < clt.MIN_SAMPLES:
            raise UsageError(f"--samples must be at least {clt.MIN_SAMPLES}")
        if args.delta <= 0:
            raise UsageError("--delta must be positive")
        cfg.samples, cfg.delta, cfg.out, cfg.report = args.samples, args.delta, args.out, args.summary
    elif args.command == "moments":
        cfg.n_values = _int_list(args.n, "n")
        cfg.r_values = _int_list(args.r, "r")
        if any(n < 0 for n in cfg.n_values) or any(r < 1 for r in cfg.r_values):
            raise UsageError("need n >= 0 and r >= 1")
        cfg.out = args.out
    elif args.command == "walk":
        if args.n < 1:
            raise UsageError("--n must be positive")
        if args.eta == "file" and not args.eta_file:
            raise UsageError("--eta file needs --eta-file")
        cfg.n_values, cfg.eta, cfg.eta_file, cfg.report = [args.n], args.eta, args.eta_file, args.report
    elif args.command in ("sample", "theta", "measure"):
        if args.n < 0 or (args.command == "sample" and args.n < 1):
            raise UsageError("--n out of range")
        if len(cfg.alphas) != 1:
            raise UsageError(f"{args.command} takes a single alpha")
        cfg.n_values, cfg.out = [args.n], args.out
    return cfg


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", newline="", encoding="utf-8"), True


def _write_json(obj, path: str | None) -> None:
    handle, close = _open_out(path)
    try:
        json.dump(obj, handle, indent=2, ensure_ascii=False)
        handle.write("\n")
    finally:
        if close:
            handle.close()


def _write_csv(header: list[str], rows: list[list], path: str | None) -> None:
    handle, close = _open_out(path)
    try:
        writer = csv.writer(handle, lineterminator="\r\n")
        writer.writerow(header)
        writer.writerows(rows)
    finally:
        if close:
            handle.close()


def cmd_verify(cfg: RunConfig) -> int:
    result = verify.run_suite(cfg.max_n, cfg.alphas, bound=cfg.bound)
    report = result.to_dict()
    report["max_n"] = cfg.max_n
    report["alphas"] = [fraction_str(a) for a in cfg.alphas]
    _write_json(report, cfg.report)
    if result.resource_error:
        print(f"resource bound: {result.resource_error}", file=sys.stderr)
    return result.exit_code


def _float(x: float) -> str:
    return repr(float(x))


def cmd_clt(cfg: RunConfig) -> int:
    exp = clt.run_clt(cfg.n_values, cfg.alphas[0], cfg.samples, cfg.seed, cfg.delta, threads=cfg.threads)
    header = ["n", "alpha", "samples", "ks", "mean", "var", "l_delta"]
    rows = [[r["n"], fraction_str(r["alpha"]), r["samples"], _float(r["ks"]), _float(r["mean"]), _float(r["var"]), _float(r["l_delta"])] for r in exp.rows()]
    if cfg.out is not None:
        _write_csv(header, rows, cfg.out)
    summary = clt.summary(exp)
    summary["alpha"] = fraction_str(summary["alpha"])
    summary["results"] = [dict(zip(header, [r[0], r[1], r[2], float(r[3]), float(r[4]), float(r[5]), float(r[6])])) for r in rows]
    if cfg.out is None and cfg.report is None:
        _write_csv(header, rows, None)
    else:
        _write_json(summary, cfg.report)
    return EXIT_OK


def cmd_moments(cfg: RunConfig) -> int:
    rows = []
    for alpha in cfg.alphas:
        for n in cfg.n_values:
            for r in cfg.r_values:
                e = moments.jack_expect_s(n, r, alpha)
                ratio = float(e) / n ** (r / 2) if n else float("nan")
                rows.append([n, r, fraction_str(alpha), e.numerator, e.denominator, _float(ratio)])
    _write_csv(["n", "r", "alpha", "expectation_num", "expectation_den", "ratio_float"], rows, cfg.out)
    return EXIT_OK


def cmd_walk(cfg: RunConfig) -> int:
    n = cfg.n_values[0]
    eta = walk.parse_eta_file(cfg.eta_file, n) if cfg.eta == "file" else cfg.eta
    chain = walk.chain_from_character(n, eta)
    reports = walk.chain_reports(chain)
    failed = any(r.status == FAIL for r in reports)
    out = {
        "n": n,
        "eta": cfg.eta,
        "eta_values": [fraction_str(v) for v in chain.eta.values],
        "classes": [format_partition(mu) for mu in walk.character_table(n).classes],
        "status": "fail" if failed else "pass",
        "reports": [r.to_dict() for r in reports],
    }
    _write_json(out, cfg.report)
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_sample(cfg: RunConfig) -> int:
    path = sample_path(cfg.n_values[0], cfg.alphas[0], cfg.seed)
    out = {
        "n": path.n,
        "alpha": fraction_str(cfg.alphas[0]),
        "seed": cfg.seed,
        "shapes": [format_partition(s) for s in path.steps],
        "boxes": [list(b) for b in path.added_boxes()],
    }
    _write_json(out, cfg.out)
    return EXIT_OK


def cmd_theta(cfg: RunConfig) -> int:
    tab = theta_table(cfg.n_values[0], cfg.alphas[0])
    rows = [[format_partition(lam)] + [fraction_str(tab[lam, mu]) for mu in tab.partitions] for lam in tab.partitions]
    _write_csv(["lambda"] + [format_partition(mu) for mu in tab.partitions], rows, cfg.out)
    return EXIT_OK


def cmd_measure(cfg: RunConfig) -> int:
    dist = jack_distribution(cfg.n_values[0], cfg.alphas[0])
    _write_csv(["partition", "weight"], [[format_partition(lam), fraction_str(p)] for lam, p in dist.items()], cfg.out)
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "clt": cmd_clt,
    "moments": cmd_moments,
    "walk": cmd_walk,
    "sample": cmd_sample,
    "theta": cmd_theta,
    "measure": cmd_measure,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kerov", description="Exact and Monte Carlo checks for Plancherel and Jack growth processes.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="run every exact identity suite")
    p.add_argument("--max-n", type=int, default=6, help="largest size checked (default 6)")
    p.add_argument("--alpha", default="1,2,1/2", help="comma-separated rationals, e.g. 1,2,1/2")
    p.add_argument("--bound", type=int, default=verify.DEFAULT_SUITE_BOUND, help="largest size attempted before stopping with exit 2")
    p.add_argument("--report", help="JSON report path (default stdout)")

    p = sub.add_parser("clt", help="Kolmogorov distance of W_alpha from the normal law")
    p.add_argument("--alpha", default="1")
    p.add_argument("--n", default="50,100,200", help="comma-separated sizes")
    p.add_argument("--samples", type=int, default=200_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--delta", type=float, default=1.0, help="exponent for the L_{n,2 delta} estimate")
    p.add_argument("--out", help="CSV path")
    p.add_argument("--summary", help="JSON summary path (default stdout when --out is given)")
    p.add_argument("--threads", type=int, help="worker threads (default KEROV_THREADS or CPU count)")

    p = sub.add_parser("moments", help="exact E s_{r,alpha} under Jack measure")
    p.add_argument("--n", default="10,20,30")
    p.add_argument("--r", default="2,4")
    p.add_argument("--alpha", default="1")
    p.add_argument("--out", help="CSV path (default stdout)")

    p = sub.add_parser("walk", help="the chain on irreducibles of S_n given by a character")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eta", choices=["perm", "std", "regular", "file"], default="perm")
    p.add_argument("--eta-file", help="lines 'partition multiplicity'")
    p.add_argument("--report", help="JSON report path (default stdout)")

    p = sub.add_parser("sample", help="one exact growth path")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", default="1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="JSON path (default stdout)")

    p = sub.add_parser("theta", help="theta table as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", default="1")
    p.add_argument("--out")

    p = sub.add_parser("measure", help="Jack measure weights as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", default="1")
    p.add_argument("--out")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = _config(args)
    except UsageError as exc:
        print(f"kerov: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except ResourceBoundError as exc:
        print(f"kerov: resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DomainError, DisconnectedGraphError, OSError) as exc:
        print(f"kerov: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
