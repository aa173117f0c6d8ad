"""Command line front end: ``qmacd stats|epoly|kernel|verify``.

JSON goes to stdout and is byte-for-byte reproducible unless ``--timings``
is given.  The human-readable table goes to stderr.
Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .checks import CheckResult
from .kernel import build_KA, check_prop54, check_theorem52
from .macdonald import composition_stats, nonsym_macdonald, nonsym_macdonald_oracle
from .polyring import ContractError
from .suites import run_suite

SUITE_ORDER = ["hecke", "macdonald", "raising", "dunkl", "kernel", "uplus"]
KERNEL_CHECKS = ("a", "b", "c", "uplus")


def _int_list(text: str, *, minimum: int, what: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(v) for v in text.split(",") if v.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be comma-separated integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError(f"{what} is empty")
    if any(v < minimum for v in vals):
        raise argparse.ArgumentTypeError(f"{what} entries must be >= {minimum}, got {text!r}")
    return vals


def composition_arg(text: str) -> tuple[int, ...]:
    return _int_list(text, minimum=0, what="composition")


def n_list_arg(text: str) -> tuple[int, ...]:
    return _int_list(text, minimum=1, what="n")


def _single(text: str, minimum: int, what: str) -> int:
    vals = _int_list(text, minimum=minimum, what=what)
    if len(vals) != 1:
        raise argparse.ArgumentTypeError(f"{what} must be a single integer, got {text!r}")
    return vals[0]


def n_arg(text: str) -> int:
    return _single(text, 1, "n")


def degree_arg(text: str) -> int:
    return _single(text, 0, "degree")


def checks_arg(text: str) -> tuple[str, ...]:
    items = tuple(v.strip() for v in text.split(",") if v.strip())
    bad = [v for v in items if v not in KERNEL_CHECKS]
    if bad or not items:
        raise argparse.ArgumentTypeError(f"checks must be drawn from {','.join(KERNEL_CHECKS)}")
    return items


def _default_jobs() -> int:
    raw = os.environ.get("QMACD_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qmacd", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("stats", help="arm/leg data, eigenvalues and d, d', e of a composition")
    s.add_argument("--eta", type=composition_arg, required=True)

    e = sub.add_parser("epoly", help="nonsymmetric Macdonald polynomial E_eta")
    e.add_argument("--eta", type=composition_arg, required=True)
    e.add_argument("--format", choices=["text", "json", "latex"], default="text")
    e.add_argument("--oracle", action="store_true", help="use the eigen-solve route")

    k = sub.add_parser("kernel", help="check the truncated kernel K_A")
    k.add_argument("--n", type=n_arg, required=True)
    k.add_argument("--degree", type=degree_arg, required=True)
    k.add_argument("--check", type=checks_arg, default=KERNEL_CHECKS)
    k.add_argument("--timings", action="store_true")

    v = sub.add_parser("verify", help="run identity suites")
    v.add_argument("--suite", choices=SUITE_ORDER + ["all"], default="all")
    v.add_argument("--n", type=n_list_arg, default=(2, 3))
    v.add_argument("--degree", type=degree_arg, default=4)
    v.add_argument("--sample", type=int, default=None,
                   help="check K random monomials instead of all of them")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=_default_jobs())
    v.add_argument("--timings", action="store_true")
    return p


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _table(results: list[CheckResult]) -> None:
    width = max((len(r.identity) for r in results), default=10)
    for r in results:
        tag = "pass" if r.passed else "FAIL"
        extra = f" {r.slice}" if r.slice else ""
        secs = f"{r.seconds:8.3f}s" if r.seconds is not None else ""
        print(f"{tag}  {r.identity:<{width}}{extra}  cases={r.cases} {secs}", file=sys.stderr)


def _report(command: str, params: dict, results: list[CheckResult], timings: bool) -> int:
    ok = all(r.passed for r in results)
    out = {"command": command, **params, "status": "pass" if ok else "fail",
           "results": [r.to_json(timings) for r in results]}
    failed = [r for r in results if not r.passed]
    if failed:
        out["counterexample"] = {"identity": failed[0].identity, **(failed[0].counterexample or {})}
    _dump(out)
    _table(results)
    return 0 if ok else 1


def cmd_stats(args) -> int:
    _dump(composition_stats(args.eta).to_json())
    return 0


def cmd_epoly(args) -> int:
    e = (nonsym_macdonald_oracle if args.oracle else nonsym_macdonald)(args.eta)
    if args.format == "json":
        _dump(e.to_json())
    elif args.format == "latex":
        print(e.to_latex())
    else:
        print(e.to_string())
    return 0


def cmd_kernel(args) -> int:
    t0 = time.perf_counter()
    K = build_KA(args.n, args.degree)
    build = time.perf_counter() - t0
    results: list[CheckResult] = []
    parts = "".join(c for c in args.check if c in "abc")
    if parts:
        t0 = time.perf_counter()
        res = check_theorem52(K, parts)
        for r in res:
            r.seconds = (time.perf_counter() - t0) / len(res)
        results += res
    if "uplus" in args.check:
        t0 = time.perf_counter()
        res = check_prop54(args.n, args.degree, K)
        for r in res:
            r.seconds = (time.perf_counter() - t0) / len(res)
        results += res
    if args.timings:
        print(f"kernel build {build:.3f}s", file=sys.stderr)
    params = {"n": args.n, "degree": args.degree, "checks": list(args.check)}
    return _report("kernel", params, results, args.timings)


def _suite_task(task: tuple[str, int, int, int | None, int]) -> list[CheckResult]:
    name, n, degree, sample, seed = task
    return run_suite(name, n, degree, sample, seed)


def cmd_verify(args) -> int:
    names = SUITE_ORDER if args.suite == "all" else [args.suite]
    tasks = [(name, n, args.degree, args.sample, args.seed) for name in names for n in args.n]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            chunks = list(pool.map(_suite_task, tasks))
    else:
        chunks = [_suite_task(t) for t in tasks]
    results = [r for chunk in chunks for r in chunk]
    params = {"suite": args.suite, "n": list(args.n), "degree": args.degree}
    if args.sample is not None:
        params.update(sample=args.sample, seed=args.seed)
    return _report("verify", params, results, args.timings)


COMMANDS = {"stats": cmd_stats, "epoly": cmd_epoly, "kernel": cmd_kernel, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "sample", None) is not None and args.sample < 1:
        parser.print_usage(sys.stderr)
        print("qmacd: error: --sample must be positive", file=sys.stderr)
        return 2
    if getattr(args, "jobs", 1) < 1:
        args.jobs = 1
    try:
        return COMMANDS[args.command](args)
    except ContractError as exc:
        print(f"qmacd: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
