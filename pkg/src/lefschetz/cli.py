"""Command-line front end: single checks, batch sweeps, machine-readable reports.

Subcommands
-----------
check     decide the strong Lefschetz property of one algebra (exit 0 yes,
          1 no, 2 usage error), printing the fired classification condition
          and, for two-variable failures, a verified kernel witness
classify  closed-form classification only (same exit convention)
wlp       weak Lefschetz property by the rank oracle
syzgap    syzygy gap profile (alpha, beta, gap, region) of a degree triple
verify    sweep a grid of algebras with several decision routes and report
          agreement (exit 0 iff no disagreements); supports json, csv and
          text output, a key = value config file, and parallel evaluation

Report data is byte-identical across runs for identical configuration; the
elapsed time goes to stderr only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import multiprocessing
import sys
import time

from .classifier import classify, manhattan_check
from .graded_quotient import MonomialCI
from .lefschetz_oracle import is_slp_oracle, is_wlp_oracle, kernel_witness
from .prime_field import PrimeField
from .syzygy_gap import region, slp_via_delta, syzygy_profile
from .verdict import KernelWitness

MODES = ("oracle", "digits", "manhattan", "delta")
FORMATS = ("json", "csv", "text")


class UsageError(ValueError):
    pass


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise UsageError(f"malformed {what}: {text!r}") from None
    if not values:
        raise UsageError(f"empty {what}")
    return values


def _field(p: int) -> PrimeField:
    try:
        return PrimeField(p)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _mode_verdict(mode: str, p: int, ds: tuple[int, ...]) -> bool:
    field = PrimeField(p)
    if mode == "oracle":
        return is_slp_oracle(MonomialCI(field, ds)).has_slp
    if mode == "digits":
        return classify(field, ds).has_slp
    if mode == "manhattan":
        return manhattan_check(field, ds[0], ds[1])
    if mode == "delta":
        return slp_via_delta(field, ds[0], ds[1])
    raise UsageError(f"unknown mode {mode!r}")


def _witness_dict(w: KernelWitness) -> dict:
    return {
        "monomial": list(w.monomial),
        "power": w.power,
        "target_degree": w.target_degree,
    }


def _check_modes(modes, n: int) -> None:
    bad = [m for m in modes if m not in MODES]
    if bad:
        raise UsageError(f"unknown modes: {', '.join(bad)}")
    if n != 2:
        two_only = [m for m in modes if m in ("manhattan", "delta")]
        if two_only:
            raise UsageError(
                f"modes {', '.join(two_only)} apply to two variables only (n={n})"
            )


# ---------------------------------------------------------------------------
# check / classify / wlp / syzgap


def _cmd_check(args) -> int:
    field = _field(args.p)
    ds = _parse_int_list(args.d, "exponent list")
    if any(d < 2 for d in ds):
        raise UsageError("exponents must be at least 2")
    if args.mode == "all":
        modes = ["oracle", "digits"] + (["manhattan", "delta"] if len(ds) == 2 else [])
    else:
        modes = [args.mode]
    _check_modes(modes, len(ds))
    verdicts = {m: _mode_verdict(m, field.p, ds) for m in modes}
    if len(set(verdicts.values())) > 1:
        detail = ", ".join(f"{m}={v}" for m, v in verdicts.items())
        print(f"internal disagreement between decision routes: {detail}", file=sys.stderr)
        return 2
    has_slp = next(iter(verdicts.values()))
    dtext = ",".join(str(d) for d in ds)
    if "digits" in verdicts:
        condition = classify(field, ds).condition
    else:
        condition = "via " + "/".join(modes)
    word = "SLP" if has_slp else "no SLP"
    print(f"p={field.p} d=({dtext}): {word} ({condition})")
    if not has_slp and len(ds) == 2:
        w = kernel_witness(MonomialCI(field, ds))
        e1, e2 = w.monomial
        print(
            f"witness: monomial x^{e1}*y^{e2}, power {w.power}, "
            f"degree {w.degree} -> {w.target_degree}"
        )
    return 0 if has_slp else 1


def _cmd_classify(args) -> int:
    field = _field(args.p)
    ds = _parse_int_list(args.d, "exponent list")
    try:
        verdict = classify(field, ds)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    dtext = ",".join(str(d) for d in ds)
    word = "SLP" if verdict.has_slp else "no SLP"
    print(f"p={field.p} d=({dtext}): {word} ({verdict.condition})")
    return 0 if verdict.has_slp else 1


def _cmd_wlp(args) -> int:
    field = _field(args.p)
    ds = _parse_int_list(args.d, "exponent list")
    try:
        algebra = MonomialCI(field, ds)
        has_wlp = is_wlp_oracle(algebra)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    dtext = ",".join(str(d) for d in ds)
    print(f"p={field.p} d=({dtext}): {'WLP' if has_wlp else 'no WLP'}")
    return 0 if has_wlp else 1


def _cmd_syzgap(args) -> int:
    field = _field(args.p)
    ds = _parse_int_list(args.d, "degree triple")
    if len(ds) != 3:
        raise UsageError("syzgap needs exactly three degrees, e.g. --d 2,2,2")
    try:
        profile = syzygy_profile(field, *ds)
        tag = region(*ds)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(
        f"p={field.p} d=({ds[0]},{ds[1]},{ds[2]}): alpha={profile.alpha} "
        f"beta={profile.beta} delta={profile.delta} region={tag.value}"
    )
    return 0


# ---------------------------------------------------------------------------
# verify


def _read_config(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            out[key] = value
    return out


def _sweep_config(args) -> dict:
    file_cfg = _read_config(args.config) if args.config else {}
    known = {"primes", "n", "max", "modes", "format", "out", "jobs"}
    unknown = set(file_cfg) - known
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")

    def pick(flag, key):
        return flag if flag is not None else file_cfg.get(key)

    primes_text = pick(args.primes, "primes")
    if primes_text is None:
        raise UsageError("verify needs --primes (or 'primes' in the config file)")
    primes = _parse_int_list(primes_text, "prime list")
    for p in primes:
        _field(p)

    n_text = pick(args.n, "n")
    n = int(n_text) if n_text is not None else 2
    if n < 1:
        raise UsageError("n must be at least 1")

    max_text = pick(args.max, "max")
    max_exponent = int(max_text) if max_text is not None else 6
    if max_exponent < 2:
        raise UsageError("max exponent must be at least 2")

    modes_text = pick(args.modes, "modes")
    if modes_text is None:
        raise UsageError("verify needs --modes (or 'modes' in the config file)")
    modes = tuple(m.strip() for m in modes_text.split(",") if m.strip())
    if not modes:
        raise UsageError("empty modes")
    _check_modes(modes, n)

    fmt = pick(args.format, "format") or "text"
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r} (choose from {', '.join(FORMATS)})")

    jobs_text = pick(args.jobs, "jobs")
    jobs = int(jobs_text) if jobs_text is not None else (multiprocessing.cpu_count() or 1)
    if jobs < 1:
        raise UsageError("jobs must be at least 1")

    return {
        "primes": list(primes),
        "n": n,
        "max_exponent": max_exponent,
        "modes": list(modes),
        "format": fmt,
        "out": pick(args.out, "out"),
        "jobs": jobs,
    }


def _grid(primes, n, max_exponent):
    # Non-decreasing exponent tuples: every decision route is invariant
    # under permuting the exponents, so one representative per orbit.
    def tuples(prefix, remaining, minimum):
        if remaining == 0:
            yield prefix
            return
        for d in range(minimum, max_exponent + 1):
            yield from tuples(prefix + (d,), remaining - 1, d)

    for p in sorted(primes):
        for ds in tuples((), n, 2):
            yield p, ds


def _sweep_worker(task):
    p, ds, modes = task
    verdicts = {m: _mode_verdict(m, p, ds) for m in modes}
    values = list(verdicts.values())
    agree = len(set(values)) <= 1
    witness = None
    if len(ds) == 2 and agree and values[0] is False:
        w = kernel_witness(MonomialCI(PrimeField(p), ds))
        witness = _witness_dict(w)
    return {
        "p": p,
        "d": list(ds),
        "verdicts": verdicts,
        "agree": agree,
        "witness": witness,
    }


def _run_sweep(config) -> dict:
    tasks = [(p, ds, tuple(config["modes"])) for p, ds in
             _grid(config["primes"], config["n"], config["max_exponent"])]
    jobs = min(config["jobs"], len(tasks)) or 1
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            entries = pool.map(_sweep_worker, tasks, chunksize=32)
    else:
        entries = [_sweep_worker(t) for t in tasks]
    entries.sort(key=lambda e: (e["p"], e["d"]))
    slp = sum(1 for e in entries if e["agree"] and e["verdicts"][config["modes"][0]])
    disagreements = sum(1 for e in entries if not e["agree"])
    summary = {
        "tuples": len(entries),
        "slp": slp,
        "non_slp": len(entries) - slp - disagreements,
        "disagreements": disagreements,
    }
    reported = {k: config[k] for k in ("primes", "n", "max_exponent", "modes")}
    return {"config": reported, "entries": entries, "summary": summary}


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["p", "d", "verdict_oracle", "verdict_digits", "verdict_manhattan",
         "verdict_delta", "agree", "witness_monomial", "witness_power"]
    )
    for e in report["entries"]:
        row = [e["p"], ";".join(str(d) for d in e["d"])]
        for mode in MODES:
            v = e["verdicts"].get(mode)
            row.append("" if v is None else str(v).lower())
        row.append(str(e["agree"]).lower())
        w = e["witness"]
        row.append(";".join(str(x) for x in w["monomial"]) if w else "")
        row.append(w["power"] if w else "")
        writer.writerow(row)
    return buf.getvalue()


def render_text(report: dict) -> str:
    lines = []
    for e in report["entries"]:
        parts = [f"p={e['p']}", "d=" + ";".join(str(d) for d in e["d"])]
        for mode in MODES:
            v = e["verdicts"].get(mode)
            if v is not None:
                parts.append(f"{mode}={'yes' if v else 'no'}")
        parts.append(f"agree={'yes' if e['agree'] else 'no'}")
        if e["witness"]:
            w = e["witness"]
            parts.append("witness=" + ";".join(str(x) for x in w["monomial"]))
            parts.append(f"power={w['power']}")
        lines.append(" ".join(parts))
    s = report["summary"]
    lines.append(
        f"summary: tuples={s['tuples']} slp={s['slp']} "
        f"non_slp={s['non_slp']} disagreements={s['disagreements']}"
    )
    return "\n".join(lines) + "\n"


def _cmd_verify(args) -> int:
    config = _sweep_config(args)
    started = time.monotonic()
    report = _run_sweep(config)
    elapsed = time.monotonic() - started
    renderer = {"json": render_json, "csv": render_csv, "text": render_text}[config["format"]]
    payload = renderer(report)
    if config["out"]:
        with open(config["out"], "w", encoding="utf-8", newline="") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)
    print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return 0 if report["summary"]["disagreements"] == 0 else 1


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefschetz",
        description="Decide the strong/weak Lefschetz property of monomial "
        "complete intersections over GF(p), exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide the SLP for one algebra")
    check.add_argument("--p", type=int, required=True, help="prime characteristic")
    check.add_argument("--d", required=True, help="comma-separated exponents, e.g. 2,3")
    check.add_argument("--mode", default="all", choices=("all",) + MODES,
                       help="decision route (default: all applicable, cross-checked)")
    check.set_defaults(func=_cmd_check)

    cls = sub.add_parser("classify", help="closed-form classification only")
    cls.add_argument("--p", type=int, required=True)
    cls.add_argument("--d", required=True)
    cls.set_defaults(func=_cmd_classify)

    wlp = sub.add_parser("wlp", help="decide the WLP by the rank oracle")
    wlp.add_argument("--p", type=int, required=True)
    wlp.add_argument("--d", required=True)
    wlp.set_defaults(func=_cmd_wlp)

    syz = sub.add_parser("syzgap", help="syzygy gap of x^d1, y^d2, (x+y)^d3")
    syz.add_argument("--p", type=int, required=True)
    syz.add_argument("--d", required=True, help="three degrees, e.g. 2,2,2")
    syz.set_defaults(func=_cmd_syzgap)

    verify = sub.add_parser("verify", help="sweep a grid and cross-verify routes")
    verify.add_argument("--primes", help="comma-separated primes, e.g. 2,3,5")
    verify.add_argument("--n", help="number of variables (default 2)")
    verify.add_argument("--max", help="largest exponent per variable (default 6)")
    verify.add_argument("--modes", help="subset of oracle,digits,manhattan,delta")
    verify.add_argument("--format", help="json, csv or text (default text)")
    verify.add_argument("--out", help="write the report to FILE instead of stdout")
    verify.add_argument("--jobs", help="parallel workers (default: all processors)")
    verify.add_argument("--config", help="key = value file; flags override it")
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
