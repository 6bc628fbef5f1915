"""Experiment orchestration: config files, grid scans, CSV/JSON output.

A scan walks a grid over (N, S, alpha), computing the number variance for
each cell via the pairwise route.  Rows always appear in deterministic order
(N outer, S middle, alpha inner) and CSV output is byte-identical across
re-runs with the same config and seed.  Subcommands expose the analysis
modules for one-off runs.

Config files are flat `key = value` text with `#` comments:

    sequence    = poly:0,0,1
    alpha_mode  = uniform-random
    alpha_count = 100
    n_grid      = 100000
    s_grid      = logspace:5..12
    seed        = 24036583
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import math
import statistics
import sys
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import arithmetic, baselines, dyadic
from .arithmetic import (DEFAULT_MEM_BUDGET, DEFAULT_PAIR_BUDGET,
                         BudgetExceeded)
from .points import Alpha, SequenceSpec, dilate_mod1, generate_terms
from .variance import VarianceRecord, WindowAccumulator, as_dyadic

CODE_VERSION = "0.1.0"
CSV_HEADER = "N,S_num,S_den,alpha_hex,V,ratio"

# Fixed seed for named presets so a bare re-run is reproducible.
PRESET_SEED = 1


class ConfigError(ValueError):
    """Invalid configuration or command-line input (exit code 2)."""


@dataclass(frozen=True)
class ExperimentConfig:
    sequence: SequenceSpec
    alpha_mode: str  # "uniform-random" | "explicit"
    alpha_count: int
    alphas: tuple
    n_grid: tuple
    s_grid: tuple
    seed: Optional[int]
    pair_budget: int
    mem_budget: int
    out: Optional[str]
    fmt: str


@dataclass(frozen=True)
class ScanResult:
    rows: tuple
    metadata: dict


def _parse_int(text: str, key: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {text!r}") from None


def parse_s_grid(text: str) -> tuple:
    """Either a comma list of dyadic fractions or `logspace:v_min..v_max`."""
    text = text.strip()
    if text.startswith("logspace:"):
        spec = text[len("logspace:"):]
        lo_s, sep, hi_s = spec.partition("..")
        if not sep:
            raise ConfigError(f"s_grid: expected logspace:v_min..v_max, got {text!r}")
        lo = _parse_int(lo_s, "s_grid")
        hi = _parse_int(hi_s, "s_grid")
        if not 0 <= lo <= hi <= 64:
            raise ConfigError(f"s_grid: logspace exponents must satisfy 0 <= v_min <= v_max <= 64")
        return tuple(Fraction(1, 1 << v) for v in range(lo, hi + 1))
    if text == "k/64":
        return tuple(Fraction(k, 64) for k in range(1, 64))
    out = []
    for tok in text.split(","):
        try:
            out.append(as_dyadic(Fraction(tok.strip())))
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"s_grid: bad entry {tok.strip()!r}: {exc}") from None
    if not out:
        raise ConfigError("s_grid: empty")
    return tuple(out)


_CONFIG_KEYS = {"sequence", "alpha_mode", "alpha_count", "alphas", "n_grid",
                "s_grid", "seed", "pair_budget", "memory_budget", "out", "format"}


def parse_config(text: str) -> ExperimentConfig:
    data = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"config line {lineno}: expected key = value")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"config line {lineno}: unknown key {key!r}")
        data[key] = value.strip()

    try:
        sequence = SequenceSpec.parse(data.get("sequence", "linear"))
    except ValueError as exc:
        raise ConfigError(f"sequence: {exc}") from None

    mode = data.get("alpha_mode", "explicit" if "alphas" in data else "uniform-random")
    if mode not in ("uniform-random", "explicit"):
        raise ConfigError(f"alpha_mode: expected uniform-random or explicit, got {mode!r}")
    alphas: tuple = ()
    if mode == "explicit":
        if "alphas" not in data:
            raise ConfigError("alpha_mode=explicit requires an alphas list")
        try:
            alphas = tuple(Alpha.parse(tok.strip()) for tok in data["alphas"].split(","))
        except ValueError as exc:
            raise ConfigError(f"alphas: {exc}") from None
        count = len(alphas)
    else:
        count = _parse_int(data.get("alpha_count", "1"), "alpha_count")
        if count < 1:
            raise ConfigError("alpha_count must be >= 1")

    if "n_grid" not in data:
        raise ConfigError("n_grid is required")
    n_grid = tuple(_parse_int(tok.strip(), "n_grid") for tok in data["n_grid"].split(","))
    if any(n < 0 for n in n_grid):
        raise ConfigError("n_grid entries must be nonnegative")
    if any(b <= a for a, b in zip(n_grid, n_grid[1:])):
        raise ConfigError("n_grid must be strictly ascending")

    if "s_grid" not in data:
        raise ConfigError("s_grid is required")
    s_grid = parse_s_grid(data["s_grid"])

    seed = _parse_int(data["seed"], "seed") if "seed" in data else None
    if mode == "uniform-random" and seed is None:
        raise ConfigError("seed is required when alpha_mode is uniform-random")

    fmt = data.get("format", "csv")
    if fmt not in ("csv", "json"):
        raise ConfigError(f"format: expected csv or json, got {fmt!r}")

    return ExperimentConfig(
        sequence=sequence,
        alpha_mode=mode,
        alpha_count=count,
        alphas=alphas,
        n_grid=n_grid,
        s_grid=s_grid,
        seed=seed,
        pair_budget=_parse_int(data.get("pair_budget", str(DEFAULT_PAIR_BUDGET)), "pair_budget"),
        mem_budget=_parse_int(data.get("memory_budget", str(DEFAULT_MEM_BUDGET)), "memory_budget"),
        out=data.get("out"),
        fmt=fmt,
    )


def load_config(path: str) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())


def config_hash(config: ExperimentConfig) -> str:
    """sha256 over the canonical JSON of the science fields (not output paths)."""
    payload = {
        "sequence": config.sequence.label(),
        "alpha_mode": config.alpha_mode,
        "alpha_count": config.alpha_count,
        "alphas": [a.hex for a in config.alphas],
        "n_grid": list(config.n_grid),
        "s_grid": [f"{s.numerator}/{s.denominator}" for s in config.s_grid],
        "seed": config.seed,
        "pair_budget": config.pair_budget,
        "memory_budget": config.mem_budget,
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def estimate_pairs(n: int, s) -> int:
    """ceil(N^2 S) + N: budget proxy for the work in one (N, S) cell."""
    return math.ceil(n * n * as_dyadic(s)) + n


def resolve_alphas(config: ExperimentConfig) -> list:
    if config.alpha_mode == "explicit":
        return list(config.alphas)
    return Alpha.random_stream(config.alpha_count, config.seed)


def _alpha_cell(args):
    """Worker: variance of one dilated point set over a list of widths."""
    terms, a, s_pairs = args
    acc = WindowAccumulator(dilate_mod1(terms, Alpha(a)))
    return [acc.variance(Fraction(num, den)) for num, den in s_pairs]


def _format_row(rec: VarianceRecord) -> str:
    alpha = rec.alpha.hex if isinstance(rec.alpha, Alpha) else str(rec.alpha)
    ratio = "" if rec.ratio is None else format(rec.ratio, ".17g")
    return (f"{rec.n},{rec.s.numerator},{rec.s.denominator},"
            f"{alpha},{format(rec.v, '.17g')},{ratio}")


def run_scan(config: ExperimentConfig, *, skip_over_budget: bool = False,
             threads: int = 1) -> ScanResult:
    """Execute the (N, S, alpha) grid; rows N outer, S middle, alpha inner.

    If the config names a CSV output path, completed blocks are flushed as
    the scan progresses, so an interrupted run leaves a valid row prefix.
    Over-budget (N, S) cells abort the scan unless skip_over_budget is set,
    in which case their rows are omitted and listed in the metadata.
    """
    t0 = time.monotonic()
    alphas = resolve_alphas(config)
    max_n = max(config.n_grid, default=0)
    terms = generate_terms(config.sequence, max_n) if max_n else []
    rows = []
    skipped = []
    stream = None
    if config.out and config.fmt == "csv":
        stream = open(config.out, "w", encoding="utf-8", newline="")
    try:
        if stream:
            stream.write(CSV_HEADER + "\n")
            stream.flush()
        for n in config.n_grid:
            live = []
            for s in config.s_grid:
                est = estimate_pairs(n, s)
                if est > config.pair_budget:
                    cell = {"N": n, "S": f"{s.numerator}/{s.denominator}",
                            "estimated_pairs": est, "pair_budget": config.pair_budget}
                    if not skip_over_budget:
                        raise BudgetExceeded(
                            f"cell N={n}, S={s} estimates {est} pairs, over budget "
                            f"{config.pair_budget}; rerun with --skip-over-budget to skip",
                            est, config.pair_budget)
                    skipped.append(cell)
                else:
                    live.append(s)
            if not live:
                continue
            prefix = tuple(terms[:n])
            s_pairs = [(s.numerator, s.denominator) for s in live]
            if threads > 1:
                with ProcessPoolExecutor(max_workers=threads) as pool:
                    per_alpha = list(pool.map(
                        _alpha_cell, [(prefix, a.a, s_pairs) for a in alphas]))
            else:
                per_alpha = [_alpha_cell((prefix, a.a, s_pairs)) for a in alphas]
            block = []
            for s_idx, s in enumerate(live):
                for a_idx, alpha in enumerate(alphas):
                    block.append(VarianceRecord.build(n, s, alpha, per_alpha[a_idx][s_idx]))
            rows.extend(block)
            if stream:
                stream.write("".join(_format_row(r) + "\n" for r in block))
                stream.flush()
    finally:
        if stream:
            stream.close()
    metadata = {
        "config_hash": config_hash(config),
        "code_version": CODE_VERSION,
        "wall_time": time.monotonic() - t0,
        "skipped": skipped,
    }
    return ScanResult(rows=tuple(rows), metadata=metadata)


def emit(result: ScanResult, fmt: str = "csv") -> bytes:
    """CSV (header + rows) or JSON (metadata + rows); both parse back losslessly."""
    if fmt == "csv":
        lines = [CSV_HEADER]
        lines.extend(_format_row(r) for r in result.rows)
        return ("\n".join(lines) + "\n").encode()
    if fmt == "json":
        doc = {
            "metadata": result.metadata,
            "rows": [
                {"N": r.n, "S_num": r.s.numerator, "S_den": r.s.denominator,
                 "alpha_hex": r.alpha.hex if isinstance(r.alpha, Alpha) else str(r.alpha),
                 "V": r.v, "ratio": r.ratio}
                for r in result.rows
            ],
        }
        return (json.dumps(doc, indent=2) + "\n").encode()
    raise ConfigError(f"format: expected csv or json, got {fmt!r}")


def _record_from_fields(n, s_num, s_den, alpha_hex, v, ratio) -> VarianceRecord:
    try:
        alpha: Union[Alpha, str] = Alpha.from_hex(alpha_hex)
    except ValueError:
        alpha = alpha_hex  # free-form tag, e.g. from the random baseline
    return VarianceRecord(n=int(n), s=Fraction(int(s_num), int(s_den)),
                          alpha=alpha, v=float(v), ratio=ratio)


def parse(data: bytes, fmt: str = "csv") -> ScanResult:
    """Inverse of emit.  CSV carries no metadata; JSON restores it."""
    text = data.decode()
    if fmt == "csv":
        lines = [ln for ln in text.splitlines() if ln]
        if not lines or lines[0] != CSV_HEADER:
            raise ConfigError("csv: missing or malformed header")
        rows = []
        for ln in lines[1:]:
            parts = ln.split(",")
            if len(parts) != 6:
                raise ConfigError(f"csv: expected 6 fields, got {len(parts)}: {ln!r}")
            ratio = None if parts[5] == "" else float(parts[5])
            rows.append(_record_from_fields(*parts[:5], ratio))
        return ScanResult(rows=tuple(rows), metadata={})
    if fmt == "json":
        doc = json.loads(text)
        rows = tuple(
            _record_from_fields(row["N"], row["S_num"], row["S_den"],
                                row["alpha_hex"], row["V"], row["ratio"])
            for row in doc["rows"])
        return ScanResult(rows=rows, metadata=doc.get("metadata", {}))
    raise ConfigError(f"format: expected csv or json, got {fmt!r}")


# ---------------------------------------------------------------------------
# presets


def preset_config(name: str, seed: Optional[int] = None) -> ExperimentConfig:
    if name == "thm1-quadratic":
        return ExperimentConfig(
            sequence=SequenceSpec.poly((0, 0, 1)),
            alpha_mode="uniform-random",
            alpha_count=100,
            alphas=(),
            n_grid=(10 ** 5,),
            s_grid=tuple(Fraction(1, 1 << v) for v in range(5, 13)),
            seed=PRESET_SEED if seed is None else seed,
            pair_budget=DEFAULT_PAIR_BUDGET,
            mem_budget=DEFAULT_MEM_BUDGET,
            out=None,
            fmt="csv",
        )
    raise ConfigError(f"unknown preset {name!r}")


def preset_verdict(name: str, result: ScanResult) -> dict:
    """Pass rule for thm1-quadratic: per-S median of V/(NS(1-S)) in [0.85, 1.15]."""
    if name != "thm1-quadratic":
        raise ConfigError(f"unknown preset {name!r}")
    by_s = defaultdict(list)
    for rec in result.rows:
        scale = rec.n * float(rec.s) * (1.0 - float(rec.s))
        by_s[rec.s].append(rec.v / scale)
    medians = {f"{s.numerator}/{s.denominator}": statistics.median(vals)
               for s, vals in sorted(by_s.items(), reverse=True)}
    ok = all(0.85 <= m <= 1.15 for m in medians.values())
    return {"preset": name, "band": [0.85, 1.15], "medians": medians, "pass": ok}


# ---------------------------------------------------------------------------
# command line


def _write_bytes(data: bytes, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(data.decode())
    else:
        with open(out, "wb") as fh:
            fh.write(data)


def _print_json(obj, out: Optional[str]) -> None:
    _write_bytes((json.dumps(obj, indent=2) + "\n").encode(), out)


def _sequence_terms(args) -> list:
    spec = SequenceSpec.parse(args.sequence)
    return generate_terms(spec, args.count)


def _cmd_scan(args) -> int:
    if not args.config:
        raise ConfigError("scan requires --config")
    config = load_config(args.config)
    if args.seed is not None:
        config = dataclasses.replace(config, seed=args.seed)
    if args.out is not None:
        config = dataclasses.replace(config, out=args.out)
    if args.format is not None:
        config = dataclasses.replace(config, fmt=args.format)
    result = run_scan(config, skip_over_budget=args.skip_over_budget,
                      threads=args.threads)
    if config.fmt == "json":
        _write_bytes(emit(result, "json"), config.out)
    elif config.out is None:
        _write_bytes(emit(result, "csv"), None)
    # csv with an output path was already streamed by run_scan
    return 0


def _cmd_decompose(args) -> int:
    expansion = dyadic.decompose(Fraction(args.s))
    _print_json({
        "S": f"{expansion.s.numerator}/{expansion.s.denominator}",
        "levels": [{"v": v, "c": c} for v, c in expansion.pairs()],
        "scalar_sum": str(expansion.scalar_sum()),
        "s_squared": str(expansion.s ** 2),
    }, args.out)
    return 0


def _cmd_energy(args) -> int:
    terms = _sequence_terms(args)
    n1 = args.n1 or 1
    n2 = args.n2 or args.count
    table = arithmetic.rep_table(terms, n1, n2, pair_budget=args.pair_budget)
    out = {
        "sequence": args.sequence,
        "window": [n1, n2],
        "pair_count": table.pair_count,
        "energy_window": arithmetic.energy_window(table),
    }
    if n1 == 1 and n2 == args.count:
        out["additive_energy"] = arithmetic.additive_energy(
            terms, args.count, pair_budget=args.pair_budget)
    _print_json(out, args.out)
    return 0


def _cmd_repstats(args) -> int:
    terms = _sequence_terms(args)
    n1 = args.n1 or 1
    n2 = args.n2 or args.count
    table = arithmetic.rep_table(terms, n1, n2, pair_budget=args.pair_budget)
    mass, exponent = arithmetic.sparse_u2_mass(terms, args.count,
                                               pair_budget=args.pair_budget)
    _print_json({
        "sequence": args.sequence,
        "window": [n1, n2],
        "pair_count": table.pair_count,
        "distinct_differences": len(table.counts),
        "max_rep": max(table.counts.values(), default=0),
        "energy_window": arithmetic.energy_window(table),
        "repeated_mass": mass,
        "repeated_mass_exponent": exponent,
    }, args.out)
    return 0


def _cmd_gcdsum(args) -> int:
    terms = _sequence_terms(args)
    table = arithmetic.rep_table(terms, 1, args.count, pair_budget=args.pair_budget)
    value = arithmetic.gcd_sum(table, args.variant, threshold=args.threshold,
                               strategy=args.strategy)
    _print_json({
        "sequence": args.sequence,
        "count": args.count,
        "variant": args.variant,
        "threshold": args.threshold,
        "value": value,
    }, args.out)
    return 0


def _cmd_divcheck(args) -> int:
    coeffs = [int(tok) for tok in args.poly.split(",")]
    normalized = arithmetic.normalize_polynomial(coeffs)
    degree = len(normalized) - 1
    diffs = arithmetic.difference_set(normalized, args.count,
                                      pair_budget=args.pair_budget)
    failures = []
    for ell in range(max(2, args.ell_min), args.ell_max + 1):
        hits, bound, ok = arithmetic.divisibility_bound_check(
            diffs, ell, degree, args.count)
        if not ok:
            failures.append({"ell": ell, "hits": hits, "bound": bound})
    _print_json({
        "poly": normalized,
        "count": args.count,
        "ell_range": [max(2, args.ell_min), args.ell_max],
        "failures": failures,
        "all_ok": not failures,
    }, args.out)
    return 0


def _cmd_random_baseline(args) -> int:
    if args.seed is None:
        raise ConfigError("random-baseline requires --seed")
    res = baselines.random_variance_experiment(args.n, Fraction(args.s),
                                               args.replicates, args.seed)
    _print_json({
        "N": res.n,
        "S": f"{res.s.numerator}/{res.s.denominator}",
        "replicates": args.replicates,
        "mean": res.mean,
        "stddev": res.stddev,
        "stderr": res.stderr,
        "expected": res.expected,
    }, args.out)
    return 0


def _cmd_bridge_sim(args) -> int:
    if args.seed is None:
        raise ConfigError("bridge-sim requires --seed")
    s = Fraction(args.s)
    values = []
    for sub_seed in baselines._derived_seeds(args.seed, args.paths):
        path = baselines.bridge_path(args.m, sub_seed)
        values.append(baselines.bridge_functional(path, s, args.n))
    mean = statistics.fmean(values)
    stddev = statistics.stdev(values) if len(values) > 1 else 0.0
    _print_json({
        "paths": args.paths,
        "M": args.m,
        "S": f"{s.numerator}/{s.denominator}",
        "N": args.n,
        "mean": mean,
        "stddev": stddev,
        "stderr": stddev / math.sqrt(len(values)),
        "expected": args.n * float(s) * (1.0 - float(s)),
    }, args.out)
    return 0


def _cmd_kronecker(args) -> int:
    alpha = Alpha.parse(args.alpha)
    grid = parse_s_grid(args.s_grid)
    rows = baselines.kronecker_experiment(alpha, grid, n_max=args.n_max)
    _print_json({
        "alpha": alpha.hex,
        "s_grid_size": len(grid),
        "rows": [{"p": r.p, "q": r.q, "max_v": r.max_v} for r in rows],
        "max_v": max((r.max_v for r in rows), default=0.0),
    }, args.out)
    return 0


def _cmd_preset(args) -> int:
    config = preset_config(args.name, seed=args.seed)
    if args.out is not None:
        config = dataclasses.replace(config, out=args.out)
    if args.format is not None:
        config = dataclasses.replace(config, fmt=args.format)
    result = run_scan(config, skip_over_budget=args.skip_over_budget,
                      threads=args.threads)
    if config.fmt == "json" and config.out:
        _write_bytes(emit(result, "json"), config.out)
    verdict = preset_verdict(args.name, result)
    _print_json(verdict, None)
    return 0 if verdict["pass"] else 4


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key=value config file")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--skip-over-budget", action="store_true",
                        help="skip over-budget cells instead of aborting")
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--pair-budget", type=int, dest="pair_budget",
                        default=DEFAULT_PAIR_BUDGET)

    parser = argparse.ArgumentParser(
        prog="numvar",
        description="Number-variance experiments for dilated integer sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("scan", parents=[common],
                   help="run the (N, S, alpha) grid from --config").set_defaults(fn=_cmd_scan)

    p = sub.add_parser("decompose", parents=[common],
                       help="dyadic plateau decomposition of S")
    p.add_argument("s", help="dyadic fraction, e.g. 15/64")
    p.set_defaults(fn=_cmd_decompose)

    for name, fn, extra in (
            ("energy", _cmd_energy, ()),
            ("repstats", _cmd_repstats, ()),
            ("gcdsum", _cmd_gcdsum, ("variant",))):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--sequence", required=True)
        p.add_argument("--count", type=int, required=True)
        if name != "gcdsum":
            p.add_argument("--n1", type=int, default=None)
            p.add_argument("--n2", type=int, default=None)
        if "variant" in extra:
            p.add_argument("--variant", choices=sorted(arithmetic.GCD_VARIANTS),
                           default="half")
            p.add_argument("--threshold", type=float, default=None)
            p.add_argument("--strategy", choices=("auto", "dense", "classes"),
                           default="auto")
        p.set_defaults(fn=fn)

    p = sub.add_parser("divcheck", parents=[common],
                       help="difference divisibility bound over a range of moduli")
    p.add_argument("--poly", required=True, help="coefficients c0,c1,..., ascending")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--ell-min", type=int, default=2)
    p.add_argument("--ell-max", type=int, default=200)
    p.set_defaults(fn=_cmd_divcheck)

    p = sub.add_parser("random-baseline", parents=[common],
                       help="variance of i.i.d. uniform samples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--replicates", type=int, default=200)
    p.set_defaults(fn=_cmd_random_baseline)

    p = sub.add_parser("bridge-sim", parents=[common],
                       help="Brownian-bridge functional simulation")
    p.add_argument("--m", type=int, default=baselines.DEFAULT_BRIDGE_GRID)
    p.add_argument("--s", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--paths", type=int, default=1000)
    p.set_defaults(fn=_cmd_bridge_sim)

    p = sub.add_parser("kronecker", parents=[common],
                       help="variance at convergent denominators of alpha")
    p.add_argument("--alpha", required=True)
    p.add_argument("--s-grid", default="k/64")
    p.add_argument("--n-max", type=int, default=10 ** 5)
    p.set_defaults(fn=_cmd_kronecker)

    p = sub.add_parser("preset", parents=[common], help="run a named experiment")
    p.add_argument("name")
    p.set_defaults(fn=_cmd_preset)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 3
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OverflowError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
