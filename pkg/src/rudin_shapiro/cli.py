"""Command-line front end: experiments in, deterministic artifacts out.

Every subcommand writes its results as CSV or JSON files whose first
bytes embed the numeric configuration, so an artifact can always be
replayed.  All randomness is seeded (default seed 0, never the clock),
reductions use fixed trees, and float formatting is shortest-roundtrip,
so re-running a command with the same configuration reproduces its
artifacts byte for byte.

Exit status: 0 all gated checks passed, 1 a gated check failed,
2 usage or invalid configuration, 3 a resource limit was hit.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import re
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import evaluate, gf2, norms, roots, verify
from .core import (ResourceLimitError, generate_pair, pair_cache_path,
                   parallelogram_residual, special_values)
from .norms import Arc, FULL_CIRCLE

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

CACHE_ENV_VAR = "RUDIN_SHAPIRO_CACHE"

_ANGLE_RE = re.compile(
    r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?|[+-])?\s*(pi)?"
    r"\s*(?:/\s*((?:\d+\.?\d*|\.\d+)))?\s*$")


def parse_angle(text: str) -> float:
    """Radians with pi sugar: '2pi', 'pi/2', '3pi/4', '-pi', '32pi/1024'."""
    match = _ANGLE_RE.match(text)
    lead = match.group(1) if match else None
    if not match or (not lead and not match.group(2)) or \
            (lead in ("+", "-") and not match.group(2)):
        raise ValueError(f"cannot parse angle {text!r}")
    if lead in ("+", "-", None):
        coeff = -1.0 if lead == "-" else 1.0
    else:
        coeff = float(lead)
    value = coeff * (math.pi if match.group(2) else 1.0)
    if match.group(3):
        value /= float(match.group(3))
    return value


def parse_arc(text: str) -> Arc:
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"arc must look like 'alpha:beta', got {text!r}")
    return Arc(parse_angle(parts[0]), parse_angle(parts[1]))


def parse_k_range(text: str) -> list[int]:
    """'8', '1..12', or '4,6,8'."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(part) for part in text.split(",") if part.strip()]


def parse_q_list(text: str) -> list[float]:
    qs = [float(part) for part in text.split(",") if part.strip()]
    if not qs or any(q <= 0 for q in qs):
        raise ValueError("q values must be positive")
    return qs


def _py(value):
    """Plain-Python copy of a value for stable JSON / CSV formatting."""
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.ndarray):
        return [_py(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_py(v) for v in value]
    if isinstance(value, dict):
        return {key: _py(val) for key, val in value.items()}
    return value


def write_json_artifact(path: Path, config: dict, results) -> None:
    payload = {"config": _py(config), "results": _py(results)}
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def write_csv_artifact(path: Path, config: dict, header: list[str],
                       rows) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("# config " + json.dumps(_py(config), sort_keys=True) + "\n")
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_py(cell) for cell in row])


@dataclass(frozen=True)
class RunConfig:
    """One validated run: what was asked, under which seed.

    Every artifact embeds header_dict() verbatim, so outputs can always
    be replayed.  threads is carried for execution but excluded from
    the header: it has no numeric effect, and including it would break
    byte-identity of artifacts across worker counts.
    """

    subcommand: str
    seed: int
    format: str
    threads: int = 1
    params: dict = field(default_factory=dict)

    def header_dict(self) -> dict:
        base = {"subcommand": self.subcommand, "seed": self.seed,
                "format": self.format}
        base.update(self.params)
        return base


def _config(args, **fields) -> dict:
    config = RunConfig(subcommand=args.command, seed=args.seed,
                       format=args.format, threads=args.threads,
                       params=fields)
    return config.header_dict()


def _arc_pair(arc: Arc) -> list[float]:
    return [arc.alpha, arc.beta]


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_generate(args, out_dir: Path) -> int:
    cache_dir = args.cache_dir
    if args.write_cache and cache_dir is None:
        raise ValueError("--write-cache needs a cache directory "
                         f"(flag --cache-dir or ${CACHE_ENV_VAR})")
    pair = generate_pair(args.k, cache_dir=cache_dir,
                         write_cache=args.write_cache)
    sv = special_values(args.k)
    closed_forms_ok = (sv.p_at_1 == sv.expected_p_at_1 and
                       sv.q_at_minus1 == sv.expected_q_at_minus1 and
                       sv.p_at_minus1 == sv.expected_cross and
                       sv.q_at_1 == sv.expected_cross)
    config = _config(args, k=args.k, write_cache=args.write_cache)
    result = {
        "n": pair.n,
        "degree": pair.n - 1,
        "p_head": pair.p.coeffs[:8].tolist(),
        "q_head": pair.q.coeffs[:8].tolist(),
        "p_at_1": sv.p_at_1,
        "p_at_minus1": sv.p_at_minus1,
        "q_at_1": sv.q_at_1,
        "q_at_minus1": sv.q_at_minus1,
        "expected_p_at_1": sv.expected_p_at_1,
        "expected_q_at_minus1": sv.expected_q_at_minus1,
        "expected_cross": sv.expected_cross,
        "closed_forms_match": closed_forms_ok,
    }
    if args.write_cache:
        result["cache_file"] = pair_cache_path(cache_dir, args.k).name
    write_json_artifact(out_dir / f"generate_k{args.k:02d}.json", config, result)
    print(f"k={args.k} n={pair.n} closed_forms_match={closed_forms_ok}")
    return EXIT_OK if closed_forms_ok else EXIT_CHECK_FAILED


def cmd_eval(args, out_dir: Path) -> int:
    pair = generate_pair(args.k, cache_dir=args.cache_dir)
    if args.theta is not None:
        theta = parse_angle(args.theta)
        p, q = evaluate.eval_pair_point(pair, theta)
        config = _config(args, k=args.k, theta=theta)
        result = {"p_re": p.real, "p_im": p.imag,
                  "q_re": q.real, "q_im": q.imag}
        write_json_artifact(out_dir / f"eval_k{args.k:02d}_point.json",
                            config, result)
        print(f"P_k({theta:.12g}) = {p:.12g}   Q_k = {q:.12g}")
        return EXIT_OK
    arc = parse_arc(args.arc) if args.arc else FULL_CIRCLE
    count = args.count or norms.default_count(pair.n, arc)
    samples = evaluate.eval_grid(pair, arc, count,
                                 half_offset=not args.no_offset,
                                 threads=args.threads)
    mean_sq = float(np.mean(np.abs(samples.values_p) ** 2))
    residual = parallelogram_residual(pair, count)
    config = _config(args, k=args.k, arc=_arc_pair(arc), count=count,
                     half_offset=not args.no_offset)
    result = {"mean_p_squared": mean_sq,
              "mean_p_squared_over_n": mean_sq / pair.n,
              "flatness_residual": residual}
    write_json_artifact(out_dir / f"eval_k{args.k:02d}_grid.json",
                        config, result)
    if args.dump:
        evaluate.write_grid_dump(samples, out_dir / args.dump)
    print(f"k={args.k} count={count} mean|P|^2/n={mean_sq / pair.n:.12g} "
          f"flatness_residual={residual:.3g}")
    return EXIT_OK


def _norm_rows(args, pair, arc, qs, count):
    rows = []
    for q in qs:
        est = norms.mq_arc((pair, args.which), arc, q, count)
        rows.append([pair.k, arc.alpha, arc.beta, float(q), est.value,
                     est.count, est.rel_step, est.flagged])
    return rows


def cmd_norm(args, out_dir: Path) -> int:
    arc = parse_arc(args.arc) if args.arc else FULL_CIRCLE
    qs = parse_q_list(args.q)
    rows = []
    for k in parse_k_range(args.k):
        pair = generate_pair(k, cache_dir=args.cache_dir)
        rows.extend(_norm_rows(args, pair, arc, qs, args.count))
    config = _config(args, k=args.k, arc=_arc_pair(arc), q=qs,
                     count=args.count, which=args.which)
    write_csv_artifact(out_dir / "norms.csv", config,
                       norms.NORM_TABLE_COLUMNS, rows)
    for row in rows:
        print(f"k={row[0]} q={row[3]} M_q={row[4]:.9g} "
              f"rel_step={row[6]:.2e} flagged={row[7]}")
    return EXIT_OK


def cmd_mahler(args, out_dir: Path) -> int:
    arc = parse_arc(args.arc) if args.arc else FULL_CIRCLE
    rows = []
    for k in parse_k_range(args.k):
        pair = generate_pair(k, cache_dir=args.cache_dir)
        est = norms.mahler_arc((pair, args.which), arc, args.count,
                               exclusion_radius=args.exclusion_radius)
        rows.append([k, arc.alpha, arc.beta, 0.0, est.value, est.count,
                     est.rel_step, est.flagged])
        print(f"k={k} M_0={est.value:.9g} M_0/sqrt(n)="
              f"{est.value / math.sqrt(pair.n):.9g} excluded={est.excluded} "
              f"flagged={est.flagged}")
    config = _config(args, k=args.k, arc=_arc_pair(arc), count=args.count,
                     exclusion_radius=args.exclusion_radius, which=args.which)
    write_csv_artifact(out_dir / "mahler.csv", config,
                       norms.NORM_TABLE_COLUMNS, rows)
    return EXIT_OK


def cmd_roots(args, out_dir: Path) -> int:
    pair = generate_pair(args.k, cache_dir=args.cache_dir)
    poly = pair.p if args.which == "p" else pair.q
    rootset = roots.find_roots(poly, tol=args.tol, max_iter=args.max_iter,
                               seed=args.seed)
    config = _config(args, k=args.k, which=args.which, tol=args.tol,
                     max_iter=args.max_iter)
    rows = [[float(z.real), float(z.imag), float(res), int(flag)]
            for z, res, flag in zip(rootset.roots, rootset.residuals,
                                    rootset.flags)]
    rows.sort()
    write_csv_artifact(out_dir / f"roots_k{args.k:02d}_{args.which}.csv",
                       config, ["re", "im", "residual", "flag"], rows)
    flagged = int(rootset.flags.sum())
    print(f"k={args.k} {args.which}: degree={rootset.degree} "
          f"iterations={rootset.iterations} flagged={flagged}")
    return EXIT_OK if flagged == 0 else EXIT_CHECK_FAILED


def cmd_census(args, out_dir: Path) -> int:
    pair = generate_pair(args.k, cache_dir=args.cache_dir)
    which = ("p", "q") if args.which == "both" else (args.which,)
    results = []
    for component in which:
        poly = pair.p if component == "p" else pair.q
        rootset = roots.find_roots(poly, tol=args.tol, seed=args.seed)
        census = roots.zero_census(rootset, eps=args.eps)
        results.append({
            "component": component,
            "k": args.k,
            "eps": args.eps,
            "seed": args.seed,
            "inside_open_disk": census.inside_open_disk,
            "on_circle_within_eps": census.on_circle_within_eps,
            "outside": census.outside,
            "real_zeros": census.real_zeros,
            "flagged_roots": int(rootset.flags.sum()),
        })
    config = _config(args, k=args.k, which=args.which, eps=args.eps,
                     tol=args.tol)
    write_json_artifact(out_dir / f"census_k{args.k:02d}.json", config, results)
    for res in results:
        print(f"k={args.k} {res['component']}: inside={res['inside_open_disk']} "
              f"circle={res['on_circle_within_eps']} outside={res['outside']} "
              f"real={res['real_zeros']}")
    return EXIT_OK


def cmd_verify(args, out_dir: Path) -> int:
    ks = parse_k_range(args.k)
    qs = parse_q_list(args.q)
    names = [args.name] if args.name != "all" else "all"
    reports = verify.run_verification(names, ks, n_arcs=args.arcs, qs=qs,
                                      seed=args.seed)
    config = _config(args, name=args.name, k=args.k, arcs=args.arcs, q=qs)
    by_name: dict[str, list] = {}
    for report in reports:
        by_name.setdefault(report.name, []).append(report.to_json_dict())
    for name, items in sorted(by_name.items()):
        write_json_artifact(out_dir / f"verify_{name}.json", config, items)
    summary_rows = [[r.name, r.k,
                     r.arc.alpha if r.arc else "",
                     r.arc.beta if r.arc else "",
                     r.q if r.q is not None else "",
                     r.lhs, r.rhs, r.margin, int(r.passed)]
                    for r in reports]
    write_csv_artifact(out_dir / "verify_summary.csv", config,
                       ["name", "k", "alpha", "beta", "q", "lhs", "rhs",
                        "margin", "passed"], summary_rows)
    failures = [r for r in reports if not r.passed]
    print(f"{len(reports)} checks, {len(failures)} failures")
    for failure in failures:
        print(f"FAILED {failure.name} k={failure.k} margin={failure.margin:.3g}")
    return EXIT_OK if not failures else EXIT_CHECK_FAILED


def cmd_distribution(args, out_dir: Path) -> int:
    report = verify.value_distribution(args.k, bins=args.bins,
                                       count=args.count,
                                       component=args.which)
    config = _config(args, k=args.k, bins=args.bins, count=report.count,
                     which=args.which)
    result = {
        "sup_distance_to_uniform": report.sup_distance_to_uniform,
        "rectangles": [{"rect": list(rect), "empirical": emp,
                        "twice_area": expected}
                       for rect, emp, expected in report.rectangle_tests],
    }
    write_json_artifact(out_dir / f"distribution_k{args.k:02d}.json",
                        config, result)
    edges = np.arange(1, args.bins + 1) / args.bins
    rows = [[float(edge), float(cdf), float(edge)]
            for edge, cdf in zip(edges, report.empirical_cdf)]
    write_csv_artifact(out_dir / f"distribution_k{args.k:02d}.csv", config,
                       ["bin_upper", "empirical_cdf", "uniform_cdf"], rows)
    print(f"k={args.k} sup_distance={report.sup_distance_to_uniform:.5f}")
    return EXIT_OK


def cmd_saffari(args, out_dir: Path) -> int:
    qs = parse_q_list(args.q)
    rows = []
    all_passed = True
    for k in parse_k_range(args.k):
        pair = generate_pair(k, cache_dir=args.cache_dir)
        for q in qs:
            report = verify.saffari_ratio(k, q, count=args.count, pair=pair)
            rows.append([k, q, report.lhs, report.rhs,
                         report.details["ratio"],
                         report.details["pq_discrepancy"],
                         int(report.passed)])
            all_passed &= report.passed
    config = _config(args, k=args.k, q=qs, count=args.count)
    write_csv_artifact(out_dir / "saffari.csv", config,
                       ["k", "q", "mq", "limit_value", "ratio",
                        "pq_discrepancy", "passed"], rows)
    for row in rows:
        print(f"k={row[0]} q={row[1]} ratio={row[4]:.9f}")
    return EXIT_OK if all_passed else EXIT_CHECK_FAILED


def cmd_mercer(args, out_dir: Path) -> int:
    results = []
    gate_failures = 0
    if args.coeffs:
        coeffs = [int(part) for part in args.coeffs.split(",")]
        cert = gf2.mercer_certificate(coeffs)
        results.append(cert.to_json_dict())
    else:
        rng = np.random.default_rng(args.seed)
        max_m = max(1, args.degree // 2)
        for index in range(args.random):
            m = int(rng.integers(1, max_m + 1))
            coeffs = gf2.random_skew_reciprocal(m, rng)
            cert = gf2.mercer_certificate(coeffs)
            entry = cert.to_json_dict()
            entry["index"] = index
            if not cert.certified_zero_free_on_circle:
                gate_failures += 1
            if index < args.falsify:
                min_mod = gf2.circle_min_modulus(coeffs)
                rootset = roots.find_roots(coeffs, seed=args.seed)
                closest = float(np.min(np.abs(np.abs(rootset.roots) - 1.0)))
                entry["falsifier_min_modulus"] = min_mod
                entry["falsifier_closest_root_band"] = closest
                if min_mod <= 1e-9 or closest < 1e-7:
                    gate_failures += 1
            results.append(entry)
    config = _config(args, random=args.random, degree=args.degree,
                     falsify=args.falsify, coeffs=args.coeffs)
    write_json_artifact(out_dir / "mercer.json", config, results)
    certified = sum(1 for entry in results if entry["certified"])
    print(f"{certified}/{len(results)} certified, gate failures: {gate_failures}")
    return EXIT_OK if gate_failures == 0 else EXIT_CHECK_FAILED


def cmd_problem55(args, out_dir: Path) -> int:
    rows = []
    for k in parse_k_range(args.k):
        pair = generate_pair(k, cache_dir=args.cache_dir)
        est = norms.flatness_defect_mahler(pair, count=args.count)
        ratio = est.value / math.sqrt(pair.n)
        rows.append([k, est.value, ratio, est.count, est.rel_step,
                     est.excluded, est.flagged])
        print(f"k={k} M_0(|P|^2-n)={est.value:.9g} ratio={ratio:.9g} "
              f"flagged={est.flagged}")
    config = _config(args, k=args.k, count=args.count)
    write_csv_artifact(out_dir / "problem55.csv", config,
                       ["k", "value", "ratio_to_sqrt_n", "count", "rel_step",
                        "excluded", "flagged"], rows)
    return EXIT_OK


def cmd_bench(args, out_dir: Path) -> int:
    timings = {}
    t0 = time.perf_counter()
    pair = generate_pair(args.k)
    timings["generate_seconds"] = time.perf_counter() - t0
    count = args.count or norms.default_count(pair.n, FULL_CIRCLE)
    t0 = time.perf_counter()
    for _ in evaluate.iter_pair_chunks(pair, 0.0, math.tau, count):
        pass
    dt = time.perf_counter() - t0
    timings["grid_eval_seconds"] = dt
    timings["grid_points_per_second"] = count / dt if dt > 0 else math.inf
    t0 = time.perf_counter()
    norms.mq_arc((pair, "p"), FULL_CIRCLE, 2.0, count)
    timings["m2_seconds"] = time.perf_counter() - t0
    config = _config(args, k=args.k, count=count)
    write_json_artifact(out_dir / "bench.json", config, timings)
    print(f"k={args.k} count={count} "
          f"eval={timings['grid_points_per_second']:.3g} points/s")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0,
                        help="seed for every random choice (default 0)")
    common.add_argument("--threads", type=int, default=1,
                        help="worker threads for grid evaluation")
    common.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="preferred artifact format hint")
    common.add_argument("--out", default=".",
                        help="directory for output artifacts")
    common.add_argument("--cache-dir", default=os.environ.get(CACHE_ENV_VAR),
                        help=f"coefficient cache directory (default ${CACHE_ENV_VAR})")

    parser = argparse.ArgumentParser(
        prog="rudin-shapiro",
        description="Rudin-Shapiro polynomials: norms, roots, and certificates")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common],
                       help="build (P_k, Q_k) and report exact special values")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--write-cache", action="store_true")

    p = sub.add_parser("eval", parents=[common],
                       help="evaluate the pair at a point or over a grid")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--theta", help="single angle (pi sugar accepted)")
    p.add_argument("--arc", help="arc 'alpha:beta' for grid evaluation")
    p.add_argument("--count", type=int)
    p.add_argument("--no-offset", action="store_true",
                   help="full lattice instead of half-offset grid")
    p.add_argument("--dump", help="binary grid dump filename")

    p = sub.add_parser("norm", parents=[common], help="M_q on an arc")
    p.add_argument("--k", required=True, help="k or range, e.g. 3 or 1..12")
    p.add_argument("--q", required=True, help="comma list of exponents")
    p.add_argument("--arc", help="default full circle")
    p.add_argument("--count", type=int)
    p.add_argument("--which", choices=("p", "q"), default="p")

    p = sub.add_parser("mahler", parents=[common], help="M_0 on an arc")
    p.add_argument("--k", required=True)
    p.add_argument("--arc")
    p.add_argument("--count", type=int)
    p.add_argument("--exclusion-radius", type=float, default=0.0)
    p.add_argument("--which", choices=("p", "q"), default="p")

    p = sub.add_parser("roots", parents=[common],
                       help="all complex roots by simultaneous iteration")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--which", choices=("p", "q"), default="p")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=200)

    p = sub.add_parser("census", parents=[common],
                       help="classify roots against the unit circle")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--which", choices=("p", "q", "both"), default="both")
    p.add_argument("--eps", type=float, default=1e-4)
    p.add_argument("--tol", type=float, default=1e-10)

    p = sub.add_parser("verify", parents=[common],
                       help="run proved-inequality checks and trend experiments")
    p.add_argument("name", choices=verify.ALL_CHECKS + ("all",))
    p.add_argument("--k", default="4..10")
    p.add_argument("--arcs", type=int, default=8)
    p.add_argument("--q", default="0.25,1,2,4")

    p = sub.add_parser("distribution", parents=[common],
                       help="empirical value distribution against its limit")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bins", type=int, default=64)
    p.add_argument("--count", type=int)
    p.add_argument("--which", choices=("p", "q"), default="p")

    p = sub.add_parser("saffari", parents=[common],
                       help="M_q against the limit value, P vs Q")
    p.add_argument("--k", required=True)
    p.add_argument("--q", default="1,2,4")
    p.add_argument("--count", type=int)

    p = sub.add_parser("mercer", parents=[common],
                       help="GF(2) circle-zero-freeness certificates")
    p.add_argument("--random", type=int, default=0,
                   help="number of random skew-reciprocal inputs")
    p.add_argument("--degree", type=int, default=64,
                   help="maximum even degree for random inputs")
    p.add_argument("--falsify", type=int, default=0,
                   help="also run the numerical falsifier on this many inputs")
    p.add_argument("--coeffs", help="explicit comma list of coefficients")

    p = sub.add_parser("problem55", parents=[common],
                       help="Mahler measure of | |P_k|^2 - n | with sqrt(n) ratio")
    p.add_argument("--k", required=True)
    p.add_argument("--count", type=int)

    p = sub.add_parser("bench", parents=[common],
                       help="evaluation throughput measurements")
    p.add_argument("--k", type=int, default=16)
    p.add_argument("--count", type=int)

    return parser


COMMANDS = {
    "generate": cmd_generate,
    "eval": cmd_eval,
    "norm": cmd_norm,
    "mahler": cmd_mahler,
    "roots": cmd_roots,
    "census": cmd_census,
    "verify": cmd_verify,
    "distribution": cmd_distribution,
    "saffari": cmd_saffari,
    "mercer": cmd_mercer,
    "problem55": cmd_problem55,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    try:
        return COMMANDS[args.command](args, out_dir)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    raise SystemExit(main())
