"""Command-line entry point ``ford-complexity``.

Exit status: 0 on success or agreement, 1 on disagreement or an unresolved
region, 2 on usage errors.  Failures also print a JSON object on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .complexity import pair_complexity, pole_complexity, predicted_zero
from .errors import DomainError, UnresolvedRegion
from .numtheory import factorize, psi_breakpoints
from .oracle import cross_validate
from .records import (
    ENGINE_VERSION,
    SCHEMA_VERSION,
    ResultCache,
    boundary_record,
    cached_complexity,
    default_cache_dir,
    dumps,
)
from .region import DEFAULT_KMAX, Candidate, Region
from .svg import render_svg
from .witness import build_c1_witness, build_q_witness, verify_lower_bound

log = logging.getLogger("fordcomplexity")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _envelope(kind: str, body: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "engine_version": ENGINE_VERSION, "kind": kind, **body}


def _fail(kind: str, message: str, **extra) -> None:
    sys.stderr.write(dumps({"error": kind, "message": message, **extra}))


def _write(args, obj: dict, rows: list[dict] | None = None) -> None:
    """JSON to stdout, or CSV of ``rows`` when --format csv."""
    if args.format == "csv" and rows is not None:
        buf = io.StringIO()
        fields = list(rows[0]) if rows else []
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(dumps(obj))


def _cache(args) -> ResultCache:
    return ResultCache(args.cache_dir or default_cache_dir())


def _disk_text(disks) -> str:
    return " ".join(f"{a}/{b}" for a, b in disks)


def _region_rows(N: int, regions: list[dict]) -> list[dict]:
    return [
        {
            "N": N,
            "n": r["n"],
            "n_next": r["n_next"],
            "class": r["class"],
            "shape": r["shape"],
            "certificate_k": "" if r["certificate_k"] is None else r["certificate_k"],
            "c": r["c"],
            "disks": _disk_text(r["disks"]),
        }
        for r in regions
    ]


def _timed(args, rec: dict, t0: float) -> dict:
    if args.timings:
        rec = dict(rec, timings={"wall_s": round(time.perf_counter() - t0, 6)})
    return rec


def cmd_complexity(args) -> int:
    t0 = time.perf_counter()
    rec, _ = cached_complexity(args.N, args.kmax, _cache(args))
    rec = _timed(args, rec, t0)
    _write(args, rec, _region_rows(args.N, rec["regions"]))
    return EXIT_OK if rec["agreement"] else EXIT_FAIL


def cmd_region(args) -> int:
    t0 = time.perf_counter()
    cache = _cache(args)
    region = Region.at(factorize(args.N), args.n)
    rec = cache.lookup(args.N, args.n, args.kmax)
    if rec is None:
        res = pair_complexity(region, args.kmax)
        rec = boundary_record(res.boundary, res.complexity)
        cache.store(args.N, args.n, args.kmax, rec)
    out = _envelope("region", {"N": args.N, "region": rec, "timings": None})
    out = _timed(args, out, t0)
    _write(args, out, _region_rows(args.N, [rec]))
    return EXIT_OK


def _sweep_one(job) -> dict:
    N, k_max, cache_dir = job
    F = factorize(N)
    try:
        rec, _ = cached_complexity(N, k_max, ResultCache(cache_dir))
    except UnresolvedRegion as exc:
        return {"N": N, "omega": F.omega, "p1": F.p1, "c": None, "predicted_zero": predicted_zero(F),
                "agreement": None, "unresolved": str(exc)}
    return {"N": N, "omega": F.omega, "p1": F.p1, "c": rec["c"], "predicted_zero": rec["predicted_zero"],
            "agreement": rec["agreement"], "unresolved": None}


def cmd_sweep(args) -> int:
    if not 2 <= args.LO <= args.HI:
        raise DomainError("need 2 <= LO <= HI")
    t0 = time.perf_counter()
    cache_dir = str(args.cache_dir or default_cache_dir())
    jobs = [(N, args.kmax, cache_dir) for N in range(args.LO, args.HI + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            entries = list(pool.map(_sweep_one, jobs, chunksize=8))
    else:
        entries = [_sweep_one(j) for j in jobs]
    bad = [e["N"] for e in entries if e["agreement"] is False]
    unresolved = [e["N"] for e in entries if e["unresolved"]]
    out = _envelope(
        "sweep",
        {"lo": args.LO, "hi": args.HI, "k_max": args.kmax, "entries": entries,
         "disagreements": bad, "unresolved": unresolved, "ok": not bad and not unresolved, "timings": None},
    )
    out = _timed(args, out, t0)
    _write(args, out, entries)
    if not out["ok"]:
        _fail("sweep", "disagreement or unresolved N", disagreements=bad, unresolved=unresolved)
        return EXIT_FAIL
    return EXIT_OK


def cmd_witness_c1(args) -> int:
    F = factorize(args.N)
    n = build_c1_witness(F)
    body = {"N": args.N, "omega": F.omega, "p1": F.p1, "n": n}
    code = EXIT_OK
    if n is not None:
        res = pair_complexity(Region.at(F, n), args.kmax)
        target = Candidate(5, 2)
        body["c"] = res.complexity
        body["disks"] = sorted(list(p) for p in res.boundary.provenance)
        if target in res.boundary.members:
            pole = pole_complexity(target, res.boundary)
            body["pole"] = {
                "disk": list(target.provenance(args.N, n)),
                "covered_by": sorted(list(c.provenance(args.N, n)) for c in pole.coverers),
                "tangential": sorted(list(c.provenance(args.N, n)) for c in pole.tangential),
            }
        if res.complexity < 1:
            code = EXIT_FAIL
    _write(args, _envelope("witness-c1", body))
    if code:
        _fail("witness-c1", "witness pair has complexity 0", N=args.N, n=n)
    return code


def cmd_witness_q(args) -> int:
    bundle = build_q_witness(args.Q)
    K = bundle.constants
    res = verify_lower_bound(bundle, args.kmax if args.kmax_given else None)
    body = {
        "q": args.Q,
        "constants": {"A": K.A, "A_prime": K.A_prime, "B": K.B, "C_prime": K.C_prime, "C": K.C},
        "primes": {"count": len(bundle.primes), "first": bundle.primes[0], "last": bundle.primes[-1]},
        "n_bits": bundle.n.bit_length(),
        "hypotheses": res.hypotheses,
        "family_retained": res.family_retained,
        "pole_covered_by": list(res.pole_covered_by),
        "c_lower": res.complexity,
        "certificate_k": res.boundary.certificate_k if res.boundary else None,
        "ok": res.ok,
        "reason": res.reason,
    }
    if args.include_n:
        body["n"] = bundle.n
    _write(args, _envelope("witness-q", body))
    if not res.ok:
        _fail("witness-q", res.reason or "lower bound not verified", q=args.Q)
        return EXIT_FAIL
    return EXIT_OK


def cmd_render(args) -> int:
    F = factorize(args.N)
    bps = psi_breakpoints(F)
    if args.region is not None:
        region = Region.at(F, args.region)
        res = pair_complexity(region, args.kmax)
        disks = res.boundary.provenance
        marks = [region.n, region.n_next]
        title = f"R_{args.N}, region [{region.n}, {region.n_next}]"
    else:
        rec, _ = cached_complexity(args.N, args.kmax, _cache(args))
        disks = [tuple(d) for r in rec["regions"] for d in r["disks"]]
        marks = list(bps)
        title = f"R_{args.N}"
    Path(args.output).write_text(render_svg(args.N, disks, marks, title))
    _write(args, _envelope("render", {"N": args.N, "output": str(args.output), "circles": len(disks),
                                      "breakpoints": len(marks)}))
    return EXIT_OK


def cmd_cross_validate(args) -> int:
    rep = cross_validate(args.LO, args.HI, args.sample_rate, args.seed, args.kmax, args.jobs)
    out = _envelope(
        "cross-validate",
        {"lo": args.LO, "hi": args.HI, "sample_rate": args.sample_rate, "seed": args.seed,
         "checked": rep.checked, "exact_fallbacks": rep.fallbacks,
         "mismatches": rep.mismatches, "unresolved": rep.unresolved, "ok": rep.ok},
    )
    _write(args, out)
    if not rep.ok:
        _fail("cross-validate", "mismatch or unresolved region",
              mismatches=len(rep.mismatches), unresolved=len(rep.unresolved))
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--kmax", type=int, default=None, help=f"level budget (default {DEFAULT_KMAX})")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--cache-dir", default=None, help="result cache (default $FORD_CACHE or ./.ford-cache)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--timings", action="store_true", help="add wall-clock timings to the output")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="ford-complexity", description="Boundary sets and pole complexity of Ford-disk regions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("complexity", parents=[common], help="c(N) with every region")
    s.add_argument("N", type=int)
    s.set_defaults(func=cmd_complexity)

    s = sub.add_parser("region", parents=[common], help="boundary set of the region starting at n")
    s.add_argument("N", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_region)

    s = sub.add_parser("sweep", parents=[common], help="compare c(N) = 0 with the predicate over a range")
    s.add_argument("LO", type=int)
    s.add_argument("HI", type=int)
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("witness-c1", parents=[common], help="CRT witness n with c(N, n) >= 1")
    s.add_argument("N", type=int)
    s.set_defaults(func=cmd_witness_c1)

    s = sub.add_parser("witness-q", parents=[common], help="build and verify the q-family witness")
    s.add_argument("Q", type=int)
    s.add_argument("--include-n", action="store_true", help="print the full witness n")
    s.set_defaults(func=cmd_witness_q)

    s = sub.add_parser("render", parents=[common], help="SVG of R_N or of one region")
    s.add_argument("N", type=int)
    s.add_argument("--region", type=int, default=None, metavar="n")
    s.add_argument("-o", "--output", required=True, metavar="FILE.svg")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("cross-validate", parents=[common], help="engine against the independent oracle")
    s.add_argument("LO", type=int)
    s.add_argument("HI", type=int)
    s.add_argument("--sample-rate", type=float, default=1.0)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_cross_validate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _fail("usage", str(exc))
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    args.kmax_given = args.kmax is not None
    if args.kmax is None:
        args.kmax = DEFAULT_KMAX
    if args.kmax < 1 or args.jobs < 1:
        _fail("usage", "--kmax and --jobs must be positive")
        return EXIT_USAGE
    try:
        return args.func(args)
    except UnresolvedRegion as exc:
        _fail("unresolved", str(exc), N=exc.region.N.value, k_max=exc.k_max)
        return EXIT_FAIL
    except DomainError as exc:
        _fail("domain", str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
