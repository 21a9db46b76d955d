#!/usr/bin/env python3
"""Run the brute-force verification suites at configurable bounds and
report per-suite timing.  Larger bounds than the CLI defaults are useful
for overnight confidence runs, e.g.:

    python scripts/run_verifications.py --suite gysin --max-e 7 --max-weight 6
"""
import argparse
import sys
import time

from qlocus.schur import load_persistent_cache, save_persistent_cache
from qlocus.verify import SUITES, run_suites


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--suite", choices=("all", *SUITES), default="all")
    parser.add_argument("--max-e", type=int)
    parser.add_argument("--max-f", type=int)
    parser.add_argument("--max-n", type=int)
    parser.add_argument("--max-p", type=int)
    parser.add_argument("--max-weight", type=int)
    parser.add_argument("--cache-dir")
    parser.add_argument(
        "--failures-only", action="store_true", help="print only failing cases"
    )
    args = parser.parse_args()

    if args.cache_dir:
        load_persistent_cache(args.cache_dir)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    bounds = {
        "max_e": args.max_e,
        "max_f": args.max_f,
        "max_n": args.max_n,
        "max_p": args.max_p,
        "max_weight": args.max_weight,
    }
    total = passed = 0
    for name in names:
        t0 = time.perf_counter()
        results = run_suites([name], **bounds)
        dt = time.perf_counter() - t0
        good = sum(1 for c in results if c.ok)
        total += len(results)
        passed += good
        for case in results:
            if case.ok and args.failures_only:
                continue
            print(case.render())
        print(f"# suite {name}: {good}/{len(results)} in {dt:.2f}s")
    ok = passed == total
    print(f"SUMMARY {passed}/{total} {'PASS' if ok else 'FAIL'}")
    if args.cache_dir:
        save_persistent_cache(args.cache_dir)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
