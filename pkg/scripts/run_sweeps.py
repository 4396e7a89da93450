"""Run the three verification sweeps at chosen bounds and print a summary table.

    python scripts/run_sweeps.py --max-lambda 6 --max-n 10 --jobs 4
"""

import argparse
import time

from littlewood.complexes import euler_identity_sweep, theorem61_check
from littlewood.modification import closed_form_check


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-lambda", type=int, default=5)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--max-mu", type=int, default=6)
    parser.add_argument("--max-degree", type=int, default=6)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    runs = [
        ("thm34", lambda: closed_form_check(args.max_lambda + 3, args.max_mu)),
        ("thm61", lambda: theorem61_check(args.max_lambda, args.max_n, jobs=args.jobs)),
        ("thm41", lambda: euler_identity_sweep(args.max_n, args.max_degree)),
    ]
    print(f"{'suite':<8}{'cases':>10}{'violations':>12}{'seconds':>10}")
    for name, fn in runs:
        start = time.perf_counter()
        report = fn()
        print(f"{name:<8}{report.cases:>10}{len(report.violations):>12}{time.perf_counter() - start:>10.2f}")


if __name__ == "__main__":
    main()
