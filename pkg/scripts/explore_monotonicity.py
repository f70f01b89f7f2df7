"""Search random signature pairs for violations of the three monotonicity
statements relating frustration and unbalance across k-token graphs.

Writes every counterexample, with both graphs and all measured values, to a
JSON file so each one can be rechecked independently.

Run: python3 scripts/explore_monotonicity.py --trials 1000 --n-max 6 --k 2
"""
import argparse
import io
import json
from pathlib import Path

from tokensign.cli import run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--balanced-only", action="store_true")
    ap.add_argument("--out", type=Path, default=Path("results/monotonicity.json"))
    args = ap.parse_args()
    argv = ["explore-p45", "--trials", str(args.trials), "--n-max", str(args.n_max),
            "--k", str(args.k), "--seed", str(args.seed), "--format", "json"]
    if args.balanced_only:
        argv.append("--balanced-only")
    buf = io.StringIO()
    run(argv, stdout=buf)
    report = json.loads(buf.getvalue())
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(report, indent=2))
    print(f"trials: {report['trials']}  max ell seen: {report['max_ell']['decimal']:.6f}")
    for stmt, cases in report["counterexamples"].items():
        print(f"statement {stmt}: {len(cases)} counterexample(s)")
    print(f"details in {args.out}")


if __name__ == "__main__":
    main()
