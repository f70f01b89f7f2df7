"""Regenerate every table as CSV and text under results/tables/.

Run: python3 scripts/reproduce_tables.py [--n-max 15] [--out results/tables]
"""
import argparse
import io
import time
from pathlib import Path

from tokensign.cli import TABLE_KINDS, run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=15)
    ap.add_argument("--out", type=Path, default=Path("results/tables"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for kind in TABLE_KINDS:
        t0 = time.perf_counter()
        for fmt in ("text", "csv"):
            buf = io.StringIO()
            code = run(["table", kind, "--n-max", str(args.n_max), "--format", fmt], stdout=buf)
            if code:
                raise SystemExit(f"table {kind} failed with exit code {code}")
            (args.out / f"{kind}.{'txt' if fmt == 'text' else 'csv'}").write_text(buf.getvalue())
        print(f"== {kind} ({time.perf_counter() - t0:.2f}s)")
        print((args.out / f"{kind}.txt").read_text())


if __name__ == "__main__":
    main()
