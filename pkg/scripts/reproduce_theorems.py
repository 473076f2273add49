"""Run the full verification suite and dump report + surface tables to results/."""

import argparse
from pathlib import Path

from loghankel.cli import main as cli_main


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="results")
    parser.add_argument("--samples", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--grid", type=int, default=201, help="grid for the CSV surface tables")
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    code = cli_main(["verify", "--samples", str(args.samples), "--seed", str(args.seed),
                     "--json", str(out / "report.json")])
    for fam in ("ss", "ks"):
        cli_main(["surface", "--family", fam, "--grid", str(args.grid), "--out", str(out / f"surface_{fam}.csv")])
    for tag in ("f1", "f2", "f3", "f4", "koebe"):
        cli_main(["eval", "--function", tag, "--json", str(out / f"eval_{tag}.json")])
    raise SystemExit(code)


if __name__ == "__main__":
    main()
