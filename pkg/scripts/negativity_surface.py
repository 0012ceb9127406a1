"""Write the log-negativity surface over (alpha, n) and print a few slices.

    python scripts/negativity_surface.py --output surface.csv
"""

import argparse

import numpy as np

from lorentz_entanglement.sweep import SweepConfig, run_sweep, to_csv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--output", default="surface.csv")
    ap.add_argument("--alpha-steps", type=int, default=99)
    ap.add_argument("--n-steps", type=int, default=101)
    args = ap.parse_args()

    config = SweepConfig(alpha_steps=args.alpha_steps, n_steps=args.n_steps)
    records = run_sweep(config)
    with open(args.output, "w", newline="") as fh:
        fh.write(to_csv(records))

    surface = np.array([r.log_negativity for r in records]).reshape(args.alpha_steps, args.n_steps)
    alphas = np.array([r.alpha for r in records[:: args.n_steps]])
    ns = np.array([r.n for r in records[: args.n_steps]])
    print(f"wrote {len(records)} records to {args.output}")
    print("alpha    " + "  ".join(f"n={n:.2f}" for n in ns[:: max(1, len(ns) // 5)]))
    for i in range(0, len(alphas), max(1, len(alphas) // 8)):
        row = surface[i, :: max(1, len(ns) // 5)]
        print(f"{alphas[i]:.3f}    " + "  ".join(f"{v:6.4f}" for v in row))
    # smallest n at which each alpha still has a negative partial transpose
    onset = [ns[np.argmax(surface[i] > 0)] if surface[i].any() else None for i in range(len(alphas))]
    mid = len(alphas) // 2
    print(f"entanglement survives down to n = {onset[mid]:.2f} at alpha = {alphas[mid]:.3f}")


if __name__ == "__main__":
    main()
