"""Run (or resume) the five-seed comparison behind the acceptance checks.

Trains attn_unsup, attn_self and attn_strong from scratch, an average-pool
model, and attn_self initialised from that model, for every seed. Results
land in ROOT/runs and are reused by tests/test_acceptance.py.

    python demos/run_comparison.py --root runs_default
"""
import argparse
import logging

from weakattn.experiments import TRIALS, Protocol, Workspace

parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
parser.add_argument("--root", default="experiments")
parser.add_argument("--epochs", type=int, default=Protocol.epochs)
parser.add_argument("--dtype", default=Protocol.dtype, choices=("float64", "float32"))
parser.add_argument("--trials", nargs="+", default=list(TRIALS), choices=list(TRIALS))
args = parser.parse_args()

logging.basicConfig(level=logging.INFO, format="%(asctime)s %(name)s %(message)s")
ws = Workspace(args.root, Protocol(epochs=args.epochs, dtype=args.dtype))
ws.run_all(args.trials)

for name in args.trials:
    maps = [round(t.report.map, 4) for t in ws.trials(name)]
    print(f"{name:>12s}  test mAP per seed {maps}")
