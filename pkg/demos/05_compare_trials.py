"""
Comparing regimes across seeds
==============================

Paired Wilcoxon test on per-seed mAP and the class-wise gain table, read
from the comparison runs when they exist (``run_comparison.py``).
"""
import sys
from pathlib import Path

import numpy as np

from weakattn.experiments import Workspace
from weakattn.metrics import wilcoxon_signed_rank
from weakattn.report import TrialSet, classwise_report, paired_maps, summarize
from weakattn.synth import SHORT_CLASSES

root = Path(sys.argv[1] if len(sys.argv) > 1 else "experiments")
ws = Workspace(root)
available = [n for n in ("attn_unsup", "attn_self", "attn_strong", "transfer")
             if all(ws.cached(n, s) for s in ws.protocol.seeds)]
if not {"attn_unsup", "attn_self"} <= set(available):
    sys.exit(f"no finished comparison under {root}; run demos/run_comparison.py first")

sets = {n: TrialSet([ws.cached(n, s).report for s in ws.protocol.seeds]) for n in available}
for n, ts in sets.items():
    print(f"{n:>12s}  test mAP {summarize(ts.maps())}")

# %%
a, b = paired_maps(sets["attn_self"], sets["attn_unsup"])
print("self > unsup, one-sided p =", wilcoxon_signed_rank(a, b))

# %%
# Class-wise gain sorted by mean event duration; short classes are marked.
rows = sorted(classwise_report(sets["attn_self"], sets["attn_unsup"]), key=lambda r: r["mean_duration_s"])
for r in rows:
    short = "*" if sets["attn_self"].classes.index(r["class"]) in SHORT_CLASSES else " "
    print(f"{short}{r['class']:>12s}  {r['mean_duration_s']:.2f} s  {r['delta_ap']:+.4f}")

# %%
if "attn_strong" in sets:
    iou = {n: np.nanmean([ws.cached(n, s).report.iou for s in ws.protocol.seeds], axis=0) for n in sets
           if n != "transfer"}
    for n, v in iou.items():
        print(f"{n:>12s}  median per-class IoU {np.nanmedian(v):.3f}")
