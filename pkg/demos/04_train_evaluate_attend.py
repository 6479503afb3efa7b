"""
Train, evaluate and look at attention
=====================================

A miniature end-to-end run: render a small dataset, train the
self-supervised attention model on a slim network for a dozen epochs,
evaluate it, and export the attention map of one test clip as CSV and PGM.
The full-size comparison lives in ``run_comparison.py``.
"""
import tempfile
from pathlib import Path

import numpy as np

from weakattn.data import FeatureStore
from weakattn.manifest import load_manifest
from weakattn.nn import ArchConfig, Conv2D, Head, MaxPool2D
from weakattn.report import export_heatmap
from weakattn.synth import CLASS_NAMES, DatasetConfig, synth_dataset
from weakattn.train import TrainConfig, evaluate, predict, train_model

root = Path(tempfile.mkdtemp())
paths = synth_dataset(DatasetConfig(clips={"train": 48, "val": 16, "test": 16}, seed=3), root)
train, val, test = (load_manifest(paths[s]) for s in ("train", "val", "test"))
store = FeatureStore(root / "features")

# %%
# A slim network with the same head layout and a 1/16 time reduction.
arch = ArchConfig((
    Conv2D(3, 3, 1, 8, pad_t=1, pad_f=1), MaxPool2D(4, 4),
    Conv2D(3, 3, 8, 16, pad_t=1, pad_f=1), MaxPool2D(4, 4),
    Conv2D(3, 4, 16, 32, pad_t=1), Head(8),
))
config = TrainConfig(mode="attn_self", epochs=12, batch_size=8, lr=3e-3, seed=0)
result = train_model(config, train, val, store, arch=arch)
for h in result.log:
    print(f"epoch {h.epoch}  loss {h.loss:.4f}  pred {h.pred:.4f}  self {h.self_sup:.4f}  val mAP {h.val_map:.3f}")
print("selected epoch", result.best_epoch)

# %%
report = evaluate(result.params, arch, config.mode, test, store)
print(f"test mAP {report.map:.3f}")
for name, ap, iou in zip(report.classes, report.ap, report.iou):
    print(f"{name:>12s}  AP {ap:.3f}  IoU {iou:.3f}")

# %%
# Attention of one test clip; the strongest row should be a class the clip contains.
entry = test[0]
scores, seg, A = predict(result.params, arch, config.mode, store.get(test, entry, fixed=False))
print("clip contains", [CLASS_NAMES[c] for c in entry.weak], "top score", CLASS_NAMES[int(np.argmax(scores))])
csv_path, pgm_path = export_heatmap(A, root / "attention")
print("wrote", csv_path, pgm_path)
