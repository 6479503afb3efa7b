"""
Attention pooling, pseudo labels and losses
===========================================

How one clip's head outputs turn into a clip prediction and into the loss
terms of each training regime.
"""
import numpy as np

from weakattn.attention import (
    average_pool,
    clip_pool,
    generate_pseudo_labels,
    normalize_attention,
    pseudo_threshold,
)
from weakattn.losses import MODES, STRONG_MODES, objective

rng = np.random.default_rng(0)
C, T = 3, 8
seg = rng.uniform(0.05, 0.3, (C, T))
seg[0] = rng.uniform(0.02, 0.12, T)
seg[0, 2:5] = [0.8, 0.9, 0.85]     # class 0 is active in segments 2-4
att = rng.uniform(0.1, 0.4, (C, T))
att[0, 2:5] = 0.95
weak = np.array([1, 0, 0])

# %%
# Attention rows are normalised over time, then weight the segment
# predictions. Uniform weights give plain averaging.
A = normalize_attention(att)
print("row sums", A.sum(axis=1))
print("attention pooled", clip_pool(A, seg).round(3))
print("average pooled  ", average_pool(seg).round(3))

# %%
# Pseudo labels: the threshold is the mean segment prediction over classes
# absent from the clip; present classes are positive where they exceed it.
theta = pseudo_threshold(seg, weak)
P = generate_pseudo_labels(seg, weak, theta)
print("threshold", round(float(theta), 3))
print(P.astype(int))

# %%
# Loss components for every regime (strong targets only where needed).
Y = np.zeros((C, T))
Y[0, 2:5] = 1
for mode in MODES:
    strong = Y[None] if mode in STRONG_MODES else None
    rep = objective(mode, seg[None], att[None], weak[None], strong, alpha=1.0).report
    parts = {k: round(getattr(rep, k), 4) for k in ("pred", "att", "self_sup", "segment") if getattr(rep, k) is not None}
    print(f"{mode:>22s}  total {rep.total:.4f}  {parts}")
