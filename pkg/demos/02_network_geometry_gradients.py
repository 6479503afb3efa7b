"""
Network, segment geometry and gradient checks
=============================================

The reference network: four conv/pool blocks, a conv collapsing the
frequency axis, and two 1x1 heads producing segment probabilities and
attention activations per class. Each output segment sees a known frame
range of the input, which is how frame-level annotations become segment
targets.
"""
import numpy as np

from weakattn.attention import segment_geometry
from weakattn.losses import objective
from weakattn.nn import backward, branch_pattern, forward, gradient_check_detail, init_params, reference_arch
from weakattn.synth import ClipSpec, EventSpec, synth_clip
from weakattn.features import extract_features

arch = reference_arch(8)
for name, layer in zip(arch.layer_names(), arch.layers):
    print(f"{name or 'pool':>4s}  {layer}")

# %%
# Segment counts follow the pooling: 998 frames -> 62 segments.
for frames in (298, 998, 1498):
    print(frames, "frames ->", arch.num_segments(frames), "segments")

geo = segment_geometry(arch)
print("jump", geo.jump, "receptive field", geo.rf, "offset", geo.offset)
print("first three segment ranges (frames):", geo.ranges(62, 998)[:3].tolist())

# %%
# Forward pass on one clip.
params = init_params(arch, seed=0)
clip, _ = synth_clip(ClipSpec((EventSpec(2, 4.0, 0.8, 3.0),)), seed=3)
x = extract_features(clip)[None]
seg, att, cache = forward(params, arch, x)
print("segment predictions", seg.shape, "attention", att.shape)

# %%
# Backpropagate the self-supervised objective and compare against central
# differences. Coordinates whose probes fall on different sides of a ReLU,
# max-pool or pseudo-label switch are skipped and counted.
weak = np.zeros((1, 8))
weak[0, 2] = 1
obj = objective("attn_self", seg, att, weak)
grads = backward(params, arch, cache, obj.grad_seg, obj.grad_att)
last = {}


def loss(p):
    s, a, c = forward(p, arch, x)
    o = objective("attn_self", s, a, weak)
    last["branches"] = branch_pattern(c) + [o.pseudo]
    return o.report.total


res = gradient_check_detail(loss, params, grads, num_samples=30, branch_fn=lambda p: last["branches"])
print(f"worst relative error {res.worst:.2e} over {res.checked} coordinates ({res.skipped} at kinks)")
