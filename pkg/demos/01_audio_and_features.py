"""
Audio clips and log-mel features
================================

Render one synthetic clip, write and reload it as WAV, and turn it into the
fixed 998 x 64 log-mel map the network consumes. Unpadded extraction keeps
the natural length for inference on shorter or longer audio.
"""
import tempfile
from pathlib import Path

import numpy as np

from weakattn.features import AudioClip, extract_features, load_wav, num_frames, write_wav
from weakattn.synth import CLASS_NAMES, ClipSpec, EventSpec, synth_clip

# %%
# A 440 Hz tone from 2.0 s to 2.6 s and a falling chirp from 5 s to 8 s,
# both 10 dB above the pink-noise background in their own band.
spec = ClipSpec((EventSpec(0, 2.0, 0.6, 10 ** 0.5), EventSpec(5, 5.0, 3.0, 10 ** 0.5)))
clip, annotations = synth_clip(spec, seed=1)
for c, start, end in annotations:
    print(f"{CLASS_NAMES[c]:>12s}  {start:.2f}-{end:.2f} s")

# %%
# WAV round trip (16-bit PCM, so values come back quantised).
tmp = Path(tempfile.mkdtemp())
write_wav(tmp / "clip.wav", clip)
back = load_wav(tmp / "clip.wav")
print("max quantisation error", np.abs(back.samples - clip.samples).max())

# %%
# Fixed-length features: 10 s at 16 kHz with a 25 ms window and 10 ms hop.
feats = extract_features(back)
print("feature map", feats.shape)

# The tone lights up a narrow band while it is on.
band = feats[200:260].mean(axis=0).argmax()
print("loudest mel bin during the tone", band, "vs background mean", feats[:150, band].mean().round(2),
      "->", feats[200:260, band].mean().round(2))

# %%
# Variable length: a 3 s excerpt is not padded when target_samples is None.
short = AudioClip(back.samples[: 3 * 16000], 16000)
print("3 s unpadded", extract_features(short, None).shape, "expected frames", num_frames(3 * 16000))
print("3 s padded  ", extract_features(short).shape)

# %%
# Other supported rates (32, 44.1, 48 kHz) are resampled to 16 kHz first.
at_32k = AudioClip(np.repeat(back.samples, 2), 32000)
print("32 kHz input ->", extract_features(at_32k).shape)
