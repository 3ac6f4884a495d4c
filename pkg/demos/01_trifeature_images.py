# %% [markdown]
# Trifeature images: every picture is one shape, one texture and one colour.
# Pairs of pictures are built so that the shape is shared (a redundant label),
# each texture is private to its picture (unique labels), and a hidden
# texture-to-colour mapping decides a label neither picture reveals alone.

# %%
import numpy as np
from PIL import Image

from commlab.trifeature import (SynergyMapping, TrifeatureSpec, generate_datasets,
                                positive_rate, render_image)

spec = TrifeatureSpec.from_profile("desk_64")
print(spec)

# %% [markdown]
# One row per shape, textures along the columns, colour cycling with the column.

# %%
tiles = [[render_image(s, t, (s + t) % 10, spec=spec).to_uint8() for t in range(10)]
         for s in range(10)]
sheet = np.concatenate([np.concatenate(row, axis=1) for row in tiles], axis=0)
Image.fromarray(sheet).save("trifeature_sheet.png")
print("wrote trifeature_sheet.png", sheet.shape)

# %% [markdown]
# The two pretraining datasets. Experiment 1 pairs share the shape and differ in
# texture. Experiment 2 keeps only pairs whose (first texture, second colour)
# respects the mapping; its test pairs are the experiment-1 test pairs relabelled.

# %%
exp1, exp2 = generate_datasets(spec, seed=0, n_train=2000, n_test=1024, n_probe=1000)
for name, ds in (("experiment 1", exp1), ("experiment 2", exp2)):
    print(name, {s: len(ds.split(s)) for s in ("train", "test", "probe")})

p = exp1.split("train")[0]
print("pair:", p.first.combination, p.second.combination)
print("mapping", exp2.mapping.pairs)
print("test positive rate %.3f (one tenth in expectation)" % positive_rate(exp2.split("test")))

# %%
m = SynergyMapping.random(0)
hits = sum(m.label(t, c) for t in range(10) for c in range(10))
print("texture/colour cells that satisfy the mapping:", hits, "of 100")
