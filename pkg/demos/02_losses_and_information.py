# %% [markdown]
# The contrastive losses and the discrete information quantities they relate to.

# %%
import math

import numpy as np
import torch

from commlab.objectives import (comm_loss, conditional_mutual_informations, cross_loss,
                                discrete_pid_sanity, info_nce, mmi_pid)

# %% [markdown]
# InfoNCE with the positive left out of the denominator. When every row is the
# same vector there is nothing to tell apart, and the loss is log(B - 1).

# %%
for b in (2, 3, 8):
    x = torch.ones(b, 16, dtype=torch.float64)
    print(f"B={b}: loss {float(info_nce(x, x)):.6f}   log(B-1) {math.log(b - 1):.6f}")

e = torch.eye(5, dtype=torch.float64)
print("orthonormal rows, tau=1:", float(info_nce(e, e, temperature=1.0)), -1 + math.log(4))

# %% [markdown]
# The CoMM objective sums 2n + 1 InfoNCE terms: one between two augmented views of
# the full input, and two for each single-modality projection.

# %%
torch.manual_seed(0)
z = [torch.randn(32, 64) for _ in range(4)]
out = comm_loss(z[0], z[1], z[2:])
for name, value in out.terms.items():
    print(f"{name:10s} {float(value):.4f}")
print("total", float(out.total), "= L + L_1 + L_2 =", float(out.L + sum(out.L_i)))
print("CLIP-style cross loss between the two projections:", float(cross_loss(z[2], z[3])))

# %% [markdown]
# Three binary two-input functions and their decomposition under the minimum
# mutual information redundancy: XOR is pure synergy, COPY pure redundancy,
# and reading only the first input is pure uniqueness.

# %%
def table(fn):
    p = np.zeros((2, 2, 2))
    for a in range(2):
        for b in range(2):
            p[a, b, fn(a, b)] += 0.25
    return p


copy = np.zeros((2, 2, 2))
copy[0, 0, 0] = copy[1, 1, 1] = 0.5
for name, p in (("XOR", table(lambda a, b: a ^ b)), ("COPY", copy), ("UNIQUE", table(lambda a, b: a))):
    r, u1, u2, s = mmi_pid(p)
    print(f"{name:6s} I1,I2,I12={np.round(discrete_pid_sanity(p), 3)}  R={r:.3f} U1={u1:.3f} U2={u2:.3f} S={s:.3f}")

# %% [markdown]
# Uniqueness plus twice the synergy equals the two conditional informations, for any table.

# %%
p = np.random.default_rng(1).dirichlet(np.ones(8)).reshape(2, 2, 2)
r, u1, u2, s = mmi_pid(p)
print(u1 + u2 + 2 * s, sum(conditional_mutual_informations(p)))
