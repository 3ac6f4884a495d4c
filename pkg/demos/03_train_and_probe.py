# %% [markdown]
# Train CoMM and the Cross baseline for a few steps on small Trifeature data, then
# read redundancy, uniqueness and synergy off the frozen representations with
# linear probes. At this budget the numbers only show the plumbing; the desk and
# full configs in configs/ are where the method separates from the baseline.

# %%
import torch

from commlab.probes import interaction_report
from commlab.training import TrainConfig, train_run
from commlab.trifeature import TrifeatureSpec, generate_datasets

torch.set_num_threads(1)
spec = TrifeatureSpec.from_profile("mini_32")
exp1, exp2 = generate_datasets(spec, seed=0, n_train=512, n_test=512, n_probe=512)

# %%
reports = {}
for objective in ("comm", "cross"):
    models = {}
    for exp, ds in ((1, exp1), (2, exp2)):
        cfg = TrainConfig(objective=objective, profile="mini_32", epochs=2, batch_size=64,
                          seed=exp, checkpoint_every=0)
        models[exp] = train_run(cfg, ds).model
    reports[objective] = interaction_report(models, {1: exp1, 2: exp2}, probe_seeds=range(2))

# %%
for objective, rep in reports.items():
    print(objective)
    print(rep.to_markdown())
