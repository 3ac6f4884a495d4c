# %% [markdown]
# The experiment harness: a plan names methods, replicates and scale. Each
# (method, replicate, experiment) sub-run trains, is probed, and lands in its own
# directory; rerunning a finished plan does nothing. The smoke plan finishes in
# about a minute on one CPU core.

# %%
from pathlib import Path

import torch

from commlab.harness import ExperimentPlan, plot_results, run_experiment

torch.set_num_threads(1)
plan = ExperimentPlan.from_file(Path(__file__).resolve().parents[1] / "configs" / "smoke.yaml")
plan.output_dir = "demo_smoke"
summary = run_experiment(plan)

# %%
print(Path("demo_smoke/comparison.md").read_text())
print("failed sub-runs:", summary["failed"])

# %%
for path in plot_results("demo_smoke"):
    print(path)
