"""A short PPO + auxiliary-loss run on the single-object level.

Trains two seeds for 60k frames each (a few minutes on one core), writes the
per-seed metrics CSV, then evaluates the checkpoint on held-out missions.
The same run from the command line:

    carel train --level GoToObj --frames 60000 --carel --tracking --seeds 0,1 --eval-interval 10000
"""

# %%
import os
import tempfile

from carel.config import RunConfig
from carel.harness import read_metrics, run_eval, run_train

root = tempfile.mkdtemp(prefix="carel_demo_")
os.environ["CAREL_OUTPUT_ROOT"] = root
cfg = RunConfig(level="GoToObj", frames=60_000, seeds=(0, 1), carel=True, tracking=True, eval_interval=10_000,
                eval_episodes=32, output_dir="gotoobj")
run_train(cfg)

# %% One CSV per seed; aux_loss is blank in windows without two successes.
for seed in cfg.seeds:
    print(f"\nseed {seed}")
    print(f"{'frame':>7} {'sr_train':>8} {'sr_holdout':>10} {'rl_loss':>8} {'aux_loss':>8} masks {'fps':>6}")
    for r in read_metrics(f"{root}/gotoobj/seed_{seed}/metrics.csv"):
        aux = f"{r.aux_loss:8.4f}" if r.aux_loss is not None else " " * 8
        print(f"{r.frame:7d} {r.sr_train:8.3f} {r.sr_holdout:10.3f} {r.rl_loss:8.4f} {aux} {r.mask_events:5d} "
              f"{r.fps:6.0f}")

# %% Greedy evaluation on fresh held-out missions.
sr = run_eval(f"{root}/gotoobj/seed_0/checkpoint.ndck", episodes=64, split="holdout")
print(f"\nheld-out success rate (seed 0): {sr:.3f}")
print("outputs under", root)
