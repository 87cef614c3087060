"""Desk-scale directional reproduction.

Trains four configurations (GoToSeq baseline / +CAREL, OpenDoorsOrder
baseline / +CAREL+tracking) for three seeds each, then prints the ordinal
checks.  Seeds are interleaved across configurations so partial results are
comparable; an interrupted run resumes from its last checkpoint.

Runtime is several hours on one core.  Pass ``--check`` to only evaluate the
stored CSVs.

    python3 demos/desk_scale_reproduction.py [--check] [--frames N]
"""

import argparse
import logging
from pathlib import Path

from carel import config as cfgmod
from carel.harness import read_metrics, reproduction, runs

HERE = Path(__file__).resolve().parent.parent
CONFIGS = [HERE / "configs" / f"{name}.cfg" for name in reproduction.RUNS]


def finished(csv_path, frames):
    if not csv_path.exists():
        return False
    recs = read_metrics(csv_path)
    return bool(recs) and recs[-1].frame >= frames


def train_all(frames=None):
    cfgs = []
    for path in CONFIGS:
        cfg = cfgmod.load(path)
        if frames:
            cfg = cfg.replace(frames=frames)
        base = runs.run_dir(cfg)
        base.mkdir(parents=True, exist_ok=True)
        (base / "config.txt").write_text(cfg.to_text())
        cfgs.append(cfg)
    for seed in cfgs[0].seeds:
        for cfg in cfgs:
            seed_dir = runs.run_dir(cfg) / f"seed_{seed}"
            if finished(seed_dir / "metrics.csv", cfg.frames):
                continue
            print(f"training {cfg.output_dir} seed {seed}", flush=True)
            runs.train_seed(cfg, seed, seed_dir, resume=True)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--check", action="store_true", help="skip training; evaluate stored CSVs")
    parser.add_argument("--frames", type=int, help="override the frame budget")
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    if not args.check:
        train_all(args.frames)
    root = runs.output_root() / "results" / "desk_scale"
    for v in reproduction.check_reproduction(root, frames=args.frames or 1_000_000):
        print(f"{'PASS' if v.passed else 'FAIL'}  {v.name}: {v.detail}")


if __name__ == "__main__":
    main()
