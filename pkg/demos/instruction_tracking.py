"""Masking completed subtasks out of a chained instruction.

The tracker splits an instruction at its conjunctions, keeps a score history
for each clause, and masks the current clause once its score jumps to k times
its running mean.  Here the per-step reps are synthetic so the jump happens
exactly when the oracle finishes each subtask.
"""

# %%
import numpy as np

from carel import gridworld as gw
from carel import tracker as trk
from carel.language import detokenize, tokenize

words = tokenize("Go to the red box and go to a green ball, then go to the blue key.")
subtasks = trk.split_instruction(words)
for st in subtasks:
    conj = " ".join(words[slice(*st.conj)]) if st.conj else "-"
    print(f"{' '.join(words[slice(*st.span)]):22s} joined by {conj!r}")
print(detokenize(trk.apply_mask(words, subtasks, 0)))

# %% The masking probability ramps up with training progress.
for frame in (0, 250_000, 500_000, 1_000_000):
    print(f"frame {frame:>9,d}: p = {trk.masking_probability(frame, 1_000_000):.3f}")

# %% Spike rule: enough history, positive mean, and a jump of at least k.
for history, score in (([0.1, 0.1, 0.1], 0.25), ([0.1, 0.1, 0.1], 0.15), ([0.1, 0.1], 0.9), ([-0.2] * 3, 0.1)):
    st = trk.SubtaskState((0, 1))
    for h in history:
        st.record(h)
    print(f"history {history} new {score}: triggered={trk.spike_check(st, score, k=2.0, warmup=3)}")

# %% A scripted episode.  Each clause gets an axis; the running mean leans onto
# clause i exactly at the step the oracle completes it.
world, _, instr = gw.generate("OpenDoorsOrder", seed=5)
ep = gw.rollout(world, gw.oracle_policy())
steps = list(ep.subtask_completion_steps)
words = list(instr.words)
subs = trk.split_instruction(words)
d = len(subs) + 1
V = np.zeros((len(words), d))
for i, st in enumerate(subs):
    V[slice(*st.span), i] = 1.0
means = []
for t in range(1, len(ep) + 1):
    m = np.array([0.9 if steps[i] == t else 0.1 for i in range(len(subs))] + [0.0])
    m[-1] = np.sqrt(1 - np.sum(m ** 2))
    means.append(m)
xs = [means[0]] + [t * means[t - 1] - (t - 1) * means[t - 2] for t in range(2, len(ep) + 1)]

tracker = trk.InstructionTracker(trk.TrackerConfig(k=2.0, warmup_steps=3), np.random.default_rng(0))
tracker.reset(words)
print("\noracle completes subtasks at", steps)
for t, x in enumerate(xs, 1):
    shown = tracker.step(x, V, frame=0, probability=1.0)
    if tracker.events and tracker.events[-1].step == t:
        print(f"step {t:2d}: {detokenize(shown)}")
