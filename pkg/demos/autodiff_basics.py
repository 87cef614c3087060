"""Reverse-mode autodiff with the ndgrad tensors.

Build a tiny GRU regression, differentiate it, and compare against central
finite differences.  Runs in a second.
"""

# %%
import numpy as np

from carel import ndgrad as nd

rng = np.random.default_rng(0)
gru = nd.init_gru(rng, 3, 4)
head = nd.init_linear(rng, 4, 1)
xs = nd.Tensor(rng.normal(size=(1, 6, 3)))
target = 0.5


def loss_fn():
    _, h = nd.gru_sequence(xs, nd.Tensor(np.zeros((1, 4))), gru)
    y = nd.linear(h, head)
    return nd.mean(nd.square(nd.sub(y, nd.Tensor([[target]]))))


# %% Every op run under a tape is recorded; backward walks it once.
with nd.Tape() as tape:
    loss = loss_fn()
params = list(gru.values()) + list(head.values())
grads = nd.backward(tape, loss, params)
print(f"loss {loss.item():.6f}")

# %% Central differences agree to well under 1e-6 relative error.
for p in params:
    numeric = nd.numeric_grad(lambda: loss_fn().item(), p)
    flat = grads[p].reshape(-1)
    err = max(nd.relative_error(flat[i], g) for i, g in numeric.items())
    print(f"{p.name:10s} shape {str(p.shape):8s} max rel err {err:.1e}")

# %% Shapes must match exactly; there is no silent broadcasting.
try:
    nd.add(nd.Tensor(np.zeros((2, 3))), nd.Tensor(np.zeros(3)))
except Exception as exc:
    print(type(exc).__name__, exc)
