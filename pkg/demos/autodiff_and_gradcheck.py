"""Reverse-mode gradients through a SimNorm MLP, checked against central differences.

    python demos/autodiff_and_gradcheck.py
"""
import numpy as np

from tdopt.nn import MlpParams, Tensor, backward, forward_mlp
from tdopt.nn import autograd as ag

rng = np.random.default_rng(0)
x = rng.normal(size=(3, 5))
w1, b1 = rng.normal(0, 0.5, (5, 16)), np.zeros(16)
w2, b2 = rng.normal(0, 0.5, (16, 8)), np.zeros(8)
target = rng.dirichlet(np.ones(4), (3, 2)).reshape(3, 8)


def loss(*arrays, grad=False):
    ts = [Tensor(a, requires_grad=grad) for a in arrays]
    net = MlpParams([ts[0], ts[2]], [ts[1], ts[3]], ["mish", "simnorm"], [True, False], 4)
    out = forward_mlp(net, Tensor(x))
    return ag.mean(ag.square(ag.sub(out, target))), ts, out


value, tensors, out = loss(w1, b1, w2, b2, grad=True)
g_w1 = backward(value, tensors)[0]
print(f"loss {value.item():.6f}")

h = 1e-4
for idx in [(0, 0), (2, 5), (4, 15)]:
    old = w1[idx]
    w1[idx] = old + h
    up = loss(w1, b1, w2, b2)[0].item()
    w1[idx] = old - h
    down = loss(w1, b1, w2, b2)[0].item()
    w1[idx] = old
    print(f"dL/dW1{idx}: autograd {g_w1[idx]: .8e}   central difference {(up - down) / (2 * h): .8e}")

# SimNorm output: each group of 4 is a probability vector
print("group sums:", out.data.reshape(3, 2, 4).sum(-1).round(12).tolist())
