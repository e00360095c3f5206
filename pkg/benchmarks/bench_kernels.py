"""Time the compiled and numpy dense-layer kernels on MNIST-MLP-sized shapes.

    python3 benchmarks/bench_kernels.py [--repeat 200]
"""
import argparse
import timeit

import numpy as np

from cvfl import kernels

# (batch, fan_in, fan_out): a bottom layer on a 196-column feature block, its embedding layer, and the top head.
SHAPES = [(32, 196, 64), (32, 64, 16), (32, 64, 10), (2000, 196, 64)]


def bench(mod, shape, act, repeat):
    rng = np.random.default_rng(0)
    n, k, m = shape
    x = rng.normal(size=(n, k))
    W = rng.normal(size=(m, k)) * 0.1
    b = rng.normal(size=m)
    out = mod.dense_forward(x, W, b, act)
    g = rng.normal(size=out.shape)
    fwd = min(timeit.repeat(lambda: mod.dense_forward(x, W, b, act), number=repeat, repeat=3)) / repeat
    bwd = min(timeit.repeat(lambda: mod.dense_backward(x, W, out, g, act), number=repeat, repeat=3)) / repeat
    return fwd, bwd


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the numpy backend is timed")
    print(f"{'shape':>18} {'backend':>8} {'forward us':>11} {'backward us':>12}")
    for shape in SHAPES:
        base = None
        for name, mod in backends.items():
            fwd, bwd = bench(mod, shape, kernels.RELU, args.repeat)
            speed = "" if base is None else f"  x{(base[0] + base[1]) / (fwd + bwd):.2f} vs python"
            base = base or (fwd, bwd)
            print(f"{str(shape):>18} {name:>8} {fwd * 1e6:11.1f} {bwd * 1e6:12.1f}{speed}")


if __name__ == "__main__":
    main()
