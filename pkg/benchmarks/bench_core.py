"""Compare the compiled grid kernels with the numpy fallback.

    python benchmarks/bench_core.py [--grid 200000] [--nodes 1000] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from bbinterp import _backend


def cases(nodes, xs, values, eps):
    aug = nodes
    return {
        "locate": lambda m: m.locate(aug, xs),
        "cardinal_pairs": lambda m: m.cardinal_pairs(aug, eps, xs),
        "lebesgue": lambda m: m.lebesgue(aug, eps, xs),
        "power": lambda m: m.power(aug, eps, xs),
        "interpolate": lambda m: m.interpolate(aug, values, eps, xs),
        "kernel_matrix": lambda m: m.kernel_matrix(eps, xs[:2000], aug[1:-1].copy()),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--grid", type=int, default=200_000)
    parser.add_argument("--nodes", type=int, default=1000)
    parser.add_argument("--eps", type=float, default=10.0)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    interior = np.sort(rng.uniform(0, 1, args.nodes))
    aug = np.concatenate(([0.0], interior, [1.0]))
    xs = rng.uniform(0, 1, args.grid)
    values = rng.normal(size=args.nodes)

    backends = _backend.available()
    if "cython" not in backends:
        print("compiled core not built; only the fallback is available")
    names = sorted(backends)
    print(f"grid={args.grid} nodes={args.nodes} eps={args.eps} (best of {args.repeat}, ms)")
    print(f"{'kernel':<16}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for label, fn in cases(aug, xs, values, args.eps).items():
        times = {}
        for name in names:
            impl = backends[name]
            times[name] = 1e3 * min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat))
        speedup = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{label:<16}" + "".join(f"{times[n]:>12.2f}" for n in names) + f"{speedup:>9.1f}x")


if __name__ == "__main__":
    main()
