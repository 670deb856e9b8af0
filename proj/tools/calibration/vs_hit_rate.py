#!/usr/bin/env python3
"""Brute-force Monte Carlo of the version-space hit rate on planted data.

Independent of the C++ code (numpy RNG, vectorized), used to pick the
acceptance band for the gamma-scaling check before the simulator existed.
Prints one row per (variant, gamma): mean hit rate over datasets and the
ratio to the next larger gamma.
"""
import argparse

import numpy as np


def planted(n, dim, gamma, rng, pin=False, rank=None):
    w = rng.standard_normal(dim)
    w /= np.linalg.norm(w)
    y = rng.choice([-1, 1], n)
    if rank is None:
        v = rng.standard_normal((n, dim))
    else:
        basis = rng.standard_normal((rank, dim))
        v = rng.standard_normal((n, rank)) @ basis
    v -= np.outer(v @ w, w)
    v /= np.linalg.norm(v, axis=1)[:, None]
    s = np.full(n, gamma) if pin else rng.uniform(gamma, 1.0, n)
    phi = (y * s)[:, None] * w + np.sqrt(1 - s * s)[:, None] * v
    return phi, y


def hit_rate(phi, y, draws, rng, chunk=20000):
    hits = 0
    for start in range(0, draws, chunk):
        w = rng.standard_normal((min(chunk, draws - start), phi.shape[1]))
        hits += np.count_nonzero(np.all((w @ phi.T) * y > 0, axis=1))
    return hits / draws


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, default=128)
    p.add_argument("--dim", type=int, default=10)
    p.add_argument("--draws", type=int, default=100000)
    p.add_argument("--datasets", type=int, default=5)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--gammas", type=float, nargs="+",
                   default=[0.01, 0.02, 0.04, 0.08])
    args = p.parse_args()

    variants = [("isotropic", False, None), ("isotropic-pinned", True, None),
                ("rank2-pinned", True, 2), ("rank1-pinned", True, 1)]
    print("variant,gamma,hit_rate,ratio_to_next")
    for name, pin, rank in variants:
        rates = []
        for g in args.gammas:
            rng = np.random.default_rng(args.seed)
            vals = []
            for _ in range(args.datasets):
                phi, y = planted(args.n, args.dim, g, rng, pin, rank)
                vals.append(hit_rate(phi, y, args.draws, rng))
            rates.append(float(np.mean(vals)))
        for i, g in enumerate(args.gammas):
            nxt = rates[i + 1] if i + 1 < len(rates) else float("nan")
            ratio = rates[i] / nxt if nxt > 0 else float("nan")
            print(f"{name},{g},{rates[i]:.6g},{ratio:.4g}")


if __name__ == "__main__":
    main()
