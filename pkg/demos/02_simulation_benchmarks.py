#!/usr/bin/env python3
"""The four simulation benchmarks: error vs factor count, both methods.

Reproduces the benchmark curves on the four generator kinds:

1. iid Gaussian: error falls linearly, methods identical.
2. rank-2 white noise: error hits zero at two factors.
3. AR(1) latent + noise: smooth decrease, methods agree.
4. circularly shifted clusters: filters win until the factor count
   reaches the number of clusters, then the curves flatten and agree.

Writes per-figure CSVs next to this script and, when matplotlib is
importable, a PNG per scenario. Expect a couple of minutes at K=20.
"""

import os

import numpy as np

from tsfactors import SimSpec, run_benchmark

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:  # plots are optional, CSVs always written
    plt = None

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "output")
os.makedirs(OUT, exist_ok=True)

SCENARIOS = [
    ("iid_gaussian", SimSpec(kind="iid-gaussian", n=20, T=1000, seed=7)),
    ("rank2_white", SimSpec(kind="lowrank-white", n=20, T=1000, seed=11, rank=2)),
    ("ar_latent", SimSpec(kind="ar-latent", n=20, T=1000, seed=13)),
    (
        "two_cluster_shift",
        SimSpec(kind="shifted-clusters", n=20, T=1000, seed=17, shifts=(((0, 10), 40),)),
    ),
    (
        "three_cluster_shift",
        SimSpec(
            kind="shifted-clusters", n=20, T=1000, seed=19,
            shifts=(((0, 6), 40), ((6, 12), 80)),
        ),
    ),
]

for name, spec in SCENARIOS:
    report = run_benchmark(spec, sweep=range(1, 21), k_tests=20)
    csv_path = os.path.join(OUT, f"benchmark_{name}.csv")
    report.save_figure_csv(csv_path)
    inst = report.test_means("instant")
    dyn = report.test_means("dynamic")
    print(f"{name:20s} err@1 instant {inst[0]:.3f} dynamic {dyn[0]:.3f} -> {csv_path}")

    if plt is not None:
        sweep = np.asarray(report.sweep)
        fig, ax = plt.subplots(figsize=(5, 3.4))
        for method, marker in (("instant", "o"), ("dynamic", "s")):
            mean = report.test_means(method)
            std = np.asarray(report.rows[method]["test_std"])
            ax.errorbar(sweep, mean, yerr=std, marker=marker, ms=3, label=method)
        ax.set_xlabel("number of factors")
        ax.set_ylabel("normalized test error")
        ax.set_title(name.replace("_", " "))
        ax.legend()
        fig.tight_layout()
        fig.savefig(os.path.join(OUT, f"benchmark_{name}.png"), dpi=120)
        plt.close(fig)

print("done; tables" + (" and plots" if plt else "") + f" in {OUT}")
