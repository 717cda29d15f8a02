"""Timing suites behind ``densek bench``: rows of measurements plus a figure."""

from __future__ import annotations

import csv
import io
import random
import statistics
import time
from collections.abc import Callable
from pathlib import Path

from matplotlib.figure import Figure

from .approx import approx_densest
from .block_dp import solve_block_weighted
from .blocks import find_min_block_deletion_set
from .deletion import solve_with_deletion_set
from .generators import InstanceSpec, generate
from .oracle import brute_force_solve

Row = dict[str, object]


def _clock(fn: Callable[[], object]) -> tuple[float, object]:
    t = time.perf_counter()
    out = fn()
    return time.perf_counter() - t, out


def block_suite(quick: bool = False, threads: int | None = None) -> list[Row]:
    sizes = (500, 1000, 2000) if quick else (1250, 2500, 5000, 10000, 20000)
    k = 10 if quick else 30
    rows = []
    for n in sizes:
        g = generate(InstanceSpec("block", n, seed=n)).graph
        for trial in range(3):
            secs, res = _clock(lambda: solve_block_weighted(g, None, k))
            rows.append({"n": n, "k": k, "trial": trial, "seconds": secs, "value": res.value})
    return rows


def deletion_suite(quick: bool = False, threads: int | None = None) -> list[Row]:
    ds = range(3, 7) if quick else range(8, 15)
    n, k = (60, 8) if quick else (200, 20)
    seeds = range(2) if quick else range(5)
    rows = []
    for seed in seeds:
        for d in ds:
            inst = generate(InstanceSpec("planted", n, seed=seed, d=d, p=0.05))
            secs, res = _clock(lambda: solve_with_deletion_set(
                inst.graph, inst.deletion_set, k, threads=threads))
            rows.append({"d": d, "n": n, "k": k, "seed": seed, "seconds": secs, "value": res.value})
    return rows


def approx_suite(quick: bool = False, threads: int | None = None) -> list[Row]:
    rng = random.Random(7)
    rows = []
    for trial in range(30 if quick else 200):
        n = rng.randint(4, 9 if quick else 12)
        g = generate(InstanceSpec("er", n, seed=trial, p=rng.uniform(0.2, 0.7))).graph
        d = find_min_block_deletion_set(g, n)
        k = rng.randint(2, n)
        opt = brute_force_solve(g, None, k).value
        res = approx_densest(g, d, k)
        rows.append({"trial": trial, "n": n, "k": k, "d": len(d), "opt": opt, "approx": res.value,
                     "ratio": res.value / opt if opt else 1.0, "branch": res.branch})
    return rows


def _plot_block(rows: list[Row], ax) -> None:
    ns = sorted({r["n"] for r in rows})
    med = [statistics.median(r["seconds"] for r in rows if r["n"] == n) for n in ns]
    ax.loglog(ns, med, "o-", label="median of 3")
    ax.loglog(ns, [med[0] * n / ns[0] for n in ns], "--", color="grey", label="linear in n")
    ax.set_xlabel("n")
    ax.set_ylabel("seconds")
    ax.set_title(f"block-graph DP, k={rows[0]['k']}")
    ax.legend()


def _plot_deletion(rows: list[Row], ax) -> None:
    ds = sorted({r["d"] for r in rows})
    med = [statistics.median(r["seconds"] for r in rows if r["d"] == d) for d in ds]
    ax.semilogy(ds, med, "o-", base=2, label="median over seeds")
    ax.semilogy(ds, [med[0] * 2 ** (d - ds[0]) for d in ds], "--", base=2, color="grey", label="2^d")
    ax.set_xlabel("|D|")
    ax.set_ylabel("seconds")
    ax.set_title(f"deletion framework, n={rows[0]['n']}, k={rows[0]['k']}")
    ax.legend()


def _plot_approx(rows: list[Row], ax) -> None:
    ax.hist([r["ratio"] for r in rows], bins=20, range=(0.5, 1.0), color="tab:blue")
    ax.axvline(0.5, color="red", linestyle="--", label="guarantee")
    ax.set_xlabel("approx / optimum")
    ax.set_ylabel("instances")
    ax.set_title("split approximation")
    ax.legend()


SUITES: dict[str, tuple[Callable[..., list[Row]], Callable]] = {
    "block": (block_suite, _plot_block),
    "deletion": (deletion_suite, _plot_deletion),
    "approx": (approx_suite, _plot_approx),
}


def to_csv(rows: list[Row]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def run_suite(name: str, out_dir: Path, quick: bool = False,
              threads: int | None = None) -> tuple[list[Row], Path, Path]:
    """Run a suite, write ``<name>.csv`` and ``<name>.png`` into ``out_dir``."""
    measure, plot = SUITES[name]
    rows = measure(quick=quick, threads=threads)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{name}.csv"
    csv_path.write_text(to_csv(rows))
    fig = Figure(figsize=(5, 3.5))
    plot(rows, fig.add_subplot())
    fig.tight_layout()
    png_path = out_dir / f"{name}.png"
    fig.savefig(png_path, dpi=120)
    return rows, csv_path, png_path
