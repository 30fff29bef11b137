"""Figures for the cycle-model report, written to files (Agg backend)."""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from . import cyclemodel  # noqa: E402

_PHASE_COLORS = {
    "eval_extra": "#999999",
    "eval": "#4c72b0",
    "mac": "#dd8452",
    "interp": "#55a868",
}


def save_figure(fig, path):
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_mac_latency(path, highlight=4):
    ns = cyclemodel.valid_parallelism()
    cycles = [cyclemodel.mac_latency(n) for n in ns]
    fig, ax = plt.subplots(figsize=(5.5, 3.5))
    ax.plot(ns, cycles, marker="o", color="#4c72b0")
    if highlight in ns:
        y = cyclemodel.mac_latency(highlight)
        ax.annotate(f"n={highlight}: {y}", (highlight, y),
                    textcoords="offset points", xytext=(10, 10))
    ax.set_xscale("log", base=2)
    ax.set_xticks(ns)
    ax.set_xticklabels([str(n) for n in ns])
    ax.set_xlabel("parallel multipliers per MAC unit")
    ax.set_ylabel("point-multiplication cycles")
    ax.grid(True, alpha=0.3)
    return save_figure(fig, path)


def plot_schedule(path, l=3, n_parallel=4):
    """Gantt chart of the lazy and eager matrix-vector schedules."""
    fig, ax = plt.subplots(figsize=(8, 2.8))
    for y, lazy in ((1, True), (0, False)):
        for ph in cyclemodel.schedule_matvec(l, n_parallel, lazy=lazy):
            ax.broken_barh([(ph.start, ph.cycles)], (y - 0.35, 0.7),
                           facecolors=_PHASE_COLORS[ph.kind], edgecolor="white",
                           linewidth=0.4)
    ax.set_yticks([0, 1])
    ax.set_yticklabels(["eager", "lazy"])
    ax.set_xlabel("clock cycle")
    handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in _PHASE_COLORS.values()]
    ax.legend(handles, list(_PHASE_COLORS), ncol=4, loc="upper center",
              bbox_to_anchor=(0.5, 1.3), frameon=False)
    return save_figure(fig, path)


def render_report_figures(outdir, n_parallel=4):
    return [
        plot_mac_latency(os.path.join(outdir, "mac_latency.png"), n_parallel),
        plot_schedule(os.path.join(outdir, "matvec_schedule.png"), 3, n_parallel),
    ]
