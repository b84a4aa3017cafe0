"""Figure rendering for reports and balance traces.

All functions write PNG files; the Agg backend is forced so they work
headless.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .balance import BalanceTrace
from .simulate import SimulationReport

__all__ = ["save_workload_figure", "save_trace_figure"]


def save_workload_figure(report: SimulationReport, path: str) -> None:
    """Bar chart of conditions measured per sensor."""
    fig, ax = plt.subplots(figsize=(6, 3.2))
    sensors = list(range(1, report.n + 1))
    ax.bar(sensors, report.per_sensor_conditions, color="tab:blue")
    ax.set_xlabel("sensor")
    ax.set_ylabel("conditions measured")
    ax.set_title(
        f"Per-sensor workload, [n={report.n}, k={report.k}] over GF({report.q_used})"
    )
    ax.set_xticks(sensors)
    ax.set_ylim(0, max(report.per_sensor_conditions) + 1)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_trace_figure(trace: BalanceTrace, path: str) -> None:
    """Column-weight spread across the balancing iterations."""
    fig, ax = plt.subplots(figsize=(6, 3.2))
    spreads = [r.spread_before for r in trace.records]
    final_spread = max(trace.final_weights) - min(trace.final_weights)
    xs = list(range(len(spreads) + 1))
    ax.step(xs, spreads + [final_spread], where="post", color="tab:orange")
    ax.set_xlabel("iteration")
    ax.set_ylabel("max - min column weight")
    ax.set_title(f"Balancing progress ({len(spreads)} swaps)")
    ax.set_ylim(0, max(spreads + [final_spread]) + 1)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
