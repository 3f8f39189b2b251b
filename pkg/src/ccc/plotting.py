"""SVG rendering of Mackey-Glass runs (needs matplotlib)."""

from __future__ import annotations

from .mackey_glass import MackeyRun, Series


def plot_run(run: MackeyRun, series: Series, path, first: int = 160) -> None:
    import matplotlib

    matplotlib.use("svg")
    import matplotlib.pyplot as plt

    # stable ids and no timestamp, so repeated runs give identical files
    matplotlib.rcParams["svg.hashsalt"] = "ccc"
    last = run.predictions[-1][0]
    ks = list(range(first, last + 1))
    network = dict(run.recall)
    network.update(run.predictions)
    pred_k = [k for k, _ in run.predictions]

    fig, ax = plt.subplots(figsize=(8, 4))
    ax.plot(ks, [series.at(k) for k in ks], color="black", lw=1.5, label="series")
    ax.plot(ks, [network[k] for k in ks], color="0.6", lw=1.0, label="network")
    ax.plot(pred_k, [series.at(k) for k in pred_k], "o", mfc="none", color="black", label="actual")
    ax.plot(pred_k, [v for _, v in run.predictions], "x", color="0.4", label="predicted")
    ax.axvline(pred_k[0] - 0.5, color="0.8", ls=":")
    ax.set_xlim(first, last)
    ax.set_ylim(-2, 2)
    ax.set_xlabel("k")
    ax.set_ylabel("x(k)")
    ax.set_title(f"Mackey-Glass one-step prediction, r = {run.r}")
    ax.legend(loc="lower left", fontsize="small", ncol=4)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
