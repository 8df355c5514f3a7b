"""Figures written next to the CSV/JSON tables."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

RC = {
    "axes.spines.right": False,
    "axes.spines.top": False,
    "figure.figsize": (6.4, 4.0),
    "figure.dpi": 100,
    "font.size": 10,
    "legend.frameon": False,
}


def savefig(fig, path, dpi=150):
    fig.savefig(path, dpi=dpi, bbox_inches="tight", facecolor="w")
    plt.close(fig)


def plot_sweep(rows, bound_columns, x_axis, path, title=None):
    """One line per bound column against ``x_axis``; other axes are held by row order.

    Rows with a different value on any other varying axis become separate
    line segments, labelled by those values.
    """
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        others = [k for k in rows[0] if k not in bound_columns and k != x_axis
                  and len({r[k] for r in rows}) > 1]
        groups = {}
        for r in rows:
            groups.setdefault(tuple(r[k] for k in others), []).append(r)
        for key, grp in groups.items():
            suffix = ", ".join(f"{k}={v}" for k, v in zip(others, key))
            x = np.array([g[x_axis] for g in grp], dtype=float)
            for col in bound_columns:
                y = np.array([np.nan if g[col] is None else g[col] for g in grp], dtype=float)
                if np.all(np.isnan(y)):
                    continue
                label = col if not suffix else f"{col} ({suffix})"
                ax.plot(x, y, marker="o", ms=3, lw=1.2, label=label)
        ax.set_xlabel(x_axis)
        ax.set_ylabel("multiplier")
        if any(g[c] is not None and g[c] > 100 for g in rows for c in bound_columns):
            ax.set_yscale("log")
        if title:
            ax.set_title(title)
        ax.legend(fontsize=7)
        savefig(fig, path)


def plot_campaign(report, path):
    """Tightness ratio lhs/rhs per instance against R, coloured by s."""
    recs = report.records
    with plt.rc_context(RC):
        fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(10, 4))
        if recs:
            R = np.array([r.R for r in recs])
            ratio = np.array([r.ratio for r in recs])
            s = np.array([r.s for r in recs])
            sc = ax0.scatter(R, ratio, c=s, s=8, cmap="viridis")
            fig.colorbar(sc, ax=ax0, label="s")
            bad = np.array([not r.passed for r in recs])
            if bad.any():
                ax0.scatter(R[bad], ratio[bad], marker="x", c="r", s=30, label="failure")
                ax0.legend()
            ax1.hist(ratio, bins=40, color="0.4")
        ax0.axhline(1.0, color="k", lw=0.8, ls="--")
        ax0.set_xlabel("R")
        ax0.set_ylabel("lhs / rhs")
        ax1.set_xlabel("lhs / rhs")
        ax1.set_ylabel("instances")
        cfg = report.config
        fig.suptitle(f"{cfg['class_id']} / {cfg['bound_id']}: {report.trials} trials, "
                     f"{len(report.failures)} failures")
        savefig(fig, path)
