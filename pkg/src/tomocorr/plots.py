"""Optional figure rendering for report commands; file output only."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

_DPI = 150


def _column(rows: list[dict], name: str) -> list[float]:
    from .stateio import parse_value

    out = []
    for row in rows:
        v = parse_value(row[name])
        out.append(float("nan") if v is None else v)
    return out


def render_study_figure(rows: list[dict], path: str, x_name: str, y_name: str) -> None:
    """Scatter one report column against another with the identity line."""
    xs, ys = _column(rows, x_name), _column(rows, y_name)
    fig, ax = plt.subplots(figsize=(5.0, 5.0))
    ax.scatter(xs, ys, s=6, alpha=0.5, edgecolors="none")
    lim = max(max(xs, default=1.0), max(ys, default=1.0)) or 1.0
    ax.plot([0.0, lim], [0.0, lim], lw=0.8, color="gray")
    ax.set_xlabel(x_name)
    ax.set_ylabel(y_name)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def render_scheme_tomograms(named_probs, path: str) -> None:
    """Grouped bars of the four outcome probabilities per measurement scheme."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    width = 0.8 / len(named_probs)
    for i, (name, probs) in enumerate(named_probs):
        xs = [k + (i - (len(named_probs) - 1) / 2.0) * width for k in range(4)]
        ax.bar(xs, list(probs), width=width, label=name)
    ax.set_xticks(range(4))
    ax.set_xticklabels(("00", "01", "10", "11"))
    ax.set_ylabel("outcome probability")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def render_sweep_figure(rows: list[dict], path: str, x_name: str, y_names: list[str]) -> None:
    """Line plot of one or more report columns against the sweep parameter."""
    xs = _column(rows, x_name)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for name in y_names:
        ax.plot(xs, _column(rows, name), lw=1.2, label=name)
    ax.set_xlabel(x_name)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
