"""Optional matplotlib rendering for the report-producing commands.

Figures are derived purely from exact data (incidence graphs, shift-orbit
diagrams, Hilbert functions); nothing numeric feeds back into verification.
"""

from __future__ import annotations

import math
import os


def _plt():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def hilbert_bar_chart(values, title, path):
    plt = _plt()
    fig, ax = plt.subplots(figsize=(6, 3.2))
    ax.bar(range(len(values)), values, color="#4878a8")
    ax.set_xlabel("degree")
    ax.set_ylabel("dimension")
    ax.set_title(title)
    ax.set_xticks(range(len(values)))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def incidence_graph(point_names, line_points, title, path):
    """Bipartite-style drawing: points on a circle, lines as chords."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(6.5, 6.5))
    n = len(point_names)
    pos = {}
    for k, name in enumerate(sorted(point_names)):
        ang = 2 * math.pi * k / n
        pos[name] = (math.cos(ang), math.sin(ang))
    for names in line_points:
        pts = [pos[p] for p in names if p in pos]
        if len(pts) == 2:
            (x1, y1), (x2, y2) = pts
            ax.plot([x1, x2], [y1, y2], color="#999999", lw=0.8, zorder=1)
    for name, (x, y) in pos.items():
        ax.scatter([x], [y], s=36, color="#b04848", zorder=2)
        ax.annotate(name, (x * 1.1, y * 1.1), ha="center", va="center",
                    fontsize=7)
    ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def orbit_diagram(orbits, title, path):
    """Shift-map orbits drawn as small cycles."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(7, 4))
    x0 = 0.0
    for orbit in orbits:
        n = len(orbit)
        r = 0.25 + 0.12 * n
        cx = x0 + r
        for k, name in enumerate(orbit):
            ang = 2 * math.pi * k / max(n, 1)
            x, y = cx + r * math.cos(ang), r * math.sin(ang)
            ax.scatter([x], [y], s=28, color="#48a870")
            ax.annotate(name, (x, y + 0.09), ha="center", fontsize=6)
            if n > 1:
                k2 = (k + 1) % n
                ang2 = 2 * math.pi * k2 / n
                x2, y2 = cx + r * math.cos(ang2), r * math.sin(ang2)
                ax.annotate("", xy=(x2, y2), xytext=(x, y),
                            arrowprops=dict(arrowstyle="->", lw=0.7,
                                            color="#777777"))
        x0 = cx + r + 0.35
    ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def claim_summary_chart(results, path):
    plt = _plt()
    labels = [r.claim for r in results]
    vals = [1 if r.ok else 0 for r in results]
    fig, ax = plt.subplots(figsize=(7, 0.28 * len(labels) + 1.2))
    colors = ["#48a870" if v else "#b04848" for v in vals]
    ax.barh(range(len(labels)), [1] * len(labels), color=colors)
    ax.set_yticks(range(len(labels)))
    ax.set_yticklabels(labels, fontsize=6)
    ax.set_xticks([])
    ax.invert_yaxis()
    ax.set_title("claim verdicts (green = pass)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_geometry_figures(bundle, outdir, prefix):
    """Incidence + orbit figures for a computed S/T geometry bundle."""
    from .geometry import tau_orbits, line_from_pluecker, point_on_line, \
        lines_through_point
    os.makedirs(outdir, exist_ok=True)
    paths = []
    all_lines = {}
    for name, p in bundle.points.items():
        for (_, plk) in lines_through_point(p, bundle.components):
            if plk is not None:
                all_lines.setdefault(plk, set()).add(name)
    line_points = [sorted(v) for v in all_lines.values()]
    paths.append(incidence_graph(list(bundle.points), line_points,
                                 f"incidence of {bundle.key}: 20 points, "
                                 f"{len(all_lines)} lines",
                                 os.path.join(outdir, f"{prefix}_incidence.png")))
    orbits = tau_orbits(list(bundle.points), bundle.tau)
    paths.append(orbit_diagram(orbits, f"shift orbits of {bundle.key}",
                               os.path.join(outdir, f"{prefix}_orbits.png")))
    return paths
