#!/usr/bin/env python3
"""Regenerate docs/atlas_patterns.md from the pattern enumeration."""

from pathlib import Path

import homsample as hs


def make_text() -> str:
    lines = [
        "# Connected pattern atlas",
        "",
        "The 31 connected simple graphs with at most 5 nodes, in the order",
        "used by `atlas_connected` and the `atlas:IDX` CLI specs. Within a",
        "node count, patterns sort by edge count, then by sorted degree",
        "sequence, then by canonical edge set (all lexicographic). The",
        "canonical form of a graph is the minimal edge set over all node",
        "relabelings, so this order is reproducible from scratch.",
        "",
        "| index | name | nodes | edges | degree sequence | edge list |",
        "|------:|------|------:|------:|-----------------|-----------|",
    ]
    for i, p in enumerate(hs.atlas_connected(31)):
        g = hs.pattern_to_graph(p)
        degrees = sorted(g.degrees().tolist())
        edges = " ".join(f"({u},{v})" for u, v in p.edges) or "-"
        lines.append(f"| {i} | {p.name} | {p.k} | {p.l} | "
                     f"{' '.join(map(str, degrees))} | {edges} |")
    lines.append("")
    return "\n".join(lines)


if __name__ == "__main__":
    out = Path(__file__).resolve().parent.parent / "docs" / "atlas_patterns.md"
    out.parent.mkdir(exist_ok=True)
    out.write_text(make_text())
    print(f"wrote {out}")
