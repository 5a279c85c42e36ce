#!/usr/bin/env python3
"""Write every connected graph on 1..7 vertices (up to isomorphism) as graph6.

Uses the networkx graph atlas, which lists all 1253 graphs on 0..7 vertices.
"""
import sys

import networkx as nx


def main() -> int:
    out = sys.argv[1] if len(sys.argv) > 1 else "tests/data/connected_n1_7.g6"
    graphs = [g for g in nx.graph_atlas_g() if g.number_of_nodes() > 0 and nx.is_connected(g)]
    with open(out, "wb") as fh:
        for g in graphs:
            fh.write(nx.to_graph6_bytes(g, header=False))
    print(f"wrote {len(graphs)} graphs to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
