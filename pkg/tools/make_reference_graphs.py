#!/usr/bin/env python3
"""Regenerate tests/data/connected_n7.g6 and connected_n8.g6.

These reference corpora are produced entirely with networkx, independent
of the kms package, so the test suite can cross-check the built-in
enumerator against an external route:

* order 7: the connected members of networkx's bundled graph atlas
  (every graph on up to 7 vertices);
* order 8: vertex augmentation of the order-7 corpus (attach a new
  vertex to every nonempty neighborhood subset), deduplicated by
  Weisfeiler-Lehman hash buckets with exact VF2 isomorphism inside each
  bucket.

Expected class counts: 853 and 11117 connected graphs.

Run from the repository root:  python3 tools/make_reference_graphs.py
Takes a few minutes for order 8.
"""

import itertools
import sys
import time
from pathlib import Path

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from networkx.generators.atlas import graph_atlas_g

OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"


def g6_line(g: nx.Graph) -> str:
    return nx.to_graph6_bytes(g, header=False).decode("ascii").strip()


def connected_order_7() -> list[nx.Graph]:
    return [
        nx.convert_node_labels_to_integers(g)
        for g in graph_atlas_g()
        if g.number_of_nodes() == 7 and nx.is_connected(g)
    ]


def augment_to_order_8(parents: list[nx.Graph]) -> list[nx.Graph]:
    buckets: dict[str, list[nx.Graph]] = {}
    reps: list[nx.Graph] = []
    t0 = time.time()
    for idx, parent in enumerate(parents):
        nodes = list(parent.nodes())
        for r in range(1, 8):
            for subset in itertools.combinations(nodes, r):
                child = parent.copy()
                child.add_node(7)
                child.add_edges_from((7, v) for v in subset)
                key = "{}|{}|{}".format(
                    child.number_of_edges(),
                    "".join(map(str, sorted(d for _, d in child.degree()))),
                    nx.weisfeiler_lehman_graph_hash(child, iterations=3),
                )
                bucket = buckets.setdefault(key, [])
                if not any(GraphMatcher(child, seen).is_isomorphic() for seen in bucket):
                    bucket.append(child)
                    reps.append(child)
        if (idx + 1) % 100 == 0:
            print(
                f"  parents {idx + 1}/{len(parents)}, classes so far "
                f"{len(reps)}, {time.time() - t0:.0f}s",
                file=sys.stderr,
            )
    return reps


def main() -> int:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    seven = connected_order_7()
    print(f"order 7: {len(seven)} connected classes (expect 853)")
    lines7 = sorted(g6_line(g) for g in seven)
    (OUT_DIR / "connected_n7.g6").write_text("\n".join(lines7) + "\n")

    eight = augment_to_order_8(seven)
    print(f"order 8: {len(eight)} connected classes (expect 11117)")
    lines8 = sorted(g6_line(g) for g in eight)
    (OUT_DIR / "connected_n8.g6").write_text("\n".join(lines8) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
