"""Spanning star forests.

A spanning forest of stars with 1..m edges exists exactly when the graph
has a [1,m]-factor.  The checker uses the isolated-vertex inequality
i(G-S) <= m|S| (odd components for m = 1, where single-edge stars are
perfect matchings); the finder peels an explicit forest out of a factor.
"""

from factorbench import (
    check_star_factor,
    complete_graph,
    cycle_graph,
    disjoint_union,
    find_star_factor,
    path_graph,
    star_graph,
)

examples = {
    "P4": path_graph(4),
    "C5": cycle_graph(5),
    "K1,3": star_graph(3),
    "K4": complete_graph(4),
    "2K2": disjoint_union(path_graph(2), path_graph(2)),
}

for m in (1, 2, 3):
    print(f"--- m = {m}")
    for name, g in examples.items():
        verdict = check_star_factor(g, m)
        forest = find_star_factor(g, m)
        assert verdict.exists == (forest is not None)
        if forest is None:
            where = f"fails at S = {list(verdict.witness)}"
            print(f"  {name:>5}: none ({where})")
        else:
            stars = ", ".join(
                f"{s.center}->{list(s.leaves)}" for s in forest.stars
            )
            print(f"  {name:>5}: {stars}")
