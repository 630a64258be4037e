"""Factor existence with certificates.

A graph has an [a,b]-factor (a < b) exactly when the deficiency
b|S| - a|T| + d_{G-S}(T) is nonnegative for every vertex set S, where T
collects the vertices of G-S of degree at most a-1.  A failing S is a
short, independently checkable proof of nonexistence; the constructive
search produces the factor itself on the positive side.
"""

import json

from factorbench import (
    brute_force_factor,
    check_ab_factor,
    complete_graph,
    cycle_graph,
    delta,
    find_ab_factor,
    path_graph,
)

# P4 has no [2,3]-factor: its endpoints cannot reach degree 2
p4 = path_graph(4)
cert = check_ab_factor(p4, 2, 3)
print("P4, [2,3]:", json.dumps(cert.to_json_dict()))
print("re-evaluated deficiency at S:", delta(p4, cert.violation.s, 2, 3))

# C4 is its own [2,2]-factor; K4 has a perfect matching
for name, g, a, b in [("C4", cycle_graph(4), 2, 2), ("K4", complete_graph(4), 1, 1)]:
    found = find_ab_factor(g, a, b)
    print(f"{name}, [{a},{b}]: edges = {list(found.factor_edges)}")

# the exhaustive oracle stays independent of both routes above
for g, a, b in [(p4, 2, 3), (cycle_graph(5), 1, 1), (complete_graph(6), 2, 3)]:
    agree = (
        brute_force_factor(g, a, b)
        == find_ab_factor(g, a, b).exists
    )
    print(f"oracle agrees on n={g.n}, [{a},{b}]: {agree}")
