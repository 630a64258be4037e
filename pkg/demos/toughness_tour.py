"""A short tour of exact isolated toughness.

I(G) is the minimum of |S| / i(G-S) over vertex sets S that leave at
least two isolated vertices (complete graphs get |V|-1 by convention).
Everything below is exact rational arithmetic; the fast search and the
brute-force reference must agree on every graph.
"""

from factorbench import (
    complete_graph,
    cycle_graph,
    generate_random,
    isolated_toughness,
    isolated_toughness_bruteforce,
    path_graph,
    star_graph,
)

classics = {
    "K5": complete_graph(5),
    "C4": cycle_graph(4),
    "P4": path_graph(4),
    "K1,3": star_graph(3),
}

print(f"{'graph':>6} {'I(G)':>6} {'witness':>12} {'isolated':>9}")
for name, g in classics.items():
    rep = isolated_toughness(g)
    ref = isolated_toughness_bruteforce(g)
    assert rep.value == ref.value
    print(f"{name:>6} {str(rep.value):>6} {str(list(rep.witness)):>12} {rep.isolated_at_witness:>9}")

# the star is the classic low-toughness example: deleting the centre
# isolates every leaf, so I(K1,t) = 1/t
for t in range(2, 7):
    rep = isolated_toughness(star_graph(t))
    print(f"I(K1,{t}) = {rep.value}")

# random graphs: denser graphs are harder to shatter
print(f"\n{'p':>5} {'I(G)':>8}   (n = 10, seed = 7)")
for num in (2, 4, 6, 8):
    g = generate_random(10, f"{num}/10", 7)
    print(f"{num}/10 {str(isolated_toughness(g).value):>8}")
