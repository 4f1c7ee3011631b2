"""
Building and querying weighted digraphs
=======================================

"""

# A graph is immutable: vertex count, arcs, and optional vertex weights.
from fvs_toolkit import WeightedDigraph

g = WeightedDigraph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)],
                    weights=[2, 1, 4, 1, 1])
print("arcs:", sorted(g.arcs()))
print("out-neighbors of 2:", g.out_neighbors(2))
print("weight of vertex 2:", g.weights[2])

# The triangle 0 -> 1 -> 2 -> 0 is the only cycle, so the graph is not
# acyclic, and the shortest cycle through vertex 0 is that triangle.
from fvs_toolkit import is_acyclic, shortest_cycle_through

print("acyclic:", is_acyclic(g))
print("shortest cycle through 0:", tuple(shortest_cycle_through(g, 0)))
print("cycle through 4:", shortest_cycle_through(g, 4))

# Removing vertices relabels the survivors to 0..n-1; parent_ids maps the
# new ids back to the original ones.
rest = g.without([2])
print("after removing 2: acyclic =", is_acyclic(rest),
      "parent ids =", rest.parent_ids)

# Random tournaments come from a seeded generator, so the same seed always
# yields the same graph.
from fvs_toolkit import gen_tournament, independence_number_exact

t = gen_tournament(8, seed=11)
print("tournament arcs:", t.arc_count)
print("independence number:", independence_number_exact(t))

# Digraphs with independence number at most alpha: alpha blocks of
# tournament arcs plus random cross-block arcs.
from fvs_toolkit import GenSpec, gen_alpha_bounded

g2 = gen_alpha_bounded(GenSpec(n=10, alpha=2, cross_arc_prob=0.3, seed=7))
print("alpha-bounded graph:", g2.n, "vertices,", g2.arc_count, "arcs,",
      "independence number", independence_number_exact(g2))
