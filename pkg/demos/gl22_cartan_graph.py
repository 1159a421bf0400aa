# %% [markdown]
# Cartan graph of gl(2|2)
#
# Start from the standard Cartan datum, close it under odd reflections and
# look at what comes out.  The six vertices are the partitions that fit in a
# 2x2 box.

# %%
from weylgrpd import CartanDatum, EVEN, ODD, symmetrize, serre_matrix
from weylgrpd.families import labelled_engine_graph
from weylgrpd.graph import build_cartan_graph, verify_axioms
from weylgrpd.groupoid import real_roots
from weylgrpd.io import graph_to_dot

seed = CartanDatum([[2, -1, 0], [-1, 0, 1], [0, -1, 2]], [EVEN, ODD, EVEN])
print(serre_matrix(seed))

# %%
g = build_cartan_graph(symmetrize(seed))
for v in g.vertices:
    print(v.id, v.root_base, v.datum.tau)

# %% the same graph with partition labels
g = labelled_engine_graph("gl", 2, 2)
for e in g.edges:
    if not e.is_loop:
        print(g.label(e.source), "--", e.color, "--", g.label(e.target))

# %%
roots = real_roots(g)
print(len(roots[0]), "real roots at the standard vertex")
print(verify_axioms(g, roots).summary())

# %% paste into graphviz
print(graph_to_dot(g))
