# %% [markdown]
# Sizes of Weyl groupoids
#
# |Aut(x)| is the same at every vertex of a connected groupoid.

# %%
from weylgrpd.families import expected_vertex_count, labelled_engine_graph
from weylgrpd.groupoid import aut_order, coxeter_matrix, real_roots

cases = [("sl", 2, 3), ("gl", 2, 2), ("osp_odd", 2, 2), ("osp_even", 2, 2)]

# %%
for fam, m, n in cases:
    g = labelled_engine_graph(fam, m, n)
    assert len(g) == expected_vertex_count(fam, m, n)
    orders = {aut_order(g, x) for x in range(len(g))}
    print(f"{fam}({m}|{n}): {len(g)} objects, |Aut| = {orders}")

# %% Coxeter matrices change from vertex to vertex
g = labelled_engine_graph("osp_even", 2, 2)
cox = coxeter_matrix(g, real_roots(g))
for x in range(len(g)):
    print(g.label(x), cox[x])
