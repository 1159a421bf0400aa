# %% [markdown]
# Borel subalgebras of osp(4|4) as matrix patterns
#
# Each vertex of the osp_even graph is a partition plus a sign.  The oracle
# builds the corresponding Borel subalgebra inside explicit 8x8 matrices and
# checks that the Chevalley generators reproduce the closed-form Cartan datum.

# %%
from weylgrpd.families import family_vertices, simple_roots
from weylgrpd.oracle import AlgebraSpec, borel_shape, shape_pattern, verify_appendix

spec = AlgebraSpec("osp_even", 2, 2)
print("labels:", spec.labels)

# %%
for v in family_vertices("osp_even", 2, 2):
    roots, d = simple_roots(v)
    print(v, roots)
    for row in shape_pattern(spec, borel_shape(spec, v)):
        print("   ", row)

# %%
rep = verify_appendix("osp_even", 2, 2)
print(rep.to_text())
