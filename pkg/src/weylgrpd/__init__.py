"""Weyl groupoids of contragredient Lie superalgebras.

The engine closes a Cartan datum under odd reflections, checks the Cartan
graph axioms and computes real roots, Coxeter data and automorphism groups.
The family modules describe sl(m|n), gl(n|n), osp(2m+1|2n) and osp(2m|2n)
through partitions and explicit matrices.
"""

from .cartan import (
    EVEN,
    ODD,
    CartanDatum,
    Parity,
    RegularityReport,
    SymmetricCartanDatum,
    check_regular,
    is_odd_isotropic,
    odd_reflect_datum,
    rescale_rows,
    serre_matrix,
    symmetrize,
    symmetrizing_scalars,
)
from .errors import *  # noqa: F401,F403
from .families import (
    FamilyVertex,
    Partition,
    Shuffle,
    box_moves,
    family_cartan_graph,
    family_serre_matrix,
    graphs_isomorphic,
    partition_to_shuffle,
    partitions_in_rectangle,
    shuffle_to_partition,
    simple_roots,
)
from .graph import CartanGraph, Edge, Vertex, build_cartan_graph, verify_axioms
from .groupoid import (
    GroupoidMorphism,
    aut_order,
    coxeter_matrix,
    evaluate_word,
    generator_matrix,
    hom_set,
    real_roots,
)

__version__ = "0.1.0"
