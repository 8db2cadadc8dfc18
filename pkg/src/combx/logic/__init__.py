from .semantics import Model, Valuation, forces, forces_pointwise, forcing_set
from .validity import Countermodel, all_upsets, find_countermodel, is_valid
from .morphism import (
    MorphismWitness,
    embedding_exists,
    is_bipmorphism,
    is_embedding,
    refutes_jankov,
    refutes_subframe,
    surjection_exists,
)
from .algebra import (
    BiEPartition,
    UpsetAlgebra,
    coimp,
    coloring_generates,
    generated_subalgebra,
    heyting_imp,
    is_bie_partition,
    twin_partition,
)
