"""Vertex separations, profiles, cycle completions and k-pseudoflowers of finite graphs."""
from .cyclic import (
    CycleCompletion,
    CyclicOrder,
    LinearCut,
    MonotoneMap,
    classify_map,
    completion,
    completion_via_cuts,
    cutpoint_preimage,
    cuts,
    cyclic_triple,
    extend_monotone,
    find_isomorphisms,
    interval,
    is_interval,
    predecessor,
    successor,
)
from .extension import (
    AnchoredSeparation,
    anchor,
    is_leq_maximal,
    is_preccurlyeq_maximal,
    maximalize,
    properly_crosses,
    subdivide,
)
from .flower import (
    PseudoFlower,
    WitnessMap,
    classify,
    concatenate,
    find_witnesses,
    interval_separation,
    interval_set,
    is_flower,
    is_witness,
    petal_separation,
    validate,
    vertex_interval,
)
from .generators import DaisySpec, gen_anemone, gen_clique, gen_daisy, gen_grid
from .profiles import (
    Profile,
    SeparationSystem,
    distinguished_pairs,
    distinguishes,
    displayed_classes,
    enumerate_profiles,
    equivalence_classes,
    equivalent,
    is_closed,
    is_consistent,
    is_profile,
    is_tangle,
    locate,
    preccurlyeq,
    separation_system,
)
from .universe import (
    Graph,
    Separation,
    chain_supremum,
    corners,
    crosses,
    enumerate_separations,
    inverse,
    is_graph_separation,
    is_nested,
    join,
    leq,
    meet,
    order,
)

__version__ = "0.1.0"
