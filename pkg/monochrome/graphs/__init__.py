from .errors import (
    AuditBudgetError,
    ColoringError,
    ConfigError,
    ContractViolation,
    SamplingError,
)
from .multigraph import (
    MultiGraph,
    FunctionalDigraph,
    HamiltonDecomposition,
    EdgeColoring,
    components,
    component_sizes,
    induced_subgraph,
    degree_sequence,
)
from .generators import (
    pairing_model,
    simple_regular,
    hamilton_sum,
    kout_sum,
    kout_distinct,
    digraph_sum_graph,
    has_distinct_choices,
    functional_cycle_count,
)
from .coloring import (
    BlockPartition,
    ArborescenceForest,
    color_hamilton,
    strip_cycles,
    peel_arborescences,
    partition_blocks,
    assign_kout_colors,
    color_kout,
    KOutColoring,
)
from .bounds import (
    CycleBoundInput,
    CycleBound,
    sparseness_delta,
    cycle_bound,
    gamma_regular,
    gamma_kout,
    get_regime,
    LongCycleRegime,
    sparseness_union_bound,
)
from .audits import (
    MonoStats,
    DensityAudit,
    mono_stats,
    path_length_audit,
    arborescence_stats,
    color_class_arcs,
    local_density_audit,
    majority_color,
    majority_subgraph,
)
from .cycles import Cycle, find_long_cycle, longest_cycle_exact, is_cycle
from .orientation import Orientation, euler_orient, flow_orient
from .adversaries import STRATEGIES, adversarial_color
from .utils import mix_seed, get_rng
