"""Path sets: label sequences of one-sided infinite walks from a marked vertex."""

from .canonical import (
    CanonicalPresentation,
    ClosureFamily,
    EventuallyPeriodicWord,
    KernelReport,
    canonicalize,
    closure_sets,
    equals,
    find_eventually_periodic,
    follower_of_word,
    is_member,
    is_shift_invariant,
    is_subset,
    kernel,
)
from .constructions import (
    decimate,
    determinize,
    determinize_sofic,
    follower_embedding,
    full_shift,
    label_product,
    prefix_graph,
    shift,
    shift_closure,
    union,
)
from .entropy import (
    adjacency,
    anywhere_block_count,
    entropy_report,
    initial_block_count,
    spectral_radius,
)
from .errors import PathSetError
from .graph_core import (
    Alphabet,
    LabeledGraph,
    PointedGraph,
    build_graph,
    is_right_resolving,
    prune,
    reachability_radius,
)

__version__ = "0.1.0"
