"""Antichain cutsets, chain-exchange connectivity and EL-labelings of finite posets,
plus exact transversals of uniform hypergraphs."""

from .connectivity import (ExchangeGraph, check_lemma_local_conn, exchange_adjacent, is_connected,
                           is_locally_strongly_connected, is_pairwise_locally_strongly_connected,
                           is_strongly_connected)
from .cutsets import enumerate_antichain_cutsets, is_antichain_cutset, verify_level_set_theorem
from .errors import (CutsetKitError, CycleError, HypergraphError, InvalidParamError, NotAPermutationError,
                     NotBoundedError, NotComparableError, NotELError, NotSemimodularError, NotUniformError,
                     ParseError, SelfLoopError)
from .families import FamilySpec, generate
from .hypergraphs import (BalancedColoring, Hypergraph, balanced_coloring, exact_transversals, from_poset,
                          is_strongly_connected_h)
from .io import parse_instance
from .labelings import (EdgeLabeling, descent_walk, is_el_labeling, is_shelling, is_supersolvable_labeling,
                        join_irreducibles, lattice_ops, stanley_labeling)
from .poset import (Grading, GradingFailure, Interval, Poset, bound_augment, build_poset, compute_grading,
                    interval, leq, level_sets, maximal_chains)

__version__ = "0.1.0"
