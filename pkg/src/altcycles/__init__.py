"""2-edge-colored multigraphs: closure predicates, alternating cycle
factors, and constructive alternating Hamiltonian cycles."""

from .cycles import AltCycle, CycleFactor, validate_cycle, validate_factor
from .factor import find_alternating_cycle_factor, maximum_matching
from .generate import closure_2m, gen_complete, gen_counterexample, gen_random
from .graph import (
    BLUE,
    RED,
    Color,
    ColoredMultigraph,
    empty,
    parse_text,
    serialize_text,
)
from .merge import (
    Dominates,
    HamiltonianCycle,
    Inapplicable,
    Merged,
    NoFactor,
    NotAdjacent,
    NotColorConnected,
    NotTwoMClosed,
    build_domination_digraph,
    color_dominates,
    find_good_pair,
    merge_good_pair,
    merge_pair,
    solve_hamiltonian,
)
from .oracles import oracle_alt_path, oracle_factor, oracle_hamiltonian, oracle_merge
from .predicates import (
    exists_alternating_path,
    is_2m_closed,
    is_2nm_closed,
    is_closed_alternating,
    is_color_connected,
    two_m_violations,
    two_nm_violations,
)

__all__ = [
    "AltCycle",
    "BLUE",
    "Color",
    "ColoredMultigraph",
    "CycleFactor",
    "Dominates",
    "HamiltonianCycle",
    "Inapplicable",
    "Merged",
    "NoFactor",
    "NotAdjacent",
    "NotColorConnected",
    "NotTwoMClosed",
    "RED",
    "build_domination_digraph",
    "closure_2m",
    "color_dominates",
    "empty",
    "exists_alternating_path",
    "find_alternating_cycle_factor",
    "find_good_pair",
    "gen_complete",
    "gen_counterexample",
    "gen_random",
    "is_2m_closed",
    "is_2nm_closed",
    "is_closed_alternating",
    "is_color_connected",
    "maximum_matching",
    "merge_good_pair",
    "merge_pair",
    "oracle_alt_path",
    "oracle_factor",
    "oracle_hamiltonian",
    "oracle_merge",
    "parse_text",
    "serialize_text",
    "solve_hamiltonian",
    "two_m_violations",
    "two_nm_violations",
    "validate_cycle",
    "validate_factor",
]
