"""Shrinking and clock-controlled shrinking generators, their linear 90/150
cellular-automata models, and a known-plaintext state-recovery attack."""

from .attack import (
    Ambiguous,
    AttackResult,
    ConflictingReconstruction,
    Exhausted,
    KnownBits,
    NonInvertible,
    full_attack,
    is2_bit_positions,
    phase1_reconstruct,
    phase2_search,
    subtriangle_expressions,
)
from .engines import (
    BitSeq,
    CaState,
    LfsrState,
    ZeroSeed,
    ca_generate,
    ca_step,
    decimate,
    lfsr_generate,
    solve_cell_seed,
)
from .generators import (
    GeneratorSpec,
    ShrunkenStats,
    ccsg_generate,
    clock_counts,
    clocked_keystream,
    decimated_stream,
    shrink_generate,
    shrunken_stats,
)
from .gf2 import (
    FieldTable,
    Gf2Poly,
    NonPrimitiveModulus,
    RuleVector,
    berlekamp_massey,
    is_irreducible,
    is_primitive,
    linear_complexity,
    min_poly_of_power,
)
from .linearize import (
    DegenerateCoset,
    SynthesisFailed,
    concatenate_once,
    concatenation_chain,
    coset_exponent,
    linearize_generator,
    synthesize_ca_pair,
)

__version__ = "0.1.0"

__all__ = [
    "Ambiguous",
    "AttackResult",
    "BitSeq",
    "CaState",
    "ConflictingReconstruction",
    "DegenerateCoset",
    "Exhausted",
    "FieldTable",
    "GeneratorSpec",
    "Gf2Poly",
    "KnownBits",
    "LfsrState",
    "NonInvertible",
    "NonPrimitiveModulus",
    "RuleVector",
    "ShrunkenStats",
    "SynthesisFailed",
    "ZeroSeed",
    "berlekamp_massey",
    "ca_generate",
    "ca_step",
    "ccsg_generate",
    "clock_counts",
    "clocked_keystream",
    "concatenate_once",
    "concatenation_chain",
    "coset_exponent",
    "decimate",
    "decimated_stream",
    "full_attack",
    "is2_bit_positions",
    "is_irreducible",
    "is_primitive",
    "lfsr_generate",
    "linear_complexity",
    "linearize_generator",
    "min_poly_of_power",
    "phase1_reconstruct",
    "phase2_search",
    "shrink_generate",
    "shrunken_stats",
    "solve_cell_seed",
    "subtriangle_expressions",
    "synthesize_ca_pair",
]
