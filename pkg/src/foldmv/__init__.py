"""Exact combinatorics of MV polytopes under Dynkin diagram folding."""

from .characters import (
    CharacterSystem,
    FormalCharacter,
    freudenthal_multiplicity,
    mv_weight_multiplicity,
    twining_character,
    verify_twining,
    weyl_character,
)
from .folding import (
    FoldingData,
    apply_sigma,
    build_folding,
    fold_datum,
    folded_transport,
    is_block_constant,
    is_sigma_invariant,
    lift_word,
    theta_P,
    unfold_datum,
)
from .lusztig import LusztigDatum, coweight_of, transport, tropical_move
from .polytope import MVPolytope, build_polytope, datum_along, enumerate_data, lies_in_weyl_hull
from .root_datum import RootDatum, WeylElement, build_root_datum, pair, reflect
from .weyl import BraidMove, all_reduced_words, braid_path, element_of, longest_element

__version__ = "0.1.0"
