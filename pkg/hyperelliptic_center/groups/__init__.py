from .characters import (
    CharacterTable,
    Irrep,
    NotACharacterError,
    character_table,
    equivalent,
    evaluate_word,
    intertwiner,
    inverse_character_matrix,
    irreps,
    is_class_function,
    multiplicity_inner_product,
    orthogonality_holds,
    regular_character,
    rep_matrix,
    satisfies_presentation,
    u_two_dim,
)
from .elements import (
    ConjClass,
    Family,
    FiniteGroup,
    GroupElement,
    InvalidGroupParameter,
    build_group,
    class_index,
    conjugacy_classes,
    element_order,
    is_abelian,
    multiplication_table,
    verify_presentation,
)

__all__ = [
    "CharacterTable",
    "ConjClass",
    "Family",
    "FiniteGroup",
    "GroupElement",
    "InvalidGroupParameter",
    "Irrep",
    "NotACharacterError",
    "build_group",
    "character_table",
    "class_index",
    "conjugacy_classes",
    "element_order",
    "equivalent",
    "evaluate_word",
    "intertwiner",
    "inverse_character_matrix",
    "irreps",
    "is_abelian",
    "is_class_function",
    "multiplication_table",
    "multiplicity_inner_product",
    "orthogonality_holds",
    "regular_character",
    "rep_matrix",
    "satisfies_presentation",
    "u_two_dim",
    "verify_presentation",
]
