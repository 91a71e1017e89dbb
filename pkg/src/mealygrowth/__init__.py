"""Growth machinery for Mealy-automaton semigroups, centered on I2."""

from .errors import AutomatonFormatError, CapacityError
from .mealy import (
    I2,
    IDENTITY2,
    MealyAutomaton,
    WreathForm,
    apply,
    are_isomorphic,
    are_similar,
    automaton_growth,
    format_automaton,
    is_invertible,
    load_automaton,
    minimize,
    parse_automaton,
    power,
    product,
    unrolled_form,
)
from .rewrite import (
    F0,
    ONE,
    General,
    JustF0,
    NormalForm,
    One,
    enumerate_normal_forms,
    eval_test_word,
    format_word,
    left_zero_word,
    nf_to_word,
    normal_forms_of_length,
    parse_word,
    reduce,
    reduce_detailed,
    reduce_quotient,
    relation_sides,
    verify_left_zero,
    verify_relation,
    width,
    words_equal,
    words_equal_quotient,
)
from .series import (
    AsymptoteSpec,
    automaton_growth_coeffs,
    ball_growth_coeffs,
    count_distinct_congruent,
    growth_asymptotes,
    odd_distinct_partitions,
    partial_sum_check,
    psi_sum_form,
    richmond_asymptote,
    tauberian_probe,
    word_growth_coeffs,
)
from .tables import (
    GrowthLayers,
    TransformTable,
    ball_growth_oracle,
    compose,
    endomorphism_count,
    enumerate_monoid,
    hausdorff_sequence,
    i2_quotient_order_formula,
    identity_table,
    pack_word,
    quotient_order,
    spherical_growth_oracle,
    table_of,
    unpack_word,
    word_table,
)

__version__ = "1.0.0"
