mod common;

use common::properties::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn groebner_s_pairs_reduce_to_zero(seed in any::<u64>(), n in 2usize..=3, gens in 1usize..=4) {
        s_pairs_vanish(seed, n, gens)?;
    }

    #[test]
    fn h_vector_sums_to_degree(seed in any::<u64>(), n in 2usize..=3, gens in 1usize..=4) {
        h_vector_matches_hilbert_function(seed, n, gens)?;
    }

    #[test]
    fn saturation_and_top_part_are_idempotent(seed in any::<u64>(), power in 1u32..=3) {
        saturation_and_top_idempotent(seed, power)?;
    }

    #[test]
    fn minimizing_keeps_the_hilbert_series(seed in any::<u64>(), n in 2usize..=3, gens in 2usize..=4) {
        minimization_preserves_hilbert_series(seed, n, gens)?;
    }

    #[test]
    fn constructions_embed_into_predicted_shapes((t, ed, sd, seed) in small_spec()) {
        construction_embeds_into_prediction(t, ed, sd, seed)?;
    }

    #[test]
    fn constructions_are_deterministic((t, ed, sd, seed) in small_spec()) {
        deterministic_per_seed(t, ed, sd, seed)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn codimension_three_degree_formula_is_c3((a, b) in r3_twists()) {
        degree_formula_matches_chern(&a, &b)?;
    }
}
