//! Verifiers for the isomorphisms and exact sequences relating Leibniz
//! homology to non-abelian exterior products. Each returns a
//! [`SequenceReport`](crate::report::SequenceReport).

mod lie;
mod permute;
mod second;

pub use lie::{lie_comparison_check, perfect_lie_sequence, t_two_ways, TwoWayT};
pub use permute::{permute_extension, reversal};
pub use second::{
    central_extension_corollary, check_delta_iso, check_hl2_theorem, check_right_exactness,
    check_split_injectivity, check_uce_perfect, eight_term_audit, exterior_row, six_term_maps,
    six_term_sequence, ExteriorRow, SixTerm, SquareSide, SIX_TERM_NODES,
};
