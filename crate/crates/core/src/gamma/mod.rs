//! The universal quadratic functor `Γ` and its maps into non-abelian tensor
//! products.

mod maps;
mod module;

pub use maps::{
    check_gamma_injectivity, check_psi_sequences, check_split_sequence, gamma_report,
    phi_and_pibar, phi_parts, psi, psi_tilde, split_report, square_data, tau_maps, PhiData, Psi,
    PsiTilde, PullbackQuotient, SquareData, TauMaps,
};
pub use module::{exterior_square_space, gamma_on_map, GammaModule};
