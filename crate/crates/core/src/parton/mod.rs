//! Local states {a(p^m)} of multiplicative coefficient streams, with the
//! wavelet picture: ladder and Hecke operators, inner products, Mellin
//! transforms and Parseval checks.

mod inner;
mod qseries;
mod state;
mod transform;

pub use inner::{
    adjoint_check_i, adjoint_check_ii, gram_entry, inner_product_i, inner_product_i_integral, inner_product_ii,
    overlap_dichotomy, AdjointReport, Dichotomy, OverlapClass, OverlapII,
};
pub use qseries::{uv_on_qseries, QOp, QSeries};
pub use state::{
    decompose, decompose_exact, hecke_apply, ladder, reconstruct, reconstruct_exact, Direction, ExactPartonState,
    HeckeOutput, HeckeVariant, LadderOutput, PartonState,
};
pub use transform::{finite_euler_mellin_check, parseval_check, parton_mellin, EulerMellinCheck, ParsevalReport};
