//! Locally constant functions on ℚ_p, Kozyrev wavelets, and the Vladimirov derivative.

mod kozyrev;
mod schwartz;
mod vladimirov;

pub use kozyrev::{gram_deviation, kozyrev_wavelet, modified_wavelet, wavelet_window, WaveletIndex};
pub use schwartz::{Measure, OriginPart, Piece, PieceRecord, RadialTerm, SchwartzFunction};
pub use vladimirov::{gamma_p, gamma_p_shell_sum, max_deviation, vladimirov_apply, vladimirov_eigencheck, TailPolicy};
