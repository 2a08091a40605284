//! Classical counterparts: Dirichlet L-series, theta series, the K₀
//! Bessel representation, the Maass-type waveform and critical-line
//! time averages.

pub mod bessel;
pub mod lseries;
pub mod maass;
pub mod theta;
pub mod time_average;

pub use bessel::{
    bessel_k0, bessel_k0_asymptotic, bessel_k0_series, k0_mellin_closed, k0_mellin_quadrature, product_l_bessel_check,
    two_sided_exponential_integral, BesselCheck, TermCheck,
};
pub use lseries::{
    chebyshev_local_factor, chebyshev_local_series, dirichlet_l, dirichlet_local_factor, product_l, riemann_zeta,
    zeta_p_integral_check, LMethod, LValue, LocalZetaCheck, ProductMethod,
};
pub use maass::{halving_cutoffs, maass_norm_divergence_probe, maass_waveform, DivergenceProbe, MaassExpansion, MaassValue, ProbeRow};
pub use theta::{
    gauss_product_residual, l_from_theta_mellin, theta_convolution, theta_convolution_weight_check, theta_s_transform_residual,
    theta_series, ConvolutionCheck, ThetaValue,
};
pub use time_average::{time_average_inner_product, time_average_trend, CriticalLinePair, TimeAverage};
