//! Gamma and Bessel kernel.
//!
//! Everything the expansion assemblies need from classical special functions:
//! the complex gamma function, modified Bessel functions I and K of real
//! order (and order +1) at complex argument, the cylinder functions J, Y,
//! H(1), H(2) obtained from them by rotation, argument-rotated K and H(1)
//! branches, the exponential large-argument K expansion, and real-valued
//! K of imaginary order on the positive real axis.

mod bessel;
mod gamma;

pub use bessel::{
    bessel_cylinder, bessel_k_exponential_expansion, bessel_k_imag_order, bessel_k_rotated,
    bessel_modified, hankel1_rotated_2pi, BesselOrder, CylKind, ModKind, OrderKind,
};
pub(crate) use bessel::{
    cyl_h1_co, cyl_h2_co, cyl_j_co, cyl_y_co, k_rotated_co, modified_i_co, modified_k_co,
};
pub use gamma::gamma;
