//! Zero-temperature Casimir interaction between two parallel, undoped,
//! gapped graphene layers in the Dirac model.
//!
//! The crate computes, in gap-scaled dimensionless variables:
//!
//! * the total interaction energy through the Lifshitz formula — the
//!   correction factor η(λ) relative to perfect mirrors, with its
//!   short-distance constant and long-distance λ⁻² asymptote
//!   ([`lifshitz`]);
//! * the TE surface-polariton dispersion relations of the single layer
//!   and of the coupled bilayer, including the light-cone endpoint and
//!   continuation of the antisymmetric branch ([`polariton`]);
//! * the polaritonic contribution to the energy, its asymptotics and the
//!   separation where the polaritonic force reverses sign ([`polenergy`]).
//!
//! Supporting layers: the scalar special functions of the layer response
//! ([`specfun`]), reflection coefficients on the real and imaginary
//! frequency axes ([`reflection`]), and deterministic 1-D quadrature /
//! root-finding / maximization kernels ([`numerics`]).

pub mod error;
pub mod lifshitz;
pub mod numerics;
pub mod params;
pub mod polariton;
pub mod polenergy;
pub mod reflection;
pub mod specfun;

pub use error::{Error, Result};
pub use params::ModelParams;
