//! Exact desk-scale computations for the parabolic SL2 Hitchin system on
//! hyperelliptic curves and for its quantization at the critical level.
//!
//! * [`kernel`]: exact rationals, polynomials, Laurent series, linear algebra.
//! * [`curve`]: hyperelliptic function fields, valuations, local expansions,
//!   bases of (quadratic) differentials with prescribed poles.
//! * [`hitchin`]: parabolic Higgs fields on the trivial bundle, the
//!   determinant map, flags from residues, spectral curves.
//! * [`affine`]: the centrally extended loop algebra of sl2 on N copies,
//!   PBW modules, Sugawara operators and singular vectors.
//! * [`bridge`]: jets, the second-order-pole map, admissibility and the
//!   affine fibres over the base of the Hitchin system.

pub mod affine;
pub mod bridge;
pub mod curve;
pub mod hitchin;
pub mod kernel;
pub mod par;

pub use kernel::{rat, ri, Rat};
