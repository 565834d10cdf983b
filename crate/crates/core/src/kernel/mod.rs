//! Exact arithmetic: rationals, polynomials, rational functions, truncated
//! Laurent series and dense linear algebra over Q.

pub mod matrix;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod series;

pub use matrix::{kernel_basis, AffineSolution, RatMatrix};
pub use poly::{poly_gcd, remove_common_factors, Poly};
pub use rat::{rat, ri, Rat};
pub use ratfunc::RatFunc;
pub use series::{series_sqrt, LaurentSeries, SeriesError};
