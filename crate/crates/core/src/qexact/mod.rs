//! Exact coefficient arithmetic: rationals at numeric q, rational functions
//! at symbolic q, q-Pochhammer symbols, and truncated power series in u.

pub mod poch;
pub mod poly;
pub mod ratfn;
pub mod scalar;
pub mod series;

pub use poch::{euler_sum, euler_term, pochhammer, PochBase, Sign};
pub use poly::IntPoly;
pub use ratfn::RatFn;
pub use scalar::{scalar_pow, Scalar};
pub use series::USeries;
