//! Exact integer linear algebra: Smith normal form, determinants, and
//! integral symmetric bilinear forms.
//!
//! Nothing in here touches floating point.

mod form;
mod matrix;
mod smith;

pub use form::{direct_sum, parity, signature_of, NotSymmetric, Parity, Signature, SymmetricForm};
pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, SmithResult};
