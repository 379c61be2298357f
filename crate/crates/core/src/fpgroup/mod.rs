//! Finitely presented groups: words, presentations, abelianization, finite
//! permutation quotients, coset enumeration and Reidemeister–Schreier
//! rewriting.
//!
//! `b2` of a group always means the rank of `H_2(G; Q)`. It is not computable
//! in general, so only the upper bound from the presentation complex is
//! offered here.

mod abelian;
mod coset;
mod error;
mod parse;
mod perm;
mod presentation;
mod schreier;
mod word;

pub use abelian::{abelianization, b2_upper_bound, relation_matrix, AbelianInvariants};
pub use coset::{coset_table_from_quotient, todd_coxeter, CosetTable, TableDefect, DEFAULT_MAX_COSETS};
pub use error::GroupError;
pub use perm::{check_homomorphism, quotient_group_order, FiniteQuotient, HomomorphismCheck, Perm};
pub use presentation::{free_product_all, Presentation};
pub use schreier::reidemeister_schreier;
pub use word::{Letter, Word, WordDisplay};

/// `<x,y,z | x^p, y^q, z^r, x*y*z>`
pub fn triangle_presentation(p: i64, q: i64, r: i64) -> Result<Presentation, GroupError> {
    Presentation::triangle(p, q, r)
}
