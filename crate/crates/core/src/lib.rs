//! Exact invariants of knotted surfaces in the four-sphere and of the
//! branched double covers they determine.
//!
//! * [`linalg`]: Smith normal form, determinants, signatures of integral forms.
//! * [`fpgroup`]: finitely presented groups, coset enumeration, subgroup presentations.
//! * [`seifert`]: Seifert fibered spaces over the two-sphere.
//! * [`pretzel`]: pretzel knots, Goeritz forms and double branched covers.
//! * [`obstruct`]: symbolic surfaces and certified reducibility obstructions.

pub mod fixtures;
pub mod fpgroup;
pub mod linalg;
pub mod obstruct;
pub mod pretzel;
pub mod seifert;

pub use fpgroup::{AbelianInvariants, CosetTable, FiniteQuotient, GroupError, Perm, Presentation, Word};
pub use linalg::{IntMatrix, Parity, Signature, SmithResult, SymmetricForm};
pub use obstruct::{
    CoverInvariants, H2Certificate, ProofTrace, RestrictedFormSummary, SurfaceSpec, SurfaceType, Verdict,
};
pub use pretzel::PretzelKnot;
pub use seifert::SeifertInvariants;
