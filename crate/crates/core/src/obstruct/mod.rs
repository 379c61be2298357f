//! Knotted surfaces in the four-sphere, their branched double covers and
//! the reducibility obstructions.

mod checks;
mod construct;
mod cover;
mod specfile;
mod surface;
mod trace;

pub use checks::{
    check_proposition, check_remark_rp2_split, check_theorem, IndecomposabilityCertificate, DEFAULT_SWEEP,
};
pub use construct::{band_construction_surface, corollary_surface, triangle_indecomposability};
pub use cover::{
    cover_invariants, pi2_image_rank, restricted_form, stabilizers, Bound, Core, CoverInvariants, Pi1,
    RestrictedFormSummary, Rp2Stabilizer, SpinParity,
};
pub use specfile::{parse_group, SpecEntry, SpecError, SpecFile};
pub use surface::{H2Certificate, Provenance, RibbonDouble, SurfaceError, SurfaceSpec, SurfaceType, UnknottedSurface};
pub use trace::{Check, Conclusion, ProofTrace, Rel, Rule, TraceLine, Verdict};
