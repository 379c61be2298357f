//! Branched double cover bookkeeping: Betti numbers, a model of the
//! intersection form, the fundamental group and the Hopf-sequence count.

use std::fmt;

use super::surface::{RibbonDouble, SurfaceError, SurfaceSpec, SurfaceType, UnknottedSurface};
use crate::fpgroup::Presentation;
use crate::linalg::{direct_sum, parity, signature_of, Parity, SymmetricForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pi1 {
    Known(Presentation),
    /// The cover of a 2-knot: only `b2 = 0` is used.
    Unknown,
}

impl Pi1 {
    pub fn presentation(&self) -> Option<&Presentation> {
        match self {
            Pi1::Known(p) => Some(p),
            Pi1::Unknown => None,
        }
    }
}

impl fmt::Display for Pi1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pi1::Known(p) => write!(f, "{p}"),
            Pi1::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinParity {
    Even,
    Odd,
    Unknown,
}

impl From<Parity> for SpinParity {
    fn from(p: Parity) -> Self {
        match p {
            Parity::Even => SpinParity::Even,
            Parity::Odd => SpinParity::Odd,
        }
    }
}

impl fmt::Display for SpinParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpinParity::Even => "even",
            SpinParity::Odd => "odd",
            SpinParity::Unknown => "unknown",
        })
    }
}

/// Invariants of `Σ2(S)`. All forms modeled here are nondegenerate, so
/// `b_plus + b_minus = b2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverInvariants {
    pub b2: usize,
    pub b_plus: usize,
    pub b_minus: usize,
    /// Intersection form on `H2 / torsion`, up to isomorphism.
    pub form: SymmetricForm,
    pub pi1: Pi1,
    /// `rk H2(π1(Σ2(S)))`, from certificates.
    pub pi1_h2_rank: usize,
    pub spin_parity: SpinParity,
}

impl CoverInvariants {
    fn from_form(form: SymmetricForm, pi1: Pi1, pi1_h2_rank: usize, spin_parity: SpinParity) -> Self {
        let sig = signature_of(&form);
        assert_eq!(sig.b_zero, 0, "cover forms are nondegenerate");
        CoverInvariants {
            b2: form.dimension(),
            b_plus: sig.b_plus,
            b_minus: sig.b_minus,
            form,
            pi1,
            pi1_h2_rank,
            spin_parity,
        }
    }

    pub fn signature(&self) -> i64 {
        self.b_plus as i64 - self.b_minus as i64
    }
}

fn repeat_sum(block: &SymmetricForm, times: usize) -> SymmetricForm {
    (0..times).fold(SymmetricForm::empty(), |acc, _| direct_sum(&acc, block))
}

/// A ribbon double with cover `b2 = 2k` and signature 0: `k` hyperbolic
/// planes when orientable (spin cover), `k (<+1> ⊕ <-1>)` otherwise.
fn ribbon_cover(r: &RibbonDouble) -> CoverInvariants {
    let block = if r.surface_type().is_orientable() {
        SymmetricForm::hyperbolic()
    } else {
        SymmetricForm::diagonal(&[1, -1])
    };
    let form = repeat_sum(&block, r.k());
    let par = parity(&form).into();
    CoverInvariants::from_form(form, Pi1::Known(r.cover_pi1().clone()), r.h2_cert().rank, par)
}

/// Unknotted covers are simply connected: `S2 x S2` summands for each
/// handle, `CP2` for each `e = -2` projective plane and `-CP2` for each
/// `e = +2` one.
fn unknotted_cover(u: &UnknottedSurface) -> CoverInvariants {
    let form = match (u.surface_type(), u.rp2_counts()) {
        (SurfaceType::Orientable { genus }, _) => repeat_sum(&SymmetricForm::hyperbolic(), genus as usize),
        (_, Some((minus, plus))) => {
            let diag: Vec<i64> = std::iter::repeat_n(1, minus)
                .chain(std::iter::repeat_n(-1, plus))
                .collect();
            SymmetricForm::diagonal(&diag)
        }
        (SurfaceType::NonOrientable { .. }, None) => unreachable!("non-orientable unknots have RP2 counts"),
    };
    let par = parity(&form).into();
    CoverInvariants::from_form(form, Pi1::Known(Presentation::trivial()), 0, par)
}

pub fn cover_invariants(s: &SurfaceSpec) -> CoverInvariants {
    match s {
        SurfaceSpec::DoubleOfRibbon(r) => ribbon_cover(r),
        SurfaceSpec::TwoKnot { .. } => {
            CoverInvariants::from_form(SymmetricForm::empty(), Pi1::Unknown, 0, SpinParity::Unknown)
        }
        SurfaceSpec::Unknotted(u) => unknotted_cover(u),
        SurfaceSpec::ConnectedSum(parts) => {
            let covers: Vec<CoverInvariants> = parts.iter().map(cover_invariants).collect();
            let form = covers
                .iter()
                .fold(SymmetricForm::empty(), |acc, c| direct_sum(&acc, &c.form));
            let pi1 = covers.iter().try_fold(Presentation::trivial(), |acc, c| {
                c.pi1.presentation().map(|p| acc.free_product(p))
            });
            let pi1 = pi1.map_or(Pi1::Unknown, Pi1::Known);
            let rank = covers.iter().map(|c| c.pi1_h2_rank).sum();
            let par = if covers.iter().any(|c| c.spin_parity == SpinParity::Odd) {
                SpinParity::Odd
            } else if covers.iter().any(|c| c.spin_parity == SpinParity::Unknown) {
                SpinParity::Unknown
            } else {
                SpinParity::Even
            };
            CoverInvariants::from_form(form, pi1, rank, par)
        }
    }
}

/// Rank of the image of `π2` in `H2` from the Hopf exact sequence
/// `π2 → H2 → H2(π1) → 0`: `b2 - rk H2(π1)`.
pub fn pi2_image_rank(c: &CoverInvariants) -> Result<usize, SurfaceError> {
    c.b2.checked_sub(c.pi1_h2_rank)
        .ok_or(SurfaceError::CertificateExceedsB2 {
            rank: c.pi1_h2_rank,
            b2: c.b2,
        })
}

/// An unknotted projective-plane stabilizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rp2Stabilizer {
    /// Normal Euler number -2; contributes a `+1` class (cover `CP2`).
    MinusTwo,
    /// Normal Euler number +2; contributes a `-1` class.
    PlusTwo,
}

impl Rp2Stabilizer {
    pub fn from_normal_euler(e: i64) -> Option<Self> {
        match e {
            -2 => Some(Rp2Stabilizer::MinusTwo),
            2 => Some(Rp2Stabilizer::PlusTwo),
            _ => None,
        }
    }

    pub fn normal_euler(self) -> i64 {
        match self {
            Rp2Stabilizer::MinusTwo => -2,
            Rp2Stabilizer::PlusTwo => 2,
        }
    }

    pub fn class_square(self) -> i64 {
        -self.normal_euler() / 2
    }

    pub fn surface(self) -> SurfaceSpec {
        SurfaceSpec::unknotted_rp2(self.normal_euler()).expect("±2 is realized")
    }
}

/// `n_plus` stabilizers of type `-2` followed by `n_minus` of type `+2`.
pub fn stabilizers(n_plus: usize, n_minus: usize) -> Vec<Rp2Stabilizer> {
    std::iter::repeat_n(Rp2Stabilizer::MinusTwo, n_plus)
        .chain(std::iter::repeat_n(Rp2Stabilizer::PlusTwo, n_minus))
        .collect()
}

/// Knotted core of a stabilized surface `core # U`.
#[derive(Clone, Copy, Debug)]
pub enum Core<'a> {
    Known(&'a SurfaceSpec),
    /// An arbitrary surface about which nothing is known; only the
    /// stabilizers' spherical classes can be counted.
    Unspecified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Exact,
    /// `pos`, `neg` and `total_rank` are lower bounds.
    AtLeast,
}

/// The intersection form restricted to the image of `π2`, in the shape
/// `zero_summand_rank · [0] ⊕ pos · [+1] ⊕ neg · [-1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RestrictedFormSummary {
    pub total_rank: usize,
    pub zero_summand_rank: usize,
    pub pos: usize,
    pub neg: usize,
    pub bound: Bound,
}

impl RestrictedFormSummary {
    pub fn nondegenerate_rank(&self) -> usize {
        self.pos + self.neg
    }
}

impl fmt::Display for RestrictedFormSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.bound {
            Bound::Exact => "=",
            Bound::AtLeast => ">=",
        };
        write!(
            f,
            "{}[0] + {}[+1] + {}[-1] (nondegenerate rank {rel} {})",
            self.zero_summand_rank,
            self.pos,
            self.neg,
            self.nondegenerate_rank()
        )
    }
}

pub(crate) fn count_signs(stabs: &[Rp2Stabilizer]) -> (usize, usize) {
    let pos = stabs.iter().filter(|s| s.class_square() > 0).count();
    (pos, stabs.len() - pos)
}

/// Restricted form on `im(π2 → H2)` for `core # stabilizers`.
///
/// A ribbon-double core contributes `k` disjoint square-zero spheres; each
/// stabilizer contributes an orthogonal `±1` class. With an unspecified core
/// only the stabilizer classes are known, so the result is a lower bound.
pub fn restricted_form(core: Core<'_>, stabs: &[Rp2Stabilizer]) -> Result<RestrictedFormSummary, SurfaceError> {
    let (pos, neg) = count_signs(stabs);
    match core {
        Core::Unspecified => Ok(RestrictedFormSummary {
            total_rank: pos + neg,
            zero_summand_rank: 0,
            pos,
            neg,
            bound: Bound::AtLeast,
        }),
        Core::Known(s) => {
            let r = s
                .as_ribbon_double()
                .ok_or_else(|| SurfaceError::NoSphericalClassRule(s.label()))?;
            Ok(RestrictedFormSummary {
                total_rank: r.k() + pos + neg,
                zero_summand_rank: r.k(),
                pos,
                neg,
                bound: Bound::Exact,
            })
        }
    }
}
