//! Explicit ribbon doubles with `π1(Σ2) = T(2,3,7)` and free powers of it.

use super::checks::IndecomposabilityCertificate;
use super::surface::{H2Certificate, RibbonDouble, SurfaceError, SurfaceSpec, SurfaceType};
use crate::fixtures;
use crate::fpgroup::free_product_all;
use crate::pretzel::PretzelKnot;
use crate::seifert::SeifertInvariants;

fn triangle_certificate() -> H2Certificate {
    H2Certificate::literature(1, fixtures::TRIANGLE_237_H2_SOURCE)
}

/// `#_l S` where `S` is the torus (`orientable`) or Klein bottle double with
/// cover group `T(2,3,7)`: a ribbon double with `χ = 2 - 2l`, cover group the
/// free product of `l` copies and certified `rk H2 = l`.
pub fn corollary_surface(l: usize, orientable: bool) -> Result<SurfaceSpec, SurfaceError> {
    if l == 0 {
        return Err(SurfaceError::NoSummands);
    }
    let base = if orientable {
        SurfaceType::TORUS
    } else {
        SurfaceType::KLEIN_BOTTLE
    };
    let surface_type = (1..l).fold(base, |t, _| t.connected_sum(base));
    let group = fixtures::triangle_237();
    let cover = free_product_all(std::iter::repeat_n(&group, l));
    let cert = H2Certificate::free_product(vec![triangle_certificate(); l]);
    let name = match (l, orientable) {
        (1, true) => "S_torus".to_string(),
        (1, false) => "S_klein".to_string(),
        (_, true) => format!("#{l} S_torus"),
        (_, false) => format!("#{l} S_klein"),
    };
    RibbonDouble::new(name, surface_type, l, cover, cert).map(SurfaceSpec::DoubleOfRibbon)
}

pub fn triangle_indecomposability() -> IndecomposabilityCertificate {
    IndecomposabilityCertificate {
        group: fixtures::triangle_237(),
        citation: fixtures::TRIANGLE_237_INDECOMPOSABLE_SOURCE.into(),
    }
}

/// The double of the ribbon surface obtained from a ribbon disk for
/// `P(-2,3,7) # -P(-2,3,7)` by one band whose boundary is `P(-2,3,7,n)`.
///
/// Only the algebraic output is modeled: the cover group is `π1` of
/// `Σ2(P(-2,3,7))` with a regular fiber killed. The surface is a Klein
/// bottle when the boundary is a knot and a torus when it is a link.
pub fn band_construction_surface(n: i64) -> Result<SurfaceSpec, SurfaceError> {
    let boundary = PretzelKnot::new(vec![-2, 3, 7, n])?;
    let y: SeifertInvariants = PretzelKnot::parse(fixtures::PRETZEL_237)?.double_branched_cover()?;
    let group = y.kill_regular_fiber();
    let surface_type = if boundary.is_knot() {
        SurfaceType::KLEIN_BOTTLE
    } else {
        SurfaceType::TORUS
    };
    let r = RibbonDouble::new(
        format!("band double for {boundary}"),
        surface_type,
        1,
        group,
        triangle_certificate(),
    )?
    .with_note(format!(
        "Y = {y} is the double branched cover of {}",
        fixtures::PRETZEL_237
    ))
    .with_note("Σ2 of the ribbon disk is (Y - B^3) x I (not computed)")
    .with_note("the band lifts to an arc whose core C is a regular fiber (not computed)");
    Ok(SurfaceSpec::DoubleOfRibbon(r))
}
