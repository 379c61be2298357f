//! Pinned inputs shared by tests, the CLI and the reproduction report.

use crate::fpgroup::{FiniteQuotient, Perm, Presentation};

/// `T(2,3,7)` on two generators: `<x,y | x^2, y^3, (x*y)^7>`.
pub const TRIANGLE_237_TWO_GENERATOR: &str = "<x,y | x^2, y^3, (x*y)^7>";

/// The Hurwitz quotient of `T(2,3,7)` of order 168.
pub const HURWITZ_168: &str = "<x,y | x^2, y^3, (x*y)^7, (x^-1*y^-1*x*y)^4>";

/// Images of `x`, `y` in `PSL(2,7)` acting on the projective line over `F_7`,
/// points `0..6` numbered `1..7` and infinity numbered 8. First pair (in
/// lexicographic order of unimodular matrices) with orders 2 and 3, product
/// of order 7, generating a group of order 168.
pub const PSL27_X: &str = "(1,8)(2,7)(3,4)(5,6)";
pub const PSL27_Y: &str = "(1,2,8)(3,7,5)";
pub const PSL27_DEGREE: usize = 8;

/// Seifert invariants of the double branched cover of `P(-2,3,7)`.
pub const BRIESKORN_237: &str = "S2(0; 1/2, -1/3, -1/7)";

pub const PRETZEL_237: &str = "P(-2,3,7)";

/// Literature value `H_2(T(2,3,7)) = Z`.
pub const TRIANGLE_237_H2_SOURCE: &str = "literature: H_2 of the (2,3,7) triangle group is Z";

/// The triangle group's indecomposability under free products; the argument
/// (connectedness of vertex complements in the Cayley graph) is not mechanized.
pub const TRIANGLE_237_INDECOMPOSABLE_SOURCE: &str =
    "literature: hyperbolic triangle groups are freely indecomposable (Cayley graph vertex complements are connected)";

pub fn psl27_pair() -> (Perm, Perm) {
    (
        Perm::parse_cycles(PSL27_X, PSL27_DEGREE).expect("fixture parses"),
        Perm::parse_cycles(PSL27_Y, PSL27_DEGREE).expect("fixture parses"),
    )
}

/// `x -> PSL27_X`, `y -> PSL27_Y`, for two-generator presentations.
pub fn psl27_quotient() -> FiniteQuotient {
    let (x, y) = psl27_pair();
    FiniteQuotient::new(PSL27_DEGREE, vec![x, y]).expect("same degree")
}

/// `x, y, z -> a, b, (ab)^-1` for the three-generator triangle presentation.
pub fn psl27_quotient_three_generator() -> FiniteQuotient {
    let (x, y) = psl27_pair();
    let z = (&x * &y).inverse();
    FiniteQuotient::new(PSL27_DEGREE, vec![x, y, z]).expect("same degree")
}

pub fn triangle_237() -> Presentation {
    Presentation::triangle(2, 3, 7).expect("valid parameters")
}

pub fn triangle_237_two_generator() -> Presentation {
    Presentation::parse(TRIANGLE_237_TWO_GENERATOR).expect("fixture parses")
}

pub fn hurwitz_168() -> Presentation {
    Presentation::parse(HURWITZ_168).expect("fixture parses")
}
