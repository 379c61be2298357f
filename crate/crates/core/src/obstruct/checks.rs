//! The three decision procedures.

use super::cover::{cover_invariants, pi2_image_rank, restricted_form, stabilizers, Core, CoverInvariants};
use super::surface::{RibbonDouble, SurfaceError, SurfaceSpec, SurfaceType};
use super::trace::{Check, Conclusion, ProofTrace, Rel, Rule, Verdict};
use crate::fpgroup::{b2_upper_bound, Presentation};

pub const DEFAULT_SWEEP: usize = 10;

/// Stable irreducibility of a ribbon double `S` of Euler characteristic
/// `2 - 2k` whose cover group has certified `rk H2 = k`.
///
/// Hypotheses are checked exactly. The contradiction for a hypothetical
/// `S # U ≅ S' # U'` with `χ(S') > χ(S)` is replayed for every pair
/// `0 <= l < l' <= sweep` of normalized stabilizer counts and every split
/// of them into `±2` projective planes. Lines are ordered by `l'` then `l`,
/// so the sweep for a smaller bound is a prefix of the sweep for a larger one.
pub fn check_theorem(s: &RibbonDouble, sweep: usize) -> Verdict {
    let mut trace = ProofTrace::new();
    let k = s.k();
    let chi = s.euler_characteristic();
    let rank = s.h2_cert().rank;
    let bound = b2_upper_bound(s.cover_pi1());

    trace.push(
        format!(
            "{} is a double of a ribbon surface ({}) with k = {k}",
            s.name(),
            s.surface_type()
        ),
        Rule::Hypothesis,
        Check::Input,
    );

    let chi_check = Check::chain(chi, &[(Rel::Eq, 2 - 2 * k as i64), (Rel::Lt, 2)]);
    if !chi_check.evaluate() {
        trace.push(
            format!("hypothesis fails: χ(S) = {chi} is not < 2"),
            Rule::Hypothesis,
            Check::Refutes(Box::new(chi_check)),
        );
        return Verdict::inconclusive("χ not < 2", trace);
    }
    trace.push(format!("χ(S) = 2 - 2k = {chi} < 2"), Rule::Hypothesis, chi_check);

    trace.push(
        format!("rk H2(π1(Σ2(S))) = {rank}: {}", s.h2_cert()),
        Rule::Certificate,
        Check::Input,
    );
    let rank_check = Check::eq(rank as i64, k as i64);
    if !rank_check.evaluate() {
        trace.push(
            format!("hypothesis fails: certified rank {rank} ≠ k = {k}"),
            Rule::Hypothesis,
            Check::Refutes(Box::new(rank_check)),
        );
        return Verdict::inconclusive("rank ≠ k", trace);
    }
    trace.push(format!("certified rank = k = {k}"), Rule::Hypothesis, rank_check);

    let gate = Check::rel(rank as i64, Rel::Le, bound as i64);
    if !gate.evaluate() {
        trace.push(
            format!("certificate rank {rank} exceeds the presentation bound {bound}"),
            Rule::CertificateGate,
            Check::Refutes(Box::new(gate)),
        );
        return Verdict::inconclusive("certificate exceeds b2 bound", trace);
    }
    trace.push(
        format!("certificate is consistent: rank {rank} <= b2 bound {bound} of the cover presentation"),
        Rule::CertificateGate,
        gate,
    );

    let surface = SurfaceSpec::DoubleOfRibbon(s.clone());
    let cover = cover_invariants(&surface);
    trace.push(
        format!("b2(Σ2(S)) = {} = 2k, σ(Σ2(S)) = {}", cover.b2, cover.signature()),
        Rule::RibbonDoubleCover,
        Check::All(vec![
            Check::eq(cover.b2 as i64, 2 * k as i64),
            Check::eq(cover.signature(), 0),
        ]),
    );
    let hopf = match hopf_line(&cover) {
        Some(c) => c,
        None => return Verdict::inconclusive("certificate exceeds b2", trace),
    };
    trace.push(
        format!(
            "im(π2 → H2(Σ2(S))) has rank b2 - rk H2(π1) = {} - {} = {}",
            cover.b2,
            rank,
            cover.b2 - rank
        ),
        Rule::HopfExactSequence,
        hopf,
    );
    trace.push(
        "suppose S # U ≅ S' # U' with χ(S') > χ(S); after normalization U, U' are sums of l < l' unknotted RP2s"
            .to_string(),
        Rule::Normalization,
        Check::General,
    );

    // Every S # U with l <= sweep stabilizers, computed once per split.
    let mut core_side: Vec<Vec<(usize, usize, usize)>> = Vec::with_capacity(sweep + 1);
    for l in 0..=sweep {
        let mut splits = Vec::with_capacity(l + 1);
        for lp in 0..=l {
            let stabs = stabilizers(lp, l - lp);
            let mut parts = vec![surface.clone()];
            parts.extend(stabs.iter().map(|st| st.surface()));
            let sum = SurfaceSpec::connected_sum(parts).expect("nonempty");
            let c = cover_invariants(&sum);
            let Ok(image) = pi2_image_rank(&c) else {
                return Verdict::inconclusive("certificate exceeds b2", trace);
            };
            let form = match restricted_form(Core::Known(&surface), &stabs) {
                Ok(f) => f,
                Err(e) => return Verdict::inconclusive(e.to_string(), trace),
            };
            splits.push((image, form.total_rank, form.nondegenerate_rank()));
        }
        core_side.push(splits);
    }

    for l_prime in 1..=sweep {
        for (l, side) in core_side.iter().enumerate().take(l_prime) {
            let mut checks = vec![Check::StabilizedRanks { k, l, l_prime }];
            for &(image, total, nondeg) in side {
                checks.push(Check::eq(image as i64, total as i64));
                checks.push(Check::eq(nondeg as i64, l as i64));
            }
            let lower = restricted_form(Core::Unspecified, &stabilizers(l_prime, 0))
                .expect("unspecified core")
                .nondegenerate_rank();
            checks.push(Check::Refutes(Box::new(Check::rel(lower as i64, Rel::Le, l as i64))));
            trace.push(
                format!(
                    "l = {l}, l' = {l_prime}: on S # U im(π2) has rank k + l = {} with nondegenerate part of rank {l}; \
                     on S' # U' it is at least {lower} > {l}; contradiction",
                    k + l
                ),
                Rule::RibbonSpheres,
                Check::All(checks),
            );
        }
    }

    trace.push(
        "for all l' > l the nondegenerate ranks differ, so no such S' exists",
        Rule::General,
        Check::General,
    );
    if let Err(line) = trace.replay() {
        return Verdict::inconclusive(format!("trace line {line} does not replay"), trace);
    }
    Verdict {
        conclusion: Conclusion::StablyIrreducible,
        trace,
        notes: vec!["stably irreducible implies irreducible".into()],
    }
}

fn hopf_line(c: &CoverInvariants) -> Option<Check> {
    let image = pi2_image_rank(c).ok()?;
    Some(Check::eq((image + c.pi1_h2_rank) as i64, c.b2 as i64))
}

/// `S` is not `N # U` with `N` a 2-knot and `U` unknotted, provided `S` is
/// not a sphere and `rk H2(π1(Σ2(S))) > 0`.
pub fn check_proposition(s: &SurfaceSpec) -> Result<Verdict, SurfaceError> {
    if s.euler_characteristic() >= 2 {
        return Err(SurfaceError::SphereInput);
    }
    let cover = cover_invariants(s);
    let r = cover.pi1_h2_rank as i64;
    let mut trace = ProofTrace::new();
    trace.push(
        format!(
            "{}: χ = {} < 2, rk H2(π1(Σ2(S))) = {r}",
            s.label(),
            s.euler_characteristic()
        ),
        Rule::Certificate,
        Check::rel(s.euler_characteristic(), Rel::Lt, 2),
    );
    if r == 0 {
        trace.push(
            "b2(π1(Σ2(S))) = 0 gives no obstruction",
            Rule::Certificate,
            Check::eq(r, 0),
        );
        return Ok(Verdict::inconclusive("b₂(π₁) = 0", trace));
    }
    trace.push(
        "suppose S = N # U with N a 2-knot and U unknotted",
        Rule::Hypothesis,
        Check::Input,
    );

    let knot = cover_invariants(&SurfaceSpec::two_knot("N"));
    let b2_n = knot.b2 as i64;
    trace.push(
        format!("Σ2(N) is a rational homology sphere: b2(Σ2(N)) = {b2_n}"),
        Rule::RationalHomologySphere,
        Check::eq(b2_n, 0),
    );
    trace.push(
        "Σ2(U) is simply connected, so π1(Σ2(S)) = π1(Σ2(N))",
        Rule::UnknottedCover,
        Check::Input,
    );
    let chain = Check::chain(b2_n, &[(Rel::Ge, r), (Rel::Eq, r), (Rel::Gt, 0)]);
    trace.push(
        format!("0 = b₂(Σ₂(N)) ≥ b₂(π₁(Σ₂(N))) = b₂(π₁(Σ₂(S))) = {r} > 0 is impossible"),
        Rule::EilenbergMacLane,
        Check::All(vec![Check::Refutes(Box::new(chain)), Check::rel(r, Rel::Gt, 0)]),
    );
    Ok(Verdict {
        conclusion: Conclusion::NotSphereSumUnknotted,
        trace,
        notes: Vec::new(),
    })
}

/// A cited proof that `group` is not a nontrivial free product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndecomposabilityCertificate {
    pub group: Presentation,
    pub citation: String,
}

/// A Klein-bottle ribbon double with cover group certified freely
/// indecomposable does not split as a sum of two knotted projective planes.
pub fn check_remark_rp2_split(
    s: &SurfaceSpec,
    cert: Option<&IndecomposabilityCertificate>,
) -> Result<Verdict, SurfaceError> {
    let r = s
        .as_ribbon_double()
        .filter(|r| r.surface_type() == SurfaceType::KLEIN_BOTTLE)
        .ok_or_else(|| SurfaceError::NotKleinBottle(s.label()))?;
    let cover = cover_invariants(s);
    let b2 = cover.b2 as i64;
    let image = pi2_image_rank(&cover)? as i64;
    let mut trace = ProofTrace::new();
    let Some(cert) = cert else {
        trace.push(
            format!(
                "{} may split as P1 # P2: no indecomposability certificate for its cover group",
                r.name()
            ),
            Rule::FreeIndecomposability,
            Check::Input,
        );
        return Ok(Verdict::inconclusive("no indecomposability certificate", trace));
    };
    if &cert.group != r.cover_pi1() {
        trace.push(
            format!(
                "certificate concerns {}, not the cover group {}",
                cert.group,
                r.cover_pi1()
            ),
            Rule::FreeIndecomposability,
            Check::Input,
        );
        return Ok(Verdict::inconclusive("certificate is for a different group", trace));
    }
    let split = Check::All(vec![
        Check::eq(b2, 2),
        Check::eq(cover.b_plus as i64, 1),
        Check::eq(cover.b_minus as i64, 1),
    ]);
    if !split.evaluate() {
        trace.push(
            format!("cover has b2 = {b2}, σ = {}", cover.signature()),
            Rule::SignatureSplit,
            Check::Refutes(Box::new(split)),
        );
        return Ok(Verdict::inconclusive("cover is not b2 = 2 with σ = 0", trace));
    }
    trace.push(
        format!(
            "suppose {} = P1 # P2 with P1, P2 projective planes; b2 = {b2} and σ = 0 force Q = Q_P1 ⊕ Q_P2 = (+1) ⊕ (-1)",
            r.name()
        ),
        Rule::SignatureSplit,
        split,
    );
    trace.push(
        format!("π1(Σ2(S)) = π1(Σ2(P1)) * π1(Σ2(P2)) and {} is freely indecomposable ({}), so one factor, say for P1, is trivial", cert.group, cert.citation),
        Rule::FreeIndecomposability,
        Check::Input,
    );
    trace.push(
        "Σ2(P1) is simply connected, so its ±1 class lies in im(π2)",
        Rule::SimplyConnectedSummand,
        Check::rel(1, Rel::Le, b2),
    );
    trace.push(
        "S is a double, so Σ2(S) reverses orientation and im(π2) also holds a class of the opposite sign",
        Rule::OrientationReversal,
        Check::eq(cover.b_plus as i64, cover.b_minus as i64),
    );
    trace.push(
        format!("then im(π2) = H2 has rank {b2}, but the Hopf sequence gives rank b2 - 1 = {image}"),
        Rule::Contradiction,
        Check::All(vec![
            Check::eq(image, b2 - 1),
            Check::Refutes(Box::new(Check::eq(b2, image))),
        ]),
    );
    Ok(Verdict {
        conclusion: Conclusion::NoRp2Splitting,
        trace,
        notes: Vec::new(),
    })
}
