//! The end-to-end reproduction suite behind `knotsurf paper-verify`.
//!
//! All inputs come from [`Fixtures`], so a test can corrupt one value and
//! watch the matching section fail.

use knotsurf::fixtures;
use knotsurf::fpgroup::{
    abelianization, b2_upper_bound, check_homomorphism, coset_table_from_quotient, free_product_all,
    quotient_group_order, reidemeister_schreier, todd_coxeter, FiniteQuotient, HomomorphismCheck, Perm, Presentation,
};
use knotsurf::obstruct::{
    check_proposition, check_remark_rp2_split, check_theorem, cover_invariants, pi2_image_rank, stabilizers,
    Conclusion, H2Certificate, IndecomposabilityCertificate, RibbonDouble, SurfaceSpec, SurfaceType,
};
use knotsurf::pretzel::PretzelKnot;
use knotsurf::seifert::{matches_triangle, H1Order, SeifertInvariants};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::commands::MAX_QUOTIENT_ORDER;
use crate::report::{Report, Section};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixtures {
    pub triangle: String,
    pub triangle_two_generator: String,
    pub hurwitz: String,
    pub psl27_x: String,
    pub psl27_y: String,
    pub psl27_degree: usize,
    pub seifert: String,
    pub pretzel: String,
    pub h2_rank: usize,
    pub h2_source: String,
    pub indecomposable: Option<String>,
}

impl Default for Fixtures {
    fn default() -> Self {
        Fixtures {
            triangle: fixtures::triangle_237().to_string(),
            triangle_two_generator: fixtures::TRIANGLE_237_TWO_GENERATOR.into(),
            hurwitz: fixtures::HURWITZ_168.into(),
            psl27_x: fixtures::PSL27_X.into(),
            psl27_y: fixtures::PSL27_Y.into(),
            psl27_degree: fixtures::PSL27_DEGREE,
            seifert: fixtures::BRIESKORN_237.into(),
            pretzel: fixtures::PRETZEL_237.into(),
            h2_rank: 1,
            h2_source: fixtures::TRIANGLE_237_H2_SOURCE.into(),
            indecomposable: Some(fixtures::TRIANGLE_237_INDECOMPOSABLE_SOURCE.into()),
        }
    }
}

/// Runs a section body; any error it reports fails the section.
fn section(title: &str, body: impl FnOnce(&mut Section) -> Result<(), String>) -> Section {
    let mut s = Section::new(title);
    if let Err(e) = body(&mut s) {
        s.fail(e);
    }
    s
}

fn parse(text: &str) -> Result<Presentation, String> {
    Presentation::parse(text).map_err(|e| e.to_string())
}

fn psl27(f: &Fixtures) -> Result<(Perm, Perm), String> {
    let x = Perm::parse_cycles(&f.psl27_x, f.psl27_degree).map_err(|e| e.to_string())?;
    let y = Perm::parse_cycles(&f.psl27_y, f.psl27_degree).map_err(|e| e.to_string())?;
    Ok((x, y))
}

pub fn triangle_arithmetic(f: &Fixtures) -> Section {
    section("triangle group (2,3,7): abelianization, deficiency, b2 bound", |s| {
        let p = parse(&f.triangle)?;
        let a = abelianization(&p);
        s.fact("presentation", &p);
        s.check("betti", a.betti, a.betti == 0);
        s.check("torsion", format!("{:?}", a.torsion), a.torsion.is_empty());
        s.check("deficiency", p.deficiency(), p.deficiency() == -1);
        let b = b2_upper_bound(&p);
        s.check("b2_upper_bound", b, b == 1);
        s.check("consistent_with_h2_rank", f.h2_rank, f.h2_rank <= b);
        Ok(())
    })
}

pub fn hurwitz_quotient(f: &Fixtures, max_cosets: usize) -> Section {
    section(
        "Hurwitz quotient: coset enumeration closes at the order of PSL(2,7)",
        |s| {
            let h = parse(&f.hurwitz)?;
            let (x, y) = psl27(f)?;
            let q = FiniteQuotient::new(f.psl27_degree, vec![x, y]).map_err(|e| e.to_string())?;
            let hom = check_homomorphism(&h, &q).map_err(|e| e.to_string())?;
            s.check(
                "fixture_is_homomorphism",
                hom == HomomorphismCheck::Accept,
                hom == HomomorphismCheck::Accept,
            );
            let order = quotient_group_order(&q, MAX_QUOTIENT_ORDER).map_err(|e| e.to_string())?;
            s.check("permutation_closure_order", order, order == 168);
            let t = todd_coxeter(&h, &[], max_cosets).map_err(|e| e.to_string())?;
            s.check("table_valid", t.validate().is_ok(), t.validate().is_ok());
            s.check("coset_index", t.index(), t.index() == 168 && t.index() == order);
            s.fact("max_cosets", max_cosets);
            Ok(())
        },
    )
}

fn kernel_betti(s: &mut Section, prefix: &str, p: &Presentation, q: &FiniteQuotient) -> Result<(), String> {
    let t = coset_table_from_quotient(p, q, MAX_QUOTIENT_ORDER).map_err(|e| e.to_string())?;
    s.check(
        &format!("{prefix}.table_valid"),
        t.validate().is_ok(),
        t.validate().is_ok(),
    );
    s.check(&format!("{prefix}.index"), t.index(), t.index() == 168);
    let k = reidemeister_schreier(&t).map_err(|e| e.to_string())?;
    s.fact(&format!("{prefix}.kernel_generators"), k.generator_count());
    s.fact(&format!("{prefix}.kernel_relators"), k.relator_count());
    let a = abelianization(&k);
    s.check(&format!("{prefix}.kernel_betti"), a.betti, a.betti == 6);
    s.check(
        &format!("{prefix}.kernel_torsion"),
        format!("{:?}", a.torsion),
        a.torsion.is_empty(),
    );
    Ok(())
}

pub fn klein_quartic(f: &Fixtures) -> Section {
    section(
        "Klein quartic: kernel of T(2,3,7) onto PSL(2,7) abelianizes to Z^6",
        |s| {
            let (x, y) = psl27(f)?;
            let z = (&x * &y).inverse();
            let two = parse(&f.triangle_two_generator)?;
            let q2 = FiniteQuotient::new(f.psl27_degree, vec![x.clone(), y.clone()]).map_err(|e| e.to_string())?;
            kernel_betti(s, "two_generator", &two, &q2)?;
            let three = parse(&f.triangle)?;
            let q3 = FiniteQuotient::new(f.psl27_degree, vec![x, y, z]).map_err(|e| e.to_string())?;
            kernel_betti(s, "three_generator", &three, &q3)
        },
    )
}

pub fn seifert_pipeline(f: &Fixtures) -> Section {
    section(
        "Seifert space S2(0; 1/2, -1/3, -1/7): orbifold group, H1, Euler number",
        |s| {
            let y = SeifertInvariants::parse(&f.seifert).map_err(|e| e.to_string())?;
            s.fact("space", &y);
            let k = y.kill_regular_fiber();
            s.fact("killed_fiber_presentation", &k);
            let m = matches_triangle(&k, 2, 3, 7);
            s.check("triangle_237_match", m, m);
            let h1 = y.h1_order();
            s.check("h1_order", &h1, h1 == H1Order::Finite(1.into()));
            let e = y.euler_number();
            s.check("euler_number", &e, e == BigRational::new((-1).into(), 42.into()));
            Ok(())
        },
    )
}

pub fn pretzel_cross_check(f: &Fixtures) -> Section {
    section("pretzel P(-2,3,7): determinant and double branched cover", |s| {
        let k = PretzelKnot::parse(&f.pretzel).map_err(|e| e.to_string())?;
        let goeritz = k.goeritz_matrix().gram().determinant();
        let formula = k.determinant_formula();
        let one = BigInt::from(1);
        s.check("det_goeritz", &goeritz, goeritz.magnitude() == one.magnitude());
        s.check("det_formula", &formula, formula == one);
        let y = k.double_branched_cover().map_err(|e| e.to_string())?;
        let exact = y.to_string() == fixtures::BRIESKORN_237 && y.to_string() == f.seifert;
        s.check("double_branched_cover", &y, exact);
        let range: Vec<i64> = (-7..=7).filter(|&x| x != 0).collect();
        let (mut checked, mut exceptions) = (0usize, 0usize);
        for &a in &range {
            for &b in &range {
                for &c in &range {
                    let p = PretzelKnot::new(vec![a, b, c]).map_err(|e| e.to_string())?;
                    let det = p.determinant();
                    if det == BigInt::from(0) {
                        continue;
                    }
                    checked += 1;
                    let cover = p.double_branched_cover().map_err(|e| e.to_string())?;
                    if cover.h1_order() != H1Order::Finite(det) {
                        exceptions += 1;
                    }
                }
            }
        }
        s.fact("sweep_checked", checked);
        s.check("sweep_exceptions", exceptions, exceptions == 0);
        Ok(())
    })
}

/// `#l S` for the torus or Klein-bottle double, from the fixture group and
/// certificate.
pub fn corollary_from(f: &Fixtures, l: usize, orientable: bool) -> Result<SurfaceSpec, String> {
    let group = parse(&f.triangle)?;
    let base = if orientable {
        SurfaceType::TORUS
    } else {
        SurfaceType::KLEIN_BOTTLE
    };
    let surface_type = (1..l).fold(base, |t, _| t.connected_sum(base));
    let cover = free_product_all(std::iter::repeat_n(&group, l));
    let cert = H2Certificate::free_product(vec![H2Certificate::literature(f.h2_rank, f.h2_source.clone()); l]);
    let name = format!("#{l} {}", if orientable { "torus" } else { "klein" });
    RibbonDouble::new(name, surface_type, l, cover, cert)
        .map(SurfaceSpec::DoubleOfRibbon)
        .map_err(|e| e.to_string())
}

pub fn theorem(f: &Fixtures, sweep: usize) -> Section {
    section("stable irreducibility of the connected sums #l S, l = 1..5", |s| {
        s.fact("sweep", sweep);
        let mut traces = Vec::new();
        let mut hopf_objects = 0usize;
        for l in 1..=5 {
            for orientable in [true, false] {
                let spec = corollary_from(f, l, orientable)?;
                let d = spec.as_ribbon_double().ok_or("not a ribbon double")?;
                let v = check_theorem(&d, sweep);
                let key = format!("l{l}.{}", if orientable { "torus" } else { "klein" });
                let ok = v.conclusion == Conclusion::StablyIrreducible && v.trace.replay().is_ok();
                s.check(&format!("{key}.conclusion"), &v.conclusion, ok);
                s.fact(&format!("{key}.trace_lines"), v.trace.len());
                for n in 0..=sweep {
                    for plus in 0..=n {
                        let mut parts = vec![spec.clone()];
                        parts.extend(stabilizers(plus, n - plus).iter().map(|st| st.surface()));
                        let c = cover_invariants(&SurfaceSpec::connected_sum(parts).map_err(|e| e.to_string())?);
                        let image = pi2_image_rank(&c).map_err(|e| e.to_string())?;
                        if image + c.pi1_h2_rank != c.b2 {
                            return Err(format!("Hopf count fails for {key} with {n} stabilizers"));
                        }
                        hopf_objects += 1;
                    }
                }
                traces.push(format!("[{key}]\n{}", v.trace));
            }
        }
        s.fact("hopf_consistent_objects", hopf_objects);
        s.trace = Some(traces.join("\n"));
        Ok(())
    })
}

pub fn proposition(f: &Fixtures) -> Section {
    section("not a 2-knot summed with an unknotted surface", |s| {
        let mut traces = Vec::new();
        for l in 1..=5 {
            for orientable in [true, false] {
                let spec = corollary_from(f, l, orientable)?;
                let v = check_proposition(&spec).map_err(|e| e.to_string())?;
                let key = format!("l{l}.{}", if orientable { "torus" } else { "klein" });
                let r = cover_invariants(&spec).pi1_h2_rank;
                let chain = format!("0 = b₂(Σ₂(N)) ≥ b₂(π₁(Σ₂(N))) = b₂(π₁(Σ₂(S))) = {r} > 0");
                let ok = v.conclusion == Conclusion::NotSphereSumUnknotted
                    && v.trace.replay().is_ok()
                    && v.trace.to_string().contains(&chain);
                s.check(&format!("{key}.conclusion"), &v.conclusion, ok);
                s.fact(&format!("{key}.chain"), chain);
                traces.push(format!("[{key}]\n{}", v.trace));
            }
        }
        s.trace = Some(traces.join("\n"));
        Ok(())
    })
}

pub fn remark(f: &Fixtures) -> Section {
    section("the Klein bottle double does not split as RP2 # RP2", |s| {
        let spec = corollary_from(f, 1, false)?;
        let group = parse(&f.triangle)?;
        let cert = f.indecomposable.as_ref().map(|c| IndecomposabilityCertificate {
            group,
            citation: c.clone(),
        });
        let with = check_remark_rp2_split(&spec, cert.as_ref()).map_err(|e| e.to_string())?;
        let ok = with.conclusion == Conclusion::NoRp2Splitting && with.trace.len() == 5 && with.trace.replay().is_ok();
        s.check("with_certificate", &with.conclusion, ok);
        s.fact("trace_lines", with.trace.len());
        let without = check_remark_rp2_split(&spec, None).map_err(|e| e.to_string())?;
        let expected = Conclusion::Inconclusive("no indecomposability certificate".into());
        s.check(
            "without_certificate",
            &without.conclusion,
            without.conclusion == expected,
        );
        s.trace = Some(with.trace.to_string());
        Ok(())
    })
}

pub fn band_construction(sweep: usize) -> Section {
    section("band construction from P(-2,3,7,n): cover group T(2,3,7)", |s| {
        for n in 1..=4 {
            let spec = knotsurf::obstruct::band_construction_surface(n).map_err(|e| e.to_string())?;
            let d = spec.as_ribbon_double().ok_or("not a ribbon double")?;
            let m = matches_triangle(d.cover_pi1(), 2, 3, 7);
            s.check(&format!("n{n}.triangle_match"), m, m);
            s.fact(&format!("n{n}.surface_type"), d.surface_type());
            let v = check_theorem(&d, sweep);
            s.check(
                &format!("n{n}.conclusion"),
                &v.conclusion,
                v.conclusion == Conclusion::StablyIrreducible && v.trace.replay().is_ok(),
            );
        }
        Ok(())
    })
}

pub fn paper_verify_with(f: &Fixtures, sweep: usize, max_cosets: usize) -> Report {
    let mut r = Report::default();
    r.push(triangle_arithmetic(f));
    r.push(hurwitz_quotient(f, max_cosets));
    r.push(klein_quartic(f));
    r.push(seifert_pipeline(f));
    r.push(pretzel_cross_check(f));
    r.push(theorem(f, sweep));
    r.push(proposition(f));
    r.push(remark(f));
    r.push(band_construction(sweep));
    r
}

pub fn paper_verify(sweep: usize, max_cosets: usize) -> Report {
    paper_verify_with(&Fixtures::default(), sweep, max_cosets)
}
