//! One function per subcommand; each returns a [`Report`].

use std::path::Path;

use knotsurf::fpgroup::{
    abelianization, b2_upper_bound, check_homomorphism, coset_table_from_quotient, quotient_group_order,
    reidemeister_schreier, todd_coxeter, FiniteQuotient, GroupError, HomomorphismCheck, Perm, Presentation,
};
use knotsurf::obstruct::{
    check_proposition, check_remark_rp2_split, check_theorem, cover_invariants, SpecFile, SurfaceError, SurfaceSpec,
    SurfaceType, Verdict,
};
use knotsurf::pretzel::PretzelKnot;
use knotsurf::seifert::{matches_triangle, H1Order, SeifertInvariants};

use crate::report::{Report, Section};
use crate::CliError;

/// Largest finite image enumerated when checking a permutation quotient.
pub const MAX_QUOTIENT_ORDER: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupOp {
    Abelianize,
    Deficiency,
    B2Bound,
    ToddCoxeter,
    Schreier,
    QuotientOrder,
}

#[derive(Clone, Debug, Default)]
pub struct GroupArgs {
    pub subgroup: String,
    pub images: Vec<String>,
    pub degree: Option<usize>,
    pub max_cosets: usize,
    pub show_table: bool,
}

fn quotient(p: &Presentation, args: &GroupArgs) -> Result<FiniteQuotient, CliError> {
    let Some(degree) = args.degree else {
        return Err(CliError::Usage("--image needs --degree".into()));
    };
    let images = args
        .images
        .iter()
        .map(|s| Perm::parse_cycles(s, degree))
        .collect::<Result<Vec<_>, _>>()?;
    if images.len() != p.generator_count() {
        return Err(CliError::Usage(format!(
            "{} generators but {} --image values",
            p.generator_count(),
            images.len()
        )));
    }
    Ok(FiniteQuotient::new(degree, images)?)
}

fn overflow(s: &mut Section, e: &GroupError) -> bool {
    if let GroupError::Overflow { what, limit } = e {
        s.fact("overflow_limit", limit);
        s.inconclusive(format!("enumeration stopped at {limit} {what}"));
        true
    } else {
        false
    }
}

pub fn cmd_group(op: GroupOp, presentation: &str, args: &GroupArgs) -> Result<Report, CliError> {
    let p = Presentation::parse(presentation)?;
    let mut s = Section::new(format!("group {}", op_name(op)));
    s.fact("presentation", &p);
    match op {
        GroupOp::Abelianize => {
            let a = abelianization(&p);
            s.fact("betti", a.betti);
            s.fact("torsion", list(&a.torsion));
            s.fact("abelianization", &a);
        }
        GroupOp::Deficiency => {
            s.fact("generators", p.generator_count());
            s.fact("relators", p.relator_count());
            s.fact("deficiency", p.deficiency());
        }
        GroupOp::B2Bound => {
            s.fact("relators", p.relator_count());
            s.fact("generators", p.generator_count());
            s.fact("betti", abelianization(&p).betti);
            s.fact("b2_upper_bound", b2_upper_bound(&p));
        }
        GroupOp::ToddCoxeter | GroupOp::Schreier => {
            let table = if args.images.is_empty() {
                let sub = p.parse_words(&args.subgroup)?;
                s.fact(
                    "subgroup",
                    if args.subgroup.trim().is_empty() {
                        "trivial"
                    } else {
                        args.subgroup.trim()
                    },
                );
                todd_coxeter(&p, &sub, args.max_cosets)
            } else {
                let q = quotient(&p, args)?;
                s.fact("subgroup", "kernel of the permutation quotient");
                coset_table_from_quotient(&p, &q, args.max_cosets)
            };
            let table = match table {
                Ok(t) => t,
                Err(e) if overflow(&mut s, &e) => return Ok(single(s)),
                Err(e) => return Err(e.into()),
            };
            s.check("table_valid", table.validate().is_ok(), table.validate().is_ok());
            s.fact("index", table.index());
            if args.show_table {
                let rows: Vec<String> = (0..table.index())
                    .map(|c| {
                        let cells: Vec<String> = (0..p.generator_count())
                            .flat_map(|g| {
                                [
                                    table.image(c, knotsurf::fpgroup::Letter::pos(g)),
                                    table.image(c, knotsurf::fpgroup::Letter::neg(g)),
                                ]
                            })
                            .map(|v| v.to_string())
                            .collect();
                        format!("{c}: {}", cells.join(" "))
                    })
                    .collect();
                s.trace = Some(rows.join("\n"));
            }
            if op == GroupOp::Schreier {
                let h = reidemeister_schreier(&table)?;
                let a = abelianization(&h);
                s.fact("subgroup_generators", h.generator_count());
                s.fact("subgroup_relators", h.relator_count());
                s.fact("subgroup_betti", a.betti);
                s.fact("subgroup_torsion", list(&a.torsion));
                s.fact("subgroup_presentation", &h);
            }
        }
        GroupOp::QuotientOrder => {
            let q = quotient(&p, args)?;
            match check_homomorphism(&p, &q)? {
                HomomorphismCheck::Accept => {
                    s.fact("homomorphism", true);
                    match quotient_group_order(&q, MAX_QUOTIENT_ORDER) {
                        Ok(n) => {
                            s.fact("order", n);
                        }
                        Err(e) if overflow(&mut s, &e) => {}
                        Err(e) => return Err(e.into()),
                    }
                }
                HomomorphismCheck::Reject { relator, word } => {
                    s.fact("homomorphism", false);
                    s.fact("failing_relator", word.display(p.generators()));
                    s.fail(format!("relator {} does not map to the identity", relator + 1));
                }
            }
        }
    }
    Ok(single(s))
}

fn op_name(op: GroupOp) -> &'static str {
    match op {
        GroupOp::Abelianize => "abelianize",
        GroupOp::Deficiency => "deficiency",
        GroupOp::B2Bound => "b2bound",
        GroupOp::ToddCoxeter => "todd-coxeter",
        GroupOp::Schreier => "schreier",
        GroupOp::QuotientOrder => "quotient-order",
    }
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn single(s: Section) -> Report {
    let mut r = Report::default();
    r.push(s);
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeifertOp {
    Pi1,
    H1,
    Euler,
    KillFiber,
}

pub fn cmd_seifert(op: SeifertOp, text: &str) -> Result<Report, CliError> {
    let y = SeifertInvariants::parse(text)?;
    let name = match op {
        SeifertOp::Pi1 => "pi1",
        SeifertOp::H1 => "h1",
        SeifertOp::Euler => "euler",
        SeifertOp::KillFiber => "kill-fiber",
    };
    let mut s = Section::new(format!("seifert {name}"));
    s.fact("space", &y);
    match op {
        SeifertOp::Pi1 => {
            s.fact("presentation", y.pi1_presentation());
        }
        SeifertOp::H1 => {
            s.fact("h1_order", y.h1_order());
        }
        SeifertOp::Euler => {
            s.fact("euler_number", y.euler_number());
        }
        SeifertOp::KillFiber => {
            let p = y.kill_regular_fiber();
            s.fact("presentation", &p);
            if let [a, b, c] = y.fibers() {
                let (a, b, c) = (a.alpha, b.alpha, c.alpha);
                s.fact("triangle", format!("({a},{b},{c})"));
                s.fact("triangle_match", matches_triangle(&p, a, b, c));
            }
        }
    }
    Ok(single(s))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PretzelOp {
    Det,
    Goeritz,
    Dbc,
}

pub fn cmd_pretzel(op: PretzelOp, text: &str) -> Result<Report, CliError> {
    let k = PretzelKnot::parse(text)?;
    let name = match op {
        PretzelOp::Det => "det",
        PretzelOp::Goeritz => "goeritz",
        PretzelOp::Dbc => "dbc",
    };
    let mut s = Section::new(format!("pretzel {name}"));
    s.fact("knot", &k);
    s.fact("components", if k.is_knot() { 1 } else { 2 });
    match op {
        PretzelOp::Det => {
            s.fact("determinant", k.determinant());
        }
        PretzelOp::Goeritz => {
            let g = k.goeritz_matrix();
            s.fact("goeritz", g.gram());
            s.fact("determinant", k.determinant());
        }
        PretzelOp::Dbc => {
            let y = k.double_branched_cover()?;
            let det = k.determinant();
            let h1 = y.h1_order();
            s.fact("double_branched_cover", &y);
            s.fact("determinant", &det);
            s.fact("h1_order", &h1);
            let ok = match &h1 {
                H1Order::Finite(n) => *n == det,
                H1Order::Infinite => det == 0.into(),
            };
            s.check("cross_check", if ok { "pass" } else { "fail" }, ok);
        }
    }
    Ok(single(s))
}

pub fn verdict_section(title: String, v: &Verdict, expect_conclusive: bool) -> Section {
    let mut s = Section::new(title);
    s.fact("conclusion", &v.conclusion);
    s.fact("trace_lines", v.trace.len());
    let replay = v.trace.replay();
    s.check(
        "replay",
        match replay {
            Ok(()) => "ok".to_string(),
            Err(line) => format!("line {line} fails"),
        },
        replay.is_ok(),
    );
    s.trace = Some(v.trace.to_string());
    for n in &v.notes {
        s.note(n);
    }
    if v.is_inconclusive() {
        if expect_conclusive {
            s.fail("expected a conclusive verdict");
        } else {
            s.inconclusive("hypotheses not verified");
        }
    }
    s
}

fn cover_facts(s: &mut Section, spec: &SurfaceSpec) {
    let c = cover_invariants(spec);
    s.fact("euler_characteristic", spec.euler_characteristic());
    s.fact("normal_euler", spec.normal_euler());
    s.fact("b2", c.b2);
    s.fact("b_plus", c.b_plus);
    s.fact("b_minus", c.b_minus);
    s.fact("pi1_h2_rank", c.pi1_h2_rank);
    s.fact("spin_parity", c.spin_parity);
}

pub fn surface_check(file: &SpecFile, sweep: usize) -> Report {
    let mut r = Report::default();
    for e in file.entries() {
        let mut info = Section::new(format!("{}: cover invariants", e.name));
        info.fact("surface_type", e.surface.surface_type());
        cover_facts(&mut info, &e.surface);
        r.push(info);

        if let Some(d) = e.surface.as_ribbon_double() {
            let v = check_theorem(&d, sweep);
            let mut s = verdict_section(format!("{}: stable irreducibility", e.name), &v, false);
            s.fact("sweep", sweep);
            r.push(s);
        }
        match check_proposition(&e.surface) {
            Ok(v) => r.push(verdict_section(
                format!("{}: not a 2-knot plus an unknot", e.name),
                &v,
                false,
            )),
            Err(SurfaceError::SphereInput) => {
                let mut s = Section::new(format!("{}: not a 2-knot plus an unknot", e.name));
                s.inconclusive("sphere input");
                r.push(s);
            }
            Err(err) => {
                let mut s = Section::new(format!("{}: not a 2-knot plus an unknot", e.name));
                s.fail(err.to_string());
                r.push(s);
            }
        }
        if e.surface.surface_type() == SurfaceType::KLEIN_BOTTLE && e.surface.as_ribbon_double().is_some() {
            let title = format!("{}: no splitting as two projective planes", e.name);
            match check_remark_rp2_split(&e.surface, e.indecomposable.as_ref()) {
                Ok(v) => r.push(verdict_section(title, &v, false)),
                Err(err) => {
                    let mut s = Section::new(title);
                    s.fail(err.to_string());
                    r.push(s);
                }
            }
        }
    }
    r
}

pub fn cmd_surface_check(path: &Path, sweep: usize) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let file = SpecFile::parse(&text)?;
    if file.entries().is_empty() {
        return Err(CliError::Usage(format!("{}: no surfaces defined", path.display())));
    }
    Ok(surface_check(&file, sweep))
}
