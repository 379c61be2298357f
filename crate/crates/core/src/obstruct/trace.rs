//! Proof traces whose arithmetic can be re-checked line by line.

use std::fmt;

use super::cover::{count_signs, stabilizers};

/// The inference a trace line applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Hypothesis,
    Certificate,
    CertificateGate,
    RibbonDoubleCover,
    UnknottedCover,
    RationalHomologySphere,
    EilenbergMacLane,
    Normalization,
    HopfExactSequence,
    RibbonSpheres,
    StabilizerClasses,
    SignatureSplit,
    FreeIndecomposability,
    SimplyConnectedSummand,
    OrientationReversal,
    Contradiction,
    General,
}

impl Rule {
    pub fn citation(self) -> &'static str {
        match self {
            Rule::Hypothesis => "hypothesis",
            Rule::Certificate => "certified input",
            Rule::CertificateGate => "presentation-complex bound b2(G) <= #rel - #gen + b1",
            Rule::RibbonDoubleCover => "ribbon double: b2(Σ2) = 2k, σ = 0",
            Rule::UnknottedCover => "unknots: Σ2 is a sum of CP2, -CP2, S2xS2",
            Rule::RationalHomologySphere => "2-knot: Σ2 is a rational homology 4-sphere",
            Rule::EilenbergMacLane => "K(π1,1) from Σ2 by cells of index >= 3",
            Rule::Normalization => "stabilize U, U' by RP2 until both are sums of RP2s",
            Rule::HopfExactSequence => "Hopf: π2 -> H2 -> H2(π1) -> 0",
            Rule::RibbonSpheres => "ribbon double: k disjoint square-zero spheres",
            Rule::StabilizerClasses => "each RP2(∓2) stabilizer adds a spherical ±1 class",
            Rule::SignatureSplit => "σ = 0 and one rank-1 form per projective-plane summand",
            Rule::FreeIndecomposability => "free-product indecomposability",
            Rule::SimplyConnectedSummand => "simply connected summand: H2 lies in im π2",
            Rule::OrientationReversal => "a double has an orientation-reversing homeomorphism",
            Rule::Contradiction => "contradiction",
            Rule::General => "general statement (not checked)",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rel {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Rel {
    fn holds(self, a: i64, b: i64) -> bool {
        match self {
            Rel::Eq => a == b,
            Rel::Ne => a != b,
            Rel::Lt => a < b,
            Rel::Le => a <= b,
            Rel::Gt => a > b,
            Rel::Ge => a >= b,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Rel::Eq => "=",
            Rel::Ne => "!=",
            Rel::Lt => "<",
            Rel::Le => "<=",
            Rel::Gt => ">",
            Rel::Ge => ">=",
        }
    }
}

/// What replaying a line re-evaluates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    /// `v0 r1 v1 r2 v2 ...`
    Chain {
        values: Vec<i64>,
        rels: Vec<Rel>,
    },
    All(Vec<Check>),
    /// Holds iff the inner check fails: the line records an impossibility.
    Refutes(Box<Check>),
    /// For every split of `l` stabilizers on one side and `l_prime` on the
    /// other into ±1 classes, the exact nondegenerate rank on the core side
    /// (`k` square-zero spheres plus `l` classes) is below the lower bound
    /// `l_prime` from the other side, and the core side accounts for the
    /// full Hopf rank `k + l`.
    StabilizedRanks {
        k: usize,
        l: usize,
        l_prime: usize,
    },
    /// Certified or assumed input; nothing to evaluate.
    Input,
    /// Documentation of a universally quantified statement.
    General,
}

impl Check {
    pub fn rel(a: i64, rel: Rel, b: i64) -> Check {
        Check::Chain {
            values: vec![a, b],
            rels: vec![rel],
        }
    }

    pub fn eq(a: i64, b: i64) -> Check {
        Check::rel(a, Rel::Eq, b)
    }

    pub fn chain(first: i64, rest: &[(Rel, i64)]) -> Check {
        let mut values = vec![first];
        let mut rels = Vec::new();
        for &(r, v) in rest {
            rels.push(r);
            values.push(v);
        }
        Check::Chain { values, rels }
    }

    pub fn evaluate(&self) -> bool {
        match self {
            Check::Chain { values, rels } => {
                values.len() == rels.len() + 1 && rels.iter().zip(values.windows(2)).all(|(r, w)| r.holds(w[0], w[1]))
            }
            Check::All(checks) => checks.iter().all(Check::evaluate),
            Check::Refutes(inner) => !inner.evaluate(),
            Check::StabilizedRanks { k, l, l_prime } => stabilized_ranks_hold(*k, *l, *l_prime),
            Check::Input | Check::General => true,
        }
    }

    pub fn is_arithmetic(&self) -> bool {
        !matches!(self, Check::Input | Check::General)
    }

    fn render(&self) -> String {
        match self {
            Check::Chain { values, rels } => {
                let mut s = values[0].to_string();
                for (r, v) in rels.iter().zip(&values[1..]) {
                    s.push_str(&format!(" {} {v}", r.symbol()));
                }
                s
            }
            Check::All(cs) => cs.iter().map(Check::render).collect::<Vec<_>>().join("; "),
            Check::Refutes(inner) => format!("not ({})", inner.render()),
            Check::StabilizedRanks { k, l, l_prime } => {
                format!("all splits: k={k}, l={l} vs l'={l_prime}")
            }
            Check::Input => "input".into(),
            Check::General => "general".into(),
        }
    }
}

fn stabilized_ranks_hold(k: usize, l: usize, l_prime: usize) -> bool {
    if l_prime <= l {
        return false;
    }
    // core side: b2 = 2k + l, rk H2(π1) = k, spheres k + l
    let hopf_rank = (2 * k + l) - k;
    (0..=l).all(|lp| {
        let (pos, neg) = count_signs(&stabilizers(lp, l - lp));
        let exact_nondegenerate = pos + neg;
        let spheres = k + exact_nondegenerate;
        spheres == hopf_rank
            && (0..=l_prime).all(|lpp| {
                let (p2, n2) = count_signs(&stabilizers(lpp, l_prime - lpp));
                p2 + n2 > exact_nondegenerate
            })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceLine {
    pub statement: String,
    pub rule: Rule,
    pub check: Check,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProofTrace {
    lines: Vec<TraceLine>,
}

impl ProofTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, statement: impl Into<String>, rule: Rule, check: Check) {
        self.lines.push(TraceLine {
            statement: statement.into(),
            rule,
            check,
        });
    }

    pub fn lines(&self) -> &[TraceLine] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Re-evaluates every line; returns the 1-based number of the first
    /// line that fails.
    pub fn replay(&self) -> Result<(), usize> {
        match self.lines.iter().position(|l| !l.check.evaluate()) {
            Some(i) => Err(i + 1),
            None => Ok(()),
        }
    }
}

impl fmt::Display for ProofTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.lines.iter().enumerate() {
            write!(f, "{:>3}. {}  [{}", i + 1, l.statement, l.rule.citation())?;
            if l.check.is_arithmetic() {
                write!(f, "; check: {}", l.check.render())?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conclusion {
    StablyIrreducible,
    NotSphereSumUnknotted,
    NoRp2Splitting,
    Inconclusive(String),
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::StablyIrreducible => f.write_str("stably irreducible"),
            Conclusion::NotSphereSumUnknotted => {
                f.write_str("not a connected sum of a 2-knot and an unknotted surface")
            }
            Conclusion::NoRp2Splitting => f.write_str("does not split as RP2 # RP2"),
            Conclusion::Inconclusive(reason) => write!(f, "inconclusive: {reason}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub conclusion: Conclusion,
    pub trace: ProofTrace,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn inconclusive(reason: impl Into<String>, trace: ProofTrace) -> Self {
        Verdict {
            conclusion: Conclusion::Inconclusive(reason.into()),
            trace,
            notes: Vec::new(),
        }
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self.conclusion, Conclusion::Inconclusive(_))
    }
}
