use std::fmt;

use num_bigint::BigInt;

use super::Presentation;
use crate::linalg::{smith_normal_form, IntMatrix};

/// `Z^betti ⊕ Z/t_1 ⊕ ... ⊕ Z/t_m` with `t_1 | t_2 | ... | t_m`, all `t_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.betti == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.betti > 0 {
            parts.push(if self.betti == 1 {
                "Z".into()
            } else {
                format!("Z^{}", self.betti)
            });
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Relator exponent-sum matrix: one row per relator, one column per generator.
pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    let n = p.generator_count();
    let rows: Vec<Vec<i64>> = p.relators().iter().map(|r| r.exponent_sums(n)).collect();
    if rows.is_empty() {
        IntMatrix::zeros(0, n)
    } else {
        IntMatrix::from_rows(&rows)
    }
}

pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let snf = smith_normal_form(&relation_matrix(p));
    AbelianInvariants {
        betti: p.generator_count() - snf.rank,
        torsion: snf.torsion(),
    }
}

/// Second Betti number of the presentation 2-complex,
/// `max(0, #relators - #generators + b1)`, an upper bound for `b2(G)`.
pub fn b2_upper_bound(p: &Presentation) -> usize {
    let b1 = abelianization(p).betti as i64;
    (p.relator_count() as i64 - p.generator_count() as i64 + b1).max(0) as usize
}
