//! Pretzel knots `P(e1, ..., en)`: Goeritz forms, determinants and the
//! Seifert structure of the double branched cover for three strands.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::linalg::{IntMatrix, SymmetricForm};
use crate::seifert::{SeifertError, SeifertInvariants};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PretzelError {
    #[error("cannot parse pretzel knot {text:?}: {message}")]
    Parse { text: String, message: String },
    #[error("pretzel knots need at least 3 nonzero twist counts, got {0:?}")]
    InvalidTwists(Vec<i64>),
    #[error("double branched cover is only implemented for 3 strands, got {0}")]
    UnsupportedStrands(usize),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PretzelKnot {
    twists: Vec<i64>,
}

impl PretzelKnot {
    pub fn new(twists: Vec<i64>) -> Result<Self, PretzelError> {
        if twists.len() < 3 || twists.contains(&0) {
            return Err(PretzelError::InvalidTwists(twists));
        }
        Ok(PretzelKnot { twists })
    }

    pub fn parse(text: &str) -> Result<Self, PretzelError> {
        let err = |m: &str| PretzelError::Parse {
            text: text.to_string(),
            message: m.to_string(),
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact
            .strip_prefix("P(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| err("expected `P(e1,e2,...,en)`"))?;
        let twists = body
            .split(',')
            .map(|t| t.parse::<i64>().map_err(|_| err("twist counts must be integers")))
            .collect::<Result<Vec<_>, _>>()?;
        PretzelKnot::new(twists)
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn strands(&self) -> usize {
        self.twists.len()
    }

    /// One component iff exactly one twist is even, or none is and the number
    /// of strands is odd.
    pub fn is_knot(&self) -> bool {
        let even = self.twists.iter().filter(|e| *e % 2 == 0).count();
        even == 1 || (even == 0 && self.twists.len() % 2 == 1)
    }

    /// Tridiagonal `(n-1)x(n-1)` form with diagonal `e_i + e_{i+1}` and
    /// off-diagonal `-e_{i+1}`.
    pub fn goeritz_matrix(&self) -> SymmetricForm {
        let e = &self.twists;
        let n = e.len() - 1;
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(e[i] + e[i + 1]));
            if i + 1 < n {
                m.set(i, i + 1, BigInt::from(-e[i + 1]));
                m.set(i + 1, i, BigInt::from(-e[i + 1]));
            }
        }
        SymmetricForm::new(m).expect("tridiagonal band is symmetric")
    }

    /// `|Σ_i Π_{j≠i} e_j|`
    pub fn determinant_formula(&self) -> BigInt {
        let e = &self.twists;
        let sum: BigInt = (0..e.len())
            .map(|i| {
                e.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &v)| BigInt::from(v))
                    .product::<BigInt>()
            })
            .sum();
        sum.abs()
    }

    /// `|det|` of the Goeritz form. Panics if the product formula disagrees.
    pub fn determinant(&self) -> BigInt {
        let det = self.goeritz_matrix().gram().determinant().abs();
        assert_eq!(
            det,
            self.determinant_formula(),
            "Goeritz determinant mismatch for {self}"
        );
        det
    }

    /// `S2(0; -1/e1, -1/e2, -1/e3)`, with `|e_i| = 1` strands folded into `b`.
    pub fn double_branched_cover(&self) -> Result<SeifertInvariants, PretzelError> {
        if self.twists.len() != 3 {
            return Err(PretzelError::UnsupportedStrands(self.twists.len()));
        }
        let fractions: Vec<(i64, i64)> = self.twists.iter().map(|&e| (-1, e)).collect();
        Ok(SeifertInvariants::from_fractions(0, &fractions)?)
    }
}

impl FromStr for PretzelKnot {
    type Err = PretzelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PretzelKnot::parse(s)
    }
}

impl fmt::Display for PretzelKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.twists.iter().map(i64::to_string).collect();
        write!(f, "P({})", parts.join(","))
    }
}
