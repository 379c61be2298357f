//! Seifert fibered spaces over the two-sphere.
//!
//! `S2(b; β1/α1, ..., βn/αn)` has fundamental group
//! `<x1..xn, h | [xi,h], xi^αi h^βi, x1···xn h^-b>` and Euler number
//! `e = -(b + Σ βi/αi)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::fpgroup::{abelianization, Letter, Presentation, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("cannot parse Seifert invariants {text:?}: {message}")]
    Parse { text: String, message: String },
    #[error("exceptional fiber {beta}/{alpha} needs alpha >= 2 and gcd(alpha, beta) = 1")]
    InvalidFiber { beta: i64, alpha: i64 },
}

/// Exceptional fiber invariant `β/α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fiber {
    pub beta: i64,
    pub alpha: i64,
}

impl Fiber {
    pub fn new(beta: i64, alpha: i64) -> Result<Self, SeifertError> {
        if alpha < 2 || beta.gcd(&alpha) != 1 {
            return Err(SeifertError::InvalidFiber { beta, alpha });
        }
        Ok(Fiber { beta, alpha })
    }

    pub fn ratio(&self) -> BigRational {
        BigRational::new(self.beta.into(), self.alpha.into())
    }
}

impl fmt::Display for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.beta, self.alpha)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertInvariants {
    pub b: i64,
    fibers: Vec<Fiber>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum H1Order {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for H1Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H1Order::Finite(n) => write!(f, "{n}"),
            H1Order::Infinite => f.write_str("infinite"),
        }
    }
}

impl SeifertInvariants {
    pub fn new(b: i64, fibers: Vec<Fiber>) -> Self {
        SeifertInvariants { b, fibers }
    }

    /// Builds from raw `(β, α)` pairs. Fractions are brought to lowest terms
    /// with `α > 0`; fibers with `α = 1` are folded into `b`.
    pub fn from_fractions(b: i64, fractions: &[(i64, i64)]) -> Result<Self, SeifertError> {
        let mut b = b;
        let mut fibers = Vec::new();
        for &(beta, alpha) in fractions {
            if alpha == 0 {
                return Err(SeifertError::InvalidFiber { beta, alpha });
            }
            let g = beta.gcd(&alpha);
            let (mut beta, mut alpha) = (beta / g, alpha / g);
            if alpha < 0 {
                beta = -beta;
                alpha = -alpha;
            }
            if alpha == 1 {
                b += beta;
            } else {
                fibers.push(Fiber::new(beta, alpha)?);
            }
        }
        Ok(SeifertInvariants { b, fibers })
    }

    pub fn parse(text: &str) -> Result<Self, SeifertError> {
        let err = |m: &str| SeifertError::Parse {
            text: text.to_string(),
            message: m.to_string(),
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact
            .strip_prefix("S2(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| err("expected `S2(b; r1, r2, ...)`"))?;
        let (b, rest) = body.split_once(';').ok_or_else(|| err("missing `;`"))?;
        let b: i64 = b.parse().map_err(|_| err("b must be an integer"))?;
        let mut fibers = Vec::new();
        if !rest.is_empty() {
            for r in rest.split(',') {
                let (p, q) = r.split_once('/').ok_or_else(|| err("fiber must be p/q"))?;
                let p: i64 = p.parse().map_err(|_| err("bad numerator"))?;
                let q: i64 = q.parse().map_err(|_| err("bad denominator"))?;
                if q <= 0 {
                    return Err(err("denominator must be positive"));
                }
                fibers.push(Fiber::new(p, q)?);
            }
        }
        Ok(SeifertInvariants { b, fibers })
    }

    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    /// Replaces fiber `i` by `(β - α)/α` and `b` by `b + 1`; the space is unchanged.
    pub fn shift_fiber(&self, i: usize) -> SeifertInvariants {
        let mut s = self.clone();
        let f = &mut s.fibers[i];
        f.beta -= f.alpha;
        s.b += 1;
        s
    }

    pub fn euler_number(&self) -> BigRational {
        let sum = self
            .fibers
            .iter()
            .fold(BigRational::from_integer(self.b.into()), |acc, f| acc + f.ratio());
        -sum
    }

    /// `<x1..xn, h | [xi,h], xi^αi h^βi, x1···xn h^-b>`; with no exceptional
    /// fibers this is `<h | h^-b>`.
    pub fn pi1_presentation(&self) -> Presentation {
        let n = self.fibers.len();
        let h = n;
        let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        names.push("h".into());
        let mut relators = Vec::with_capacity(2 * n + 1);
        for i in 0..n {
            relators.push(Word::new([
                Letter::pos(i),
                Letter::pos(h),
                Letter::neg(i),
                Letter::neg(h),
            ]));
        }
        for (i, f) in self.fibers.iter().enumerate() {
            relators.push(Word::power(i, f.alpha).concat(&Word::power(h, f.beta)));
        }
        let product: Word = (0..n).map(Letter::pos).collect();
        relators.push(product.concat(&Word::power(h, -self.b)));
        Presentation::new(names, relators).expect("generator indices are in range")
    }

    /// `|H_1|` from the Smith normal form of the abelianized fundamental group.
    ///
    /// Panics if it disagrees with the closed form `|α1···αn · e|` when `e != 0`.
    pub fn h1_order(&self) -> H1Order {
        let ab = abelianization(&self.pi1_presentation());
        let e = self.euler_number();
        let order = match ab.order() {
            Some(n) => H1Order::Finite(n),
            None => H1Order::Infinite,
        };
        if !e.is_zero() {
            let alphas: BigInt = self.fibers.iter().map(|f| BigInt::from(f.alpha)).product();
            let closed = (BigRational::from_integer(alphas) * e).abs();
            assert!(closed.is_integer(), "α1···αn·e must be an integer");
            assert_eq!(
                order,
                H1Order::Finite(closed.to_integer()),
                "H1 order disagrees with |α1···αn·e| for {self}"
            );
        } else {
            assert_eq!(order, H1Order::Infinite, "e = 0 forces b1 > 0 for {self}");
        }
        order
    }

    /// Fundamental group with the regular fiber `h` killed:
    /// `<x1..xn | xi^αi, x1···xn>`, the orbifold group of the base.
    pub fn kill_regular_fiber(&self) -> Presentation {
        let p = self.pi1_presentation();
        let h = p.generator_count() - 1;
        p.kill_generator(h).expect("h is the last generator")
    }
}

impl FromStr for SeifertInvariants {
    type Err = SeifertError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SeifertInvariants::parse(s)
    }
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S2({};", self.b)?;
        for (i, fib) in self.fibers.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { ", " })?;
            write!(f, "{fib}")?;
        }
        f.write_str(")")
    }
}

/// Whether `p` is letter-for-letter the triangle presentation with exponents
/// `{p, q, r}` (as a multiset), after canonicalization: the product relator
/// may be any cyclic rotation of `a*b*c` or of its inverse, generators are
/// renamed in product order, and power relators may appear in any order with
/// either sign.
pub fn matches_triangle(pres: &Presentation, p: i64, q: i64, r: i64) -> bool {
    if pres.generator_count() != 3 || pres.relator_count() != 4 {
        return false;
    }
    let mut exponents: [Option<i64>; 3] = [None; 3];
    let mut product: Option<&Word> = None;
    for rel in pres.relators() {
        let letters = rel.letters();
        let g = letters[0].generator;
        if letters.iter().all(|l| l == &letters[0]) {
            if exponents[g].replace(letters.len() as i64).is_some() {
                return false;
            }
        } else if product.replace(rel).is_some() {
            return false;
        }
    }
    let (Some(product), [Some(a), Some(b), Some(c)]) = (product, exponents) else {
        return false;
    };
    if product.len() != 3 {
        return false;
    }
    let oriented = if product.letters().iter().all(|l| !l.inverse) {
        product.clone()
    } else if product.letters().iter().all(|l| l.inverse) {
        product.inverse()
    } else {
        return false;
    };
    let order: Vec<usize> = oriented.letters().iter().map(|l| l.generator).collect();
    let mut distinct = order.clone();
    distinct.sort_unstable();
    if distinct != [0, 1, 2] {
        return false;
    }
    let by_gen = [a, b, c];
    let mut found: Vec<i64> = order.iter().map(|&g| by_gen[g]).collect();
    let mut wanted = vec![p, q, r];
    found.sort_unstable();
    wanted.sort_unstable();
    found == wanted
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn y() -> SeifertInvariants {
        SeifertInvariants::parse("S2(0; 1/2, -1/3, -1/7)").unwrap()
    }

    #[test]
    fn parse_and_print() {
        let s = y();
        assert_eq!(s.to_string(), "S2(0; 1/2, -1/3, -1/7)");
        assert_eq!(SeifertInvariants::parse("S2(0;)").unwrap().to_string(), "S2(0;)");
        assert_eq!(SeifertInvariants::parse(" S2( -3 ; 2/5 ) ").unwrap().b, -3);
        assert!(SeifertInvariants::parse("S2(0; 2/4)").is_err());
        assert!(SeifertInvariants::parse("S2(0; 1/-2)").is_err());
        assert!(SeifertInvariants::parse("S2(0; 1/1)").is_err());
        assert!(SeifertInvariants::parse("S3(0;)").is_err());
        assert!(SeifertInvariants::parse("S2(0)").is_err());
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(y().euler_number(), BigRational::new((-1).into(), 42.into()));
        assert!(SeifertInvariants::parse("S2(0;)").unwrap().euler_number().is_zero());
        assert_eq!(
            SeifertInvariants::parse("S2(1;)").unwrap().euler_number(),
            BigRational::from_integer((-1).into())
        );
    }

    #[test]
    fn fundamental_group_shape() {
        let p = y().pi1_presentation();
        assert_eq!((p.generator_count(), p.relator_count()), (4, 7));
        assert!(abelianization(&p).is_trivial());
        let d = SeifertInvariants::parse("S2(0;)").unwrap().pi1_presentation();
        assert_eq!(d.to_string(), "<h | >");
        let d = SeifertInvariants::parse("S2(2;)").unwrap().pi1_presentation();
        assert_eq!(d.to_string(), "<h | h^-2>");
    }

    #[test]
    fn h1_orders() {
        assert_eq!(y().h1_order(), H1Order::Finite(BigInt::one()));
        let s = SeifertInvariants::parse("S2(0; -1/3, -1/3, -1/3)").unwrap();
        assert_eq!(s.euler_number(), BigRational::one());
        assert_eq!(s.h1_order(), H1Order::Finite(27.into()));
        let s = SeifertInvariants::parse("S2(0; 1/2, -1/2)").unwrap();
        assert_eq!(s.h1_order(), H1Order::Infinite);
    }

    #[test]
    fn killing_the_fiber() {
        let t = y().kill_regular_fiber();
        assert_eq!(t.to_string(), "<x1,x2,x3 | x1^2, x2^3, x3^7, x1*x2*x3>");
        assert!(matches_triangle(&t, 2, 3, 7));
        assert!(matches_triangle(&t, 7, 2, 3));
        assert_eq!(
            SeifertInvariants::parse("S2(0;)").unwrap().kill_regular_fiber(),
            Presentation::trivial()
        );
        let one = SeifertInvariants::parse("S2(5; 1/2)").unwrap().kill_regular_fiber();
        assert_eq!(one.to_string(), "<x1 | x1^2, x1>");
        assert!(abelianization(&one).is_trivial());
    }

    #[test]
    fn triangle_matching() {
        let t = Presentation::triangle(2, 3, 7).unwrap();
        assert!(matches_triangle(&t, 2, 3, 7));
        assert!(!matches_triangle(&t, 2, 3, 5));
        let reordered = Presentation::parse("<x,y,z | z^7, y^3, x^2, x*y*z>").unwrap();
        assert!(matches_triangle(&reordered, 2, 3, 7));
        let inverted = Presentation::parse("<x,y,z | x^-2, y^3, z^7, z^-1*y^-1*x^-1>").unwrap();
        assert!(matches_triangle(&inverted, 7, 3, 2));
        let rotated = Presentation::parse("<x,y,z | x^2, y^3, z^7, y*z*x>").unwrap();
        assert!(matches_triangle(&rotated, 2, 3, 7));
        let wrong = Presentation::parse("<x,y,z | x^2, y^3, z^7, x*y*x>").unwrap();
        assert!(!matches_triangle(&wrong, 2, 3, 7));
        let extra = Presentation::parse("<x,y,z | x^2, y^3, z^7, x*y*z, x*y>").unwrap();
        assert!(!matches_triangle(&extra, 2, 3, 7));
    }

    #[test]
    fn folding_unit_fibers() {
        let s = SeifertInvariants::from_fractions(0, &[(-1, 1), (1, -2), (2, 6)]).unwrap();
        assert_eq!(s.to_string(), "S2(-1; -1/2, 1/3)");
        assert!(SeifertInvariants::from_fractions(0, &[(1, 0)]).is_err());
    }
}
