//! Permutation representations of finitely presented groups.
//!
//! Permutations act on the right: `p * q` means apply `p`, then `q`.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use super::{GroupError, Presentation, Word};

/// Permutation of `{0, .., n-1}` stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Perm(images))
    }

    /// Parses 1-based cycle notation such as `(1,2)(3,4,5)` on `degree` points.
    /// `()` or an empty string is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, GroupError> {
        let bad = |m: &str| GroupError::InvalidPermutation(format!("{text:?}: {m}"));
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| bad("expected `(`...`)`"))?;
            rest = body.1;
            if body.0.is_empty() {
                continue;
            }
            let points: Vec<usize> = body
                .0
                .split(',')
                .map(|t| t.parse::<usize>().map_err(|_| bad("bad point")))
                .collect::<Result<_, _>>()?;
            for &p in &points {
                if p == 0 || p > degree {
                    return Err(bad("point out of range"));
                }
                if std::mem::replace(&mut moved[p - 1], true) {
                    return Err(bad("cycles are not disjoint"));
                }
            }
            for (i, &p) in points.iter().enumerate() {
                images[p - 1] = (points[(i + 1) % points.len()] - 1) as u32;
            }
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            out[p as usize] = i as u32;
        }
        Perm(out)
    }

    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut order = 1usize;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.image(p);
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }
}

impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| rhs.0[i as usize]).collect())
    }
}

impl fmt::Display for Perm {
    /// 1-based cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            any = true;
            write!(f, "({}", start + 1)?;
            seen[start] = true;
            let mut p = self.image(start);
            while p != start {
                seen[p] = true;
                write!(f, ",{}", p + 1)?;
                p = self.image(p);
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Images of the generators in a symmetric group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuotient {
    images: Vec<Perm>,
    degree: usize,
}

impl FiniteQuotient {
    pub fn new(degree: usize, images: Vec<Perm>) -> Result<Self, GroupError> {
        if let Some(p) = images.iter().find(|p| p.degree() != degree) {
            return Err(GroupError::DegreeMismatch(degree, p.degree()));
        }
        Ok(FiniteQuotient { images, degree })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    /// Image of a word; the word's generators must index into `images`.
    pub fn evaluate(&self, w: &Word) -> Perm {
        let mut acc = Perm::identity(self.degree);
        for l in w.letters() {
            let g = &self.images[l.generator];
            acc = if l.inverse { &acc * &g.inverse() } else { &acc * g };
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomomorphismCheck {
    Accept,
    /// Index and word of the first relator that does not map to the identity.
    Reject {
        relator: usize,
        word: Word,
    },
}

pub fn check_homomorphism(p: &Presentation, q: &FiniteQuotient) -> Result<HomomorphismCheck, GroupError> {
    if q.images.len() != p.generator_count() {
        return Err(GroupError::ArityMismatch {
            expected: p.generator_count(),
            got: q.images.len(),
        });
    }
    for (i, r) in p.relators().iter().enumerate() {
        if !q.evaluate(r).is_identity() {
            return Ok(HomomorphismCheck::Reject {
                relator: i,
                word: r.clone(),
            });
        }
    }
    Ok(HomomorphismCheck::Accept)
}

/// Elements of the group generated by `q`'s images in breadth-first order
/// from the identity, together with an index lookup.
pub(crate) fn enumerate_elements(
    q: &FiniteQuotient,
    max_order: usize,
) -> Result<(Vec<Perm>, HashMap<Perm, usize>), GroupError> {
    let id = Perm::identity(q.degree);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut head = 0;
    while head < elements.len() {
        for g in &q.images {
            let h = &elements[head] * g;
            if !index.contains_key(&h) {
                if elements.len() == max_order {
                    return Err(GroupError::Overflow {
                        what: "group elements",
                        limit: max_order,
                    });
                }
                index.insert(h.clone(), elements.len());
                elements.push(h);
            }
        }
        head += 1;
    }
    Ok((elements, index))
}

/// Order of the permutation group generated by the images.
pub fn quotient_group_order(q: &FiniteQuotient, max_order: usize) -> Result<usize, GroupError> {
    enumerate_elements(q, max_order).map(|(e, _)| e.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_roundtrip() {
        let p = Perm::parse_cycles("(1,8)(2,7)(3,4)(5,6)", 8).unwrap();
        assert_eq!(p.to_string(), "(1,8)(2,7)(3,4)(5,6)");
        assert_eq!(p.order(), 2);
        assert_eq!(Perm::parse_cycles("", 3).unwrap(), Perm::identity(3));
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert!(Perm::parse_cycles("(1,2)(2,3)", 3).is_err());
        assert!(Perm::parse_cycles("(1,9)", 8).is_err());
        assert!(Perm::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn right_action() {
        let a = Perm::parse_cycles("(1,2)", 3).unwrap();
        let b = Perm::parse_cycles("(2,3)", 3).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!((&a * &b).image(0), 2);
        assert_eq!((&a * &a.inverse()), Perm::identity(3));
    }

    #[test]
    fn orders() {
        let five = FiniteQuotient::new(5, vec![Perm::parse_cycles("(1,2,3,4,5)", 5).unwrap()]).unwrap();
        assert_eq!(quotient_group_order(&five, 100).unwrap(), 5);
        let id = FiniteQuotient::new(4, vec![Perm::identity(4), Perm::identity(4)]).unwrap();
        assert_eq!(quotient_group_order(&id, 100).unwrap(), 1);
        assert!(matches!(
            quotient_group_order(&five, 4),
            Err(GroupError::Overflow { .. })
        ));
    }

    #[test]
    fn homomorphism_checks() {
        let t = Presentation::triangle(2, 3, 7).unwrap();
        let id = FiniteQuotient::new(8, vec![Perm::identity(8); 3]).unwrap();
        assert_eq!(check_homomorphism(&t, &id).unwrap(), HomomorphismCheck::Accept);

        let p = Presentation::parse("<x | x^2>").unwrap();
        let c3 = FiniteQuotient::new(3, vec![Perm::parse_cycles("(1,2,3)", 3).unwrap()]).unwrap();
        assert_eq!(
            check_homomorphism(&p, &c3).unwrap(),
            HomomorphismCheck::Reject {
                relator: 0,
                word: Word::power(0, 2)
            }
        );
        assert!(matches!(
            check_homomorphism(&t, &c3),
            Err(GroupError::ArityMismatch { expected: 3, got: 1 })
        ));
        assert!(FiniteQuotient::new(3, vec![Perm::identity(4)]).is_err());
    }
}
