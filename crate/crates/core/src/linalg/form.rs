use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("matrix is not symmetric")]
pub struct NotSymmetric;

/// Integer symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetricForm {
    gram: IntMatrix,
}

/// Counts of positive, zero and negative directions of a diagonalized form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Signature {
    pub b_plus: usize,
    pub b_zero: usize,
    pub b_minus: usize,
}

impl Signature {
    pub fn dimension(&self) -> usize {
        self.b_plus + self.b_zero + self.b_minus
    }

    /// The classical signature `b+ - b-`.
    pub fn sigma(&self) -> i64 {
        self.b_plus as i64 - self.b_minus as i64
    }
}

impl std::ops::Add for Signature {
    type Output = Signature;

    fn add(self, rhs: Signature) -> Signature {
        Signature {
            b_plus: self.b_plus + rhs.b_plus,
            b_zero: self.b_zero + rhs.b_zero,
            b_minus: self.b_minus + rhs.b_minus,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.b_plus, self.b_zero, self.b_minus)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl SymmetricForm {
    pub fn new(gram: IntMatrix) -> Result<Self, NotSymmetric> {
        if gram.is_symmetric() {
            Ok(SymmetricForm { gram })
        } else {
            Err(NotSymmetric)
        }
    }

    pub fn empty() -> Self {
        SymmetricForm {
            gram: IntMatrix::zeros(0, 0),
        }
    }

    pub fn diagonal<T: Clone + Into<BigInt>>(diag: &[T]) -> Self {
        SymmetricForm {
            gram: IntMatrix::diagonal(diag),
        }
    }

    /// The hyperbolic plane `[[0,1],[1,0]]`.
    pub fn hyperbolic() -> Self {
        SymmetricForm {
            gram: IntMatrix::from_rows(&[[0, 1], [1, 0]]),
        }
    }

    pub fn dimension(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    /// `U^T Q U` for a square `U` of matching size.
    pub fn congruent(&self, u: &IntMatrix) -> SymmetricForm {
        let g = &(&u.transpose() * &self.gram) * u;
        SymmetricForm { gram: g }
    }
}

/// Signature by congruence diagonalization over the rationals.
///
/// A zero diagonal pivot is repaired by swapping in a later nonzero diagonal
/// entry, or failing that by the substitution `e_t -> e_t + e_j` which makes
/// the pivot `2 q_tj`.
pub fn signature_of(q: &SymmetricForm) -> Signature {
    let n = q.dimension();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            q.gram
                .row(i)
                .iter()
                .map(|v| BigRational::from_integer(v.clone()))
                .collect()
        })
        .collect();
    let mut sig = Signature::default();
    for t in 0..n {
        if a[t][t].is_zero() {
            if let Some(j) = (t + 1..n).find(|&j| !a[j][j].is_zero()) {
                sym_swap(&mut a, t, j);
            } else if let Some(j) = (t + 1..n).find(|&j| !a[t][j].is_zero()) {
                sym_add(&mut a, t, j);
            }
        }
        let pivot = a[t][t].clone();
        if pivot.is_zero() {
            // row and column t are entirely zero
            sig.b_zero += 1;
            continue;
        }
        if pivot.is_positive() {
            sig.b_plus += 1;
        } else {
            sig.b_minus += 1;
        }
        for i in t + 1..n {
            if a[i][t].is_zero() {
                continue;
            }
            let f = &a[i][t] / &pivot;
            let (top, bottom) = a.split_at_mut(i);
            for (x, y) in bottom[0][t..].iter_mut().zip(&top[t][t..]) {
                *x -= &f * y;
            }
            for r in a.iter_mut().skip(t) {
                let v = &f * &r[t];
                r[i] -= v;
            }
        }
    }
    sig
}

fn sym_swap(a: &mut [Vec<BigRational>], x: usize, y: usize) {
    a.swap(x, y);
    for row in a.iter_mut() {
        row.swap(x, y);
    }
}

/// Replace basis vector `e_t` by `e_t + e_j`.
fn sym_add(a: &mut [Vec<BigRational>], t: usize, j: usize) {
    let row_j = a[j].clone();
    for (x, y) in a[t].iter_mut().zip(&row_j) {
        *x += y;
    }
    for row in a.iter_mut() {
        let v = row[j].clone();
        row[t] += v;
    }
}

/// Block-diagonal sum.
pub fn direct_sum(q1: &SymmetricForm, q2: &SymmetricForm) -> SymmetricForm {
    let (n1, n2) = (q1.dimension(), q2.dimension());
    let mut g = IntMatrix::zeros(n1 + n2, n1 + n2);
    for i in 0..n1 {
        for j in 0..n1 {
            g.set(i, j, q1.gram.get(i, j).clone());
        }
    }
    for i in 0..n2 {
        for j in 0..n2 {
            g.set(n1 + i, n1 + j, q2.gram.get(i, j).clone());
        }
    }
    SymmetricForm { gram: g }
}

/// Even iff every diagonal entry is even.
pub fn parity(q: &SymmetricForm) -> Parity {
    if (0..q.dimension()).all(|i| q.gram.get(i, i).is_even()) {
        Parity::Even
    } else {
        Parity::Odd
    }
}
