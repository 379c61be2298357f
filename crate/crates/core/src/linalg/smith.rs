//! Smith normal form over the integers.
//!
//! Elimination runs on machine integers with checked arithmetic first and
//! restarts on [`BigInt`] entries if any intermediate value overflows, so the
//! result is always exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntMatrix;

/// Invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix, with `r` its rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithResult {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithResult {
    /// Nontrivial invariant factors, i.e. the torsion coefficients of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Ring operations the elimination needs. `None` signals overflow.
trait Scalar: Clone + Eq + Zero + One {
    fn is_unit(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn neg(&self) -> Self;
    fn div_floor(&self, rhs: &Self) -> Self;
    fn is_multiple_of(&self, rhs: &Self) -> bool;
    /// `self - q * rhs`
    fn sub_mul(&self, q: &Self, rhs: &Self) -> Option<Self>;
    fn add_checked(&self, rhs: &Self) -> Option<Self>;
    fn less_abs(&self, rhs: &Self) -> bool;
    fn into_big(self) -> BigInt;
}

impl Scalar for i64 {
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn div_floor(&self, rhs: &Self) -> Self {
        Integer::div_floor(self, rhs)
    }
    fn is_multiple_of(&self, rhs: &Self) -> bool {
        self % rhs == 0
    }
    fn sub_mul(&self, q: &Self, rhs: &Self) -> Option<Self> {
        q.checked_mul(*rhs).and_then(|p| self.checked_sub(p))
    }
    fn add_checked(&self, rhs: &Self) -> Option<Self> {
        self.checked_add(*rhs)
    }
    fn less_abs(&self, rhs: &Self) -> bool {
        self.unsigned_abs() < rhs.unsigned_abs()
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Scalar for BigInt {
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_floor(&self, rhs: &Self) -> Self {
        Integer::div_floor(self, rhs)
    }
    fn is_multiple_of(&self, rhs: &Self) -> bool {
        (self % rhs).is_zero()
    }
    fn sub_mul(&self, q: &Self, rhs: &Self) -> Option<Self> {
        Some(self - q * rhs)
    }
    fn add_checked(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn less_abs(&self, rhs: &Self) -> bool {
        self.magnitude() < rhs.magnitude()
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// Computes the Smith normal form of `m`.
///
/// Pivots are chosen as the entry of smallest nonzero absolute value in the
/// remaining block, first occurrence in row-major order.
pub fn smith_normal_form(m: &IntMatrix) -> SmithResult {
    let small: Option<Vec<Vec<i64>>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|v| v.to_i64()).collect())
        .collect();
    if let Some(rows) = small {
        if let Some(d) = eliminate(rows, m.cols()) {
            return finish(d);
        }
    }
    let rows = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let d = eliminate::<BigInt>(rows, m.cols()).expect("bigint elimination cannot overflow");
    finish(d)
}

fn finish(diag: Vec<BigInt>) -> SmithResult {
    SmithResult {
        rank: diag.len(),
        invariant_factors: diag,
    }
}

fn eliminate<T: Scalar>(mut a: Vec<Vec<T>>, cols: usize) -> Option<Vec<BigInt>> {
    let rows = a.len();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pr, pc)) = smallest_entry(&a, t, cols) else {
            break;
        };
        a.swap(t, pr);
        swap_cols(&mut a, t, pc);
        loop {
            let mut pending = false;
            // clear column t below the pivot
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                row_sub_mul(&mut a, i, t, &q, cols)?;
                if !a[i][t].is_zero() {
                    pending = true;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                col_sub_mul(&mut a, j, t, &q)?;
                if !a[t][j].is_zero() {
                    pending = true;
                }
            }
            if pending {
                let (pr, pc) = smallest_in_cross(&a, t, cols);
                a.swap(t, pr);
                swap_cols(&mut a, t, pc);
                continue;
            }
            // enforce the divisibility chain
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    let (top, bottom) = a.split_at_mut(i);
                    for (x, y) in top[t][t..cols].iter_mut().zip(&bottom[0][t..cols]) {
                        *x = x.add_checked(y)?;
                    }
                }
                None => break,
            }
        }
        let p = a[t][t].clone();
        diag.push(if p.is_neg() { p.neg() } else { p }.into_big());
    }
    Some(diag)
}

fn smallest_entry<T: Scalar>(a: &[Vec<T>], t: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().take(cols).skip(t) {
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if !v.less_abs(&a[bi][bj]) => {}
                _ => {
                    best = Some((i, j));
                    if v.is_unit() {
                        return best;
                    }
                }
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` and column `t` (the pivot included).
fn smallest_in_cross<T: Scalar>(a: &[Vec<T>], t: usize, cols: usize) -> (usize, usize) {
    let mut best = (t, t);
    let consider = |i: usize, j: usize, best: &mut (usize, usize)| {
        let v = &a[i][j];
        let b = &a[best.0][best.1];
        if !v.is_zero() && (b.is_zero() || v.less_abs(b)) {
            *best = (i, j);
        }
    };
    for i in t..a.len() {
        consider(i, t, &mut best);
    }
    for j in t + 1..cols {
        consider(t, j, &mut best);
    }
    best
}

fn swap_cols<T: Scalar>(a: &mut [Vec<T>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

/// row[i] -= q * row[t], touching only columns where row[t] is nonzero.
fn row_sub_mul<T: Scalar>(a: &mut [Vec<T>], i: usize, t: usize, q: &T, cols: usize) -> Option<()> {
    let (pivot_row, target) = if i > t {
        let (lo, hi) = a.split_at_mut(i);
        (&lo[t], &mut hi[0])
    } else {
        unreachable!("rows are only reduced below the pivot")
    };
    for j in t..cols {
        if !pivot_row[j].is_zero() {
            target[j] = target[j].sub_mul(q, &pivot_row[j])?;
        }
    }
    Some(())
}

/// col[j] -= q * col[t]
fn col_sub_mul<T: Scalar>(a: &mut [Vec<T>], j: usize, t: usize, q: &T) -> Option<()> {
    for row in a.iter_mut().skip(t) {
        if !row[t].is_zero() {
            row[j] = row[j].sub_mul(q, &row[t])?;
        }
    }
    Some(())
}
