//! Coset tables: Todd–Coxeter enumeration (HLT strategy) and tables read
//! off from a permutation quotient.

use thiserror::Error;

use super::perm::enumerate_elements;
use super::{check_homomorphism, FiniteQuotient, GroupError, HomomorphismCheck, Letter, Presentation, Word};

pub const DEFAULT_MAX_COSETS: usize = 100_000;

/// A closed coset table. Cosets are numbered from 0, with 0 the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    presentation: Presentation,
    subgroup_generators: Vec<Word>,
    /// `rows[c][2g]` is `c·g`, `rows[c][2g+1]` is `c·g^-1`.
    rows: Vec<Vec<usize>>,
}

/// Ways a coset table can fail to be a valid permutation action.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableDefect {
    #[error("row {coset} has {got} columns, expected {expected}")]
    Shape { coset: usize, got: usize, expected: usize },
    #[error("entry ({coset}, column {column}) points outside the table")]
    OutOfRange { coset: usize, column: usize },
    #[error("generator {generator} does not act as a permutation")]
    NotPermutation { generator: usize },
    #[error("relator {relator} does not fix coset {coset}")]
    RelatorMoves { relator: usize, coset: usize },
    #[error("subgroup generator {index} does not fix coset 0")]
    SubgroupMoves { index: usize },
}

impl CosetTable {
    /// Assembles a table from closed rows; fails unless it passes [`CosetTable::validate`].
    pub fn from_rows(
        presentation: Presentation,
        subgroup_generators: Vec<Word>,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self, TableDefect> {
        let t = CosetTable {
            presentation,
            subgroup_generators,
            rows,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn subgroup_generators(&self) -> &[Word] {
        &self.subgroup_generators
    }

    /// Number of cosets, i.e. the index of the subgroup.
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    pub fn image(&self, coset: usize, letter: Letter) -> usize {
        self.rows[coset][letter.column()]
    }

    /// Coset reached from `coset` by reading `w` left to right.
    pub fn trace(&self, coset: usize, w: &Word) -> usize {
        w.letters().iter().fold(coset, |c, &l| self.image(c, l))
    }

    /// Checks that every generator acts as a permutation, every relator fixes
    /// every coset, and every subgroup generator fixes coset 0.
    pub fn validate(&self) -> Result<(), TableDefect> {
        let n = self.rows.len();
        let cols = 2 * self.presentation.generator_count();
        for (c, row) in self.rows.iter().enumerate() {
            if row.len() != cols {
                return Err(TableDefect::Shape {
                    coset: c,
                    got: row.len(),
                    expected: cols,
                });
            }
            if let Some(column) = row.iter().position(|&d| d >= n) {
                return Err(TableDefect::OutOfRange { coset: c, column });
            }
        }
        for g in 0..self.presentation.generator_count() {
            let mut hit = vec![false; n];
            for c in 0..n {
                let d = self.rows[c][2 * g];
                if std::mem::replace(&mut hit[d], true) || self.rows[d][2 * g + 1] != c {
                    return Err(TableDefect::NotPermutation { generator: g });
                }
            }
        }
        for (i, r) in self.presentation.relators().iter().enumerate() {
            if let Some(coset) = (0..n).find(|&c| self.trace(c, r) != c) {
                return Err(TableDefect::RelatorMoves { relator: i, coset });
            }
        }
        for (i, w) in self.subgroup_generators.iter().enumerate() {
            if n > 0 && self.trace(0, w) != 0 {
                return Err(TableDefect::SubgroupMoves { index: i });
            }
        }
        Ok(())
    }
}

const UNDEF: u32 = u32::MAX;

struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    max_cosets: usize,
    queue: Vec<u32>,
}

#[inline]
fn inv_col(x: usize) -> usize {
    x ^ 1
}

impl Enumerator {
    fn new(cols: usize, max_cosets: usize) -> Self {
        Enumerator {
            cols,
            table: vec![UNDEF; cols],
            parent: vec![0],
            max_cosets,
            queue: Vec::new(),
        }
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.cols + x] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), GroupError> {
        if self.parent.len() >= self.max_cosets {
            return Err(GroupError::Overflow {
                what: "cosets",
                limit: self.max_cosets,
            });
        }
        let d = self.parent.len() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.set(c, x, d);
        self.set(d, inv_col(x), c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi as usize] = lo;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.get(e, x);
                if f == UNDEF {
                    continue;
                }
                self.set(f, inv_col(x), UNDEF);
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.get(e1, x);
                if ex != UNDEF {
                    self.merge(f1, ex);
                } else {
                    let fx = self.get(f1, inv_col(x));
                    if fx != UNDEF {
                        self.merge(e1, fx);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, inv_col(x), e1);
                    }
                }
            }
        }
    }

    /// Scans `w` (as table columns) from `c` in both directions, defining new
    /// cosets until the scan completes.
    fn scan_and_fill(&mut self, c: u32, w: &[usize]) -> Result<(), GroupError> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let mut i: isize = 0;
        let mut j: isize = w.len() as isize - 1;
        loop {
            while i <= j {
                let d = self.get(f, w[i as usize]);
                if d == UNDEF {
                    break;
                }
                f = d;
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                let d = self.get(b, inv_col(w[j as usize]));
                if d == UNDEF {
                    break;
                }
                b = d;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = w[i as usize];
                self.set(f, x, b);
                self.set(b, inv_col(x), f);
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    fn compact(mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut new_index = vec![usize::MAX; n];
        let mut live = Vec::new();
        for c in 0..n as u32 {
            if self.is_live(c) {
                new_index[c as usize] = live.len();
                live.push(c);
            }
        }
        let mut rows = Vec::with_capacity(live.len());
        for &c in &live {
            let mut row = Vec::with_capacity(self.cols);
            for x in 0..self.cols {
                let d = self.get(c, x);
                row.push(if d == UNDEF {
                    usize::MAX
                } else {
                    let r = self.rep(d);
                    new_index[r as usize]
                });
            }
            rows.push(row);
        }
        rows
    }
}

fn columns(w: &Word) -> Vec<usize> {
    w.letters().iter().map(|l| l.column()).collect()
}

/// Enumerates the cosets of the subgroup generated by `subgroup`.
///
/// Overflow means the enumeration did not close within `max_cosets` defined
/// cosets; it says nothing about the index being infinite.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> Result<CosetTable, GroupError> {
    let count = p.generator_count();
    for w in subgroup {
        if let Some(index) = w.max_generator().filter(|&g| g >= count) {
            return Err(GroupError::GeneratorOutOfRange { index, count });
        }
    }
    if max_cosets == 0 {
        return Err(GroupError::Overflow {
            what: "cosets",
            limit: 0,
        });
    }
    let cols = 2 * count;
    let relators: Vec<Vec<usize>> = p.relators().iter().map(columns).collect();
    let mut e = Enumerator::new(cols, max_cosets);
    for w in subgroup {
        e.scan_and_fill(0, &columns(w))?;
    }
    let mut c = 0u32;
    while (c as usize) < e.parent.len() {
        if e.is_live(c) {
            for r in &relators {
                e.scan_and_fill(c, r)?;
                if !e.is_live(c) {
                    break;
                }
            }
            if e.is_live(c) {
                for x in 0..cols {
                    if e.get(c, x) == UNDEF {
                        e.define(c, x)?;
                    }
                }
            }
        }
        c += 1;
    }
    let rows = e.compact();
    CosetTable::from_rows(p.clone(), subgroup.to_vec(), rows).map_err(|_| GroupError::TableNotClosed)
}

/// Coset table of the kernel of `p -> <images of q>`: cosets are the elements
/// of the image group, acted on by right multiplication. The kernel has no
/// finite generating list here, so `subgroup_generators` is empty.
pub fn coset_table_from_quotient(
    p: &Presentation,
    q: &FiniteQuotient,
    max_order: usize,
) -> Result<CosetTable, GroupError> {
    if let HomomorphismCheck::Reject { relator, .. } = check_homomorphism(p, q)? {
        return Err(GroupError::NotAHomomorphism { index: relator });
    }
    let (elements, index) = enumerate_elements(q, max_order)?;
    let inverses: Vec<_> = q.images().iter().map(|g| g.inverse()).collect();
    let rows = elements
        .iter()
        .map(|e| {
            q.images()
                .iter()
                .zip(&inverses)
                .flat_map(|(g, gi)| [index[&(e * g)], index[&(e * gi)]])
                .collect()
        })
        .collect();
    CosetTable::from_rows(p.clone(), Vec::new(), rows).map_err(|_| GroupError::TableNotClosed)
}
