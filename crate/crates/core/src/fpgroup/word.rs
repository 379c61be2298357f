use std::fmt;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn pos(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    pub fn neg(generator: usize) -> Self {
        Letter::new(generator, true)
    }

    pub fn inv(self) -> Self {
        Letter::new(self.generator, !self.inverse)
    }

    /// +1 or -1
    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// Column index in a coset table: `2g` for `g`, `2g + 1` for `g^-1`.
    pub(crate) fn column(self) -> usize {
        2 * self.generator + self.inverse as usize
    }
}

/// Freely reduced word in the generators. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Freely reduces the given letters.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// `g^k` for a single generator.
    pub fn power(generator: usize, k: i64) -> Self {
        let l = Letter::new(generator, k < 0);
        Word(vec![l; k.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Cancels inverse pairs between the two ends.
    pub fn cyclically_reduced(&self) -> Word {
        let v = &self.0;
        let (mut i, mut j) = (0, v.len());
        while j - i >= 2 && v[i] == v[j - 1].inv() {
            i += 1;
            j -= 1;
        }
        Word(v[i..j].to_vec())
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator).max()
    }

    /// Exponent sum of each generator among the first `n`.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut sums = vec![0; n];
        for l in &self.0 {
            sums[l.generator] += l.exponent();
        }
        sums
    }

    /// Applies `f` to every generator index.
    pub fn map_generators(&self, f: impl Fn(usize) -> usize) -> Word {
        Word::new(self.0.iter().map(|l| Letter::new(f(l.generator), l.inverse)))
    }

    /// Cyclic rotation starting at position `k` (mod the length), freely reduced.
    pub fn rotated(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let n = v.len();
            v.rotate_left(k % n);
        }
        Word::new(v)
    }

    /// Renders with the given generator names, collapsing runs into powers.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word::new(iter)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

/// Smallest `p` with `letters` a repetition of its first `p` letters.
fn period(letters: &[Letter]) -> usize {
    let n = letters.len();
    (1..n)
        .filter(|p| n.is_multiple_of(*p))
        .find(|&p| (p..n).all(|j| letters[j] == letters[j - p]))
        .unwrap_or(n)
}

fn write_runs(f: &mut fmt::Formatter<'_>, letters: &[Letter], names: &[String]) -> fmt::Result {
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut run = 1;
        while i + run < letters.len() && letters[i + run] == l {
            run += 1;
        }
        if i > 0 {
            f.write_str("*")?;
        }
        let name = &names[l.generator];
        let k = run as i64 * l.exponent();
        if k == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{k}")?;
        }
        i += run;
    }
    Ok(())
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        if letters.is_empty() {
            return f.write_str("1");
        }
        let p = period(letters);
        let base = &letters[..p];
        if p < letters.len() && base.iter().any(|&l| l != base[0]) {
            f.write_str("(")?;
            write_runs(f, base, self.names)?;
            write!(f, ")^{}", letters.len() / p)
        } else {
            write_runs(f, letters, self.names)
        }
    }
}
