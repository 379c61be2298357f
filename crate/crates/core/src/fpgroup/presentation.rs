use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use super::{parse, GroupError, Letter, Word};

/// A finitely presented group: named generators and cyclically reduced relators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Validates generator indices, cyclically reduces every relator and
    /// drops the ones that reduce to the identity.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, GroupError> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g.as_str()) {
                return Err(GroupError::DuplicateGenerator(g.clone()));
            }
        }
        let mut p = Presentation {
            generators,
            relators: Vec::new(),
        };
        p.add_relators(relators)?;
        Ok(p)
    }

    pub fn free(names: &[&str]) -> Self {
        Presentation {
            generators: names.iter().map(|s| s.to_string()).collect(),
            relators: Vec::new(),
        }
    }

    /// The trivial group `< | >`.
    pub fn trivial() -> Self {
        Presentation {
            generators: Vec::new(),
            relators: Vec::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, GroupError> {
        parse::parse_presentation(text)
    }

    fn add_relators(&mut self, relators: Vec<Word>) -> Result<(), GroupError> {
        let count = self.generators.len();
        for r in relators {
            if let Some(index) = r.max_generator().filter(|&g| g >= count) {
                return Err(GroupError::GeneratorOutOfRange { index, count });
            }
            let r = r.cyclically_reduced();
            if !r.is_empty() {
                self.relators.push(r);
            }
        }
        Ok(())
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parses a word over this presentation's generators, e.g. `x*y^-1`.
    pub fn parse_word(&self, text: &str) -> Result<Word, GroupError> {
        parse::parse_word(text, &self.generators)
    }

    /// Parses a comma-separated list of words. An empty or blank string is
    /// the empty list.
    pub fn parse_words(&self, text: &str) -> Result<Vec<Word>, GroupError> {
        parse::parse_word_list(text, &self.generators)
    }

    /// `#generators - #relators`
    pub fn deficiency(&self) -> i64 {
        self.generators.len() as i64 - self.relators.len() as i64
    }

    /// Adds the given words as relators.
    pub fn quotient_by(&self, extra: &[Word]) -> Result<Presentation, GroupError> {
        let mut p = self.clone();
        p.add_relators(extra.to_vec())?;
        Ok(p)
    }

    /// Sets generator `g` to the identity and removes it, renumbering the
    /// generators after it. Same group as `quotient_by(&[g])`.
    pub fn kill_generator(&self, g: usize) -> Result<Presentation, GroupError> {
        let count = self.generators.len();
        if g >= count {
            return Err(GroupError::GeneratorOutOfRange { index: g, count });
        }
        let mut generators = self.generators.clone();
        generators.remove(g);
        let relators = self
            .relators
            .iter()
            .map(|r| {
                Word::new(r.letters().iter().filter(|l| l.generator != g).map(|l| {
                    let k = if l.generator > g { l.generator - 1 } else { l.generator };
                    Letter::new(k, l.inverse)
                }))
            })
            .collect();
        Presentation::new(generators, relators)
    }

    /// Free product. Generators of `other` that clash with a name already in
    /// use get the first free `_k` suffix, `k >= 2`.
    pub fn free_product(&self, other: &Presentation) -> Presentation {
        let mut names = self.generators.clone();
        let mut taken: HashSet<String> = self.generators.iter().cloned().collect();
        taken.extend(other.generators.iter().cloned());
        let own: HashSet<&str> = self.generators.iter().map(String::as_str).collect();
        for g in &other.generators {
            let name = if own.contains(g.as_str()) {
                let mut k = 2;
                loop {
                    let candidate = format!("{g}_{k}");
                    if !taken.contains(&candidate) {
                        break candidate;
                    }
                    k += 1;
                }
            } else {
                g.clone()
            };
            taken.insert(name.clone());
            names.push(name);
        }
        let offset = self.generators.len();
        let mut relators = self.relators.clone();
        relators.extend(other.relators.iter().map(|r| r.map_generators(|g| g + offset)));
        Presentation {
            generators: names,
            relators,
        }
    }

    /// `<x,y,z | x^p, y^q, z^r, x*y*z>`
    pub fn triangle(p: i64, q: i64, r: i64) -> Result<Presentation, GroupError> {
        if p < 2 || q < 2 || r < 2 {
            return Err(GroupError::TriangleParameter(p, q, r));
        }
        let relators = vec![
            Word::power(0, p),
            Word::power(1, q),
            Word::power(2, r),
            Word::new([Letter::pos(0), Letter::pos(1), Letter::pos(2)]),
        ];
        Ok(Presentation {
            generators: vec!["x".into(), "y".into(), "z".into()],
            relators,
        })
    }
}

impl FromStr for Presentation {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Presentation::parse(s)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | ", self.generators.join(","))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", r.display(&self.generators))?;
        }
        f.write_str(">")
    }
}

/// Free product of a nonempty list; the trivial group for an empty list.
pub fn free_product_all<'a>(parts: impl IntoIterator<Item = &'a Presentation>) -> Presentation {
    parts
        .into_iter()
        .fold(Presentation::trivial(), |acc, p| acc.free_product(p))
}
