//! Generators and independent oracles shared by the CLI and acceptance tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use knotsurf::fpgroup::{coset_table_from_quotient, todd_coxeter, CosetTable, FiniteQuotient, Perm, Presentation};
use knotsurf::linalg::{signature_of, smith_normal_form, IntMatrix, SymmetricForm};
use knotsurf::seifert::SeifertInvariants;
use knotsurf_cli::report::parse_machine;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn machine(args: &[&str]) -> (BTreeMap<String, String>, i32) {
    let mut full = vec!["knotsurf", "--machine"];
    full.extend_from_slice(args);
    let (out, code) = knotsurf_cli::run(full);
    let pairs = parse_machine(&out).unwrap_or_else(|e| panic!("{e}\n{out}"));
    (pairs.into_iter().collect(), code)
}

pub fn fact<'a>(m: &'a BTreeMap<String, String>, key: &str) -> &'a str {
    m.get(&format!("section.1.{key}"))
        .unwrap_or_else(|| panic!("missing {key} in {m:?}"))
}

pub fn random_word(rng: &mut ChaCha8Rng, gens: &[&str], max_len: usize) -> String {
    let len = rng.gen_range(1..=max_len);
    let parts: Vec<String> = (0..len)
        .map(|_| {
            let g = gens.choose(rng).unwrap();
            match rng.gen_range(-3i32..=3) {
                0 | 1 => g.to_string(),
                e => format!("{g}^{e}"),
            }
        })
        .collect();
    parts.join("*")
}

pub fn random_presentation(rng: &mut ChaCha8Rng) -> String {
    let all = ["a", "b", "c", "d"];
    let gens = &all[..rng.gen_range(1..=all.len())];
    let rels: Vec<String> = (0..rng.gen_range(0..=4)).map(|_| random_word(rng, gens, 5)).collect();
    format!("<{} | {}>", gens.join(","), rels.join(", "))
}

pub fn random_seifert(rng: &mut ChaCha8Rng) -> SeifertInvariants {
    let n = rng.gen_range(0..=4);
    let fractions: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let alpha = rng.gen_range(2i64..=9);
            loop {
                let beta = rng.gen_range(-2 * alpha..=2 * alpha);
                if beta.gcd(&alpha) == 1 {
                    break (beta, alpha);
                }
            }
        })
        .collect();
    SeifertInvariants::from_fractions(rng.gen_range(-3..=3), &fractions).unwrap()
}

pub fn random_pretzel(rng: &mut ChaCha8Rng) -> Vec<i64> {
    let n = rng.gen_range(3..=5);
    (0..n)
        .map(|_| loop {
            let t = rng.gen_range(-9i64..=9);
            if t != 0 {
                break t;
            }
        })
        .collect()
}

/// Parses the `[[a,b], [c,d]]` matrix display.
pub fn parse_matrix(text: &str) -> Vec<Vec<BigInt>> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .expect("matrix brackets");
    if inner.trim().is_empty() {
        return vec![];
    }
    inner
        .split("],")
        .map(|row| {
            let row = row.trim().trim_start_matches('[').trim_end_matches(']');
            row.split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|v| v.trim().parse().unwrap())
                .collect()
        })
        .collect()
}

/// Laplace expansion along the first row.
fn laplace(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .filter(|&j| m[0][j] != 0)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * laplace(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors as ratios of determinantal divisors, and the rank.
pub fn determinantal_oracle(m: &[Vec<i64>]) -> (Vec<i128>, usize) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut divisors = vec![1i128];
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                    .collect();
                g = g.gcd(&laplace(&minor));
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    let rank = divisors.len() - 1;
    (divisors.windows(2).map(|w| w[1] / w[0]).collect(), rank)
}

pub fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=5);
    let cols = rng.gen_range(1..=5);
    let sparse = rng.gen_bool(0.3);
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if sparse && rng.gen_bool(0.6) {
                        0
                    } else {
                        rng.gen_range(-6..=6)
                    }
                })
                .collect()
        })
        .collect()
}

/// Returns a description of the first disagreement with the oracle.
pub fn smith_disagreement(m: &[Vec<i64>]) -> Option<String> {
    let snf = smith_normal_form(&IntMatrix::from_rows(m));
    let (factors, rank) = determinantal_oracle(m);
    let got: Vec<i128> = snf
        .invariant_factors
        .iter()
        .map(|f| i128::try_from(f).unwrap())
        .collect();
    (snf.rank != rank || got != factors).then(|| format!("{m:?}: got {got:?}, oracle {factors:?}"))
}

pub fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            for c in 0..n {
                let v = -u.get(i, c).clone();
                u.set(i, c, v);
            }
        } else {
            let k: i64 = rng.gen_range(-2..=2);
            for c in 0..n {
                let v = u.get(i, c) + u.get(j, c) * k;
                u.set(i, c, v);
            }
        }
    }
    u
}

pub fn random_form(rng: &mut ChaCha8Rng) -> SymmetricForm {
    let n = rng.gen_range(1..=6);
    let mut g = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = BigInt::from(rng.gen_range(-4i64..=4));
            g.set(i, j, v.clone());
            g.set(j, i, v);
        }
    }
    SymmetricForm::new(g).unwrap()
}

/// Counts `(b_plus, b_minus)` by sign changes of leading principal minors
/// after a random change of basis that makes them all nonzero.
pub fn jacobi_oracle(q: &SymmetricForm, rng: &mut ChaCha8Rng) -> Option<(usize, usize)> {
    let n = q.dimension();
    if q.gram().determinant().is_zero() {
        return None;
    }
    for _ in 0..50 {
        let g = q.congruent(&random_unimodular(n, rng));
        let minors: Vec<BigInt> = (0..=n)
            .map(|k| {
                let rows: Vec<Vec<BigInt>> = (0..k)
                    .map(|r| (0..k).map(|c| g.gram().get(r, c).clone()).collect())
                    .collect();
                IntMatrix::from_rows(&rows).determinant()
            })
            .collect();
        if minors.iter().any(Zero::is_zero) {
            continue;
        }
        let neg = minors
            .windows(2)
            .filter(|w| w[0].is_positive() != w[1].is_positive())
            .count();
        return Some((n - neg, neg));
    }
    None
}

/// Congruence check for one random form; returns an error message on failure.
pub fn signature_trial(rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let q = random_form(rng);
    let u = random_unimodular(q.dimension(), rng);
    let (s, s2) = (signature_of(&q), signature_of(&q.congruent(&u)));
    if s != s2 {
        return Err(format!("{} changes signature under congruence", q.gram()));
    }
    match jacobi_oracle(&q, rng) {
        Some(pm) if pm != (s.b_plus, s.b_minus) => Err(format!("{}: {s:?} vs oracle {pm:?}", q.gram())),
        Some(_) => Ok(true),
        None => Ok(false),
    }
}

/// Finite groups with known orders, for coset enumeration trials.
pub const FINITE_GROUPS: &[(&str, usize)] = &[
    ("<x,y | x^2, y^3, (x*y)^3>", 12),
    ("<x,y | x^2, y^3, (x*y)^4>", 24),
    ("<x,y | x^2, y^3, (x*y)^5>", 60),
    ("<x,y | x^2, y^2, (x*y)^6>", 12),
    ("<a,b | a^4, b^2, (a*b)^2>", 8),
    ("<a,b | a^5, b^4, b^-1*a*b*a^-2>", 20),
];

/// One random coset table, either from a finite group and a random subgroup
/// or from a random permutation representation of a free group.
pub fn random_table(rng: &mut ChaCha8Rng) -> (CosetTable, Option<usize>) {
    if rng.gen_bool(0.6) {
        let (text, order) = FINITE_GROUPS.choose(rng).unwrap();
        let p = Presentation::parse(text).unwrap();
        let names: Vec<&str> = p.generators().iter().map(String::as_str).collect();
        let sub: Vec<String> = (0..rng.gen_range(0..=2)).map(|_| random_word(rng, &names, 4)).collect();
        let words = p.parse_words(&sub.join(", ")).unwrap();
        (todd_coxeter(&p, &words, 10_000).unwrap(), Some(*order))
    } else {
        let degree = rng.gen_range(1..=6);
        let gens = rng.gen_range(1..=3);
        let images: Vec<Perm> = (0..gens)
            .map(|_| {
                let mut v: Vec<u32> = (0..degree as u32).collect();
                v.shuffle(rng);
                Perm::from_images(v).unwrap()
            })
            .collect();
        let names: Vec<String> = (0..gens).map(|i| format!("g{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let p = Presentation::free(&refs);
        let q = FiniteQuotient::new(degree, images).unwrap();
        (coset_table_from_quotient(&p, &q, 100_000).unwrap(), None)
    }
}
