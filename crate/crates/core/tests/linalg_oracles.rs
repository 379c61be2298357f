use knotsurf::linalg::{direct_sum, parity, signature_of, smith_normal_form, IntMatrix, Parity, SymmetricForm};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

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

/// Invariant factors as ratios of determinantal divisors.
fn determinantal_oracle(m: &[Vec<i64>]) -> (Vec<i128>, usize) {
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
    let factors = divisors.windows(2).map(|w| w[1] / w[0]).collect();
    (factors, rank)
}

fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=6);
    let cols = rng.gen_range(1..=6);
    let sparse = rng.gen_bool(0.3);
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if sparse && rng.gen_bool(0.6) {
                        0
                    } else {
                        rng.gen_range(-5..=5)
                    }
                })
                .collect()
        })
        .collect()
}

#[test]
fn smith_agrees_with_determinantal_divisors() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..1200 {
        let m = random_matrix(&mut rng);
        let snf = smith_normal_form(&IntMatrix::from_rows(&m));
        let (factors, rank) = determinantal_oracle(&m);
        assert_eq!(snf.rank, rank, "{m:?}");
        let got: Vec<i128> = snf
            .invariant_factors
            .iter()
            .map(|f| i128::try_from(f).unwrap())
            .collect();
        assert_eq!(got, factors, "{m:?}");
    }
}

#[test]
fn smith_is_idempotent_and_divisible() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..300 {
        let m = random_matrix(&mut rng);
        let snf = smith_normal_form(&IntMatrix::from_rows(&m));
        for w in snf.invariant_factors.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(snf.invariant_factors.iter().all(|f| f.is_positive()));
        let again = smith_normal_form(&IntMatrix::diagonal(&snf.invariant_factors));
        assert_eq!(again, snf);
    }
}

#[test]
fn smith_survives_large_entries() {
    // entries near i64::MAX force the exact fallback
    let big = i64::MAX / 3;
    let m = IntMatrix::from_rows(&[[big, big - 1], [big - 1, big - 2]]);
    let snf = smith_normal_form(&m);
    let det = m.determinant().abs();
    assert_eq!(snf.rank, 2);
    assert_eq!(&snf.invariant_factors[0] * &snf.invariant_factors[1], det);
}

fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> IntMatrix {
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
    assert!(u.determinant().abs() == BigInt::from(1));
    u
}

fn random_form(rng: &mut ChaCha8Rng) -> SymmetricForm {
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

/// Jacobi's rule: once every leading principal minor is nonzero, `b_minus`
/// is the number of sign changes in `1, d1, .., dn`.
fn sign_changes_oracle(q: &SymmetricForm, rng: &mut ChaCha8Rng) -> Option<(usize, usize)> {
    let n = q.dimension();
    for _ in 0..50 {
        let u = random_unimodular(n, rng);
        let g = q.congruent(&u);
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

#[test]
fn signature_matches_principal_minor_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut checked = 0;
    for _ in 0..400 {
        let q = random_form(&mut rng);
        if q.gram().determinant().is_zero() {
            continue;
        }
        if let Some((p, m)) = sign_changes_oracle(&q, &mut rng) {
            let s = signature_of(&q);
            assert_eq!((s.b_plus, s.b_minus, s.b_zero), (p, m, 0), "{}", q.gram());
            checked += 1;
        }
    }
    assert!(checked >= 200, "only {checked} forms checked");
}

#[test]
fn signature_is_congruence_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for _ in 0..250 {
        let q = random_form(&mut rng);
        let u = random_unimodular(q.dimension(), &mut rng);
        let q2 = q.congruent(&u);
        assert_eq!(signature_of(&q), signature_of(&q2));
        assert_eq!(parity(&q), parity(&q2));
        // the rank over Q is the rank of the Gram matrix
        assert_eq!(
            signature_of(&q).b_zero,
            q.dimension() - smith_normal_form(q.gram()).rank
        );
    }
}

#[test]
fn known_forms() {
    let e8 = IntMatrix::from_rows(&[
        [2, -1, 0, 0, 0, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0, 0, 0],
        [0, -1, 2, -1, 0, 0, 0, -1],
        [0, 0, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, 0],
        [0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, -1, 2, 0],
        [0, 0, -1, 0, 0, 0, 0, 2],
    ]);
    let q = SymmetricForm::new(e8).unwrap();
    assert_eq!(q.gram().determinant(), BigInt::from(1));
    assert_eq!(signature_of(&q).sigma(), 8);
    assert_eq!(parity(&q), Parity::Even);
}

proptest! {
    #[test]
    fn direct_sum_adds_signatures(
        a in proptest::collection::vec(-3i64..=3, 1..5),
        b in proptest::collection::vec(-3i64..=3, 1..5),
    ) {
        let qa = SymmetricForm::diagonal(&a);
        let qb = SymmetricForm::diagonal(&b);
        let s = signature_of(&direct_sum(&qa, &qb));
        prop_assert_eq!(s, signature_of(&qa) + signature_of(&qb));
        let pos = a.iter().chain(&b).filter(|&&x| x > 0).count();
        let neg = a.iter().chain(&b).filter(|&&x| x < 0).count();
        prop_assert_eq!((s.b_plus, s.b_minus), (pos, neg));
    }

    #[test]
    fn determinant_is_multiplicative(
        a in proptest::collection::vec(-4i64..=4, 9),
        b in proptest::collection::vec(-4i64..=4, 9),
    ) {
        let ma = IntMatrix::from_vec(3, 3, a.into_iter().map(BigInt::from).collect());
        let mb = IntMatrix::from_vec(3, 3, b.into_iter().map(BigInt::from).collect());
        prop_assert_eq!((&ma * &mb).determinant(), ma.determinant() * mb.determinant());
    }
}
