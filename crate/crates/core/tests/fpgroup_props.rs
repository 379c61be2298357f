use std::collections::HashSet;

use knotsurf::fixtures;
use knotsurf::fpgroup::{
    abelianization, b2_upper_bound, check_homomorphism, coset_table_from_quotient, quotient_group_order,
    reidemeister_schreier, todd_coxeter, FiniteQuotient, HomomorphismCheck, Letter, Perm, Presentation, Word,
    DEFAULT_MAX_COSETS,
};
use knotsurf::linalg::{smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_word(rng: &mut ChaCha8Rng, gens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    Word::new((0..len).map(|_| Letter::new(rng.gen_range(0..gens), rng.gen_bool(0.5))))
}

fn random_presentation(rng: &mut ChaCha8Rng) -> Presentation {
    let gens = rng.gen_range(1..=3);
    let names: Vec<String> = ["a", "b", "c"][..gens].iter().map(|s| s.to_string()).collect();
    let rels = (0..rng.gen_range(0..=3)).map(|_| random_word(rng, gens, 6)).collect();
    Presentation::new(names, rels).unwrap()
}

#[test]
fn free_product_abelianizations_add() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf9_0001);
    for _ in 0..200 {
        let p = random_presentation(&mut rng);
        let q = random_presentation(&mut rng);
        let pq = p.free_product(&q);
        assert_eq!(pq.generator_count(), p.generator_count() + q.generator_count());
        assert_eq!(pq.relator_count(), p.relator_count() + q.relator_count());
        assert_eq!(pq.deficiency(), p.deficiency() + q.deficiency());
        let (ap, aq, apq) = (abelianization(&p), abelianization(&q), abelianization(&pq));
        assert_eq!(apq.betti, ap.betti + aq.betti);
        let merged: Vec<BigInt> = ap.torsion.iter().chain(&aq.torsion).cloned().collect();
        let expected = smith_normal_form(&IntMatrix::diagonal(&merged)).torsion();
        assert_eq!(apq.torsion, expected, "{p} * {q}");
        assert_eq!(b2_upper_bound(&pq), b2_upper_bound(&p) + b2_upper_bound(&q));
    }
}

proptest! {
    #[test]
    fn presentations_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_presentation(&mut rng);
        let text = p.to_string();
        prop_assert_eq!(Presentation::parse(&text).unwrap(), p);
    }

    #[test]
    fn abelianization_ignores_relator_rotation(seed in any::<u64>(), k in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_presentation(&mut rng);
        let rotated: Vec<Word> = p.relators().iter().map(|r| r.rotated(k).inverse()).collect();
        let q = Presentation::new(p.generators().to_vec(), rotated).unwrap();
        prop_assert_eq!(abelianization(&p), abelianization(&q));
    }
}

/// Finite von Dyck groups `<x,y | x^p, y^q, (xy)^r>` and their orders.
const SPHERICAL: &[((i64, i64, i64), usize)] = &[
    ((2, 2, 2), 4),
    ((2, 2, 3), 6),
    ((2, 2, 5), 10),
    ((2, 3, 3), 12),
    ((2, 3, 4), 24),
    ((2, 3, 5), 60),
];

fn von_dyck(p: i64, q: i64, r: i64) -> Presentation {
    Presentation::parse(&format!("<x,y | x^{p}, y^{q}, (x*y)^{r}>")).unwrap()
}

#[test]
fn coset_tables_of_finite_groups_are_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf9_0002);
    for &((p, q, r), order) in SPHERICAL {
        let g = von_dyck(p, q, r);
        let t = todd_coxeter(&g, &[], DEFAULT_MAX_COSETS).unwrap();
        t.validate().unwrap();
        assert_eq!(t.index(), order, "({p},{q},{r})");
        for _ in 0..8 {
            let sub: Vec<Word> = (0..rng.gen_range(1..=2)).map(|_| random_word(&mut rng, 2, 5)).collect();
            let t = todd_coxeter(&g, &sub, DEFAULT_MAX_COSETS).unwrap();
            t.validate().unwrap();
            assert_eq!(order % t.index(), 0);
            for w in &sub {
                assert_eq!(t.trace(0, w), 0);
            }
            // the subgroup presentation has order |G| / index
            let h = reidemeister_schreier(&t).unwrap();
            let th = todd_coxeter(&h, &[], DEFAULT_MAX_COSETS).unwrap();
            th.validate().unwrap();
            assert_eq!(th.index() * t.index(), order, "({p},{q},{r}) with {sub:?}");
        }
    }
}

#[test]
fn hurwitz_quotient_has_order_168() {
    let h = fixtures::hurwitz_168();
    let t = todd_coxeter(&h, &[], DEFAULT_MAX_COSETS).unwrap();
    t.validate().unwrap();
    assert_eq!(t.index(), 168);
    let q = fixtures::psl27_quotient();
    assert_eq!(check_homomorphism(&h, &q).unwrap(), HomomorphismCheck::Accept);
    assert_eq!(quotient_group_order(&q, 1000).unwrap(), 168);
}

fn kernel_abelianization(p: &Presentation, q: &FiniteQuotient) -> (usize, Vec<BigInt>) {
    let t = coset_table_from_quotient(p, q, 1000).unwrap();
    t.validate().unwrap();
    assert_eq!(t.index(), 168);
    let k = reidemeister_schreier(&t).unwrap();
    assert_eq!(k.generator_count(), 168 * (p.generator_count() - 1) + 1);
    let a = abelianization(&k);
    (a.betti, a.torsion)
}

#[test]
fn klein_quartic_kernel_is_a_genus_three_surface_group() {
    let two = kernel_abelianization(&fixtures::triangle_237_two_generator(), &fixtures::psl27_quotient());
    assert_eq!(two, (6, vec![]));
    let three = kernel_abelianization(&fixtures::triangle_237(), &fixtures::psl27_quotient_three_generator());
    assert_eq!(three, (6, vec![]));
}

#[test]
fn free_group_subgroups_satisfy_schreier_index_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf9_0003);
    for _ in 0..30 {
        let n = rng.gen_range(1..=3);
        let names: Vec<&str> = ["a", "b", "c"][..n].to_vec();
        let f = Presentation::free(&names);
        let degree = rng.gen_range(2..=5);
        let images: Vec<Perm> = (0..n)
            .map(|_| {
                let mut v: Vec<u32> = (0..degree as u32).collect();
                v.shuffle(&mut rng);
                Perm::from_images(v).unwrap()
            })
            .collect();
        let q = FiniteQuotient::new(degree, images).unwrap();
        let t = coset_table_from_quotient(&f, &q, 1000).unwrap();
        t.validate().unwrap();
        let m = t.index();
        assert_eq!(m, quotient_group_order(&q, 1000).unwrap());
        let k = reidemeister_schreier(&t).unwrap();
        assert_eq!(k.generator_count(), m * (n - 1) + 1);
        assert_eq!(k.relator_count(), 0);
        assert_eq!(abelianization(&k).betti, m * (n - 1) + 1);
    }
}

/// Möbius maps `z -> (az+b)/(cz+d)` of the projective line over `F_7`,
/// `0..6` as points 0..6 and infinity as 7.
fn mobius(a: u32, b: u32, c: u32, d: u32) -> Vec<u32> {
    const INF: u32 = 7;
    let inv = |x: u32| (1..7).find(|y| x * y % 7 == 1).unwrap();
    (0..8)
        .map(|z| {
            let (num, den) = if z == INF {
                (a, c)
            } else {
                ((a * z + b) % 7, (c * z + d) % 7)
            };
            if den == 0 {
                INF
            } else {
                num * inv(den) % 7
            }
        })
        .collect()
}

fn closure(gens: &[Vec<u32>]) -> usize {
    let id: Vec<u32> = (0..8).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(p) = stack.pop() {
        for g in gens {
            let h: Vec<u32> = p.iter().map(|&i| g[i as usize]).collect();
            if seen.insert(h.clone()) {
                stack.push(h);
            }
        }
    }
    seen.len()
}

fn order(p: &[u32]) -> usize {
    let id: Vec<u32> = (0..8).collect();
    let mut q = p.to_vec();
    let mut k = 1;
    while q != id {
        q = q.iter().map(|&i| p[i as usize]).collect();
        k += 1;
    }
    k
}

#[test]
fn psl27_fixture_is_a_hurwitz_generating_pair() {
    let mut maps = HashSet::new();
    for a in 0..7 {
        for b in 0..7 {
            for c in 0..7 {
                for d in 0..7 {
                    if (a * d + 7 * 7 - b * c) % 7 == 1 {
                        maps.insert(mobius(a, b, c, d));
                    }
                }
            }
        }
    }
    assert_eq!(maps.len(), 168);
    let (x, y) = fixtures::psl27_pair();
    let (x, y) = (x.images().to_vec(), y.images().to_vec());
    assert!(maps.contains(&x) && maps.contains(&y));
    assert_eq!((order(&x), order(&y)), (2, 3));
    let xy: Vec<u32> = (0..8).map(|i| y[x[i] as usize]).collect();
    assert_eq!(order(&xy), 7);
    assert_eq!(closure(&[x, y]), 168);
}
