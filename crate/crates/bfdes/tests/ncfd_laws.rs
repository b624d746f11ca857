//! Randomized lattice-law suite for NCFD meet/join/complement.

mod common;

use std::collections::BTreeMap;

use bfdes::Ncfd;
use common::rand_ncfd;
use rand::rngs::StdRng;
use rand::SeedableRng;

const TRIPLES: usize = 2000;

/// Independent meet/join oracle: pairwise enumeration keeping the max grade
/// per value, then a hull repair (grades raised to the min of the cumulative
/// maxima from each side) before reduction by canonicalize.
fn oracle_combine(a: &Ncfd, b: &Ncfd, f: fn(f64, f64) -> f64) -> Ncfd {
    let mut best: BTreeMap<i64, (f64, f64)> = BTreeMap::new();
    for &(ua, ga) in a.points() {
        for &(ub, gb) in b.points() {
            let u = f(ua, ub);
            let g = ga.min(gb);
            let key = (u * 1e6).round() as i64;
            let entry = best.entry(key).or_insert((u, 0.0));
            if g > entry.1 {
                entry.1 = g;
            }
        }
    }
    let mut pts: Vec<(f64, f64)> = best.into_values().collect();
    let n = pts.len();
    let mut left = vec![0.0; n];
    let mut right = vec![0.0; n];
    let mut acc = 0.0f64;
    for i in 0..n {
        acc = acc.max(pts[i].1);
        left[i] = acc;
    }
    acc = 0.0;
    for i in (0..n).rev() {
        acc = acc.max(pts[i].1);
        right[i] = acc;
    }
    for i in 0..n {
        pts[i].1 = left[i].min(right[i]);
    }
    Ncfd::canonicalize(&pts).expect("hull-repaired points are unimodal and normal")
}

fn is_canonical(x: &Ncfd) -> bool {
    let re = Ncfd::canonicalize(x.points()).expect("re-canonicalization accepts outputs");
    re == *x && x.points().iter().any(|&(_, g)| g >= 1.0 - 1e-9)
}

#[test]
fn table_laws_and_monotonicity_hold_on_random_triples() {
    let mut rng = StdRng::seed_from_u64(0xBF01);
    for _ in 0..TRIPLES {
        let a = rand_ncfd(&mut rng, 5);
        let b = rand_ncfd(&mut rng, 5);
        let c = rand_ncfd(&mut rng, 5);

        // Idempotency and commutativity.
        assert_eq!(a.meet(&a), a);
        assert_eq!(a.join(&a), a);
        assert_eq!(a.meet(&b), b.meet(&a));
        assert_eq!(a.join(&b), b.join(&a));

        // Associativity.
        assert_eq!(a.meet(&b).meet(&c), a.meet(&b.meet(&c)));
        assert_eq!(a.join(&b).join(&c), a.join(&b.join(&c)));

        // Absorption.
        assert_eq!(a.meet(&a.join(&b)), a);
        assert_eq!(a.join(&a.meet(&b)), a);

        // Distributivity.
        assert_eq!(a.meet(&b.join(&c)), a.meet(&b).join(&a.meet(&c)));
        assert_eq!(a.join(&b.meet(&c)), a.join(&b).meet(&a.join(&c)));

        // Identities.
        assert_eq!(a.join(&Ncfd::bottom()), a);
        assert_eq!(a.meet(&Ncfd::top()), a);
        assert_eq!(a.meet(&Ncfd::bottom()), Ncfd::bottom());
        assert_eq!(a.join(&Ncfd::top()), Ncfd::top());

        // Involution and De Morgan.
        assert_eq!(a.complement().complement(), a);
        assert_eq!(a.meet(&b).complement(), a.complement().join(&b.complement()));
        assert_eq!(a.join(&b).complement(), a.complement().meet(&b.complement()));

        // Meet and join induce the same order.
        assert_eq!(a.meet(&b) == a, a.join(&b) == b);
        assert_eq!(a.leq(&b), a.join(&b) == b);

        // Outputs stay canonical (normal, convex, minimal support).
        for x in [a.meet(&b), a.join(&b), a.complement()] {
            assert!(is_canonical(&x), "non-canonical output {x}");
        }

        // Independent enumeration oracle.
        assert_eq!(a.meet(&b), oracle_combine(&a, &b, f64::min));
        assert_eq!(a.join(&b), oracle_combine(&a, &b, f64::max));
    }
}

#[test]
fn ordering_properties_hold_on_random_samples() {
    let mut rng = StdRng::seed_from_u64(0xBF02);
    for _ in 0..TRIPLES {
        let a1 = rand_ncfd(&mut rng, 5);
        let a3 = rand_ncfd(&mut rng, 5);
        let r1 = rand_ncfd(&mut rng, 5);
        let r2 = rand_ncfd(&mut rng, 5);

        // Items 1 and 2: meet below, join above.
        assert!(a1.meet(&a3).leq(&a1));
        assert!(a1.leq(&a1.join(&a3)));

        // Items 3 and 4: meet/join are monotone in both arguments.
        let a2 = a1.join(&r1);
        let a4 = a3.join(&r2);
        assert!(a1.leq(&a2) && a3.leq(&a4));
        assert!(a1.meet(&a3).leq(&a2.meet(&a4)));
        assert!(a1.join(&a3).leq(&a2.join(&a4)));

        // Item 5: join is the least upper bound.
        let ub = a1.join(&a3).join(&r1);
        assert!(a1.leq(&ub) && a3.leq(&ub));
        assert!(a1.join(&a3).leq(&ub));

        // Item 6: meet is the greatest lower bound.
        let b2 = a1.join(&r1);
        let b3 = a1.join(&r2);
        assert!(a1.leq(&b2) && a1.leq(&b3));
        assert!(a1.leq(&b2.meet(&b3)));
    }
}

#[test]
fn centroid_respects_crisp_order() {
    let mut rng = StdRng::seed_from_u64(0xBF03);
    for _ in 0..500 {
        let a = rand_ncfd(&mut rng, 5);
        let b = rand_ncfd(&mut rng, 5);
        if a.leq(&b) {
            assert!(a.centroid() <= b.centroid() + 1e-9);
            assert!(b.rank_geq(&a));
        }
    }
}
