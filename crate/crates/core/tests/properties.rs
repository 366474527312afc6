use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use youngspan::continuous::{random_profile, rectangular_r};
use youngspan::hull::{in_hull, vertex_direct, vertex_recursive};
use youngspan::moebius::{
    all_sites, box_count_alpha, extend_integer_function, partition_of_rim, rim_of_partition,
    squares, triples, Site,
};
use youngspan::projection::projection_matrix;
use youngspan::{cyclic_distance, enumerate_faces, enumerate_young, Partition};

/// A size `N` in `lo..=hi` together with a partition of `Y_N`.
fn young(lo: usize, hi: usize) -> impl Strategy<Value = (usize, Partition)> {
    (lo..=hi).prop_flat_map(|n| {
        let all = enumerate_young(n).unwrap();
        (Just(n), proptest::sample::select(all))
    })
}

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tau_sigma_inverse((n, l) in young(2, 14)) {
        let t = l.tau(n).unwrap();
        prop_assert!(t.max_hook() < n || t.is_empty());
        prop_assert_eq!(t.sigma(n).unwrap(), l.clone());
        prop_assert_eq!(l.sigma(n).unwrap().tau(n).unwrap(), l.clone());
        prop_assert_eq!(l.tau_pow(n, n).unwrap(), l.clone());
        prop_assert_eq!(n % l.tau_orbit_len(n).unwrap(), 0);
    }

    #[test]
    fn dual_and_corners((n, l) in young(2, 14)) {
        let d = l.dual();
        prop_assert!(d.in_young(n));
        prop_assert_eq!(d.dual(), l.clone());
        prop_assert!(l.inner_corners().len() <= n / 2);
        for c in l.inner_corners() {
            let mu = l.remove_corner(c).unwrap();
            prop_assert!(l.covers(&mu));
            prop_assert_eq!(l.size(), mu.size() + 1);
        }
    }

    #[test]
    fn rim_round_trip_and_graph((n, l) in young(2, 12)) {
        let rim = rim_of_partition(&l, n).unwrap();
        prop_assert_eq!(rim.sites().len(), n);
        prop_assert_eq!(partition_of_rim(&rim).unwrap(), l.clone());
        let touched: BTreeSet<usize> = rim.sites().iter().flat_map(|s| [s.j, s.k]).collect();
        prop_assert_eq!(touched.len(), n);
        let cycle = rim.cycle_length().expect("exactly one cycle");
        prop_assert_eq!(cycle % 2, 1);
    }

    #[test]
    fn covering_moves_one_site((n, l) in young(2, 12)) {
        let rim_l: BTreeSet<Site> = rim_of_partition(&l, n).unwrap().sites().iter().copied().collect();
        for c in l.inner_corners() {
            let mu = l.remove_corner(c).unwrap();
            let rim_m: BTreeSet<Site> = rim_of_partition(&mu, n).unwrap().sites().iter().copied().collect();
            let gone: Vec<_> = rim_m.difference(&rim_l).collect();
            let new: Vec<_> = rim_l.difference(&rim_m).collect();
            prop_assert_eq!((gone.len(), new.len()), (1, 1));
            let (r, a) = (gone[0], new[0]);
            let lifts = [(r.j as i64, r.k as i64 - 1), (r.k as i64, r.j as i64 - 1)];
            prop_assert!(lifts.iter().any(|&(j, k)| Site::canonical(j + 1, k, n) == *a));
        }
    }

    #[test]
    fn vertex_formulas_agree((n, l) in young(2, 12)) {
        let v = vertex_direct(&l, n).unwrap();
        prop_assert_eq!(vertex_recursive(&l, n).unwrap(), v.clone());
        let rim = rim_of_partition(&l, n).unwrap();
        for s in all_sites(n) {
            let sum = v.values[s.j] + v.values[s.k];
            let d = cyclic_distance(s.j, s.k, n).unwrap() as i64;
            if rim.contains(&s) {
                prop_assert_eq!(sum, d);
            } else {
                prop_assert!(sum > d);
            }
        }
    }

    #[test]
    fn alpha_matches_extension((n, l) in young(2, 9)) {
        let v = vertex_direct(&l, n).unwrap();
        let ext = extend_integer_function(&v.values, n).unwrap();
        let t = l.tau(n).unwrap();
        for (s, val) in ext.iter() {
            let a = box_count_alpha(&l, s, n).unwrap();
            prop_assert_eq!(Rational64::from_integer(a as i64), val);
            prop_assert_eq!(box_count_alpha(&t, s, n).unwrap(), box_count_alpha(&l, s.shift(n), n).unwrap());
        }
    }

    #[test]
    fn tau_rotates_vertex((n, l) in young(2, 12)) {
        let f = vertex_direct(&l, n).unwrap().values;
        let g = vertex_direct(&l.tau(n).unwrap(), n).unwrap().values;
        for i in 0..n {
            prop_assert_eq!(g[i], f[(i + 1) % n]);
        }
    }

    #[test]
    fn strip_identities(n in 2usize..=10, f in proptest::collection::vec(-50i64..50, 10)) {
        let ext = extend_integer_function(&f[..n], n).unwrap();
        let one = Rational64::from_integer(1);
        for [a, b, c, d] in squares(n) {
            prop_assert_eq!(ext.get(a) + ext.get(d) - ext.get(b) - ext.get(c), one);
        }
        for [a, b, c] in triples(n) {
            let lhs = Rational64::from_integer(2) * ext.get(a) + Rational64::from_integer(n as i64)
                - ext.get(b) - ext.get(c);
            prop_assert_eq!(lhs, one);
        }
    }

    #[test]
    fn projection_is_linear(n in 2usize..=12, f in proptest::collection::vec(-20i64..20, 12),
                            g in proptest::collection::vec(-20i64..20, 12), a in -3i64..3, b in -3i64..3) {
        let p = projection_matrix(n).unwrap();
        let combo: Vec<i64> = (0..n).map(|i| a * f[i] + b * g[i]).collect();
        let (pf, pg, pc) = (p.apply_int(&f[..n]), p.apply_int(&g[..n]), p.apply_int(&combo));
        for k in 0..2 {
            let want = a as f64 * pf[k] + b as f64 * pg[k];
            prop_assert!((pc[k] - want).abs() < 1e-9 * (1.0 + want.abs()));
        }
    }

    #[test]
    fn rectangle_identity_and_periods(seed in any::<u64>(), k in 0i64..24, shift in -3i64..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_profile(&mut rng, 5, 24);
        let a = f.u() + q(k, 24);
        let (lhs, rhs) = f.rectangle_identity(&a);
        prop_assert_eq!(lhs, rhs);
        let la = f.eval(&a);
        prop_assert!(la >= q(0, 1) && la <= q(1, 1));
        prop_assert_eq!(f.eval(&(&a + q(1, 1))), q(1, 1) - &la);
        let t = q(k, 7);
        prop_assert_eq!(f.area(&t), f.area(&(&t + q(2 * shift, 1))));
        // zero of Lambda, zero of F and being some R_r are the same condition
        let min_zero = f.area_min() == q(0, 1);
        prop_assert!(f.area_min() >= q(0, 1));
        match f.zero() {
            Some(r) => {
                prop_assert!(min_zero);
                prop_assert!(f.same_function(&rectangular_r(&r).unwrap()));
            }
            None => prop_assert!(!min_zero),
        }
    }
}

#[test]
fn face_convex_combinations_in_hull() {
    for n in 2..=7 {
        for v in 1..=n / 2 {
            for face in enumerate_faces(n, v).unwrap() {
                let verts = face.vertices(n).unwrap();
                let k = verts.len() as i64;
                let center: Vec<Rational64> = (0..n)
                    .map(|i| Rational64::new(verts.iter().map(|w| w.values[i]).sum(), k))
                    .collect();
                assert!(in_hull(&center, n).unwrap(), "N={n} face {:?}", face);
                let (a, b) = (&verts[0].values, &verts[verts.len() - 1].values);
                let third: Vec<Rational64> = (0..n)
                    .map(|i| Rational64::new(a[i] + 2 * b[i], 3))
                    .collect();
                assert!(in_hull(&third, n).unwrap());
            }
        }
    }
}

#[test]
fn rim_bijection_exhaustive() {
    for n in 2..=10 {
        let all = enumerate_young(n).unwrap();
        let rims: BTreeSet<_> = all
            .iter()
            .map(|l| rim_of_partition(l, n).unwrap().sites().to_vec())
            .collect();
        assert_eq!(rims.len(), all.len());
        for l in &all {
            assert_eq!(
                &partition_of_rim(&rim_of_partition(l, n).unwrap()).unwrap(),
                l
            );
        }
    }
}

#[test]
fn points_outside_hull() {
    let n = 5;
    let f = vertex_direct(&"2,1".parse().unwrap(), n)
        .unwrap()
        .as_rational();
    let mut bumped = f.clone();
    bumped[0] += Rational64::from_integer(1);
    assert!(in_hull(&f, n).unwrap());
    assert!(!in_hull(&bumped, n).unwrap());
    let mut lowered = f;
    lowered[0] -= Rational64::from_integer(1);
    assert!(!in_hull(&lowered, n).unwrap());
}
