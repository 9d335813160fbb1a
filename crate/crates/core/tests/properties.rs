use proptest::prelude::*;

use hss_stab::combinatorics::{binomial, Partitions, SignedSequences};
use hss_stab::stability::{degree_window, langer_bound, q3_surface_invariants, small_dimension_verdict};
use hss_stab::{
    enumerate_partitions, enumerate_signed, serre_dual, CohomologyQuery, EqualityCase, HssSpace, Oracle, Outcome,
    Partition, Rational, Resolution, Series, SignedSeries, Status, Verifier,
};

fn classical() -> impl Strategy<Value = HssSpace> {
    prop_oneof![
        (1u32..=7).prop_map(|n| HssSpace::projective(n).unwrap()),
        (3u32..=8).prop_map(|n| HssSpace::quadric(n).unwrap()),
        (2u32..=4, 2u32..=4).prop_map(|(a, b)| HssSpace::grassmannian(a, b).unwrap()),
        (3u32..=5).prop_map(|n| HssSpace::lagrangian(n).unwrap()),
        (5u32..=6).prop_map(|n| HssSpace::spinor(n).unwrap()),
    ]
}

fn query() -> impl Strategy<Value = CohomologyQuery> {
    (classical(), any::<u32>(), any::<u32>(), -12i64..=12).prop_map(|(s, p, q, l)| {
        let n = s.dimension() + 1;
        CohomologyQuery::new(s, p % n, q % n, l).unwrap()
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    (1u32..=6, 1u32..=6).prop_flat_map(|(a, b)| {
        let total = Partitions::count(a, b);
        (0..total).prop_map(move |r| Partitions::range(a, b, r, r + 1).next().unwrap())
    })
}

fn status(q: &CohomologyQuery) -> Status {
    Oracle::with_witness_cap(0).nonvanishing(q).status
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn index_over_dimension(s in classical()) {
        let (n, idx) = (s.dimension(), s.index());
        prop_assert_eq!(s.slope_threshold(n), Rational::from_integer(idx.into()));
        if s.is_projective() {
            prop_assert_eq!(idx, n + 1);
        } else {
            prop_assert!(idx <= n);
            let quadric_like = matches!(s.series(), Series::Quadric { .. } | Series::Grassmannian { a: 2, b: 2 });
            prop_assert_eq!(idx == n, quadric_like);
        }
        let again: HssSpace = s.key().parse().unwrap();
        prop_assert_eq!(again, s);
    }

    #[test]
    fn hooks_count_and_transpose(lam in partition(), l in 0u32..14) {
        let h = lam.hooks();
        prop_assert_eq!(h.len() as u32, lam.weight());
        prop_assert!(lam.degree(l) <= lam.weight());
        let t = lam.transpose();
        prop_assert_eq!(t.hooks(), h);
        prop_assert_eq!(t.is_admissible(l), lam.is_admissible(l));
        prop_assert_eq!(t.degree(l), lam.degree(l));
        if l >= lam.rows() + lam.cols() {
            prop_assert!(lam.is_admissible(l));
            prop_assert_eq!(lam.degree(l), 0);
        }
        prop_assert_eq!(Partitions::range(lam.rows(), lam.cols(), lam.rank(), lam.rank() + 1).next(), Some(lam));
    }

    #[test]
    fn enumeration_counts(a in 0u32..=6, b in 0u32..=6, n in 1u32..=9, pieces in 1u64..=9) {
        prop_assert_eq!(enumerate_partitions(a, b).count() as u64, binomial(a + b, a));
        let whole: Vec<_> = enumerate_partitions(a, b).collect();
        let chunked: Vec<_> = Partitions::chunks(a, b, pieces).into_iter().flatten().collect();
        prop_assert_eq!(whole, chunked);
        prop_assert_eq!(enumerate_signed(SignedSeries::C, n).count() as u64, 1u64 << n);
        prop_assert_eq!(enumerate_signed(SignedSeries::D, n).count() as u64, 1u64 << (n - 1));
        let whole: Vec<_> = enumerate_signed(SignedSeries::D, n).collect();
        let chunked: Vec<_> = SignedSequences::chunks(SignedSeries::D, n, pieces).into_iter().flatten().collect();
        prop_assert_eq!(whole, chunked);
    }

    #[test]
    fn serre_duality_is_an_involution(q in query()) {
        let d = serre_dual(&q);
        prop_assert_eq!(&serre_dual(&d), &q);
        prop_assert_eq!(status(&q), status(&d));
    }

    #[test]
    fn hodge_diagonal(s in classical(), p in 0u32..=10, q in 0u32..=10) {
        let n = s.dimension();
        let query = CohomologyQuery::new(s, p % (n + 1), q % (n + 1), 0).unwrap();
        prop_assert_eq!(status(&query) == Status::Nonzero, query.p() == query.q());
    }

    #[test]
    fn witnesses_track_status(q in query()) {
        let a = Oracle::default().nonvanishing(&q);
        let combinatorial = !matches!(q.space().series(), Series::Projective { .. } | Series::Quadric { .. });
        prop_assert_eq!(!a.witnesses.is_empty(), a.status == Status::Nonzero && combinatorial);
        prop_assert!(a.witnesses.len() <= 16);
        prop_assert!(a.via_duality || a.witnesses.len() as u64 <= a.witness_count);
    }

    #[test]
    fn grassmannian_swap(a in 2u32..=4, b in 2u32..=4, p in 0u32..=16, q in 0u32..=16, l in -8i64..=8) {
        let (x, y) = (HssSpace::grassmannian(a, b).unwrap(), HssSpace::grassmannian(b, a).unwrap());
        let n = a * b + 1;
        let qx = CohomologyQuery::new(x, p % n, q % n, l).unwrap();
        let qy = CohomologyQuery::new(y, p % n, q % n, l).unwrap();
        prop_assert_eq!(status(&qx), status(&qy));
    }

    #[test]
    fn upper_bound(q in query()) {
        if q.l() > 0 && q.q() > 0 && status(&q) == Status::Nonzero {
            prop_assert!(q.l() + i64::from(q.q()) <= i64::from(q.p()));
        }
    }

    #[test]
    fn lower_bound(q in query()) {
        let s = q.space();
        let (n, idx) = (i64::from(s.dimension()), i64::from(s.index()));
        if i64::from(q.q()) < n && status(&q) == Status::Nonzero {
            let lhs = (q.l() + i64::from(q.q())) * n;
            let rhs = i64::from(q.p()) * idx;
            prop_assert!(lhs >= rhs, "{}", q);
            // quadrics also meet the bound on the line q = n - p, l = 2p - n
            let quadric_line = s.is_quadric_like() && i64::from(q.q()) == n - i64::from(q.p());
            if lhs == rhs && !quadric_line {
                prop_assert!(EqualityCase::classify(s, q.p(), q.q(), q.l()).is_some(), "{}", q);
            }
        }
    }

    #[test]
    fn table_matches_pointwise(s in classical(), l in -6i64..=6) {
        let t = Oracle::default().table(&s, l).unwrap();
        let n = s.dimension();
        for p in 0..=n {
            for q in 0..=n {
                let query = CohomologyQuery::new(s.clone(), p, q, l).unwrap();
                prop_assert_eq!(t.contains_key(&(p, q)), status(&query) == Status::Nonzero);
            }
        }
    }

    #[test]
    fn lagrangian_twist_one(n in 3u32..=10) {
        for x in enumerate_signed(SignedSeries::C, n) {
            if let Some(q) = x.degree_at(1) {
                let t = x.entries().iter().filter(|&&e| e > 1).count() as u32;
                prop_assert_eq!(q, t * t);
                // p = t(t+1), twice the value sometimes quoted
                prop_assert_eq!(x.weight(), t * (t + 1));
            }
        }
    }

    #[test]
    fn spinor_twist_one(n in 5u32..=10) {
        let admissible: Vec<_> = enumerate_signed(SignedSeries::D, n).filter(|x| x.degree_at(1).is_some()).collect();
        prop_assert_eq!(admissible.len(), 1);
        let x = &admissible[0];
        prop_assert_eq!(x.weight(), 0);
        prop_assert_eq!(x.degree_at(1), Some(0));
        prop_assert!(x.entries().iter().enumerate().all(|(i, &e)| e == -(i as i32)));
    }

    #[test]
    fn koszul_shape(mut degrees in prop::collection::vec(1u32..=5, 1..=4), seed in any::<u64>()) {
        let r = Resolution::koszul(&degrees).unwrap();
        let c = degrees.len();
        prop_assert_eq!(r.length(), c);
        prop_assert_eq!(r.term(0), &[0][..]);
        for i in 0..=c {
            prop_assert_eq!(r.term(i).len() as u64, binomial(c as u32, i as u32));
        }
        prop_assert_eq!(r.euler_rank(), 0);
        prop_assert_eq!(r.is_strict(), degrees.iter().all(|&d| d >= 2));
        let k = (seed as usize) % c;
        degrees.rotate_left(k);
        degrees.reverse();
        prop_assert_eq!(Resolution::koszul(&degrees).unwrap(), r.clone());
        let text = r.to_string();
        prop_assert_eq!(text.parse::<Resolution>().unwrap(), r);
    }

    #[test]
    fn window_soundness(s in classical(), p in 1u32..=20) {
        let n = s.dimension();
        let p = 1 + p % n;
        let (lo, hi) = degree_window(&s, p);
        if s.is_projective() {
            prop_assert_eq!((lo, hi), (i64::from(p), i64::from(p * (n + 1) / n)));
        } else {
            prop_assert_eq!(lo > hi, (p * s.index()) % n != 0);
        }
    }

    #[test]
    fn surfaces(d in 1u32..=100_000) {
        let s = q3_surface_invariants(d).unwrap();
        prop_assert_eq!(s.b2, s.chi_top - 2);
        prop_assert_eq!(s.h11, s.b2 - 2 * s.h2_structure);
        prop_assert!(s.h2_structure >= 0 && s.h11 <= s.b2 && s.h11 > 0);
    }

    #[test]
    fn q3_above_langer(d in 9u32..=500) {
        let q3 = HssSpace::quadric(3).unwrap();
        prop_assert!(Rational::from_integer(d.into()) > langer_bound(&q3).unwrap());
        prop_assert_eq!(small_dimension_verdict(&q3, d).unwrap().outcome, Outcome::CertifiedStable);
    }
}

#[test]
fn sweeps_independent_of_workers() {
    let one = Verifier::with_workers(1);
    let many = Verifier::with_workers(5);
    let pairs = [
        (one.spinor_upper(7, 12).unwrap(), many.spinor_upper(7, 12).unwrap()),
        (one.lagrangian_lower(7, 10).unwrap(), many.lagrangian_lower(7, 10).unwrap()),
        (one.grassmannian_upper(5, 4, 2).unwrap(), many.grassmannian_upper(5, 4, 2).unwrap()),
        (one.serre_duality(5).unwrap(), many.serre_duality(5).unwrap()),
    ];
    for (a, b) in pairs {
        assert_eq!(a.to_json(false), b.to_json(false));
    }
}
