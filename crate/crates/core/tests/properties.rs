mod common;

use proptest::prelude::*;
use rand::Rng;

use common::*;
use tyk::drinfeld::{
    associate, classify_tuple, classify_weight, poly2_reduce, psi_twist, psi_twist_weight,
    restrict_tuple, restrict_weight, synthesize, tilde, untilde, DrinfeldTuple, HighestWeight, SymPoly,
};
use tyk::exactalg::{q, rational_roots, RatFunc, Rational, RootMultiset, UniPoly};
use tyk::tensorrep::{Algebra, Family, SymmetricPair};

fn pairs() -> Vec<SymmetricPair> {
    vec![
        pair(Family::BI, 3, 1),
        pair(Family::BI, 5, 1),
        pair(Family::BI, 7, 3),
        pair(Family::CII, 6, 2),
        pair(Family::DIa, 6, 2),
        pair(Family::DIa, 8, 4),
        bcd0(5, Algebra::So),
        bcd0(6, Algebra::Sp),
    ]
}

fn bi1() -> Vec<SymmetricPair> {
    vec![pair(Family::BI, 5, 1), pair(Family::BI, 7, 1)]
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 48, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn synthesize_then_associate_is_identity(seed in any::<u64>(), i in 0usize..8) {
        let p = &pairs()[i];
        let t = random_tuple(&mut rng(seed), p, 6);
        let w = synthesize(p, &t).unwrap();
        prop_assert_eq!(associate(&w).unwrap(), t);
    }

    #[test]
    fn associate_ignores_nu_twists(seed in any::<u64>(), i in 0usize..8) {
        let p = &pairs()[i];
        let mut r = rng(seed);
        let t = random_tuple(&mut r, p, 4);
        let w = synthesize(p, &t).unwrap();
        let g = random_even(&mut r);
        let k = p.kappa();
        let twisted = w.scale_by(&g.shift(&-&(&k / &Rational::int(2))));
        prop_assert_eq!(associate(&twisted).unwrap(), t);
    }

    #[test]
    fn weight_and_tuple_verdicts_agree(seed in any::<u64>(), i in 0usize..8) {
        let p = &pairs()[i];
        let t = random_tuple(&mut rng(seed), p, 6);
        let w = synthesize(p, &t).unwrap();
        let a = classify_tuple(p, &t).unwrap();
        let b = classify_weight(&w).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.tuple, b.tuple);
    }

    #[test]
    fn psi_twist_is_an_involution(seed in any::<u64>(), i in 0usize..2) {
        let p = &bi1()[i];
        let t = admissible(&mut rng(seed), p);
        let s = psi_twist(p, &t).unwrap();
        prop_assert_eq!(s.alpha.clone().unwrap(), Rational::new(p.big_n as i64, 2) - t.alpha.clone().unwrap());
        prop_assert_eq!(psi_twist(p, &s).unwrap(), t.clone());
        let w = synthesize(p, &t).unwrap();
        prop_assert_eq!(associate(&psi_twist_weight(&w).unwrap()).unwrap(), s);
    }

    #[test]
    fn restriction_commutes_with_associate(seed in any::<u64>(), i in 0usize..8) {
        let p = &pairs()[i];
        let mut r = rng(seed);
        prop_assume!(p.max_restriction() >= 1);
        let m = r.gen_range(1..=p.max_restriction());
        let t = random_tuple(&mut r, p, 4);
        let w = synthesize(p, &t).unwrap();
        let (red, rt) = restrict_tuple(p, &t, m).unwrap();
        let rw = restrict_weight(&w, m).unwrap();
        prop_assert_eq!(&rw.pair, &red);
        prop_assert_eq!(associate(&rw).unwrap(), rt);
    }

    #[test]
    fn json_round_trips(seed in any::<u64>(), i in 0usize..8) {
        let p = &pairs()[i];
        let t = random_tuple(&mut rng(seed), p, 6);
        let s = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(&serde_json::from_str::<DrinfeldTuple>(&s).unwrap(), &t);
        let w = synthesize(p, &t).unwrap();
        let s = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<HighestWeight>(&s).unwrap(), w);
    }

    #[test]
    fn tilde_round_trips_on_weights(seed in any::<u64>(), i in 0usize..8) {
        let p = &pairs()[i];
        let t = random_tuple(&mut rng(seed), p, 6);
        let w = synthesize(p, &t).unwrap();
        prop_assert_eq!(untilde(&tilde(&w)), w);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn poly2_reduce_divisor_formula(seed in any::<u64>(), mi in 0usize..3) {
        let mut r = rng(seed);
        let c = lattice(&mut r, 2, -3, 3);
        let m = [q(1, 2), q(1, 1), q(2, 1)][mi].clone();
        let alpha = lattice(&mut r, 2, -4, 4);
        let extra = r.gen_range(0..=2);
        let mut roots = random_roots(&mut r, &c, extra);
        for k in 0..r.gen_range(0..=3) {
            let x = &alpha - &(&m * &Rational::int(k));
            roots.push(&c - &x);
            roots.push(x);
        }
        let p = SymPoly::from_root_list(&roots, c.clone()).unwrap();
        let (ell, pp) = poly2_reduce(&p, &alpha, &m);
        prop_assert!(!pp.has_root(&(&alpha - &(&m * &Rational::int(ell as i64)))));
        prop_assert_eq!(pp.center(), &c);
        prop_assert_eq!(pp.degree() + 2 * ell, p.degree());
    }

    #[test]
    fn rational_roots_recover_products(rs in proptest::collection::vec((-12i64..=12, 1i64..=6), 0..7)) {
        let roots: Vec<Rational> = rs.iter().map(|&(a, b)| q(a, b)).collect();
        let p = UniPoly::from_root_list(&roots);
        let mut want = RootMultiset::new();
        for x in roots {
            *want.entry(x).or_default() += 1;
        }
        prop_assert_eq!(rational_roots(&p).unwrap(), want);
    }

    #[test]
    fn polynomial_division_is_exact(
        a in proptest::collection::vec(-6i64..=6, 1..6),
        b in proptest::collection::vec(-6i64..=6, 1..5),
    ) {
        let pa = UniPoly::new(a.into_iter().map(Rational::int).collect());
        let pb = UniPoly::new(b.into_iter().map(Rational::int).collect());
        prop_assume!(!pb.is_zero());
        let prod = &pa * &pb;
        prop_assert_eq!(prod.div_exact(&pb), pa.clone());
        let (quo, rem) = pa.div_rem(&pb);
        prop_assert_eq!(&(&quo * &pb) + &rem, pa.clone());
        prop_assert!(rem.degree() < pb.degree());
        let g = UniPoly::gcd(&prod, &pb);
        prop_assert!(g.divides(&prod) && g.divides(&pb));
    }

    #[test]
    fn ratfunc_shift_and_reflect_compose(
        n in proptest::collection::vec((-8i64..=8, 1i64..=3), 0..4),
        a in (-6i64..=6, 1i64..=4),
        l in (-6i64..=6, 1i64..=4),
    ) {
        let p = UniPoly::from_root_list(&n.iter().map(|&(x, y)| q(x, y)).collect::<Vec<_>>());
        let f = RatFunc::new(p.shift(&Rational::one()), UniPoly::linear_root(&q(7, 3)));
        let (a, l) = (q(a.0, a.1), q(l.0, l.1));
        prop_assert_eq!(f.shift(&a).shift(&-&a), f.clone());
        prop_assert_eq!(f.reflect(&l).reflect(&l), f);
    }
}

#[test]
fn pair_ids_parse_back() {
    for p in all_pairs(9) {
        let back: SymmetricPair = p.id().parse().unwrap();
        assert_eq!(back, p, "{}", p.id());
    }
}
