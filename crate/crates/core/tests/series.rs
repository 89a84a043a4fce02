use edgecontract_core::exactmath::{int, rat, Rational, TruncatedSeries, Vars};
use proptest::prelude::*;

const N: u32 = 7;

fn coeff() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| rat(a, b))
}

fn uni() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(coeff(), 0..=N as usize + 1).prop_map(|c| TruncatedSeries::from_dense(&c, N))
}

fn uni_without_constant() -> impl Strategy<Value = TruncatedSeries> {
    uni().prop_map(|f| f.sub(&TruncatedSeries::constant(Vars::One, f.constant_term(), N)).unwrap())
}

fn bi() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(((0u32..=N, 0u32..=N), coeff()), 0..12).prop_map(|t| {
        TruncatedSeries::from_terms(Vars::Two, N, t.into_iter().filter(|((a, b), _)| a + b <= N).map(|((a, b), c)| ([a, b], c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_univariate(a in uni(), b in uni(), c in uni()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn ring_axioms_bivariate(a in bi(), b in bi(), c in bi()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.swap_vars().swap_vars(), a.clone());
        prop_assert_eq!(a.mul(&b).unwrap().swap_vars(), a.swap_vars().mul(&b.swap_vars()).unwrap());
    }

    #[test]
    fn exp_inverts_log1p(f in uni_without_constant()) {
        let back = f.log1p().unwrap().exp().unwrap();
        prop_assert_eq!(back, f.add(&TruncatedSeries::one(Vars::One, N)).unwrap());
    }

    #[test]
    fn bivariate_exp_inverts_log1p(f in bi()) {
        let f = f.sub(&TruncatedSeries::constant(Vars::Two, f.constant_term(), N)).unwrap();
        let back = f.log1p().unwrap().exp().unwrap();
        prop_assert_eq!(back, f.add(&TruncatedSeries::one(Vars::Two, N)).unwrap());
    }

    #[test]
    fn reciprocal_is_inverse(f in uni(), c in 1i64..5) {
        let f = f.add(&TruncatedSeries::constant(Vars::One, int(c) - f.constant_term(), N)).unwrap();
        prop_assert_eq!(f.mul(&f.reciprocal().unwrap()).unwrap(), TruncatedSeries::one(Vars::One, N));
    }

    #[test]
    fn composition_is_associative(f in uni(), g in uni_without_constant(), h in uni_without_constant()) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn lagrange_solution_satisfies_its_equation(f in uni(), c in 1i64..4) {
        let f = f.add(&TruncatedSeries::constant(Vars::One, int(c) - f.constant_term(), N)).unwrap();
        let y = TruncatedSeries::lagrange_invert(&f, N).unwrap();
        // y = x f(y)
        let rhs = TruncatedSeries::x(N).mul(&f.compose(&y).unwrap()).unwrap();
        prop_assert_eq!(y.clone(), rhs);
        prop_assert!(y.constant_term() == int(0));
    }

    #[test]
    fn divided_difference_is_symmetric(f in uni()) {
        let f = TruncatedSeries::from_dense(&(0..=N).map(|k| f.at(k)).collect::<Vec<_>>(), N);
        let dd = TruncatedSeries::divided_difference(&f, N - 1).unwrap();
        prop_assert_eq!(dd.swap_vars(), dd.clone());
        // on the diagonal the divided difference is the derivative
        for k in 0..N - 1 {
            let diag: Rational = (0..=k).map(|a| dd.coeff([a, k - a])).sum();
            prop_assert_eq!(diag, f.derivative().unwrap().at(k));
        }
    }

    #[test]
    fn euler_operator_matches_derivative(f in uni()) {
        let via_derivative = TruncatedSeries::x(N).mul(&f.derivative().unwrap()).unwrap();
        prop_assert_eq!(f.euler().truncate(N - 1), via_derivative.truncate(N - 1));
    }
}
