use proptest::prelude::*;

use schroder::knot::{partitions_of, Partition};
use schroder::series::{AQCoeff, QWindowSeries, XSeries};

fn qpoly() -> impl Strategy<Value = QWindowSeries> {
    (-3i64..4, prop::collection::vec(-4i64..5, 0..6))
        .prop_map(|(lo, c)| QWindowSeries::from_ints(lo, &c))
}

fn aq() -> impl Strategy<Value = AQCoeff> {
    prop::collection::vec((0i64..3, -2i64..4, -3i64..4), 0..5)
        .prop_map(|t| AQCoeff::from_terms(t.into_iter().map(|(a, q, c)| (2 * a, q, c))))
}

/// Series with constant term 1 and non-negative q-exponents.
fn unit_series(order: usize) -> impl Strategy<Value = XSeries> {
    prop::collection::vec(
        prop::collection::vec((0i64..2, 0i64..4, -2i64..3), 0..3),
        order - 1,
    )
    .prop_map(move |cs| {
        let mut coeffs = vec![AQCoeff::one()];
        coeffs.extend(
            cs.into_iter()
                .map(|t| AQCoeff::from_terms(t.into_iter().map(|(a, q, c)| (2 * a, q, c)))),
        );
        XSeries::from_coeffs(coeffs)
    })
}

/// `x E'(x) / E(x)`.
fn log_derivative(e: &XSeries) -> XSeries {
    let xd = e.map_coeffs(|l, c| c.scale(&(l as i64).into()));
    &xd * &e.x_invert().unwrap()
}

proptest! {
    #[test]
    fn ring_axioms(a in qpoly(), b in qpoly(), c in qpoly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &QWindowSeries::one(), a.clone());
    }

    #[test]
    fn aq_ring_axioms(a in aq(), b in aq(), c in aq()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn windowed_inverse(lo in -3i64..3, tail in prop::collection::vec(-3i64..4, 0..5), neg in any::<bool>(), w in 1i64..12) {
        let mut c = vec![if neg { -1 } else { 1 }];
        c.extend(tail);
        let f = QWindowSeries::from_ints(lo, &c).with_window(lo + w);
        let inv = f.invert_unit().unwrap();
        let prod = &f * &inv;
        prop_assert_eq!(prod.window_end(), Some(w));
        prop_assert_eq!(prod, QWindowSeries::one().with_window(w));
    }

    #[test]
    fn qshift_is_multiplicative(f in unit_series(4), g in unit_series(4), e in -3i64..5) {
        prop_assert_eq!((&f * &g).qshift(e), &f.qshift(e) * &g.qshift(e));
    }

    #[test]
    fn exp_of_sum_is_product(e1 in unit_series(5), e2 in unit_series(5)) {
        let (d1, d2) = (log_derivative(&e1), log_derivative(&e2));
        prop_assert_eq!(XSeries::x_exp_from_log_derivative(&d1).unwrap(), e1.clone());
        prop_assert_eq!(XSeries::x_exp_from_log_derivative(&(&d1 + &d2)).unwrap(), &e1 * &e2);
    }

    #[test]
    fn x_inverse_round_trip(e in unit_series(5)) {
        prop_assert_eq!(&e * &e.x_invert().unwrap(), XSeries::one(5));
    }

    #[test]
    fn kappa_negates_under_conjugation(n in 0u32..9, pick in any::<prop::sample::Index>()) {
        let parts = partitions_of(n);
        let lam: &Partition = pick.get(&parts);
        prop_assert_eq!(lam.kappa() + lam.conjugate().kappa(), 0);
        prop_assert_eq!(&lam.conjugate().conjugate(), lam);
    }
}
