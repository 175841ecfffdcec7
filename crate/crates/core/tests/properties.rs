use hopfyb::linalg::Matrix;
use hopfyb::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly(coeffs: &[i64]) -> Scalar {
    coeffs.iter().rev().fold(Scalar::zero(), |acc, c| {
        acc * Scalar::param() + Scalar::from_int(*c)
    })
}

prop_compose! {
    fn scalar()(num in prop::collection::vec(-6i64..=6, 0..4),
                den in prop::collection::vec(-4i64..=4, 1..3),
                lead in prop_oneof![-3i64..=-1, 1i64..=3]) -> Scalar {
        let mut den = den;
        den.push(lead);
        poly(&num).checked_div(&poly(&den)).expect("nonzero denominator")
    }
}

prop_compose! {
    fn constant()(n in -9i64..=9, d in 1i64..=5) -> Scalar {
        Scalar::from_rational(&BigRational::new(BigInt::from(n), BigInt::from(d)))
    }
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(constant(), rows * cols)
        .prop_map(move |v| Matrix::from_rows(v.chunks(cols).map(|c| c.to_vec()).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn printing_round_trips(x in scalar()) {
        let back = Scalar::parse(&x.to_string()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in scalar(), y in scalar(), v in -20i64..=20) {
        let v = BigRational::from_integer(BigInt::from(v));
        if let (Ok(a), Ok(b)) = (x.eval(&v), y.eval(&v)) {
            prop_assert_eq!((&x * &y).eval(&v).unwrap(), &a * &b);
            prop_assert_eq!((&x + &y).eval(&v).unwrap(), a + b);
        }
    }

    #[test]
    fn kron_mixed_product(a in matrix(2, 3), b in matrix(2, 2), c in matrix(3, 2), d in matrix(2, 1)) {
        let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_is_two_sided(m in matrix(3, 3)) {
        if let Ok(inv) = m.inverse() {
            prop_assert!(inv.mul(&m).unwrap().is_identity());
            prop_assert!(m.mul(&inv).unwrap().is_identity());
        } else {
            prop_assert!(m.rank() < 3);
        }
    }
}
