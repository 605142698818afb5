use num_bigint::BigInt;
use proptest::prelude::*;
use qeuler::exactq::BigRat;
use qeuler::padic::{valuation_of_rational, PAdicNum, Valuation};

const K: i64 = 10;

/// A rational with denominator prime to `p` and a chosen amount of `p` in the numerator.
fn unit_rational(p: u64) -> impl Strategy<Value = BigRat> {
    (-2000i64..=2000, 1i64..=60, 0u32..=3).prop_filter_map(
        "denominator prime to p",
        move |(n, d, k)| {
            (d % p as i64 != 0).then(|| {
                let n = BigInt::from(n) * BigInt::from(p).pow(k);
                BigRat::new(n, BigInt::from(d))
            })
        },
    )
}

fn embed(r: &BigRat, p: u64) -> PAdicNum {
    PAdicNum::from_rational(r, p, K).unwrap()
}

/// Equal up to the precision both sides carry.
fn agree(a: &PAdicNum, b: &PAdicNum) -> bool {
    a.try_sub(b).unwrap().is_zero()
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 11])
}

fn triple() -> impl Strategy<Value = (u64, BigRat, BigRat, BigRat)> {
    prime().prop_flat_map(|p| {
        (
            Just(p),
            unit_rational(p),
            unit_rational(p),
            unit_rational(p),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_laws((p, a, b, c) in triple()) {
        let (a, b, c) = (embed(&a, p), embed(&b, p), embed(&c, p));
        let ab = a.try_add(&b).unwrap();
        prop_assert!(agree(&ab.try_add(&c).unwrap(), &a.try_add(&b.try_add(&c).unwrap()).unwrap()));
        prop_assert!(agree(&ab, &b.try_add(&a).unwrap()));
        let m = a.try_mul(&b).unwrap();
        prop_assert!(agree(&m.try_mul(&c).unwrap(), &a.try_mul(&b.try_mul(&c).unwrap()).unwrap()));
        prop_assert!(agree(&m, &b.try_mul(&a).unwrap()));
        let lhs = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
        let rhs = m.try_add(&a.try_mul(&c).unwrap()).unwrap();
        prop_assert!(agree(&lhs, &rhs));
        prop_assert!(a.try_sub(&a).unwrap().is_zero());
    }

    #[test]
    fn valuation_is_additive((p, a, b, _) in triple()) {
        let (x, y) = (embed(&a, p), embed(&b, p));
        if let (Valuation::Exact(va), Valuation::Exact(vb)) = (x.valuation(), y.valuation()) {
            prop_assert_eq!(x.try_mul(&y).unwrap().valuation(), Valuation::Exact(va + vb));
        }
    }

    #[test]
    fn ultrametric((p, a, b, _) in triple()) {
        let (x, y) = (embed(&a, p), embed(&b, p));
        let s = x.try_add(&y).unwrap();
        prop_assert!(s.valuation().bound() >= x.valuation().bound().min(y.valuation().bound()));
        prop_assert!(s.norm() <= x.norm().max(y.norm()));
    }

    #[test]
    fn embedding_is_a_ring_homomorphism((p, a, b, _) in triple()) {
        let (x, y) = (embed(&a, p), embed(&b, p));
        prop_assert!(agree(&embed(&(&a + &b), p), &x.try_add(&y).unwrap()));
        prop_assert!(agree(&embed(&(&a - &b), p), &x.try_sub(&y).unwrap()));
        prop_assert!(agree(&embed(&(&a * &b), p), &x.try_mul(&y).unwrap()));
        if valuation_of_rational(&b, p) == Some(0) {
            prop_assert!(agree(&embed(&(&a / &b), p), &x.try_div(&y).unwrap()));
        }
    }

    #[test]
    fn valuation_matches_the_rational((p, a, _, _) in triple()) {
        let x = embed(&a, p);
        match valuation_of_rational(&a, p) {
            Some(v) if v < K => prop_assert_eq!(x.valuation(), Valuation::Exact(v)),
            _ => prop_assert_eq!(x.valuation(), Valuation::AtLeast(K)),
        }
    }
}
