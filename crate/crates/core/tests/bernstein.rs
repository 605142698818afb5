use num_traits::{One, Zero};
use qeuler::bernstein::{
    bernstein_moment_direct, bernstein_moment_lhs, bernstein_moment_rhs, bernstein_operator,
    bernstein_poly, verify_theorem8, RhsForm,
};
use qeuler::exactq::{rat, BigRat, XPoly};
use qeuler::padic::{fermionic_integral_partial, PAdicNum, QChoice, Valuation};
use qeuler::BernsteinError;

#[test]
fn partition_of_unity() {
    for n in 0..=12 {
        let sum = (0..=n).fold(XPoly::<BigRat>::zero(), |acc, k| {
            &acc + bernstein_poly(k, n).unwrap().poly()
        });
        assert_eq!(sum, XPoly::one(), "n={n}");
    }
}

#[test]
fn reflection_swaps_k_and_n_minus_k() {
    for n in 0..=12 {
        for k in 0..=n {
            let b = bernstein_poly(k, n).unwrap();
            assert_eq!(b.poly().degree(), Some(n));
            assert_eq!(
                &b.poly().reflect(),
                bernstein_poly(n - k, n).unwrap().poly(),
                "n={n} k={k}"
            );
            let at_one = b.poly().eval(&BigRat::one());
            assert_eq!(
                at_one,
                if k == n {
                    BigRat::one()
                } else {
                    BigRat::zero()
                }
            );
        }
    }
}

#[test]
fn out_of_range_index() {
    assert_eq!(
        bernstein_poly(3, 2).unwrap_err(),
        BernsteinError::IndexOutOfRange { k: 3, n: 2 }
    );
    assert!(bernstein_moment_rhs(2, 2, RhsForm::Full).is_err());
    assert_eq!(
        bernstein_operator(&[BigRat::one()], 2, &rat(1, 2)).unwrap_err(),
        BernsteinError::LengthMismatch {
            expected: 3,
            got: 1
        }
    );
}

#[test]
fn operator_reproduces_linear_functions() {
    for n in 1..=6i64 {
        let samples: Vec<BigRat> = (0..=n).map(|k| rat(k, n)).collect();
        for x in [rat(0, 1), rat(1, 3), rat(5, 7), rat(1, 1)] {
            assert_eq!(bernstein_operator(&samples, n as usize, &x).unwrap(), x);
        }
    }
}

#[test]
fn moment_routes_agree() {
    for n in 0..=8 {
        for k in 0..=n {
            assert_eq!(
                bernstein_moment_lhs(k, n).unwrap(),
                bernstein_moment_direct(k, n).unwrap(),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn full_and_reduced_agree_away_from_k0() {
    for n in 2..=10 {
        for k in 1..n {
            assert_eq!(
                bernstein_moment_rhs(k, n, RhsForm::Full).unwrap(),
                bernstein_moment_rhs(k, n, RhsForm::Reduced).unwrap(),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn identity_and_k0_rows_up_to_twelve() {
    let report = verify_theorem8(12);
    assert_eq!(report.identity.instances.len(), 66);
    assert!(report.all_as_expected());
    assert_eq!(report.k0_remark.count(qeuler::verify::Verdict::Fail), 12);
    assert_eq!(report.k0_full.count(qeuler::verify::Verdict::Pass), 12);
}

/// Partial fermionic integrals of each basis polynomial approach the exact moment.
#[test]
fn padic_partial_integrals_approach_exact_moments() {
    let qc = QChoice::with_offset(3, 1, 12).unwrap();
    for n in 0..=4 {
        for k in 0..=n {
            let b = bernstein_poly(k, n).unwrap();
            let exact = bernstein_moment_lhs(k, n).unwrap().eval(qc.q()).unwrap();
            let target = PAdicNum::from_rational(&exact, 3, 12).unwrap();
            let defects: Vec<Valuation> = (1..=5)
                .map(|level| {
                    let partial = fermionic_integral_partial(b.poly(), &qc, level).unwrap();
                    partial.try_sub(&target).unwrap().valuation()
                })
                .collect();
            if n == 0 {
                assert!(defects.iter().all(|d| *d == Valuation::AtLeast(12)));
                continue;
            }
            let (first, last) = (defects[0].bound(), defects[4].bound());
            assert!(last >= 5 && last > first, "n={n} k={k}: {defects:?}");
        }
    }
}
