//! Bernstein basis polynomials, the Bernstein operator, and moments of the
//! basis under the fermionic measure.
//!
//! Moments are produced by three routes: the forward binomial expansion in
//! the q-Euler numbers, the reflected expansion through `∫ (1 - x)^m`, and a
//! direct pairing of the expanded basis coefficients with the moment
//! sequence. The reflected route comes in two forms; see [`RhsForm`].

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::euler::identities::reflected_moment_closed;
use crate::euler::q_euler_numbers;
use crate::exactq::{binomial, binomial_rat, BigRat, QRatFn, XPoly};
use crate::verify::{IdentityId, IdentityReport, Instance, Sides};
use crate::BernsteinError;

/// `B_{k,n}(x) = C(n,k) x^k (1 - x)^{n-k}`, stored expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernsteinBasis {
    k: usize,
    n: usize,
    poly: XPoly<BigRat>,
}

impl BernsteinBasis {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &XPoly<BigRat> {
        &self.poly
    }
}

fn check_index(k: usize, n: usize) -> Result<(), BernsteinError> {
    if k > n {
        return Err(BernsteinError::IndexOutOfRange { k, n });
    }
    Ok(())
}

fn sign(k: usize) -> BigRat {
    if k.is_multiple_of(2) {
        BigRat::one()
    } else {
        -BigRat::one()
    }
}

pub fn bernstein_poly(k: usize, n: usize) -> Result<BernsteinBasis, BernsteinError> {
    check_index(k, n)?;
    let one_minus_x = XPoly::new(vec![BigRat::one(), -BigRat::one()]);
    let x_k = XPoly::x().pow(k as u32);
    let poly = (&x_k * &one_minus_x.pow((n - k) as u32)).scale(&binomial_rat(n, k));
    Ok(BernsteinBasis { k, n, poly })
}

/// `Σ_k f(k/n) B_{k,n}(x)` given the samples `f(0), f(1/n), ..., f(1)`.
pub fn bernstein_operator(
    samples: &[BigRat],
    n: usize,
    x: &BigRat,
) -> Result<BigRat, BernsteinError> {
    if samples.len() != n + 1 {
        return Err(BernsteinError::LengthMismatch {
            expected: n + 1,
            got: samples.len(),
        });
    }
    let one_minus_x = BigRat::one() - x;
    let value = samples
        .iter()
        .enumerate()
        .fold(BigRat::zero(), |acc, (k, f)| {
            let weight = binomial_rat(n, k)
                * num_traits::pow(x.clone(), k)
                * num_traits::pow(one_minus_x.clone(), n - k);
            acc + weight * f
        });
    Ok(value)
}

/// `C(n,k) Σ_{l=0}^{n-k} C(n-k,l) (-1)^l Ẽ_{k+l,q}`.
pub fn bernstein_moment_lhs(k: usize, n: usize) -> Result<QRatFn, BernsteinError> {
    check_index(k, n)?;
    let e = q_euler_numbers(n);
    let sum: QRatFn = (0..=n - k)
        .map(|l| e.get(k + l).scale(&(binomial_rat(n - k, l) * sign(l))))
        .sum();
    Ok(sum.scale_int(&binomial(n, k)))
}

/// Pair the expanded coefficients of `B_{k,n}` with the moments `Ẽ_{j,q}`.
pub fn bernstein_moment_direct(k: usize, n: usize) -> Result<QRatFn, BernsteinError> {
    let basis = bernstein_poly(k, n)?;
    let e = q_euler_numbers(n);
    Ok(basis
        .poly
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| e.get(j).scale(c))
        .sum())
}

/// Which form of the reflected moment expansion to use.
///
/// `Full` keeps `1 + q + q^2 Ẽ_{m,q^{-1}}` for each `∫ (1 - x)^m`.
/// `Reduced` drops the constant `1 + q`, which is only legitimate when the
/// alternating binomial sum over it vanishes, i.e. for `k ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RhsForm {
    Full,
    Reduced,
}

/// `C(n,k) Σ_{l=0}^{k} C(k,l) (-1)^{k+l} ∫ (1 - x)^{n-l}` in the chosen form. Needs `k < n`.
pub fn bernstein_moment_rhs(k: usize, n: usize, form: RhsForm) -> Result<QRatFn, BernsteinError> {
    if k >= n {
        return Err(BernsteinError::IndexOutOfRange { k, n });
    }
    let sum: QRatFn = (0..=k)
        .map(|l| {
            let m = n - l;
            let moment = match form {
                RhsForm::Full => reflected_moment_closed(m),
                RhsForm::Reduced => reduced_moment(m),
            };
            moment.scale(&(binomial_rat(k, l) * sign(k + l)))
        })
        .sum();
    Ok(sum.scale_int(&binomial(n, k)))
}

/// `q^2 Ẽ_{m,q^{-1}}`
fn reduced_moment(m: usize) -> QRatFn {
    &QRatFn::q_pow(2) * &q_euler_numbers(m).get(m).subst_q_inverse()
}

/// Both sides of the Bernstein moment identity with the `C(n,k)` factor removed:
/// `Σ_l C(n-k,l) (-1)^l Ẽ_{k+l,q}` against `Σ_l C(k,l) (-1)^{k+l} q^2 Ẽ_{n-l,q^{-1}}`.
pub fn moment_identity_sides(k: usize, n: usize) -> Result<Sides, BernsteinError> {
    let c = binomial_rat(n, k).recip();
    let left = bernstein_moment_lhs(k, n)?.scale(&c);
    let right = bernstein_moment_rhs(k, n, RhsForm::Reduced)?.scale(&c);
    Ok(Sides::function(left, right))
}

/// The `k = 0` specialisation as it is usually quoted:
/// `Σ_l C(n,l) (-1)^l Ẽ_{l,q}` against `q^2 Ẽ_{n,q^{-1}}`.
pub fn k0_remark_sides(n: usize) -> Sides {
    let left = bernstein_moment_lhs(0, n).expect("0 ≤ n");
    Sides::function(left, reduced_moment(n))
}

/// The `k = 0` row with the constant kept: `Σ_l C(n,l) (-1)^l Ẽ_{l,q}` against
/// `1 + q + q^2 Ẽ_{n,q^{-1}}`. Needs `n ≥ 1`.
pub fn k0_full_sides(n: usize) -> Result<Sides, BernsteinError> {
    let left = bernstein_moment_lhs(0, n)?;
    let right = bernstein_moment_rhs(0, n, RhsForm::Full)?;
    Ok(Sides::function(left, right))
}

/// Outcome of the Bernstein moment identity sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem8Report {
    /// `1 ≤ k < n ≤ n_max`.
    pub identity: IdentityReport,
    /// `k = 0` against the reduced right side.
    pub k0_remark: IdentityReport,
    /// `k = 0` against the full right side.
    pub k0_full: IdentityReport,
}

impl Theorem8Report {
    /// The identity holds for `k ≥ 1`, the reduced `k = 0` form fails
    /// everywhere and the full `k = 0` form holds everywhere.
    pub fn all_as_expected(&self) -> bool {
        self.identity.all_as_expected()
            && self.k0_remark.all_as_expected()
            && self.k0_full.all_as_expected()
    }

    pub fn reports(&self) -> [&IdentityReport; 3] {
        [&self.identity, &self.k0_remark, &self.k0_full]
    }
}

pub fn verify_theorem8(n_max: usize) -> Theorem8Report {
    let identity = IdentityReport::collect(
        IdentityId::Thm8,
        (1..=n_max).flat_map(|n| (1..n).map(move |k| (n, k))),
        |(n, k)| {
            let sides = moment_identity_sides(k, n).expect("1 ≤ k < n");
            Instance::judge(
                vec![("n", n as u64), ("k", k as u64)],
                IdentityId::Thm8,
                sides,
            )
        },
    );
    let k0_remark = IdentityReport::collect(IdentityId::Thm8K0Remark, 1..=n_max, |n| {
        Instance::judge(
            vec![("n", n as u64), ("k", 0)],
            IdentityId::Thm8K0Remark,
            k0_remark_sides(n),
        )
    });
    let k0_full = IdentityReport::collect(IdentityId::Thm8K0Full, 1..=n_max, |n| {
        Instance::judge(
            vec![("n", n as u64), ("k", 0)],
            IdentityId::Thm8K0Full,
            k0_full_sides(n).expect("n ≥ 1"),
        )
    });
    Theorem8Report {
        identity,
        k0_remark,
        k0_full,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{int, rat, QPoly};

    fn xp(c: &[i64]) -> XPoly<BigRat> {
        XPoly::new(c.iter().map(|&v| int(v)).collect())
    }

    fn frac(num: &[i64], den: &[i64]) -> QRatFn {
        QRatFn::new(QPoly::from_ints(num), QPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn small_bases() {
        assert_eq!(bernstein_poly(0, 1).unwrap().poly, xp(&[1, -1]));
        assert_eq!(bernstein_poly(1, 2).unwrap().poly, xp(&[0, 2, -2]));
        assert_eq!(
            bernstein_poly(3, 2).unwrap_err(),
            BernsteinError::IndexOutOfRange { k: 3, n: 2 }
        );
    }

    #[test]
    fn basis_invariants() {
        for n in 0..=10 {
            for k in 0..=n {
                let b = bernstein_poly(k, n).unwrap();
                assert_eq!(b.poly.degree(), Some(n));
                let at_one = b.poly.eval(&BigRat::one());
                assert_eq!(at_one, if k == n { int(1) } else { int(0) });
            }
        }
    }

    #[test]
    fn operator_examples() {
        let c = rat(5, 7);
        for n in 0..5 {
            let samples = vec![c.clone(); n + 1];
            assert_eq!(bernstein_operator(&samples, n, &rat(2, 9)).unwrap(), c);
        }
        let linear: Vec<BigRat> = (0..=3).map(|k| rat(k, 3)).collect();
        assert_eq!(
            bernstein_operator(&linear, 3, &rat(1, 2)).unwrap(),
            rat(1, 2)
        );
        // f(t) = t^2, n = 2: (0 + 2·(1/4)·(1/4) + 1·(1/4)) = 3/8
        let square: Vec<BigRat> = (0..=2).map(|k| rat(k * k, 4)).collect();
        assert_eq!(
            bernstein_operator(&square, 2, &rat(1, 2)).unwrap(),
            rat(3, 8)
        );
        assert_eq!(
            bernstein_operator(&square, 3, &rat(1, 2)).unwrap_err(),
            BernsteinError::LengthMismatch {
                expected: 4,
                got: 3
            }
        );
    }

    #[test]
    fn moment_examples() {
        let e = q_euler_numbers(4);
        assert_eq!(bernstein_moment_lhs(4, 4).unwrap(), *e.get(4));
        assert_eq!(bernstein_moment_lhs(0, 1).unwrap(), frac(&[1, 2], &[1, 1]));
        // -4q^2/(1+q)^2
        let expected = frac(&[0, 0, -4], &[1, 2, 1]);
        assert_eq!(bernstein_moment_lhs(1, 2).unwrap(), expected);
        assert_eq!(
            bernstein_moment_rhs(1, 2, RhsForm::Reduced).unwrap(),
            expected
        );
    }

    #[test]
    fn rhs_forms() {
        let full = bernstein_moment_rhs(0, 3, RhsForm::Full).unwrap();
        assert_eq!(full, reflected_moment_closed(3));
        for n in 2..=10 {
            for k in 1..n {
                assert_eq!(
                    bernstein_moment_rhs(k, n, RhsForm::Full).unwrap(),
                    bernstein_moment_rhs(k, n, RhsForm::Reduced).unwrap(),
                    "k={k} n={n}"
                );
            }
        }
        assert!(bernstein_moment_rhs(2, 2, RhsForm::Full).is_err());
    }

    #[test]
    fn theorem8_small_rows() {
        let s = moment_identity_sides(1, 2).unwrap();
        assert!(s.holds());
        let remark = k0_remark_sides(1);
        assert!(!remark.holds());
        assert!(k0_full_sides(1).unwrap().holds());
    }
}
