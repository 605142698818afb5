//! Left and right sides of each identity, built independently.
//!
//! Every function returns the pair unevaluated; deciding equality is the
//! caller's job (see [`crate::verify`]).

use num_traits::{One, Zero};

use crate::exactq::{binomial_rat, int_pow, q_integer_fn, BigRat, QRatFn};
use crate::verify::Sides;

use super::numbers::{
    classical_euler_numbers, frobenius_numbers, q_euler_numbers, weighted_by_closed_form,
    weighted_by_recurrence,
};
use super::polynomial::{frobenius_polynomial, minus_q_inverse, q_euler_polynomial};

fn sign(k: usize) -> BigRat {
    if k.is_multiple_of(2) {
        BigRat::one()
    } else {
        -BigRat::one()
    }
}

/// `Ẽ_{n,q}` against `H_n(-q^{-1})`.
pub fn euler_equals_frobenius(n: usize) -> Sides {
    let left = q_euler_numbers(n).get(n).clone();
    let right = frobenius_numbers(&minus_q_inverse(), n)
        .expect("-1/q is not 1")
        .get(n)
        .clone();
    Sides::function(left, right)
}

/// `Ẽ_{n,q}(x)` against `H_n(-q^{-1}, x)`.
pub fn euler_poly_equals_frobenius_poly(n: usize) -> Sides {
    let left = q_euler_polynomial(n);
    let right = frobenius_polynomial(&minus_q_inverse(), n).expect("-1/q is not 1");
    Sides::polynomial(left, right)
}

/// For odd `n`: `q^n H_m(-q^{-1}, n) + H_m(-q^{-1})` against
/// `[2]_q Σ_{l<n} (-1)^l l^m q^l`.
pub fn odd_shift_sum(n: usize, m: usize) -> Sides {
    let u = minus_q_inverse();
    let poly = frobenius_polynomial(&u, m).expect("-1/q is not 1");
    let h_m = frobenius_numbers(&u, m)
        .expect("-1/q is not 1")
        .get(m)
        .clone();
    let left = &(&QRatFn::q_pow(n as i64) * &poly.eval_int(n as i64)) + &h_m;
    let sum: QRatFn = (0..n)
        .map(|l| {
            let c = sign(l) * int_pow(l as i64, m as u32);
            QRatFn::q_pow(l as i64).scale(&c)
        })
        .sum();
    let right = &q_integer_fn(2) * &sum;
    Sides::function(left, right)
}

/// `q Ẽ_{n,q}(1) + Ẽ_{n,q}` against `[2]_q` at `n = 0` and `0` otherwise.
pub fn unit_shift(n: usize) -> Sides {
    let e = q_euler_numbers(n);
    let at_one = q_euler_polynomial(n).eval(&QRatFn::one());
    let left = &(&QRatFn::q() * &at_one) + e.get(n);
    let right = if n == 0 {
        q_integer_fn(2)
    } else {
        QRatFn::zero()
    };
    Sides::function(left, right)
}

/// `q^2 Ẽ_{n,q}(2)` against `q + q^2 + Ẽ_{n,q}`; stated for `n ≥ 1`.
pub fn double_shift(n: usize) -> Sides {
    let e = q_euler_numbers(n);
    let at_two = q_euler_polynomial(n).eval(&QRatFn::from_int(2));
    let left = &QRatFn::q_pow(2) * &at_two;
    let right = &(&QRatFn::q() + &QRatFn::q_pow(2)) + e.get(n);
    Sides::function(left, right)
}

/// `Ẽ_{n,q^{-1}}(1 - x)` against `(-1)^n Ẽ_{n,q}(x)`.
pub fn reflection(n: usize) -> Sides {
    let poly = q_euler_polynomial(n);
    let left = poly.map(QRatFn::subst_q_inverse).reflect();
    let right = poly.scale(&QRatFn::from_rat(sign(n)));
    Sides::polynomial(left, right)
}

/// `∫ (1 - x)^n dμ_{-q} = Σ_k C(n,k) (-1)^k Ẽ_{k,q}` against
/// `1 + q + q^2 Ẽ_{n,q^{-1}}`; stated for `n ≥ 1`.
pub fn reflected_moment(n: usize) -> Sides {
    let left = reflected_moment_expansion(n);
    let right = reflected_moment_closed(n);
    Sides::function(left, right)
}

/// `Σ_k C(n,k) (-1)^k Ẽ_{k,q}`.
pub fn reflected_moment_expansion(n: usize) -> QRatFn {
    let e = q_euler_numbers(n);
    (0..=n)
        .map(|k| e.get(k).scale(&(binomial_rat(n, k) * sign(k))))
        .sum()
}

/// `1 + q + q^2 Ẽ_{n,q^{-1}}`.
pub fn reflected_moment_closed(n: usize) -> QRatFn {
    let e_inv = q_euler_numbers(n).get(n).subst_q_inverse();
    &q_integer_fn(2) + &(&QRatFn::q_pow(2) * &e_inv)
}

/// `Ẽ_{n,q}` at `q = 1` against the classical Euler number `E_n`.
pub fn classical_limit(n: usize) -> Sides {
    let left = q_euler_numbers(n)
        .get(n)
        .eval(&BigRat::one())
        .expect("q-Euler denominators are powers of 1 + q");
    let right = classical_euler_numbers(n).swap_remove(n);
    Sides::rational(left, right)
}

/// Weighted q-Euler number: recurrence against closed form.
pub fn weighted_routes(alpha: i64, n: usize) -> Sides {
    let by_rec = weighted_by_recurrence(alpha, n).expect("α ≥ 1");
    let by_closed = weighted_by_closed_form(alpha, n).expect("α ≥ 1");
    Sides::function(by_rec[n].clone(), by_closed[n].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::QPoly;
    use crate::verify::IdentityValue;

    fn function(v: &IdentityValue) -> &QRatFn {
        match v {
            IdentityValue::Function(f) => f,
            other => panic!("expected a rational function, got {other:?}"),
        }
    }

    #[test]
    fn unit_shift_at_zero_is_two_q() {
        let s = unit_shift(0);
        assert_eq!(
            function(&s.left),
            &QRatFn::from_poly(QPoly::from_ints(&[1, 1]))
        );
        assert!(s.holds());
    }

    #[test]
    fn double_shift_at_three_and_zero() {
        let s = double_shift(3);
        assert!((function(&s.left) - function(&s.right)).is_zero());
        let s = double_shift(0);
        assert_eq!(function(&s.left), &QRatFn::q_pow(2));
        assert_eq!(
            function(&s.right),
            &QRatFn::from_poly(QPoly::from_ints(&[1, 1, 1]))
        );
        assert!(!s.holds());
    }

    #[test]
    fn reflected_moment_at_one() {
        // (1 + 2q)/(1 + q)
        let expected = QRatFn::new(QPoly::from_ints(&[1, 2]), QPoly::from_ints(&[1, 1])).unwrap();
        assert_eq!(reflected_moment_expansion(1), expected);
        assert_eq!(reflected_moment_closed(1), expected);
    }

    #[test]
    fn odd_shift_sum_smallest_case() {
        // n = 1, m = 0: q + 1 on both sides
        let s = odd_shift_sum(1, 0);
        assert_eq!(
            function(&s.right),
            &QRatFn::from_poly(QPoly::from_ints(&[1, 1]))
        );
        assert!(s.holds());
    }
}
