use crate::exactq::{binomial, QRatFn, XPoly};
use crate::EulerError;

use super::numbers::{frobenius_numbers, q_euler_numbers};

/// `Σ_l C(n,l) a_l x^{n-l}`: the umbral power `(x + a)^n`.
fn umbral_power(values: &[QRatFn], n: usize) -> XPoly<QRatFn> {
    let coeffs = (0..=n)
        .map(|power| {
            let l = n - power;
            values[l].scale_int(&binomial(n, l))
        })
        .collect();
    XPoly::new(coeffs)
}

/// `Ẽ_{n,q}(x) = (x + Ẽ_q)^n`, monic of degree `n`.
pub fn q_euler_polynomial(n: usize) -> XPoly<QRatFn> {
    umbral_power(q_euler_numbers(n).entries(), n)
}

/// `H_n(u, x) = Σ_l C(n,l) H_l(u) x^{n-l}`.
pub fn frobenius_polynomial(u: &QRatFn, n: usize) -> Result<XPoly<QRatFn>, EulerError> {
    Ok(umbral_power(frobenius_numbers(u, n)?.entries(), n))
}

/// The Frobenius parameter `-q^{-1}` that matches the weight-0 q-Euler numbers.
pub fn minus_q_inverse() -> QRatFn {
    -QRatFn::q_pow(-1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::QPoly;
    use num_traits::{One, Zero};

    #[test]
    fn low_degree_polynomials() {
        assert_eq!(q_euler_polynomial(0), XPoly::one());
        let e1 = QRatFn::new(QPoly::from_ints(&[0, -1]), QPoly::from_ints(&[1, 1])).unwrap();
        assert_eq!(q_euler_polynomial(1), XPoly::new(vec![e1, QRatFn::one()]));
    }

    #[test]
    fn shape_and_constant_term() {
        let e = q_euler_numbers(9);
        for n in 0..=9 {
            let p = q_euler_polynomial(n);
            assert_eq!(p.degree(), Some(n));
            assert_eq!(p.leading(), Some(&QRatFn::one()));
            assert_eq!(p.eval(&QRatFn::zero()), *e.get(n));
        }
    }

    #[test]
    fn frobenius_polynomial_at_zero_is_the_number() {
        let u = QRatFn::from_int(-2);
        let h = frobenius_numbers(&u, 6).unwrap();
        for n in 0..=6 {
            let p = frobenius_polynomial(&u, n).unwrap();
            assert_eq!(p.eval(&QRatFn::zero()), *h.get(n));
        }
        assert_eq!(frobenius_polynomial(&u, 0).unwrap(), XPoly::one());
        assert_eq!(
            frobenius_polynomial(&QRatFn::one(), 2).unwrap_err(),
            EulerError::SingularParameter
        );
    }
}
