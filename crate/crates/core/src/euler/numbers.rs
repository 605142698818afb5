use std::sync::Arc;

use num_traits::{One, Zero};

use super::cache::{self, SeqKey};
use crate::exactq::{binomial, binomial_rat, q_integer, BigRat, QPoly, QRatFn};
use crate::EulerError;

/// `Ẽ_{0,q}, ..., Ẽ_{n_max,q}`: the q-Euler numbers with weight 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QEulerSeq {
    entries: Arc<Vec<QRatFn>>,
    len: usize,
}

/// `H_0(u), ..., H_{n_max}(u)`: Frobenius-Euler numbers with parameter `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSeq {
    u: QRatFn,
    entries: Arc<Vec<QRatFn>>,
    len: usize,
}

impl QEulerSeq {
    pub fn entries(&self) -> &[QRatFn] {
        &self.entries[..self.len]
    }

    pub fn get(&self, n: usize) -> &QRatFn {
        &self.entries()[n]
    }

    pub fn n_max(&self) -> usize {
        self.len - 1
    }

    /// Entries with `q` replaced by `1/q`, i.e. `Ẽ_{n,q^{-1}}`.
    pub fn q_inverse(&self) -> Vec<QRatFn> {
        self.entries().iter().map(QRatFn::subst_q_inverse).collect()
    }
}

impl FrobeniusSeq {
    pub fn parameter(&self) -> &QRatFn {
        &self.u
    }

    pub fn entries(&self) -> &[QRatFn] {
        &self.entries[..self.len]
    }

    pub fn get(&self, n: usize) -> &QRatFn {
        &self.entries()[n]
    }
}

fn one_plus_q() -> QRatFn {
    QRatFn::from_poly(q_integer(2))
}

/// `(1 + q) Ẽ_n = -q Σ_{k<n} C(n,k) Ẽ_k` with `Ẽ_0 = 1`.
pub fn q_euler_numbers(n_max: usize) -> QEulerSeq {
    let entries = cache::memoized(SeqKey::QEuler, n_max, |seq, len| {
        let factor = (-QRatFn::q())
            .checked_div(&one_plus_q())
            .expect("1 + q is nonzero");
        extend_binomial_recurrence(seq, len, |_| QRatFn::one(), |_| factor.clone());
    });
    QEulerSeq {
        entries,
        len: n_max + 1,
    }
}

/// Seed the memo with a previously computed sequence, after checking that it
/// satisfies the defining recurrence.
pub fn preload_q_euler(entries: Vec<QRatFn>) -> Result<(), EulerError> {
    if let Some(bad) = first_recurrence_violation(&entries) {
        return Err(EulerError::CorruptCache(bad));
    }
    if !entries.is_empty() {
        cache::insert(SeqKey::QEuler, entries);
    }
    Ok(())
}

/// The currently memoized q-Euler prefix, if any.
pub fn cached_q_euler() -> Option<Vec<QRatFn>> {
    cache::get(&SeqKey::QEuler).map(|s| s.as_ref().clone())
}

/// Index of the first entry breaking `(1+q) Ẽ_n + q Σ_{k<n} C(n,k) Ẽ_k = 0`.
pub fn first_recurrence_violation(entries: &[QRatFn]) -> Option<usize> {
    if entries.first().is_some_and(|e| *e != QRatFn::one()) {
        return Some(0);
    }
    let q = QRatFn::q();
    (1..entries.len()).find(|&n| {
        let prefix: QRatFn = (0..n).map(|k| entries[k].scale(&binomial_rat(n, k))).sum();
        !(&one_plus_q() * &entries[n] + &q * &prefix).is_zero()
    })
}

/// Frobenius-Euler numbers from `(H + 1)^n = u H_n` for `n ≥ 1`, `H_0 = 1`,
/// i.e. `H_n = Σ_{k<n} C(n,k) H_k / (u - 1)`.
pub fn frobenius_numbers(u: &QRatFn, n_max: usize) -> Result<FrobeniusSeq, EulerError> {
    let shifted = u - &QRatFn::one();
    let factor = QRatFn::one()
        .checked_div(&shifted)
        .map_err(|_| EulerError::SingularParameter)?;
    let entries = cache::memoized(SeqKey::Frobenius(u.clone()), n_max, |seq, len| {
        extend_binomial_recurrence(seq, len, |_| QRatFn::one(), |_| factor.clone());
    });
    Ok(FrobeniusSeq {
        u: u.clone(),
        entries,
        len: n_max + 1,
    })
}

/// Extend `seq` to `len` entries with `a_n = factor(n) Σ_{k<n} C(n,k) w(k) a_k`.
///
/// `weight(k)` multiplies each earlier term; `factor(n)` scales the sum.
fn extend_binomial_recurrence(
    seq: &mut Vec<QRatFn>,
    len: usize,
    weight: impl Fn(usize) -> QRatFn,
    factor: impl Fn(usize) -> QRatFn,
) {
    if seq.is_empty() && len > 0 {
        seq.push(QRatFn::one());
    }
    let weights: Vec<QRatFn> = (0..len).map(&weight).collect();
    while seq.len() < len {
        let n = seq.len();
        let sum: QRatFn = (0..n)
            .map(|k| (&seq[k] * &weights[k]).scale_int(&binomial(n, k)))
            .sum();
        let next = &factor(n) * &sum;
        seq.push(next);
    }
}

fn check_weight(alpha: i64, min: i64) -> Result<u32, EulerError> {
    if alpha < min {
        return Err(EulerError::InvalidWeight(alpha));
    }
    u32::try_from(alpha).map_err(|_| EulerError::InvalidWeight(alpha))
}

/// Weighted q-Euler numbers from `q (q^α Ẽ + 1)^n + Ẽ_n = 0`:
/// `(1 + q^{αn+1}) Ẽ_n = -q Σ_{k<n} C(n,k) q^{αk} Ẽ_k`. Accepts `α ≥ 0`.
pub fn weighted_by_recurrence(alpha: i64, n_max: usize) -> Result<Vec<QRatFn>, EulerError> {
    let a = check_weight(alpha, 0)?;
    let entries = cache::memoized(SeqKey::WeightedRecurrence(a), n_max, |seq, len| {
        let q = QRatFn::q();
        extend_binomial_recurrence(
            seq,
            len,
            |k| QRatFn::q_pow(i64::from(a) * k as i64),
            |n| {
                let den = &QRatFn::one() + &QRatFn::q_pow(i64::from(a) * n as i64 + 1);
                (-&q).checked_div(&den).expect("1 + q^m is nonzero")
            },
        );
    });
    Ok(entries[..=n_max].to_vec())
}

/// Weighted q-Euler numbers from the closed form
/// `[2]_q / ((1-q)^n [α]_q^n) Σ_{l=0}^{n} C(n,l) (-1)^l / (1 + q^{αl+1})`.
/// Requires `α ≥ 1`.
pub fn weighted_by_closed_form(alpha: i64, n_max: usize) -> Result<Vec<QRatFn>, EulerError> {
    let a = check_weight(alpha, 1)?;
    let entries = cache::memoized(SeqKey::WeightedClosedForm(a), n_max, |seq, len| {
        let two_q = one_plus_q();
        let one_minus_q = QPoly::from_ints(&[1, -1]);
        let alpha_q = q_integer(a as usize);
        let inv_terms: Vec<QRatFn> = (0..len)
            .map(|l| {
                let den = &QRatFn::one() + &QRatFn::q_pow(i64::from(a) * l as i64 + 1);
                QRatFn::one().checked_div(&den).expect("1 + q^m is nonzero")
            })
            .collect();
        for n in seq.len()..len {
            let sum: QRatFn = (0..=n)
                .map(|l| {
                    let c = binomial_rat(n, l);
                    let signed = if l % 2 == 0 { c } else { -c };
                    inv_terms[l].scale(&signed)
                })
                .sum();
            let prefactor_den = &one_minus_q.pow(n as u32) * &alpha_q.pow(n as u32);
            let prefactor = two_q
                .checked_div(&QRatFn::from_poly(prefactor_den))
                .expect("(1-q)^n [α]_q^n is nonzero for α ≥ 1");
            seq.push(&prefactor * &sum);
        }
    });
    Ok(entries[..=n_max].to_vec())
}

/// Weighted q-Euler numbers computed by both the recurrence and the closed
/// form; returns the common list or reports the first index where they differ.
pub fn q_euler_numbers_weighted(alpha: i64, n_max: usize) -> Result<Vec<QRatFn>, EulerError> {
    check_weight(alpha, 1)?;
    let by_rec = weighted_by_recurrence(alpha, n_max)?;
    let by_closed = weighted_by_closed_form(alpha, n_max)?;
    if let Some(n) = (0..=n_max).find(|&n| by_rec[n] != by_closed[n]) {
        return Err(EulerError::WeightedMismatch { alpha, n });
    }
    Ok(by_rec)
}

/// Classical Euler numbers `E_n = E_n(0)` from `(E + 1)^n + E_n = 0`, `E_0 = 1`.
pub fn classical_euler_numbers(n_max: usize) -> Vec<BigRat> {
    let half = BigRat::new(1.into(), 2.into());
    let mut out: Vec<BigRat> = vec![BigRat::one()];
    for n in 1..=n_max {
        let sum = (0..n).fold(BigRat::zero(), |acc, k| acc + binomial_rat(n, k) * &out[k]);
        out.push(-(sum * &half));
    }
    out
}
