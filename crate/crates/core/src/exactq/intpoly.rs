//! Integer polynomial helpers behind `QPoly::gcd` and `QPoly::exact_div`.
//!
//! Rational Euclid blows up coefficient sizes. Gcds are instead computed
//! from images modulo word-sized primes, so the only big integers are the
//! inputs and the lifted result.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::BigRat;

/// Ascending coefficients, never ending in zero.
pub(super) type IntPoly = Vec<BigInt>;

/// `(c, A)` with `p = c·A`, `A` primitive over ℤ with positive leading coefficient.
pub(super) fn primitive_part(p: &[BigRat]) -> (BigRat, IntPoly) {
    let den = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: IntPoly = p.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let content = make_primitive(&mut ints);
    (BigRat::new(content, den), ints)
}

/// Divide out the content, leaving a positive leading coefficient; returns the content.
fn make_primitive(p: &mut IntPoly) -> BigInt {
    let mut content = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if p.last().is_some_and(|c| c.is_negative()) {
        content = -content;
    }
    if !content.is_one() && !content.is_zero() {
        for c in p.iter_mut() {
            *c = &*c / &content;
        }
    }
    content
}

/// Moduli for the modular gcd are primes just below this bound.
const PRIME_CEILING: u64 = 1 << 61;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    if let Some(&b) = BASES.iter().find(|&&b| n.is_multiple_of(b)) {
        return n == b;
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    BASES.iter().all(|&a| {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            return true;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                return true;
            }
        }
        false
    })
}

fn primes_below_ceiling() -> impl Iterator<Item = u64> {
    (1..)
        .map(|k| PRIME_CEILING - 2 * k + 1)
        .filter(|&n| is_prime_u64(n))
}

fn reduce_mod(p: &IntPoly, m: u64) -> Vec<u64> {
    let big = BigInt::from(m);
    p.iter()
        .map(|c| {
            c.mod_floor(&big)
                .to_u64()
                .expect("reduced below the modulus")
        })
        .collect()
}

/// Monic gcd over `ℤ/m`; inputs have nonzero leading coefficients mod `m`.
fn gcd_mod(a: Vec<u64>, b: Vec<u64>, m: u64) -> Vec<u64> {
    let (mut x, mut y) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    while !y.is_empty() {
        let dy = y.len() - 1;
        let inv = inv_mod(y[dy], m);
        while x.len() > dy {
            let top = x.len() - 1;
            let f = mul_mod(x[top], inv, m);
            if f != 0 {
                let off = top - dy;
                for (j, &yj) in y.iter().enumerate() {
                    let t = mul_mod(f, yj, m);
                    x[off + j] = (x[off + j] + m - t) % m;
                }
            }
            while x.last() == Some(&0) {
                x.pop();
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    let inv = inv_mod(*x.last().expect("gcd of nonzero images"), m);
    x.iter().map(|&c| mul_mod(c, inv, m)).collect()
}

/// Lift residues mod `modulus` and images mod `m` to residues mod `modulus·m`,
/// symmetric about zero.
fn crt_combine(acc: &mut [BigInt], modulus: &mut BigInt, image: &[u64], m: u64) {
    let big_m = BigInt::from(m);
    let inv = inv_mod(modulus.mod_floor(&big_m).to_u64().expect("below m"), m);
    let next = &*modulus * &big_m;
    let half = &next >> 1;
    for (c, &r) in acc.iter_mut().zip(image) {
        let c_mod = c.mod_floor(&big_m).to_u64().expect("below m");
        let delta = mul_mod((r + m - c_mod) % m, inv, m);
        let mut lifted = &*c + &*modulus * BigInt::from(delta);
        if lifted > half {
            lifted -= &next;
        }
        *c = lifted;
    }
    *modulus = next;
}

fn divides(g: &IntPoly, a: &IntPoly) -> bool {
    exact_quotient(a, g).is_some()
}

/// Primitive gcd of two nonzero primitive integer polynomials, by images
/// modulo word-sized primes, Chinese remaindering and trial division.
pub(super) fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    let gamma = a[a.len() - 1].gcd(&b[b.len() - 1]);
    let mut degree = usize::MAX;
    let mut acc: IntPoly = Vec::new();
    let mut modulus = BigInt::one();
    for m in primes_below_ceiling() {
        let gamma_m = gamma.mod_floor(&BigInt::from(m)).to_u64().expect("below m");
        let (am, bm) = (reduce_mod(a, m), reduce_mod(b, m));
        if gamma_m == 0 || am.last() == Some(&0) || bm.last() == Some(&0) {
            continue;
        }
        let image: Vec<u64> = gcd_mod(am, bm, m)
            .into_iter()
            .map(|c| mul_mod(c, gamma_m, m))
            .collect();
        let d = image.len() - 1;
        if d == 0 {
            return vec![BigInt::one()];
        }
        if d > degree {
            // unlucky prime
            continue;
        }
        if d < degree {
            degree = d;
            acc = vec![BigInt::zero(); d + 1];
            modulus = BigInt::one();
        }
        let before = acc.clone();
        crt_combine(&mut acc, &mut modulus, &image, m);
        if acc == before {
            let mut candidate = acc.clone();
            make_primitive(&mut candidate);
            if divides(&candidate, a) && divides(&candidate, b) {
                return candidate;
            }
        }
    }
    unreachable!("the prime sequence is infinite")
}

/// `a / b` over ℤ when `b` divides `a`; `None` otherwise.
pub(super) fn exact_quotient(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    let db = b.len() - 1;
    if a.len() <= db {
        return a.is_empty().then(Vec::new);
    }
    let lb = &b[db];
    let mut r = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (db..a.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let (f, rem) = r[i].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let off = i - db;
        for (j, bj) in b.iter().enumerate() {
            r[off + j] -= &f * bj;
        }
        quot[off] = f;
    }
    r[..db].iter().all(Zero::is_zero).then_some(quot)
}

pub(super) fn to_rational(p: IntPoly, scale: &BigRat) -> Vec<BigRat> {
    if scale.is_one() {
        return p.into_iter().map(BigRat::from_integer).collect();
    }
    p.into_iter()
        .map(|c| match c.sign() {
            Sign::NoSign => BigRat::zero(),
            _ => BigRat::from_integer(c) * scale,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        c.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64((1 << 61) - 3 * 5));
        assert!(is_prime_u64(37) && !is_prime_u64(1) && !is_prime_u64(91));
        let first = primes_below_ceiling().next().unwrap();
        assert_eq!(first, (1 << 61) - 1);
    }

    #[test]
    fn gcd_with_coefficients_beyond_one_word() {
        // the common factor needs several primes to lift
        let big = BigInt::from(10).pow(40) + BigInt::from(7);
        let h: IntPoly = vec![big.clone(), BigInt::from(3), -big];
        let a = mul(&h, &ip(&[1, 2, 1]));
        let b = mul(&h, &ip(&[5, 0, 1]));
        let mut want = h.clone();
        make_primitive(&mut want);
        assert_eq!(gcd(&a, &b), want);
        assert_eq!(gcd(&ip(&[1, 1]), &ip(&[1, -1])), ip(&[1]));
    }

    #[test]
    fn exact_quotient_detects_remainders() {
        let a = mul(&ip(&[2, 1]), &ip(&[3, 0, 4]));
        assert_eq!(exact_quotient(&a, &ip(&[2, 1])), Some(ip(&[3, 0, 4])));
        assert_eq!(exact_quotient(&a, &ip(&[1, 1])), None);
        assert_eq!(exact_quotient(&a, &ip(&[1, 2])), None);
    }
}
