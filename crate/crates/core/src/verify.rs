//! Identity verification: named identities, per-instance verdicts and the
//! reports that collect them.
//!
//! A verdict is `Pass` exactly when both sides have identical canonical
//! forms. Some identities are expected to fail (a boundary case outside an
//! identity's hypothesis, or a specialisation that drops a term); a report
//! records the expectation alongside the verdict so callers can tell a
//! confirmed failure from a regression.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bernstein;
use crate::euler::identities as euler_ids;
use crate::exactq::{BigRat, QRatFn, XPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    /// `Ẽ_{n,q} = H_n(-q^{-1})`
    Thm1,
    /// `Ẽ_{n,q}(x) = H_n(-q^{-1}, x)`
    Thm2,
    /// odd `n`: `q^n H_m(-q^{-1}, n) + H_m(-q^{-1}) = [2]_q Σ_{l<n} (-1)^l l^m q^l`
    Cor3,
    /// `q Ẽ_{n,q}(1) + Ẽ_{n,q} = [2]_q δ_{n,0}`
    Thm4,
    /// `q^2 Ẽ_{n,q}(2) = q + q^2 + Ẽ_{n,q}` for `n ≥ 1`
    Thm5,
    /// the same relation at `n = 0`, where it must fail
    Thm5AtZero,
    /// `Ẽ_{n,q^{-1}}(1 - x) = (-1)^n Ẽ_{n,q}(x)`
    Thm6,
    /// `∫ (1 - x)^n dμ_{-q} = 1 + q + q^2 Ẽ_{n,q^{-1}}` for `n ≥ 1`
    Thm7,
    /// Bernstein moment identity, `1 ≤ k < n`
    Thm8,
    /// Bernstein moment identity at `k = 0` without the `1 + q` term; must fail
    Thm8K0Remark,
    /// Bernstein moment identity at `k = 0` with the `1 + q` term kept
    Thm8K0Full,
    /// `Ẽ_{n,q}` at `q = 1` equals the classical Euler number
    Classical,
    /// weighted q-Euler numbers: recurrence equals closed form
    Weighted,
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        IdentityId::Thm1,
        IdentityId::Thm2,
        IdentityId::Cor3,
        IdentityId::Thm4,
        IdentityId::Thm5,
        IdentityId::Thm5AtZero,
        IdentityId::Thm6,
        IdentityId::Thm7,
        IdentityId::Thm8,
        IdentityId::Thm8K0Remark,
        IdentityId::Thm8K0Full,
        IdentityId::Classical,
        IdentityId::Weighted,
    ];

    pub fn expected(self) -> Verdict {
        match self {
            IdentityId::Thm5AtZero | IdentityId::Thm8K0Remark => Verdict::Fail,
            _ => Verdict::Pass,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            IdentityId::Thm1 => "thm1",
            IdentityId::Thm2 => "thm2",
            IdentityId::Cor3 => "cor3",
            IdentityId::Thm4 => "thm4",
            IdentityId::Thm5 => "thm5",
            IdentityId::Thm5AtZero => "thm5-at-zero",
            IdentityId::Thm6 => "thm6",
            IdentityId::Thm7 => "thm7",
            IdentityId::Thm8 => "thm8",
            IdentityId::Thm8K0Remark => "k0-remark",
            IdentityId::Thm8K0Full => "k0-full",
            IdentityId::Classical => "classical",
            IdentityId::Weighted => "weighted",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// One side of an identity, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum IdentityValue {
    Function(QRatFn),
    Polynomial(XPoly<QRatFn>),
    #[serde(with = "rat_string")]
    Rational(BigRat),
}

impl fmt::Display for IdentityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityValue::Function(v) => write!(f, "{v}"),
            IdentityValue::Polynomial(v) => write!(f, "{v}"),
            IdentityValue::Rational(v) => write!(f, "{v}"),
        }
    }
}

mod rat_string {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use crate::exactq::BigRat;

    pub fn serialize<S: Serializer>(v: &BigRat, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRat, D::Error> {
        let s = String::deserialize(d)?;
        s.parse()
            .map_err(|_| D::Error::custom(format!("bad rational {s:?}")))
    }
}

/// Left and right side of one identity instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sides {
    pub left: IdentityValue,
    pub right: IdentityValue,
}

impl Sides {
    pub fn function(left: QRatFn, right: QRatFn) -> Self {
        Sides {
            left: IdentityValue::Function(left),
            right: IdentityValue::Function(right),
        }
    }

    pub fn polynomial(left: XPoly<QRatFn>, right: XPoly<QRatFn>) -> Self {
        Sides {
            left: IdentityValue::Polynomial(left),
            right: IdentityValue::Polynomial(right),
        }
    }

    pub fn rational(left: BigRat, right: BigRat) -> Self {
        Sides {
            left: IdentityValue::Rational(left),
            right: IdentityValue::Rational(right),
        }
    }

    /// Canonical forms make this structural.
    pub fn holds(&self) -> bool {
        self.left == self.right
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub params: Vec<(String, u64)>,
    pub expected: Verdict,
    pub verdict: Verdict,
    /// Both sides, present whenever the verdict is `Fail`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Sides>,
}

impl Instance {
    pub fn judge(params: Vec<(&str, u64)>, id: IdentityId, sides: Sides) -> Self {
        let params = params.into_iter().map(|(k, v)| (k.to_owned(), v)).collect();
        let (verdict, witness) = if sides.holds() {
            (Verdict::Pass, None)
        } else {
            (Verdict::Fail, Some(sides))
        };
        Instance {
            params,
            expected: id.expected(),
            verdict,
            witness,
        }
    }

    pub fn as_expected(&self) -> bool {
        self.verdict == self.expected
    }

    pub fn param_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Parameters left out of a run because the identity is not stated for them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exclusion {
    pub params: Vec<(String, u64)>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub instances: Vec<Instance>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub excluded: Vec<Exclusion>,
}

impl IdentityReport {
    pub fn collect<P>(
        identity: IdentityId,
        params: impl IntoIterator<Item = P>,
        judge: impl Fn(P) -> Instance,
    ) -> Self {
        IdentityReport {
            identity,
            instances: params.into_iter().map(judge).collect(),
            excluded: Vec::new(),
        }
    }

    pub fn all_as_expected(&self) -> bool {
        self.instances.iter().all(Instance::as_expected)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.instances
            .iter()
            .filter(|i| i.verdict == verdict)
            .count()
    }

    pub fn unexpected(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.as_expected())
    }

    /// The common verdict if every instance agrees.
    pub fn uniform_verdict(&self) -> Option<Verdict> {
        let first = self.instances.first()?.verdict;
        self.instances
            .iter()
            .all(|i| i.verdict == first)
            .then_some(first)
    }
}

/// Ranges for a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRange {
    /// Largest index `n` (the degree bound for the Bernstein identity).
    pub n_max: usize,
    /// Largest power `m` for the odd-shift sum.
    pub m_max: usize,
    /// Largest weight for the weighted cross-check.
    pub alpha_max: i64,
}

impl VerifyRange {
    pub fn new(n_max: usize) -> Self {
        VerifyRange {
            n_max,
            m_max: n_max,
            alpha_max: 3,
        }
    }
}

fn single_n(
    id: IdentityId,
    ns: impl IntoIterator<Item = usize>,
    sides: fn(usize) -> Sides,
) -> IdentityReport {
    IdentityReport::collect(id, ns, |n| {
        Instance::judge(vec![("n", n as u64)], id, sides(n))
    })
}

fn excluded_n0(reason: &str) -> Vec<Exclusion> {
    vec![Exclusion {
        params: vec![("n".to_owned(), 0)],
        reason: reason.to_owned(),
    }]
}

/// Check one identity over the given range.
pub fn verify_identity(id: IdentityId, range: &VerifyRange) -> IdentityReport {
    let n_max = range.n_max;
    match id {
        IdentityId::Thm1 => single_n(id, 0..=n_max, euler_ids::euler_equals_frobenius),
        IdentityId::Thm2 => single_n(id, 0..=n_max, euler_ids::euler_poly_equals_frobenius_poly),
        IdentityId::Cor3 => IdentityReport::collect(
            id,
            (1..=n_max)
                .step_by(2)
                .flat_map(|n| (0..=range.m_max).map(move |m| (n, m))),
            |(n, m)| {
                Instance::judge(
                    vec![("n", n as u64), ("m", m as u64)],
                    id,
                    euler_ids::odd_shift_sum(n, m),
                )
            },
        ),
        IdentityId::Thm4 => single_n(id, 0..=n_max, euler_ids::unit_shift),
        IdentityId::Thm5 => {
            let mut report = single_n(id, 1..=n_max, euler_ids::double_shift);
            report.excluded = excluded_n0("stated for n ≥ 1 only; see thm5-at-zero");
            report
        }
        IdentityId::Thm5AtZero => single_n(id, 0..=0, euler_ids::double_shift),
        IdentityId::Thm6 => single_n(id, 0..=n_max, euler_ids::reflection),
        IdentityId::Thm7 => {
            let mut report = single_n(id, 1..=n_max, euler_ids::reflected_moment);
            report.excluded = excluded_n0("stated for n ≥ 1 only");
            report
        }
        IdentityId::Thm8 => bernstein::verify_theorem8(n_max).identity,
        IdentityId::Thm8K0Remark => bernstein::verify_theorem8(n_max).k0_remark,
        IdentityId::Thm8K0Full => bernstein::verify_theorem8(n_max).k0_full,
        IdentityId::Classical => single_n(id, 0..=n_max, euler_ids::classical_limit),
        IdentityId::Weighted => IdentityReport::collect(
            id,
            (1..=range.alpha_max).flat_map(|a| (0..=n_max).map(move |n| (a, n))),
            |(alpha, n)| {
                Instance::judge(
                    vec![("alpha", alpha as u64), ("n", n as u64)],
                    id,
                    euler_ids::weighted_routes(alpha, n),
                )
            },
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::QPoly;

    #[test]
    fn thm4_at_zero() {
        let r = verify_identity(IdentityId::Thm4, &VerifyRange::new(0));
        assert_eq!(r.instances.len(), 1);
        assert_eq!(r.instances[0].verdict, Verdict::Pass);
    }

    #[test]
    fn k0_remark_witness_at_one() {
        let r = verify_identity(IdentityId::Thm8K0Remark, &VerifyRange::new(1));
        let inst = &r.instances[0];
        assert_eq!(inst.verdict, Verdict::Fail);
        assert!(inst.as_expected());
        let w = inst.witness.as_ref().unwrap();
        let left = QRatFn::new(QPoly::from_ints(&[1, 2]), QPoly::from_ints(&[1, 1])).unwrap();
        let right = QRatFn::new(QPoly::from_ints(&[0, 0, -1]), QPoly::from_ints(&[1, 1])).unwrap();
        assert_eq!(w.left, IdentityValue::Function(left));
        assert_eq!(w.right, IdentityValue::Function(right));
    }

    #[test]
    fn thm5_excludes_zero() {
        let r = verify_identity(IdentityId::Thm5, &VerifyRange::new(0));
        assert!(r.instances.is_empty());
        assert_eq!(r.excluded.len(), 1);
        let z = verify_identity(IdentityId::Thm5AtZero, &VerifyRange::new(0));
        assert_eq!(z.instances[0].verdict, Verdict::Fail);
        assert!(z.all_as_expected());
    }

    #[test]
    fn report_serde_round_trip() {
        let r = verify_identity(IdentityId::Thm8K0Remark, &VerifyRange::new(2));
        let json = serde_json::to_string(&r).unwrap();
        let back: IdentityReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let c = verify_identity(IdentityId::Classical, &VerifyRange::new(3));
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<IdentityReport>(&json).unwrap(), c);
    }
}
