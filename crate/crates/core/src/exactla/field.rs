//! Scalar fields: the rationals and prime fields.

use std::fmt::{self, Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{Num, NumAssignRef, NumRef, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::fp::Fp;

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

/// Largest modulus accepted; keeps every product of residues inside `i128`.
pub const MAX_PRIME: u64 = 1 << 62;

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        let spec = FieldSpec::Prime { p };
        spec.check()?;
        Ok(spec)
    }

    /// Checks the modulus of a prime field.
    pub fn check(&self) -> Result<()> {
        match *self {
            FieldSpec::Rational => Ok(()),
            FieldSpec::Prime { p } => {
                if p < 2 || p >= MAX_PRIME || !is_prime(p) {
                    Err(Error::InvalidField(format!("{p} is not a supported prime")))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => p,
        }
    }

    /// True when every integer up to `n` is invertible in the field.
    pub fn inverts_up_to(&self, n: u64) -> bool {
        match *self {
            FieldSpec::Rational => true,
            FieldSpec::Prime { p } => p > n,
        }
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Prime { p } => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `rational` or `fp:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" || s == "Q" {
            return Ok(FieldSpec::Rational);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad modulus in `{s}`")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::InvalidField(format!("unknown field `{s}`")))
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Coefficient bound for the rational root test and the residue bound for
/// exhaustive root search in prime fields.
const ROOT_SEARCH_LIMIT: u64 = 100_000;

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).take_while(|d| d * d <= n).filter(|d| n % d == 0).flat_map(|d| [d, n / d]).collect()
}

/// An exact field element.
///
/// Implemented by [`Rational`] (arbitrary precision) and [`Fp`] (residues with
/// a runtime modulus). The [`FieldSpec`] carried by matrices and categories
/// tells the scalar which field it belongs to where that cannot be inferred
/// from the value itself.
pub trait Field:
    Num + NumRef + NumAssignRef + Neg<Output = Self> + Clone + Debug + Display + Send + Sync + 'static
{
    /// Whether values of this type can represent elements of `field`.
    fn supports(field: &FieldSpec) -> bool;

    fn from_i64(field: &FieldSpec, n: i64) -> Self;

    fn parse_in(field: &FieldSpec, s: &str) -> Result<Self>;

    /// Canonical string form: `a/b` (or `a`) for rationals, the residue for prime fields.
    fn render(&self, field: &FieldSpec) -> String;

    /// Multiplicative inverse. Panics on zero.
    fn inverse(&self) -> Self;

    /// A finite superset of the roots of `Σ coeffs[i] x^i` lying in the
    /// field, when one is cheap to list; empty otherwise.
    fn root_candidates(_coeffs: &[Self], _field: &FieldSpec) -> Vec<Self> {
        Vec::new()
    }

    fn zero_in(field: &FieldSpec) -> Self {
        Self::from_i64(field, 0)
    }

    fn one_in(field: &FieldSpec) -> Self {
        Self::from_i64(field, 1)
    }
}

/// Arbitrary-precision rationals, always in lowest terms.
pub type Rational = BigRational;

impl Field for BigRational {
    fn supports(field: &FieldSpec) -> bool {
        matches!(field, FieldSpec::Rational)
    }

    fn from_i64(_field: &FieldSpec, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn parse_in(_field: &FieldSpec, s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("`{s}` is not a rational number"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(BigRational::from_integer(n))
            }
        }
    }

    fn render(&self, _field: &FieldSpec) -> String {
        self.to_string()
    }

    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    /// Rational root test, skipped when the extreme coefficients are large.
    fn root_candidates(coeffs: &[Self], _field: &FieldSpec) -> Vec<Self> {
        let Some(start) = coeffs.iter().position(|c| !c.is_zero()) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        if start > 0 {
            out.push(BigRational::zero());
        }
        let coeffs = &coeffs[start..];
        let lcm = coeffs.iter().fold(BigInt::from(1), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let small = |x: &BigInt| x.abs().to_u64().filter(|&v| v <= ROOT_SEARCH_LIMIT);
        let (Some(c0), Some(cn)) = (small(&ints[0]), small(ints.last().expect("nonempty"))) else {
            return out;
        };
        for p in divisors(c0) {
            for q in divisors(cn) {
                let r = BigRational::new(BigInt::from(p), BigInt::from(q));
                out.push(-r.clone());
                out.push(r);
            }
        }
        out
    }
}

impl Field for Fp {
    fn supports(field: &FieldSpec) -> bool {
        matches!(field, FieldSpec::Prime { .. })
    }

    fn from_i64(field: &FieldSpec, n: i64) -> Self {
        match *field {
            FieldSpec::Prime { p } => Fp::new(n as i128, p),
            FieldSpec::Rational => Fp::unbound(n as i128),
        }
    }

    fn parse_in(field: &FieldSpec, s: &str) -> Result<Self> {
        let v: i128 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("`{s}` is not an integer residue")))?;
        Ok(match *field {
            FieldSpec::Prime { p } => Fp::new(v, p),
            FieldSpec::Rational => Fp::unbound(v),
        })
    }

    fn render(&self, field: &FieldSpec) -> String {
        match *field {
            FieldSpec::Prime { p } => self.residue_mod(p).to_string(),
            FieldSpec::Rational => self.to_string(),
        }
    }

    fn root_candidates(_coeffs: &[Self], field: &FieldSpec) -> Vec<Self> {
        match *field {
            FieldSpec::Prime { p } if p <= ROOT_SEARCH_LIMIT => (0..p as i128).map(|v| Fp::new(v, p)).collect(),
            _ => Vec::new(),
        }
    }

    fn inverse(&self) -> Self {
        self.inv()
    }
}
