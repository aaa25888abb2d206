//! Exact membership values `r·e^{i2πw}` with `r, w ∈ [0, 1]`.

use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Zero};

use crate::{Error, Result};

pub type Rational = num_rational::Ratio<u64>;

pub fn rational(num: u64, den: u64) -> Rational {
    Rational::new(num, den)
}

/// Parse `"num/den"` or an integer literal.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|_| Error::OutOfUnitInterval { value: String::from(s) })
}

/// Always `num/den`, including integers (`1/1`, `0/1`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn unit_checked(r: Rational) -> Result<Rational> {
    if r > Rational::one() {
        return Err(Error::OutOfUnitInterval { value: format_rational(&r) });
    }
    Ok(r)
}

/// A point of the closed unit disk in polar normal form: magnitude `r` and
/// phase `w` as a fraction of a full turn.
///
/// Ordering is componentwise: `u ≤ v` iff `u.r ≤ v.r` and `u.w ≤ v.w`, so
/// `partial_cmp` returns `None` for incomparable pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnitValue {
    r: Rational,
    w: Rational,
}

impl UnitValue {
    pub fn new(r: Rational, w: Rational) -> Result<Self> {
        Ok(Self { r: unit_checked(r)?, w: unit_checked(w)? })
    }

    pub fn parse(r: &str, w: &str) -> Result<Self> {
        Self::new(parse_rational(r)?, parse_rational(w)?)
    }

    /// `r = w = n/d`
    pub fn diagonal(r: Rational) -> Result<Self> {
        Self::new(r, r)
    }

    /// `0·e^{i2π·0}`
    pub fn zero() -> Self {
        Self { r: Rational::zero(), w: Rational::zero() }
    }

    /// `1·e^{i2π}`
    pub fn one() -> Self {
        Self { r: Rational::one(), w: Rational::one() }
    }

    #[inline]
    pub fn r(&self) -> Rational {
        self.r
    }

    #[inline]
    pub fn w(&self) -> Rational {
        self.w
    }

    pub fn meet(&self, other: &Self) -> Self {
        Self { r: self.r.min(other.r), w: self.w.min(other.w) }
    }

    pub fn join(&self, other: &Self) -> Self {
        Self { r: self.r.max(other.r), w: self.w.max(other.w) }
    }

    /// `(1 − r)·e^{i2π(1 − w)}`
    pub fn complement(&self) -> Self {
        Self { r: Rational::one() - self.r, w: Rational::one() - self.w }
    }

    /// Componentwise `≤`.
    #[inline]
    pub fn le(&self, other: &Self) -> bool {
        self.r <= other.r && self.w <= other.w
    }

    #[inline]
    pub fn ge(&self, other: &Self) -> bool {
        other.le(self)
    }
}

impl PartialOrd for UnitValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.r.cmp(&other.r), self.w.cmp(&other.w)) {
            (Ordering::Equal, Ordering::Equal) => Some(Ordering::Equal),
            (Ordering::Less | Ordering::Equal, Ordering::Less | Ordering::Equal) => Some(Ordering::Less),
            (Ordering::Greater | Ordering::Equal, Ordering::Greater | Ordering::Equal) => Some(Ordering::Greater),
            _ => None,
        }
    }
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·e^(i2π·{})", self.r, self.w)
    }
}

/// Membership `λ` and non-membership `ρ` of one element, with `|λ| + |ρ| ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CifValue {
    lambda: UnitValue,
    rho: UnitValue,
}

impl CifValue {
    pub fn new(lambda: UnitValue, rho: UnitValue) -> Result<Self> {
        if lambda.r + rho.r > Rational::one() {
            return Err(Error::MagnitudeSum { lambda: format_rational(&lambda.r), rho: format_rational(&rho.r) });
        }
        Ok(Self { lambda, rho })
    }

    /// Callers guarantee `lambda.r + rho.r ≤ 1`.
    pub(crate) fn new_unchecked(lambda: UnitValue, rho: UnitValue) -> Self {
        debug_assert!(lambda.r + rho.r <= Rational::one());
        Self { lambda, rho }
    }

    /// `λ = 1·e^{i2π}`, `ρ = 0`: the value every CIF subspace takes at zero.
    pub fn top() -> Self {
        Self { lambda: UnitValue::one(), rho: UnitValue::zero() }
    }

    /// `λ = 0`, `ρ = 1·e^{i2π}`: the value off the support.
    pub fn bottom() -> Self {
        Self { lambda: UnitValue::zero(), rho: UnitValue::one() }
    }

    /// `λ = (l, l)`, `ρ = (r, r)`.
    pub fn diagonal(lambda: Rational, rho: Rational) -> Result<Self> {
        Self::new(UnitValue::diagonal(lambda)?, UnitValue::diagonal(rho)?)
    }

    #[inline]
    pub fn lambda(&self) -> &UnitValue {
        &self.lambda
    }

    #[inline]
    pub fn rho(&self) -> &UnitValue {
        &self.rho
    }

    /// Meet on `λ`, join on `ρ`; the intersection value.
    pub fn meet(&self, other: &Self) -> Self {
        Self::new_unchecked(self.lambda.meet(&other.lambda), self.rho.join(&other.rho))
    }

    /// Join on `λ`, meet on `ρ`; the union value. If `r_A` is the larger
    /// magnitude then `r_A + min(r̂_A, r̂_B) ≤ r_A + r̂_A ≤ 1`.
    pub fn join(&self, other: &Self) -> Self {
        Self::new_unchecked(self.lambda.join(&other.lambda), self.rho.meet(&other.rho))
    }
}

/// Thresholds `(t, s)` for level cuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CutThreshold {
    pub t: Rational,
    pub s: Rational,
}

impl CutThreshold {
    pub fn new(t: Rational, s: Rational) -> Result<Self> {
        Ok(Self { t: unit_checked(t)?, s: unit_checked(s)? })
    }

    pub fn as_unit(&self) -> UnitValue {
        UnitValue { r: self.t, w: self.s }
    }
}

impl From<UnitValue> for CutThreshold {
    fn from(u: UnitValue) -> Self {
        Self { t: u.r, s: u.w }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uv(r: (u64, u64), w: (u64, u64)) -> UnitValue {
        UnitValue::new(rational(r.0, r.1), rational(w.0, w.1)).unwrap()
    }

    #[test]
    fn componentwise_comparison() {
        let half = uv((1, 2), (1, 2));
        let seven = uv((7, 10), (7, 10));
        assert_eq!(half.partial_cmp(&seven), Some(Ordering::Less));
        assert_eq!(seven.partial_cmp(&half), Some(Ordering::Greater));
        assert_eq!(seven.partial_cmp(&seven), Some(Ordering::Equal));
        let a = uv((7, 10), (1, 5));
        let b = uv((1, 5), (7, 10));
        assert_eq!(a.partial_cmp(&b), None);
    }

    #[test]
    fn complement_and_meet() {
        let seven = uv((7, 10), (7, 10));
        assert_eq!(seven.complement(), uv((3, 10), (3, 10)));
        assert_eq!(seven.complement().complement(), seven);
        assert_eq!(seven.meet(&uv((1, 2), (1, 2))), uv((1, 2), (1, 2)));
        assert_eq!(UnitValue::one().complement(), UnitValue::zero());
    }

    #[test]
    fn range_checks() {
        assert!(UnitValue::new(rational(3, 2), rational(0, 1)).is_err());
        assert!(UnitValue::parse("1/1", "0").is_ok());
        assert!(UnitValue::parse("1/0", "0").is_err());
        assert!(UnitValue::parse("-1/2", "0").is_err());
        assert!(CutThreshold::new(rational(1, 1), rational(2, 1)).is_err());
        let err = CifValue::new(uv((7, 10), (0, 1)), uv((2, 5), (0, 1))).unwrap_err();
        assert!(matches!(err, Error::MagnitudeSum { .. }));
        assert!(CifValue::new(uv((3, 5), (1, 1)), uv((2, 5), (1, 1))).is_ok());
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational(&rational(7, 10)), "7/10");
        assert_eq!(format_rational(&rational(1, 1)), "1/1");
        assert_eq!(format_rational(&rational(0, 3)), "0/1");
        assert_eq!(parse_rational(" 14/20 ").unwrap(), rational(7, 10));
    }
}
