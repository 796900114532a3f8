use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An exact rational whose denominator divides 24, stored as its numerator over 24.
///
/// All of the potential functions used here (`lb`, `lb_T`, the `3n/8`
/// thresholds) live on this grid, so every comparison is an integer comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Rational24(i64);

impl Rational24 {
    pub const ZERO: Rational24 = Rational24(0);

    pub const fn from_num24(num: i64) -> Self {
        Rational24(num)
    }

    pub const fn integer(k: i64) -> Self {
        Rational24(24 * k)
    }

    /// `num/den`, or `None` when the value is not a multiple of 1/24.
    pub fn from_ratio(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        let scaled = num.checked_mul(24)?;
        (scaled % den == 0).then(|| Rational24(scaled / den))
    }

    pub const fn num24(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 24 == 0
    }

    /// Smallest integer not below the value.
    pub fn ceil(self) -> i64 {
        self.0.div_euclid(24) + i64::from(self.0.rem_euclid(24) != 0)
    }

    /// Reduced numerator and denominator.
    pub fn reduced(self) -> (i64, i64) {
        let g = gcd(self.0.unsigned_abs(), 24) as i64;
        (self.0 / g, 24 / g)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Add for Rational24 {
    type Output = Rational24;
    fn add(self, rhs: Self) -> Self {
        Rational24(self.0 + rhs.0)
    }
}

impl Sub for Rational24 {
    type Output = Rational24;
    fn sub(self, rhs: Self) -> Self {
        Rational24(self.0 - rhs.0)
    }
}

impl Neg for Rational24 {
    type Output = Rational24;
    fn neg(self) -> Self {
        Rational24(-self.0)
    }
}

impl From<i64> for Rational24 {
    fn from(k: i64) -> Self {
        Rational24::integer(k)
    }
}

impl fmt::Display for Rational24 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.reduced();
        if q == 1 {
            write!(f, "{p}")
        } else {
            write!(f, "{p}/{q}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_reduces() {
        assert_eq!(Rational24::from_num24(98).to_string(), "49/12");
        assert_eq!(Rational24::integer(2).to_string(), "2");
        assert_eq!(Rational24::from_num24(-2).to_string(), "-1/12");
    }

    #[test]
    fn ratio_grid() {
        assert_eq!(Rational24::from_ratio(37, 12), Some(Rational24::from_num24(74)));
        assert_eq!(Rational24::from_ratio(1, 7), None);
        assert_eq!(Rational24::from_ratio(1, 0), None);
    }

    #[test]
    fn ceiling() {
        assert_eq!(Rational24::from_num24(98).ceil(), 5);
        assert_eq!(Rational24::from_num24(96).ceil(), 4);
        assert_eq!(Rational24::from_num24(-2).ceil(), 0);
        assert_eq!(Rational24::from_num24(-26).ceil(), -1);
    }
}
