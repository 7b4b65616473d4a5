//! Exact nonnegative rationals, kept in lowest terms. Used for containment
//! ratios and asymptotic estimates; no floating point anywhere.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// A rational number `num/den` with `den > 0` and `gcd(num, den) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rational {
    pub num: i64,
    pub den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        let sign = if (num < 0) != (den < 0) && num != 0 { -1 } else { 1 };
        let (num, den) = (num.abs(), den.abs());
        let g = gcd(num, den);
        Rational {
            num: sign * num / g,
            den: den / g,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // cross-multiply in i128 so no overflow is possible for i64 fields
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        assert_eq!(Rational::new(6, 4), Rational { num: 3, den: 2 });
        assert_eq!(Rational::new(0, 7), Rational { num: 0, den: 1 });
        assert_eq!(Rational::new(-6, -4), Rational { num: 3, den: 2 });
        assert_eq!(Rational::new(6, -4), Rational { num: -3, den: 2 });
    }

    #[test]
    fn ordering_is_by_value() {
        assert!(Rational::new(9, 8) < Rational::new(6, 5));
        assert!(Rational::new(15, 13) < Rational::new(6, 5));
        assert!(Rational::new(4, 3) > Rational::new(11, 9));
        assert_eq!(Rational::new(20, 12), Rational::new(5, 3));
    }

    #[test]
    fn json_shape() {
        let r = Rational::new(6, 5);
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"num":6,"den":5}"#);
    }

    #[test]
    fn display() {
        assert_eq!(Rational::new(7, 2).to_string(), "7/2");
        assert_eq!(Rational::new(4, 2).to_string(), "2");
    }
}
