use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::arith::pow_u128;
use crate::error::Result;
use crate::padic::PadicNumber;

/// A class in ℚ_p/ℤ_p, stored as the reduced fraction `num / p^exp` in [0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrincipalPart {
    num: u128,
    exp: u32,
}

impl PrincipalPart {
    pub const ZERO: PrincipalPart = PrincipalPart { num: 0, exp: 0 };

    /// Reduce `num / p^exp` modulo 1 and to lowest terms.
    pub fn from_parts(num: u128, exp: u32, p: u64) -> Self {
        let p128 = p as u128;
        let mut num = num % pow_u128(p, exp);
        let mut exp = exp;
        while exp > 0 && num % p128 == 0 {
            num /= p128;
            exp -= 1;
        }
        if num == 0 {
            exp = 0;
        }
        PrincipalPart { num, exp }
    }

    pub fn num(&self) -> u128 {
        self.num
    }

    /// Depth e with the class equal to num / p^e; equals -v_p when nonzero.
    pub fn exp(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// frac(p^k t) for k ≥ 0.
    pub fn scale_up(&self, k: u32, p: u64) -> Self {
        if k >= self.exp {
            return Self::ZERO;
        }
        let e = self.exp - k;
        PrincipalPart { num: self.num % pow_u128(p, e), exp: e }
    }

    /// The class (t + d) / p.
    pub fn child(&self, d: u64, p: u64) -> Self {
        let num = self.num + d as u128 * pow_u128(p, self.exp);
        Self::from_parts(num, self.exp + 1, p)
    }

    /// Lowest base-p digit of the numerator, i.e. the leading digit of the class.
    pub fn leading_digit(&self, p: u64) -> u32 {
        (self.num % p as u128) as u32
    }

    pub fn to_rational(&self, p: u64) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(pow_u128(p, self.exp)))
    }

    pub fn to_f64(&self, p: u64) -> f64 {
        self.num as f64 / pow_u128(p, self.exp) as f64
    }
}

/// The ball {x : |x - c|_p ≤ p^r}, keyed by frac(p^r c) so that equal
/// balls have equal representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ball {
    prime: u64,
    radius_exponent: i32,
    key: PrincipalPart,
}

impl Ball {
    pub fn new(prime: u64, radius_exponent: i32, key: PrincipalPart) -> Self {
        Ball { prime, radius_exponent, key }
    }

    /// The ball {|x| ≤ p^r}.
    pub fn origin(prime: u64, radius_exponent: i32) -> Self {
        Ball { prime, radius_exponent, key: PrincipalPart::ZERO }
    }

    /// Ball of radius p^r around `center`.
    pub fn around(center: &PadicNumber, radius_exponent: i32) -> Result<Self> {
        Ok(Ball { prime: center.prime(), radius_exponent, key: center.principal_part_scaled(radius_exponent)? })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn radius_exponent(&self) -> i32 {
        self.radius_exponent
    }

    pub fn key(&self) -> PrincipalPart {
        self.key
    }

    pub fn contains_zero(&self) -> bool {
        self.key.is_zero()
    }

    /// e with |x|_p = p^e on the whole ball; `None` if the ball contains 0.
    pub fn norm_exponent(&self) -> Option<i32> {
        (!self.contains_zero()).then(|| self.radius_exponent + self.key.exp() as i32)
    }

    /// Leading digit shared by every point; `None` if the ball contains 0.
    pub fn leading_digit(&self) -> Option<u32> {
        (!self.contains_zero()).then(|| self.key.leading_digit(self.prime))
    }

    /// Haar measure p^r.
    pub fn measure(&self) -> f64 {
        (self.prime as f64).powi(self.radius_exponent)
    }

    /// The p sub-balls of radius p^{r-1}.
    pub fn children(&self) -> impl Iterator<Item = Ball> + '_ {
        (0..self.prime).map(move |d| Ball {
            prime: self.prime,
            radius_exponent: self.radius_exponent - 1,
            key: self.key.child(d, self.prime),
        })
    }

    pub fn contains_ball(&self, other: &Ball) -> bool {
        other.radius_exponent <= self.radius_exponent
            && other.key.scale_up((self.radius_exponent - other.radius_exponent) as u32, self.prime) == self.key
    }

    pub fn intersects(&self, other: &Ball) -> bool {
        self.contains_ball(other) || other.contains_ball(self)
    }

    pub fn contains(&self, x: &PadicNumber) -> Result<bool> {
        Ok(x.principal_part_scaled(self.radius_exponent)? == self.key)
    }

    /// Canonical center p^{-r}·key, a rational with only negative-power digits
    /// below p^r.
    pub fn center(&self) -> BigRational {
        let t = self.key.to_rational(self.prime);
        let p = BigRational::from_integer(BigInt::from(self.prime));
        let r = self.radius_exponent;
        if r >= 0 {
            t / num_traits::pow(p, r as usize)
        } else {
            t * num_traits::pow(p, (-r) as usize)
        }
    }

    pub fn center_padic(&self, precision: usize) -> Result<PadicNumber> {
        PadicNumber::from_rational(&self.center(), self.prime, precision)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_part_reduces() {
        let t = PrincipalPart::from_parts(6, 2, 3);
        assert_eq!((t.num(), t.exp()), (2, 1));
        assert_eq!(PrincipalPart::from_parts(9, 2, 3), PrincipalPart::ZERO);
        assert_eq!(t.child(1, 3), PrincipalPart::from_parts(5, 2, 3));
        assert_eq!(PrincipalPart::from_parts(5, 2, 3).scale_up(1, 3), t);
    }

    #[test]
    fn balls_nest_or_separate() {
        let big = Ball::origin(2, 1);
        let kids: Vec<Ball> = big.children().collect();
        assert!(kids[0].contains_zero());
        assert_eq!(kids[1].norm_exponent(), Some(1));
        for k in &kids {
            assert!(big.contains_ball(k));
            assert!(!k.contains_ball(&big));
        }
        assert!(!kids[0].intersects(&kids[1]));
    }

    #[test]
    fn center_and_membership() {
        let b = Ball::new(3, -1, PrincipalPart::from_parts(2, 1, 3));
        let c = b.center_padic(16).unwrap();
        assert!(b.contains(&c).unwrap());
        assert_eq!(b.leading_digit(), Some(2));
        let x = PadicNumber::from_i64(5, 3, 16).unwrap();
        assert!(b.contains(&x).unwrap());
        let y = PadicNumber::from_i64(3, 3, 16).unwrap();
        assert!(!b.contains(&y).unwrap());
    }
}
