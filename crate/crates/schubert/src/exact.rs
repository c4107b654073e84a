//! Exact scalars: Gaussian rationals (complex numbers with arbitrary-precision
//! rational real and imaginary parts) and the handful of exact inequality
//! helpers certification needs. Square roots are never taken exactly; bounds
//! are carried as squared rationals or as ceiling rational square roots.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A complex number with exact rational components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(v: i64) -> Self {
        GaussRat::new(BigRational::from_integer(BigInt::from(v)), BigRational::zero())
    }

    pub fn from_int_pair(re: i64, im: i64) -> Self {
        GaussRat::new(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    /// Exact conversion of an f64 pair; fails on NaN/inf.
    pub fn from_c64(z: Complex64) -> Option<Self> {
        Some(GaussRat::new(
            BigRational::from_float(z.re)?,
            BigRational::from_float(z.im)?,
        ))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// |z|^2, an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Round to a dyadic rational with denominator 2^bits. Used to keep
    /// exact Newton iterates from blowing up in size.
    pub fn round_dyadic(&self, bits: u32) -> Self {
        GaussRat::new(round_dyadic(&self.re, bits), round_dyadic(&self.im, bits))
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat::new(BigRational::one(), BigRational::zero())
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, o: GaussRat) -> GaussRat {
        GaussRat::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, o: GaussRat) -> GaussRat {
        GaussRat::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, o: GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Div for GaussRat {
    type Output = GaussRat;
    fn div(self, o: GaussRat) -> GaussRat {
        let d = o.norm_sqr();
        assert!(!d.is_zero(), "division by zero GaussRat");
        let num = self * o.conj();
        GaussRat::new(num.re / &d, num.im / &d)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

pub fn rat_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// floor(sqrt(n)) for n >= 0.
fn floor_sqrt(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    n.sqrt()
}

/// ceil(sqrt(n)) for n >= 0.
fn ceil_sqrt(n: &BigInt) -> BigInt {
    let s = floor_sqrt(n);
    if &s * &s == *n {
        s
    } else {
        s + 1
    }
}

/// A rational r with r >= sqrt(q) and r^2 - q small (about 2^-guard_bits
/// relative), for q >= 0.
pub fn sqrt_upper(q: &BigRational, guard_bits: u32) -> BigRational {
    assert!(!q.is_negative(), "sqrt_upper of a negative rational");
    if q.is_zero() {
        return BigRational::zero();
    }
    // sqrt(a/b) = sqrt(a*b)/b ; scale by 4^k to control relative error.
    let scale = BigInt::one() << (2 * guard_bits);
    let num = q.numer() * q.denom() * &scale;
    let root = ceil_sqrt(&num);
    BigRational::new(root, q.denom() * (BigInt::one() << guard_bits))
}

/// Exact test alpha < alpha_0 where alpha_0 = (13 - 3*sqrt(17))/4, alpha >= 0.
///
/// 4*alpha < 13 - 3*sqrt(17)  iff  13 - 4*alpha > 3*sqrt(17)
/// iff 13 - 4*alpha > 0 and (13 - 4*alpha)^2 > 153.
pub fn below_smale_alpha0(alpha: &BigRational) -> bool {
    let thirteen = BigRational::from_integer(BigInt::from(13));
    let four = BigRational::from_integer(BigInt::from(4));
    let lhs = thirteen - four * alpha;
    if !lhs.is_positive() {
        return false;
    }
    &lhs * &lhs > BigRational::from_integer(BigInt::from(153))
}

fn round_dyadic(q: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = q * BigRational::from_integer(scale.clone());
    let (num, den) = (scaled.numer().clone(), scaled.denom().clone());
    // round to nearest: floor((2*num + den) / (2*den))
    let two = BigInt::from(2);
    let rounded = (&two * num + &den).div_floor(&(two * den));
    BigRational::new(rounded, scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn gauss_rat_field_ops() {
        let a = GaussRat::from_int_pair(3, -2);
        let b = GaussRat::from_int_pair(-1, 5);
        let prod = a.clone() * b.clone();
        // (3-2i)(-1+5i) = -3 + 15i + 2i + 10 = 7 + 17i
        assert_eq!(prod, GaussRat::from_int_pair(7, 17));
        let back = prod / b;
        assert_eq!(back, a);
        assert_eq!(a.clone().norm_sqr(), rat(13, 1));
        assert_eq!((a.clone() - a).norm_sqr(), rat(0, 1));
    }

    #[test]
    fn f64_round_trip_is_exact() {
        let z = Complex64::new(0.1 + 3.0, -7.25);
        let g = GaussRat::from_c64(z).unwrap();
        assert_eq!(g.to_c64(), z);
    }

    #[test]
    fn sqrt_upper_bounds_from_above() {
        for (n, d) in [(2i64, 1i64), (13, 13), (5, 7), (12345, 67)] {
            let q = rat(n, d);
            let r = sqrt_upper(&q, 64);
            assert!(&r * &r >= q, "r^2 < q for {n}/{d}");
            // and tight to ~2^-60 relative
            let slack = &r * &r - &q;
            assert!(slack < rat(1, 1 << 50) * q);
        }
        assert!(sqrt_upper(&rat(0, 1), 64).is_zero());
        // perfect squares stay exact
        assert_eq!(sqrt_upper(&rat(9, 4), 64), rat(3, 2));
    }

    #[test]
    fn smale_threshold_comparison() {
        // alpha_0 ~ 0.157671
        assert!(below_smale_alpha0(&rat(157, 1000)));
        assert!(!below_smale_alpha0(&rat(158, 1000)));
        assert!(below_smale_alpha0(&rat(0, 1)));
        assert!(!below_smale_alpha0(&rat(1, 1)));
    }

    #[test]
    fn dyadic_rounding_accuracy() {
        let q = rat(1, 3);
        let r = round_dyadic(&q, 16);
        assert_eq!(r.denom(), &BigInt::from(1 << 16));
        assert!((q - r).abs() <= rat(1, 1 << 16));
    }
}
