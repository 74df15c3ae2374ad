//! Extended-precision complex scalar with principal-branch functions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{BigReal, Precision};

/// Immutable complex value; principal branches throughout
/// (argument in (-pi, pi], cut values approached from above).
#[derive(Clone, PartialEq)]
pub struct BigComplex {
    re: BigReal,
    im: BigReal,
}

impl BigComplex {
    // ----- constructors ---------------------------------------------------

    pub fn new(re: BigReal, im: BigReal) -> Self {
        BigComplex { re, im }
    }

    pub fn from_real(re: BigReal) -> Self {
        let p = re.precision_ctx();
        let im = BigReal::zero(&p).with_bits(re.bits());
        BigComplex { re, im }
    }

    pub fn from_f64(re: f64, im: f64, p: &Precision) -> Self {
        BigComplex {
            re: BigReal::from_f64(re, p),
            im: BigReal::from_f64(im, p),
        }
    }

    pub fn from_i64(n: i64, p: &Precision) -> Self {
        BigComplex {
            re: BigReal::from_i64(n, p),
            im: BigReal::zero(p),
        }
    }

    pub fn zero(p: &Precision) -> Self {
        Self::from_i64(0, p)
    }

    pub fn one(p: &Precision) -> Self {
        Self::from_i64(1, p)
    }

    pub fn i(p: &Precision) -> Self {
        BigComplex {
            re: BigReal::zero(p),
            im: BigReal::one(p),
        }
    }

    // ----- accessors --------------------------------------------------------

    pub fn re(&self) -> &BigReal {
        &self.re
    }

    pub fn im(&self) -> &BigReal {
        &self.im
    }

    pub fn into_parts(self) -> (BigReal, BigReal) {
        (self.re, self.im)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// True when the value lies exactly on the real axis.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub(crate) fn bits(&self) -> usize {
        self.re.bits().max(self.im.bits())
    }

    pub fn with_bits(&self, bits: usize) -> Self {
        BigComplex {
            re: self.re.with_bits(bits),
            im: self.im.with_bits(bits),
        }
    }

    pub fn rounded_to(&self, p: &Precision) -> Self {
        self.with_bits(p.bits())
    }

    // ----- ring operations ---------------------------------------------------

    pub fn conj(&self) -> Self {
        BigComplex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn scale(&self, k: &BigReal) -> Self {
        BigComplex {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        BigComplex {
            re: self.re.mul_i64(k),
            im: self.im.mul_i64(k),
        }
    }

    pub fn div_i64(&self, k: i64) -> Self {
        BigComplex {
            re: self.re.div_i64(k),
            im: self.im.div_i64(k),
        }
    }

    /// Multiplication by i (counterclockwise quarter turn).
    pub fn mul_i(&self) -> Self {
        BigComplex {
            re: -&self.im,
            im: self.re.clone(),
        }
    }

    /// Multiplication by -i.
    pub fn div_i(&self) -> Self {
        BigComplex {
            re: self.im.clone(),
            im: -&self.re,
        }
    }

    pub fn norm_sqr(&self) -> BigReal {
        &self.re.square() + &self.im.square()
    }

    /// Complex modulus.
    pub fn abs_value(&self) -> BigReal {
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        self.norm_sqr().sqrt()
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> BigReal {
        BigReal::atan2(&self.im, &self.re)
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        BigComplex {
            re: &self.re / &n,
            im: -&(&self.im / &n),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    // ----- principal elementary functions -------------------------------------

    /// Principal square root (nonnegative real part; cut on (-inf, 0) with
    /// the value on the cut taken from above: sqrt(-1) = +i).
    pub fn sqrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        if self.im.is_zero() {
            if self.re.is_negative() {
                return BigComplex {
                    re: self.im.clone(), // exact zero
                    im: self.re.abs().sqrt(),
                };
            }
            return BigComplex {
                re: self.re.sqrt(),
                im: self.im.clone(),
            };
        }
        let r = self.abs_value();
        let w = ((&r + &self.re.abs()).scale_pow2(-1)).sqrt();
        if !self.re.is_negative() {
            let im = (&self.im / &w).scale_pow2(-1);
            BigComplex { re: w, im }
        } else {
            let im_mag = w;
            let re = (&self.im.abs() / &im_mag).scale_pow2(-1);
            let im = if self.im.is_negative() {
                -&im_mag
            } else {
                im_mag
            };
            BigComplex { re, im }
        }
    }

    /// Principal logarithm: (ln |z|, Arg z).
    pub fn ln(&self) -> Self {
        // ln|z| via 0.5 ln(norm_sqr) unless that loses accuracy near |z| = 1,
        // where ln of the hypot is the stable route.
        let a = self.abs_value();
        BigComplex {
            re: a.ln(),
            im: self.arg(),
        }
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        BigComplex {
            re: &m * &self.im.cos(),
            im: &m * &self.im.sin(),
        }
    }

    pub fn sin(&self) -> Self {
        BigComplex {
            re: &self.re.sin() * &self.im.cosh(),
            im: &self.re.cos() * &self.im.sinh(),
        }
    }

    pub fn cos(&self) -> Self {
        BigComplex {
            re: &self.re.cos() * &self.im.cosh(),
            im: -&(&self.re.sin() * &self.im.sinh()),
        }
    }

    pub fn sinh(&self) -> Self {
        BigComplex {
            re: &self.re.sinh() * &self.im.cos(),
            im: &self.re.cosh() * &self.im.sin(),
        }
    }

    pub fn cosh(&self) -> Self {
        BigComplex {
            re: &self.re.cosh() * &self.im.cos(),
            im: &self.re.sinh() * &self.im.sin(),
        }
    }

    /// Principal complex power z^w = exp(w ln z).
    pub fn pow(&self, w: &Self) -> Self {
        if self.is_zero() {
            // 0^w for Re w > 0; callers guard the rest
            return Self::zero(&self.re.precision_ctx());
        }
        (w * &self.ln()).exp()
    }

    /// Principal real power z^a.
    pub fn powf(&self, a: &BigReal) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        if self.im.is_zero() && self.re.is_positive() {
            return BigComplex::from_real(self.re.pow(a));
        }
        self.ln().scale(a).exp()
    }

    /// Integer power by binary squaring.
    pub fn powi(&self, n: i64) -> Self {
        let p = Precision {
            digits: 16,
            bits: self.bits(),
        };
        let mut result = Self::one(&p).with_bits(self.bits());
        let mut base = self.clone();
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        if n < 0 {
            result.recip()
        } else {
            result
        }
    }

    /// Relative distance |self - other| / |other|.
    pub fn rel_err(&self, other: &Self) -> BigReal {
        let d = (self - other).abs_value();
        let n = other.abs_value();
        if n.is_zero() {
            d
        } else {
            &d / &n
        }
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, self.im.abs())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigComplex({self})")
    }
}

impl Add<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        if self.im.is_zero() {
            return rhs.scale(&self.re);
        }
        if rhs.im.is_zero() {
            return self.scale(&rhs.re);
        }
        BigComplex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Div<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        if rhs.im.is_zero() {
            return BigComplex {
                re: &self.re / &rhs.re,
                im: &self.im / &rhs.re,
            };
        }
        let n = rhs.norm_sqr();
        BigComplex {
            re: &(&(&self.re * &rhs.re) + &(&self.im * &rhs.im)) / &n,
            im: &(&(&self.im * &rhs.re) - &(&self.re * &rhs.im)) / &n,
        }
    }
}

macro_rules! fwd_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: BigComplex) -> BigComplex {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: &BigComplex) -> BigComplex {
                (&self).$method(rhs)
            }
        }
        impl $trait<BigComplex> for &BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: BigComplex) -> BigComplex {
                self.$method(&rhs)
            }
        }
    };
}

fwd_owned!(Add, add);
fwd_owned!(Sub, sub);
fwd_owned!(Mul, mul);
fwd_owned!(Div, div);

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}
