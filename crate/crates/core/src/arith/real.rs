//! Extended-precision real scalar.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

use super::Precision;
use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

// astro-float reports precision 0 for exact zeros; operating at that
// precision produces NaN. Zeros therefore fall back to a mantissa wide
// enough for every internal escalation level used by this crate.
const DEFAULT_BITS: usize = 384;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_cc<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Immutable extended-precision real number.
///
/// The value carries its own mantissa precision; binary operations compute at
/// the larger of the two operand precisions.
#[derive(Clone)]
pub struct BigReal(pub(crate) BigFloat);

impl BigReal {
    // ----- constructors ---------------------------------------------------

    pub fn from_f64(x: f64, p: &Precision) -> Self {
        BigReal(BigFloat::from_f64(x, p.bits()))
    }

    pub fn from_i64(n: i64, p: &Precision) -> Self {
        BigReal(BigFloat::from_i64(n, p.bits()))
    }

    /// Exact ratio of two small integers at working precision.
    pub fn from_ratio(num: i64, den: i64, p: &Precision) -> Self {
        &Self::from_i64(num, p) / &Self::from_i64(den, p)
    }

    pub fn parse(s: &str, p: &Precision) -> Result<Self> {
        let v = with_cc(|cc| BigFloat::parse(s, Radix::Dec, p.bits(), RM, cc));
        if v.is_nan() {
            return Err(Error::Config(format!("unparseable number: {s:?}")));
        }
        Ok(BigReal(v))
    }

    pub fn zero(p: &Precision) -> Self {
        Self::from_i64(0, p)
    }

    pub fn one(p: &Precision) -> Self {
        Self::from_i64(1, p)
    }

    pub fn pi(p: &Precision) -> Self {
        BigReal(with_cc(|cc| cc.pi(p.bits(), RM)))
    }

    pub fn two_pi(p: &Precision) -> Self {
        let pi = Self::pi(p);
        &pi + &pi
    }

    pub fn half_pi(p: &Precision) -> Self {
        Self::pi(p).scale_pow2(-1)
    }

    // ----- queries ---------------------------------------------------------

    pub(crate) fn bits(&self) -> usize {
        match self.0.precision() {
            Some(b) if b > 0 => b,
            _ => DEFAULT_BITS,
        }
    }

    /// Precision context matching this value's mantissa length.
    pub fn precision_ctx(&self) -> Precision {
        let bits = self.bits();
        let digits = ((bits * 10000) / 33220).max(16) as u32;
        Precision { digits, bits }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive() && !self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.0.is_inf() && !self.0.is_nan()
    }

    /// -1, 0, +1.
    pub fn signum_i(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.is_negative() {
            -1
        } else {
            1
        }
    }

    /// Binary exponent (value ~ 2^exponent), for coarse magnitude checks.
    pub fn exponent(&self) -> i64 {
        self.0.exponent().map(|e| e as i64).unwrap_or(0)
    }

    // ----- precision movement ----------------------------------------------

    /// The same value re-rounded (or zero-extended) to `bits` of mantissa.
    pub fn with_bits(&self, bits: usize) -> Self {
        let mut v = self.0.clone();
        v.set_precision(bits, RM).expect("set_precision");
        BigReal(v)
    }

    pub fn rounded_to(&self, p: &Precision) -> Self {
        self.with_bits(p.bits())
    }

    // ----- arithmetic helpers ----------------------------------------------

    fn op_bits(&self, rhs: &Self) -> usize {
        self.bits().max(rhs.bits())
    }

    pub fn abs(&self) -> Self {
        BigReal(self.0.abs())
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn recip(&self) -> Self {
        let bits = self.bits();
        BigReal(BigFloat::from_i8(1, bits).div(&self.0, bits, RM))
    }

    /// Exact scaling by 2^k.
    pub fn scale_pow2(&self, k: i32) -> Self {
        let mut v = self.0.clone();
        if let Some(e) = v.exponent() {
            if !v.is_zero() {
                v.set_exponent(e + k);
            }
        }
        BigReal(v)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        let bits = self.bits();
        BigReal(self.0.mul(&BigFloat::from_i64(k, bits), bits, RM))
    }

    pub fn div_i64(&self, k: i64) -> Self {
        let bits = self.bits();
        BigReal(self.0.div(&BigFloat::from_i64(k, bits), bits, RM))
    }

    // ----- elementary functions ---------------------------------------------

    pub fn sqrt(&self) -> Self {
        let bits = self.bits();
        BigReal(self.0.sqrt(bits, RM))
    }

    pub fn exp(&self) -> Self {
        let bits = self.bits();
        BigReal(with_cc(|cc| self.0.exp(bits, RM, cc)))
    }

    pub fn ln(&self) -> Self {
        let bits = self.bits();
        BigReal(with_cc(|cc| self.0.ln(bits, RM, cc)))
    }

    pub fn sin(&self) -> Self {
        let bits = self.bits();
        BigReal(with_cc(|cc| self.0.sin(bits, RM, cc)))
    }

    pub fn cos(&self) -> Self {
        let bits = self.bits();
        BigReal(with_cc(|cc| self.0.cos(bits, RM, cc)))
    }

    pub fn sinh(&self) -> Self {
        let bits = self.bits();
        BigReal(with_cc(|cc| self.0.sinh(bits, RM, cc)))
    }

    pub fn cosh(&self) -> Self {
        let bits = self.bits();
        BigReal(with_cc(|cc| self.0.cosh(bits, RM, cc)))
    }

    pub fn atan(&self) -> Self {
        let bits = self.bits();
        BigReal(with_cc(|cc| self.0.atan(bits, RM, cc)))
    }

    pub fn asin(&self) -> Self {
        let bits = self.bits();
        BigReal(with_cc(|cc| self.0.asin(bits, RM, cc)))
    }

    pub fn acos(&self) -> Self {
        let bits = self.bits();
        BigReal(with_cc(|cc| self.0.acos(bits, RM, cc)))
    }

    pub fn asinh(&self) -> Self {
        let bits = self.bits();
        BigReal(with_cc(|cc| self.0.asinh(bits, RM, cc)))
    }

    pub fn acosh(&self) -> Self {
        let bits = self.bits();
        BigReal(with_cc(|cc| self.0.acosh(bits, RM, cc)))
    }

    pub fn atanh(&self) -> Self {
        let bits = self.bits();
        BigReal(with_cc(|cc| self.0.atanh(bits, RM, cc)))
    }

    /// Principal atan2 with the argument convention of (-pi, pi];
    /// atan2(0, x<0) = +pi.
    pub fn atan2(y: &Self, x: &Self) -> Self {
        let bits = y.op_bits(x);
        let p = Precision {
            digits: 0,
            bits,
        };
        if x.is_zero() && y.is_zero() {
            return BigReal(BigFloat::from_i8(0, bits));
        }
        if x.is_zero() {
            let hp = BigReal::pi(&p).scale_pow2(-1);
            return if y.is_negative() { -&hp } else { hp };
        }
        let base = (y / x).atan();
        if x.is_positive() {
            base
        } else {
            let pi = BigReal::pi(&p);
            if y.is_negative() {
                &base - &pi
            } else {
                // includes y == 0: arg = +pi
                &base + &pi
            }
        }
    }

    /// Real power with positive base (exp(y ln x)).
    pub fn pow(&self, y: &Self) -> Self {
        let bits = self.op_bits(y);
        BigReal(with_cc(|cc| self.0.pow(&y.0, bits, RM, cc)))
    }

    /// Integer power by binary squaring; valid for any sign of base.
    pub fn powi(&self, n: i64) -> Self {
        let bits = self.bits();
        let mut result = BigFloat::from_i8(1, bits);
        let mut base = self.0.clone();
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base, bits, RM);
            }
            base = base.mul(&base, bits, RM);
            e >>= 1;
        }
        let r = BigReal(result);
        if n < 0 {
            r.recip()
        } else {
            r
        }
    }

    // ----- comparisons / conversions ----------------------------------------

    pub fn max(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn min(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Nearest f64 (lossy; for reporting and bracketing logic only).
    pub fn to_f64(&self) -> f64 {
        if self.0.is_nan() {
            return f64::NAN;
        }
        if self.0.is_inf() {
            return if self.0.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            };
        }
        if self.0.is_zero() {
            return 0.0;
        }
        // Out-of-range binary exponents would overflow the formatter.
        let e = self.exponent();
        if e > 1100 {
            return if self.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
        }
        if e < -1100 {
            return 0.0;
        }
        let s = self.to_string_digits(19);
        s.parse::<f64>().unwrap_or(f64::NAN)
    }

    /// Exact cache key: sign, binary exponent and raw mantissa words.
    /// Collision-free and far cheaper than decimal formatting.
    pub fn raw_key(&self) -> String {
        use std::fmt::Write;
        if self.0.is_zero() {
            return "0".into();
        }
        if self.0.is_nan() {
            return "nan".into();
        }
        if self.0.is_inf() {
            return if self.0.is_negative() { "-inf".into() } else { "inf".into() };
        }
        let mut s = String::with_capacity(24);
        let sign = if self.0.is_negative() { '-' } else { '+' };
        let _ = write!(s, "{sign}{:x}:", self.0.exponent().unwrap_or(0));
        if let Some(words) = self.0.mantissa_digits() {
            for w in words {
                let _ = write!(s, "{w:x}.");
            }
        }
        s
    }

    /// Decimal string with `digits` significant digits.
    pub fn to_string_digits(&self, digits: u32) -> String {
        let bits = ((digits as usize * 3322) / 1000 + 8).max(32);
        let v = self.with_bits(bits.min(self.bits().max(32)));
        let s = with_cc(|cc| v.0.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into());
        s.replace("e+", "e")
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = with_cc(|cc| self.0.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into());
        write!(f, "{}", s.replace("e+", "e"))
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigReal({self})")
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        matches!(self.0.cmp(&other.0), Some(0))
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|c| c.cmp(&0))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $bf:ident) => {
        impl $trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let bits = self.op_bits(rhs);
                BigReal(self.0.$bf(&rhs.0, bits, RM))
            }
        }
        impl $trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                (&self).$method(rhs)
            }
        }
        impl $trait<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(self.0.clone().neg())
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(self.0.neg())
    }
}
