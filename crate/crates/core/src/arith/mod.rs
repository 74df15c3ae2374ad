//! Extended-precision real and complex scalars.
//!
//! `BigReal`/`BigComplex` wrap `astro_float::BigFloat` with value-style
//! semantics: every scalar knows its own mantissa precision, binary
//! operations work at the larger of the two operand precisions, and a
//! [`Precision`] context fixes the precision of freshly constructed scalars.
//! All values are immutable; everything here is pure and freely shareable
//! across threads (the internal constants cache is thread local).

mod complex;
mod real;

pub use complex::BigComplex;
pub use real::BigReal;

use crate::error::{Error, Result};

/// Immutable working-precision context, in significant decimal digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Precision {
    digits: u32,
    bits: usize,
}

impl Precision {
    /// Smallest supported precision.
    pub const MIN_DIGITS: u32 = 16;

    pub fn new(digits: u32) -> Result<Self> {
        if digits < Self::MIN_DIGITS {
            return Err(Error::Config(format!(
                "precision must be at least {} digits, got {digits}",
                Self::MIN_DIGITS
            )));
        }
        Ok(Self::unchecked(digits))
    }

    fn unchecked(digits: u32) -> Self {
        // log2(10) = 3.32193...; the mantissa is sized to the requested
        // decimal resolution, so that "below resolution" semantics hold at
        // every profile. Internal escalation is always explicit. astro-float
        // needs at least one full word of mantissa.
        let bits = (digits as usize * 33220).div_ceil(10000).max(64);
        Precision { digits, bits }
    }

    /// FAST profile: roughly double precision.
    pub fn fast() -> Self {
        Self::unchecked(16)
    }

    /// VERIFY profile: resolves the 1e-19-scale identity residuals with margin.
    pub fn verify() -> Self {
        Self::unchecked(40)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    /// A context with `extra` more decimal digits, for internal escalation
    /// around cancellation-heavy intermediate steps.
    pub fn raised(&self, extra: u32) -> Self {
        Self::unchecked(self.digits + extra)
    }

    /// 10^(-digits) at this precision, the target relative resolution.
    pub fn eps(&self) -> BigReal {
        BigReal::from_i64(10, self).powi(-(self.digits as i64))
    }

    /// 10^(offset - digits); convenience for the spec's `10^{k-P}` tolerances.
    pub fn tol(&self, offset: i32) -> BigReal {
        BigReal::from_i64(10, self).powi(offset as i64 - self.digits as i64)
    }
}

/// Tag for the principal-branch elementary operations exposed to callers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElemFn {
    Log,
    Sqrt,
    Exp,
    Recip,
    ArcCosh,
}

/// Principal-branch elementary function dispatch with domain checking.
///
/// Internal code calls the `BigComplex` methods directly; this wrapper is the
/// checked public surface (log(0) and 1/0 report domain errors instead of
/// producing infinities).
pub fn principal_elementary(tag: ElemFn, z: &BigComplex) -> Result<BigComplex> {
    match tag {
        ElemFn::Log => {
            if z.is_zero() {
                return Err(Error::Domain {
                    func: "log",
                    msg: "log(0) is undefined".into(),
                });
            }
            Ok(z.ln())
        }
        ElemFn::Sqrt => Ok(z.sqrt()),
        ElemFn::Exp => Ok(z.exp()),
        ElemFn::Recip => {
            if z.is_zero() {
                return Err(Error::Domain {
                    func: "recip",
                    msg: "division by zero".into(),
                });
            }
            Ok(z.recip())
        }
        ElemFn::ArcCosh => {
            if z.re().to_f64() < 1.0 && z.im().is_zero() {
                return Err(Error::Domain {
                    func: "arccosh",
                    msg: "argument on the cut (-inf, 1); annotate a side".into(),
                });
            }
            Ok(crate::maps::arccosh_principal(z))
        }
    }
}
