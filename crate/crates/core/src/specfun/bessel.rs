//! Modified and cylinder Bessel functions of complex argument.
//!
//! Evaluation strategy by argument magnitude:
//!
//! * small |z|: ascending series for I (all orders, complex allowed), K from
//!   I of orders +-nu with argument-reduced sin(pi nu); orders at (or within
//!   working distance of) an integer go through order averaging nu +- h;
//! * moderate |z|: continued fraction (Lentz) for the ratio I_{nu+1}/I_nu
//!   plus Wronskian normalization against K_nu, K_{nu+1};
//! * large |z|: the exponential expansion of K (the same a_{nu,s} scalars
//!   that drive the Legendre expansions), I by the standard K-rotation
//!   connection, Hankel functions by their exponential forms.
//!
//! Internal working precision escalates automatically around every
//! cancellation-prone combination; the escalation is measured, not guessed,
//! and evaluation retries at higher precision when the measurement demands.

use crate::arith::{BigComplex, BigReal, Precision};
use crate::coeffs;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModKind {
    I,
    K,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CylKind {
    J,
    Y,
    H1,
    H2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Real,
    Imaginary,
}

/// Bessel order as used by the expansions: a nonnegative real magnitude
/// tagged real (mu, mu+1) or imaginary (i rho).
#[derive(Debug, Clone)]
pub struct BesselOrder {
    pub kind: OrderKind,
    pub magnitude: BigReal,
}

impl BesselOrder {
    pub fn real(magnitude: BigReal) -> Result<Self> {
        if magnitude.is_negative() {
            return Err(Error::Domain {
                func: "BesselOrder",
                msg: "real order must be nonnegative".into(),
            });
        }
        Ok(BesselOrder {
            kind: OrderKind::Real,
            magnitude,
        })
    }

    pub fn imaginary(magnitude: BigReal) -> Result<Self> {
        if magnitude.is_negative() {
            return Err(Error::Domain {
                func: "BesselOrder",
                msg: "imaginary order magnitude must be nonnegative".into(),
            });
        }
        Ok(BesselOrder {
            kind: OrderKind::Imaginary,
            magnitude,
        })
    }
}

const SERIES_LIMIT: f64 = 32.0;

fn asym_limit(bits: usize) -> f64 {
    // smallest term of the exponential tail ~ e^(-2|z|); demand it clear the
    // working precision with margin
    0.36 * bits as f64 + 12.0
}

fn work_bits(nu: &BigComplex, z: &BigComplex) -> usize {
    nu.bits().max(z.bits())
}

/// Cheap magnitude exponent: max of the component exponents (within one bit
/// of the true |z| exponent), for halting logic in hot loops.
fn mag_exp(z: &BigComplex) -> i64 {
    if z.is_zero() {
        return i64::MIN / 2;
    }
    let re_e = if z.re().is_zero() { i64::MIN / 2 } else { z.re().exponent() };
    let im_e = if z.im().is_zero() { i64::MIN / 2 } else { z.im().exponent() };
    re_e.max(im_e)
}

/// sin(pi v) with integer reduction of the real part.
fn sin_pi_c(v: &BigComplex) -> BigComplex {
    let p = v.re().precision_ctx();
    let m = v.re().to_f64().round();
    if m.abs() < 1e15 {
        let vr = v - &BigComplex::from_real(BigReal::from_f64(m, &p).with_bits(v.bits()));
        let s = vr.scale(&BigReal::pi(&p.raised(4))).sin();
        if (m as i64) % 2 == 0 {
            s
        } else {
            -s
        }
    } else {
        v.scale(&BigReal::pi(&p)).sin()
    }
}

/// exp(i pi v) exactly as cos(pi v) + i sin(pi v) with reduced arguments.
fn exp_i_pi(v: &BigComplex, p: &Precision) -> BigComplex {
    let half = BigComplex::from_real(BigReal::from_ratio(1, 2, p).with_bits(v.bits()));
    // e^(i pi v) = i sin(pi v) + cos(pi v); cos(pi v) = sin(pi (v + 1/2))
    let s = sin_pi_c(v);
    let c = sin_pi_c(&(v + &half));
    &c + &s.mul_i()
}

// ---------------------------------------------------------------------------
// ascending series
// ---------------------------------------------------------------------------

/// Ascending series for I_nu(z) and its z-derivative, with measured
/// escalation. `extra_hint` is the caller's cancellation allowance in bits
/// (beyond what the series itself cancels).
fn i_series(
    nu: &BigComplex,
    z: &BigComplex,
    target_bits: usize,
    extra_hint: usize,
) -> Result<(BigComplex, BigComplex)> {
    let zf = z.abs_value().to_f64();
    let mut extra = extra_hint + (1.46 * (zf - z.re().to_f64()).max(0.0)) as usize + 24;
    for _attempt in 0..4 {
        let wp_bits = target_bits + extra;
        let wp = Precision::new(((wp_bits * 10000) / 33220).max(16) as u32).unwrap();
        let wb = wp.bits().max(wp_bits);
        let nu_w = nu.with_bits(wb);
        let z_w = z.with_bits(wb);
        let one = BigComplex::one(&wp).with_bits(wb);
        let half_z = z_w.div_i64(2);
        let ln_half_z = half_z.ln();
        let g = crate::specfun::gamma(&(&nu_w + &one))?;
        let t0 = (&nu_w * &ln_half_z).exp() / &g;
        let q = half_z.square(); // z^2/4
        let mut term = t0.clone();
        let mut sum = t0;
        let mut dsum = &sum * &nu_w; // accumulate t_k (nu + 2k), divide by z at the end
        let mut max_exp = mag_exp(&sum);
        let mut k: i64 = 0;
        let mut small_streak = 0;
        loop {
            let kp1 = BigComplex::from_i64(k + 1, &wp).with_bits(wb);
            term = &(&term * &q) / &(&kp1 * &(&nu_w + &kp1));
            k += 1;
            sum = &sum + &term;
            dsum = &dsum + &(&term * &(&nu_w + &kp1.mul_i64(2)));
            let te = mag_exp(&term);
            max_exp = max_exp.max(te);
            let se = mag_exp(&sum);
            if te < se - wb as i64 - 8 && k as f64 > zf / 1.9 {
                small_streak += 1;
                if small_streak >= 2 {
                    break;
                }
            } else {
                small_streak = 0;
            }
            if k > 200_000 {
                return Err(Error::Internal("I series failed to converge".into()));
            }
        }
        let deficit = (max_exp - mag_exp(&sum)).max(0) as usize;
        if deficit + 24 > extra {
            extra = deficit + 48;
            continue;
        }
        let deriv = &dsum / &z_w;
        return Ok((sum, deriv));
    }
    Err(Error::Internal("I series escalation did not settle".into()))
}

/// K from the +-nu series combination, with order averaging near integers.
fn k_from_i(nu: &BigComplex, z: &BigComplex, target_bits: usize) -> Result<BigComplex> {
    let nf = nu.re().to_f64();
    let dist = (nf - nf.round()).abs();
    // a measured sin(pi nu) loss handles distances down to ~1e-6; closer than
    // that, switch to order averaging
    let near_int = nu.im().is_zero() && dist < 1e-6;
    if near_int {
        // K is entire in the order: average nu +- h kills the O(h) term,
        // leaving O(h^2)
        let digits = (target_bits as f64 / 3.322) as u32;
        let h_digits = digits / 2 + 2;
        let p = Precision::new(digits.max(16)).unwrap();
        let h = BigReal::from_i64(10, &p.raised(h_digits)).powi(-(h_digits as i64));
        let hc = BigComplex::from_real(h);
        let kp = k_direct(&(nu + &hc), z, target_bits, h_digits as usize * 4)?;
        let km = k_direct(&(nu - &hc), z, target_bits, h_digits as usize * 4)?;
        return Ok((&kp + &km).div_i64(2));
    }
    // measured loss from the sin(pi nu) division (covers small imaginary
    // orders, where |sin| = sinh(pi rho) can be tiny without nu being near
    // a real integer)
    let s_probe = sin_pi_c(&nu.with_bits(64));
    let sin_loss = (-s_probe.abs_value().exponent()).max(0) as usize + 8;
    k_direct(nu, z, target_bits, sin_loss)
}

/// K = pi (I_{-nu} - I_nu) / (2 sin(pi nu)) for nu off the integers.
fn k_direct(
    nu: &BigComplex,
    z: &BigComplex,
    target_bits: usize,
    sin_loss_bits: usize,
) -> Result<BigComplex> {
    let zf = z.abs_value().to_f64();
    // I ~ e^|z| while K ~ e^(-Re z): the subtraction cancels this many bits
    let cancel = (1.46 * (zf + z.re().to_f64()).max(0.0)) as usize + sin_loss_bits;
    let bits = target_bits + cancel + 32;
    let nu_w = nu.with_bits(bits);
    let z_w = z.with_bits(bits);
    let (ip, _) = i_series(&nu_w, &z_w, bits, 0)?;
    let (im, _) = i_series(&(-&nu_w), &z_w, bits, 0)?;
    let p = Precision::new(((bits * 10000) / 33220).max(16) as u32).unwrap();
    let s = sin_pi_c(&nu_w);
    let k = (&im - &ip).scale(&BigReal::pi(&p)) / &s.mul_i64(2);
    Ok(k.with_bits(target_bits + 16))
}

// ---------------------------------------------------------------------------
// continued fraction (Lentz) for I_{nu+1}/I_nu
// ---------------------------------------------------------------------------

fn cf1_ratio(nu: &BigComplex, z: &BigComplex, bits: usize) -> Result<BigComplex> {
    let p = Precision::new(((bits * 10000) / 33220).max(16) as u32).unwrap();
    let tiny = BigComplex::from_real(p.tol(0).powi(4).with_bits(bits));
    let one = BigComplex::one(&p).with_bits(bits);
    let mut f = tiny.clone();
    let mut c = f.clone();
    let mut d = BigComplex::zero(&p).with_bits(bits);
    let two_over_z = BigComplex::from_i64(2, &p).with_bits(bits) / z;
    let eps_exp = -(bits as i64) - 8;
    for j in 1..100_000 {
        let b = (nu + &BigComplex::from_i64(j, &p)) * &two_over_z;
        d = &one / &(&b + &d);
        c = &b + &c.recip();
        let delta = &c * &d;
        f = &f * &delta;
        if mag_exp(&(&delta - &one)) < eps_exp {
            return Ok(f);
        }
    }
    Err(Error::Internal("CF1 did not converge".into()))
}

// ---------------------------------------------------------------------------
// exponential large-argument forms
// ---------------------------------------------------------------------------

/// K_nu(z e^(i m pi)) by the exponential expansion, with the continuation
/// carried analytically in the prefactor (m in {-1, 0, 1}).
fn k_asym_rotated(nu: &BigComplex, z: &BigComplex, m: i32, target_bits: usize) -> Result<BigComplex> {
    let bits = target_bits + 32;
    let p = Precision::new(((bits * 10000) / 33220).max(16) as u32).unwrap();
    let z_w = z.with_bits(bits);
    let nu_w = nu.with_bits(bits);
    // adaptive tail sum_{s>=1} (-1)^s a_s/(s w^s) with w = z e^(i m pi),
    // i.e. w^s = (-1)^(ms) z^s
    let mut s_cap = 24usize;
    let tail = loop {
        let a = coeffs::build_a(&nu_w, s_cap);
        let inv_z = z_w.recip();
        let mut zpow = inv_z.clone();
        let mut acc = BigComplex::zero(&p).with_bits(bits);
        let mut min_exp = i64::MAX;
        let mut done = false;
        for (idx, a_s) in a.iter().enumerate() {
            let s = idx + 1;
            let mut sign = if s % 2 == 1 { -1 } else { 1 }; // (-1)^s
            if m != 0 && s % 2 == 1 {
                sign = -sign; // (-1)^(ms) for odd s, |m| = 1
            }
            let term = a_s.mul_i64(sign).div_i64(s as i64) * &zpow;
            let te = mag_exp(&term);
            if te > min_exp.saturating_add(16) {
                // tail has clearly turned before reaching target precision
                return Err(Error::Truncation {
                    last_term: 2f64.powi(min_exp.clamp(-1000, 1000) as i32),
                    index: s,
                });
            }
            acc = &acc + &term;
            zpow = &zpow * &inv_z;
            min_exp = min_exp.min(te);
            if te < -(bits as i64) - 8 {
                done = true;
                break;
            }
        }
        if done {
            break acc;
        }
        s_cap *= 2;
        if s_cap > 3000 {
            return Err(Error::Truncation {
                last_term: 1.0,
                index: s_cap,
            });
        }
    };
    // prefactor sqrt(pi/(2 w)) e^(-w), w = z e^(i m pi):
    // ln w = ln z + i m pi (principal z)
    let pi = BigReal::pi(&p);
    let ln_w = if m == 0 {
        z_w.ln()
    } else {
        &z_w.ln() + &BigComplex::new(BigReal::zero(&p), pi.mul_i64(m as i64))
    };
    let w = if m == 0 { z_w.clone() } else { -&z_w };
    let half = BigReal::from_ratio(1, 2, &p);
    let pref = (&BigComplex::from_real(pi.ln()) - &(&ln_w + &BigComplex::from_real(BigReal::from_i64(2, &p).ln())))
        .scale(&half)
        .exp();
    let val = &pref * &(&(-&w) - &tail).exp();
    Ok(val.with_bits(target_bits + 16))
}

/// Hankel H^(1) (sign = +1) or H^(2) (sign = -1) by the exponential form,
/// valid here for |arg w| <= pi - delta.
fn hankel_asym(nu: &BigComplex, w: &BigComplex, sign: i32, target_bits: usize) -> Result<BigComplex> {
    let bits = target_bits + 32;
    let p = Precision::new(((bits * 10000) / 33220).max(16) as u32).unwrap();
    let w_w = w.with_bits(bits);
    let nu_w = nu.with_bits(bits);
    let mut s_cap = 24usize;
    let tail = loop {
        let a = coeffs::build_a(&nu_w, s_cap);
        let inv_w = w_w.recip();
        let mut wpow = inv_w.clone();
        let mut acc = BigComplex::zero(&p).with_bits(bits);
        let mut min_exp = i64::MAX;
        let mut done = false;
        for (idx, a_s) in a.iter().enumerate() {
            let s = idx + 1;
            // H1 tail takes (-i)^s = i^(-s), H2 takes (+i)^s
            let phase = i_power(-sign * (s as i32), &p);
            let term = (&phase * a_s).div_i64(s as i64) * &wpow;
            let te = mag_exp(&term);
            if te > min_exp.saturating_add(16) {
                return Err(Error::Truncation {
                    last_term: 2f64.powi(min_exp.clamp(-1000, 1000) as i32),
                    index: s,
                });
            }
            acc = &acc + &term;
            wpow = &wpow * &inv_w;
            min_exp = min_exp.min(te);
            if te < -(bits as i64) - 8 {
                done = true;
                break;
            }
        }
        if done {
            break acc;
        }
        s_cap *= 2;
        if s_cap > 3000 {
            return Err(Error::Truncation {
                last_term: 1.0,
                index: s_cap,
            });
        }
    };
    // prefactor e^(-+(2 nu + 1) pi i/4) sqrt(2/(pi w)) e^(+-iw - tail)
    let quarter_turns = &(&nu_w.mul_i64(2) + &BigComplex::one(&p)).div_i64(4);
    let phase = exp_i_pi(&quarter_turns.mul_i64(-sign as i64), &p);
    let pref = (&BigComplex::from_real(BigReal::from_i64(2, &p).ln())
        - &(&w_w.ln() + &BigComplex::from_real(BigReal::pi(&p).ln())))
    .scale(&BigReal::from_ratio(1, 2, &p))
    .exp();
    let arg = if sign > 0 { w_w.mul_i() } else { w_w.div_i() };
    let val = &(&phase * &pref) * &(&arg - &tail).exp();
    Ok(val.with_bits(target_bits + 16))
}

/// i^k for integer k (exact quarter-turn phases).
fn i_power(k: i32, p: &Precision) -> BigComplex {
    match k.rem_euclid(4) {
        0 => BigComplex::one(p),
        1 => BigComplex::i(p),
        2 => -&BigComplex::one(p),
        _ => -&BigComplex::i(p),
    }
}

// ---------------------------------------------------------------------------
// complex-order dispatchers (crate-internal workhorses)
// ---------------------------------------------------------------------------

pub(crate) fn modified_i_co(nu: &BigComplex, z: &BigComplex) -> Result<BigComplex> {
    let bits = work_bits(nu, z);
    if z.is_zero() {
        let p = z.re().precision_ctx();
        if nu.is_zero() {
            return Ok(BigComplex::one(&p));
        }
        if nu.re().is_positive() {
            return Ok(BigComplex::zero(&p));
        }
        return Err(Error::Domain {
            func: "bessel_modified",
            msg: "I_nu(0) undefined for Re nu < 0 or imaginary order".into(),
        });
    }
    let zf = z.abs_value().to_f64();
    if zf < SERIES_LIMIT {
        let (i, _) = i_series(nu, z, bits, 0)?;
        return Ok(i.with_bits(bits + 16));
    }
    if zf < asym_limit(bits) {
        // CF1 ratio + Wronskian normalization: I_nu = 1/(z (K_{nu+1} + r K_nu))
        let r = cf1_ratio(nu, z, bits + 32)?;
        let k0 = k_from_i(nu, z, bits + 32)?;
        let k1 = k_from_i(&(nu + &BigComplex::one(&Precision::new(16).unwrap())), z, bits + 32)?;
        let denom = z * &(&k1 + &(&r * &k0));
        return Ok(denom.recip().with_bits(bits + 16));
    }
    // rotation of the exponential K form
    let m = if z.im().is_negative() { 1 } else { -1 };
    let k_rot = k_asym_rotated(nu, z, m, bits + 32)?;
    let k_pri = k_asym_rotated(nu, z, 0, bits + 32)?;
    let p = Precision::new(16).unwrap();
    let phase = exp_i_pi(&nu.mul_i64(-m as i64), &p);
    // I = +- [K(z e^(-+pi i)) - e^(+-nu pi i) K(z)] / (pi i)
    let num = &k_rot - &(&phase * &k_pri);
    let ip = num.div_i().scale(&BigReal::pi(&z.re().precision_ctx()).recip());
    let val = if m == -1 { ip } else { -ip };
    Ok(val.with_bits(bits + 16))
}

pub(crate) fn modified_k_co(nu: &BigComplex, z: &BigComplex) -> Result<BigComplex> {
    let bits = work_bits(nu, z);
    if z.is_zero() {
        return Err(Error::Singularity("K_nu(0)".into()));
    }
    let zf = z.abs_value().to_f64();
    if zf >= asym_limit(bits) {
        match k_asym_rotated(nu, z, 0, bits) {
            Ok(v) => return Ok(v),
            Err(Error::Truncation { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    k_from_i(nu, z, bits)
}

pub(crate) fn cyl_j_co(nu: &BigComplex, w: &BigComplex) -> Result<BigComplex> {
    let bits = work_bits(nu, w);
    if w.is_zero() {
        let p = w.re().precision_ctx();
        if nu.is_zero() {
            return Ok(BigComplex::one(&p));
        }
        if nu.re().is_positive() {
            return Ok(BigComplex::zero(&p));
        }
        return Err(Error::Domain {
            func: "bessel_cylinder",
            msg: "J_nu(0) undefined for Re nu < 0 or imaginary order".into(),
        });
    }
    let zf = w.abs_value().to_f64();
    if zf >= asym_limit(bits) {
        let h1 = hankel_asym(nu, w, 1, bits)?;
        let h2 = hankel_asym(nu, w, -1, bits)?;
        return Ok((&h1 + &h2).div_i64(2));
    }
    let p = Precision::new(16).unwrap();
    // rotate into the modified-Bessel half plane
    if !w.im().is_negative() {
        let phase = exp_i_pi(&nu.div_i64(2), &p);
        Ok(&phase * &modified_i_co(nu, &w.div_i())?)
    } else {
        let phase = exp_i_pi(&nu.div_i64(-2), &p);
        Ok(&phase * &modified_i_co(nu, &w.mul_i())?)
    }
}

pub(crate) fn cyl_y_co(nu: &BigComplex, w: &BigComplex) -> Result<BigComplex> {
    let bits = work_bits(nu, w);
    if w.is_zero() {
        return Err(Error::Singularity("Y_nu(0)".into()));
    }
    let zf = w.abs_value().to_f64();
    if zf >= asym_limit(bits) {
        let h1 = hankel_asym(nu, w, 1, bits)?;
        let h2 = hankel_asym(nu, w, -1, bits)?;
        return Ok((&h1 - &h2).div_i64(2).div_i());
    }
    let nf = nu.re().to_f64();
    let dist = (nf - nf.round()).abs();
    if nu.im().is_zero() && dist < 1e-6 {
        let digits = (bits as f64 / 3.322) as u32;
        let h_digits = digits / 2 + 2;
        let p = Precision::new(digits.max(16)).unwrap();
        let h = BigReal::from_i64(10, &p.raised(h_digits)).powi(-(h_digits as i64));
        let hc = BigComplex::from_real(h);
        let yp = y_direct(&(nu + &hc), w, bits, h_digits as usize * 4)?;
        let ym = y_direct(&(nu - &hc), w, bits, h_digits as usize * 4)?;
        return Ok((&yp + &ym).div_i64(2));
    }
    let s_probe = sin_pi_c(&nu.with_bits(64));
    let sin_loss = (-s_probe.abs_value().exponent()).max(0) as usize + 8;
    y_direct(nu, w, bits, sin_loss)
}

fn y_direct(nu: &BigComplex, w: &BigComplex, bits: usize, sin_loss: usize) -> Result<BigComplex> {
    let wb = bits + sin_loss + 32;
    let nu_w = nu.with_bits(wb);
    let w_w = w.with_bits(wb);
    let jp = cyl_j_co(&nu_w, &w_w)?;
    let jm = cyl_j_co(&(-&nu_w), &w_w)?;
    let p = Precision::new(((wb * 10000) / 33220).max(16) as u32).unwrap();
    let half = BigComplex::from_real(BigReal::from_ratio(1, 2, &p).with_bits(wb));
    let c = sin_pi_c(&(&nu_w + &half)); // cos(pi nu)
    let s = sin_pi_c(&nu_w);
    Ok((&(&jp * &c) - &jm).with_bits(bits + 16) / &s)
}

pub(crate) fn cyl_h1_co(nu: &BigComplex, w: &BigComplex) -> Result<BigComplex> {
    cyl_h_co(nu, w, 1)
}

pub(crate) fn cyl_h2_co(nu: &BigComplex, w: &BigComplex) -> Result<BigComplex> {
    cyl_h_co(nu, w, -1)
}

fn cyl_h_co(nu: &BigComplex, w: &BigComplex, sign: i32) -> Result<BigComplex> {
    let bits = work_bits(nu, w);
    let zf = w.abs_value().to_f64();
    if zf >= asym_limit(bits) {
        return hankel_asym(nu, w, sign, bits);
    }
    // J +- iY cancels e^(2|Im w|) when the dominant exponential dies
    let cancel = (2.9 * w.im().to_f64().abs()) as usize + 16;
    let wb = bits + cancel;
    let nu_w = nu.with_bits(wb);
    let w_w = w.with_bits(wb);
    let j = cyl_j_co(&nu_w, &w_w)?;
    let y = cyl_y_co(&nu_w, &w_w)?;
    let v = if sign > 0 {
        &j + &y.mul_i()
    } else {
        &j - &y.mul_i()
    };
    Ok(v.with_bits(bits + 16))
}

// ---------------------------------------------------------------------------
// public spec surface
// ---------------------------------------------------------------------------

/// I_mu or K_mu at complex argument, real order mu >= 0.
pub fn bessel_modified(mu: &BigReal, z: &BigComplex, which: ModKind) -> Result<BigComplex> {
    if mu.is_negative() {
        return Err(Error::Domain {
            func: "bessel_modified",
            msg: format!("order must be nonnegative, got {mu}"),
        });
    }
    let nu = BigComplex::from_real(mu.clone());
    match which {
        ModKind::I => modified_i_co(&nu, z),
        ModKind::K => modified_k_co(&nu, z),
    }
}

/// J, Y, H1 or H2 at complex argument, real order mu >= 0.
pub fn bessel_cylinder(mu: &BigReal, z: &BigComplex, which: CylKind) -> Result<BigComplex> {
    if mu.is_negative() {
        return Err(Error::Domain {
            func: "bessel_cylinder",
            msg: format!("order must be nonnegative, got {mu}"),
        });
    }
    let nu = BigComplex::from_real(mu.clone());
    match which {
        CylKind::J => cyl_j_co(&nu, z),
        CylKind::Y => cyl_y_co(&nu, z),
        CylKind::H1 => cyl_h1_co(&nu, z),
        CylKind::H2 => cyl_h2_co(&nu, z),
    }
}

/// K_mu(z e^(+-i pi)) by the standard continuation
/// K_nu(z e^(+-i pi)) = e^(-+ nu pi i) K_nu(z) -+ i pi I_nu(z).
pub fn bessel_k_rotated(mu: &BigReal, z: &BigComplex, plus: bool) -> Result<BigComplex> {
    k_rotated_co(&BigComplex::from_real(mu.clone()), z, plus)
}

pub(crate) fn k_rotated_co(nu: &BigComplex, z: &BigComplex, plus: bool) -> Result<BigComplex> {
    if z.is_zero() {
        return Err(Error::Singularity("K_nu at rotated zero argument".into()));
    }
    let p = nu.re().precision_ctx();
    let k = modified_k_co(nu, z)?;
    let i = modified_i_co(nu, z)?;
    let m: i64 = if plus { 1 } else { -1 };
    let phase = exp_i_pi(&nu.mul_i64(-m), &p);
    let ipi = i.scale(&BigReal::pi(&p)).mul_i().mul_i64(m);
    Ok(&(&phase * &k) - &ipi)
}

/// H^(1)_nu(w e^(2 pi i)) via the continuation of J and Y:
/// J(w e^(2pi i)) = e^(2 nu pi i) J(w),
/// Y(w e^(2pi i)) = e^(-2 nu pi i) Y(w) + 2i sin(2 nu pi) cot(nu pi) J(w).
pub fn hankel1_rotated_2pi(mu: &BigReal, w: &BigComplex) -> Result<BigComplex> {
    let p = mu.precision_ctx();
    let nf = mu.to_f64();
    if (nf - nf.round()).abs() < 1e-6 {
        // cot(nu pi) pole: average over mu +- h
        let h_digits = p.digits() / 2 + 2;
        let h = BigReal::from_i64(10, &p.raised(h_digits)).powi(-(h_digits as i64));
        let a = hankel1_rotated_2pi_direct(&(mu + &h), w)?;
        let b = hankel1_rotated_2pi_direct(&(mu - &h), w)?;
        return Ok((&a + &b).div_i64(2));
    }
    hankel1_rotated_2pi_direct(mu, w)
}

fn hankel1_rotated_2pi_direct(mu: &BigReal, w: &BigComplex) -> Result<BigComplex> {
    let p = mu.precision_ctx();
    let nu = BigComplex::from_real(mu.clone());
    let j = cyl_j_co(&nu, w)?;
    let y = cyl_y_co(&nu, w)?;
    let e2 = exp_i_pi(&nu.mul_i64(2), &p);
    let e2m = exp_i_pi(&nu.mul_i64(-2), &p);
    let s2 = sin_pi_c(&nu.mul_i64(2));
    let s1 = sin_pi_c(&nu);
    let half = BigComplex::from_real(BigReal::from_ratio(1, 2, &p));
    let c1 = sin_pi_c(&(&nu + &half));
    let cot = &c1 / &s1;
    let j2 = &e2 * &j;
    let y2 = &(&e2m * &y) + &(&(&s2 * &cot) * &j).mul_i().mul_i64(2);
    Ok(&j2 + &y2.mul_i())
}

/// The exponential expansion of K truncated at n terms:
/// sqrt(pi/(2z)) exp{-z - sum_{s=1}^n (-1)^s a_{mu,s}/(s z^s)}.
pub fn bessel_k_exponential_expansion(
    mu: &BigReal,
    z: &BigComplex,
    n: usize,
) -> Result<BigComplex> {
    let p = mu.precision_ctx();
    let nu = BigComplex::from_real(mu.clone());
    let a = coeffs::build_a(&nu, n);
    let one = BigReal::one(&p);
    let mut tail = BigComplex::zero(&p);
    let inv_z = z.recip();
    let mut zpow = inv_z.clone();
    for (idx, a_s) in a.iter().enumerate() {
        let s = idx + 1;
        let sign = if s % 2 == 1 { -1 } else { 1 };
        let term = a_s.mul_i64(sign).div_i64(s as i64) * &zpow;
        if s == n && term.abs_value() >= one {
            return Err(Error::Truncation {
                last_term: term.abs_value().to_f64(),
                index: s,
            });
        }
        tail = &tail + &term;
        zpow = &zpow * &inv_z;
    }
    let pref = (&BigComplex::from_real(BigReal::pi(&p))
        / &z.mul_i64(2))
        .sqrt();
    Ok(&pref * &(&(-z) - &tail).exp())
}

/// Real K_(i rho)(x) and K'_(i rho)(x) for x > 0.
pub fn bessel_k_imag_order(rho: &BigReal, x: &BigReal) -> Result<(BigReal, BigReal)> {
    if !x.is_positive() {
        return Err(Error::Domain {
            func: "bessel_k_imag_order",
            msg: "argument must be positive".into(),
        });
    }
    if rho.is_negative() {
        return Err(Error::Domain {
            func: "bessel_k_imag_order",
            msg: "rho must be nonnegative".into(),
        });
    }
    let p = x.precision_ctx();
    let bits = x.bits().max(rho.bits());
    let xf = x.to_f64();
    if rho.is_zero() {
        // order zero: real-order path; K_0' = -K_1
        let z = BigComplex::from_real(x.clone());
        let k0 = modified_k_co(&BigComplex::zero(&p), &z)?;
        let k1 = modified_k_co(&BigComplex::one(&p), &z)?;
        return Ok((k0.re().clone(), -k1.re()));
    }
    if xf >= asym_limit(bits) {
        // exponential form with real a_(i rho, s); the derivative comes from
        // K'_(i rho) = -Re K_(1 + i rho) (evenness of K in the order plus
        // conjugate symmetry on the real axis)
        let nu = BigComplex::new(BigReal::zero(&p), rho.clone());
        let z = BigComplex::from_real(x.clone());
        let k = k_asym_rotated(&nu, &z, 0, bits)?;
        let nu1 = &nu + &BigComplex::one(&p);
        let k1 = k_asym_rotated(&nu1, &z, 0, bits)?;
        return Ok((k.re().clone(), -k1.re()));
    }
    // series route: K = pi Im(I_(-i rho)) / sinh(pi rho), and likewise for K'
    let rf = rho.to_f64();
    let im_loss = if rf < 1.0 {
        (-rf.max(1e-300).log2()).max(0.0) as usize + 8
    } else {
        0
    };
    let cancel = (2.92 * xf) as usize + im_loss + 32;
    let wb = bits + cancel;
    let nu = BigComplex::new(BigReal::zero(&p), -&rho.with_bits(wb));
    let z = BigComplex::from_real(x.with_bits(wb));
    let (i_m, di_m) = i_series(&nu, &z, wb, 0)?;
    let wp = Precision::new(((wb * 10000) / 33220).max(16) as u32).unwrap();
    let pi = BigReal::pi(&wp);
    let denom = (&pi * &rho.with_bits(wb)).sinh();
    let k = &(&pi * i_m.im()) / &denom;
    let kd = &(&pi * di_m.im()) / &denom;
    Ok((k.with_bits(bits + 16), kd.with_bits(bits + 16)))
}

#[cfg(test)]
mod tests;
