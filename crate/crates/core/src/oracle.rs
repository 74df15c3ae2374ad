//! Convergent-series ground truth for P, Q and the Ferrers functions.
//!
//! Everything here is for test and validation only; the production
//! evaluators never call into this module. Two series routes cover the
//! needed territory:
//!
//! * the hypergeometric representation of P for |(1-z)/2| <= 0.75;
//! * the 1/z^2 series of Q for |z| >= 1.3, with a fallback that assembles Q
//!   from P of orders +-mu (Richardson-extrapolated in mu where sin(mu pi)
//!   nearly vanishes).
//!
//! The two zones overlap and every reference experiment lands in at least
//! one of them.

use crate::arith::{BigComplex, BigReal, Precision};

fn mag_exp(z: &BigComplex) -> i64 {
    if z.is_zero() {
        return i64::MIN / 2;
    }
    let re_e = if z.re().is_zero() { i64::MIN / 2 } else { z.re().exponent() };
    let im_e = if z.im().is_zero() { i64::MIN / 2 } else { z.im().exponent() };
    re_e.max(im_e)
}
use crate::error::{Error, Result};
use crate::maps::CutSide;
use crate::specfun::gamma;

/// A series evaluation together with its truncation diagnostics.
#[derive(Debug, Clone)]
pub struct SeriesResult {
    pub value: BigComplex,
    pub terms: usize,
    pub tail_bound: BigReal,
}

/// Olver's scaled hypergeometric function
/// F(a,b;c;w) = sum (a)_s (b)_s w^s / (Gamma(c+s) s!), entire in c.
pub fn hyp2f1_reg(
    a: &BigComplex,
    b: &BigComplex,
    c: &BigComplex,
    w: &BigComplex,
) -> Result<SeriesResult> {
    let wf = w.abs_value().to_f64();
    if wf > 0.75 {
        return Err(Error::Domain {
            func: "hyp2f1_reg",
            msg: format!("|w| = {wf} outside the direct series zone (<= 0.75)"),
        });
    }
    let base_bits = a.bits().max(b.bits()).max(c.bits()).max(w.bits());
    let mut extra = 48usize;
    for _ in 0..4 {
        let bits = base_bits + extra;
        let aw = a.with_bits(bits);
        let bw = b.with_bits(bits);
        let cw = c.with_bits(bits);
        let ww = w.with_bits(bits);
        let p = Precision::new(((bits * 10000) / 33220).max(16) as u32).unwrap();
        // u_s = (a)_s (b)_s w^s / s!; g_s = 1/Gamma(c+s)
        let mut u = BigComplex::one(&p).with_bits(bits);
        let mut g = match gamma(&cw) {
            Ok(v) => v.recip(),
            Err(Error::Pole(_)) => BigComplex::zero(&p).with_bits(bits),
            Err(e) => return Err(e),
        };
        let mut sum = &u * &g;
        let mut max_exp = mag_exp(&sum);
        let mut s: i64 = 0;
        let mut small = 0;
        let (term_final, converged) = loop {
            let sc = BigComplex::from_i64(s, &p);
            let cps = &cw + &sc;
            // advance u and g to index s+1
            u = &(&u * &(&aw + &sc)) * &(&bw + &sc) * &ww;
            u = u.div_i64(s + 1);
            if cps.abs_value().to_f64() < 1e-3 {
                // refresh 1/Gamma across (or at) a pole of Gamma(c+s)
                let next = &cps + &BigComplex::one(&p);
                g = match gamma(&next) {
                    Ok(v) => v.recip(),
                    Err(Error::Pole(_)) => BigComplex::zero(&p).with_bits(bits),
                    Err(e) => return Err(e),
                };
            } else {
                g = &g / &cps;
            }
            s += 1;
            let term = &u * &g;
            sum = &sum + &term;
            if term.is_zero() {
                // terminating series (nonpositive-integer a or b) or w = 0
                break (term, true);
            }
            let te = mag_exp(&term);
            max_exp = max_exp.max(te);
            if te < mag_exp(&sum) - bits as i64 - 8 && s > 4 {
                small += 1;
                if small >= 2 {
                    break (term, true);
                }
            } else {
                small = 0;
            }
            if s > 500_000 {
                break (term, false);
            }
        };
        if !converged {
            return Err(Error::Internal("hypergeometric series stalled".into()));
        }
        let deficit = (max_exp - mag_exp(&sum)).max(0) as usize;
        if deficit + 24 > extra {
            extra = deficit + 48;
            continue;
        }
        // geometric tail domination: ratio tends to |w| <= 0.75
        let tail = term_final.abs_value().mul_i64(4);
        return Ok(SeriesResult {
            value: sum.with_bits(base_bits),
            terms: s as usize,
            tail_bound: tail,
        });
    }
    Err(Error::Internal("hypergeometric escalation did not settle".into()))
}

fn ln_ratio_cut_aware(z: &BigComplex, side: CutSide) -> Result<BigComplex> {
    // ln((z-1)/(z+1)) with the side annotation controlling the branch of
    // ln(z-1) on the cut
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    let zm = z - &one;
    let zp = z + &one;
    if zm.is_real() && !zm.re().is_positive() {
        let above = match side {
            CutSide::Above => true,
            CutSide::Below => false,
            CutSide::None => {
                return Err(Error::Branch(
                    "oracle evaluation on the cut needs a side annotation".into(),
                ))
            }
        };
        let pr = z.re().precision_ctx();
        let pi = BigReal::pi(&pr);
        let im = if above { pi } else { -&pi };
        let lm = BigComplex::new(zm.re().abs().ln(), im);
        return Ok(&lm - &zp.ln());
    }
    Ok(&zm.ln() - &zp.ln())
}

/// P_nu^(-mu)(z) by the hypergeometric representation; requires
/// |(1-z)/2| <= 0.75. `mu` is the (possibly complex) order as written, i.e.
/// this computes the function of order -mu; pass a negated `mu` for P^(+mu).
pub fn p_ref(
    nu: &BigComplex,
    mu: &BigComplex,
    z: &BigComplex,
    side: CutSide,
) -> Result<SeriesResult> {
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    let w = (&one - z).div_i64(2);
    let f = hyp2f1_reg(&(nu + &one), &(-nu), &(&one + mu), &w)?;
    let lr = ln_ratio_cut_aware(z, side)?;
    let pw = (&lr * &mu.div_i64(2)).exp();
    Ok(SeriesResult {
        value: &pw * &f.value,
        terms: f.terms,
        tail_bound: &f.tail_bound * &pw.abs_value(),
    })
}

/// Q_nu^mu(z); route A is the 1/z^2 series (|z| >= 1.3), route B assembles Q
/// from P of orders +-mu via the connection formula, Richardson-extrapolating
/// in mu when sin(mu pi) nearly vanishes.
pub fn q_ref(
    nu: &BigComplex,
    mu: &BigComplex,
    z: &BigComplex,
    side: CutSide,
) -> Result<SeriesResult> {
    let zf = z.abs_value().to_f64();
    if zf >= 1.3 {
        return q_series_large(nu, mu, z);
    }
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    let w = (&one - z).div_i64(2);
    if w.abs_value().to_f64() <= 0.75 {
        return q_from_p(nu, mu, z, side);
    }
    Err(Error::OracleGap(format!(
        "no series route covers z = {z} (|z| < 1.3 and |(1-z)/2| > 0.75)"
    )))
}

fn q_series_large(nu: &BigComplex, mu: &BigComplex, z: &BigComplex) -> Result<SeriesResult> {
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    let half = BigComplex::from_real(BigReal::from_ratio(1, 2, &p));
    let a = &(nu + mu).div_i64(2) + &one;
    let b = &a - &half;
    let c = &(nu + &one) + &half;
    let w = z.square().recip();
    let f = hyp2f1_reg(&a, &b, &c, &w)?;
    // sqrt(pi) (z^2-1)^(mu/2) / (2^(nu+1) z^(nu+mu+1))
    let pr = z.re().precision_ctx();
    let ln_zm = (z - &one).ln();
    let ln_zp = (z + &one).ln();
    let ln_z = z.ln();
    let ln2 = BigComplex::from_real(BigReal::from_i64(2, &pr).ln());
    let expo = &(&(&ln_zm + &ln_zp) * &mu.div_i64(2))
        - &(&(&(nu + &one) * &ln2) + &(&(&(nu + mu) + &one) * &ln_z));
    let pref = expo.exp().scale(&BigReal::pi(&pr).sqrt());
    Ok(SeriesResult {
        value: &pref * &f.value,
        terms: f.terms,
        tail_bound: &f.tail_bound * &pref.abs_value(),
    })
}

fn q_from_p_once(
    nu: &BigComplex,
    mu: &BigComplex,
    z: &BigComplex,
    side: CutSide,
) -> Result<SeriesResult> {
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    let pr = z.re().precision_ctx();
    let p_plus = p_ref(nu, &(-mu), z, side)?; // P^(+mu)
    let p_minus = p_ref(nu, mu, z, side)?; // P^(-mu)
    let g_plus = gamma(&(&(nu + mu) + &one))?;
    let g_minus = gamma(&(&(nu - mu) + &one))?;
    let s = sin_pi(mu, &pr);
    let diff = &(&p_plus.value / &g_plus) - &(&p_minus.value / &g_minus);
    let q = diff.scale(&BigReal::pi(&pr)) / &s.mul_i64(2);
    let tail = &(&p_plus.tail_bound + &p_minus.tail_bound)
        / &(&s.abs_value() * &g_minus.abs_value().min(&g_plus.abs_value()));
    Ok(SeriesResult {
        value: q,
        terms: p_plus.terms + p_minus.terms,
        tail_bound: tail,
    })
}

fn sin_pi(v: &BigComplex, pr: &Precision) -> BigComplex {
    let m = v.re().to_f64().round();
    if m.abs() < 1e15 {
        let vr = v - &BigComplex::from_real(BigReal::from_f64(m, pr).with_bits(v.bits()));
        let s = vr.scale(&BigReal::pi(pr)).sin();
        if (m as i64) % 2 == 0 {
            s
        } else {
            -s
        }
    } else {
        v.scale(&BigReal::pi(pr)).sin()
    }
}

fn q_from_p(
    nu: &BigComplex,
    mu: &BigComplex,
    z: &BigComplex,
    side: CutSide,
) -> Result<SeriesResult> {
    let pr = z.re().precision_ctx();
    let s = sin_pi(mu, &pr);
    if s.abs_value().to_f64() > 0.01 {
        return q_from_p_once(nu, mu, z, side);
    }
    // sin(mu pi) ~ 0: symmetric 4-point Richardson in the order, with the
    // sin loss absorbed by escalated working precision
    let digits = pr.digits();
    let eps_digits = digits / 4 + 2;
    let wp = Precision::new(digits + eps_digits + 8).unwrap();
    let eps = BigComplex::from_real(
        BigReal::from_i64(10, &wp).powi(-(eps_digits as i64)),
    );
    let nu_w = nu.with_bits(wp.bits());
    let mu_w = mu.with_bits(wp.bits());
    let z_w = z.with_bits(wp.bits());
    let f1p = q_from_p_once(&nu_w, &(&mu_w + &eps), &z_w, side)?;
    let f1m = q_from_p_once(&nu_w, &(&mu_w - &eps), &z_w, side)?;
    let f2p = q_from_p_once(&nu_w, &(&mu_w + &eps.mul_i64(2)), &z_w, side)?;
    let f2m = q_from_p_once(&nu_w, &(&mu_w - &eps.mul_i64(2)), &z_w, side)?;
    // f(0) = [16(f(e)+f(-e)) - (f(2e)+f(-2e))]/30 ... for even+odd mix the
    // 4-point rule with O(eps^4) error is [4(f1p+f1m) - (f2p+f2m)]/6
    let value = (&(&f1p.value + &f1m.value).mul_i64(4) - &(&f2p.value + &f2m.value)).div_i64(6);
    let tail = f1p
        .tail_bound
        .max(&f1m.tail_bound)
        .max(&f2p.tail_bound.max(&f2m.tail_bound));
    Ok(SeriesResult {
        value: value.with_bits(z.bits()),
        terms: f1p.terms + f1m.terms + f2p.terms + f2m.terms,
        tail_bound: tail,
    })
}

/// Q branches around z = 1 from the principal functions:
/// Q_(nu,+-1) = e^(-+ mu pi i) Q -+ (pi i / Gamma(nu - mu + 1)) P^(-mu).
pub fn q_branch_ref(
    nu: &BigComplex,
    mu: &BigComplex,
    z: &BigComplex,
    side: CutSide,
    positive: bool,
) -> Result<BigComplex> {
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    let pr = z.re().precision_ctx();
    let q = q_ref(nu, mu, z, side)?.value;
    let pm = p_ref(nu, mu, z, side)?.value;
    let g = gamma(&(&(nu - mu) + &one))?;
    let sgn: i64 = if positive { 1 } else { -1 };
    let phase = exp_i_pi_c(&mu.mul_i64(-sgn), &pr);
    let corr = (&pm / &g).scale(&BigReal::pi(&pr)).mul_i().mul_i64(sgn);
    Ok(&(&phase * &q) - &corr)
}

fn exp_i_pi_c(v: &BigComplex, pr: &Precision) -> BigComplex {
    let half = BigComplex::from_real(BigReal::from_ratio(1, 2, pr).with_bits(v.bits()));
    let s = sin_pi(v, pr);
    let c = sin_pi(&(v + &half), pr);
    &c + &s.mul_i()
}

/// Ferrers P (which = P) or Ferrers Q (which = Q) on (-1, 1), real-valued.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FerrersKind {
    P,
    Q,
}

pub fn ferrers_ref(
    which: FerrersKind,
    nu: &BigComplex,
    mu: &BigComplex,
    x: &BigReal,
) -> Result<BigReal> {
    let xf = x.to_f64();
    if xf <= -1.0 || xf >= 1.0 {
        return Err(Error::Domain {
            func: "ferrers_ref",
            msg: "x must lie inside (-1, 1)".into(),
        });
    }
    let pr = x.precision_ctx();
    let z = BigComplex::from_real(x.clone());
    match which {
        FerrersKind::P => {
            // e^(-+ mu pi i/2) P^(-mu)(x +- i0); both sides agree, use Above
            let pv = p_ref(nu, mu, &z, CutSide::Above)?.value;
            let phase = exp_i_pi_c(&mu.div_i64(-2), &pr);
            let v = &phase * &pv;
            let tol = &pr.tol(6) * &v.abs_value().max(&BigReal::one(&pr));
            if v.im().abs() > tol {
                return Err(Error::Internal(format!(
                    "Ferrers P not real: {v}"
                )));
            }
            Ok(v.re().clone())
        }
        FerrersKind::Q => {
            // (1/2) Gamma(nu - mu + 1) { e^(mu pi i/2) Q(x+i0) + e^(-mu pi i/2) Q(x-i0) }
            let p = Precision::new(16).unwrap();
            let one = BigComplex::one(&p);
            let qa = q_ref(nu, mu, &z, CutSide::Above)?.value;
            let qb = q_ref(nu, mu, &z, CutSide::Below)?.value;
            let ep = exp_i_pi_c(&mu.div_i64(2), &pr);
            let em = exp_i_pi_c(&mu.div_i64(-2), &pr);
            let g = gamma(&(&(nu - mu) + &one))?;
            let v = (&(&ep * &qa) + &(&em * &qb)).div_i64(2) * &g;
            let tol = &pr.tol(6) * &v.abs_value().max(&BigReal::one(&pr));
            if v.im().abs() > tol {
                return Err(Error::Internal(format!("Ferrers Q not real: {v}")));
            }
            Ok(v.re().clone())
        }
    }
}

// ---------------------------------------------------------------------------
// identity suite
// ---------------------------------------------------------------------------

/// One identity-residual measurement.
#[derive(Debug, Clone)]
pub struct IdentityResidual {
    pub name: &'static str,
    pub at: String,
    pub residual: f64,
}

/// R_nu^mu(z) - 1 from oracle values (identically zero in exact arithmetic):
/// R = Gamma(nu+mu+2) { (mu-nu-1) P_nu^(-mu) Q_(nu+1)^mu + P_(nu+1)^(-mu) Q_nu^mu }.
pub fn r_identity_oracle(
    nu: &BigComplex,
    mu: &BigComplex,
    z: &BigComplex,
    side: CutSide,
) -> Result<BigReal> {
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    let two = BigComplex::from_i64(2, &p);
    let g = gamma(&(&(nu + mu) + &two))?;
    let p0 = p_ref(nu, mu, z, side)?.value;
    let p1 = p_ref(&(nu + &one), mu, z, side)?.value;
    let q0 = q_ref(nu, mu, z, side)?.value;
    let q1 = q_ref(&(nu + &one), mu, z, side)?.value;
    let coef = &(mu - nu) - &one;
    let r = &g * &(&(&(&coef * &p0) * &q1) + &(&p1 * &q0));
    Ok((&r - &one).abs_value())
}

/// Ferrers R-bar identity residual from oracle values:
/// R = (Gamma(nu+mu+2)/Gamma(nu-mu+1)) { P_(nu+1) Q_nu - P_nu Q_(nu+1) } - 1.
pub fn r_bar_identity_oracle(
    nu: &BigComplex,
    mu: &BigComplex,
    x: &BigReal,
) -> Result<BigReal> {
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    let two = BigComplex::from_i64(2, &p);
    let ga = gamma(&(&(nu + mu) + &two))?;
    let gb = gamma(&(&(nu - mu) + &one))?;
    let p0 = ferrers_ref(FerrersKind::P, nu, mu, x)?;
    let p1 = ferrers_ref(FerrersKind::P, &(nu + &one), mu, x)?;
    let q0 = ferrers_ref(FerrersKind::Q, nu, mu, x)?;
    let q1 = ferrers_ref(FerrersKind::Q, &(nu + &one), mu, x)?;
    let ratio = (&ga / &gb).re().clone();
    let r = &ratio * &(&(&p1 * &q0) - &(&p0 * &q1));
    Ok((&r - &BigReal::one(&p)).abs())
}

/// Ferrers S identity residual from oracle values:
/// S = (1/2) Gamma(nu+mu+2) Gamma(mu-nu) { P_(nu+1)(x) P_nu(-x) + P_nu(x) P_(nu+1)(-x) } - 1.
pub fn s_identity_oracle(nu: &BigComplex, mu: &BigComplex, x: &BigReal) -> Result<BigReal> {
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    let two = BigComplex::from_i64(2, &p);
    let ga = gamma(&(&(nu + mu) + &two))?;
    let gb = gamma(&(mu - nu))?;
    let xm = -x;
    let p0 = ferrers_ref(FerrersKind::P, nu, mu, x)?;
    let p1 = ferrers_ref(FerrersKind::P, &(nu + &one), mu, x)?;
    let p0m = ferrers_ref(FerrersKind::P, nu, mu, &xm)?;
    let p1m = ferrers_ref(FerrersKind::P, &(nu + &one), mu, &xm)?;
    let s = &(&ga * &gb).re().scale_pow2(-1) * &(&(&p1 * &p0m) + &(&p0 * &p1m));
    Ok((&s - &BigReal::one(&p)).abs())
}
