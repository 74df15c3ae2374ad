//! Ferrers-function evaluators on (-1, 1).
//!
//! The large-degree families come from evaluating the complex expansions at
//! the upper edge of the cut (xi = i eta, beta = -i gamma) where every
//! combination collapses to real J/Y (or I) Bessel assemblies. Near x = 1
//! the composite coefficients blow up individually and the re-expanded
//! inverse-power coefficients (removable at x = 1) take over. Negative x is
//! reached only through the standard connection formulas.
//!
//! The large-order family is the elementary (exponential) LG form with the
//! p, chi variables; no Bessel functions appear.

use super::{ab_composite, Config, DegreeParam, EvalResult, Method};
use crate::arith::{BigComplex, BigReal, Precision};
use crate::coeffs::{self, ReexpandedFerrers};
use crate::error::{Error, Result};
use crate::maps::{self, Alpha};
use crate::specfun;

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FerrersWhich {
    P,
    Q,
}

/// Parameter case of the elementary large-order expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LgCase {
    Real,
    Conical,
}

thread_local! {
    static REEXP_CACHE: RefCell<HashMap<String, Rc<ReexpandedFerrers>>> =
        RefCell::new(HashMap::new());
}

fn cached_reexp(mu: &BigReal, s_cap: usize, p: &Precision) -> Result<Rc<ReexpandedFerrers>> {
    let key = format!("{}|{}|{}", mu.to_string_digits(p.digits()), s_cap, p.digits());
    REEXP_CACHE.with(|c| {
        if let Some(t) = c.borrow().get(&key) {
            return Ok(t.clone());
        }
        let t = Rc::new(coeffs::reexpand_ab_ferrers(
            &BigComplex::from_real(mu.clone()),
            s_cap,
            p,
        )?);
        c.borrow_mut().insert(key, t.clone());
        Ok(t)
    })
}

/// Real composite coefficients A(u, x), B(u, x) for the Ferrers interval,
/// from the unified complex composite at x + i0.
pub fn ferrers_ab_composite(
    mu: &BigReal,
    u: &BigComplex,
    fv: &maps::FerrersVars,
    cfg: &Config,
) -> Result<(BigReal, BigReal, f64)> {
    let p = &cfg.precision;
    let table = coeffs::cached_table(&BigComplex::from_real(mu.clone()), 2 * cfg.n + 1, p)?;
    let xi = BigComplex::new(BigReal::zero(p), fv.eta.clone());
    let beta = BigComplex::new(BigReal::zero(p), -&fv.gamma);
    let (a, b, tag) = ab_composite(&table, u, &beta, &xi, cfg.n, p)?;
    let scale = a.abs_value().max(&b.abs_value()).max(&BigReal::one(p));
    let tol = &p.tol(8) * &scale;
    if a.im().abs() > tol || b.im().abs() > tol {
        return Err(Error::Internal(format!(
            "Ferrers composite coefficients not real: A = {a}, B = {b}"
        )));
    }
    Ok((a.re().clone(), b.re().clone(), tag))
}

/// Re-expanded A, B (inverse powers of u with coefficients removable at
/// x = 1): A = 1 + sum_(s=1..N) A_2s/u^2s, B = sum_(s=0..N-1) B_(2s+1)/u^(2s+1).
pub fn ferrers_ab_reexpanded(
    mu: &BigReal,
    u: &BigReal,
    fv: &maps::FerrersVars,
    n: usize,
    p: &Precision,
) -> Result<(BigReal, BigReal)> {
    let tables = cached_reexp(mu, n, p)?;
    let inv_u2 = u.square().recip();
    let mut a = BigReal::one(p);
    let mut pw = inv_u2.clone();
    for s in 1..=n {
        a = &a + &(&tables.coeff_a(s, fv) * &pw);
        pw = &pw * &inv_u2;
    }
    let mut b = BigReal::zero(p);
    let mut pw = u.recip();
    for s in 0..n {
        b = &b + &(&tables.coeff_b(s, fv) * &pw);
        pw = &pw * &inv_u2;
    }
    Ok((a, b))
}

/// Ferrers P or Q for large real degree, uniformly on [0, 1).
///
/// For x <= 1 - r the composite coefficient sums are used directly
/// (method Direct); beyond that the re-expanded coefficients take over
/// (method Reexpanded). `force_reexpanded` pins the re-expanded route
/// everywhere, which is what the identity-residual verification sweeps use.
/// Negative x goes through the connection formulas.
pub fn ferrers_large_nu(
    which: FerrersWhich,
    nu: &BigReal,
    mu: &BigReal,
    x: &BigReal,
    cfg: &Config,
    force_reexpanded: bool,
) -> Result<EvalResult> {
    let p = &cfg.precision;
    if x.is_negative() {
        return ferrers_negative_x(which, nu, mu, x, cfg, force_reexpanded);
    }
    if mu.is_negative() {
        return Err(Error::Regime("mu >= 0 required on the Ferrers interval".into()));
    }
    let fv = maps::ferrers_vars(x)?;
    let half = BigReal::from_ratio(1, 2, p);
    let u = nu + &half;
    let use_reexp = force_reexpanded || x.to_f64() > 1.0 - cfg.pole_radius;
    let (a, b, method, tag) = if use_reexp {
        let (a, b) = ferrers_ab_reexpanded(mu, &u, &fv, cfg.n, p)?;
        (a, b, Method::Reexpanded, 0.0)
    } else {
        let (a, b, tag) = ferrers_ab_composite(mu, &BigComplex::from_real(u.clone()), &fv, cfg)?;
        (a, b, Method::Direct, tag)
    };

    let value = assemble_ferrers_jy(which, nu, mu, &fv, &u, &a, &b, p)?;
    Ok(EvalResult {
        value: BigComplex::from_real(value),
        a_coeff: BigComplex::from_real(a),
        b_coeff: BigComplex::from_real(b),
        method,
        n_used: cfg.n,
        accuracy_tag: tag,
    })
}

/// The J/Y assemblies
/// P = L Gamma(nu-mu+1) (1-x^2)^(-1/4) eta^(1/2) { J_mu(u eta) A - eta J_(mu+1)(u eta) B },
/// Q = -(pi/2) L Gamma(nu-mu+1) (1-x^2)^(-1/4) eta^(1/2) { Y_mu(u eta) A - eta Y_(mu+1)(u eta) B }.
#[allow(clippy::too_many_arguments)]
fn assemble_ferrers_jy(
    which: FerrersWhich,
    nu: &BigReal,
    mu: &BigReal,
    fv: &maps::FerrersVars,
    u: &BigReal,
    a: &BigReal,
    b: &BigReal,
    p: &Precision,
) -> Result<BigReal> {
    let one = BigReal::one(p);
    let mu_c = BigComplex::from_real(mu.clone());
    let nu_c = BigComplex::from_real(nu.clone());
    let l = super::l_const(&nu_c, &mu_c, p)?;
    let g = specfun::gamma(&(&(&nu_c - &mu_c) + &BigComplex::one(p)))?;
    let pref = (&l * &g).re().clone();
    let quarter = (&one - &x_sq(fv)).pow(&BigReal::from_ratio(-1, 4, p));
    let w = BigComplex::from_real(u * &fv.eta);
    let mu1 = mu + &one;
    let (c0, c1) = match which {
        FerrersWhich::P => (
            specfun::bessel_cylinder(mu, &w, specfun::CylKind::J)?,
            specfun::bessel_cylinder(&mu1, &w, specfun::CylKind::J)?,
        ),
        FerrersWhich::Q => (
            specfun::bessel_cylinder(mu, &w, specfun::CylKind::Y)?,
            specfun::bessel_cylinder(&mu1, &w, specfun::CylKind::Y)?,
        ),
    };
    let bracket = &(c0.re() * a) - &(&(&fv.eta * c1.re()) * b);
    let mut value = &(&pref * &quarter) * &(&fv.eta.sqrt() * &bracket);
    if matches!(which, FerrersWhich::Q) {
        value = -&(&value * &BigReal::pi(p).scale_pow2(-1));
    }
    Ok(value)
}

fn x_sq(fv: &maps::FerrersVars) -> BigReal {
    fv.x.square()
}

/// Negative argument through the connection formulas:
/// P(-x) =  cos((nu-mu) pi) P(x) - (2/pi) sin((nu-mu) pi) Q(x),
/// Q(-x) = -cos((nu-mu) pi) Q(x) - (pi/2) sin((nu-mu) pi) P(x).
fn ferrers_negative_x(
    which: FerrersWhich,
    nu: &BigReal,
    mu: &BigReal,
    x: &BigReal,
    cfg: &Config,
    force_reexpanded: bool,
) -> Result<EvalResult> {
    let p = &cfg.precision;
    let ax = x.abs();
    let pv = ferrers_large_nu(FerrersWhich::P, nu, mu, &ax, cfg, force_reexpanded)?;
    let qv = ferrers_large_nu(FerrersWhich::Q, nu, mu, &ax, cfg, force_reexpanded)?;
    let arg = BigComplex::from_real(nu - mu);
    let c = cos_pi_r(&arg, p);
    let s = sin_pi_r(&arg, p);
    let pi = BigReal::pi(p);
    let (pr, qr) = (pv.value.re().clone(), qv.value.re().clone());
    let value = match which {
        FerrersWhich::P => &(&c * &pr) - &(&(&s * &qr).scale_pow2(1) / &pi),
        FerrersWhich::Q => -&(&(&c * &qr) + &(&(&pi * &s).scale_pow2(-1) * &pr)),
    };
    Ok(EvalResult {
        value: BigComplex::from_real(value),
        a_coeff: pv.a_coeff,
        b_coeff: pv.b_coeff,
        method: pv.method,
        n_used: cfg.n,
        accuracy_tag: pv.accuracy_tag,
    })
}

fn sin_pi_r(v: &BigComplex, p: &Precision) -> BigReal {
    super::sin_pi_c(v, p).re().clone()
}

fn cos_pi_r(v: &BigComplex, p: &Precision) -> BigReal {
    let half = BigComplex::from_real(BigReal::from_ratio(1, 2, p));
    super::sin_pi_c(&(v + &half), p).re().clone()
}

/// Conical Ferrers function P^(-mu)_(-1/2 + i tau)(x) for large tau, real
/// valued; computed as the x + i0 limit of the complex conical expansion
/// with the (5.1) phase.
pub fn ferrers_conical(
    tau: &BigReal,
    mu: &BigReal,
    x: &BigReal,
    cfg: &Config,
) -> Result<EvalResult> {
    let p = &cfg.precision;
    let xf = x.to_f64();
    if !(0.0..1.0).contains(&xf) {
        return Err(Error::Domain {
            func: "ferrers_conical",
            msg: "x in [0, 1) required (negative x via connection formulas)".into(),
        });
    }
    let az = maps::AnnotatedZ::with_side(
        BigComplex::from_real(x.clone()),
        maps::CutSide::Above,
    );
    let inner = super::conical_large_tau(super::LegendreKind::PMinus, tau, mu, &az, cfg, None)?;
    let phase = super::exp_i_pi_c(&BigComplex::from_real(mu.div_i64(-2)), p);
    let v = &phase * &inner.value;
    // real up to a relatively exponentially small imaginary part (~ e^(-pi tau))
    let tol = &BigReal::parse("1e-12", p).unwrap() * &v.abs_value();
    if v.im().abs() > tol {
        return Err(Error::Internal(format!(
            "conical Ferrers value not real within tolerance: {v}"
        )));
    }
    Ok(EvalResult {
        value: BigComplex::from_real(v.re().clone()),
        a_coeff: inner.a_coeff,
        b_coeff: inner.b_coeff,
        method: inner.method,
        n_used: cfg.n,
        accuracy_tag: inner.accuracy_tag,
    })
}

/// Elementary large-order LG expansion of P^(-mu)(+-x) on (-1, 1):
///
/// P^(-mu)(+-x) = pref(x) exp{ -+ mu chi + sum_(s=1..N-1) (-+1)^s E_s(alpha, p)/mu^s }
///
/// with the error term set to zero. `plus_branch` selects P(+x); cfg.n is
/// the paper-style N (the sum stops at N-1).
pub fn ferrers_large_mu_lg(
    plus_branch: bool,
    degree: &DegreeParam,
    mu: &BigReal,
    x: &BigReal,
    cfg: &Config,
) -> Result<EvalResult> {
    let p = &cfg.precision;
    if x.is_negative() {
        return Err(Error::Domain {
            func: "ferrers_large_mu_lg",
            msg: "pass x >= 0 and select the branch via the sign flag".into(),
        });
    }
    let (alpha, case) = match degree {
        DegreeParam::Real(nu) => {
            let a = &(nu + &BigReal::from_ratio(1, 2, p)) / mu;
            (Alpha::Real(a), LgCase::Real)
        }
        DegreeParam::ConicalTau(tau) => (Alpha::Tilde(&tau.clone() / mu), LgCase::Conical),
    };
    let n_terms = cfg.n.saturating_sub(1);
    let vars = maps::large_mu_vars(&alpha, x)?;
    let table = coeffs::cached_lg_table(&alpha.a2(), n_terms.max(1), p)?;

    // exponent -+ mu chi + sum (-+1)^s E_s(p)/mu^s
    let sgn: i64 = if plus_branch { -1 } else { 1 };
    let mut expo = (mu * &vars.chi).mul_i64(sgn);
    let inv_mu = mu.recip();
    let mut pw = inv_mu.clone();
    let mut tag = 0f64;
    for s in 1..=n_terms {
        let e = table.e[s - 1].eval_real(&vars.p).re().clone();
        let signed = if sgn == -1 && s % 2 == 1 { -&e } else { e };
        let t = &signed * &pw;
        tag = t.abs().to_f64();
        expo = &expo + &t;
        pw = &pw * &inv_mu;
    }

    let one = BigReal::one(p);
    let a2 = alpha.a2();
    let pref = match case {
        LgCase::Real => {
            // sqrt(pi) (1-alpha^2)^(1/4) sqrt(p/x) / (2^mu Gamma(nu/2+mu/2+1) Gamma(mu/2+1/2-nu/2))
            let nu = match degree {
                DegreeParam::Real(nu) => nu.clone(),
                _ => unreachable!(),
            };
            let g1 = specfun::gamma(&BigComplex::from_real(
                &(&nu + mu).scale_pow2(-1) + &one,
            ))?;
            let g2 = specfun::gamma(&BigComplex::from_real(
                &(mu - &nu).scale_pow2(-1) + &BigReal::from_ratio(1, 2, p),
            ))?;
            let two_mu = BigReal::from_i64(2, p).pow(mu);
            let root = (&one - &a2).pow(&BigReal::from_ratio(1, 4, p));
            &(&(&BigReal::pi(p).sqrt() * &root) * &vars.p_over_x.sqrt())
                / &(&(&two_mu * g1.re()) * g2.re())
        }
        LgCase::Conical => {
            // sqrt(pi) (1+alpha~^2)^(1/4) sqrt(p~/x) / (2^mu |Gamma(mu/2+3/4+i tau/2)|^2)
            let tau = match degree {
                DegreeParam::ConicalTau(tau) => tau.clone(),
                _ => unreachable!(),
            };
            let g = specfun::gamma(&BigComplex::new(
                &mu.scale_pow2(-1) + &BigReal::from_ratio(3, 4, p),
                tau.scale_pow2(-1),
            ))?;
            let gn = g.norm_sqr();
            let two_mu = BigReal::from_i64(2, p).pow(mu);
            let root = (&one - &a2).pow(&BigReal::from_ratio(1, 4, p)); // a2 < 0 here
            &(&(&BigReal::pi(p).sqrt() * &root) * &vars.p_over_x.sqrt()) / &(&two_mu * &gn)
        }
    };
    let value = &pref * &expo.exp();
    Ok(EvalResult {
        value: BigComplex::from_real(value),
        a_coeff: BigComplex::one(p),
        b_coeff: BigComplex::zero(p),
        method: Method::Direct,
        n_used: cfg.n,
        accuracy_tag: tag,
    })
}
