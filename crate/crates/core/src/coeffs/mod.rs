//! Recursive coefficient machinery.
//!
//! The beta-family tables hold the polynomials F_{mu,s}, E_{mu,s} and the
//! scalars a_{mu,s}:
//!
//! ```text
//! F_{mu,1} = (4 mu^2 - 1)(beta^2 - 1)/8
//! F_{mu,2} = (4 mu^2 - 1) beta (beta^2 - 1)/8
//! F_{mu,s+1} = (beta^2-1) F'_{mu,s}/2 - (1/2) sum_{j=1}^{s-1} F_j F_{s-j}
//! E_{mu,s} = -integral_0^beta F_{mu,s}(b)/(b^2-1) db      (E_s(0) = 0)
//! a_{mu,1} = a_{mu,2} = (4 mu^2 - 1)/8
//! a_{mu,s+1} = (s+1) a_{mu,s}/2 - (1/2) sum_{j=1}^{s-1} a_j a_{s-j}
//! ```
//!
//! Every F_{mu,s} is divisible by beta^2 - 1 (asserted at build time),
//! E_{mu,2s} are even and E_{mu,2s+1} odd, and the whole family collapses to
//! zero at mu = 1/2.
//!
//! The large-mu elementary family replaces beta by p and the quadratic
//! divisor by (1-p^2)(1-alpha^2 p^2); it is parameterised by alpha^2, which
//! is negative for the conical (alpha-tilde) case.

pub mod poly;
mod reexpand;

pub use poly::{BiPoly, Laurent, Poly};
pub use reexpand::{reexpand_ab_ferrers, ReexpandedFerrers};

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::arith::{BigComplex, BigReal, Precision};
use crate::error::{Error, Result};
use crate::maps::{self, AnnotatedZ};
use crate::specfun;

/// Which coefficient family: plain (pairs with B) or tilde (pairs with A,
/// using a_{mu+1,s} in the pole part).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Plain,
    Tilde,
}

/// Coefficient table for one parameter value.
#[derive(Debug, Clone)]
pub struct CoeffTable {
    pub param: BigComplex,
    pub s_max: usize,
    /// f[s-1] = F_{mu,s}
    pub f: Vec<Poly>,
    /// e[s-1] = E_{mu,s}
    pub e: Vec<Poly>,
    /// a_plain[s-1] = a_{mu,s}
    pub a_plain: Vec<BigComplex>,
    /// a_tilde[s-1] = a_{mu+1,s}
    pub a_tilde: Vec<BigComplex>,
}

/// a_{mu,1..s_max} by the quadratic recurrence.
pub fn build_a(mu: &BigComplex, s_max: usize) -> Vec<BigComplex> {
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    let seed = (&mu.square().mul_i64(4) - &one).div_i64(8);
    let mut a: Vec<BigComplex> = Vec::with_capacity(s_max);
    if s_max == 0 {
        return a;
    }
    a.push(seed.clone());
    if s_max == 1 {
        return a;
    }
    a.push(seed);
    for s in 2..s_max {
        // a_{s+1} = (s+1)/2 a_s - (1/2) sum_{j=1}^{s-1} a_j a_{s-j}
        let mut acc = a[s - 1].mul_i64((s + 1) as i64);
        for j in 1..s {
            acc = &acc - &(&a[j - 1] * &a[s - 1 - j]);
        }
        a.push(acc.div_i64(2));
    }
    a
}

/// Build the beta-family table for parameter `mu` up to index `s_max`.
///
/// Coefficients are generated at an escalated working precision and rounded
/// back, so that the divisibility and parity assertions are meaningful at the
/// caller's profile.
pub fn build_f_e(mu: &BigComplex, s_max: usize, p: &Precision) -> Result<CoeffTable> {
    let wp = p.raised(10 + s_max as u32 / 2);
    let mu_w = mu.with_bits(wp.bits());
    let one = BigComplex::one(&wp);
    let c4 = (&mu_w.square().mul_i64(4) - &one).div_i64(8); // (4 mu^2 - 1)/8
    let a_plain = build_a(&mu_w, s_max);
    let a_tilde = build_a(&(&mu_w + &one), s_max);

    // degenerate seed 4 mu^2 = 1: all tables are identically zero
    if c4.abs_value() < wp.tol(4) {
        let zp = Poly::zero(&wp);
        return Ok(CoeffTable {
            param: mu.clone(),
            s_max,
            f: vec![zp.clone(); s_max],
            e: vec![zp; s_max],
            a_plain,
            a_tilde,
        });
    }

    let zero = BigComplex::zero(&wp);
    // divisor beta^2 - 1
    let div = Poly::from_coeffs(vec![-&one, zero.clone(), one.clone()]);
    let mut f: Vec<Poly> = Vec::with_capacity(s_max);
    // F_1 = c4 (beta^2 - 1), F_2 = c4 beta (beta^2 - 1)
    f.push(div.scale(&c4));
    if s_max >= 2 {
        f.push(Poly::from_coeffs(vec![
            zero.clone(),
            -&c4,
            zero.clone(),
            c4.clone(),
        ]));
    }
    for s in 2..s_max {
        // F_{s+1} = (beta^2-1) F_s'/2 - (1/2) sum F_j F_{s-j}
        let mut next = div.mul(&f[s - 1].derivative());
        for j in 1..s {
            next = next.sub(&f[j - 1].mul(&f[s - 1 - j]));
        }
        f.push(next.scale(&BigComplex::from_real(BigReal::from_ratio(1, 2, &wp))));
    }

    let mut e: Vec<Poly> = Vec::with_capacity(s_max);
    let rel = wp.tol(8).with_bits(wp.bits());
    for (s, fs) in f.iter().enumerate() {
        let q = fs.div_exact(&div, &rel, &format!("F_{{mu,{}}} / (beta^2-1)", s + 1))?;
        e.push(q.antiderivative().neg());
    }

    Ok(CoeffTable {
        param: mu.clone(),
        s_max,
        f,
        e,
        a_plain,
        a_tilde,
    })
}

/// Large-mu elementary family: polynomials in p, parameterised by the signed
/// square a2 = alpha^2 (negative for the conical case).
pub fn build_lg_f_e(a2: &BigReal, s_max: usize, p: &Precision) -> Result<CoeffTable> {
    let wp = p.raised(10 + s_max as u32 / 2);
    let a2w = BigComplex::from_real(a2.with_bits(wp.bits()));
    let one = BigComplex::one(&wp);
    let zero = BigComplex::zero(&wp);
    let oma2 = &one - &a2w; // 1 - alpha^2

    // quartic divisor (1-p^2)(1-alpha^2 p^2) = 1 - (1+a2) p^2 + a2 p^4
    let div = Poly::from_coeffs(vec![
        one.clone(),
        zero.clone(),
        -&(&one + &a2w),
        zero.clone(),
        a2w.clone(),
    ]);

    // F_1 = div * (a2 (1 - 5 p^2) + 1) / (8 (1-a2)^2)
    let lin1 = Poly::from_coeffs(vec![&one + &a2w, zero.clone(), a2w.mul_i64(-5)]);
    let scale1 = (&oma2.square().mul_i64(8)).recip();
    let f1 = div.mul(&lin1).scale(&scale1);

    // F_2 = p * div * (a2^2 (15 p^4 - 12 p^2 + 1) + a2 (7 - 12 p^2) + 1) / (8 (1-a2)^3)
    let a4 = a2w.square();
    let quart = Poly::from_coeffs(vec![
        &(&a4 + &a2w.mul_i64(7)) + &one,
        zero.clone(),
        (&a4 + &a2w).mul_i64(-12),
        zero.clone(),
        a4.mul_i64(15),
    ]);
    let pfac = Poly::from_coeffs(vec![zero.clone(), one.clone()]);
    let scale2 = (&oma2.powi(3).mul_i64(8)).recip();
    let f2 = pfac.mul(&div).mul(&quart).scale(&scale2);

    let mut f = vec![f1, f2];
    f.truncate(s_max);
    // F_{s+1} = -div F_s' / (2 (1-a2)) - (1/2) sum F_j F_{s-j}
    let dscale = (&oma2.mul_i64(-2)).recip();
    for s in 2..s_max {
        let mut next = div.mul(&f[s - 1].derivative()).scale(&dscale);
        for j in 1..s {
            next = next.sub(
                &f[j - 1]
                    .mul(&f[s - 1 - j])
                    .scale(&BigComplex::from_real(BigReal::from_ratio(1, 2, &wp))),
            );
        }
        f.push(next);
    }

    // E_s = (1 - a2) * antiderivative(F_s / div), E_s(0) = 0
    let mut e: Vec<Poly> = Vec::with_capacity(s_max);
    let rel = wp.tol(8).with_bits(wp.bits());
    for (s, fs) in f.iter().enumerate() {
        let q = fs.div_exact(&div, &rel, &format!("F_{}(alpha,p) / quartic", s + 1))?;
        e.push(q.antiderivative().scale(&oma2));
    }

    Ok(CoeffTable {
        param: a2w,
        s_max,
        f,
        e,
        a_plain: Vec::new(),
        a_tilde: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// composed coefficient values
// ---------------------------------------------------------------------------

/// All values E_{mu,s}(arg) + (-1)^(s+1) a_s / (s xi^s) for s = 1..s_max.
///
/// `poly_arg` is the polynomial argument (beta in the large-degree regimes,
/// z itself in the large-order regime) and `xi` the matching Liouville
/// variable. Returns the requested family.
pub fn cal_e_values(
    table: &CoeffTable,
    family: Family,
    poly_arg: &BigComplex,
    xi: &BigComplex,
    s_max: usize,
) -> Result<Vec<BigComplex>> {
    if xi.is_zero() {
        return Err(Error::Singularity(
            "coefficient values at xi = 0 (z = 1); use the contour path".into(),
        ));
    }
    assert!(s_max <= table.s_max, "table too short: {} < {s_max}", table.s_max);
    let a = match family {
        Family::Plain => &table.a_plain,
        Family::Tilde => &table.a_tilde,
    };
    let inv_xi = xi.recip();
    let mut xi_pow = inv_xi.clone();
    let mut out = Vec::with_capacity(s_max);
    for s in 1..=s_max {
        let sign = if s % 2 == 1 { 1 } else { -1 };
        let pole = a[s - 1].mul_i64(sign).div_i64(s as i64) * &xi_pow;
        out.push(&table.e[s - 1].eval(poly_arg) + &pole);
        xi_pow = &xi_pow * &inv_xi;
    }
    Ok(out)
}

/// Spec surface: one coefficient value from z (side-annotated).
pub fn cal_e(table: &CoeffTable, family: Family, s: usize, az: &AnnotatedZ) -> Result<BigComplex> {
    let vars = maps::liouville_vars(az)?;
    Ok(cal_e_values(table, family, &vars.beta, &vars.xi, s)?.pop().unwrap())
}

/// Real Ferrers coefficient values: for even s the value F_{mu,s}(x), for odd
/// s the value i F_{mu,s}(x) (both real when mu is real).
///
/// F_{mu,s}(x) = E_{mu,s}(i gamma) - (-i)^s a_s / (s eta^s).
pub fn cal_f_values(
    table: &CoeffTable,
    family: Family,
    fv: &maps::FerrersVars,
    s_max: usize,
) -> Result<Vec<BigReal>> {
    if fv.eta.is_zero() {
        return Err(Error::Singularity("Ferrers coefficients at eta = 0 (x = 1)".into()));
    }
    let p = fv.eta.precision_ctx();
    let a = match family {
        Family::Plain => &table.a_plain,
        Family::Tilde => &table.a_tilde,
    };
    let ig = BigComplex::new(BigReal::zero(&p), fv.gamma.clone());
    let minus_i = BigComplex::new(BigReal::zero(&p), -&BigReal::one(&p));
    let inv_eta = BigComplex::from_real(fv.eta.recip());
    let mut eta_pow = inv_eta.clone();
    let mut phase = minus_i.clone(); // (-i)^s
    let mut out = Vec::with_capacity(s_max);
    let tol = &p.tol(6) * &table.max_scale();
    for s in 1..=s_max {
        let val = &table.e[s - 1].eval(&ig) - &(&(&phase * &a[s - 1]).div_i64(s as i64) * &eta_pow);
        let val = if s % 2 == 1 { val.mul_i() } else { val };
        debug_assert!(
            val.im().abs() < tol,
            "Ferrers coefficient s={s} not real: {val}"
        );
        out.push(val.re().clone());
        eta_pow = &eta_pow * &inv_eta;
        phase = &phase * &minus_i;
    }
    Ok(out)
}

impl CoeffTable {
    /// Rough magnitude scale of the table entries, for realness tolerances.
    fn max_scale(&self) -> BigReal {
        let p = Precision::new(16).unwrap();
        let mut m = BigReal::one(&p);
        for poly in &self.e {
            m = m.max(&poly.max_coeff());
        }
        for a in &self.a_plain {
            m = m.max(&a.abs_value());
        }
        m
    }
}

/// Spec surface: one Ferrers coefficient from x.
pub fn cal_f(table: &CoeffTable, family: Family, s: usize, x: &BigReal) -> Result<BigReal> {
    let fv = maps::ferrers_vars(x)?;
    Ok(cal_f_values(table, family, &fv, s)?.pop().unwrap())
}

// ---------------------------------------------------------------------------
// gamma-ratio cross-check (asymptotics of the normalization constant)
// ---------------------------------------------------------------------------

/// Relative residual of the expansion
/// L ~ sqrt(u)/Gamma(u+1) exp{ sum (-1)^(s+1) E_{mu,s}(1)/u^s } truncated at n
/// terms, where L is the exact normalization constant at nu = u - 1/2.
/// The residual decays like u^-(n+1).
pub fn gamma_ratio_expansion_check(
    mu: &BigComplex,
    u: &BigReal,
    n: usize,
    p: &Precision,
) -> Result<BigReal> {
    let table = cached_table(mu, n, p)?;
    let one = BigComplex::one(p);
    let u_c = BigComplex::from_real(u.clone());
    // exact L at nu = u - 1/2:
    // sqrt(2u pi) / (2^(u+1/2) Gamma(u/2 + mu/2 + 3/4) Gamma(u/2 - mu/2 + 3/4))
    let two = BigReal::from_i64(2, p);
    let num = (&(&two * u) * &BigReal::pi(p)).sqrt();
    let half_u = u.scale_pow2(-1);
    let three_q = BigReal::from_ratio(3, 4, p);
    let g1 = specfun::gamma(&(&BigComplex::from_real(&half_u + &three_q) + &mu.div_i64(2)))?;
    let g2 = specfun::gamma(&(&BigComplex::from_real(&half_u + &three_q) - &mu.div_i64(2)))?;
    let pow2 = two.pow(&(u + &BigReal::from_ratio(1, 2, p)));
    let l_exact = &BigComplex::from_real(&num / &pow2) / &(&g1 * &g2);

    // expansion side
    let gu1 = specfun::gamma(&(&u_c + &one))?;
    let mut expo = BigComplex::zero(p);
    let inv_u = u.recip();
    let mut upow = inv_u.clone();
    for s in 1..=n {
        let e1 = table.e[s - 1].eval(&one);
        let sign = if s % 2 == 1 { 1 } else { -1 };
        expo = &expo + &e1.mul_i64(sign).scale(&upow);
        upow = &upow * &inv_u;
    }
    let l_asym = &BigComplex::from_real(u.sqrt()).scale(&BigReal::one(p)) / &gu1 * &expo.exp();
    Ok(l_exact.rel_err(&l_asym))
}

// ---------------------------------------------------------------------------
// table cache
// ---------------------------------------------------------------------------

thread_local! {
    static TABLE_CACHE: RefCell<HashMap<String, Rc<CoeffTable>>> = RefCell::new(HashMap::new());
}

/// Cached beta-family table (keyed by parameter, size and precision).
pub fn cached_table(mu: &BigComplex, s_max: usize, p: &Precision) -> Result<Rc<CoeffTable>> {
    let key = format!(
        "b|{}|{}|{}|{}",
        mu.re().to_string_digits(p.digits()),
        mu.im().to_string_digits(p.digits()),
        s_max,
        p.digits()
    );
    TABLE_CACHE.with(|c| {
        if let Some(t) = c.borrow().get(&key) {
            return Ok(t.clone());
        }
        let t = Rc::new(build_f_e(mu, s_max, p)?);
        c.borrow_mut().insert(key, t.clone());
        Ok(t)
    })
}

/// Cached large-mu elementary table (keyed by alpha^2, size, precision).
pub fn cached_lg_table(a2: &BigReal, s_max: usize, p: &Precision) -> Result<Rc<CoeffTable>> {
    let key = format!("lg|{}|{}|{}", a2.to_string_digits(p.digits()), s_max, p.digits());
    TABLE_CACHE.with(|c| {
        if let Some(t) = c.borrow().get(&key) {
            return Ok(t.clone());
        }
        let t = Rc::new(build_lg_f_e(a2, s_max, p)?);
        c.borrow_mut().insert(key, t.clone());
        Ok(t)
    })
}
