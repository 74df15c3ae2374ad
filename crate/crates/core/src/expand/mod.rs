//! Assembled function evaluators for the four regimes.
//!
//! All four regime families share one coefficient composite: with
//! script-E rows built from a table (E polynomials plus the a-scalar pole
//! parts in the matching Liouville variable),
//!
//! ```text
//! A = exp{ sum_{s=1}^{N} row~_{2s} / g^{2s} } cosh{ sum_{s=0}^{N} row~_{2s+1} / g^{2s+1} }
//! B = (1/xi) exp{ sum row_{2s} / g^{2s} } sinh{ sum row_{2s+1} / g^{2s+1} }
//! ```
//!
//! where g is the large parameter. Substituting g = i tau reproduces the
//! conical cos/sin forms, the Whipple swap (polynomials in z, xi-hat in the
//! pole parts) gives the large-order regime, and evaluating at x + i0
//! (xi = i eta, beta = -i gamma) gives the Ferrers forms; none of those
//! variants needs separate code.
//!
//! Inside the pole disk |z-1| < r (or |beta-1| < r for the large-order
//! regime) the coefficient functions are recovered by Cauchy's integral
//! formula over a circle where the direct sums are accurate; coefficient
//! rows at contour nodes are cached and reused across interior points and
//! across different values of the large parameter.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::arith::{BigComplex, BigReal, Precision};
use crate::cauchy::{cauchy_eval, Contour};
use crate::coeffs::{self, CoeffTable, Family};
use crate::error::{Error, Result};
use crate::maps::{self, AnnotatedZ, CutSide};
use crate::specfun;

// ---------------------------------------------------------------------------
// requests and results
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Direct,
    Cauchy,
    Reexpanded,
}

#[derive(Debug, Clone)]
pub struct EvalResult {
    pub value: BigComplex,
    /// slowly varying coefficient values used in the assembly
    pub a_coeff: BigComplex,
    pub b_coeff: BigComplex,
    pub method: Method,
    pub n_used: usize,
    /// magnitude of the last retained exponent term (truncation indicator)
    pub accuracy_tag: f64,
}

/// Shared evaluation configuration.
#[derive(Debug, Clone)]
pub struct Config {
    pub precision: Precision,
    /// truncation level N of the composite sums
    pub n: usize,
    /// pole-disk radius r: direct evaluation requires |z-1| >= r
    /// (|beta-1| >= r in the large-order regime)
    pub pole_radius: f64,
    /// contour radius r' for the Cauchy path
    pub contour_radius: f64,
    /// bound on |u| in the large-order regime
    pub u_max: f64,
}

impl Config {
    pub fn new(precision: Precision, n: usize) -> Self {
        Config {
            precision,
            n,
            pole_radius: 0.5,
            contour_radius: 1.0,
            u_max: 50.0,
        }
    }

    pub fn verify(n: usize) -> Self {
        Config::new(Precision::verify(), n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegendreKind {
    /// P_nu^(-mu)
    PMinus,
    /// P_nu^(+mu)
    PPlus,
    /// bold Q_nu^mu
    Q,
    /// branch of Q around z = 1, positive sense
    QBranchPlus,
    /// negative sense
    QBranchMinus,
}

// ---------------------------------------------------------------------------
// normalization constants
// ---------------------------------------------------------------------------

/// L_nu^mu = sqrt((2 nu + 1) pi) / (2^(nu+1) Gamma(nu/2 + mu/2 + 1) Gamma(nu/2 - mu/2 + 1)).
pub fn l_const(nu: &BigComplex, mu: &BigComplex, p: &Precision) -> Result<BigComplex> {
    let one = BigComplex::one(p);
    let num = (&(&nu.mul_i64(2) + &one).scale(&BigReal::pi(p))).sqrt();
    let half_nu = nu.div_i64(2);
    let half_mu = mu.div_i64(2);
    let g1 = specfun::gamma(&(&(&half_nu + &half_mu) + &one))?;
    let g2 = specfun::gamma(&(&(&half_nu - &half_mu) + &one))?;
    let pow2 = (&(nu + &one) * &BigComplex::from_real(BigReal::from_i64(2, p).ln())).exp();
    Ok(&num / &(&(&pow2 * &g1) * &g2))
}

/// Conical form of the constant, L at nu = -1/2 + i tau.
pub fn l_conical(tau: &BigReal, mu: &BigComplex, p: &Precision) -> Result<BigComplex> {
    let nu = BigComplex::new(BigReal::from_ratio(-1, 2, p), tau.clone());
    l_const(&nu, mu, p)
}

/// M_nu^mu = (2/u)^(mu + 1/2) Gamma(nu/2 + mu/2 + 1)/Gamma(nu/2 - mu/2 + 1/2),
/// the z -> 1 limit of the A coefficient.
pub fn m_const(nu: &BigComplex, mu: &BigComplex, p: &Precision) -> Result<BigComplex> {
    let one = BigComplex::one(p);
    let half = BigComplex::from_real(BigReal::from_ratio(1, 2, p));
    let u = nu + &half;
    let g1 = specfun::gamma(&(&(&nu.div_i64(2) + &mu.div_i64(2)) + &one))?;
    let g2 = specfun::gamma(&(&(&nu.div_i64(2) - &mu.div_i64(2)) + &half))?;
    let base = &BigComplex::from_i64(2, p) / &u;
    let pw = base.pow(&(mu + &half));
    Ok(&(&pw * &g1) / &g2)
}

// ---------------------------------------------------------------------------
// composite A/B evaluation
// ---------------------------------------------------------------------------

/// Coefficient rows (plain and tilde families) at one point.
#[derive(Debug, Clone)]
pub struct CoeffRows {
    pub plain: Vec<BigComplex>,
    pub tilde: Vec<BigComplex>,
}

fn rows_at(table: &CoeffTable, poly_arg: &BigComplex, xi: &BigComplex, s_max: usize) -> Result<CoeffRows> {
    Ok(CoeffRows {
        plain: coeffs::cal_e_values(table, Family::Plain, poly_arg, xi, s_max)?,
        tilde: coeffs::cal_e_values(table, Family::Tilde, poly_arg, xi, s_max)?,
    })
}

/// A and B from coefficient rows:
/// A = exp(sum tilde even) cosh(sum tilde odd),
/// B = (1/xi) exp(sum plain even) sinh(sum plain odd),
/// with both sums truncated at indices 2N (even) and 2N+1 (odd).
pub fn ab_from_rows(
    rows: &CoeffRows,
    big: &BigComplex,
    xi: &BigComplex,
    n: usize,
    p: &Precision,
) -> Result<(BigComplex, BigComplex, f64)> {
    let s_need = 2 * n + 1;
    assert!(rows.plain.len() >= s_need);
    let inv = big.recip();
    let inv2 = inv.square();
    let mut acc_tag = 0f64;
    let one = BigReal::one(p);
    let mut sums = |family: &Vec<BigComplex>| -> Result<(BigComplex, BigComplex)> {
        // even: s = 2,4,..,2n ; odd: s = 1,3,..,2n+1
        let mut even = BigComplex::zero(p);
        let mut odd = BigComplex::zero(p);
        let mut pw_even = inv2.clone(); // big^-2
        let mut pw_odd = inv.clone(); // big^-1
        let mut last_even = 0f64;
        let mut last_odd = 0f64;
        for s in 1..=n {
            let t = &family[2 * s - 1] * &pw_even;
            last_even = t.abs_value().to_f64();
            even = &even + &t;
            pw_even = &pw_even * &inv2;
        }
        for s in 0..=n {
            let t = &family[2 * s] * &pw_odd;
            last_odd = t.abs_value().to_f64();
            odd = &odd + &t;
            pw_odd = &pw_odd * &inv2;
        }
        let last = last_even.max(last_odd);
        if BigReal::from_f64(last, p) >= one {
            return Err(Error::Truncation {
                last_term: last,
                index: 2 * n + 1,
            });
        }
        acc_tag = acc_tag.max(last);
        Ok((even, odd))
    };
    let (te, to) = sums(&rows.tilde)?;
    let (pe, po) = sums(&rows.plain)?;
    let a = &te.exp() * &to.cosh();
    let b = &(&pe.exp() * &po.sinh()) / xi;
    Ok((a, b, acc_tag))
}

/// Direct composite evaluation at z (side-annotated), used when the point is
/// far enough from the pole.
pub fn ab_composite(
    table: &CoeffTable,
    big: &BigComplex,
    poly_arg: &BigComplex,
    xi: &BigComplex,
    n: usize,
    p: &Precision,
) -> Result<(BigComplex, BigComplex, f64)> {
    let rows = rows_at(table, poly_arg, xi, 2 * n + 1)?;
    ab_from_rows(&rows, big, xi, n, p)
}

/// Cached coefficient rows at contour nodes (independent of the large
/// parameter, so one cache serves sweeps over u and z alike).
pub struct NodeCache {
    rows: RefCell<HashMap<u32, Rc<(CoeffRows, BigComplex)>>>,
}

impl NodeCache {
    pub fn new() -> Self {
        NodeCache {
            rows: RefCell::new(HashMap::new()),
        }
    }
}

impl Default for NodeCache {
    fn default() -> Self {
        Self::new()
    }
}

/// A and B inside the pole disk by the Cauchy integral formula over
/// `contour`. `vars_at` maps a contour node t to (polynomial argument,
/// Liouville variable) in the convention of the active regime.
#[allow(clippy::too_many_arguments)]
pub fn ab_cauchy<V>(
    table: &CoeffTable,
    big: &BigComplex,
    interior: &BigComplex,
    contour: &Contour,
    cache: &NodeCache,
    vars_at: &mut V,
    n: usize,
    p: &Precision,
) -> Result<(BigComplex, BigComplex)>
where
    V: FnMut(&BigComplex) -> Result<(BigComplex, BigComplex)>,
{
    let s_need = 2 * n + 1;
    let mut eval_a = |key: u32, t: &BigComplex| -> Result<BigComplex> {
        let entry = {
            let cached = cache.rows.borrow().get(&key).cloned();
            match cached {
                Some(e) => e,
                None => {
                    let (poly_arg, xi) = vars_at(t)?;
                    let rows = rows_at(table, &poly_arg, &xi, s_need)?;
                    let e = Rc::new((rows, xi));
                    cache.rows.borrow_mut().insert(key, e.clone());
                    e
                }
            }
        };
        let (a, _, _) = ab_from_rows(&entry.0, big, &entry.1, n, p)?;
        Ok(a)
    };
    let a = cauchy_eval(&mut eval_a, contour, interior, p)?;
    let mut eval_b = |key: u32, t: &BigComplex| -> Result<BigComplex> {
        let entry = {
            let cached = cache.rows.borrow().get(&key).cloned();
            match cached {
                Some(e) => e,
                None => {
                    let (poly_arg, xi) = vars_at(t)?;
                    let rows = rows_at(table, &poly_arg, &xi, s_need)?;
                    let e = Rc::new((rows, xi));
                    cache.rows.borrow_mut().insert(key, e.clone());
                    e
                }
            }
        };
        let (_, b, _) = ab_from_rows(&entry.0, big, &entry.1, n, p)?;
        Ok(b)
    };
    let b = cauchy_eval(&mut eval_b, contour, interior, p)?;
    Ok((a, b))
}

/// A/B for the large-degree regimes at a z-plane point, choosing the direct
/// or the contour path by |z - 1| against the configured pole radius.
pub fn ab_large_nu(
    table: &CoeffTable,
    big: &BigComplex,
    az: &AnnotatedZ,
    cfg: &Config,
    cache: Option<&NodeCache>,
) -> Result<(BigComplex, BigComplex, Method, f64)> {
    let p = &cfg.precision;
    let one = BigComplex::one(p);
    let dist = (&az.z - &one).abs_value().to_f64();
    if dist >= cfg.pole_radius {
        let vars = maps::liouville_vars(az)?;
        let (a, b, tag) = ab_composite(table, big, &vars.beta, &vars.xi, cfg.n, p)?;
        return Ok((a, b, Method::Direct, tag));
    }
    let contour = Contour::about_one(BigReal::from_f64(cfg.contour_radius, p), p);
    let local_cache = NodeCache::new();
    let cache = cache.unwrap_or(&local_cache);
    let mut vars_at = |t: &BigComplex| -> Result<(BigComplex, BigComplex)> {
        let at = AnnotatedZ::with_side(t.clone(), CutSide::Above);
        let v = maps::liouville_vars(&at)?;
        Ok((v.beta, v.xi))
    };
    let (a, b) = ab_cauchy(table, big, &az.z, &contour, cache, &mut vars_at, cfg.n, p)?;
    Ok((a, b, Method::Cauchy, 0.0))
}

// negative-order modified Bessel pair via the standard connection
fn i_neg_order(
    nu: &BigComplex,
    z: &BigComplex,
    i_pos: &BigComplex,
    k_pos: &BigComplex,
    p: &Precision,
) -> BigComplex {
    // I_(-nu) = I_nu + (2/pi) sin(nu pi) K_nu
    let _ = z;
    let s = sin_pi_c(nu, p);
    i_pos + &(&s * k_pos).scale(&(&BigReal::from_i64(2, p) / &BigReal::pi(p)))
}

fn sin_pi_c(v: &BigComplex, p: &Precision) -> BigComplex {
    let m = v.re().to_f64().round();
    let vr = v - &BigComplex::from_real(BigReal::from_f64(m, p).with_bits(v.bits()));
    let s = vr.scale(&BigReal::pi(p)).sin();
    if (m as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

fn exp_i_pi_c(v: &BigComplex, p: &Precision) -> BigComplex {
    let half = BigComplex::from_real(BigReal::from_ratio(1, 2, p).with_bits(v.bits()));
    let s = sin_pi_c(v, p);
    let c = sin_pi_c(&(v + &half), p);
    &c + &s.mul_i()
}

// ---------------------------------------------------------------------------
// large positive nu, mu bounded
// ---------------------------------------------------------------------------

/// Associated Legendre functions for large real degree:
/// P^(-mu), P^(+mu), Q and the branches of Q around z = 1.
pub fn legendre_large_nu(
    which: LegendreKind,
    nu: &BigReal,
    mu: &BigComplex,
    az: &AnnotatedZ,
    cfg: &Config,
    cache: Option<&NodeCache>,
) -> Result<EvalResult> {
    let p = &cfg.precision;
    check_standing(&BigComplex::from_real(nu.clone()), mu)?;
    let one = BigComplex::one(p);
    let half = BigReal::from_ratio(1, 2, p);
    let u = BigComplex::from_real(nu + &half);
    let table = coeffs::cached_table(mu, 2 * cfg.n + 1, p)?;
    let (a, b, method, tag) = ab_large_nu(&table, &u, az, cfg, cache)?;

    let vars = maps::liouville_vars(az)?;
    let quarter = maps::quarter_power_inv(az)?;
    let sqrt_xi = vars.xi.sqrt();
    let nu_c = BigComplex::from_real(nu.clone());
    let l = l_const(&nu_c, mu, p)?;
    let w = &u * &vars.xi; // u xi

    let mu1 = mu + &one;
    let value = match which {
        LegendreKind::PMinus => {
            let g = specfun::gamma(&(&(&nu_c - mu) + &one))?;
            let i0 = specfun::modified_i_co(mu, &w)?;
            let i1 = specfun::modified_i_co(&mu1, &w)?;
            let bracket = &(&i0 * &a) + &(&(&vars.xi * &i1) * &b);
            &(&(&l * &g) * &quarter) * &(&sqrt_xi * &bracket)
        }
        LegendreKind::PPlus => {
            let g = specfun::gamma(&(&(&nu_c + mu) + &one))?;
            let i0 = specfun::modified_i_co(mu, &w)?;
            let i1 = specfun::modified_i_co(&mu1, &w)?;
            let k0 = specfun::modified_k_co(mu, &w)?;
            let k1 = specfun::modified_k_co(&mu1, &w)?;
            let im0 = i_neg_order(mu, &w, &i0, &k0, p);
            // I_(-mu-1) = I_(mu+1) + (2/pi) sin((mu+1) pi) K_(mu+1)
            //           = I_(mu+1) - (2/pi) sin(mu pi) K_(mu+1)
            let s = sin_pi_c(mu, p);
            let im1 =
                &i1 - &(&s * &k1).scale(&(&BigReal::from_i64(2, p) / &BigReal::pi(p)));
            let bracket = &(&im0 * &a) + &(&(&vars.xi * &im1) * &b);
            &(&(&l * &g) * &quarter) * &(&sqrt_xi * &bracket)
        }
        LegendreKind::Q => {
            let k0 = specfun::modified_k_co(mu, &w)?;
            let k1 = specfun::modified_k_co(&mu1, &w)?;
            let bracket = &(&k0 * &a) - &(&(&vars.xi * &k1) * &b);
            &(&l * &quarter) * &(&sqrt_xi * &bracket)
        }
        LegendreKind::QBranchPlus | LegendreKind::QBranchMinus => {
            let plus = matches!(which, LegendreKind::QBranchPlus);
            let k0 = specfun::k_rotated_co(mu, &w, plus)?;
            let k1 = specfun::k_rotated_co(&mu1, &w, plus)?;
            let bracket = &(&k0 * &a) + &(&(&vars.xi * &k1) * &b);
            &(&l * &quarter) * &(&sqrt_xi * &bracket)
        }
    };
    Ok(EvalResult {
        value,
        a_coeff: a,
        b_coeff: b,
        method,
        n_used: cfg.n,
        accuracy_tag: tag,
    })
}

fn check_standing(nu: &BigComplex, mu: &BigComplex) -> Result<()> {
    if mu.re().to_f64() < 0.0 {
        return Err(Error::Regime("Re(mu) >= 0 is required".into()));
    }
    if nu.re().to_f64() < -0.5 {
        return Err(Error::Regime("Re(nu) >= -1/2 is required".into()));
    }
    Ok(())
}

/// Imaginary order mu = i rho for large real degree: the real combination
/// Q^(i rho), both P^(+-i rho), and the real average P-hat.
pub struct ImagOrderValues {
    pub q_irho: BigReal,
    pub p_plus: BigComplex,
    pub p_minus: BigComplex,
    pub p_hat: BigReal,
}

pub fn legendre_large_nu_imag_mu(
    rho: &BigReal,
    nu: &BigReal,
    z: &BigReal,
    cfg: &Config,
) -> Result<ImagOrderValues> {
    let p = &cfg.precision;
    if !z.is_positive() || z.to_f64() <= 1.0 {
        return Err(Error::Domain {
            func: "legendre_large_nu_imag_mu",
            msg: "real z > 1 required".into(),
        });
    }
    let mu = BigComplex::new(BigReal::zero(p), rho.clone());
    let az = AnnotatedZ::new(BigComplex::from_real(z.clone()));
    let half = BigReal::from_ratio(1, 2, p);
    let u = BigComplex::from_real(nu + &half);
    let table = coeffs::cached_table(&mu, 2 * cfg.n + 1, p)?;
    let (a, b, _, _) = ab_large_nu(&table, &u, &az, cfg, None)?;
    // A-hat = (A_(i rho) + A_(-i rho))/2 = Re A for real z; B is real
    let a_hat = a.re().clone();
    let b_real = b.re().clone();

    let vars = maps::liouville_vars(&az)?;
    let xi = vars.xi.re().clone();
    let arg = &(nu + &half) * &xi;
    let (k, kd) = specfun::bessel_k_imag_order(rho, &arg)?;
    // prefactor sqrt((2 nu + 1) pi) xi^(1/2) / (2^(nu+1) |Gamma(nu/2 + 1 + i rho/2)|^2 (z^2-1)^(1/4))
    let one = BigReal::one(p);
    let g = specfun::gamma(&BigComplex::new(
        &(nu.scale_pow2(-1)) + &one,
        rho.scale_pow2(-1),
    ))?;
    let gn = g.norm_sqr();
    let num = (&(&(nu.scale_pow2(1)) + &one) * &BigReal::pi(p)).sqrt();
    let pow2 = BigReal::from_i64(2, p).pow(&(nu + &one));
    let quarter = (&z.square() - &one).pow(&BigReal::from_ratio(1, 4, p));
    let pref = &(&num * &xi.sqrt()) / &(&(&pow2 * &gn) * &quarter);
    // averaging (3.24ee) over +-i rho with 2 K'_nu = -(K_(nu-1) + K_(nu+1))
    // gives + xi K' B; the reference text prints this term with a minus
    let q_irho = &pref * &(&(&k * &a_hat) + &(&(&xi * &kd) * &b_real));

    // P^(+-i rho) via the I-Bessel assembly with complex orders -+i rho
    let l = l_const(&BigComplex::from_real(nu.clone()), &mu, p)?;
    let quarter_inv = maps::quarter_power_inv(&az)?;
    let sqrt_xi = vars.xi.sqrt();
    let w = &u * &vars.xi;
    let one_c = BigComplex::one(p);
    let p_of = |sign_plus: bool| -> Result<BigComplex> {
        let ord = if sign_plus { -&mu } else { mu.clone() }; // I_(-+ i rho)
        let g = specfun::gamma(&(&(&BigComplex::from_real(nu.clone())
            + &(if sign_plus { mu.clone() } else { -&mu }))
            + &one_c))?;
        let i0 = specfun::modified_i_co(&ord, &w)?;
        let i1 = specfun::modified_i_co(&(&ord - &one_c), &w)?;
        // P^(+i rho) pairs with the order +i rho coefficient family; the
        // -i rho case needs A_(-i rho), B_(-i rho), which on the real axis
        // are the conjugates
        let (af, bf) = if sign_plus {
            (a.clone(), b.clone())
        } else {
            (a.conj(), b.conj())
        };
        let bracket = &(&i0 * &af) + &(&(&vars.xi * &i1) * &bf);
        Ok(&(&(&l * &g) * &quarter_inv) * &(&sqrt_xi * &bracket))
    };
    let p_plus = p_of(true)?;
    let p_minus = p_of(false)?;
    let p_hat_c = (&p_plus + &p_minus).div_i64(2);
    Ok(ImagOrderValues {
        q_irho,
        p_plus,
        p_minus,
        p_hat: p_hat_c.re().clone(),
    })
}

// ---------------------------------------------------------------------------
// conical case: nu = -1/2 + i tau, tau large
// ---------------------------------------------------------------------------

/// Conical functions for large tau:
/// P^(-mu), P^(+mu), Q, and the Q branches around z = 1.
pub fn conical_large_tau(
    which: LegendreKind,
    tau: &BigReal,
    mu: &BigReal,
    az: &AnnotatedZ,
    cfg: &Config,
    cache: Option<&NodeCache>,
) -> Result<EvalResult> {
    let p = &cfg.precision;
    let mu_c = BigComplex::from_real(mu.clone());
    let big = BigComplex::new(BigReal::zero(p), tau.clone()); // i tau
    let table = coeffs::cached_table(&mu_c, 2 * cfg.n + 1, p)?;
    let (a, b, method, tag) = ab_large_nu(&table, &big, az, cfg, cache)?;

    let vars = maps::liouville_vars(az)?;
    let quarter = maps::quarter_power_inv(az)?;
    let sqrt_xi = vars.xi.sqrt();
    let l = l_conical(tau, &mu_c, p)?;
    let w = vars.xi.scale(tau); // tau xi
    let one = BigComplex::one(p);
    let mu1 = &mu_c + &one;
    let half = BigComplex::from_real(BigReal::from_ratio(1, 2, p));
    let nu_c = BigComplex::new(BigReal::from_ratio(-1, 2, p), tau.clone());

    let ixi_b = &(&vars.xi * &b).mul_i(); // i xi B
    let value = match which {
        LegendreKind::PMinus => {
            // e^(mu pi i/2) L Gamma(1/2 - mu + i tau) (z^2-1)^(-1/4) xi^(1/2)
            //   { J_mu(tau xi) A + i xi J_(mu+1)(tau xi) B }
            let ph = exp_i_pi_c(&mu_c.div_i64(2), p);
            let g = specfun::gamma(&(&(&nu_c - &mu_c) + &one))?;
            let j0 = specfun::cyl_j_co(&mu_c, &w)?;
            let j1 = specfun::cyl_j_co(&mu1, &w)?;
            let bracket = &(&j0 * &a) + &(&j1 * ixi_b);
            &(&(&(&ph * &l) * &g) * &quarter) * &(&sqrt_xi * &bracket)
        }
        LegendreKind::PPlus => {
            let ph = exp_i_pi_c(&mu_c.div_i64(-2), p);
            let g = specfun::gamma(&(&(&nu_c + &mu_c) + &one))?;
            // J_(-mu) = J_mu cos(mu pi) - Y_mu sin(mu pi)
            let c = sin_pi_c(&(&mu_c + &half), p);
            let s = sin_pi_c(&mu_c, p);
            let j0 = specfun::cyl_j_co(&mu_c, &w)?;
            let y0 = specfun::cyl_y_co(&mu_c, &w)?;
            let jm0 = &(&j0 * &c) - &(&y0 * &s);
            let j1 = specfun::cyl_j_co(&mu1, &w)?;
            let y1 = specfun::cyl_y_co(&mu1, &w)?;
            // J_(-mu-1) = J_(mu+1) cos((mu+1) pi) - Y_(mu+1) sin((mu+1) pi)
            let jm1 = &(&y1 * &s) - &(&j1 * &c);
            let bracket = &(&jm0 * &a) + &(&jm1 * ixi_b);
            &(&(&(&ph * &l) * &g) * &quarter) * &(&sqrt_xi * &bracket)
        }
        LegendreKind::Q => {
            // -(pi i/2) e^(-mu pi i/2) L (z^2-1)^(-1/4) xi^(1/2)
            //   { H2_mu A + i xi H2_(mu+1) B }
            let ph = exp_i_pi_c(&mu_c.div_i64(-2), p);
            let h0 = specfun::cyl_h2_co(&mu_c, &w)?;
            let h1 = specfun::cyl_h2_co(&mu1, &w)?;
            let bracket = &(&h0 * &a) + &(&h1 * ixi_b);
            let front = BigComplex::from_real(BigReal::pi(p).scale_pow2(-1)).mul_i();
            -&(&(&(&front * &ph) * &(&l * &quarter)) * &(&sqrt_xi * &bracket))
        }
        LegendreKind::QBranchMinus => {
            // +(pi i/2) e^(mu pi i/2) L ... { H1_mu A + i xi H1_(mu+1) B }
            let ph = exp_i_pi_c(&mu_c.div_i64(2), p);
            let h0 = specfun::cyl_h1_co(&mu_c, &w)?;
            let h1 = specfun::cyl_h1_co(&mu1, &w)?;
            let bracket = &(&h0 * &a) + &(&h1 * ixi_b);
            let front = BigComplex::from_real(BigReal::pi(p).scale_pow2(-1)).mul_i();
            &(&(&front * &ph) * &(&l * &quarter)) * &(&sqrt_xi * &bracket)
        }
        LegendreKind::QBranchPlus => {
            // +(pi i/2) e^(mu pi i/2) L ... { H1_mu(tau xi e^(2 pi i)) A + ... }
            let ph = exp_i_pi_c(&mu_c.div_i64(2), p);
            let h0 = specfun::hankel1_rotated_2pi(mu, &w)?;
            let h1 = specfun::hankel1_rotated_2pi(&(mu + &BigReal::one(p)), &w)?;
            let bracket = &(&h0 * &a) + &(&h1 * ixi_b);
            let front = BigComplex::from_real(BigReal::pi(p).scale_pow2(-1)).mul_i();
            &(&(&front * &ph) * &(&l * &quarter)) * &(&sqrt_xi * &bracket)
        }
    };
    Ok(EvalResult {
        value,
        a_coeff: a,
        b_coeff: b,
        method,
        n_used: cfg.n,
        accuracy_tag: tag,
    })
}

// ---------------------------------------------------------------------------
// large order mu, nu bounded (Whipple-swapped regime)
// ---------------------------------------------------------------------------

/// Degree parameter of the large-order regime: real nu, or the conical
/// nu = -1/2 + i tau with bounded tau.
#[derive(Debug, Clone)]
pub enum DegreeParam {
    Real(BigReal),
    ConicalTau(BigReal),
}

impl DegreeParam {
    fn u(&self, p: &Precision) -> BigComplex {
        match self {
            DegreeParam::Real(nu) => {
                BigComplex::from_real(nu + &BigReal::from_ratio(1, 2, p))
            }
            DegreeParam::ConicalTau(tau) => BigComplex::new(BigReal::zero(p), tau.clone()),
        }
    }

    fn nu(&self, p: &Precision) -> BigComplex {
        match self {
            DegreeParam::Real(nu) => BigComplex::from_real(nu.clone()),
            DegreeParam::ConicalTau(tau) => {
                BigComplex::new(BigReal::from_ratio(-1, 2, p), tau.clone())
            }
        }
    }
}

/// A/B of the large-order regime at a z-plane point: polynomials in z, pole
/// parts in xi-hat = arccoth z, Cauchy contour in the beta plane when beta
/// is close to 1 (large |z|).
pub fn ab_large_mu(
    table: &CoeffTable,
    big: &BigComplex,
    az: &AnnotatedZ,
    cfg: &Config,
    cache: Option<&NodeCache>,
) -> Result<(BigComplex, BigComplex, Method, f64)> {
    let p = &cfg.precision;
    let one = BigComplex::one(p);
    let beta = maps::beta_of_z(az)?;
    let dist = (&beta - &one).abs_value().to_f64();
    if dist >= cfg.pole_radius {
        let xi_hat = maps::xi_hat_of_z(&az.z)?;
        let (a, b, tag) = ab_composite(table, big, &az.z, &xi_hat, cfg.n, p)?;
        return Ok((a, b, Method::Direct, tag));
    }
    let contour = Contour::about_one(BigReal::from_f64(cfg.contour_radius, p), p);
    let local_cache = NodeCache::new();
    let cache = cache.unwrap_or(&local_cache);
    let mut vars_at = |bnode: &BigComplex| -> Result<(BigComplex, BigComplex)> {
        let ab = AnnotatedZ::with_side(bnode.clone(), CutSide::Above);
        // involution: z(b); xi-hat(b) = arccosh(b)
        let z_b = maps::beta_of_z(&ab)?;
        let xi_hat = maps::xi_of_z(&ab)?;
        Ok((z_b, xi_hat))
    };
    let (a, b) = ab_cauchy(table, big, &beta, &contour, cache, &mut vars_at, cfg.n, p)?;
    Ok((a, b, Method::Cauchy, 0.0))
}

/// Large-order associated Legendre functions P^(-mu) and Q.
pub fn legendre_large_mu(
    which: LegendreKind,
    degree: &DegreeParam,
    mu: &BigReal,
    az: &AnnotatedZ,
    cfg: &Config,
    cache: Option<&NodeCache>,
) -> Result<EvalResult> {
    let p = &cfg.precision;
    let u = degree.u(p);
    if u.abs_value().to_f64() > cfg.u_max {
        return Err(Error::Regime(format!(
            "|u| = {} exceeds the bounded-degree contract u_max = {}",
            u.abs_value().to_f64(),
            cfg.u_max
        )));
    }
    if u.re().to_f64() < 0.0 {
        return Err(Error::Regime("Re(u) >= 0 required".into()));
    }
    let big = BigComplex::from_real(mu.clone());
    let table = coeffs::cached_table(&u, 2 * cfg.n + 1, p)?;
    let (a, b, method, tag) = ab_large_mu(&table, &big, az, cfg, cache)?;

    let xi_hat = maps::xi_hat_of_z(&az.z)?;
    let sqrt_xih = xi_hat.sqrt();
    let one = BigComplex::one(p);
    let half = BigComplex::from_real(BigReal::from_ratio(1, 2, p));
    // L_(mu - 1/2)^u
    let l = l_const(&(&big - &half), &u, p)?;
    let w = &big * &xi_hat; // mu xi-hat
    let two_over_pi = (&BigReal::from_i64(2, p) / &BigReal::pi(p)).sqrt();

    let value = match which {
        LegendreKind::PMinus => {
            match degree {
                DegreeParam::Real(_) => {
                    let k0 = specfun::modified_k_co(&u, &w)?;
                    let k1 = specfun::modified_k_co(&(&u + &one), &w)?;
                    let bracket = &(&k0 * &a) - &(&(&xi_hat * &k1) * &b);
                    (&l * &(&sqrt_xih * &bracket)).scale(&two_over_pi)
                }
                DegreeParam::ConicalTau(tau) => {
                    // K_(i tau)(mu xi-hat) A-hat + xi-hat K'_(i tau)(mu xi-hat) B,
                    // all real on the real axis (the +-i tau average turns the
                    // K_(u+1) pair into -K', flipping the printed sign)
                    if !az.z.is_real() || w.re().to_f64() <= 0.0 {
                        return Err(Error::Domain {
                            func: "legendre_large_mu",
                            msg: "conical degree variant requires real z > 1".into(),
                        });
                    }
                    let (k, kd) = specfun::bessel_k_imag_order(tau, w.re())?;
                    let a_hat = BigComplex::from_real(a.re().clone());
                    let bracket = &(&BigComplex::from_real(k) * &a_hat)
                        + &(&(&xi_hat * &BigComplex::from_real(kd)) * &b);
                    (&l * &(&sqrt_xih * &bracket)).scale(&two_over_pi)
                }
            }
        }
        LegendreKind::Q => {
            let nu = degree.nu(p);
            let g = specfun::gamma(&(&big - &nu))?;
            let i0 = specfun::modified_i_co(&u, &w)?;
            let i1 = specfun::modified_i_co(&(&u + &one), &w)?;
            let bracket = &(&i0 * &a) + &(&(&xi_hat * &i1) * &b);
            let root = (BigReal::pi(p).scale_pow2(-1)).sqrt();
            (&(&l * &g) * &(&sqrt_xih * &bracket)).scale(&root)
        }
        _ => {
            return Err(Error::Domain {
                func: "legendre_large_mu",
                msg: "only P^(-mu) and Q are provided in the large-order regime".into(),
            })
        }
    };
    Ok(EvalResult {
        value,
        a_coeff: a,
        b_coeff: b,
        method,
        n_used: cfg.n,
        accuracy_tag: tag,
    })
}

/// Large imaginary order mu = i rho: P^(-i rho) and Q^(i rho).
pub struct ImagOrderLargeMu {
    pub p_minus_irho: BigComplex,
    pub q_irho: BigComplex,
}

pub fn legendre_large_mu_imag(
    degree: &DegreeParam,
    rho: &BigReal,
    az: &AnnotatedZ,
    cfg: &Config,
    cache: Option<&NodeCache>,
) -> Result<ImagOrderLargeMu> {
    let p = &cfg.precision;
    let u = degree.u(p);
    if u.abs_value().to_f64() > cfg.u_max {
        return Err(Error::Regime("bounded-degree contract violated".into()));
    }
    let big = BigComplex::new(BigReal::zero(p), rho.clone()); // i rho
    let table = coeffs::cached_table(&u, 2 * cfg.n + 1, p)?;
    let (a, b, _, _) = ab_large_mu(&table, &big, az, cfg, cache)?;

    let xi_hat = maps::xi_hat_of_z(&az.z)?;
    let sqrt_xih = xi_hat.sqrt();
    let one = BigComplex::one(p);
    let half = BigComplex::from_real(BigReal::from_ratio(1, 2, p));
    // L_(-1/2 + i rho)^u
    let nu_rho = BigComplex::new(BigReal::from_ratio(-1, 2, p), rho.clone());
    let l = l_const(&nu_rho, &u, p)?;
    let w = xi_hat.scale(rho); // rho xi-hat
    let root = (BigReal::pi(p).scale_pow2(-1)).sqrt();
    let ixihat_b = (&xi_hat * &b).mul_i();

    // P^(-i rho) = -i e^(-u pi i/2) sqrt(pi/2) L { H2_u A + i xi-hat H2_(u+1) B } xi-hat^(1/2)
    let ph_m = exp_i_pi_c(&u.div_i64(-2), p);
    let h20 = specfun::cyl_h2_co(&u, &w)?;
    let h21 = specfun::cyl_h2_co(&(&u + &one), &w)?;
    let bracket = &(&h20 * &a) + &(&h21 * &ixihat_b);
    let p_minus_irho = -&(&(&ph_m * &l) * &(&sqrt_xih * &bracket)).scale(&root).mul_i();

    // Q^(i rho) = e^(u pi i/2) sqrt(pi/2) L Gamma(1/2 - u + i rho)
    //             { J_u A + i xi-hat J_(u+1) B } xi-hat^(1/2)
    let ph_p = exp_i_pi_c(&u.div_i64(2), p);
    let g = specfun::gamma(&(&(&half - &u) + &big))?;
    let j0 = specfun::cyl_j_co(&u, &w)?;
    let j1 = specfun::cyl_j_co(&(&u + &one), &w)?;
    let bracket = &(&j0 * &a) + &(&j1 * &ixihat_b);
    let q_irho = &(&(&ph_p * &l) * &g) * &(&sqrt_xih * &bracket).scale(&root);

    Ok(ImagOrderLargeMu {
        p_minus_irho,
        q_irho,
    })
}

// ---------------------------------------------------------------------------
// Ferrers functions
// ---------------------------------------------------------------------------

mod ferrers;
pub use ferrers::{
    ferrers_conical, ferrers_large_mu_lg, ferrers_large_nu, FerrersWhich, LgCase,
};

#[cfg(test)]
mod tests;
