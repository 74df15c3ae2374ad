//! Identity-residual verification sweeps and the target manifest.
//!
//! The library verifies itself against combinations of its own evaluators
//! that are identically 1 in exact arithmetic:
//!
//! ```text
//! R(z)  = Gamma(nu+mu+2) { (mu-nu-1) P_nu^(-mu) Q_(nu+1) + P_(nu+1)^(-mu) Q_nu }
//! Rbar(x) = (Gamma(nu+mu+2)/Gamma(nu-mu+1)) { P_(nu+1) Qf_nu - P_nu Qf_(nu+1) }
//! S(x)  = (1/2) Gamma(nu+mu+2) Gamma(mu-nu) { P_(nu+1)(x) P_nu(-x) + P_nu(x) P_(nu+1)(-x) }
//! ```
//!
//! with every function replaced by its truncated asymptotic approximant.
//! The residual magnitudes, their locations, and the assembled contour
//! bound are pinned against the recorded reference values in [`TARGETS`].

use std::rc::Rc;

use crate::arith::{BigComplex, BigReal, Precision};
use crate::cauchy::{self, Contour};
use crate::coeffs::{self, CoeffTable};
use crate::error::Result;
use crate::expand::{self, Config};
use crate::maps::{self, AnnotatedZ, CutSide};
use crate::specfun;

// ---------------------------------------------------------------------------
// target manifest
// ---------------------------------------------------------------------------

/// One recorded verification target.
#[derive(Debug, Clone, Copy)]
pub struct Target {
    pub id: &'static str,
    /// recorded value
    pub value: f64,
    /// relative tolerance on the value
    pub rel_tol: f64,
    /// recorded location of the extremum (curve parameter), if pinned
    pub location: Option<f64>,
    /// absolute tolerance on the location
    pub loc_tol: f64,
    pub source: &'static str,
}

/// The machine-readable manifest of every recorded number the verification
/// runs reproduce.
pub const TARGETS: &[Target] = &[
    Target {
        id: "r-complex-max",
        value: 1.18724e-16,
        rel_tol: 0.01,
        location: Some(0.90632),
        loc_tol: 0.002,
        source: "max |Delta_4.2(11, 20.8, beta)| over the three curves, attained on the semicircle",
    },
    Target {
        id: "r-cauchy-max",
        value: 1.305412279e-19,
        rel_tol: 0.01,
        location: Some(0.47449),
        loc_tol: 0.002,
        source: "max |Delta-hat_4.2(11, 20.8, theta)| on the unit contour about 1",
    },
    Target {
        id: "l0-max",
        value: 6.74300141925,
        rel_tol: 1.5e-10, // 1e-9 absolute on a value of ~6.74
        location: None,
        loc_tol: 0.0,
        source: "max of the contour kernel length l0(z) over |z-1| <= 1/2 (at both x = 1/2, 3/2)",
    },
    Target {
        id: "cauchy-bound",
        value: 1.40095e-19,
        rel_tol: 0.01,
        location: None,
        loc_tol: 0.0,
        source: "assembled interior bound max|Delta-hat| l0max / (2 pi)",
    },
    Target {
        id: "r-ferrers-sup",
        value: 4.626048e-11,
        rel_tol: 0.01,
        location: Some(1.0),
        loc_tol: 1e-6,
        source: "sup over [0,1] of |Rbar_4.2(5, 20.8, x) - 1|, attained at x = 1",
    },
    Target {
        id: "s-ferrers-sup",
        value: 9.884448e-12,
        rel_tol: 0.01,
        location: Some(0.331819),
        loc_tol: 1e-3,
        source: "sup over [0,1] of |S_4.8^20.3(10, x) - 1|, attained at an interior point",
    },
];

pub fn target(id: &str) -> &'static Target {
    TARGETS.iter().find(|t| t.id == id).expect("unknown target id")
}

// ---------------------------------------------------------------------------
// assembly of the approximated identity R
// ---------------------------------------------------------------------------

/// Reusable context for the complex identity sweeps at fixed (u, mu, N):
/// gamma constants and coefficient tables are computed once.
pub struct RComplexCtx {
    pub cfg: Config,
    pub u: BigReal,
    pub mu: BigReal,
    table: Rc<CoeffTable>,
    /// optional additive perturbation of E_(mu,3) (mutation-sensitivity hook)
    perturbed: Option<Rc<CoeffTable>>,
    l_u: BigComplex,
    l_u1: BigComplex,
    g_pm_u: BigComplex,  // Gamma(u - mu + 1/2)
    g_pm_u1: BigComplex, // Gamma(u + 1 - mu + 1/2)
    g_front: BigComplex, // Gamma(u + mu + 3/2)
    coef: BigComplex,    // mu - u + 1/2  (the corrected mu - nu - 1)
}

impl RComplexCtx {
    pub fn new(cfg: Config, u: BigReal, mu: BigReal) -> Result<Self> {
        Self::with_perturbation(cfg, u, mu, None)
    }

    /// `perturb_e3`: add the given amount times beta to E_(mu,3), seeding a
    /// deliberate coefficient fault for mutation-sensitivity tests.
    pub fn with_perturbation(
        cfg: Config,
        u: BigReal,
        mu: BigReal,
        perturb_e3: Option<f64>,
    ) -> Result<Self> {
        let p = &cfg.precision;
        let mu_c = BigComplex::from_real(mu.clone());
        let table = coeffs::cached_table(&mu_c, 2 * cfg.n + 1, p)?;
        let perturbed = match perturb_e3 {
            None => None,
            Some(eps) => {
                let mut t = (*table).clone();
                let mut c = t.e[2].c.clone();
                if c.len() < 2 {
                    c.resize(2, BigComplex::zero(p));
                }
                c[1] = &c[1] + &BigComplex::from_f64(eps, 0.0, p);
                t.e[2] = coeffs::Poly::from_coeffs(c);
                Some(Rc::new(t))
            }
        };
        let one = BigComplex::one(p);
        let half = BigComplex::from_real(BigReal::from_ratio(1, 2, p));
        let u_c = BigComplex::from_real(u.clone());
        let nu = &u_c - &half;
        let nu1 = &nu + &one;
        let l_u = expand::l_const(&nu, &mu_c, p)?;
        let l_u1 = expand::l_const(&nu1, &mu_c, p)?;
        let g_pm_u = specfun::gamma(&(&(&nu - &mu_c) + &one))?;
        let g_pm_u1 = specfun::gamma(&(&(&nu1 - &mu_c) + &one))?;
        let g_front = specfun::gamma(&(&(&nu + &mu_c) + &BigComplex::from_i64(2, p)))?;
        let coef = &(&mu_c - &u_c) - &half; // mu - nu - 1 at nu = u - 1/2
        Ok(RComplexCtx {
            cfg,
            u,
            mu,
            table,
            perturbed,
            l_u,
            l_u1,
            g_pm_u,
            g_pm_u1,
            g_front,
            coef,
        })
    }

    fn active_table(&self) -> &CoeffTable {
        match &self.perturbed {
            Some(t) => t,
            None => &self.table,
        }
    }

    /// |R(z) - 1| at a side-annotated point, with I/K assembled from the
    /// truncated composites at degrees u and u+1.
    pub fn delta_at(&self, az: &AnnotatedZ) -> Result<BigReal> {
        let p = &self.cfg.precision;
        let table = self.active_table();
        let vars = maps::liouville_vars(az)?;
        let rows = coeffs::cal_e_values(table, coeffs::Family::Plain, &vars.beta, &vars.xi, 2 * self.cfg.n + 1)?;
        let rows_t =
            coeffs::cal_e_values(table, coeffs::Family::Tilde, &vars.beta, &vars.xi, 2 * self.cfg.n + 1)?;
        let rows = expand::CoeffRows {
            plain: rows,
            tilde: rows_t,
        };
        let one = BigComplex::one(p);
        let quarter = maps::quarter_power_inv(az)?;
        let sqrt_xi = vars.xi.sqrt();
        let mu_c = BigComplex::from_real(self.mu.clone());
        let mu1 = &mu_c + &one;

        let ik_pair = |uf: &BigReal, l: &BigComplex, g: &BigComplex| -> Result<(BigComplex, BigComplex)> {
            let u_c = BigComplex::from_real(uf.clone());
            let (a, b, _) = expand::ab_from_rows(&rows, &u_c, &vars.xi, self.cfg.n, p)?;
            let w = &u_c * &vars.xi;
            let i0 = specfun::modified_i_co(&mu_c, &w)?;
            let i1 = specfun::modified_i_co(&mu1, &w)?;
            let k0 = specfun::modified_k_co(&mu_c, &w)?;
            let k1 = specfun::modified_k_co(&mu1, &w)?;
            let i_val = &(&(l * g) * &quarter)
                * &(&sqrt_xi * &(&(&i0 * &a) + &(&(&vars.xi * &i1) * &b)));
            let k_val =
                &(l * &quarter) * &(&sqrt_xi * &(&(&k0 * &a) - &(&(&vars.xi * &k1) * &b)));
            Ok((i_val, k_val))
        };
        let (i_u, k_u) = ik_pair(&self.u, &self.l_u, &self.g_pm_u)?;
        let u1 = &self.u + &BigReal::one(p);
        let (i_u1, k_u1) = ik_pair(&u1, &self.l_u1, &self.g_pm_u1)?;
        let r = &self.g_front * &(&(&(&self.coef * &i_u) * &k_u1) + &(&i_u1 * &k_u));
        Ok((&r - &one).abs_value())
    }
}

/// Result of a curve sweep: samples plus the refined maximum.
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub samples: Vec<(f64, f64)>,
    pub max_value: f64,
    pub max_location: f64,
}

/// The three verification curves of the complex identity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveId {
    /// semicircle z = 1 + e^(i theta)/2, theta in [0, pi]
    SemiCircle,
    /// beta = -i y, y in [0, 1/sqrt(3)] (i.e. z in [0, 1/2] from above)
    BetaSegment,
    /// beta in [0, 1), i.e. z = i Y up the imaginary axis (unbounded line)
    BetaReal,
}

impl CurveId {
    pub fn name(&self) -> &'static str {
        match self {
            CurveId::SemiCircle => "AB-semicircle",
            CurveId::BetaSegment => "BC-beta-segment",
            CurveId::BetaReal => "CD-beta-real",
        }
    }

    /// Parameter interval swept.
    pub fn interval(&self) -> (f64, f64) {
        match self {
            CurveId::SemiCircle => (0.0, std::f64::consts::PI),
            CurveId::BetaSegment => (0.0, 1.0 / 3f64.sqrt()),
            // beta in [0, b_max]: the unbounded line is cut off at |z| = 1e3
            CurveId::BetaReal => (0.0, 0.999_999_5),
        }
    }

    /// Map the curve parameter to a side-annotated z point.
    pub fn point(&self, t: f64, p: &Precision) -> AnnotatedZ {
        match self {
            CurveId::SemiCircle => {
                let z = BigComplex::from_f64(1.0 + 0.5 * t.cos(), 0.5 * t.sin(), p);
                let side = if t >= std::f64::consts::PI - 1e-14 {
                    CutSide::Above
                } else {
                    CutSide::None
                };
                AnnotatedZ::with_side(z, side)
            }
            CurveId::BetaSegment => {
                // beta = -i y  <=>  z = y/sqrt(1+y^2) + i0
                let x = t / (1.0 + t * t).sqrt();
                AnnotatedZ::with_side(BigComplex::from_f64(x, 0.0, p), CutSide::Above)
            }
            CurveId::BetaReal => {
                // beta = b in [0,1)  <=>  z = i b/sqrt(1-b^2); the endpoint
                // b = 0 sits on the cut and continues from above
                let y = t / (1.0 - t * t).sqrt();
                let side = if y == 0.0 { CutSide::Above } else { CutSide::None };
                AnnotatedZ::with_side(BigComplex::from_f64(0.0, y, p), side)
            }
        }
    }
}

/// Sweep |R - 1| along one curve with golden refinement of the maximum.
pub fn sweep_r_complex(ctx: &RComplexCtx, curve: CurveId, samples: usize) -> Result<SweepResult> {
    let p = &ctx.cfg.precision;
    let (a, b) = curve.interval();
    let mut rows = Vec::with_capacity(samples + 1);
    let mut f = |t: f64| -> Result<BigReal> {
        let az = curve.point(t, p);
        ctx.delta_at(&az)
    };
    let step = (b - a) / samples as f64;
    for i in 0..=samples {
        let t = a + step * i as f64;
        let v = f(t)?;
        rows.push((t, v.to_f64()));
    }
    let (maxv, argmax) = cauchy::curve_max(&mut f, a, b, samples)?;
    Ok(SweepResult {
        samples: rows,
        max_value: maxv.to_f64(),
        max_location: argmax,
    })
}

/// Full complex-identity verification: max |R - 1| over the three curves.
pub struct RComplexReport {
    pub per_curve: Vec<(CurveId, SweepResult)>,
    pub max_value: f64,
    pub max_location: f64,
    pub max_curve: CurveId,
}

pub fn run_r_complex(ctx: &RComplexCtx, samples: usize) -> Result<RComplexReport> {
    let mut per_curve = Vec::new();
    let mut best: Option<(f64, f64, CurveId)> = None;
    for curve in [CurveId::SemiCircle, CurveId::BetaSegment, CurveId::BetaReal] {
        let sw = sweep_r_complex(ctx, curve, samples)?;
        if best.as_ref().map_or(true, |(v, _, _)| sw.max_value > *v) {
            best = Some((sw.max_value, sw.max_location, curve));
        }
        per_curve.push((curve, sw));
    }
    let (max_value, max_location, max_curve) = best.unwrap();
    Ok(RComplexReport {
        per_curve,
        max_value,
        max_location,
        max_curve,
    })
}

// ---------------------------------------------------------------------------
// Cauchy-path verification
// ---------------------------------------------------------------------------

pub struct RCauchyReport {
    pub sweep: SweepResult,
    pub max_value: f64,
    pub max_location: f64,
    pub l0_max: f64,
    pub l0_at_half: f64,
    pub l0_at_three_half: f64,
    pub bound: f64,
}

/// |R-hat(1 + e^(i theta)) - 1| on the contour, its maximum over
/// [0, pi] (Schwarz symmetry covers the rest), the maximum of l0 over the
/// disk |z-1| <= 1/2, and the assembled interior bound.
pub fn run_r_cauchy(ctx: &RComplexCtx, samples: usize) -> Result<RCauchyReport> {
    let p = &ctx.cfg.precision;
    let mut f = |theta: f64| -> Result<BigReal> {
        let z = BigComplex::from_f64(1.0 + theta.cos(), theta.sin(), p);
        let az = if theta >= std::f64::consts::PI - 1e-14 {
            AnnotatedZ::with_side(z, CutSide::Above)
        } else {
            AnnotatedZ::new(z)
        };
        ctx.delta_at(&az)
    };
    let mut rows = Vec::with_capacity(samples + 1);
    let step = std::f64::consts::PI / samples as f64;
    for i in 0..=samples {
        let t = step * i as f64;
        rows.push((t, f(t)?.to_f64()));
    }
    let (maxv, argmax) = cauchy::curve_max(&mut f, 0.0, std::f64::consts::PI, samples)?;

    // l0 and its maximum over the disk: constant along circles about 1, so
    // the extremum lies on the real diameter [1/2, 3/2]
    let contour = Contour::about_one(BigReal::one(p), p);
    let tol = BigReal::parse("1e-12", p).unwrap();
    let mut l0 = |x: f64| -> Result<BigReal> {
        cauchy::l_zero(&BigComplex::from_f64(x, 0.0, p), &contour, p, &tol)
    };
    let l0_half = l0(0.5)?.to_f64();
    let l0_three_half = l0(1.5)?.to_f64();
    // confirm the endpoints dominate the diameter
    let (l0_int, _) = cauchy::curve_max(&mut l0, 0.5, 1.5, 64)?;
    let l0_max = l0_half.max(l0_three_half).max(l0_int.to_f64());

    let bound = maxv.to_f64() * l0_max / (2.0 * std::f64::consts::PI);
    Ok(RCauchyReport {
        sweep: SweepResult {
            samples: rows,
            max_value: maxv.to_f64(),
            max_location: argmax,
        },
        max_value: maxv.to_f64(),
        max_location: argmax,
        l0_max,
        l0_at_half: l0_half,
        l0_at_three_half: l0_three_half,
        bound,
    })
}

// ---------------------------------------------------------------------------
// Ferrers identity sweeps
// ---------------------------------------------------------------------------

pub struct FerrersReport {
    pub samples: Vec<(f64, f64)>,
    pub sup_value: f64,
    pub sup_location: f64,
}

/// |Rbar(x) - 1| with the re-expanded coefficients, swept over [0, 1].
///
/// The approximants use the re-expanded inverse-power coefficients on the
/// whole interval (their removable-singularity evaluator covers x = 1, where
/// the supremum is attained).
pub fn run_r_ferrers(cfg: &Config, u: &BigReal, mu: &BigReal, samples: usize) -> Result<FerrersReport> {
    let p = &cfg.precision;
    let half = BigReal::from_ratio(1, 2, p);
    let nu = u - &half;
    let one = BigReal::one(p);
    let mu_c = BigComplex::from_real(mu.clone());
    let nu_c = BigComplex::from_real(nu.clone());
    let g_front = specfun::gamma(&(&(&nu_c + &mu_c) + &BigComplex::from_i64(2, p)))?;
    let g_den = specfun::gamma(&(&(&nu_c - &mu_c) + &BigComplex::one(p)))?;
    let front = (&g_front / &g_den).re().clone();

    let mut rbar = |xf: f64| -> Result<BigReal> {
        // x = 1 is evaluated as the one-sided limit through a displaced
        // point well below the target resolution
        let x = if xf >= 1.0 {
            &one - &p.tol(18)
        } else {
            BigReal::from_f64(xf, p)
        };
        let p0 = expand::ferrers_large_nu(expand::FerrersWhich::P, &nu, mu, &x, cfg, true)?;
        let q0 = expand::ferrers_large_nu(expand::FerrersWhich::Q, &nu, mu, &x, cfg, true)?;
        let nu1 = &nu + &one;
        let p1 = expand::ferrers_large_nu(expand::FerrersWhich::P, &nu1, mu, &x, cfg, true)?;
        let q1 = expand::ferrers_large_nu(expand::FerrersWhich::Q, &nu1, mu, &x, cfg, true)?;
        let r = &front
            * &(&(p1.value.re() * q0.value.re()) - &(p0.value.re() * q1.value.re()));
        Ok((&r - &one).abs())
    };
    let mut rows = Vec::with_capacity(samples + 1);
    let step = 1.0 / samples as f64;
    for i in 0..=samples {
        let t = step * i as f64;
        rows.push((t, rbar(t)?.to_f64()));
    }
    let (maxv, argmax) = cauchy::curve_max(&mut rbar, 0.0, 1.0, samples)?;
    Ok(FerrersReport {
        samples: rows,
        sup_value: maxv.to_f64(),
        sup_location: argmax,
    })
}

/// |S(x) - 1| with the elementary large-order approximants, over [0, 1].
pub fn run_s_ferrers(cfg: &Config, nu: &BigReal, mu: &BigReal, samples: usize) -> Result<FerrersReport> {
    let p = &cfg.precision;
    let one = BigReal::one(p);
    let mu_c = BigComplex::from_real(mu.clone());
    let nu_c = BigComplex::from_real(nu.clone());
    let g1 = specfun::gamma(&(&(&nu_c + &mu_c) + &BigComplex::from_i64(2, p)))?;
    let g2 = specfun::gamma(&(&mu_c - &nu_c))?;
    let front = (&g1 * &g2).re().scale_pow2(-1);
    let deg0 = expand::DegreeParam::Real(nu.clone());
    let deg1 = expand::DegreeParam::Real(nu + &one);

    let mut s_resid = |xf: f64| -> Result<BigReal> {
        let x = if xf >= 1.0 {
            &one - &p.tol(18)
        } else {
            BigReal::from_f64(xf, p)
        };
        let p0p = expand::ferrers_large_mu_lg(true, &deg0, mu, &x, cfg)?;
        let p0m = expand::ferrers_large_mu_lg(false, &deg0, mu, &x, cfg)?;
        let p1p = expand::ferrers_large_mu_lg(true, &deg1, mu, &x, cfg)?;
        let p1m = expand::ferrers_large_mu_lg(false, &deg1, mu, &x, cfg)?;
        let s = &front
            * &(&(p1p.value.re() * p0m.value.re()) + &(p0p.value.re() * p1m.value.re()));
        Ok((&s - &one).abs())
    };
    let mut rows = Vec::with_capacity(samples + 1);
    let step = 1.0 / samples as f64;
    for i in 0..=samples {
        let t = step * i as f64;
        rows.push((t, s_resid(t)?.to_f64()));
    }
    let (maxv, argmax) = cauchy::curve_max(&mut s_resid, 0.0, 1.0, samples)?;
    Ok(FerrersReport {
        samples: rows,
        sup_value: maxv.to_f64(),
        sup_location: argmax,
    })
}

// ---------------------------------------------------------------------------
// oracle-grade identity report (for the CLI `verify identities` run)
// ---------------------------------------------------------------------------

pub struct IdentityReport {
    pub rows: Vec<(String, f64)>,
    pub max_residual: f64,
}

/// Oracle-grade residuals of the three identities on small grids.
pub fn run_identities(p: &Precision) -> Result<IdentityReport> {
    let mut rows = Vec::new();
    let nu = BigComplex::from_real(BigReal::parse("3.3", p).unwrap());
    let mu = BigComplex::from_real(BigReal::parse("1.1", p).unwrap());
    for zf in [1.4, 1.8, 2.4] {
        let z = BigComplex::from_f64(zf, 0.0, p);
        let r = crate::oracle::r_identity_oracle(&nu, &mu, &z, CutSide::None)?;
        rows.push((format!("R(z) - 1 at z = {zf}"), r.to_f64()));
    }
    let nu = BigComplex::from_real(BigReal::parse("2.3", p).unwrap());
    let mu = BigComplex::from_real(BigReal::parse("0.7", p).unwrap());
    for xf in [0.2, 0.5] {
        let x = BigReal::from_f64(xf, p);
        let r = crate::oracle::r_bar_identity_oracle(&nu, &mu, &x)?;
        rows.push((format!("Rbar(x) - 1 at x = {xf}"), r.to_f64()));
        let mu_s = BigComplex::from_real(BigReal::parse("3.6", p).unwrap());
        let nu_s = BigComplex::from_real(BigReal::parse("1.3", p).unwrap());
        let s = crate::oracle::s_identity_oracle(&nu_s, &mu_s, &x)?;
        rows.push((format!("S(x) - 1 at x = {xf}"), s.to_f64()));
    }
    let max_residual = rows.iter().map(|r| r.1).fold(0.0, f64::max);
    Ok(IdentityReport { rows, max_residual })
}

/// Convenience: did a measured extremum hit its recorded target?
pub fn check_target(t: &Target, value: f64, location: Option<f64>) -> std::result::Result<(), String> {
    let rel = ((value - t.value) / t.value).abs();
    if rel > t.rel_tol {
        return Err(format!(
            "{}: value {:e} differs from recorded {:e} by {:.2e} (tol {:.0e})",
            t.id, value, t.value, rel, t.rel_tol
        ));
    }
    if let (Some(want), Some(got)) = (t.location, location) {
        if (want - got).abs() > t.loc_tol {
            return Err(format!(
                "{}: extremum at {got} but recorded at {want} (tol {})",
                t.id, t.loc_tol
            ));
        }
    }
    Ok(())
}
