//! Liouville-type variable transformations and branch handling.
//!
//! The half-plane |arg z| <= pi/2 cut along (-inf, 1] is the working domain.
//! Points on the cut must carry an explicit side annotation; the limits from
//! above/below differ and silent side-guessing would be untestable.
//!
//! Maps provided:
//!
//! * `xi_of_z`        xi = arccosh z, the large-degree Liouville variable
//! * `beta_of_z`      beta = z (z^2-1)^(-1/2) (self-inverse)
//! * `xi_from_beta`   xi = (1/2) ln((beta+1)/(beta-1))
//! * `xi_hat_of_z`    xi-hat = arccoth z = arccosh beta (large-order regime)
//! * `ferrers_vars`   eta = arccos x, gamma = x (1-x^2)^(-1/2) = cot eta
//! * `large_mu_vars`  p, chi (and the tilde variants) for the LG regime
//! * `schwarzian_psi` the closed-form Schwarzian of the LG transformation

use crate::arith::{BigComplex, BigReal, Precision};
use crate::error::{Error, Result};

/// Side annotation for points on the real cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutSide {
    /// Not on a cut.
    None,
    /// Limit from the upper half plane (x + i0).
    Above,
    /// Limit from the lower half plane (x - i0).
    Below,
}

/// A point of the z plane together with its cut-side annotation.
#[derive(Debug, Clone)]
pub struct AnnotatedZ {
    pub z: BigComplex,
    pub side: CutSide,
}

impl AnnotatedZ {
    pub fn new(z: BigComplex) -> Self {
        AnnotatedZ {
            z,
            side: CutSide::None,
        }
    }

    pub fn with_side(z: BigComplex, side: CutSide) -> Self {
        AnnotatedZ { z, side }
    }

    /// True when z lies exactly on the cut (-inf, 1].
    pub fn on_cut(&self) -> bool {
        self.z.is_real() && self.z.re().to_f64() < 1.0
    }

    fn require_side(&self, what: &str) -> Result<bool> {
        // returns true for Above
        match self.side {
            CutSide::Above => Ok(true),
            CutSide::Below => Ok(false),
            CutSide::None => Err(Error::Branch(format!(
                "{what}: point on the cut needs a side annotation"
            ))),
        }
    }
}

/// z, xi and beta bundled, as consumed by the expansion assemblies.
#[derive(Debug, Clone)]
pub struct LiouvilleVars {
    pub z: BigComplex,
    pub xi: BigComplex,
    pub beta: BigComplex,
}

/// eta = arccos x and gamma = cot eta for the Ferrers interval.
#[derive(Debug, Clone)]
pub struct FerrersVars {
    pub x: BigReal,
    pub eta: BigReal,
    pub gamma: BigReal,
}

/// Large-mu LG regime parameter: alpha = (nu+1/2)/mu, or the conical
/// alpha-tilde = tau/mu entering through alpha^2 -> -alpha-tilde^2.
#[derive(Debug, Clone)]
pub enum Alpha {
    Real(BigReal),
    Tilde(BigReal),
}

impl Alpha {
    /// Signed alpha^2 (negative for the tilde case).
    pub fn a2(&self) -> BigReal {
        match self {
            Alpha::Real(a) => a.square(),
            Alpha::Tilde(a) => -&a.square(),
        }
    }

    pub fn magnitude(&self) -> &BigReal {
        match self {
            Alpha::Real(a) | Alpha::Tilde(a) => a,
        }
    }
}

/// p and chi of the elementary large-mu expansions.
#[derive(Debug, Clone)]
pub struct LgVars {
    pub alpha: Alpha,
    pub x: BigReal,
    pub p: BigReal,
    pub chi: BigReal,
    /// p/x = (1 - alpha^2 (1-x^2))^(-1/2), finite at x = 0.
    pub p_over_x: BigReal,
}

// ---------------------------------------------------------------------------
// principal arccosh and side-aware logs
// ---------------------------------------------------------------------------

/// Principal arccosh for z off the cut (-inf, 1). Near z = 1 the evaluation
/// switches to the exact rearrangement 2 arcsinh(sqrt((z-1)/2)), which has no
/// cancellation; this reproduces the (z-1)^(1/2) series behaviour to full
/// working precision.
pub fn arccosh_principal(z: &BigComplex) -> BigComplex {
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    let h = z - &one;
    if h.abs_value().to_f64() < 0.5 {
        let w = h.div_i64(2).sqrt();
        let s = (&w.square() + &one).sqrt();
        return (&w + &s).ln().mul_i64(2);
    }
    let s = (z - &one).sqrt() * (z + &one).sqrt();
    (z + &s).ln()
}

/// Principal log with explicit side selection when `w` is a nonpositive real.
fn ln_with_side(w: &BigComplex, above: bool) -> BigComplex {
    if w.is_real() && !w.re().is_positive() {
        let p = w.re().precision_ctx();
        let pi = BigReal::pi(&p);
        let im = if above { pi } else { -&pi };
        return BigComplex::new(w.re().abs().ln(), im);
    }
    w.ln()
}

// ---------------------------------------------------------------------------
// xi and beta
// ---------------------------------------------------------------------------

/// Liouville variable xi = arccosh z with cut-side handling.
///
/// On the cut: xi(x + i0) = +i arccos x, xi(x - i0) = -i arccos x for
/// x in (-1, 1]; the map is not defined for x <= -1 (left half plane).
pub fn xi_of_z(az: &AnnotatedZ) -> Result<BigComplex> {
    let z = &az.z;
    if z.is_real() {
        let x = z.re();
        let xf = x.to_f64();
        if xf >= 1.0 {
            // real branch, xi >= 0
            let p = x.precision_ctx();
            let one = BigReal::one(&p).with_bits(x.bits());
            let h = x - &one;
            if h.to_f64() < 0.5 {
                let xi = (h.scale_pow2(-1)).sqrt().asinh().scale_pow2(1);
                return Ok(BigComplex::from_real(xi));
            }
            return Ok(BigComplex::from_real(x.acosh()));
        }
        if xf <= -1.0 {
            return Err(Error::Domain {
                func: "xi_of_z",
                msg: "z <= -1 lies outside |arg z| <= pi/2".into(),
            });
        }
        let above = az.require_side("xi_of_z")?;
        let eta = x.acos();
        let zero = BigReal::zero(&x.precision_ctx()).with_bits(x.bits());
        return Ok(if above {
            BigComplex::new(zero, eta)
        } else {
            BigComplex::new(zero, -eta)
        });
    }
    Ok(arccosh_principal(z))
}

/// beta = z (z^2 - 1)^(-1/2); on the cut beta(x +- i0) = -+ i gamma.
pub fn beta_of_z(az: &AnnotatedZ) -> Result<BigComplex> {
    let z = &az.z;
    if z.is_real() {
        let x = z.re();
        let xf = x.to_f64();
        let p = x.precision_ctx();
        let one = BigReal::one(&p).with_bits(x.bits());
        if xf == 1.0 || xf == -1.0 {
            return Err(Error::Singularity("beta_of_z at z = +-1".into()));
        }
        if xf > 1.0 {
            let b = x / &(&x.square() - &one).sqrt();
            return Ok(BigComplex::from_real(b));
        }
        if xf < -1.0 {
            return Err(Error::Domain {
                func: "beta_of_z",
                msg: "z < -1 lies outside |arg z| <= pi/2".into(),
            });
        }
        let above = az.require_side("beta_of_z")?;
        let gamma = x / &(&one - &x.square()).sqrt();
        let zero = BigReal::zero(&p).with_bits(x.bits());
        // beta(x +- i0) = -+ i gamma
        return Ok(if above {
            BigComplex::new(zero, -gamma)
        } else {
            BigComplex::new(zero, gamma)
        });
    }
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    let s = (z - &one).sqrt() * (z + &one).sqrt();
    Ok(z / &s)
}

/// Inverse of `beta_of_z` (the map is an involution): z = beta (beta^2-1)^(-1/2).
pub fn z_of_beta(beta: &BigComplex) -> Result<BigComplex> {
    beta_of_z(&AnnotatedZ::new(beta.clone()))
}

/// xi expressed through beta: xi = (1/2) ln((beta+1)/(beta-1)).
///
/// The principal branch reproduces the continuation of xi from the upper
/// side of the cut, matching `xi_of_z` with `CutSide::Above` on (0, 1).
pub fn xi_from_beta(beta: &BigComplex) -> Result<BigComplex> {
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    let den = beta - &one;
    if den.is_zero() {
        return Err(Error::Singularity("xi_from_beta at beta = 1".into()));
    }
    let ratio = (beta + &one) / &den;
    Ok(ratio.ln().div_i64(2))
}

/// xi-hat = arccoth z = arccosh beta, the Liouville variable of the
/// large-order regime. Stable for large |z| via the arctanh(1/z) series.
pub fn xi_hat_of_z(z: &BigComplex) -> Result<BigComplex> {
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    let zf = z.abs_value().to_f64();
    if zf <= 1.0 && z.is_real() {
        return Err(Error::Domain {
            func: "xi_hat_of_z",
            msg: "arccoth undefined on [-1, 1]".into(),
        });
    }
    if zf < 4.0 {
        let ratio = (z + &one) / &(z - &one);
        return Ok(ratio.ln().div_i64(2));
    }
    // arctanh(1/z) = sum z^(-2k-1) / (2k+1)
    let w = z.recip();
    let w2 = w.square();
    let bits = z.bits();
    let mut term = w.clone();
    let mut sum = w;
    let mut k = 1i64;
    loop {
        term = &term * &w2;
        let add = term.div_i64(2 * k + 1);
        sum = &sum + &add;
        if add.abs_value().exponent() < sum.abs_value().exponent() - bits as i64 - 4 {
            break;
        }
        k += 1;
        if k > 4 * bits as i64 {
            break;
        }
    }
    Ok(sum)
}

/// (z^2 - 1)^(-1/4), positive for z > 1 and continued from the annotated side
/// on the cut. This is the quarter-power prefactor of every Bessel-type
/// expansion.
pub fn quarter_power_inv(az: &AnnotatedZ) -> Result<BigComplex> {
    let z = &az.z;
    let p = Precision::new(16).unwrap();
    let one = BigComplex::one(&p);
    if z.is_real() {
        let xf = z.re().to_f64();
        if xf == 1.0 || xf == -1.0 {
            return Err(Error::Singularity("(z^2-1)^(-1/4) at z = +-1".into()));
        }
        if xf > -1.0 && xf < 1.0 {
            let above = az.require_side("quarter_power_inv")?;
            let pr = z.re().precision_ctx();
            let m = (&BigReal::one(&pr).with_bits(z.re().bits()) - &z.re().square())
                .pow(&BigReal::from_ratio(-1, 4, &pr));
            // arg(z^2-1) -> +-pi  =>  quarter power picks up e^(-+ i pi/4)
            let phase = BigReal::pi(&pr).scale_pow2(-2);
            let (s, c) = (phase.sin(), phase.cos());
            let rot = if above {
                BigComplex::new(c, -s)
            } else {
                BigComplex::new(c, s)
            };
            return Ok(rot.scale(&m));
        }
    }
    let lw = ln_with_side(&(z - &one), matches!(az.side, CutSide::Above))
        + ln_with_side(&(z + &one), true);
    Ok(lw.div_i64(-4).exp())
}

/// Bundle z -> (xi, beta) in one call.
pub fn liouville_vars(az: &AnnotatedZ) -> Result<LiouvilleVars> {
    Ok(LiouvilleVars {
        z: az.z.clone(),
        xi: xi_of_z(az)?,
        beta: beta_of_z(az)?,
    })
}

// ---------------------------------------------------------------------------
// Ferrers interval
// ---------------------------------------------------------------------------

/// eta = arccos x in (0, pi/2], gamma = x (1-x^2)^(-1/2) = cot eta,
/// for x in [0, 1).
pub fn ferrers_vars(x: &BigReal) -> Result<FerrersVars> {
    let p = x.precision_ctx();
    let one = BigReal::one(&p).with_bits(x.bits());
    if x.is_negative() || x >= &one {
        return Err(Error::Domain {
            func: "ferrers_vars",
            msg: format!(
                "x = {} outside [0, 1); negative x is handled by connection formulas",
                x.to_f64()
            ),
        });
    }
    let s = (&one - &x.square()).sqrt();
    Ok(FerrersVars {
        x: x.clone(),
        eta: x.acos(),
        gamma: x / &s,
    })
}

// ---------------------------------------------------------------------------
// large-mu LG variables
// ---------------------------------------------------------------------------

/// p = x (1 - alpha^2 (1-x^2))^(-1/2) and the explicitly integrated chi.
///
/// Case (i) requires 0 <= alpha < 1 (turning points stay off the interval);
/// case (ii) admits any alpha-tilde > 0. x may be negative (odd functions).
pub fn large_mu_vars(alpha: &Alpha, x: &BigReal) -> Result<LgVars> {
    {
        let p = x.precision_ctx();
        let one = BigReal::one(&p).with_bits(x.bits());
        if x.abs() >= one {
            return Err(Error::Domain {
                func: "large_mu_vars",
                msg: "x must lie in (-1, 1)".into(),
            });
        }
    }
    if let Alpha::Real(a) = alpha {
        if a.is_negative() || a.to_f64() >= 1.0 {
            return Err(Error::Regime(format!(
                "alpha = {} outside [0, 1); turning points reach the interval",
                a.to_f64()
            )));
        }
    }
    if let Alpha::Tilde(a) = alpha {
        if !a.is_positive() {
            return Err(Error::Regime("alpha-tilde must be positive".into()));
        }
    }
    let p = x.precision_ctx();
    let one = BigReal::one(&p).with_bits(x.bits());
    let a2 = alpha.a2();
    let d = &one - &(&a2 * &(&one - &x.square()));
    let p_over_x = d.pow(&BigReal::from_ratio(-1, 2, &p));
    let pvar = x * &p_over_x;
    let chi = match alpha {
        Alpha::Real(a) => {
            // (1/2) ln((1+p)/(1-p)) + (alpha/2) ln((1-alpha p)/(1+alpha p))
            let ap = a * &pvar;
            let t1 = pvar.atanh();
            let t2 = ap.atanh();
            &t1 - &(a * &t2)
        }
        Alpha::Tilde(a) => {
            // (1/2) ln((1+p)/(1-p)) + alpha-tilde * arctan(alpha-tilde p),
            // the continuous branch of (5.28)'s double-angle arctan form
            let ap = a * &pvar;
            &pvar.atanh() + &(a * &ap.atan())
        }
    };
    Ok(LgVars {
        alpha: alpha.clone(),
        x: x.clone(),
        p: pvar,
        chi,
        p_over_x,
    })
}

/// dp/dchi = (1-p^2)(1-alpha^2 p^2)/(1-alpha^2), closed form.
pub fn dp_dchi(alpha: &Alpha, pvar: &BigReal) -> BigReal {
    let p = pvar.precision_ctx();
    let one = BigReal::one(&p).with_bits(pvar.bits());
    let a2 = alpha.a2();
    let p2 = pvar.square();
    (&one - &p2) * &(&one - &(&a2 * &p2)) / &(&one - &a2)
}

/// Schwarzian-derived potential psi(alpha, x) of the LG transformation:
/// psi = (1-x^2) {1 - 4 alpha^2 x^2 - alpha^4 (1-x^2)} / (4 {1 - alpha^2 (1-x^2)}^3).
pub fn schwarzian_psi(alpha: &Alpha, x: &BigReal) -> BigReal {
    let p = x.precision_ctx();
    let one = BigReal::one(&p).with_bits(x.bits());
    let a2 = alpha.a2();
    let x2 = x.square();
    let omx2 = &one - &x2;
    let num = &omx2 * &(&(&one - &(&a2 * &x2).mul_i64(4)) - &(&a2.square() * &omx2));
    let den = (&one - &(&a2 * &omx2)).powi(3).mul_i64(4);
    &num / &den
}

/// F1 = psi/2, the first intermediary LG coefficient.
pub fn schwarzian_f1(alpha: &Alpha, x: &BigReal) -> BigReal {
    schwarzian_psi(alpha, x).scale_pow2(-1)
}

/// F2 = -(dpsi/dchi)/4 via a central difference in x at escalated precision
/// (validation helper; the production coefficients come from the recurrences).
pub fn schwarzian_f2_fd(alpha: &Alpha, x: &BigReal) -> Result<BigReal> {
    let p0 = x.precision_ctx();
    let p = p0.raised(p0.digits());
    let xx = x.with_bits(p.bits());
    let h = p0.tol(-((p0.digits() / 2) as i32) + 2).with_bits(p.bits());
    let a_hi = match alpha {
        Alpha::Real(a) => Alpha::Real(a.with_bits(p.bits())),
        Alpha::Tilde(a) => Alpha::Tilde(a.with_bits(p.bits())),
    };
    let psi_p = schwarzian_psi(&a_hi, &(&xx + &h));
    let psi_m = schwarzian_psi(&a_hi, &(&xx - &h));
    let dpsi_dx = (&psi_p - &psi_m) / &h.scale_pow2(1);
    // dchi/dx = sqrt(f) = sqrt(1 - alpha^2(1-x^2)) / (1-x^2)
    let one = BigReal::one(&p);
    let omx2 = &one - &xx.square();
    let dchi_dx = (&one - &(&a_hi.a2() * &omx2)).sqrt() / &omx2;
    let f2 = -&(&dpsi_dx / &dchi_dx).div_i64(4);
    Ok(f2.rounded_to(&p0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p40() -> Precision {
        Precision::new(40).unwrap()
    }

    fn c(re: f64, im: f64, p: &Precision) -> BigComplex {
        BigComplex::from_f64(re, im, p)
    }

    #[test]
    fn xi_basic_values() {
        let p = p40();
        // xi(1) = 0
        let z1 = AnnotatedZ::new(c(1.0, 0.0, &p));
        assert!(xi_of_z(&z1).unwrap().is_zero());
        // xi(2) = ln(2 + sqrt 3)
        let z2 = AnnotatedZ::new(c(2.0, 0.0, &p));
        let v = xi_of_z(&z2).unwrap();
        let expect = BigReal::parse("1.316957896924816708625046347307968444027", &p).unwrap();
        assert!((v.re() - &expect).abs() < p.tol(3));
        // cut values need a side
        let zc = AnnotatedZ::new(c(0.5, 0.0, &p));
        assert!(matches!(xi_of_z(&zc), Err(Error::Branch(_))));
        let za = AnnotatedZ::with_side(c(0.5, 0.0, &p), CutSide::Above);
        let xa = xi_of_z(&za).unwrap();
        assert!(xa.re().is_zero());
        let third_pi = BigReal::pi(&p).div_i64(3);
        assert!((xa.im() - &third_pi).abs() < p.tol(3));
    }

    #[test]
    fn xi_near_pole_series_behaviour() {
        // xi(1+h) - sqrt(2) h^(1/2) (1 - h/12) = O(h^(5/2))
        let p = p40();
        let sqrt2 = BigReal::from_i64(2, &p).sqrt();
        let check = |hf: f64| -> f64 {
            let h = BigReal::from_f64(hf, &p);
            let z = AnnotatedZ::new(BigComplex::from_real(
                &BigReal::one(&p) + &h,
            ));
            let xi = xi_of_z(&z).unwrap();
            let lead = &(&sqrt2 * &h.sqrt())
                * &(&BigReal::one(&p) - &h.div_i64(12));
            (xi.re() - &lead).abs().to_f64()
        };
        let d1 = check(1e-3);
        let d2 = check(1e-3 / 4.0);
        // O(h^(5/2)): shrinking h by 4 shrinks the defect by ~32
        let ratio = d1 / d2;
        assert!(
            (20.0..45.0).contains(&ratio),
            "h^(5/2) scaling violated: ratio {ratio}"
        );
        assert!(d1 < 1e-8);
    }

    #[test]
    fn beta_values_and_involution() {
        let p = p40();
        // beta(2) = 2/sqrt(3)
        let b = beta_of_z(&AnnotatedZ::new(c(2.0, 0.0, &p))).unwrap();
        let expect = &BigReal::from_i64(2, &p) / &BigReal::from_i64(3, &p).sqrt();
        assert!((b.re() - &expect).abs() < p.tol(3));
        // involution on random right-half-plane points
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let z = c(
                rng.gen_range(0.05..5.0),
                rng.gen_range(-5.0..5.0),
                &p,
            );
            if (z.re().to_f64() - 1.0).abs() < 0.05 && z.im().to_f64().abs() < 0.05 {
                continue;
            }
            let b = beta_of_z(&AnnotatedZ::new(z.clone())).unwrap();
            let back = z_of_beta(&b).unwrap();
            assert!(back.rel_err(&z) < p.tol(8), "involution failed at {z}");
        }
        // beta(x +- i0) = -+ i gamma at x = 3/5: gamma = 3/4
        let x = BigComplex::from_real(BigReal::from_ratio(3, 5, &p));
        let g = BigReal::from_ratio(3, 4, &p);
        let above = beta_of_z(&AnnotatedZ::with_side(x.clone(), CutSide::Above)).unwrap();
        assert!(above.re().is_zero());
        assert!((above.im() + &g).abs() < p.tol(3));
        let below = beta_of_z(&AnnotatedZ::with_side(x, CutSide::Below)).unwrap();
        assert!((below.im() - &g).abs() < p.tol(3));
    }

    #[test]
    fn beta_squared_identity_and_xi_consistency() {
        let p = p40();
        let one = BigComplex::one(&p);
        for (re, im) in [(1.7, 0.0), (2.5, 1.5), (0.4, 0.9), (0.3, -2.0), (9.0, 4.0)] {
            let z = AnnotatedZ::new(c(re, im, &p));
            let b = beta_of_z(&z).unwrap();
            let lhs = &b.square() - &one;
            let rhs = (&z.z.square() - &one).recip();
            assert!(lhs.rel_err(&rhs) < p.tol(8), "beta^2-1 != 1/(z^2-1) at {re}+{im}i");
            let xi = xi_of_z(&z).unwrap();
            let xi2 = xi_from_beta(&b).unwrap();
            assert!(xi.rel_err(&xi2) < p.tol(8), "xi mismatch at {re}+{im}i");
        }
    }

    #[test]
    fn xi_strip_mapping_and_schwarz_symmetry() {
        let p = p40();
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(99);
        let half_pi = BigReal::half_pi(&p);
        let slack = p.tol(-(p.digits() as i32) / 2);
        for _ in 0..200 {
            // random |arg z| <= pi/2, |z| <= 1e3
            let r = 10f64.powf(rng.gen_range(-2.0..3.0));
            let th = rng.gen_range(-1.0..1.0) * std::f64::consts::FRAC_PI_2;
            let z = c(r * th.cos(), r * th.sin(), &p);
            if (&z - &BigComplex::one(&p)).abs_value().to_f64() < 1e-6 {
                continue;
            }
            let az = AnnotatedZ::new(z.clone());
            let xi = match xi_of_z(&az) {
                Ok(v) => v,
                Err(_) => continue, // on-cut sample
            };
            assert!(
                xi.re() > &(-&slack),
                "Re xi < 0 at z = {z}: {xi}"
            );
            assert!(
                xi.im().abs() <= &half_pi + &slack,
                "|Im xi| > pi/2 at z = {z}: {xi}"
            );
            // Schwarz symmetry
            let xib = xi_of_z(&AnnotatedZ::new(z.conj())).unwrap();
            assert!((xib - xi.conj()).abs_value() < p.tol(8));
        }
    }

    #[test]
    fn xi_large_z_expansion() {
        // xi - ln 2z + 1/(4 z^2) = O(z^-4) at z = 1e3
        let p = p40();
        let z = c(1e3, 0.0, &p);
        let xi = xi_of_z(&AnnotatedZ::new(z.clone())).unwrap();
        let ln2z = (z.mul_i64(2)).ln();
        let corr = z.square().mul_i64(4).recip();
        let defect = (&(&xi - &ln2z) + &corr).abs_value();
        assert!(defect.to_f64() < 1e-11, "defect {defect}");
    }

    #[test]
    fn xi_hat_matches_arccoth() {
        let p = p40();
        // z = 2: arccoth 2 = (1/2) ln 3
        let v = xi_hat_of_z(&c(2.0, 0.0, &p)).unwrap();
        let expect = BigReal::from_i64(3, &p).ln().scale_pow2(-1);
        assert!((v.re() - &expect).abs() < p.tol(3));
        // consistency with arccosh(beta) for complex z (series band too)
        for (re, im) in [(1.5, 0.8), (3.0, -2.0), (30.0, 10.0), (800.0, 0.0)] {
            let z = c(re, im, &p);
            let b = beta_of_z(&AnnotatedZ::new(z.clone())).unwrap();
            let direct = xi_hat_of_z(&z).unwrap();
            let via_beta = arccosh_principal(&b);
            assert!(direct.rel_err(&via_beta) < p.tol(6), "mismatch at {re}+{im}i");
        }
    }

    #[test]
    fn ferrers_vars_values() {
        let p = p40();
        let fv = ferrers_vars(&BigReal::zero(&p)).unwrap();
        assert!((&fv.eta - &BigReal::half_pi(&p)).abs() < p.tol(3));
        assert!(fv.gamma.is_zero());
        let x = BigReal::from_i64(2, &p).sqrt().recip();
        let fv = ferrers_vars(&x).unwrap();
        assert!((&fv.eta - &BigReal::pi(&p).scale_pow2(-2)).abs() < p.tol(3));
        assert!((&fv.gamma - &BigReal::one(&p)).abs() < p.tol(3));
        // gamma = cot eta
        let x = BigReal::from_f64(0.83, &p);
        let fv = ferrers_vars(&x).unwrap();
        let cot = &fv.eta.cos() / &fv.eta.sin();
        assert!((&fv.gamma - &cot).abs() < p.tol(8));
        // gamma - 1/eta -> 0 with slope -1/3 in eta as x -> 1
        let eta_small = BigReal::from_f64(1e-4, &p);
        let x = eta_small.cos();
        let fv = ferrers_vars(&x).unwrap();
        let d = &(&fv.gamma - &fv.eta.recip()) / &fv.eta;
        assert!(
            (&d + &BigReal::from_ratio(1, 3, &p)).abs().to_f64() < 1e-7,
            "cot Laurent head wrong: {d}"
        );
        assert!(ferrers_vars(&BigReal::from_f64(-0.25, &p)).is_err());
    }

    #[test]
    fn large_mu_vars_alpha_zero_and_derivative() {
        let p = p40();
        // alpha = 0: p = x, chi = arctanh x
        let x = BigReal::from_f64(0.37, &p);
        let v = large_mu_vars(&Alpha::Real(BigReal::zero(&p)), &x).unwrap();
        assert!((&v.p - &x).abs() < p.tol(4));
        assert!((&v.chi - &x.atanh()).abs() < p.tol(4));
        // finite-difference dchi/dp against the closed form
        let alpha = Alpha::Real(BigReal::from_f64(0.5, &p));
        let x = BigReal::from_f64(0.3, &p);
        let h = BigReal::from_f64(1e-12, &p.raised(20));
        let vp = large_mu_vars(&alpha, &(&x + &h)).unwrap();
        let vm = large_mu_vars(&alpha, &(&x - &h)).unwrap();
        let dchi_dp_fd = (&vp.chi - &vm.chi) / &(&vp.p - &vm.p);
        let v0 = large_mu_vars(&alpha, &x).unwrap();
        let closed = dp_dchi(&alpha, &v0.p).recip();
        let rel = ((&dchi_dp_fd - &closed) / &closed).abs();
        assert!(rel.to_f64() < 1e-10, "dchi/dp rel err {rel}");
        // regime guard
        assert!(large_mu_vars(&Alpha::Real(BigReal::one(&p)), &x).is_err());
    }

    #[test]
    fn chi_tilde_log_divergence() {
        let p = p40();
        let alpha = Alpha::Tilde(BigReal::one(&p));
        let x = BigReal::parse("0.99999999", &p).unwrap();
        let v = large_mu_vars(&alpha, &x).unwrap();
        assert!(v.chi.to_f64() > 8.0, "chi-tilde should diverge logarithmically");
    }

    #[test]
    fn schwarzian_closed_form() {
        let p = p40();
        let x = BigReal::from_f64(0.42, &p);
        // psi(0, x) = (1-x^2)/4
        let psi0 = schwarzian_psi(&Alpha::Real(BigReal::zero(&p)), &x);
        let expect = (&BigReal::one(&p) - &x.square()).scale_pow2(-2);
        assert!((&psi0 - &expect).abs() < p.tol(6));
        // psi(alpha, +-1) = 0
        let alpha = Alpha::Real(BigReal::from_f64(0.6, &p));
        assert!(schwarzian_psi(&alpha, &BigReal::one(&p)).is_zero());
        assert!(schwarzian_psi(&alpha, &BigReal::from_i64(-1, &p)).is_zero());
    }

    #[test]
    fn quarter_power_sides() {
        let p = p40();
        // on the cut from above: e^(-i pi/4) |1-x^2|^(-1/4)
        let az = AnnotatedZ::with_side(c(0.6, 0.0, &p), CutSide::Above);
        let q = quarter_power_inv(&az).unwrap();
        assert!(q.re().is_positive() && q.im().is_negative());
        assert!((q.re() + q.im()).abs() < p.tol(6), "phase must be -pi/4");
        // continuity with a point slightly above the cut
        let near = quarter_power_inv(&AnnotatedZ::new(c(0.6, 1e-25, &p))).unwrap();
        assert!(q.rel_err(&near).to_f64() < 1e-20);
        // real z > 1: plain real value
        let q2 = quarter_power_inv(&AnnotatedZ::new(c(1.5, 0.0, &p))).unwrap();
        assert!(q2.im().is_zero() && q2.re().is_positive());
    }
}
