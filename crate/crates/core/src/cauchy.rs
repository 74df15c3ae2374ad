//! Contour quadrature for evaluation inside the pole-excluded disks.
//!
//! All integrands here are analytic in an annulus around the (circular)
//! contour, so the periodic trapezoid rule converges geometrically; the node
//! count doubles until two successive results agree. Node layouts at M and
//! 2M nest, so integrand values can be cached by angle across refinements.

use crate::arith::{BigComplex, BigReal, Precision};
use crate::error::{Error, Result};

/// Positively oriented circle with equally spaced nodes.
#[derive(Debug, Clone)]
pub struct Contour {
    pub center: BigComplex,
    pub radius: BigReal,
}

/// Node angles are indexed by k/M in units of 2^-20 turns, so that a node
/// shared between M and 2M gets the same key.
pub const ANGLE_SCALE: u32 = 1 << 20;

/// Maximum node count before the quadrature reports failure.
pub const MAX_NODES: usize = 1 << 14;

/// Default initial node count.
pub const DEFAULT_NODES: usize = 256;

impl Contour {
    pub fn new(center: BigComplex, radius: BigReal) -> Self {
        Contour { center, radius }
    }

    /// Circle |t - 1| = radius, the standard verification contour.
    pub fn about_one(radius: BigReal, p: &Precision) -> Self {
        Contour {
            center: BigComplex::one(p),
            radius,
        }
    }

    /// The k-th of M nodes: center + radius e^(2 pi i k / M).
    pub fn node(&self, k: usize, m: usize, p: &Precision) -> BigComplex {
        let two_pi = BigReal::two_pi(p);
        let theta = &(&two_pi * &BigReal::from_i64(k as i64, p)) / &BigReal::from_i64(m as i64, p);
        let e = BigComplex::new(theta.cos(), theta.sin());
        &self.center + &e.scale(&self.radius)
    }

    /// Uniform angle key for caching across doublings.
    pub fn angle_key(k: usize, m: usize) -> u32 {
        ((k as u64 * ANGLE_SCALE as u64) / m as u64) as u32
    }
}

/// (2 pi i)^(-1) contour integral of f(t)/(t - z) by the trapezoid rule with
/// node doubling; `f` receives (angle key, node) and may cache by key.
///
/// Preconditions: z strictly inside, distance to the contour at least
/// 0.05 radius, f analytic inside the annulus of convergence.
pub fn cauchy_eval<F>(f: &mut F, contour: &Contour, z: &BigComplex, p: &Precision) -> Result<BigComplex>
where
    F: FnMut(u32, &BigComplex) -> Result<BigComplex>,
{
    let dist = (z - &contour.center).abs_value();
    let margin = &dist / &contour.radius;
    let mf = margin.to_f64();
    if mf >= 0.95 {
        return Err(Error::Geometry(format!(
            "z must lie strictly inside the contour with 0.05 r clearance (|z-c|/r = {mf})"
        )));
    }
    let tol = p.tol(6);
    let mut m = DEFAULT_NODES;
    let mut prev: Option<BigComplex> = None;
    loop {
        // trapezoid: (1/M) sum f(t_k) (t_k - c) / (t_k - z)
        let mut acc = BigComplex::zero(p);
        for k in 0..m {
            let t = contour.node(k, m, p);
            let fv = f(Contour::angle_key(k, m), &t)?;
            acc = &acc + &(&(&fv * &(&t - &contour.center)) / &(&t - z));
        }
        let val = acc.div_i64(m as i64);
        if let Some(ref prev_val) = prev {
            let delta = val.rel_err(prev_val);
            if delta < tol {
                return Ok(val);
            }
            if m >= MAX_NODES {
                return Err(Error::Quadrature {
                    nodes: m,
                    delta: delta.to_f64(),
                });
            }
        }
        prev = Some(val);
        m *= 2;
    }
}

/// l0(z) = closed-contour integral of |dt/(t-z)| over the contour, i.e.
/// r * integral d theta / |t(theta) - z|, to the requested absolute accuracy.
pub fn l_zero(z: &BigComplex, contour: &Contour, p: &Precision, abs_tol: &BigReal) -> Result<BigReal> {
    let dist = (z - &contour.center).abs_value();
    if (&dist - &contour.radius).abs() < &contour.radius * &p.tol(8) {
        return Err(Error::Geometry("z lies on the contour".into()));
    }
    let mut m = DEFAULT_NODES;
    let mut prev: Option<BigReal> = None;
    loop {
        let mut acc = BigReal::zero(p);
        for k in 0..m {
            let t = contour.node(k, m, p);
            acc = &acc + &(&t - z).abs_value().recip();
        }
        let val = &(&acc * &BigReal::two_pi(p)).div_i64(m as i64) * &contour.radius;
        if let Some(prev_val) = prev {
            if (&val - &prev_val).abs() < *abs_tol {
                return Ok(val);
            }
            if m >= MAX_NODES {
                return Err(Error::Quadrature {
                    nodes: m,
                    delta: (&val - &prev_val).abs().to_f64(),
                });
            }
        }
        prev = Some(val);
        m *= 2;
    }
}

/// Maximum of a scalar function over [a, b]: dense scan followed by
/// golden-section refinement around the best local bracket.
/// Returns (max value, arg max).
pub fn curve_max<F>(f: &mut F, a: f64, b: f64, samples: usize) -> Result<(BigReal, f64)>
where
    F: FnMut(f64) -> Result<BigReal>,
{
    assert!(samples >= 4, "need at least a few samples");
    let step = (b - a) / samples as f64;
    let mut best_idx = 0usize;
    let mut best_val: Option<BigReal> = None;
    let mut values: Vec<BigReal> = Vec::with_capacity(samples + 1);
    for i in 0..=samples {
        let x = a + step * i as f64;
        let v = f(x)?;
        if best_val.as_ref().map_or(true, |bv| &v > bv) {
            best_val = Some(v.clone());
            best_idx = i;
        }
        values.push(v);
    }
    // bracket around the best sample
    let lo = if best_idx == 0 { a } else { a + step * (best_idx - 1) as f64 };
    let hi = if best_idx == samples {
        b
    } else {
        a + step * (best_idx + 1) as f64
    };
    golden_max(f, lo, hi)
}

fn golden_max<F>(f: &mut F, mut lo: f64, mut hi: f64) -> Result<(BigReal, f64)>
where
    F: FnMut(f64) -> Result<BigReal>,
{
    const PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - PHI * (hi - lo);
    let mut x2 = lo + PHI * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..90 {
        if (hi - lo).abs() < 1e-13 * (1.0 + hi.abs()) {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2.clone();
            x2 = lo + PHI * (hi - lo);
            f2 = f(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1.clone();
            x1 = hi - PHI * (hi - lo);
            f1 = f(x1)?;
        }
    }
    if f1 >= f2 {
        Ok((f1, x1))
    } else {
        Ok((f2, x2))
    }
}
