//! Re-expansion of the Ferrers coefficient composites into traditional
//! inverse-power form
//!
//! ```text
//! A_mu(u,x) ~ 1 + sum_{s>=1} A_{mu,2s}(x) / u^(2s)
//! B_mu(u,x) ~     sum_{s>=0} B_{mu,2s+1}(x) / u^(2s+1)
//! ```
//!
//! with coefficients that are polynomials in gamma and 1/eta. Each
//! coefficient has a removable singularity at x = 1: substituting the cot
//! Laurent series gamma = 1/eta - eta/3 - eta^3/45 - ... yields a plain
//! power series in eta. Both representations are kept: the bivariate form
//! evaluates directly for eta >= 0.2, the substituted series below that.

use super::poly::{cot_laurent, BiPoly, Laurent};
use super::{build_f_e, Family};
use crate::arith::{BigComplex, BigReal, Precision};
use crate::error::{Error, Result};
use crate::maps::FerrersVars;

/// Largest supported re-expansion order; bivariate term growth beyond this
/// costs more than the VERIFY profile ever needs (the reference experiments
/// use S = 5).
pub const MAX_S: usize = 8;

/// Threshold on eta below which the substituted series is used.
pub const ETA_SWITCH: f64 = 0.2;

#[derive(Debug, Clone)]
pub struct ReexpandedFerrers {
    pub mu: BigComplex,
    pub s_cap: usize,
    /// A_{mu,2s} for s = 1..s_cap.
    pub a_even: Vec<BiPoly>,
    /// B_{mu,2s+1} for s = 0..s_cap.
    pub b_odd: Vec<BiPoly>,
    /// Substituted eta-series (coefficients of eta^0, eta^1, ...).
    a_near1: Vec<Vec<BigReal>>,
    b_near1: Vec<Vec<BigReal>>,
    /// Limits at x = 1.
    pub a_limit1: Vec<BigReal>,
    pub b_limit1: Vec<BigReal>,
}

/// Build the re-expanded coefficient family for fixed mu.
pub fn reexpand_ab_ferrers(
    mu: &BigComplex,
    s_cap: usize,
    p: &Precision,
) -> Result<ReexpandedFerrers> {
    if s_cap == 0 || s_cap > MAX_S {
        return Err(Error::Config(format!(
            "re-expansion order {s_cap} outside 1..={MAX_S}"
        )));
    }
    let wp = p.raised(20 + 2 * s_cap as u32);
    let order = 2 * s_cap + 1; // highest power of 1/u kept
    let table = build_f_e(mu, order, &wp)?;

    // real bivariate versions of the composite coefficients:
    // even s: F_s(x), odd s: i F_s(x), for both families
    let g = |family: Family| -> Result<Vec<BiPoly>> {
        let a = match family {
            Family::Plain => &table.a_plain,
            Family::Tilde => &table.a_tilde,
        };
        let i_unit = BigComplex::i(&wp);
        let minus_i = BigComplex::new(BigReal::zero(&wp), -&BigReal::one(&wp));
        let mut out = Vec::with_capacity(order + 1);
        out.push(BiPoly::zero()); // index 0 unused
        let mut phase = minus_i.clone(); // (-i)^s
        for s in 1..=order {
            let mut bp = BiPoly::zero();
            let tol = &wp.tol(6)
                * &table.e[s - 1]
                    .max_coeff()
                    .max(&a[s - 1].abs_value())
                    .max(&BigReal::one(&wp));
            // E_s(i gamma): coefficient of gamma^k is e_k i^k (times i when s odd)
            let mut ik = BigComplex::one(&wp); // i^k
            for (k, ek) in table.e[s - 1].c.iter().enumerate() {
                let mut v = ek * &ik;
                if s % 2 == 1 {
                    v = &v * &i_unit;
                }
                debug_assert!(
                    v.im().abs() < tol,
                    "gamma-coefficient not real at s={s}, k={k}: {v}"
                );
                bp.add_term(k as u32, 0, v.re());
                ik = ik.mul_i();
            }
            // pole part: -(-i)^s a_s/s w^s (times i when s odd)
            let mut v = (&phase * &a[s - 1]).div_i64(-(s as i64));
            if s % 2 == 1 {
                v = &v * &i_unit;
            }
            debug_assert!(v.im().abs() < tol, "w-coefficient not real at s={s}: {v}");
            bp.add_term(0, s as u32, v.re());
            out.push(bp);
            phase = &phase * &minus_i;
        }
        Ok(out)
    };
    let g_tilde = g(Family::Tilde)?;
    let g_plain = g(Family::Plain)?;

    let len = order + 1;
    let split = |gs: &[BiPoly]| -> (Vec<BiPoly>, Vec<BiPoly>) {
        let mut even = vec![BiPoly::zero(); len];
        let mut odd = vec![BiPoly::zero(); len];
        for (s, v) in gs.iter().enumerate().skip(1) {
            if s % 2 == 0 {
                even[s] = v.clone();
            } else {
                odd[s] = v.clone();
            }
        }
        (even, odd)
    };

    let one_w = BigReal::one(&wp);
    let (te, to) = split(&g_tilde);
    let a_series = series_mul(
        &series_exp(&te, len, &wp),
        &series_cos_sin(&to, len, &wp).0,
        len,
    );
    let (pe, po) = split(&g_plain);
    let b_inner = series_mul(
        &series_exp(&pe, len, &wp),
        &series_cos_sin(&po, len, &wp).1,
        len,
    );
    // overall 1/eta prefactor of the B composite
    let w_mono = BiPoly::monomial(0, 1, one_w.clone());
    let b_series: Vec<BiPoly> = b_inner.iter().map(|t| t.mul(&w_mono)).collect();

    // structural checks: A has even powers only (beyond the constant 1),
    // B odd powers only
    let scale = a_series
        .iter()
        .chain(b_series.iter())
        .map(|t| t.max_coeff())
        .fold(BigReal::one(&wp), |m, v| m.max(&v));
    let tol = &wp.tol(8) * &scale;
    for (s, t) in a_series.iter().enumerate() {
        if s % 2 == 1 && t.max_coeff() > tol {
            return Err(Error::Internal(format!(
                "re-expansion: odd A coefficient at v^{s} is nonzero ({})",
                t.max_coeff()
            )));
        }
    }
    for (s, t) in b_series.iter().enumerate() {
        if s % 2 == 0 && t.max_coeff() > tol {
            return Err(Error::Internal(format!(
                "re-expansion: even B coefficient at v^{s} is nonzero ({})",
                t.max_coeff()
            )));
        }
    }

    let a_even: Vec<BiPoly> = (1..=s_cap).map(|s| a_series[2 * s].clone()).collect();
    let b_odd: Vec<BiPoly> = (0..=s_cap.min((order - 1) / 2))
        .map(|s| b_series[2 * s + 1].clone())
        .collect();

    // removable-singularity route: substitute gamma = cot eta
    let t_keep = ((wp.digits() as f64 + 6.0) / 0.698_97).ceil() as i64;
    let cot = cot_laurent(t_keep + 2, &wp);
    let sub = |bp: &BiPoly, what: &str| -> Result<Vec<BigReal>> {
        substitute_cot(bp, &cot, t_keep, &wp, what)
    };
    let mut a_near1 = Vec::with_capacity(a_even.len());
    let mut b_near1 = Vec::with_capacity(b_odd.len());
    for (s, bp) in a_even.iter().enumerate() {
        a_near1.push(sub(bp, &format!("A_(mu,{})", 2 * (s + 1)))?);
    }
    for (s, bp) in b_odd.iter().enumerate() {
        b_near1.push(sub(bp, &format!("B_(mu,{})", 2 * s + 1))?);
    }
    let a_limit1 = a_near1.iter().map(|c| c[0].rounded_to(p)).collect();
    let b_limit1 = b_near1.iter().map(|c| c[0].rounded_to(p)).collect();

    Ok(ReexpandedFerrers {
        mu: mu.clone(),
        s_cap,
        a_even,
        b_odd,
        a_near1,
        b_near1,
        a_limit1,
        b_limit1,
    })
}

impl ReexpandedFerrers {
    /// A_{mu,2s}(x) for s in 1..=s_cap, switching to the substituted series
    /// near x = 1.
    pub fn coeff_a(&self, s: usize, fv: &FerrersVars) -> BigReal {
        assert!((1..=self.s_cap).contains(&s));
        self.eval_one(&self.a_even[s - 1], &self.a_near1[s - 1], fv)
    }

    /// B_{mu,2s+1}(x) for s in 0..=s_cap.
    pub fn coeff_b(&self, s: usize, fv: &FerrersVars) -> BigReal {
        assert!(s <= self.s_cap);
        self.eval_one(&self.b_odd[s], &self.b_near1[s], fv)
    }

    fn eval_one(&self, bi: &BiPoly, series: &[BigReal], fv: &FerrersVars) -> BigReal {
        if fv.eta.to_f64() < ETA_SWITCH {
            let mut acc = series[series.len() - 1].clone();
            for k in (0..series.len() - 1).rev() {
                acc = &(&acc * &fv.eta) + &series[k];
            }
            acc
        } else {
            bi.eval(&fv.gamma, &fv.eta.recip())
        }
    }

    /// Direct bivariate evaluation regardless of eta (for the dual-path test).
    pub fn coeff_a_direct(&self, s: usize, fv: &FerrersVars) -> BigReal {
        self.a_even[s - 1].eval(&fv.gamma, &fv.eta.recip())
    }

    /// Substituted-series evaluation regardless of eta (for the dual-path test).
    pub fn coeff_a_series(&self, s: usize, fv: &FerrersVars) -> BigReal {
        let series = &self.a_near1[s - 1];
        let mut acc = series[series.len() - 1].clone();
        for k in (0..series.len() - 1).rev() {
            acc = &(&acc * &fv.eta) + &series[k];
        }
        acc
    }
}

/// Substitute gamma -> cot(eta) (truncated Laurent) into a bivariate
/// polynomial; verify no negative powers of eta survive; return the
/// coefficients of eta^0..eta^t_keep.
fn substitute_cot(
    bp: &BiPoly,
    cot: &Laurent,
    t_keep: i64,
    wp: &Precision,
    what: &str,
) -> Result<Vec<BigReal>> {
    let maxj = bp.max_g_power() as usize;
    // gamma powers as Laurent series
    let mut gpow: Vec<Laurent> = Vec::with_capacity(maxj + 1);
    gpow.push(Laurent::one(wp));
    for j in 1..=maxj {
        let prev = gpow[j - 1].clone();
        gpow.push(prev.mul(cot, t_keep));
    }
    let mut acc = Laurent {
        lo: 0,
        c: vec![BigReal::zero(wp)],
    };
    for ((j, k), v) in &bp.terms {
        let contrib = gpow[*j as usize].shift(-(*k as i64));
        acc.add_scaled(&contrib, v);
    }
    // removability: negative powers must cancel
    let scale = bp.max_coeff().max(&BigReal::one(wp));
    let tol = &wp.tol(10) * &scale;
    for d in acc.lo..0 {
        if let Some(c) = acc.coeff(d) {
            if c.abs() > tol {
                return Err(Error::Internal(format!(
                    "{what}: removability fails, eta^{d} coefficient {c}"
                )));
            }
        }
    }
    let mut out = Vec::with_capacity(t_keep as usize + 1);
    for d in 0..=t_keep {
        out.push(acc.coeff(d).cloned().unwrap_or_else(|| BigReal::zero(wp)));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// formal power series with bivariate-polynomial coefficients
// ---------------------------------------------------------------------------

fn series_mul(a: &[BiPoly], b: &[BiPoly], len: usize) -> Vec<BiPoly> {
    let mut out = vec![BiPoly::zero(); len];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            if bj.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

/// exp of a series with vanishing constant term:
/// f_0 = 1, f_n = (1/n) sum_{k=1..n} k s_k f_{n-k}.
fn series_exp(s: &[BiPoly], len: usize, wp: &Precision) -> Vec<BiPoly> {
    let mut f = vec![BiPoly::zero(); len];
    f[0] = BiPoly::constant(BigReal::one(wp));
    for n in 1..len {
        let mut acc = BiPoly::zero();
        for k in 1..=n {
            if s[k].is_zero() {
                continue;
            }
            acc = acc.add(&s[k].scale(&BigReal::from_i64(k as i64, wp)).mul(&f[n - k]));
        }
        f[n] = acc.scale(&BigReal::from_i64(n as i64, wp).recip());
    }
    f
}

/// (cos S, sin S) for a series with vanishing constant term, by the coupled
/// derivative recurrences.
fn series_cos_sin(s: &[BiPoly], len: usize, wp: &Precision) -> (Vec<BiPoly>, Vec<BiPoly>) {
    let mut cs = vec![BiPoly::zero(); len];
    let mut sn = vec![BiPoly::zero(); len];
    cs[0] = BiPoly::constant(BigReal::one(wp));
    for n in 1..len {
        let mut acc_s = BiPoly::zero();
        let mut acc_c = BiPoly::zero();
        for k in 1..=n {
            if s[k].is_zero() {
                continue;
            }
            let ks = s[k].scale(&BigReal::from_i64(k as i64, wp));
            acc_s = acc_s.add(&ks.mul(&cs[n - k]));
            acc_c = acc_c.add(&ks.mul(&sn[n - k]));
        }
        let inv_n = BigReal::from_i64(n as i64, wp).recip();
        sn[n] = acc_s.scale(&inv_n);
        cs[n] = acc_c.scale(&(-&inv_n));
    }
    (cs, sn)
}
