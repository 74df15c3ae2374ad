//! Dense univariate polynomials over complex scalars, bivariate polynomials
//! in (gamma, 1/eta) over real scalars, and truncated Laurent series support
//! for the removable-singularity evaluators.

use crate::arith::{BigComplex, BigReal, Precision};
use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// univariate complex polynomial
// ---------------------------------------------------------------------------

/// Dense polynomial; `c[k]` multiplies x^k.
#[derive(Clone, Debug)]
pub struct Poly {
    pub c: Vec<BigComplex>,
}

impl Poly {
    pub fn zero(p: &Precision) -> Self {
        Poly {
            c: vec![BigComplex::zero(p)],
        }
    }

    pub fn from_coeffs(c: Vec<BigComplex>) -> Self {
        assert!(!c.is_empty());
        Poly { c }
    }

    pub fn degree(&self) -> usize {
        let mut d = self.c.len() - 1;
        while d > 0 && self.c[d].is_zero() {
            d -= 1;
        }
        d
    }

    pub fn eval(&self, x: &BigComplex) -> BigComplex {
        let mut acc = self.c[self.c.len() - 1].clone();
        for k in (0..self.c.len() - 1).rev() {
            acc = &(&acc * x) + &self.c[k];
        }
        acc
    }

    pub fn eval_real(&self, x: &BigReal) -> BigComplex {
        self.eval(&BigComplex::from_real(x.clone()))
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        let p = Precision::new(16).unwrap();
        let zero = BigComplex::zero(&p);
        let mut c = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.c.get(k).unwrap_or(&zero);
            let b = rhs.c.get(k).unwrap_or(&zero);
            c.push(a + b);
        }
        Poly { c }
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, k: &BigComplex) -> Poly {
        Poly {
            c: self.c.iter().map(|x| x * k).collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        let p = Precision::new(16).unwrap();
        let n = self.c.len() + rhs.c.len() - 1;
        let mut c = vec![BigComplex::zero(&p); n];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Poly { c }
    }

    pub fn derivative(&self) -> Poly {
        if self.c.len() == 1 {
            let p = Precision::new(16).unwrap();
            return Poly::zero(&p);
        }
        let mut c = Vec::with_capacity(self.c.len() - 1);
        for k in 1..self.c.len() {
            c.push(self.c[k].mul_i64(k as i64));
        }
        Poly { c }
    }

    /// Termwise antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Poly {
        let p = Precision::new(16).unwrap();
        let mut c = Vec::with_capacity(self.c.len() + 1);
        c.push(BigComplex::zero(&p));
        for (k, a) in self.c.iter().enumerate() {
            c.push(a.div_i64(k as i64 + 1));
        }
        Poly { c }
    }

    /// Largest coefficient magnitude (for relative zero tests).
    pub fn max_coeff(&self) -> BigReal {
        let p = Precision::new(16).unwrap();
        let mut m = BigReal::zero(&p);
        for a in &self.c {
            m = m.max(&a.abs_value());
        }
        m
    }

    /// Long division; returns (quotient, remainder).
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let p = Precision::new(16).unwrap();
        let dd = d.degree();
        let lead = &d.c[dd];
        let mut rem = self.c.clone();
        let n = self.degree();
        if n < dd {
            return (Poly::zero(&p), Poly { c: rem });
        }
        let mut q = vec![BigComplex::zero(&p); n - dd + 1];
        for k in (dd..=n).rev() {
            let coef = &rem[k] / lead;
            q[k - dd] = coef.clone();
            if coef.is_zero() {
                continue;
            }
            for j in 0..=dd {
                rem[k - dd + j] = &rem[k - dd + j] - &(&coef * &d.c[j]);
            }
        }
        rem.truncate(dd.max(1));
        (Poly { c: q }, Poly { c: rem })
    }

    /// Exact division: remainder must vanish relative to the coefficient scale.
    pub fn div_exact(&self, d: &Poly, rel_tol: &BigReal, what: &str) -> Result<Poly> {
        let (q, r) = self.div_rem(d);
        let scale = self.max_coeff().max(&BigReal::one(&Precision::new(16).unwrap()));
        let thresh = &scale * rel_tol;
        if r.max_coeff() > thresh {
            return Err(Error::Internal(format!(
                "{what}: nonzero remainder {} (scale {})",
                r.max_coeff(),
                scale
            )));
        }
        Ok(q)
    }

    /// Parity defect: max |c_k| over coefficients violating (-1)^k = sign.
    pub fn parity_defect(&self, even: bool) -> BigReal {
        let p = Precision::new(16).unwrap();
        let mut m = BigReal::zero(&p);
        for (k, a) in self.c.iter().enumerate() {
            let is_even_term = k % 2 == 0;
            if is_even_term != even {
                m = m.max(&a.abs_value());
            }
        }
        m
    }
}

// ---------------------------------------------------------------------------
// bivariate real polynomial in (gamma, w = 1/eta)
// ---------------------------------------------------------------------------

/// Sparse bivariate polynomial: term (j, k) multiplies gamma^j w^k.
#[derive(Clone, Debug, Default)]
pub struct BiPoly {
    pub terms: std::collections::BTreeMap<(u32, u32), BigReal>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(v: BigReal) -> Self {
        let mut t = std::collections::BTreeMap::new();
        if !v.is_zero() {
            t.insert((0, 0), v);
        }
        BiPoly { terms: t }
    }

    pub fn monomial(j: u32, k: u32, v: BigReal) -> Self {
        let mut t = std::collections::BTreeMap::new();
        if !v.is_zero() {
            t.insert((j, k), v);
        }
        BiPoly { terms: t }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, j: u32, k: u32, v: &BigReal) {
        if v.is_zero() {
            return;
        }
        let e = self.terms.entry((j, k));
        match e {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let nv = &*o.get() + v;
                if nv.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = nv;
                }
            }
            std::collections::btree_map::Entry::Vacant(vac) => {
                vac.insert(v.clone());
            }
        }
    }

    pub fn add(&self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((j, k), v) in &rhs.terms {
            out.add_term(*j, *k, v);
        }
        out
    }

    pub fn scale(&self, s: &BigReal) -> BiPoly {
        if s.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(key, v)| (*key, v * s))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((j1, k1), v1) in &self.terms {
            for ((j2, k2), v2) in &rhs.terms {
                out.add_term(j1 + j2, k1 + k2, &(v1 * v2));
            }
        }
        out
    }

    /// Direct evaluation at (gamma, w); stable away from x = 1.
    pub fn eval(&self, gamma: &BigReal, w: &BigReal) -> BigReal {
        let p = Precision::new(16).unwrap();
        let mut acc = BigReal::zero(&p);
        // powers cached up to the needed degree
        let maxj = self.terms.keys().map(|(j, _)| *j).max().unwrap_or(0) as usize;
        let maxk = self.terms.keys().map(|(_, k)| *k).max().unwrap_or(0) as usize;
        let gp = power_ladder(gamma, maxj);
        let wp = power_ladder(w, maxk);
        for ((j, k), v) in &self.terms {
            acc = &acc + &(&(&gp[*j as usize] * &wp[*k as usize]) * v);
        }
        acc
    }

    pub fn max_coeff(&self) -> BigReal {
        let p = Precision::new(16).unwrap();
        let mut m = BigReal::zero(&p);
        for v in self.terms.values() {
            m = m.max(&v.abs());
        }
        m
    }

    pub fn max_w_power(&self) -> u32 {
        self.terms.keys().map(|(_, k)| *k).max().unwrap_or(0)
    }

    pub fn max_g_power(&self) -> u32 {
        self.terms.keys().map(|(j, _)| *j).max().unwrap_or(0)
    }
}

fn power_ladder(x: &BigReal, up_to: usize) -> Vec<BigReal> {
    let p = Precision::new(16).unwrap();
    let mut v = Vec::with_capacity(up_to + 1);
    v.push(BigReal::one(&p).with_bits(x.bits()));
    for k in 1..=up_to {
        let prev = &v[k - 1];
        v.push(prev * x);
    }
    v
}

// ---------------------------------------------------------------------------
// truncated Laurent series in eta (real coefficients)
// ---------------------------------------------------------------------------

/// Coefficients for eta^(lo), eta^(lo+1), ..., truncated above `hi_keep`.
#[derive(Clone, Debug)]
pub struct Laurent {
    pub lo: i64,
    pub c: Vec<BigReal>,
}

impl Laurent {
    pub fn one(p: &Precision) -> Self {
        Laurent {
            lo: 0,
            c: vec![BigReal::one(p)],
        }
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.c.len() as i64 - 1
    }

    pub fn coeff(&self, deg: i64) -> Option<&BigReal> {
        if deg < self.lo {
            return None;
        }
        self.c.get((deg - self.lo) as usize)
    }

    pub fn mul(&self, rhs: &Laurent, hi_keep: i64) -> Laurent {
        let p = Precision::new(16).unwrap();
        let lo = self.lo + rhs.lo;
        let hi = (self.hi() + rhs.hi()).min(hi_keep);
        if hi < lo {
            return Laurent {
                lo: 0,
                c: vec![BigReal::zero(&p)],
            };
        }
        let mut c = vec![BigReal::zero(&p); (hi - lo + 1) as usize];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let da = self.lo + i as i64;
            for (j, b) in rhs.c.iter().enumerate() {
                let d = da + rhs.lo + j as i64;
                if d > hi {
                    break;
                }
                let idx = (d - lo) as usize;
                c[idx] = &c[idx] + &(a * b);
            }
        }
        Laurent { lo, c }
    }

    pub fn shift(&self, by: i64) -> Laurent {
        Laurent {
            lo: self.lo + by,
            c: self.c.clone(),
        }
    }

    pub fn add_scaled(&mut self, rhs: &Laurent, s: &BigReal) {
        let p = Precision::new(16).unwrap();
        let new_lo = self.lo.min(rhs.lo);
        let new_hi = self.hi().max(rhs.hi());
        let mut c = vec![BigReal::zero(&p); (new_hi - new_lo + 1) as usize];
        for (i, a) in self.c.iter().enumerate() {
            c[(self.lo + i as i64 - new_lo) as usize] = a.clone();
        }
        for (j, b) in rhs.c.iter().enumerate() {
            let idx = (rhs.lo + j as i64 - new_lo) as usize;
            c[idx] = &c[idx] + &(b * s);
        }
        self.lo = new_lo;
        self.c = c;
    }
}

// ---------------------------------------------------------------------------
// Bernoulli numbers (exact rationals) and the cot Laurent series
// ---------------------------------------------------------------------------

use num_bigint::BigInt;
use num_rational::BigRational;

/// B_0, B_1, ..., B_n by the defining recurrence, in exact arithmetic.
pub fn bernoulli(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::from(BigInt::from(1)));
    for m in 1..=n {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        let mut acc = BigRational::from(BigInt::from(0));
        let mut binom = BigInt::from(1); // C(m+1, 0)
        for (j, bj) in b.iter().enumerate().take(m) {
            if j > 0 {
                binom = &binom * BigInt::from((m + 2 - j) as i64) / BigInt::from(j as i64);
            }
            acc += BigRational::from(binom.clone()) * bj;
        }
        let cm = BigRational::from(BigInt::from((m + 1) as i64));
        b.push(-acc / cm);
    }
    b
}

/// Laurent series of cot(eta) = sum_{n>=0} c_n eta^(2n-1), truncated so the
/// highest retained eta power is `hi_keep`.
pub fn cot_laurent(hi_keep: i64, p: &Precision) -> Laurent {
    let n_max = ((hi_keep + 1) / 2).max(1) as usize;
    let bern = bernoulli(2 * n_max + 2);
    let mut c = vec![BigReal::zero(p); (hi_keep + 2) as usize];
    // c_n = (-1)^n 4^n B_{2n} / (2n)!
    let mut fact = BigRational::from(BigInt::from(1));
    let mut pow4 = BigRational::from(BigInt::from(1));
    for n in 0..=n_max {
        if n > 0 {
            fact *= BigRational::from(BigInt::from((2 * n - 1) as i64));
            fact *= BigRational::from(BigInt::from((2 * n) as i64));
            pow4 *= BigRational::from(BigInt::from(4));
        }
        let deg = 2 * n as i64 - 1;
        if deg > hi_keep {
            break;
        }
        let mut q = &pow4 * &bern[2 * n] / &fact;
        if n % 2 == 1 {
            q = -q;
        }
        c[(deg + 1) as usize] = rational_to_real(&q, p);
    }
    Laurent { lo: -1, c }
}

pub fn rational_to_real(q: &BigRational, p: &Precision) -> BigReal {
    let num = BigReal::parse(&q.numer().to_string(), p).expect("bigint numer");
    let den = BigReal::parse(&q.denom().to_string(), p).expect("bigint denom");
    &num / &den
}
