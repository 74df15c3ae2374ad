use super::*;
use crate::maps::CutSide;
use crate::oracle;

fn p40() -> Precision {
    Precision::new(40).unwrap()
}

fn br(s: &str, p: &Precision) -> BigReal {
    BigReal::parse(s, p).unwrap()
}

fn cr(s: &str, p: &Precision) -> BigComplex {
    BigComplex::from_real(br(s, p))
}

#[test]
fn large_nu_matches_oracle_at_section6_parameters() {
    let p = p40();
    let cfg = Config::new(p, 11);
    let nu = br("20.3", &p);
    let mu = cr("4.2", &p);
    let z = BigComplex::from_f64(1.5, 0.0, &p);
    let az = AnnotatedZ::new(z.clone());
    let pv = legendre_large_nu(LegendreKind::PMinus, &nu, &mu, &az, &cfg, None).unwrap();
    let qv = legendre_large_nu(LegendreKind::Q, &nu, &mu, &az, &cfg, None).unwrap();
    assert_eq!(pv.method, Method::Direct);
    let nu_c = cr("20.3", &p);
    let p_oracle = oracle::p_ref(&nu_c, &mu, &z, CutSide::None).unwrap().value;
    let q_oracle = oracle::q_ref(&nu_c, &mu, &z, CutSide::None).unwrap().value;
    let rel_p = pv.value.rel_err(&p_oracle).to_f64();
    let rel_q = qv.value.rel_err(&q_oracle).to_f64();
    assert!(rel_p < 5e-16, "P rel err {rel_p:e}");
    assert!(rel_q < 5e-16, "Q rel err {rel_q:e}");
}

#[test]
fn cauchy_path_values_near_pole() {
    let p = p40();
    let cfg = Config::new(p, 11);
    let nu = br("20.3", &p);
    let mu = cr("4.2", &p);
    // z inside the pole disk: method must be Cauchy and still match the oracle
    let z = BigComplex::from_f64(1.1, 0.05, &p);
    let az = AnnotatedZ::new(z.clone());
    let pv = legendre_large_nu(LegendreKind::PMinus, &nu, &mu, &az, &cfg, None).unwrap();
    assert_eq!(pv.method, Method::Cauchy);
    let p_oracle = oracle::p_ref(&cr("20.3", &p), &mu, &z, CutSide::None).unwrap().value;
    let rel = pv.value.rel_err(&p_oracle).to_f64();
    assert!(rel < 1e-14, "Cauchy-path P rel err {rel:e}");
    // A tends to M_nu^mu as z -> 1
    let z = BigComplex::from_f64(1.0 + 1e-6, 0.0, &p);
    let pv = legendre_large_nu(
        LegendreKind::PMinus,
        &nu,
        &mu,
        &AnnotatedZ::new(z),
        &cfg,
        None,
    )
    .unwrap();
    let m = m_const(&cr("20.3", &p), &mu, &p).unwrap();
    let rel = pv.a_coeff.rel_err(&m).to_f64();
    assert!(rel < 1e-4, "A(z->1) vs M: {rel:e}");
}

#[test]
fn direct_and_contour_agree_in_overlap_annulus() {
    let p = p40();
    let cfg = Config::new(p, 11);
    let mu = cr("4.2", &p);
    let u = cr("20.8", &p);
    let table = coeffs::cached_table(&mu, 2 * cfg.n + 1, &p).unwrap();
    for (re, im) in [(1.7, 0.0), (1.3, 0.55), (0.8, 0.62)] {
        let z = BigComplex::from_f64(re, im, &p);
        let az = AnnotatedZ::new(z.clone());
        let vars = maps::liouville_vars(&az).unwrap();
        let (a_d, b_d, _) = ab_composite(&table, &u, &vars.beta, &vars.xi, cfg.n, &p).unwrap();
        let contour = Contour::about_one(BigReal::one(&p), &p);
        let cache = NodeCache::new();
        let mut vars_at = |t: &BigComplex| -> Result<(BigComplex, BigComplex)> {
            let at = AnnotatedZ::with_side(t.clone(), CutSide::Above);
            let v = maps::liouville_vars(&at)?;
            Ok((v.beta, v.xi))
        };
        let (a_c, b_c) =
            ab_cauchy(&table, &u, &z, &contour, &cache, &mut vars_at, cfg.n, &p).unwrap();
        assert!(
            a_d.rel_err(&a_c).to_f64() < 1e-14,
            "A overlap at ({re},{im}): {:e}",
            a_d.rel_err(&a_c).to_f64()
        );
        assert!(
            b_d.rel_err(&b_c).to_f64() < 1e-14,
            "B overlap at ({re},{im}): {:e}",
            b_d.rel_err(&b_c).to_f64()
        );
    }
}

#[test]
fn q_branches_match_oracle_built_branches() {
    let p = p40();
    let cfg = Config::new(p, 11);
    let nu = br("20.3", &p);
    let mu = cr("4.2", &p);
    let z = BigComplex::from_f64(1.5, 0.2, &p);
    let az = AnnotatedZ::new(z.clone());
    let nu_c = cr("20.3", &p);
    for plus in [true, false] {
        let kind = if plus {
            LegendreKind::QBranchPlus
        } else {
            LegendreKind::QBranchMinus
        };
        let got = legendre_large_nu(kind, &nu, &mu, &az, &cfg, None).unwrap();
        let want = oracle::q_branch_ref(&nu_c, &mu, &z, CutSide::None, plus).unwrap();
        let rel = got.value.rel_err(&want).to_f64();
        assert!(rel < 1e-13, "Q branch ({plus}) rel err {rel:e}");
    }
}

#[test]
fn half_integer_order_collapse() {
    // mu = 1/2: B vanishes identically and P^(-1/2) still matches the oracle
    let p = p40();
    let cfg = Config::new(p, 11);
    let nu = br("20.3", &p);
    let mu = BigComplex::from_real(BigReal::from_ratio(1, 2, &p));
    let z = BigComplex::from_f64(1.8, 0.3, &p);
    let az = AnnotatedZ::new(z.clone());
    let pv = legendre_large_nu(LegendreKind::PMinus, &nu, &mu, &az, &cfg, None).unwrap();
    assert!(pv.b_coeff.abs_value() < p.tol(8), "B must vanish at mu = 1/2");
    let p_oracle = oracle::p_ref(&cr("20.3", &p), &mu, &z, CutSide::None).unwrap().value;
    let rel = pv.value.rel_err(&p_oracle).to_f64();
    assert!(rel < 1e-15, "P^(-1/2) rel err {rel:e}");
}

#[test]
fn conical_values_and_realness() {
    let p = p40();
    let cfg = Config::new(p, 8);
    let tau = br("30", &p);
    let mu = br("1.3", &p);
    let nu_c = BigComplex::new(BigReal::from_ratio(-1, 2, &p), tau.clone());
    let mu_c = cr("1.3", &p);
    // P^(-mu) real on (1, inf) up to a relatively exponentially small part
    let z = BigComplex::from_f64(2.0, 0.0, &p);
    let az = AnnotatedZ::new(z.clone());
    let pv = conical_large_tau(LegendreKind::PMinus, &tau, &mu, &az, &cfg, None).unwrap();
    let rel_im = (pv.value.im().abs() / pv.value.abs_value()).to_f64();
    assert!(rel_im < 1e-12, "P conical imaginary part {rel_im:e}");
    // against the oracle
    let p_oracle = oracle::p_ref(&nu_c, &mu_c, &z, CutSide::None).unwrap().value;
    let rel = pv.value.rel_err(&p_oracle).to_f64();
    assert!(rel < 1e-11, "conical P rel err {rel:e}");
    let qv = conical_large_tau(LegendreKind::Q, &tau, &mu, &az, &cfg, None).unwrap();
    let q_oracle = oracle::q_ref(&nu_c, &mu_c, &z, CutSide::None).unwrap().value;
    let rel = qv.value.rel_err(&q_oracle).to_f64();
    assert!(rel < 1e-11, "conical Q rel err {rel:e}");
    // identity (2.22f): cos(mu pi) Q = (Q_+1 + Q_-1)/2 among expansion branches
    let qp = conical_large_tau(LegendreKind::QBranchPlus, &tau, &mu, &az, &cfg, None).unwrap();
    let qm = conical_large_tau(LegendreKind::QBranchMinus, &tau, &mu, &az, &cfg, None).unwrap();
    let half = BigComplex::from_real(BigReal::from_ratio(1, 2, &p));
    let cosm = sin_pi_c(&(&mu_c + &half), &p);
    let lhs = &cosm * &qv.value;
    let rhs = (&qp.value + &qm.value).div_i64(2);
    let resid = (&lhs - &rhs).abs_value() / lhs.abs_value();
    assert!(resid.to_f64() < 1e-12, "(2.22f) conic residual {:e}", resid.to_f64());
}

#[test]
fn conical_lg_cross_check() {
    // Q^mu_(-1/2 + i tau)(z) against the exponential LG form
    // sqrt(pi/2)/(Gamma(1 + i tau) (z^2-1)^(1/4)) exp{-i tau xi
    //   + sum_(s=1..N-1) i^s (E_(mu,s)(beta) - E_(mu,s)(1))/tau^s}
    let p = p40();
    let cfg = Config::new(p, 8);
    let tau = br("30", &p);
    let mu = br("1.3", &p);
    let z = BigComplex::from_f64(3.0, 0.0, &p);
    let az = AnnotatedZ::new(z.clone());
    let qv = conical_large_tau(LegendreKind::Q, &tau, &mu, &az, &cfg, None).unwrap();

    let vars = maps::liouville_vars(&az).unwrap();
    let table = coeffs::cached_table(&cr("1.3", &p), 2 * cfg.n + 1, &p).unwrap();
    let one = BigComplex::one(&p);
    let mut expo = (&vars.xi.scale(&tau).mul_i()).div_i64(-1); // -i tau xi
    let i_unit = BigComplex::i(&p);
    let mut ipow = i_unit.clone();
    let inv_tau = tau.recip();
    let mut tpow = inv_tau.clone();
    for s in 1..=7 {
        let e_beta = table.e[s - 1].eval(&vars.beta);
        let e_one = table.e[s - 1].eval(&one);
        expo = &expo + &(&ipow * &(&e_beta - &e_one)).scale(&tpow);
        ipow = ipow.mul_i();
        tpow = &tpow * &inv_tau;
    }
    let g = specfun::gamma(&(&one + &BigComplex::new(BigReal::zero(&p), tau.clone()))).unwrap();
    let quarter = maps::quarter_power_inv(&az).unwrap();
    let pref = &BigComplex::from_real((BigReal::pi(&p).scale_pow2(-1)).sqrt()) / &g;
    let lg = &(&pref * &quarter) * &expo.exp();
    let rel = qv.value.rel_err(&lg).to_f64();
    assert!(rel < 1e-9, "LG cross-check rel {rel:e}");
}

#[test]
fn large_mu_matches_oracle() {
    let p = p40();
    let cfg = Config::new(p, 10);
    let mu = br("20.3", &p);
    let degree = DegreeParam::Real(br("4.8", &p));
    let nu_c = cr("4.8", &p);
    let mu_c = cr("20.3", &p);
    // direct path at z = 1.5
    let z = BigComplex::from_f64(1.5, 0.0, &p);
    let az = AnnotatedZ::new(z.clone());
    let pv = legendre_large_mu(LegendreKind::PMinus, &degree, &mu, &az, &cfg, None).unwrap();
    // beta(1.5) = 1.342, inside the beta-plane pole disk: contour path
    assert_eq!(pv.method, Method::Cauchy);
    let p_oracle = oracle::p_ref(&nu_c, &mu_c, &z, CutSide::None).unwrap().value;
    let rel = pv.value.rel_err(&p_oracle).to_f64();
    assert!(rel < 1e-10, "large-mu P rel err {rel:e}");
    // bounded z with beta away from 1: direct path
    let z_direct = BigComplex::from_f64(1.2, 0.0, &p);
    let pv_d = legendre_large_mu(
        LegendreKind::PMinus,
        &degree,
        &mu,
        &AnnotatedZ::new(z_direct.clone()),
        &cfg,
        None,
    )
    .unwrap();
    assert_eq!(pv_d.method, Method::Direct);
    let p_oracle_d = oracle::p_ref(&nu_c, &mu_c, &z_direct, CutSide::None).unwrap().value;
    let rel = pv_d.value.rel_err(&p_oracle_d).to_f64();
    assert!(rel < 1e-10, "large-mu direct-path P rel err {rel:e}");
    let qv = legendre_large_mu(LegendreKind::Q, &degree, &mu, &az, &cfg, None).unwrap();
    let q_oracle = oracle::q_ref(&nu_c, &mu_c, &z, CutSide::None).unwrap().value;
    let rel = qv.value.rel_err(&q_oracle).to_f64();
    assert!(rel < 1e-10, "large-mu Q rel err {rel:e}");
    // complex z as well
    let z = BigComplex::from_f64(1.6, 0.9, &p);
    let az = AnnotatedZ::new(z.clone());
    let pv = legendre_large_mu(LegendreKind::PMinus, &degree, &mu, &az, &cfg, None).unwrap();
    let p_oracle = oracle::p_ref(&nu_c, &mu_c, &z, CutSide::None).unwrap().value;
    let rel = pv.value.rel_err(&p_oracle).to_f64();
    assert!(rel < 1e-10, "large-mu complex-z P rel err {rel:e}");
    // beta near 1 (large z): contour path; the oracle value comes through
    // the Whipple transform P^(-mu)(z) = sqrt(2/pi) (z^2-1)^(-1/4) Q^u_(mu-1/2)(beta)
    let z = BigComplex::from_f64(1000.0, 0.0, &p);
    let az = AnnotatedZ::new(z.clone());
    let pv = legendre_large_mu(LegendreKind::PMinus, &degree, &mu, &az, &cfg, None).unwrap();
    assert_eq!(pv.method, Method::Cauchy);
    let beta = maps::beta_of_z(&az).unwrap();
    let q_w = oracle::q_ref(
        &(&mu_c - &BigComplex::from_real(BigReal::from_ratio(1, 2, &p))),
        &cr("5.3", &p), // u = nu + 1/2
        &beta,
        CutSide::None,
    )
    .unwrap()
    .value;
    let quarter = maps::quarter_power_inv(&az).unwrap();
    let p_oracle = (&quarter * &q_w)
        .scale(&(&BigReal::from_i64(2, &p) / &BigReal::pi(&p)).sqrt());
    let rel = pv.value.rel_err(&p_oracle).to_f64();
    assert!(rel < 1e-9, "large-mu Cauchy-path rel err {rel:e}");
    // regime guard
    let big_nu = DegreeParam::Real(br("80", &p));
    assert!(matches!(
        legendre_large_mu(LegendreKind::PMinus, &big_nu, &mu, &az, &cfg, None),
        Err(Error::Regime(_))
    ));
}

#[test]
fn large_mu_conical_degree_variant() {
    // nu = -1/2 + i tau with small tau: real combination via K_(i tau), K'_(i tau)
    let p = p40();
    let cfg = Config::new(p, 10);
    let mu = br("20.3", &p);
    let tau = br("0.7", &p);
    let degree = DegreeParam::ConicalTau(tau.clone());
    let z = BigComplex::from_f64(1.5, 0.0, &p);
    let az = AnnotatedZ::new(z.clone());
    let pv = legendre_large_mu(LegendreKind::PMinus, &degree, &mu, &az, &cfg, None).unwrap();
    let rel_im = (pv.value.im().abs() / pv.value.abs_value()).to_f64();
    assert!(rel_im < 1e-10, "conical-degree value imaginary part {rel_im:e}");
    let nu_c = BigComplex::new(BigReal::from_ratio(-1, 2, &p), tau);
    let p_oracle = oracle::p_ref(&nu_c, &cr("20.3", &p), &z, CutSide::None).unwrap().value;
    // oracle value is real for conical degree with real order? it is not in
    // general; P^(-mu) of conical degree at real z IS real (conjugation maps
    // nu -> conj nu = -1/2 - i tau which indexes the same function)
    let rel = (&(&pv.value.re().clone() - p_oracle.re()) / p_oracle.re()).abs().to_f64();
    assert!(rel < 1e-9, "conical-degree large-mu rel err {rel:e}");
}

#[test]
fn large_mu_imag_order_values() {
    let p = p40();
    let cfg = Config::new(p, 10);
    let rho = br("25", &p);
    let degree = DegreeParam::Real(br("1.2", &p));
    let z = BigComplex::from_f64(2.0, 0.0, &p);
    let az = AnnotatedZ::new(z.clone());
    let vals = legendre_large_mu_imag(&degree, &rho, &az, &cfg, None).unwrap();
    // oracle comparison through the connection identity (2.22m) at mu = i rho:
    // (2 sin(mu pi)/pi) Q = P^(+mu)/Gamma(nu+mu+1) - P^(-mu)/Gamma(nu-mu+1)
    let nu_c = cr("1.2", &p);
    let mu_c = BigComplex::new(BigReal::zero(&p), rho.clone());
    let one = BigComplex::one(&p);
    let p_plus_oracle = oracle::p_ref(&nu_c, &(-&mu_c), &z, CutSide::None).unwrap().value;
    let ga = specfun::gamma(&(&(&nu_c + &mu_c) + &one)).unwrap();
    let gb = specfun::gamma(&(&(&nu_c - &mu_c) + &one)).unwrap();
    let s = sin_pi_c(&mu_c, &p);
    let lhs = (&s * &vals.q_irho).mul_i64(2).scale(&BigReal::pi(&p).recip());
    let rhs = &(&p_plus_oracle / &ga) - &(&vals.p_minus_irho / &gb);
    let resid = (&lhs - &rhs).abs_value() / lhs.abs_value();
    assert!(resid.to_f64() < 1e-9, "(2.22m) imag-mu residual {:e}", resid.to_f64());
    // direct value check for P^(-i rho)
    let p_minus_oracle = oracle::p_ref(&nu_c, &mu_c, &z, CutSide::None).unwrap().value;
    let rel = vals.p_minus_irho.rel_err(&p_minus_oracle).to_f64();
    assert!(rel < 1e-9, "P^(-i rho) rel err {rel:e}");
    // conical-in-nu substitution u = i tau
    let degree = DegreeParam::ConicalTau(br("0.7", &p));
    let vals = legendre_large_mu_imag(&degree, &rho, &az, &cfg, None).unwrap();
    let nu_c = BigComplex::new(BigReal::from_ratio(-1, 2, &p), br("0.7", &p));
    let p_minus_oracle = oracle::p_ref(&nu_c, &mu_c, &z, CutSide::None).unwrap().value;
    let rel = vals.p_minus_irho.rel_err(&p_minus_oracle).to_f64();
    assert!(rel < 1e-9, "conical-in-nu P^(-i rho) rel err {rel:e}");
}

#[test]
fn imag_order_large_nu_values() {
    let p = p40();
    let cfg = Config::new(p, 11);
    let rho = br("2.5", &p);
    let nu = br("20.3", &p);
    let z = br("2.2", &p);
    let vals = legendre_large_nu_imag_mu(&rho, &nu, &z, &cfg).unwrap();
    // realness is built into the return type; check against oracle:
    let nu_c = cr("20.3", &p);
    let mu_c = BigComplex::new(BigReal::zero(&p), rho.clone());
    let zc = BigComplex::from_real(z.clone());
    let q_oracle = oracle::q_ref(&nu_c, &mu_c, &zc, CutSide::None).unwrap().value;
    assert!(
        q_oracle.im().abs() < &p.tol(8) * &q_oracle.abs_value(),
        "oracle Q^(i rho) should be real"
    );
    let rel = ((&vals.q_irho - q_oracle.re()) / q_oracle.re()).abs().to_f64();
    assert!(rel < 1e-13, "Q^(i rho) rel err {rel:e}");
    let p_oracle = oracle::p_ref(&nu_c, &mu_c, &zc, CutSide::Above).unwrap().value;
    let rel = vals.p_minus.rel_err(&p_oracle).to_f64();
    assert!(rel < 1e-13, "P^(-i rho) rel err {rel:e}");
    // B symmetry in the order: B_(-mu) = B_mu means B real here
    // (checked internally); P-hat real combination:
    let p_plus_oracle = oracle::p_ref(&nu_c, &(-&mu_c), &zc, CutSide::None).unwrap().value;
    let hat_oracle = (&p_oracle + &p_plus_oracle).div_i64(2);
    assert!(
        hat_oracle.im().abs() < &p.tol(8) * &hat_oracle.abs_value(),
        "oracle P-hat should be real"
    );
    let rel = ((&vals.p_hat - hat_oracle.re()) / hat_oracle.re()).abs().to_f64();
    assert!(rel < 1e-13, "P-hat rel err {rel:e}");
}

#[test]
fn p_hat_oscillation_near_one() {
    // P-hat ~ sqrt(sinh(pi rho)/(pi rho)) cos((rho/2) ln((z-1)/2) - arg Gamma(1 + i rho))
    let p = p40();
    let cfg = Config::new(p, 11);
    let rho = br("2.5", &p);
    let nu = br("20.3", &p);
    let z = &BigReal::one(&p) + &br("1e-6", &p);
    let vals = legendre_large_nu_imag_mu(&rho, &nu, &z, &cfg).unwrap();
    let g = specfun::gamma(&BigComplex::new(BigReal::one(&p), rho.clone())).unwrap();
    let phi = g.arg();
    let pr = &BigReal::pi(&p) * &rho;
    let amp = (&pr.sinh() / &pr).sqrt();
    let lnz = (&z - &BigReal::one(&p)).scale_pow2(-1).ln();
    let expect = &amp * &(&(&rho.scale_pow2(-1) * &lnz) - &phi).cos();
    let rel = ((&vals.p_hat - &expect) / &expect).abs().to_f64();
    assert!(rel < 0.01, "P-hat oscillation defect {rel:e}");
}

#[test]
fn ferrers_large_nu_values_and_sign_gate() {
    let p = p40();
    let cfg = Config::new(p, 5);
    let nu = br("20.3", &p);
    let mu = br("4.2", &p);
    let nu_c = cr("20.3", &p);
    let mu_c = cr("4.2", &p);
    // mandatory sign-convention gate: one point per function against the oracle
    let x = BigReal::from_ratio(1, 2, &p);
    let pv = ferrers_large_nu(FerrersWhich::P, &nu, &mu, &x, &cfg, false).unwrap();
    let qv = ferrers_large_nu(FerrersWhich::Q, &nu, &mu, &x, &cfg, false).unwrap();
    let p_oracle = oracle::ferrers_ref(oracle::FerrersKind::P, &nu_c, &mu_c, &x).unwrap();
    let q_oracle = oracle::ferrers_ref(oracle::FerrersKind::Q, &nu_c, &mu_c, &x).unwrap();
    let rel_p = ((pv.value.re() - &p_oracle) / &p_oracle).abs().to_f64();
    let rel_q = ((qv.value.re() - &q_oracle) / &q_oracle).abs().to_f64();
    // the composite truncation at N=5 sets this scale (last retained term
    // ~ a_11/(11 (u eta)^11) ~ 2e-10); a sign-convention error would be O(1)
    assert!(rel_p < 3e-9, "Ferrers P sign/value gate: {rel_p:e}");
    assert!(rel_q < 3e-9, "Ferrers Q sign/value gate: {rel_q:e}");
    assert_eq!(pv.method, Method::Direct);
    // re-expanded route near x = 1
    let x = br("0.9", &p);
    let pv = ferrers_large_nu(FerrersWhich::P, &nu, &mu, &x, &cfg, false).unwrap();
    assert_eq!(pv.method, Method::Reexpanded);
    let p_oracle = oracle::ferrers_ref(oracle::FerrersKind::P, &nu_c, &mu_c, &x).unwrap();
    let rel = ((pv.value.re() - &p_oracle) / &p_oracle).abs().to_f64();
    assert!(rel < 1e-8, "re-expanded Ferrers P rel err {rel:e}");
    // negative x through the connection formulas
    let x = br("-0.3", &p);
    let pv = ferrers_large_nu(FerrersWhich::P, &nu, &mu, &x, &cfg, false).unwrap();
    let p_oracle = oracle::ferrers_ref(oracle::FerrersKind::P, &nu_c, &mu_c, &x).unwrap();
    let rel = ((pv.value.re() - &p_oracle) / &p_oracle).abs().to_f64();
    assert!(rel < 3e-9, "negative-x Ferrers P rel err {rel:e}");
}

#[test]
fn ferrers_conical_values() {
    let p = p40();
    let cfg = Config::new(p, 8);
    let tau = br("30", &p);
    let mu = br("2", &p);
    let x = BigReal::from_ratio(1, 2, &p);
    let v = ferrers_conical(&tau, &mu, &x, &cfg).unwrap();
    let nu_c = BigComplex::new(BigReal::from_ratio(-1, 2, &p), tau.clone());
    let want = oracle::ferrers_ref(oracle::FerrersKind::P, &nu_c, &cr("2", &p), &x).unwrap();
    let rel = ((v.value.re() - &want) / &want).abs().to_f64();
    assert!(rel < 1e-9, "conical Ferrers rel err {rel:e}");
}

#[test]
fn ferrers_lg_values_and_zero_argument_exactness() {
    let p = p40();
    let cfg = Config::new(p, 10);
    let mu = br("20.3", &p);
    let degree = DegreeParam::Real(br("4.8", &p));
    // exact value at x = 0: sqrt(pi)/(2^mu Gamma(nu/2+mu/2+1) Gamma(mu/2+1/2-nu/2))
    let v0 = ferrers_large_mu_lg(true, &degree, &mu, &BigReal::zero(&p), &cfg).unwrap();
    let one = BigReal::one(&p);
    let g1 = specfun::gamma(&cr("13.55", &p)).unwrap(); // (4.8+20.3)/2 + 1
    let g2 = specfun::gamma(&cr("8.25", &p)).unwrap(); // (20.3-4.8)/2 + 1/2
    let exact = &BigReal::pi(&p).sqrt()
        / &(&(&BigReal::from_i64(2, &p).pow(&mu) * g1.re()) * g2.re());
    let rel = ((v0.value.re() - &exact) / &exact).abs().to_f64();
    assert!(rel < 1e-30, "x = 0 exactness: {rel:e}");
    let _ = one;
    // against the oracle at x = 0.45, both branches
    let x = br("0.45", &p);
    let nu_c = cr("4.8", &p);
    let mu_c = cr("20.3", &p);
    let vp = ferrers_large_mu_lg(true, &degree, &mu, &x, &cfg).unwrap();
    let want = oracle::ferrers_ref(oracle::FerrersKind::P, &nu_c, &mu_c, &x).unwrap();
    let rel = ((vp.value.re() - &want) / &want).abs().to_f64();
    assert!(rel < 1e-10, "LG P(+x) rel err {rel:e}");
    let vm = ferrers_large_mu_lg(false, &degree, &mu, &x, &cfg).unwrap();
    let want = oracle::ferrers_ref(oracle::FerrersKind::P, &nu_c, &mu_c, &(-&x)).unwrap();
    let rel = ((vm.value.re() - &want) / &want).abs().to_f64();
    assert!(rel < 1e-10, "LG P(-x) rel err {rel:e}");
    // conical case real output
    let degree = DegreeParam::ConicalTau(br("6.3", &p));
    let vc = ferrers_large_mu_lg(true, &degree, &mu, &x, &cfg).unwrap();
    assert!(vc.value.is_real());
}

#[test]
fn coefficient_extraction_consistency() {
    // A from the Wronskian extraction
    // sin(mu pi) A = pi u (z^2-1)^(1/4) xi^(1/2)/(2L)
    //   { P^mu I_(mu+1)(u xi)/Gamma(nu+mu+1) - P^(-mu) I_(-mu-1)(u xi)/Gamma(nu-mu+1) }
    // matches the exp/cosh composite to O(u^(-2N-2)) at z = 2
    let mut errs = Vec::new();
    for uf in [10.0, 20.0, 40.0] {
        // the Wronskian braces cancel ~ e^(2 u xi) of headroom: escalate the
        // working precision so the oracle-side extraction stays exact
        let extra = (2.0 * uf * 1.317 * 0.4343) as u32 + 16;
        let p = Precision::new(40 + extra).unwrap();
        let z = BigComplex::from_f64(2.0, 0.0, &p);
        let az = AnnotatedZ::new(z.clone());
        let mu = cr("1.3", &p);
        let one = BigComplex::one(&p);
        let half = BigReal::from_ratio(1, 2, &p);
        let u = BigReal::from_f64(uf, &p);
        let nu = &u - &half;
        let nu_c = BigComplex::from_real(nu.clone());
        let cfg = Config::new(p, 11);
        let table = coeffs::cached_table(&mu, 2 * cfg.n + 1, &p).unwrap();
        let vars = maps::liouville_vars(&az).unwrap();
        let (a_comp, _, _) = ab_composite(
            &table,
            &BigComplex::from_real(u.clone()),
            &vars.beta,
            &vars.xi,
            cfg.n,
            &p,
        )
        .unwrap();
        // oracle-side extraction
        let p_plus = oracle::p_ref(&nu_c, &(-&mu), &z, CutSide::None).unwrap().value;
        let p_minus = oracle::p_ref(&nu_c, &mu, &z, CutSide::None).unwrap().value;
        let ga = specfun::gamma(&(&(&nu_c + &mu) + &one)).unwrap();
        let gb = specfun::gamma(&(&(&nu_c - &mu) + &one)).unwrap();
        let w = vars.xi.scale(&u);
        let i1 = specfun::modified_i_co(&(&mu + &one), &w).unwrap();
        let i0 = specfun::modified_i_co(&mu, &w).unwrap();
        let k0 = specfun::modified_k_co(&mu, &w).unwrap();
        let k1 = specfun::modified_k_co(&(&mu + &one), &w).unwrap();
        let s = sin_pi_c(&mu, &p);
        let im1 = &i1 - &(&s * &k1).scale(&(&BigReal::from_i64(2, &p) / &BigReal::pi(&p)));
        let _ = (&i0, &k0);
        let l = l_const(&nu_c, &mu, &p).unwrap();
        let quarter = maps::quarter_power_inv(&az).unwrap().recip(); // (z^2-1)^(1/4)
        let front = &(&quarter * &vars.xi.sqrt()).scale(&(&(&BigReal::pi(&p) * &u) / &BigReal::from_i64(2, &p)))
            / &l;
        let braces = &(&(&p_plus * &i1) / &ga) - &(&(&p_minus * &im1) / &gb);
        let a_extract = &(&front * &braces) / &s;
        errs.push(a_comp.rel_err(&a_extract).to_f64());
    }

    // decay like u^(-2N-2): going 10 -> 20 -> 40 divides the error by ~2^24;
    // the absolute scale at u=10 is set by the first omitted coefficient
    assert!(errs[0] < 1e-12, "extraction err at u=10: {:e}", errs[0]);
    assert!(errs[1] < errs[0] / 1e5, "u=20 err {:e} vs u=10 {:e}", errs[1], errs[0]);
    assert!(errs[2] < errs[1] / 1e4 || errs[2] < 1e-34, "u=40 err {:e}", errs[2]);
}

#[test]
fn recessive_behaviour_from_expansions() {
    let p = p40();
    let cfg = Config::new(p, 11);
    let nu = br("20.3", &p);
    let mu = cr("4.2", &p);
    // P^(-mu)(z)/((z-1)/2)^(mu/2) -> 1/Gamma(mu+1) at z - 1 = 1e-4
    let h = br("1e-4", &p);
    let z = BigComplex::from_real(&BigReal::one(&p) + &h);
    let az = AnnotatedZ::new(z.clone());
    let pv = legendre_large_nu(LegendreKind::PMinus, &nu, &mu, &az, &cfg, None).unwrap();
    let g = specfun::gamma(&(&mu + &BigComplex::one(&p))).unwrap();
    let pw = BigComplex::from_real(h.scale_pow2(-1)).powf(&br("2.1", &p));
    let ratio = &(&pv.value * &g) / &pw;
    let defect = (ratio.re() - &BigReal::one(&p)).abs().to_f64();
    assert!(defect < 0.01, "recessive P defect {defect}");
    // z^(nu+1) Q -> sqrt(pi)/(Gamma(nu+3/2) 2^(nu+1)) at z = 1e4
    let z = BigComplex::from_f64(1e4, 0.0, &p);
    let az = AnnotatedZ::new(z.clone());
    let qv = legendre_large_nu(LegendreKind::Q, &nu, &mu, &az, &cfg, None).unwrap();
    let g = specfun::gamma(&cr("21.8", &p)).unwrap();
    let pw = z.powf(&(&nu + &BigReal::one(&p)));
    let expect = &BigComplex::from_real(BigReal::pi(&p).sqrt())
        / &(&g * &BigComplex::from_real(BigReal::from_i64(2, &p).pow(&(&nu + &BigReal::one(&p)))));
    let got = &qv.value * &pw;
    let rel = got.rel_err(&expect).to_f64();
    assert!(rel < 0.01, "recessive Q defect {rel}");
}
