use super::*;

fn p40() -> Precision {
    Precision::new(40).unwrap()
}

fn br(s: &str, p: &Precision) -> BigReal {
    BigReal::parse(s, p).unwrap()
}

#[test]
fn i_at_zero_and_small_values() {
    let p = p40();
    let z0 = BigComplex::zero(&p);
    let i0 = bessel_modified(&BigReal::zero(&p), &z0, ModKind::I).unwrap();
    assert!(i0.rel_err(&BigComplex::one(&p)) < p.tol(6));
    let i1 = bessel_modified(&BigReal::one(&p), &z0, ModKind::I).unwrap();
    assert!(i1.is_zero());
    assert!(bessel_modified(&BigReal::zero(&p), &z0, ModKind::K).is_err());
    assert!(bessel_modified(&-&BigReal::one(&p), &z0, ModKind::I).is_err());
    // I_0(2) reference value (DLMF): 2.2795853023360672674372044...
    let v = bessel_modified(
        &BigReal::zero(&p),
        &BigComplex::from_i64(2, &p),
        ModKind::I,
    )
    .unwrap();
    let expect = br("2.279585302336067267437204440811533353286", &p);
    assert!((v.re() - &expect).abs() < p.tol(3), "I_0(2) = {v}");
}

#[test]
fn k_half_closed_form() {
    let p = p40();
    // K_(1/2)(z) = sqrt(pi/(2z)) e^(-z), any z
    let half = BigReal::from_ratio(1, 2, &p);
    for (re, im) in [(1.0, 0.0), (3.5, 2.0), (0.4, -0.9), (40.0, 13.0), (80.0, 0.0)] {
        let z = BigComplex::from_f64(re, im, &p);
        let k = bessel_modified(&half, &z, ModKind::K).unwrap();
        let expect = (&BigComplex::from_real(BigReal::pi(&p)) / &z.mul_i64(2)).sqrt() * (-&z).exp();
        assert!(
            k.rel_err(&expect) < p.tol(6),
            "K_1/2({re}+{im}i) rel err {}",
            k.rel_err(&expect)
        );
    }
}

#[test]
fn modified_wronskian_random_sweep() {
    // I_mu(z) K_(mu+1)(z) + I_(mu+1)(z) K_mu(z) = 1/z
    // 1e3 random (mu in [0,10], Re z > 0, 0.1 <= |z| <= 100), tol 10^(8-P)
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(0xbe55e1);
    let p = Precision::new(32).unwrap();
    let tol = p.tol(8);
    let one = BigComplex::one(&p);
    for trial in 0..1000 {
        let mu = BigReal::from_f64(rng.gen_range(0.0..10.0), &p);
        let r = 10f64.powf(rng.gen_range(-1.0..2.0));
        let th: f64 = rng.gen_range(-1.55..1.55);
        let z = BigComplex::from_f64(r * th.cos(), r * th.sin(), &p);
        let mu1 = &mu + &BigReal::one(&p);
        let i0 = bessel_modified(&mu, &z, ModKind::I).unwrap();
        let i1 = bessel_modified(&mu1, &z, ModKind::I).unwrap();
        let k0 = bessel_modified(&mu, &z, ModKind::K).unwrap();
        let k1 = bessel_modified(&mu1, &z, ModKind::K).unwrap();
        let w = &(&i0 * &k1) + &(&i1 * &k0);
        let rel = (&(&w * &z) - &one).abs_value();
        assert!(
            rel < tol,
            "trial {trial}: Wronskian defect {rel} at mu={} z={z}",
            mu.to_f64()
        );
    }
}

#[test]
fn method_overlap_consistency_at_seams() {
    let p = p40();
    let mu = BigComplex::from_real(br("1.7", &p));
    // series vs CF+Wronskian across the small/moderate seam
    for zf in [29.0, 33.0, 38.0] {
        let z = BigComplex::from_f64(zf, 3.0, &p);
        let bits = work_bits(&mu, &z);
        let (direct, _) = i_series(&mu, &z, bits, 0).unwrap();
        let dispatched = modified_i_co(&mu, &z).unwrap();
        assert!(
            dispatched.rel_err(&direct) < p.tol(8),
            "I seam at |z|={zf}: {}",
            dispatched.rel_err(&direct)
        );
    }
    // series-route K vs exponential-expansion K above the asymptotic seam
    let bits = 133usize;
    let za = asym_limit(bits) + 6.0;
    for im in [0.0, 10.0] {
        let z = BigComplex::from_f64(za, im, &p);
        let k_series = k_from_i(&mu, &z, bits + 16).unwrap();
        let k_asym = k_asym_rotated(&mu, &z, 0, bits + 16).unwrap();
        assert!(
            k_series.rel_err(&k_asym) < p.tol(8),
            "K seam: {}",
            k_series.rel_err(&k_asym)
        );
    }
}

#[test]
fn k_rotation_connection_identity() {
    // 2 pi i cos(mu pi) I_(-mu)(z) = e^(mu pi i) K(z e^(-pi i)) - e^(-mu pi i) K(z e^(pi i))
    let p = p40();
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(17);
    for _ in 0..12 {
        let muf: f64 = rng.gen_range(0.05..4.0);
        let mu = BigReal::from_f64(muf, &p);
        let z = BigComplex::from_f64(rng.gen_range(0.3..8.0), rng.gen_range(-4.0..4.0), &p);
        let nu = BigComplex::from_real(mu.clone());
        let i_pos = modified_i_co(&nu, &z).unwrap();
        let k = modified_k_co(&nu, &z).unwrap();
        // I_(-mu) = I_mu + (2/pi) sin(mu pi) K_mu
        let s = sin_pi_c(&nu);
        let i_neg = &i_pos + &(&k * &s).scale(&(&BigReal::from_i64(2, &p) / &BigReal::pi(&p)));
        let k_m = bessel_k_rotated(&mu, &z, false).unwrap();
        let k_p = bessel_k_rotated(&mu, &z, true).unwrap();
        let half = BigComplex::from_real(BigReal::from_ratio(1, 2, &p));
        let cosm = sin_pi_c(&(&nu + &half));
        let lhs = (&cosm * &i_neg)
            .scale(&BigReal::two_pi(&p))
            .mul_i();
        let e_p = exp_i_pi(&nu, &p);
        let e_m = exp_i_pi(&(-&nu), &p);
        let rhs = &(&e_p * &k_m) - &(&e_m * &k_p);
        let scale = lhs.abs_value().max(&rhs.abs_value());
        let resid = &(&lhs - &rhs).abs_value() / &scale;
        assert!(resid < p.tol(8), "rotation identity defect {resid} at mu={muf}");
    }
}

#[test]
fn k_rotated_half_order_value() {
    // mu = 1/2, z = 1, rotation +pi: K_(1/2)(e^(i pi)) = -i sqrt(pi/2) e
    let p = p40();
    let half = BigReal::from_ratio(1, 2, &p);
    let one = BigComplex::one(&p);
    let v = bessel_k_rotated(&half, &one, true).unwrap();
    let mag = &(BigReal::pi(&p).scale_pow2(-1)).sqrt() * &BigReal::one(&p).exp();
    assert!(v.re().abs() < p.tol(6));
    assert!((v.im() + &mag).abs() < p.tol(6), "got {v}");
}

#[test]
fn cylinder_wronskian_and_hankel_definitions() {
    let p = p40();
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(23);
    let two_over_pi = &BigReal::from_i64(2, &p) / &BigReal::pi(&p);
    for _ in 0..10 {
        let mu = BigReal::from_f64(rng.gen_range(0.0..5.0), &p);
        let x = BigReal::from_f64(rng.gen_range(0.2..40.0), &p);
        let z = BigComplex::from_real(x.clone());
        let mu1 = &mu + &BigReal::one(&p);
        let j0 = bessel_cylinder(&mu, &z, CylKind::J).unwrap();
        let j1 = bessel_cylinder(&mu1, &z, CylKind::J).unwrap();
        let y0 = bessel_cylinder(&mu, &z, CylKind::Y).unwrap();
        let y1 = bessel_cylinder(&mu1, &z, CylKind::Y).unwrap();
        // J_mu Y_(mu+1) - J_(mu+1) Y_mu = -2/(pi x)
        let w = &(&j0 * &y1) - &(&j1 * &y0);
        let expect = BigComplex::from_real(-&(&two_over_pi / &x));
        assert!(
            w.rel_err(&expect) < p.tol(8),
            "cylinder Wronskian defect {} at x={}",
            w.rel_err(&expect),
            x.to_f64()
        );
        // H1 = J + iY, H2 = J - iY
        let h1 = bessel_cylinder(&mu, &z, CylKind::H1).unwrap();
        let h2 = bessel_cylinder(&mu, &z, CylKind::H2).unwrap();
        assert!(h1.rel_err(&(&j0 + &y0.mul_i())) < p.tol(8));
        assert!(h2.rel_err(&(&j0 - &y0.mul_i())) < p.tol(8));
    }
}

#[test]
fn hankel_large_argument_phase() {
    // H^(1)_(mu+1)(w) at w = 50 matches the exponential form
    let p = p40();
    let mu1 = BigComplex::from_real(br("5.2", &p));
    let w = BigComplex::from_i64(50, &p);
    let via_series = cyl_h1_co(&mu1, &w).unwrap();
    // fixed lower precision makes the tail converge at |w| = 50
    let asym = hankel_asym(&mu1, &w, 1, 96).unwrap();
    let rel = via_series.rel_err(&asym).to_f64();
    assert!(rel < 1e-24, "H1 asym mismatch {rel:e}");
}

#[test]
fn k_exponential_expansion_cross_checks() {
    let p = p40();
    // mu = 1/2: exactly sqrt(pi/(2z)) e^(-z) for any truncation
    let z = BigComplex::from_f64(7.0, 2.0, &p);
    let half = BigReal::from_ratio(1, 2, &p);
    for n in [0usize, 3, 9] {
        let v = bessel_k_exponential_expansion(&half, &z, n).unwrap();
        let expect = (&BigComplex::from_real(BigReal::pi(&p)) / &z.mul_i64(2)).sqrt() * (-&z).exp();
        assert!(v.rel_err(&expect) < p.tol(6), "n = {n}");
    }
    // spec grid: mu in {0.3, 1.7, 4.2}, z in {20, 50, 100}, N = 12, tol 1e-10
    for muf in [0.3, 1.7, 4.2] {
        let mu = BigReal::from_f64(muf, &p);
        for zf in [20i64, 50, 100] {
            let z = BigComplex::from_i64(zf, &p);
            let approx = bessel_k_exponential_expansion(&mu, &z, 12).unwrap();
            let direct = bessel_modified(&mu, &z, ModKind::K).unwrap();
            let rel = approx.rel_err(&direct).to_f64();
            assert!(rel < 1e-10, "(2.30) cross-check mu={muf} z={zf}: {rel:e}");
        }
    }
    // mu = 4.2, z = 30, N = 10 against the direct evaluator; the first
    // omitted term a_11/(11 z^11) puts the agreement at the 1e-11 scale
    let v = bessel_k_exponential_expansion(&br("4.2", &p), &BigComplex::from_i64(30, &p), 10)
        .unwrap();
    let d = bessel_modified(&br("4.2", &p), &BigComplex::from_i64(30, &p), ModKind::K).unwrap();
    assert!(v.rel_err(&d).to_f64() < 2e-11, "rel {:e}", v.rel_err(&d).to_f64());
    // divergence guard: tiny z with large order must refuse
    let bad = bessel_k_exponential_expansion(&br("4.2", &p), &BigComplex::from_f64(0.5, 0.0, &p), 8);
    assert!(matches!(bad, Err(Error::Truncation { .. })));
}

#[test]
fn imag_order_k_values() {
    let p = p40();
    // rho = 0 agrees with the real-order evaluator
    let x = br("2.5", &p);
    let (k, kd) = bessel_k_imag_order(&BigReal::zero(&p), &x).unwrap();
    let k0 = bessel_modified(&BigReal::zero(&p), &BigComplex::from_real(x.clone()), ModKind::K)
        .unwrap();
    let k1 = bessel_modified(&BigReal::one(&p), &BigComplex::from_real(x.clone()), ModKind::K)
        .unwrap();
    assert!((&k - k0.re()).abs() < p.tol(6));
    assert!((&kd + k1.re()).abs() < p.tol(6));

    // realness of the fully complex route and K_(-i rho) = K_(i rho)
    let rho = br("1.8", &p);
    let nu = BigComplex::new(BigReal::zero(&p), rho.clone());
    let z = BigComplex::from_real(x.clone());
    let k_plus = modified_k_co(&nu, &z).unwrap();
    let k_minus = modified_k_co(&(-&nu), &z).unwrap();
    assert!(k_plus.im().abs() < &p.tol(8) * &k_plus.abs_value());
    assert!(k_plus.rel_err(&k_minus) < p.tol(8));
    let (k_api, _) = bessel_k_imag_order(&rho, &x).unwrap();
    assert!((&k_api - k_plus.re()).abs() < &p.tol(8) * &k_api.abs());

    // derivative against a central difference
    let h = br("1e-15", &p.raised(25));
    let (kp, _) = bessel_k_imag_order(&rho, &(&x + &h)).unwrap();
    let (km, _) = bessel_k_imag_order(&rho, &(&x - &h)).unwrap();
    let fd = (&kp - &km) / &h.scale_pow2(1);
    let (_, kd) = bessel_k_imag_order(&rho, &x).unwrap();
    assert!(
        (&fd - &kd).abs().to_f64() < 1e-9,
        "K' fd check: {fd} vs {kd}"
    );

    // band seam: series route against the exponential route
    let bits = 140usize;
    let xa = BigReal::from_f64(asym_limit(bits) + 4.0, &p);
    let (k_disp, kd_disp) = bessel_k_imag_order(&rho, &xa).unwrap();
    let nu = BigComplex::new(BigReal::zero(&p), rho.clone());
    let k_series = k_from_i(&nu, &BigComplex::from_real(xa.clone()), bits).unwrap();
    assert!(
        (&k_disp - k_series.re()).abs() < &p.tol(10) * &k_disp.abs(),
        "imag-order K seam"
    );
    let k1_series = k_from_i(
        &(&nu + &BigComplex::one(&p)),
        &BigComplex::from_real(xa.clone()),
        bits,
    )
    .unwrap();
    assert!(
        (&kd_disp + k1_series.re()).abs() < &p.tol(10) * &kd_disp.abs(),
        "imag-order K' seam"
    );
}

#[test]
fn hankel1_two_pi_rotation_continuation() {
    // consistency with the defining J/Y continuation at a noninteger order,
    // checked through H1(w e^(2 pi i)) + known special case mu = 1/2:
    // H^(1)_(1/2)(w) = -i sqrt(2/(pi w)) e^(iw), and e^(2 pi i) rotation
    // multiplies it by e^(-... ) per the continuation formulas.
    let p = p40();
    let half = br("0.5", &p);
    let w = BigComplex::from_f64(3.0, 0.0, &p);
    let rot = hankel1_rotated_2pi(&half, &w).unwrap();
    // for mu = 1/2: J(we^(2pi i)) = e^(pi i) J = -J; Y likewise gains e^(-pi i) = -Y
    // plus 2i sin(pi) cot(pi/2) J = 0, so H1 rotated = -(J + iY) = -H1
    let h1 = bessel_cylinder(&half, &w, CylKind::H1).unwrap();
    assert!(rot.rel_err(&(-&h1)) < p.tol(6), "rel {}", rot.rel_err(&(-&h1)));
}
