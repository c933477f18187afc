//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`). Every comparison is
//! exact rational equality except the explicitly inexact float sanity
//! layer, whose tolerance is pinned in the test.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hurwitz_core::{
    autonomous_operator, certify, complete_bell, compose_egf, family_flow, flow_series,
    flow_symbolic, image_of_family, jet_of_family, majorant_values, rational_binomial,
    closed_forms::closed_form_f64, DerivativeJet, FamilyKind, FamilySpec, GaussianRational,
    HurwitzSeries, MajorantSpec, NormedRing, Rational, Ring,
};

fn rat(p: i64, q: i64) -> Rational {
    Rational::ratio(p, q)
}

fn ints(vals: &[i64]) -> Vec<Rational> {
    vals.iter().map(|&v| Rational::from_int(v)).collect()
}

/// Random rational p/q with |p/q| <= bound and a small denominator.
fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let q = rng.gen_range(1..=8i64);
    let p = rng.gen_range(-bound * q..=bound * q);
    Rational::ratio(p, q)
}

fn pass(line: &str) {
    println!("[PASS] {line}");
}

/// 1. The three jet families map to their closed-form image sequences:
///    exact coordinatewise equality of the recursion output through
///    order 20 for every listed parameter.
#[test]
fn criterion_1_family_images_match_recursion_exactly() {
    let order = 20usize;
    let mut kinds = vec![FamilyKind::Geometric];
    for a in [rat(-2, 1), rat(-1, 2), rat(1, 2), rat(2, 1), rat(3, 1)] {
        kinds.push(FamilyKind::Exponential(a));
    }
    for a in [rat(-1, 1), rat(1, 2), rat(2, 1), rat(3, 1)] {
        kinds.push(FamilyKind::Binomial(a));
    }
    let mut checked = 0usize;
    for kind in kinds {
        let spec = FamilySpec::new(kind.clone(), order).unwrap();
        let recursion = autonomous_operator(&jet_of_family(&spec));
        let closed_form = image_of_family(&spec);
        assert_eq!(
            &recursion[..order],
            &closed_form[..],
            "family {kind:?} diverges from its closed form"
        );
        checked += 1;
    }
    pass(&format!(
        "1/6 closed-form family images: {checked} families, orders 1..={order}, exact equality"
    ));
}

/// 2. Worked low-order values: the first three complete Bell polynomials
///    on pinned substitutions, and the factorial-family image prefix
///    (1, 1, 3, 15, 105) against its explicit formula.
#[test]
fn criterion_2_worked_values() {
    // Y_1(b_1; a_1) = a_1 b_1
    assert_eq!(
        complete_bell(1, &ints(&[2]), &ints(&[3])).unwrap(),
        Rational::from_int(6)
    );
    // Y_2 = a_1 b_2 + a_2 b_1^2
    assert_eq!(
        complete_bell(2, &ints(&[1, 2]), &ints(&[1, 1])).unwrap(),
        Rational::from_int(3)
    );
    // Y_3 = a_1 b_3 + a_2 (3 b_1 b_2) + a_3 b_1^3
    assert_eq!(
        complete_bell(3, &ints(&[1, 1, 1]), &ints(&[1, 2, 6])).unwrap(),
        Rational::from_int(13)
    );

    // factorial-jet images: (-1)^{n+1} 2^n C(1/2, n) n!, evaluated here
    // from scratch, frozen prefix (1, 1, 3, 15, 105)
    let mut formula = Vec::new();
    let mut n_factorial = Rational::one();
    for n in 1..=5usize {
        n_factorial = n_factorial * Rational::from_int(n as i64);
        let sign = if n % 2 == 1 {
            Rational::one()
        } else {
            -Rational::one()
        };
        formula.push(
            sign * Rational::from_int(2).pow(n as u64)
                * rational_binomial(&rat(1, 2), n)
                * n_factorial.clone(),
        );
    }
    assert_eq!(formula, ints(&[1, 1, 3, 15, 105]));
    let spec = FamilySpec::new(FamilyKind::Geometric, 5).unwrap();
    assert_eq!(image_of_family(&spec), formula);
    assert_eq!(
        &autonomous_operator(&jet_of_family(&spec))[..5],
        &formula[..]
    );

    pass("2/6 worked Bell values and factorial-family prefix (1,1,3,15,105), exact");
}

/// 3. The symbolic flow solves y' = f(y): for random rational
///    polynomials f of degree <= 4 with coefficients in [-3, 3], the
///    shifted displacement equals the composition of the jet series with
///    the displacement through order 7, exactly.
#[test]
fn criterion_3_ode_residual_vanishes() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0de_5011);
    let runs = 100usize;
    let depth = 8usize;
    let x_order = 12usize;
    for run in 0..runs {
        // f as a truncated series: nth coefficient n! c_n for the
        // polynomial sum c_n y^n, zero beyond degree 4
        let degree = rng.gen_range(0..=4usize);
        let mut coeffs = vec![Rational::zero(); x_order + 1];
        let mut n_factorial = BigInt::from(1);
        for (n, coeff) in coeffs.iter_mut().enumerate().take(degree + 1) {
            if n > 0 {
                n_factorial *= n as i64;
            }
            *coeff = random_rational(&mut rng, 3) * Rational::from_bigint(n_factorial.clone());
        }
        let f = HurwitzSeries::new(coeffs).unwrap();

        let flow = flow_symbolic(&f, depth).unwrap();
        let common = x_order - (depth - 1);
        let outer = HurwitzSeries::new(
            f.hurwitz_expansion(depth - 1)
                .unwrap()
                .values()
                .iter()
                .map(|s| s.truncated(common).unwrap())
                .collect(),
        )
        .unwrap();
        let displacement = flow.displacement();
        let lhs = displacement.delta().unwrap();
        let rhs = compose_egf(&outer, &displacement.truncated(depth - 1).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "run {run}: flow fails its equation");
    }
    pass(&format!(
        "3/6 ODE residual: {runs} random polynomial right-hand sides, residual zero through order {}",
        depth - 1
    ));
}

/// 4. Majorant certification over both normed rings: jets scaled into
///    each majorant family certify at every order, and a jet equal to
///    its majorant attains the bound with equality.
#[test]
fn criterion_4_majorant_certification() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb0a2d);
    let order = 12usize; // 13 jet values, certified levels n = 1..=13
    let jets_per_family = 30usize;
    let mut certified = 0usize;

    let families: Vec<MajorantSpec> = vec![
        MajorantSpec::power(rat(1, 2)).unwrap(),
        MajorantSpec::power(rat(3, 2)).unwrap(),
        MajorantSpec::power(rat(3, 1)).unwrap(),
        MajorantSpec::factorial(),
        MajorantSpec::binomial(rat(2, 1)).unwrap(),
        MajorantSpec::binomial(rat(3, 1)).unwrap(),
    ];

    for spec in &families {
        let majorant = majorant_values(spec, order).unwrap();
        for _ in 0..jets_per_family {
            // rational jet: v_n = a_n * s, |s| <= 1
            let values: Vec<Rational> = majorant
                .iter()
                .map(|a_n| {
                    let s = Rational::ratio(rng.gen_range(-16..=16i64), 16);
                    a_n.clone() * s
                })
                .collect();
            let report = certify(&DerivativeJet::new(values).unwrap(), spec).unwrap();
            assert!(report.overall, "rational jet failed certification");
            certified += 1;

            // gaussian jet: v_n = a_n (x + y i) with |x| + |y| <= 1
            let values: Vec<GaussianRational> = majorant
                .iter()
                .map(|a_n| {
                    let re = rng.gen_range(-8..=8i64);
                    let im_cap = 16 - re.abs();
                    let im = rng.gen_range(-im_cap..=im_cap);
                    GaussianRational::new(
                        a_n.clone() * Rational::ratio(re, 16),
                        a_n.clone() * Rational::ratio(im, 16),
                    )
                })
                .collect();
            let report = certify(&DerivativeJet::new(values).unwrap(), spec).unwrap();
            assert!(report.overall, "gaussian jet failed certification");
            certified += 1;
        }

        // tightness: the majorant sequence itself as a rational jet
        let report = certify(&DerivativeJet::new(majorant.clone()).unwrap(), spec).unwrap();
        assert!(report.overall);
        for check in &report.per_n {
            assert_eq!(
                check.actual_norm, check.bound,
                "bound not attained at n = {}",
                check.n
            );
        }
    }

    assert!(certified >= 200);
    pass(&format!(
        "4/6 majorant certification: {certified} dominated jets over Q and Q(i) at order {order}, plus tightness, exact"
    ));
}

/// 5. Property suites at 512 cases each: series ring laws, the Leibniz
///    rule, and all four norm axioms on both ring instances.
#[test]
fn criterion_5_ring_laws_and_norm_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x51a7e5);
    let cases = 512usize;
    let order = 6usize;

    let random_series = |rng: &mut ChaCha8Rng| {
        HurwitzSeries::new((0..=order).map(|_| random_rational(rng, 5)).collect()).unwrap()
    };
    let random_gaussian = |rng: &mut ChaCha8Rng| {
        GaussianRational::new(random_rational(rng, 5), random_rational(rng, 5))
    };

    for _ in 0..cases {
        let f = random_series(&mut rng);
        let g = random_series(&mut rng);
        let h = random_series(&mut rng);
        // ring laws
        assert_eq!(f.checked_add(&g).unwrap(), g.checked_add(&f).unwrap());
        assert_eq!(f.checked_mul(&g).unwrap(), g.checked_mul(&f).unwrap());
        assert_eq!(
            f.checked_add(&g).unwrap().checked_add(&h).unwrap(),
            f.checked_add(&g.checked_add(&h).unwrap()).unwrap()
        );
        assert_eq!(
            f.checked_mul(&g).unwrap().checked_mul(&h).unwrap(),
            f.checked_mul(&g.checked_mul(&h).unwrap()).unwrap()
        );
        assert_eq!(
            f.checked_mul(&g.checked_add(&h).unwrap()).unwrap(),
            f.checked_mul(&g)
                .unwrap()
                .checked_add(&f.checked_mul(&h).unwrap())
                .unwrap()
        );
    }

    for _ in 0..cases {
        let f = random_series(&mut rng);
        let g = random_series(&mut rng);
        // Leibniz rule, exact
        let lhs = f.checked_mul(&g).unwrap().delta().unwrap();
        let rhs = f
            .delta()
            .unwrap()
            .checked_mul(&g.truncated(order - 1).unwrap())
            .unwrap()
            .checked_add(
                &f.truncated(order - 1)
                    .unwrap()
                    .checked_mul(&g.delta().unwrap())
                    .unwrap(),
            )
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    // norm axioms on both instances
    assert_eq!(Rational::zero().norm(), Rational::zero());
    assert_eq!(GaussianRational::zero().norm(), Rational::zero());
    for _ in 0..cases {
        let x = random_rational(&mut rng, 20);
        let y = random_rational(&mut rng, 20);
        if !Ring::is_zero(&x) {
            assert!(x.norm().is_positive());
        }
        assert!((x.clone() + y.clone()).norm() <= x.norm() + y.norm());
        assert_eq!((-x.clone()).norm(), x.norm());
        // rationals: multiplicative, the sharp case of axiom 4
        assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());

        let z = random_gaussian(&mut rng);
        let w = random_gaussian(&mut rng);
        if !Ring::is_zero(&z) {
            assert!(z.norm().is_positive());
        }
        assert!((z.clone() + w.clone()).norm() <= z.norm() + w.norm());
        assert_eq!((-z.clone()).norm(), z.norm());
        assert!((z.clone() * w.clone()).norm() <= z.norm() * w.norm());
    }

    pass(&format!(
        "5/6 property suites: ring laws, Leibniz rule, norm axioms, {cases} cases each, exact"
    ));
}

/// 6. Float sanity of the closed forms: order-20 truncations evaluated
///    at t = 1/10 agree with 64-bit evaluation of the closed-form flows
///    within 1e-12 absolute (the truncation tails are far smaller).
#[test]
fn criterion_6_closed_form_float_sanity() {
    let order = 20usize;
    let t = rat(1, 10);
    let tolerance = 1e-12f64;

    let mut kinds = vec![FamilyKind::Geometric];
    for a in [
        rat(-2, 1),
        rat(-1, 2),
        rat(0, 1),
        rat(1, 2),
        rat(1, 1),
        rat(2, 1),
        rat(3, 1),
    ] {
        kinds.push(FamilyKind::Exponential(a));
    }
    for a in [rat(-1, 1), rat(1, 2), rat(2, 1), rat(3, 1)] {
        kinds.push(FamilyKind::Binomial(a));
    }

    let mut worst = 0f64;
    for kind in kinds {
        let spec = FamilySpec::new(kind.clone(), order).unwrap();
        let truncated = family_flow(&spec).flow.eval(&t).to_f64();
        let closed = closed_form_f64(&spec, 0.1);
        let deviation = (truncated - closed).abs();
        assert!(
            deviation <= tolerance,
            "{kind:?}: |{truncated} - {closed}| = {deviation} > {tolerance}"
        );
        worst = worst.max(deviation);
    }
    pass(&format!(
        "6/6 float sanity: order-{order} truncations at t = 1/10, worst deviation {worst:.3e} <= {tolerance:.0e}"
    ));
}

/// Supporting check used by the suite: evaluation commutes with the
/// recursion (symbolic flow evaluated at a point equals the scalar flow
/// on the evaluated jet) for polynomial right-hand sides.
#[test]
fn evaluation_naturality_spot_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11ce);
    for _ in 0..25 {
        let mut coeffs = vec![Rational::zero(); 15];
        for coeff in coeffs.iter_mut().take(4) {
            *coeff = random_rational(&mut rng, 3);
        }
        let f = HurwitzSeries::new(coeffs).unwrap();
        let c = random_rational(&mut rng, 2);
        let symbolic = flow_symbolic(&f, 4).unwrap();
        let scalar_jet = DerivativeJet::new(
            f.hurwitz_expansion(3)
                .unwrap()
                .values()
                .iter()
                .map(|s| s.evaluate(&c))
                .collect(),
        )
        .unwrap();
        let scalar = flow_series(c.clone(), &scalar_jet);
        for (sym, sc) in symbolic.coeffs().iter().zip(scalar.coeffs()) {
            assert_eq!(&sym.evaluate(&c), sc);
        }
    }
}
