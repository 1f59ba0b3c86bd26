//! Acceptance suite.
//!
//! Every check below is exact: the arithmetic is rational, so the
//! tolerance is zero. Each test covers one criterion, recomputes the
//! expected side independently of the code path under test where an
//! oracle is called for, and prints a single PASS/FAIL line (visible
//! with `cargo test --test acceptance -- --nocapture`).

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;

use multicover::contributions::{
    contribution_degree, contribution_partition_sum, contribution_series, ContributionValue,
    CoverModel, GeometrySignature,
};
use multicover::hodge;
use multicover::rational::Rational;
use multicover::series::EvenSeries;
use multicover::transforms::{
    enumerative_forward, enumerative_solve, gv_forward, gv_invert, CurveClass, ETable, GwTable,
};
use multicover::verify::{random_bps_table, random_e_table};

fn report(name: &str, run: impl FnOnce() -> Result<usize, String>) {
    match run() {
        Ok(cases) => println!("PASS {name} ({cases} exact checks)"),
        Err(msg) => {
            println!("FAIL {name}: {msg}");
            panic!("{name}: {msg}");
        }
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(left: T, right: T, context: &str) -> Result<(), String> {
    if left == right {
        Ok(())
    } else {
        Err(format!("{context}: {left:?} != {right:?}"))
    }
}

#[test]
fn cross_route_contribution_identity() {
    report("cross-route contribution identity", || {
        let mut cases = 0;
        for g in 0..=10u32 {
            for k in 0..=12u32 {
                let sig = GeometrySignature::new(g, k);
                let series = contribution_series(sig, 12);
                for h in 0..=12u32 {
                    expect(
                        contribution_partition_sum(sig, h),
                        series.coeff(h as usize).clone(),
                        &format!("g={g} k={k} h={h}"),
                    )?;
                    cases += 1;
                }
            }
        }
        expect(cases, 11 * 13 * 13, "cell count")?;
        Ok(cases)
    });
}

#[test]
fn projective_space_coefficients() {
    report("projective-space coefficient reproduction", || {
        let mut cases = 0;
        for d in 1..=10i64 {
            let sig0 = GeometrySignature::new(0, 4 * d as u32);
            let series0 = contribution_series(sig0, 2);
            expect(
                series0.coeff(1).clone(),
                Rational::new(1 - 2 * d, 12),
                &format!("genus 0, h=1, d={d}"),
            )?;
            expect(
                series0.coeff(2).clone(),
                Rational::new(3 - 11 * d + 10 * d * d, 720),
                &format!("genus 0, h=2, d={d}"),
            )?;
            let sig1 = GeometrySignature::new(1, 4 * d as u32);
            expect(
                contribution_series(sig1, 1).coeff(1).clone(),
                Rational::new(-d, 6),
                &format!("genus 1, h=1, d={d}"),
            )?;
            cases += 3;
        }
        Ok(cases)
    });
}

#[test]
fn degree_scaling_and_elliptic_vanishing() {
    report("degree scaling and elliptic values", || {
        let mut cases = 0;
        for d in 1..=20u64 {
            expect(
                contribution_degree(0, 0, d, CoverModel::Geometric),
                ContributionValue::Defined(Rational::new(1, (d * d * d) as i64)),
                &format!("rational curve, d={d}"),
            )?;
            // Independent sigma(d): brute-force divisor enumeration.
            let sigma: i64 = (1..=d as i64).filter(|i| d as i64 % i == 0).sum();
            expect(
                contribution_degree(1, 0, d, CoverModel::Geometric),
                ContributionValue::Defined(Rational::new(sigma, d as i64)),
                &format!("elliptic curve, d={d}"),
            )?;
            cases += 2;
            for h in 1..=5u32 {
                expect(
                    contribution_degree(1, h, d, CoverModel::Geometric),
                    ContributionValue::Defined(Rational::zero()),
                    &format!("elliptic vanishing, d={d} h={h}"),
                )?;
                cases += 1;
            }
        }
        Ok(cases)
    });
}

#[test]
fn faber_ratio_identity() {
    report("Faber ratio identity", || {
        let mut cases = 0;
        for q in 2..=20u32 {
            // Expected ratio built from scratch: 2^{q-1} / q!.
            let mut factorial = BigInt::from(1);
            for i in 2..=q as u64 {
                factorial *= i;
            }
            let expected = Rational::new(BigInt::from(2).pow(q - 1), factorial);
            expect(
                hodge::alpha(q),
                expected * hodge::kappa_integral(q),
                &format!("q={q}"),
            )?;
            cases += 1;
        }
        Ok(cases)
    });
}

#[test]
fn bernoulli_against_formal_log() {
    report("Bernoulli / formal-log oracle agreement", || {
        let mut cases = 0;
        let q_series = hodge::alpha_via_log(20);
        for q in 1..=20u32 {
            expect(
                hodge::alpha(q),
                q_series.coeff(q as usize).clone(),
                &format!("q={q}"),
            )?;
            cases += 1;
        }
        let doubled = q_series.scalar_mul(&Rational::from_int(2)).exp();
        expect(
            doubled,
            EvenSeries::sine_ratio(20).int_pow(-2),
            "exp(2Q) vs S^-2 at order 20",
        )?;
        cases += 1;
        Ok(cases)
    });
}

#[test]
fn psi_lambda_specialization() {
    report("psi-lambda specialization", || {
        let mut cases = 0;
        for k in 0..=3u32 {
            let series = EvenSeries::sine_ratio(8).int_pow(-(k as i64) - 1);
            for h in 1..=8u32 {
                let assembled: Rational = (0..=h)
                    .map(|i| {
                        Rational::from_int(k as u64).pow(i as i64)
                            * hodge::psi_lambda_integral(h, i)
                    })
                    .sum();
                expect(
                    assembled,
                    series.coeff(h as usize).clone(),
                    &format!("k={k} h={h}"),
                )?;
                cases += 1;
            }
        }
        expect(
            hodge::psi_lambda_integral(1, 0),
            Rational::new(1, 24),
            "spot value (1,0)",
        )?;
        expect(
            hodge::psi_lambda_integral(1, 1),
            Rational::new(1, 24),
            "spot value (1,1)",
        )?;
        cases += 2;
        Ok(cases)
    });
}

#[test]
fn gv_round_trip_and_counterexample() {
    report("GV round trip and integrality counterexample", || {
        let mut cases = 0;
        let mut rng = StdRng::seed_from_u64(0x1a2b_3c4d);
        for case in 0..100 {
            let bps = random_bps_table(&mut rng);
            let gw = gv_forward(&bps, bps.max_genus(), bps.degree_cutoffs())
                .map_err(|e| format!("case {case}: forward failed: {e}"))?;
            let recovered = gv_invert(&gw);
            expect(recovered.clone(), bps, &format!("case {case}: recovery"))?;
            expect(
                recovered.integrality_report().len(),
                0,
                &format!("case {case}: integer table must have empty report"),
            )?;
            cases += 2;
        }

        let class1 = CurveClass::new(vec![1]).map_err(|e| e.to_string())?;
        let class2 = CurveClass::new(vec![2]).map_err(|e| e.to_string())?;
        let gw = GwTable::new(1, None, 0, vec![2], vec![(0, class1, Rational::one())])
            .map_err(|e| e.to_string())?;
        let bps = gv_invert(&gw);
        expect(
            bps.value_at(0, &class2),
            Rational::new(-1, 8),
            "hand-derived non-integral state at degree 2",
        )?;
        expect(
            bps.integrality_report().to_vec(),
            vec![(0, class2)],
            "integrality report flags exactly the degree-2 state",
        )?;
        cases += 2;
        Ok(cases)
    });
}

#[test]
fn enumerative_round_trip() {
    report("enumerative round trip", || {
        let mut cases = 0;
        let mut rng = StdRng::seed_from_u64(0x5e6f_7a8b);
        for case in 0..100 {
            let (table, canonical) = random_e_table(&mut rng);
            let gw = enumerative_forward(&table, &canonical)
                .map_err(|e| format!("case {case}: forward failed: {e}"))?;
            let back = enumerative_solve(&gw).map_err(|e| format!("case {case}: {e}"))?;
            expect(back, table, &format!("case {case}: recovery"))?;
            cases += 1;
        }

        // Calabi-Yau specialization: the genus-1 correction coefficient
        // is C_0(1,1) = 1/12.
        let class = CurveClass::new(vec![1]).map_err(|e| e.to_string())?;
        let e = ETable::new(1, 1, vec![1], vec![(0, class.clone(), Rational::one())])
            .map_err(|e| e.to_string())?;
        let gw = enumerative_forward(&e, &[0]).map_err(|e| e.to_string())?;
        expect(
            gw.value_at(1, &class),
            Rational::new(1, 12),
            "genus-1 coefficient at anti_k = 0",
        )?;
        cases += 1;
        Ok(cases)
    });
}
