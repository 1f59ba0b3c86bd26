//! Cross-route identity suites.
//!
//! Every quantity this crate computes is reachable by at least two
//! independent routes (series coefficient extraction vs partition
//! sums, Bernoulli closed forms vs formal logarithms, forward maps vs
//! triangular solves). The suites here drive those pairs against each
//! other over fixed grids and seeded random tables; all comparisons
//! are exact. The CLI `verify` subcommand runs [`run_all`] and fails
//! on any mismatch.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::contributions::{
    contribution_degree, contribution_series, ContributionValue, CoverModel, GeometrySignature,
};
use crate::hodge;
use crate::number_theory::divisor_sum;
use crate::rational::Rational;
use crate::series::EvenSeries;
use crate::transforms::{
    enumerative_forward, enumerative_solve, gv_forward, gv_invert, BpsTable, CurveClass, ETable,
    GwTable,
};

/// Outcome of one identity suite: how many comparisons ran and a
/// message for each that failed.
#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs every suite in order.
pub fn run_all() -> Vec<SuiteResult> {
    vec![
        contribution_routes(),
        bernoulli_log_oracle(),
        faber_ratio(),
        psi_lambda_assembly(),
        degree_scaling_values(),
        gv_round_trip(),
        enumerative_round_trip(),
    ]
}

/// Degree-1 contributions: the partition sum must reproduce every
/// coefficient of the sine-ratio power, over 0 <= g <= 10,
/// 0 <= k <= 12, 0 <= h <= 12.
pub fn contribution_routes() -> SuiteResult {
    let mut suite = SuiteResult::new("contribution-routes");
    const MAX_H: usize = 12;
    for g in 0..=10u32 {
        for k in 0..=12u32 {
            let sig = GeometrySignature::new(g, k);
            let series = contribution_series(sig, MAX_H);
            for h in 0..=MAX_H as u32 {
                let from_partitions = crate::contributions::contribution_partition_sum(sig, h);
                let from_series = series.coeff(h as usize);
                suite.check(&from_partitions == from_series, || {
                    format!(
                        "g={g} k={k} h={h}: partition sum {from_partitions} != series {from_series}"
                    )
                });
            }
        }
    }
    suite
}

/// The alpha values from the Bernoulli closed form against the formal
/// log of the sine-ratio series, plus the exponential identity
/// exp(2Q) = S^{-2} through order 20.
pub fn bernoulli_log_oracle() -> SuiteResult {
    let mut suite = SuiteResult::new("bernoulli-log-oracle");
    let q_series = hodge::alpha_via_log(20);
    for q in 1..=20u32 {
        let closed = hodge::alpha(q);
        let logged = q_series.coeff(q as usize);
        suite.check(&closed == logged, || {
            format!("q={q}: closed form {closed} != log coefficient {logged}")
        });
    }
    let doubled = q_series.scalar_mul(&Rational::from_int(2)).exp();
    let inverse_square = EvenSeries::sine_ratio(20).int_pow(-2);
    suite.check(doubled == inverse_square, || {
        "exp(2Q) differs from S^-2 within order 20".to_owned()
    });
    suite
}

/// alpha(q) = (2^{q-1}/q!) kappa_integral(q) for 2 <= q <= 20.
pub fn faber_ratio() -> SuiteResult {
    let mut suite = SuiteResult::new("faber-ratio");
    for q in 2..=20u32 {
        let ratio = hodge::faber_ratio_check(q);
        let expected = hodge::faber_ratio_expected(q);
        suite.check(ratio == expected, || {
            format!("q={q}: ratio {ratio} != expected {expected}")
        });
    }
    suite
}

/// The psi-lambda integrals assemble the inverse sine-ratio powers:
/// sum_i k^i psi_lambda(h,i) = [t^{2h}] S^{-k-1} for k <= 3, h <= 8.
pub fn psi_lambda_assembly() -> SuiteResult {
    let mut suite = SuiteResult::new("psi-lambda-assembly");
    for k in 0..=3u32 {
        let series = EvenSeries::sine_ratio(8).int_pow(-(k as i64) - 1);
        for h in 1..=8u32 {
            let assembled: Rational = (0..=h)
                .map(|i| {
                    Rational::from_int(k as u64).pow(i as i64) * hodge::psi_lambda_integral(h, i)
                })
                .sum();
            let direct = series.coeff(h as usize);
            suite.check(&assembled == direct, || {
                format!("k={k} h={h}: assembled {assembled} != coefficient {direct}")
            });
        }
    }
    let spot = Rational::new(1, 24);
    suite.check(hodge::psi_lambda_integral(1, 0) == spot, || {
        "psi_lambda(1,0) != 1/24".to_owned()
    });
    suite.check(hodge::psi_lambda_integral(1, 1) == spot, || {
        "psi_lambda(1,1) != 1/24".to_owned()
    });
    suite
}

/// Known degree-scaling values: the anticanonical-degree-4d
/// coefficients for low genus, the 1/d^3 rational-curve law, the
/// sigma(d)/d elliptic values, and the elliptic vanishing.
pub fn degree_scaling_values() -> SuiteResult {
    let mut suite = SuiteResult::new("degree-scaling-values");
    for d in 1..=10i64 {
        let genus0 = contribution_series(GeometrySignature::new(0, 4 * d as u32), 2);
        suite.check(genus0.coeff(1) == &Rational::new(1 - 2 * d, 12), || {
            format!("d={d}: C_0(1) with k=4d is {}", genus0.coeff(1))
        });
        suite.check(
            genus0.coeff(2) == &Rational::new(3 - 11 * d + 10 * d * d, 720),
            || format!("d={d}: C_0(2) with k=4d is {}", genus0.coeff(2)),
        );
        let genus1 = contribution_series(GeometrySignature::new(1, 4 * d as u32), 1);
        suite.check(genus1.coeff(1) == &Rational::new(-d, 6), || {
            format!("d={d}: C_1(1) with k=4d is {}", genus1.coeff(1))
        });
    }
    for d in 1..=20u64 {
        let rational_curve = contribution_degree(0, 0, d, CoverModel::Geometric);
        let expected = Rational::new(1, (d * d * d) as i64);
        suite.check(
            rational_curve == ContributionValue::Defined(expected.clone()),
            || format!("d={d}: C_0(0,d) != 1/d^3"),
        );
        let elliptic = contribution_degree(1, 0, d, CoverModel::Geometric);
        let expected = divisor_sum(d) / Rational::from_int(d as i64);
        suite.check(
            elliptic == ContributionValue::Defined(expected.clone()),
            || format!("d={d}: C_1(0,d) != sigma(d)/d"),
        );
        for h in 1..=5u32 {
            let vanishing = contribution_degree(1, h, d, CoverModel::Geometric);
            suite.check(
                vanishing == ContributionValue::Defined(Rational::zero()),
                || format!("d={d} h={h}: C_1(h,d) != 0"),
            );
        }
    }
    suite
}

/// A BPS table with random integer entries, bounded rank, genus and
/// degree.
pub fn random_bps_table(rng: &mut StdRng) -> BpsTable {
    let (rank, max_genus, cutoffs) = random_shape(rng);
    let entries = random_integer_entries(rng, max_genus, &cutoffs);
    BpsTable::new(rank, max_genus, cutoffs, entries).expect("generated table is valid")
}

/// A random integer enumerative table together with a nonnegative
/// canonical vector (so every pairing is nonnegative).
pub fn random_e_table(rng: &mut StdRng) -> (ETable, Vec<i64>) {
    let (rank, max_genus, cutoffs) = random_shape(rng);
    let canonical = (0..rank).map(|_| rng.random_range(0..=5i64)).collect();
    let entries = random_integer_entries(rng, max_genus, &cutoffs);
    let table = ETable::new(rank, max_genus, cutoffs, entries).expect("generated table is valid");
    (table, canonical)
}

fn random_shape(rng: &mut StdRng) -> (usize, u32, Vec<u32>) {
    let rank = rng.random_range(1..=2usize);
    let max_genus = rng.random_range(0..=4u32);
    let cutoffs: Vec<u32> = (0..rank).map(|_| rng.random_range(1..=8u32)).collect();
    (rank, max_genus, cutoffs)
}

fn random_integer_entries(
    rng: &mut StdRng,
    max_genus: u32,
    cutoffs: &[u32],
) -> Vec<(u32, CurveClass, Rational)> {
    let mut entries = Vec::new();
    for class in crate::transforms::class_grid(cutoffs) {
        for genus in 0..=max_genus {
            if rng.random_range(0..5u32) == 0 {
                let value = rng.random_range(-9..=9i64);
                if value != 0 {
                    entries.push((genus, class.clone(), Rational::from_int(value)));
                }
            }
        }
    }
    entries
}

/// 100 seeded random integer BPS tables must round-trip through
/// forward and inversion with empty integrality reports, and the
/// single-state table must produce the non-integral -1/8 at degree 2.
pub fn gv_round_trip() -> SuiteResult {
    let mut suite = SuiteResult::new("gv-round-trip");
    let mut rng = StdRng::seed_from_u64(0x6d75_6c74);
    for case in 0..100 {
        let bps = random_bps_table(&mut rng);
        let cutoffs = bps.degree_cutoffs().to_vec();
        let genus_cutoff = bps.max_genus();
        let gw = gv_forward(&bps, genus_cutoff, &cutoffs).expect("forward of valid table");
        let recovered = gv_invert(&gw);
        suite.check(recovered == bps, || {
            format!("case {case}: inversion failed to recover the table")
        });
        suite.check(recovered.is_integral(), || {
            format!("case {case}: integer table flagged as non-integral")
        });
    }

    let single = GwTable::new(
        1,
        None,
        0,
        vec![2],
        vec![(
            0,
            CurveClass::new(vec![1]).unwrap(),
            Rational::one(),
        )],
    )
    .unwrap();
    let bps = gv_invert(&single);
    let degree2 = CurveClass::new(vec![2]).unwrap();
    suite.check(
        bps.value_at(0, &degree2) == Rational::new(-1, 8),
        || "single-state inversion: n at degree 2 != -1/8".to_owned(),
    );
    suite.check(
        bps.integrality_report() == [(0, degree2.clone())],
        || "single-state inversion: report does not flag degree 2".to_owned(),
    );
    suite
}

/// 100 seeded random enumerative tables with canonical vectors must
/// round-trip through the correction and its solve; the Calabi-Yau
/// specialization must show the genus-1 coefficient 1/12.
pub fn enumerative_round_trip() -> SuiteResult {
    let mut suite = SuiteResult::new("enumerative-round-trip");
    let mut rng = StdRng::seed_from_u64(0x636f_7665);
    for case in 0..100 {
        let (table, canonical) = random_e_table(&mut rng);
        let gw = enumerative_forward(&table, &canonical).expect("forward of valid table");
        let back = enumerative_solve(&gw).expect("canonical vector present");
        suite.check(back == table, || {
            format!("case {case}: solve failed to recover the table")
        });
    }

    let class = CurveClass::new(vec![1]).unwrap();
    let e = ETable::new(1, 1, vec![1], vec![(0, class.clone(), Rational::one())]).unwrap();
    let gw = enumerative_forward(&e, &[0]).expect("zero canonical vector");
    suite.check(
        gw.value_at(1, &class) == Rational::new(1, 12),
        || "Calabi-Yau genus-1 correction coefficient != 1/12".to_owned(),
    );
    suite
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for suite in run_all() {
            assert!(
                suite.passed(),
                "suite {} failed: {:?}",
                suite.name,
                suite.failures
            );
            assert!(suite.cases > 0);
        }
    }

    #[test]
    fn random_tables_are_reproducible() {
        let mut a = StdRng::seed_from_u64(42);
        let mut b = StdRng::seed_from_u64(42);
        assert_eq!(random_bps_table(&mut a), random_bps_table(&mut b));
    }
}
