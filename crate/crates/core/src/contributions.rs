//! Degenerate multiple-cover contributions.
//!
//! A nonsingular genus-g curve sitting in a 3-fold contributes to the
//! higher-genus Gromov-Witten invariants of its class through covers.
//! The degree-1 contributions are carried by an integer power of the
//! sine-ratio series,
//!
//! ```text
//! sum_h C_g(h, X, beta) t^{2h} = S(t)^{2g - 2 + k},    k = -K_X . beta,
//! ```
//!
//! and are computed here by two independent routes: coefficient
//! extraction from the power of `S`, and the partition sum over alpha
//! integrals weighted by automorphism factors. Degree-d contributions
//! exist in two models (geometric and M-theoretic) that agree at genus
//! 0 and degree 1 but differ at genus 1 in degree >= 2; both are
//! provided, and inputs the geometric model leaves undefined are
//! reported as such rather than guessed.

use serde::Serialize;

use crate::hodge::alpha;
use crate::number_theory::divisor_sum;
use crate::partitions;
use crate::rational::Rational;
use crate::series::EvenSeries;

/// The pair (curve genus g, anticanonical degree k = -K_X . beta)
/// parameterizing a contribution series. `anti_k = 0` is the
/// Calabi-Yau case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeometrySignature {
    pub curve_genus: u32,
    pub anti_k: u32,
}

impl GeometrySignature {
    pub fn new(curve_genus: u32, anti_k: u32) -> Self {
        GeometrySignature { curve_genus, anti_k }
    }

    pub fn calabi_yau(curve_genus: u32) -> Self {
        GeometrySignature {
            curve_genus,
            anti_k: 0,
        }
    }

    /// Exponent 2g - 2 + k of the sine-ratio series.
    pub fn series_exponent(&self) -> i64 {
        2 * self.curve_genus as i64 - 2 + self.anti_k as i64
    }

    /// Degree of the conormal bundle, 2 - 2g - k; this is the base of
    /// the length factor in the partition sum.
    pub fn conormal_degree(&self) -> i64 {
        2 - 2 * self.curve_genus as i64 - self.anti_k as i64
    }
}

/// Degree-1 contribution series: the coefficient of `t^{2h}` is
/// `C_g(h, X, beta)`, with `C_g(0, .) = 1` always.
pub fn contribution_series(sig: GeometrySignature, order: usize) -> EvenSeries {
    EvenSeries::sine_ratio(order).int_pow(sig.series_exponent())
}

/// Degree-1 contribution via the partition sum: over partitions tau of
/// h with length l,
///
/// ```text
/// C_g(h, X, beta) = sum_tau (2 - 2g - k)^l / |Aut_tau| * prod_i alpha(h_i).
/// ```
///
/// `h = 0` contributes the empty partition: empty product, value 1.
/// This route shares nothing with [`contribution_series`] beyond
/// rational arithmetic.
pub fn contribution_partition_sum(sig: GeometrySignature, h: u32) -> Rational {
    let base = Rational::from_int(sig.conormal_degree());
    partitions::enumerate(h)
        .iter()
        .map(|tau| {
            let weight = base.pow(tau.len() as i64) / Rational::from_int(tau.aut_order());
            tau.parts()
                .iter()
                .fold(weight, |acc, &part| acc * alpha(part))
        })
        .sum()
}

/// Which multiple-cover model assigns values to degrees d >= 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverModel {
    /// Scaling laws established for rigid rational and super-rigid
    /// elliptic curves; leaves g >= 2, d >= 2 undefined.
    Geometric,
    /// The BPS state-count model: d^{2g+2h-3} C_g(h,1) for all g.
    MTheory,
}

/// A contribution that may be undefined: the geometric model declines
/// to assign a value to multiple covers of genus >= 2 curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContributionValue {
    Defined(Rational),
    Undefined,
}

impl ContributionValue {
    pub fn is_defined(&self) -> bool {
        matches!(self, ContributionValue::Defined(_))
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            ContributionValue::Defined(v) => Some(v),
            ContributionValue::Undefined => None,
        }
    }
}

/// Contribution of a genus-g curve to the genus g+h invariant of d
/// times its class, in the Calabi-Yau case.
///
/// The M-theory model is total: `d^{2g+2h-3} C_g(h,1)`. The geometric
/// model covers genus 0 (`d^{2h-3} C_0(h,1)`), genus 1 (`sigma(d)/d`
/// at h = 0, vanishing for h > 0), and degree 1 for every genus; it is
/// undefined for g >= 2 with d >= 2.
pub fn contribution_degree(g: u32, h: u32, d: u64, model: CoverModel) -> ContributionValue {
    assert!(d >= 1, "cover degree must be positive");
    let degree_one = |order: u32| -> Rational {
        contribution_series(GeometrySignature::calabi_yau(g), order as usize)
            .coeff(order as usize)
            .clone()
    };
    match model {
        CoverModel::MTheory => {
            let exponent = 2 * (g as i64 + h as i64) - 3;
            let scale = Rational::from_int(d as i64).pow(exponent);
            ContributionValue::Defined(scale * degree_one(h))
        }
        CoverModel::Geometric => {
            if d == 1 {
                ContributionValue::Defined(degree_one(h))
            } else if g == 0 {
                let scale = Rational::from_int(d as i64).pow(2 * h as i64 - 3);
                ContributionValue::Defined(scale * degree_one(h))
            } else if g == 1 {
                if h == 0 {
                    ContributionValue::Defined(divisor_sum(d) / Rational::from_int(d as i64))
                } else {
                    ContributionValue::Defined(Rational::zero())
                }
            } else {
                ContributionValue::Undefined
            }
        }
    }
}
