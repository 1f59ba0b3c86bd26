//! Triangular transforms between invariant tables.
//!
//! Two linear systems connect a table of Gromov-Witten invariants
//! `N_beta^g` to candidate integer invariants:
//!
//! * the BPS expansion, which writes the potential as a sum of
//!   multiple-cover contributions of BPS states over all degrees; its
//!   inversion extracts `n_beta^g` and reports every non-integral
//!   value (the integrality audit);
//! * the enumerative correction, which relates `N_beta^g` to honest
//!   counts `E_beta^g` through degree-1 covers only, with coefficients
//!   depending on the anticanonical degree of each class.
//!
//! Both systems are unitriangular (the diagonal coefficient is
//! `C_g(0, .) = 1`), so the solves are exact and unique once the
//! table's genus and degree cutoffs are fixed. Inversion never needs a
//! value outside the cutoffs, because divisors of in-range classes are
//! in range.
//!
//! Tables travel as JSON:
//!
//! ```json
//! { "rank": 1, "canonical": [4], "max_genus": 2, "degree_cutoffs": [8],
//!   "entries": [ { "genus": 0, "class": [1], "value": "1" } ] }
//! ```
//!
//! Values are rational strings, missing entries mean zero, and
//! duplicate (genus, class) keys are a load error.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::contributions::{contribution_series, GeometrySignature};
use crate::rational::Rational;
use crate::series::EvenSeries;

/// A nonzero curve class in a fixed basis of H_2: a vector of
/// nonnegative degrees, not all zero.
///
/// Classes order by total degree, then lexicographically; triangular
/// solves walk that order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CurveClass(Vec<u32>);

impl CurveClass {
    pub fn new(degrees: Vec<u32>) -> Result<Self, TableError> {
        if degrees.iter().all(|&b| b == 0) {
            return Err(TableError::ZeroClass);
        }
        Ok(CurveClass(degrees))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&b| b as u64).sum()
    }

    /// All `(d, beta')` with `d beta' = self`, componentwise; `d` runs
    /// over the divisors of the gcd of the degrees. Always contains
    /// `(1, self)`.
    pub fn divisors(&self) -> Vec<(u64, CurveClass)> {
        let g = self.0.iter().fold(0u32, |acc, &b| gcd(acc, b));
        (1..=g as u64)
            .filter(|&d| (g as u64).is_multiple_of(d))
            .map(|d| {
                let quotient = CurveClass(self.0.iter().map(|&b| b / d as u32).collect());
                (d, quotient)
            })
            .collect()
    }

    /// Pairing `c . beta` against an integer vector of matching rank.
    pub fn pairing(&self, c: &[i64]) -> i64 {
        assert_eq!(c.len(), self.rank(), "pairing rank mismatch");
        self.0.iter().zip(c).map(|(&b, &ci)| b as i64 * ci).sum()
    }

    fn within(&self, cutoffs: &[u32]) -> bool {
        self.0.iter().zip(cutoffs).all(|(&b, &cap)| b <= cap)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Ord for CurveClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for CurveClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", joined.join(";"))
    }
}

impl fmt::Debug for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Errors raised while loading or transforming tables. Each message
/// names the offending entry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("zero curve class is not allowed")]
    ZeroClass,
    #[error("rank mismatch: class {class} has rank {found}, table declares {expected}")]
    RankMismatch {
        class: String,
        found: usize,
        expected: usize,
    },
    #[error("degree cutoffs declare rank {found}, table declares {expected}")]
    CutoffRankMismatch { found: usize, expected: usize },
    #[error("canonical vector has rank {found}, table declares {expected}")]
    CanonicalRankMismatch { found: usize, expected: usize },
    #[error("duplicate entry for genus {genus}, class {class}")]
    DuplicateEntry { genus: u32, class: String },
    #[error("genus {genus} of class {class} exceeds max_genus {max_genus}")]
    GenusOutOfRange {
        genus: u32,
        class: String,
        max_genus: u32,
    },
    #[error("class {class} (genus {genus}) lies outside the degree cutoffs")]
    ClassOutOfRange { genus: u32, class: String },
    #[error("canonical pairing of class {class} is {pairing}; it must be nonnegative")]
    NegativePairing { class: String, pairing: i64 },
    #[error("degree cutoffs must be positive")]
    NonPositiveCutoff,
    #[error("missing canonical vector")]
    MissingCanonical,
}

type Entries = BTreeMap<(u32, CurveClass), Rational>;

fn validate_entries(
    rank: usize,
    max_genus: u32,
    degree_cutoffs: &[u32],
    canonical: Option<&[i64]>,
    raw: Vec<(u32, CurveClass, Rational)>,
) -> Result<Entries, TableError> {
    if degree_cutoffs.len() != rank {
        return Err(TableError::CutoffRankMismatch {
            found: degree_cutoffs.len(),
            expected: rank,
        });
    }
    if let Some(c) = canonical {
        if c.len() != rank {
            return Err(TableError::CanonicalRankMismatch {
                found: c.len(),
                expected: rank,
            });
        }
    }
    let mut entries = Entries::new();
    for (genus, class, value) in raw {
        if class.rank() != rank {
            return Err(TableError::RankMismatch {
                class: class.to_string(),
                found: class.rank(),
                expected: rank,
            });
        }
        if genus > max_genus {
            return Err(TableError::GenusOutOfRange {
                genus,
                class: class.to_string(),
                max_genus,
            });
        }
        if !class.within(degree_cutoffs) {
            return Err(TableError::ClassOutOfRange {
                genus,
                class: class.to_string(),
            });
        }
        if let Some(c) = canonical {
            let pairing = class.pairing(c);
            if pairing < 0 {
                return Err(TableError::NegativePairing {
                    class: class.to_string(),
                    pairing,
                });
            }
        }
        if value.is_zero() {
            continue;
        }
        let key = (genus, class);
        if entries.contains_key(&key) {
            return Err(TableError::DuplicateEntry {
                genus: key.0,
                class: key.1.to_string(),
            });
        }
        entries.insert(key, value);
    }
    Ok(entries)
}

macro_rules! table_accessors {
    () => {
        pub fn rank(&self) -> usize {
            self.rank
        }

        pub fn max_genus(&self) -> u32 {
            self.max_genus
        }

        pub fn degree_cutoffs(&self) -> &[u32] {
            &self.degree_cutoffs
        }

        /// Value at `(genus, class)`; missing entries are zero.
        pub fn value_at(&self, genus: u32, class: &CurveClass) -> Rational {
            self.entries
                .get(&(genus, class.clone()))
                .cloned()
                .unwrap_or_else(Rational::zero)
        }

        pub fn entries(&self) -> impl Iterator<Item = (&(u32, CurveClass), &Rational)> {
            self.entries.iter()
        }

        pub fn len(&self) -> usize {
            self.entries.len()
        }

        pub fn is_empty(&self) -> bool {
            self.entries.is_empty()
        }

        /// Distinct classes with at least one nonzero entry, in
        /// increasing (total degree, lexicographic) order.
        pub fn support_classes(&self) -> Vec<CurveClass> {
            let mut classes: Vec<CurveClass> =
                self.entries.keys().map(|(_, beta)| beta.clone()).collect();
            classes.sort();
            classes.dedup();
            classes
        }
    };
}

/// Finitely-supported table of Gromov-Witten invariants `N_beta^g`,
/// optionally carrying the canonical pairing vector needed by the
/// enumerative solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwTable {
    rank: usize,
    canonical: Option<Vec<i64>>,
    max_genus: u32,
    degree_cutoffs: Vec<u32>,
    entries: Entries,
}

impl GwTable {
    pub fn new(
        rank: usize,
        canonical: Option<Vec<i64>>,
        max_genus: u32,
        degree_cutoffs: Vec<u32>,
        entries: Vec<(u32, CurveClass, Rational)>,
    ) -> Result<Self, TableError> {
        let entries = validate_entries(
            rank,
            max_genus,
            &degree_cutoffs,
            canonical.as_deref(),
            entries,
        )?;
        Ok(GwTable {
            rank,
            canonical,
            max_genus,
            degree_cutoffs,
            entries,
        })
    }

    pub fn canonical(&self) -> Option<&[i64]> {
        self.canonical.as_deref()
    }

    table_accessors!();
}

/// Table of BPS state counts `n_beta^g` extracted from a GW table.
/// Values are kept exact; entries with denominator other than 1 are
/// listed in the integrality report, never rounded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpsTable {
    rank: usize,
    max_genus: u32,
    degree_cutoffs: Vec<u32>,
    entries: Entries,
    integrality_report: Vec<(u32, CurveClass)>,
}

impl BpsTable {
    pub fn new(
        rank: usize,
        max_genus: u32,
        degree_cutoffs: Vec<u32>,
        entries: Vec<(u32, CurveClass, Rational)>,
    ) -> Result<Self, TableError> {
        let entries = validate_entries(rank, max_genus, &degree_cutoffs, None, entries)?;
        Ok(Self::from_validated(rank, max_genus, degree_cutoffs, entries))
    }

    fn from_validated(
        rank: usize,
        max_genus: u32,
        degree_cutoffs: Vec<u32>,
        entries: Entries,
    ) -> Self {
        let integrality_report = entries
            .iter()
            .filter(|(_, value)| !value.is_integer())
            .map(|(key, _)| key.clone())
            .collect();
        BpsTable {
            rank,
            max_genus,
            degree_cutoffs,
            entries,
            integrality_report,
        }
    }

    /// Keys of the non-integral entries, sorted.
    pub fn integrality_report(&self) -> &[(u32, CurveClass)] {
        &self.integrality_report
    }

    pub fn is_integral(&self) -> bool {
        self.integrality_report.is_empty()
    }

    table_accessors!();
}

/// Table of enumerative invariants `E_beta^g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ETable {
    rank: usize,
    max_genus: u32,
    degree_cutoffs: Vec<u32>,
    entries: Entries,
}

impl ETable {
    pub fn new(
        rank: usize,
        max_genus: u32,
        degree_cutoffs: Vec<u32>,
        entries: Vec<(u32, CurveClass, Rational)>,
    ) -> Result<Self, TableError> {
        let entries = validate_entries(rank, max_genus, &degree_cutoffs, None, entries)?;
        Ok(ETable {
            rank,
            max_genus,
            degree_cutoffs,
            entries,
        })
    }

    table_accessors!();
}

/// One `(genus, class, value)` row of the JSON table format.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableEntry {
    pub genus: u32,
    pub class: Vec<u32>,
    pub value: Rational,
}

/// The JSON wire format shared by GW, BPS and enumerative tables.
/// `canonical` is optional; `integrality_report` appears on extracted
/// BPS tables.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableFile {
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<Vec<i64>>,
    pub max_genus: u32,
    pub degree_cutoffs: Vec<u32>,
    pub entries: Vec<TableEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integrality_report: Option<Vec<TableEntry>>,
}

impl TableFile {
    pub fn from_json(text: &str) -> Result<TableFile, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("table serialization");
        out.push('\n');
        out
    }
}

fn raw_entries(file_entries: Vec<TableEntry>) -> Result<Vec<(u32, CurveClass, Rational)>, TableError> {
    file_entries
        .into_iter()
        .map(|e| Ok((e.genus, CurveClass::new(e.class)?, e.value)))
        .collect()
}

fn file_entries(entries: &Entries) -> Vec<TableEntry> {
    entries
        .iter()
        .map(|((genus, class), value)| TableEntry {
            genus: *genus,
            class: class.degrees().to_vec(),
            value: value.clone(),
        })
        .collect()
}

impl GwTable {
    pub fn from_file(file: TableFile) -> Result<Self, TableError> {
        GwTable::new(
            file.rank,
            file.canonical,
            file.max_genus,
            file.degree_cutoffs,
            raw_entries(file.entries)?,
        )
    }

    pub fn to_file(&self) -> TableFile {
        TableFile {
            rank: self.rank,
            canonical: self.canonical.clone(),
            max_genus: self.max_genus,
            degree_cutoffs: self.degree_cutoffs.clone(),
            entries: file_entries(&self.entries),
            integrality_report: None,
        }
    }
}

impl BpsTable {
    /// Loads a BPS table; any integrality report in the file is
    /// discarded and recomputed from the entries.
    pub fn from_file(file: TableFile) -> Result<Self, TableError> {
        BpsTable::new(
            file.rank,
            file.max_genus,
            file.degree_cutoffs,
            raw_entries(file.entries)?,
        )
    }

    pub fn to_file(&self) -> TableFile {
        let report = self
            .integrality_report
            .iter()
            .map(|(genus, class)| TableEntry {
                genus: *genus,
                class: class.degrees().to_vec(),
                value: self.value_at(*genus, class),
            })
            .collect();
        TableFile {
            rank: self.rank,
            canonical: None,
            max_genus: self.max_genus,
            degree_cutoffs: self.degree_cutoffs.clone(),
            entries: file_entries(&self.entries),
            integrality_report: Some(report),
        }
    }
}

impl ETable {
    /// Loads an enumerative table; a canonical vector in the file is
    /// not part of the table and is read separately by callers that
    /// need it.
    pub fn from_file(file: TableFile) -> Result<Self, TableError> {
        ETable::new(
            file.rank,
            file.max_genus,
            file.degree_cutoffs,
            raw_entries(file.entries)?,
        )
    }

    pub fn to_file(&self, canonical: Option<Vec<i64>>) -> TableFile {
        TableFile {
            rank: self.rank,
            canonical,
            max_genus: self.max_genus,
            degree_cutoffs: self.degree_cutoffs.clone(),
            entries: file_entries(&self.entries),
            integrality_report: None,
        }
    }
}

/// Degree-1 Calabi-Yau contribution coefficients C_g(h, 1) for
/// 0 <= g <= max_genus, 0 <= h <= max_genus.
fn degree_one_coefficients(max_genus: u32) -> Vec<EvenSeries> {
    (0..=max_genus)
        .map(|g| contribution_series(GeometrySignature::calabi_yau(g), max_genus as usize))
        .collect()
}

/// All nonzero classes within the cutoffs, in increasing (total
/// degree, lexicographic) order.
pub(crate) fn class_grid(cutoffs: &[u32]) -> Vec<CurveClass> {
    let mut grid = Vec::new();
    let mut current = vec![0u32; cutoffs.len()];
    loop {
        if current.iter().any(|&b| b > 0) {
            grid.push(CurveClass(current.clone()));
        }
        let mut pos = cutoffs.len();
        loop {
            if pos == 0 {
                let mut sorted = grid;
                sorted.sort();
                return sorted;
            }
            pos -= 1;
            if current[pos] < cutoffs[pos] {
                current[pos] += 1;
                break;
            }
            current[pos] = 0;
        }
    }
}

/// Assembles the GW table generated by a BPS table through the
/// multiple-cover expansion: for each in-range `(g_D, beta)`,
///
/// ```text
/// N_beta^{g_D} = sum_{d beta' = beta} d^{2 g_D - 3}
///                sum_{g <= g_D} C_g(g_D - g, 1) n_{beta'}^g.
/// ```
///
/// Every input entry must lie within the requested cutoffs; an entry
/// outside them would be silently truncated away, so it is an error.
pub fn gv_forward(
    bps: &BpsTable,
    genus_cutoff: u32,
    degree_cutoffs: &[u32],
) -> Result<GwTable, TableError> {
    if degree_cutoffs.len() != bps.rank() {
        return Err(TableError::CutoffRankMismatch {
            found: degree_cutoffs.len(),
            expected: bps.rank(),
        });
    }
    if degree_cutoffs.contains(&0) {
        return Err(TableError::NonPositiveCutoff);
    }
    for ((genus, class), _) in bps.entries() {
        if *genus > genus_cutoff {
            return Err(TableError::GenusOutOfRange {
                genus: *genus,
                class: class.to_string(),
                max_genus: genus_cutoff,
            });
        }
        if !class.within(degree_cutoffs) {
            return Err(TableError::ClassOutOfRange {
                genus: *genus,
                class: class.to_string(),
            });
        }
    }

    let coeffs = degree_one_coefficients(genus_cutoff);
    let mut entries = Entries::new();
    for beta in class_grid(degree_cutoffs) {
        for g_domain in 0..=genus_cutoff {
            let mut total = Rational::zero();
            for (d, base_class) in beta.divisors() {
                let inner: Rational = (0..=g_domain)
                    .map(|g| {
                        let n = bps.value_at(g, &base_class);
                        if n.is_zero() {
                            Rational::zero()
                        } else {
                            coeffs[g as usize].coeff((g_domain - g) as usize) * &n
                        }
                    })
                    .sum();
                if !inner.is_zero() {
                    let scale = Rational::from_int(d as i64).pow(2 * g_domain as i64 - 3);
                    total = total + scale * inner;
                }
            }
            if !total.is_zero() {
                entries.insert((g_domain, beta.clone()), total);
            }
        }
    }
    Ok(GwTable {
        rank: bps.rank(),
        canonical: None,
        max_genus: genus_cutoff,
        degree_cutoffs: degree_cutoffs.to_vec(),
        entries,
    })
}

/// Solves the multiple-cover system for the BPS table generating the
/// given GW table, walking classes in increasing total degree and
/// genus; the diagonal coefficient is `C_g(0,1) = 1`. Entries outside
/// the declared cutoffs are treated as zero. The integrality report of
/// the result is the scientific output: it lists every extracted value
/// that fails to be an integer.
pub fn gv_invert(gw: &GwTable) -> BpsTable {
    let coeffs = degree_one_coefficients(gw.max_genus());
    let mut solved = Entries::new();
    let value_of = |entries: &Entries, genus: u32, class: &CurveClass| -> Rational {
        entries
            .get(&(genus, class.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    };
    for beta in class_grid(gw.degree_cutoffs()) {
        for g_domain in 0..=gw.max_genus() {
            let mut value = gw.value_at(g_domain, &beta);
            // Degree-1 covers of lower-genus states on the same class.
            for g in 0..g_domain {
                let n = value_of(&solved, g, &beta);
                if !n.is_zero() {
                    value = value - coeffs[g as usize].coeff((g_domain - g) as usize) * n;
                }
            }
            // Covers of degree d >= 2 of smaller classes.
            for (d, base_class) in beta.divisors() {
                if d == 1 {
                    continue;
                }
                let inner: Rational = (0..=g_domain)
                    .map(|g| {
                        let n = value_of(&solved, g, &base_class);
                        if n.is_zero() {
                            Rational::zero()
                        } else {
                            coeffs[g as usize].coeff((g_domain - g) as usize) * &n
                        }
                    })
                    .sum();
                if !inner.is_zero() {
                    let scale = Rational::from_int(d as i64).pow(2 * g_domain as i64 - 3);
                    value = value - scale * inner;
                }
            }
            if !value.is_zero() {
                solved.insert((g_domain, beta.clone()), value);
            }
        }
    }
    BpsTable::from_validated(
        gw.rank(),
        gw.max_genus(),
        gw.degree_cutoffs().to_vec(),
        solved,
    )
}

fn correction_coefficients(
    cache: &mut BTreeMap<i64, EvenSeries>,
    anti_k: i64,
    genus: u32,
    max_genus: u32,
) -> &EvenSeries {
    let exponent = 2 * genus as i64 - 2 + anti_k;
    cache
        .entry(exponent)
        .or_insert_with(|| EvenSeries::sine_ratio(max_genus as usize).int_pow(exponent))
}

/// Applies the enumerative correction: for each class beta with
/// anticanonical degree `k = c . beta`,
///
/// ```text
/// N_beta^{g_D} = sum_{g <= g_D} C_g(g_D - g, X, beta) E_beta^g,
/// ```
///
/// with coefficients from the degree-1 contribution series at
/// exponent `2g - 2 + k`. Requires `c . beta >= 0` on the support.
pub fn enumerative_forward(e: &ETable, canonical: &[i64]) -> Result<GwTable, TableError> {
    if canonical.len() != e.rank() {
        return Err(TableError::CanonicalRankMismatch {
            found: canonical.len(),
            expected: e.rank(),
        });
    }
    let max_genus = e.max_genus();
    let mut cache = BTreeMap::new();
    let mut entries = Entries::new();
    for beta in e.support_classes() {
        let anti_k = beta.pairing(canonical);
        if anti_k < 0 {
            return Err(TableError::NegativePairing {
                class: beta.to_string(),
                pairing: anti_k,
            });
        }
        for g_domain in 0..=max_genus {
            let mut total = Rational::zero();
            for g in 0..=g_domain {
                let count = e.value_at(g, &beta);
                if count.is_zero() {
                    continue;
                }
                let series = correction_coefficients(&mut cache, anti_k, g, max_genus);
                total = total + series.coeff((g_domain - g) as usize) * count;
            }
            if !total.is_zero() {
                entries.insert((g_domain, beta.clone()), total);
            }
        }
    }
    Ok(GwTable {
        rank: e.rank(),
        canonical: Some(canonical.to_vec()),
        max_genus,
        degree_cutoffs: e.degree_cutoffs().to_vec(),
        entries,
    })
}

/// Inverts the enumerative correction down each genus column. The
/// system is unitriangular (diagonal `C_g(0, X, beta) = 1`), so the
/// solve is exact; the canonical vector is read from the table and its
/// absence is an error.
pub fn enumerative_solve(gw: &GwTable) -> Result<ETable, TableError> {
    let canonical = gw.canonical().ok_or(TableError::MissingCanonical)?;
    let max_genus = gw.max_genus();
    let mut cache = BTreeMap::new();
    let mut solved = Entries::new();
    for beta in gw.support_classes() {
        let anti_k = beta.pairing(canonical);
        let mut column: Vec<Rational> = Vec::with_capacity(max_genus as usize + 1);
        for g_domain in 0..=max_genus {
            let mut value = gw.value_at(g_domain, &beta);
            for g in 0..g_domain {
                if column[g as usize].is_zero() {
                    continue;
                }
                let series = correction_coefficients(&mut cache, anti_k, g, max_genus);
                value = value - series.coeff((g_domain - g) as usize) * &column[g as usize];
            }
            column.push(value);
        }
        for (g, value) in column.into_iter().enumerate() {
            if !value.is_zero() {
                solved.insert((g as u32, beta.clone()), value);
            }
        }
    }
    Ok(ETable {
        rank: gw.rank(),
        max_genus,
        degree_cutoffs: gw.degree_cutoffs().to_vec(),
        entries: solved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn class(degrees: &[u32]) -> CurveClass {
        CurveClass::new(degrees.to_vec()).unwrap()
    }

    fn single_rational_state(cutoff: u32) -> BpsTable {
        BpsTable::new(1, 0, vec![cutoff], vec![(0, class(&[1]), Rational::one())]).unwrap()
    }

    #[test]
    fn class_ordering_and_divisors() {
        assert!(class(&[2]) < class(&[3]));
        assert!(class(&[1, 2]) < class(&[2, 2]));
        assert!(class(&[0, 3]) < class(&[1, 2]));

        let divisors = class(&[6]).divisors();
        assert_eq!(
            divisors,
            vec![
                (1, class(&[6])),
                (2, class(&[3])),
                (3, class(&[2])),
                (6, class(&[1])),
            ]
        );
        let divisors = class(&[4, 6]).divisors();
        assert_eq!(divisors, vec![(1, class(&[4, 6])), (2, class(&[2, 3]))]);
        assert_eq!(class(&[5, 0]).divisors().len(), 2);
    }

    #[test]
    fn zero_class_is_rejected() {
        assert_eq!(CurveClass::new(vec![0, 0]), Err(TableError::ZeroClass));
    }

    #[test]
    fn aspinwall_morrison_through_the_potential() {
        let bps = single_rational_state(5);
        let gw = gv_forward(&bps, 1, &[5]).unwrap();
        for d in 1u32..=5 {
            assert_eq!(
                gw.value_at(0, &class(&[d])),
                rat(1, (d as i64).pow(3)),
                "genus 0, degree {d}"
            );
            assert_eq!(
                gw.value_at(1, &class(&[d])),
                rat(1, 12 * d as i64),
                "genus 1, degree {d}"
            );
        }
    }

    #[test]
    fn elliptic_state_contributes_reciprocal_degree() {
        let bps = BpsTable::new(1, 1, vec![6], vec![(1, class(&[1]), Rational::one())]).unwrap();
        let gw = gv_forward(&bps, 1, &[6]).unwrap();
        for d in 1u32..=6 {
            assert_eq!(gw.value_at(1, &class(&[d])), rat(1, d as i64));
            assert_eq!(gw.value_at(0, &class(&[d])), Rational::zero());
        }
    }

    #[test]
    fn invert_flags_the_non_integral_counterexample() {
        let gw = GwTable::new(
            1,
            None,
            0,
            vec![2],
            vec![(0, class(&[1]), Rational::one())],
        )
        .unwrap();
        let bps = gv_invert(&gw);
        assert_eq!(bps.value_at(0, &class(&[1])), Rational::one());
        assert_eq!(bps.value_at(0, &class(&[2])), rat(-1, 8));
        assert_eq!(bps.integrality_report(), &[(0, class(&[2]))]);
        assert!(!bps.is_integral());
    }

    #[test]
    fn round_trip_hand_built_table() {
        let bps = BpsTable::new(
            2,
            2,
            vec![4, 4],
            vec![
                (0, class(&[1, 0]), rat(3, 1)),
                (0, class(&[1, 1]), rat(-2, 1)),
                (1, class(&[0, 2]), rat(5, 1)),
                (2, class(&[2, 2]), rat(7, 1)),
            ],
        )
        .unwrap();
        let gw = gv_forward(&bps, 2, &[4, 4]).unwrap();
        let recovered = gv_invert(&gw);
        assert_eq!(recovered, bps);
        assert!(recovered.is_integral());
    }

    #[test]
    fn zero_table_round_trips_to_zero() {
        let bps = BpsTable::new(1, 2, vec![4], vec![]).unwrap();
        let gw = gv_forward(&bps, 2, &[4]).unwrap();
        assert!(gw.is_empty());
        let back = gv_invert(&gw);
        assert!(back.is_empty());
        assert!(back.is_integral());
    }

    #[test]
    fn forward_dependency_pattern_is_triangular() {
        // A single state at (g0, beta0) feeds only cells with
        // g_D >= g0 and beta a multiple of beta0.
        let bps = BpsTable::new(1, 2, vec![6], vec![(1, class(&[2]), rat(1, 1))]).unwrap();
        let gw = gv_forward(&bps, 3, &[6]).unwrap();
        for ((genus, beta), _) in gw.entries() {
            assert!(*genus >= 1);
            assert!(beta.degrees()[0] % 2 == 0);
        }
        assert!(!gw.is_empty());
    }

    #[test]
    fn forward_rejects_entries_outside_requested_cutoffs() {
        let bps = single_rational_state(5);
        let err = gv_forward(&bps, 1, &[5, 5]).unwrap_err();
        assert!(matches!(err, TableError::CutoffRankMismatch { .. }));

        let wide = BpsTable::new(1, 0, vec![5], vec![(0, class(&[4]), rat(1, 1))]).unwrap();
        let err = gv_forward(&wide, 2, &[3]).unwrap_err();
        assert!(matches!(err, TableError::ClassOutOfRange { .. }));

        let high = BpsTable::new(1, 3, vec![2], vec![(3, class(&[1]), rat(1, 1))]).unwrap();
        let err = gv_forward(&high, 1, &[2]).unwrap_err();
        assert!(matches!(err, TableError::GenusOutOfRange { .. }));

        let err = gv_forward(&single_rational_state(2), 0, &[0]).unwrap_err();
        assert_eq!(err, TableError::NonPositiveCutoff);
    }

    #[test]
    fn projective_space_correction_columns() {
        // Rank 1 with canonical vector [4]: anti_k = 4d.
        for d in 1u32..=5 {
            let d_i = d as i64;
            let e0 = ETable::new(1, 2, vec![5], vec![(0, class(&[d]), rat(1, 1))]).unwrap();
            let gw = enumerative_forward(&e0, &[4]).unwrap();
            assert_eq!(gw.value_at(0, &class(&[d])), rat(1, 1));
            assert_eq!(gw.value_at(1, &class(&[d])), rat(1 - 2 * d_i, 12));
            assert_eq!(
                gw.value_at(2, &class(&[d])),
                rat(3 - 11 * d_i + 10 * d_i * d_i, 720)
            );

            let e1 = ETable::new(1, 2, vec![5], vec![(1, class(&[d]), rat(1, 1))]).unwrap();
            let gw = enumerative_forward(&e1, &[4]).unwrap();
            assert_eq!(gw.value_at(1, &class(&[d])), rat(1, 1));
            assert_eq!(gw.value_at(2, &class(&[d])), rat(-d_i, 6));
            assert_eq!(gw.value_at(0, &class(&[d])), Rational::zero());
        }
    }

    #[test]
    fn calabi_yau_specialization_of_the_correction() {
        // With the zero canonical vector the genus 1 coefficient is
        // C_0(1,1) = 1/12.
        let e = ETable::new(1, 1, vec![3], vec![(0, class(&[2]), rat(1, 1))]).unwrap();
        let gw = enumerative_forward(&e, &[0]).unwrap();
        assert_eq!(gw.value_at(1, &class(&[2])), rat(1, 12));
    }

    #[test]
    fn enumerative_round_trip_and_missing_canonical() {
        let e = ETable::new(
            1,
            2,
            vec![4],
            vec![
                (0, class(&[1]), rat(2, 1)),
                (1, class(&[2]), rat(-3, 1)),
                (2, class(&[2]), rat(11, 1)),
            ],
        )
        .unwrap();
        let gw = enumerative_forward(&e, &[4]).unwrap();
        assert_eq!(gw.canonical(), Some(&[4][..]));
        let back = enumerative_solve(&gw).unwrap();
        assert_eq!(back, e);

        let gw_without = GwTable::new(1, None, 1, vec![2], vec![]).unwrap();
        assert_eq!(
            enumerative_solve(&gw_without).unwrap_err(),
            TableError::MissingCanonical
        );
    }

    #[test]
    fn enumerative_forward_rejects_negative_pairing() {
        let e = ETable::new(1, 1, vec![3], vec![(0, class(&[2]), rat(1, 1))]).unwrap();
        let err = enumerative_forward(&e, &[-1]).unwrap_err();
        assert_eq!(
            err,
            TableError::NegativePairing {
                class: "2".to_owned(),
                pairing: -2
            }
        );
    }

    #[test]
    fn validation_rejects_malformed_tables() {
        let dup = GwTable::new(
            1,
            None,
            1,
            vec![3],
            vec![
                (0, class(&[2]), rat(1, 1)),
                (0, class(&[2]), rat(2, 1)),
            ],
        );
        assert_eq!(
            dup.unwrap_err(),
            TableError::DuplicateEntry {
                genus: 0,
                class: "2".to_owned()
            }
        );

        let bad_rank = GwTable::new(2, None, 1, vec![3, 3], vec![(0, class(&[2]), rat(1, 1))]);
        assert!(matches!(bad_rank.unwrap_err(), TableError::RankMismatch { .. }));

        let out_of_range = GwTable::new(1, None, 1, vec![3], vec![(0, class(&[4]), rat(1, 1))]);
        assert!(matches!(
            out_of_range.unwrap_err(),
            TableError::ClassOutOfRange { .. }
        ));

        let genus_high = GwTable::new(1, None, 1, vec![3], vec![(2, class(&[1]), rat(1, 1))]);
        assert!(matches!(
            genus_high.unwrap_err(),
            TableError::GenusOutOfRange { .. }
        ));

        let neg_pairing = GwTable::new(1, Some(vec![-2]), 1, vec![3], vec![(0, class(&[1]), rat(1, 1))]);
        assert!(matches!(
            neg_pairing.unwrap_err(),
            TableError::NegativePairing { .. }
        ));

        let cutoff_rank = GwTable::new(2, None, 1, vec![3], vec![]);
        assert!(matches!(
            cutoff_rank.unwrap_err(),
            TableError::CutoffRankMismatch { .. }
        ));
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let bps = BpsTable::new(
            1,
            1,
            vec![3],
            vec![
                (0, class(&[1]), rat(1, 1)),
                (1, class(&[2]), rat(-1, 8)),
            ],
        )
        .unwrap();
        let text = bps.to_file().to_json();
        let reloaded = BpsTable::from_file(TableFile::from_json(&text).unwrap()).unwrap();
        assert_eq!(reloaded, bps);
        assert_eq!(reloaded.to_file().to_json(), text);
        assert_eq!(reloaded.integrality_report(), &[(1, class(&[2]))]);
    }

    #[test]
    fn json_load_reports_duplicates() {
        let text = r#"{
            "rank": 1, "max_genus": 0, "degree_cutoffs": [3],
            "entries": [
                {"genus": 0, "class": [1], "value": "1"},
                {"genus": 0, "class": [1], "value": "2"}
            ]
        }"#;
        let file = TableFile::from_json(text).unwrap();
        let err = GwTable::from_file(file).unwrap_err();
        assert_eq!(err.to_string(), "duplicate entry for genus 0, class 1");
    }

    #[test]
    fn zero_valued_entries_are_dropped_on_load() {
        let gw = GwTable::new(
            1,
            None,
            0,
            vec![2],
            vec![(0, class(&[1]), rat(0, 1))],
        )
        .unwrap();
        assert!(gw.is_empty());
    }
}
