//! Integer partitions and the automorphism factors entering the
//! partition-sum formulas.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::number_theory::factorial;

/// A partition of a nonnegative integer, parts in weakly decreasing
/// order. The empty partition is the unique partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are
    /// rejected.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts l.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Multiplicity m_v of each part value v.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut mult = BTreeMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0) += 1;
        }
        mult
    }

    /// Order of the stabilizer of the tuple under the permutation
    /// action: |Aut| = prod_v (m_v)!.
    pub fn aut_order(&self) -> BigInt {
        self.multiplicities()
            .values()
            .fold(BigInt::one(), |acc, &m| acc * factorial(m as u64))
    }
}

/// All partitions of `h`, each exactly once, in lexicographically
/// decreasing order; `h = 0` yields the single empty partition.
pub fn enumerate(h: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(h, h, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let mut part = remaining.min(max_part);
    while part >= 1 {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
        part -= 1;
    }
}
