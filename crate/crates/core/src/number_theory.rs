//! Number-theoretic scalars consumed by the contribution formulas:
//! Bernoulli numbers, divisor sums, factorials and double factorials.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;

use crate::rational::Rational;

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Double factorial n!! = n(n-2)...1 of an odd positive integer.
pub fn double_factorial(n: u64) -> BigInt {
    assert!(n % 2 == 1, "double_factorial requires an odd argument");
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

// Memoized prefix of the Bernoulli sequence, grown on demand. The lock
// keeps the table safe to share across threads.
static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number B_n in the convention B_1 = -1/2, computed by the
/// recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0.
///
/// Only |B_{2q}| is consumed downstream, so the sign convention at n = 1
/// is internal; it matches the expansion of log((t/2)/sin(t/2)).
pub fn bernoulli(n: u32) -> Rational {
    let n = n as usize;
    let mut table = BERNOULLI.lock().expect("bernoulli table poisoned");
    while table.len() <= n {
        let m = table.len();
        if m == 0 {
            table.push(Rational::one());
            continue;
        }
        let sum: Rational = (0..m)
            .map(|k| Rational::from_int(binomial(m as u64 + 1, k as u64)) * &table[k])
            .sum();
        table.push(-sum / Rational::from_int(m as i64 + 1));
    }
    table[n].clone()
}

/// Sum of the positive divisors of d, returned as an integer-valued
/// rational. Rejects d = 0.
pub fn divisor_sum(d: u64) -> Rational {
    assert!(d >= 1, "divisor_sum requires d >= 1");
    let mut sum: u128 = 0;
    let mut i = 1u64;
    while i * i <= d {
        if d.is_multiple_of(i) {
            sum += i as u128;
            let j = d / i;
            if j != i {
                sum += j as u128;
            }
        }
        i += 1;
    }
    Rational::from_int(BigInt::from(sum))
}
