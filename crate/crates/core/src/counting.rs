//! Closed-form and brute-force class cardinalities.
//!
//! Closed forms use exact big-integer arithmetic throughout: ordered Bell
//! numbers and multinomials leave the 64-bit range around `m = 20`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::class::{for_each_member, validate_spec, ClassSpec};
use crate::error::{Error, Result};

/// Largest number of password classes for which the inclusion-exclusion sum
/// over all class subsets is attempted.
const MAX_PASSWORD_CLASSES: usize = 24;

/// Both cardinality oracles for one class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub class: ClassSpec,
    /// `None` when no closed form is available for this class.
    pub closed_form: Option<BigUint>,
    /// `None` when `n^m` exceeds the budget and brute force was skipped.
    pub brute_force: Option<u64>,
}

impl CountReport {
    /// True unless both counts are present and disagree.
    pub fn consistent(&self) -> bool {
        match (&self.closed_form, self.brute_force) {
            (Some(c), Some(b)) => *c == BigUint::from(b),
            _ => true,
        }
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Falling factorial `n (n-1) ... (n-k+1)`.
pub fn falling_factorial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    ((n - k + 1)..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Number of surjections from a `k`-set onto an `n`-set, by inclusion-exclusion.
pub fn surjections(k: u64, n: u64) -> BigUint {
    let mut total = BigInt::zero();
    for j in 0..=n {
        let term = BigInt::from(binomial(n, j)) * BigInt::from(BigUint::from(n - j).pow(k as u32));
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total.to_biguint().expect("surjection count is non-negative")
}

/// Ordered Bell numbers `a(0..=m)` via `a(m) = sum_{j=1..m} C(m,j) a(m-j)`.
pub fn ordered_bell_numbers(m: u64) -> Vec<BigUint> {
    let mut a = vec![BigUint::one()];
    for i in 1..=m {
        let next = (1..=i).fold(BigUint::zero(), |acc, j| {
            acc + binomial(i, j) * &a[(i - j) as usize]
        });
        a.push(next);
    }
    a
}

/// Closed-form cardinality, or `None` where no formula is provided
/// (s-inequitable words, and passwords with very many classes).
pub fn count_closed_form(spec: &ClassSpec) -> Result<Option<BigUint>> {
    use ClassSpec::*;
    let big = |v: u32| v as u64;
    Ok(Some(match spec {
        Plain { m, n } => BigUint::from(*n).pow(*m),
        Injection { k, n } => falling_factorial(big(*n), big(*k)),
        Surjection { k, n } => surjections(big(*k), big(*n)),
        NonBijection { n } => BigUint::from(*n).pow(*n) - factorial(big(*n)),
        AlmostOnto { n } => BigUint::from(*n) * surjections(big(*n), big(*n) - 1),
        Equitable { m, n } => {
            let (k, r) = (big(m % n), big(m / n));
            let denom = factorial(r + 1).pow(k as u32) * factorial(r).pow((big(*n) - k) as u32);
            binomial(big(*n), k) * factorial(big(*m)) / denom
        }
        Ranking { m } => ordered_bell_numbers(big(*m)).pop().expect("non-empty"),
        Password { m, n, classes } => {
            if classes.len() > MAX_PASSWORD_CLASSES {
                return Ok(None);
            }
            let q = classes.len();
            let mut total = BigInt::zero();
            let mut union = vec![false; *n as usize];
            for mask in 0u32..(1u32 << q) {
                union.iter_mut().for_each(|u| *u = false);
                for (i, class) in classes.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        for &l in class {
                            union[l as usize - 1] = true;
                        }
                    }
                }
                let outside = union.iter().filter(|&&u| !u).count() as u32;
                let term = BigInt::from(BigUint::from(outside).pow(*m));
                if mask.count_ones() % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            if total.is_negative() {
                return Err(Error::InvalidSpec("negative inclusion-exclusion total".into()));
            }
            total.to_biguint().expect("checked sign")
        }
        SInequitable { .. } => return Ok(None),
    }))
}

/// Counts members by filtering all `n^m` candidates.
pub fn count_brute_force(spec: &ClassSpec, budget: u64) -> Result<u64> {
    let mut count = 0u64;
    for_each_member(spec, budget, |_| count += 1)?;
    Ok(count)
}

/// Runs both oracles. Brute force is skipped (not failed) when over budget.
pub fn count_report(spec: &ClassSpec, budget: u64) -> Result<CountReport> {
    let norm = validate_spec(spec)?;
    let closed_form = count_closed_form(&norm.spec)?;
    let brute_force = match count_brute_force(&norm.spec, budget) {
        Ok(c) => Some(c),
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(CountReport { class: norm.spec, closed_form, brute_force })
}

/// Convenience for callers that know the count fits in 64 bits.
pub fn closed_form_u64(spec: &ClassSpec) -> Result<Option<u64>> {
    Ok(count_closed_form(spec)?.and_then(|c| c.to_u64()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::DEFAULT_BUDGET;

    fn closed(spec: ClassSpec) -> u64 {
        closed_form_u64(&spec).unwrap().unwrap()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed(ClassSpec::Ranking { m: 4 }), 75);
        assert_eq!(closed(ClassSpec::NonBijection { n: 3 }), 21);
        assert_eq!(closed(ClassSpec::Plain { m: 3, n: 2 }), 8);
        assert_eq!(closed(ClassSpec::Equitable { m: 7, n: 3 }), 630);
        assert_eq!(closed(ClassSpec::Surjection { k: 4, n: 3 }), 36);
        assert_eq!(
            closed(ClassSpec::Password { m: 4, n: 4, classes: vec![vec![1, 2], vec![3]] }),
            160
        );
        assert_eq!(count_closed_form(&ClassSpec::SInequitable { m: 7, n: 3, s: 2 }).unwrap(), None);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(count_brute_force(&ClassSpec::Ranking { m: 3 }, DEFAULT_BUDGET).unwrap(), 13);
        assert_eq!(
            count_brute_force(&ClassSpec::Surjection { k: 4, n: 3 }, DEFAULT_BUDGET).unwrap(),
            36
        );
        assert_eq!(
            count_brute_force(&ClassSpec::Equitable { m: 7, n: 3 }, DEFAULT_BUDGET).unwrap(),
            630
        );
    }

    #[test]
    fn ordered_bell_prefix() {
        let a: Vec<u64> = ordered_bell_numbers(8).iter().map(|x| x.to_u64().unwrap()).collect();
        assert_eq!(a, vec![1, 1, 3, 13, 75, 541, 4683, 47293, 545835]);
    }

    #[test]
    fn big_counts_do_not_wrap() {
        // a(20) is about 2.7e21, beyond u64
        let a20 = ordered_bell_numbers(20).pop().unwrap();
        assert!(a20.to_u64().is_none());
        assert_eq!(a20.to_string(), "2677687796244384203115");
    }

    #[test]
    fn report_skips_brute_force_over_budget() {
        let r = count_report(&ClassSpec::Plain { m: 30, n: 2 }, 1000).unwrap();
        assert_eq!(r.brute_force, None);
        assert_eq!(r.closed_form, Some(BigUint::from(1u64 << 30)));
        assert!(r.consistent());
    }
}
