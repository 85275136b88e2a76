//! Closed forms for the index of stars, paths, cycles and complete graphs.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Family;

/// Number of partial symmetries of `K_n`, the empty one included:
/// `Σ_{i=0..n} C(n,i)² · i!`.
pub fn psin_complete_formula(n: u64) -> BigUint {
    let mut total = BigUint::zero();
    let mut binom = BigUint::one();
    let mut fact = BigUint::one();
    for i in 0..=n {
        if i > 0 {
            binom = binom * (n - i + 1) / i;
            fact *= i;
        }
        total += &binom * &binom * &fact;
    }
    total
}

/// `copsi(K_n)`: every non-empty partial symmetry of `K_n` is connected.
pub fn copsi_complete_formula(n: u64) -> BigUint {
    psin_complete_formula(n) - 1u32
}

/// `2n(n+1)`, the singleton-plus-edge surplus of `K_{1,n}` over `K_n`.
pub fn star_linear_summand(n: u64) -> BigUint {
    BigUint::from(2 * n) * (n + 1)
}

/// `copsi(K_{1,n}) = 2n(n+1) + psin(K_n)`.
pub fn star_formula(n: u64) -> BigUint {
    star_linear_summand(n) + psin_complete_formula(n)
}

/// `copsi(P_m) = m(2m² + 1)/3`, the octahedral numbers.
pub fn path_formula(m: u64) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::OutOfBounds {
            what: "path order",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    let m = BigUint::from(m);
    let numerator = &m * (&m * &m * 2u32 + 1u32);
    assert!(
        (&numerator % 3u32).is_zero(),
        "m(2m^2+1) not divisible by 3"
    );
    Ok(numerator / 3u32)
}

/// `copsi(C_m) = m(2m² − 3m + 2)` for `m ≥ 3`.
pub fn cycle_formula(m: u64) -> Result<BigUint> {
    if m < 3 {
        return Err(Error::OutOfBounds {
            what: "cycle order",
            value: m as usize,
            min: 3,
            max: usize::MAX,
        });
    }
    let m = BigUint::from(m);
    // 2m² + 2 - 3m, kept non-negative throughout
    Ok(&m * (&m * &m * 2u32 + 2u32 - &m * 3u32))
}

/// Closed-form index of `family` at `param` (rays for stars, order
/// otherwise).
pub fn family_formula(family: Family, param: u64) -> Result<BigUint> {
    match family {
        Family::Star => Ok(star_formula(param)),
        Family::Path => path_formula(param),
        Family::Cycle => cycle_formula(param),
        Family::Complete => Ok(copsi_complete_formula(param)),
    }
}

/// The first `count` parameters of a family, starting at its smallest
/// meaningful one: stars from 0 rays, paths and complete graphs from order
/// 1, cycles from order 3.
pub fn sequence_params(family: Family, count: usize) -> impl Iterator<Item = u64> {
    let start = match family {
        Family::Star => 0,
        Family::Path | Family::Complete => 1,
        Family::Cycle => 3,
    };
    (start..).take(count)
}

pub fn sequence(family: Family, count: usize) -> Vec<BigUint> {
    sequence_params(family, count)
        .map(|p| family_formula(family, p).expect("sequence parameters are in range"))
        .collect()
}

/// `(2n(n+1), psin(K_n))` for `n = 0..count`.
pub fn star_summands(count: usize) -> Vec<(BigUint, BigUint)> {
    (0..count as u64)
        .map(|n| (star_linear_summand(n), psin_complete_formula(n)))
        .collect()
}
