//! Small numeric helpers and the order-cap policy.

use crate::bits::MAX_ORDER;

/// Environment variable that overrides both order caps (group construction
/// and full-capacity search). Clamped to [`MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "TPPFORGE_MAX_ORDER";

/// Default cap for full (all-subsets) capacity searches.
pub const DEFAULT_FULL_SEARCH_CAP: usize = 32;

fn env_cap() -> Option<usize> {
    std::env::var(MAX_ORDER_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|v| v.clamp(1, MAX_ORDER))
}

/// Cap on the order of any group we construct or enumerate subgroups for.
pub fn order_cap() -> usize {
    env_cap().unwrap_or(MAX_ORDER)
}

/// Cap on the order of groups eligible for a full capacity search.
pub fn full_search_cap() -> usize {
    env_cap().unwrap_or(DEFAULT_FULL_SEARCH_CAP).min(order_cap())
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn pow_mod(base: usize, exp: usize, modulus: usize) -> usize {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1usize;
    let mut b = base % modulus;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        e >>= 1;
    }
    result
}
