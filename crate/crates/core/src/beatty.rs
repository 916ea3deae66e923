//! Golden-ratio floors in pure integer arithmetic.
//!
//! φ is never materialized as a number. Since `√5` is irrational,
//! `⌊kφ⌋ = ⌊(k + k√5) / 2⌋ = (k + ⌊√(5k²)⌋) / 2`, and every other quantity
//! here (`⌊kφ²⌋`, `⌊m/φ⌋`) reduces to that one floor.

use crate::{Error, Result};

/// Largest supported sequence index (and pile size). `5·k²` then stays far
/// inside `u128`.
pub const INDEX_CAP: u64 = 1 << 40;

// floor_phi stays exact up to here; 5·k² < 2^128 needs k < 2^62.6.
const INTERNAL_LIMIT: u64 = 1 << 62;

fn check_index(what: &'static str, value: u64) -> Result<()> {
    if value > INDEX_CAP {
        return Err(Error::OutOfRange {
            what,
            value,
            cap: INDEX_CAP,
        });
    }
    Ok(())
}

/// Integer square root: the unique `s` with `s² ≤ n < (s+1)²`.
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    if let Ok(small) = u64::try_from(n) {
        return isqrt_u64(small) as u128;
    }
    // Newton from above: 2^⌈bits/2⌉ ≥ √n, iterates decrease monotonically to ⌊√n⌋.
    let bits = 128 - n.leading_zeros();
    let mut s: u128 = 1 << bits.div_ceil(2);
    loop {
        let next = (s + n / s) >> 1;
        if next >= s {
            break;
        }
        s = next;
    }
    while s * s > n {
        s -= 1;
    }
    s
}

fn isqrt_u64(n: u64) -> u64 {
    let bits = 64 - n.leading_zeros();
    let mut s: u64 = 1 << bits.div_ceil(2);
    loop {
        // s ≤ 2^32 and n/s < 2^63 here, so the sum cannot overflow
        let next = (s + n / s) >> 1;
        if next >= s {
            break;
        }
        s = next;
    }
    while s.checked_mul(s).is_none_or(|sq| sq > n) {
        s -= 1;
    }
    s
}

/// `⌊kφ⌋` without range checks. Panics if `k` is so large that `5k²`
/// overflows `u128`; public callers are capped well below that.
pub(crate) fn floor_phi(k: u64) -> u64 {
    assert!(k < INTERNAL_LIMIT, "golden-ratio floor index {k} overflows");
    let k = k as u128;
    ((k + isqrt(5 * k * k)) / 2) as u64
}

/// `⌊m/φ⌋ = ⌊mφ⌋ − m`, unchecked.
pub(crate) fn floor_inv_phi(m: u64) -> u64 {
    floor_phi(m) - m
}

/// `k`-th lower Wythoff number `⌊kφ⌋`. Zero only for `k = 0`.
pub fn lower_wythoff(k: u64) -> Result<u64> {
    check_index("index", k)?;
    Ok(floor_phi(k))
}

/// `k`-th upper Wythoff number `⌊kφ²⌋ = ⌊kφ⌋ + k`.
pub fn upper_wythoff(k: u64) -> Result<u64> {
    check_index("index", k)?;
    Ok(floor_phi(k) + k)
}

/// `a_m = ⌊m/φ⌋`: the count of positive lower Wythoff numbers below `m`,
/// i.e. the unique `a` with `⌊aφ⌋ < m ≤ ⌊(a+1)φ⌋`.
pub fn a_of_m(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    check_index("m", m)?;
    Ok(floor_inv_phi(m))
}

/// Recovers `k` with `⌊kφ⌋ = n`, or `None` when `n` is not a lower Wythoff
/// number (every positive `n` is then an upper one).
///
/// The candidate `⌊(n+1)/φ⌋` is confirmed by evaluating it forward.
///
/// # Panics
///
/// If `n` exceeds [`INDEX_CAP`].
pub fn lower_wythoff_inverse(n: u64) -> Option<u64> {
    assert!(n <= INDEX_CAP, "pile size {n} exceeds INDEX_CAP");
    let k = floor_inv_phi(n + 1);
    (floor_phi(k) == n).then_some(k)
}

/// Recovers `k ≥ 1` with `⌊kφ⌋ + k = n`, or `None`.
///
/// # Panics
///
/// If `n` exceeds [`INDEX_CAP`].
pub fn upper_wythoff_inverse(n: u64) -> Option<u64> {
    assert!(n <= INDEX_CAP, "pile size {n} exceeds INDEX_CAP");
    if n == 0 {
        return None;
    }
    // ⌊kφ²⌋ = n  ⇒  k ≈ n/φ² = n − n/φ; check the candidate and its neighbour.
    let guess = n - floor_inv_phi(n);
    [guess.saturating_sub(1), guess]
        .into_iter()
        .find(|&k| k >= 1 && floor_phi(k) + k == n)
}
