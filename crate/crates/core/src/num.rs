//! Small modular-arithmetic helpers shared across the crate.
//!
//! All group and scalar arithmetic at desk scale fits in `u64` with `u128`
//! intermediates, so nothing here needs a bignum dependency.

/// `a * b mod m` without overflow.
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `a + b mod m` without overflow.
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

/// `base^exp mod m` by binary exponentiation. `m` must be nonzero.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Modular inverse of `a` mod `m`, when `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(m as i128) as u64)
}

/// Reduce a signed value into `[0, m)`.
pub fn reduce_signed(v: i128, m: u64) -> u64 {
    v.rem_euclid(m as i128) as u64
}

/// `p^e`, panicking on overflow (exponents here are desk-scale).
pub fn p_pow(p: u64, e: u32) -> u64 {
    p.checked_pow(e).expect("prime power overflows u64")
}

/// Largest `j` with `p^j | n` (for `n > 0`), capped at `cap`.
pub fn valuation_capped(n: u64, p: u64, cap: u32) -> u32 {
    let mut n = n;
    let mut v = 0;
    while v < cap && n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Deterministic Miller-Rabin, valid for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factors of `n` (without multiplicity), by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Stable 64-bit hash of a label, for deriving per-task PRNG seeds.
///
/// FNV-1a followed by a splitmix finalizer; deterministic across platforms.
pub fn derive_seed(master: u64, label: &str) -> u64 {
    let mut h = 0xcbf29ce484222325u64 ^ master;
    for b in label.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    let mut z = h.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trips() {
        for m in [2u64, 9, 27, 64, 729, 1_000_000_007] {
            for a in 1..50u64 {
                if gcd(a, m) == 1 {
                    let inv = inv_mod(a, m).unwrap();
                    assert_eq!(mul_mod(a, inv, m), 1 % m);
                }
            }
        }
        assert_eq!(inv_mod(3, 9), None);
    }

    #[test]
    fn small_primality() {
        let primes: Vec<u64> = (2..100).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                79, 83, 89, 97
            ]
        );
        assert!(is_prime(2147483659)); // first prime above 2^31
        assert!(!is_prime(2147483661));
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation_capped(24, 2, 10), 3);
        assert_eq!(valuation_capped(81, 3, 10), 4);
        assert_eq!(valuation_capped(81, 3, 2), 2);
    }
}
