//! Roots of unity as exact exponent arithmetic, plus realizations of the
//! cyclic group mu_N inside prime fields q with N | q - 1.
//!
//! A [`Scalar`] is the abstract root zeta_N^exp; it never touches floating
//! point. An [`FqContext`] pins a concrete prime field and an element omega
//! of multiplicative order exactly N, so that scalar identities can be
//! checked by exact evaluation (over three independent primes for vector
//! identities).

use crate::num::{gcd, inv_mod, is_prime, mul_mod, pow_mod, prime_factors, reduce_signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("{divisor} does not divide the modulus {modulus}")]
    BadDivisor { divisor: u64, modulus: u64 },
    #[error("prime scan cap exceeded for modulus {0}")]
    ScanCapExceeded(u64),
}

/// The root of unity zeta_N^exp, with `exp` reduced into `[0, N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Scalar {
    pub exp: u64,
    pub modulus: u64,
}

impl Scalar {
    pub fn new(exp: i128, modulus: u64) -> Self {
        Scalar {
            exp: reduce_signed(exp, modulus),
            modulus,
        }
    }

    pub fn one(modulus: u64) -> Self {
        Scalar { exp: 0, modulus }
    }

    /// The primitive root zeta_N itself.
    pub fn primitive(modulus: u64) -> Self {
        Scalar::new(if modulus == 1 { 0 } else { 1 }, modulus)
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if self.modulus != other.modulus {
            return Err(ScalarError::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(Scalar::new(
            self.exp as i128 + other.exp as i128,
            self.modulus,
        ))
    }

    pub fn pow(&self, n: i128) -> Scalar {
        Scalar::new(self.exp as i128 * n, self.modulus)
    }

    pub fn inv(&self) -> Scalar {
        Scalar::new(-(self.exp as i128), self.modulus)
    }

    /// Multiplicative order: N / gcd(exp, N).
    pub fn order(&self) -> u64 {
        self.modulus / gcd(self.exp, self.modulus)
    }

    /// For a p-power modulus, primitivity means gcd(exp, p) = 1.
    pub fn is_primitive(&self, p: u64) -> bool {
        self.modulus == 1 || self.exp % p != 0
    }

    /// Power map `zeta |-> zeta^divisor_power`, the standard way the source
    /// chains derive lower-order roots from a fixed primitive one. The
    /// result keeps the ambient modulus; its order is N / gcd(exp * d, N).
    pub fn derive(&self, divisor_power: u64) -> Result<Scalar, ScalarError> {
        if divisor_power == 0 || self.modulus % divisor_power != 0 {
            return Err(ScalarError::BadDivisor {
                divisor: divisor_power,
                modulus: self.modulus,
            });
        }
        Ok(self.pow(divisor_power as i128))
    }
}

/// A prime field F_q with q > 2^31 and a designated element of order N.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FqContext {
    pub q: u64,
    pub omega: u64,
    pub modulus: u64,
}

impl FqContext {
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.q)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.q)
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        inv_mod(a, self.q)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    /// Field image of an integer (reduced, sign-aware).
    pub fn int(&self, n: i128) -> u64 {
        n.rem_euclid(self.q as i128) as u64
    }

    /// Realize a scalar as omega^exp. The scalar's modulus must divide N so
    /// that exponents mean the same root of unity.
    pub fn realize(&self, s: &Scalar) -> u64 {
        debug_assert!(self.modulus % s.modulus == 0);
        let lift = self.modulus / s.modulus;
        self.pow(self.omega, s.exp * lift)
    }
}

const SCAN_CAP: u64 = 10_000_000;

/// Deterministically find the first `count` prime fields with q > 2^31,
/// q = 1 (mod N), each paired with an element of order exactly N.
pub fn find_fq_contexts(modulus: u64, count: usize) -> Result<Vec<FqContext>, ScalarError> {
    assert!(modulus >= 1);
    let mut out = Vec::with_capacity(count);
    let base = 1u64 << 31;
    // first q = 1 (mod N) above 2^31
    let mut q = base - base % modulus + 1;
    while q <= base {
        q += modulus;
    }
    let mut scanned = 0u64;
    while out.len() < count {
        if scanned > SCAN_CAP {
            return Err(ScalarError::ScanCapExceeded(modulus));
        }
        scanned += 1;
        if is_prime(q) {
            let omega = element_of_order(q, modulus);
            out.push(FqContext {
                q,
                omega,
                modulus,
            });
        }
        q += modulus;
    }
    Ok(out)
}

/// g^((q-1)/N) for the least primitive root g, re-checked to have order
/// exactly N.
fn element_of_order(q: u64, n: u64) -> u64 {
    let factors = prime_factors(q - 1);
    let mut g = 2u64;
    let g = loop {
        let primitive = factors.iter().all(|&f| pow_mod(g, (q - 1) / f, q) != 1);
        if primitive {
            break g;
        }
        g += 1;
    };
    let omega = pow_mod(g, (q - 1) / n, q);
    debug_assert_eq!(pow_mod(omega, n, q), 1);
    for &f in prime_factors(n).iter() {
        debug_assert_ne!(pow_mod(omega, n / f, q), 1);
    }
    omega
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_is_cyclic_group() {
        // exhaustive group-law check for small moduli
        for n in 1..=64u64 {
            for a in 0..n {
                for b in 0..n {
                    let x = Scalar { exp: a, modulus: n };
                    let y = Scalar { exp: b, modulus: n };
                    let z = x.mul(&y).unwrap();
                    assert_eq!(z.exp, (a + b) % n);
                    assert!(x.mul(&x.inv()).unwrap().is_one());
                }
            }
        }
    }

    #[test]
    fn derive_examples() {
        // zeta_8 derived by 4 has order 2 (it is -1)
        let z8 = Scalar::primitive(8);
        assert_eq!(z8.derive(4).unwrap().order(), 2);
        // N = p^a, derive by p^(a-t) gives a primitive p^t-th root
        let z = Scalar::primitive(27);
        assert_eq!(z.derive(9).unwrap().order(), 3);
        let one = Scalar::one(27);
        assert!(one.derive(3).unwrap().is_one());
        assert!(z8.derive(3).is_err());
    }

    #[test]
    fn contexts_have_exact_order() {
        for n in [2u64, 8, 27, 81] {
            let ctxs = find_fq_contexts(n, 3).unwrap();
            assert_eq!(ctxs.len(), 3);
            for c in &ctxs {
                assert!(c.q > 1 << 31);
                assert_eq!((c.q - 1) % n, 0);
                assert_eq!(c.pow(c.omega, n), 1);
                if n > 1 {
                    let p = prime_factors(n)[0];
                    assert_ne!(c.pow(c.omega, n / p), 1);
                }
            }
        }
        // N = 2: omega must be q - 1
        let c2 = &find_fq_contexts(2, 1).unwrap()[0];
        assert_eq!(c2.omega, c2.q - 1);
    }

    #[test]
    fn realize_is_homomorphism() {
        let ctx = &find_fq_contexts(27, 1).unwrap()[0];
        let mut seed = 1u64;
        for _ in 0..1000 {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            let a = Scalar::new((seed >> 8) as i128, 27);
            let b = Scalar::new((seed >> 40) as i128, 27);
            let lhs = ctx.realize(&a.mul(&b).unwrap());
            let rhs = ctx.mul(ctx.realize(&a), ctx.realize(&b));
            assert_eq!(lhs, rhs);
        }
    }
}
