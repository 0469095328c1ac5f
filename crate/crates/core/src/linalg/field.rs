//! Arithmetic in GF(p) for an odd prime p.
//!
//! Scalars are plain `u32` residues in `0..p`; the prime lives in a single
//! [`Fp`] context value that every computation threads through.

use crate::error::{Error, Result};

/// A residue in `0..p`. The modulus is carried by the surrounding [`Fp`].
pub type Scalar = u32;

/// The prime field GF(p), p an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        if p < 3 || !is_prime(p as u64) {
            return Err(Error::InvalidPrime(p.to_string()));
        }
        Ok(Fp { p })
    }

    /// Like [`Fp::new`] but accepts any integer, so parsers can report the
    /// offending value verbatim.
    pub fn from_i64(p: i64) -> Result<Self> {
        if p < 3 || p > u32::MAX as i64 {
            return Err(Error::InvalidPrime(p.to_string()));
        }
        Fp::new(p as u32)
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, a: Scalar, mut e: u64) -> Scalar {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: Scalar) -> Scalar {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in GF({})", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// 1/2, which exists because p is odd.
    #[inline]
    pub fn half(self) -> Scalar {
        self.p.div_ceil(2)
    }

    pub fn from_i64_value(self, v: i64) -> Scalar {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Reduces a decimal integer literal (optionally signed, any length).
    pub fn from_decimal(self, s: &str) -> Option<Scalar> {
        let s = s.trim();
        let (neg, digits) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let p = self.p as u64;
        let r = digits
            .bytes()
            .fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % p) as u32;
        Some(if neg { self.neg(r) } else { r })
    }

    /// `y += a * x`.
    pub fn axpy(self, y: &mut [Scalar], a: Scalar, x: &[Scalar]) {
        debug_assert_eq!(y.len(), x.len());
        if a == 0 {
            return;
        }
        let p = self.p as u64;
        for (yi, &xi) in y.iter_mut().zip(x) {
            if xi != 0 {
                *yi = ((*yi as u64 + a as u64 * xi as u64) % p) as u32;
            }
        }
    }

    pub fn scale(self, x: &mut [Scalar], a: Scalar) {
        for xi in x.iter_mut() {
            *xi = self.mul(*xi, a);
        }
    }

    pub fn add_vec(self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        x.iter().zip(y).map(|(&a, &b)| self.add(a, b)).collect()
    }

    pub fn sub_vec(self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        x.iter().zip(y).map(|(&a, &b)| self.sub(a, b)).collect()
    }

    pub fn neg_vec(self, x: &[Scalar]) -> Vec<Scalar> {
        x.iter().map(|&a| self.neg(a)).collect()
    }
}

/// True when every coordinate is zero.
pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(|&c| c == 0)
}

/// Standard unit vector `e_i` of length `n`.
pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}
