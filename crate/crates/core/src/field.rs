use crate::{Error, Result};

/// The prime field GF(p). Elements are residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = u64::from(n);
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    /// Reduce an arbitrary signed integer into `0..p`.
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(i64::from(self.p)) as u32
    }

    pub fn check(self, v: u32) -> Result<u32> {
        if v < self.p {
            Ok(v)
        } else {
            Err(Error::CoordinateOutOfRange { value: v, p: self.p })
        }
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) + u64::from(b)) % u64::from(self.p)) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) + u64::from(self.p) - u64::from(b)) % u64::from(self.p)) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.p)) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        let a = a % self.p;
        if a == 0 {
            None
        } else {
            Some(self.pow(a, u64::from(self.p) - 2))
        }
    }

    /// `(-1)^(a*b)` for parities `a`, `b`, as a field element.
    #[inline]
    pub fn sign(self, a: u8, b: u8) -> u32 {
        if a & b & 1 == 1 {
            self.neg(1 % self.p)
        } else {
            1 % self.p
        }
    }

    pub fn elements(self) -> core::ops::Range<u32> {
        0..self.p
    }
}
