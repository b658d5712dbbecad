use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which base field a session computes over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }

    /// Resolve to a concrete field the engine can compute with.
    pub fn to_field(&self) -> Result<Fp> {
        match self {
            FieldSpec::Prime(p) => Fp::new(*p),
            FieldSpec::Rationals => Err(Error::Unsupported(
                "characteristic 0 is not supported by the exact engine; use a prime field".into(),
            )),
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(3)
    }
}

/// The prime field F_p. Elements are canonical representatives in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not a supported prime")));
        }
        Ok(Fp { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    /// Reduce an arbitrary integer into `0..p`.
    pub fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    /// `(-1)^e` as a field element.
    #[inline]
    pub fn sign(&self, e: i64) -> u64 {
        if e.rem_euclid(2) == 0 {
            1
        } else {
            self.p - 1
        }
    }

    /// Symmetric representative, handy for printing.
    pub fn to_i64(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

fn is_prime(n: u64) -> bool {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_three() {
        let f = Fp::new(3).unwrap();
        assert_eq!(f.add(2, 2), 1);
        assert_eq!(f.sub(0, 1), 2);
        assert_eq!(f.mul(2, 2), 1);
        assert_eq!(f.inv(2), 2);
        assert_eq!(f.from_i64(-4), 2);
        assert_eq!(f.sign(-1), 2);
        assert_eq!(f.to_i64(2), -1);
    }

    #[test]
    fn rejects_composites_and_rationals() {
        assert!(Fp::new(9).is_err());
        assert!(Fp::new(1).is_err());
        assert!(FieldSpec::Rationals.to_field().is_err());
        assert_eq!(FieldSpec::default().to_field().unwrap().p(), 3);
    }
}
