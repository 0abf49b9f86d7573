use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{HopfError, Result};

/// An N-th root of unity `ζ_N^k`, stored by its exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootExp {
    modulus: u32,
    exponent: u32,
}

impl RootExp {
    /// `ζ_modulus^exponent`, reducing the exponent mod `modulus`.
    ///
    /// Panics if `modulus` is zero.
    pub fn new(modulus: u32, exponent: i64) -> Self {
        assert!(modulus > 0, "root of unity modulus must be positive");
        let exponent = exponent.rem_euclid(modulus as i64) as u32;
        RootExp { modulus, exponent }
    }

    pub fn one(modulus: u32) -> Self {
        RootExp::new(modulus, 0)
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    pub fn is_one(self) -> bool {
        self.exponent == 0
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: RootExp) -> Result<RootExp> {
        if self.modulus != other.modulus {
            return Err(HopfError::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(RootExp::new(
            self.modulus,
            self.exponent as i64 + other.exponent as i64,
        ))
    }

    pub fn inv(self) -> RootExp {
        RootExp::new(self.modulus, -(self.exponent as i64))
    }

    pub fn pow(self, k: i64) -> RootExp {
        let e = (self.exponent as i128 * k as i128).rem_euclid(self.modulus as i128);
        RootExp::new(self.modulus, e as i64)
    }

    /// Multiplicative order of the root.
    pub fn order(self) -> u32 {
        self.modulus / num_integer::gcd(self.modulus, self.exponent)
    }

    /// Re-express the same complex number as a power of `ζ_m`.
    pub fn embed(self, m: u32) -> Result<RootExp> {
        if m == 0 || !m.is_multiple_of(self.modulus) {
            return Err(HopfError::NotADivisor {
                from: self.modulus,
                to: m,
            });
        }
        Ok(RootExp::new(
            m,
            self.exponent as i64 * (m / self.modulus) as i64,
        ))
    }
}

impl fmt::Display for RootExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ{}^{}", self.modulus, self.exponent)
    }
}
