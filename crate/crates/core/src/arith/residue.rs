//! Residues modulo a fixed positive integer.

use std::fmt;

use crate::error::{Error, Result};

/// An element of `Z/NZ`, stored as its representative in `[0, N)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let value = value.rem_euclid(modulus as i64) as u64;
        Ok(Residue { value, modulus })
    }

    pub(crate) fn from_reduced(value: u64, modulus: u64) -> Self {
        debug_assert!(value < modulus);
        Residue { value, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &Residue) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(Residue::from_reduced(
            (self.value + other.value) % self.modulus,
            self.modulus,
        ))
    }

    pub fn sub(&self, other: &Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(Residue::from_reduced(
            (self.value + self.modulus - other.value) % self.modulus,
            self.modulus,
        ))
    }

    pub fn mul(&self, other: &Residue) -> Result<Residue> {
        self.check(other)?;
        let product = (self.value as u128 * other.value as u128) % self.modulus as u128;
        Ok(Residue::from_reduced(product as u64, self.modulus))
    }

    pub fn neg(&self) -> Residue {
        Residue::from_reduced((self.modulus - self.value) % self.modulus, self.modulus)
    }

    pub fn scale(&self, k: i64) -> Residue {
        let k = k.rem_euclid(self.modulus as i64) as u128;
        let v = (self.value as u128 * k) % self.modulus as u128;
        Residue::from_reduced(v as u64, self.modulus)
    }

    /// Additive order of this residue.
    pub fn order(&self) -> u64 {
        self.modulus / num_integer::gcd(self.value, self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_on_construction() {
        let r = Residue::new(-5, 28).unwrap();
        assert_eq!(r.value(), 23);
        assert_eq!(Residue::new(57, 28).unwrap().value(), 1);
    }

    #[test]
    fn mixed_moduli_rejected() {
        let a = Residue::new(3, 12).unwrap();
        let b = Residue::new(3, 28).unwrap();
        assert_eq!(
            a.add(&b),
            Err(Error::ModulusMismatch { left: 12, right: 28 })
        );
        assert!(a.mul(&b).is_err());
        assert!(a.sub(&b).is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Residue::new(20, 28).unwrap();
        let b = Residue::new(13, 28).unwrap();
        assert_eq!(a.add(&b).unwrap().value(), 5);
        assert_eq!(a.sub(&b).unwrap().value(), 7);
        assert_eq!(b.sub(&a).unwrap().value(), 21);
        assert_eq!(a.mul(&b).unwrap().value(), 260 % 28);
        assert_eq!(a.neg().value(), 8);
        assert_eq!(Residue::new(0, 28).unwrap().neg().value(), 0);
        assert_eq!(b.scale(-1), b.neg());
    }

    #[test]
    fn additive_order() {
        assert_eq!(Residue::new(7, 28).unwrap().order(), 4);
        assert_eq!(Residue::new(5, 28).unwrap().order(), 28);
        assert_eq!(Residue::new(0, 28).unwrap().order(), 1);
    }

    #[test]
    fn zero_modulus_rejected() {
        assert_eq!(Residue::new(1, 0), Err(Error::ZeroModulus));
    }
}
