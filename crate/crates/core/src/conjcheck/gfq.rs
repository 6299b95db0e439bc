use crate::error::{Error, Result};

/// The fields `F_q < F_{q^2}` for `q = 2^t`, with elements of `F_{q^2}` as
/// bit-packed polynomial residues.
#[derive(Clone, Debug)]
pub struct GFq {
    pub t: u32,
    modulus: u32,
    degree: u32,
}

impl GFq {
    pub fn new(t: u32) -> Result<Self> {
        // irreducible polynomials of degree 2t
        let modulus = match t {
            1 => 0b111,
            2 => 0b1_0011,
            3 => 0b100_0011,
            _ => return Err(Error::Unsupported(format!("field tower with t = {t}"))),
        };
        Ok(GFq {
            t,
            modulus,
            degree: 2 * t,
        })
    }

    /// `q = 2^t`.
    pub fn q(&self) -> u32 {
        1 << self.t
    }

    /// Number of elements of `F_{q^2}`.
    pub fn order(&self) -> u32 {
        1 << self.degree
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    pub fn mul(&self, mut a: u32, mut b: u32) -> u32 {
        let top = 1 << self.degree;
        let mut r = 0;
        while b != 0 {
            if b & 1 != 0 {
                r ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        r
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::Singular);
        }
        Ok(self.pow(a, self.order() as u64 - 2))
    }

    /// `a -> a^q`, the generator of `Gal(F_{q^2}/F_q)`.
    pub fn conj(&self, a: u32) -> u32 {
        self.pow(a, self.q() as u64)
    }

    pub fn is_in_subfield(&self, a: u32) -> bool {
        self.conj(a) == a
    }

    pub fn subfield(&self) -> Vec<u32> {
        (0..self.order())
            .filter(|&a| self.is_in_subfield(a))
            .collect()
    }
}
