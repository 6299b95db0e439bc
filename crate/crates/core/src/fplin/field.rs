use crate::error::{Error, Result};

/// Largest prime supported by the byte-residue storage.
pub const MAX_PRIME: u32 = 251;

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_prime(p: u32) -> Result<u32> {
    if is_prime(p) && p <= MAX_PRIME {
        Ok(p)
    } else {
        Err(Error::BadPrime(p))
    }
}

#[inline]
pub fn add(p: u32, a: u32, b: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(p: u32, a: u32, b: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn neg(p: u32, a: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(p: u32, a: u32, b: u32) -> u32 {
    (a * b) % p
}

pub fn pow(p: u32, mut a: u32, mut e: u64) -> u32 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(p, r, a);
        }
        a = mul(p, a, a);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue.
pub fn inv(p: u32, a: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow(p, a, (p - 2) as u64)
}

/// Reduce a signed integer into `0..p`.
pub fn reduce_i64(p: u32, a: i64) -> u32 {
    a.rem_euclid(p as i64) as u32
}
