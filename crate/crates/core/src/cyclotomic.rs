//! Exact sums of q-th roots of unity, for prime q.
//!
//! A sum is kept as integer coefficients (c_0, ..., c_{q-1}) meaning
//! c_0 + c_1 w + ... + c_{q-1} w^{q-1} with w = e^{2 pi i / q}. Since the
//! minimal polynomial of w over the rationals is 1 + x + ... + x^{q-1}, the
//! sum is a rational integer exactly when c_1 = c_2 = ... = c_{q-1}, and its
//! value is then c_0 - c_1. This gives character sums over GF(q)^n without
//! any floating-point arithmetic.

use num::{BigInt, Zero};

/// An exact element of Z[w], w a primitive q-th root of unity (q prime).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicSum {
    q: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicSum {
    pub fn new(q: u64) -> Self {
        assert!(q >= 2);
        CyclotomicSum {
            q,
            coeffs: vec![BigInt::zero(); q as usize],
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Adds w^exponent.
    pub fn add_root(&mut self, exponent: u64) {
        let e = (exponent % self.q) as usize;
        self.coeffs[e] += 1;
    }

    /// Adds scale * w^exponent.
    pub fn add_scaled_root(&mut self, exponent: u64, scale: &BigInt) {
        let e = (exponent % self.q) as usize;
        self.coeffs[e] += scale;
    }

    pub fn add(&mut self, other: &CyclotomicSum) {
        assert_eq!(self.q, other.q);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.to_integer().is_some_and(|v| v.is_zero())
    }

    /// The value as a rational integer, if it is one.
    ///
    /// For prime q the representation c_0 + sum_{j>0} c_j w^j is an integer
    /// iff all c_j (j > 0) agree, the value being c_0 - c_1.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.q == 2 {
            return Some(&self.coeffs[0] - &self.coeffs[1]);
        }
        let tail = &self.coeffs[1];
        if self.coeffs[2..].iter().all(|c| c == tail) {
            Some(&self.coeffs[0] - tail)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_orbit_sums_to_zero() {
        for q in [2u64, 3, 5, 7] {
            let mut s = CyclotomicSum::new(q);
            for j in 0..q {
                s.add_root(j);
            }
            assert_eq!(s.to_integer(), Some(BigInt::zero()));
        }
    }

    #[test]
    fn lone_root_is_irrational_for_odd_q() {
        let mut s = CyclotomicSum::new(5);
        s.add_root(1);
        assert_eq!(s.to_integer(), None);
        // ... but for q = 2 the root is -1.
        let mut s = CyclotomicSum::new(2);
        s.add_root(1);
        assert_eq!(s.to_integer(), Some(BigInt::from(-1)));
    }

    #[test]
    fn constants_and_scaling() {
        let mut s = CyclotomicSum::new(3);
        s.add_scaled_root(0, &BigInt::from(7));
        s.add_scaled_root(3, &BigInt::from(-2)); // exponent reduces mod q
        assert_eq!(s.to_integer(), Some(BigInt::from(5)));

        let mut t = CyclotomicSum::new(3);
        t.add_root(1);
        t.add_root(2);
        s.add(&t);
        assert_eq!(s.to_integer(), Some(BigInt::from(4)));
    }
}
