//! Exact evaluation of q-ary Krawtchouk polynomials and the combinatorial
//! identities they satisfy.
//!
//! Everything here is purely combinatorial, so q is any integer >= 2 (the
//! code-level modules additionally require prime q). All values are exact
//! big integers; binomial coefficients come from a Pascal-triangle cache.

use std::cell::RefCell;

use num::bigint::Sign;
use num::{BigInt, BigRational, BigUint, One, Zero};

use crate::error::{Error, Result};

/// Pascal-triangle cache of binomial coefficients.
#[derive(Clone, Debug, Default)]
pub struct Binomials {
    rows: Vec<Vec<BigUint>>,
}

impl Binomials {
    pub fn up_to(n: usize) -> Self {
        let mut b = Binomials { rows: Vec::new() };
        b.grow(n);
        b
    }

    fn grow(&mut self, n: usize) {
        while self.rows.len() <= n {
            let m = self.rows.len();
            let mut row = vec![BigUint::one(); m + 1];
            if m >= 2 {
                let prev = &self.rows[m - 1];
                for k in 1..m {
                    row[k] = &prev[k - 1] + &prev[k];
                }
            }
            self.rows.push(row);
        }
    }

    /// C(n, k), zero when k > n.
    pub fn get(&mut self, n: usize, k: usize) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        self.grow(n);
        self.rows[n][k].clone()
    }
}

thread_local! {
    static BINOM: RefCell<Binomials> = RefCell::new(Binomials::default());
}

/// Binomial coefficient C(n, k) as an exact integer (0 when k > n).
pub fn binomial(n: usize, k: usize) -> BigUint {
    BINOM.with(|b| b.borrow_mut().get(n, k))
}

fn check_params(k: usize, m: usize, n: usize, q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::Parse(format!("q must be >= 2, got {}", q)));
    }
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    if m > n {
        return Err(Error::IndexOutOfRange { index: m, max: n });
    }
    Ok(())
}

/// P_k(m; n, q) = sum_s (-1)^s (q-1)^{k-s} C(n-m, k-s) C(m, s).
///
/// Binomials with out-of-range arguments vanish, which implements the usual
/// convention for m < s or n-m < k-s.
pub fn krawtchouk(k: usize, m: usize, n: usize, q: u64) -> Result<BigInt> {
    check_params(k, m, n, q)?;
    let qm1 = BigInt::from(q - 1);
    let mut acc = BigInt::zero();
    for s in 0..=k {
        let b1 = binomial(n - m, k - s);
        if b1.is_zero() {
            continue;
        }
        let b2 = binomial(m, s);
        if b2.is_zero() {
            continue;
        }
        let mut term = BigInt::from(b1 * b2) * qm1.pow((k - s) as u32);
        if s % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    Ok(acc)
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_pow(base: &[BigInt], exp: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::one()];
    for _ in 0..exp {
        acc = poly_mul(&acc, base);
    }
    acc
}

/// The full row (P_0(m), ..., P_n(m)) obtained as the coefficients of the
/// generating function (1-z)^m (1+(q-1)z)^{n-m}, by exact polynomial
/// multiplication. Entrywise equal to [`krawtchouk`].
pub fn krawtchouk_row_from_gf(m: usize, n: usize, q: u64) -> Result<Vec<BigInt>> {
    check_params(0, m, n, q)?;
    let one_minus_z = vec![BigInt::one(), -BigInt::one()];
    let one_plus_qz = vec![BigInt::one(), BigInt::from(q - 1)];
    let poly = poly_mul(&poly_pow(&one_minus_z, m), &poly_pow(&one_plus_qz, n - m));
    debug_assert_eq!(poly.len(), n + 1);
    Ok(poly)
}

/// Closed form for sum_m P_k(m; n, q):
/// (1/q) C(n+1, k+1) ((q-1)^{k+1} - (-1)^{k+1}).
///
/// The value is always an integer; this is asserted before returning.
pub fn row_sum_closed_form(k: usize, n: usize, q: u64) -> Result<BigRational> {
    check_params(k, 0, n, q)?;
    let qm1 = BigInt::from(q - 1);
    let sign = if (k + 1).is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let numer = BigInt::from(binomial(n + 1, k + 1)) * (qm1.pow((k + 1) as u32) - sign);
    let value = BigRational::new(numer, BigInt::from(q));
    assert!(value.is_integer(), "row sum closed form must be an integer");
    Ok(value)
}

/// Outcome of checking the symmetry
/// P_k(m)(q-1)^m C(n,m) = P_m(k)(q-1)^k C(n,k).
#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub pass: bool,
}

pub fn check_symmetry(k: usize, m: usize, n: usize, q: u64) -> Result<SymmetryReport> {
    check_params(k, m, n, q)?;
    let qm1 = BigInt::from(q - 1);
    let lhs = krawtchouk(k, m, n, q)? * qm1.pow(m as u32) * BigInt::from(binomial(n, m));
    let rhs = krawtchouk(m, k, n, q)? * qm1.pow(k as u32) * BigInt::from(binomial(n, k));
    let pass = lhs == rhs;
    Ok(SymmetryReport { lhs, rhs, pass })
}

/// (q-1)^k C(n,k): the size of the weight-k shell of Q_q^n.
pub fn shell_size(k: usize, n: usize, q: u64) -> BigUint {
    BigUint::from(q - 1).pow(k as u32) * binomial(n, k)
}

pub(crate) fn big_rational_from_biguint(u: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from_biguint(Sign::Plus, u))
}
