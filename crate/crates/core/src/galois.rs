//! Arithmetic in the prime field GF(q) and linear algebra over it.
//!
//! Field elements are machine integers in `[0, q)`; only prime q is accepted,
//! so no polynomial representation is needed. Coordinates are 0-based
//! throughout the API (the coding-theory literature usually writes vectors
//! 1-based).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// The order q of a prime field GF(q). Construction rejects composite q.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldOrder(u64);

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    if q.is_multiple_of(2) {
        return q == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= q) {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldOrder {
    pub fn new(q: u64) -> Result<Self> {
        if is_prime(q) {
            Ok(FieldOrder(q))
        } else {
            Err(Error::NonPrimeOrder(q))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// All field elements, in increasing order.
    pub fn elements(self) -> impl Iterator<Item = u64> {
        0..self.0
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.0 && b < self.0);
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.0 && b < self.0);
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    pub fn neg(self, a: u64) -> u64 {
        debug_assert!(a < self.0);
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.0 && b < self.0);
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    /// Multiplicative inverse of a nonzero element.
    ///
    /// # Panics
    ///
    /// Panics if `a == 0`.
    pub fn inv(self, a: u64) -> u64 {
        assert!(a != 0, "zero has no multiplicative inverse");
        // Extended Euclid on (a, q); q prime guarantees gcd = 1.
        let (mut r0, mut r1) = (a as i128, self.0 as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let quot = r0 / r1;
            (r0, r1) = (r1, r0 - quot * r1);
            (s0, s1) = (s1, s0 - quot * s1);
        }
        debug_assert_eq!(r0, 1);
        s0.rem_euclid(self.0 as i128) as u64
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        debug_assert!(base < self.0);
        let mut acc = 1u64 % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for FieldOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0)
    }
}

/// A vector over GF(q) with every coordinate in `[0, q)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FqVector {
    q: FieldOrder,
    coords: Vec<u64>,
}

impl FqVector {
    pub fn new(q: FieldOrder, coords: Vec<u64>) -> Result<Self> {
        for &c in &coords {
            if c >= q.get() {
                return Err(Error::CoordinateOutOfRange {
                    value: c,
                    q: q.get(),
                });
            }
        }
        Ok(FqVector { q, coords })
    }

    pub fn zero(q: FieldOrder, n: usize) -> Self {
        FqVector {
            q,
            coords: vec![0; n],
        }
    }

    pub fn q(&self) -> FieldOrder {
        self.q
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> u64 {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.coords.iter().filter(|&&c| c != 0).count()
    }

    /// The set of positions with a nonzero coordinate (0-based).
    pub fn support(&self) -> BTreeSet<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_compatible(&self, other: &FqVector) -> Result<()> {
        if self.q != other.q {
            return Err(Error::FieldMismatch(self.q.get(), other.q.get()));
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    pub fn add(&self, other: &FqVector) -> Result<FqVector> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| self.q.add(a, b))
            .collect();
        Ok(FqVector { q: self.q, coords })
    }

    pub fn sub(&self, other: &FqVector) -> Result<FqVector> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| self.q.sub(a, b))
            .collect();
        Ok(FqVector { q: self.q, coords })
    }

    pub fn scale(&self, c: u64) -> FqVector {
        debug_assert!(c < self.q.get());
        let coords = self.coords.iter().map(|&a| self.q.mul(a, c)).collect();
        FqVector { q: self.q, coords }
    }

    /// Σ u_i v_i mod q.
    pub fn inner_product(&self, other: &FqVector) -> Result<u64> {
        self.check_compatible(other)?;
        let q = self.q;
        let mut acc = 0u64;
        for (&a, &b) in self.coords.iter().zip(&other.coords) {
            acc = q.add(acc, q.mul(a, b));
        }
        Ok(acc)
    }

    /// Coordinates as a compact string: concatenated digits for q <= 10,
    /// space-separated otherwise.
    pub fn digits_string(&self) -> String {
        if self.q.get() <= 10 {
            self.coords.iter().map(|c| c.to_string()).collect()
        } else {
            let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
            parts.join(" ")
        }
    }
}

/// A rectangular matrix over GF(q), stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FqMatrix {
    q: FieldOrder,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Result of Gauss-Jordan elimination: the reduced matrix with zero rows
/// dropped, its rank, and the strictly increasing pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FqMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl FqMatrix {
    pub fn new(q: FieldOrder, rows: usize, cols: usize, data: Vec<u64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch(data.len(), rows * cols));
        }
        for &c in &data {
            if c >= q.get() {
                return Err(Error::CoordinateOutOfRange {
                    value: c,
                    q: q.get(),
                });
            }
        }
        Ok(FqMatrix {
            q,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(q: FieldOrder, rows: usize, cols: usize) -> Self {
        FqMatrix {
            q,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(q: FieldOrder, n: usize) -> Self {
        let mut m = Self::zeros(q, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row vectors. `cols` is explicit so the empty
    /// matrix keeps its ambient length.
    pub fn from_rows(q: FieldOrder, cols: usize, rows: &[FqVector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.q() != q {
                return Err(Error::FieldMismatch(q.get(), r.q().get()));
            }
            if r.len() != cols {
                return Err(Error::LengthMismatch(r.len(), cols));
            }
            data.extend_from_slice(r.coords());
        }
        Ok(FqMatrix {
            q,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn q(&self) -> FieldOrder {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: u64) {
        debug_assert!(r < self.rows && c < self.cols && value < self.q.get());
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> FqVector {
        FqVector {
            q: self.q,
            coords: self.row(r).to_vec(),
        }
    }

    pub fn row_vectors(&self) -> Vec<FqVector> {
        (0..self.rows).map(|r| self.row_vector(r)).collect()
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    ///
    /// The row space is preserved; zero rows are dropped, so the returned
    /// matrix has exactly `rank` rows and is the canonical basis of the row
    /// space (two matrices have equal row spaces iff their `rref` matrices
    /// are equal).
    pub fn rref(&self) -> Rref {
        let q = self.q;
        let mut work = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..work.cols {
            if pivot_row == work.rows {
                break;
            }
            let Some(src) = (pivot_row..work.rows).find(|&r| work.get(r, col) != 0) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..work.cols {
                    let a = work.get(pivot_row, c);
                    let b = work.get(src, c);
                    work.set(pivot_row, c, b);
                    work.set(src, c, a);
                }
            }
            let inv = q.inv(work.get(pivot_row, col));
            for c in 0..work.cols {
                let v = q.mul(work.get(pivot_row, c), inv);
                work.set(pivot_row, c, v);
            }
            for r in 0..work.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = work.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in 0..work.cols {
                    let v = q.sub(work.get(r, c), q.mul(factor, work.get(pivot_row, c)));
                    work.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let rank = pivot_row;
        let matrix = FqMatrix {
            q,
            rows: rank,
            cols: work.cols,
            data: work.data[..rank * work.cols].to_vec(),
        };
        Rref {
            matrix,
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }
}

/// Parses the matrix text format: a header line `q n k` followed by k lines
/// of n whitespace-separated values in `[0, q)`. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_matrix(text: &str) -> Result<FqMatrix> {
    let mut lines = meaningful_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input, expected header 'q n k'".into()))?;
    let nums = parse_numbers(header)?;
    if nums.len() != 3 {
        return Err(Error::Parse(format!(
            "header must be 'q n k', got {} fields",
            nums.len()
        )));
    }
    let q = FieldOrder::new(nums[0])?;
    let n = nums[1] as usize;
    let k = nums[2] as usize;
    let mut data = Vec::with_capacity(k * n);
    for i in 0..k {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {} matrix rows, got {}", k, i)))?;
        let row = parse_numbers(line)?;
        if row.len() != n {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {}",
                i,
                row.len(),
                n
            )));
        }
        data.extend_from_slice(&row);
    }
    FqMatrix::new(q, k, n, data)
}

pub fn format_matrix(m: &FqMatrix) -> String {
    let mut out = format!("{} {} {}\n", m.q().get(), m.cols(), m.rows());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub(crate) fn meaningful_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_numbers(line: &str) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| Error::Parse(format!("invalid number '{}'", tok)))
        })
        .collect()
}
