//! The character (Fourier) transform on GF(q)^n for dense complex
//! functions: f_hat(z) = q^{-n/2} sum_x f(x) w^{(x,z)} with w = e^{2 pi i/q}.
//!
//! Functions are stored densely with base-q little-endian indexing
//! (coordinate 0 is the least significant digit). The general transform
//! composes per-coordinate q-point DFT passes; for q = 2 there is a
//! dedicated Walsh-Hadamard butterfly.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num::complex::Complex64;
use num::Zero;

use crate::codes::AffineCode;
use crate::error::{Error, Result};
use crate::galois::{meaningful_lines, FieldOrder, FqVector};

/// Cap on q^n for dense storage.
pub const MAX_DENSE_POINTS: u64 = 1 << 26;

/// Default tolerance for support and eigenfunction thresholds.
pub const DEFAULT_TOL: f64 = 1e-9;

fn dense_len(q: u64, n: usize) -> Result<usize> {
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(q as u128);
        if acc > MAX_DENSE_POINTS as u128 {
            return Err(Error::DenseTooLarge {
                points: acc,
                limit: MAX_DENSE_POINTS,
            });
        }
    }
    Ok(acc as usize)
}

/// Base-q little-endian index of a coordinate vector.
pub fn index_of(q: u64, coords: &[u64]) -> usize {
    let mut idx = 0usize;
    for &c in coords.iter().rev() {
        idx = idx * q as usize + c as usize;
    }
    idx
}

/// Inverse of [`index_of`].
pub fn coords_of(q: u64, n: usize, index: usize) -> Vec<u64> {
    let mut coords = vec![0u64; n];
    let mut rest = index;
    for c in coords.iter_mut() {
        *c = (rest % q as usize) as u64;
        rest /= q as usize;
    }
    coords
}

/// Hamming weight of the vector encoded by `index`.
pub fn weight_of_index(q: u64, n: usize, index: usize) -> usize {
    let mut rest = index;
    let mut w = 0;
    for _ in 0..n {
        if !rest.is_multiple_of(q as usize) {
            w += 1;
        }
        rest /= q as usize;
    }
    w
}

/// A complex-valued function on GF(q)^n, stored densely.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseFunction {
    q: FieldOrder,
    n: usize,
    values: Vec<Complex64>,
}

impl DenseFunction {
    pub fn new(q: FieldOrder, n: usize, values: Vec<Complex64>) -> Result<Self> {
        let len = dense_len(q.get(), n)?;
        if values.len() != len {
            return Err(Error::LengthMismatch(values.len(), len));
        }
        Ok(DenseFunction { q, n, values })
    }

    pub fn zero(q: FieldOrder, n: usize) -> Result<Self> {
        let len = dense_len(q.get(), n)?;
        Ok(DenseFunction {
            q,
            n,
            values: vec![Complex64::zero(); len],
        })
    }

    /// The point mass at the given index.
    pub fn delta(q: FieldOrder, n: usize, at: usize) -> Result<Self> {
        let mut f = Self::zero(q, n)?;
        if at >= f.values.len() {
            return Err(Error::IndexOutOfRange {
                index: at,
                max: f.values.len() - 1,
            });
        }
        f.values[at] = Complex64::new(1.0, 0.0);
        Ok(f)
    }

    pub fn from_fn(
        q: FieldOrder,
        n: usize,
        mut f: impl FnMut(&[u64]) -> Complex64,
    ) -> Result<Self> {
        let len = dense_len(q.get(), n)?;
        let mut values = Vec::with_capacity(len);
        for idx in 0..len {
            values.push(f(&coords_of(q.get(), n, idx)));
        }
        Ok(DenseFunction { q, n, values })
    }

    /// Indicator function of an affine code.
    pub fn indicator(code: &AffineCode) -> Result<Self> {
        let mut f = Self::zero(code.q(), code.length())?;
        for word in code.codewords()? {
            f.values[index_of(code.q().get(), word.coords())] = Complex64::new(1.0, 0.0);
        }
        Ok(f)
    }

    pub fn q(&self) -> FieldOrder {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value_at(&self, index: usize) -> Complex64 {
        self.values[index]
    }

    pub fn value_at_vector(&self, v: &FqVector) -> Complex64 {
        self.values[index_of(self.q.get(), v.coords())]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// The transform f_hat(z) = q^{-n/2} sum_x f(x) w^{(x,z)}, computed with one
/// q-point DFT pass per coordinate (O(n q^{n+1}) scalar operations).
///
/// Applying it twice gives x -> f(-x); for q = 2 it is an involution.
pub fn transform(f: &DenseFunction) -> DenseFunction {
    let q = f.q.get() as usize;
    let n = f.n;
    let len = f.values.len();
    // Roots of unity from the exact angle 2 pi / q, tabulated once.
    let omega: Vec<Complex64> = (0..q)
        .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / q as f64))
        .collect();
    let mut data = f.values.clone();
    let mut scratch = vec![Complex64::zero(); q];
    let mut stride = 1usize;
    for _ in 0..n {
        let block = stride * q;
        for start in (0..len).step_by(block) {
            for off in 0..stride {
                for (j, s) in scratch.iter_mut().enumerate() {
                    *s = data[start + off + j * stride];
                }
                for l in 0..q {
                    let mut acc = Complex64::zero();
                    for (j, s) in scratch.iter().enumerate() {
                        acc += s * omega[(j * l) % q];
                    }
                    data[start + off + l * stride] = acc;
                }
            }
        }
        stride = block;
    }
    let scale = (len as f64).sqrt().recip();
    for v in data.iter_mut() {
        *v *= scale;
    }
    DenseFunction {
        q: f.q,
        n,
        values: data,
    }
}

/// Walsh-Hadamard butterfly specialization of [`transform`] for q = 2:
/// O(n 2^n) additions, with the 2^{-n/2} normalization applied once.
pub fn fast_transform_q2(f: &DenseFunction) -> Result<DenseFunction> {
    if f.q.get() != 2 {
        return Err(Error::BinaryOnly(f.q.get()));
    }
    let len = f.values.len();
    let mut data = f.values.clone();
    let mut h = 1usize;
    while h < len {
        for start in (0..len).step_by(h * 2) {
            for i in start..start + h {
                let a = data[i];
                let b = data[i + h];
                data[i] = a + b;
                data[i + h] = a - b;
            }
        }
        h *= 2;
    }
    let scale = (len as f64).sqrt().recip();
    for v in data.iter_mut() {
        *v *= scale;
    }
    Ok(DenseFunction {
        q: f.q,
        n: f.n,
        values: data,
    })
}

/// Indices where |f| exceeds the tolerance. With tol = 0 on exact inputs
/// this is the exact support.
pub fn support(f: &DenseFunction, tol: f64) -> BTreeSet<usize> {
    f.values
        .iter()
        .enumerate()
        .filter(|(_, v)| v.norm() > tol)
        .map(|(i, _)| i)
        .collect()
}

/// Result of testing f_hat = lambda f for lambda in {+1, -1}.
#[derive(Clone, Debug)]
pub struct EigenReport {
    /// +1 or -1 when the corresponding residual is within tolerance.
    pub eigenvalue: Option<i32>,
    /// The smaller of the two residuals.
    pub residual: f64,
    pub residual_plus: f64,
    pub residual_minus: f64,
}

/// Checks whether f is an eigenfunction of the transform on Q_2^n. The
/// eigenvalues there are +1 and -1; for q > 2 the transform is not an
/// involution, so the check is restricted to q = 2.
pub fn eigenfunction_check(f: &DenseFunction, tol: f64) -> Result<EigenReport> {
    if f.q.get() != 2 {
        return Err(Error::BinaryOnly(f.q.get()));
    }
    if f.max_abs() == 0.0 {
        return Err(Error::ZeroFunction);
    }
    let fhat = transform(f);
    let mut residual_plus = 0.0f64;
    let mut residual_minus = 0.0f64;
    for (a, b) in fhat.values.iter().zip(&f.values) {
        residual_plus = residual_plus.max((a - b).norm());
        residual_minus = residual_minus.max((a + b).norm());
    }
    let (eigenvalue, residual) = if residual_plus <= tol && residual_plus <= residual_minus {
        (Some(1), residual_plus)
    } else if residual_minus <= tol {
        (Some(-1), residual_minus)
    } else {
        (None, residual_plus.min(residual_minus))
    };
    Ok(EigenReport {
        eigenvalue,
        residual,
        residual_plus,
        residual_minus,
    })
}

/// Support sizes of f and f_hat against the bound |supp(f)||supp(f_hat)| >= 2^n.
#[derive(Clone, Debug)]
pub struct UncertaintyReport {
    pub support_f: usize,
    pub support_fhat: usize,
    pub product: u128,
    pub bound: u128,
    pub pass: bool,
}

pub fn uncertainty_report(f: &DenseFunction, tol: f64) -> Result<UncertaintyReport> {
    if f.q.get() != 2 {
        return Err(Error::BinaryOnly(f.q.get()));
    }
    if f.max_abs() == 0.0 {
        return Err(Error::ZeroFunction);
    }
    let s1 = support(f, tol).len();
    let s2 = support(&transform(f), tol).len();
    let product = s1 as u128 * s2 as u128;
    let bound = 1u128 << f.n;
    Ok(UncertaintyReport {
        support_f: s1,
        support_fhat: s2,
        product,
        bound,
        pass: product >= bound,
    })
}

/// Parses the function file format: a header line `q n`, then sparse lines
/// `index re im` (missing indices are zero). Blank lines and `#` comments
/// are skipped.
pub fn parse_function(text: &str) -> Result<DenseFunction> {
    let mut lines = meaningful_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input, expected header 'q n'".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse(format!(
            "header must be 'q n', got {} fields",
            fields.len()
        )));
    }
    let q = FieldOrder::new(
        fields[0]
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("invalid q '{}'", fields[0])))?,
    )?;
    let n = fields[1]
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("invalid n '{}'", fields[1])))?;
    let mut f = DenseFunction::zero(q, n)?;
    let mut seen = BTreeSet::new();
    for line in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Parse(format!(
                "function entry must be 'index re im', got '{}'",
                line
            )));
        }
        let idx = fields[0]
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("invalid index '{}'", fields[0])))?;
        if idx >= f.values.len() {
            return Err(Error::IndexOutOfRange {
                index: idx,
                max: f.values.len() - 1,
            });
        }
        if !seen.insert(idx) {
            return Err(Error::Parse(format!("duplicate index {}", idx)));
        }
        let re = fields[1]
            .parse::<f64>()
            .map_err(|_| Error::Parse(format!("invalid real part '{}'", fields[1])))?;
        let im = fields[2]
            .parse::<f64>()
            .map_err(|_| Error::Parse(format!("invalid imaginary part '{}'", fields[2])))?;
        f.values[idx] = Complex64::new(re, im);
    }
    Ok(f)
}

/// Emits the function file format: header plus one line per nonzero entry,
/// in index order. Values use the shortest round-trip float representation.
pub fn format_function(f: &DenseFunction) -> String {
    let mut out = format!("{} {}\n", f.q.get(), f.n);
    for (idx, v) in f.values.iter().enumerate() {
        if v.re != 0.0 || v.im != 0.0 {
            out.push_str(&format!("{} {} {}\n", idx, v.re, v.im));
        }
    }
    out
}
