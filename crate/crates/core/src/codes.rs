//! Linear and affine codes over GF(q), their duals, exact weight
//! distributions (including cosets), and the uniform-spectrum statistic
//! alpha(V) = max over weights i and translates x of |A_i(V+x)| / |V|.
//!
//! A linear code is identified with the reduced-row-echelon form of its
//! generator matrix, so equal codes compare equal structurally. An affine
//! code stores the canonical coset representative: the offset reduced
//! against the generator, which is the lexicographically least element of
//! the coset (coordinate 0 most significant).

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};

use num::{BigRational, BigUint, One, Zero};

use crate::error::{Error, Result};
use crate::galois::{meaningful_lines, parse_numbers, FieldOrder, FqMatrix, FqVector};
use crate::krawtchouk::{big_rational_from_biguint, shell_size};

/// Default cap on q^k for any operation that enumerates codewords.
pub const DEFAULT_MAX_ENUMERATION_WORDS: u64 = 1 << 26;

/// Cap on q^{n-k} for operations that range over all cosets.
pub const MAX_COSETS: u64 = 1 << 20;

static MAX_ENUM_WORDS: AtomicU64 = AtomicU64::new(DEFAULT_MAX_ENUMERATION_WORDS);

/// Current enumeration guard (number of codewords).
pub fn max_enumeration_words() -> u64 {
    MAX_ENUM_WORDS.load(Ordering::Relaxed)
}

/// Overrides the enumeration guard process-wide. The CLI wires this to the
/// SPECKTRAL_MAX_ENUM environment variable.
pub fn set_max_enumeration_words(limit: u64) {
    MAX_ENUM_WORDS.store(limit, Ordering::Relaxed)
}

fn checked_pow(q: u64, k: usize) -> Option<u128> {
    let mut acc = 1u128;
    for _ in 0..k {
        acc = acc.checked_mul(q as u128)?;
    }
    Some(acc)
}

fn guard_words(q: u64, k: usize) -> Result<u64> {
    let limit = max_enumeration_words();
    match checked_pow(q, k) {
        Some(words) if words <= limit as u128 => Ok(words as u64),
        Some(words) => Err(Error::EnumerationTooLarge { words, limit }),
        None => Err(Error::EnumerationTooLarge {
            words: u128::MAX,
            limit,
        }),
    }
}

fn guard_cosets(q: u64, dim: usize) -> Result<u64> {
    match checked_pow(q, dim) {
        Some(cosets) if cosets <= MAX_COSETS as u128 => Ok(cosets as u64),
        Some(cosets) => Err(Error::CosetSpaceTooLarge {
            cosets,
            limit: MAX_COSETS,
        }),
        None => Err(Error::CosetSpaceTooLarge {
            cosets: u128::MAX,
            limit: MAX_COSETS,
        }),
    }
}

/// A k-dimensional subspace of GF(q)^n, held as a canonical RREF generator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearCode {
    q: FieldOrder,
    n: usize,
    gen: FqMatrix,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// The span of the given vectors; the generator is canonicalized, so
    /// dependent or duplicate inputs collapse.
    pub fn from_generators(q: FieldOrder, n: usize, vectors: &[FqVector]) -> Result<Self> {
        let m = FqMatrix::from_rows(q, n, vectors)?;
        Ok(Self::from_matrix(&m))
    }

    pub fn from_matrix(m: &FqMatrix) -> Self {
        let r = m.rref();
        LinearCode {
            q: m.q(),
            n: m.cols(),
            gen: r.matrix,
            pivots: r.pivots,
        }
    }

    pub fn zero_code(q: FieldOrder, n: usize) -> Self {
        LinearCode {
            q,
            n,
            gen: FqMatrix::zeros(q, 0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full_space(q: FieldOrder, n: usize) -> Self {
        Self::from_matrix(&FqMatrix::identity(q, n))
    }

    pub fn q(&self) -> FieldOrder {
        self.q
    }

    /// Ambient length n.
    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.gen.rows()
    }

    /// |C| = q^dim as an exact integer.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.q.get()).pow(self.dim() as u32)
    }

    pub fn generator(&self) -> &FqMatrix {
        &self.gen
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical coset representative of v + C: v with all pivot
    /// coordinates cleared. This is the lexicographically least element of
    /// the coset.
    pub fn reduce(&self, v: &FqVector) -> Result<FqVector> {
        if v.q() != self.q {
            return Err(Error::FieldMismatch(v.q().get(), self.q.get()));
        }
        if v.len() != self.n {
            return Err(Error::LengthMismatch(v.len(), self.n));
        }
        let mut coords = v.coords().to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = coords[p];
            if c != 0 {
                for (j, x) in coords.iter_mut().enumerate() {
                    *x = self.q.sub(*x, self.q.mul(c, self.gen.get(i, j)));
                }
            }
        }
        FqVector::new(self.q, coords)
    }

    pub fn contains(&self, v: &FqVector) -> bool {
        self.reduce(v).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn is_subspace_of(&self, other: &LinearCode) -> bool {
        self.q == other.q
            && self.n == other.n
            && (0..self.dim()).all(|i| other.contains(&self.gen.row_vector(i)))
    }

    /// The dual code: all vectors orthogonal to every codeword.
    pub fn dual(&self) -> LinearCode {
        let q = self.q;
        let pivot_set: BTreeSet<usize> = self.pivots.iter().copied().collect();
        let mut rows = Vec::with_capacity(self.n - self.dim());
        for f in 0..self.n {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut coords = vec![0u64; self.n];
            coords[f] = 1;
            for (i, &p) in self.pivots.iter().enumerate() {
                coords[p] = q.neg(self.gen.get(i, f));
            }
            rows.push(FqVector::new(q, coords).expect("entries reduced"));
        }
        Self::from_generators(q, self.n, &rows).expect("dual basis is well-formed")
    }

    /// Streams the q^dim codewords (subject to the enumeration guard).
    pub fn codewords(&self) -> Result<Codewords<'_>> {
        guard_words(self.q.get(), self.dim())?;
        Ok(Codewords::new(&self.gen, vec![0; self.n]))
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        self.coset_weight_distribution(&FqVector::zero(self.q, self.n))
    }

    /// Weight distribution of the translate x + C. The result does not
    /// depend on which representative of the coset is supplied.
    pub fn coset_weight_distribution(&self, x: &FqVector) -> Result<WeightDistribution> {
        if x.q() != self.q {
            return Err(Error::FieldMismatch(x.q().get(), self.q.get()));
        }
        if x.len() != self.n {
            return Err(Error::LengthMismatch(x.len(), self.n));
        }
        guard_words(self.q.get(), self.dim())?;
        let mut counts = vec![0u64; self.n + 1];
        for word in Codewords::new(&self.gen, x.coords().to_vec()) {
            counts[word.weight()] += 1;
        }
        WeightDistribution::from_u64_counts(self.q.get(), self.n, &counts)
    }

    /// One representative per coset of C in GF(q)^n, via the syndrome
    /// transversal: syndrome digits are placed on the pivot columns of the
    /// dual generator. Deterministic order.
    pub fn coset_representatives(&self) -> Result<Vec<FqVector>> {
        let cosets = guard_cosets(self.q.get(), self.n - self.dim())?;
        let dual = self.dual();
        let pivots = dual.pivots().to_vec();
        debug_assert_eq!(pivots.len(), self.n - self.dim());
        let q = self.q.get();
        let mut reps = Vec::with_capacity(cosets as usize);
        let mut digits = vec![0u64; pivots.len()];
        loop {
            let mut coords = vec![0u64; self.n];
            for (d, &p) in digits.iter().zip(&pivots) {
                coords[p] = *d;
            }
            reps.push(FqVector::new(self.q, coords)?);
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return Ok(reps);
                }
                digits[i] += 1;
                if digits[i] < q {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    /// alpha(C) = max over cosets x + C and weights i of |A_i(C+x)| / |C|.
    pub fn alpha(&self) -> Result<BigRational> {
        guard_words(self.q.get(), self.dim())?;
        let mut max_count = 0u64;
        for rep in self.coset_representatives()? {
            let mut counts = vec![0u64; self.n + 1];
            for word in Codewords::new(&self.gen, rep.coords().to_vec()) {
                counts[word.weight()] += 1;
            }
            max_count = max_count.max(*counts.iter().max().expect("nonempty"));
        }
        Ok(BigRational::new(
            BigUint::from(max_count).into(),
            self.size().into(),
        ))
    }

    pub fn nonzero_weights(&self) -> Result<BTreeSet<usize>> {
        Ok(self.weight_distribution()?.nonzero_weights())
    }

    /// Compact descriptor used in reports.
    pub fn brief(&self) -> String {
        let rows: Vec<String> = (0..self.dim())
            .map(|i| self.gen.row_vector(i).digits_string())
            .collect();
        format!(
            "q={} n={} k={} [{}]",
            self.q.get(),
            self.n,
            self.dim(),
            rows.join("|")
        )
    }
}

/// A coset offset + LinearCode pair. `offset` is canonical (reduced against
/// the generator), so it is zero exactly when the code is linear.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineCode {
    offset: FqVector,
    linear: LinearCode,
}

impl AffineCode {
    pub fn new(offset: &FqVector, linear: LinearCode) -> Result<Self> {
        let offset = linear.reduce(offset)?;
        Ok(AffineCode { offset, linear })
    }

    pub fn from_linear(linear: LinearCode) -> Self {
        let offset = FqVector::zero(linear.q(), linear.length());
        AffineCode { offset, linear }
    }

    pub fn offset(&self) -> &FqVector {
        &self.offset
    }

    pub fn linear(&self) -> &LinearCode {
        &self.linear
    }

    pub fn q(&self) -> FieldOrder {
        self.linear.q()
    }

    pub fn length(&self) -> usize {
        self.linear.length()
    }

    pub fn dim(&self) -> usize {
        self.linear.dim()
    }

    pub fn size(&self) -> BigUint {
        self.linear.size()
    }

    pub fn is_linear(&self) -> bool {
        self.offset.is_zero()
    }

    pub fn contains(&self, v: &FqVector) -> bool {
        match v.sub(&self.offset) {
            Ok(diff) => self.linear.contains(&diff),
            Err(_) => false,
        }
    }

    pub fn codewords(&self) -> Result<Codewords<'_>> {
        guard_words(self.q().get(), self.dim())?;
        Ok(Codewords::new(
            &self.linear.gen,
            self.offset.coords().to_vec(),
        ))
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        self.linear.coset_weight_distribution(&self.offset)
    }

    /// The set {i : A_i > 0}; its cardinality is t for a t-weight code.
    pub fn nonzero_weights(&self) -> Result<BTreeSet<usize>> {
        Ok(self.weight_distribution()?.nonzero_weights())
    }

    pub fn brief(&self) -> String {
        if self.is_linear() {
            self.linear.brief()
        } else {
            format!("{} + {}", self.offset.digits_string(), self.linear.brief())
        }
    }
}

/// Odometer-style iterator over the words offset + span(gen).
pub struct Codewords<'a> {
    gen: &'a FqMatrix,
    digits: Vec<u64>,
    current: Vec<u64>,
    done: bool,
}

impl<'a> Codewords<'a> {
    fn new(gen: &'a FqMatrix, offset: Vec<u64>) -> Self {
        debug_assert_eq!(gen.cols(), offset.len());
        Codewords {
            gen,
            digits: vec![0; gen.rows()],
            current: offset,
            done: false,
        }
    }
}

impl Iterator for Codewords<'_> {
    type Item = FqVector;

    fn next(&mut self) -> Option<FqVector> {
        if self.done {
            return None;
        }
        let q = self.gen.q();
        let item = FqVector::new(q, self.current.clone()).expect("entries reduced");
        // Advance the coefficient odometer; each digit bump adds one copy of
        // the corresponding generator row, and q bumps cancel exactly.
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                break;
            }
            self.digits[i] += 1;
            for (c, g) in self.current.iter_mut().zip(self.gen.row(i)) {
                *c = q.add(*c, *g);
            }
            if self.digits[i] < q.get() {
                break;
            }
            self.digits[i] = 0;
            i += 1;
        }
        Some(item)
    }
}

/// Exact counts (A_0, ..., A_n) of codewords per weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightDistribution {
    q: u64,
    n: usize,
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    /// Validates the shell bounds A_i <= (q-1)^i C(n,i). (The sum being a
    /// power of q is a property of code-derived distributions, not of the
    /// type: the MacWilliams transform must be able to receive arbitrary
    /// candidate distributions so it can reject them.)
    pub fn new(q: u64, n: usize, counts: Vec<BigUint>) -> Result<Self> {
        if counts.len() != n + 1 {
            return Err(Error::LengthMismatch(counts.len(), n + 1));
        }
        for (i, c) in counts.iter().enumerate() {
            if *c > shell_size(i, n, q) {
                return Err(Error::InvalidDistribution(format!(
                    "A_{} = {} exceeds the weight-{} shell of Q_{}^{}",
                    i, c, i, q, n
                )));
            }
        }
        Ok(WeightDistribution { q, n, counts })
    }

    pub fn from_u64_counts(q: u64, n: usize, counts: &[u64]) -> Result<Self> {
        Self::new(q, n, counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// The distribution of the full space: A_i = (q-1)^i C(n,i).
    pub fn full_space(q: u64, n: usize) -> Self {
        let counts = (0..=n).map(|i| shell_size(i, n, q)).collect();
        WeightDistribution { q, n, counts }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, i: usize) -> &BigUint {
        &self.counts[i]
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn nonzero_weights(&self) -> BTreeSet<usize> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn max_count(&self) -> &BigUint {
        self.counts.iter().max().expect("n + 1 >= 1 entries")
    }

    /// Counts as decimal strings (the JSON wire format for exact integers).
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.counts.iter().map(|c| c.to_string()).collect()
    }
}

/// Outcome of the subspace monotonicity check: for U a subspace of V with
/// alpha(U) < 1, every coset weight fraction of V is bounded by
/// alpha(U) / (1 - alpha(U)).
#[derive(Clone, Debug)]
pub enum SubspaceAlphaBound {
    /// alpha(U) = 1; the bound is vacuous and nothing was checked.
    Degenerate { alpha_u: BigRational },
    Checked {
        alpha_u: BigRational,
        bound: BigRational,
        /// Largest |A_i(V+w)| / |V| over all weights i and coset reps w.
        max_fraction: BigRational,
        pass: bool,
    },
}

pub fn check_subspace_alpha_bound(u: &LinearCode, v: &LinearCode) -> Result<SubspaceAlphaBound> {
    if !u.is_subspace_of(v) {
        return Err(Error::NotASubspace);
    }
    let alpha_u = u.alpha()?;
    if alpha_u == BigRational::one() {
        return Ok(SubspaceAlphaBound::Degenerate { alpha_u });
    }
    let bound = &alpha_u / (BigRational::one() - &alpha_u);
    let size = big_rational_from_biguint(v.size());
    let mut max_fraction = BigRational::zero();
    for rep in v.coset_representatives()? {
        let dist = v.coset_weight_distribution(&rep)?;
        let frac = big_rational_from_biguint(dist.max_count().clone()) / &size;
        if frac > max_fraction {
            max_fraction = frac;
        }
    }
    let pass = max_fraction <= bound;
    Ok(SubspaceAlphaBound::Checked {
        alpha_u,
        bound,
        max_fraction,
        pass,
    })
}

/// Gaussian binomial coefficient [n choose k]_q: the number of k-dimensional
/// subspaces of GF(q)^n.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut acc = BigUint::one();
    for i in 0..k {
        let numer = q.pow((n - i) as u32) - 1u32;
        let denom = q.pow((i + 1) as u32) - 1u32;
        acc = acc * numer / denom;
    }
    acc
}

/// All subspaces of GF(q)^n, one canonical RREF generator each, enumerated
/// by pivot set and free-entry assignment.
pub fn all_subspaces(q: FieldOrder, n: usize) -> Result<Vec<LinearCode>> {
    let total: BigUint = (0..=n).map(|k| gaussian_binomial(n, k, q.get())).sum();
    if total > BigUint::from(MAX_COSETS) {
        return Err(Error::EnumerationTooLarge {
            words: u128::MAX,
            limit: MAX_COSETS,
        });
    }
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in crate::util::subsets_of_size(n, k) {
            let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
            // Free cells: entries right of the row's pivot, off the pivot
            // columns.
            let mut free_cells = Vec::new();
            for (i, &p) in pivots.iter().enumerate() {
                for col in (p + 1)..n {
                    if !pivot_set.contains(&col) {
                        free_cells.push((i, col));
                    }
                }
            }
            let mut digits = vec![0u64; free_cells.len()];
            loop {
                let mut m = FqMatrix::zeros(q, k, n);
                for (i, &p) in pivots.iter().enumerate() {
                    m.set(i, p, 1);
                }
                for (&(r, c), &d) in free_cells.iter().zip(&digits) {
                    m.set(r, c, d);
                }
                out.push(LinearCode {
                    q,
                    n,
                    gen: m,
                    pivots: pivots.clone(),
                });
                let mut i = 0;
                loop {
                    if i == digits.len() {
                        break;
                    }
                    digits[i] += 1;
                    if digits[i] < q.get() {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
                if digits.iter().all(|&d| d == 0) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Parses a code file: the matrix text format (header `q n k`, then k
/// generator rows), optionally followed by a line `offset v_1 ... v_n` for
/// affine codes. A missing offset line means the code is linear.
pub fn parse_code_file(text: &str) -> Result<AffineCode> {
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
    let mut rows = Vec::with_capacity(k);
    for i in 0..k {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {} generator rows, got {}", k, i)))?;
        let vals = parse_numbers(line)?;
        if vals.len() != n {
            return Err(Error::Parse(format!(
                "generator row {} has {} entries, expected {}",
                i,
                vals.len(),
                n
            )));
        }
        rows.push(FqVector::new(q, vals)?);
    }
    let mut offset = FqVector::zero(q, n);
    if let Some(line) = lines.next() {
        let Some(rest) = line.strip_prefix("offset") else {
            return Err(Error::Parse(format!("unexpected trailing line '{}'", line)));
        };
        let vals = parse_numbers(rest)?;
        if vals.len() != n {
            return Err(Error::Parse(format!(
                "offset has {} entries, expected {}",
                vals.len(),
                n
            )));
        }
        offset = FqVector::new(q, vals)?;
        if lines.next().is_some() {
            return Err(Error::Parse("unexpected content after offset line".into()));
        }
    }
    let linear = LinearCode::from_generators(q, n, &rows)?;
    AffineCode::new(&offset, linear)
}

pub fn format_code_file(code: &AffineCode) -> String {
    let gen = code.linear().generator();
    let mut out = format!("{} {} {}\n", code.q().get(), code.length(), code.dim());
    for r in 0..gen.rows() {
        let row: Vec<String> = gen.row(r).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if !code.is_linear() {
        let off: Vec<String> = code
            .offset()
            .coords()
            .iter()
            .map(|v| v.to_string())
            .collect();
        out.push_str("offset ");
        out.push_str(&off.join(" "));
        out.push('\n');
    }
    out
}
