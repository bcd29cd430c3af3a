//! Axis-aligned faces of the hypercube Q_q^n, affine-code/face
//! intersections, and partial-covering-array scoring.
//!
//! A t-dimensional face frees t coordinate positions and fixes the rest.
//! Intersection counts are computed by solving the constrained linear
//! system on the fixed coordinates (rank arithmetic, no enumeration); the
//! dichotomy check additionally enumerates the code and buckets words per
//! translate, so the two routes verify each other.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num::{BigRational, BigUint, Zero};

use crate::codes::AffineCode;
use crate::error::{Error, Result};
use crate::galois::{FieldOrder, FqMatrix, FqVector};
use crate::krawtchouk::{big_rational_from_biguint, binomial};
use crate::util::subsets_of_size;

/// Cap on q^t when face members are streamed, and on C(n,t) q^{n-t} when
/// all faces are enumerated.
pub const MAX_FACE_ENUMERATION: u64 = 1 << 24;

/// A t-dimensional axis-aligned subcube: free positions vary over all of
/// GF(q), the remaining positions are pinned to fixed values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Face {
    q: FieldOrder,
    n: usize,
    free: BTreeSet<usize>,
    fixed: BTreeMap<usize, u64>,
}

impl Face {
    pub fn new(
        q: FieldOrder,
        n: usize,
        free: BTreeSet<usize>,
        fixed: BTreeMap<usize, u64>,
    ) -> Result<Self> {
        for &p in free.iter().chain(fixed.keys()) {
            if p >= n {
                return Err(Error::IndexOutOfRange {
                    index: p,
                    max: n - 1,
                });
            }
        }
        if free.len() + fixed.len() != n || free.iter().any(|p| fixed.contains_key(p)) {
            return Err(Error::Parse(
                "free and fixed positions must partition the coordinates".into(),
            ));
        }
        for &v in fixed.values() {
            if v >= q.get() {
                return Err(Error::CoordinateOutOfRange {
                    value: v,
                    q: q.get(),
                });
            }
        }
        Ok(Face { q, n, free, fixed })
    }

    /// Convenience constructor from slices.
    pub fn from_parts(
        q: FieldOrder,
        n: usize,
        free: &[usize],
        fixed: &[(usize, u64)],
    ) -> Result<Self> {
        Self::new(
            q,
            n,
            free.iter().copied().collect(),
            fixed.iter().copied().collect(),
        )
    }

    pub fn q(&self) -> FieldOrder {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.free.len()
    }

    pub fn free(&self) -> &BTreeSet<usize> {
        &self.free
    }

    pub fn fixed(&self) -> &BTreeMap<usize, u64> {
        &self.fixed
    }

    /// |face| = q^t.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.q.get()).pow(self.t() as u32)
    }

    pub fn contains(&self, v: &FqVector) -> bool {
        v.q() == self.q && v.len() == self.n && self.fixed.iter().all(|(&p, &val)| v.get(p) == val)
    }

    /// Streams the q^t members in increasing dense-index order.
    pub fn members(&self) -> Result<FaceMembers> {
        let mut count: u128 = 1;
        for _ in 0..self.t() {
            count = count.saturating_mul(self.q.get() as u128);
        }
        if count > MAX_FACE_ENUMERATION as u128 {
            return Err(Error::FaceTooLarge {
                count,
                limit: MAX_FACE_ENUMERATION,
            });
        }
        let mut base = vec![0u64; self.n];
        for (&p, &v) in &self.fixed {
            base[p] = v;
        }
        Ok(FaceMembers {
            q: self.q,
            free: self.free.iter().copied().collect(),
            digits: vec![0; self.free.len()],
            current: base,
            done: false,
        })
    }
}

/// Iterator over the members of a face. Free positions are in increasing
/// order with the lowest position varying fastest, so dense indices come
/// out ascending.
pub struct FaceMembers {
    q: FieldOrder,
    free: Vec<usize>,
    digits: Vec<u64>,
    current: Vec<u64>,
    done: bool,
}

impl Iterator for FaceMembers {
    type Item = FqVector;

    fn next(&mut self) -> Option<FqVector> {
        if self.done {
            return None;
        }
        let item = FqVector::new(self.q, self.current.clone()).expect("entries reduced");
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                break;
            }
            self.digits[i] += 1;
            if self.digits[i] < self.q.get() {
                self.current[self.free[i]] = self.digits[i];
                break;
            }
            self.digits[i] = 0;
            self.current[self.free[i]] = 0;
            i += 1;
        }
        Some(item)
    }
}

fn check_face_code(c: &AffineCode, face: &Face) -> Result<()> {
    if c.q() != face.q {
        return Err(Error::FieldMismatch(c.q().get(), face.q.get()));
    }
    if c.length() != face.n {
        return Err(Error::LengthMismatch(c.length(), face.n));
    }
    Ok(())
}

/// |C ∩ face|, by rank arithmetic: codewords offset + sum a_i g_i lie in
/// the face iff the coefficients solve the linear system pinning the fixed
/// coordinates, so the count is 0 (inconsistent) or q^{k - rank}.
pub fn face_intersection(c: &AffineCode, face: &Face) -> Result<BigUint> {
    check_face_code(c, face)?;
    let q = c.q();
    let k = c.dim();
    let gen = c.linear().generator();
    let rows = face.fixed.len();
    let mut aug = FqMatrix::zeros(q, rows, k + 1);
    for (r, (&p, &val)) in face.fixed.iter().enumerate() {
        for i in 0..k {
            aug.set(r, i, gen.get(i, p));
        }
        aug.set(r, k, q.sub(val, c.offset().get(p)));
    }
    let rref = aug.rref();
    if rref.pivots.contains(&k) {
        return Ok(BigUint::zero());
    }
    Ok(BigUint::from(q.get()).pow((k - rref.rank) as u32))
}

/// Outcome of the translate dichotomy check for one free-position set: over
/// all q^{n-t} translates of the face, every nonzero intersection count is
/// the same power of two.
#[derive(Clone, Debug)]
pub struct DichotomyReport {
    pub t: usize,
    pub translates: u64,
    /// Translates meeting the code; always |C| / common_count.
    pub occupied: u64,
    /// The common nonzero intersection count.
    pub common_count: BigUint,
    /// common_count = 2^s.
    pub s: u32,
    /// Count predicted by the rank route, cross-checked against the
    /// enumeration buckets.
    pub solve_count: BigUint,
    pub pass: bool,
}

/// Verifies the 0-or-2^s dichotomy for a binary affine code across all
/// translates of the face's free-position set. The face's own fixed values
/// are irrelevant: every fixed assignment is visited.
pub fn check_translate_dichotomy(c: &AffineCode, face: &Face) -> Result<DichotomyReport> {
    check_face_code(c, face)?;
    if c.q().get() != 2 {
        return Err(Error::BinaryOnly(c.q().get()));
    }
    let n = c.length();
    let t = face.t();
    let fixed_positions: Vec<usize> = (0..n).filter(|p| !face.free.contains(p)).collect();

    // Enumeration route: bucket codewords by their fixed-coordinate
    // projection; each bucket is one translate's intersection.
    let mut buckets: HashMap<Vec<u64>, u64> = HashMap::new();
    for word in c.codewords()? {
        let key: Vec<u64> = fixed_positions.iter().map(|&p| word.get(p)).collect();
        *buckets.entry(key).or_insert(0) += 1;
    }
    let occupied = buckets.len() as u64;
    let mut counts: Vec<u64> = buckets.values().copied().collect();
    counts.sort_unstable();
    counts.dedup();
    let uniform = counts.len() == 1;
    let common = *counts.last().expect("code is nonempty");

    // Rank route.
    let k = c.dim();
    let gen = c.linear().generator();
    let mut a = FqMatrix::zeros(c.q(), fixed_positions.len(), k.max(1));
    for (r, &p) in fixed_positions.iter().enumerate() {
        for i in 0..k {
            a.set(r, i, gen.get(i, p));
        }
    }
    let rank = if k == 0 { 0 } else { a.rank() };
    let solve_count = BigUint::from(2u64).pow((k - rank) as u32);

    let pass = uniform && common.is_power_of_two() && BigUint::from(common) == solve_count;
    Ok(DichotomyReport {
        t,
        translates: 1u64 << (n - t),
        occupied,
        common_count: BigUint::from(common),
        s: common.trailing_zeros(),
        solve_count,
        pass,
    })
}

fn check_point_set(s: &[FqVector]) -> Result<(FieldOrder, usize)> {
    let first = s
        .first()
        .ok_or_else(|| Error::Parse("empty point set".into()))?;
    for v in s {
        if v.q() != first.q() {
            return Err(Error::FieldMismatch(first.q().get(), v.q().get()));
        }
        if v.len() != first.len() {
            return Err(Error::LengthMismatch(v.len(), first.len()));
        }
    }
    Ok((first.q(), first.len()))
}

fn guard_all_faces(q: u64, n: usize, t: usize) -> Result<BigUint> {
    if t > n {
        return Err(Error::IndexOutOfRange { index: t, max: n });
    }
    let total = binomial(n, t) * BigUint::from(q).pow((n - t) as u32);
    if total > BigUint::from(MAX_FACE_ENUMERATION) {
        return Err(Error::FaceTooLarge {
            count: u128::MAX,
            limit: MAX_FACE_ENUMERATION,
        });
    }
    Ok(total)
}

/// The number of t-dimensional faces meeting the point set S, over all
/// C(n,t) free-position sets and q^{n-t} fixed assignments. A face with
/// free set T meets S iff its fixed part is the projection of some point
/// onto the complement of T, so per free set the count is the number of
/// distinct projections.
pub fn count_intersecting_faces(s: &[FqVector], t: usize) -> Result<BigUint> {
    let (q, n) = check_point_set(s)?;
    guard_all_faces(q.get(), n, t)?;
    let mut total = BigUint::zero();
    for free in subsets_of_size(n, t) {
        let free_set: BTreeSet<usize> = free.iter().copied().collect();
        let fixed_positions: Vec<usize> = (0..n).filter(|p| !free_set.contains(p)).collect();
        let projections: BTreeSet<Vec<u64>> = s
            .iter()
            .map(|v| fixed_positions.iter().map(|&p| v.get(p)).collect())
            .collect();
        total += BigUint::from(projections.len());
    }
    Ok(total)
}

/// Fraction of t-dimensional faces met by S, in (0, 1].
pub fn covering_score(s: &[FqVector], t: usize) -> Result<BigRational> {
    let (q, n) = check_point_set(s)?;
    let total = guard_all_faces(q.get(), n, t)?;
    let hit = count_intersecting_faces(s, t)?;
    Ok(big_rational_from_biguint(hit) / big_rational_from_biguint(total))
}
