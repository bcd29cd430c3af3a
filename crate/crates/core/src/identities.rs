//! MacWilliams-type identities: the weight-distribution transform, its
//! functional generalizations, and exact verification of each relation.
//!
//! Exact paths work in big rationals. Where the natural normalization
//! q^{n/2} is irrational (odd n), both sides are scaled by q^{n/2} first so
//! every compared quantity stays rational. Failed verifications come back
//! as structured reports with both sides, not as errors.

use num::complex::Complex64;
use num::{BigInt, BigRational, BigUint, One, Signed, ToPrimitive, Zero};

use crate::codes::{AffineCode, LinearCode, WeightDistribution};
use crate::cyclotomic::CyclotomicSum;
use crate::error::{Error, Result};
use crate::fourier::{self, DenseFunction};
use crate::galois::FqVector;
use crate::krawtchouk::{binomial, krawtchouk, shell_size};

fn rat(i: BigInt) -> BigRational {
    BigRational::from_integer(i)
}

/// Dual weight distribution via the MacWilliams transform:
/// |A_k(V_dual)| = q^{-k_dim} sum_m P_k(m; n, q) A_m(V).
///
/// Rejects inputs whose transform has a negative or fractional entry; such
/// inputs cannot be the weight distribution of a k_dim-dimensional linear
/// code.
pub fn macwilliams_transform(w: &WeightDistribution, k_dim: usize) -> Result<WeightDistribution> {
    let n = w.n();
    let q = w.q();
    let divisor = BigInt::from(q).pow(k_dim as u32);
    let mut counts = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut numer = BigInt::zero();
        for m in 0..=n {
            numer += krawtchouk(k, m, n, q)? * BigInt::from(w.count(m).clone());
        }
        if numer.is_negative() {
            return Err(Error::InvalidDistribution(format!(
                "transform entry A_{} is negative ({})",
                k, numer
            )));
        }
        let (quot, rem) = num::Integer::div_rem(&numer, &divisor);
        if !rem.is_zero() {
            return Err(Error::InvalidDistribution(format!(
                "transform entry A_{} = {}/{} is not an integer",
                k, numer, divisor
            )));
        }
        counts.push(quot.to_biguint().expect("checked nonnegative"));
    }
    WeightDistribution::new(q, n, counts)
}

/// Comparison of the transformed distribution against the directly
/// enumerated dual distribution.
#[derive(Clone, Debug)]
pub struct MacWilliamsReport {
    pub transformed: WeightDistribution,
    pub direct: WeightDistribution,
    pub pass: bool,
}

pub fn verify_macwilliams(c: &LinearCode) -> Result<MacWilliamsReport> {
    let transformed = macwilliams_transform(&c.weight_distribution()?, c.dim())?;
    let direct = c.dual().weight_distribution()?;
    let pass = transformed == direct;
    Ok(MacWilliamsReport {
        transformed,
        direct,
        pass,
    })
}

/// An identity between two exact rational scalars.
#[derive(Clone, Debug)]
pub struct RatioIdentityReport {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub pass: bool,
}

/// An identity between two exact rational vectors.
#[derive(Clone, Debug)]
pub struct VectorIdentityReport {
    pub lhs: Vec<BigRational>,
    pub rhs: Vec<BigRational>,
    pub pass: bool,
}

/// A numerically-checked scalar identity.
#[derive(Clone, Debug)]
pub struct NumericIdentityReport {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_diff: f64,
    pub tol: f64,
    pub pass: bool,
}

/// A polynomial identity checked at sample points.
#[derive(Clone, Debug)]
pub struct GeneratingIdentityReport {
    pub max_abs_diff: f64,
    pub samples: usize,
    pub tol: f64,
    pub pass: bool,
}

/// Shell sums A_k[f] = sum_{wt(x)=k} f(x) and their transform-side
/// counterparts for a dense complex function.
#[derive(Clone, Debug)]
pub struct SpectralSums {
    pub q: u64,
    pub n: usize,
    pub a: Vec<Complex64>,
    pub a_hat: Vec<Complex64>,
}

/// Computes both shell-sum sequences. As an internal consistency check this
/// asserts the Krawtchouk relation A_hat_k = q^{-n/2} sum_m P_k(m) A_m; a
/// violation beyond floating tolerance is an implementation bug.
pub fn spectral_sums(f: &DenseFunction) -> SpectralSums {
    let q = f.q().get();
    let n = f.n();
    let fhat = fourier::transform(f);
    let mut a = vec![Complex64::zero(); n + 1];
    let mut a_hat = vec![Complex64::zero(); n + 1];
    for (idx, v) in f.values().iter().enumerate() {
        a[fourier::weight_of_index(q, n, idx)] += v;
    }
    for (idx, v) in fhat.values().iter().enumerate() {
        a_hat[fourier::weight_of_index(q, n, idx)] += v;
    }

    let scale = (q as f64).powi(n as i32).sqrt();
    let l1: f64 = a.iter().map(|v| v.norm()).sum();
    for (k, hat_k) in a_hat.iter().enumerate() {
        let mut rhs = Complex64::zero();
        for (m, am) in a.iter().enumerate() {
            let p = krawtchouk(k, m, n, q)
                .expect("indices in range")
                .to_f64()
                .expect("desk-scale Krawtchouk values fit f64");
            rhs += am * p;
        }
        rhs /= scale;
        assert!(
            (hat_k - rhs).norm() <= 1e-8 * (1.0 + l1),
            "spectral sums violate the Krawtchouk relation at k = {}",
            k
        );
    }
    SpectralSums { q, n, a, a_hat }
}

/// Exact shell sums for the indicator of an affine code, with the
/// transform side scaled by q^{n/2} so everything is an integer:
/// a_hat_scaled[k] = q^{n/2} A_hat_k[1_C], computed as an exact sum of
/// roots of unity per weight shell.
#[derive(Clone, Debug)]
pub struct ExactSpectralSums {
    pub q: u64,
    pub n: usize,
    pub a: Vec<BigUint>,
    pub a_hat_scaled: Vec<BigInt>,
}

pub fn indicator_spectral_sums_exact(code: &AffineCode) -> Result<ExactSpectralSums> {
    let q = code.q();
    let n = code.length();
    let points = {
        let mut acc: u128 = 1;
        for _ in 0..n {
            acc = acc.saturating_mul(q.get() as u128);
        }
        if acc > fourier::MAX_DENSE_POINTS as u128 {
            return Err(Error::DenseTooLarge {
                points: acc,
                limit: fourier::MAX_DENSE_POINTS,
            });
        }
        acc as usize
    };
    let words: Vec<FqVector> = code.codewords()?.collect();
    let mut shells: Vec<CyclotomicSum> = (0..=n).map(|_| CyclotomicSum::new(q.get())).collect();
    for zi in 0..points {
        let z = FqVector::new(q, fourier::coords_of(q.get(), n, zi))?;
        let shell = &mut shells[z.weight()];
        for x in &words {
            shell.add_root(x.inner_product(&z)?);
        }
    }
    let a = code.weight_distribution()?.counts().to_vec();
    let a_hat_scaled = shells
        .into_iter()
        .map(|s| s.to_integer().ok_or(Error::IrrationalCharacterSum))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExactSpectralSums {
        q: q.get(),
        n,
        a,
        a_hat_scaled,
    })
}

/// Exact check of the Krawtchouk relation on an indicator: the character-sum
/// route q^{n/2} A_hat_k must equal sum_m P_k(m) A_m.
pub fn verify_shell_transform_exact(c: &LinearCode) -> Result<VectorIdentityReport> {
    let sums = indicator_spectral_sums_exact(&AffineCode::from_linear(c.clone()))?;
    let n = sums.n;
    let mut lhs = Vec::with_capacity(n + 1);
    let mut rhs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        lhs.push(rat(sums.a_hat_scaled[k].clone()));
        let mut acc = BigInt::zero();
        for m in 0..=n {
            acc += krawtchouk(k, m, n, sums.q)? * BigInt::from(sums.a[m].clone());
        }
        rhs.push(rat(acc));
    }
    let pass = lhs == rhs;
    Ok(VectorIdentityReport { lhs, rhs, pass })
}

fn alternating_factor(m: usize, q: u64) -> BigRational {
    // 1 - (-1)^{m+1} / (q-1)^{m+1}
    let qm1 = BigInt::from(q - 1).pow((m + 1) as u32);
    let sign = if (m + 1).is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    BigRational::one() - BigRational::new(sign, qm1)
}

/// Exact verification of the generalized shell-sum identity on an affine
/// code's indicator, with both sides scaled by q^{n/2}:
///
/// sum_k (q^{n/2} A_hat_k) / ((q-1)^k C(n,k)) =
///   ((n+1)(q-1)/q) sum_m (A_m / (m+1)) (1 - (-1)^{m+1}/(q-1)^{m+1}).
pub fn verify_harmonic_identity_exact(code: &AffineCode) -> Result<RatioIdentityReport> {
    let sums = indicator_spectral_sums_exact(code)?;
    let (q, n) = (sums.q, sums.n);
    let mut lhs = BigRational::zero();
    for k in 0..=n {
        lhs += BigRational::new(
            sums.a_hat_scaled[k].clone(),
            BigInt::from(shell_size(k, n, q)),
        );
    }
    let mut rhs = BigRational::zero();
    for m in 0..=n {
        let term = BigRational::new(BigInt::from(sums.a[m].clone()), BigInt::from(m + 1));
        rhs += term * alternating_factor(m, q);
    }
    rhs *= BigRational::new(BigInt::from((n as u64 + 1) * (q - 1)), BigInt::from(q));
    let pass = lhs == rhs;
    Ok(RatioIdentityReport { lhs, rhs, pass })
}

/// Numerical form of the same identity for an arbitrary dense function.
pub fn verify_harmonic_identity(f: &DenseFunction, tol: f64) -> NumericIdentityReport {
    let sums = spectral_sums(f);
    let (q, n) = (sums.q, sums.n);
    let mut lhs = Complex64::zero();
    for k in 0..=n {
        let shell = shell_size(k, n, q)
            .to_f64()
            .expect("desk-scale shell sizes fit f64");
        lhs += sums.a_hat[k] / shell;
    }
    let mut rhs = Complex64::zero();
    for m in 0..=n {
        let factor = alternating_factor(m, q).to_f64().expect("factor fits f64");
        rhs += sums.a[m] / (m as f64 + 1.0) * factor;
    }
    rhs *= (n as f64 + 1.0) * (q as f64 - 1.0) / (q as f64).powf(1.0 + n as f64 / 2.0);
    let abs_diff = (lhs - rhs).norm();
    NumericIdentityReport {
        lhs,
        rhs,
        abs_diff,
        tol,
        pass: abs_diff <= tol,
    }
}

/// Exact verification of the code form of the identity:
///
/// sum_k A_k(V) / ((q-1)^k C(n,k)) =
///   ((n+1)(q-1)/q^{1+n-dim V}) sum_k (A_k(V_dual)/(k+1)) (1 - (-1)^{k+1}/(q-1)^{k+1}).
pub fn verify_harmonic_dual_identity(c: &LinearCode) -> Result<RatioIdentityReport> {
    let q = c.q().get();
    let n = c.length();
    let primal = c.weight_distribution()?;
    let dual = c.dual().weight_distribution()?;
    let mut lhs = BigRational::zero();
    for k in 0..=n {
        lhs += BigRational::new(
            BigInt::from(primal.count(k).clone()),
            BigInt::from(shell_size(k, n, q)),
        );
    }
    let mut rhs = BigRational::zero();
    for k in 0..=n {
        let term = BigRational::new(BigInt::from(dual.count(k).clone()), BigInt::from(k + 1));
        rhs += term * alternating_factor(k, q);
    }
    let denom = BigInt::from(q).pow((1 + n - c.dim()) as u32);
    rhs *= BigRational::new(BigInt::from((n as u64 + 1) * (q - 1)), denom);
    let pass = lhs == rhs;
    Ok(RatioIdentityReport { lhs, rhs, pass })
}

/// Exact verification of the binary special case:
///
/// sum_k A_k(V) / C(n,k) = ((n+1)/2^{n-dim V}) sum_{k even} A_k(V_dual)/(k+1).
pub fn verify_binary_even_identity(c: &LinearCode) -> Result<RatioIdentityReport> {
    if c.q().get() != 2 {
        return Err(Error::BinaryOnly(c.q().get()));
    }
    let n = c.length();
    let primal = c.weight_distribution()?;
    let dual = c.dual().weight_distribution()?;
    let mut lhs = BigRational::zero();
    for k in 0..=n {
        lhs += BigRational::new(
            BigInt::from(primal.count(k).clone()),
            BigInt::from(binomial(n, k)),
        );
    }
    let mut rhs = BigRational::zero();
    for k in (0..=n).step_by(2) {
        rhs += BigRational::new(BigInt::from(dual.count(k).clone()), BigInt::from(k + 1));
    }
    rhs *= BigRational::new(
        BigInt::from(n as u64 + 1),
        BigInt::from(2u64).pow((n - c.dim()) as u32),
    );
    let pass = lhs == rhs;
    Ok(RatioIdentityReport { lhs, rhs, pass })
}

/// Checks the generating-function identity
/// q^{n/2} sum_k A_hat_k z^k = sum_m A_m (1-z)^m (1+(q-1)z)^{n-m}
/// at the given sample points. Both sides are degree-n polynomials in z, so
/// agreement at n+1 distinct points establishes the identity; fewer samples
/// are rejected.
pub fn verify_generating_identity(
    f: &DenseFunction,
    z_samples: &[f64],
    tol: f64,
) -> Result<GeneratingIdentityReport> {
    let n = f.n();
    let mut distinct = z_samples.to_vec();
    distinct.sort_by(|a, b| a.partial_cmp(b).expect("finite samples"));
    distinct.dedup();
    if distinct.len() < n + 1 {
        return Err(Error::NotEnoughSamples {
            needed: n + 1,
            got: distinct.len(),
        });
    }
    let sums = spectral_sums(f);
    let q = sums.q as f64;
    let scale = q.powi(n as i32).sqrt();
    let mut max_abs_diff = 0.0f64;
    for &z in &distinct {
        let mut lhs = Complex64::zero();
        let mut zk = 1.0f64;
        for k in 0..=n {
            lhs += sums.a_hat[k] * zk;
            zk *= z;
        }
        lhs *= scale;
        let mut rhs = Complex64::zero();
        for m in 0..=n {
            let factor = (1.0 - z).powi(m as i32) * (1.0 + (q - 1.0) * z).powi((n - m) as i32);
            rhs += sums.a[m] * factor;
        }
        max_abs_diff = max_abs_diff.max((lhs - rhs).norm());
    }
    Ok(GeneratingIdentityReport {
        max_abs_diff,
        samples: distinct.len(),
        tol,
        pass: max_abs_diff <= tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::all_subspaces;
    use crate::galois::FieldOrder;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(q: u64) -> FieldOrder {
        FieldOrder::new(q).unwrap()
    }

    fn vec_q(q: u64, coords: &[u64]) -> FqVector {
        FqVector::new(gf(q), coords.to_vec()).unwrap()
    }

    fn code_q(q: u64, n: usize, rows: &[&[u64]]) -> LinearCode {
        let vs: Vec<FqVector> = rows.iter().map(|r| vec_q(q, r)).collect();
        LinearCode::from_generators(gf(q), n, &vs).unwrap()
    }

    fn rep2() -> LinearCode {
        code_q(2, 2, &[&[1, 1]])
    }

    fn random_code(q: u64, n: usize, k: usize, rng: &mut ChaCha8Rng) -> LinearCode {
        loop {
            let rows: Vec<FqVector> = (0..k)
                .map(|_| vec_q(q, &(0..n).map(|_| rng.gen_range(0..q)).collect::<Vec<_>>()))
                .collect();
            let c = LinearCode::from_generators(gf(q), n, &rows).unwrap();
            if c.dim() == k {
                return c;
            }
        }
    }

    #[test]
    fn transform_examples() {
        // Self-dual {00, 11}.
        let w = WeightDistribution::from_u64_counts(2, 2, &[1, 0, 1]).unwrap();
        let t = macwilliams_transform(&w, 1).unwrap();
        assert_eq!(t, w);

        // Full space -> zero code.
        let full = WeightDistribution::full_space(3, 3);
        let t = macwilliams_transform(&full, 3).unwrap();
        assert_eq!(t.to_decimal_strings(), vec!["1", "0", "0", "0"]);

        // Zero code -> full space.
        let zero = WeightDistribution::from_u64_counts(3, 3, &[1, 0, 0, 0]).unwrap();
        let t = macwilliams_transform(&zero, 0).unwrap();
        assert_eq!(t, WeightDistribution::full_space(3, 3));
    }

    #[test]
    fn transform_rejects_invalid_distribution() {
        // (0, 2, 0) is no linear code's distribution (it misses the zero
        // word); its transform has a negative entry.
        let w = WeightDistribution::from_u64_counts(2, 2, &[0, 2, 0]).unwrap();
        assert!(matches!(
            macwilliams_transform(&w, 1),
            Err(Error::InvalidDistribution(_))
        ));
    }

    #[test]
    fn transform_involution_exhaustive() {
        for (q, n) in [(2u64, 4usize), (2, 5), (3, 3)] {
            for c in all_subspaces(gf(q), n).unwrap() {
                let w = c.weight_distribution().unwrap();
                let t = macwilliams_transform(&w, c.dim()).unwrap();
                let back = macwilliams_transform(&t, n - c.dim()).unwrap();
                assert_eq!(back, w, "involution failed for {}", c.brief());
            }
        }
    }

    #[test]
    fn macwilliams_exhaustive_and_random() {
        let subs = all_subspaces(gf(2), 4).unwrap();
        assert_eq!(subs.len(), 67);
        for c in &subs {
            assert!(
                verify_macwilliams(c).unwrap().pass,
                "MacWilliams check failed for {}",
                c.brief()
            );
        }
        for c in all_subspaces(gf(3), 3).unwrap() {
            assert!(verify_macwilliams(&c).unwrap().pass);
        }
        assert!(verify_macwilliams(&rep2()).unwrap().pass);

        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let c = random_code(3, 6, 5, &mut rng);
        assert!(verify_macwilliams(&c).unwrap().pass);
    }

    #[test]
    fn exact_shell_sums_match_dual_relation() {
        // For the indicator of a subspace, q^{n/2} A_hat_k = q^{dim} A_k(dual).
        for (q, n) in [(2u64, 4usize), (3, 3)] {
            for c in all_subspaces(gf(q), n).unwrap() {
                let sums =
                    indicator_spectral_sums_exact(&AffineCode::from_linear(c.clone())).unwrap();
                let dual = c.dual().weight_distribution().unwrap();
                let qdim = BigInt::from(q).pow(c.dim() as u32);
                for k in 0..=n {
                    assert_eq!(
                        sums.a_hat_scaled[k],
                        &qdim * BigInt::from(dual.count(k).clone())
                    );
                }
            }
        }
    }

    #[test]
    fn shell_transform_exact_exhaustive() {
        for (q, n) in [(2u64, 4usize), (3, 3)] {
            for c in all_subspaces(gf(q), n).unwrap() {
                assert!(
                    verify_shell_transform_exact(&c).unwrap().pass,
                    "shell transform check failed for {}",
                    c.brief()
                );
            }
        }
    }

    #[test]
    fn spectral_sums_examples() {
        // Indicator of {00, 11}: A_hat_k = q^{dim - n/2} A_k(dual) = A_k here.
        let f = DenseFunction::indicator(&AffineCode::from_linear(rep2())).unwrap();
        let sums = spectral_sums(&f);
        assert!((sums.a[0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(sums.a[1].norm() < 1e-12);
        assert!((sums.a[2] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        for k in 0..=2 {
            assert!((sums.a_hat[k] - sums.a[k]).norm() < 1e-9);
        }

        // Delta at zero: A_0 = 1, A_hat_k = q^{-n/2} (q-1)^k C(n,k).
        let f = DenseFunction::delta(gf(3), 3, 0).unwrap();
        let sums = spectral_sums(&f);
        assert!((sums.a[0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        for k in 1..=3 {
            assert!(sums.a[k].norm() < 1e-12);
        }
        let scale = 27f64.sqrt();
        for k in 0..=3 {
            let expected = shell_size(k, 3, 3).to_f64().unwrap() / scale;
            assert!((sums.a_hat[k] - Complex64::new(expected, 0.0)).norm() < 1e-9);
        }

        // Zero function: all zero.
        let sums = spectral_sums(&DenseFunction::zero(gf(2), 3).unwrap());
        assert!(sums.a.iter().chain(&sums.a_hat).all(|v| v.norm() < 1e-12));
    }

    #[test]
    fn harmonic_identity_exact_on_codes() {
        let rep = verify_harmonic_identity_exact(&AffineCode::from_linear(rep2())).unwrap();
        assert!(rep.pass);

        for (q, n) in [(2u64, 4usize), (3, 3)] {
            for c in all_subspaces(gf(q), n).unwrap() {
                let rep =
                    verify_harmonic_identity_exact(&AffineCode::from_linear(c.clone())).unwrap();
                assert!(rep.pass, "harmonic identity failed for {}", c.brief());
            }
        }

        // Also on a genuinely affine code: a coset of {(x,x)} in Q_2^4.
        let d = code_q(2, 4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]);
        let coset = AffineCode::new(&vec_q(2, &[0, 0, 1, 1]), d).unwrap();
        assert!(verify_harmonic_identity_exact(&coset).unwrap().pass);
    }

    #[test]
    fn harmonic_identity_numeric_on_delta_and_random() {
        // Delta at zero: both sides equal (n+1) q^{-n/2}.
        let f = DenseFunction::delta(gf(2), 3, 0).unwrap();
        let rep = verify_harmonic_identity(&f, 1e-9);
        assert!(rep.pass);
        let expected = 4.0 / 8f64.sqrt();
        assert!((rep.lhs - Complex64::new(expected, 0.0)).norm() < 1e-12);

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = DenseFunction::from_fn(gf(3), 6, |_| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
        .unwrap();
        let rep = verify_harmonic_identity(&f, 1e-9);
        assert!(rep.pass, "abs diff {}", rep.abs_diff);
    }

    #[test]
    fn harmonic_identity_reduces_to_dual_form_on_indicators() {
        // Both reports carry the same two side values up to q^{dim V - n/2},
        // after undoing the q^{n/2} scaling of the exact path:
        // harmonic_scaled(1_V) = q^{dim V} * harmonic_dual(V_dual).
        for (q, n) in [(2u64, 4usize), (3, 3)] {
            for c in all_subspaces(gf(q), n).unwrap() {
                let scaled =
                    verify_harmonic_identity_exact(&AffineCode::from_linear(c.clone())).unwrap();
                let dual_form = verify_harmonic_dual_identity(&c.dual()).unwrap();
                let factor = rat(BigInt::from(q).pow(c.dim() as u32));
                assert_eq!(scaled.lhs, &factor * &dual_form.lhs);
                assert_eq!(scaled.rhs, &factor * &dual_form.rhs);
            }
        }
    }

    #[test]
    fn harmonic_dual_examples() {
        // {00, 11}: both sides 2.
        let rep = verify_harmonic_dual_identity(&rep2()).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.lhs, rat(BigInt::from(2)));

        // Full space: both sides n+1.
        for (q, n) in [(2u64, 4usize), (3, 3), (5, 2)] {
            let rep = verify_harmonic_dual_identity(&LinearCode::full_space(gf(q), n)).unwrap();
            assert!(rep.pass);
            assert_eq!(rep.lhs, rat(BigInt::from(n as u64 + 1)));
        }

        for (q, n) in [(2u64, 4usize), (3, 3)] {
            for c in all_subspaces(gf(q), n).unwrap() {
                assert!(
                    verify_harmonic_dual_identity(&c).unwrap().pass,
                    "harmonic dual identity failed for {}",
                    c.brief()
                );
            }
        }
        // A few prime fields beyond the exhaustive ones.
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for (q, n, k) in [(5u64, 3usize, 2usize), (5, 4, 2), (7, 3, 1)] {
            let c = random_code(q, n, k, &mut rng);
            assert!(verify_harmonic_dual_identity(&c).unwrap().pass);
        }
    }

    #[test]
    fn binary_even_identity_examples() {
        let rep = verify_binary_even_identity(&rep2()).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.lhs, rat(BigInt::from(2)));

        // Zero code: LHS = 1.
        let rep = verify_binary_even_identity(&LinearCode::zero_code(gf(2), 5)).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.lhs, BigRational::one());

        for c in all_subspaces(gf(2), 4).unwrap() {
            assert!(
                verify_binary_even_identity(&c).unwrap().pass,
                "binary even identity failed for {}",
                c.brief()
            );
        }

        assert!(matches!(
            verify_binary_even_identity(&LinearCode::zero_code(gf(3), 2)),
            Err(Error::BinaryOnly(3))
        ));
    }

    #[test]
    fn generating_identity_checks() {
        // Indicator of {00, 11} at rational sample points.
        let f = DenseFunction::indicator(&AffineCode::from_linear(rep2())).unwrap();
        let rep = verify_generating_identity(&f, &[0.0, 0.5, 1.0], 1e-9).unwrap();
        assert!(rep.pass);

        // Too few distinct samples.
        assert!(matches!(
            verify_generating_identity(&f, &[0.0, 0.5, 0.5], 1e-9),
            Err(Error::NotEnoughSamples { needed: 3, got: 2 })
        ));

        // Random complex function, q = 3.
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let f = DenseFunction::from_fn(gf(3), 4, |_| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
        .unwrap();
        let samples: Vec<f64> = (0..=4).map(|i| i as f64 / 4.0).collect();
        let rep = verify_generating_identity(&f, &samples, 1e-9).unwrap();
        assert!(rep.pass, "max diff {}", rep.max_abs_diff);
    }

    #[test]
    fn generating_coefficient_route_matches_exactly() {
        // Expand sum_m A_m (1-z)^m (1+(q-1)z)^{n-m} by exact polynomial
        // arithmetic and compare with the character-sum route.
        for (q, n) in [(2u64, 4usize), (3, 3)] {
            for c in all_subspaces(gf(q), n).unwrap() {
                let sums =
                    indicator_spectral_sums_exact(&AffineCode::from_linear(c.clone())).unwrap();
                let mut coeffs = vec![BigInt::zero(); n + 1];
                for m in 0..=n {
                    let row = crate::krawtchouk::krawtchouk_row_from_gf(m, n, q).unwrap();
                    let am = BigInt::from(sums.a[m].clone());
                    for (k, coeff) in row.iter().enumerate() {
                        coeffs[k] += coeff * &am;
                    }
                }
                assert_eq!(coeffs, sums.a_hat_scaled, "code {}", c.brief());
            }
        }
    }
}
