//! The explicit extremal objects over GF(2): the constant-weight affine
//! codes M_{n,i} = {(x, x xor 1, 0) : x in Q_2^{(n-i)/2}}, their linear span
//! C_n, and the minimal-support transform eigenfunction g — together with
//! the cardinality bounds they are extremal for.

use num::complex::Complex64;
use num::{BigUint, Zero};

use crate::codes::{AffineCode, LinearCode};
use crate::error::{Error, Result};
use crate::fourier::DenseFunction;
use crate::galois::{FieldOrder, FqVector};
use crate::krawtchouk::binomial;

fn gf2() -> FieldOrder {
    FieldOrder::new(2).expect("2 is prime")
}

/// Generator rows e_j + e_{j+h} of the repetition-pair subspace
/// {(x, x, 0)} in Q_2^n.
fn pair_rows(n: usize, h: usize) -> Vec<FqVector> {
    (0..h)
        .map(|j| {
            let mut coords = vec![0u64; n];
            coords[j] = 1;
            coords[j + h] = 1;
            FqVector::new(gf2(), coords).expect("binary entries")
        })
        .collect()
}

/// The affine code M_{n,i} = {(x, x xor 1, 0) : x in Q_2^{(n-i)/2}}:
/// 2^{(n-i)/2} words, every one of weight exactly (n-i)/2.
///
/// Requires 0 <= i <= n with n - i even and n - i >= 2.
pub fn build_m(n: usize, i: usize) -> Result<AffineCode> {
    if i > n {
        return Err(Error::InvalidConstruction(format!(
            "i = {} exceeds n = {}",
            i, n
        )));
    }
    if !(n - i).is_multiple_of(2) {
        return Err(Error::InvalidConstruction(format!(
            "n - i = {} must be even",
            n - i
        )));
    }
    if n - i < 2 {
        return Err(Error::InvalidConstruction(format!(
            "n - i = {} must be at least 2",
            n - i
        )));
    }
    let h = (n - i) / 2;
    let linear = LinearCode::from_generators(gf2(), n, &pair_rows(n, h))?;
    let mut offset = vec![0u64; n];
    for c in offset.iter_mut().skip(h).take(h) {
        *c = 1;
    }
    AffineCode::new(&FqVector::new(gf2(), offset)?, linear)
}

/// The linear span C_n of M_{n,0}: the subspace {(x, x)} extended by the
/// translate (0, 1), of dimension 1 + n/2. Requires even n >= 2.
pub fn build_c(n: usize) -> Result<LinearCode> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidConstruction(format!(
            "n = {} must be even and >= 2",
            n
        )));
    }
    let h = n / 2;
    let mut rows = pair_rows(n, h);
    let mut v = vec![0u64; n];
    for c in v.iter_mut().skip(h) {
        *c = 1;
    }
    rows.push(FqVector::new(gf2(), v)?);
    LinearCode::from_generators(gf2(), n, &rows)
}

/// The function g on Q_2^n (n even): g(y) = (-1)^{wt(x)} when
/// y = (x, x xor 1), and 0 elsewhere. Its support is 2^{n/2} points inside
/// the weight-n/2 shell, and it is an eigenfunction of the transform.
pub fn build_g(n: usize) -> Result<DenseFunction> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidConstruction(format!(
            "n = {} must be even and >= 2",
            n
        )));
    }
    let h = n / 2;
    let mut values = vec![Complex64::zero(); 1usize << n];
    let mask = (1usize << h) - 1;
    for x in 0..=mask {
        let index = x | ((!x & mask) << h);
        let sign = if (x.count_ones() & 1) == 0 { 1.0 } else { -1.0 };
        values[index] = Complex64::new(sign, 0.0);
    }
    DenseFunction::new(gf2(), n, values)
}

/// b(n, q, k) = sum_{j<=k} (q-1)^j C(n,j): the size of the radius-k Hamming
/// ball in Q_q^n.
pub fn hamming_ball(n: usize, q: u64, k: usize) -> Result<BigUint> {
    if q < 2 {
        return Err(Error::Parse(format!("q must be >= 2, got {}", q)));
    }
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let mut acc = BigUint::zero();
    for j in 0..=k {
        acc += BigUint::from(q - 1).pow(j as u32) * binomial(n, j);
    }
    Ok(acc)
}

/// L(n, 2, k) = 2^{(n+|n-2k|)/2}: the minimal support size of a function on
/// Q_2^n whose transform is supported on the weight-k shell.
pub fn binary_min_support(n: usize, k: usize) -> Result<BigUint> {
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let theta = (n as i64 - 2 * k as i64).unsigned_abs() as usize;
    Ok(BigUint::from(2u64).pow(((n + theta) / 2) as u32))
}

/// A cardinality bound verdict: `pass` iff size <= bound, `tight` iff they
/// are equal.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub bound_name: &'static str,
    pub size: BigUint,
    pub bound: BigUint,
    pub tight: bool,
    pub pass: bool,
}

impl BoundReport {
    fn new(bound_name: &'static str, size: BigUint, bound: BigUint) -> Self {
        let tight = size == bound;
        let pass = size <= bound;
        BoundReport {
            bound_name,
            size,
            bound,
            tight,
            pass,
        }
    }
}

/// Ball bound for t-weight linear codes: a linear code whose nonzero words
/// take t distinct weights has at most b(n, q, t) words.
///
/// `declared_weights` is validated against the code (every nonzero weight
/// that occurs must be declared), but t is computed from the code itself.
pub fn check_ball_bound(c: &LinearCode, declared_weights: &[usize]) -> Result<BoundReport> {
    let actual = c.nonzero_weights()?;
    for &w in actual.iter().filter(|&&w| w != 0) {
        if !declared_weights.contains(&w) {
            return Err(Error::WeightProfileMismatch { weight: w });
        }
    }
    let t = actual.iter().filter(|&&w| w != 0).count();
    let bound = hamming_ball(c.length(), c.q().get(), t)?;
    Ok(BoundReport::new("ball", c.size(), bound))
}

fn require_constant_weight(c: &AffineCode, k: usize) -> Result<()> {
    if c.q().get() != 2 {
        return Err(Error::BinaryOnly(c.q().get()));
    }
    let weights = c.nonzero_weights()?;
    for &w in &weights {
        if w != k {
            return Err(Error::NotConstantWeight {
                found: w,
                expected: k,
            });
        }
    }
    Ok(())
}

/// Constant-weight bound: a binary affine code inside the weight-k shell
/// has at most 2^{(n-|n-2k|)/2} words. M_{n, n-2k} attains it.
pub fn check_constant_weight_bound(c: &AffineCode, k: usize) -> Result<BoundReport> {
    require_constant_weight(c, k)?;
    let n = c.length();
    let theta = (n as i64 - 2 * k as i64).unsigned_abs() as usize;
    let bound = BigUint::from(2u64).pow(((n - theta) / 2) as u32);
    Ok(BoundReport::new("constant_weight", c.size(), bound))
}

/// The same bound via the minimal-support value: |C| <= 2^n / L(n, 2, k).
/// Coincides with [`check_constant_weight_bound`]'s bound.
pub fn check_support_quotient_bound(c: &AffineCode, k: usize) -> Result<BoundReport> {
    require_constant_weight(c, k)?;
    let n = c.length();
    let bound = BigUint::from(2u64).pow(n as u32) / binary_min_support(n, k)?;
    Ok(BoundReport::new("support_quotient", c.size(), bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::all_subspaces;
    use crate::fourier::{self, eigenfunction_check, support, uncertainty_report};
    use num::One;

    #[test]
    fn m_4_0_expands_to_the_four_pair_words() {
        let m = build_m(4, 0).unwrap();
        let mut words: Vec<Vec<u64>> = m
            .codewords()
            .unwrap()
            .map(|w| w.coords().to_vec())
            .collect();
        words.sort();
        assert_eq!(
            words,
            vec![
                vec![0, 0, 1, 1],
                vec![0, 1, 1, 0],
                vec![1, 0, 0, 1],
                vec![1, 1, 0, 0],
            ]
        );
    }

    #[test]
    fn m_6_2_is_weight_two_with_zero_padding() {
        let m = build_m(6, 2).unwrap();
        let words: Vec<FqVector> = m.codewords().unwrap().collect();
        assert_eq!(words.len(), 4);
        for w in &words {
            assert_eq!(w.weight(), 2);
            assert_eq!(w.get(4), 0);
            assert_eq!(w.get(5), 0);
        }
    }

    #[test]
    fn m_parameter_validation() {
        assert!(build_m(5, 0).is_err()); // n - i odd
        assert!(build_m(4, 4).is_err()); // n - i = 0
        assert!(build_m(3, 5).is_err()); // i > n
    }

    #[test]
    fn m_is_one_weight_and_tight_for_the_constant_weight_bound() {
        for n in 2..=12usize {
            for i in 0..=n {
                if (n - i) % 2 != 0 || n - i < 2 {
                    continue;
                }
                let k = (n - i) / 2;
                let m = build_m(n, i).unwrap();
                assert_eq!(m.size(), BigUint::from(2u64).pow(k as u32));
                let weights: Vec<usize> = m.nonzero_weights().unwrap().into_iter().collect();
                assert_eq!(weights, vec![k], "M_{{{},{}}} is not 1-weight", n, i);
                let rep = check_constant_weight_bound(&m, k).unwrap();
                assert!(rep.pass && rep.tight, "M_{{{},{}}} not tight", n, i);
                let rep5 = check_support_quotient_bound(&m, k).unwrap();
                assert_eq!(rep5.bound, rep.bound);
                assert!(rep5.tight);
            }
        }
    }

    #[test]
    fn c_n_dimension_and_pair_subspace() {
        for n in (2..=10usize).step_by(2) {
            let c = build_c(n).unwrap();
            assert_eq!(c.dim(), 1 + n / 2);
            let pairs = LinearCode::from_generators(gf2(), n, &pair_rows(n, n / 2)).unwrap();
            assert!(pairs.is_subspace_of(&c));
            // C_n = M_{n,0} together with the pair subspace.
            let m = build_m(n, 0).unwrap();
            assert!(m.codewords().unwrap().all(|w| c.contains(&w)));
        }
        assert!(build_c(5).is_err());
        assert!(build_c(0).is_err());
    }

    #[test]
    fn c_n_weight_counts_from_enumeration() {
        // A_{n/2}(C_n) is 2^{n/2} from the shifted words plus, when 4 | n,
        // C(n/2, n/4) pair words (x,x) of weight n/2; A_2(C_n) is the n/2
        // pair words of weight 2 plus, at n = 4 only, the 2^{n/2} shifted
        // words which then also have weight 2.
        for n in (2..=10usize).step_by(2) {
            let c = build_c(n).unwrap();
            let dist = c.weight_distribution().unwrap();
            let mut expected_half = BigUint::from(2u64).pow((n / 2) as u32);
            if n % 4 == 0 {
                expected_half += binomial(n / 2, n / 4);
            }
            assert_eq!(
                dist.count(n / 2),
                &expected_half,
                "A_{{n/2}}(C_{}) wrong",
                n
            );

            let mut expected_two = BigUint::from((n / 2) as u64);
            if n == 4 {
                expected_two += BigUint::from(4u64);
            }
            assert_eq!(dist.count(2), &expected_two, "A_2(C_{}) wrong", n);
        }
    }

    #[test]
    fn g_values_at_n_2() {
        let g = build_g(2).unwrap();
        // y = (0,1) has index 2 and sign +1 (x = 0); y = (1,0) has index 1
        // and sign -1 (x = 1).
        assert_eq!(g.value_at(0), Complex64::zero());
        assert_eq!(g.value_at(1), Complex64::new(-1.0, 0.0));
        assert_eq!(g.value_at(2), Complex64::new(1.0, 0.0));
        assert_eq!(g.value_at(3), Complex64::zero());
        assert!(build_g(3).is_err());
    }

    #[test]
    fn g_support_and_values() {
        for n in (2..=8usize).step_by(2) {
            let g = build_g(n).unwrap();
            let supp = support(&g, 0.0);
            assert_eq!(supp.len(), 1 << (n / 2));
            for &idx in &supp {
                assert_eq!(fourier::weight_of_index(2, n, idx), n / 2);
                let v = g.value_at(idx);
                assert!(v.im == 0.0 && (v.re == 1.0 || v.re == -1.0));
            }
        }
    }

    #[test]
    fn g_is_an_eigenfunction_with_sign_minus_one_to_the_half_n() {
        // transform(g) = (-1)^{n/2} g: eigenvalue +1 when 4 | n, -1 when
        // n = 2 mod 4.
        for n in (2..=8usize).step_by(2) {
            let g = build_g(n).unwrap();
            let rep = eigenfunction_check(&g, 1e-9).unwrap();
            let expected = if (n / 2) % 2 == 0 { 1 } else { -1 };
            assert_eq!(rep.eigenvalue, Some(expected), "n = {}", n);
            assert!(rep.residual < 1e-9);
        }
    }

    #[test]
    fn g_attains_uncertainty_equality() {
        for n in (2..=8usize).step_by(2) {
            let g = build_g(n).unwrap();
            let rep = uncertainty_report(&g, 1e-9).unwrap();
            assert_eq!(rep.support_f, 1 << (n / 2));
            assert_eq!(rep.support_fhat, 1 << (n / 2));
            assert_eq!(rep.product, rep.bound);
            assert!(rep.pass);
        }
    }

    #[test]
    fn hamming_ball_values() {
        assert_eq!(hamming_ball(7, 3, 0).unwrap(), BigUint::one());
        assert_eq!(hamming_ball(4, 2, 4).unwrap(), BigUint::from(16u32));
        assert_eq!(hamming_ball(3, 3, 3).unwrap(), BigUint::from(27u32));
        assert_eq!(hamming_ball(4, 2, 1).unwrap(), BigUint::from(5u32));
        assert!(hamming_ball(4, 2, 5).is_err());
    }

    #[test]
    fn ball_bound_checks() {
        // C_4 is 2-weight: 8 <= b(4,2,2) = 11.
        let c = build_c(4).unwrap();
        let rep = check_ball_bound(&c, &[2, 4]).unwrap();
        assert!(rep.pass && !rep.tight);
        assert_eq!(rep.bound, BigUint::from(11u32));

        // Zero code: 1 <= 1, tight.
        let rep = check_ball_bound(&LinearCode::zero_code(gf2(), 4), &[]).unwrap();
        assert!(rep.pass && rep.tight);

        // Repetition code {0^n, 1^n}: 1-weight, 2 <= 1 + n.
        let rows = [FqVector::new(gf2(), vec![1; 5]).unwrap()];
        let repc = LinearCode::from_generators(gf2(), 5, &rows).unwrap();
        let rep = check_ball_bound(&repc, &[5]).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.bound, BigUint::from(6u32));

        // Declared profile that misses an actual weight is rejected.
        assert!(matches!(
            check_ball_bound(&c, &[2]),
            Err(Error::WeightProfileMismatch { weight: 4 })
        ));
    }

    #[test]
    fn binary_min_support_values() {
        assert_eq!(binary_min_support(6, 3).unwrap(), BigUint::from(8u32));
        assert_eq!(binary_min_support(6, 0).unwrap(), BigUint::from(64u32));
        assert_eq!(binary_min_support(6, 6).unwrap(), BigUint::from(64u32));
        assert_eq!(binary_min_support(5, 2).unwrap(), BigUint::from(8u32));
        assert!(binary_min_support(4, 5).is_err());
    }

    #[test]
    fn constant_weight_and_support_quotient_bounds() {
        // A single word of weight k.
        let zero = LinearCode::zero_code(gf2(), 6);
        let word = FqVector::new(gf2(), vec![1, 1, 0, 0, 0, 0]).unwrap();
        let single = AffineCode::new(&word, zero).unwrap();
        let rep = check_constant_weight_bound(&single, 2).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.bound, BigUint::from(4u32));
        let rep5 = check_support_quotient_bound(&single, 2).unwrap();
        assert_eq!(rep5.bound, rep.bound);

        // k = n: the all-ones singleton is tight (bound 2^{(n-n)/2} = 1).
        let ones = FqVector::new(gf2(), vec![1; 4]).unwrap();
        let single = AffineCode::new(&ones, LinearCode::zero_code(gf2(), 4)).unwrap();
        let rep = check_support_quotient_bound(&single, 4).unwrap();
        assert!(rep.pass && rep.tight);

        // Mixed weights are rejected.
        let rep2 =
            LinearCode::from_generators(gf2(), 2, &[FqVector::new(gf2(), vec![1, 1]).unwrap()])
                .unwrap();
        assert!(matches!(
            check_constant_weight_bound(&AffineCode::from_linear(rep2), 2),
            Err(Error::NotConstantWeight { .. })
        ));
    }

    #[test]
    fn no_affine_code_in_the_middle_shell_of_q2_4_beats_the_bound() {
        // Brute force over every affine code of Q_2^4 (all subspaces, all
        // cosets): those inside the weight-2 shell have at most 4 words.
        let mut best = BigUint::zero();
        let mut tight_found = false;
        for sub in all_subspaces(gf2(), 4).unwrap() {
            for rep in sub.coset_representatives().unwrap() {
                let affine = AffineCode::new(&rep, sub.clone()).unwrap();
                let weights = affine.nonzero_weights().unwrap();
                if weights.iter().all(|&w| w == 2) {
                    let report = check_constant_weight_bound(&affine, 2).unwrap();
                    assert!(report.pass);
                    if report.size > best {
                        best = report.size.clone();
                    }
                    if report.tight {
                        tight_found = true;
                    }
                }
            }
        }
        assert_eq!(best, BigUint::from(4u32));
        assert!(tight_found);
    }

    #[test]
    fn ball_bound_of_transform_supports_on_q2_4() {
        // For every subspace V: the indicator of V_dual has support size
        // |V_dual| = 2^n / |V| >= 2^n / b(n, 2, max weight of V), which is
        // the ball bound with the shells V actually occupies.
        for v in all_subspaces(gf2(), 4).unwrap() {
            let max_weight = v.nonzero_weights().unwrap().into_iter().max().unwrap_or(0);
            let ball = hamming_ball(4, 2, max_weight).unwrap();
            let supp_dual = v.dual().size();
            assert!(&supp_dual * v.size() == BigUint::from(16u32));
            assert!(
                supp_dual * &ball >= BigUint::from(16u32),
                "Delsarte bound violated for {}",
                v.brief()
            );
        }
    }
}
