//! Total Chern classes of symmetric powers of a rank-two bundle with
//! Chern roots `a`, `b`, formal difference classes, Segre coefficients,
//! and symbolic verifiers for the identities relating them.
//!
//! Everything here is a pure function producing exact integer
//! polynomials; identities that carry factorial or `(a - b)^l`
//! denominators are checked in cleared form so that no rational
//! arithmetic is needed.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::BiPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChernError {
    #[error("difference class requires d > k, got d = {d}, k = {k}")]
    DegreeOrder { d: u32, k: u32 },
}

/// Graded pieces `c_0 .. c_{k+1}` of the total Chern class of the k-th
/// symmetric power; `graded[i]` is symmetric homogeneous of degree `i`.
#[derive(Clone, Debug)]
pub struct ChernSeries {
    pub k: u32,
    pub graded: Vec<BiPoly>,
}

impl ChernSeries {
    /// `c_i`, with classes beyond the top treated as zero.
    pub fn piece(&self, i: u32) -> BiPoly {
        self.graded
            .get(i as usize)
            .cloned()
            .unwrap_or_else(BiPoly::zero)
    }

    /// The top class `c_{k+1}`.
    pub fn top(&self) -> &BiPoly {
        &self.graded[self.k as usize + 1]
    }
}

/// Expands `prod_{i=0}^{k} (1 + (k-i)a + ib)` into graded pieces.
///
/// For `k = 0` the symmetric power is the trivial line bundle and the
/// series is `[1, 0]`.
pub fn chern_sym_power(k: u32) -> ChernSeries {
    let mut graded = vec![BiPoly::one()];
    for i in 0..=k {
        let lin = BiPoly::linear_form(k - i, i);
        let mut next = Vec::with_capacity(graded.len() + 1);
        next.push(graded[0].clone());
        for j in 1..graded.len() {
            next.push(graded[j].add(&graded[j - 1].mul(&lin)));
        }
        next.push(graded.last().unwrap().mul(&lin));
        graded = next;
    }
    ChernSeries { k, graded }
}

/// Graded pieces of the formal difference class of the degree-`d` and
/// degree-`k` symmetric powers, computed up to a requested bound.
#[derive(Clone, Debug)]
pub struct DifferenceSeries {
    pub d: u32,
    pub k: u32,
    pub graded: Vec<BiPoly>,
}

/// Inductive quotient-class recursion:
/// `graded[i] = c_i(d) - sum_{j<i} graded[j] * c_{i-j}(k)`.
pub fn difference_class(d: u32, k: u32, upto: u32) -> Result<DifferenceSeries, ChernError> {
    if d <= k {
        return Err(ChernError::DegreeOrder { d, k });
    }
    let cd = chern_sym_power(d);
    let ck = chern_sym_power(k);
    let mut graded: Vec<BiPoly> = vec![BiPoly::one()];
    for i in 1..=upto {
        let mut piece = cd.piece(i);
        for j in 0..i {
            piece = piece.sub(&graded[j as usize].mul(&ck.piece(i - j)));
        }
        graded.push(piece);
    }
    Ok(DifferenceSeries { d, k, graded })
}

/// Coefficient `f_i(a, b; l)` of the inverse (Segre) series of the
/// degree-`l` symmetric power.
#[derive(Clone, Debug)]
pub struct SegreCoefficient {
    pub l: u32,
    pub i: u32,
    pub value: BiPoly,
}

/// Exact power-series inversion: `f_0 = 1`,
/// `f_m = -sum_{j=1}^{m} c_j(l) f_{m-j}`.
pub fn segre_f(l: u32, i: u32) -> SegreCoefficient {
    let cl = chern_sym_power(l);
    let mut f: Vec<BiPoly> = vec![BiPoly::one()];
    for m in 1..=i {
        let mut piece = BiPoly::zero();
        for j in 1..=m {
            piece = piece.sub(&cl.piece(j).mul(&f[(m - j) as usize]));
        }
        f.push(piece);
    }
    SegreCoefficient {
        l,
        i,
        value: f.pop().unwrap(),
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

fn vandermonde_power(l: u32) -> BiPoly {
    BiPoly::var_a().sub(&BiPoly::var_b()).pow(l)
}

/// Checks the closed form of the Segre coefficients in cleared form:
/// `l! (a-b)^l f_i = sum_{j=0}^{l} (-1)^{i+j} C(l,j) [(l-j)a + jb]^{l+i}`
/// for every `i <= i_max`.
pub fn verify_segre_closed_form(l: u32, i_max: u32) -> bool {
    let clear = vandermonde_power(l).scale(&factorial(l));
    (0..=i_max).all(|i| {
        let lhs = clear.mul(&segre_f(l, i).value);
        let mut rhs = BiPoly::zero();
        for j in 0..=l {
            let term = BiPoly::linear_form(l - j, j).pow(l + i).scale(&binomial(l, j));
            rhs = if (i + j).is_multiple_of(2) {
                rhs.add(&term)
            } else {
                rhs.sub(&term)
            };
        }
        lhs == rhs
    })
}

/// Checks the partial-fraction residue identity in cleared form:
/// `sum_{j=0}^{l} (-1)^{j+l} C(l,j) prod_{i != j} [(l-i)a + ib]
///  = l! (a-b)^l`.
pub fn verify_vandermonde_sum(l: u32) -> bool {
    let mut lhs = BiPoly::zero();
    for j in 0..=l {
        let mut prod = BiPoly::constant(binomial(l, j));
        for i in 0..=l {
            if i != j {
                prod = prod.mul(&BiPoly::linear_form(l - i, i));
            }
        }
        lhs = if (j + l).is_multiple_of(2) {
            lhs.add(&prod)
        } else {
            lhs.sub(&prod)
        };
    }
    lhs == vandermonde_power(l).scale(&factorial(l))
}

/// Checks that the alternating binomial sums of low powers vanish:
/// `sum_{j=0}^{l} (-1)^j C(l,j) [(l-j)a + jb]^n = 0` for `0 <= n < l`.
pub fn verify_power_sum_vanishing(l: u32) -> bool {
    (0..l).all(|n| {
        let mut sum = BiPoly::zero();
        for j in 0..=l {
            let term = BiPoly::linear_form(l - j, j).pow(n).scale(&binomial(l, j));
            sum = if j.is_multiple_of(2) {
                sum.add(&term)
            } else {
                sum.sub(&term)
            };
        }
        sum.is_zero()
    })
}

/// The degeneration splitting identity for top classes:
/// `c_{k+1}(k) c_l(k+l, k) + c_{l+1}(l) c_k(k+l, l) = c_{k+l+1}(k+l)`.
pub fn verify_splitting_identity(k: u32, l: u32) -> bool {
    assert!(k >= 1 && l >= 1);
    let ck = chern_sym_power(k);
    let cl = chern_sym_power(l);
    let cd = chern_sym_power(k + l);
    let dk = difference_class(k + l, k, l).expect("k + l > k");
    let dl = difference_class(k + l, l, k).expect("k + l > l");
    let lhs = ck
        .top()
        .mul(&dk.graded[l as usize])
        .add(&cl.top().mul(&dl.graded[k as usize]));
    lhs == *cd.top()
}

/// Checks that `c_{l+1}(k+l, k)` is an integer multiple of the top
/// class `c_{l+1}(l)` and that the multiplier equals
/// `sum_{j=0}^{k} C(l+j, j)`; returns the flag and the multiplier
/// obtained by exact polynomial division.
pub fn verify_multiplicity_factorization(k: u32, l: u32) -> (bool, BigInt) {
    assert!(l >= 1);
    let numerator = difference_class(k + l, k, l + 1)
        .expect("k + l > k")
        .graded[(l + 1) as usize]
        .clone();
    let base = chern_sym_power(l).graded[(l + 1) as usize].clone();
    let expected: BigInt = (0..=k).map(|j| binomial(l + j, j)).sum();

    // Divide via matching leading coefficients, then confirm exactness.
    let (ok, quotient) = match (numerator.leading(), base.leading()) {
        (Some((nk, nc)), Some((bk, bc))) if nk == bk && (nc % bc).is_zero() => {
            let q = nc / bc;
            (numerator == base.scale(&q), q)
        }
        _ => (false, BigInt::zero()),
    };
    (ok && quotient == expected, quotient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Partition2;

    #[test]
    fn sym_power_small_cases() {
        // k = 1: c(U*) = 1 + (a+b) + ab
        let c1 = chern_sym_power(1);
        assert_eq!(c1.graded.len(), 3);
        assert_eq!(c1.graded[1], BiPoly::linear_form(1, 1));
        assert_eq!(c1.graded[2], BiPoly::monomial(1, 1, BigInt::one()));

        // k = 2: (1+2a)(1+a+b)(1+2b)
        let c2 = chern_sym_power(2);
        assert_eq!(c2.graded[1], BiPoly::linear_form(3, 3));
        let mut c2_2 = BiPoly::monomial(2, 0, BigInt::from(2));
        c2_2 = c2_2.add(&BiPoly::monomial(1, 1, BigInt::from(8)));
        c2_2 = c2_2.add(&BiPoly::monomial(0, 2, BigInt::from(2)));
        assert_eq!(c2.graded[2], c2_2);
        let c2_3 = BiPoly::monomial(1, 1, BigInt::from(4)).mul(&BiPoly::linear_form(1, 1));
        assert_eq!(c2.graded[3], c2_3);
    }

    #[test]
    fn sym_power_zero_is_trivial_bundle() {
        let c0 = chern_sym_power(0);
        assert_eq!(c0.graded.len(), 2);
        assert_eq!(c0.graded[0], BiPoly::one());
        assert!(c0.graded[1].is_zero());
    }

    #[test]
    fn cubic_top_class_schur_coefficients() {
        let c3 = chern_sym_power(3);
        let expected = BiPoly::monomial(1, 1, BigInt::from(9))
            .mul(&BiPoly::linear_form(2, 1))
            .mul(&BiPoly::linear_form(1, 2));
        assert_eq!(*c3.top(), expected);
        let s = c3.top().to_schur().unwrap();
        assert_eq!(s.coeff(Partition2::new(2, 2).unwrap()), BigInt::from(27));
    }

    #[test]
    fn top_class_is_product_of_roots() {
        for k in 0..=8 {
            let series = chern_sym_power(k);
            let mut prod = BiPoly::one();
            for i in 0..=k {
                prod = prod.mul(&BiPoly::linear_form(k - i, i));
            }
            assert_eq!(*series.top(), prod);
        }
    }

    #[test]
    fn graded_pieces_are_symmetric_and_homogeneous() {
        for k in 0..=8 {
            let series = chern_sym_power(k);
            assert_eq!(series.graded[0], BiPoly::one());
            for (i, piece) in series.graded.iter().enumerate() {
                assert!(piece.is_symmetric(), "k={k}, i={i}");
                assert!(piece.is_homogeneous_of(i as u32), "k={k}, i={i}");
            }
        }
    }

    #[test]
    fn difference_class_small_cases() {
        let diff = difference_class(2, 1, 2).unwrap();
        assert_eq!(diff.graded[0], BiPoly::one());
        // c_1(2,1) = 3(a+b) - (a+b) = 2(a+b)
        assert_eq!(diff.graded[1], BiPoly::linear_form(2, 2));
        // c_2(2,1) = 3ab
        assert_eq!(diff.graded[2], BiPoly::monomial(1, 1, BigInt::from(3)));
    }

    #[test]
    fn difference_class_rejects_bad_order() {
        assert!(difference_class(2, 2, 1).is_err());
        assert!(difference_class(1, 2, 1).is_err());
    }

    #[test]
    fn segre_small_cases() {
        assert_eq!(segre_f(3, 0).value, BiPoly::one());
        // l = 1: f_1 = -(a+b), f_2 = a^2 + ab + b^2
        assert_eq!(segre_f(1, 1).value, BiPoly::linear_form(1, 1).neg());
        let f2 = BiPoly::monomial(2, 0, BigInt::one())
            .add(&BiPoly::monomial(1, 1, BigInt::one()))
            .add(&BiPoly::monomial(0, 2, BigInt::one()));
        assert_eq!(segre_f(1, 2).value, f2);
    }

    #[test]
    fn segre_inverts_chern_series() {
        for l in 1..=4u32 {
            let cl = chern_sym_power(l);
            for m in 1..=12u32 {
                let mut sum = BiPoly::zero();
                for i in 0..=m {
                    sum = sum.add(&segre_f(l, i).value.mul(&cl.piece(m - i)));
                }
                assert!(sum.is_zero(), "l={l}, m={m}");
            }
        }
    }

    #[test]
    fn segre_closed_form_holds() {
        assert!(verify_segre_closed_form(1, 0));
        assert!(verify_segre_closed_form(2, 4));
        assert!(verify_segre_closed_form(3, 6));
    }

    #[test]
    fn vandermonde_sum_holds() {
        for l in 1..=5 {
            assert!(verify_vandermonde_sum(l), "l={l}");
        }
    }

    #[test]
    fn power_sums_vanish() {
        for l in 1..=8 {
            assert!(verify_power_sum_vanishing(l), "l={l}");
        }
    }

    #[test]
    fn splitting_identity_hand_case() {
        // k = l = 1: ab*2(a+b) + ab*2(a+b) = 4ab(a+b) = c_3(2)
        assert!(verify_splitting_identity(1, 1));
        assert!(verify_splitting_identity(4, 1));
        assert!(verify_splitting_identity(3, 2));
    }

    #[test]
    fn multiplicity_factorization_small_cases() {
        let (ok, lambda) = verify_multiplicity_factorization(0, 3);
        assert!(ok);
        assert_eq!(lambda, BigInt::one());

        let (ok, lambda) = verify_multiplicity_factorization(1, 1);
        assert!(ok);
        assert_eq!(lambda, BigInt::from(3));

        let (ok, lambda) = verify_multiplicity_factorization(2, 2);
        assert!(ok);
        assert_eq!(lambda, BigInt::from(10));
    }
}
