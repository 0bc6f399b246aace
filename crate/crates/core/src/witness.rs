//! Exact linear-algebra checks on the explicit witness family of a
//! degeneration: surjectivity of the derivative map along a fixed line,
//! the dimension of its kernel, and the Vandermonde-style surjectivity
//! of the restriction to the intersection points with the degree-l
//! component.
//!
//! All arithmetic is exact: rational matrix entries, rank by
//! fraction-free elimination on cleared rows.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("infeasible witness problem: {0}")]
    Infeasible(String),
}

/// Parameters of a witness check. The line is `x_2 = ... = x_n = 0`,
/// the degree-k component is the explicit sparse polynomial whose
/// partials along the line are monomials, and the degree-l component
/// cuts the line in the l-th roots of unity.
#[derive(Clone, Copy, Debug)]
pub struct WitnessProblem {
    pub n: u32,
    pub d: u32,
    pub k: u32,
}

impl WitnessProblem {
    pub fn new(n: u32, d: u32, k: u32) -> Result<Self, WitnessError> {
        if n < 3 {
            return Err(WitnessError::Infeasible(format!("need n >= 3, got n = {n}")));
        }
        if d > 2 * n - 3 {
            return Err(WitnessError::Infeasible(format!(
                "need d <= 2n - 3 = {}, got d = {d}",
                2 * n - 3
            )));
        }
        if k < 1 || k >= d {
            return Err(WitnessError::Infeasible(format!(
                "need 1 <= k < d, got k = {k}, d = {d}"
            )));
        }
        let p = WitnessProblem { n, d, k };
        let (m, r) = (p.m(), p.r());
        if !k.is_multiple_of(2) && m + 2 > n - 1 {
            return Err(WitnessError::Infeasible(format!(
                "odd k needs m + 2 <= n - 1, got m = {m}, n = {n}"
            )));
        }
        if k.is_multiple_of(2) && m + 2 > n {
            return Err(WitnessError::Infeasible(format!(
                "even k needs m + 2 <= n, got m = {m}, n = {n}"
            )));
        }
        if n - r + 1 < m + 2 {
            return Err(WitnessError::Infeasible(format!(
                "need n - r + 1 >= m + 2, got m = {m}, r = {r}, n = {n}"
            )));
        }
        Ok(p)
    }

    pub fn l(&self) -> u32 {
        self.d - self.k
    }

    pub fn m(&self) -> u32 {
        self.k / 2
    }

    pub fn r(&self) -> u32 {
        self.l().div_ceil(2)
    }
}

/// Dense matrix with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![vec![BigRational::zero(); cols]; rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i][j] = v;
    }

    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }

    /// Exact rank: rows are cleared to integers, then eliminated
    /// fraction-free (Bareiss).
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, e| num_integer::lcm(acc, e.denom().clone()));
                row.iter().map(|e| e.numer() * &lcm / e.denom()).collect()
            })
            .collect();
        let mut rank = 0;
        let mut prev_pivot = BigInt::one();
        for col in 0..self.cols {
            let Some(pivot_row) = (rank..self.rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot_row);
            let pivot = m[rank][col].clone();
            for i in (rank + 1)..self.rows {
                for j in (col + 1)..self.cols {
                    let v = (&pivot * &m[i][j] - &m[i][col] * &m[rank][j]) / &prev_pivot;
                    m[i][j] = v;
                }
                m[i][col] = BigInt::zero();
            }
            prev_pivot = pivot;
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// Matrix of the map sending `n + 1` linear forms on the line to the
/// degree-k form `sum a_i dK/dX_i`, restricted to the line.
///
/// Domain basis: `x_0 e_i, x_1 e_i` for `i = 0..n` (columns `2i`,
/// `2i + 1`); codomain basis: `x_0^{k-s} x_1^s` for `s = 0..k` (rows).
/// Partials in `x_0`, `x_1` and in the unused variables vanish on the
/// line, so their column blocks are zero.
pub fn build_phi(p: &WitnessProblem) -> RationalMatrix {
    let k = p.k;
    let m = p.m();
    let mut mat = RationalMatrix::zero(k as usize + 1, 2 * (p.n as usize + 1));
    // Monomial x_0^u x_1^v of degree k - 1 contributed by dK/dX_i.
    let mut set_block = |i: u32, v: u32| {
        // a_i = x_0 lands in row v, a_i = x_1 in row v + 1.
        mat.set(v as usize, 2 * i as usize, BigRational::one());
        mat.set(v as usize + 1, 2 * i as usize + 1, BigRational::one());
    };
    for t in 1..=m {
        set_block(t + 1, 2 * t - 2);
    }
    set_block(m + 2, k - 1);
    mat
}

/// Surjectivity and kernel dimension of the derivative map.
pub fn check_phi(p: &WitnessProblem) -> (bool, usize) {
    let mat = build_phi(p);
    let rank = mat.rank();
    (rank == p.k as usize + 1, mat.cols() - rank)
}

/// Dense univariate polynomial over the rationals, lowest degree first.
fn univar_normalize(mut f: Vec<BigRational>) -> Vec<BigRational> {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

fn univar_rem(mut f: Vec<BigRational>, g: &[BigRational]) -> Vec<BigRational> {
    let glead = g.last().expect("nonzero divisor");
    while f.len() >= g.len() {
        let shift = f.len() - g.len();
        let factor = f.last().unwrap() / glead;
        for (i, gc) in g.iter().enumerate() {
            let v = &f[shift + i] - &factor * gc;
            f[shift + i] = v;
        }
        f = univar_normalize(f);
        if f.is_empty() {
            break;
        }
    }
    f
}

fn univar_gcd(mut f: Vec<BigRational>, mut g: Vec<BigRational>) -> Vec<BigRational> {
    f = univar_normalize(f);
    g = univar_normalize(g);
    while !g.is_empty() {
        let r = univar_rem(f, &g);
        f = g;
        g = r;
    }
    f
}

/// Checks surjectivity of the restriction to the l intersection points.
///
/// Restriction is modeled as reduction modulo `t^l - 1`: each spanning
/// monomial `t^{e_j}` reduces to `t^{e_j mod l}`, which is simultaneous
/// evaluation at the l-th roots of unity. Surjectivity holds exactly
/// when the l reductions have full rank. `nodes_distinct` checks that
/// `t^l - 1` is squarefree via a gcd with its derivative.
pub fn check_restriction(l: u32, top_exponents: &[u32]) -> (bool, bool) {
    assert!(l >= 1);
    let l = l as usize;
    let mut mat = RationalMatrix::zero(top_exponents.len(), l);
    for (row, &e) in top_exponents.iter().enumerate() {
        mat.set(row, e as usize % l, BigRational::one());
    }
    let surjective = mat.rank() == l;

    // t^l - 1 and its derivative l t^{l-1}
    let mut modulus = vec![BigRational::zero(); l + 1];
    modulus[0] = -BigRational::one();
    modulus[l] = BigRational::one();
    let mut derivative = vec![BigRational::zero(); l];
    derivative[l - 1] = BigRational::from(BigInt::from(l));
    let gcd = univar_gcd(modulus, derivative);
    let nodes_distinct = gcd.len() == 1;

    (surjective, nodes_distinct)
}

/// Aggregated result of the witness checks for one problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub phi_surjective: bool,
    pub kernel_dim: usize,
    pub expected_kernel_dim: usize,
    pub restriction_surjective: bool,
    pub nodes_distinct: bool,
}

impl WitnessReport {
    pub fn all_pass(&self) -> bool {
        self.phi_surjective
            && self.kernel_dim == self.expected_kernel_dim
            && self.restriction_surjective
            && self.nodes_distinct
    }
}

pub fn witness_report(p: &WitnessProblem) -> WitnessReport {
    let (phi_surjective, kernel_dim) = check_phi(p);
    let l = p.l();
    let exponents: Vec<u32> = (0..l).collect();
    let (restriction_surjective, nodes_distinct) = check_restriction(l, &exponents);
    WitnessReport {
        phi_surjective,
        kernel_dim,
        expected_kernel_dim: (2 * p.n - p.k + 1) as usize,
        restriction_surjective,
        nodes_distinct,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_surface_witness_matrix() {
        let p = WitnessProblem::new(3, 3, 2).unwrap();
        let mat = build_phi(&p);
        assert_eq!(mat.rows(), 3);
        assert_eq!(mat.cols(), 8);
        assert_eq!(mat.rank(), 3);
        let (surjective, kernel) = check_phi(&p);
        assert!(surjective);
        assert_eq!(kernel, 5); // 2n - k + 1
    }

    #[test]
    fn kernel_dimensions_match_formula() {
        for (n, d, k, expect) in [(4u32, 5u32, 4u32, 5usize), (3, 3, 1, 6), (5, 7, 6, 5)] {
            let p = WitnessProblem::new(n, d, k).unwrap();
            let (surjective, kernel) = check_phi(&p);
            assert!(surjective, "n={n}, d={d}, k={k}");
            assert_eq!(kernel, expect, "n={n}, d={d}, k={k}");
        }
    }

    #[test]
    fn zero_column_blocks() {
        let p = WitnessProblem::new(4, 5, 3).unwrap();
        let mat = build_phi(&p);
        let m = p.m() as usize;
        for i in [0usize, 1].into_iter().chain((m + 3)..=(p.n as usize)) {
            for row in 0..mat.rows() {
                assert!(mat.entry(row, 2 * i).is_zero());
                assert!(mat.entry(row, 2 * i + 1).is_zero());
            }
        }
    }

    #[test]
    fn even_k_kernel_vector() {
        // For even k the one-parameter family a_{m+1} = x_1,
        // a_{m+2} = -x_0 lies in the kernel.
        for (n, d, k) in [(3u32, 3u32, 2u32), (4, 5, 2), (4, 5, 4), (5, 7, 6)] {
            let p = WitnessProblem::new(n, d, k).unwrap();
            let mat = build_phi(&p);
            let m = p.m() as usize;
            let mut v = vec![BigRational::zero(); mat.cols()];
            v[2 * (m + 1) + 1] = BigRational::one();
            v[2 * (m + 2)] = -BigRational::one();
            assert!(mat.apply(&v).iter().all(|x| x.is_zero()), "n={n}, d={d}, k={k}");
        }
    }

    #[test]
    fn restriction_cases() {
        assert_eq!(check_restriction(2, &[0, 1]), (true, true));
        assert_eq!(check_restriction(4, &[0, 1, 2, 3]), (true, true));
        // exponents all congruent mod 3: rank 1, not surjective
        assert_eq!(check_restriction(3, &[0, 3, 6]), (false, true));
        // shifted complete residue systems stay surjective
        for shift in 0..5u32 {
            let exps: Vec<u32> = (shift..shift + 4).collect();
            assert_eq!(check_restriction(4, &exps), (true, true));
        }
    }

    #[test]
    fn nodes_distinct_for_all_l() {
        for l in 1..=12 {
            let exps: Vec<u32> = (0..l).collect();
            let (_, distinct) = check_restriction(l, &exps);
            assert!(distinct, "l={l}");
        }
    }

    #[test]
    fn infeasible_problems_rejected() {
        assert!(WitnessProblem::new(3, 4, 2).is_err()); // d > 2n - 3
        assert!(WitnessProblem::new(2, 1, 1).is_err()); // n too small
        assert!(WitnessProblem::new(4, 5, 5).is_err()); // k >= d
        assert!(WitnessProblem::new(4, 5, 0).is_err());
    }

    #[test]
    fn full_report() {
        let p = WitnessProblem::new(4, 5, 4).unwrap();
        assert!(witness_report(&p).all_pass());
        let p = WitnessProblem::new(4, 5, 3).unwrap();
        assert!(witness_report(&p).all_pass());
        let p = WitnessProblem::new(5, 7, 2).unwrap();
        assert!(witness_report(&p).all_pass());
    }

    #[test]
    fn bareiss_rank_on_rational_entries() {
        let mut m = RationalMatrix::zero(3, 3);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        // rows 1 and 2 proportional
        m.set(0, 0, BigRational::one());
        m.set(0, 1, half.clone());
        m.set(1, 0, half.clone());
        m.set(1, 1, BigRational::new(BigInt::one(), BigInt::from(4)));
        m.set(2, 2, BigRational::one());
        assert_eq!(m.rank(), 2);
    }
}
