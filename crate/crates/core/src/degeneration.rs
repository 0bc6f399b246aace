//! Splitting of the class of lines under a degeneration of a degree-d
//! hypersurface into a union of hypersurfaces of degrees k and l, plus
//! enumeration of the admissible normal-bundle splitting types of lines
//! on a generic member.

use num_bigint::BigInt;
use thiserror::Error;

use crate::chern::{chern_sym_power, difference_class};
use crate::chow::{integrate, project, ChowElement, GrassmannianContext};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DegenError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// The class of the lines in the degree-k component that survive the
/// degeneration: the top class of the k-th symmetric power times the
/// degree-`l` piece of the formal difference class.
pub fn sigma_class(n: u32, d: u32, k: u32) -> Result<ChowElement, DegenError> {
    let ctx = GrassmannianContext::new(n)
        .map_err(|e| DegenError::InvalidArgument(e.to_string()))?;
    if k < 1 || k >= d {
        return Err(DegenError::InvalidArgument(format!(
            "need 1 <= k <= d - 1, got k = {k}, d = {d}"
        )));
    }
    let l = d - k;
    let top = chern_sym_power(k).top().clone();
    let diff = difference_class(d, k, l)
        .map_err(|e| DegenError::InvalidArgument(e.to_string()))?;
    let product = top.mul(&diff.graded[l as usize]);
    let schur = product.to_schur().expect("Chern classes are symmetric");
    Ok(project(&schur, ctx))
}

/// The class of all lines on a generic degree-d hypersurface: the top
/// Chern class of the d-th symmetric power, projected to the
/// Grassmannian.
pub fn total_class(n: u32, d: u32) -> Result<ChowElement, DegenError> {
    let ctx = GrassmannianContext::new(n)
        .map_err(|e| DegenError::InvalidArgument(e.to_string()))?;
    if d < 1 {
        return Err(DegenError::InvalidArgument("need d >= 1".into()));
    }
    let top = chern_sym_power(d).top().clone();
    let schur = top.to_schur().expect("Chern classes are symmetric");
    Ok(project(&schur, ctx))
}

/// Per-degeneration verification record: the two component classes,
/// their expected sum, whether the sum matches exactly, and the line
/// counts when the classes are zero-dimensional (`d = 2n - 3`).
#[derive(Clone, Debug)]
pub struct DegenerationReport {
    pub n: u32,
    pub d: u32,
    pub k: u32,
    pub l: u32,
    pub class_k: ChowElement,
    pub class_l: ChowElement,
    pub total: ChowElement,
    pub sum_matches: bool,
    pub counts: Option<(BigInt, BigInt, BigInt)>,
}

pub fn report(n: u32, d: u32, k: u32) -> Result<DegenerationReport, DegenError> {
    let l = d - k;
    let class_k = sigma_class(n, d, k)?;
    let class_l = sigma_class(n, d, l)?;
    let total = total_class(n, d)?;
    let sum_matches = class_k.add(&class_l) == total;
    let counts = if d == 2 * n - 3 {
        let ck = integrate(&class_k).expect("top-degree class");
        let cl = integrate(&class_l).expect("top-degree class");
        let ct = integrate(&total).expect("top-degree class");
        Some((ck, cl, ct))
    } else {
        None
    };
    Ok(DegenerationReport {
        n,
        d,
        k,
        l,
        class_k,
        class_l,
        total,
        sum_matches,
        counts,
    })
}

/// Splitting type of the normal bundle of a line: degrees of the line
/// subbundles, sorted descending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SplittingType {
    entries: Vec<i32>,
}

impl SplittingType {
    pub fn entries(&self) -> &[i32] {
        &self.entries
    }
}

/// Enumerates all splitting types of length `n - 2` with entries in
/// `[-1, 1]` summing to `n - 1 - k`, in descending lexicographic
/// order. For `k > 2n - 3` no lines are expected and the list is empty.
pub fn normal_bundle_types(n: u32, k: u32) -> Result<Vec<SplittingType>, DegenError> {
    if n < 3 || k < 1 {
        return Err(DegenError::InvalidArgument(format!(
            "need n >= 3 and k >= 1, got n = {n}, k = {k}"
        )));
    }
    if k > 2 * n - 3 {
        return Ok(Vec::new());
    }
    let len = (n - 2) as i64;
    let target = n as i64 - 1 - k as i64;
    let mut out = Vec::new();
    // Entries are restricted to {-1, 0, 1}, so a type is determined by
    // how many ones and zeros it contains.
    for ones in 0..=len {
        for zeros in 0..=(len - ones) {
            let minus = len - ones - zeros;
            if ones - minus == target {
                let mut entries = Vec::with_capacity(len as usize);
                entries.extend(std::iter::repeat_n(1, ones as usize));
                entries.extend(std::iter::repeat_n(0, zeros as usize));
                entries.extend(std::iter::repeat_n(-1, minus as usize));
                out.push(SplittingType { entries });
            }
        }
    }
    out.sort_by(|x, y| y.cmp(x));
    Ok(out)
}
