//! The Chow ring of the Grassmannian of lines in projective n-space,
//! in the Schubert basis of two-row partitions.
//!
//! Two independent evaluation paths are provided for symmetric
//! polynomials in the Chern roots: truncation of the Schur expansion,
//! and recursive multiplication by the special classes via the Pieri
//! rules. The test suite diffs them; agreement validates the
//! truncation convention `sigma_{p,q} = 0` for `p > n - 1`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{BiPoly, Partition2, PolyError, SchurExpansion};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChowError {
    #[error("ambient projective space must have n >= 2, got n = {0}")]
    AmbientTooSmall(u32),
    #[error("integration requires a pure top-degree class")]
    NotTopDegree,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The Grassmannian of lines in projective n-space; dimension `2(n-1)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GrassmannianContext {
    n: u32,
}

impl GrassmannianContext {
    pub fn new(n: u32) -> Result<Self, ChowError> {
        if n < 2 {
            return Err(ChowError::AmbientTooSmall(n));
        }
        Ok(GrassmannianContext { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> u32 {
        2 * (self.n - 1)
    }

    /// Largest admissible partition row.
    pub fn max_row(&self) -> u32 {
        self.n - 1
    }

    pub fn point_class(&self) -> Partition2 {
        Partition2::new(self.max_row(), self.max_row()).unwrap()
    }
}

/// An element of the Chow ring in the Schubert basis. Partitions with a
/// row exceeding `n - 1` are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChowElement {
    ctx: GrassmannianContext,
    coeffs: BTreeMap<Partition2, BigInt>,
}

impl ChowElement {
    pub fn zero(ctx: GrassmannianContext) -> Self {
        ChowElement {
            ctx,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds an element from Schubert-basis coefficients; entries
    /// outside the Grassmannian are dropped.
    pub fn from_coeffs(
        ctx: GrassmannianContext,
        entries: impl IntoIterator<Item = (Partition2, BigInt)>,
    ) -> Self {
        let mut out = ChowElement::zero(ctx);
        for (part, c) in entries {
            out.add_coeff(part, c);
        }
        out
    }

    /// The fundamental class.
    pub fn unit(ctx: GrassmannianContext) -> Self {
        let mut out = ChowElement::zero(ctx);
        out.add_coeff(Partition2::new(0, 0).unwrap(), BigInt::one());
        out
    }

    pub fn ctx(&self) -> GrassmannianContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, part: Partition2) -> BigInt {
        self.coeffs.get(&part).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition2, &BigInt)> {
        self.coeffs.iter()
    }

    fn add_coeff(&mut self, part: Partition2, c: BigInt) {
        if c.is_zero() || part.p() > self.ctx.max_row() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(part) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &ChowElement) -> ChowElement {
        assert_eq!(self.ctx, other.ctx);
        let mut out = self.clone();
        for (&part, c) in &other.coeffs {
            out.add_coeff(part, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> ChowElement {
        let mut out = ChowElement::zero(self.ctx);
        for (&part, v) in &self.coeffs {
            out.add_coeff(part, v * c);
        }
        out
    }
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (part, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*{part}")?;
        }
        Ok(())
    }
}

/// The two special Schubert classes that generate the Chow ring.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecialClass {
    /// `sigma_1`, the lines meeting a fixed codimension-2 subspace.
    Sigma1,
    /// `sigma_{1,1}`, the lines inside a fixed hyperplane.
    Sigma11,
}

/// Truncates a Schur expansion to the Grassmannian: partitions with a
/// row longer than `n - 1` vanish, everything else is kept verbatim.
pub fn project(x: &SchurExpansion, ctx: GrassmannianContext) -> ChowElement {
    let mut out = ChowElement::zero(ctx);
    for (&part, c) in x.coeffs() {
        out.add_coeff(part, c.clone());
    }
    out
}

/// Degree map: the coefficient of the point class. Rejects input that
/// is not purely of top degree.
pub fn integrate(x: &ChowElement) -> Result<BigInt, ChowError> {
    let dim = x.ctx().dim();
    if x.coeffs().any(|(part, _)| part.size() != dim) {
        return Err(ChowError::NotTopDegree);
    }
    Ok(x.coeff(x.ctx().point_class()))
}

/// Classical Pieri-rule product with a special class:
/// `sigma_1 * sigma_{p,q} = sigma_{p+1,q} + sigma_{p,q+1}` and
/// `sigma_{1,1} * sigma_{p,q} = sigma_{p+1,q+1}`, invalid indices
/// dropped.
pub fn pieri_multiply(x: &ChowElement, special: SpecialClass) -> ChowElement {
    let ctx = x.ctx();
    let mut out = ChowElement::zero(ctx);
    for (&part, c) in x.coeffs() {
        let (p, q) = (part.p(), part.q());
        match special {
            SpecialClass::Sigma1 => {
                if let Some(up) = Partition2::new(p + 1, q) {
                    out.add_coeff(up, c.clone());
                }
                if let Some(right) = Partition2::new(p, q + 1) {
                    out.add_coeff(right, c.clone());
                }
            }
            SpecialClass::Sigma11 => {
                if let Some(both) = Partition2::new(p + 1, q + 1) {
                    out.add_coeff(both, c.clone());
                }
            }
        }
    }
    out
}

/// Independent evaluation oracle: rewrites `x` in the elementary basis
/// `e1 -> sigma_1`, `e2 -> sigma_{1,1}` and evaluates the result by
/// repeated Pieri multiplication starting from the fundamental class.
pub fn evaluate_via_pieri(x: &BiPoly, ctx: GrassmannianContext) -> Result<ChowElement, ChowError> {
    let decomp = x.to_elementary()?;
    let mut out = ChowElement::zero(ctx);
    for ((i, j), c) in decomp {
        let mut term = ChowElement::unit(ctx);
        for _ in 0..i {
            term = pieri_multiply(&term, SpecialClass::Sigma1);
        }
        for _ in 0..j {
            term = pieri_multiply(&term, SpecialClass::Sigma11);
        }
        out = out.add(&term.scale(&c));
    }
    Ok(out)
}
