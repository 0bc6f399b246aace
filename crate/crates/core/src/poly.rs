//! Exact bivariate polynomial arithmetic in the Chern roots `a` and `b`.
//!
//! Representation: sparse map from exponent pairs `(p, q)` (meaning
//! `a^p b^q`) to arbitrary-precision integer coefficients. Zero
//! coefficients are never stored; the zero polynomial is the empty map.
//! Monomials are ordered lexicographically with `a > b`, which is the
//! natural order of the `(p, q)` keys.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial is not symmetric in a and b")]
    NotSymmetric,
    #[error("polynomial is not divisible by a - b")]
    NotDivisible,
}

/// Sparse exact polynomial in `a` and `b` over the integers.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        BiPoly { terms }
    }

    pub fn monomial(p: u32, q: u32, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((p, q), c);
        }
        BiPoly { terms }
    }

    pub fn var_a() -> Self {
        BiPoly::monomial(1, 0, BigInt::one())
    }

    pub fn var_b() -> Self {
        BiPoly::monomial(0, 1, BigInt::one())
    }

    /// The linear form `ca * a + cb * b`.
    pub fn linear_form(ca: u32, cb: u32) -> Self {
        let mut out = BiPoly::zero();
        out.add_term(1, 0, BigInt::from(ca));
        out.add_term(0, 1, BigInt::from(cb));
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(p, q)| p + q).max()
    }

    /// True when every term has total degree `d` (vacuously for zero).
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|&(p, q)| p + q == d)
    }

    pub fn coeff(&self, p: u32, q: u32) -> BigInt {
        self.terms.get(&(p, q)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Lexicographically largest monomial (a-major) with its coefficient.
    pub fn leading(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms.iter().next_back().map(|(&k, c)| (k, c))
    }

    fn add_term(&mut self, p: u32, q: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((p, q)) {
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

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(p, q), c) in &other.terms {
            out.add_term(p, q, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(p, q), c) in &other.terms {
            out.add_term(p, q, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        let terms = self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect();
        BiPoly { terms }
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(p1, q1), c1) in &self.terms {
            for (&(p2, q2), c2) in &other.terms {
                out.add_term(p1 + p2, q1 + q2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut out = BiPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        let terms = self.terms.iter().map(|(&k, v)| (k, v * c)).collect();
        BiPoly { terms }
    }

    /// The polynomial with `a` and `b` exchanged.
    pub fn swap_vars(&self) -> BiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&(p, q), c)| ((q, p), c.clone()))
            .collect();
        BiPoly { terms }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(p, q), c)| self.terms.get(&(q, p)) == Some(c))
    }

    /// Exact division by `a - b`. Errors when the remainder is nonzero.
    pub fn divide_by_vandermonde(&self) -> Result<BiPoly, PolyError> {
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some(((p, q), c)) = rem.leading() {
            if p == 0 {
                return Err(PolyError::NotDivisible);
            }
            let c = c.clone();
            // rem -= c * a^{p-1} b^q * (a - b)
            rem.add_term(p, q, -c.clone());
            rem.add_term(p - 1, q + 1, c.clone());
            quot.add_term(p - 1, q, c);
        }
        Ok(quot)
    }

    /// Rewrites a symmetric polynomial in the Schur basis, by multiplying
    /// with `a - b` and peeling antisymmetrized leading terms.
    pub fn to_schur(&self) -> Result<SchurExpansion, PolyError> {
        if !self.is_symmetric() {
            return Err(PolyError::NotSymmetric);
        }
        let vandermonde = BiPoly::var_a().sub(&BiPoly::var_b());
        let mut work = self.mul(&vandermonde);
        let mut coeffs = BTreeMap::new();
        while let Some(((big_p, q), c)) = work.leading() {
            // Antisymmetry of `work` forces big_p > q, so (big_p - 1, q)
            // is a valid partition.
            debug_assert!(big_p > q);
            let c = c.clone();
            work.add_term(big_p, q, -c.clone());
            work.add_term(q, big_p, c.clone());
            let part = Partition2::new(big_p - 1, q).expect("peeled index is a partition");
            let entry: &mut BigInt = coeffs.entry(part).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&part);
            }
        }
        Ok(SchurExpansion { coeffs })
    }

    /// Rewrites a symmetric polynomial in the elementary basis
    /// `e1 = a + b`, `e2 = ab`; returns the coefficient of `e1^i e2^j`
    /// keyed by `(i, j)`.
    pub fn to_elementary(&self) -> Result<BTreeMap<(u32, u32), BigInt>, PolyError> {
        if !self.is_symmetric() {
            return Err(PolyError::NotSymmetric);
        }
        let e1 = BiPoly::linear_form(1, 1);
        let e2 = BiPoly::monomial(1, 1, BigInt::one());
        let mut work = self.clone();
        let mut out = BTreeMap::new();
        while let Some(((p, q), c)) = work.leading() {
            // Symmetry forces p >= q for the lex-leading term.
            debug_assert!(p >= q);
            let c = c.clone();
            let (i, j) = (p - q, q);
            work = work.sub(&e1.pow(i).mul(&e2.pow(j)).scale(&c));
            out.insert((i, j), c);
        }
        Ok(out)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(p, q), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if p > 0 {
                write!(f, "*a^{p}")?;
            }
            if q > 0 {
                write!(f, "*b^{q}")?;
            }
        }
        Ok(())
    }
}

/// A two-row partition `(p, q)` with `p >= q >= 0`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition2 {
    p: u32,
    q: u32,
}

impl Partition2 {
    pub fn new(p: u32, q: u32) -> Option<Self> {
        (p >= q).then_some(Partition2 { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn size(&self) -> u32 {
        self.p + self.q
    }

    /// The Schur polynomial `s_{(p,q)}(a, b)
    /// = (a^{p+1} b^q - a^q b^{p+1}) / (a - b)
    /// = a^q b^q * sum_{j=0}^{p-q} a^j b^{p-q-j}`.
    pub fn schur_poly(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for j in 0..=(self.p - self.q) {
            out.add_term(self.q + j, self.p - j, BigInt::one());
        }
        out
    }
}

impl fmt::Display for Partition2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma_{{{},{}}}", self.p, self.q)
    }
}

/// A symmetric polynomial written in the Schur basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurExpansion {
    coeffs: BTreeMap<Partition2, BigInt>,
}

impl SchurExpansion {
    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition2, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, part: Partition2) -> BigInt {
        self.coeffs.get(&part).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn from_coeffs(entries: impl IntoIterator<Item = (Partition2, BigInt)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (part, c) in entries {
            if !c.is_zero() {
                coeffs.insert(part, c);
            }
        }
        SchurExpansion { coeffs }
    }

    /// Expands back to a plain polynomial; `to_schur` followed by
    /// `reconstruct` is the identity on symmetric input.
    pub fn reconstruct(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (part, c) in &self.coeffs {
            out = out.add(&part.schur_poly().scale(c));
        }
        out
    }
}
