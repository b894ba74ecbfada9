//! Arity-n tensor powers of U(osp(1|2)).
//!
//! # Tensor product convention
//!
//! The product here is the ORDINARY tensor product with **no Koszul signs**:
//! `(a ⊗ b)(c ⊗ d) = ac ⊗ bd` regardless of parity. This is correct because
//! the presentation carries the grade involution `P` explicitly — the
//! coproduct `Δ(F±) = F± ⊗ P + 1 ⊗ F±` threads `P` through the legs, so the
//! grading signs live inside the algebra itself (the bosonized, or
//! smash-product, picture). Every construction in this crate relies on that
//! convention; do not introduce graded signs anywhere, including in factor
//! permutations and Kronecker evaluation.
//!
//! Arity is a runtime attribute and is checked on every binary operation;
//! silent leg mismatches are the dominant bug class in this kind of code.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::pbw::{write_term, Generator, PbwElement, PbwMonomial};
use crate::perm::Permutation;
use crate::scalar::{int, Scalar, Zero};

/// An n-fold tensor product of PBW monomials.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TensorMonomial {
    factors: Vec<PbwMonomial>,
}

impl TensorMonomial {
    pub fn new(factors: Vec<PbwMonomial>) -> Self {
        assert!(!factors.is_empty(), "tensor monomial needs arity >= 1");
        Self { factors }
    }

    pub fn unit(arity: usize) -> Self {
        Self::new(vec![PbwMonomial::one(); arity])
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[PbwMonomial] {
        &self.factors
    }

    /// Total parity over all legs, mod 2.
    pub fn parity(&self) -> u8 {
        self.factors.iter().map(|m| m.parity()).sum::<u8>() % 2
    }
}

impl fmt::Display for TensorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let legs: Vec<String> = self.factors.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", legs.join(" # "))
    }
}

/// Sparse linear combination of `TensorMonomial`s, all of one arity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    arity: usize,
    terms: BTreeMap<TensorMonomial, Scalar>,
}

impl TensorElement {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1);
        Self {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(arity: usize) -> Self {
        Self::from_term(TensorMonomial::unit(arity), int(1))
    }

    pub fn from_term(m: TensorMonomial, c: Scalar) -> Self {
        let mut e = Self::zero(m.arity());
        e.add_term(m, c);
        e
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: TensorMonomial, c: Scalar) {
        assert_eq!(m.arity(), self.arity, "tensor term arity mismatch");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        if c.is_zero() {
            return TensorElement::zero(self.arity);
        }
        TensorElement {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    fn require_arity(&self, other: &TensorElement) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: other.arity,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &TensorElement) -> Result<TensorElement> {
        self.require_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.require_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Factor-wise product `(a⊗b)(c⊗d) = ac⊗bd`, no signs, every leg
    /// renormalized through the PBW engine.
    pub fn checked_mul(&self, other: &TensorElement) -> Result<TensorElement> {
        self.require_arity(other)?;
        let n = self.arity;
        let mut acc = TensorElement::zero(n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                // per-leg PBW products, then distribute the cross product of terms
                let legs: Vec<PbwElement> = (0..n)
                    .map(|i| crate::pbw::multiply_monomials(&m1.factors[i], &m2.factors[i]))
                    .collect();
                let base = c1 * c2;
                distribute_legs(&legs, &base, &mut acc);
            }
        }
        Ok(acc)
    }

    /// Commutator or anticommutator of equal-arity elements.
    pub fn bracket(x: &TensorElement, y: &TensorElement, anti: bool) -> Result<TensorElement> {
        let xy = x.checked_mul(y)?;
        let yx = y.checked_mul(x)?;
        if anti {
            xy.checked_add(&yx)
        } else {
            xy.checked_sub(&yx)
        }
    }

    /// Number of (even, odd) terms by total monomial parity.
    pub fn parity_profile(&self) -> (usize, usize) {
        let odd = self.terms.keys().filter(|m| m.parity() == 1).count();
        (self.terms.len() - odd, odd)
    }

    /// View an arity-1 element as a plain PBW element.
    pub fn try_into_pbw(&self) -> Result<PbwElement> {
        if self.arity != 1 {
            return Err(Error::ArityMismatch {
                expected: 1,
                got: self.arity,
            });
        }
        let mut out = PbwElement::zero();
        for (m, c) in &self.terms {
            out.add_term(m.factors[0], c.clone());
        }
        Ok(out)
    }
}

/// Expand the cross product of per-leg PBW elements into `acc`, scaled by `base`.
fn distribute_legs(legs: &[PbwElement], base: &Scalar, acc: &mut TensorElement) {
    let mut stack: Vec<(usize, Vec<PbwMonomial>, Scalar)> =
        vec![(0, Vec::with_capacity(legs.len()), base.clone())];
    while let Some((i, prefix, coeff)) = stack.pop() {
        if i == legs.len() {
            acc.add_term(TensorMonomial::new(prefix), coeff);
            continue;
        }
        for (m, c) in legs[i].terms() {
            let mut next = prefix.clone();
            next.push(*m);
            stack.push((i + 1, next, &coeff * c));
        }
    }
}

impl From<&PbwElement> for TensorElement {
    fn from(x: &PbwElement) -> Self {
        let mut out = TensorElement::zero(1);
        for (m, c) in x.terms() {
            out.add_term(TensorMonomial::new(vec![*m]), c.clone());
        }
        out
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        self.checked_add(rhs)
            .expect("tensor addition arity mismatch")
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self.checked_sub(rhs)
            .expect("tensor subtraction arity mismatch")
    }
}

impl Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        self.checked_mul(rhs)
            .expect("tensor product arity mismatch")
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&int(-1))
    }
}

crate::pbw::forward_ref_binop!(Add, add, TensorElement);
crate::pbw::forward_ref_binop!(Sub, sub, TensorElement);
crate::pbw::forward_ref_binop!(Mul, mul, TensorElement);

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            // spelled with explicit legs so the arity survives a re-parse
            let legs = vec!["0"; self.arity];
            return write!(f, "{}", legs.join(" # "));
        }
        // highest key first, matching the scalar-layer convention
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            write_term(f, i == 0, c, &m.to_string())?;
        }
        Ok(())
    }
}

// --- structural operations ---------------------------------------------------

/// Place `x` in factor `i` (1-based) of an arity-`n` tensor, unit elsewhere.
pub fn embed(x: &PbwElement, i: usize, n: usize) -> Result<TensorElement> {
    if i == 0 || i > n {
        return Err(Error::LegOutOfRange { leg: i, arity: n });
    }
    let mut out = TensorElement::zero(n);
    for (m, c) in x.terms() {
        let mut factors = vec![PbwMonomial::one(); n];
        factors[i - 1] = *m;
        out.add_term(TensorMonomial::new(factors), c.clone());
    }
    Ok(out)
}

/// Concatenate legs: `(a1⊗…⊗ap) ⊠ (b1⊗…⊗bq) = a1⊗…⊗ap⊗b1⊗…⊗bq`, bilinearly.
pub fn outer(x: &TensorElement, y: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero(x.arity() + y.arity());
    for (mx, cx) in x.terms() {
        for (my, cy) in y.terms() {
            let mut factors = mx.factors().to_vec();
            factors.extend_from_slice(my.factors());
            out.add_term(TensorMonomial::new(factors), cx * cy);
        }
    }
    out
}

/// Insert a unit leg at position `pos` (1-based, `1 ≤ pos ≤ arity+1`).
pub fn insert_unit(x: &TensorElement, pos: usize) -> Result<TensorElement> {
    let n = x.arity();
    if pos == 0 || pos > n + 1 {
        return Err(Error::LegOutOfRange {
            leg: pos,
            arity: n + 1,
        });
    }
    let mut out = TensorElement::zero(n + 1);
    for (m, c) in x.terms() {
        let mut factors = m.factors().to_vec();
        factors.insert(pos - 1, PbwMonomial::one());
        out.add_term(TensorMonomial::new(factors), c.clone());
    }
    Ok(out)
}

/// Relabel legs: the content of leg `i` moves to leg `s(i)`. No signs.
pub fn permute_factors(x: &TensorElement, s: &Permutation) -> Result<TensorElement> {
    if s.degree() != x.arity() {
        return Err(Error::ArityMismatch {
            expected: x.arity(),
            got: s.degree(),
        });
    }
    let n = x.arity();
    let mut out = TensorElement::zero(n);
    for (m, c) in x.terms() {
        let mut factors = vec![PbwMonomial::one(); n];
        for i in 1..=n {
            factors[s.image(i) - 1] = m.factors()[i - 1];
        }
        out.add_term(TensorMonomial::new(factors), c.clone());
    }
    Ok(out)
}

// --- coproducts ----------------------------------------------------------------

/// Generator images of the coproduct: `Δ(E±) = E±⊗1 + 1⊗E±`,
/// `Δ(H) = H⊗1 + 1⊗H`, `Δ(F±) = F±⊗P + 1⊗F±`, `Δ(P) = P⊗P`.
fn coproduct_generator(g: Generator) -> TensorElement {
    use Generator::*;
    let mono = |a: Generator| PbwMonomial::generator(a);
    let pair = |l: PbwMonomial, r: PbwMonomial| TensorMonomial::new(vec![l, r]);
    let mut out = TensorElement::zero(2);
    match g {
        Eminus | H | Eplus => {
            out.add_term(pair(mono(g), PbwMonomial::one()), int(1));
            out.add_term(pair(PbwMonomial::one(), mono(g)), int(1));
        }
        Fminus | Fplus => {
            out.add_term(pair(mono(g), mono(P)), int(1));
            out.add_term(pair(PbwMonomial::one(), mono(g)), int(1));
        }
        P => {
            out.add_term(pair(mono(P), mono(P)), int(1));
        }
    }
    out
}

/// Coproduct `Δ` (or the opposite coproduct with legs swapped), extended to
/// the whole algebra as a homomorphism.
pub fn coproduct(x: &PbwElement, opposite: bool) -> TensorElement {
    let mut out = TensorElement::zero(2);
    for (m, c) in x.terms() {
        let mut acc = TensorElement::unit(2);
        for g in m.word() {
            acc = &acc * &coproduct_generator(g);
        }
        for (tm, tc) in acc.terms() {
            out.add_term(tm.clone(), tc * c);
        }
    }
    if opposite {
        let swap = Permutation::transposition(2, 1).expect("s1 exists at arity 2");
        permute_factors(&out, &swap).expect("arity 2 is preserved")
    } else {
        out
    }
}

/// One entry of an `apply_positional` plan.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LegOp {
    Identity,
    /// `Δ^(k)`, sending one leg to `k+1` legs; `Delta(0)` is the identity.
    Delta(usize),
}

impl LegOp {
    fn output_arity(self) -> usize {
        match self {
            LegOp::Identity => 1,
            LegOp::Delta(k) => k + 1,
        }
    }
}

/// Iterated coproduct `Δ^(k) = (id ⊗ Δ^(k-1)) Δ`, with `Δ^(0) = id`.
pub fn coproduct_iter(k: usize, x: &PbwElement) -> TensorElement {
    if k == 0 {
        return TensorElement::from(x);
    }
    let base = coproduct(x, false);
    apply_positional(&base, &[LegOp::Identity, LegOp::Delta(k - 1)])
        .expect("plan length matches arity 2")
}

/// Apply `identity` or `Δ^(k)` per leg, expanding the arity accordingly.
pub fn apply_positional(x: &TensorElement, plan: &[LegOp]) -> Result<TensorElement> {
    if plan.len() != x.arity() {
        return Err(Error::ArityMismatch {
            expected: x.arity(),
            got: plan.len(),
        });
    }
    let out_arity: usize = plan.iter().map(|op| op.output_arity()).sum();
    let mut out = TensorElement::zero(out_arity);
    for (m, c) in x.terms() {
        let mut acc: Option<TensorElement> = None;
        for (i, op) in plan.iter().enumerate() {
            let leg = PbwElement::from_term(m.factors()[i], int(1));
            let image = match op {
                LegOp::Identity => TensorElement::from(&leg),
                LegOp::Delta(k) => coproduct_iter(*k, &leg),
            };
            acc = Some(match acc {
                None => image,
                Some(prev) => outer(&prev, &image),
            });
        }
        for (tm, tc) in acc.expect("plan is nonempty").terms() {
            out.add_term(tm.clone(), tc * c);
        }
    }
    Ok(out)
}
