use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt::Debug;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{FockError, Space};
use crate::ring::{q_power, Laurent, Localized, QExponent, RootConfig};

/// Entry type of a sparse operator.
pub trait Coefficient: Clone + PartialEq + Debug {
    /// Data needed to build constants (the root for Laurent scalars).
    type Context: Copy + PartialEq + Debug;

    fn zero(ctx: Self::Context) -> Self;
    fn one(ctx: Self::Context) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
}

impl Coefficient for Laurent {
    type Context = RootConfig;
    fn zero(ctx: RootConfig) -> Self {
        Laurent::zero(ctx)
    }
    fn one(ctx: RootConfig) -> Self {
        Laurent::one(ctx)
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Coefficient for Localized {
    type Context = RootConfig;
    fn zero(ctx: RootConfig) -> Self {
        Localized::zero(ctx)
    }
    fn one(ctx: RootConfig) -> Self {
        Localized::one(ctx)
    }
    fn is_zero(&self) -> bool {
        Localized::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Coefficient for BigRational {
    type Context = ();
    fn zero(_: ()) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(_: ()) -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
}

/// An exact sparse linear map `domain → codomain`. Rows index the codomain
/// basis, columns the domain basis; zero entries are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator<S: Coefficient> {
    ctx: S::Context,
    domain: Space,
    codomain: Space,
    rows: Vec<BTreeMap<usize, S>>,
}

/// Operators with Laurent-polynomial entries: the working type of the crate.
pub type SparseOperator = Operator<Laurent>;
/// Operators with entries in the Laurent ring localized at `q − q⁻¹`.
pub type LocalizedOperator = Operator<Localized>;
/// Operators over the rationals, used for the classical limit.
pub type RationalOperator = Operator<BigRational>;

fn mismatch(op: &'static str, left: &Space, right: &Space) -> FockError {
    FockError::SpaceMismatch { op, left: format!("{left}"), right: format!("{right}") }
}

impl<S: Coefficient> Operator<S> {
    pub fn zero(ctx: S::Context, domain: Space, codomain: Space) -> Self {
        let rows = (0..codomain.dim()).map(|_| BTreeMap::new()).collect();
        Operator { ctx, domain, codomain, rows }
    }

    pub fn identity(ctx: S::Context, space: Space) -> Self {
        Operator::diagonal(ctx, space, |_| S::one(ctx))
    }

    pub fn scalar(ctx: S::Context, space: Space, c: S) -> Self {
        Operator::diagonal(ctx, space, |_| c.clone())
    }

    pub fn diagonal(ctx: S::Context, space: Space, mut f: impl FnMut(usize) -> S) -> Self {
        let mut op = Operator::zero(ctx, space.clone(), space);
        for i in 0..op.rows.len() {
            op.accumulate(i, i, f(i));
        }
        op
    }

    pub fn from_entries<I>(ctx: S::Context, domain: Space, codomain: Space, entries: I) -> Result<Self, FockError>
    where
        I: IntoIterator<Item = (usize, usize, S)>,
    {
        let mut op = Operator::zero(ctx, domain, codomain);
        let (rows, cols) = (op.codomain.dim(), op.domain.dim());
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(FockError::EntryOutOfRange { row: r, col: c, rows, cols });
            }
            op.accumulate(r, c, v);
        }
        Ok(op)
    }

    /// Adds `v` to entry `(row, col)`, keeping the canonical form.
    pub fn accumulate(&mut self, row: usize, col: usize, v: S) {
        if v.is_zero() {
            return;
        }
        let row = &mut self.rows[row];
        match row.get_mut(&col) {
            Some(existing) => {
                let sum = existing.plus(&v);
                if sum.is_zero() {
                    row.remove(&col);
                } else {
                    *existing = sum;
                }
            }
            None => {
                row.insert(col, v);
            }
        }
    }

    pub fn context(&self) -> S::Context {
        self.ctx
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn is_square(&self) -> bool {
        self.domain == self.codomain
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&S> {
        self.rows.get(row).and_then(|r| r.get(&col))
    }

    /// Entry at `(row, col)`, zero when not stored.
    pub fn entry(&self, row: usize, col: usize) -> S {
        self.get(row, col).cloned().unwrap_or_else(|| S::zero(self.ctx))
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square() && self.entries().all(|(r, c, _)| r == c)
    }

    pub fn first_nonzero(&self) -> Option<(usize, usize, &S)> {
        self.entries().next()
    }

    /// `self ∘ rhs`: apply `rhs` first.
    pub fn try_compose(&self, rhs: &Operator<S>) -> Result<Operator<S>, FockError> {
        if rhs.codomain != self.domain {
            return Err(mismatch("compose", &self.domain, &rhs.codomain));
        }
        let mut out = Operator::zero(self.ctx, rhs.domain.clone(), self.codomain.clone());
        for (r, row) in self.rows.iter().enumerate() {
            for (k, a) in row {
                for (c, b) in &rhs.rows[*k] {
                    out.accumulate(r, *c, a.times(b));
                }
            }
        }
        Ok(out)
    }

    fn check_same_shape(&self, rhs: &Operator<S>, op: &'static str) -> Result<(), FockError> {
        if self.domain != rhs.domain {
            return Err(mismatch(op, &self.domain, &rhs.domain));
        }
        if self.codomain != rhs.codomain {
            return Err(mismatch(op, &self.codomain, &rhs.codomain));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Operator<S>) -> Result<Operator<S>, FockError> {
        self.check_same_shape(rhs, "add")?;
        let mut out = self.clone();
        for (r, c, v) in rhs.entries() {
            out.accumulate(r, c, v.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Operator<S>) -> Result<Operator<S>, FockError> {
        self.check_same_shape(rhs, "subtract")?;
        let mut out = self.clone();
        for (r, c, v) in rhs.entries() {
            out.accumulate(r, c, v.negated());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Operator<S> {
        let mut out = Operator::zero(self.ctx, self.domain.clone(), self.codomain.clone());
        for (r, col, v) in self.entries() {
            out.accumulate(r, col, c.times(v));
        }
        out
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(a: &Operator<S>, b: &Operator<S>) -> Result<Operator<S>, FockError> {
        a.try_compose(b)?.try_sub(&b.try_compose(a)?)
    }

    /// Kronecker product on the left-major product basis.
    pub fn tensor(&self, rhs: &Operator<S>) -> Operator<S> {
        let domain = self.domain.tensor(&rhs.domain);
        let codomain = self.codomain.tensor(&rhs.codomain);
        let (rd, rc) = (rhs.domain.dim(), rhs.codomain.dim());
        let mut out = Operator::zero(self.ctx, domain, codomain);
        for (r1, c1, v1) in self.entries() {
            for (r2, c2, v2) in rhs.entries() {
                out.accumulate(r1 * rc + r2, c1 * rd + c2, v1.times(v2));
            }
        }
        out
    }

    /// Entry-wise image under `f`, with the same spaces.
    pub fn map<T: Coefficient>(&self, ctx: T::Context, mut f: impl FnMut(&S) -> T) -> Operator<T> {
        let mut out = Operator::zero(ctx, self.domain.clone(), self.codomain.clone());
        for (r, c, v) in self.entries() {
            out.accumulate(r, c, f(v));
        }
        out
    }

    /// Fallible entry-wise image.
    pub fn try_map<T: Coefficient, E>(
        &self,
        ctx: T::Context,
        mut f: impl FnMut(&S) -> Result<T, E>,
    ) -> Result<Operator<T>, E> {
        let mut out = Operator::zero(ctx, self.domain.clone(), self.codomain.clone());
        for (r, c, v) in self.entries() {
            out.accumulate(r, c, f(v)?);
        }
        Ok(out)
    }

    /// Re-indexes this operator onto other spaces through basis maps.
    pub fn transport(
        &self,
        domain: Space,
        codomain: Space,
        domain_map: impl Fn(usize) -> usize,
        codomain_map: impl Fn(usize) -> usize,
    ) -> Operator<S> {
        let mut out = Operator::zero(self.ctx, domain, codomain);
        for (r, c, v) in self.entries() {
            out.accumulate(codomain_map(r), domain_map(c), v.clone());
        }
        out
    }

    /// Adds `other` into the block of `self` selected by the index maps.
    pub(crate) fn accumulate_block(
        &mut self,
        other: &Operator<S>,
        domain_map: impl Fn(usize) -> usize,
        codomain_map: impl Fn(usize) -> usize,
    ) {
        for (r, c, v) in other.entries() {
            self.accumulate(codomain_map(r), domain_map(c), v.clone());
        }
    }
}

impl SparseOperator {
    pub fn root(&self) -> RootConfig {
        self.ctx
    }

    /// `[A, B]_{q^c} = AB − q^c·BA`.
    pub fn q_commutator(a: &SparseOperator, b: &SparseOperator, c: QExponent) -> Result<SparseOperator, FockError> {
        let qc = q_power(a.root(), c)?;
        a.try_compose(b)?.try_sub(&b.try_compose(a)?.scale(&qc))
    }

    /// Value at `q = 1`.
    pub fn classical(&self) -> RationalOperator {
        self.map((), Laurent::classical)
    }

    pub fn to_localized(&self) -> LocalizedOperator {
        self.map(self.ctx, |v| Localized::from(v.clone()))
    }
}

impl LocalizedOperator {
    /// The same operator over the Laurent ring, if no entry has a pole.
    pub fn to_polynomial(&self) -> Result<SparseOperator, FockError> {
        self.try_map(self.ctx, |v| v.to_laurent().ok_or(FockError::NotPolynomial))
    }
}

macro_rules! panicking_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl<S: Coefficient> $trait<&Operator<S>> for &Operator<S> {
            type Output = Operator<S>;
            fn $method(self, rhs: &Operator<S>) -> Operator<S> {
                self.$try(rhs).unwrap_or_else(|e| panic!("{}", e))
            }
        }
        impl<S: Coefficient> $trait<Operator<S>> for Operator<S> {
            type Output = Operator<S>;
            fn $method(self, rhs: Operator<S>) -> Operator<S> {
                (&self).$method(&rhs)
            }
        }
        impl<S: Coefficient> $trait<&Operator<S>> for Operator<S> {
            type Output = Operator<S>;
            fn $method(self, rhs: &Operator<S>) -> Operator<S> {
                (&self).$method(rhs)
            }
        }
    };
}

// Operator syntax panics on shape mismatch; the `try_*` methods report it.
panicking_binop!(Add, add, try_add);
panicking_binop!(Sub, sub, try_sub);
panicking_binop!(Mul, mul, try_compose);

impl<S: Coefficient> Neg for &Operator<S> {
    type Output = Operator<S>;
    fn neg(self) -> Operator<S> {
        self.scale(&S::one(self.ctx).negated())
    }
}

impl<S: Coefficient> Neg for Operator<S> {
    type Output = Operator<S>;
    fn neg(self) -> Operator<S> {
        -&self
    }
}
