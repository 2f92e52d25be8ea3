//! The coalgebra layer: formal elements of `A_{n-1}^q`, the coproduct, counit
//! and antipode on generators, iterated coproducts, and evaluation of formal
//! tensors as operators on products of Fock sectors.
//!
//! Words are never normal-ordered. Two formal elements are compared only
//! through their evaluations, which is a statement about the tested
//! representation and not about the abstract algebra.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::fock::{LocalizedOperator, Sector, Space, SparseOperator};
use crate::generators::{cartan_weyl, diagonal_y, GeneratorSet, Sign};
use crate::ring::{q_delta, q_power, Localized, QExponent, RootConfig};
use crate::{Error, Result};

/// A generator-level building block as written by a caller.
#[derive(Clone, Debug, PartialEq)]
pub enum Atom {
    /// `Y_{ij}^±`; `i = j` is the scalar `∓q^(∓1/2)/(q − q⁻¹)`.
    Y {
        i: usize,
        j: usize,
        sign: Sign,
    },
    /// `H_{ij}`.
    Cartan {
        i: usize,
        j: usize,
    },
    /// `q^(e·H_{ij})`.
    CartanExp {
        i: usize,
        j: usize,
        exponent: QExponent,
    },
    Scalar(Localized),
}

impl Atom {
    /// `Y_{ij}^±`, rejecting the wrong triangle.
    pub fn y(i: usize, j: usize, sign: Sign) -> Result<Atom> {
        match Sign::of_pair(i, j) {
            Some(s) if s != sign => {
                Err(Error::InvalidGenerator(format!("Y{sign}({i},{j}) lies in the opposite Borel half")))
            }
            _ => Ok(Atom::Y { i, j, sign }),
        }
    }

    /// `Y_{ij}` with the sign implied by the index order.
    pub fn y_pair(i: usize, j: usize) -> Result<Atom> {
        let sign =
            Sign::of_pair(i, j).ok_or_else(|| Error::InvalidGenerator(format!("Y({i},{i}) needs an explicit sign")))?;
        Ok(Atom::Y { i, j, sign })
    }

    pub fn cartan(i: usize, j: usize) -> Atom {
        Atom::Cartan { i, j }
    }

    pub fn cartan_exp(i: usize, j: usize, exponent: QExponent) -> Atom {
        Atom::CartanExp { i, j, exponent }
    }

    fn indices(&self) -> Option<(usize, usize)> {
        match self {
            Atom::Y { i, j, .. } | Atom::Cartan { i, j } | Atom::CartanExp { i, j, .. } => Some((*i, *j)),
            Atom::Scalar(_) => None,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Y { i, j, sign } => write!(f, "Y{sign}({i},{j})"),
            Atom::Cartan { i, j } => write!(f, "H({i},{j})"),
            Atom::CartanExp { i, j, exponent } => write!(f, "qH({i},{j};{exponent})"),
            Atom::Scalar(c) => write!(f, "[{c}]"),
        }
    }
}

/// An atom in canonical form: no scalars, no diagonal `Y`, Cartan indices ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Y { i: usize, j: usize },
    Cartan { i: usize, j: usize },
    CartanExp { i: usize, j: usize, exponent: QExponent },
}

impl Letter {
    fn to_atom(self) -> Atom {
        match self {
            Letter::Y { i, j } => Atom::Y { i, j, sign: Sign::of_pair(i, j).expect("canonical Y is off-diagonal") },
            Letter::Cartan { i, j } => Atom::Cartan { i, j },
            Letter::CartanExp { i, j, exponent } => Atom::CartanExp { i, j, exponent },
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_atom().fmt(f)
    }
}

type Word = Vec<Letter>;

/// Which leading coefficient the antipode recurrence uses for `Y_{ij}^±`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntipodeForm {
    /// `S(Y_{ij}^±) = −q^(±1) Y_{ij}^± ± (q − q⁻¹) q^(±1) Σ Y_{ik}^± S(Y_{kj}^±)`;
    /// satisfies the antipode axiom on the Fock realization.
    Verified,
    /// The same recurrence with leading term `−q^(∓1) Y_{ij}^±`.
    Verbatim,
}

/// The algebra `A_{n-1}^q` over a fixed root: the factory for formal elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Algebra {
    root: RootConfig,
    n: usize,
}

impl Algebra {
    pub fn new(root: RootConfig, n: usize) -> Result<Algebra> {
        if n < 1 {
            return Err(Error::InvalidConfig("the algebra needs at least one index".into()));
        }
        Ok(Algebra { root, n })
    }

    pub fn root(&self) -> RootConfig {
        self.root
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zero(&self, rank: usize) -> FormalElement {
        FormalElement { algebra: *self, rank, terms: BTreeMap::new() }
    }

    pub fn scalar(&self, c: Localized, rank: usize) -> FormalElement {
        let mut out = self.zero(rank);
        out.insert(vec![Vec::new(); rank], c);
        out
    }

    pub fn one(&self, rank: usize) -> FormalElement {
        self.scalar(Localized::one(self.root), rank)
    }

    /// A single word on one leg.
    pub fn word(&self, atoms: &[Atom]) -> Result<FormalElement> {
        self.tensor_word(&[atoms])
    }

    /// One term with a word on each leg.
    pub fn tensor_word(&self, legs: &[&[Atom]]) -> Result<FormalElement> {
        let mut coefficient = Localized::one(self.root);
        let mut canonical = Vec::with_capacity(legs.len());
        for atoms in legs {
            let mut word = Vec::new();
            for atom in atoms.iter() {
                if let Some((i, j)) = atom.indices() {
                    for index in [i, j] {
                        if index == 0 || index > self.n {
                            return Err(Error::IndexOutOfRange { index, bound: self.n });
                        }
                    }
                }
                match atom {
                    Atom::Y { i, j, sign } => match Sign::of_pair(*i, *j) {
                        None => coefficient = &coefficient * &diagonal_y(self.root, *sign)?,
                        Some(s) if s != *sign => return Ok(self.zero(legs.len())),
                        Some(_) => word.push(Letter::Y { i: *i, j: *j }),
                    },
                    Atom::Cartan { i, j } => match i.cmp(j) {
                        core::cmp::Ordering::Equal => return Ok(self.zero(legs.len())),
                        core::cmp::Ordering::Less => word.push(Letter::Cartan { i: *i, j: *j }),
                        core::cmp::Ordering::Greater => {
                            coefficient = -&coefficient;
                            word.push(Letter::Cartan { i: *j, j: *i });
                        }
                    },
                    Atom::CartanExp { i, j, exponent } => {
                        let (i, j, e) = if i <= j { (*i, *j, *exponent) } else { (*j, *i, -*exponent) };
                        if i == j || e.is_zero() {
                            continue;
                        }
                        push_exp(&mut word, i, j, e);
                    }
                    Atom::Scalar(c) => {
                        c.root().check(self.root)?;
                        coefficient = &coefficient * c;
                    }
                }
            }
            canonical.push(word);
        }
        let mut out = self.zero(legs.len());
        out.insert(canonical, coefficient);
        Ok(out)
    }

    pub fn atom(&self, atom: Atom) -> Result<FormalElement> {
        self.word(&[atom])
    }

    /// `Y_{ij}` with the sign implied by the index order.
    pub fn y(&self, i: usize, j: usize) -> Result<FormalElement> {
        self.atom(Atom::y_pair(i, j)?)
    }

    pub fn h(&self, i: usize, j: usize) -> Result<FormalElement> {
        self.atom(Atom::cartan(i, j))
    }

    pub fn q_cartan(&self, i: usize, j: usize, e: QExponent) -> Result<FormalElement> {
        self.atom(Atom::cartan_exp(i, j, e))
    }

    /// `[H_{ij}]_q = (q^(H_ij) − q^(−H_ij))/(q − q⁻¹)`.
    pub fn q_number_cartan(&self, i: usize, j: usize) -> Result<FormalElement> {
        let inv = Localized::inverse_delta_power(self.root, 1);
        let diff = self.q_cartan(i, j, 1.into())?.try_sub(&self.q_cartan(i, j, (-1).into())?)?;
        Ok(diff.scale(&inv))
    }

    /// The coproduct of a single atom, as a rank-2 element.
    pub fn coproduct(&self, atom: &Atom) -> Result<FormalElement> {
        self.atom(atom.clone())?.coproduct()
    }

    /// `ε` of a single atom.
    pub fn counit(&self, atom: &Atom) -> Result<Localized> {
        self.atom(atom.clone())?.counit()
    }

    fn letter_coproduct(&self, letter: Letter) -> Result<FormalElement> {
        match letter {
            Letter::Cartan { .. } => {
                let a = [letter.to_atom()];
                self.tensor_word(&[&a, &[]])?.try_add(&self.tensor_word(&[&[], &a])?)
            }
            Letter::CartanExp { .. } => {
                let a = [letter.to_atom()];
                self.tensor_word(&[&a, &a])
            }
            Letter::Y { i, j } => {
                let sign = Sign::of_pair(i, j).expect("canonical Y is off-diagonal");
                let s = sign.value();
                let half = QExponent::new(s, 2);
                // ∓(q − q⁻¹) q^(±1/2)
                let prefactor = (&q_delta(self.root) * &q_power(self.root, half)?).scale(&int(-s));
                let prefactor = Localized::from(prefactor);
                let mut out = self.zero(2);
                for k in i.min(j)..=i.max(j) {
                    let left = [Atom::Y { i, j: k, sign }, Atom::cartan_exp(j, k, half)];
                    let right = [Atom::Y { i: k, j, sign }, Atom::cartan_exp(i, k, half)];
                    out = out.try_add(&self.tensor_word(&[&left, &right])?.scale(&prefactor))?;
                }
                Ok(out)
            }
        }
    }

    fn letter_antipode(&self, letter: Letter, form: AntipodeForm) -> Result<FormalElement> {
        match letter {
            Letter::Cartan { .. } => Ok(-&self.word(&[letter.to_atom()])?),
            Letter::CartanExp { i, j, exponent } => self.q_cartan(i, j, -exponent),
            Letter::Y { i, j } => {
                let s = Sign::of_pair(i, j).expect("canonical Y is off-diagonal").value();
                let lead_exp = match form {
                    AntipodeForm::Verified => s,
                    AntipodeForm::Verbatim => -s,
                };
                let lead = Localized::from(q_power(self.root, lead_exp.into())?.scale(&int(-1)));
                let mut out = self.y(i, j)?.scale(&lead);
                // ±(q − q⁻¹) q^(±1)
                let tail = Localized::from((&q_delta(self.root) * &q_power(self.root, s.into())?).scale(&int(s)));
                for k in i.min(j) + 1..i.max(j) {
                    let step = self.y(i, k)?.try_mul(&self.letter_antipode(Letter::Y { i: k, j }, form)?)?;
                    out = out.try_add(&step.scale(&tail))?;
                }
                Ok(out)
            }
        }
    }
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

fn push_exp(word: &mut Word, i: usize, j: usize, e: QExponent) {
    if let Some(Letter::CartanExp { i: pi, j: pj, exponent }) = word.last_mut() {
        if (*pi, *pj) == (i, j) {
            *exponent = *exponent + e;
            if exponent.is_zero() {
                word.pop();
            }
            return;
        }
    }
    word.push(Letter::CartanExp { i, j, exponent: e });
}

fn concat(left: &Word, right: &Word) -> Word {
    let mut out = left.clone();
    for letter in right {
        match *letter {
            Letter::CartanExp { i, j, exponent } => push_exp(&mut out, i, j, exponent),
            other => out.push(other),
        }
    }
    out
}

/// A finite sum of tensor words with localized coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalElement {
    algebra: Algebra,
    rank: usize,
    terms: BTreeMap<Vec<Word>, Localized>,
}

impl FormalElement {
    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    /// Number of tensor legs.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(words per leg, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[Word], &Localized)> + '_ {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn insert(&mut self, legs: Vec<Word>, c: Localized) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&legs) {
            Some(old) => {
                let sum = &old + &c;
                if !sum.is_zero() {
                    self.terms.insert(legs, sum);
                }
            }
            None => {
                self.terms.insert(legs, c);
            }
        }
    }

    fn check_same(&self, other: &FormalElement) -> Result<()> {
        if self.algebra.n != other.algebra.n {
            return Err(Error::ModeMismatch { expected: self.algebra.n, found: other.algebra.n });
        }
        self.algebra.root.check(other.algebra.root)?;
        if self.rank != other.rank {
            return Err(Error::RankMismatch { rank: self.rank, legs: other.rank });
        }
        Ok(())
    }

    fn check_leg(&self, leg: usize) -> Result<()> {
        if leg >= self.rank {
            return Err(Error::IndexOutOfRange { index: leg, bound: self.rank });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &FormalElement) -> Result<FormalElement> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (legs, c) in &other.terms {
            out.insert(legs.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &FormalElement) -> Result<FormalElement> {
        self.try_add(&-other)
    }

    /// Product in the tensor-power algebra: words are concatenated leg by leg.
    pub fn try_mul(&self, other: &FormalElement) -> Result<FormalElement> {
        self.check_same(other)?;
        let mut out = self.algebra.zero(self.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let legs = a.iter().zip(b).map(|(x, y)| concat(x, y)).collect();
                out.insert(legs, ca * cb);
            }
        }
        Ok(out)
    }

    /// `self ⊗ other`, of rank `self.rank + other.rank`.
    pub fn try_tensor(&self, other: &FormalElement) -> Result<FormalElement> {
        if self.algebra.n != other.algebra.n {
            return Err(Error::ModeMismatch { expected: self.algebra.n, found: other.algebra.n });
        }
        let mut out = self.algebra.zero(self.rank + other.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.insert(a.iter().chain(b).cloned().collect(), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Localized) -> FormalElement {
        let mut out = self.algebra.zero(self.rank);
        for (legs, v) in &self.terms {
            out.insert(legs.clone(), v * c);
        }
        out
    }

    /// `[A, B]_{q^c} = AB − q^c·BA`.
    pub fn q_commutator(a: &FormalElement, b: &FormalElement, c: QExponent) -> Result<FormalElement> {
        let qc = Localized::q_power(a.algebra.root, c)?;
        a.try_mul(b)?.try_sub(&b.try_mul(a)?.scale(&qc))
    }

    /// Applies a rank-1 → rank-`k` map to the words of one leg.
    fn expand_leg(
        &self,
        leg: usize,
        new_legs: usize,
        mut image: impl FnMut(&Word) -> Result<FormalElement>,
    ) -> Result<FormalElement> {
        self.check_leg(leg)?;
        let mut out = self.algebra.zero(self.rank - 1 + new_legs);
        for (legs, c) in &self.terms {
            let replaced = image(&legs[leg])?;
            for (parts, c2) in &replaced.terms {
                let spliced: Vec<Word> =
                    legs[..leg].iter().chain(parts.iter()).chain(legs[leg + 1..].iter()).cloned().collect();
                out.insert(spliced, c * c2);
            }
        }
        Ok(out)
    }

    fn word_coproduct(&self, word: &Word) -> Result<FormalElement> {
        let mut out = self.algebra.one(2);
        for letter in word {
            out = out.try_mul(&self.algebra.letter_coproduct(*letter)?)?;
        }
        Ok(out)
    }

    /// `Δ` applied on one leg, which is replaced by two.
    pub fn coproduct_at(&self, leg: usize) -> Result<FormalElement> {
        self.expand_leg(leg, 2, |w| self.word_coproduct(w))
    }

    /// `Δ` of a rank-1 element.
    pub fn coproduct(&self) -> Result<FormalElement> {
        self.require_rank(1)?;
        self.coproduct_at(0)
    }

    /// `(id ⊗ … ⊗ Δ)…(id ⊗ Δ)Δ` with `r` coproducts, always on the rightmost leg.
    pub fn delta_power(&self, r: usize) -> Result<FormalElement> {
        self.require_rank(1)?;
        let mut out = self.clone();
        for step in 0..r {
            out = out.coproduct_at(step)?;
        }
        Ok(out)
    }

    /// `ε` on one leg, which disappears.
    pub fn counit_at(&self, leg: usize) -> Result<FormalElement> {
        self.expand_leg(leg, 0, |w| {
            // ε(H) = 0, ε(Y_ij) = 0 off the diagonal, ε(q^(eH)) = 1
            let grouplike = w.iter().all(|l| matches!(l, Letter::CartanExp { .. }));
            Ok(if grouplike { self.algebra.one(0) } else { self.algebra.zero(0) })
        })
    }

    /// `ε` of a rank-1 element.
    pub fn counit(&self) -> Result<Localized> {
        self.require_rank(1)?;
        let reduced = self.counit_at(0)?;
        Ok(reduced.terms.values().next().cloned().unwrap_or_else(|| Localized::zero(self.algebra.root)))
    }

    /// `S` on one leg, extended antimultiplicatively.
    pub fn antipode_at(&self, leg: usize, form: AntipodeForm) -> Result<FormalElement> {
        self.expand_leg(leg, 1, |w| {
            let mut out = self.algebra.one(1);
            for letter in w.iter().rev() {
                out = out.try_mul(&self.algebra.letter_antipode(*letter, form)?)?;
            }
            Ok(out)
        })
    }

    pub fn antipode(&self, form: AntipodeForm) -> Result<FormalElement> {
        self.require_rank(1)?;
        self.antipode_at(0, form)
    }

    /// The multiplication map `A^{⊗r} → A`: legs concatenated left to right.
    pub fn multiply_legs(&self) -> FormalElement {
        let mut out = self.algebra.zero(1);
        for (legs, c) in &self.terms {
            let word = legs.iter().fold(Vec::new(), |acc, w| concat(&acc, w));
            out.insert(vec![word], c.clone());
        }
        out
    }

    fn require_rank(&self, rank: usize) -> Result<()> {
        if self.rank != rank {
            return Err(Error::RankMismatch { rank: self.rank, legs: rank });
        }
        Ok(())
    }

    /// The operator on `sectors[0] ⊗ … ⊗ sectors[r−1]`, with localized entries.
    pub fn evaluate_localized(&self, sectors: &[Sector]) -> Result<LocalizedOperator> {
        if sectors.len() != self.rank {
            return Err(Error::RankMismatch { rank: self.rank, legs: sectors.len() });
        }
        let root = self.algebra.root;
        let n = self.algebra.n;
        let mut realizations = Vec::with_capacity(sectors.len());
        for s in sectors {
            if s.modes() != n {
                return Err(Error::ModeMismatch { expected: n, found: s.modes() });
            }
            realizations.push(LegRealization::new(root, n, s)?);
        }
        let space = Space::new(sectors.to_vec());
        let mut out = LocalizedOperator::zero(root, space.clone(), space);
        for (legs, c) in &self.terms {
            let mut op: Option<SparseOperator> = None;
            for (word, real) in legs.iter().zip(realizations.iter_mut()) {
                let leg_op = real.word(word)?;
                op = Some(match op {
                    None => leg_op,
                    Some(acc) => acc.tensor(&leg_op),
                });
            }
            let op = op.unwrap_or_else(|| SparseOperator::identity(root, Space::new(Vec::new())));
            for (r, col, v) in op.entries() {
                out.accumulate(r, col, c * &Localized::from(v.clone()));
            }
        }
        Ok(out)
    }

    /// The operator on the tensor product of `sectors`; fails if a pole survives.
    pub fn evaluate(&self, sectors: &[Sector]) -> Result<SparseOperator> {
        Ok(self.evaluate_localized(sectors)?.to_polynomial()?)
    }
}

struct LegRealization {
    generators: GeneratorSet,
    cache: BTreeMap<Letter, SparseOperator>,
}

impl LegRealization {
    fn new(root: RootConfig, n: usize, sector: &Sector) -> Result<Self> {
        Ok(LegRealization { generators: cartan_weyl(root, n, sector)?, cache: BTreeMap::new() })
    }

    fn letter(&mut self, letter: Letter) -> Result<&SparseOperator> {
        if !self.cache.contains_key(&letter) {
            let op = match letter {
                Letter::Y { i, j } => self.generators.y(i, j)?.clone(),
                Letter::Cartan { i, j } => self.generators.h(i, j)?,
                Letter::CartanExp { i, j, exponent } => self.generators.q_cartan(i, j, exponent)?,
            };
            self.cache.insert(letter, op);
        }
        Ok(&self.cache[&letter])
    }

    fn word(&mut self, word: &Word) -> Result<SparseOperator> {
        let mut op = self.generators.identity();
        for letter in word {
            op = &op * self.letter(*letter)?;
        }
        Ok(op)
    }
}

macro_rules! panicking_formal_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&FormalElement> for &FormalElement {
            type Output = FormalElement;
            fn $method(self, rhs: &FormalElement) -> FormalElement {
                self.$try(rhs).unwrap_or_else(|e| panic!("{}", e))
            }
        }
    };
}

panicking_formal_binop!(Add, add, try_add);
panicking_formal_binop!(Sub, sub, try_sub);
panicking_formal_binop!(Mul, mul, try_mul);

impl Neg for &FormalElement {
    type Output = FormalElement;
    fn neg(self) -> FormalElement {
        self.scale(&-&Localized::one(self.algebra.root))
    }
}

impl fmt::Display for FormalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (legs, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}]")?;
            for (l, word) in legs.iter().enumerate() {
                f.write_str(if l == 0 { " " } else { " ⊗ " })?;
                if word.is_empty() {
                    f.write_str("1")?;
                }
                for (p, letter) in word.iter().enumerate() {
                    if p > 0 {
                        f.write_str("·")?;
                    }
                    write!(f, "{letter}")?;
                }
            }
        }
        Ok(())
    }
}

/// `m∘(id⊗S)∘Δ(g) − ε(g)` and `m∘(S⊗id)∘Δ(g) − ε(g)`, evaluated on one sector.
pub fn antipode_residuals(
    algebra: &Algebra,
    atom: &Atom,
    sector: &Sector,
    form: AntipodeForm,
) -> Result<[SparseOperator; 2]> {
    let delta = algebra.coproduct(atom)?;
    let unit = algebra.scalar(algebra.counit(atom)?, 1);
    let right = delta.antipode_at(1, form)?.multiply_legs().try_sub(&unit)?;
    let left = delta.antipode_at(0, form)?.multiply_legs().try_sub(&unit)?;
    let s = [sector.clone()];
    Ok([right.evaluate(&s)?, left.evaluate(&s)?])
}

/// `(ε⊗id)Δ(g) − g` and `(id⊗ε)Δ(g) − g`, evaluated on one sector.
pub fn counit_residuals(algebra: &Algebra, atom: &Atom, sector: &Sector) -> Result<[SparseOperator; 2]> {
    let delta = algebra.coproduct(atom)?;
    let g = algebra.atom(atom.clone())?;
    let s = [sector.clone()];
    Ok([delta.counit_at(0)?.try_sub(&g)?.evaluate(&s)?, delta.counit_at(1)?.try_sub(&g)?.evaluate(&s)?])
}

/// `(Δ⊗id)Δ(g) − (id⊗Δ)Δ(g)` on a sector triple.
pub fn coassociativity_residual(algebra: &Algebra, atom: &Atom, sectors: &[Sector; 3]) -> Result<SparseOperator> {
    let delta = algebra.coproduct(atom)?;
    let diff = delta.coproduct_at(0)?.try_sub(&delta.coproduct_at(1)?)?;
    diff.evaluate(sectors)
}

/// `Δ(q^(eH_ij)) − q^(eH_ij) ⊗ q^(eH_ij)` on a sector pair.
pub fn group_like_residual(
    algebra: &Algebra,
    i: usize,
    j: usize,
    e: QExponent,
    sectors: &[Sector; 2],
) -> Result<SparseOperator> {
    let atom = Atom::cartan_exp(i, j, e);
    let lhs = algebra.coproduct(&atom)?.evaluate(sectors)?;
    let single = algebra.atom(atom)?.evaluate(&sectors[..1])?;
    let other = algebra.q_cartan(i, j, e)?.evaluate(&sectors[1..])?;
    Ok(&lhs - &single.tensor(&other))
}

/// Every generator atom of the algebra: `H_{i,i+1}` (Chevalley) and all off-diagonal `Y`.
pub fn generator_atoms(n: usize) -> Vec<Atom> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push(Atom::cartan(i, i + 1));
    }
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(Atom::y_pair(i, j).expect("off-diagonal"));
            }
        }
    }
    out
}

/// Chevalley atoms: `H_i`, `Y_i^±`.
pub fn chevalley_atoms(n: usize) -> Vec<Atom> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push(Atom::cartan(i, i + 1));
        out.push(Atom::Y { i, j: i + 1, sign: Sign::Plus });
        out.push(Atom::Y { i: i + 1, j: i, sign: Sign::Minus });
    }
    out
}

/// `q^(e)` as a localized scalar; shorthand for coefficient construction.
pub fn q_scalar(root: RootConfig, e: QExponent) -> Result<Localized> {
    Ok(Localized::from(q_power(root, e)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::Sector;
    use crate::generators::cartan_power;
    use crate::ring::Laurent;

    const R: RootConfig = RootConfig::HALF;

    fn alg(n: usize) -> Algebra {
        Algebra::new(R, n).unwrap()
    }

    fn sector(n: usize, m: u32) -> Sector {
        Sector::new(n, m).unwrap()
    }

    fn q(e: i64) -> Localized {
        q_scalar(R, e.into()).unwrap()
    }

    #[test]
    fn canonical_forms() {
        let a = alg(3);
        assert!(a.h(2, 2).unwrap().is_zero());
        assert_eq!(a.h(2, 1).unwrap(), -&a.h(1, 2).unwrap());
        assert!(Atom::y(2, 1, Sign::Plus).is_err());
        let merged =
            a.word(&[Atom::cartan_exp(1, 2, QExponent::HALF), Atom::cartan_exp(2, 1, QExponent::HALF)]).unwrap();
        assert_eq!(merged, a.one(1));
        let y11 = a.atom(Atom::Y { i: 1, j: 1, sign: Sign::Minus }).unwrap();
        assert_eq!(y11, a.scalar(diagonal_y(R, Sign::Minus).unwrap(), 1));
        assert_eq!(format!("{}", a.y(1, 2).unwrap()), "[1] Y+(1,2)");
        assert_eq!(format!("{}", a.zero(2)), "0");
        assert!(a.y(1, 4).is_err());
    }

    #[test]
    fn coproduct_examples() {
        let a = alg(2);
        let dh = a.coproduct(&Atom::cartan(1, 2)).unwrap();
        assert_eq!(format!("{dh}"), "[1] 1 ⊗ H(1,2) + [1] H(1,2) ⊗ 1");
        let dy = a.coproduct(&Atom::y_pair(1, 2).unwrap()).unwrap();
        let half = QExponent::HALF;
        let expected = a
            .tensor_word(&[&[Atom::cartan_exp(2, 1, half)], &[Atom::y_pair(1, 2).unwrap()]])
            .unwrap()
            .try_add(&a.tensor_word(&[&[Atom::y_pair(1, 2).unwrap()], &[Atom::cartan_exp(1, 2, half)]]).unwrap())
            .unwrap();
        assert_eq!(dy, expected);
        let s = [sector(2, 1), sector(2, 1)];
        let h = dh.evaluate(&s).unwrap();
        assert!(h.is_diagonal());
        for k in 0..h.domain().dim() {
            let parts = h.domain().split_index(k);
            let weight: i64 =
                parts.iter().zip(&s).map(|(&p, sec)| sec.state(p)[0] as i64 - sec.state(p)[1] as i64).sum();
            assert_eq!(h.entry(k, k), Laurent::from_integer(R, weight));
        }
    }

    #[test]
    fn counit_examples() {
        let a = alg(3);
        assert!(a.counit(&Atom::cartan(1, 3)).unwrap().is_zero());
        assert!(a.counit(&Atom::y_pair(1, 2).unwrap()).unwrap().is_zero());
        let expected = Localized::new(q_power(R, QExponent::HALF).unwrap(), 1);
        assert_eq!(a.counit(&Atom::Y { i: 1, j: 1, sign: Sign::Minus }).unwrap(), expected);
        assert_eq!(a.counit(&Atom::cartan_exp(1, 2, QExponent::HALF)).unwrap(), Localized::one(R));
        for atom in generator_atoms(3) {
            for r in counit_residuals(&a, &atom, &sector(3, 1)).unwrap() {
                assert!(r.is_zero(), "{atom}");
            }
        }
    }

    #[test]
    fn antipode_examples() {
        let a = alg(3);
        assert_eq!(a.h(1, 2).unwrap().antipode(AntipodeForm::Verified).unwrap(), -&a.h(1, 2).unwrap());
        let verbatim = AntipodeForm::Verbatim;
        let s12 = a.y(1, 2).unwrap().antipode(verbatim).unwrap();
        assert_eq!(s12, a.y(1, 2).unwrap().scale(&-&q(-1)));
        // one-step unrolling with the printed leading term
        let s13 = a.y(1, 3).unwrap().antipode(verbatim).unwrap();
        let delta = Localized::from(q_delta(R));
        let tail = a.y(1, 2).unwrap().try_mul(&a.y(2, 3).unwrap().scale(&-&q(-1))).unwrap().scale(&(&delta * &q(1)));
        assert_eq!(s13, a.y(1, 3).unwrap().scale(&-&q(-1)).try_add(&tail).unwrap());
        let s = a.y(1, 2).unwrap().antipode(AntipodeForm::Verified).unwrap();
        assert_eq!(s, a.y(1, 2).unwrap().scale(&-&q(1)));
    }

    #[test]
    fn antipode_axiom_on_generators() {
        for (n, m) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
            let a = alg(n);
            for atom in generator_atoms(n) {
                for r in antipode_residuals(&a, &atom, &sector(n, m), AntipodeForm::Verified).unwrap() {
                    assert!(r.is_zero(), "{atom} n={n} m={m}");
                }
            }
        }
        let a = alg(2);
        let residual =
            antipode_residuals(&a, &Atom::y_pair(1, 2).unwrap(), &sector(2, 1), AntipodeForm::Verbatim).unwrap();
        assert!(residual.iter().any(|r| !r.is_zero()));
    }

    #[test]
    fn coassociativity_and_group_like() {
        let a = alg(3);
        let legs = [sector(3, 1), sector(3, 0), sector(3, 1)];
        for atom in generator_atoms(3) {
            assert!(coassociativity_residual(&a, &atom, &legs).unwrap().is_zero(), "{atom}");
        }
        let pair = [sector(3, 1), sector(3, 2)];
        assert!(group_like_residual(&a, 1, 3, QExponent::new(-3, 2), &pair).unwrap().is_zero());
        let single = a.q_cartan(1, 3, QExponent::HALF).unwrap().evaluate(&pair[..1]).unwrap();
        assert_eq!(single, cartan_power(R, 1, 3, QExponent::HALF, &pair[0]).unwrap());
    }

    #[test]
    fn delta_power_shape() {
        let a = alg(2);
        let h = a.h(1, 2).unwrap();
        let d2 = h.delta_power(2).unwrap();
        assert_eq!(d2.rank(), 3);
        assert_eq!(d2.len(), 3);
        assert_eq!(h.delta_power(0).unwrap(), h);
        assert_eq!(a.y(1, 2).unwrap().delta_power(1).unwrap(), a.y(1, 2).unwrap().coproduct().unwrap());
        assert!(d2.coproduct().is_err());
    }

    #[test]
    fn coproduct_is_a_homomorphism_on_su2() {
        let a = alg(2);
        let rel = FormalElement::q_commutator(&a.y(1, 2).unwrap(), &a.y(2, 1).unwrap(), QExponent::ZERO)
            .unwrap()
            .try_sub(&a.q_number_cartan(1, 2).unwrap())
            .unwrap();
        assert!(rel.evaluate(&[sector(2, 2)]).unwrap().is_zero());
        let image = rel.coproduct().unwrap();
        for m1 in 0..=2 {
            for m2 in 0..=2 {
                assert!(image.evaluate(&[sector(2, m1), sector(2, m2)]).unwrap().is_zero());
            }
        }
        let bad = a.q_number_cartan(1, 2).unwrap().scale(&Localized::inverse_delta_power(R, 1));
        assert!(bad.evaluate(&[sector(2, 1)]).is_err());
        assert!(a.one(1).evaluate(&[sector(2, 2)]).unwrap() == SparseOperator::identity(R, Space::from(&sector(2, 2))));
        assert!(matches!(rel.evaluate(&[sector(3, 1)]), Err(Error::ModeMismatch { .. })));
    }
}
