//! Kashiwara's bilinear form on `U⁺`, evaluated exactly on words and on
//! divided-power monomials.
//!
//! The form is the unique symmetric form with `(1, 1) = 1` and
//! `(E_i x, y) = (x, φ_i y)`. On a word, `φ_i` acts by
//!
//! ```text
//! φ_i(1) = 0,    φ_i(E_j w) = δ_ij w + v^(a_ij) E_j φ_i(w),
//! ```
//!
//! so `φ_i(w)` is a sum over the positions of `i` in `w` of that word with
//! the letter deleted, weighted by `v` to the sum of `a_{i,j}` over the
//! letters `j` to its left. Everything is computed on the free algebra;
//! the form vanishes on the Serre ideal, so no normal forms are needed.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::qlaurent::{qfact, LaurentPoly, RatFunc};
use crate::rootdata::{CartanSpec, Monomial, RootDataError};

/// Oracle runs are refused above this total degree unless configured.
pub const DEFAULT_DEGREE_CAP: u64 = 14;
/// Upper bound on the number of words enumerated by [`equal_by_pairing`].
pub const DEFAULT_WORD_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    DegreeCapExceeded { degree: u64, cap: u64 },
    WeightTooLarge { words: u64, cap: u64 },
    ConstantTermNotPositiveInteger(String),
    RootData(RootDataError),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DegreeCapExceeded { degree, cap } => {
                write!(f, "monomial degree {degree} exceeds the oracle degree cap {cap}")
            }
            Self::WeightTooLarge { words, cap } => {
                write!(f, "weight space has {words} words, above the word cap {cap}")
            }
            Self::ConstantTermNotPositiveInteger(v) => {
                write!(f, "constant term {v} is not a positive integer")
            }
            Self::RootData(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for OracleError {}

impl From<RootDataError> for OracleError {
    fn from(e: RootDataError) -> Self {
        Self::RootData(e)
    }
}

/// A word `E_{i₁} E_{i₂} ⋯` in the free algebra on the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: impl IntoIterator<Item = usize>) -> Self {
        Self(letters.into_iter().map(|i| u8::try_from(i).expect("generator index fits in u8")).collect())
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&l| usize::from(l))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter multiplicities indexed by generator `1..=rank`.
    pub fn content(&self, rank: usize) -> Vec<u32> {
        let mut c = vec![0; rank];
        for &l in &self.0 {
            c[usize::from(l) - 1] += 1;
        }
        c
    }

    fn without(&self, pos: usize) -> Self {
        let mut w = self.0.clone();
        w.remove(pos);
        Self(w)
    }

    fn tail(&self) -> Self {
        Self(self.0[1..].to_vec())
    }

    fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "E{l}")?;
        }
        Ok(())
    }
}

/// A finite linear combination of words with Laurent-polynomial coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Combination {
    terms: BTreeMap<Word, LaurentPoly>,
}

impl Combination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, LaurentPoly::one());
        Self { terms }
    }

    pub fn add_term(&mut self, w: Word, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: &Word) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of words with a nonzero coefficient; emptiness is [`Self::is_zero`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }
}

/// `φ_i` applied to a combination of words.
pub fn phi(cartan: &CartanSpec, i: usize, x: &Combination) -> Combination {
    let mut out = Combination::zero();
    for (w, c) in x.terms() {
        let mut shift = 0i64;
        for (pos, j) in w.letters().enumerate() {
            if j == i {
                out.add_term(w.without(pos), &c.shift(shift));
            }
            shift += cartan.entry(i, j);
        }
    }
    out
}

/// Memoized evaluator of the form on pairs of words.
///
/// The cache is keyed by `(suffix of x, word y)` and owned by the evaluator,
/// so each worker thread should hold its own instance.
pub struct FormEvaluator<'a> {
    cartan: &'a CartanSpec,
    memo: BTreeMap<(Word, Word), LaurentPoly>,
}

impl<'a> FormEvaluator<'a> {
    pub fn new(cartan: &'a CartanSpec) -> Self {
        Self { cartan, memo: BTreeMap::new() }
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    /// `(x, y)` via `(E_i x', y) = (x', φ_i y)`.
    pub fn form(&mut self, x: &Word, y: &Word) -> LaurentPoly {
        if x.len() != y.len() || x.content(self.cartan.rank()) != y.content(self.cartan.rank()) {
            return LaurentPoly::zero();
        }
        self.form_same_content(x, y)
    }

    fn form_same_content(&mut self, x: &Word, y: &Word) -> LaurentPoly {
        if x.is_empty() {
            return LaurentPoly::one();
        }
        let key = (x.clone(), y.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let first = usize::from(x.0[0]);
        let rest = x.tail();
        let derived = phi(self.cartan, first, &Combination::word(y.clone()));
        let mut acc = LaurentPoly::zero();
        for (w, c) in derived.terms() {
            let inner = self.form_same_content(&rest, w);
            if !inner.is_zero() {
                acc += &(c * &inner);
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// `(x, y)` on words; zero unless the contents agree.
pub fn form_words(cartan: &CartanSpec, x: &Word, y: &Word) -> LaurentPoly {
    FormEvaluator::new(cartan).form(x, y)
}

/// `(x, y)` as the empty-word coefficient of `φ_{i_k}(⋯ φ_{i_1}(y))` for
/// `x = E_{i_1} ⋯ E_{i_k}`, expanding whole combinations level by level.
pub fn form_words_unmemoized(cartan: &CartanSpec, x: &Word, y: &Word) -> LaurentPoly {
    let mut comb = Combination::word(y.clone());
    for i in x.letters() {
        comb = phi(cartan, i, &comb);
        if comb.is_zero() {
            return LaurentPoly::zero();
        }
    }
    comb.coeff(&Word::empty())
}

/// `(rev x, rev y)`. The anti-automorphism of `U⁺` fixing every `E_i`
/// preserves the form, so this equals `(x, y)` while consuming the letters
/// in the opposite order.
pub fn form_words_reversed(cartan: &CartanSpec, x: &Word, y: &Word) -> LaurentPoly {
    form_words(cartan, &x.reversed(), &y.reversed())
}

/// Pairing of arbitrary words against one fixed monomial, using the block
/// structure of the monomial.
///
/// The flattened monomial is a sequence of blocks of equal letters. Deleting
/// any one of the `c` remaining letters of a block gives the same word, so a
/// state of the `φ` expansion is the vector of remaining counts per block.
/// Deleting from block `b` contributes `v^e · (1 + v² + ⋯ + v^(2(c-1)))`
/// where `e` is the sum of `a_{i,j}` over the letters remaining to the left.
#[derive(Clone, Debug)]
pub struct MonomialPairing<'a> {
    cartan: &'a CartanSpec,
    block_letters: Vec<usize>,
    block_counts: Vec<u32>,
}

/// Coefficients of the `φ` expansion, keyed by remaining block counts.
pub type PairingState = BTreeMap<Vec<u32>, LaurentPoly>;

impl<'a> MonomialPairing<'a> {
    pub fn new(cartan: &'a CartanSpec, m: &Monomial) -> Self {
        let mut block_letters = Vec::new();
        let mut block_counts: Vec<u32> = Vec::new();
        for &(i, a) in m.factors() {
            if a == 0 {
                continue;
            }
            match block_letters.last() {
                Some(&j) if j == i => *block_counts.last_mut().unwrap() += a,
                _ => {
                    block_letters.push(i);
                    block_counts.push(a);
                }
            }
        }
        Self { cartan, block_letters, block_counts }
    }

    pub fn start(&self) -> PairingState {
        let mut s = BTreeMap::new();
        s.insert(self.block_counts.clone(), LaurentPoly::one());
        s
    }

    /// Applies `φ_i` to every state.
    pub fn apply(&self, state: &PairingState, i: usize) -> PairingState {
        let mut out: PairingState = BTreeMap::new();
        for (counts, coeff) in state {
            let mut shift = 0i64;
            for (b, (&letter, &c)) in self.block_letters.iter().zip(counts).enumerate() {
                if letter == i && c > 0 {
                    let mut next = counts.clone();
                    next[b] -= 1;
                    let block_sum = LaurentPoly::from_terms((0..i64::from(c)).map(|t| (shift + 2 * t, 1)));
                    let slot = out.entry(next).or_default();
                    *slot += &(coeff * &block_sum);
                }
                shift += i64::from(c) * self.cartan.entry(i, letter);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// The value once every letter has been consumed.
    pub fn value(&self, state: &PairingState) -> LaurentPoly {
        state.iter().find(|(counts, _)| counts.iter().all(|&c| c == 0)).map(|(_, c)| c.clone()).unwrap_or_default()
    }

    /// `(E_{x₁} ⋯ E_{x_k}, E_{i₁}^{a₁} ⋯ E_{i_r}^{a_r})` with undivided powers.
    pub fn pair_letters(&self, x: impl IntoIterator<Item = usize>) -> LaurentPoly {
        let mut state = self.start();
        for i in x {
            state = self.apply(&state, i);
            if state.is_empty() {
                return LaurentPoly::zero();
            }
        }
        self.value(&state)
    }
}

/// `∏ [a]!` over the factors of a monomial.
pub fn factorial_weight(m: &Monomial) -> LaurentPoly {
    m.factors().iter().map(|&(_, a)| qfact(a)).product()
}

/// `(m1, m2)` for divided-power monomials.
pub fn form_monomials(cartan: &CartanSpec, m1: &Monomial, m2: &Monomial) -> Result<RatFunc, OracleError> {
    if m1.weight(cartan)? != m2.weight(cartan)? {
        return Ok(RatFunc::zero());
    }
    let raw = MonomialPairing::new(cartan, m2).pair_letters(m1.flattened());
    let den = &factorial_weight(m1) * &factorial_weight(m2);
    Ok(RatFunc::new(raw, den).expect("quantum factorials are nonzero"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictKind {
    Tight,
    Semitight(u64),
    NotSemitight,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictKind::Tight => f.write_str("Tight"),
            VerdictKind::Semitight(k) => write!(f, "Semitight({k})"),
            VerdictKind::NotSemitight => f.write_str("NotSemitight"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictSource {
    Oracle,
    ClosedForm,
}

impl fmt::Display for VerdictSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictSource::Oracle => f.write_str("oracle"),
            VerdictSource::ClosedForm => f.write_str("closed-form"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// `(x, x)₀`, present iff `(x, x)` is regular at `v⁻¹ = 0`.
    pub constant_term: Option<BigRational>,
    pub source: VerdictSource,
}

impl Verdict {
    /// Verdict for a positive integer constant term `k`.
    pub fn from_count(k: u64, source: VerdictSource) -> Self {
        let kind = if k == 1 { VerdictKind::Tight } else { VerdictKind::Semitight(k) };
        Self { kind, constant_term: Some(BigRational::from_integer(BigInt::from(k))), source }
    }

    pub fn is_tight(&self) -> bool {
        self.kind == VerdictKind::Tight
    }

    /// The constant term as an integer, when it is one.
    pub fn constant_integer(&self) -> Option<u64> {
        self.constant_term.as_ref().filter(|c| c.is_integer()).and_then(|c| c.to_integer().to_u64())
    }
}

/// Classifies a monomial from the value of `(x, x)`.
pub fn classify_form(f: &RatFunc) -> Result<Verdict, OracleError> {
    let reg = f.eval_at_vinv0();
    let Some(value) = reg.value else {
        return Ok(Verdict { kind: VerdictKind::NotSemitight, constant_term: None, source: VerdictSource::Oracle });
    };
    let k = value
        .is_integer()
        .then(|| value.to_integer())
        .filter(|k| k.is_positive())
        .and_then(|k| k.to_u64())
        .ok_or_else(|| OracleError::ConstantTermNotPositiveInteger(alloc::format!("{value}")))?;
    let mut verdict = Verdict::from_count(k, VerdictSource::Oracle);
    verdict.constant_term = Some(value);
    Ok(verdict)
}

/// Value of `(m, m)` together with its classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub form: RatFunc,
    pub verdict: Verdict,
}

pub fn analyze_oracle(cartan: &CartanSpec, m: &Monomial, degree_cap: u64) -> Result<OracleReport, OracleError> {
    let degree = m.degree();
    if degree > degree_cap {
        return Err(OracleError::DegreeCapExceeded { degree, cap: degree_cap });
    }
    let form = form_monomials(cartan, m, m)?;
    let verdict = classify_form(&form)?;
    Ok(OracleReport { form, verdict })
}

pub fn classify_oracle(cartan: &CartanSpec, m: &Monomial, degree_cap: u64) -> Result<Verdict, OracleError> {
    analyze_oracle(cartan, m, degree_cap).map(|r| r.verdict)
}

/// Number of distinct words with the given letter multiplicities.
pub fn word_count(content: &[u32]) -> Option<u64> {
    let mut total: u64 = 0;
    let mut acc: u64 = 1;
    for &c in content {
        // acc *= binom(total + c, c), one factor at a time to stay exact
        for k in 1..=u64::from(c) {
            acc = acc.checked_mul(total + k)? / k;
        }
        total += u64::from(c);
    }
    Some(acc)
}

/// `true` iff `(m1, w) = (m2, w)` for every word `w` of the common weight.
///
/// Words are visited in lexicographic order as a prefix tree, so the `φ`
/// states of both monomials are shared between words with a common prefix.
/// A subtree is skipped once both states vanish.
pub fn equal_by_pairing(cartan: &CartanSpec, m1: &Monomial, m2: &Monomial, word_cap: u64) -> Result<bool, OracleError> {
    let w1 = m1.weight(cartan)?;
    if w1 != m2.weight(cartan)? {
        return Ok(false);
    }
    let content: Vec<u32> = w1.coords().iter().map(|&c| c as u32).collect();
    let words = word_count(&content).unwrap_or(u64::MAX);
    if words > word_cap {
        return Err(OracleError::WeightTooLarge { words, cap: word_cap });
    }
    let p1 = MonomialPairing::new(cartan, m1);
    let p2 = MonomialPairing::new(cartan, m2);
    // (m1, w) = (m2, w) ⟺ raw1 · F2 = raw2 · F1
    let f1 = factorial_weight(m1);
    let f2 = factorial_weight(m2);
    let mut walk = PrefixWalk { p1: &p1, p2: &p2, f1: &f1, f2: &f2, content, rank: cartan.rank() };
    Ok(walk.agree(&p1.start(), &p2.start()))
}

struct PrefixWalk<'p, 'a> {
    p1: &'p MonomialPairing<'a>,
    p2: &'p MonomialPairing<'a>,
    f1: &'p LaurentPoly,
    f2: &'p LaurentPoly,
    content: Vec<u32>,
    rank: usize,
}

impl PrefixWalk<'_, '_> {
    fn agree(&mut self, s1: &PairingState, s2: &PairingState) -> bool {
        if s1.is_empty() && s2.is_empty() {
            return true;
        }
        if self.content.iter().all(|&c| c == 0) {
            let lhs = &self.p1.value(s1) * self.f2;
            let rhs = &self.p2.value(s2) * self.f1;
            return lhs == rhs;
        }
        for i in 1..=self.rank {
            if self.content[i - 1] == 0 {
                continue;
            }
            self.content[i - 1] -= 1;
            let ok = self.agree(&self.p1.apply(s1, i), &self.p2.apply(s2, i));
            self.content[i - 1] += 1;
            if !ok {
                return false;
            }
        }
        true
    }
}
