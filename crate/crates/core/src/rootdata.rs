//! Cartan data, the Weyl group action on weights, reduced words of the
//! longest element, and the Verma monomial `X_λ`.
//!
//! Generator indices are 1-based throughout, matching the usual labelling
//! `E_1, ..., E_n`. Weights are stored in fundamental-weight coordinates and
//! roots in simple-root coordinates; the Cartan matrix converts between them.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootDataError {
    IndexOutOfRange { index: usize, rank: usize },
    RankMismatch { expected: usize, found: usize },
    NonDominantWeight,
    InvalidWord,
    Parse(String),
}

impl fmt::Display for RootDataError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::IndexOutOfRange { index, rank } => {
                write!(f, "generator index {index} out of range 1..={rank}")
            }
            Self::RankMismatch { expected, found } => {
                write!(f, "expected {expected} coordinates, found {found}")
            }
            Self::NonDominantWeight => f.write_str("weight is not dominant"),
            Self::InvalidWord => f.write_str("word is not a reduced expression of the longest element"),
            Self::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for RootDataError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanKind {
    TypeA(usize),
    TypeD4,
}

impl fmt::Display for CartanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanKind::TypeA(n) => write!(f, "A{n}"),
            CartanKind::TypeD4 => f.write_str("D4"),
        }
    }
}

impl FromStr for CartanKind {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("D4") {
            return Ok(CartanKind::TypeD4);
        }
        match t.strip_prefix('A').or_else(|| t.strip_prefix('a')).map(str::parse::<usize>) {
            Some(Ok(n)) if n >= 1 => Ok(CartanKind::TypeA(n)),
            _ => Err(RootDataError::Parse(alloc::format!("unknown Cartan type `{s}`"))),
        }
    }
}

/// A symmetric Cartan matrix together with its type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanSpec {
    kind: CartanKind,
    matrix: Vec<Vec<i64>>,
}

impl CartanSpec {
    pub fn new(kind: CartanKind) -> Self {
        match kind {
            CartanKind::TypeA(n) => {
                assert!(n >= 1, "type A needs rank at least 1");
                let matrix = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| match i.abs_diff(j) {
                                0 => 2,
                                1 => -1,
                                _ => 0,
                            })
                            .collect()
                    })
                    .collect();
                Self { kind, matrix }
            }
            CartanKind::TypeD4 => {
                // node 2 is the trivalent centre
                let matrix = vec![vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]];
                Self { kind, matrix }
            }
        }
    }

    pub fn type_a(n: usize) -> Self {
        Self::new(CartanKind::TypeA(n))
    }

    pub fn type_d4() -> Self {
        Self::new(CartanKind::TypeD4)
    }

    pub fn kind(&self) -> CartanKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    /// `a_ij` for 1-based `i, j`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i - 1][j - 1]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn positive_root_count(&self) -> usize {
        match self.kind {
            CartanKind::TypeA(n) => n * (n + 1) / 2,
            CartanKind::TypeD4 => 12,
        }
    }

    pub fn check_index(&self, i: usize) -> Result<(), RootDataError> {
        if (1..=self.rank()).contains(&i) {
            Ok(())
        } else {
            Err(RootDataError::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    /// A fixed reduced word for the longest element.
    ///
    /// Type `A_n` uses `1, 21, 321, ..., n(n-1)...1`; type `D4` uses
    /// `(2 1 3 4)` three times.
    pub fn default_w0_word(&self) -> ReducedWord {
        match self.kind {
            CartanKind::TypeA(n) => ReducedWord::new((1..=n).flat_map(|k| (1..=k).rev()).collect()),
            CartanKind::TypeD4 => ReducedWord::new([2, 1, 3, 4].repeat(3)),
        }
    }

    /// `s_i` applied to a root given in simple-root coordinates.
    fn reflect_root(&self, root: &mut [i64], i: usize) {
        let pairing: i64 = root.iter().zip(&self.matrix[i - 1]).map(|(c, a)| c * a).sum();
        root[i - 1] -= pairing;
    }

    /// `true` iff `word` has length `ν` and is reduced, hence is a word for
    /// `w₀`. A word is reduced iff every root `s_{i₁}⋯s_{i_{j-1}}(α_{i_j})` is
    /// positive.
    pub fn validate_w0_word(&self, word: &ReducedWord) -> bool {
        if word.len() != self.positive_root_count() {
            return false;
        }
        if word.letters().iter().any(|&i| self.check_index(i).is_err()) {
            return false;
        }
        self.word_roots(word).iter().all(|r| r.iter().all(|&c| c >= 0))
    }

    /// The roots `s_{i₁}⋯s_{i_{j-1}}(α_{i_j})` for each position of `word`.
    pub fn word_roots(&self, word: &ReducedWord) -> Vec<Vec<i64>> {
        let letters = word.letters();
        (0..letters.len())
            .map(|j| {
                let mut root = vec![0; self.rank()];
                root[letters[j] - 1] = 1;
                for &i in letters[..j].iter().rev() {
                    self.reflect_root(&mut root, i);
                }
                root
            })
            .collect()
    }
}

/// A weight in fundamental-weight coordinates: `coords[i-1] = ⟨λ, α_i^∨⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// `⟨λ, α_i^∨⟩`.
    pub fn pairing(&self, i: usize) -> Result<i64, RootDataError> {
        if (1..=self.rank()).contains(&i) {
            Ok(self.0[i - 1])
        } else {
            Err(RootDataError::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    /// `s_i(λ) = λ - ⟨λ, α_i^∨⟩ α_i`, where `α_i` has fundamental-weight
    /// coordinates given by column `i` of the Cartan matrix.
    pub fn reflect(&self, i: usize, cartan: &CartanSpec) -> Result<Weight, RootDataError> {
        cartan.check_index(i)?;
        self.check_rank(cartan)?;
        let c = self.0[i - 1];
        Ok(Weight(self.0.iter().enumerate().map(|(j, x)| x - c * cartan.entry(j + 1, i)).collect()))
    }

    pub fn check_rank(&self, cartan: &CartanSpec) -> Result<(), RootDataError> {
        if self.rank() == cartan.rank() {
            Ok(())
        } else {
            Err(RootDataError::RankMismatch { expected: cartan.rank(), found: self.rank() })
        }
    }
}

impl FromStr for Weight {
    type Err = RootDataError;

    /// Comma-separated integers, e.g. `1,0,2,0,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_list::<i64>(s).map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// A sequence of generator indices `(i₁, ..., i_ν)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord(Vec<usize>);

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(1,2,1,3,2,1,4,3,2,1,5,4,3,2,1)`.
    pub fn a5_first() -> Self {
        Self(vec![1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1])
    }

    /// `(5,4,5,3,4,5,2,3,4,5,1,2,3,4,5)`.
    pub fn a5_second() -> Self {
        Self(vec![5, 4, 5, 3, 4, 5, 2, 3, 4, 5, 1, 2, 3, 4, 5])
    }

    /// `(2,1,3,4)` repeated three times.
    pub fn d4() -> Self {
        Self([2, 1, 3, 4].repeat(3))
    }

    /// The exponents `a_j = ⟨s_{i_{j-1}}⋯s_{i₁}λ, α_{i_j}^∨⟩`.
    pub fn exponent_sequence(&self, lambda: &Weight, cartan: &CartanSpec) -> Result<Vec<u32>, RootDataError> {
        lambda.check_rank(cartan)?;
        if !lambda.is_dominant() {
            return Err(RootDataError::NonDominantWeight);
        }
        if !cartan.validate_w0_word(self) {
            return Err(RootDataError::InvalidWord);
        }
        let mut current = lambda.clone();
        let mut out = Vec::with_capacity(self.len());
        for &i in &self.0 {
            let a = current.pairing(i)?;
            // nonnegative for dominant λ along a reduced word
            debug_assert!(a >= 0);
            out.push(u32::try_from(a).map_err(|_| RootDataError::InvalidWord)?);
            current = current.reflect(i, cartan)?;
        }
        Ok(out)
    }

    /// `X_λ = E_{i₁}^{(a₁)} ⋯ E_{i_ν}^{(a_ν)}`, zero exponents kept.
    pub fn xlambda(&self, lambda: &Weight, cartan: &CartanSpec) -> Result<Monomial, RootDataError> {
        let exps = self.exponent_sequence(lambda, cartan)?;
        Ok(Monomial::new(self.0.iter().copied().zip(exps).collect()))
    }
}

impl FromStr for ReducedWord {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_list::<usize>(s).map(ReducedWord)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// A product `E_{i₁}^{(a₁)} ⋯ E_{i_k}^{(a_k)}` of divided powers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn new(factors: Vec<(usize, u32)>) -> Self {
        Self { factors }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// `E_i^{(a)}`.
    pub fn divided_power(i: usize, a: u32) -> Self {
        Self { factors: vec![(i, a)] }
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.factors
    }

    /// Total degree, the height of the weight.
    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|&(_, a)| u64::from(a)).sum()
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.factors.iter().map(|&(_, a)| a).collect()
    }

    /// Drops zero exponents.
    pub fn normalized(&self) -> Self {
        Self { factors: self.factors.iter().copied().filter(|&(_, a)| a > 0).collect() }
    }

    /// The letters of `E_{i₁}^{a₁} ⋯ E_{i_k}^{a_k}` as a flat word.
    pub fn flattened(&self) -> Vec<usize> {
        self.factors.iter().flat_map(|&(i, a)| core::iter::repeat_n(i, a as usize)).collect()
    }

    /// The weight in simple-root coordinates.
    pub fn weight(&self, cartan: &CartanSpec) -> Result<RootVec, RootDataError> {
        let mut coords = vec![0i64; cartan.rank()];
        for &(i, a) in &self.factors {
            cartan.check_index(i)?;
            coords[i - 1] += i64::from(a);
        }
        Ok(RootVec(coords))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, (i, a)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "E{i}^({a})")?;
        }
        Ok(())
    }
}

/// An element of the root lattice in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>, RootDataError> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|p| {
            p.trim().parse::<T>().map_err(|_| RootDataError::Parse(alloc::format!("`{}` is not an integer", p.trim())))
        })
        .collect()
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn cartan_shapes() {
        let a5 = CartanSpec::type_a(5);
        assert_eq!(a5.positive_root_count(), 15);
        assert_eq!(a5.entry(2, 3), -1);
        assert_eq!(a5.entry(1, 3), 0);
        let d4 = CartanSpec::type_d4();
        for j in [1, 3, 4] {
            assert_eq!(d4.entry(2, j), -1);
        }
        assert_eq!(d4.entry(1, 3), 0);
        for c in [a5, d4, CartanSpec::type_a(1), CartanSpec::type_a(3)] {
            let m = c.matrix();
            for i in 0..c.rank() {
                assert_eq!(m[i][i], 2);
                for j in 0..c.rank() {
                    assert_eq!(m[i][j], m[j][i]);
                }
            }
        }
    }

    #[test]
    fn pairing_reads_coordinates() {
        assert_eq!(w(&[1, 1, 1, 1, 1]).pairing(3), Ok(1));
        assert_eq!(w(&[0, 2, 0, 0, 0]).pairing(1), Ok(0));
        assert_eq!(w(&[0, 2, 0, 0, 0]).pairing(2), Ok(2));
        assert!(w(&[0, 2, 0, 0, 0]).pairing(6).is_err());
        assert!(w(&[0, 2, 0, 0, 0]).pairing(0).is_err());
    }

    #[test]
    fn reflection_examples() {
        let a2 = CartanSpec::type_a(2);
        assert_eq!(w(&[1, 0]).reflect(1, &a2), Ok(w(&[-1, 1])));
        assert_eq!(w(&[0, 3]).reflect(1, &a2), Ok(w(&[0, 3])));
        let a5 = CartanSpec::type_a(5);
        let lam = w(&[2, -1, 4, 0, 3]);
        for i in 1..=5 {
            assert_eq!(lam.reflect(i, &a5).unwrap().reflect(i, &a5), Ok(lam.clone()));
        }
    }

    #[test]
    fn fixed_a5_words_are_w0_words() {
        let a5 = CartanSpec::type_a(5);
        assert!(a5.validate_w0_word(&ReducedWord::a5_first()));
        assert!(a5.validate_w0_word(&ReducedWord::a5_second()));
        assert!(!a5.validate_w0_word(&ReducedWord::new(vec![1; 15])));
        assert!(!a5.validate_w0_word(&ReducedWord::new(vec![1, 2, 1])));
        assert!(CartanSpec::type_d4().validate_w0_word(&ReducedWord::d4()));
        for n in 1..=6 {
            let c = CartanSpec::type_a(n);
            assert!(c.validate_w0_word(&c.default_w0_word()), "A{n}");
        }
        assert!(CartanSpec::type_a(2).validate_w0_word(&ReducedWord::new(vec![2, 1, 2])));
    }

    #[test]
    fn adjacent_repeats_are_rejected() {
        let a5 = CartanSpec::type_a(5);
        let mut letters = ReducedWord::a5_first().letters().to_vec();
        for k in 0..letters.len() - 1 {
            let saved = letters[k + 1];
            letters[k + 1] = letters[k];
            assert!(!a5.validate_w0_word(&ReducedWord::new(letters.clone())), "position {k}");
            letters[k + 1] = saved;
        }
    }

    #[test]
    fn out_of_range_letters_are_rejected() {
        let mut letters = ReducedWord::a5_first().letters().to_vec();
        letters[0] = 6;
        assert!(!CartanSpec::type_a(5).validate_w0_word(&ReducedWord::new(letters)));
    }

    #[test]
    fn a5_exponent_sequences() {
        let a5 = CartanSpec::type_a(5);
        let ones = w(&[1, 1, 1, 1, 1]);
        let expected = vec![1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1];
        assert_eq!(ReducedWord::a5_first().exponent_sequence(&ones, &a5), Ok(expected.clone()));
        assert_eq!(ReducedWord::a5_second().exponent_sequence(&ones, &a5), Ok(expected));
    }

    #[test]
    fn a5_exponents_match_symbolic_display() {
        // E1^(a1) E2^(a1+a2) E1^(a2) E3^(a1+a2+a3) E2^(a2+a3) E1^(a3) ...
        let a5 = CartanSpec::type_a(5);
        let lam = w(&[2, 0, 3, 1, 4]);
        let a = lam.coords();
        let sym = |r: core::ops::RangeInclusive<usize>| r.map(|k| a[k - 1]).sum::<i64>() as u32;
        let expected = vec![
            sym(1..=1),
            sym(1..=2),
            sym(2..=2),
            sym(1..=3),
            sym(2..=3),
            sym(3..=3),
            sym(1..=4),
            sym(2..=4),
            sym(3..=4),
            sym(4..=4),
            sym(1..=5),
            sym(2..=5),
            sym(3..=5),
            sym(4..=5),
            sym(5..=5),
        ];
        assert_eq!(ReducedWord::a5_first().exponent_sequence(&lam, &a5), Ok(expected));
    }

    #[test]
    fn d4_exponent_sequence() {
        let d4 = CartanSpec::type_d4();
        let ones = w(&[1, 1, 1, 1]);
        assert_eq!(ReducedWord::d4().exponent_sequence(&ones, &d4), Ok(vec![1, 2, 2, 2, 5, 3, 3, 3, 4, 1, 1, 1]));
        assert_eq!(
            ReducedWord::d4().exponent_sequence(&w(&[1, 0, 0, 0]), &d4),
            Ok(vec![0, 1, 0, 0, 1, 0, 1, 1, 1, 1, 0, 0])
        );
    }

    #[test]
    fn xlambda_examples() {
        let a5 = CartanSpec::type_a(5);
        let m = ReducedWord::a5_first().xlambda(&w(&[1, 0, 0, 0, 0]), &a5).unwrap();
        assert_eq!(m.exponents(), vec![1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0]);
        assert_eq!(m.normalized(), Monomial::new(vec![(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)]));
        let z = ReducedWord::a5_first().xlambda(&Weight::zero(5), &a5).unwrap();
        assert_eq!(z.normalized(), Monomial::identity());
    }

    #[test]
    fn exponent_sequence_errors() {
        let a5 = CartanSpec::type_a(5);
        assert_eq!(
            ReducedWord::a5_first().exponent_sequence(&w(&[1, -1, 0, 0, 0]), &a5),
            Err(RootDataError::NonDominantWeight)
        );
        assert_eq!(
            ReducedWord::new(vec![1, 2, 1]).exponent_sequence(&w(&[1, 0, 0, 0, 0]), &a5),
            Err(RootDataError::InvalidWord)
        );
        assert!(matches!(
            ReducedWord::a5_first().exponent_sequence(&w(&[1, 0]), &a5),
            Err(RootDataError::RankMismatch { .. })
        ));
    }

    #[test]
    fn weights_of_monomials() {
        let a5 = CartanSpec::type_a(5);
        let m = ReducedWord::a5_first().xlambda(&w(&[1, 1, 1, 1, 1]), &a5).unwrap();
        assert_eq!(m.weight(&a5), Ok(RootVec(vec![5, 8, 9, 8, 5])));
        assert_eq!(Monomial::identity().weight(&a5), Ok(RootVec(vec![0; 5])));
        let a2 = CartanSpec::type_a(2);
        assert_eq!(Monomial::new(vec![(1, 2), (2, 1), (1, 1)]).weight(&a2), Ok(RootVec(vec![3, 1])));
    }

    #[test]
    fn flattening() {
        let m = Monomial::new(vec![(1, 2), (2, 0), (1, 1), (3, 4)]);
        assert_eq!(m.flattened(), vec![1, 1, 1, 3, 3, 3, 3]);
        assert_eq!(m.degree(), 7);
    }

    #[test]
    fn parsing() {
        assert_eq!("1, 0,2".parse::<Weight>(), Ok(w(&[1, 0, 2])));
        assert_eq!("(1,2,1)".parse::<ReducedWord>(), Ok(ReducedWord::new(vec![1, 2, 1])));
        assert!("1,x".parse::<Weight>().is_err());
        assert_eq!("A5".parse::<CartanKind>(), Ok(CartanKind::TypeA(5)));
        assert_eq!("d4".parse::<CartanKind>(), Ok(CartanKind::TypeD4));
        assert!("B3".parse::<CartanKind>().is_err());
        assert!("A0".parse::<CartanKind>().is_err());
    }
}
