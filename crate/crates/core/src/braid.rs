//! Braid words and the Artin action on the free group.
//!
//! A braid generator `s_k` acts on the free group `F_n` by
//! `x_k -> x_k x_{k+1} x_k^{-1}`, `x_{k+1} -> x_k`, fixing the other
//! generators. Words are kept freely reduced at all times, and the
//! automorphism type maintains the structural invariants of the action:
//! every generator image is a conjugate of a single generator, and the
//! product `x_1 x_2 ... x_n` is preserved.

use std::fmt;

use thiserror::Error;

/// Exponent sign of a braid or free-group letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Errors from parsing or combining braid/free-group data.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("generator index {index} out of range (valid 1..={max} for {strands} strands)")]
    IndexOutOfRange {
        index: usize,
        strands: usize,
        max: usize,
    },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("strand count must be at least 2, got {0}")]
    TooFewStrands(usize),
}

/// One letter `s_k` or `s_k^-1` of a braid word, `1 <= index <= strands-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: usize,
    pub sign: Sign,
}

impl BraidLetter {
    pub fn inverse(self) -> BraidLetter {
        BraidLetter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }
}

/// A word in the braid group `B_n`. The empty word is the identity braid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<BraidWord, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        for letter in &letters {
            if letter.index == 0 || letter.index > strands - 1 {
                return Err(BraidError::IndexOutOfRange {
                    index: letter.index,
                    strands,
                    max: strands - 1,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<BraidWord, BraidError> {
        BraidWord::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Group inverse: reversed word with flipped signs.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Sum of letter signs (the writhe of the closure diagram).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.as_i64()).sum()
    }

    /// Image in the symmetric group, each letter contributing the
    /// transposition `(k, k+1)`. Letters are applied rightmost-first,
    /// matching the automorphism convention; the cycle structure does not
    /// depend on that choice.
    pub fn permutation(&self) -> Permutation {
        let mut map: Vec<usize> = (1..=self.strands).collect();
        // acc := acc ∘ t folds as a swap of adjacent entries
        for letter in &self.letters {
            map.swap(letter.index - 1, letter.index);
        }
        Permutation { map }
    }
}

impl fmt::Display for BraidWord {
    /// Canonical printer: `s<k>` / `s<k>^-1` tokens, space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match letter.sign {
                Sign::Plus => write!(f, "s{}", letter.index)?,
                Sign::Minus => write!(f, "s{}^-1", letter.index)?,
            }
        }
        Ok(())
    }
}

/// Parse a braid word. Grammar (items whitespace separated):
///
/// ```text
/// word := item*
/// item := ("s" int | int | "-" int) ("^" signed-int)?
/// ```
///
/// `s2^-1`, `-2` and `2^-1` all denote the inverse of the second generator;
/// an exponent repeats the letter `|exp|` times with the combined sign.
pub fn parse_braid_word(text: &str, strands: usize) -> Result<BraidWord, BraidError> {
    if strands < 2 {
        return Err(BraidError::TooFewStrands(strands));
    }
    let mut letters = Vec::new();
    let mut rest = text;
    let mut offset = 0usize;
    loop {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            break;
        }
        let end = trimmed
            .find(char::is_whitespace)
            .unwrap_or(trimmed.len());
        let token = &trimmed[..end];
        parse_token(token, offset, strands, &mut letters)?;
        offset += end;
        rest = &trimmed[end..];
    }
    BraidWord::new(strands, letters)
}

fn parse_token(
    token: &str,
    position: usize,
    strands: usize,
    out: &mut Vec<BraidLetter>,
) -> Result<(), BraidError> {
    let syntax = |message: &str| BraidError::Syntax {
        position,
        message: message.to_string(),
    };
    let mut chars = token.char_indices().peekable();
    if matches!(chars.peek(), Some((_, 's'))) {
        chars.next();
    }
    let mut base_sign = Sign::Plus;
    if matches!(chars.peek(), Some((_, '-'))) {
        base_sign = Sign::Minus;
        chars.next();
    }
    let digits_start = match chars.peek() {
        Some(&(i, c)) if c.is_ascii_digit() => i,
        _ => return Err(syntax("expected generator index")),
    };
    let mut digits_end = digits_start;
    while let Some(&(i, c)) = chars.peek() {
        if c.is_ascii_digit() {
            digits_end = i + c.len_utf8();
            chars.next();
        } else {
            break;
        }
    }
    let index: usize = token[digits_start..digits_end]
        .parse()
        .map_err(|_| syntax("generator index does not fit in usize"))?;
    if index == 0 || index > strands - 1 {
        return Err(BraidError::IndexOutOfRange {
            index,
            strands,
            max: strands - 1,
        });
    }

    let mut exponent: i64 = 1;
    if let Some(&(_, '^')) = chars.peek() {
        chars.next();
        let mut exp_sign = 1i64;
        if matches!(chars.peek(), Some((_, '-'))) {
            exp_sign = -1;
            chars.next();
        }
        let exp_start = match chars.peek() {
            Some(&(i, c)) if c.is_ascii_digit() => i,
            _ => return Err(syntax("expected exponent after '^'")),
        };
        let mut exp_end = exp_start;
        while let Some(&(i, c)) = chars.peek() {
            if c.is_ascii_digit() {
                exp_end = i + c.len_utf8();
                chars.next();
            } else {
                break;
            }
        }
        let magnitude: i64 = token[exp_start..exp_end]
            .parse()
            .map_err(|_| syntax("exponent does not fit in i64"))?;
        exponent = exp_sign * magnitude;
    }
    if chars.next().is_some() {
        return Err(syntax("trailing characters in braid letter"));
    }

    let sign = if exponent < 0 { base_sign.flip() } else { base_sign };
    for _ in 0..exponent.unsigned_abs() {
        out.push(BraidLetter { index, sign });
    }
    Ok(())
}

/// One letter `x_g` or `x_g^-1` of a free-group word, `1 <= generator <= strands`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FreeLetter {
    pub generator: usize,
    pub sign: Sign,
}

impl FreeLetter {
    pub fn inverse(self) -> FreeLetter {
        FreeLetter {
            generator: self.generator,
            sign: self.sign.flip(),
        }
    }

    fn cancels(self, other: FreeLetter) -> bool {
        self.generator == other.generator && self.sign == other.sign.flip()
    }
}

/// Freely reduce a letter sequence by cancelling adjacent inverse pairs.
pub fn free_reduce(letters: &[FreeLetter]) -> Vec<FreeLetter> {
    let mut stack: Vec<FreeLetter> = Vec::with_capacity(letters.len());
    for &letter in letters {
        match stack.last() {
            Some(&top) if top.cancels(letter) => {
                stack.pop();
            }
            _ => stack.push(letter),
        }
    }
    stack
}

/// A freely reduced word in `F_n`. The empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeWord {
    strands: usize,
    letters: Vec<FreeLetter>,
}

impl FreeWord {
    /// Build a word from raw letters, validating generator ranges and
    /// reducing freely.
    pub fn from_letters(strands: usize, letters: Vec<FreeLetter>) -> Result<FreeWord, BraidError> {
        for letter in &letters {
            if letter.generator == 0 || letter.generator > strands {
                return Err(BraidError::IndexOutOfRange {
                    index: letter.generator,
                    strands,
                    max: strands,
                });
            }
        }
        Ok(FreeWord {
            strands,
            letters: free_reduce(&letters),
        })
    }

    pub fn identity(strands: usize) -> FreeWord {
        FreeWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn generator(strands: usize, g: usize) -> Result<FreeWord, BraidError> {
        FreeWord::from_letters(
            strands,
            vec![FreeLetter {
                generator: g,
                sign: Sign::Plus,
            }],
        )
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &FreeWord) -> Result<FreeWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(FreeWord {
            strands: self.strands,
            letters: free_reduce(&letters),
        })
    }

    /// If the word has the shape `w x_g w^{-1}` (a conjugate of a single
    /// generator with positive exponent), return `(g, w)`.
    pub fn as_generator_conjugate(&self) -> Option<(usize, FreeWord)> {
        let n = self.letters.len();
        if n % 2 == 0 {
            return None;
        }
        let mid = n / 2;
        let middle = self.letters[mid];
        if middle.sign != Sign::Plus {
            return None;
        }
        for t in 0..mid {
            if self.letters[t] != self.letters[n - 1 - t].inverse() {
                return None;
            }
        }
        Some((
            middle.generator,
            FreeWord {
                strands: self.strands,
                letters: self.letters[..mid].to_vec(),
            },
        ))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match letter.sign {
                Sign::Plus => write!(f, "x{}", letter.generator)?,
                Sign::Minus => write!(f, "x{}^-1", letter.generator)?,
            }
        }
        Ok(())
    }
}

/// Which end of a braid word acts first when letters are composed.
///
/// `RightmostFirst` reads `s1 s2^-1 (x)` as nested application, the
/// rightmost letter applied to `x` first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CompositionOrder {
    #[default]
    RightmostFirst,
    LeftmostFirst,
}

/// The automorphism of `F_n` induced by a braid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinAutomorphism {
    strands: usize,
    images: Vec<FreeWord>,
}

impl ArtinAutomorphism {
    pub fn identity(strands: usize) -> ArtinAutomorphism {
        ArtinAutomorphism {
            strands,
            images: (1..=strands)
                .map(|g| FreeWord::generator(strands, g).expect("valid generator"))
                .collect(),
        }
    }

    /// The action of a single generator `s_k^{sign}`.
    ///
    /// Positive: `x_k -> x_k x_{k+1} x_k^{-1}`, `x_{k+1} -> x_k`.
    /// Negative: the two-sided inverse `x_k -> x_{k+1}`,
    /// `x_{k+1} -> x_{k+1}^{-1} x_k x_{k+1}`.
    pub fn generator(k: usize, sign: Sign, strands: usize) -> Result<ArtinAutomorphism, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        if k == 0 || k > strands - 1 {
            return Err(BraidError::IndexOutOfRange {
                index: k,
                strands,
                max: strands - 1,
            });
        }
        let letter = |generator: usize, sign: Sign| FreeLetter { generator, sign };
        let mut auto = ArtinAutomorphism::identity(strands);
        match sign {
            Sign::Plus => {
                auto.images[k - 1] = FreeWord::from_letters(
                    strands,
                    vec![
                        letter(k, Sign::Plus),
                        letter(k + 1, Sign::Plus),
                        letter(k, Sign::Minus),
                    ],
                )?;
                auto.images[k] = FreeWord::generator(strands, k)?;
            }
            Sign::Minus => {
                auto.images[k - 1] = FreeWord::generator(strands, k + 1)?;
                auto.images[k] = FreeWord::from_letters(
                    strands,
                    vec![
                        letter(k + 1, Sign::Minus),
                        letter(k, Sign::Plus),
                        letter(k + 1, Sign::Plus),
                    ],
                )?;
            }
        }
        Ok(auto)
    }

    /// Fold the generator actions of a braid word in the given order.
    pub fn of_braid(braid: &BraidWord, order: CompositionOrder) -> ArtinAutomorphism {
        let mut acc = ArtinAutomorphism::identity(braid.strands());
        for letter in braid.letters() {
            let gen = ArtinAutomorphism::generator(letter.index, letter.sign, braid.strands())
                .expect("braid word letters are validated");
            acc = match order {
                // acc := acc ∘ gen, so the rightmost letter ends innermost
                CompositionOrder::RightmostFirst => acc.compose(&gen),
                CompositionOrder::LeftmostFirst => gen.compose(&acc),
            }
            .expect("strand counts agree");
        }
        acc
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn image(&self, generator: usize) -> &FreeWord {
        &self.images[generator - 1]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Homomorphic substitution followed by free reduction.
    pub fn apply(&self, word: &FreeWord) -> Result<FreeWord, BraidError> {
        if self.strands != word.strands() {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: word.strands(),
            });
        }
        let mut letters = Vec::new();
        for l in word.letters() {
            let image = &self.images[l.generator - 1];
            match l.sign {
                Sign::Plus => letters.extend_from_slice(image.letters()),
                Sign::Minus => letters.extend(image.letters().iter().rev().map(|x| x.inverse())),
            }
        }
        Ok(FreeWord {
            strands: self.strands,
            letters: free_reduce(&letters),
        })
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &ArtinAutomorphism) -> Result<ArtinAutomorphism, BraidError> {
        if self.strands != inner.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: inner.strands,
            });
        }
        let images = inner
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ArtinAutomorphism {
            strands: self.strands,
            images,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters().len() == 1 && w.letters()[0].generator == i + 1 && w.letters()[0].sign == Sign::Plus)
    }

    /// The permutation `j -> g` read off the conjugated generator in each
    /// image. Returns `None` if some image is not a generator conjugate
    /// (never the case for automorphisms built by this module).
    pub fn permutation(&self) -> Option<Permutation> {
        let mut map = Vec::with_capacity(self.strands);
        for image in &self.images {
            map.push(image.as_generator_conjugate()?.0);
        }
        let mut seen = vec![false; self.strands];
        for &g in &map {
            if seen[g - 1] {
                return None;
            }
            seen[g - 1] = true;
        }
        Some(Permutation { map })
    }

    /// Check the structural invariants of the Artin action: every image a
    /// freely reduced conjugate of a single generator, the conjugated
    /// generators a permutation, and the reduced product of images equal to
    /// `x_1 x_2 ... x_n`.
    pub fn check_artin_invariants(&self) -> bool {
        if self.permutation().is_none() {
            return false;
        }
        let mut product = FreeWord::identity(self.strands);
        for image in &self.images {
            product = product.concat(image).expect("matching strands");
        }
        let expected: Vec<FreeLetter> = (1..=self.strands)
            .map(|g| FreeLetter {
                generator: g,
                sign: Sign::Plus,
            })
            .collect();
        product.letters() == expected.as_slice()
    }
}

/// A bijection of `{1, ..., n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn strands(&self) -> usize {
        self.map.len()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// True iff the permutation is a single n-cycle, i.e. the braid closure
    /// is a knot rather than a multi-component link.
    pub fn is_full_cycle(&self) -> bool {
        let n = self.map.len();
        let mut current = 1;
        for _ in 0..n {
            current = self.apply(current);
        }
        if current != 1 {
            return false;
        }
        // order of the orbit of 1 must be exactly n
        let mut seen = vec![false; n];
        let mut current = 1;
        let mut count = 0;
        while !seen[current - 1] {
            seen[current - 1] = true;
            count += 1;
            current = self.apply(current);
        }
        count == n
    }

    /// Cycle notation, e.g. `(1 3 2)`.
    pub fn cycle_notation(&self) -> String {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut current = self.apply(start);
            while current != start {
                seen[current - 1] = true;
                cycle.push(current);
                current = self.apply(current);
            }
            if cycle.len() > 1 {
                out.push('(');
                for (i, v) in cycle.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                    }
                    out.push_str(&v.to_string());
                }
                out.push(')');
            }
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(spec: &[(usize, i64)]) -> Vec<FreeLetter> {
        spec.iter()
            .map(|&(g, s)| FreeLetter {
                generator: g,
                sign: if s >= 0 { Sign::Plus } else { Sign::Minus },
            })
            .collect()
    }

    fn word(strands: usize, spec: &[(usize, i64)]) -> FreeWord {
        FreeWord::from_letters(strands, letters(spec)).unwrap()
    }

    #[test]
    fn parse_figure_eight_braid() {
        let b = parse_braid_word("s1 s2^-1 s1 s2^-1", 3).unwrap();
        let expected = [(1, Sign::Plus), (2, Sign::Minus), (1, Sign::Plus), (2, Sign::Minus)];
        assert_eq!(b.len(), 4);
        for (letter, &(idx, sign)) in b.letters().iter().zip(&expected) {
            assert_eq!(letter.index, idx);
            assert_eq!(letter.sign, sign);
        }
        assert_eq!(b.to_string(), "s1 s2^-1 s1 s2^-1");
    }

    #[test]
    fn parse_empty_is_identity() {
        let b = parse_braid_word("", 3).unwrap();
        assert!(b.is_empty());
        assert_eq!(b.to_string(), "");
    }

    #[test]
    fn parse_bare_integer_tokens() {
        let b = parse_braid_word("1 1 2 2 -1 2", 3).unwrap();
        let expected = [
            (1, Sign::Plus),
            (1, Sign::Plus),
            (2, Sign::Plus),
            (2, Sign::Plus),
            (1, Sign::Minus),
            (2, Sign::Plus),
        ];
        for (letter, &(idx, sign)) in b.letters().iter().zip(&expected) {
            assert_eq!(letter.index, idx);
            assert_eq!(letter.sign, sign);
        }
    }

    #[test]
    fn parse_equivalent_inverse_spellings() {
        for text in ["s2^-1", "-2", "2^-1"] {
            let b = parse_braid_word(text, 3).unwrap();
            assert_eq!(b.len(), 1);
            assert_eq!(b.letters()[0].index, 2);
            assert_eq!(b.letters()[0].sign, Sign::Minus);
        }
        // exponent on a negative base multiplies signs
        let b = parse_braid_word("-2^-3", 3).unwrap();
        assert_eq!(b.len(), 3);
        assert!(b.letters().iter().all(|l| l.sign == Sign::Plus));
    }

    #[test]
    fn parse_roundtrip_through_printer() {
        let b = parse_braid_word("s1^2 s2^2 s1^-1 s2", 3).unwrap();
        let reparsed = parse_braid_word(&b.to_string(), 3).unwrap();
        assert_eq!(b, reparsed);
    }

    #[test]
    fn parse_reports_error_positions() {
        match parse_braid_word("s1 sx s2", 3) {
            Err(BraidError::Syntax { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_braid_word("s1 2^", 3) {
            Err(BraidError::Syntax { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_out_of_range_generator() {
        match parse_braid_word("s3", 3) {
            Err(BraidError::IndexOutOfRange { index: 3, max: 2, .. }) => {}
            other => panic!("expected range error, got {other:?}"),
        }
        assert!(parse_braid_word("s0", 3).is_err());
    }

    #[test]
    fn free_reduce_cancellation() {
        let w = FreeWord::from_letters(3, letters(&[(1, 1), (2, 1), (2, -1), (1, -1)])).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn free_reduce_matches_hand_computation() {
        // x1 x2 x1^-1 x1 x3 x1^-1 (x1 x2 x1^-1)^-1 = x1 x2 x3 x2^-1 x1^-1
        let left = word(3, &[(1, 1), (2, 1), (1, -1)]);
        let mid = word(3, &[(1, 1), (3, 1), (1, -1)]);
        let full = left
            .concat(&mid)
            .unwrap()
            .concat(&left.inverse())
            .unwrap();
        assert_eq!(full, word(3, &[(1, 1), (2, 1), (3, 1), (2, -1), (1, -1)]));
    }

    #[test]
    fn free_reduce_idempotent_on_reduced_word() {
        let w = word(3, &[(1, 1), (2, -1), (3, 1)]);
        let again = FreeWord::from_letters(3, w.letters().to_vec()).unwrap();
        assert_eq!(w, again);
    }

    #[test]
    fn generator_action_images() {
        let a = ArtinAutomorphism::generator(1, Sign::Plus, 3).unwrap();
        assert_eq!(*a.image(1), word(3, &[(1, 1), (2, 1), (1, -1)]));
        assert_eq!(*a.image(2), word(3, &[(1, 1)]));
        assert_eq!(*a.image(3), word(3, &[(3, 1)]));

        let inv = ArtinAutomorphism::generator(2, Sign::Minus, 3).unwrap();
        assert_eq!(*inv.image(1), word(3, &[(1, 1)]));
        assert_eq!(*inv.image(2), word(3, &[(3, 1)]));
        assert_eq!(*inv.image(3), word(3, &[(3, -1), (2, 1), (3, 1)]));
    }

    #[test]
    fn generator_inverse_composes_to_identity() {
        for k in 1..=2 {
            let plus = ArtinAutomorphism::generator(k, Sign::Plus, 3).unwrap();
            let minus = ArtinAutomorphism::generator(k, Sign::Minus, 3).unwrap();
            assert!(plus.compose(&minus).unwrap().is_identity());
            assert!(minus.compose(&plus).unwrap().is_identity());
        }
    }

    #[test]
    fn apply_single_inverse_letter() {
        let a = ArtinAutomorphism::generator(1, Sign::Plus, 3).unwrap();
        let image = a.apply(&word(3, &[(1, -1)])).unwrap();
        assert_eq!(image, word(3, &[(1, 1), (2, -1), (1, -1)]));
    }

    #[test]
    fn braid_automorphism_identity_and_inverse() {
        let id = ArtinAutomorphism::of_braid(
            &BraidWord::identity(3).unwrap(),
            CompositionOrder::RightmostFirst,
        );
        assert!(id.is_identity());

        let b = parse_braid_word("s1 s2^-1 s1 s2^-1", 3).unwrap();
        for order in [CompositionOrder::RightmostFirst, CompositionOrder::LeftmostFirst] {
            let cancel = b.concat(&b.inverse()).unwrap();
            assert!(ArtinAutomorphism::of_braid(&cancel, order).is_identity());
        }
    }

    #[test]
    fn figure_eight_rightmost_images() {
        // Tabulated once from the fold; pinned here after checking the
        // Artin invariants below.
        let b = parse_braid_word("s1 s2^-1 s1 s2^-1", 3).unwrap();
        let a = ArtinAutomorphism::of_braid(&b, CompositionOrder::RightmostFirst);
        assert_eq!(
            *a.image(1),
            word(3, &[(1, 1), (2, 1), (1, -1), (3, 1), (1, 1), (2, -1), (1, -1)])
        );
        assert_eq!(*a.image(2), word(3, &[(3, -1), (1, 1), (3, 1)]));
        assert_eq!(
            *a.image(3),
            word(
                3,
                &[(3, -1), (1, -1), (3, 1), (1, 1), (2, 1), (1, -1), (3, -1), (1, 1), (3, 1)]
            )
        );
        assert!(a.check_artin_invariants());
    }

    #[test]
    fn braid_relations_hold_as_automorphisms() {
        // s1 s2 s1 = s2 s1 s2 in B_3
        let lhs = parse_braid_word("s1 s2 s1", 3).unwrap();
        let rhs = parse_braid_word("s2 s1 s2", 3).unwrap();
        for order in [CompositionOrder::RightmostFirst, CompositionOrder::LeftmostFirst] {
            assert_eq!(
                ArtinAutomorphism::of_braid(&lhs, order),
                ArtinAutomorphism::of_braid(&rhs, order)
            );
        }
        // far commutation in B_4
        let ab = parse_braid_word("s1 s3", 4).unwrap();
        let ba = parse_braid_word("s3 s1", 4).unwrap();
        for order in [CompositionOrder::RightmostFirst, CompositionOrder::LeftmostFirst] {
            assert_eq!(
                ArtinAutomorphism::of_braid(&ab, order),
                ArtinAutomorphism::of_braid(&ba, order)
            );
        }
    }

    #[test]
    fn permutation_of_paper_braids() {
        let fig8 = parse_braid_word("s1 s2^-1 s1 s2^-1", 3).unwrap();
        assert!(fig8.permutation().is_full_cycle());
        let five2 = parse_braid_word("s1^2 s2^2 s1^-1 s2", 3).unwrap();
        assert!(five2.permutation().is_full_cycle());
        let id = BraidWord::identity(3).unwrap();
        assert!(id.permutation().is_identity());
        assert!(!id.permutation().is_full_cycle());
    }

    #[test]
    fn permutation_matches_automorphism_permutation() {
        let b = parse_braid_word("s1^2 s2^2 s1^-1 s2", 3).unwrap();
        let from_images = ArtinAutomorphism::of_braid(&b, CompositionOrder::RightmostFirst)
            .permutation()
            .unwrap();
        assert_eq!(from_images, b.permutation());
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(parse_braid_word("s1 s2^-1 s1 s2^-1", 3).unwrap().exponent_sum(), 0);
        assert_eq!(BraidWord::identity(3).unwrap().exponent_sum(), 0);
        assert_eq!(parse_braid_word("s1^2 s2^2 s1^-1 s2", 3).unwrap().exponent_sum(), 4);
    }

    #[test]
    fn generator_conjugate_shape() {
        let w = word(3, &[(1, 1), (2, 1), (3, 1), (2, -1), (1, -1)]);
        let (g, conj) = w.as_generator_conjugate().unwrap();
        assert_eq!(g, 3);
        assert_eq!(conj, word(3, &[(1, 1), (2, 1)]));
        assert!(word(3, &[(1, 1), (2, 1)]).as_generator_conjugate().is_none());
        assert!(word(3, &[(1, 1), (2, -1), (1, -1)])
            .as_generator_conjugate()
            .is_none());
    }
}
