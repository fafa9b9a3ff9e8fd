//! Finite binary words and the two involutory antimorphisms `E` and `R`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;
use crate::pal_index::PalSuffixIndex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Letter {
    Zero = 0,
    One = 1,
}

impl Letter {
    pub const ALL: [Letter; 2] = [Letter::Zero, Letter::One];

    #[inline]
    pub fn complement(self) -> Letter {
        match self {
            Letter::Zero => Letter::One,
            Letter::One => Letter::Zero,
        }
    }

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::Zero => '0',
            Letter::One => '1',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            '0' => Some(Letter::Zero),
            '1' => Some(Letter::One),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// One of the two involutory antimorphisms of `{0,1}*`.
///
/// `R` is plain reversal. `E` is reversal followed by the letter exchange
/// `0 <-> 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Antimorphism {
    E,
    R,
}

impl Antimorphism {
    pub const ALL: [Antimorphism; 2] = [Antimorphism::R, Antimorphism::E];

    /// The overline involution: `bar(E) = R`, `bar(R) = E`.
    #[inline]
    pub fn bar(self) -> Antimorphism {
        match self {
            Antimorphism::E => Antimorphism::R,
            Antimorphism::R => Antimorphism::E,
        }
    }

    /// Image of a single letter.
    #[inline]
    pub fn map_letter(self, a: Letter) -> Letter {
        match self {
            Antimorphism::R => a,
            Antimorphism::E => a.complement(),
        }
    }

    pub fn apply(self, w: &[Letter]) -> Word {
        Word(w.iter().rev().map(|&a| self.map_letter(a)).collect())
    }

    pub fn is_palindrome(self, w: &[Letter]) -> bool {
        let n = w.len();
        (0..n / 2 + n % 2).all(|i| w[i] == self.map_letter(w[n - 1 - i]))
    }

    pub fn as_char(self) -> char {
        match self {
            Antimorphism::E => 'E',
            Antimorphism::R => 'R',
        }
    }

    pub fn from_char(c: char) -> Option<Antimorphism> {
        match c {
            'E' => Some(Antimorphism::E),
            'R' => Some(Antimorphism::R),
            _ => None,
        }
    }
}

impl fmt::Display for Antimorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Antimorphism {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Antimorphism::from_char(c).ok_or(ParseError::IllegalCharacter {
                found: c,
                offset: 0,
                expected: "E, R",
            }),
            (None, _) => Err(ParseError::Trailing(String::new())),
            (Some(_), Some(_)) => Err(ParseError::Trailing(s[1..].to_string())),
        }
    }
}

/// A finite binary word. Immutable once built; slices of it are `&[Letter]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<&[Letter]> for Word {
    fn from(w: &[Letter]) -> Word {
        Word(w.to_vec())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(w: Vec<Letter>) -> Word {
        Word(w)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_string(&self.0))
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(offset, c)| {
                Letter::from_char(c).ok_or(ParseError::IllegalCharacter {
                    found: c,
                    offset,
                    expected: "0, 1",
                })
            })
            .collect()
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Serialize for Antimorphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Renders a letter slice as an ASCII string over `{0,1}`.
pub fn to_string(w: &[Letter]) -> String {
    w.iter().map(|a| a.as_char()).collect()
}

pub fn complement(w: &[Letter]) -> Word {
    w.iter().map(|a| a.complement()).collect()
}

pub fn apply_antimorphism(theta: Antimorphism, w: &[Letter]) -> Word {
    theta.apply(w)
}

pub fn is_theta_palindrome(w: &[Letter], theta: Antimorphism) -> bool {
    theta.is_palindrome(w)
}

/// Length of the longest `theta`-palindromic suffix of `w`. The empty word
/// counts, so the result is 0 when no nonempty suffix qualifies.
pub fn longest_theta_palindromic_suffix_len(w: &[Letter], theta: Antimorphism) -> usize {
    let mut index = PalSuffixIndex::with_capacity(w.len());
    index.extend(w.iter().copied());
    index.longest(theta)
}

/// The shortest `theta`-palindrome having `w` as a prefix.
pub fn theta_palindromic_closure(w: &[Letter], theta: Antimorphism) -> Word {
    let suffix = longest_theta_palindromic_suffix_len(w, theta);
    let head = &w[..w.len() - suffix];
    let mut out = Vec::with_capacity(w.len() + head.len());
    out.extend_from_slice(w);
    out.extend(head.iter().rev().map(|&a| theta.map_letter(a)));
    Word(out)
}

/// `table[L]` is true iff the length-`L` prefix of `w` is a `theta`-palindrome,
/// for `0 <= L <= |w|`.
///
/// A prefix `p` is a `theta`-palindrome iff it equals the length-`|p|` suffix
/// of `theta(w)`, so one Z-function pass over `w # theta(w)` answers every
/// prefix at once.
pub fn palindromic_prefix_table(w: &[Letter], theta: Antimorphism) -> Vec<bool> {
    const SEP: u8 = 2;
    let n = w.len();
    let mut s: Vec<u8> = Vec::with_capacity(2 * n + 1);
    s.extend(w.iter().map(|&a| a as u8));
    s.push(SEP);
    s.extend(w.iter().rev().map(|&a| theta.map_letter(a) as u8));
    let z = z_function(&s);
    let mut table = vec![false; n + 1];
    table[0] = true;
    for (len, slot) in table.iter_mut().enumerate().skip(1) {
        let start = n + 1 + (n - len);
        *slot = z[start] >= len;
    }
    table
}

fn z_function(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        if i < r {
            z[i] = (r - i).min(z[i - l]);
        }
        while i + z[i] < n && s[z[i]] == s[i + z[i]] {
            z[i] += 1;
        }
        if i + z[i] > r {
            l = i;
            r = i + z[i];
        }
    }
    z
}

/// Smallest `p >= 1` with `w[i] = w[i + p]` for every valid `i`; `|w|` when
/// the word has no shorter period. Returns 0 for the empty word.
pub fn smallest_period(w: &[Letter]) -> usize {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    // KMP failure function: the longest proper border of w gives its period.
    let mut fail = vec![0usize; n];
    for i in 1..n {
        let mut k = fail[i - 1];
        while k > 0 && w[i] != w[k] {
            k = fail[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i] = k;
    }
    n - fail[n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn brute_longest_suffix(w: &[Letter], theta: Antimorphism) -> usize {
        (0..=w.len())
            .rev()
            .find(|&l| theta.is_palindrome(&w[w.len() - l..]))
            .unwrap()
    }

    fn brute_closure(w: &[Letter], theta: Antimorphism) -> Word {
        for extra in 0..=w.len() {
            let m = w.len() + extra;
            let mut cand = w.to_vec();
            cand.resize(m, Letter::Zero);
            // the last `extra` letters are forced by theta-palindromicity
            for i in w.len()..m {
                cand[i] = theta.map_letter(cand[m - 1 - i]);
            }
            if theta.is_palindrome(&cand) {
                return Word(cand);
            }
        }
        unreachable!("w theta(w) is always a theta-palindrome")
    }

    fn word_strategy(max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::bool::ANY, 0..=max)
            .prop_map(|v| v.into_iter().map(|b| if b { Letter::One } else { Letter::Zero }).collect())
    }

    fn theta_strategy() -> impl Strategy<Value = Antimorphism> {
        prop_oneof![Just(Antimorphism::E), Just(Antimorphism::R)]
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&w("")), w(""));
        assert_eq!(complement(&w("0110")), w("1001"));
        assert_eq!(complement(&w("01101001")), w("10010110"));
        for a in Letter::ALL {
            assert_eq!(a.complement().complement(), a);
        }
    }

    #[test]
    fn antimorphism_examples() {
        assert_eq!(apply_antimorphism(Antimorphism::R, &w("011")), w("110"));
        assert_eq!(apply_antimorphism(Antimorphism::E, &w("01")), w("01"));
        assert_eq!(apply_antimorphism(Antimorphism::E, &w("0110")), w("1001"));
        assert_eq!(Antimorphism::E.bar(), Antimorphism::R);
        assert_eq!(Antimorphism::R.bar(), Antimorphism::E);
    }

    #[test]
    fn palindrome_examples() {
        assert!(is_theta_palindrome(&w("0110"), Antimorphism::R));
        assert!(is_theta_palindrome(&w("01"), Antimorphism::E));
        assert!(!is_theta_palindrome(&w("0"), Antimorphism::E));
        assert!(is_theta_palindrome(&w(""), Antimorphism::E));
        assert!(is_theta_palindrome(&w(""), Antimorphism::R));
    }

    #[test]
    fn longest_suffix_examples() {
        assert_eq!(longest_theta_palindromic_suffix_len(&w("01101"), Antimorphism::R), 3);
        assert_eq!(longest_theta_palindromic_suffix_len(&w("01"), Antimorphism::E), 2);
        assert_eq!(longest_theta_palindromic_suffix_len(&w("00"), Antimorphism::E), 0);
        assert_eq!(longest_theta_palindromic_suffix_len(&w(""), Antimorphism::R), 0);
    }

    #[test]
    fn closure_examples() {
        assert_eq!(theta_palindromic_closure(&w("01101"), Antimorphism::R), w("0110110"));
        assert_eq!(theta_palindromic_closure(&w("0110"), Antimorphism::R), w("0110"));
        assert_eq!(theta_palindromic_closure(&w("0"), Antimorphism::E), w("01"));
        assert_eq!(theta_palindromic_closure(&w("00"), Antimorphism::E), w("0011"));
        assert_eq!(theta_palindromic_closure(&w(""), Antimorphism::E), w(""));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("012".parse::<Word>().is_err());
        assert!("X".parse::<Antimorphism>().is_err());
        assert!("ER".parse::<Antimorphism>().is_err());
        assert_eq!("E".parse::<Antimorphism>().unwrap(), Antimorphism::E);
    }

    #[test]
    fn smallest_period_examples() {
        assert_eq!(smallest_period(&w("")), 0);
        assert_eq!(smallest_period(&w("0000")), 1);
        assert_eq!(smallest_period(&w("010010")), 3);
        assert_eq!(smallest_period(&w("0110")), 3);
        assert_eq!(smallest_period(&w("0111")), 4);
    }

    proptest! {
        #[test]
        fn antimorphisms_are_involutions(v in word_strategy(40), theta in theta_strategy()) {
            prop_assert_eq!(theta.apply(&theta.apply(&v)), v);
        }

        #[test]
        fn antimorphisms_reverse_concatenation(u in word_strategy(20), v in word_strategy(20), theta in theta_strategy()) {
            let uv = u.concat(&v);
            prop_assert_eq!(theta.apply(&uv), theta.apply(&v).concat(&theta.apply(&u)));
            prop_assert_eq!(uv.len(), u.len() + v.len());
        }

        #[test]
        fn no_nonempty_word_is_both(v in word_strategy(16)) {
            prop_assume!(!v.is_empty());
            prop_assert!(!(Antimorphism::R.is_palindrome(&v) && Antimorphism::E.is_palindrome(&v)));
        }

        #[test]
        fn longest_suffix_matches_brute_force(v in word_strategy(30), theta in theta_strategy()) {
            prop_assert_eq!(longest_theta_palindromic_suffix_len(&v, theta), brute_longest_suffix(&v, theta));
        }

        #[test]
        fn closure_is_minimal(v in word_strategy(12), theta in theta_strategy()) {
            prop_assert_eq!(theta_palindromic_closure(&v, theta), brute_closure(&v, theta));
        }

        #[test]
        fn closure_is_idempotent_and_bounded(v in word_strategy(40), theta in theta_strategy()) {
            let c = theta_palindromic_closure(&v, theta);
            prop_assert!(c.len() <= 2 * v.len());
            prop_assert!(c.starts_with(&v));
            prop_assert!(theta.is_palindrome(&c));
            prop_assert_eq!(theta_palindromic_closure(&c, theta), c);
        }

        #[test]
        fn prefix_table_matches_brute_force(v in word_strategy(40), theta in theta_strategy()) {
            let table = palindromic_prefix_table(&v, theta);
            for (len, &flag) in table.iter().enumerate() {
                prop_assert_eq!(flag, theta.is_palindrome(&v[..len]));
            }
        }

        #[test]
        fn smallest_period_matches_brute_force(v in word_strategy(30)) {
            let n = v.len();
            let brute = (1..=n).find(|&p| (0..n - p).all(|i| v[i] == v[i + p])).unwrap_or(0);
            prop_assert_eq!(smallest_period(&v), brute);
        }
    }
}
