//! Eventually periodic infinite sequences `u v^ω` and their text grammar
//! `preperiod "(" period ")"`.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::word::{Antimorphism, Letter};

/// A symbol that has a one-character text form.
pub trait Symbol: Copy + Eq + fmt::Debug {
    const EXPECTED: &'static str;
    fn to_char(self) -> char;
    fn from_char(c: char) -> Option<Self>;
}

impl Symbol for Letter {
    const EXPECTED: &'static str = "0, 1";
    fn to_char(self) -> char {
        self.as_char()
    }
    fn from_char(c: char) -> Option<Self> {
        Letter::from_char(c)
    }
}

impl Symbol for Antimorphism {
    const EXPECTED: &'static str = "E, R";
    fn to_char(self) -> char {
        self.as_char()
    }
    fn from_char(c: char) -> Option<Self> {
        Antimorphism::from_char(c)
    }
}

/// `preperiod · period^ω` with a nonempty period. Indexing is 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodic<T> {
    preperiod: Vec<T>,
    period: Vec<T>,
}

impl<T: Copy + Eq> EventuallyPeriodic<T> {
    pub fn new(preperiod: Vec<T>, period: Vec<T>) -> Result<Self, ParseError> {
        if period.is_empty() {
            return Err(ParseError::EmptyPeriod);
        }
        Ok(EventuallyPeriodic { preperiod, period })
    }

    pub fn constant(x: T) -> Self {
        EventuallyPeriodic {
            preperiod: Vec::new(),
            period: vec![x],
        }
    }

    pub fn preperiod(&self) -> &[T] {
        &self.preperiod
    }

    pub fn period(&self) -> &[T] {
        &self.period
    }

    #[inline]
    pub fn get(&self, i: usize) -> T {
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    pub fn take(&self, n: usize) -> Vec<T> {
        (0..n).map(|i| self.get(i)).collect()
    }

    /// The same sequence with the shortest period and then the shortest
    /// preperiod.
    pub fn minimized(&self) -> Self {
        let p = self.period.len();
        let d = (1..=p)
            .filter(|&d| p.is_multiple_of(d))
            .find(|&d| (0..p).all(|i| self.period[i] == self.period[(i + d) % p]))
            .unwrap_or(p);
        let mut period: Vec<T> = self.period[..d].to_vec();
        let mut preperiod = self.preperiod.clone();
        while let Some(&last) = preperiod.last() {
            if last != period[d - 1] {
                break;
            }
            preperiod.pop();
            period.rotate_right(1);
        }
        EventuallyPeriodic { preperiod, period }
    }

    /// Fits the shortest eventually periodic description to a finite prefix,
    /// requiring the period to be visible at least `min_repeats` times after
    /// the preperiod. Minimizes `|preperiod| + |period|`, then `|period|`.
    pub fn fit(prefix: &[T], min_repeats: usize) -> Option<Self> {
        let n = prefix.len();
        let min_repeats = min_repeats.max(1);
        let mut best: Option<(usize, usize)> = None;
        for per in 1..=n / min_repeats {
            // smallest preperiod such that prefix[i] == prefix[i + per] for
            // every i >= pre
            let pre = (0..n - per)
                .rev()
                .find(|&i| prefix[i] != prefix[i + per])
                .map_or(0, |i| i + 1);
            if n - pre < min_repeats * per {
                continue;
            }
            let better = match best {
                None => true,
                Some((bp, bq)) => (pre + per, per) < (bp + bq, bq),
            };
            if better {
                best = Some((pre, per));
            }
        }
        best.map(|(pre, per)| EventuallyPeriodic {
            preperiod: prefix[..pre].to_vec(),
            period: prefix[pre..pre + per].to_vec(),
        })
    }
}

impl<T: Symbol> fmt::Display for EventuallyPeriodic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pre: String = self.preperiod.iter().map(|x| x.to_char()).collect();
        let per: String = self.period.iter().map(|x| x.to_char()).collect();
        write!(f, "{pre}({per})")
    }
}

impl<T: Symbol> FromStr for EventuallyPeriodic<T> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut preperiod = Vec::new();
        let mut period = Vec::new();
        let mut in_period = false;
        let mut closed = false;
        for (offset, c) in s.char_indices() {
            if closed {
                return Err(if c == ')' || c == '(' {
                    ParseError::Unbalanced
                } else {
                    ParseError::Trailing(s[offset..].to_string())
                });
            }
            match c {
                '(' if in_period => return Err(ParseError::Unbalanced),
                '(' => in_period = true,
                ')' if !in_period => return Err(ParseError::Unbalanced),
                ')' => closed = true,
                _ => {
                    let x = T::from_char(c).ok_or(ParseError::IllegalCharacter {
                        found: c,
                        offset,
                        expected: T::EXPECTED,
                    })?;
                    if in_period {
                        period.push(x);
                    } else {
                        preperiod.push(x);
                    }
                }
            }
        }
        match (in_period, closed) {
            (false, _) => Err(ParseError::MissingPeriod),
            (true, false) => Err(ParseError::Unbalanced),
            (true, true) => EventuallyPeriodic::new(preperiod, period),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type Delta = EventuallyPeriodic<Letter>;
    type Theta = EventuallyPeriodic<Antimorphism>;

    #[test]
    fn parses_grammar_examples() {
        let d: Delta = "0(1)".parse().unwrap();
        assert_eq!(d.take(4), "0111".parse::<crate::Word>().unwrap().into_letters());
        let t: Theta = "R(ERR)".parse().unwrap();
        assert_eq!(t.to_string(), "R(ERR)");
        assert_eq!(t.get(0), Antimorphism::R);
        assert_eq!(t.get(1), Antimorphism::E);
        assert_eq!(t.get(4), Antimorphism::E);
        let empty_pre: Delta = "(01)".parse().unwrap();
        assert!(empty_pre.preperiod().is_empty());
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!("01".parse::<Delta>(), Err(ParseError::MissingPeriod));
        assert_eq!("0(1".parse::<Delta>(), Err(ParseError::Unbalanced));
        assert_eq!("0)1(".parse::<Delta>(), Err(ParseError::Unbalanced));
        assert_eq!("0((1))".parse::<Delta>(), Err(ParseError::Unbalanced));
        assert_eq!("0()".parse::<Delta>(), Err(ParseError::EmptyPeriod));
        assert_eq!("0(1)0".parse::<Delta>(), Err(ParseError::Trailing("0".into())));
        assert_eq!("0(1))".parse::<Delta>(), Err(ParseError::Unbalanced));
        assert!(matches!("0(2)".parse::<Delta>(), Err(ParseError::IllegalCharacter { found: '2', .. })));
        assert!(matches!("R(EX)".parse::<Theta>(), Err(ParseError::IllegalCharacter { found: 'X', offset: 3, .. })));
        assert!(matches!("0(1)".parse::<Theta>(), Err(ParseError::IllegalCharacter { .. })));
        assert_eq!("".parse::<Delta>(), Err(ParseError::MissingPeriod));
    }

    #[test]
    fn minimized_examples() {
        let d: Delta = "0101(0101)".parse().unwrap();
        assert_eq!(d.minimized().to_string(), "(01)");
        let d: Delta = "011(11)".parse().unwrap();
        assert_eq!(d.minimized().to_string(), "0(1)");
        let t: Theta = "RER(ERR)".parse().unwrap();
        assert_eq!(t.minimized().to_string(), "RE(RER)");
    }

    #[test]
    fn fit_examples() {
        let seq: Vec<Letter> = "0111111".parse::<crate::Word>().unwrap().into_letters();
        assert_eq!(EventuallyPeriodic::fit(&seq, 2).unwrap().to_string(), "0(1)");
        let seq: Vec<Antimorphism> = "RERERERER".chars().map(|c| Antimorphism::from_char(c).unwrap()).collect();
        assert_eq!(EventuallyPeriodic::fit(&seq, 2).unwrap().to_string(), "(RE)");
        let seq: Vec<Letter> = "01".parse::<crate::Word>().unwrap().into_letters();
        // a single trailing 1 is not a repeated period
        assert_eq!(EventuallyPeriodic::fit(&seq, 2), None);
    }

    fn arb_delta() -> impl Strategy<Value = Delta> {
        let letter = prop_oneof![Just(Letter::Zero), Just(Letter::One)];
        (
            prop::collection::vec(letter.clone(), 0..4),
            prop::collection::vec(letter, 1..4),
        )
            .prop_map(|(pre, per)| EventuallyPeriodic::new(pre, per).unwrap())
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(d in arb_delta()) {
            prop_assert_eq!(d.to_string().parse::<Delta>().unwrap(), d);
        }

        #[test]
        fn minimized_is_the_same_sequence(d in arb_delta()) {
            let m = d.minimized();
            prop_assert!(m.preperiod().len() <= d.preperiod().len());
            prop_assert!(m.period().len() <= d.period().len());
            prop_assert_eq!(m.take(40), d.take(40));
            prop_assert_eq!(m.minimized(), m);
        }

        #[test]
        fn fit_reproduces_the_prefix(d in arb_delta(), n in 1usize..40) {
            let prefix = d.take(n);
            if let Some(fit) = EventuallyPeriodic::fit(&prefix, 2) {
                prop_assert_eq!(fit.take(n), prefix);
            }
        }
    }
}
