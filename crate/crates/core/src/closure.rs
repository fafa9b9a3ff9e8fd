//! Generalized pseudostandard words: generation from a directive bi-sequence
//! and bounded-depth recovery of the prefix chain from a finite word.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::pal_index::PalSuffixIndex;
use crate::sequence::EventuallyPeriodic;
use crate::word::{palindromic_prefix_table, Antimorphism, Letter, Word};

/// The directive bi-sequence `(Δ, Θ)`, both eventually periodic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectiveBiSequence {
    pub delta: EventuallyPeriodic<Letter>,
    pub theta: EventuallyPeriodic<Antimorphism>,
}

impl DirectiveBiSequence {
    pub fn new(delta: EventuallyPeriodic<Letter>, theta: EventuallyPeriodic<Antimorphism>) -> Self {
        DirectiveBiSequence { delta, theta }
    }

    /// Parses both halves from the text grammar, e.g. `("0(1)", "R(ER)")`.
    pub fn parse(delta: &str, theta: &str) -> Result<Self, ParseError> {
        Ok(DirectiveBiSequence {
            delta: delta.parse()?,
            theta: theta.parse()?,
        })
    }

    /// `(0 1^ω, R (E R^k)^ω)`, or its complement `(1 0^ω, …)` for `start = 1`.
    pub fn phi_family(k: usize, start: Letter) -> Self {
        let mut period = vec![Antimorphism::E];
        period.extend(std::iter::repeat_n(Antimorphism::R, k));
        DirectiveBiSequence {
            delta: EventuallyPeriodic::new(vec![start], vec![start.complement()]).unwrap(),
            theta: EventuallyPeriodic::new(vec![Antimorphism::R], period).unwrap(),
        }
    }

    /// `δ_n`, 1-based.
    #[inline]
    pub fn delta_at(&self, n: usize) -> Letter {
        self.delta.get(n - 1)
    }

    /// `ϑ_n`, 1-based.
    #[inline]
    pub fn theta_at(&self, n: usize) -> Antimorphism {
        self.theta.get(n - 1)
    }

    /// Joint preperiod length `max(|Δ pre|, |Θ pre|)`.
    pub fn joint_preperiod(&self) -> usize {
        self.delta.preperiod().len().max(self.theta.preperiod().len())
    }

    /// Joint period length `lcm(|Δ period|, |Θ period|)`.
    pub fn joint_period(&self) -> usize {
        lcm(self.delta.period().len(), self.theta.period().len())
    }

    pub fn minimized(&self) -> Self {
        DirectiveBiSequence {
            delta: self.delta.minimized(),
            theta: self.theta.minimized(),
        }
    }
}

impl fmt::Display for DirectiveBiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.delta, self.theta)
    }
}

#[derive(Serialize, Deserialize)]
struct BiSequenceText {
    delta: String,
    theta: String,
}

impl Serialize for DirectiveBiSequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BiSequenceText {
            delta: self.delta.to_string(),
            theta: self.theta.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DirectiveBiSequence {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = BiSequenceText::deserialize(d)?;
        DirectiveBiSequence::parse(&text.delta, &text.theta).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// One link `w_i = (w_{i-1} δ_i)^{ϑ_i}` of a prefix chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    /// `|w_i|`
    pub len: usize,
    pub delta: Letter,
    pub theta: Antimorphism,
}

/// Nested pseudopalindromic prefixes `w_1, w_2, …` of a common word. Step
/// `i` (1-based) is the prefix of `word` of length `steps[i-1].len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixChain {
    pub word: Word,
    pub steps: Vec<ChainStep>,
}

impl PrefixChain {
    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    /// `w_i`, 1-based; `w_0 = ε`.
    pub fn prefix(&self, i: usize) -> &[Letter] {
        if i == 0 {
            return &[];
        }
        &self.word[..self.steps[i - 1].len]
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.steps.iter().map(|s| s.len)
    }

    pub fn deltas(&self) -> Vec<Letter> {
        self.steps.iter().map(|s| s.delta).collect()
    }

    pub fn thetas(&self) -> Vec<Antimorphism> {
        self.steps.iter().map(|s| s.theta).collect()
    }
}

/// Incremental driver of the closure recurrence.
pub struct Generator<'a> {
    lambda: &'a DirectiveBiSequence,
    index: PalSuffixIndex,
    steps: Vec<ChainStep>,
}

impl<'a> Generator<'a> {
    pub fn new(lambda: &'a DirectiveBiSequence) -> Self {
        Generator {
            lambda,
            index: PalSuffixIndex::new(),
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn steps(&self) -> &[ChainStep] {
        &self.steps
    }

    /// Computes the next `w_{n+1}` in full and returns its length.
    pub fn step(&mut self) -> Result<usize> {
        self.step_bounded(usize::MAX)
    }

    /// Like [`step`](Self::step) but stops writing letters once the word
    /// reaches `limit`. A truncated step is not recorded in the chain.
    fn step_bounded(&mut self, limit: usize) -> Result<usize> {
        let n = self.steps.len() + 1;
        let before = self.index.len();
        let delta = self.lambda.delta_at(n);
        let theta = self.lambda.theta_at(n);
        self.index.push(delta);
        let m = self.index.len();
        let head = m - self.index.longest(theta);
        let full = m + head;
        for j in (0..head).rev() {
            if self.index.len() >= limit {
                return Ok(self.index.len());
            }
            let a = theta.map_letter(self.index.letter(j));
            self.index.push(a);
        }
        if self.index.len() <= before {
            return Err(Error::NonIncreasingChain { step: n });
        }
        debug_assert_eq!(self.index.len(), full);
        self.steps.push(ChainStep {
            len: full,
            delta,
            theta,
        });
        Ok(full)
    }

    pub fn into_chain(self) -> PrefixChain {
        PrefixChain {
            word: self.index.into_word(),
            steps: self.steps,
        }
    }
}

/// The chain `w_1 … w_steps`.
pub fn generate_chain(lambda: &DirectiveBiSequence, steps: usize) -> Result<PrefixChain> {
    let mut gen = Generator::new(lambda);
    for _ in 0..steps {
        gen.step()?;
    }
    Ok(gen.into_chain())
}

/// Every `w_i` with `|w_i| <= max_len`.
pub fn generate_chain_until(lambda: &DirectiveBiSequence, max_len: usize) -> Result<PrefixChain> {
    let mut gen = Generator::new(lambda);
    while gen.step()? <= max_len {}
    let mut chain = gen.into_chain();
    chain.steps.pop();
    let keep = chain.steps.last().map_or(0, |s| s.len);
    let mut letters = chain.word.into_letters();
    letters.truncate(keep);
    chain.word = Word::from_letters(letters);
    Ok(chain)
}

pub fn generate_prefixes(lambda: &DirectiveBiSequence, steps: usize) -> Result<Vec<Word>> {
    let chain = generate_chain(lambda, steps)?;
    Ok((1..=chain.depth()).map(|i| Word::from(chain.prefix(i))).collect())
}

/// The length-`n_chars` prefix of `u(Δ, Θ)`.
pub fn generate_word_prefix(lambda: &DirectiveBiSequence, n_chars: usize) -> Result<Word> {
    let mut gen = Generator::new(lambda);
    while gen.len() < n_chars {
        gen.step_bounded(n_chars)?;
    }
    let mut letters = gen.index.into_word().into_letters();
    letters.truncate(n_chars);
    Ok(Word::from_letters(letters))
}

/// All nonempty prefixes of `w` that are `E`- or `R`-palindromes, by
/// increasing length. No nonempty word is both, so each has a unique type.
pub fn pseudopalindromic_prefixes(w: &[Letter]) -> Vec<(usize, Antimorphism)> {
    let r = palindromic_prefix_table(w, Antimorphism::R);
    let e = palindromic_prefix_table(w, Antimorphism::E);
    (1..=w.len())
        .filter_map(|len| match (r[len], e[len]) {
            (true, _) => Some((len, Antimorphism::R)),
            (false, true) => Some((len, Antimorphism::E)),
            (false, false) => None,
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BreakReason {
    /// Both closures of `p·a` fit in the window and neither is a prefix.
    NoClosureMatches,
    /// A pseudopalindromic prefix lies strictly between two chain links.
    UnexplainedPrefix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MembershipVerdict {
    /// Every link that fits in the window was confirmed.
    ChainComplete { chain: PrefixChain, depth: usize },
    /// The chain cannot be continued. `position` is the length of the prefix
    /// `p·a` whose closures are contradicted (or of the unexplained prefix);
    /// `certified` counts the links confirmed before the break.
    ChainBreaks {
        position: usize,
        reason: BreakReason,
        certified: usize,
    },
    /// The link budget ran out before the window did.
    Exhausted { chain: PrefixChain, depth: usize },
}

impl MembershipVerdict {
    pub fn certified_depth(&self) -> usize {
        match self {
            MembershipVerdict::ChainComplete { depth, .. } | MembershipVerdict::Exhausted { depth, .. } => *depth,
            MembershipVerdict::ChainBreaks { certified, .. } => *certified,
        }
    }
}

/// Recovers the chain of all pseudopalindromic prefixes of `w` and checks
/// that each link is a closure step, as far as the window allows.
pub fn infer_chain(w: &[Letter]) -> Result<MembershipVerdict> {
    infer_chain_with_limit(w, None)
}

/// [`infer_chain`] with an optional cap on the number of links examined.
pub fn infer_chain_with_limit(w: &[Letter], max_links: Option<usize>) -> Result<MembershipVerdict> {
    let n = w.len();
    if n < 2 {
        return Err(Error::WindowTooShort { len: n });
    }
    let pal_r = palindromic_prefix_table(w, Antimorphism::R);
    let pal_e = palindromic_prefix_table(w, Antimorphism::E);
    let is_pal = |theta: Antimorphism, len: usize| match theta {
        Antimorphism::R => pal_r[len],
        Antimorphism::E => pal_e[len],
    };
    // next_pal[L]: the shortest pseudopalindromic prefix longer than L
    let mut next_pal: Vec<Option<(usize, Antimorphism)>> = vec![None; n + 1];
    for len in (0..n).rev() {
        let l = len + 1;
        next_pal[len] = if pal_r[l] {
            Some((l, Antimorphism::R))
        } else if pal_e[l] {
            Some((l, Antimorphism::E))
        } else {
            next_pal[l]
        };
    }
    let mut index = PalSuffixIndex::with_capacity(n);
    index.extend(w.iter().copied());

    let mut steps: Vec<ChainStep> = Vec::new();
    let mut cur = 0;
    let chain_of = |steps: Vec<ChainStep>| PrefixChain {
        word: Word::from(w),
        steps,
    };
    while cur < n {
        if max_links.is_some_and(|limit| steps.len() >= limit) {
            let depth = steps.len();
            return Ok(MembershipVerdict::Exhausted {
                chain: chain_of(steps),
                depth,
            });
        }
        let a = w[cur];
        let m = cur + 1;
        let mut confirmed: Option<(usize, Antimorphism)> = None;
        let mut beyond_window = false;
        for theta in Antimorphism::ALL {
            let c = 2 * m - index.longest_at(theta, m);
            if c > n {
                beyond_window = true;
            } else if is_pal(theta, c) && confirmed.is_none_or(|(best, _)| c < best) {
                confirmed = Some((c, theta));
            }
        }
        match confirmed {
            Some((c, theta)) => {
                if next_pal[cur] != Some((c, theta)) {
                    let position = next_pal[cur].map_or(c, |(l, _)| l);
                    return Ok(MembershipVerdict::ChainBreaks {
                        position,
                        reason: BreakReason::UnexplainedPrefix,
                        certified: steps.len(),
                    });
                }
                steps.push(ChainStep {
                    len: c,
                    delta: a,
                    theta,
                });
                cur = c;
            }
            None if beyond_window => break,
            None => {
                return Ok(MembershipVerdict::ChainBreaks {
                    position: m,
                    reason: BreakReason::NoClosureMatches,
                    certified: steps.len(),
                });
            }
        }
    }
    if steps.len() < 2 {
        return Err(Error::WindowTooShort { len: n });
    }
    let depth = steps.len();
    Ok(MembershipVerdict::ChainComplete {
        chain: chain_of(steps),
        depth,
    })
}
