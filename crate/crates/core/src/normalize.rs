//! Normalization of directive bi-sequences and the periodicity criterion.
//!
//! Normalization first rewrites the prefix with the three prefix rules, in
//! order, each seeing the prefix left by the previous one. It then streams the bi-sequence through a transducer that
//! applies the factor rule
//!
//! ```text
//! (a b b̄, ϑ ϑ̄ ϑ̄) -> (a b b̄ b, ϑ ϑ̄ ϑ ϑ̄)
//! ```
//!
//! leftmost first. A rewrite only changes positions after the first two of
//! the match, so the transducer state is the last two emitted pairs. Since
//! the input is eventually periodic, the state repeats at some period
//! boundary and the output between the two visits is the output period.

use std::collections::HashMap;

use serde::Serialize;

use crate::closure::{generate_chain, pseudopalindromic_prefixes, DirectiveBiSequence};
use crate::error::{Error, Result};
use crate::sequence::EventuallyPeriodic;
use crate::word::{Antimorphism, Letter};

/// Number of period boundaries the transducer may visit before giving up.
pub const DEFAULT_BOUNDARY_BOUND: usize = 64;

type Pair = (Letter, Antimorphism);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PrefixRule {
    /// `(a ā, RR) -> (a ā a, RER)`
    #[serde(rename = "i")]
    AlternatingRR,
    /// `(a^i, R^{i-1} E) -> (a^i ā, R^i E)`
    #[serde(rename = "ii")]
    RunThenE,
    /// `(a^i ā ā, R^i E E) -> (a^i ā ā a, R^i E R E)`
    #[serde(rename = "iii")]
    RunThenEE,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizationReport {
    pub input: DirectiveBiSequence,
    pub output: DirectiveBiSequence,
    /// In application order; only (ii) followed by (iii) can occur together.
    pub prefix_rules_applied: Vec<PrefixRule>,
    pub factor_rule_applications: usize,
    pub cycle_found: bool,
}

impl NormalizationReport {
    pub fn rules_applied(&self) -> usize {
        self.factor_rule_applications + self.prefix_rules_applied.len()
    }
}

/// Joint view of `(Δ, Θ)` as one eventually periodic sequence of pairs.
struct PairStream<'a> {
    lambda: &'a DirectiveBiSequence,
    preperiod: usize,
    period: usize,
}

impl<'a> PairStream<'a> {
    fn new(lambda: &'a DirectiveBiSequence) -> Self {
        PairStream {
            lambda,
            preperiod: lambda.joint_preperiod(),
            period: lambda.joint_period(),
        }
    }

    /// 0-based.
    fn get(&self, i: usize) -> Pair {
        (self.lambda.delta.get(i), self.lambda.theta.get(i))
    }
}

fn matches_factor(x: Pair, y: Pair, z: Pair) -> bool {
    let (_, t) = x;
    let (b, t1) = y;
    let (c, t2) = z;
    c == b.complement() && t1 == t.bar() && t2 == t.bar()
}

/// The input stream with a rewritten head in front of it.
struct PrefixView<'s, 'a> {
    stream: &'s PairStream<'a>,
    head: Vec<Pair>,
    consumed: usize,
}

impl PrefixView<'_, '_> {
    fn get(&self, j: usize) -> Pair {
        match self.head.get(j) {
            Some(&p) => p,
            None => self.stream.get(self.consumed + j - self.head.len()),
        }
    }

    /// Past this many pairs the view has shown its whole period.
    fn horizon(&self) -> usize {
        self.head.len() + self.stream.preperiod + self.stream.period + 3
    }

    fn replace(&mut self, replaced: usize, rewritten: Vec<Pair>) {
        let kept = self.head.get(replaced..).map(<[Pair]>::to_vec).unwrap_or_default();
        self.consumed += replaced.saturating_sub(self.head.len());
        self.head = rewritten;
        self.head.extend(kept);
    }

    /// The rewritten head and how many pairs of the view it replaces.
    fn rule(&self, rule: PrefixRule) -> Option<(Vec<Pair>, usize)> {
        use Antimorphism::{E, R};
        let horizon = self.horizon();
        let (a, _) = self.get(0);
        let abar = a.complement();
        // length of the leading run of (a, R)
        let run = (0..horizon).take_while(|&j| self.get(j) == (a, R)).count();
        match rule {
            PrefixRule::AlternatingRR => (self.get(0) == (a, R) && self.get(1) == (abar, R))
                .then(|| (vec![(a, R), (abar, E), (a, R)], 2)),
            PrefixRule::RunThenE => (run < horizon && self.get(run) == (a, E)).then(|| {
                let mut head = vec![(a, R); run + 1];
                head.push((abar, E));
                (head, run + 1)
            }),
            PrefixRule::RunThenEE => {
                (run >= 1 && run < horizon && self.get(run) == (abar, E) && self.get(run + 1) == (abar, E)).then(|| {
                    let mut head = vec![(a, R); run];
                    head.extend([(abar, E), (abar, R), (a, E)]);
                    (head, run + 2)
                })
            }
        }
    }
}

const PREFIX_RULES: [PrefixRule; 3] = [PrefixRule::AlternatingRR, PrefixRule::RunThenE, PrefixRule::RunThenEE];

/// Applies the prefix rules in order, each to the prefix left by the
/// previous ones. Only (ii) can create the left-hand side of another rule,
/// namely (iii). Returns the rules applied, the new head and how many input
/// pairs it replaces.
fn prefix_rewrite(stream: &PairStream<'_>) -> (Vec<PrefixRule>, Vec<Pair>, usize) {
    let mut view = PrefixView {
        stream,
        head: Vec::new(),
        consumed: 0,
    };
    let on_input = PREFIX_RULES.iter().filter(|&&r| view.rule(r).is_some()).count();
    assert!(on_input <= 1, "prefix rules overlap on {}", stream.lambda);

    let mut applied = Vec::new();
    for rule in PREFIX_RULES {
        if let Some((rewritten, replaced)) = view.rule(rule) {
            view.replace(replaced, rewritten);
            applied.push(rule);
        }
    }
    (applied, view.head, view.consumed)
}

pub fn normalize(lambda: &DirectiveBiSequence) -> Result<NormalizationReport> {
    normalize_with_bound(lambda, DEFAULT_BOUNDARY_BOUND)
}

/// [`normalize`] with an explicit cap on visited period boundaries.
pub fn normalize_with_bound(lambda: &DirectiveBiSequence, max_boundaries: usize) -> Result<NormalizationReport> {
    let stream = PairStream::new(lambda);
    let (prefix_rules, head, consumed) = prefix_rewrite(&stream);

    let mut out: Vec<Pair> = Vec::new();
    let mut applications = 0usize;
    let mut feed = |x: Pair, out: &mut Vec<Pair>| {
        let k = out.len();
        if k >= 2 && matches_factor(out[k - 2], out[k - 1], x) {
            let (_, t) = out[k - 2];
            let (b, _) = out[k - 1];
            out.push((b.complement(), t));
            out.push((b, t.bar()));
            applications += 1;
        } else {
            out.push(x);
        }
    };
    for &x in &head {
        feed(x, &mut out);
    }

    // period boundaries of the original stream at or after the consumed head
    let start = consumed.max(stream.preperiod);
    let first_boundary = stream.preperiod + (start - stream.preperiod).div_ceil(stream.period) * stream.period;
    let mut pos = consumed;
    while pos < first_boundary {
        feed(stream.get(pos), &mut out);
        pos += 1;
    }

    let mut seen: HashMap<(Option<Pair>, Option<Pair>), usize> = HashMap::new();
    for _ in 0..=max_boundaries {
        let k = out.len();
        let state = (k.checked_sub(2).map(|i| out[i]), k.checked_sub(1).map(|i| out[i]));
        if let Some(&mark) = seen.get(&state) {
            let output = split_pairs(&out[..mark], &out[mark..]);
            return Ok(NormalizationReport {
                input: lambda.clone(),
                output,
                prefix_rules_applied: prefix_rules,
                factor_rule_applications: applications,
                cycle_found: true,
            });
        }
        seen.insert(state, k);
        for _ in 0..stream.period {
            feed(stream.get(pos), &mut out);
            pos += 1;
        }
    }
    Err(Error::CycleNotFound {
        boundaries: max_boundaries,
    })
}

fn split_pairs(preperiod: &[Pair], period: &[Pair]) -> DirectiveBiSequence {
    let delta = EventuallyPeriodic::new(
        preperiod.iter().map(|p| p.0).collect(),
        period.iter().map(|p| p.0).collect(),
    )
    .expect("transducer period is nonempty");
    let theta = EventuallyPeriodic::new(
        preperiod.iter().map(|p| p.1).collect(),
        period.iter().map(|p| p.1).collect(),
    )
    .expect("transducer period is nonempty");
    DirectiveBiSequence::new(delta, theta).minimized()
}

/// Generates `depth` closure steps and checks that every pseudopalindromic
/// prefix of `w_depth` is one of `w_1 … w_depth`.
pub fn is_normalized(lambda: &DirectiveBiSequence, depth: usize) -> Result<bool> {
    if depth < 2 {
        return Err(Error::InvalidArgument("depth must be at least 2".into()));
    }
    let chain = generate_chain(lambda, depth)?;
    let lengths: Vec<usize> = chain.lengths().collect();
    let pals = pseudopalindromic_prefixes(&chain.word);
    Ok(pals.iter().all(|(len, _)| lengths.binary_search(len).is_ok()))
}

/// `(a, ϑ, n0)` with `δ_{n+1} = a ⟺ ϑ_n = ϑ` for every `n > n0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicityWitness {
    pub letter: Letter,
    pub theta: Antimorphism,
    pub n0: usize,
}

/// Decides whether `u(Δ, Θ)` is periodic. Returns the first witness in the
/// order `a ∈ {0, 1}`, `ϑ ∈ {R, E}`, with the smallest `n0` for it.
pub fn periodicity_witness(lambda: &DirectiveBiSequence) -> Option<PeriodicityWitness> {
    // (ϑ_n, δ_{n+1}) is periodic in n once n > |Θ pre| and n + 1 > |Δ pre|
    let start = lambda.joint_preperiod() + 1;
    let cycle = lambda.joint_period();
    let holds = |n: usize, a: Letter, t: Antimorphism| (lambda.delta_at(n + 1) == a) == (lambda.theta_at(n) == t);
    for a in Letter::ALL {
        for t in Antimorphism::ALL {
            if (start..start + cycle).all(|n| holds(n, a, t)) {
                let mut n0 = start - 1;
                while n0 >= 1 && holds(n0, a, t) {
                    n0 -= 1;
                }
                return Some(PeriodicityWitness { letter: a, theta: t, n0 });
            }
        }
    }
    None
}

pub fn is_periodic(lambda: &DirectiveBiSequence) -> bool {
    periodicity_witness(lambda).is_some()
}
