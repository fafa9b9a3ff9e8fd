//! Computational checks of the φ_k results and the bounded morphism search.

use std::collections::BTreeMap;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::closure::{
    generate_chain, generate_chain_until, generate_word_prefix, infer_chain, DirectiveBiSequence,
    MembershipVerdict, PrefixChain,
};
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::normalize::is_periodic;
use crate::sequence::EventuallyPeriodic;
use crate::word::{
    complement, palindromic_prefix_table, smallest_period, theta_palindromic_closure, to_string, Antimorphism, Letter,
    Word,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    LemmaRecurrences,
    Proposition,
    Corollary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationOutcome {
    pub claim: Claim,
    pub k: usize,
    /// Highest chain index (lemma) or prefix length (proposition, corollary)
    /// covered by the check.
    pub range_checked: usize,
    pub pass: bool,
    /// Chain index (lemma, proposition) or letter position (corollary) of the
    /// first violation.
    pub first_failure: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl VerificationOutcome {
    fn new(claim: Claim, k: usize, range_checked: usize) -> Self {
        VerificationOutcome {
            claim,
            k,
            range_checked,
            pass: true,
            first_failure: None,
            detail: None,
        }
    }

    fn fail(mut self, at: usize, detail: String) -> Self {
        self.pass = false;
        self.first_failure = Some(at);
        self.detail = Some(detail);
        self
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::ZeroK)
    } else {
        Ok(())
    }
}

/// `w^{-1} v`: `v` with its prefix `w` removed, if `w` is a prefix.
fn strip_prefix<'a>(v: &'a [Letter], w: &[Letter]) -> Option<&'a [Letter]> {
    v.strip_prefix(w)
}

/// Checks every recurrence line and its E/R type for the chain of
/// `(0 1^ω, R (E R^k)^ω)` up to `w_steps`.
pub fn verify_lemma_recurrences(k: usize, steps: usize) -> Result<VerificationOutcome> {
    check_k(k)?;
    let period = k + 1;
    if steps < 2 * period + 1 {
        return Err(Error::InvalidArgument(format!(
            "lemma check needs at least {} steps for k = {k}",
            2 * period + 1
        )));
    }
    let chain = generate_chain(&DirectiveBiSequence::phi_family(k, Letter::Zero), steps)?;
    let outcome = VerificationOutcome::new(Claim::LemmaRecurrences, k, steps);
    let w = |i: usize| chain.prefix(i);

    for i in 2..=steps {
        // i = l·K + j with j in 2..=K+1
        let j = (i - 2) % period + 2;
        let prev = w(i - 1);
        let expected_type = if j == 2 { Antimorphism::E } else { Antimorphism::R };
        let expected: Word = match j {
            2 | 3 => {
                let twin = expected_type.apply(prev);
                let comp = complement(prev);
                if twin != comp {
                    return Ok(outcome.fail(i, format!("{}(w_{}) differs from its complement", expected_type, i - 1)));
                }
                Word::from(prev).concat(&comp)
            }
            _ => {
                let back = if j == 4 { i - 3 } else { i - 2 };
                match strip_prefix(prev, w(back)) {
                    Some(rest) => Word::from(prev).concat(rest),
                    None => {
                        return Ok(outcome.fail(i, format!("w_{back} is not a prefix of w_{}", i - 1)));
                    }
                }
            }
        };
        if &expected[..] != w(i) {
            return Ok(outcome.fail(i, format!("recurrence line {j} fails for w_{i}")));
        }
        let actual_type = chain.steps[i - 1].theta;
        if actual_type != expected_type || !expected_type.is_palindrome(w(i)) || expected_type.bar().is_palindrome(w(i)) {
            return Ok(outcome.fail(i, format!("w_{i} is not an {expected_type}-palindrome")));
        }
    }
    Ok(outcome)
}

/// Checks `w_{lK+r} = φ_k(w_{(l-1)K+r})` for every chain prefix no longer
/// than `max_prefix`, and the base identity `φ_k(w_1) = 0(110)^k`.
pub fn verify_proposition(k: usize, max_prefix: usize) -> Result<VerificationOutcome> {
    check_k(k)?;
    let period = k + 1;
    let phi = Morphism::phi_k(k)?;
    let chain = generate_chain_until(&DirectiveBiSequence::phi_family(k, Letter::Zero), max_prefix)?;
    if chain.depth() < period + 1 {
        return Err(Error::InvalidArgument(format!(
            "max prefix {max_prefix} does not reach w_{} (length {})",
            period + 1,
            3 * k + 1
        )));
    }
    let range = chain.steps.last().map_or(0, |s| s.len);
    let outcome = VerificationOutcome::new(Claim::Proposition, k, range);

    let base: Word = format!("0{}", "110".repeat(k)).parse().expect("binary literal");
    let image_w1 = phi.apply(chain.prefix(1));
    if image_w1 != base || &image_w1[..] != chain.prefix(period + 1) {
        return Ok(outcome.fail(period + 1, "phi_k(w_1) differs from 0(110)^k or from w_{K+1}".into()));
    }
    for i in period + 1..=chain.depth() {
        if &phi.apply(chain.prefix(i - period))[..] != chain.prefix(i) {
            return Ok(outcome.fail(i, format!("w_{i} != phi_{k}(w_{})", i - period)));
        }
    }
    Ok(outcome)
}

fn first_mismatch(a: &[Letter], b: &[Letter]) -> Option<usize> {
    if a.len() != b.len() {
        return Some(a.len().min(b.len()));
    }
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// Compares both fixed points of `φ_k` with the generated words of
/// `(0 1^ω, R (E R^k)^ω)` and `(1 0^ω, R (E R^k)^ω)`.
pub fn verify_corollary(k: usize, n_chars: usize) -> Result<VerificationOutcome> {
    check_k(k)?;
    let phi = Morphism::phi_k(k)?;
    let outcome = VerificationOutcome::new(Claim::Corollary, k, n_chars);
    let mut fixed = Vec::new();
    for a in Letter::ALL {
        let u = phi.fixed_point_prefix(a, n_chars)?;
        let g = generate_word_prefix(&DirectiveBiSequence::phi_family(k, a), n_chars)?;
        if let Some(pos) = first_mismatch(&u, &g) {
            return Ok(outcome.fail(pos, format!("fixed point from {a} differs from the generated word")));
        }
        fixed.push(u);
    }
    if let Some(pos) = first_mismatch(&fixed[1], &complement(&fixed[0])) {
        return Ok(outcome.fail(pos, "fixed points are not complementary".into()));
    }
    Ok(outcome)
}

/// Every morphism with image lengths in `1..=max_image_len`, ordered by
/// `(image0, image1)` where images are ordered by length, then
/// lexicographically.
pub fn enumerate_morphisms(max_image_len: usize) -> impl Iterator<Item = Morphism> {
    let words: Vec<Word> = (1..=max_image_len)
        .flat_map(|len| {
            (0..1u64 << len).map(move |bits| {
                (0..len)
                    .map(|i| if bits >> (len - 1 - i) & 1 == 1 { Letter::One } else { Letter::Zero })
                    .collect::<Word>()
            })
        })
        .collect();
    let second = words.clone();
    words.into_iter().flat_map(move |u| {
        second
            .clone()
            .into_iter()
            .map(move |v| Morphism::new(u.clone(), v).expect("images are nonempty"))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    NotPrimitive,
    NotProlongable,
    PeriodicFixedPoint { period: usize },
    /// The prefix chain breaks inside the window: not generalized
    /// pseudostandard.
    NotPseudostandard { position: usize },
    SturmianCandidate,
    PhiFamily { k: usize },
    CounterexampleCandidate,
    UndecidedAtDepth { depth: usize },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::NotPrimitive => "NotPrimitive",
            Verdict::NotProlongable => "NotProlongable",
            Verdict::PeriodicFixedPoint { .. } => "PeriodicFixedPoint",
            Verdict::NotPseudostandard { .. } => "NotPseudostandard",
            Verdict::SturmianCandidate => "SturmianCandidate",
            Verdict::PhiFamily { .. } => "PhiFamily",
            Verdict::CounterexampleCandidate => "CounterexampleCandidate",
            Verdict::UndecidedAtDepth { .. } => "UndecidedAtDepth",
        }
    }

    /// Which fixed point speaks for a morphism prolongable on both letters.
    fn rank(&self) -> u8 {
        match self {
            Verdict::NotPrimitive | Verdict::NotProlongable => 0,
            Verdict::PeriodicFixedPoint { .. } => 1,
            Verdict::NotPseudostandard { .. } => 2,
            Verdict::UndecidedAtDepth { .. } => 3,
            Verdict::SturmianCandidate => 4,
            Verdict::PhiFamily { .. } => 5,
            Verdict::CounterexampleCandidate => 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub morphism: Morphism,
    pub verdict: Verdict,
    /// Starting letter of the fixed point the verdict refers to.
    pub letter: Option<Letter>,
    pub certified_depth: usize,
    /// Raw `(δ_i, ϑ_i)` of the certified chain.
    pub chain: Option<(Vec<Letter>, Vec<Antimorphism>)>,
    /// Eventually periodic fit of the chain, when one is visible twice.
    pub inferred: Option<DirectiveBiSequence>,
    /// First 64 letters of the fixed point.
    pub evidence: Option<Word>,
}

impl Classification {
    fn bare(morphism: &Morphism, verdict: Verdict) -> Self {
        Classification {
            morphism: morphism.clone(),
            verdict,
            letter: None,
            certified_depth: 0,
            chain: None,
            inferred: None,
            evidence: None,
        }
    }
}

/// Minimum number of `R (E R^k)` periods that must be visible before a
/// chain is attributed to φ_k.
const PHI_MIN_PERIODS: usize = 2;

/// Returns `k` when the chain reads `(a ā ā …, R (E R^k) (E R^k) …)` with at
/// least two full periods.
fn match_phi_pattern(chain: &PrefixChain) -> Option<(usize, Letter)> {
    let deltas = chain.deltas();
    let thetas = chain.thetas();
    let a = *deltas.first()?;
    if deltas[1..].iter().any(|&d| d != a.complement()) {
        return None;
    }
    if thetas[0] != Antimorphism::R || thetas.get(1) != Some(&Antimorphism::E) {
        return None;
    }
    let next_e = thetas[2..].iter().position(|&t| t == Antimorphism::E)? + 2;
    let k = next_e - 2;
    if k == 0 {
        return None;
    }
    let period = k + 1;
    if thetas.len() < 1 + PHI_MIN_PERIODS * period {
        return None;
    }
    let fits = thetas[1..]
        .iter()
        .enumerate()
        .all(|(i, &t)| t == if i % period == 0 { Antimorphism::E } else { Antimorphism::R });
    fits.then_some((k, a))
}

/// A period must repeat this many times inside the window before the fixed
/// point is called periodic. Aperiodic fixed points of φ_5 already show a
/// period of 768 within 4096 letters.
const PERIOD_REPEATS: usize = 16;

/// Whether the prefix is consistent with `u(Δ, R^ω)`: from every
/// R-palindromic prefix `p` (including ε), the R-closure of `p` plus the
/// next letter is again a prefix, for all closures that fit the window.
/// Such words also have E-palindromic prefixes (`01`, `0101`, …), so their
/// inferred chain need not be all-R.
fn is_standard_sturmian_prefix(u: &[Letter]) -> bool {
    let pal = palindromic_prefix_table(u, Antimorphism::R);
    let mut confirmed = 0;
    let mut p = 0;
    while p < u.len() {
        let closure = theta_palindromic_closure(&u[..=p], Antimorphism::R);
        if closure.len() > u.len() {
            break;
        }
        if closure[..] != u[..closure.len()] || !pal[closure.len()] {
            return false;
        }
        confirmed += 1;
        p = closure.len();
    }
    confirmed >= 2
}

fn fit_directive(deltas: &[Letter], thetas: &[Antimorphism]) -> Option<DirectiveBiSequence> {
    let pairs: Vec<(Letter, Antimorphism)> = deltas.iter().copied().zip(thetas.iter().copied()).collect();
    let fit = EventuallyPeriodic::fit(&pairs, 2)?;
    let delta = EventuallyPeriodic::new(
        fit.preperiod().iter().map(|p| p.0).collect(),
        fit.period().iter().map(|p| p.0).collect(),
    )
    .ok()?;
    let theta = EventuallyPeriodic::new(
        fit.preperiod().iter().map(|p| p.1).collect(),
        fit.period().iter().map(|p| p.1).collect(),
    )
    .ok()?;
    Some(DirectiveBiSequence::new(delta, theta).minimized())
}

fn classify_fixed_point(morphism: &Morphism, a: Letter, depth_chars: usize) -> Result<Classification> {
    let u = morphism.fixed_point_prefix(a, depth_chars)?;
    let mut out = Classification::bare(morphism, Verdict::UndecidedAtDepth { depth: 0 });
    out.letter = Some(a);
    out.evidence = Some(Word::from(&u[..u.len().min(64)]));

    let period = smallest_period(&u);
    if period <= depth_chars / PERIOD_REPEATS {
        out.verdict = Verdict::PeriodicFixedPoint { period };
        return Ok(out);
    }
    let verdict = match infer_chain(&u) {
        Err(Error::WindowTooShort { .. }) => return Ok(out),
        Err(e) => return Err(e),
        Ok(v) => v,
    };
    out.certified_depth = verdict.certified_depth();
    let chain = match verdict {
        MembershipVerdict::ChainBreaks { position, .. } => {
            out.verdict = Verdict::NotPseudostandard { position };
            return Ok(out);
        }
        MembershipVerdict::Exhausted { depth, chain } => {
            out.chain = Some((chain.deltas(), chain.thetas()));
            out.verdict = Verdict::UndecidedAtDepth { depth };
            return Ok(out);
        }
        MembershipVerdict::ChainComplete { chain, .. } => chain,
    };
    let (deltas, thetas) = (chain.deltas(), chain.thetas());
    out.inferred = fit_directive(&deltas, &thetas);
    out.chain = Some((deltas, thetas.clone()));

    // the criterion on the fitted directive must agree with the period scan
    if out.inferred.as_ref().is_some_and(is_periodic) {
        out.verdict = Verdict::UndecidedAtDepth {
            depth: out.certified_depth,
        };
        return Ok(out);
    }
    out.verdict = if is_standard_sturmian_prefix(&u) {
        Verdict::SturmianCandidate
    } else if let Some((k, start)) = match_phi_pattern(&chain) {
        let reference = Morphism::phi_k(k)?.fixed_point_prefix(start, u.len())?;
        if reference == u {
            Verdict::PhiFamily { k }
        } else {
            Verdict::CounterexampleCandidate
        }
    } else {
        Verdict::CounterexampleCandidate
    };
    Ok(out)
}

/// Classifies a morphism by the fixed points it generates, looking at the
/// first `depth_chars` letters of each.
pub fn classify(morphism: &Morphism, depth_chars: usize) -> Result<Classification> {
    if depth_chars < 64 {
        return Err(Error::InvalidArgument("classification depth must be at least 64".into()));
    }
    if !morphism.is_primitive() {
        return Ok(Classification::bare(morphism, Verdict::NotPrimitive));
    }
    let letters = morphism.prolongable_letters();
    if letters.is_empty() {
        return Ok(Classification::bare(morphism, Verdict::NotProlongable));
    }
    let mut best: Option<Classification> = None;
    for a in letters {
        let c = classify_fixed_point(morphism, a, depth_chars)?;
        if best.as_ref().is_none_or(|b| c.verdict.rank() > b.verdict.rank()) {
            best = Some(c);
        }
    }
    Ok(best.expect("at least one prolongable letter"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub summary: bool,
    pub max_image_len: usize,
    pub depth: usize,
    pub total: usize,
    pub counts: BTreeMap<&'static str, usize>,
    pub counterexample_candidates: usize,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub records: Vec<Classification>,
    pub summary: SearchSummary,
}

impl SearchReport {
    pub fn has_counterexamples(&self) -> bool {
        self.summary.counterexample_candidates > 0
    }

    /// One JSON object per morphism, then the summary object.
    pub fn write_json_lines<W: Write>(&self, mut out: W) -> io::Result<()> {
        for record in &self.records {
            serde_json::to_writer(&mut out, &SearchRecord::from(record))?;
            out.write_all(b"\n")?;
        }
        serde_json::to_writer(&mut out, &self.summary)?;
        out.write_all(b"\n")
    }
}

#[derive(Serialize)]
struct SearchRecord {
    morphism: String,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    period: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    position: Option<usize>,
    letter: Option<String>,
    certified_depth: usize,
    inferred_delta: Option<String>,
    inferred_theta: Option<String>,
    chain_delta: Option<String>,
    chain_theta: Option<String>,
    evidence: Option<String>,
}

impl From<&Classification> for SearchRecord {
    fn from(c: &Classification) -> Self {
        let (k, period, position) = match c.verdict {
            Verdict::PhiFamily { k } => (Some(k), None, None),
            Verdict::PeriodicFixedPoint { period } => (None, Some(period), None),
            Verdict::NotPseudostandard { position } => (None, None, Some(position)),
            _ => (None, None, None),
        };
        SearchRecord {
            morphism: c.morphism.to_string(),
            verdict: c.verdict.name(),
            k,
            period,
            position,
            letter: c.letter.map(|a| a.to_string()),
            certified_depth: c.certified_depth,
            inferred_delta: c.inferred.as_ref().map(|l| l.delta.to_string()),
            inferred_theta: c.inferred.as_ref().map(|l| l.theta.to_string()),
            chain_delta: c.chain.as_ref().map(|(d, _)| to_string(d)),
            chain_theta: c.chain.as_ref().map(|(_, t)| t.iter().map(|x| x.as_char()).collect()),
            evidence: c.evidence.as_ref().map(|w| w.to_string()),
        }
    }
}

/// Classifies every morphism with images up to `max_image_len`. With
/// `jobs > 1` the work is spread over a thread pool; results keep
/// enumeration order either way.
pub fn search(max_image_len: usize, depth_chars: usize, jobs: usize) -> Result<SearchReport> {
    let morphisms: Vec<Morphism> = enumerate_morphisms(max_image_len).collect();
    let records: Vec<Classification> = if jobs <= 1 {
        morphisms.iter().map(|m| classify(m, depth_chars)).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        pool.install(|| morphisms.par_iter().map(|m| classify(m, depth_chars)).collect::<Result<_>>())?
    };
    let mut counts = BTreeMap::new();
    for r in &records {
        *counts.entry(r.verdict.name()).or_insert(0) += 1;
    }
    let counterexample_candidates = counts.get("CounterexampleCandidate").copied().unwrap_or(0);
    Ok(SearchReport {
        summary: SearchSummary {
            summary: true,
            max_image_len,
            depth: depth_chars,
            total: records.len(),
            counts,
            counterexample_candidates,
        },
        records,
    })
}
