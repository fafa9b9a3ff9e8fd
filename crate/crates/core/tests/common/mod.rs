//! Brute-force oracles shared by the integration tests. Deliberately naive:
//! quadratic or worse, written from the definitions only.
#![allow(dead_code)]

use pseudostandard::{Antimorphism, Letter};

pub fn letters(s: &str) -> Vec<Letter> {
    s.chars().map(|c| Letter::from_char(c).unwrap()).collect()
}

pub fn image(w: &[Letter], t: Antimorphism) -> Vec<Letter> {
    w.iter()
        .rev()
        .map(|&a| match t {
            Antimorphism::R => a,
            Antimorphism::E => a.complement(),
        })
        .collect()
}

pub fn is_pal(w: &[Letter], t: Antimorphism) -> bool {
    image(w, t) == w
}

/// Shortest θ-palindrome with prefix `w`, by trying every extension length
/// and every extension word.
pub fn brute_closure(w: &[Letter], t: Antimorphism) -> Vec<Letter> {
    for extra in 0..=w.len() {
        for bits in 0..1u32 << extra {
            let mut cand = w.to_vec();
            cand.extend((0..extra).map(|i| if bits >> i & 1 == 1 { Letter::One } else { Letter::Zero }));
            if is_pal(&cand, t) {
                return cand;
            }
        }
    }
    unreachable!("w followed by θ(w) is always a θ-palindrome")
}

/// Closure by scanning suffixes directly.
pub fn naive_closure(w: &[Letter], t: Antimorphism) -> Vec<Letter> {
    let s = (0..=w.len()).find(|&s| is_pal(&w[s..], t)).unwrap();
    let mut out = w.to_vec();
    out.extend(image(&w[..s], t));
    out
}

/// `w_{n+1} = (w_n δ_{n+1})^{ϑ_{n+1}}` with naive closures, for `steps` steps.
pub fn naive_chain(delta: &[Letter], theta: &[Antimorphism]) -> Vec<Vec<Letter>> {
    let mut w = Vec::new();
    let mut out = Vec::new();
    for (&d, &t) in delta.iter().zip(theta) {
        w.push(d);
        w = naive_closure(&w, t);
        out.push(w.clone());
    }
    out
}

pub fn pal_prefixes(u: &[Letter]) -> Vec<(usize, Antimorphism)> {
    let mut out = Vec::new();
    for len in 1..=u.len() {
        for t in Antimorphism::ALL {
            if is_pal(&u[..len], t) {
                out.push((len, t));
            }
        }
    }
    out
}

pub fn has_period(u: &[Letter], p: usize) -> bool {
    (p..u.len()).all(|i| u[i] == u[i - p])
}

/// Whether some closure chain, with any antimorphism at each step, follows
/// prefixes of `u` until it leaves the window. `false` refutes `u` as a
/// prefix of any generalized pseudostandard word.
pub fn some_chain_explains(u: &[Letter]) -> bool {
    fn go(u: &[Letter], w: Vec<Letter>) -> bool {
        if w.len() >= u.len() {
            return true;
        }
        let mut next = w.clone();
        next.push(u[w.len()]);
        for t in Antimorphism::ALL {
            let c = naive_closure(&next, t);
            if c.len() > u.len() || (u.starts_with(&c) && go(u, c)) {
                return true;
            }
        }
        false
    }
    go(u, Vec::new())
}

/// Smallest `r` such that every length-`n` window of `u` contains every
/// factor of length `len` that occurs in `u`.
pub fn uniform_window(u: &[Letter], len: usize) -> usize {
    use std::collections::HashMap;
    let mut last: HashMap<&[Letter], usize> = HashMap::new();
    let mut worst_gap = 0;
    for i in 0..=u.len() - len {
        let f = &u[i..i + len];
        let prev = last.insert(f, i);
        let gap = prev.map_or(i + 1, |p| i - p);
        worst_gap = worst_gap.max(gap);
    }
    for &p in last.values() {
        worst_gap = worst_gap.max(u.len() - len + 1 - p);
    }
    worst_gap + len - 1
}
