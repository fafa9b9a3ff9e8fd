//! Append-only index of longest θ-palindromic suffixes.
//!
//! One palindromic tree (eertree) per antimorphism. Nodes are the distinct
//! θ-palindromic factors seen so far; the suffix link of a node points to its
//! longest proper θ-palindromic suffix. For `E` no odd-length palindrome
//! exists, so extending from the imaginary root never succeeds and the chain
//! bottoms out at the empty word instead.

use crate::word::{Antimorphism, Letter, Word};

const IMAGINARY: u32 = 0;
const EMPTY: u32 = 1;

#[derive(Clone, Debug)]
struct Node {
    len: i64,
    link: u32,
    next: [Option<u32>; 2],
}

#[derive(Clone, Debug)]
struct PalTree {
    theta: Antimorphism,
    nodes: Vec<Node>,
    last: u32,
    history: Vec<u32>,
}

impl PalTree {
    fn new(theta: Antimorphism) -> Self {
        let root = |len| Node {
            len,
            link: IMAGINARY,
            next: [None, None],
        };
        PalTree {
            theta,
            nodes: vec![root(-1), root(0)],
            last: EMPTY,
            history: Vec::new(),
        }
    }

    /// Walks suffix links from `v` to the first node `P` such that
    /// `theta(a) P a` is a suffix of `word`, where `a = word[pos]`.
    fn extendable_from(&self, word: &[Letter], pos: usize, mut v: u32) -> Option<u32> {
        let a = word[pos];
        let want = self.theta.map_letter(a);
        loop {
            let len = self.nodes[v as usize].len;
            let j = pos as i64 - len - 1;
            if j >= 0 && word[j as usize] == want {
                return Some(v);
            }
            if v == IMAGINARY {
                return None;
            }
            v = self.nodes[v as usize].link;
        }
    }

    fn push(&mut self, word: &[Letter], pos: usize) {
        let a = word[pos];
        let Some(parent) = self.extendable_from(word, pos, self.last) else {
            self.last = EMPTY;
            self.history.push(EMPTY);
            return;
        };
        if let Some(child) = self.nodes[parent as usize].next[a.index()] {
            self.last = child;
            self.history.push(child);
            return;
        }
        let len = self.nodes[parent as usize].len + 2;
        let link = if len == 1 {
            EMPTY
        } else {
            let from = self.nodes[parent as usize].link;
            match self.extendable_from(word, pos, from) {
                Some(u) => self.nodes[u as usize].next[a.index()]
                    .expect("proper palindromic suffix already occurred"),
                None => EMPTY,
            }
        };
        let id = self.nodes.len() as u32;
        self.nodes.push(Node {
            len,
            link,
            next: [None, None],
        });
        self.nodes[parent as usize].next[a.index()] = Some(id);
        self.last = id;
        self.history.push(id);
    }

    fn len_of(&self, node: u32) -> usize {
        self.nodes[node as usize].len as usize
    }
}

/// Append-only word together with its longest `R`- and `E`-palindromic
/// suffix after every prefix. Appends are amortized constant time.
#[derive(Clone, Debug)]
pub struct PalSuffixIndex {
    word: Vec<Letter>,
    trees: [PalTree; 2],
}

impl Default for PalSuffixIndex {
    fn default() -> Self {
        Self::new()
    }
}

impl PalSuffixIndex {
    pub fn new() -> Self {
        Self::with_capacity(0)
    }

    pub fn with_capacity(cap: usize) -> Self {
        PalSuffixIndex {
            word: Vec::with_capacity(cap),
            trees: [PalTree::new(Antimorphism::R), PalTree::new(Antimorphism::E)],
        }
    }

    fn tree(&self, theta: Antimorphism) -> &PalTree {
        match theta {
            Antimorphism::R => &self.trees[0],
            Antimorphism::E => &self.trees[1],
        }
    }

    pub fn push(&mut self, a: Letter) {
        self.word.push(a);
        let pos = self.word.len() - 1;
        for tree in &mut self.trees {
            tree.push(&self.word, pos);
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn letter(&self, i: usize) -> Letter {
        self.word[i]
    }

    pub fn into_word(self) -> Word {
        Word::from_letters(self.word)
    }

    /// Longest `theta`-palindromic suffix length of the whole current word.
    pub fn longest(&self, theta: Antimorphism) -> usize {
        let tree = self.tree(theta);
        tree.len_of(tree.last)
    }

    /// Longest `theta`-palindromic suffix length of the prefix of length
    /// `prefix_len` (`prefix_len <= len()`).
    pub fn longest_at(&self, theta: Antimorphism, prefix_len: usize) -> usize {
        if prefix_len == 0 {
            return 0;
        }
        let tree = self.tree(theta);
        tree.len_of(tree.history[prefix_len - 1])
    }

    /// Number of distinct nonempty `theta`-palindromic factors seen so far.
    pub fn distinct_palindromes(&self, theta: Antimorphism) -> usize {
        self.tree(theta).nodes.len() - 2
    }
}

impl Extend<Letter> for PalSuffixIndex {
    fn extend<I: IntoIterator<Item = Letter>>(&mut self, iter: I) {
        for a in iter {
            self.push(a);
        }
    }
}
