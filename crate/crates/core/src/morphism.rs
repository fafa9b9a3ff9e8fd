//! Binary morphisms and their fixed points.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, ParseError, Result};
use crate::word::{Letter, Word};

/// A nonerasing morphism of `{0,1}*`, given by the images of both letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    images: [Word; 2],
}

/// `m[a][b]` = number of occurrences of `b` in the image of `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix(pub [[u64; 2]; 2]);

impl IncidenceMatrix {
    pub fn mul(&self, other: &IncidenceMatrix) -> IncidenceMatrix {
        let mut out = [[0u64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..2).map(|t| self.0[i][t].saturating_mul(other.0[t][j])).fold(0, u64::saturating_add);
            }
        }
        IncidenceMatrix(out)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().flatten().all(|&c| c > 0)
    }

    pub fn row_sum(&self, a: Letter) -> u64 {
        self.0[a.index()].iter().sum()
    }
}

impl Morphism {
    pub fn new(image0: Word, image1: Word) -> Result<Self, ParseError> {
        if image0.is_empty() || image1.is_empty() {
            return Err(ParseError::ErasingMorphism);
        }
        Ok(Morphism {
            images: [image0, image1],
        })
    }

    /// `0 -> 0(110)^k`, `1 -> 1(001)^k`.
    pub fn phi_k(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        let image = |a: Letter| -> Word {
            let b = a.complement();
            std::iter::once(a).chain(std::iter::repeat_n([b, b, a], k).flatten()).collect()
        };
        Ok(Morphism {
            images: [image(Letter::Zero), image(Letter::One)],
        })
    }

    pub fn image(&self, a: Letter) -> &Word {
        &self.images[a.index()]
    }

    pub fn max_image_len(&self) -> usize {
        self.images[0].len().max(self.images[1].len())
    }

    pub fn apply(&self, w: &[Letter]) -> Word {
        let mut out = Vec::with_capacity(w.len() * self.max_image_len());
        for &a in w {
            out.extend_from_slice(self.image(a));
        }
        Word::from_letters(out)
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let mut m = [[0u64; 2]; 2];
        for a in Letter::ALL {
            for &b in self.image(a).iter() {
                m[a.index()][b.index()] += 1;
            }
        }
        IncidenceMatrix(m)
    }

    /// Some power of the incidence matrix is positive. For 2x2 nonnegative
    /// matrices the Wielandt bound `(d-1)^2 + 1 = 2` makes `M` and `M^2`
    /// the only powers worth checking.
    pub fn is_primitive(&self) -> bool {
        let m = self.incidence_matrix();
        m.is_positive() || m.mul(&m).is_positive()
    }

    /// Letters `a` with `φ(a)` starting in `a` and `|φ(a)| >= 2`.
    pub fn prolongable_letters(&self) -> Vec<Letter> {
        Letter::ALL
            .into_iter()
            .filter(|&a| {
                let img = self.image(a);
                img.len() >= 2 && img[0] == a
            })
            .collect()
    }

    pub fn is_prolongable_on(&self, a: Letter) -> bool {
        self.prolongable_letters().contains(&a)
    }

    /// The length-`n_chars` prefix of `lim φ^n(a)`.
    pub fn fixed_point_prefix(&self, a: Letter, n_chars: usize) -> Result<Word> {
        if !self.is_prolongable_on(a) {
            return Err(Error::NotProlongable(a.as_char()));
        }
        let cap = n_chars + self.max_image_len();
        let mut cur: Vec<Letter> = vec![a];
        while cur.len() < n_chars {
            let mut next = Vec::with_capacity(cap.min(cur.len() * self.max_image_len()));
            for &b in &cur {
                next.extend_from_slice(self.image(b));
                if next.len() >= cap {
                    break;
                }
            }
            cur = next;
        }
        cur.truncate(n_chars);
        Ok(Word::from_letters(cur))
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0>{},1>{}", self.images[0], self.images[1])
    }
}

impl FromStr for Morphism {
    type Err = ParseError;

    /// `"0>IMAGE,1>IMAGE"`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let malformed = || ParseError::MalformedMorphism(s.to_string());
        let (left, right) = s.split_once(',').ok_or_else(malformed)?;
        let image0 = left.strip_prefix("0>").ok_or_else(malformed)?;
        let image1 = right.strip_prefix("1>").ok_or_else(malformed)?;
        Morphism::new(image0.parse()?, image1.parse()?)
    }
}

impl Serialize for Morphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
