//! Finite permutations in one-line notation.
//!
//! A [`Perm`] of arity `n` stores the images `σ(1), …, σ(n)` of the points
//! `1..=n`. Products follow the right-first convention: `p.compose(q)` is the
//! permutation `i ↦ p(q(i))`, so a word `g₁g₂…g_k` read left to right denotes
//! `g₁·g₂·…·g_k` and `π` is a homomorphism for such words.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("{images:?} is not a permutation of 1..={n}")]
    NotBijective { n: usize, images: Vec<usize> },
    #[error("malformed permutation `{0}`")]
    Syntax(String),
}

/// A bijection of `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its one-line images, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::NotBijective { n, images });
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images })
    }

    /// The adjacent transposition `(i, i+1)` in `Σ_n`.
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "transposition ({i},{}) outside 1..={n}", i + 1);
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Perm { images }
    }

    pub fn arity(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-indexed point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self · other`, with `other` acting first.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.arity() != other.arity() {
            return Err(PermError::ArityMismatch {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        Ok(Perm {
            images: other.images.iter().map(|&j| self.images[j - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.arity()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Perm { images }
    }

    /// Block sum: block `i` acts on its own run of positions by a shifted copy of `ps[i]`.
    pub fn block_sum(ps: &[Perm]) -> Perm {
        let mut images = Vec::with_capacity(ps.iter().map(Perm::arity).sum());
        let mut offset = 0;
        for p in ps {
            images.extend(p.images.iter().map(|&v| v + offset));
            offset += p.arity();
        }
        Perm { images }
    }

    /// Block permutation: the `i`-th input block of width `sizes[i]` moves, order
    /// preserved, to output slot `self(i)`.
    pub fn block_perm(&self, sizes: &[usize]) -> Result<Perm, PermError> {
        if sizes.len() != self.arity() {
            return Err(PermError::ArityMismatch {
                expected: self.arity(),
                found: sizes.len(),
            });
        }
        let inv = self.inverse();
        // output slot j holds input block inv(j)
        let mut slot_offset = vec![0; self.arity()];
        let mut acc = 0;
        for j in 1..=self.arity() {
            slot_offset[j - 1] = acc;
            acc += sizes[inv.apply(j) - 1];
        }
        let mut images = Vec::with_capacity(acc);
        for (i, &k) in sizes.iter().enumerate() {
            let base = slot_offset[self.images[i] - 1];
            images.extend((1..=k).map(|t| base + t));
        }
        Ok(Perm { images })
    }

    /// Left action on tuples: position `i` of the result holds `xs[σ⁻¹(i)]`.
    pub fn permute<T: Clone>(&self, xs: &[T]) -> Vec<T> {
        assert_eq!(xs.len(), self.arity(), "tuple length must match arity");
        let mut out: Vec<Option<T>> = vec![None; xs.len()];
        for (i, x) in xs.iter().enumerate() {
            out[self.images[i] - 1] = Some(x.clone());
        }
        out.into_iter().map(|x| x.expect("bijection")).collect()
    }

    /// Indices `i₁, …, i_r` with `σ = (i₁,i₁+1)·…·(i_r,i_r+1)`.
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        // bubble sort the images; each swap at i is right multiplication by (i,i+1)
        let mut images = self.images.clone();
        let mut swaps = Vec::new();
        let n = images.len();
        for pass in 0..n {
            for i in 0..n.saturating_sub(pass + 1) {
                if images[i] > images[i + 1] {
                    images.swap(i, i + 1);
                    swaps.push(i + 1);
                }
            }
        }
        swaps.reverse();
        swaps
    }

    /// Every permutation of arity `n`, in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn go(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if current.len() == n {
                out.push(Perm {
                    images: current.clone(),
                });
                return;
            }
            for v in 1..=n {
                if !used[v - 1] {
                    used[v - 1] = true;
                    current.push(v);
                    go(n, current, used, out);
                    current.pop();
                    used[v - 1] = false;
                }
            }
        }
        go(n, &mut current, &mut used, &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = PermError;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Perm::from_images(images)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.images
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Perm {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| PermError::Syntax(s.to_string()))?;
        let images = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| PermError::Syntax(s.to_string()))?
        };
        Perm::from_images(images)
    }
}
