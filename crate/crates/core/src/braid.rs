//! Braid groups `B_n` as an action operad.
//!
//! `σᵢ` maps to the transposition `(i, i+1)`. The diagonal of `σᵢ` crosses the
//! `kᵢ`-strand block positively over the `k_{i+1}`-strand block to its right.

use std::fmt;

use crate::operad::words::{word_pi, FamilyGen, WordOperad};
use crate::operad::OperadError;
use crate::perm::Perm;
use crate::rewrite::{Generator, Invariant, InvariantValue, Letter, Relation, RelationSystem, Word};

/// The Artin generator `σᵢ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidGen(pub u16);

pub type BraidWord = Word<BraidGen>;
pub type Braid = WordOperad<BraidGen>;

impl Generator for BraidGen {
    fn involutive(&self) -> bool {
        false
    }

    fn valid_at(&self, n: usize) -> bool {
        self.0 >= 1 && (self.0 as usize) < n
    }

    fn render(&self, inverse: bool) -> String {
        if inverse {
            format!("B{}", self.0)
        } else {
            format!("b{}", self.0)
        }
    }
}

impl fmt::Display for BraidGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}", self.0)
    }
}

fn sigma(i: usize) -> Letter<BraidGen> {
    Letter::pos(BraidGen(i as u16))
}

pub fn braid_pi(w: &BraidWord) -> Perm {
    word_pi(w)
}

pub fn braid_beta(ws: &[BraidWord]) -> BraidWord {
    crate::operad::shift_concat(ws, |g, by| g.shift(by))
}

/// Positive crossing of the `a` strands starting at `p` over the `b` strands
/// right after them, as a word in `B_n`.
pub fn block_cross(p: usize, a: usize, b: usize, n: usize) -> Result<BraidWord, OperadError> {
    if p == 0 || (a > 0 && b > 0 && p + a + b - 1 > n) {
        return Err(OperadError::Bounds(format!(
            "blocks of {a} and {b} strands at {p} do not fit in {n}"
        )));
    }
    let mut letters = Vec::with_capacity(a * b);
    for step in 1..=a {
        // strand p+step-1 passes over the b-block
        for i in (p + step - 1..p + step - 1 + b).rev() {
            letters.push(sigma(i));
        }
    }
    Ok(Word::new(n, letters)?)
}

/// `δ(σᵢ)` at the given block sizes.
pub fn braid_delta_gen(i: usize, n: usize, sizes: &[usize]) -> Result<BraidWord, OperadError> {
    if !(1 <= i && i < n) {
        return Err(OperadError::Bounds(format!("b{i} needs 1 <= i < {n}")));
    }
    crate::operad::check_sizes(n, sizes)?;
    let before: usize = sizes[..i - 1].iter().sum();
    block_cross(before + 1, sizes[i - 1], sizes[i], sizes.iter().sum())
}

pub fn exponent_sum(w: &BraidWord) -> i64 {
    w.letters()
        .iter()
        .map(|l| if l.inverse { -1 } else { 1 })
        .sum()
}

/// Far commutation and braid relations, with `π` and the exponent sum as invariants.
pub fn braid_relations(n: usize) -> RelationSystem<BraidGen> {
    let word = |ls: &[usize]| Word::raw(n, ls.iter().map(|&i| sigma(i)).collect());
    let mut rels = Vec::new();
    for i in 1..n {
        for j in i + 2..n {
            rels.push(Relation {
                lhs: word(&[i, j]),
                rhs: word(&[j, i]),
            });
        }
    }
    for i in 1..n.saturating_sub(1) {
        rels.push(Relation {
            lhs: word(&[i, i + 1, i]),
            rhs: word(&[i + 1, i, i + 1]),
        });
    }
    let invariants = vec![
        Invariant::new("pi", |w: &BraidWord| InvariantValue::Perm(braid_pi(w))),
        Invariant::new("exponent-sum", |w: &BraidWord| InvariantValue::Int(exponent_sum(w))),
    ];
    RelationSystem::new(n, rels, invariants).expect("relations built at arity n")
}

/// Parses `b1 B2 …` (capital letters are inverses) or `e`.
pub fn parse_braid(text: &str, n: usize) -> Result<BraidWord, OperadError> {
    let err = |reason: String| OperadError::Parse {
        text: text.to_string(),
        arity: n,
        reason,
    };
    let mut letters = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == '·' || c == '*') {
        if tok.is_empty() || tok == "e" || tok == "ε" {
            continue;
        }
        let (inverse, digits) = if let Some(d) = tok.strip_prefix('b') {
            (false, d)
        } else if let Some(d) = tok.strip_prefix('B') {
            (true, d)
        } else {
            return Err(err(format!("unexpected `{tok}`")));
        };
        let i: u16 = digits.parse().map_err(|_| err(format!("bad index in `{tok}`")))?;
        let g = BraidGen(i);
        if !g.valid_at(n) {
            return Err(err(format!("{tok} needs 1 <= i < {n}")));
        }
        letters.push(Letter { gen: g, inverse });
    }
    Ok(Word::new(n, letters)?)
}

impl FamilyGen for BraidGen {
    const NAME: &'static str = "braid";

    fn all_at(n: usize) -> Vec<Self> {
        (1..n).map(|i| BraidGen(i as u16)).collect()
    }

    fn pi_at(&self, n: usize) -> Perm {
        Perm::transposition(n, self.0 as usize)
    }

    fn shift(&self, by: usize) -> Self {
        BraidGen(self.0 + by as u16)
    }

    fn delta_gen(&self, sizes: &[usize]) -> Result<Word<Self>, OperadError> {
        braid_delta_gen(self.0 as usize, sizes.len(), sizes)
    }

    fn relation_system(n: usize) -> RelationSystem<Self> {
        braid_relations(n)
    }

    fn parse_word(text: &str, n: usize) -> Result<Word<Self>, OperadError> {
        parse_braid(text, n)
    }

    fn finite_elements(n: usize) -> Option<Vec<Word<Self>>> {
        (n <= 1).then(|| vec![Word::empty(n)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::ActionOperad;
    use crate::rewrite::{EqResult, SearchBounds};

    fn w(text: &str, n: usize) -> BraidWord {
        parse_braid(text, n).unwrap()
    }

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    /// The block transposition of an `a`-block and a `b`-block at `p`, in `Σ_n`.
    fn embedded_swap(p: usize, a: usize, b: usize, n: usize) -> Perm {
        let swap = "[2,1]".parse::<Perm>().unwrap().block_perm(&[a, b]).unwrap();
        Perm::block_sum(&[Perm::identity(p - 1), swap, Perm::identity(n + 1 - p - a - b)])
    }

    #[test]
    fn pi_examples() {
        assert_eq!(braid_pi(&w("b1 b1", 2)), Perm::identity(2));
        assert_eq!(braid_pi(&w("e", 4)), Perm::identity(4));
        assert_eq!(braid_pi(&w("b1 b2", 3)), p("[2,3,1]"));
    }

    #[test]
    fn beta_examples() {
        assert_eq!(braid_beta(&[w("b1", 2), w("b1", 2)]), w("b1 b3", 4));
        assert!(braid_beta(&[w("e", 0), w("e", 0)]).is_empty());
        assert_eq!(braid_beta(&[w("b1 B2", 3)]), w("b1 B2", 3));
    }

    #[test]
    fn block_cross_examples() {
        assert_eq!(block_cross(1, 1, 1, 2).unwrap(), w("b1", 2));
        assert_eq!(block_cross(1, 2, 1, 3).unwrap(), w("b1 b2", 3));
        assert!(block_cross(1, 0, 3, 3).unwrap().is_empty());
        assert_eq!(exponent_sum(&block_cross(1, 2, 2, 4).unwrap()), 4);
    }

    #[test]
    fn block_cross_pi_is_block_transposition() {
        for a in 0..=5 {
            for b in 0..=5 - a {
                for p in 1..=2 {
                    let n = p + a + b + 1;
                    let c = block_cross(p, a, b, n).unwrap();
                    assert_eq!(braid_pi(&c), embedded_swap(p, a, b, n), "p={p} a={a} b={b}");
                    assert_eq!(exponent_sum(&c), (a * b) as i64);
                }
            }
        }
    }

    #[test]
    fn delta_gen_examples() {
        assert_eq!(braid_delta_gen(1, 2, &[1, 1]).unwrap(), w("b1", 2));
        assert_eq!(braid_delta_gen(1, 2, &[2, 1]).unwrap(), w("b1 b2", 3));
        let d = braid_delta_gen(2, 3, &[1, 1, 2]).unwrap();
        assert_eq!(d, w("b3 b2", 4));
        assert_eq!(braid_pi(&d), p("[1,3,2]").block_perm(&[1, 1, 2]).unwrap());
        assert!(braid_delta_gen(3, 3, &[1, 1, 1]).is_err());
    }

    #[test]
    fn exponent_sum_examples() {
        assert_eq!(exponent_sum(&w("b1 B1", 2)), 0);
        assert_eq!(exponent_sum(&Word::raw(3, w("b1 B1", 2).letters().to_vec())), 0);
        assert_eq!(exponent_sum(&w("b1 b2 b1", 3)), 3);
    }

    #[test]
    fn free_reduction() {
        assert_eq!(w("b1 B1 b2", 3), w("b2", 3));
        assert!(parse_braid("b3", 3).is_err());
        assert!(parse_braid("c1", 3).is_err());
    }

    #[test]
    fn invariants_respect_relations() {
        for n in 1..=6 {
            braid_relations(n).check_invariants().unwrap();
        }
    }

    #[test]
    fn delta_respects_braid_relation() {
        let br = Braid::new();
        let lhs = w("b1 b2 b1", 3);
        let rhs = w("b2 b1 b2", 3);
        for a in 0..=2 {
            for b in 0..=2 {
                for c in 0..=2 {
                    let s = [a, b, c];
                    let (x, y) = (br.delta(&lhs, &s).unwrap(), br.delta(&rhs, &s).unwrap());
                    let r = br.equal_words(&x, &y, SearchBounds::default()).unwrap();
                    let EqResult::Equal(path) = r else { panic!("sizes {s:?}: {r:?}") };
                    br.system(x.arity()).replay(&path, &x, &y).unwrap();
                }
            }
        }
    }

    #[test]
    fn delta_of_inverse_letter_is_inverse() {
        let br = Braid::new();
        let g = w("b1 B2", 3);
        for s in [[1, 2, 0], [2, 1, 2], [0, 3, 1]] {
            let d = br.delta(&g, &s).unwrap();
            let k = braid_pi(&g).permute(&s);
            let di = br.delta(&g.inverse(), &k).unwrap();
            assert!(d.mul(&di).unwrap().is_empty());
        }
    }
}
