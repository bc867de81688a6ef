use super::{check_sizes, ActionOperad, GenWord, OperadError, Verdict};
use crate::perm::Perm;

/// The symmetric groups with `π` the identity.
#[derive(Debug, Clone, Copy, Default)]
pub struct Symmetric;

impl ActionOperad for Symmetric {
    type Elem = Perm;

    fn name(&self) -> &str {
        "sym"
    }

    fn arity(&self, g: &Perm) -> usize {
        g.arity()
    }

    fn pi(&self, g: &Perm) -> Perm {
        g.clone()
    }

    fn identity(&self, n: usize) -> Perm {
        Perm::identity(n)
    }

    fn mul(&self, g: &Perm, h: &Perm) -> Result<Perm, OperadError> {
        Ok(g.compose(h)?)
    }

    fn inv(&self, g: &Perm) -> Perm {
        g.inverse()
    }

    fn beta(&self, hs: &[Perm]) -> Perm {
        Perm::block_sum(hs)
    }

    fn delta(&self, g: &Perm, sizes: &[usize]) -> Result<Perm, OperadError> {
        check_sizes(g.arity(), sizes)?;
        Ok(g.block_perm(sizes)?)
    }

    fn equal(&self, a: &Perm, b: &Perm) -> Verdict {
        if a == b {
            Verdict::Equal
        } else {
            Verdict::Distinct("pi".into())
        }
    }

    fn elements(&self, n: usize) -> Option<Vec<Perm>> {
        Some(Perm::all(n))
    }

    fn generators(&self, n: usize) -> Vec<Perm> {
        (1..n).map(|i| Perm::transposition(n, i)).collect()
    }

    fn factor(&self, g: &Perm) -> GenWord {
        g.adjacent_factorization()
            .into_iter()
            .map(|i| (i - 1, false))
            .collect()
    }

    fn relations(&self, n: usize) -> Vec<(GenWord, GenWord)> {
        let mut rels = Vec::new();
        for i in 0..n.saturating_sub(1) {
            rels.push((vec![(i, false), (i, false)], vec![]));
        }
        for i in 0..n.saturating_sub(1) {
            for j in i + 2..n.saturating_sub(1) {
                rels.push((vec![(i, false), (j, false)], vec![(j, false), (i, false)]));
            }
        }
        for i in 0..n.saturating_sub(2) {
            let (a, b) = ((i, false), (i + 1, false));
            rels.push((vec![a, b, a], vec![b, a, b]));
        }
        rels
    }

    fn parse_element(&self, text: &str, arity: usize) -> Result<Perm, OperadError> {
        let p: Perm = text.parse().map_err(|e: crate::perm::PermError| OperadError::Parse {
            text: text.into(),
            arity,
            reason: e.to_string(),
        })?;
        if p.arity() != arity {
            return Err(OperadError::ArityMismatch {
                expected: arity,
                found: p.arity(),
            });
        }
        Ok(p)
    }

    fn render(&self, g: &Perm) -> String {
        g.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn mu_examples() {
        let s = Symmetric;
        assert_eq!(s.mu(&Perm::identity(1), &[p("[2,3,1]")]).unwrap(), p("[2,3,1]"));
        assert_eq!(s.delta(&p("[2,1]"), &[1, 2]).unwrap(), p("[3,1,2]"));
        assert_eq!(s.beta(&[Perm::identity(1), p("[2,1]")]), p("[1,3,2]"));
        assert_eq!(
            s.mu(&p("[2,1]"), &[Perm::identity(1), p("[2,1]")]).unwrap(),
            p("[3,2,1]")
        );
        let g = p("[3,1,2]");
        let es = [Perm::identity(2), Perm::identity(0), Perm::identity(1)];
        assert_eq!(s.mu(&g, &es).unwrap(), s.delta(&g, &[2, 0, 1]).unwrap());
    }

    #[test]
    fn relations_hold_and_factor_roundtrips() {
        let s = Symmetric;
        for n in 0..=5 {
            for (l, r) in s.relations(n) {
                assert_eq!(s.eval_gen_word(n, &l).unwrap(), s.eval_gen_word(n, &r).unwrap());
            }
            for g in Perm::all(n) {
                assert_eq!(s.eval_gen_word(n, &s.factor(&g)).unwrap(), g);
            }
        }
    }
}
