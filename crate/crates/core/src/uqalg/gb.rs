//! Truncated noncommutative Gröbner completion of the quantum Serre ideal.

use std::sync::{Arc, Mutex};

use rustc_hash::FxHashMap;

use crate::freealg::{NCPoly, Side, Word};
use crate::scalar::{q_num, Scalar};

/// A reduction rule `lead -> tail`, where every word of `tail` is
/// deglex-smaller than `lead`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lead: Word,
    pub tail: NCPoly,
}

impl Rule {
    /// The relation `lead - tail`.
    pub fn relation(&self) -> NCPoly {
        let mut p = self.tail.scale(&Scalar::from_int(-1));
        p.add_term(self.lead.clone(), &Scalar::one());
        p
    }
}

/// Interreduced rewriting system for one side of `U_q(sl_{N+1})`, complete
/// for words of length at most `bound`.
#[derive(Debug)]
pub struct RewriteSystem {
    side: Side,
    rank: usize,
    bound: usize,
    rules: Vec<Rule>,
    by_lead: FxHashMap<Word, usize>,
    max_lead: usize,
    cache: Mutex<FxHashMap<Word, Arc<NCPoly>>>,
}

/// Quantum Serre relations for rank `n` as polynomials in one alphabet.
pub fn serre_relations(rank: usize) -> Vec<NCPoly> {
    let two = q_num(2);
    let mut out = Vec::new();
    for i in 1..=rank as u8 {
        for j in 1..=rank as u8 {
            if i == j {
                continue;
            }
            if i.abs_diff(j) > 1 {
                if i > j {
                    out.push(NCPoly::word(&[i, j]).sub(&NCPoly::word(&[j, i])));
                }
            } else {
                let mut p = NCPoly::word(&[i, i, j]);
                p.add_term(Word::from_slice(&[i, j, i]), &-&two);
                p.add_term(Word::from_slice(&[j, i, i]), &Scalar::one());
                out.push(p);
            }
        }
    }
    out
}

impl RewriteSystem {
    /// Completes the Serre ideal degree by degree up to `bound`.
    pub fn complete(side: Side, rank: usize, bound: usize) -> Self {
        let mut sys = RewriteSystem {
            side,
            rank,
            bound,
            rules: Vec::new(),
            by_lead: FxHashMap::default(),
            max_lead: 0,
            cache: Mutex::new(FxHashMap::default()),
        };
        let gens = serre_relations(rank);
        for d in 2..=bound {
            let mut candidates: Vec<NCPoly> =
                gens.iter().filter(|g| g.max_degree() == d).cloned().collect();
            candidates.extend(sys.compositions(d));
            let first_new = sys.rules.len();
            for cand in candidates {
                let r = sys.reduce(&cand);
                if let Some((lead, c)) = r.leading() {
                    let lead = lead.clone();
                    let inv = c.inv().expect("nonzero leading coefficient");
                    let mut tail = r.scale(&-&inv);
                    tail.pop_leading();
                    sys.push_rule(Rule { lead, tail });
                }
            }
            for k in first_new..sys.rules.len() {
                let tail = sys.reduce(&sys.rules[k].tail);
                sys.rules[k].tail = tail;
            }
        }
        sys
    }

    fn push_rule(&mut self, rule: Rule) {
        self.max_lead = self.max_lead.max(rule.lead.len());
        self.by_lead.insert(rule.lead.clone(), self.rules.len());
        self.rules.push(rule);
    }

    /// Overlap compositions of existing rules whose ambiguity word has length `d`.
    fn compositions(&self, d: usize) -> Vec<NCPoly> {
        let mut out = Vec::new();
        for a in &self.rules {
            for b in &self.rules {
                let (la, lb) = (a.lead.as_slice(), b.lead.as_slice());
                if la.len() + lb.len() <= d {
                    continue;
                }
                let k = la.len() + lb.len() - d;
                if k == 0 || k >= la.len() || k >= lb.len() {
                    continue;
                }
                if la[la.len() - k..] != lb[..k] {
                    continue;
                }
                let left = a.relation().wrap(&[], &lb[k..]);
                let right = b.relation().wrap(&la[..la.len() - k], &[]);
                out.push(left.sub(&right));
            }
        }
        out
    }

    /// The same rule set read in the other alphabet (the Serre relations
    /// have the same shape on both sides).
    pub fn with_side(&self, side: Side) -> Self {
        RewriteSystem {
            side,
            rank: self.rank,
            bound: self.bound,
            rules: self.rules.clone(),
            by_lead: self.by_lead.clone(),
            max_lead: self.max_lead,
            cache: Mutex::new(FxHashMap::default()),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Leftmost occurrence of a rule's leading word inside `w`.
    fn find_redex(&self, w: &[u8]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            let max_len = self.max_lead.min(w.len() - start);
            for len in 2..=max_len {
                if let Some(&idx) = self.by_lead.get(&Word::from_slice(&w[start..start + len])) {
                    return Some((start, idx));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w.as_slice()).is_none()
    }

    /// Full reduction, always rewriting the deglex-largest reducible word.
    pub fn reduce(&self, p: &NCPoly) -> NCPoly {
        let mut work = p.clone();
        let mut done = NCPoly::zero();
        while let Some((w, c)) = work.pop_leading() {
            match self.find_redex(w.as_slice()) {
                None => done.add_term(w, &c),
                Some((pos, idx)) => {
                    let rule = &self.rules[idx];
                    let s = w.as_slice();
                    let expansion = rule.tail.wrap(&s[..pos], &s[pos + rule.lead.len()..]);
                    work.add_scaled(&expansion, &c);
                }
            }
        }
        done
    }

    /// Memoized normal form of a single word.
    pub fn nf_word(&self, w: &Word) -> Arc<NCPoly> {
        if let Some(hit) = self.cache.lock().unwrap().get(w) {
            return hit.clone();
        }
        let result = match self.find_redex(w.as_slice()) {
            None => NCPoly::term(w.clone(), Scalar::one()),
            Some((pos, idx)) => {
                let rule = &self.rules[idx];
                let s = w.as_slice();
                let (pre, post) = (&s[..pos], &s[pos + rule.lead.len()..]);
                let mut acc = NCPoly::zero();
                for (t, c) in rule.tail.terms() {
                    let mut v = Word::from_slice(pre);
                    v.0.extend_from_slice(t.as_slice());
                    v.0.extend_from_slice(post);
                    acc.add_scaled(&self.nf_word(&v), c);
                }
                acc
            }
        };
        let result = Arc::new(result);
        self.cache.lock().unwrap().insert(w.clone(), result.clone());
        result
    }

    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        let mut acc = NCPoly::zero();
        for (w, c) in p.terms() {
            acc.add_scaled(&self.nf_word(w), c);
        }
        acc
    }

    /// All irreducible words with letter content `content`.
    pub fn irreducible_words(&self, content: &[i32]) -> Vec<Word> {
        let mut out = Vec::new();
        let mut remaining = content.to_vec();
        let total: i32 = content.iter().sum();
        let mut cur = Word::empty();
        self.grow(&mut cur, &mut remaining, total as usize, &mut out);
        out
    }

    fn grow(&self, cur: &mut Word, remaining: &mut [i32], total: usize, out: &mut Vec<Word>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for i in 0..remaining.len() {
            if remaining[i] == 0 {
                continue;
            }
            remaining[i] -= 1;
            cur.0.push(i as u8 + 1);
            // Irreducibility is inherited by prefixes, so prune on the suffix.
            let s = cur.as_slice();
            let ok = (2..=self.max_lead.min(s.len()))
                .all(|len| !self.by_lead.contains_key(&Word::from_slice(&s[s.len() - len..])));
            if ok {
                self.grow(cur, remaining, total, out);
            }
            cur.0.pop();
            remaining[i] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_leading_words() {
        let sys = RewriteSystem::complete(Side::E, 2, 3);
        let leads: Vec<_> = sys.rules().iter().map(|r| r.lead.clone()).collect();
        assert!(leads.contains(&Word::from_slice(&[2, 1, 1])));
        assert!(leads.contains(&Word::from_slice(&[2, 2, 1])));
        assert_eq!(leads.len(), 2);
    }

    #[test]
    fn rank_one_is_empty() {
        for bound in [3, 6, 9] {
            assert!(RewriteSystem::complete(Side::E, 1, bound).rules().is_empty());
        }
    }

    #[test]
    fn serre_relations_reduce_to_zero() {
        for n in 2..=4 {
            let sys = RewriteSystem::complete(Side::E, n, 6);
            for r in serre_relations(n) {
                assert!(sys.reduce(&r).is_zero());
                assert!(sys.normal_form(&r.wrap(&[1], &[n as u8])).is_zero());
            }
        }
    }

    #[test]
    fn interreduced() {
        let sys = RewriteSystem::complete(Side::E, 3, 7);
        for (k, r) in sys.rules().iter().enumerate() {
            for (j, other) in sys.rules().iter().enumerate() {
                if j != k {
                    let o = other.lead.as_slice();
                    let contains = r.lead.as_slice().windows(o.len()).any(|win| win == o);
                    assert!(!contains);
                }
            }
            for (w, _) in r.tail.terms() {
                assert!(sys.is_irreducible(w));
                assert!(w < &r.lead);
            }
        }
    }

    #[test]
    fn nf_word_matches_reduce() {
        let sys = RewriteSystem::complete(Side::F, 3, 6);
        for w in [[2u8, 1, 1, 3, 2, 2], [3, 3, 2, 1, 2, 1], [3, 2, 1, 3, 2, 1]] {
            let p = NCPoly::word(&w);
            assert_eq!(*sys.nf_word(&Word::from_slice(&w)), sys.reduce(&p));
        }
    }
}
