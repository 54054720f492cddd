//! Degree-bounded rewriting for the negative part of a rank <= 2 quantized
//! enveloping algebra.
//!
//! Words in the generators F_i are rewritten by a system seeded with the
//! quantum Serre relations and completed by overlap resolution under the
//! degree-lexicographic order. Normal words of weight nu form a basis of the
//! graded piece; the Kostant-partition count certifies that the bounded
//! completion reached confluence.

use std::collections::BTreeMap;

use crate::exact::laurent::{LaurentPoly, VAR_Q};
use crate::exact::matrix::Field;
use crate::exact::RatFunc;
use crate::rootsys::{LatticeVector, Rs};

pub type Word = Vec<u8>;

/// Degree-lex order: length first, then lexicographic on letters.
fn word_cmp(a: &Word, b: &Word) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// A noncommutative polynomial: finite sum of words with field coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct NcPoly<F: Field> {
    pub terms: BTreeMap<Word, F>,
}

impl<F: Field> NcPoly<F> {
    pub fn zero() -> Self {
        NcPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, F::one());
        NcPoly { terms }
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = NcPoly::zero();
        for (w, x) in self.terms.iter() {
            out.add_term(w.clone(), x.mul(c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms.iter() {
            out.add_term(w.clone(), F::zero().sub(c));
        }
        out
    }

    /// Leading term in the degree-lex order.
    pub fn leading(&self) -> Option<(&Word, &F)> {
        self.terms.iter().max_by(|(a, _), (b, _)| word_cmp(a, b))
    }
}

/// One rewrite rule: lhs (a word) maps to a combination of smaller words.
#[derive(Clone, Debug)]
pub struct Rule<F: Field> {
    pub lhs: Word,
    pub rhs: Vec<(Word, F)>,
}

impl<F: Field> Rule<F> {
    fn rhs_poly(&self) -> NcPoly<F> {
        let mut p = NcPoly::zero();
        for (w, c) in self.rhs.iter() {
            p.add_term(w.clone(), c.clone());
        }
        p
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("rewriting engine supports rank <= 2, got type {0}")]
    UnsupportedType(String),
    #[error("bounded completion failed to reach confluence (weight {0:?}: {1} normal words, partition count {2})")]
    NonConfluent(Vec<i64>, usize, u64),
    #[error("requested height {height} above the system bound {bound}")]
    HeightTooLarge { height: usize, bound: usize },
}

/// A confluent-by-certification rewrite system up to a degree bound.
pub struct RewriteSystem {
    rs: Rs,
    height: usize,
    rules: Vec<Rule<RatFunc>>,
}

/// Quantum integer [m] in q^d, as a Laurent polynomial.
pub fn quantum_integer(m: i64, d: i64) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    let m_abs = m.abs();
    for k in 0..m_abs {
        p = p.add(&LaurentPoly::var_pow(VAR_Q, d * (m_abs - 1 - 2 * k)));
    }
    if m < 0 {
        p = p.neg();
    }
    p
}

/// Gaussian binomial [n choose k] in q^d.
fn quantum_binomial(n: i64, k: i64, d: i64) -> LaurentPoly {
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for r in 1..=k {
        num = num.mul(&quantum_integer(n - k + r, d));
        den = den.mul(&quantum_integer(r, d));
    }
    num.exact_div(&den).expect("Gaussian binomial is polynomial")
}

impl RewriteSystem {
    /// Build and complete the system for a rank <= 2 type, bounded at the
    /// given height. The normal-word count is certified against the Kostant
    /// partition function for all weights up to height min(height, 8).
    pub fn build(rs: &Rs, height: usize) -> Result<RewriteSystem, RewriteError> {
        if rs.rank() > 2 {
            return Err(RewriteError::UnsupportedType(rs.label().to_string()));
        }
        let mut rules: Vec<Rule<RatFunc>> = vec![];
        let n = rs.rank();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let a_ij = rs.cartan()[i][j];
                let big_n = 1 - a_ij;
                let d_i = rs.symmetrizers()[i];
                // Serre: sum_{s=0}^{N} (-1)^s [N choose s]_{q_i} F_i^{N-s} F_j F_i^s = 0.
                let mut poly: NcPoly<RatFunc> = NcPoly::zero();
                for s in 0..=big_n {
                    let mut w: Word = vec![];
                    w.extend(std::iter::repeat(i as u8).take((big_n - s) as usize));
                    w.push(j as u8);
                    w.extend(std::iter::repeat(i as u8).take(s as usize));
                    let mut c = RatFunc::from_poly(quantum_binomial(big_n, s, d_i));
                    if s % 2 == 1 {
                        c = c.neg();
                    }
                    poly.add_term(w, c);
                }
                // Reduce against the rules so far; orthogonal pairs yield the
                // same commutation relation twice.
                let reduced = reduce(&rules, poly);
                if let Some(rule) = rule_from_poly(&reduced) {
                    rules.push(rule);
                }
            }
        }
        complete(&mut rules, height);
        let system = RewriteSystem {
            rs: rs.clone(),
            height,
            rules,
        };
        // Certification: normal-form counts match the partition function.
        for h in 0..=height.min(8) {
            for nu in weights_of_height(rs, h as i64) {
                let count = system.normal_words(&nu).len() as u64;
                let expect = rs.kostant_partition(&LatticeVector::from_root_coords_i64(&nu));
                if count != expect {
                    return Err(RewriteError::NonConfluent(nu, count as usize, expect));
                }
            }
        }
        Ok(system)
    }

    pub fn root_system(&self) -> &Rs {
        &self.rs
    }

    pub fn height_bound(&self) -> usize {
        self.height
    }

    pub fn rules(&self) -> &[Rule<RatFunc>] {
        &self.rules
    }

    /// Normal (irreducible) words of the given weight, in deglex order.
    pub fn normal_words(&self, nu: &[i64]) -> Vec<Word> {
        let total: i64 = nu.iter().sum();
        if nu.iter().any(|&c| c < 0) {
            return vec![];
        }
        let mut remaining: Vec<i64> = nu.to_vec();
        let mut out = vec![];
        let mut prefix: Word = Vec::with_capacity(total as usize);
        self.normal_words_dfs(&mut remaining, &mut prefix, &mut out);
        out.sort_by(word_cmp);
        out
    }

    fn normal_words_dfs(&self, remaining: &mut Vec<i64>, prefix: &mut Word, out: &mut Vec<Word>) {
        if remaining.iter().all(|&c| c == 0) {
            out.push(prefix.clone());
            return;
        }
        for i in 0..remaining.len() {
            if remaining[i] == 0 {
                continue;
            }
            prefix.push(i as u8);
            // Prune if a rule lhs just became a suffix of the prefix.
            let reducible = self.rules.iter().any(|r| {
                r.lhs.len() <= prefix.len() && prefix[prefix.len() - r.lhs.len()..] == r.lhs[..]
            });
            if !reducible {
                remaining[i] -= 1;
                self.normal_words_dfs(remaining, prefix, out);
                remaining[i] += 1;
            }
            prefix.pop();
        }
    }

    /// Map rule coefficients into another field; None when evaluation fails
    /// (a denominator vanishing at the target point).
    pub fn map_rules<F: Field>(
        &self,
        f: &impl Fn(&RatFunc) -> Option<F>,
    ) -> Option<Vec<Rule<F>>> {
        let mut mapped = vec![];
        for r in &self.rules {
            let mut rhs = vec![];
            for (w, c) in r.rhs.iter() {
                rhs.push((w.clone(), f(c)?));
            }
            mapped.push(Rule {
                lhs: r.lhs.clone(),
                rhs,
            });
        }
        Some(mapped)
    }
}

/// Make a monic rewrite rule from the leading term of a relation.
fn rule_from_poly(p: &NcPoly<RatFunc>) -> Option<Rule<RatFunc>> {
    let (lhs, lead) = p.leading()?;
    let lhs = lhs.clone();
    let inv = lead.inv().neg();
    let rhs: Vec<(Word, RatFunc)> = p
        .terms
        .iter()
        .filter(|(w, _)| **w != lhs)
        .map(|(w, c)| (w.clone(), c.mul(&inv)))
        .collect();
    Some(Rule { lhs, rhs })
}

/// Reduce a polynomial to normal form.
pub fn reduce<F: Field>(rules: &[Rule<F>], mut poly: NcPoly<F>) -> NcPoly<F> {
    'outer: loop {
        // Find the largest reducible word.
        let mut target: Option<(Word, usize, usize)> = None; // word, rule, position
        for (w, _) in poly.terms.iter().rev() {
            for (ri, r) in rules.iter().enumerate() {
                if r.lhs.len() > w.len() {
                    continue;
                }
                for p in 0..=(w.len() - r.lhs.len()) {
                    if w[p..p + r.lhs.len()] == r.lhs[..] {
                        target = Some((w.clone(), ri, p));
                        break;
                    }
                }
                if target.is_some() {
                    break;
                }
            }
            if target.is_some() {
                break;
            }
        }
        let Some((w, ri, p)) = target else {
            break 'outer;
        };
        let c = poly.terms.remove(&w).unwrap();
        let rule = &rules[ri];
        for (mid, rc) in rule.rhs.iter() {
            let mut nw = Vec::with_capacity(w.len() - rule.lhs.len() + mid.len());
            nw.extend_from_slice(&w[..p]);
            nw.extend_from_slice(mid);
            nw.extend_from_slice(&w[p + rule.lhs.len()..]);
            poly.add_term(nw, c.mul(rc));
        }
    }
    poly
}

/// Overlap-resolution completion, bounded by word length.
fn complete(rules: &mut Vec<Rule<RatFunc>>, height: usize) {
    let mut queue: Vec<(usize, usize)> = vec![];
    for i in 0..rules.len() {
        for j in 0..rules.len() {
            queue.push((i, j));
        }
    }
    while let Some((i, j)) = queue.pop() {
        let overlaps = overlap_words(&rules[i].lhs, &rules[j].lhs, height);
        for (word, pi, pj) in overlaps {
            // Reduce the overlap word two ways and compare.
            let left = apply_at(&rules[i], &word, pi);
            let right = apply_at(&rules[j], &word, pj);
            let diff = reduce(rules, left.sub(&right));
            if diff.is_zero() {
                continue;
            }
            if let Some(rule) = rule_from_poly(&diff) {
                if rule.lhs.len() <= height {
                    let idx = rules.len();
                    rules.push(rule);
                    for k in 0..=idx {
                        queue.push((k, idx));
                        queue.push((idx, k));
                    }
                }
            }
        }
    }
}

/// Replace the rule lhs at position `p` of `word` by the rule rhs.
fn apply_at(rule: &Rule<RatFunc>, word: &Word, p: usize) -> NcPoly<RatFunc> {
    let mut out = NcPoly::zero();
    let tail = &word[p + rule.lhs.len()..];
    let rhs = rule.rhs_poly();
    for (mid, c) in rhs.terms.iter() {
        let mut nw = Vec::with_capacity(word.len() - rule.lhs.len() + mid.len());
        nw.extend_from_slice(&word[..p]);
        nw.extend_from_slice(mid);
        nw.extend_from_slice(tail);
        out.add_term(nw, c.clone());
    }
    out
}

/// Words containing lhs_a at pa and lhs_b at pb with a genuine overlap.
fn overlap_words(a: &Word, b: &Word, height: usize) -> Vec<(Word, usize, usize)> {
    let mut out = vec![];
    // b starts inside a (suffix of a = prefix of b), or b contained in a.
    for shift in 0..a.len() {
        let oend = (a.len() - shift).min(b.len());
        if a[shift..].iter().take(oend).ne(b.iter().take(oend)) {
            continue;
        }
        let len = (shift + b.len()).max(a.len());
        if len > height || (shift == 0 && b.len() == a.len()) {
            continue;
        }
        let mut w = a.clone();
        if shift + b.len() > a.len() {
            w.extend_from_slice(&b[a.len() - shift..]);
        }
        out.push((w, 0, shift));
    }
    // a contained strictly inside b.
    for shift in 1..b.len() {
        if shift + a.len() <= b.len() && b[shift..shift + a.len()] == a[..] {
            out.push((b.clone(), shift, 0));
        }
    }
    out
}

/// All nonnegative weight vectors of the given height (rank <= 2).
pub fn weights_of_height(rs: &Rs, h: i64) -> Vec<Vec<i64>> {
    let n = rs.rank();
    match n {
        1 => vec![vec![h]],
        2 => (0..=h).map(|a| vec![a, h - a]).collect(),
        _ => {
            let mut out = vec![];
            fn rec(n: usize, h: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
                if prefix.len() == n - 1 {
                    prefix.push(h);
                    out.push(prefix.clone());
                    prefix.pop();
                    return;
                }
                for c in 0..=h {
                    prefix.push(c);
                    rec(n, h - c, prefix, out);
                    prefix.pop();
                }
            }
            rec(n, h, &mut vec![], &mut out);
            out
        }
    }
}
