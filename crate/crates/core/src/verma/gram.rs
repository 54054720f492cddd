//! Contravariant Gram matrices on Verma weight spaces.
//!
//! The form value on a pair of basis words is computed by the raising
//! recursion: the first letter of the row word is an E_i in disguise, moved
//! through the column word; each occurrence of F_i contributes the K-bracket
//! of the weight shifted by the suffix. Free words (not normal forms) appear
//! during the recursion, so results are memoized on word pairs.

use std::collections::HashMap;

use crate::exact::matrix::{Field, Matrix};

use super::ctx::VermaContext;
use super::rewrite::Word;

/// A Gram matrix with its basis words.
pub struct Gram<F: Field> {
    pub nu: Vec<i64>,
    pub basis: Vec<Word>,
    pub matrix: Matrix<F>,
}

pub struct GramEngine<'a, F: Field> {
    ctx: &'a VermaContext<F>,
    memo: HashMap<(Word, Word), F>,
}

impl<'a, F: Field> GramEngine<'a, F> {
    pub fn new(ctx: &'a VermaContext<F>) -> Self {
        GramEngine {
            ctx,
            memo: HashMap::new(),
        }
    }

    /// S(u, w) scaled by the constant prod over letters i of u of
    /// (q_i - q_i^{-1}): the recursion stays polynomial this way.
    fn scaled_pairing(&mut self, u: &Word, w: &Word) -> F {
        if u.is_empty() {
            debug_assert!(w.is_empty());
            return F::one();
        }
        if let Some(v) = self.memo.get(&(u.clone(), w.clone())) {
            return v.clone();
        }
        let i = u[0] as usize;
        let rest: Word = u[1..].to_vec();
        let n = self.ctx.root_system().rank();
        let mut acc = F::zero();
        // Suffix weights of w, scanning once from the right.
        for p in 0..w.len() {
            if w[p] as usize != i {
                continue;
            }
            let mut suffix = vec![0i64; n];
            for &letter in &w[p + 1..] {
                suffix[letter as usize] += 1;
            }
            let coef = self.ctx.bracket_numerator(i, &suffix);
            if coef.is_zero() {
                continue;
            }
            let mut sub: Word = Vec::with_capacity(w.len() - 1);
            sub.extend_from_slice(&w[..p]);
            sub.extend_from_slice(&w[p + 1..]);
            acc = acc.add(&coef.mul(&self.scaled_pairing(&rest, &sub)));
        }
        self.memo.insert((u.clone(), w.clone()), acc.clone());
        acc
    }

    /// S(u, w) on the free algebra (words of equal weight).
    pub fn pairing(&mut self, u: &Word, w: &Word) -> F {
        let mut v = self.scaled_pairing(u, w);
        for &letter in u.iter() {
            v = v.mul(self.ctx.denominator_inverse(letter as usize));
        }
        v
    }

    /// Gram matrix on the normal-word basis of the weight space.
    pub fn gram(&mut self, basis: &[Word], nu: &[i64]) -> Gram<F> {
        let k = basis.len();
        let mut rows = Vec::with_capacity(k);
        for u in basis {
            let mut scale = F::one();
            for &letter in u.iter() {
                scale = scale.mul(self.ctx.denominator_inverse(letter as usize));
            }
            let mut row = Vec::with_capacity(k);
            for w in basis {
                row.push(self.scaled_pairing(u, w).mul(&scale));
            }
            rows.push(row);
        }
        Gram {
            nu: nu.to_vec(),
            basis: basis.to_vec(),
            matrix: Matrix::from_rows(rows),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::laurent::VAR_Q;
    use crate::exact::rational::rat_int;
    use crate::exact::RatFunc;
    use crate::rootsys::RootSystem;
    use crate::verma::ctx::{symbolic_context, SymbolicWeight};
    use crate::verma::rewrite::RewriteSystem;
    use crate::weights::ToralWeight;

    fn qpow(e: i64) -> RatFunc {
        RatFunc::from_poly(crate::exact::LaurentPoly::var_pow(VAR_Q, e))
    }

    #[test]
    fn a1_gram_matches_sl2_formula() {
        // S(F^k, F^k) = prod_{j=1}^{k} [j]_q [m - j + 1]_q at Lambda = q^m.
        let rs = RootSystem::build_str("A1").unwrap();
        let sys = RewriteSystem::build(&rs, 10).unwrap();
        for m in 0..4i64 {
            let lam = rs.fundamental_weight(0).scale(&rat_int(m));
            let w = ToralWeight::linear(rs.clone(), &lam);
            let ctx = symbolic_context(&sys, SymbolicWeight::Toral(&w));
            let mut engine = GramEngine::new(&ctx);
            for k in 0..=4usize {
                let basis = sys.normal_words(&[k as i64]);
                let g = engine.gram(&basis, &[k as i64]);
                let got = g.matrix.at(0, 0).clone();
                let mut expect = RatFunc::one();
                for j in 1..=k as i64 {
                    // [j]_q
                    let mut qj = RatFunc::zero();
                    for s in 0..j {
                        qj = qj.add(&qpow(j - 1 - 2 * s));
                    }
                    let mut qm = RatFunc::zero();
                    let arg = m - j + 1;
                    for s in 0..arg.abs() {
                        qm = qm.add(&qpow(arg.abs() - 1 - 2 * s));
                    }
                    if arg < 0 {
                        qm = qm.neg();
                    }
                    expect = expect.mul(&qj).mul(&qm);
                }
                assert_eq!(got, expect, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn gram_is_symmetric() {
        let rs = RootSystem::build_str("B2").unwrap();
        let sys = RewriteSystem::build(&rs, 8).unwrap();
        let ctx = symbolic_context(&sys, SymbolicWeight::Symbolic);
        let mut engine = GramEngine::new(&ctx);
        for nu in [[1, 1], [1, 2], [2, 1], [2, 2]] {
            let basis = sys.normal_words(&nu.map(i64::from));
            let nu64: Vec<i64> = nu.iter().map(|&x| x as i64).collect();
            let g = engine.gram(&basis, &nu64);
            for i in 0..basis.len() {
                for j in 0..basis.len() {
                    assert_eq!(g.matrix.at(i, j), g.matrix.at(j, i), "nu={nu:?}");
                }
            }
        }
    }

    #[test]
    fn trivial_weight_space() {
        let rs = RootSystem::build_str("A2").unwrap();
        let sys = RewriteSystem::build(&rs, 8).unwrap();
        let w = ToralWeight::trivial(rs.clone());
        let ctx = symbolic_context(&sys, SymbolicWeight::Toral(&w));
        let mut engine = GramEngine::new(&ctx);
        let g = engine.gram(&sys.normal_words(&[0, 0]), &[0, 0]);
        assert_eq!(g.matrix.rows(), 1);
        assert!(g.matrix.at(0, 0).is_one());
        // A2 at q^0, nu = alpha_1: single entry [0]-type bracket = 0.
        let g = engine.gram(&sys.normal_words(&[1, 0]), &[1, 0]);
        assert_eq!(g.matrix.rows(), 1);
        assert!(g.matrix.at(0, 0).is_zero());
        assert_eq!(g.matrix.rank_ff(), 0);
    }
}
