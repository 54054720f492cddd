//! Graded dimensions of the simple quotient of a Verma module, computed by
//! the radical recursion: a vector lies in the maximal submodule exactly
//! when every raising operator sends it into the previous radical layer, so
//! the per-weight radical is a kernel computed level by level. The resulting
//! dimensions equal the Gram-matrix ranks per weight space.

use std::collections::HashMap;

use crate::exact::matrix::{Field, Matrix};

use super::ctx::VermaContext;
use super::rewrite::{reduce, weights_of_height, NcPoly, RewriteSystem, Word};

struct QuotientData<F: Field> {
    words: Vec<Word>,
    /// Quotient projection M_nu -> L_nu in the word basis; `None` rows mean
    /// the quotient is zero.
    proj: Matrix<F>,
}

/// Per-height dimensions of the simple quotient, up to `max_height`
/// inclusive. When `stop_at_zero` is set, the scan stops after the first
/// height with total dimension zero (valid for highest-weight modules, whose
/// graded support is an interval).
pub fn graded_simple_dims<F: Field>(
    system: &RewriteSystem,
    ctx: &VermaContext<F>,
    max_height: usize,
    stop_at_zero: bool,
) -> Vec<u64> {
    let rs = ctx.root_system().clone();
    let n = rs.rank();
    let mut dims = vec![1u64];
    let mut layers: HashMap<Vec<i64>, QuotientData<F>> = HashMap::new();
    layers.insert(
        vec![0; n],
        QuotientData {
            words: vec![vec![]],
            proj: Matrix::identity(1),
        },
    );
    for h in 1..=max_height {
        let mut level_total = 0u64;
        for nu in weights_of_height(&rs, h as i64) {
            let words = system.normal_words(&nu);
            if words.is_empty() {
                continue;
            }
            let p = words.len();
            // Stack the projected raising maps.
            let mut stacked_rows: Vec<Vec<F>> = vec![];
            for i in 0..n {
                if nu[i] == 0 {
                    continue;
                }
                let mut prev = nu.clone();
                prev[i] -= 1;
                let Some(lower) = layers.get(&prev) else {
                    continue;
                };
                if lower.proj.rows() == 0 {
                    continue;
                }
                // Raising matrix: column per word of M_nu, in the basis of
                // M_{nu - alpha_i}.
                let lower_index: HashMap<&Word, usize> =
                    lower.words.iter().enumerate().map(|(k, w)| (w, k)).collect();
                let mut a = Matrix::from_fn(lower.words.len(), p, |_, _| F::zero());
                for (col, w) in words.iter().enumerate() {
                    let image = raise(ctx, i, w);
                    let reduced = reduce(ctx.rules(), image);
                    for (u, c) in reduced.terms.iter() {
                        let row = *lower_index
                            .get(u)
                            .expect("reduced word is a normal word of the lower space");
                        a.set(row, col, a.at(row, col).add(c));
                    }
                }
                let projected = lower.proj.mul_mat(&a);
                for r in 0..projected.rows() {
                    stacked_rows.push(projected.row(r).to_vec());
                }
            }
            let (proj, dim_l) = if stacked_rows.is_empty() {
                (Matrix::from_fn(0, p, |_, _| F::zero()), 0)
            } else {
                let stacked = Matrix::from_rows(stacked_rows);
                let kernel = stacked.kernel_basis();
                quotient_projection(&kernel, p)
            };
            level_total += dim_l as u64;
            layers.insert(
                nu,
                QuotientData {
                    words,
                    proj,
                },
            );
        }
        dims.push(level_total);
        if stop_at_zero && level_total == 0 {
            break;
        }
    }
    dims
}

/// E_i applied to a word, up to the constant (q_i - q_i^{-1}) denominator:
/// delete each occurrence of the letter, weighting by the numerator of the
/// commutation bracket at the suffix weight. The omitted constant scales a
/// whole block of the stacked matrix, so kernels are unaffected.
fn raise<F: Field>(ctx: &VermaContext<F>, i: usize, w: &Word) -> NcPoly<F> {
    let n = ctx.root_system().rank();
    let mut out = NcPoly::zero();
    let mut suffix = vec![0i64; n];
    // Scan from the right so the suffix weight is incremental.
    for p in (0..w.len()).rev() {
        let letter = w[p] as usize;
        if letter == i {
            let coef = ctx.bracket_numerator(i, &suffix);
            if !coef.is_zero() {
                let mut sub: Word = Vec::with_capacity(w.len() - 1);
                sub.extend_from_slice(&w[..p]);
                sub.extend_from_slice(&w[p + 1..]);
                out.add_term(sub, coef);
            }
        }
        suffix[letter] += 1;
    }
    out
}

/// From a kernel basis (the radical) build the quotient projection matrix.
fn quotient_projection<F: Field>(kernel: &[Vec<F>], dim: usize) -> (Matrix<F>, usize) {
    if kernel.is_empty() {
        return (Matrix::identity(dim), dim);
    }
    let mut k = Matrix::from_rows(kernel.to_vec());
    let pivots = k.row_reduce();
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..dim).filter(|c| !pivot_set.contains(c)).collect();
    let rows: Vec<Vec<F>> = free
        .iter()
        .map(|&f| {
            let mut row = vec![F::zero(); dim];
            row[f] = F::one();
            for (s, &pcol) in pivots.iter().enumerate() {
                row[pcol] = k.at(s, f).neg();
            }
            row
        })
        .collect();
    let dim_l = rows.len();
    if rows.is_empty() {
        (Matrix::from_fn(0, dim, |_, _| F::zero()), 0)
    } else {
        (Matrix::from_rows(rows), dim_l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_int;
    use crate::rootsys::RootSystem;
    use crate::verma::ctx::{symbolic_context, SymbolicWeight};
    use crate::weights::ToralWeight;

    #[test]
    fn a1_finite_simple() {
        // L(q^2) is 3-dimensional with graded dims (1,1,1).
        let rs = RootSystem::build_str("A1").unwrap();
        let sys = RewriteSystem::build(&rs, 10).unwrap();
        let lam = rs.fundamental_weight(0).scale(&rat_int(2));
        let w = ToralWeight::linear(rs.clone(), &lam);
        let ctx = symbolic_context(&sys, SymbolicWeight::Toral(&w));
        let dims = graded_simple_dims(&sys, &ctx, 6, true);
        assert_eq!(dims, vec![1, 1, 1, 0]);
    }

    #[test]
    fn a1_verma_for_generic_torsion() {
        let rs = RootSystem::build_str("A1").unwrap();
        let sys = RewriteSystem::build(&rs, 10).unwrap();
        let w = crate::weights::parse_weight(&rs, "t=1/4,c=0").unwrap();
        let ctx = symbolic_context(&sys, SymbolicWeight::Toral(&w));
        let dims = graded_simple_dims(&sys, &ctx, 5, true);
        assert_eq!(dims, vec![1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn a2_adjoint_dims() {
        // L(q^rho) in A2: dimension 8, graded dims 1,2,2,2,1.
        let rs = RootSystem::build_str("A2").unwrap();
        let sys = RewriteSystem::build(&rs, 10).unwrap();
        let w = ToralWeight::linear(rs.clone(), rs.rho());
        let ctx = symbolic_context(&sys, SymbolicWeight::Toral(&w));
        let dims = graded_simple_dims(&sys, &ctx, 8, true);
        assert_eq!(dims, vec![1, 2, 2, 2, 1, 0]);
        assert_eq!(dims.iter().sum::<u64>(), 8);
    }

    #[test]
    fn a2_defining_dims() {
        let rs = RootSystem::build_str("A2").unwrap();
        let sys = RewriteSystem::build(&rs, 10).unwrap();
        let lam = rs.fundamental_weight(0);
        let w = ToralWeight::linear(rs.clone(), &lam);
        let ctx = symbolic_context(&sys, SymbolicWeight::Toral(&w));
        let dims = graded_simple_dims(&sys, &ctx, 6, true);
        assert_eq!(dims, vec![1, 1, 1, 0]);
    }
}
