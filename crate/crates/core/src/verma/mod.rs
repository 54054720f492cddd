//! The Shapovalov/Jantzen laboratory: a bounded rewriting engine for the
//! negative part at rank <= 2, contravariant Gram matrices, graded dimensions
//! of simple quotients at generic q and at roots of unity, the symbolic
//! determinant formula with its cross-check, the Jantzen sum formula, and the
//! dimension-growth experiment.

pub mod ctx;
pub mod gram;
pub mod jantzen;
pub mod radical;
pub mod rewrite;
pub mod shapovalov;

use serde::{Deserialize, Serialize};

use crate::exact::laurent::{var_z, Var};
use crate::exact::{LaurentPoly, RatFunc};
use crate::gk::{gk_dimension, growth_exponent, GkReport, GrowthEstimate, GrowthSample};
use crate::hecke::CoxeterError;
use crate::rootsys::LatticeVector;
use crate::weights::ToralWeight;

pub use ctx::{specialized_context, symbolic_context, ContextError, SymbolicWeight, VermaContext};
pub use gram::{Gram, GramEngine};
pub use jantzen::{jantzen_sum_check, JantzenCheck};
pub use radical::graded_simple_dims;
pub use rewrite::{RewriteError, RewriteSystem, Word};
pub use shapovalov::{shapovalov_det_formula, shapovalov_factors, ShapovalovFactor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VermaError {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Context(#[from] ContextError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// Graded dimensions of L_q(Lambda) up to `max_height`, at generic q.
pub fn simple_graded_dims(
    system: &RewriteSystem,
    weight: &ToralWeight,
    max_height: usize,
    stop_at_zero: bool,
) -> Result<Vec<u64>, VermaError> {
    if max_height > system.height_bound() {
        return Err(RewriteError::HeightTooLarge {
            height: max_height,
            bound: system.height_bound(),
        }
        .into());
    }
    let ctx = symbolic_context(system, SymbolicWeight::Toral(weight));
    Ok(graded_simple_dims(system, &ctx, max_height, stop_at_zero))
}

/// Dimension report of L_zeta(Lambda) at a primitive ell-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BabyVermaReport {
    pub ell: u64,
    pub weight: String,
    pub graded: Vec<u64>,
    pub total: u64,
    pub truncation_height: usize,
}

/// Graded dimensions of the simple head at q = zeta via per-weight Gram
/// ranks over the cyclotomic field, truncated at the degree where the
/// specialized negative part ends: (ell - 1) * (sum of positive-root heights).
pub fn baby_verma_head(
    system: &RewriteSystem,
    weight: &ToralWeight,
    ell: u64,
) -> Result<BabyVermaReport, VermaError> {
    let rs = system.root_system().clone();
    let ctx = specialized_context(system, weight, ell)?;
    let bound = ((ell as i64 - 1) * rs.sum_positive_heights()) as usize;
    let graded = graded_simple_dims(system, &ctx, bound, true);
    let total: u64 = graded.iter().sum();
    let n_pos = rs.num_positive() as u32;
    assert!(
        total <= ell.pow(n_pos),
        "simple head larger than the restricted negative part"
    );
    Ok(BabyVermaReport {
        ell,
        weight: weight.to_literal(),
        graded,
        total,
        truncation_height: bound,
    })
}

/// Result of the dimension-growth experiment.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub weight: String,
    pub samples: Vec<GrowthSample>,
    pub exponent: String,
    pub exponent_value: f64,
    pub exact: bool,
    pub gk: GkReport,
    /// Largest height J per order with graded agreement between the generic
    /// and root-of-unity simple modules for all heights <= J.
    pub agreement: Vec<(u64, usize)>,
}

impl GrowthReport {
    pub fn estimate(&self) -> GrowthEstimate {
        GrowthEstimate {
            exponent: crate::exact::parse_rat(&self.exponent).expect("stored rational"),
            exact: self.exact,
        }
    }
}

/// Sample dim L_zeta(Lambda) over the given orders, estimate the growth
/// exponent, and compare graded dimensions against generic q.
pub fn growth_experiment(
    system: &RewriteSystem,
    weight: &ToralWeight,
    ells: &[u64],
    group_cap: usize,
) -> Result<GrowthReport, VermaError> {
    let rs = system.root_system().clone();
    let mut samples = vec![];
    for &ell in ells {
        let report = baby_verma_head(system, weight, ell)?;
        samples.push(GrowthSample::new(ell, report.graded));
    }
    let estimate = growth_exponent(&samples, rs.num_positive())
        .expect("at least two increasing orders required");
    let gk = gk_dimension(weight, group_cap)?;
    // Generic graded dims up to the longest sample.
    let max_h = samples.iter().map(|s| s.graded.len()).max().unwrap_or(1) - 1;
    let generic = {
        let ctx = symbolic_context(system, SymbolicWeight::Toral(weight));
        graded_simple_dims(system, &ctx, max_h, false)
    };
    let agreement = samples
        .iter()
        .map(|s| {
            let mut j = 0usize;
            while j + 1 < s.graded.len()
                && j + 1 < generic.len()
                && s.graded[j + 1] == generic[j + 1]
            {
                j += 1;
            }
            (s.order, j)
        })
        .collect();
    Ok(GrowthReport {
        weight: weight.to_literal(),
        exponent: crate::exact::rat_string(&estimate.exponent),
        exponent_value: rat_to_f64(&estimate.exponent),
        exact: estimate.exact,
        gk,
        samples,
        agreement,
    })
}

fn rat_to_f64(r: &crate::exact::Rat) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

/// The determinant cross-check: the symbolic Gram determinant divided by the
/// determinant-formula product must be a weight-independent unit c(q).
pub struct DetCrossCheck {
    pub nu: Vec<i64>,
    /// The unit ratio as a rational function (free of the weight variables).
    pub ratio: RatFunc,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CrossCheckError {
    #[error("Gram determinant and formula differ by a non-unit at nu = {0:?}")]
    NotAUnit(Vec<i64>),
    #[error(transparent)]
    Verma(#[from] VermaError),
}

/// Compare det(Gram) with the determinant formula at a fully symbolic
/// weight. Weight-independence of the quotient is checked by the callers
/// through `unit_at_integral_weight`: the substituted values are exact
/// univariate rational functions of q and must agree across weights.
pub fn det_formula_cross_check(
    system: &RewriteSystem,
    nu: &[i64],
) -> Result<DetCrossCheck, CrossCheckError> {
    let ctx = symbolic_context(system, SymbolicWeight::Symbolic);
    let basis = system.normal_words(nu);
    let mut engine = GramEngine::new(&ctx);
    let gram = engine.gram(&basis, nu);
    let det = gram.matrix.det_ff().expect("square");
    let formula = shapovalov_det_formula(&ctx, nu);
    if formula.is_zero() || det.is_zero() {
        // Both vanish identically only for empty weight spaces.
        if basis.is_empty() && formula.is_one() {
            return Ok(DetCrossCheck {
                nu: nu.to_vec(),
                ratio: RatFunc::one(),
            });
        }
        return Err(CrossCheckError::NotAUnit(nu.to_vec()));
    }
    let ratio = det.div(&formula);
    Ok(DetCrossCheck {
        nu: nu.to_vec(),
        ratio,
    })
}

impl DetCrossCheck {
    /// Evaluate the ratio at z_i = q^{(lambda, alpha_i)}; by the z-freeness
    /// certificate the result is the same for every weight. Returns None
    /// when the uncancelled denominator vanishes at this weight (then the
    /// numerator vanishes too and the substitution is uninformative).
    pub fn unit_at_integral_weight(
        &self,
        rs: &crate::rootsys::Rs,
        lambda: &LatticeVector,
    ) -> Option<RatFunc> {
        let eval = |p: &LaurentPoly| -> RatFunc {
            let mut value = RatFunc::from_poly(p.clone());
            for i in 0..rs.rank() {
                let e = rs.bilinear_vec_root(lambda, rs.simple_root(i));
                let sub = RatFunc::q_pow(&e);
                value = substitute_ratfunc(&value, var_z(i + 1), &sub);
            }
            value
        };
        let den = eval(self.ratio.denominator());
        if den.is_zero() {
            let num = eval(self.ratio.numerator());
            assert!(num.is_zero(), "pole of a weight-free ratio");
            return None;
        }
        Some(eval(self.ratio.numerator()).div(&den))
    }
}

/// The cross-check ratio evaluated directly at a linear weight q^lambda:
/// the Gram matrix and the formula are specialized before the determinant,
/// which keeps the whole computation univariate in q. Returns None when the
/// formula vanishes at the weight (the determinant is checked to vanish with
/// it).
pub fn cross_check_ratio_at(
    system: &RewriteSystem,
    nu: &[i64],
    lambda: &LatticeVector,
) -> Option<RatFunc> {
    let rs = system.root_system().clone();
    let w = ToralWeight::linear(rs, lambda);
    let ctx = symbolic_context(system, SymbolicWeight::Toral(&w));
    let basis = system.normal_words(nu);
    let mut engine = GramEngine::new(&ctx);
    let gram = engine.gram(&basis, nu);
    let det = gram.matrix.det_ff().expect("square");
    let formula = shapovalov_det_formula(&ctx, nu);
    if formula.is_zero() {
        assert!(
            det.is_zero(),
            "Gram determinant nonzero where the formula vanishes (nu = {nu:?})"
        );
        return None;
    }
    Some(det.div(&formula))
}

/// Substitute a rational function for a variable (monomial substitutions
/// only, which is all the cross-check needs).
fn substitute_ratfunc(f: &RatFunc, v: Var, value: &RatFunc) -> RatFunc {
    let sub_poly = |p: &LaurentPoly| -> RatFunc {
        let mut acc = RatFunc::zero();
        for (mono, coeff) in p.terms() {
            let e = mono.exponent(v);
            let rest: Vec<(Var, i64)> = mono
                .pairs()
                .iter()
                .copied()
                .filter(|&(w, _)| w != v)
                .collect();
            let mut term = RatFunc::from_poly(LaurentPoly::mono(
                rest.iter()
                    .fold(crate::exact::Mono::one(), |m, &(w, ex)| {
                        m.mul(&crate::exact::Mono::var(w, ex))
                    }),
                coeff.clone(),
            ));
            term = term.mul(&value.pow(e));
            acc = acc.add(&term);
        }
        acc
    };
    sub_poly(f.numerator()).div(&sub_poly(f.denominator()))
}

/// Per-weight-space Gram report at a toral weight, for the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramReport {
    pub weight: String,
    pub nu: Vec<i64>,
    pub basis: Vec<String>,
    pub entries: Vec<Vec<String>>,
    pub rank: usize,
    pub determinant: String,
}

/// Gram matrix of the nu weight space at a toral weight, with rank and
/// determinant attached.
pub fn contravariant_gram_report(
    system: &RewriteSystem,
    weight: &ToralWeight,
    nu: &[i64],
) -> Result<GramReport, VermaError> {
    let height: usize = nu.iter().map(|&x| x.max(0) as usize).sum();
    if height > system.height_bound() {
        return Err(RewriteError::HeightTooLarge {
            height,
            bound: system.height_bound(),
        }
        .into());
    }
    let ctx = symbolic_context(system, SymbolicWeight::Toral(weight));
    let basis = system.normal_words(nu);
    let mut engine = GramEngine::new(&ctx);
    let g = engine.gram(&basis, nu);
    let rank = g.matrix.rank_ff();
    let det = g.matrix.det_ff().expect("square").to_string();
    Ok(GramReport {
        weight: weight.to_literal(),
        nu: nu.to_vec(),
        basis: g
            .basis
            .iter()
            .map(|w| {
                w.iter()
                    .map(|&l| format!("F{}", l + 1))
                    .collect::<Vec<_>>()
                    .join("")
            })
            .collect(),
        entries: (0..g.matrix.rows())
            .map(|i| {
                (0..g.matrix.cols())
                    .map(|j| g.matrix.at(i, j).to_string())
                    .collect()
            })
            .collect(),
        rank,
        determinant: det,
    })
}
