//! The Shapovalov determinant formula: per weight space nu, the determinant
//! of the contravariant form is the product over positive roots alpha and
//! m >= 1 of ([m]_{q_alpha} [K_alpha; (rho,alpha) - m(alpha,alpha)/2]_q)
//! raised to the Kostant partition count of nu - m alpha.

use crate::exact::matrix::Field;
use crate::exact::rational::as_i64;
use crate::rootsys::LatticeVector;

use super::ctx::VermaContext;

/// One factor of the determinant formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapovalovFactor {
    pub m: i64,
    pub alpha: usize,
    /// Exponent p(nu - m alpha).
    pub multiplicity: u64,
    /// Bracket argument (rho, alpha) - m (alpha, alpha)/2.
    pub bracket_arg: i64,
}

/// The factor list of det S_nu (factors with exponent zero omitted).
pub fn shapovalov_factors(
    rs: &crate::rootsys::Rs,
    nu: &[i64],
) -> Vec<ShapovalovFactor> {
    let height: i64 = nu.iter().sum();
    let mut out = vec![];
    for alpha in rs.positive_roots() {
        for m in 1..=height {
            let shifted: Vec<i64> = nu
                .iter()
                .zip(rs.root(alpha).coords.iter())
                .map(|(x, a)| x - m * a)
                .collect();
            let mult = rs.kostant_partition(&LatticeVector::from_root_coords_i64(&shifted));
            if mult == 0 {
                continue;
            }
            let rho_alpha = as_i64(&rs.bilinear_vec_root(rs.rho(), alpha)).unwrap();
            let bracket_arg = rho_alpha - m * rs.root(alpha).norm2 / 2;
            out.push(ShapovalovFactor {
                m,
                alpha,
                multiplicity: mult,
                bracket_arg,
            });
        }
    }
    out
}

/// Evaluate the full product in the context's field.
pub fn shapovalov_det_formula<F: Field>(ctx: &VermaContext<F>, nu: &[i64]) -> F {
    let rs = ctx.root_system();
    let mut acc = F::one();
    for f in shapovalov_factors(rs, nu) {
        let factor = ctx
            .quantum_int(f.alpha, f.m)
            .mul(&ctx.k_bracket(f.alpha, f.bracket_arg));
        for _ in 0..f.multiplicity {
            acc = acc.mul(&factor);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::laurent::VAR_Q;
    use crate::exact::rational::rat_int;
    use crate::exact::{LaurentPoly, RatFunc};
    use crate::rootsys::RootSystem;
    use crate::verma::ctx::{symbolic_context, SymbolicWeight};
    use crate::verma::rewrite::RewriteSystem;
    use crate::weights::ToralWeight;

    #[test]
    fn empty_weight_space_gives_one() {
        let rs = RootSystem::build_str("B2").unwrap();
        assert!(shapovalov_factors(&rs, &[0, 0]).is_empty());
    }

    #[test]
    fn a1_single_factor_vanishes_iff_m_zero() {
        let rs = RootSystem::build_str("A1").unwrap();
        let sys = RewriteSystem::build(&rs, 6).unwrap();
        for m in 0..3i64 {
            let lam = rs.fundamental_weight(0).scale(&rat_int(m));
            let w = ToralWeight::linear(rs.clone(), &lam);
            let ctx = symbolic_context(&sys, SymbolicWeight::Toral(&w));
            let det = shapovalov_det_formula(&ctx, &[1]);
            // [1]_q [K; 0] at q^m is [m]_q.
            let mut expect = RatFunc::zero();
            for s in 0..m {
                expect = expect.add(&RatFunc::from_poly(LaurentPoly::var_pow(
                    VAR_Q,
                    m - 1 - 2 * s,
                )));
            }
            assert_eq!(det, expect, "m={m}");
            assert_eq!(det.is_zero(), m == 0);
        }
    }

    #[test]
    fn a2_height_two_factor_structure() {
        let rs = RootSystem::build_str("A2").unwrap();
        let factors = shapovalov_factors(&rs, &[1, 1]);
        // (1, a1), (1, a2) with exponent 1, (1, a1+a2) with exponent p(0)=1;
        // m = 2 terms all drop out.
        assert_eq!(factors.len(), 3);
        assert!(factors.iter().all(|f| f.m == 1 && f.multiplicity == 1));
    }
}
