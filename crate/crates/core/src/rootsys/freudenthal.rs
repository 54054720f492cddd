//! Freudenthal's recursion for weight multiplicities of finite-dimensional
//! simple modules, with the Weyl dimension formula as a companion oracle.

use std::collections::HashMap;

use num_traits::Zero;

use crate::exact::rational::{rat_int, Rat};

use super::{LatticeVector, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("weight is not dominant integral")]
pub struct NonDominant;

/// Weight multiplicities of the simple module with highest weight `lambda`
/// (dominant integral), optionally truncated at `max_height` of lambda - mu.
/// Returns pairs (mu, multiplicity) with nonzero multiplicities.
pub fn freudenthal_multiplicities(
    rs: &RootSystem,
    lambda: &LatticeVector,
    max_height: Option<i64>,
) -> Result<Vec<(LatticeVector, u64)>, NonDominant> {
    let n = rs.rank();
    let wc = rs.weight_coords(lambda);
    if wc
        .iter()
        .any(|c| !crate::exact::rational::is_integer(c) || c < &Rat::zero())
    {
        return Err(NonDominant);
    }
    // Support box: 0 <= beta <= lambda - w0(lambda), componentwise.
    let lowest = rs
        .weyl_orbit_vectors(lambda)
        .into_iter()
        .min_by_key(|v| v.height())
        .unwrap();
    let span = lambda.sub(&lowest);
    let span_coords = span
        .as_integer_coords()
        .expect("lambda - w0 lambda lies in the root lattice");
    let height_cap = max_height.unwrap_or(i64::MAX);

    let rho = rs.rho();
    let lam_rho = lambda.add(rho);
    let norm_top = rs.bilinear(&lam_rho, &lam_rho);

    // Enumerate beta in the box by increasing height.
    let mut betas: Vec<Vec<i64>> = vec![];
    let mut stack = vec![vec![]];
    for i in 0..n {
        let mut next = vec![];
        for prefix in stack {
            for c in 0..=span_coords[i].max(0) {
                let mut p: Vec<i64> = prefix.clone();
                p.push(c);
                next.push(p);
            }
        }
        stack = next;
    }
    for b in stack {
        if b.iter().sum::<i64>() <= height_cap {
            betas.push(b);
        }
    }
    betas.sort_by_key(|b| (b.iter().sum::<i64>(), b.clone()));

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    let mut out = vec![];
    for beta in betas {
        let height: i64 = beta.iter().sum();
        if height == 0 {
            mult.insert(beta.clone(), 1);
            out.push((lambda.clone(), 1));
            continue;
        }
        let bv = LatticeVector::from_root_coords_i64(&beta);
        let mu = lambda.sub(&bv);
        let mu_rho = mu.add(rho);
        let denom = norm_top.clone() - rs.bilinear(&mu_rho, &mu_rho);
        if denom.is_zero() {
            mult.insert(beta, 0);
            continue;
        }
        // 2 sum_{alpha>0} sum_{k>=1} (mu + k alpha, alpha) m(mu + k alpha)
        let mut acc = Rat::zero();
        for alpha in rs.positive_roots() {
            let ac = &rs.root(alpha).coords;
            for k in 1.. {
                let prev: Vec<i64> = beta
                    .iter()
                    .zip(ac.iter())
                    .map(|(b, a)| b - k * a)
                    .collect();
                if prev.iter().any(|&c| c < 0) {
                    break;
                }
                let m = *mult.get(&prev).unwrap_or(&0);
                if m == 0 {
                    continue;
                }
                let shifted = mu.add(&LatticeVector::from_root_coords_i64(
                    &ac.iter().map(|&a| a * k).collect::<Vec<_>>(),
                ));
                acc += rs.bilinear_vec_root(&shifted, alpha) * rat_int(m as i64);
            }
        }
        let value = acc * rat_int(2) / denom;
        let m = crate::exact::rational::as_i64(&value).expect("Freudenthal value integral");
        assert!(m >= 0, "negative multiplicity");
        if m > 0 {
            out.push((mu, m as u64));
        }
        mult.insert(beta, m as u64);
    }
    Ok(out)
}

/// Weyl dimension formula: prod_{alpha>0} (lambda+rho, alpha)/(rho, alpha).
pub fn weyl_dimension(rs: &RootSystem, lambda: &LatticeVector) -> Rat {
    let rho = rs.rho();
    let top = lambda.add(rho);
    let mut num = Rat::from_integer(1.into());
    let mut den = Rat::from_integer(1.into());
    for alpha in rs.positive_roots() {
        num *= rs.bilinear_vec_root(&top, alpha);
        den *= rs.bilinear_vec_root(rho, alpha);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_int;
    use crate::rootsys::RootSystem;

    #[test]
    fn a2_defining_representation() {
        let rs = RootSystem::build_str("A2").unwrap();
        let omega1 = rs.fundamental_weight(0);
        let mults = freudenthal_multiplicities(&rs, &omega1, None).unwrap();
        assert_eq!(mults.len(), 3);
        assert!(mults.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn a2_adjoint_representation() {
        let rs = RootSystem::build_str("A2").unwrap();
        let rho = rs.rho().clone();
        let mults = freudenthal_multiplicities(&rs, &rho, None).unwrap();
        let total: u64 = mults.iter().map(|(_, m)| m).sum();
        assert_eq!(total, 8);
        let zero = mults
            .iter()
            .find(|(mu, _)| mu.is_zero())
            .map(|(_, m)| *m);
        assert_eq!(zero, Some(2));
    }

    #[test]
    fn trivial_module() {
        let rs = RootSystem::build_str("B2").unwrap();
        let zero = LatticeVector::zero(2);
        let mults = freudenthal_multiplicities(&rs, &zero, None).unwrap();
        assert_eq!(mults.len(), 1);
        assert!(mults[0].0.is_zero());
        assert_eq!(mults[0].1, 1);
    }

    #[test]
    fn dimensions_match_weyl_formula() {
        for t in ["A2", "B2", "G2"] {
            let rs = RootSystem::build_str(t).unwrap();
            let mut lambdas = vec![rs.rho().clone()];
            for i in 0..rs.rank() {
                lambdas.push(rs.fundamental_weight(i));
            }
            for lam in lambdas {
                let mults = freudenthal_multiplicities(&rs, &lam, None).unwrap();
                let total: u64 = mults.iter().map(|(_, m)| m).sum();
                assert_eq!(
                    rat_int(total as i64),
                    weyl_dimension(&rs, &lam),
                    "{t}"
                );
            }
        }
    }

    #[test]
    fn rejects_non_dominant() {
        let rs = RootSystem::build_str("A2").unwrap();
        let bad = rs.fundamental_weight(0).neg();
        assert!(freudenthal_multiplicities(&rs, &bad, None).is_err());
    }
}
