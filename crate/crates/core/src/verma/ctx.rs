//! Evaluation contexts for Verma-module computations: a fixed rewrite system
//! with coefficients mapped into a working field, together with the weight
//! values needed by the raising-operator commutation factors.

use crate::exact::cyclotomic::Cyclotomic;
use crate::exact::laurent::{var_z, LaurentPoly, VAR_Q, VAR_T};
use crate::exact::matrix::Field;
use crate::exact::rational::Rat;
use crate::exact::RatFunc;
use crate::rootsys::Rs;
use crate::weights::ToralWeight;

use super::rewrite::{RewriteSystem, Rule};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContextError {
    #[error("order {0} is not admissible for this weight")]
    InadmissibleOrder(u64),
    #[error("specialization requires integer q-exponents")]
    NonIntegralExponent,
    #[error("rewrite rule coefficient undefined at the requested root of unity")]
    RuleDenominatorVanishes,
}

/// A working field together with everything the graded engines need.
pub struct VermaContext<F: Field> {
    rs: Rs,
    rules: Vec<Rule<F>>,
    /// Lambda(K_i) and its inverse, in F.
    k_values: Vec<F>,
    k_invs: Vec<F>,
    /// (q_i - q_i^{-1})^{-1}.
    denom_inv: Vec<F>,
    /// q^r for integer r.
    q_int_pow: Box<dyn Fn(i64) -> F + Send + Sync>,
    /// q^r for rational r (panics if unsupported in F).
    q_rat_pow: Box<dyn Fn(&Rat) -> F + Send + Sync>,
}

impl<F: Field> VermaContext<F> {
    pub fn root_system(&self) -> &Rs {
        &self.rs
    }

    pub fn rules(&self) -> &[Rule<F>] {
        &self.rules
    }

    /// (Lambda q^{-mu})(K_i) bracket factor:
    /// (Lambda_p(K_i) - Lambda_p(K_i)^{-1}) / (q_i - q_i^{-1}).
    pub fn bracket(&self, i: usize, suffix: &[i64]) -> F {
        self.bracket_numerator(i, suffix).mul(&self.denom_inv[i])
    }

    /// The bracket without its constant denominator: a two-term expression
    /// that keeps the graded recursions polynomial.
    pub fn bracket_numerator(&self, i: usize, suffix: &[i64]) -> F {
        let pairing = self.mu_dot_alpha(suffix, i);
        let a = self.k_values[i].mul(&(self.q_int_pow)(-pairing));
        let b = self.k_invs[i].mul(&(self.q_int_pow)(pairing));
        a.sub(&b)
    }

    /// (q_i - q_i^{-1})^{-1}.
    pub fn denominator_inverse(&self, i: usize) -> &F {
        &self.denom_inv[i]
    }

    /// (mu, alpha_i) for mu in the root lattice: always an integer.
    fn mu_dot_alpha(&self, mu: &[i64], i: usize) -> i64 {
        let n = self.rs.rank();
        let mut acc = 0i64;
        for j in 0..n {
            acc += mu[j] * self.rs.symmetrizers()[j] * self.rs.cartan()[j][i];
        }
        acc
    }

    /// Lambda(K_alpha) for an arbitrary root, as a product over coordinates.
    pub fn k_alpha(&self, alpha: usize) -> F {
        let coords = self.rs.root(alpha).coords.clone();
        let mut acc = F::one();
        for (i, &c) in coords.iter().enumerate() {
            let factor = if c >= 0 { &self.k_values[i] } else { &self.k_invs[i] };
            for _ in 0..c.unsigned_abs() {
                acc = acc.mul(factor);
            }
        }
        acc
    }

    /// The bracket [K_alpha; r]_q evaluated at the weight:
    /// (Lambda(K_alpha) q^r - Lambda(K_alpha)^{-1} q^{-r}) / (q_alpha - q_alpha^{-1}).
    pub fn k_bracket(&self, alpha: usize, r: i64) -> F {
        let d_alpha = self.rs.root(alpha).norm2 / 2;
        let denom = (self.q_int_pow)(d_alpha).sub(&(self.q_int_pow)(-d_alpha));
        let ka = self.k_alpha(alpha);
        let ka_inv = self.k_alpha(self.rs.negate(alpha));
        ka.mul(&(self.q_int_pow)(r))
            .sub(&ka_inv.mul(&(self.q_int_pow)(-r)))
            .mul(&denom.inv())
    }

    /// Quantum integer [m]_{q_alpha} in F.
    pub fn quantum_int(&self, alpha: usize, m: i64) -> F {
        let d = self.rs.root(alpha).norm2 / 2;
        let mut acc = F::zero();
        for k in 0..m {
            acc = acc.add(&(self.q_int_pow)(d * (m - 1 - 2 * k)));
        }
        acc
    }

    pub fn q_pow(&self, r: &Rat) -> F {
        (self.q_rat_pow)(r)
    }
}

/// Symbolic context over the field Q(zeta_N)(q^{1/den}, t, z_i): the weight
/// is a toral weight (optionally deformed by t^rho), or fully symbolic with
/// invertible variables z_i.
pub enum SymbolicWeight<'a> {
    Toral(&'a ToralWeight),
    ToralDeformed(&'a ToralWeight),
    Symbolic,
}

pub fn symbolic_context(
    system: &RewriteSystem,
    weight: SymbolicWeight<'_>,
) -> VermaContext<RatFunc> {
    let rs = system.root_system().clone();
    let n = rs.rank();
    let mut k_values = vec![];
    let mut k_invs = vec![];
    match weight {
        SymbolicWeight::Toral(w) | SymbolicWeight::ToralDeformed(w) => {
            let deformed = matches!(weight, SymbolicWeight::ToralDeformed(_));
            for i in 0..n {
                let torsion = Cyclotomic::unit_torsion(&w.torsion_values()[i]);
                let mut v = RatFunc::from_cyc(torsion).mul(&RatFunc::q_pow(&w.exponent_values()[i]));
                if deformed {
                    // Lambda t^rho: extra factor t^{(rho, alpha_i)} = t^{d_i}.
                    v = v.mul(&RatFunc::from_poly(LaurentPoly::var_pow(
                        VAR_T,
                        rs.symmetrizers()[i],
                    )));
                }
                k_invs.push(v.inv());
                k_values.push(v);
            }
        }
        SymbolicWeight::Symbolic => {
            for i in 0..n {
                let v = RatFunc::var(var_z(i + 1));
                k_invs.push(v.inv());
                k_values.push(v);
            }
        }
    }
    let denom_inv: Vec<RatFunc> = (0..n)
        .map(|i| {
            let d = rs.symmetrizers()[i];
            RatFunc::from_poly(
                LaurentPoly::var_pow(VAR_Q, d).sub(&LaurentPoly::var_pow(VAR_Q, -d)),
            )
            .inv()
        })
        .collect();
    VermaContext {
        rs,
        rules: system
            .map_rules(&|c: &RatFunc| Some(c.clone()))
            .expect("identity rule map"),
        k_values,
        k_invs,
        denom_inv,
        q_int_pow: Box::new(|r| RatFunc::from_poly(LaurentPoly::var_pow(VAR_Q, r))),
        q_rat_pow: Box::new(|r| RatFunc::q_pow(r)),
    }
}

/// Context over the cyclotomic field at q = zeta_ell.
pub fn specialized_context(
    system: &RewriteSystem,
    weight: &ToralWeight,
    ell: u64,
) -> Result<VermaContext<Cyclotomic>, ContextError> {
    if !weight.is_admissible(ell) {
        return Err(ContextError::InadmissibleOrder(ell));
    }
    let rs = system.root_system().clone();
    let sp = weight
        .specialize(ell)
        .map_err(|_| ContextError::NonIntegralExponent)?;
    let zeta = Cyclotomic::root_of_unity(ell, 1);
    let rules = system
        .map_rules(&|c: &RatFunc| c.eval_all(&[(VAR_Q, zeta.clone())]))
        .ok_or(ContextError::RuleDenominatorVanishes)?;
    let n = rs.rank();
    let k_values: Vec<Cyclotomic> = sp.values.clone();
    let k_invs: Vec<Cyclotomic> = k_values.iter().map(|v| v.inv()).collect();
    let denom_inv: Vec<Cyclotomic> = (0..n)
        .map(|i| {
            let d = rs.symmetrizers()[i];
            zeta.pow(d).sub(&zeta.pow(-d)).inv()
        })
        .collect();
    let z1 = zeta.clone();
    let z2 = zeta.clone();
    Ok(VermaContext {
        rs,
        rules,
        k_values,
        k_invs,
        denom_inv,
        q_int_pow: Box::new(move |r| z1.pow(r)),
        q_rat_pow: Box::new(move |r| {
            let i = crate::exact::rational::as_i64(r).expect("integer exponent at a root of unity");
            z2.pow(i)
        }),
    })
}
