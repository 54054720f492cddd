//! Toral weights: characters of the Cartan subalgebra of the form
//! `K_mu -> e^{2 pi i t(mu)} q^{c(mu)}`, encoded by the torsion map t and the
//! exponent map c on the root lattice. Includes the integral root subsystem,
//! modified reflections and the extended Weyl group, the shifted dot action,
//! the Shapovalov vanishing set, dominance, orbits, and specialization at
//! roots of unity.

pub mod literal;

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::exact::cyclotomic::Cyclotomic;
use crate::exact::rational::{as_i64, is_integer, mod1, rat, rat_int, Rat};
use crate::hecke::{CoxeterSystem, CoxeterError};
use crate::rootsys::{LatticeVector, Rs};
use crate::subsys::RootSubsystem;

pub use literal::{parse_weight, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("root is not in the integral subsystem of the weight")]
pub struct NotIntegralRoot;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("specialization requires integer q-exponents")]
pub struct NonIntegralExponent;

/// A toral weight, given by torsion values t_i in [0,1) and rational
/// q-exponents c_i on the simple roots.
#[derive(Clone)]
pub struct ToralWeight {
    rs: Rs,
    torsion: Vec<Rat>,
    exponent: Vec<Rat>,
}

impl PartialEq for ToralWeight {
    fn eq(&self, other: &Self) -> bool {
        self.torsion == other.torsion && self.exponent == other.exponent
    }
}

impl Eq for ToralWeight {}

impl fmt::Debug for ToralWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ToralWeight({})", self.to_literal())
    }
}

impl ToralWeight {
    pub fn new(rs: Rs, torsion: Vec<Rat>, exponent: Vec<Rat>) -> ToralWeight {
        assert_eq!(torsion.len(), rs.rank());
        assert_eq!(exponent.len(), rs.rank());
        ToralWeight {
            rs,
            torsion: torsion.iter().map(mod1).collect(),
            exponent,
        }
    }

    /// The trivial weight (t = c = 0), i.e. q^0.
    pub fn trivial(rs: Rs) -> ToralWeight {
        let n = rs.rank();
        ToralWeight::new(rs, vec![Rat::zero(); n], vec![Rat::zero(); n])
    }

    /// Linear weight q^lambda: c(mu) = (lambda, mu), no torsion.
    pub fn linear(rs: Rs, lambda: &LatticeVector) -> ToralWeight {
        let n = rs.rank();
        let c: Vec<Rat> = (0..n)
            .map(|i| rs.bilinear_vec_root(lambda, rs.simple_root(i)))
            .collect();
        ToralWeight::new(rs, vec![Rat::zero(); n], c)
    }

    pub fn root_system(&self) -> &Rs {
        &self.rs
    }

    pub fn torsion_values(&self) -> &[Rat] {
        &self.torsion
    }

    pub fn exponent_values(&self) -> &[Rat] {
        &self.exponent
    }

    /// (t(mu), c(mu)) for mu in the root lattice.
    pub fn evaluate(&self, mu: &LatticeVector) -> (Rat, Rat) {
        let mut t = Rat::zero();
        let mut c = Rat::zero();
        for (i, x) in mu.coords.iter().enumerate() {
            t += x * self.torsion[i].clone();
            c += x * self.exponent[i].clone();
        }
        (mod1(&t), c)
    }

    /// t and c of a root given by index.
    fn eval_root(&self, idx: usize) -> (Rat, Rat) {
        let coords = &self.rs.root(idx).coords;
        let mut t = Rat::zero();
        let mut c = Rat::zero();
        for (i, &x) in coords.iter().enumerate() {
            t += rat_int(x) * self.torsion[i].clone();
            c += rat_int(x) * self.exponent[i].clone();
        }
        (mod1(&t), c)
    }

    /// Multiply by q^mu for mu in the weight lattice: c += (mu, alpha_i).
    pub fn mul_q_power(&self, mu: &LatticeVector) -> ToralWeight {
        let n = self.rs.rank();
        let exponent: Vec<Rat> = (0..n)
            .map(|i| {
                self.exponent[i].clone() + self.rs.bilinear_vec_root(mu, self.rs.simple_root(i))
            })
            .collect();
        ToralWeight::new(self.rs.clone(), self.torsion.clone(), exponent)
    }

    /// Twist by a sign character: sigma in Z_2^n given by torsion shifts
    /// 0 or 1/2 per simple root.
    pub fn twist_sign(&self, sigma: &[Rat]) -> ToralWeight {
        let torsion: Vec<Rat> = self
            .torsion
            .iter()
            .zip(sigma.iter())
            .map(|(t, s)| mod1(&(t.clone() + s.clone())))
            .collect();
        ToralWeight::new(self.rs.clone(), torsion, self.exponent.clone())
    }

    /// Does alpha satisfy the integrality condition
    /// Lambda(K_{2 alpha}) in q^{Z (alpha,alpha)}?
    pub fn root_is_integral(&self, idx: usize) -> bool {
        let (t, c) = self.eval_root(idx);
        // t(2 alpha) = 2 t(alpha) mod 1, c(2 alpha) = 2 c(alpha).
        let t2 = mod1(&(t * rat_int(2)));
        if !t2.is_zero() {
            return false;
        }
        let norm = rat_int(self.rs.root(idx).norm2);
        is_integer(&(c * rat_int(2) / norm))
    }

    /// The integral root subsystem Phi_Lambda.
    pub fn integral_subsystem(&self) -> RootSubsystem {
        let members: Vec<bool> = (0..self.rs.num_roots())
            .map(|k| self.root_is_integral(k))
            .collect();
        RootSubsystem::from_members(self.rs.clone(), members)
    }

    /// The modified reflection at an integral root: reflection together with
    /// the sign character correcting the W-action on weights. The sign is
    /// nontrivial exactly when Lambda(K_alpha) lies in -q^{Z(alpha,alpha)/2},
    /// which for integral alpha reduces to t(alpha) = 1/2.
    pub fn modified_reflection(&self, idx: usize) -> Result<ExtendedWeylElement, NotIntegralRoot> {
        if !self.root_is_integral(idx) {
            return Err(NotIntegralRoot);
        }
        let (t, _) = self.eval_root(idx);
        let negative = t == rat(1, 2);
        let n = self.rs.rank();
        let sigma: Vec<Rat> = (0..n)
            .map(|i| {
                if negative {
                    mod1(&(rat_int(self.rs.pair_roots(self.rs.simple_root(i), idx)) / rat_int(2)))
                } else {
                    Rat::zero()
                }
            })
            .collect();
        Ok(ExtendedWeylElement {
            rs: self.rs.clone(),
            sigma,
            perm: self.rs.reflection_perm(idx),
        })
    }

    /// The comparison integer n_alpha = <rho, alpha^vee> + c(2 alpha)/(alpha, alpha)
    /// for alpha in the integral subsystem.
    pub fn linkage_integer(&self, idx: usize) -> Result<i64, NotIntegralRoot> {
        if !self.root_is_integral(idx) {
            return Err(NotIntegralRoot);
        }
        let (_, c) = self.eval_root(idx);
        let norm = rat_int(self.rs.root(idx).norm2);
        let val = self.rs.pairing(self.rs.rho(), idx) + c * rat_int(2) / norm;
        Ok(as_i64(&val).expect("linkage integer is integral"))
    }

    /// The Shapovalov vanishing set: pairs (m, alpha) with alpha a positive
    /// integral root and m = n_alpha >= 1.
    pub fn vanishing_pairs(&self) -> Vec<(u64, usize)> {
        let mut out = vec![];
        for alpha in self.rs.positive_roots() {
            if !self.root_is_integral(alpha) {
                continue;
            }
            let n = self.linkage_integer(alpha).unwrap();
            if n >= 1 {
                out.push((n as u64, alpha));
            }
        }
        out
    }

    /// Irreducibility of the Verma module: no Shapovalov factor vanishes.
    pub fn verma_irreducible(&self) -> bool {
        self.vanishing_pairs().is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.rs
            .positive_roots()
            .filter(|&a| self.root_is_integral(a))
            .all(|a| self.linkage_integer(a).unwrap() >= 0)
    }

    pub fn is_antidominant(&self) -> bool {
        self.rs
            .positive_roots()
            .filter(|&a| self.root_is_integral(a))
            .all(|a| self.linkage_integer(a).unwrap() <= 0)
    }

    /// Is the weight integral (Phi_Lambda = Phi)?
    pub fn is_integral(&self) -> bool {
        self.rs.all_roots().all(|k| self.root_is_integral(k))
    }

    /// Integral weight class: in the paper's notation, membership in the set
    /// generated by sign twists of q^lambda, lambda in P. Integral weights
    /// with all linkage integers nonnegative form the dominant class.
    pub fn is_dominant_integral(&self) -> bool {
        self.is_integral() && self.is_dominant()
    }

    /// Canonical literal form, e.g. "t=1/4,c=-1;t=0,c=0".
    pub fn to_literal(&self) -> String {
        (0..self.rs.rank())
            .map(|i| {
                format!(
                    "t={},c={}",
                    crate::exact::rational::rat_string(&self.torsion[i]),
                    crate::exact::rational::rat_string(&self.exponent[i])
                )
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Torsion conductor: least N with all t_i in (1/N) Z.
    pub fn torsion_conductor(&self) -> u64 {
        self.torsion.iter().fold(1u64, |acc, t| {
            let d = u64::try_from(t.denom()).expect("torsion denominator fits u64");
            crate::exact::rational::lcm_u64(acc, d)
        })
    }

    /// Admissibility of a root-of-unity order for this weight: odd, greater
    /// than 1, prime to 3 for G2 components, and coprime to the torsion
    /// conductor so torsion values never collide with powers of zeta.
    pub fn is_admissible(&self, ell: u64) -> bool {
        if ell <= 1 || ell % 2 == 0 {
            return false;
        }
        let has_g2 = self
            .rs
            .label()
            .components()
            .iter()
            .any(|c| c.letter == 'G');
        if has_g2 && ell % 3 == 0 {
            return false;
        }
        ell.gcd(&self.torsion_conductor()) == 1
    }

    /// Specialize at the primitive ell-th root of unity zeta = e^{2 pi i/ell}.
    pub fn specialize(&self, ell: u64) -> Result<SpecializedWeight, NonIntegralExponent> {
        let mut values = vec![];
        for i in 0..self.rs.rank() {
            let c = as_i64(&self.exponent[i]).ok_or(NonIntegralExponent)?;
            let v = Cyclotomic::unit_torsion(&self.torsion[i])
                .mul(&Cyclotomic::root_of_unity(ell, c));
            values.push(v);
        }
        Ok(SpecializedWeight { ell, values })
    }

    /// The Coxeter system of the integral Weyl group W_Lambda, together with
    /// the ambient root indices of its simple system.
    pub fn integral_coxeter(&self, cap: usize) -> Result<IntegralWeylData, CoxeterError> {
        let sub = self.integral_subsystem();
        let simples = sub.simple_system().to_vec();
        let coxeter = CoxeterSystem::from_cartan(sub.cartan(), cap)?;
        Ok(IntegralWeylData {
            sub,
            simples,
            coxeter,
        })
    }
}

/// The integral subsystem with its abstract Coxeter system.
pub struct IntegralWeylData {
    pub sub: RootSubsystem,
    /// Ambient root indices of the simple system, in generator order.
    pub simples: Vec<usize>,
    pub coxeter: CoxeterSystem,
}

impl IntegralWeylData {
    /// Lift a group element to the extended Weyl group relative to `base`:
    /// the product of modified reflections along a reduced word.
    pub fn lift(&self, base: &ToralWeight, elem: usize) -> ExtendedWeylElement {
        let mut out = ExtendedWeylElement::identity(base.root_system());
        for &j in self.coxeter.group().word(elem) {
            let gen = base
                .modified_reflection(self.simples[j as usize])
                .expect("simple system roots are integral");
            out = out.compose(&gen);
        }
        out
    }

    /// The minimal-length element w with lift(w)^{-1} . Lambda antidominant,
    /// together with that antidominant weight; unique for regular weights.
    pub fn minimal_antidominant_witness(&self, base: &ToralWeight) -> (usize, ToralWeight) {
        for e in 0..self.coxeter.order() {
            let lifted = self.lift(base, e);
            let candidate = lifted.inverse().dot(base);
            if candidate.is_antidominant() {
                return (e, candidate);
            }
        }
        unreachable!("every orbit contains an antidominant weight");
    }

    /// Dot-action orbit of the weight (deduplicated) and the stabilizer.
    pub fn orbit(&self, base: &ToralWeight) -> (Vec<ToralWeight>, Vec<usize>) {
        let mut orbit: Vec<ToralWeight> = vec![];
        let mut stab = vec![];
        for e in 0..self.coxeter.order() {
            let w = self.lift(base, e).dot(base);
            if w == *base {
                stab.push(e);
            }
            if !orbit.contains(&w) {
                orbit.push(w);
            }
        }
        (orbit, stab)
    }

    pub fn is_regular(&self, base: &ToralWeight) -> bool {
        self.orbit(base).1.len() == 1
    }
}

/// An element (sigma, w) of the extended Weyl group Z_2^n x| W, acting on
/// toral weights. The W-part is stored as a permutation of the ambient roots.
#[derive(Clone)]
pub struct ExtendedWeylElement {
    rs: Rs,
    /// Sign character as torsion shifts (0 or 1/2) on the simple roots.
    sigma: Vec<Rat>,
    /// Image of each ambient root index under w.
    perm: Vec<u32>,
}

impl PartialEq for ExtendedWeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.sigma == other.sigma && self.perm == other.perm
    }
}

impl fmt::Debug for ExtendedWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtendedWeylElement(sigma={:?})", self.sigma)
    }
}

impl ExtendedWeylElement {
    pub fn identity(rs: &Rs) -> ExtendedWeylElement {
        ExtendedWeylElement {
            rs: rs.clone(),
            sigma: vec![Rat::zero(); rs.rank()],
            perm: (0..rs.num_roots() as u32).collect(),
        }
    }

    pub fn sign_exponents(&self) -> &[Rat] {
        &self.sigma
    }

    pub fn is_plain_sign(&self) -> bool {
        self.sigma.iter().all(|s| s.is_zero())
    }

    pub fn act_root(&self, idx: usize) -> usize {
        self.perm[idx] as usize
    }

    fn perm_inverse(&self) -> Vec<u32> {
        let mut inv = vec![0u32; self.perm.len()];
        for (k, &img) in self.perm.iter().enumerate() {
            inv[img as usize] = k as u32;
        }
        inv
    }

    /// Sign-character exponent on an arbitrary root, by linearity.
    fn sigma_on_root(&self, idx: usize) -> Rat {
        let coords = &self.rs.root(idx).coords;
        let mut acc = Rat::zero();
        for (i, &x) in coords.iter().enumerate() {
            acc += rat_int(x) * self.sigma[i].clone();
        }
        mod1(&acc)
    }

    /// Group law: (s1, w1)(s2, w2) = (s1 + w1 s2, w1 w2), where
    /// (w1 s2)(mu) = s2(w1^{-1} mu).
    pub fn compose(&self, other: &ExtendedWeylElement) -> ExtendedWeylElement {
        let perm: Vec<u32> = (0..self.perm.len())
            .map(|k| self.perm[other.perm[k] as usize])
            .collect();
        let inv1 = self.perm_inverse();
        let sigma = (0..self.sigma.len())
            .map(|i| {
                let pre = inv1[self.rs.simple_root(i)] as usize;
                mod1(&(self.sigma[i].clone() + other.sigma_on_root(pre)))
            })
            .collect();
        ExtendedWeylElement {
            rs: self.rs.clone(),
            sigma,
            perm,
        }
    }

    /// Inverse: (sigma, w)^{-1} = (w^{-1} sigma, w^{-1}).
    pub fn inverse(&self) -> ExtendedWeylElement {
        let inv = self.perm_inverse();
        let sigma = (0..self.sigma.len())
            .map(|i| self.sigma_on_root(self.perm[self.rs.simple_root(i)] as usize))
            .collect();
        ExtendedWeylElement {
            rs: self.rs.clone(),
            sigma,
            perm: inv,
        }
    }

    /// Plain (non-dot) action:
    /// (w~ Lambda)(K_mu) = sigma(mu) Lambda(K_{w^{-1} mu}).
    pub fn act(&self, w: &ToralWeight) -> ToralWeight {
        let rs = w.root_system().clone();
        let inv = self.perm_inverse();
        let n = rs.rank();
        let mut torsion = vec![];
        let mut exponent = vec![];
        for i in 0..n {
            let pre = inv[rs.simple_root(i)] as usize;
            let (t, c) = w.eval_root(pre);
            torsion.push(mod1(&(t + self.sigma_on_root(rs.simple_root(i)))));
            exponent.push(c);
        }
        ToralWeight::new(rs, torsion, exponent)
    }

    /// Shifted (dot) action: w . Lambda = q^{-rho} w(Lambda q^{rho}).
    pub fn dot(&self, w: &ToralWeight) -> ToralWeight {
        let rs = w.root_system().clone();
        let rho = rs.rho().clone();
        let shifted = w.mul_q_power(&rho);
        let moved = self.act(&shifted);
        moved.mul_q_power(&rho.neg())
    }
}

/// A weight of the root-of-unity specialization: cyclotomic values on the
/// simple roots.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecializedWeight {
    pub ell: u64,
    pub values: Vec<Cyclotomic>,
}

impl SpecializedWeight {
    /// Value on an arbitrary root-lattice element.
    pub fn value(&self, mu: &[i64]) -> Cyclotomic {
        let mut acc = Cyclotomic::one();
        for (i, &x) in mu.iter().enumerate() {
            acc = acc.mul(&self.values[i].pow(x));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    /// The B2 weight with Lambda(K_{a1}) = 1 and Lambda(K_{a2}) = i q^{-1}.
    fn b2_example() -> ToralWeight {
        let rs = RootSystem::build_str("B2").unwrap();
        parse_weight(&rs, "t=0,c=0;t=1/4,c=-1").unwrap()
    }

    #[test]
    fn evaluate_example_weight() {
        let w = b2_example();
        // mu = 2(a1 + 2a2): t = 4*(1/4) = 0 mod 1, c = 4*(-1) = -4.
        let mu = LatticeVector::from_root_coords_i64(&[2, 4]);
        let (t, c) = w.evaluate(&mu);
        assert!(t.is_zero());
        assert_eq!(c, rat_int(-4));
        // trivial weight evaluates to zero everywhere
        let triv = ToralWeight::trivial(w.root_system().clone());
        let (t, c) = triv.evaluate(&mu);
        assert!(t.is_zero() && c.is_zero());
    }

    #[test]
    fn integral_subsystem_of_example_is_long_a1a1() {
        let w = b2_example();
        let sub = w.integral_subsystem();
        assert_eq!(sub.label().to_string(), "A1^L x A1^L");
        let rs = w.root_system();
        let strings: Vec<String> = sub.positive_strings();
        assert_eq!(strings, vec!["a1", "a1+2a2"]);
        assert!(!sub.contains(rs.root_index(&[0, 1]).unwrap()));
        assert!(!sub.contains(rs.root_index(&[1, 1]).unwrap()));
    }

    #[test]
    fn integral_subsystem_of_linear_weights() {
        // Integral weight: everything integral.
        let rs = RootSystem::build_str("A2").unwrap();
        let q0 = ToralWeight::trivial(rs.clone());
        assert!(q0.is_integral());
        // q^{omega1/2} in A2: only +-alpha2 integral.
        let half = parse_weight(&rs, "q^{1/2,0}").unwrap();
        let sub = half.integral_subsystem();
        assert_eq!(sub.positive_strings(), vec!["a2"]);
        // Proposition: for linear weights membership is <lambda, alpha> in Z
        // and the modified reflections carry trivial signs.
        for k in sub.positive_members().iter() {
            let refl = half.modified_reflection(*k).unwrap();
            assert!(refl.is_plain_sign());
        }
    }

    #[test]
    fn modified_reflection_signs_in_example() {
        let w = b2_example();
        let rs = w.root_system();
        let a1 = rs.root_index(&[1, 0]).unwrap();
        let beta = rs.root_index(&[1, 2]).unwrap();
        // t(a1) = 0: plain; t(beta) = 1/2: genuine sign.
        assert!(w.modified_reflection(a1).unwrap().is_plain_sign());
        assert!(!w.modified_reflection(beta).unwrap().is_plain_sign());
        // Non-integral root is rejected.
        let a2 = rs.root_index(&[0, 1]).unwrap();
        assert_eq!(w.modified_reflection(a2), Err(NotIntegralRoot));
        // Modified reflections are involutions.
        for &k in [a1, beta].iter() {
            let r = w.modified_reflection(k).unwrap();
            let sq = r.compose(&r);
            assert_eq!(sq, ExtendedWeylElement::identity(rs));
        }
    }

    #[test]
    fn linkage_integers_of_example() {
        let w = b2_example();
        let rs = w.root_system();
        let a1 = rs.root_index(&[1, 0]).unwrap();
        let beta = rs.root_index(&[1, 2]).unwrap();
        assert_eq!(w.linkage_integer(a1), Ok(1));
        assert_eq!(w.linkage_integer(beta), Ok(1));
        let pairs = w.vanishing_pairs();
        assert_eq!(pairs, vec![(1, a1), (1, beta)]);
        assert!(!w.verma_irreducible());
        assert!(w.is_dominant());
        assert!(!w.is_antidominant());
    }

    #[test]
    fn a1_vanishing_set() {
        let rs = RootSystem::build_str("A1").unwrap();
        for m in 0..4i64 {
            let lam = rs.fundamental_weight(0).scale(&rat_int(m));
            let w = ToralWeight::linear(rs.clone(), &lam);
            let pairs = w.vanishing_pairs();
            assert_eq!(pairs.len(), 1);
            assert_eq!(pairs[0].0, (m + 1) as u64);
        }
        // antidominant: q^{-2 rho} has empty vanishing set
        let anti = ToralWeight::linear(rs.clone(), &rs.rho().scale(&rat_int(-2)));
        assert!(anti.vanishing_pairs().is_empty());
        assert!(anti.verma_irreducible());
        // q^{-1} = q^{-rho} sits at the fixed point: n_alpha = 0
        let fixed = ToralWeight::linear(rs.clone(), &rs.rho().neg());
        assert!(fixed.verma_irreducible());
        assert!(fixed.is_dominant() && fixed.is_antidominant());
    }

    #[test]
    fn dot_action_on_linear_weights_is_classical() {
        let rs = RootSystem::build_str("A2").unwrap();
        let lambda = rs.from_weight_coords(&[rat_int(2), rat_int(-1)]);
        let w = ToralWeight::linear(rs.clone(), &lambda);
        let alpha = rs.simple_root(0);
        let refl = w.modified_reflection(alpha).unwrap();
        let moved = refl.dot(&w);
        // classical s_alpha . lambda = s_alpha(lambda + rho) - rho
        let classical = rs
            .reflect_vector(&lambda.add(rs.rho()), alpha)
            .sub(rs.rho());
        assert_eq!(moved, ToralWeight::linear(rs.clone(), &classical));
        // identity acts trivially
        let id = ExtendedWeylElement::identity(&rs);
        assert_eq!(id.dot(&w), w);
    }

    #[test]
    fn reflection_moves_weight_down_by_m_alpha() {
        // Lemma: (m, alpha) in the vanishing set implies
        // s_alpha^Lambda . Lambda = Lambda q^{-m alpha}.
        for lit in ["t=0,c=0;t=1/4,c=-1", "t=0,c=3;t=0,c=0"] {
            let rs = RootSystem::build_str("B2").unwrap();
            let w = parse_weight(&rs, lit).unwrap();
            for (m, alpha) in w.vanishing_pairs() {
                let refl = w.modified_reflection(alpha).unwrap();
                let moved = refl.dot(&w);
                let shift = LatticeVector::from_root_coords_i64(&rs.root(alpha).coords)
                    .scale(&rat_int(-(m as i64)));
                // q^{-m alpha} multiplies exponents; alpha in Q subset P.
                let expect = w.mul_q_power(&shift);
                assert_eq!(moved, expect, "weight {lit}, root {alpha}");
            }
        }
    }

    #[test]
    fn twist_invariance_of_integral_subsystem() {
        let rs = RootSystem::build_str("B2").unwrap();
        let w = b2_example();
        let base = w.integral_subsystem().positive_members().to_vec();
        // q^mu twist for mu in P
        let mu = rs.fundamental_weight(0);
        let twisted = w.mul_q_power(&mu);
        assert_eq!(twisted.integral_subsystem().positive_members(), base);
        // sign twist
        let sigma = vec![rat(1, 2), Rat::zero()];
        let signed = w.twist_sign(&sigma);
        assert_eq!(signed.integral_subsystem().positive_members(), base);
    }

    #[test]
    fn orbit_of_example_weight() {
        let w = b2_example();
        let data = w.integral_coxeter(100).unwrap();
        assert_eq!(data.coxeter.order(), 4);
        let (orbit, stab) = data.orbit(&w);
        assert_eq!(orbit.len(), 4);
        assert_eq!(stab, vec![0]);
        assert!(data.is_regular(&w));
        // dominant regular: witness is the longest element, length 2.
        let (e, anti) = data.minimal_antidominant_witness(&w);
        assert_eq!(data.coxeter.group().length(e), 2);
        assert!(anti.is_antidominant());
    }

    #[test]
    fn orbit_of_integral_weights_in_a2() {
        let rs = RootSystem::build_str("A2").unwrap();
        // q^0: regular, orbit 6, witness w0.
        let q0 = ToralWeight::trivial(rs.clone());
        let data = q0.integral_coxeter(100).unwrap();
        assert_eq!(data.coxeter.order(), 6);
        let (orbit, stab) = data.orbit(&q0);
        assert_eq!((orbit.len(), stab.len()), (6, 1));
        let (e, _) = data.minimal_antidominant_witness(&q0);
        assert_eq!(e, data.coxeter.group().longest());
        // q^{-rho}: fixed point of the dot action.
        let fixed = ToralWeight::linear(rs.clone(), &rs.rho().neg());
        let data = fixed.integral_coxeter(100).unwrap();
        let (orbit, stab) = data.orbit(&fixed);
        assert_eq!((orbit.len(), stab.len()), (1, 6));
        let (e, anti) = data.minimal_antidominant_witness(&fixed);
        assert_eq!(e, 0);
        assert_eq!(anti, fixed);
    }

    #[test]
    fn orbit_size_times_stabilizer_is_group_order() {
        let rs = RootSystem::build_str("B2").unwrap();
        for lit in [
            "t=0,c=0;t=0,c=0",
            "t=0,c=1;t=0,c=0",
            "t=0,c=0;t=1/4,c=-1",
            "t=1/2,c=0;t=0,c=1/2",
            "t=0,c=-2;t=0,c=-1",
        ] {
            let w = parse_weight(&rs, lit).unwrap();
            let data = w.integral_coxeter(100).unwrap();
            let (orbit, stab) = data.orbit(&w);
            assert_eq!(orbit.len() * stab.len(), data.coxeter.order(), "{lit}");
            // dominant and antidominant representatives exist
            assert!(orbit.iter().any(|x| x.is_dominant()), "{lit}");
            assert!(orbit.iter().any(|x| x.is_antidominant()), "{lit}");
        }
    }

    #[test]
    fn specialization_values() {
        // q^m in A1 at ell = 5: value zeta_5^m.
        let rs = RootSystem::build_str("A1").unwrap();
        let w = parse_weight(&rs, "t=0,c=3").unwrap();
        let sp = w.specialize(5).unwrap();
        assert_eq!(sp.values[0], Cyclotomic::root_of_unity(5, 3));
        // Example weight at ell = 5: K_{a2} value is zeta_20.
        let w = b2_example();
        let sp = w.specialize(5).unwrap();
        assert_eq!(sp.values[0], Cyclotomic::one());
        assert_eq!(
            sp.values[1],
            Cyclotomic::root_of_unity(4, 1).mul(&Cyclotomic::root_of_unity(5, -1))
        );
        assert_eq!(sp.values[1], Cyclotomic::root_of_unity(20, 1));
        // fractional exponent refuses to specialize
        let rs = RootSystem::build_str("A1").unwrap();
        let frac = parse_weight(&rs, "t=0,c=1/2").unwrap();
        assert_eq!(frac.specialize(5), Err(NonIntegralExponent));
    }

    #[test]
    fn admissibility_rules() {
        let w = b2_example(); // torsion conductor 4
        assert!(!w.is_admissible(6)); // even
        assert!(!w.is_admissible(1)); // too small
        assert!(w.is_admissible(5));
        assert!(w.is_admissible(7));
        assert!(w.is_admissible(3));
        let rs = RootSystem::build_str("G2").unwrap();
        let g2w = ToralWeight::trivial(rs);
        assert!(!g2w.is_admissible(9)); // divisible by 3 with a G2 component
        assert!(g2w.is_admissible(5));
        // torsion conductor sharing a factor with ell
        let rs = RootSystem::build_str("A1").unwrap();
        let w = parse_weight(&rs, "t=1/5").unwrap();
        assert!(!w.is_admissible(5));
        assert!(w.is_admissible(7));
    }
}
