//! Hecke algebras of finite Coxeter systems over Z[v, v^-1], the
//! Kazhdan-Lusztig basis, structure constants, Lusztig's a-function, and the
//! two-sided cell of elements with a unique reduced expression.

pub mod kl;
pub mod vpoly;

use std::collections::BTreeMap;

use crate::rootsys::{classify_cartan, GroupTooLarge, InvalidType, RootSystem, Rs, TypeLabel, WeylGroup};

pub use kl::KlTable;
pub use vpoly::VPoly;

/// Symmetrizers for a crystallographic Cartan matrix: the unique relatively
/// prime positive integers per component with d_i a_ij = d_j a_ji.
pub fn symmetrizers_from_cartan(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<i64>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        // Propagate length ratios over the component, then clear denominators.
        let mut ratios: Vec<(usize, i64, i64)> = vec![(start, 1, 1)]; // (node, num, den)
        let mut stack = vec![start];
        let mut seen = vec![false; n];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            let (num_i, den_i) = ratios
                .iter()
                .find(|(k, _, _)| *k == i)
                .map(|&(_, a, b)| (a, b))
                .unwrap();
            for j in 0..n {
                if j == i || cartan[i][j] == 0 || seen[j] {
                    continue;
                }
                // d_j / d_i = a_ij / a_ji.
                let num_j = num_i * cartan[i][j];
                let den_j = den_i * cartan[j][i];
                let g = num_integer::gcd(num_j.abs(), den_j.abs()).max(1);
                ratios.push((j, num_j / g, den_j / g));
                seen[j] = true;
                stack.push(j);
            }
        }
        let mut lcm_den = 1i64;
        for &(_, _, den) in &ratios {
            lcm_den = num_integer::lcm(lcm_den, den.abs().max(1));
        }
        let mut vals: Vec<(usize, i64)> = ratios
            .iter()
            .map(|&(k, num, den)| (k, num * (lcm_den / den)))
            .collect();
        let g = vals
            .iter()
            .fold(0i64, |acc, &(_, v)| num_integer::gcd(acc, v.abs()));
        for (k, v) in vals.iter_mut() {
            d[*k] = Some(*v / g.max(1));
        }
    }
    d.into_iter().map(|x| x.unwrap()).collect()
}

/// A finite Coxeter system realized on its own (abstract) root system, with
/// the Weyl group fully enumerated.
pub struct CoxeterSystem {
    rs: Rs,
    group: WeylGroup,
    label: TypeLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    #[error(transparent)]
    TooLarge(#[from] GroupTooLarge),
    #[error(transparent)]
    BadType(#[from] InvalidType),
}

impl CoxeterSystem {
    /// Build from a crystallographic Cartan matrix.
    pub fn from_cartan(cartan: Vec<Vec<i64>>, cap: usize) -> Result<CoxeterSystem, CoxeterError> {
        let sym = symmetrizers_from_cartan(&cartan);
        let norms: Vec<i64> = sym.iter().map(|d| 2 * d).collect();
        let comps = classify_cartan(&cartan, &norms)?;
        let label = TypeLabel(comps.iter().map(|(t, _)| *t).collect());
        let rs = RootSystem::from_cartan_data(label.clone(), cartan, sym);
        let group = WeylGroup::enumerate(rs.clone(), cap)?;
        Ok(CoxeterSystem { rs, group, label })
    }

    pub fn from_type(s: &str, cap: usize) -> Result<CoxeterSystem, CoxeterError> {
        let rs = RootSystem::build_str(s)?;
        let group = WeylGroup::enumerate(rs.clone(), cap)?;
        Ok(CoxeterSystem {
            label: rs.label().clone(),
            rs,
            group,
        })
    }

    pub fn label(&self) -> &TypeLabel {
        &self.label
    }

    pub fn root_system(&self) -> &Rs {
        &self.rs
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// The basis element T_w.
    pub fn t_basis(&self, w: usize) -> HeckeElement {
        HeckeElement::t(w)
    }

    /// Left multiplication T_s * h resolved by the quadratic relation.
    pub fn left_mul_gen(&self, s: usize, h: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (&w, p) in h.terms.iter() {
            let sw = self.group.left_mul_gen(s, w as usize);
            if self.group.length(sw) > self.group.length(w as usize) {
                out.add_term(sw as u32, p.clone());
            } else {
                // T_s T_w = T_{sw} + (v - v^-1) T_w.
                out.add_term(sw as u32, p.clone());
                out.add_term(w, p.mul(&VPoly::v_minus_vinv()));
            }
        }
        out
    }

    /// Left multiplication T_x * h.
    pub fn left_mul_t(&self, x: usize, h: &HeckeElement) -> HeckeElement {
        let mut out = h.clone();
        for &s in self.group.word(x).iter().rev() {
            out = self.left_mul_gen(s as usize, &out);
        }
        out
    }

    /// Product of two Hecke elements.
    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (&u, p) in a.terms.iter() {
            let part = self.left_mul_t(u as usize, b);
            for (w, q) in part.terms {
                out.add_term(w, q.mul(p));
            }
        }
        out
    }

    /// Expansion of T_w^{-1} in the T-basis.
    pub fn t_inverse(&self, w: usize) -> HeckeElement {
        // T_w^{-1} = T_{s_k}^{-1} ... T_{s_1}^{-1} for w = s_1 ... s_k.
        let mut h = HeckeElement::t(self.group.identity());
        for &s in self.group.word(w).iter() {
            // multiply on the left by T_s^{-1} = T_s - (v - v^-1).
            let ts = self.left_mul_gen(s as usize, &h);
            h = ts.sub(&h.scale_poly(&VPoly::v_minus_vinv()));
        }
        h
    }

    /// The bar involution: v -> v^{-1}, T_w -> T_{w^{-1}}^{-1}.
    pub fn bar(&self, h: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (&w, p) in h.terms.iter() {
            let inv = self.t_inverse(self.group.inverse(w as usize));
            for (u, q) in inv.terms {
                out.add_term(u, q.mul(&p.bar()));
            }
        }
        out
    }

    /// Elements other than the identity with a unique reduced expression.
    pub fn unique_reduced_expression_cell(&self) -> Vec<usize> {
        let counts = self.group.reduced_expression_counts();
        (1..self.order()).filter(|&e| counts[e] == 1).collect()
    }

    /// The translate w0 * cell of the unique-reduced-expression cell.
    pub fn w0_cell(&self) -> Vec<usize> {
        let w0 = self.group.longest();
        let mut out: Vec<usize> = self
            .unique_reduced_expression_cell()
            .into_iter()
            .map(|w| self.group.compose(w0, w))
            .collect();
        out.sort_unstable();
        out
    }
}

/// An element of the Hecke algebra in the T-basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HeckeElement {
    pub terms: BTreeMap<u32, VPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        HeckeElement::default()
    }

    pub fn t(w: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w as u32, VPoly::one());
        HeckeElement { terms }
    }

    pub fn add_term(&mut self, w: u32, p: VPoly) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(VPoly::zero);
        *entry = entry.add(&p);
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (&w, p) in other.terms.iter() {
            out.add_term(w, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (&w, p) in other.terms.iter() {
            out.add_term(w, p.neg());
        }
        out
    }

    pub fn scale_poly(&self, p: &VPoly) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (&w, q) in self.terms.iter() {
            out.add_term(w, q.mul(p));
        }
        out
    }

    pub fn coefficient(&self, w: usize) -> VPoly {
        self.terms.get(&(w as u32)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_relation() {
        let cs = CoxeterSystem::from_type("A2", 100).unwrap();
        let g = cs.group();
        let s = g.element_of_word(&[0]);
        // T_s * T_s = (v - v^-1) T_s + T_e.
        let prod = cs.mul(&cs.t_basis(s), &cs.t_basis(s));
        assert_eq!(prod.coefficient(s), VPoly::v_minus_vinv());
        assert_eq!(prod.coefficient(g.identity()), VPoly::one());
        assert_eq!(prod.terms.len(), 2);
    }

    #[test]
    fn lengths_add() {
        let cs = CoxeterSystem::from_type("A2", 100).unwrap();
        let g = cs.group();
        let s = g.element_of_word(&[0]);
        let t = g.element_of_word(&[1]);
        let st = g.element_of_word(&[0, 1]);
        let prod = cs.mul(&cs.t_basis(s), &cs.t_basis(t));
        assert_eq!(prod, cs.t_basis(st));
    }

    #[test]
    fn t_inverse_really_inverts() {
        let cs = CoxeterSystem::from_type("B2", 100).unwrap();
        for w in 0..cs.order() {
            let inv = cs.t_inverse(w);
            let prod = cs.mul(&cs.t_basis(w), &inv);
            assert_eq!(prod, cs.t_basis(cs.group().identity()), "w = {w}");
        }
    }

    #[test]
    fn symmetrizers_match_builtin_types() {
        for t in ["A3", "B3", "C3", "G2", "F4"] {
            let rs = RootSystem::build_str(t).unwrap();
            assert_eq!(
                symmetrizers_from_cartan(rs.cartan()),
                rs.symmetrizers(),
                "{t}"
            );
        }
    }

    #[test]
    fn coxeter_from_cartan_classifies() {
        let rs = RootSystem::build_str("B2").unwrap();
        let cs = CoxeterSystem::from_cartan(rs.cartan().clone(), 100).unwrap();
        assert_eq!(cs.label().to_string(), "B2");
        assert_eq!(cs.order(), 8);
    }

    #[test]
    fn unique_reduced_cells() {
        let cs = CoxeterSystem::from_type("A2", 100).unwrap();
        assert_eq!(cs.unique_reduced_expression_cell().len(), 4);
        let cs = CoxeterSystem::from_type("B2", 100).unwrap();
        assert_eq!(cs.unique_reduced_expression_cell().len(), 6);
        let cs = CoxeterSystem::from_type("A1", 100).unwrap();
        assert_eq!(cs.unique_reduced_expression_cell().len(), 1);
    }
}
