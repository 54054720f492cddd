//! Kazhdan-Lusztig basis, structure constants, and Lusztig's a-function.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{CoxeterSystem, HeckeElement, VPoly};

/// The full table of Kazhdan-Lusztig basis elements of a finite system,
/// expanded in the T-basis.
pub struct KlTable<'a> {
    system: &'a CoxeterSystem,
    c: Vec<HeckeElement>,
}

impl<'a> KlTable<'a> {
    /// Compute every C_w by induction on length: C_w = C_{ws} C_s minus
    /// integer multiples of lower basis elements.
    pub fn build(system: &'a CoxeterSystem) -> KlTable<'a> {
        let g = system.group();
        let order = g.order();
        let mut c: Vec<HeckeElement> = Vec::with_capacity(order);
        // BFS element order is nondecreasing in length, so ws < w is ready.
        for w in 0..order {
            if w == 0 {
                c.push(HeckeElement::t(0));
                continue;
            }
            let word = g.word(w);
            let s = *word.last().unwrap() as usize;
            let ws = g.right_mul_gen(w, s);
            debug_assert!(g.length(ws) < g.length(w));
            // C_s = T_s + v^{-1}.
            let cs = {
                let mut h = HeckeElement::t(g.element_of_word(&[s as u8]));
                h.add_term(0, VPoly::v_pow(-1));
                h
            };
            let mut p = system.mul(&c[ws], &cs);
            // Subtract mu * C_z for z of smaller length, largest first.
            let support: Vec<u32> = p.terms.keys().copied().collect();
            for &z in support.iter().rev() {
                if z as usize == w {
                    continue;
                }
                let d = p.coefficient(z as usize).nonneg_part();
                if d.is_zero() {
                    continue;
                }
                assert!(
                    d.as_constant().is_some(),
                    "KL correction coefficient must be an integer"
                );
                p = p.sub(&c[z as usize].scale_poly(&d));
            }
            debug_assert_eq!(p.coefficient(w), VPoly::one());
            c.push(p);
        }
        KlTable { system, c }
    }

    pub fn basis_element(&self, w: usize) -> &HeckeElement {
        &self.c[w]
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.system
    }

    /// Expand a Hecke element in the KL basis.
    pub fn expand(&self, h: &HeckeElement) -> BTreeMap<usize, VPoly> {
        let mut rem = h.clone();
        let mut out = BTreeMap::new();
        while let Some((&z, _)) = rem.terms.iter().next_back() {
            let coeff = rem.coefficient(z as usize);
            rem = rem.sub(&self.c[z as usize].scale_poly(&coeff));
            out.insert(z as usize, coeff);
        }
        out
    }

    /// Structure constants h_{x,y,z} of C_x C_y in the KL basis.
    pub fn structure_constants(&self, x: usize, y: usize) -> BTreeMap<usize, VPoly> {
        let p = self.system.mul(&self.c[x], &self.c[y]);
        self.expand(&p)
    }

    /// Lusztig's a-function: a(z) = max over x, y of deg h_{x,y,z}.
    pub fn a_function(&self) -> Vec<u64> {
        let order = self.system.order();
        let per_x: Vec<Vec<i64>> = (0..order)
            .into_par_iter()
            .map(|x| {
                let mut amax = vec![-1i64; order];
                // Precompute T_u * C_y reuse per y is the expensive part; for
                // a fixed x we expand C_x once and walk all y.
                for y in 0..order {
                    for (z, h) in self.structure_constants(x, y) {
                        if let Some(d) = h.degree() {
                            if d > amax[z] {
                                amax[z] = d;
                            }
                        }
                    }
                }
                amax
            })
            .collect();
        let mut a = vec![0i64; order];
        for row in per_x {
            for (z, d) in row.into_iter().enumerate() {
                a[z] = a[z].max(d);
            }
        }
        a.into_iter()
            .map(|d| u64::try_from(d).expect("a-function values are nonnegative"))
            .collect()
    }

    /// Check bar-invariance of C_w directly from the involution.
    pub fn is_bar_invariant(&self, w: usize) -> bool {
        self.system.bar(&self.c[w]) == self.c[w]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::CoxeterSystem;

    #[test]
    fn rank_one_basis() {
        let cs = CoxeterSystem::from_type("A1", 10).unwrap();
        let kl = KlTable::build(&cs);
        let s = 1; // only nonidentity element
        let c_s = kl.basis_element(s);
        assert_eq!(c_s.coefficient(s), VPoly::one());
        assert_eq!(c_s.coefficient(0), VPoly::v_pow(-1));
    }

    #[test]
    fn a2_kl_polynomials_trivial() {
        let cs = CoxeterSystem::from_type("A2", 100).unwrap();
        let g = cs.group();
        let kl = KlTable::build(&cs);
        // Every coefficient of C_w at T_y is v^{l(y)-l(w)} for y <= w.
        for w in 0..cs.order() {
            for (&y, p) in kl.basis_element(w).terms.iter() {
                let expect = VPoly::v_pow(g.length(y as usize) as i64 - g.length(w) as i64);
                assert_eq!(*p, expect, "w={w} y={y}");
            }
            assert!(kl.is_bar_invariant(w), "C_{w} not bar invariant");
        }
    }

    #[test]
    fn bar_invariance_b2_g2() {
        for t in ["B2", "G2"] {
            let cs = CoxeterSystem::from_type(t, 100).unwrap();
            let kl = KlTable::build(&cs);
            for w in 0..cs.order() {
                assert!(kl.is_bar_invariant(w), "{t}: C_{w}");
            }
        }
    }

    #[test]
    fn cs_squared() {
        let cs = CoxeterSystem::from_type("A2", 100).unwrap();
        let kl = KlTable::build(&cs);
        let s = cs.group().element_of_word(&[0]);
        let h = kl.structure_constants(s, s);
        assert_eq!(h.len(), 1);
        let expect = VPoly::v_pow(1).add(&VPoly::v_pow(-1));
        assert_eq!(h[&s], expect);
    }

    #[test]
    fn identity_acts_trivially() {
        let cs = CoxeterSystem::from_type("B2", 100).unwrap();
        let kl = KlTable::build(&cs);
        for y in 0..cs.order() {
            let h = kl.structure_constants(0, y);
            assert_eq!(h.len(), 1);
            assert_eq!(h[&y], VPoly::one());
        }
    }

    #[test]
    fn a_function_a2() {
        let cs = CoxeterSystem::from_type("A2", 100).unwrap();
        let kl = KlTable::build(&cs);
        let a = kl.a_function();
        let mut sorted = a.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 1, 1, 1, 3]);
        assert_eq!(a[0], 0);
        assert_eq!(a[cs.group().longest()], 3);
    }

    #[test]
    fn a_function_b2() {
        let cs = CoxeterSystem::from_type("B2", 100).unwrap();
        let kl = KlTable::build(&cs);
        let a = kl.a_function();
        let mut sorted = a.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 1, 1, 1, 1, 1, 4]);
    }

    #[test]
    fn a_function_inverse_symmetry() {
        let cs = CoxeterSystem::from_type("B2", 100).unwrap();
        let kl = KlTable::build(&cs);
        let a = kl.a_function();
        for w in 0..cs.order() {
            assert_eq!(a[w], a[cs.group().inverse(w)]);
        }
    }
}
