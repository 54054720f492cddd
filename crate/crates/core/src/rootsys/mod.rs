//! Finite root systems with the symmetrized bilinear form, their Weyl groups
//! as permutations of roots, and derived combinatorics (Kostant partition
//! function, Freudenthal multiplicities, Coxeter numbers).

pub mod freudenthal;
pub mod types;
pub mod weyl;

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::exact::rational::{rat_int, Rat};

pub use freudenthal::{freudenthal_multiplicities, weyl_dimension, NonDominant};
pub use types::{classify_cartan, positive_count, weyl_order, InvalidType, SimpleType, TypeLabel};
pub use weyl::{GroupTooLarge, WeylGroup};

/// One root, in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub coords: Vec<i64>,
    pub norm2: i64,
    pub height: i64,
}

/// Error for operations requiring an irreducible type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("operation requires an irreducible root system, got {0}")]
pub struct Reducible(pub String);

/// A finite root system. Positive roots occupy indices `0..n_pos`, and the
/// negative of root `i` is root `i ^ is_neg`-style pairing via `neg[i]`.
#[derive(Debug)]
pub struct RootSystem {
    label: TypeLabel,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    roots: Vec<Root>,
    n_pos: usize,
    index: HashMap<Vec<i64>, usize>,
    neg: Vec<usize>,
    simple_refl: Vec<Vec<usize>>,
    rho: LatticeVector,
    theta: usize,
    theta_short: usize,
    inv_cartan: Vec<Vec<Rat>>,
}

pub type Rs = Arc<RootSystem>;

impl RootSystem {
    /// Build the root system of a parsed type label.
    pub fn build(label: TypeLabel) -> Rs {
        let (cartan, sym) = types::cartan_of(&label);
        Self::from_cartan_data(label, cartan, sym)
    }

    /// Build from a type string such as `"B2"` or `"A1xA1"`.
    pub fn build_str(s: &str) -> Result<Rs, InvalidType> {
        Ok(Self::build(TypeLabel::parse(s)?))
    }

    /// Build from explicit Cartan data (used for integral subsystem types).
    pub fn from_cartan_data(label: TypeLabel, cartan: Vec<Vec<i64>>, sym: Vec<i64>) -> Rs {
        let n = cartan.len();
        // Generate all roots by closing the simple roots under reflections.
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut coords_list: Vec<Vec<i64>> = vec![];
        let mut stack: Vec<Vec<i64>> = vec![];
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            stack.push(e);
        }
        while let Some(v) = stack.pop() {
            if index.contains_key(&v) {
                continue;
            }
            index.insert(v.clone(), usize::MAX);
            coords_list.push(v.clone());
            for i in 0..n {
                // s_i(v) = v - <v, a_i^vee> a_i, with <v, a_i^vee> = (A v)_i.
                let c: i64 = (0..n).map(|j| cartan[i][j] * v[j]).sum();
                let mut w = v.clone();
                w[i] -= c;
                if !index.contains_key(&w) {
                    stack.push(w);
                }
            }
        }
        // Order: positive roots by (height, coords), then matching negatives.
        let bilinear = |x: &[i64], y: &[i64]| -> i64 {
            let mut acc = 0;
            for i in 0..n {
                for j in 0..n {
                    acc += x[i] * sym[i] * cartan[i][j] * y[j];
                }
            }
            acc
        };
        let mut positives: Vec<Vec<i64>> = coords_list
            .iter()
            .filter(|v| v.iter().sum::<i64>() > 0)
            .cloned()
            .collect();
        positives.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
        let n_pos = positives.len();
        let mut roots = Vec::with_capacity(2 * n_pos);
        for v in positives.iter() {
            roots.push(Root {
                norm2: bilinear(v, v),
                height: v.iter().sum(),
                coords: v.clone(),
            });
        }
        for v in positives.iter() {
            let w: Vec<i64> = v.iter().map(|x| -x).collect();
            roots.push(Root {
                norm2: bilinear(&w, &w),
                height: -roots[roots.len() - n_pos].height,
                coords: w,
            });
        }
        let mut index = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            index.insert(r.coords.clone(), i);
        }
        let neg: Vec<usize> = roots
            .iter()
            .map(|r| {
                let m: Vec<i64> = r.coords.iter().map(|x| -x).collect();
                index[&m]
            })
            .collect();
        // Simple reflection tables on root indices.
        let mut simple_refl = vec![vec![0usize; roots.len()]; n];
        for i in 0..n {
            for (k, r) in roots.iter().enumerate() {
                let c: i64 = (0..n).map(|j| cartan[i][j] * r.coords[j]).sum();
                let mut w = r.coords.clone();
                w[i] -= c;
                simple_refl[i][k] = index[&w];
            }
        }
        // rho: root coordinates solve  A r = (1,...,1).
        let inv_cartan = invert_rational(&cartan);
        let rho_coords: Vec<Rat> = (0..n)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..n {
                    acc += inv_cartan[i][j].clone();
                }
                acc
            })
            .collect();
        let rho = LatticeVector::from_root_coords(rho_coords);
        // Highest (long) root and highest short root among positive DOMINANT roots.
        let is_dominant = |r: &Root| -> bool {
            (0..n).all(|i| (0..n).map(|j| cartan[i][j] * r.coords[j]).sum::<i64>() >= 0)
        };
        let max_norm = roots[..n_pos].iter().map(|r| r.norm2).max().unwrap_or(2);
        let min_norm = roots[..n_pos].iter().map(|r| r.norm2).min().unwrap_or(2);
        let theta = (0..n_pos)
            .filter(|&k| roots[k].norm2 == max_norm && is_dominant(&roots[k]))
            .max_by_key(|&k| roots[k].height)
            .unwrap_or(0);
        let theta_short = (0..n_pos)
            .filter(|&k| roots[k].norm2 == min_norm && is_dominant(&roots[k]))
            .max_by_key(|&k| roots[k].height)
            .unwrap_or(0);
        Arc::new(RootSystem {
            label,
            cartan,
            sym,
            roots,
            n_pos,
            index,
            neg,
            simple_refl,
            rho,
            theta,
            theta_short,
            inv_cartan,
        })
    }

    pub fn label(&self) -> &TypeLabel {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.sym
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = usize> {
        0..self.n_pos
    }

    pub fn all_roots(&self) -> impl Iterator<Item = usize> {
        0..self.roots.len()
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.n_pos
    }

    pub fn negate(&self, idx: usize) -> usize {
        self.neg[idx]
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn simple_root(&self, i: usize) -> usize {
        let mut e = vec![0i64; self.rank()];
        e[i] = 1;
        self.index[&e]
    }

    /// Index of the simple root that `idx` equals, if any.
    pub fn as_simple(&self, idx: usize) -> Option<usize> {
        let c = &self.roots[idx].coords;
        if c.iter().sum::<i64>() == 1 && c.iter().all(|&x| x >= 0) {
            c.iter().position(|&x| x == 1)
        } else {
            None
        }
    }

    pub fn reflect_root(&self, simple: usize, root: usize) -> usize {
        self.simple_refl[simple][root]
    }

    /// Reflection by an arbitrary root, as a root permutation.
    pub fn reflection_perm(&self, root: usize) -> Vec<u32> {
        let alpha = &self.roots[root];
        (0..self.roots.len())
            .map(|k| {
                let beta = &self.roots[k];
                let c = self.pair_roots(k, root);
                let coords: Vec<i64> = beta
                    .coords
                    .iter()
                    .zip(alpha.coords.iter())
                    .map(|(b, a)| b - c * a)
                    .collect();
                self.index[&coords] as u32
            })
            .collect()
    }

    /// (beta, alpha) bilinear form value for two root indices.
    pub fn bilinear_roots(&self, a: usize, b: usize) -> i64 {
        let x = &self.roots[a].coords;
        let y = &self.roots[b].coords;
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            for j in 0..n {
                acc += x[i] * self.sym[i] * self.cartan[i][j] * y[j];
            }
        }
        acc
    }

    /// Cartan pairing <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha).
    pub fn pair_roots(&self, beta: usize, alpha: usize) -> i64 {
        2 * self.bilinear_roots(beta, alpha) / self.roots[alpha].norm2
    }

    /// Bilinear form (v, alpha) between a lattice vector and a root.
    pub fn bilinear_vec_root(&self, v: &LatticeVector, alpha: usize) -> Rat {
        let n = self.rank();
        let a = &self.roots[alpha].coords;
        let mut acc = Rat::zero();
        for i in 0..n {
            if v.coords[i].is_zero() {
                continue;
            }
            let mut row = 0i64;
            for j in 0..n {
                row += self.sym[i] * self.cartan[i][j] * a[j];
            }
            acc += v.coords[i].clone() * rat_int(row);
        }
        acc
    }

    /// Bilinear form between two lattice vectors.
    pub fn bilinear(&self, v: &LatticeVector, w: &LatticeVector) -> Rat {
        let n = self.rank();
        let mut acc = Rat::zero();
        for i in 0..n {
            if v.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if w.coords[j].is_zero() {
                    continue;
                }
                acc += v.coords[i].clone()
                    * rat_int(self.sym[i] * self.cartan[i][j])
                    * w.coords[j].clone();
            }
        }
        acc
    }

    /// Pairing <v, alpha^vee> = 2(v,alpha)/(alpha,alpha).
    pub fn pairing(&self, v: &LatticeVector, alpha: usize) -> Rat {
        self.bilinear_vec_root(v, alpha) * rat_int(2) / rat_int(self.roots[alpha].norm2)
    }

    /// Reflect a lattice vector by the root `alpha`.
    pub fn reflect_vector(&self, v: &LatticeVector, alpha: usize) -> LatticeVector {
        let c = self.pairing(v, alpha);
        let mut coords = v.coords.clone();
        for (i, x) in coords.iter_mut().enumerate() {
            *x -= c.clone() * rat_int(self.roots[alpha].coords[i]);
        }
        LatticeVector::from_root_coords(coords)
    }

    pub fn rho(&self) -> &LatticeVector {
        &self.rho
    }

    /// Index of the highest root (irreducible types).
    pub fn theta(&self) -> Result<usize, Reducible> {
        self.require_irreducible()?;
        Ok(self.theta)
    }

    /// Index of the highest short root (irreducible types).
    pub fn theta_short(&self) -> Result<usize, Reducible> {
        self.require_irreducible()?;
        Ok(self.theta_short)
    }

    fn require_irreducible(&self) -> Result<(), Reducible> {
        if self.label.is_irreducible() {
            Ok(())
        } else {
            Err(Reducible(self.label.to_string()))
        }
    }

    /// Marks of the highest root (coordinates of theta).
    pub fn marks(&self) -> Result<Vec<i64>, Reducible> {
        self.require_irreducible()?;
        Ok(self.roots[self.theta].coords.clone())
    }

    /// Coxeter and dual Coxeter numbers (h, h_vee).
    pub fn coxeter_numbers(&self) -> Result<(u64, u64), Reducible> {
        self.require_irreducible()?;
        let h = self.pairing(&self.rho, self.theta_short) + Rat::one();
        let hv = self.pairing(&self.rho, self.theta) + Rat::one();
        let to_u64 = |r: Rat| u64::try_from(r.to_integer()).expect("Coxeter number fits");
        Ok((to_u64(h), to_u64(hv)))
    }

    /// Fundamental weight as a lattice vector (root coordinates).
    pub fn fundamental_weight(&self, i: usize) -> LatticeVector {
        LatticeVector::from_root_coords(
            (0..self.rank()).map(|r| self.inv_cartan[r][i].clone()).collect(),
        )
    }

    /// Convert weight-basis coordinates to a lattice vector.
    pub fn from_weight_coords(&self, coords: &[Rat]) -> LatticeVector {
        let n = self.rank();
        assert_eq!(coords.len(), n);
        let mut out = vec![Rat::zero(); n];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for r in 0..n {
                out[r] += c.clone() * self.inv_cartan[r][i].clone();
            }
        }
        LatticeVector::from_root_coords(out)
    }

    /// Weight-basis coordinates of a lattice vector: c_i = <v, a_i^vee>.
    pub fn weight_coords(&self, v: &LatticeVector) -> Vec<Rat> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..n {
                    acc += rat_int(self.cartan[i][j]) * v.coords[j].clone();
                }
                acc
            })
            .collect()
    }

    /// Kostant partition function: multisets of positive roots summing to nu.
    pub fn kostant_partition(&self, nu: &LatticeVector) -> u64 {
        let n = self.rank();
        let Some(coords) = nu.as_integer_coords() else {
            return 0;
        };
        if coords.iter().any(|&c| c < 0) {
            return 0;
        }
        // Coin-change DP over the box 0..=nu componentwise.
        let dims: Vec<usize> = coords.iter().map(|&c| c as usize + 1).collect();
        let total: usize = dims.iter().product();
        let strides: Vec<usize> = {
            let mut s = vec![1usize; n];
            for i in (0..n.saturating_sub(1)).rev() {
                s[i] = s[i + 1] * dims[i + 1];
            }
            s
        };
        let mut table = vec![0u64; total];
        table[0] = 1;
        for alpha in 0..self.n_pos {
            let a = &self.roots[alpha].coords;
            if a.iter().zip(coords.iter()).any(|(x, c)| x > c) {
                continue;
            }
            let offset: usize = a
                .iter()
                .zip(strides.iter())
                .map(|(&x, &s)| x as usize * s)
                .sum();
            // Ascending linear index keeps predecessors finalized; the digit
            // check rules out borrows so idx-offset is the componentwise
            // difference.
            for idx in offset..total {
                let mut ok = true;
                let mut rem = idx;
                for i in 0..n {
                    let ci = rem / strides[i];
                    rem %= strides[i];
                    if ci < a[i] as usize {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    table[idx] += table[idx - offset];
                }
            }
        }
        table[total - 1]
    }

    /// Weyl-group orbit of a lattice vector.
    pub fn weyl_orbit_vectors(&self, v: &LatticeVector) -> Vec<LatticeVector> {
        let mut seen = vec![v.clone()];
        let mut frontier = vec![v.clone()];
        while let Some(x) = frontier.pop() {
            for i in 0..self.rank() {
                let y = self.reflect_vector(&x, self.simple_root(i));
                if !seen.contains(&y) {
                    seen.push(y.clone());
                    frontier.push(y);
                }
            }
        }
        seen
    }

    /// Orbit of a root, as root indices.
    pub fn root_orbit(&self, idx: usize) -> Vec<usize> {
        let mut seen = vec![false; self.roots.len()];
        seen[idx] = true;
        let mut out = vec![idx];
        let mut frontier = vec![idx];
        while let Some(k) = frontier.pop() {
            for i in 0..self.rank() {
                let m = self.simple_refl[i][k];
                if !seen[m] {
                    seen[m] = true;
                    out.push(m);
                    frontier.push(m);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Height of the sum of positive-root heights; the top degree of the
    /// graded negative part relevant to truncation bounds.
    pub fn sum_positive_heights(&self) -> i64 {
        self.roots[..self.n_pos].iter().map(|r| r.height).sum()
    }

    /// Display a root as a combination of simple roots, e.g. "a1+2a2".
    pub fn root_string(&self, idx: usize) -> String {
        let r = &self.roots[idx];
        let mut parts: Vec<String> = vec![];
        for (i, &c) in r.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let var = format!("a{}", i + 1);
            let piece = match c {
                1 => var,
                -1 => format!("-{var}"),
                _ => format!("{c}{var}"),
            };
            if parts.is_empty() {
                parts.push(piece);
            } else if c > 0 {
                parts.push(format!("+{piece}"));
            } else {
                parts.push(piece);
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.concat()
        }
    }
}

/// Exact inverse of an integer matrix, as rationals.
fn invert_rational(m: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        rat_int(m[i][j])
                    } else if j - n == i {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                })
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).expect("singular Cartan matrix");
        a.swap(c, p);
        let inv = Rat::one() / a[c][c].clone();
        for j in 0..2 * n {
            a[c][j] *= inv.clone();
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..2 * n {
                    let t = f.clone() * a[c][j].clone();
                    a[i][j] -= t;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// A vector in the rational span of the simple roots, stored in simple-root
/// coordinates. Constructors exist for both the root and weight bases; the
/// conversions are exact and mutually inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeVector {
    pub coords: Vec<Rat>,
}

impl LatticeVector {
    pub fn zero(rank: usize) -> Self {
        LatticeVector {
            coords: vec![Rat::zero(); rank],
        }
    }

    pub fn from_root_coords(coords: Vec<Rat>) -> Self {
        LatticeVector { coords }
    }

    pub fn from_root_coords_i64(coords: &[i64]) -> Self {
        LatticeVector {
            coords: coords.iter().map(|&c| rat_int(c)).collect(),
        }
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(other.coords.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(other.coords.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> LatticeVector {
        LatticeVector {
            coords: self.coords.iter().map(|a| a * r).collect(),
        }
    }

    pub fn neg(&self) -> LatticeVector {
        LatticeVector {
            coords: self.coords.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn height(&self) -> Rat {
        let mut acc = Rat::zero();
        for c in &self.coords {
            acc += c.clone();
        }
        acc
    }

    /// Integer simple-root coordinates, if the vector lies in the root lattice.
    pub fn as_integer_coords(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| crate::exact::rational::as_i64(c))
            .collect()
    }

    pub fn in_root_lattice(&self) -> bool {
        self.as_integer_coords().is_some()
    }
}
