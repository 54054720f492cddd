//! Enumerated Weyl groups: elements as root permutations, reduced words,
//! lengths, and generator multiplication tables.

use std::collections::HashMap;

use super::Rs;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("Weyl group larger than the configured cap ({cap})")]
pub struct GroupTooLarge {
    pub cap: usize,
}

/// A fully enumerated Weyl group. Elements are indexed in BFS order, so
/// lengths are nondecreasing and index 0 is the identity.
pub struct WeylGroup {
    rs: Rs,
    perms: Vec<Vec<u32>>,
    words: Vec<Vec<u8>>,
    index: HashMap<Vec<u32>, usize>,
    right_gen: Vec<Vec<u32>>,
    left_gen: Vec<Vec<u32>>,
    inverse: Vec<u32>,
}

impl WeylGroup {
    pub fn enumerate(rs: Rs, cap: usize) -> Result<WeylGroup, GroupTooLarge> {
        let n = rs.rank();
        let nroots = rs.num_roots();
        let id: Vec<u32> = (0..nroots as u32).collect();
        let gens: Vec<Vec<u32>> = (0..n)
            .map(|i| (0..nroots).map(|k| rs.reflect_root(i, k) as u32).collect())
            .collect();
        let mut perms = vec![id.clone()];
        let mut words: Vec<Vec<u8>> = vec![vec![]];
        let mut index = HashMap::new();
        index.insert(id, 0usize);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = vec![];
            for &e in &frontier {
                for (i, g) in gens.iter().enumerate() {
                    // w * s_i acts by first applying s_i, then w.
                    let p: Vec<u32> = (0..nroots).map(|k| perms[e][g[k] as usize]).collect();
                    if !index.contains_key(&p) {
                        if perms.len() >= cap {
                            return Err(GroupTooLarge { cap });
                        }
                        let mut w = words[e].clone();
                        w.push(i as u8);
                        index.insert(p.clone(), perms.len());
                        next.push(perms.len());
                        perms.push(p);
                        words.push(w);
                    }
                }
            }
            frontier = next;
        }
        let order = perms.len();
        let mut right_gen = vec![vec![0u32; n]; order];
        let mut left_gen = vec![vec![0u32; n]; order];
        for e in 0..order {
            for i in 0..n {
                let rp: Vec<u32> = (0..nroots).map(|k| perms[e][gens[i][k] as usize]).collect();
                right_gen[e][i] = index[&rp] as u32;
                let lp: Vec<u32> = (0..nroots).map(|k| gens[i][perms[e][k] as usize]).collect();
                left_gen[e][i] = index[&lp] as u32;
            }
        }
        let inverse: Vec<u32> = (0..order)
            .map(|e| {
                let mut inv = vec![0u32; nroots];
                for k in 0..nroots {
                    inv[perms[e][k] as usize] = k as u32;
                }
                index[&inv] as u32
            })
            .collect();
        Ok(WeylGroup {
            rs,
            perms,
            words,
            index,
            right_gen,
            left_gen,
            inverse,
        })
    }

    pub fn root_system(&self) -> &Rs {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Reduced word of the element (BFS words are reduced).
    pub fn word(&self, e: usize) -> &[u8] {
        &self.words[e]
    }

    pub fn length(&self, e: usize) -> usize {
        self.words[e].len()
    }

    pub fn inverse(&self, e: usize) -> usize {
        self.inverse[e] as usize
    }

    pub fn right_mul_gen(&self, e: usize, i: usize) -> usize {
        self.right_gen[e][i] as usize
    }

    pub fn left_mul_gen(&self, i: usize, e: usize) -> usize {
        self.left_gen[e][i] as usize
    }

    /// Image of a root index under the element.
    pub fn act_root(&self, e: usize, root: usize) -> usize {
        self.perms[e][root] as usize
    }

    /// Index of the product x*y.
    pub fn compose(&self, x: usize, y: usize) -> usize {
        let mut e = x;
        for &i in self.words[y].iter() {
            e = self.right_mul_gen(e, i as usize);
        }
        e
    }

    /// Element with the given word (not necessarily reduced).
    pub fn element_of_word(&self, word: &[u8]) -> usize {
        let mut e = 0;
        for &i in word {
            e = self.right_mul_gen(e, i as usize);
        }
        e
    }

    /// The longest element.
    pub fn longest(&self) -> usize {
        (0..self.order()).max_by_key(|&e| self.length(e)).unwrap()
    }

    /// Number of reduced expressions of each element.
    pub fn reduced_expression_counts(&self) -> Vec<u64> {
        let order = self.order();
        let mut by_length: Vec<usize> = (0..order).collect();
        by_length.sort_by_key(|&e| self.length(e));
        let mut counts = vec![0u64; order];
        counts[0] = 1;
        for &e in &by_length[1..] {
            let mut total = 0;
            for i in 0..self.rank() {
                let f = self.right_mul_gen(e, i);
                if self.length(f) < self.length(e) {
                    total += counts[f];
                }
            }
            counts[e] = total;
        }
        counts
    }

    /// Permutation form, for conjugation computations.
    pub fn perm(&self, e: usize) -> &[u32] {
        &self.perms[e]
    }

    /// Look up an element by its permutation of roots.
    pub fn index_of_perm(&self, p: &[u32]) -> Option<usize> {
        self.index.get(p).copied()
    }
}
