//! Root subsystems: reflection closures, closedness and duality tests,
//! Borel-de Siebenthal enumeration of maximal closed subsystems, exhaustive
//! subsystem enumeration at small rank, the maximal-subsystem catalog, and
//! the gamma invariant.

pub mod catalog;
pub mod realize;

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::rootsys::{classify_cartan, GroupTooLarge, Rs, SimpleType, WeylGroup};

pub use catalog::{catalog_maximal_classes, kappa0_from_catalog, CatalogClass};
pub use realize::{realize_subsystem, cartan_closed_witness, FieldSpec, RealizeOutcome, NotApplicable};

/// Length decoration of a subsystem component relative to the ambient system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LengthClass {
    Plain,
    Long,
    Short,
}

/// One component of a subsystem type, e.g. `A2^L`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledComponent {
    pub abstract_type: SimpleType,
    pub length: LengthClass,
}

impl fmt::Display for LabeledComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.abstract_type)?;
        match self.length {
            LengthClass::Plain => Ok(()),
            LengthClass::Long => write!(f, "^L"),
            LengthClass::Short => write!(f, "^S"),
        }
    }
}

/// Decorated type of a subsystem: components sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SubsystemLabel(pub Vec<LabeledComponent>);

impl SubsystemLabel {
    fn sort(&mut self) {
        self.0.sort_by(|a, b| {
            b.abstract_type
                .rank
                .cmp(&a.abstract_type.rank)
                .then(a.abstract_type.letter.cmp(&b.abstract_type.letter))
                .then(a.length.cmp(&b.length))
        });
    }
}

impl fmt::Display for SubsystemLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "empty");
        }
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// A reflection-closed, negation-closed subset of a root system.
#[derive(Clone)]
pub struct RootSubsystem {
    rs: Rs,
    members: Vec<bool>,
    positive: Vec<usize>,
    simples: Vec<usize>,
    label: SubsystemLabel,
}

impl fmt::Debug for RootSubsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RootSubsystem({} in {}: {:?})",
            self.label,
            self.rs.label(),
            self.positive
        )
    }
}

impl PartialEq for RootSubsystem {
    fn eq(&self, other: &Self) -> bool {
        self.positive == other.positive
    }
}

impl RootSubsystem {
    /// Smallest subsystem containing `seed` (indices of ambient roots).
    pub fn reflection_closure(rs: &Rs, seed: &[usize]) -> RootSubsystem {
        let mut members = vec![false; rs.num_roots()];
        let mut stack: Vec<usize> = vec![];
        for &r in seed {
            for k in [r, rs.negate(r)] {
                if !members[k] {
                    members[k] = true;
                    stack.push(k);
                }
            }
        }
        while let Some(alpha) = stack.pop() {
            let in_set: Vec<usize> = (0..rs.num_roots()).filter(|&k| members[k]).collect();
            for &beta in in_set.iter() {
                // s_beta(alpha) and s_alpha(beta)
                for (a, b) in [(alpha, beta), (beta, alpha)] {
                    let c = rs.pair_roots(a, b);
                    let coords: Vec<i64> = rs
                        .root(a)
                        .coords
                        .iter()
                        .zip(rs.root(b).coords.iter())
                        .map(|(x, y)| x - c * y)
                        .collect();
                    let idx = rs.root_index(&coords).expect("reflection stays in the system");
                    if !members[idx] {
                        members[idx] = true;
                        stack.push(idx);
                    }
                }
            }
        }
        Self::from_members(rs.clone(), members)
    }

    /// Build from a membership vector (must already be a subsystem).
    pub fn from_members(rs: Rs, members: Vec<bool>) -> RootSubsystem {
        let positive: Vec<usize> = rs.positive_roots().filter(|&k| members[k]).collect();
        let simples = simple_system(&rs, &positive);
        let label = label_of(&rs, &simples);
        RootSubsystem {
            rs,
            members,
            positive,
            simples,
            label,
        }
    }

    pub fn empty(rs: Rs) -> RootSubsystem {
        let members = vec![false; rs.num_roots()];
        Self::from_members(rs, members)
    }

    /// The full ambient system as a subsystem.
    pub fn full(rs: Rs) -> RootSubsystem {
        let members = vec![true; rs.num_roots()];
        Self::from_members(rs, members)
    }

    pub fn ambient(&self) -> &Rs {
        &self.rs
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.members[idx]
    }

    pub fn positive_members(&self) -> &[usize] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.positive.len() == self.rs.num_positive()
    }

    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    /// The simple system: indecomposable positive members.
    pub fn simple_system(&self) -> &[usize] {
        &self.simples
    }

    pub fn label(&self) -> &SubsystemLabel {
        &self.label
    }

    /// Cartan matrix of the simple system.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.simples.len();
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                a[i][j] = self.rs.pair_roots(self.simples[j], self.simples[i]);
            }
        }
        a
    }

    /// Membership bitmask over positive ambient roots.
    pub fn positive_mask(&self) -> u64 {
        assert!(self.rs.num_positive() <= 64);
        let mut m = 0u64;
        for &p in &self.positive {
            m |= 1 << p;
        }
        m
    }

    /// Is the subsystem closed under root addition within the ambient system?
    pub fn is_closed(&self) -> bool {
        for &a in self.all_members().iter() {
            for &b in self.all_members().iter() {
                let sum: Vec<i64> = self
                    .rs
                    .root(a)
                    .coords
                    .iter()
                    .zip(self.rs.root(b).coords.iter())
                    .map(|(x, y)| x + y)
                    .collect();
                if let Some(idx) = self.rs.root_index(&sum) {
                    if !self.members[idx] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn all_members(&self) -> Vec<usize> {
        (0..self.rs.num_roots()).filter(|&k| self.members[k]).collect()
    }

    /// Is the dual subsystem closed inside the dual root system?
    pub fn is_dual_closed(&self) -> bool {
        // Represent coroots on a common integer lattice: scale by
        // L = lcm of (norm2 / 2) over all roots.
        let l = self
            .rs
            .all_roots()
            .map(|k| self.rs.root(k).norm2 / 2)
            .fold(1i64, num_integer::lcm);
        let coroot = |k: usize| -> Vec<i64> {
            let f = l / (self.rs.root(k).norm2 / 2);
            self.rs.root(k).coords.iter().map(|&c| c * f).collect()
        };
        let mut dual_index: HashMap<Vec<i64>, usize> = HashMap::new();
        for k in self.rs.all_roots() {
            dual_index.insert(coroot(k), k);
        }
        let members = self.all_members();
        for &a in &members {
            for &b in &members {
                let sum: Vec<i64> = coroot(a)
                    .iter()
                    .zip(coroot(b).iter())
                    .map(|(x, y)| x + y)
                    .collect();
                if let Some(&idx) = dual_index.get(&sum) {
                    if !self.members[idx] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Positive members as display strings.
    pub fn positive_strings(&self) -> Vec<String> {
        self.positive.iter().map(|&k| self.rs.root_string(k)).collect()
    }
}

/// Indecomposable elements of a positive system.
fn simple_system(rs: &Rs, positive: &[usize]) -> Vec<usize> {
    let set: HashSet<usize> = positive.iter().copied().collect();
    positive
        .iter()
        .copied()
        .filter(|&a| {
            // a is decomposable if a = b + c with b, c positive members.
            !positive.iter().any(|&b| {
                if b == a {
                    return false;
                }
                let diff: Vec<i64> = rs
                    .root(a)
                    .coords
                    .iter()
                    .zip(rs.root(b).coords.iter())
                    .map(|(x, y)| x - y)
                    .collect();
                rs.root_index(&diff).map_or(false, |idx| set.contains(&idx))
            })
        })
        .collect()
}

/// Decorated label of the subsystem spanned by the given simple system.
fn label_of(rs: &Rs, simples: &[usize]) -> SubsystemLabel {
    if simples.is_empty() {
        return SubsystemLabel::default();
    }
    let n = simples.len();
    let mut cartan = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            cartan[i][j] = rs.pair_roots(simples[j], simples[i]);
        }
    }
    let norms: Vec<i64> = simples.iter().map(|&k| rs.root(k).norm2).collect();
    let comps = classify_cartan(&cartan, &norms).expect("subsystem Cartan is crystallographic");
    let ambient_norms: HashSet<i64> = rs.all_roots().map(|k| rs.root(k).norm2).collect();
    let two_lengths = ambient_norms.len() > 1;
    let max_norm = ambient_norms.iter().copied().max().unwrap();
    let min_norm = ambient_norms.iter().copied().min().unwrap();
    let mut label = SubsystemLabel(
        comps
            .into_iter()
            .map(|(t, nodes)| {
                let comp_norms: HashSet<i64> = nodes.iter().map(|&v| norms[v]).collect();
                let length = if !two_lengths {
                    LengthClass::Plain
                } else if comp_norms.len() == 1 {
                    let v = comp_norms.into_iter().next().unwrap();
                    if v == max_norm {
                        LengthClass::Long
                    } else if v == min_norm {
                        LengthClass::Short
                    } else {
                        LengthClass::Plain
                    }
                } else {
                    LengthClass::Plain
                };
                LabeledComponent {
                    abstract_type: t,
                    length,
                }
            })
            .collect(),
    );
    label.sort();
    label
}

/// Maximal closed root subsystems up to conjugacy, per Borel-de Siebenthal:
/// bases obtained by deleting a node with mark 1, or adjoining the lowest
/// root and deleting a node with prime mark.
pub fn borel_de_siebenthal(rs: &Rs, cap: usize) -> Result<Vec<RootSubsystem>, crate::rootsys::Reducible> {
    let marks = rs.marks()?;
    let theta = rs.theta()?;
    let minus_theta = rs.negate(theta);
    let mut subs: Vec<RootSubsystem> = vec![];
    for (i, &h) in marks.iter().enumerate() {
        let others: Vec<usize> = (0..rs.rank()).filter(|&j| j != i).map(|j| rs.simple_root(j)).collect();
        if h == 1 {
            subs.push(RootSubsystem::reflection_closure(rs, &others));
        }
        if is_prime(h) {
            let mut base = others;
            base.push(minus_theta);
            subs.push(RootSubsystem::reflection_closure(rs, &base));
        }
    }
    Ok(dedupe_classes(rs, subs, cap))
}

/// Deduplicate subsystems up to W-conjugacy: orbit search when the ambient
/// Weyl group fits under `cap`, label comparison otherwise (the catalog types
/// at stake are label-distinct beyond that size).
fn dedupe_classes(rs: &Rs, subs: Vec<RootSubsystem>, cap: usize) -> Vec<RootSubsystem> {
    match WeylGroup::enumerate(rs.clone(), cap) {
        Ok(group) => {
            let mut seen: HashSet<u64> = HashSet::new();
            let mut out = vec![];
            for s in subs {
                let key = canonical_mask(&group, &s);
                if seen.insert(key) {
                    out.push(s);
                }
            }
            out
        }
        Err(_) => {
            let mut seen: HashSet<String> = HashSet::new();
            let mut out = vec![];
            for s in subs {
                if seen.insert(s.label().to_string()) {
                    out.push(s);
                }
            }
            out
        }
    }
}

/// Minimal positive-root bitmask over the W-orbit of the subsystem.
fn canonical_mask(group: &WeylGroup, sub: &RootSubsystem) -> u64 {
    let rs = group.root_system();
    let mut best = u64::MAX;
    for e in 0..group.order() {
        let mut m = 0u64;
        for &p in sub.positive_members() {
            let img = group.act_root(e, p);
            let pos = if rs.is_positive(img) { img } else { rs.negate(img) };
            m |= 1 << pos;
        }
        if m < best {
            best = m;
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerateError {
    #[error("root system too large for exhaustive subsystem enumeration (|roots| = {0} > 48)")]
    TooLarge(usize),
    #[error(transparent)]
    Group(#[from] GroupTooLarge),
}

/// All subsystems up to W-conjugacy, by breadth-first closure search with
/// bitmask deduplication. Returns class representatives (including the empty
/// and full subsystems) and the set of all subsystem masks.
pub struct EnumeratedSubsystems {
    pub classes: Vec<RootSubsystem>,
    pub all_masks: HashSet<u64>,
}

pub fn enumerate_subsystems(rs: &Rs, group_cap: usize) -> Result<EnumeratedSubsystems, EnumerateError> {
    if rs.num_roots() > 48 {
        return Err(EnumerateError::TooLarge(rs.num_roots()));
    }
    let group = WeylGroup::enumerate(rs.clone(), group_cap)?;
    let empty = RootSubsystem::empty(rs.clone());
    let mut class_reps: HashMap<u64, RootSubsystem> = HashMap::new();
    let mut all_masks: HashSet<u64> = HashSet::new();
    all_masks.insert(0);
    class_reps.insert(0, empty.clone());
    let mut frontier = vec![empty];
    while let Some(s) = frontier.pop() {
        for r in rs.positive_roots() {
            if s.contains(r) {
                continue;
            }
            let mut seed: Vec<usize> = s.positive_members().to_vec();
            seed.push(r);
            let bigger = RootSubsystem::reflection_closure(rs, &seed);
            all_masks.insert(bigger.positive_mask());
            let key = canonical_mask(&group, &bigger);
            if !class_reps.contains_key(&key) {
                class_reps.insert(key, bigger.clone());
                frontier.push(bigger);
            }
        }
    }
    // Record the full orbit of every class, so containment tests can use
    // all_masks directly.
    for rep in class_reps.values() {
        for e in 0..group.order() {
            let mut m = 0u64;
            for &p in rep.positive_members() {
                let img = group.act_root(e, p);
                let pos = if rs.is_positive(img) { img } else { rs.negate(img) };
                m |= 1 << pos;
            }
            all_masks.insert(m);
        }
    }
    let mut classes: Vec<RootSubsystem> = class_reps.into_values().collect();
    classes.sort_by_key(|s| (s.num_positive(), s.positive_members().to_vec()));
    Ok(EnumeratedSubsystems {
        classes,
        all_masks,
    })
}

/// Proper subsystem classes that are inclusion-maximal, via enumeration.
pub fn maximal_subsystems_enumerated(
    rs: &Rs,
    group_cap: usize,
) -> Result<Vec<RootSubsystem>, EnumerateError> {
    let en = enumerate_subsystems(rs, group_cap)?;
    let full = (1u64 << rs.num_positive()) - 1;
    let maximal: Vec<RootSubsystem> = en
        .classes
        .iter()
        .filter(|s| !s.is_full())
        .filter(|s| {
            let m = s.positive_mask();
            !en.all_masks
                .iter()
                .any(|&other| other != m && other != full && (m & other) == m)
        })
        .cloned()
        .collect();
    Ok(maximal)
}

/// kappa0 = |Phi+| - max |Psi+| over proper subsystems, from the catalog.
pub fn kappa0(rs: &Rs) -> Result<usize, crate::rootsys::Reducible> {
    let label = irreducible_type(rs)?;
    Ok(kappa0_from_catalog(label))
}

fn irreducible_type(rs: &Rs) -> Result<SimpleType, crate::rootsys::Reducible> {
    if !rs.label().is_irreducible() {
        return Err(crate::rootsys::Reducible(rs.label().to_string()));
    }
    Ok(rs.label().components()[0])
}

fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The subsystem generated by all long (or all short) roots.
pub fn rootsubsystem_of_length(rs: &Rs, long: bool) -> RootSubsystem {
    let norms: Vec<i64> = rs.all_roots().map(|k| rs.root(k).norm2).collect();
    let target = if long {
        norms.iter().copied().max().unwrap_or(2)
    } else {
        norms.iter().copied().min().unwrap_or(2)
    };
    let seed: Vec<usize> = rs
        .positive_roots()
        .filter(|&k| rs.root(k).norm2 == target)
        .collect();
    RootSubsystem::reflection_closure(rs, &seed)
}

/// Least common multiple of the prime marks of the highest root; 1 if none.
pub fn gamma_invariant(rs: &Rs) -> Result<u64, crate::rootsys::Reducible> {
    let marks = rs.marks()?;
    let mut gamma = 1u64;
    for h in marks {
        if is_prime(h) {
            gamma = num_integer::lcm(gamma, h as u64);
        }
    }
    Ok(gamma)
}

/// Exponent of the finite quotient Q / Z-span(Psi) for a full-rank subsystem,
/// via the Smith normal form of the member-root coordinate matrix.
pub fn lattice_quotient_exponent(sub: &RootSubsystem) -> Option<u64> {
    use num_bigint::BigInt;
    use num_traits::Zero;
    let rs = sub.ambient();
    let rows: Vec<Vec<BigInt>> = sub
        .positive_members()
        .iter()
        .map(|&k| rs.root(k).coords.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    if rows.is_empty() {
        return None;
    }
    let m = crate::exact::Matrix::from_rows(rows);
    let snf = crate::exact::smith_normal_form(&m);
    let diag = snf.diagonal();
    if diag.len() < rs.rank() || diag.iter().any(|d| d.is_zero()) {
        return None; // not full rank
    }
    let last = diag.last().unwrap();
    u64::try_from(last).ok()
}
