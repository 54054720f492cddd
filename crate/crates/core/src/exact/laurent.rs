//! Sparse multivariate Laurent polynomials over cyclotomic coefficients.
//!
//! Variables are identified by small tags (`VAR_Q`, `VAR_T`, `VAR_V`, and the
//! weight variables `z_i`). Exponents are integers, except that the `q`
//! variable may carry a global exponent denominator `qden`, so q^{1/g} powers
//! are stored exactly without introducing a second variable.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use super::cyclotomic::Cyclotomic;
use super::rational::{rat, Rat};

pub type Var = u8;

pub const VAR_Q: Var = 0;
pub const VAR_T: Var = 1;
pub const VAR_V: Var = 2;

/// Weight variable z_i (1-indexed for display).
pub fn var_z(i: usize) -> Var {
    3 + i as Var
}

pub fn var_name(v: Var) -> String {
    match v {
        VAR_Q => "q".into(),
        VAR_T => "t".into(),
        VAR_V => "v".into(),
        _ => format!("z{}", v - 2),
    }
}

/// A monomial: sorted (variable, exponent) pairs, exponent nonzero.
/// The q-exponent is interpreted in units of 1/qden of the owning polynomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Mono(Vec<(Var, i64)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn var(v: Var, e: i64) -> Self {
        if e == 0 {
            Mono::one()
        } else {
            Mono(vec![(v, e)])
        }
    }

    pub fn exponent(&self, v: Var) -> i64 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Var, i64)] {
        &self.0
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            if j >= other.0.len() || (i < self.0.len() && self.0[i].0 < other.0[j].0) {
                out.push(self.0[i]);
                i += 1;
            } else if i >= self.0.len() || other.0[j].0 < self.0[i].0 {
                out.push(other.0[j]);
                j += 1;
            } else {
                let e = self.0[i].1 + other.0[j].1;
                if e != 0 {
                    out.push((self.0[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
        Mono(out)
    }

    pub fn inv(&self) -> Mono {
        Mono(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    /// Componentwise divisibility (for polynomial, i.e. nonnegative, monomials).
    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    fn total_degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// Degree-lexicographic order for polynomial leading-term selection.
    fn deglex(&self, other: &Mono) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                // lex on exponent vectors, larger exponent on smaller var wins
                let mut vars: Vec<Var> = self
                    .0
                    .iter()
                    .map(|p| p.0)
                    .chain(other.0.iter().map(|p| p.0))
                    .collect();
                vars.sort_unstable();
                vars.dedup();
                for v in vars {
                    let c = self.exponent(v).cmp(&other.exponent(v));
                    if c != std::cmp::Ordering::Equal {
                        return c;
                    }
                }
                std::cmp::Ordering::Equal
            })
    }

    fn scale_q(&self, k: i64) -> Mono {
        Mono(
            self.0
                .iter()
                .map(|&(v, e)| if v == VAR_Q { (v, e * k) } else { (v, e) })
                .collect(),
        )
    }
}

/// Sparse Laurent polynomial; `terms` maps monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    qden: i64,
    terms: BTreeMap<Mono, Cyclotomic>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            qden: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Cyclotomic::one())
    }

    pub fn constant(c: Cyclotomic) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        LaurentPoly { qden: 1, terms }
    }

    pub fn var(v: Var) -> Self {
        Self::mono(Mono::var(v, 1), Cyclotomic::one())
    }

    pub fn var_pow(v: Var, e: i64) -> Self {
        Self::mono(Mono::var(v, e), Cyclotomic::one())
    }

    pub fn mono(m: Mono, c: Cyclotomic) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { qden: 1, terms }
    }

    /// q^r for rational r; the denominator of r becomes (part of) qden.
    pub fn q_pow(r: &Rat) -> Self {
        let den = i64::try_from(r.denom()).expect("q-exponent denominator fits i64");
        let num = i64::try_from(r.numer()).expect("q-exponent numerator fits i64");
        let mut p = Self::mono(Mono::var(VAR_Q, num), Cyclotomic::one());
        p.qden = den;
        p.normalize();
        p
    }

    pub fn qden(&self) -> i64 {
        self.qden
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn as_constant(&self) -> Option<Cyclotomic> {
        if self.terms.is_empty() {
            return Some(Cyclotomic::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if *m == Mono::one() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map_or(false, |c| c.is_one())
    }

    /// Variables actually occurring.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|p| p.0))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        if self.qden > 1 {
            let mut g = self.qden;
            for m in self.terms.keys() {
                g = g.gcd(&m.exponent(VAR_Q));
                if g == 1 {
                    break;
                }
            }
            if g > 1 {
                let old = std::mem::take(&mut self.terms);
                for (m, c) in old {
                    self.terms.insert(m.scale_q(1 / g * 0 + 1).scale_q_div(g), c);
                }
                self.qden /= g;
            }
        }
    }

    fn with_qden(&self, qden: i64) -> LaurentPoly {
        debug_assert_eq!(qden % self.qden, 0);
        if qden == self.qden {
            return self.clone();
        }
        let k = qden / self.qden;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.scale_q(k), c.clone()))
            .collect();
        LaurentPoly { qden, terms }
    }

    fn unify(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly, i64) {
        let d = a.qden.lcm(&b.qden);
        (a.with_qden(d), b.with_qden(d), d)
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let (mut a, b, _) = Self::unify(self, other);
        for (m, c) in b.terms {
            match a.terms.get_mut(&m) {
                Some(x) => {
                    *x = x.add(&c);
                }
                None => {
                    a.terms.insert(m, c);
                }
            }
        }
        a.normalize();
        a
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            qden: self.qden,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let (a, b, d) = Self::unify(self, other);
        let mut terms: BTreeMap<Mono, Cyclotomic> = BTreeMap::new();
        for (ma, ca) in a.terms.iter() {
            for (mb, cb) in b.terms.iter() {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match terms.get_mut(&m) {
                    Some(x) => {
                        *x = x.add(&c);
                    }
                    None => {
                        terms.insert(m, c);
                    }
                }
            }
        }
        let mut out = LaurentPoly { qden: d, terms };
        out.normalize();
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            qden: self.qden,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.mul(c)))
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> LaurentPoly {
        LaurentPoly {
            qden: self.qden,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Minimum exponent of `v` across terms (0 if absent everywhere).
    pub fn min_exp(&self, v: Var) -> i64 {
        self.terms
            .keys()
            .map(|m| m.exponent(v))
            .min()
            .unwrap_or(0)
    }

    pub fn max_exp(&self, v: Var) -> i64 {
        self.terms
            .keys()
            .map(|m| m.exponent(v))
            .max()
            .unwrap_or(0)
    }

    /// Pivot-selection heuristic: fewer terms and smaller spread first.
    pub fn complexity(&self) -> usize {
        let mut spread = 0i64;
        for v in self.vars() {
            spread += self.max_exp(v) - self.min_exp(v);
        }
        self.terms.len() + spread.unsigned_abs() as usize
    }

    /// Leading (deglex-maximal) term after shifting exponents nonnegative.
    fn leading(&self) -> (&Mono, &Cyclotomic) {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| a.deglex(b))
            .expect("leading term of zero polynomial")
    }

    /// Exact division in the Laurent ring: returns `self / divisor` when the
    /// division is exact, `None` otherwise.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (a, b, d) = Self::unify(self, divisor);
        // Shift both operands to have all exponents >= 0.
        let mut vars = a.vars();
        vars.extend(b.vars());
        vars.sort_unstable();
        vars.dedup();
        let mut shift_a = Mono::one();
        let mut shift_b = Mono::one();
        for &v in &vars {
            shift_a = shift_a.mul(&Mono::var(v, -a.min_exp(v).min(0)));
            shift_b = shift_b.mul(&Mono::var(v, -b.min_exp(v).min(0)));
        }
        let fa = a.mul_mono(&shift_a);
        let fb = b.mul_mono(&shift_b);
        let mut rem = fa;
        let mut quo_terms: BTreeMap<Mono, Cyclotomic> = BTreeMap::new();
        let (lb, cb) = {
            let (m, c) = fb.leading();
            (m.clone(), c.clone())
        };
        let cb_inv = cb.inv();
        while !rem.is_zero() {
            // Arithmetic may renormalize qden; keep every monomial comparison
            // in the common scale d.
            rem = rem.with_qden(d);
            let (la, ca) = {
                let (m, c) = rem.leading();
                (m.clone(), c.clone())
            };
            if !lb.divides(&la) {
                return None;
            }
            let qm = la.mul(&lb.inv());
            let qc = ca.mul(&cb_inv);
            let piece = LaurentPoly {
                qden: d,
                terms: BTreeMap::from([(qm.clone(), qc.clone())]),
            };
            rem = rem.sub(&piece.mul(&fb));
            match quo_terms.get_mut(&qm) {
                Some(x) => {
                    *x = x.add(&qc);
                }
                None => {
                    quo_terms.insert(qm, qc);
                }
            }
        }
        let mut quo = LaurentPoly {
            qden: d,
            terms: quo_terms,
        };
        // Undo the shifts: self/divisor = (fa/fb) * shift_b / shift_a.
        quo = quo.mul_mono(&shift_b.mul(&shift_a.inv()));
        quo.normalize();
        Some(quo)
    }

    /// Substitute a cyclotomic value for variable `v`. Requires integral
    /// exponents for `v` (callers must not substitute into fractional q-powers).
    pub fn substitute(&self, v: Var, value: &Cyclotomic) -> LaurentPoly {
        if v == VAR_Q {
            assert_eq!(self.qden, 1, "substituting into fractional q-exponent");
        }
        let mut out = LaurentPoly::zero();
        for (m, c) in self.terms.iter() {
            let e = m.exponent(v);
            let rest = m.mul(&Mono::var(v, -e));
            let scaled = c.mul(&value.pow(e));
            out = out.add(&LaurentPoly {
                qden: self.qden,
                terms: BTreeMap::from([(rest, scaled)]),
            });
        }
        out.normalize();
        out
    }

    /// Evaluate at the single remaining variable: constant term extraction.
    pub fn eval_all(&self, assignments: &[(Var, Cyclotomic)]) -> Cyclotomic {
        let mut p = self.clone();
        for (v, c) in assignments {
            p = p.substitute(*v, c);
        }
        p.as_constant()
            .expect("eval_all left free variables behind")
    }

    /// Coefficients of `self` viewed as a polynomial in `v` (exponent, coeff).
    pub fn coeffs_in(&self, v: Var) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (m, c) in self.terms.iter() {
            let e = m.exponent(v);
            let rest = m.mul(&Mono::var(v, -e));
            let entry = out.entry(e).or_insert_with(LaurentPoly::zero);
            *entry = entry.add(&LaurentPoly {
                qden: self.qden,
                terms: BTreeMap::from([(rest, c.clone())]),
            });
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Order of vanishing at `v = value` (value nonzero), ignoring Laurent
    /// shifts: the number of factors (v - value).
    pub fn vanishing_order_at(&self, v: Var, value: &Cyclotomic) -> u64 {
        assert!(!self.is_zero());
        assert!(!value.is_zero(), "vanishing order at zero needs min_exp");
        // Work with the coefficient vector in v; Laurent shift is harmless.
        let coeffs = self.coeffs_in(v);
        let lo = *coeffs.keys().next().unwrap();
        let hi = *coeffs.keys().last().unwrap();
        let mut vec: Vec<LaurentPoly> = (lo..=hi)
            .map(|e| coeffs.get(&e).cloned().unwrap_or_else(LaurentPoly::zero))
            .collect();
        let mut order = 0u64;
        loop {
            // Evaluate at v = value by Horner.
            let mut acc = LaurentPoly::zero();
            for c in vec.iter().rev() {
                acc = acc
                    .mul(&LaurentPoly::constant(value.clone()))
                    .add(c);
            }
            if !acc.is_zero() {
                return order;
            }
            // Synthetic division by (v - value): monic linear divisor.
            let mut quot = vec![LaurentPoly::zero(); vec.len() - 1];
            let mut carry = LaurentPoly::zero();
            for k in (0..vec.len()).rev() {
                if k == 0 {
                    break;
                }
                let c = vec[k].add(&carry);
                carry = c.mul(&LaurentPoly::constant(value.clone()));
                quot[k - 1] = c;
            }
            vec = quot;
            order += 1;
            if vec.is_empty() {
                unreachable!("nonzero polynomial became zero during division");
            }
        }
    }
}

trait MonoQDiv {
    fn scale_q_div(&self, g: i64) -> Mono;
}

impl MonoQDiv for Mono {
    fn scale_q_div(&self, g: i64) -> Mono {
        Mono(
            self.pairs()
                .iter()
                .map(|&(v, e)| if v == VAR_Q { (v, e / g) } else { (v, e) })
                .collect(),
        )
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = vec![];
        for (m, c) in self.terms.iter().rev() {
            let mut factors = vec![];
            if !(c.is_one() && !m.pairs().is_empty()) {
                factors.push(format!("({c})"));
            }
            for &(v, e) in m.pairs() {
                let e_str = if v == VAR_Q && self.qden > 1 {
                    crate::exact::rational::rat_string(&rat(e, self.qden))
                } else {
                    e.to_string()
                };
                if e_str == "1" {
                    factors.push(var_name(v));
                } else {
                    factors.push(format!("{}^{}", var_name(v), e_str));
                }
            }
            parts.push(factors.join("*"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_int;

    fn q() -> LaurentPoly {
        LaurentPoly::var(VAR_Q)
    }

    fn c(n: i64) -> LaurentPoly {
        LaurentPoly::constant(Cyclotomic::from_i64(n))
    }

    #[test]
    fn arithmetic_basics() {
        let p = q().add(&q().neg());
        assert!(p.is_zero());
        let p = q().mul(&LaurentPoly::var_pow(VAR_Q, -1));
        assert!(p.is_one());
        // (q + 1)(q - 1) = q^2 - 1
        let lhs = q().add(&c(1)).mul(&q().sub(&c(1)));
        let rhs = LaurentPoly::var_pow(VAR_Q, 2).sub(&c(1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fractional_q_exponents() {
        let h = LaurentPoly::q_pow(&rat(1, 2));
        assert_eq!(h.mul(&h), q());
        let p = LaurentPoly::q_pow(&rat(3, 2)).mul(&LaurentPoly::q_pow(&rat(1, 2)));
        assert_eq!(p, LaurentPoly::var_pow(VAR_Q, 2));
        assert_eq!(p.qden(), 1);
    }

    #[test]
    fn exact_division() {
        // (q^2 t - t^-1)(q + z1) / (q + z1)
        let z = LaurentPoly::var(var_z(1));
        let a = LaurentPoly::var_pow(VAR_Q, 2)
            .mul(&LaurentPoly::var(VAR_T))
            .sub(&LaurentPoly::var_pow(VAR_T, -1));
        let b = q().add(&z);
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        // Non-exact case.
        assert_eq!(prod.add(&c(1)).exact_div(&b), None);
    }

    #[test]
    fn exact_division_with_fractional_q_exponents() {
        // Regression: renormalized qden mid-division must not break the
        // monomial comparisons.
        let h = LaurentPoly::q_pow(&rat(1, 2)).sub(&LaurentPoly::q_pow(&rat(-1, 2)));
        let b = q().sub(&LaurentPoly::var_pow(VAR_Q, -1));
        let t = LaurentPoly::var(VAR_T).sub(&c(1));
        let prod = h.mul(&b).mul(&t);
        assert_eq!(prod.exact_div(&h), Some(b.mul(&t)));
        assert_eq!(prod.exact_div(&b), Some(h.mul(&t)));
        assert_eq!(prod.exact_div(&t), Some(h.mul(&b)));
        assert_eq!(prod.exact_div(&h.mul(&b)), Some(t.clone()));
        assert_eq!(prod.add(&c(1)).exact_div(&h), None);
    }

    #[test]
    fn vanishing_orders() {
        // (t-1)^2 at t=1 -> 2
        let t = LaurentPoly::var(VAR_T);
        let f = t.sub(&c(1)).pow(2);
        assert_eq!(f.vanishing_order_at(VAR_T, &Cyclotomic::one()), 2);
        // (t*q - q^-1 t^-1) at t=1: value q - q^-1 != 0 -> 0
        let f = t
            .mul(&q())
            .sub(&LaurentPoly::var_pow(VAR_Q, -1).mul(&LaurentPoly::var_pow(VAR_T, -1)));
        assert_eq!(f.vanishing_order_at(VAR_T, &Cyclotomic::one()), 0);
    }

    #[test]
    fn substitution() {
        // q^2 + 1 at q = i -> 0
        let i = Cyclotomic::root_of_unity(4, 1);
        let f = LaurentPoly::var_pow(VAR_Q, 2).add(&c(1));
        assert!(f.substitute(VAR_Q, &i).is_zero());
        let g = q().add(&LaurentPoly::var(VAR_T));
        let h = g.substitute(VAR_T, &Cyclotomic::from_rat(rat_int(2)));
        assert_eq!(h, q().add(&c(2)));
    }
}
