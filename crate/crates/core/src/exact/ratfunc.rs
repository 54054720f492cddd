//! Rational functions: quotients of multivariate Laurent polynomials.
//!
//! Equality is decided by cross-multiplication. Fractions are kept lean by
//! cancelling monomial content always, and by a full gcd reduction whenever
//! both sides are (Laurent) univariate, which is the hot case in the graded
//! linear algebra.

use std::fmt;

use super::cyclotomic::Cyclotomic;
use super::laurent::{LaurentPoly, Mono, Var};
use super::rational::Rat;

#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_cyc(c: Cyclotomic) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::from_cyc(Cyclotomic::from_rat(r))
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(n.into()))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(LaurentPoly::var(v))
    }

    pub fn q_pow(r: &Rat) -> Self {
        Self::from_poly(LaurentPoly::q_pow(r))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut f = RatFunc { num, den };
        f.reduce();
        f
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // Cancel monomial content so both sides have min exponent 0.
        let mut shift = Mono::one();
        let mut vars = self.num.vars();
        vars.extend(self.den.vars());
        vars.sort_unstable();
        vars.dedup();
        for &v in &vars {
            let m = self.num.min_exp(v).min(self.den.min_exp(v));
            if m != 0 {
                shift = shift.mul(&Mono::var(v, -m));
            }
        }
        if shift != Mono::one() {
            self.num = self.num.mul_mono(&shift);
            self.den = self.den.mul_mono(&shift);
        }
        // Full cancellation when the fraction is univariate.
        let nv = self.union_vars();
        if nv.len() == 1 && self.den.num_terms() > 1 {
            let v = nv[0];
            if let Some(g) = univariate_gcd(&self.num, &self.den, v) {
                if g.num_terms() > 1 || g.min_exp(v) != 0 || g.max_exp(v) != 0 {
                    if let (Some(n), Some(d)) = (self.num.exact_div(&g), self.den.exact_div(&g)) {
                        self.num = n;
                        self.den = d;
                    }
                }
            }
        }
        // Normalize the denominator: exact denominator 1 when it is a unit,
        // otherwise scale so its constant-in-spirit leading coefficient is 1.
        if let Some(c) = self.den.as_constant() {
            if !c.is_one() {
                let inv = LaurentPoly::constant(c.inv());
                self.num = self.num.mul(&inv);
                self.den = LaurentPoly::one();
            }
        }
    }

    fn union_vars(&self) -> Vec<Var> {
        let mut vars = self.num.vars();
        vars.extend(self.den.vars());
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return RatFunc::new(self.num.add(&other.num), self.den.clone());
        }
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &RatFunc) -> RatFunc {
        self.mul(&other.inv())
    }

    pub fn inv(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> RatFunc {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Substitute a cyclotomic value for `v`; fails if the denominator
    /// vanishes there.
    pub fn substitute(&self, v: Var, value: &Cyclotomic) -> Option<RatFunc> {
        let den = self.den.substitute(v, value);
        if den.is_zero() {
            return None;
        }
        Some(RatFunc::new(self.num.substitute(v, value), den))
    }

    /// Full evaluation at a cyclotomic point.
    pub fn eval_all(&self, assignments: &[(Var, Cyclotomic)]) -> Option<Cyclotomic> {
        let mut f = self.clone();
        for (v, c) in assignments {
            f = f.substitute(*v, c)?;
        }
        let n = f.num.as_constant()?;
        let d = f.den.as_constant()?;
        if d.is_zero() {
            return None;
        }
        Some(n.mul(&d.inv()))
    }

    /// Order of vanishing of `self` at `v = value` (negative for a pole).
    pub fn vanishing_order(&self, v: Var, value: &Cyclotomic) -> Result<i64, ZeroInput> {
        if self.is_zero() {
            return Err(ZeroInput);
        }
        let a = self.num.vanishing_order_at(v, value) as i64;
        let b = self.den.vanishing_order_at(v, value) as i64;
        Ok(a - b)
    }
}

/// Error for vanishing-order of the zero function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroInput;

impl fmt::Display for ZeroInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vanishing order of the zero function is undefined")
    }
}

impl std::error::Error for ZeroInput {}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Monic gcd of two Laurent polynomials in the single variable `v`
/// (exponents may be negative; the gcd is computed on shifted polynomials).
fn univariate_gcd(a: &LaurentPoly, b: &LaurentPoly, v: Var) -> Option<LaurentPoly> {
    let to_vec = |p: &LaurentPoly| -> Option<Vec<Cyclotomic>> {
        let lo = p.min_exp(v);
        let hi = p.max_exp(v);
        let mut out = vec![Cyclotomic::zero(); (hi - lo + 1) as usize];
        for (m, c) in p.terms() {
            if m.pairs().iter().any(|&(w, _)| w != v) {
                return None;
            }
            out[(m.exponent(v) - lo) as usize] = c.clone();
        }
        Some(out)
    };
    let mut r0 = to_vec(a)?;
    let mut r1 = to_vec(b)?;
    let deg = |p: &Vec<Cyclotomic>| p.iter().rposition(|c| !c.is_zero());
    while deg(&r1).is_some() && deg(&r1) != Some(0) {
        let d1 = deg(&r1).unwrap();
        let d0 = match deg(&r0) {
            Some(d) => d,
            None => break,
        };
        if d0 < d1 {
            std::mem::swap(&mut r0, &mut r1);
            continue;
        }
        // r0 = r0 - lead(r0)/lead(r1) * x^(d0-d1) * r1, repeatedly.
        let mut rem = r0.clone();
        loop {
            let dr = match rem.iter().rposition(|c| !c.is_zero()) {
                Some(d) => d,
                None => break,
            };
            if dr < d1 {
                break;
            }
            let factor = rem[dr].mul(&r1[d1].inv());
            for i in 0..=d1 {
                let t = factor.mul(&r1[i]);
                rem[dr - d1 + i] = rem[dr - d1 + i].sub(&t);
            }
        }
        r0 = r1;
        r1 = rem;
    }
    let g = if deg(&r1).is_none() { r0 } else { vec![Cyclotomic::one()] };
    let d = deg(&g)?;
    let lead_inv = g[d].inv();
    let mut poly = LaurentPoly::zero();
    for (i, c) in g.iter().enumerate() {
        if !c.is_zero() {
            poly = poly.add(&LaurentPoly::mono(
                Mono::var(v, i as i64),
                c.mul(&lead_inv),
            ));
        }
    }
    if poly.is_zero() {
        None
    } else {
        Some(poly)
    }
}
