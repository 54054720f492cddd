//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! An element is stored as a polynomial in `zeta_N` of degree < phi(N),
//! reduced modulo the N-th cyclotomic polynomial, so equality is decidable
//! coefficientwise. Arithmetic between different conductors lifts both
//! operands to the least common conductor. An element that happens to be
//! rational is renormalized to conductor 1.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{lcm_u64, Rat};

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Exact division of integer polynomials, used only where divisibility is
/// guaranteed (cyclotomic polynomial recursion). Panics on non-exactness.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den.last().unwrap().clone();
    assert!(!lead.is_zero());
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
    for k in (0..quot.len()).rev() {
        let (q, r) = rem[k + dd].div_rem(&lead);
        assert!(r.is_zero(), "non-exact polynomial division");
        if !q.is_zero() {
            for (i, d) in den.iter().enumerate() {
                let t = &q * d;
                rem[k + i] -= t;
            }
        }
        quot[k] = q;
    }
    for c in rem {
        assert!(c.is_zero(), "non-exact polynomial division (remainder)");
    }
    quot
}

/// Coefficients (ascending, monic) of the N-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let poly = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
        let mut num = vec![BigInt::zero(); (n + 1) as usize];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::from(1);
        let mut den = vec![BigInt::one()];
        for d in 1..n {
            if n % d == 0 {
                den = poly_mul(&den, &cyclotomic_polynomial(d));
            }
        }
        poly_div_exact(&num, &den)
    };
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

/// Reduce a raw coefficient vector mod Phi_conductor to length phi(conductor).
fn reduce_mod_cyclotomic(conductor: u64, mut raw: Vec<Rat>) -> Vec<Rat> {
    let phi = cyclotomic_polynomial(conductor);
    let deg = phi.len() - 1;
    while raw.len() > deg {
        let k = raw.len() - 1 - deg;
        let top = raw.last().unwrap().clone();
        if !top.is_zero() {
            for (i, c) in phi.iter().enumerate() {
                let t = &top * Rat::from_integer(c.clone());
                raw[k + i] -= t;
            }
        }
        debug_assert!(raw.last().unwrap().is_zero());
        raw.pop();
    }
    raw.resize(deg, Rat::zero());
    raw
}

/// An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rat::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rat::one()],
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    /// zeta_order^power.
    pub fn root_of_unity(order: u64, power: i64) -> Self {
        assert!(order >= 1);
        let p = (power.rem_euclid(order as i64)) as usize;
        let mut raw = vec![Rat::zero(); p + 1];
        raw[p] = Rat::one();
        Self::from_raw(order, raw)
    }

    /// e^{2 pi i t} for rational t.
    pub fn unit_torsion(t: &Rat) -> Self {
        let t = super::rational::mod1(t);
        let order = u64::try_from(t.denom()).expect("torsion denominator fits u64");
        let power = i64::try_from(t.numer()).expect("torsion numerator fits i64");
        Self::root_of_unity(order, power)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Build from a polynomial in zeta_n of arbitrary degree; reduces mod Phi_n.
    fn from_raw(conductor: u64, raw: Vec<Rat>) -> Self {
        let mut out = Cyclotomic {
            conductor,
            coeffs: reduce_mod_cyclotomic(conductor, raw),
        };
        out.normalize();
        out
    }

    /// Demote to conductor 1 when the element is rational.
    fn normalize(&mut self) {
        if self.conductor != 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            self.conductor = 1;
            self.coeffs.truncate(1);
        }
    }

    /// Coefficient vector at a larger conductor (`conductor | target`),
    /// reduced mod Phi_target but not renormalized, so its length is exactly
    /// phi(target).
    fn coeffs_at(&self, target: u64) -> Vec<Rat> {
        debug_assert_eq!(target % self.conductor, 0);
        let deg = cyclotomic_polynomial(target).len() - 1;
        if self.conductor == target {
            return self.coeffs.clone();
        }
        let k = (target / self.conductor) as usize;
        let mut raw = vec![Rat::zero(); ((self.coeffs.len() - 1) * k + 1).max(deg)];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * k] = c.clone();
        }
        reduce_mod_cyclotomic(target, raw)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.conductor == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let n = lcm_u64(self.conductor, other.conductor);
        let mut a = self.coeffs_at(n);
        for (x, y) in a.iter_mut().zip(other.coeffs_at(n)) {
            *x += y;
        }
        let mut out = Cyclotomic {
            conductor: n,
            coeffs: a,
        };
        out.normalize();
        out
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        let n = lcm_u64(self.conductor, other.conductor);
        let mut a = self.coeffs_at(n);
        for (x, y) in a.iter_mut().zip(other.coeffs_at(n)) {
            *x -= y;
        }
        let mut out = Cyclotomic {
            conductor: n,
            coeffs: a,
        };
        out.normalize();
        out
    }

    pub fn neg(&self) -> Cyclotomic {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        let n = lcm_u64(self.conductor, other.conductor);
        let a = self.coeffs_at(n);
        let b = other.coeffs_at(n);
        let mut raw = vec![Rat::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                raw[i + j] += x * y;
            }
        }
        Cyclotomic::from_raw(n, raw)
    }

    pub fn scale(&self, r: &Rat) -> Cyclotomic {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c *= r;
        }
        out.normalize();
        out
    }

    /// Multiplicative inverse via extended Euclid mod Phi_N. Panics on zero.
    pub fn inv(&self) -> Cyclotomic {
        assert!(!self.is_zero(), "inverse of zero cyclotomic");
        if self.conductor == 1 {
            return Cyclotomic::from_rat(Rat::one() / self.coeffs[0].clone());
        }
        let modulus: Vec<Rat> = cyclotomic_polynomial(self.conductor)
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect();
        // Extended Euclid over Q[x]: u*f + v*Phi = gcd = const.
        let (mut r0, mut r1) = (modulus, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (vec![], vec![Rat::one()]); // coefficients of f
        while r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul_rat(&q, &s1));
            r0 = r1;
            r1 = trim(r);
            s0 = s1;
            s1 = trim(s);
        }
        assert!(!r1.is_empty(), "cyclotomic element not invertible");
        let c = r1[0].clone();
        let inv_coeffs: Vec<Rat> = s1.into_iter().map(|x| x / c.clone()).collect();
        Cyclotomic::from_raw(self.conductor, inv_coeffs)
    }

    pub fn pow(&self, e: i64) -> Cyclotomic {
        if e == 0 {
            return Cyclotomic::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyclotomic::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    out
}

fn poly_mul_rat(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den.last().unwrap().clone();
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let mut quot = vec![Rat::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let q = rem[k + dd].clone() / lead.clone();
        if !q.is_zero() {
            for (i, d) in den.iter().enumerate() {
                let t = &q * d;
                rem[k + i] -= t;
            }
        }
        quot[k] = q;
    }
    rem.truncate(dd);
    (quot, rem)
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = vec![];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = if i == 0 {
                format!("{c}")
            } else if i == 1 {
                format!("{c}*z{}", self.conductor)
            } else {
                format!("{c}*z{}^{i}", self.conductor)
            };
            parts.push(term);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};

    #[test]
    fn primitive_root_has_order_n() {
        for n in [3u64, 4, 5, 8, 12] {
            let z = Cyclotomic::root_of_unity(n, 1);
            assert!(z.pow(n as i64).is_one(), "zeta_{n}^{n} != 1");
            for k in 1..n {
                assert!(!z.pow(k as i64).is_one(), "zeta_{n}^{k} == 1");
            }
        }
    }

    #[test]
    fn prime_root_sums_vanish() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let z = Cyclotomic::root_of_unity(p, 1);
            let mut sum = Cyclotomic::zero();
            for k in 0..p {
                sum = sum.add(&z.pow(k as i64));
            }
            assert!(sum.is_zero(), "sum of {p}-th roots not zero");
        }
    }

    #[test]
    fn mixed_conductor_arithmetic() {
        // zeta_4 * zeta_4 = -1, detected as rational.
        let i = Cyclotomic::root_of_unity(4, 1);
        let m1 = i.mul(&i);
        assert_eq!(m1.as_rat(), Some(rat_int(-1)));
        // zeta_3 + zeta_3^2 = -1.
        let z3 = Cyclotomic::root_of_unity(3, 1);
        assert_eq!(z3.add(&z3.pow(2)).as_rat(), Some(rat_int(-1)));
        // conductor merge: zeta_4 * zeta_5 has conductor 20 and order 20.
        let z5 = Cyclotomic::root_of_unity(5, 1);
        let z20 = i.mul(&z5);
        assert_eq!(z20.conductor(), 20);
        assert!(z20.pow(20).is_one());
        assert!(!z20.pow(10).is_one());
    }

    #[test]
    fn inverse_roundtrip() {
        let z = Cyclotomic::root_of_unity(12, 5)
            .scale(&rat(3, 7))
            .add(&Cyclotomic::from_i64(2));
        let inv = z.inv();
        assert!(z.mul(&inv).is_one());
    }

    #[test]
    fn rational_plus_cyclotomic_keeps_all_terms() {
        // Regression: adding across conductors must not truncate.
        let z5 = Cyclotomic::root_of_unity(5, 1);
        let s = Cyclotomic::zero().add(&z5);
        assert_eq!(s, z5);
        let one_plus = Cyclotomic::one().add(&z5);
        assert!(!one_plus.is_zero());
        assert_eq!(one_plus.sub(&z5), Cyclotomic::one());
        // Partial sums of fifth roots are nonzero until the last step.
        let mut sum = Cyclotomic::zero();
        for k in 0..4 {
            sum = sum.add(&z5.pow(k));
            assert!(!sum.is_zero(), "partial sum {k}");
        }
        assert!(sum.add(&z5.pow(4)).is_zero());
    }

    #[test]
    fn unit_torsion_matches_roots() {
        assert_eq!(
            Cyclotomic::unit_torsion(&rat(1, 4)),
            Cyclotomic::root_of_unity(4, 1)
        );
        assert_eq!(
            Cyclotomic::unit_torsion(&rat(-1, 4)),
            Cyclotomic::root_of_unity(4, 3)
        );
        assert_eq!(Cyclotomic::unit_torsion(&rat_int(1)), Cyclotomic::one());
        // 1/2 -> -1
        assert_eq!(
            Cyclotomic::unit_torsion(&rat(1, 2)).as_rat(),
            Some(rat_int(-1))
        );
    }
}
