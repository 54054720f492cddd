//! Dense Laurent polynomials in v over the integers, the coefficient ring of
//! the Hecke algebra.

use std::fmt;

/// Laurent polynomial sum coeffs[k] * v^(lo+k); empty means zero, and the
/// first and last stored coefficients are nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VPoly {
    lo: i64,
    coeffs: Vec<i64>,
}

impl VPoly {
    pub fn zero() -> Self {
        VPoly::default()
    }

    pub fn one() -> Self {
        VPoly::v_pow(0)
    }

    pub fn constant(c: i64) -> Self {
        let mut p = VPoly {
            lo: 0,
            coeffs: vec![c],
        };
        p.normalize();
        p
    }

    pub fn v_pow(e: i64) -> Self {
        VPoly {
            lo: e,
            coeffs: vec![1],
        }
    }

    /// v - v^{-1}, the coefficient in the quadratic relation.
    pub fn v_minus_vinv() -> Self {
        VPoly {
            lo: -1,
            coeffs: vec![-1, 0, 1],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.lo += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn degree(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.lo + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn min_degree(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.lo)
        }
    }

    pub fn coefficient(&self, e: i64) -> i64 {
        if e < self.lo {
            return 0;
        }
        self.coeffs.get((e - self.lo) as usize).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &VPoly) -> VPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = (self.lo + self.coeffs.len() as i64).max(other.lo + other.coeffs.len() as i64);
        let mut coeffs = vec![0i64; (hi - lo) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.lo - lo) as usize + k] += c;
        }
        let mut p = VPoly { lo, coeffs };
        p.normalize();
        p
    }

    pub fn neg(&self) -> VPoly {
        VPoly {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &VPoly) -> VPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &VPoly) -> VPoly {
        if self.is_zero() || other.is_zero() {
            return VPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = VPoly {
            lo: self.lo + other.lo,
            coeffs,
        };
        p.normalize();
        p
    }

    pub fn scale(&self, c: i64) -> VPoly {
        let mut p = VPoly {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        };
        p.normalize();
        p
    }

    /// The bar involution v -> v^{-1}.
    pub fn bar(&self) -> VPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        let mut p = VPoly {
            lo: -(self.lo + self.coeffs.len() as i64 - 1),
            coeffs,
        };
        p.normalize();
        p
    }

    /// The part with exponents >= 0.
    pub fn nonneg_part(&self) -> VPoly {
        if self.lo >= 0 {
            return self.clone();
        }
        let cut = (-self.lo) as usize;
        if cut >= self.coeffs.len() {
            return VPoly::zero();
        }
        let mut p = VPoly {
            lo: 0,
            coeffs: self.coeffs[cut..].to_vec(),
        };
        p.normalize();
        p
    }

    pub fn as_constant(&self) -> Option<i64> {
        if self.is_zero() {
            Some(0)
        } else if self.lo == 0 && self.coeffs.len() == 1 {
            Some(self.coeffs[0])
        } else {
            None
        }
    }
}

impl fmt::Display for VPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = vec![];
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let e = self.lo + k as i64;
            let body = match e {
                0 => format!("{c}"),
                1 if c == 1 => "v".into(),
                1 if c == -1 => "-v".into(),
                1 => format!("{c}v"),
                _ if c == 1 => format!("v^{e}"),
                _ if c == -1 => format!("-v^{e}"),
                _ => format!("{c}v^{e}"),
            };
            parts.push(body);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_basics() {
        let a = VPoly::v_pow(2).add(&VPoly::constant(-1));
        let b = VPoly::v_pow(-2).add(&VPoly::constant(3));
        let ab = a.mul(&b);
        assert_eq!(ab.coefficient(0), -2);
        assert_eq!(ab.coefficient(2), 3);
        assert_eq!(ab.coefficient(-2), -1);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn bar_and_truncation() {
        let p = VPoly::v_pow(3).add(&VPoly::v_pow(-1).scale(2));
        assert_eq!(p.bar(), VPoly::v_pow(-3).add(&VPoly::v_pow(1).scale(2)));
        assert_eq!(p.nonneg_part(), VPoly::v_pow(3));
        assert_eq!(p.degree(), Some(3));
        assert_eq!(VPoly::v_minus_vinv().bar(), VPoly::v_minus_vinv().neg());
    }
}
