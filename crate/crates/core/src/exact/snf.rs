//! Smith normal form of integer matrices with unimodular transforms.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::matrix::Matrix;

/// U * m * V = D with D diagonal, d_i | d_{i+1}, U and V unimodular.
pub struct SmithNormalForm {
    pub u: Matrix<BigInt>,
    pub d: Matrix<BigInt>,
    pub v: Matrix<BigInt>,
}

impl SmithNormalForm {
    /// Diagonal entries of D (length min(rows, cols)).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.at(i, i).clone())
            .collect()
    }
}

fn identity(n: usize) -> Matrix<BigInt> {
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            BigInt::from(1)
        } else {
            BigInt::zero()
        }
    })
}

fn swap_rows(m: &mut Matrix<BigInt>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let x = m.at(a, j).clone();
        let y = m.at(b, j).clone();
        m.set(a, j, y);
        m.set(b, j, x);
    }
}

fn swap_cols(m: &mut Matrix<BigInt>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let x = m.at(i, a).clone();
        let y = m.at(i, b).clone();
        m.set(i, a, y);
        m.set(i, b, x);
    }
}

/// row[a] += k * row[b]
fn add_row(m: &mut Matrix<BigInt>, a: usize, b: usize, k: &BigInt) {
    for j in 0..m.cols() {
        let v = m.at(a, j) + k * m.at(b, j);
        m.set(a, j, v);
    }
}

fn add_col(m: &mut Matrix<BigInt>, a: usize, b: usize, k: &BigInt) {
    for i in 0..m.rows() {
        let v = m.at(i, a) + k * m.at(i, b);
        m.set(i, a, v);
    }
}

fn negate_row(m: &mut Matrix<BigInt>, a: usize) {
    for j in 0..m.cols() {
        let v = -m.at(a, j).clone();
        m.set(a, j, v);
    }
}

/// Smith normal form by pivoting on the least nonzero entry.
pub fn smith_normal_form(m: &Matrix<BigInt>) -> SmithNormalForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);

    let k_max = rows.min(cols);
    let mut k = 0;
    while k < k_max {
        // Find least |nonzero| entry in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if !d.at(i, j).is_zero() {
                    match &best {
                        Some((bi, bj)) if d.at(*bi, *bj).abs() <= d.at(i, j).abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut d, k, pi);
        swap_rows(&mut u, k, pi);
        swap_cols(&mut d, k, pj);
        swap_cols(&mut v, k, pj);

        let mut dirty = true;
        while dirty {
            dirty = false;
            // Clear column k below and above.
            for i in 0..rows {
                if i == k || d.at(i, k).is_zero() {
                    continue;
                }
                let q = -(d.at(i, k) / d.at(k, k));
                if !q.is_zero() {
                    add_row(&mut d, i, k, &q);
                    add_row(&mut u, i, k, &q);
                }
                if !d.at(i, k).is_zero() {
                    // Remainder smaller than pivot: swap up and restart.
                    swap_rows(&mut d, k, i);
                    swap_rows(&mut u, k, i);
                    dirty = true;
                }
            }
            // Clear row k.
            for j in 0..cols {
                if j == k || d.at(k, j).is_zero() {
                    continue;
                }
                let q = -(d.at(k, j) / d.at(k, k));
                if !q.is_zero() {
                    add_col(&mut d, j, k, &q);
                    add_col(&mut v, j, k, &q);
                }
                if !d.at(k, j).is_zero() {
                    swap_cols(&mut d, k, j);
                    swap_cols(&mut v, k, j);
                    dirty = true;
                }
            }
        }
        k += 1;
    }

    // Sign normalization.
    for i in 0..k_max {
        if d.at(i, i).is_negative() {
            negate_row(&mut d, i);
            negate_row(&mut u, i);
        }
    }

    // Divisibility chain: if d_i does not divide d_j (i < j), fold d_j into
    // column i and re-eliminate the 2x2 block.
    loop {
        let mut fixed = true;
        for i in 0..k_max {
            for j in i + 1..k_max {
                let (a, b) = (d.at(i, i).clone(), d.at(j, j).clone());
                if a.is_zero() && b.is_zero() {
                    continue;
                }
                // Chain violated when a = 0 < |b| or a does not divide b.
                if a.is_zero() || (!b.is_zero() && !(&b % &a).is_zero()) {
                    // Move so that the gcd lands at (i,i).
                    add_col(&mut d, i, j, &BigInt::from(1));
                    add_col(&mut v, i, j, &BigInt::from(1));
                    // Re-eliminate rows i..,j using the standard gcd steps.
                    loop {
                        let aii = d.at(i, i).clone();
                        if aii.is_zero() {
                            swap_rows(&mut d, i, j);
                            swap_rows(&mut u, i, j);
                            continue;
                        }
                        let q = -(d.at(j, i) / &aii);
                        if !q.is_zero() {
                            add_row(&mut d, j, i, &q);
                            add_row(&mut u, j, i, &q);
                        }
                        if d.at(j, i).is_zero() {
                            break;
                        }
                        swap_rows(&mut d, i, j);
                        swap_rows(&mut u, i, j);
                    }
                    // Clear the (i,j) entry created by the column fold.
                    let aii = d.at(i, i).clone();
                    let q = -(d.at(i, j) / &aii);
                    if !q.is_zero() {
                        add_col(&mut d, j, i, &q);
                        add_col(&mut v, j, i, &q);
                    }
                    if !d.at(i, j).is_zero() {
                        // Should not happen: gcd step guarantees divisibility.
                        unreachable!("divisibility fix left a nonzero off-diagonal");
                    }
                    if d.at(i, i).is_negative() {
                        negate_row(&mut d, i);
                        negate_row(&mut u, i);
                    }
                    if d.at(j, j).is_negative() {
                        negate_row(&mut d, j);
                        negate_row(&mut u, j);
                    }
                    fixed = false;
                }
            }
        }
        if fixed {
            break;
        }
    }

    SmithNormalForm { u, d, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    fn check(m: &Matrix<BigInt>) -> Vec<BigInt> {
        let snf = smith_normal_form(m);
        // U m V = D exactly.
        let prod = mul(&mul(&snf.u, m), &snf.v);
        assert_eq!(prod, snf.d, "U*m*V != D");
        // D diagonal with divisibility chain.
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert!(snf.d.at(i, j).is_zero());
                }
            }
        }
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken: {diag:?}");
            } else {
                assert!(w[1].is_zero());
            }
        }
        // Unimodularity.
        assert_eq!(det(&snf.u).abs(), BigInt::from(1));
        assert_eq!(det(&snf.v).abs(), BigInt::from(1));
        diag
    }

    fn mul(a: &Matrix<BigInt>, b: &Matrix<BigInt>) -> Matrix<BigInt> {
        Matrix::from_fn(a.rows(), b.cols(), |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..a.cols() {
                acc += a.at(i, k) * b.at(k, j);
            }
            acc
        })
    }

    fn det(m: &Matrix<BigInt>) -> BigInt {
        // Small sizes only; expansion by minors.
        let n = m.rows();
        if n == 0 {
            return BigInt::from(1);
        }
        if n == 1 {
            return m.at(0, 0).clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
                m.at(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = m.at(0, j) * det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn identity_and_diagonal() {
        assert_eq!(
            check(&mat(vec![vec![1, 0], vec![0, 1]])),
            vec![BigInt::from(1), BigInt::from(1)]
        );
        assert_eq!(
            check(&mat(vec![vec![2, 0], vec![0, 3]])),
            vec![BigInt::from(1), BigInt::from(6)]
        );
        assert_eq!(check(&mat(vec![vec![2]])), vec![BigInt::from(2)]);
    }

    #[test]
    fn rectangular_and_singular() {
        check(&mat(vec![vec![2, 4, 4]]));
        check(&mat(vec![vec![1, 2], vec![2, 4]]));
        check(&mat(vec![vec![6, 4], vec![2, 8], vec![4, 2]]));
        check(&mat(vec![vec![0, 0], vec![0, 0]]));
    }

    #[test]
    fn random_small_matrices() {
        // Deterministic pseudo-random sweep.
        let mut x: i64 = 12345;
        let mut next = || {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (x >> 33) % 10 - 5
        };
        for _ in 0..50 {
            let m = mat(vec![
                vec![next(), next(), next()],
                vec![next(), next(), next()],
                vec![next(), next(), next()],
            ]);
            check(&m);
        }
    }
}
