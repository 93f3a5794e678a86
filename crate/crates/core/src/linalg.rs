//! Exact linear algebra: fraction-free echelon forms and nullspaces.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::poly::Rational;

/// Fraction-free (Bareiss) row echelon form in place. Entries stay integral
/// throughout; returns the pivot columns in order.
pub fn integer_echelon(mat: &mut [Vec<BigInt>]) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut prev_pivot = BigInt::one();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, pr);
        let pivot = mat[r][c].clone();
        // The update runs over every row below the pivot, zero factor or not;
        // exactness of the division depends on the uniform Bareiss step.
        for i in (r + 1)..rows {
            let factor = mat[i][c].clone();
            for j in 0..cols {
                let v = &mat[i][j] * &pivot - &factor * &mat[r][j];
                let (q, rem) = v.div_rem(&prev_pivot);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                mat[i][j] = q;
            }
        }
        prev_pivot = pivot;
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Clears denominators of a rational row and strips the integer content,
/// keeping the sign of the leading entry.
fn primitive_integer_row(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in row {
        if !v.is_zero() {
            lcm = lcm.lcm(v.denom());
        }
    }
    let ints: Vec<BigInt> = row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
    let mut gcd = BigInt::zero();
    for v in &ints {
        gcd = gcd.gcd(v);
    }
    if gcd.is_zero() || gcd.is_one() {
        return ints;
    }
    ints.iter().map(|v| v / &gcd).collect()
}

/// Nullspace of the linear system `rows * v = 0` over the rationals.
///
/// Rows are cleared to integers, brought to fraction-free echelon form, and
/// the kernel is read off by back-substitution: one basis vector per free
/// column, carrying 1 there and 0 at every other free column. That shape is
/// canonical, so the result is independent of row order.
pub fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut mat: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "row length mismatch");
            primitive_integer_row(r)
        })
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .collect();
    let pivots = integer_echelon(&mut mat);
    let pivot_rows = pivots.len();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        // Pivot rows from the bottom up.
        for ri in (0..pivot_rows).rev() {
            let pc = pivots[ri];
            let mut acc = Rational::zero();
            for j in (pc + 1)..cols {
                if !mat[ri][j].is_zero() && !v[j].is_zero() {
                    acc += BigRational::from(mat[ri][j].clone()) * &v[j];
                }
            }
            if !acc.is_zero() {
                v[pc] = -acc / BigRational::from(mat[ri][pc].clone());
            }
        }
        basis.push(v);
    }
    basis
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    let mut mat: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols);
            primitive_integer_row(r)
        })
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .collect();
    integer_echelon(&mut mat).len()
}

/// Reduced row echelon form over the rationals, in place. Zero rows are
/// removed; returns the pivot columns. Pivot entries are normalized to 1 with
/// zeros above and below, which makes the result canonical for the row space.
pub fn rref(mat: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let cols = mat.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pr) = (r..mat.len()).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, pr);
        let inv = mat[r][c].clone();
        for j in 0..cols {
            let v = std::mem::replace(&mut mat[r][j], Rational::zero());
            mat[r][j] = v / &inv;
        }
        for i in 0..mat.len() {
            if i != r && !mat[i][c].is_zero() {
                let factor = mat[i][c].clone();
                for j in 0..cols {
                    let sub = &factor * &mat[r][j];
                    mat[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == mat.len() {
            break;
        }
    }
    mat.truncate(r);
    pivots
}

/// RREF rows rescaled to primitive integer vectors (positive leading entry).
pub fn rref_integer_rows(rows: Vec<Vec<Rational>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut mat = rows;
    let pivots = rref(&mut mat);
    let ints = mat
        .iter()
        .map(|r| {
            let mut v = primitive_integer_row(r);
            if let Some(first) = v.iter().find(|x| !x.is_zero()) {
                if first.is_negative() {
                    v = v.iter().map(|x| -x).collect();
                }
            }
            v
        })
        .collect();
    (ints, pivots)
}
