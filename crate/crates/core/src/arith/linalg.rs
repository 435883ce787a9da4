//! Exact linear algebra: fraction-free row echelon form and right nullspaces.

use super::{Domain, Field};

/// Fraction-free (Bareiss) row echelon form in place.
///
/// Returns the pivot columns. Pivots are chosen as the first nonzero entry
/// scanning the current column top to bottom.
pub fn bareiss<R: Domain>(m: &mut [Vec<R>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = R::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let v = piv.clone() * &row[j] - f.clone() * &pivot_row[j];
                row[j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            row[c] = R::zero();
        }
        // rows above the pivot keep their entries; nothing to rescale there
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Clears denominators row by row and maps into the integral domain.
fn to_integral_rows<F: Field>(m: &[Vec<F>]) -> Vec<Vec<F::Integral>> {
    m.iter()
        .map(|row| {
            let c = F::common_denominator(row);
            row.iter().map(|x| (x.clone() * &c).to_integral()).collect()
        })
        .collect()
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut a = to_integral_rows(m);
    bareiss(&mut a).len()
}

/// Basis of the right nullspace, computed fraction-free.
///
/// Each basis vector has its last nonzero entry equal to 1.
pub fn nullspace<F: Field>(m: &[Vec<F>]) -> Vec<Vec<F>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut a = to_integral_rows(m);
    let pivots = bareiss(&mut a);
    let echelon: Vec<Vec<F>> = a
        .iter()
        .take(pivots.len())
        .map(|row| row.iter().map(F::from_integral).collect())
        .collect();
    back_substitute(&echelon, &pivots, cols)
}

/// Basis of the right nullspace by ordinary Gauss–Jordan elimination over
/// the field. Used as an independent reference for [`nullspace`].
pub fn nullspace_field<F: Field>(m: &[Vec<F>]) -> Vec<Vec<F>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv();
        for x in &mut a[r][c..cols] {
            *x = x.clone() * &inv;
        }
        let pivot = a[r][c..cols].to_vec();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row[c..cols].iter_mut().zip(&pivot) {
                *x = x.clone() - f.clone() * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(pivots.len());
    back_substitute(&a, &pivots, cols)
}

fn back_substitute<F: Field>(echelon: &[Vec<F>], pivots: &[usize], cols: usize) -> Vec<Vec<F>> {
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![F::zero(); cols];
        x[f] = F::one();
        for (k, &pc) in pivots.iter().enumerate().rev() {
            if pc > f {
                continue;
            }
            let row = &echelon[k];
            let mut acc = F::zero();
            for j in pc + 1..cols {
                if !x[j].is_zero() && !row[j].is_zero() {
                    acc = acc + &(row[j].clone() * &x[j]);
                }
            }
            x[pc] = -acc / &row[pc];
        }
        if let Some(last) = x.iter().rposition(|v| !v.is_zero()) {
            if !x[last].is_one() {
                let s = x[last].inv();
                for v in x.iter_mut() {
                    *v = v.clone() * &s;
                }
            }
        }
        basis.push(x);
    }
    basis
}
