//! Integer kernels of small matrices by unimodular column reduction, and
//! Gauss reduction of rank-2 bases.

use crate::arith::div_round;
use crate::lattice::Vec4;

/// Basis of `{x in Z^4 : row . x = 0 for every row}`.
///
/// Column operations reduce `rows` to echelon form while the same
/// operations are applied to the identity; identity columns that end up
/// under zero columns span the kernel.
pub fn integer_kernel(rows: &[Vec4]) -> Vec<Vec4> {
    let mut m: Vec<[i64; 4]> = rows.iter().map(|r| r.0).collect();
    let mut u: [[i64; 4]; 4] = std::array::from_fn(|i| std::array::from_fn(|j| i64::from(i == j)));
    let mut pivot = 0;
    for row in 0..m.len() {
        if pivot == 4 {
            break;
        }
        // Euclid across columns pivot.. until only the pivot column is nonzero.
        loop {
            let nonzero: Vec<usize> = (pivot..4).filter(|&j| m[row][j] != 0).collect();
            if nonzero.len() <= 1 {
                if let Some(&j) = nonzero.first() {
                    swap_cols(&mut m, &mut u, pivot, j);
                    pivot += 1;
                }
                break;
            }
            let &jmin = nonzero.iter().min_by_key(|&&j| m[row][j].abs()).unwrap();
            for &j in &nonzero {
                if j != jmin {
                    let f = m[row][j].div_euclid(m[row][jmin]);
                    add_col(&mut m, &mut u, j, jmin, -f);
                }
            }
        }
    }
    (pivot..4).map(|j| Vec4(std::array::from_fn(|i| u[i][j]))).collect()
}

fn swap_cols(m: &mut [[i64; 4]], u: &mut [[i64; 4]; 4], a: usize, b: usize) {
    for r in m.iter_mut() {
        r.swap(a, b);
    }
    for r in u.iter_mut() {
        r.swap(a, b);
    }
}

/// `col[dst] += f * col[src]`.
fn add_col(m: &mut [[i64; 4]], u: &mut [[i64; 4]; 4], dst: usize, src: usize, f: i64) {
    for r in m.iter_mut() {
        r[dst] += f * r[src];
    }
    for r in u.iter_mut() {
        r[dst] += f * r[src];
    }
}

/// Gauss-Lagrange reduction: `|b1| <= |b2|` and `2|<b1,b2>| <= |b1|^2`.
/// Signs are fixed so that `<b1,b2> <= 0` and the first nonzero
/// coordinate of `b1` is positive.
pub fn gauss_reduce(mut b1: Vec4, mut b2: Vec4) -> (Vec4, Vec4) {
    loop {
        if b1.norm2() > b2.norm2() {
            std::mem::swap(&mut b1, &mut b2);
        }
        let mu = div_round(b1.dot(b2), b1.norm2());
        if mu == 0 {
            break;
        }
        b2 = b2 - mu * b1;
    }
    if b1.0.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        b1 = -b1;
    }
    if b1.dot(b2) > 0 {
        b2 = -b2;
    }
    (b1, b2)
}
