//! Small exact linear-algebra helpers: rational Gauss-Jordan inversion,
//! Smith normal form over the integers, and unit-triangular integer inversion.

use num_rational::Ratio;
use num_traits::{One, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = Ratio<i128>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n as i128)
}

/// Invert a square rational matrix by Gauss-Jordan elimination with partial
/// pivoting. Panics on a singular matrix; callers only invert Cartan matrices
/// and other matrices known to be invertible.
pub fn invert_rational(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();

    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular matrix in invert_rational");
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);

        let pivot = a[col][col];
        for j in 0..n {
            a[col][j] /= pivot;
            inv[col][j] /= pivot;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col];
            for j in 0..n {
                let ax = a[col][j] * factor;
                a[r][j] -= ax;
                let ix = inv[col][j] * factor;
                inv[r][j] -= ix;
            }
        }
    }
    inv
}

/// Result of a Smith normal form computation `u * m * v = diag(factors)`.
/// Only `u` and the invariant factors are kept; that is all the congruence
/// and unimodularity computations need.
pub struct SmithForm {
    pub factors: Vec<i64>,
    pub row_transform: Vec<Vec<i64>>,
}

/// Smith normal form of an integer matrix (rows x cols), returning the
/// invariant factors d_1 | d_2 | ... and the unimodular row transform U with
/// U*M*V = diag. Sizes here are tiny (rank <= 8), so the plain pivoting
/// algorithm is fine.
pub fn smith_normal_form(m: &[Vec<i64>]) -> SmithForm {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let mut u: Vec<Vec<i64>> = (0..rows)
        .map(|i| (0..rows).map(|j| i64::from(i == j)).collect())
        .collect();

    let mut t = 0;
    while t < rows && t < cols {
        // Find a nonzero pivot in the remaining block.
        let mut pivot = None;
        'search: for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            // Clear column t with row operations.
            let mut dirty = false;
            for i in (t + 1)..rows {
                if a[i][t] == 0 {
                    continue;
                }
                if a[i][t] % a[t][t] != 0 {
                    // Euclidean step: swap in the smaller remainder.
                    let q = a[i][t].div_euclid(a[t][t]);
                    row_sub(&mut a, i, t, q);
                    row_sub(&mut u, i, t, q);
                    a.swap(t, i);
                    u.swap(t, i);
                    dirty = true;
                } else {
                    let q = a[i][t] / a[t][t];
                    row_sub(&mut a, i, t, q);
                    row_sub(&mut u, i, t, q);
                }
            }
            // Clear row t with column operations (V is not tracked).
            for j in (t + 1)..cols {
                if a[t][j] == 0 {
                    continue;
                }
                if a[t][j] % a[t][t] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    col_sub(&mut a, j, t, q);
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                } else {
                    let q = a[t][j] / a[t][t];
                    col_sub(&mut a, j, t, q);
                }
            }
            if !dirty && (t + 1..rows).all(|i| a[i][t] == 0) && (t + 1..cols).all(|j| a[t][j] == 0) {
                break;
            }
        }

        if a[t][t] < 0 {
            for x in a[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
        t += 1;
    }

    // Enforce the divisibility chain d_i | d_{i+1}.
    let k = rows.min(cols);
    loop {
        let mut fixed = true;
        for i in 0..k.saturating_sub(1) {
            let (d1, d2) = (a[i][i], a[i + 1][i + 1]);
            if d1 != 0 && d2 % d1 != 0 {
                let g = gcd(d1, d2);
                let l = d1 / g * d2;
                a[i][i] = g;
                a[i + 1][i + 1] = l;
                // The row transform for this adjustment: combine rows i and i+1.
                // gcd(d1, d2) = x*d1 + y*d2 for some x, y.
                let (x, y) = bezout(d1, d2);
                let (ri, rj) = (u[i].clone(), u[i + 1].clone());
                for c in 0..u[i].len() {
                    u[i][c] = x * ri[c] + y * rj[c];
                    u[i + 1][c] = -(d2 / g) * ri[c] + (d1 / g) * rj[c];
                }
                fixed = false;
            }
        }
        if fixed {
            break;
        }
    }

    let factors = (0..k).map(|i| a[i][i]).collect();
    SmithForm {
        factors,
        row_transform: u,
    }
}

fn row_sub(m: &mut [Vec<i64>], i: usize, j: usize, q: i64) {
    for c in 0..m[i].len() {
        m[i][c] -= q * m[j][c];
    }
}

fn col_sub(m: &mut [Vec<i64>], j: usize, k: usize, q: i64) {
    for row in m.iter_mut() {
        row[j] -= q * row[k];
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

/// Extended gcd: returns (x, y) with x*a + y*b = gcd(a, b).
fn bezout(a: i64, b: i64) -> (i64, i64) {
    let e = num_integer::Integer::extended_gcd(&a, &b);
    (e.x, e.y)
}

/// True when the rows of `m` generate a saturated sublattice of Z^cols, i.e.
/// every invariant factor is 1. For a square matrix this is |det| = 1.
pub fn is_unimodular_basis(m: &[Vec<i64>]) -> bool {
    if m.is_empty() {
        return true;
    }
    let snf = smith_normal_form(m);
    snf.factors.len() == m.len() && snf.factors.iter().all(|&d| d == 1)
}

/// Exact inverse of a unit lower-triangular integer matrix by forward
/// substitution. The inverse of such a matrix is again integral.
pub fn invert_unit_lower_triangular(l: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = l.len();
    let mut inv = vec![vec![0i64; n]; n];
    for j in 0..n {
        inv[j][j] = 1;
        for i in (j + 1)..n {
            let mut sum: i128 = 0;
            for k in j..i {
                sum += l[i][k] as i128 * inv[k][j] as i128;
            }
            inv[i][j] = i64::try_from(-sum).expect("triangular inverse entry overflow");
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_inverse_roundtrip() {
        let m = vec![
            vec![rat(2), rat(-1)],
            vec![rat(-2), rat(2)],
        ];
        let inv = invert_rational(&m);
        // m * inv = identity
        for i in 0..2 {
            for j in 0..2 {
                let s: Rat = (0..2).map(|k| m[i][k] * inv[k][j]).sum();
                assert_eq!(s, if i == j { Rat::one() } else { Rat::zero() });
            }
        }
    }

    #[test]
    fn snf_of_a3_cartan() {
        let m = vec![
            vec![2, -1, 0],
            vec![-1, 2, -1],
            vec![0, -1, 2],
        ];
        let snf = smith_normal_form(&m);
        assert_eq!(snf.factors, vec![1, 1, 4]);
    }

    #[test]
    fn snf_of_d4_cartan() {
        let m = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, -1],
            vec![0, -1, 2, 0],
            vec![0, -1, 0, 2],
        ];
        let snf = smith_normal_form(&m);
        assert_eq!(snf.factors, vec![1, 1, 2, 2]);
    }

    #[test]
    fn unimodular_checks() {
        assert!(is_unimodular_basis(&[vec![1, 0], vec![1, 1]]));
        assert!(!is_unimodular_basis(&[vec![1, 0], vec![0, 2]]));
        assert!(is_unimodular_basis(&[vec![2, 1]]));
        assert!(!is_unimodular_basis(&[vec![2, 4]]));
        assert!(is_unimodular_basis(&[]));
    }

    #[test]
    fn triangular_inverse() {
        let l = vec![
            vec![1, 0, 0],
            vec![2, 1, 0],
            vec![-3, 5, 1],
        ];
        let inv = invert_unit_lower_triangular(&l);
        for i in 0..3 {
            for j in 0..3 {
                let s: i64 = (0..3).map(|k| l[i][k] * inv[k][j]).sum();
                assert_eq!(s, i64::from(i == j));
            }
        }
    }
}
