//! Small dense exact-rational linear algebra helpers shared by the ideal
//! oracle, the redundancy solver and the double description method.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::Rat;

/// Row rank of a rational matrix.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let ncols = m.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = m[r][col].clone();
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = &m[i][col] / &inv;
                for c in col..ncols {
                    let t = &f * &m[r][c];
                    m[i][c] = &m[i][c] - t;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Solves `a · x = b` for one solution (free variables set to zero).
/// Returns `None` when the system is inconsistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let nrows = a.len();
    assert_eq!(nrows, b.len());
    let ncols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].clone();
        for i in 0..nrows {
            if i != r && !m[i][col].is_zero() {
                let f = &m[i][col] / &inv;
                for c in col..=ncols {
                    let t = &f * &m[r][c];
                    m[i][c] = &m[i][c] - t;
                }
            }
        }
        pivots.push((r, col));
        r += 1;
        if r == nrows {
            break;
        }
    }
    // Inconsistent if a zero row has nonzero rhs.
    for i in r..nrows {
        if !m[i][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); ncols];
    for &(row, col) in &pivots {
        x[col] = &m[row][ncols] / &m[row][col];
    }
    Some(x)
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn invert(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].clone();
        for c in col..2 * n {
            m[col][c] = &m[col][c] / &inv;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in col..2 * n {
                    let t = &f * &m[col][c];
                    m[i][c] = &m[i][c] - t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Basis of the right null space `{x : a·x = 0}`.
pub fn nullspace(a: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let nrows = a.len();
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].clone();
        for c in 0..ncols {
            m[r][c] = &m[r][c] / &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in 0..ncols {
                    let t = &f * &m[r][c];
                    m[i][c] = &m[i][c] - t;
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Dot product of two rational vectors.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Orthogonal projection of `v` onto the complement of the row span of `rows`.
/// `rows` need not be orthogonal but must be linearly independent.
pub fn project_out(rows: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    if rows.is_empty() {
        return v.to_vec();
    }
    let k = rows.len();
    let gram: Vec<Vec<Rat>> = (0..k)
        .map(|i| (0..k).map(|j| dot(&rows[i], &rows[j])).collect())
        .collect();
    let rhs: Vec<Rat> = rows.iter().map(|r| dot(r, v)).collect();
    let coeffs = solve(&gram, &rhs).expect("Gram matrix of independent rows is invertible");
    let mut out = v.to_vec();
    for (c, row) in coeffs.iter().zip(rows) {
        for (o, e) in out.iter_mut().zip(row) {
            let t = c * e;
            *o = &*o - t;
        }
    }
    out
}

/// Scales a rational vector to a primitive integer vector (cleared
/// denominators, entries divided by their gcd). The orientation is kept.
pub fn primitive(v: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Integer vector back to rationals.
pub fn to_rats(v: &[BigInt]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn rv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rank_and_solve() {
        let m = vec![rv(&[1, 2]), rv(&[2, 4]), rv(&[0, 1])];
        assert_eq!(rank(&m), 2);
        let a = vec![rv(&[2, 0]), rv(&[1, 1])];
        let x = solve(&a, &rv(&[4, 3])).unwrap();
        assert_eq!(x, rv(&[2, 1]));
        assert!(solve(&[rv(&[1, 1]), rv(&[1, 1])], &rv(&[0, 1])).is_none());
    }

    #[test]
    fn invert_roundtrip() {
        let a = vec![rv(&[1, 2]), rv(&[3, 5])];
        let inv = invert(&a).unwrap();
        // a * inv = identity
        for i in 0..2 {
            for j in 0..2 {
                let s: Rat = (0..2).map(|k| &a[i][k] * &inv[k][j]).sum();
                assert_eq!(s, rat(if i == j { 1 } else { 0 }));
            }
        }
        assert!(invert(&[rv(&[1, 2]), rv(&[2, 4])]).is_none());
    }

    #[test]
    fn nullspace_of_trace() {
        let basis = nullspace(&[rv(&[1, 1, 1, 1])], 4);
        assert_eq!(basis.len(), 3);
        for v in &basis {
            assert!(dot(&rv(&[1, 1, 1, 1]), v).is_zero());
        }
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![ratio(1, 2), ratio(-3, 4), rat(0)];
        let p = primitive(&v);
        assert_eq!(p, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }

    #[test]
    fn projection_kills_span() {
        let rows = vec![rv(&[1, 1, 1, 1])];
        let p = project_out(&rows, &rv(&[1, 0, 0, 0]));
        assert_eq!(
            p,
            vec![ratio(3, 4), ratio(-1, 4), ratio(-1, 4), ratio(-1, 4)]
        );
    }
}
