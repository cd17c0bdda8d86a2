//! Phase-1 exact-rational simplex with Bland's anti-cycling rule.
//!
//! The single entry point decides whether a target vector lies in
//! cone(nonnegative columns) + span(free columns). Feasibility yields the
//! multipliers; infeasibility yields a separating vector y with y·c ≤ 0 for
//! every column c and y·target > 0, read off the optimal dual.

use num_traits::{One, Signed, Zero};

use crate::Rat;

#[derive(Debug, Clone)]
pub enum ConeMembership {
    /// target = Σ multipliers[j]·columns[j], multipliers nonnegative on the
    /// cone part.
    Inside { multipliers: Vec<Rat> },
    /// y separates: y·columns[j] ≤ 0 for all j (= 0 for free columns),
    /// y·target > 0.
    Outside { witness: Vec<Rat> },
}

/// Decides `target ∈ cone(columns[..nonneg]) + span(columns[nonneg..])`.
pub fn cone_membership(columns: &[Vec<Rat>], nonneg: usize, target: &[Rat]) -> ConeMembership {
    let m = target.len();
    for c in columns {
        assert_eq!(c.len(), m);
    }
    // Free columns are split into ± pairs.
    let mut cols: Vec<Vec<Rat>> = columns[..nonneg].to_vec();
    for c in &columns[nonneg..] {
        cols.push(c.clone());
        cols.push(c.iter().map(|x| -x).collect());
    }
    let n = cols.len();

    // Orient rows so the right-hand side is nonnegative.
    let flip: Vec<bool> = target.iter().map(|b| b.is_negative()).collect();
    let sign = |i: usize, x: &Rat| if flip[i] { -x } else { x.clone() };

    // Tableau over structural columns then m artificials.
    let mut t: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rat> = (0..n).map(|j| sign(i, &cols[j][i])).collect();
            for k in 0..m {
                row.push(if k == i { Rat::one() } else { Rat::zero() });
            }
            row
        })
        .collect();
    let mut b: Vec<Rat> = target.iter().enumerate().map(|(i, x)| sign(i, x)).collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    let cost = |j: usize| -> Rat {
        if j >= n {
            Rat::one()
        } else {
            Rat::zero()
        }
    };

    loop {
        // Reduced costs z_j = c_j − Σ_i cost(basis[i])·T[i][j].
        let mut entering = None;
        for j in 0..n + m {
            if basis.contains(&j) {
                continue;
            }
            let mut z = cost(j);
            for i in 0..m {
                let cb = cost(basis[i]);
                if !cb.is_zero() {
                    let prod = &cb * &t[i][j];
                    z -= prod;
                }
            }
            if z.is_negative() {
                entering = Some(j);
                break; // Bland: smallest index.
            }
        }
        let Some(e) = entering else {
            break;
        };
        // Ratio test; Bland tie-break on the smallest basis index.
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if t[i][e].is_positive() {
                let ratio = &b[i] / &t[i][e];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && basis[i] < basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (l, _) = leave.expect("phase-1 objective is bounded");
        // Pivot on (l, e).
        let piv = t[l][e].clone();
        for j in 0..n + m {
            t[l][j] = &t[l][j] / &piv;
        }
        b[l] = &b[l] / &piv;
        for i in 0..m {
            if i != l && !t[i][e].is_zero() {
                let f = t[i][e].clone();
                for j in 0..n + m {
                    let d = &f * &t[l][j];
                    t[i][j] = &t[i][j] - d;
                }
                let d = &f * &b[l];
                b[i] = &b[i] - d;
            }
        }
        basis[l] = e;
    }

    // Objective value: sum of basic artificial values.
    let objective: Rat = (0..m)
        .filter(|&i| basis[i] >= n)
        .map(|i| b[i].clone())
        .sum();
    if objective.is_zero() {
        let mut x = vec![Rat::zero(); n];
        for i in 0..m {
            if basis[i] < n {
                x[basis[i]] = b[i].clone();
            }
        }
        let mut multipliers: Vec<Rat> = x[..nonneg].to_vec();
        for f in 0..columns.len() - nonneg {
            let plus = &x[nonneg + 2 * f];
            let minus = &x[nonneg + 2 * f + 1];
            multipliers.push(plus - minus);
        }
        ConeMembership::Inside { multipliers }
    } else {
        // Dual y' from the artificial reduced costs: y'_i = c_B · (B⁻¹)e_i.
        let mut witness: Vec<Rat> = (0..m)
            .map(|i| {
                let mut y = Rat::zero();
                for r in 0..m {
                    let cb = cost(basis[r]);
                    if !cb.is_zero() {
                        let prod = &cb * &t[r][n + i];
                        y += prod;
                    }
                }
                y
            })
            .collect();
        for (i, f) in flip.iter().enumerate() {
            if *f {
                witness[i] = -witness[i].clone();
            }
        }
        debug_assert!(crate::linalg::dot(&witness, target).is_positive());
        for (j, c) in columns.iter().enumerate() {
            let d = crate::linalg::dot(&witness, c);
            debug_assert!(
                if j < nonneg { !d.is_positive() } else { d.is_zero() },
                "separating vector fails on column {j}"
            );
        }
        ConeMembership::Outside { witness }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn rv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn membership_in_the_positive_quadrant() {
        let cols = vec![rv(&[1, 0]), rv(&[0, 1])];
        match cone_membership(&cols, 2, &rv(&[3, 2])) {
            ConeMembership::Inside { multipliers } => {
                assert_eq!(multipliers, rv(&[3, 2]));
            }
            _ => panic!("expected inside"),
        }
        match cone_membership(&cols, 2, &rv(&[-1, 1])) {
            ConeMembership::Outside { witness } => {
                assert!(crate::linalg::dot(&witness, &rv(&[-1, 1])).is_positive());
            }
            _ => panic!("expected outside"),
        }
    }

    #[test]
    fn free_columns_span() {
        // cone{(1,0)} + span{(0,1)} contains (2,-5) but not (-1,0).
        let cols = vec![rv(&[1, 0]), rv(&[0, 1])];
        match cone_membership(&cols, 1, &rv(&[2, -5])) {
            ConeMembership::Inside { multipliers } => {
                assert_eq!(multipliers, vec![rat(2), rat(-5)]);
            }
            _ => panic!("expected inside"),
        }
        assert!(matches!(
            cone_membership(&cols, 1, &rv(&[-1, 0])),
            ConeMembership::Outside { .. }
        ));
    }

    #[test]
    fn zero_target_is_inside() {
        let cols = vec![rv(&[1, 2]), rv(&[-1, 0])];
        assert!(matches!(
            cone_membership(&cols, 2, &rv(&[0, 0])),
            ConeMembership::Inside { .. }
        ));
    }
}
