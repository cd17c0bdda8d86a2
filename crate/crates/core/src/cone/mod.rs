//! Exact polyhedral engine: Farkas/LP redundancy elimination, facet
//! enumeration, and extreme-ray enumeration by the double description
//! method.
//!
//! Cones are given as `a·x ≤ 0` rows plus equality rows. Equalities are
//! eliminated by passing to a chart of their null space, so the double
//! description loop always works with a pointed full-dimensional cone; rays
//! are mapped back to ambient coordinates on output.

mod simplex;

pub use simplex::{cone_membership, ConeMembership};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg;
use crate::{Error, Rat, Result};

/// H-representation: equalities `e·x = 0` and inequalities `a·x ≤ 0`.
#[derive(Debug, Clone)]
pub struct HRep {
    pub dim: usize,
    pub equalities: Vec<Vec<Rat>>,
    pub inequalities: Vec<Vec<Rat>>,
}

impl HRep {
    pub fn new(dim: usize, equalities: Vec<Vec<Rat>>, inequalities: Vec<Vec<Rat>>) -> Self {
        for row in equalities.iter().chain(&inequalities) {
            assert_eq!(row.len(), dim);
        }
        HRep {
            dim,
            equalities,
            inequalities,
        }
    }

    /// Primitive integer form of a row, reduced modulo the equality span.
    pub fn canonical_row(&self, row: &[Rat]) -> Vec<BigInt> {
        linalg::primitive(&linalg::project_out(&self.equalities, row))
    }

    /// Canonical forms of all inequality rows.
    pub fn canonical_rows(&self) -> Vec<Vec<BigInt>> {
        self.inequalities
            .iter()
            .map(|r| self.canonical_row(r))
            .collect()
    }
}

/// V-representation: primitive extreme rays plus a lineality basis (empty
/// for pointed cones).
#[derive(Debug, Clone)]
pub struct VRep {
    pub dim: usize,
    pub rays: Vec<Vec<BigInt>>,
    pub lineality: Vec<Vec<BigInt>>,
}

/// Outcome of testing one row against the rest of a system.
#[derive(Debug, Clone)]
pub enum Redundancy {
    /// The row is a nonnegative combination of the other rows plus an
    /// arbitrary combination of the equality rows. `multipliers` is indexed
    /// like the inequality list (zero at the tested row).
    Redundant {
        multipliers: Vec<Rat>,
        equality_multipliers: Vec<Rat>,
    },
    /// A point of the remaining cone violating the row: all other rows ≤ 0,
    /// equalities = 0, tested row > 0.
    Irredundant { witness: Vec<Rat> },
}

/// Farkas-style redundancy test of `h.inequalities[index]` against the rest.
pub fn farkas_redundant(h: &HRep, index: usize) -> Result<Redundancy> {
    if index >= h.inequalities.len() {
        return Err(Error::Input(format!("row index {index} out of range")));
    }
    let others: Vec<usize> = (0..h.inequalities.len()).filter(|&j| j != index).collect();
    Ok(test_row_against(h, index, &others))
}

fn test_row_against(h: &HRep, index: usize, others: &[usize]) -> Redundancy {
    let mut columns: Vec<Vec<Rat>> = others.iter().map(|&j| h.inequalities[j].clone()).collect();
    let nonneg = columns.len();
    columns.extend(h.equalities.iter().cloned());
    match cone_membership(&columns, nonneg, &h.inequalities[index]) {
        ConeMembership::Inside { multipliers } => {
            let mut full = vec![Rat::zero(); h.inequalities.len()];
            for (&j, m) in others.iter().zip(&multipliers) {
                full[j] = m.clone();
            }
            Redundancy::Redundant {
                multipliers: full,
                equality_multipliers: multipliers[nonneg..].to_vec(),
            }
        }
        ConeMembership::Outside { witness } => Redundancy::Irredundant { witness },
    }
}

/// Result of iterated redundancy removal.
#[derive(Debug)]
pub struct FacetResult {
    /// The surviving (irredundant) system, rows in original order.
    pub hrep: HRep,
    /// Indices of surviving rows in the input system.
    pub kept: Vec<usize>,
    /// Removed rows with their redundancy certificates (multipliers indexed
    /// like the input system).
    pub removed: Vec<(usize, Redundancy)>,
}

/// Removes redundant rows one at a time, re-testing against the survivors,
/// until every remaining row is irredundant. The surviving set is the facet
/// system of the cone (unique up to scaling).
pub fn minimal_facet_system(h: &HRep) -> FacetResult {
    let n = h.inequalities.len();
    let mut active: Vec<bool> = vec![true; n];
    let mut removed = Vec::new();
    for i in 0..n {
        let others: Vec<usize> = (0..n).filter(|&j| j != i && active[j]).collect();
        if let red @ Redundancy::Redundant { .. } = test_row_against(h, i, &others) {
            active[i] = false;
            removed.push((i, red));
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&i| active[i]).collect();
    let hrep = HRep::new(
        h.dim,
        h.equalities.clone(),
        kept.iter().map(|&i| h.inequalities[i].clone()).collect(),
    );
    FacetResult {
        hrep,
        kept,
        removed,
    }
}

fn bigint_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Extreme rays by double description. Non-pointed input is reported through
/// a nonempty lineality basis (with no rays).
pub fn extreme_rays_dd(h: &HRep) -> Result<VRep> {
    // Chart coordinates for the equality-constrained subspace.
    let chart: Vec<Vec<Rat>> = if h.equalities.is_empty() {
        (0..h.dim)
            .map(|i| {
                let mut e = vec![Rat::zero(); h.dim];
                e[i] = crate::rat(1);
                e
            })
            .collect()
    } else {
        linalg::nullspace(&h.equalities, h.dim)
    };
    let d = chart.len();
    if d == 0 {
        return Ok(VRep {
            dim: h.dim,
            rays: Vec::new(),
            lineality: Vec::new(),
        });
    }
    // Project the rows into the chart and clear denominators.
    let rows: Vec<Vec<BigInt>> = h
        .inequalities
        .iter()
        .map(|a| {
            let projected: Vec<Rat> = chart.iter().map(|basis| linalg::dot(a, basis)).collect();
            linalg::primitive(&projected)
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let rows_rat: Vec<Vec<Rat>> = rows.iter().map(|r| linalg::to_rats(r)).collect();
    if linalg::rank(&rows_rat) < d {
        // Lineality: null space of the rows, mapped back to ambient space.
        let lin = linalg::nullspace(&rows_rat, d);
        let lineality = lin
            .iter()
            .map(|v| linalg::primitive(&unchart(&chart, v)))
            .collect();
        return Ok(VRep {
            dim: h.dim,
            rays: Vec::new(),
            lineality,
        });
    }

    // Initial simplicial subsystem: the first d linearly independent rows.
    let mut initial: Vec<usize> = Vec::new();
    let mut picked: Vec<Vec<Rat>> = Vec::new();
    for (i, row) in rows_rat.iter().enumerate() {
        if initial.len() == d {
            break;
        }
        picked.push(row.clone());
        if linalg::rank(&picked) == picked.len() {
            initial.push(i);
        } else {
            picked.pop();
        }
    }
    let m_inv = linalg::invert(&picked).expect("initial rows are independent");
    // Rays of {x : Mx ≤ 0} are the columns of −M⁻¹.
    let mut rays: Vec<Vec<BigInt>> = (0..d)
        .map(|j| {
            let col: Vec<Rat> = (0..d).map(|i| -m_inv[i][j].clone()).collect();
            linalg::primitive(&col)
        })
        .collect();

    // Remaining constraints, sorted by how many of the initial rays they
    // cut off (fewest first); correctness does not depend on this order.
    let mut remaining: Vec<usize> = (0..rows.len()).filter(|i| !initial.contains(i)).collect();
    remaining.sort_by_key(|&i| {
        let violated = rays
            .iter()
            .filter(|r| bigint_dot(&rows[i], r).is_positive())
            .count();
        (violated, i)
    });

    let mut processed: Vec<usize> = initial.clone();
    for &next in &remaining {
        let dots: Vec<BigInt> = rays.iter().map(|r| bigint_dot(&rows[next], r)).collect();
        if dots.iter().all(|x| !x.is_positive()) {
            processed.push(next);
            continue;
        }
        // Activity bitmasks over the processed constraints.
        let masks: Vec<u128> = rays
            .iter()
            .map(|r| {
                let mut mask = 0u128;
                for (bit, &p) in processed.iter().enumerate() {
                    if bigint_dot(&rows[p], r).is_zero() {
                        mask |= 1 << bit;
                    }
                }
                mask
            })
            .collect();
        let inside: Vec<usize> = (0..rays.len()).filter(|&i| dots[i].is_negative()).collect();
        let boundary: Vec<usize> = (0..rays.len()).filter(|&i| dots[i].is_zero()).collect();
        let outside: Vec<usize> = (0..rays.len()).filter(|&i| dots[i].is_positive()).collect();
        let mut new_rays: Vec<Vec<BigInt>> = Vec::new();
        for &p in &inside {
            for &n in &outside {
                let common = masks[p] & masks[n];
                if (common.count_ones() as usize) < d.saturating_sub(2) {
                    continue;
                }
                let selected: Vec<Vec<Rat>> = processed
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| common & (1 << bit) != 0)
                    .map(|(_, &idx)| linalg::to_rats(&rows[idx]))
                    .collect();
                if linalg::rank(&selected) != d.saturating_sub(2) {
                    continue;
                }
                // Combination vanishing on the new hyperplane, inside on
                // both sides.
                let combo: Vec<BigInt> = rays[p]
                    .iter()
                    .zip(&rays[n])
                    .map(|(a, b)| &dots[n] * a - &dots[p] * b)
                    .collect();
                let combo = linalg::primitive(&linalg::to_rats(&combo));
                if !new_rays.contains(&combo) {
                    new_rays.push(combo);
                }
            }
        }
        let mut survivors: Vec<Vec<BigInt>> = inside
            .iter()
            .chain(&boundary)
            .map(|&i| rays[i].clone())
            .collect();
        survivors.extend(new_rays);
        rays = survivors;
        processed.push(next);
    }

    // Back to ambient coordinates, primitive, sorted.
    let mut out: Vec<Vec<BigInt>> = rays
        .iter()
        .map(|r| {
            let r_rat = linalg::to_rats(r);
            linalg::primitive(&unchart(&chart, &r_rat))
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(VRep {
        dim: h.dim,
        rays: out,
        lineality: Vec::new(),
    })
}

fn unchart(chart: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    let dim = chart[0].len();
    let mut out = vec![Rat::zero(); dim];
    for (c, basis) in v.iter().zip(chart) {
        for (o, b) in out.iter_mut().zip(basis) {
            let t = c * b;
            *o = &*o + t;
        }
    }
    out
}

/// Facet normals of the cone generated by `rays` (the extreme rays of the
/// polar cone), for H→V→H round trips. The ray cone must be full-dimensional
/// in the span cut out by `equalities`.
pub fn facets_of_ray_cone(v: &VRep, equalities: &[Vec<Rat>]) -> Result<HRep> {
    let rows: Vec<Vec<Rat>> = v.rays.iter().map(|r| linalg::to_rats(r)).collect();
    let polar = HRep::new(v.dim, equalities.to_vec(), rows);
    let polar_rays = extreme_rays_dd(&polar)?;
    if !polar_rays.lineality.is_empty() {
        return Err(Error::Input("ray cone is not full-dimensional".into()));
    }
    Ok(HRep::new(
        v.dim,
        equalities.to_vec(),
        polar_rays.rays.iter().map(|r| linalg::to_rats(r)).collect(),
    ))
}

/// Whether two H-representations describe the same cone: equal equality
/// row spaces and equal facet sets (as canonical primitive covectors).
pub fn cones_equal(h1: &HRep, h2: &HRep) -> Result<bool> {
    if h1.dim != h2.dim {
        return Err(Error::Input(format!(
            "dimension mismatch: {} vs {}",
            h1.dim, h2.dim
        )));
    }
    let r1 = linalg::rank(&h1.equalities);
    let r2 = linalg::rank(&h2.equalities);
    let mut stacked = h1.equalities.clone();
    stacked.extend(h2.equalities.iter().cloned());
    if r1 != r2 || linalg::rank(&stacked) != r1 {
        return Ok(false);
    }
    let facets = |h: &HRep| -> Vec<Vec<BigInt>> {
        let minimal = minimal_facet_system(h);
        let mut rows = minimal.hrep.canonical_rows();
        rows.sort();
        rows
    };
    Ok(facets(h1) == facets(h2))
}

/// Every ray satisfies every constraint: equalities exactly, inequalities
/// with `≤ 0`.
pub fn vrep_satisfies(h: &HRep, v: &VRep) -> bool {
    v.rays.iter().all(|ray| {
        let r = linalg::to_rats(ray);
        h.equalities.iter().all(|e| linalg::dot(e, &r).is_zero())
            && h.inequalities
                .iter()
                .all(|a| !linalg::dot(a, &r).is_positive())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn rv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn iv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn redundancy_in_a_tiny_system() {
        // x ≤ 0, y ≤ 0, x + y ≤ 0: the third row is redundant.
        let h = HRep::new(
            2,
            vec![],
            vec![rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])],
        );
        match farkas_redundant(&h, 2).unwrap() {
            Redundancy::Redundant { multipliers, .. } => {
                assert_eq!(multipliers, rv(&[1, 1, 0]));
            }
            _ => panic!("row 2 is redundant"),
        }
        match farkas_redundant(&h, 0).unwrap() {
            Redundancy::Irredundant { witness } => {
                assert!(linalg::dot(&witness, &h.inequalities[0]).is_positive());
                assert!(!linalg::dot(&witness, &h.inequalities[1]).is_positive());
                assert!(!linalg::dot(&witness, &h.inequalities[2]).is_positive());
            }
            _ => panic!("row 0 is irredundant"),
        }
        let minimal = minimal_facet_system(&h);
        assert_eq!(minimal.kept, vec![0, 1]);
        assert_eq!(minimal.removed.len(), 1);
    }

    #[test]
    fn duplicate_rows_collapse() {
        let h = HRep::new(2, vec![], vec![rv(&[1, 0]), rv(&[2, 0]), rv(&[0, 1])]);
        let minimal = minimal_facet_system(&h);
        assert_eq!(minimal.hrep.inequalities.len(), 2);
    }

    #[test]
    fn simplicial_cone_rays() {
        // The negative octant x, y, z ≤ 0 flipped: rays are the negative axes.
        let h = HRep::new(
            3,
            vec![],
            vec![rv(&[1, 0, 0]), rv(&[0, 1, 0]), rv(&[0, 0, 1])],
        );
        let v = extreme_rays_dd(&h).unwrap();
        assert_eq!(
            v.rays,
            vec![iv(&[-1, 0, 0]), iv(&[0, -1, 0]), iv(&[0, 0, -1])]
        );
        assert!(v.lineality.is_empty());
        assert!(vrep_satisfies(&h, &v));
    }

    #[test]
    fn square_cone_in_3d() {
        // x ± z ≤ 0 and y ± z ≤ 0: four extreme rays over the square.
        let h = HRep::new(
            3,
            vec![],
            vec![rv(&[1, 0, 1]), rv(&[1, 0, -1]), rv(&[0, 1, 1]), rv(&[0, 1, -1])],
        );
        let v = extreme_rays_dd(&h).unwrap();
        assert_eq!(v.rays.len(), 4);
        assert!(vrep_satisfies(&h, &v));
        // Round trip recovers the four facets.
        let back = facets_of_ray_cone(&v, &[]).unwrap();
        let mut got = back.canonical_rows();
        got.sort();
        let mut expect = h.canonical_rows();
        expect.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn non_pointed_cone_reports_lineality() {
        let h = HRep::new(2, vec![], vec![rv(&[1, 0])]);
        let v = extreme_rays_dd(&h).unwrap();
        assert!(v.rays.is_empty());
        assert_eq!(v.lineality.len(), 1);
        assert!(v.lineality[0][1] != BigInt::from(0));
    }

    #[test]
    fn equalities_are_respected() {
        // x + y = 0, x ≤ 0 in the plane: single ray (−1, 1).
        let h = HRep::new(2, vec![rv(&[1, 1])], vec![rv(&[1, 0])]);
        let v = extreme_rays_dd(&h).unwrap();
        assert_eq!(v.rays, vec![iv(&[-1, 1])]);
    }

    #[test]
    fn cone_equality_is_scaling_and_order_invariant() {
        let h1 = HRep::new(2, vec![], vec![rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])]);
        let h2 = HRep::new(2, vec![], vec![rv(&[0, 3]), rv(&[5, 0])]);
        assert!(cones_equal(&h1, &h2).unwrap());
        let h3 = HRep::new(2, vec![], vec![rv(&[0, 1]), rv(&[-1, 1])]);
        assert!(!cones_equal(&h1, &h3).unwrap());
        assert!(cones_equal(
            &h1,
            &HRep::new(3, vec![], vec![rv(&[1, 0, 0])])
        )
        .is_err());
    }

    #[test]
    fn certificates_recombine() {
        let h = HRep::new(
            3,
            vec![rv(&[0, 0, 1])],
            vec![rv(&[1, 0, 0]), rv(&[0, 1, 0]), rv(&[2, 3, 7])],
        );
        match farkas_redundant(&h, 2).unwrap() {
            Redundancy::Redundant {
                multipliers,
                equality_multipliers,
            } => {
                let mut combo = vec![Rat::zero(); 3];
                for (m, row) in multipliers.iter().zip(&h.inequalities) {
                    for (c, x) in combo.iter_mut().zip(row) {
                        let t = m * x;
                        *c = &*c + t;
                    }
                }
                for (m, row) in equality_multipliers.iter().zip(&h.equalities) {
                    for (c, x) in combo.iter_mut().zip(row) {
                        let t = m * x;
                        *c = &*c + t;
                    }
                }
                assert_eq!(combo, h.inequalities[2]);
            }
            _ => panic!("row 2 is redundant modulo the equality"),
        }
    }
}
