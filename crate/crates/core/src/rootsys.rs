//! Rank-3 root systems A₃, B₃, C₃ in ambient orthogonal coordinates.
//!
//! A₃ lives in ℝ⁴ with the trace constraint x+y+z+w = 0; B₃ and C₃ live in
//! ℝ³. The generator order r, s, t follows the Dynkin diagram left to right,
//! so t is the short simple root for B₃ and the long one for C₃.

use num_traits::{One, Signed, Zero};

use crate::linalg;
use crate::{rat, Error, Rat, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}3", self.letter())
    }
}

/// Cartan data of a rank-3 root system, immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    pub ambient_dim: usize,
    pub simple_roots: Vec<Vec<Rat>>,
    pub positive_roots: Vec<Vec<Rat>>,
    /// Exact fundamental weights: ⟨ω_i, α_j^∨⟩ = δ_ij (trace-zero for A₃).
    pub fundamental_weights: Vec<Vec<Rat>>,
    /// Integral representatives of the fundamental weights used for
    /// inequality coefficients: they differ from the exact weights by a
    /// positive scaling (B₃: 2ω₃) or a multiple of the trace direction (A₃).
    pub weight_reps: Vec<Vec<Rat>>,
    /// Equality functional cutting out 𝔞 inside the ambient space (A₃ only).
    pub trace_constraint: Option<Vec<Rat>>,
}

fn ivec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x)).collect()
}

impl RootSystem {
    /// Builds the root system for `family` in standard coordinates.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank != 3 {
            return Err(Error::Config(format!(
                "unsupported rank {rank}; only rank 3 is implemented"
            )));
        }
        let (ambient_dim, simple_roots, weight_reps, trace_constraint) = match family {
            Family::A => (
                4,
                vec![
                    ivec(&[1, -1, 0, 0]),
                    ivec(&[0, 1, -1, 0]),
                    ivec(&[0, 0, 1, -1]),
                ],
                vec![
                    ivec(&[1, 0, 0, 0]),
                    ivec(&[1, 1, 0, 0]),
                    ivec(&[1, 1, 1, 0]),
                ],
                Some(ivec(&[1, 1, 1, 1])),
            ),
            Family::B => (
                3,
                vec![ivec(&[1, -1, 0]), ivec(&[0, 1, -1]), ivec(&[0, 0, 1])],
                vec![ivec(&[1, 0, 0]), ivec(&[1, 1, 0]), ivec(&[1, 1, 1])],
                None,
            ),
            Family::C => (
                3,
                vec![ivec(&[1, -1, 0]), ivec(&[0, 1, -1]), ivec(&[0, 0, 2])],
                vec![ivec(&[1, 0, 0]), ivec(&[1, 1, 0]), ivec(&[1, 1, 1])],
                None,
            ),
        };
        let positive_roots = positive_root_closure(&simple_roots, ambient_dim);
        let fundamental_weights =
            exact_fundamental_weights(&simple_roots, trace_constraint.as_deref(), ambient_dim);
        Ok(RootSystem {
            family,
            rank,
            ambient_dim,
            simple_roots,
            positive_roots,
            fundamental_weights,
            weight_reps,
            trace_constraint,
        })
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> usize {
        match self.family {
            Family::A => 24,
            Family::B | Family::C => 48,
        }
    }

    /// Coroot β^∨ = 2β / ⟨β, β⟩.
    pub fn coroot(beta: &[Rat]) -> Vec<Rat> {
        let norm: Rat = beta.iter().map(|x| x * x).sum();
        beta.iter().map(|x| rat(2) * x / &norm).collect()
    }

    /// Reflection s_β(v) = v − ⟨v, β^∨⟩ β for an arbitrary root β.
    pub fn reflect_root(beta: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let c = linalg::dot(v, &Self::coroot(beta));
        v.iter()
            .zip(beta)
            .map(|(x, b)| x - &(&c * b))
            .collect()
    }

    /// Reflection in the i-th simple root (i = 0, 1, 2 for r, s, t).
    pub fn reflect(&self, i: usize, v: &[Rat]) -> Result<Vec<Rat>> {
        if i >= self.rank {
            return Err(Error::Input(format!("generator index {i} out of range")));
        }
        if v.len() != self.ambient_dim {
            return Err(Error::Input(format!(
                "vector has {} entries, ambient dimension is {}",
                v.len(),
                self.ambient_dim
            )));
        }
        Ok(Self::reflect_root(&self.simple_roots[i], v))
    }

    /// The simple-root functionals whose nonnegativity cuts out the Weyl
    /// chamber Δ. For A₃ the trace equality is exposed separately via
    /// [`RootSystem::trace_constraint`].
    pub fn chamber_functionals(&self) -> Vec<Vec<Rat>> {
        self.simple_roots.clone()
    }

    /// Cartan matrix entry ⟨α_i, α_j^∨⟩.
    pub fn cartan_entry(&self, i: usize, j: usize) -> Rat {
        linalg::dot(&self.simple_roots[i], &Self::coroot(&self.simple_roots[j]))
    }

    /// Tests whether `beta` is a nonnegative integer combination of the
    /// simple roots.
    pub fn is_positive_root_combination(&self, beta: &[Rat]) -> bool {
        let cols: Vec<Vec<Rat>> = (0..self.ambient_dim)
            .map(|row| (0..self.rank).map(|j| self.simple_roots[j][row].clone()).collect())
            .collect();
        match linalg::solve(&cols, beta) {
            Some(coeffs) => coeffs.iter().all(|c| c.is_integer() && !c.is_negative()),
            None => false,
        }
    }
}

/// Closure of the simple roots under simple reflections, restricted to the
/// positive half.
fn positive_root_closure(simple: &[Vec<Rat>], dim: usize) -> Vec<Vec<Rat>> {
    let mut all: Vec<Vec<Rat>> = simple.to_vec();
    let mut i = 0;
    while i < all.len() {
        let current = all[i].clone();
        for s in simple {
            let img = RootSystem::reflect_root(s, &current);
            if !all.contains(&img) {
                all.push(img);
            }
        }
        i += 1;
    }
    // A root is positive iff its expansion over the simple roots is
    // nonnegative; equivalently the first nonzero coefficient is positive.
    let cols: Vec<Vec<Rat>> = (0..dim)
        .map(|row| (0..simple.len()).map(|j| simple[j][row].clone()).collect())
        .collect();
    let mut positive: Vec<Vec<Rat>> = all
        .into_iter()
        .filter(|beta| {
            let coeffs = linalg::solve(&cols, beta).expect("root lies in the simple-root span");
            coeffs.iter().all(|c| !c.is_negative())
        })
        .collect();
    positive.sort();
    positive
}

/// Solves ⟨ω_i, α_j^∨⟩ = δ_ij with ω_i in the span of the simple roots.
fn exact_fundamental_weights(
    simple: &[Vec<Rat>],
    _trace: Option<&[Rat]>,
    dim: usize,
) -> Vec<Vec<Rat>> {
    let l = simple.len();
    // ω_i = Σ_k c_k α_k with Σ_k c_k ⟨α_k, α_j^∨⟩ = δ_ij.
    let cartan: Vec<Vec<Rat>> = (0..l)
        .map(|k| {
            (0..l)
                .map(|j| linalg::dot(&simple[k], &RootSystem::coroot(&simple[j])))
                .collect()
        })
        .collect();
    // Solve the transposed system for each i.
    let cartan_t: Vec<Vec<Rat>> = (0..l)
        .map(|j| (0..l).map(|k| cartan[k][j].clone()).collect())
        .collect();
    (0..l)
        .map(|i| {
            let mut rhs = vec![Rat::zero(); l];
            rhs[i] = Rat::one();
            let coeffs = linalg::solve(&cartan_t, &rhs).expect("Cartan matrix is invertible");
            let mut w = vec![Rat::zero(); dim];
            for (c, alpha) in coeffs.iter().zip(simple) {
                for (we, ae) in w.iter_mut().zip(alpha) {
                    let t = c * ae;
                    *we = &*we + t;
                }
            }
            w
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    #[test]
    fn families_build() {
        for fam in [Family::A, Family::B, Family::C] {
            let rs = RootSystem::new(fam, 3).unwrap();
            let expected = if fam == Family::A { 6 } else { 9 };
            assert_eq!(rs.positive_roots.len(), expected, "{fam}");
            for beta in &rs.positive_roots {
                assert!(rs.is_positive_root_combination(beta), "{fam}: {beta:?}");
            }
        }
        assert!(RootSystem::new(Family::A, 4).is_err());
    }

    #[test]
    fn c3_simple_roots_are_standard() {
        let rs = RootSystem::new(Family::C, 3).unwrap();
        assert_eq!(rs.simple_roots[0], ivec(&[1, -1, 0]));
        assert_eq!(rs.simple_roots[1], ivec(&[0, 1, -1]));
        assert_eq!(rs.simple_roots[2], ivec(&[0, 0, 2]));
    }

    #[test]
    fn b3_positive_roots_contain_basis_vectors() {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        for v in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, -1]] {
            assert!(rs.positive_roots.contains(&ivec(&v)), "{v:?}");
        }
    }

    #[test]
    fn cartan_matrices() {
        // Rows i, columns j: ⟨α_i, α_j^∨⟩.
        let expect_a = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]];
        let expect_b = [[2, -1, 0], [-1, 2, -2], [0, -1, 2]];
        let expect_c = [[2, -1, 0], [-1, 2, -1], [0, -2, 2]];
        for (fam, expect) in [
            (Family::A, expect_a),
            (Family::B, expect_b),
            (Family::C, expect_c),
        ] {
            let rs = RootSystem::new(fam, 3).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(rs.cartan_entry(i, j), rat(expect[i][j]), "{fam} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn weights_pair_delta_with_coroots() {
        for fam in [Family::A, Family::B, Family::C] {
            let rs = RootSystem::new(fam, 3).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    let p = linalg::dot(
                        &rs.fundamental_weights[i],
                        &RootSystem::coroot(&rs.simple_roots[j]),
                    );
                    assert_eq!(p, rat((i == j) as i64), "{fam} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn b3_third_weight_is_half_ones() {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        assert_eq!(
            rs.fundamental_weights[2],
            vec![ratio(1, 2), ratio(1, 2), ratio(1, 2)]
        );
        assert_eq!(rs.weight_reps[2], ivec(&[1, 1, 1]));
    }

    #[test]
    fn reflections_act_as_expected() {
        let rs = RootSystem::new(Family::C, 3).unwrap();
        let v = vec![rat(1), rat(2), rat(3)];
        // t negates the last coordinate, r swaps the first two.
        assert_eq!(rs.reflect(2, &v).unwrap(), ivec(&[1, 2, -3]));
        assert_eq!(rs.reflect(0, &v).unwrap(), ivec(&[2, 1, 3]));
        for i in 0..3 {
            let twice = rs.reflect(i, &rs.reflect(i, &v).unwrap()).unwrap();
            assert_eq!(twice, v);
        }
        assert!(rs.reflect(0, &[rat(1)]).is_err());
    }

    #[test]
    fn simple_reflections_permute_roots() {
        for fam in [Family::A, Family::B, Family::C] {
            let rs = RootSystem::new(fam, 3).unwrap();
            for i in 0..3 {
                for beta in &rs.positive_roots {
                    let img = rs.reflect(i, beta).unwrap();
                    let neg: Vec<Rat> = img.iter().map(|x| -x).collect();
                    assert!(
                        rs.positive_roots.contains(&img) || rs.positive_roots.contains(&neg),
                        "{fam}: s_{i} does not preserve Π ∪ -Π"
                    );
                }
            }
        }
    }

    #[test]
    fn chamber_functionals_match_family() {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        assert_eq!(
            rs.chamber_functionals(),
            vec![ivec(&[1, -1, 0]), ivec(&[0, 1, -1]), ivec(&[0, 0, 1])]
        );
        let rs = RootSystem::new(Family::A, 3).unwrap();
        assert_eq!(rs.trace_constraint, Some(ivec(&[1, 1, 1, 1])));
    }
}
