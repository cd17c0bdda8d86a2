//! Linear functionals on 𝔞³ generated by point triples, the S₃
//! symmetrization, the chamber inequalities of Δ³, and certificates for
//! trivially redundant rows.
//!
//! Every inequality is stored block-major as `coeffs·(v₁,v₂,v₃) ≤ 0`: block
//! i applies the singular weight of the i-th intersected cycle to vᵢ. For A₃
//! covectors are compared modulo the per-block trace directions, by
//! projecting each block to its trace-zero part before clearing
//! denominators.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg;
use crate::rootsys::{Family, RootSystem};
use crate::schubert::{PointTriple, SchubertRing};
use crate::weyl::GENERATOR_LETTERS;
use crate::{Error, Rat, Result};

pub const NUM_BLOCKS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InequalityLabel {
    /// A chamber functional of Δ on one block: −⟨α_g, v_block⟩ ≤ 0.
    Chamber { block: usize, generator: u8 },
    /// A symmetrized Schubert inequality: `perm[i]` names the representative
    /// block placed at position i.
    Schubert {
        parabolic: usize,
        partition: String,
        perm: [usize; 3],
    },
}

impl std::fmt::Display for InequalityLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InequalityLabel::Chamber { block, generator } => {
                write!(
                    f,
                    "chamber v{} alpha_{}",
                    block + 1,
                    GENERATOR_LETTERS[*generator as usize]
                )
            }
            InequalityLabel::Schubert {
                parabolic,
                partition,
                perm,
            } => {
                write!(
                    f,
                    "P{} {} sigma={}{}{}",
                    parabolic,
                    partition,
                    perm[0] + 1,
                    perm[1] + 1,
                    perm[2] + 1
                )
            }
        }
    }
}

/// One row of the system, `coeffs · (v₁,v₂,v₃) ≤ 0`.
#[derive(Debug, Clone)]
pub struct Inequality {
    pub coeffs: Vec<Rat>,
    pub label: InequalityLabel,
    /// Homology triple the row came from, when it is a Schubert row.
    pub source_triple: Option<[usize; 3]>,
}

impl Inequality {
    pub fn block(&self, i: usize) -> &[Rat] {
        let dim = self.coeffs.len() / NUM_BLOCKS;
        &self.coeffs[i * dim..(i + 1) * dim]
    }
}

/// The assembled H-description of D₃ before redundancy removal.
#[derive(Debug, Clone)]
pub struct InequalitySystem {
    pub family: Family,
    pub ambient_dim: usize,
    pub dimension: usize,
    pub equalities: Vec<Vec<Rat>>,
    pub inequalities: Vec<Inequality>,
}

impl InequalitySystem {
    /// Number of Schubert rows attached to parabolic k.
    pub fn subsystem_len(&self, k: usize) -> usize {
        self.inequalities
            .iter()
            .filter(|i| matches!(i.label, InequalityLabel::Schubert { parabolic, .. } if parabolic == k))
            .count()
    }

    pub fn chamber_len(&self) -> usize {
        self.inequalities
            .iter()
            .filter(|i| matches!(i.label, InequalityLabel::Chamber { .. }))
            .count()
    }
}

/// Certificate that a row follows from the chamber inequalities alone.
#[derive(Debug, Clone)]
pub struct TrivialCertificate {
    /// Nonnegative multipliers over the 9 chamber rows (block-major order).
    pub chamber_multipliers: Vec<Rat>,
    /// Free multipliers over the A₃ trace equalities.
    pub equality_multipliers: Vec<Rat>,
}

/// w·ω_P in the integral weight normalization, as a covector on one block.
pub fn singular_weight(ring: &SchubertRing, k: usize, w: usize) -> Vec<Rat> {
    let rep = &ring.rs().weight_reps[k - 1];
    ring.weyl.elements[w].perm.apply(rep)
}

/// Builds the inequality of a point triple: block i is the singular weight
/// of the i-th homology element θ^P(vᵢ).
pub fn inequality_from_triple(ring: &SchubertRing, k: usize, t: &PointTriple) -> Inequality {
    let mut coeffs = Vec::with_capacity(NUM_BLOCKS * ring.rs().ambient_dim);
    for &w in &t.homology {
        coeffs.extend(singular_weight(ring, k, w));
    }
    Inequality {
        coeffs,
        label: InequalityLabel::Schubert {
            parabolic: k,
            partition: t.label.clone(),
            perm: [0, 1, 2],
        },
        source_triple: Some(t.homology),
    }
}

/// Canonical primitive integer form of a covector, compared modulo the
/// per-block trace directions for A₃.
pub fn canonical_covector(rs: &RootSystem, coeffs: &[Rat]) -> Vec<BigInt> {
    let dim = rs.ambient_dim;
    let projected: Vec<Rat> = match &rs.trace_constraint {
        None => coeffs.to_vec(),
        Some(trace) => {
            let mut out = Vec::with_capacity(coeffs.len());
            for b in 0..NUM_BLOCKS {
                let block = &coeffs[b * dim..(b + 1) * dim];
                out.extend(linalg::project_out(std::slice::from_ref(trace), block));
            }
            out
        }
    };
    linalg::primitive(&projected)
}

const BLOCK_PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Applies all six block permutations and drops duplicates (canonical
/// primitive form). Idempotent; the permutation used is recorded in the
/// label.
pub fn symmetrize(rs: &RootSystem, rows: &[Inequality]) -> Vec<Inequality> {
    let dim = rs.ambient_dim;
    let mut seen: Vec<Vec<BigInt>> = Vec::new();
    let mut out: Vec<Inequality> = Vec::new();
    for row in rows {
        for perm in BLOCK_PERMS {
            let mut coeffs = Vec::with_capacity(row.coeffs.len());
            for i in 0..NUM_BLOCKS {
                coeffs.extend_from_slice(&row.coeffs[perm[i] * dim..(perm[i] + 1) * dim]);
            }
            let canon = canonical_covector(rs, &coeffs);
            if seen.contains(&canon) {
                continue;
            }
            seen.push(canon);
            let label = match &row.label {
                InequalityLabel::Schubert {
                    parabolic,
                    partition,
                    perm: base,
                } => InequalityLabel::Schubert {
                    parabolic: *parabolic,
                    partition: partition.clone(),
                    perm: [base[perm[0]], base[perm[1]], base[perm[2]]],
                },
                other => other.clone(),
            };
            let source_triple = row
                .source_triple
                .map(|t| [t[perm[0]], t[perm[1]], t[perm[2]]]);
            out.push(Inequality {
                coeffs,
                label,
                source_triple,
            });
        }
    }
    out
}

/// The 9 chamber rows of Δ³ in the ≤ 0 convention: −⟨α_g, v_b⟩ ≤ 0.
pub fn chamber_system(rs: &RootSystem) -> Vec<Inequality> {
    let dim = rs.ambient_dim;
    let mut out = Vec::new();
    for block in 0..NUM_BLOCKS {
        for (g, alpha) in rs.chamber_functionals().iter().enumerate() {
            let mut coeffs = vec![Rat::zero(); NUM_BLOCKS * dim];
            for (j, a) in alpha.iter().enumerate() {
                coeffs[block * dim + j] = -a.clone();
            }
            out.push(Inequality {
                coeffs,
                label: InequalityLabel::Chamber {
                    block,
                    generator: g as u8,
                },
                source_triple: None,
            });
        }
    }
    out
}

/// Per-block trace equalities (A₃ only).
pub fn chamber_equalities(rs: &RootSystem) -> Vec<Vec<Rat>> {
    let dim = rs.ambient_dim;
    match &rs.trace_constraint {
        None => Vec::new(),
        Some(trace) => (0..NUM_BLOCKS)
            .map(|block| {
                let mut row = vec![Rat::zero(); NUM_BLOCKS * dim];
                for (j, t) in trace.iter().enumerate() {
                    row[block * dim + j] = t.clone();
                }
                row
            })
            .collect(),
    }
}

/// Decides whether a row follows from the chamber inequalities alone. The
/// chamber cone of Δ³ is simplicial (modulo the trace equalities for A₃), so
/// the multipliers solve a unique linear system; the row is trivially
/// redundant iff they are all nonnegative.
pub fn trivially_redundant(rs: &RootSystem, ineq: &Inequality) -> Option<TrivialCertificate> {
    let chamber = chamber_system(rs);
    let equalities = chamber_equalities(rs);
    let n = NUM_BLOCKS * rs.ambient_dim;
    let ncols = chamber.len() + equalities.len();
    // Columns: chamber rows then equality rows.
    let matrix: Vec<Vec<Rat>> = (0..n)
        .map(|coord| {
            chamber
                .iter()
                .map(|c| c.coeffs[coord].clone())
                .chain(equalities.iter().map(|e| e[coord].clone()))
                .collect()
        })
        .collect();
    debug_assert_eq!(linalg::rank(&matrix), ncols.min(n));
    let solution = linalg::solve(&matrix, &ineq.coeffs)?;
    let (mu, nu) = solution.split_at(chamber.len());
    if mu.iter().any(|m| m.is_negative()) {
        return None;
    }
    Some(TrivialCertificate {
        chamber_multipliers: mu.to_vec(),
        equality_multipliers: nu.to_vec(),
    })
}

/// Chamber rows plus the symmetrized Schubert subsystems of the three
/// maximal parabolics, in deterministic order.
pub fn assemble_full_system(ring: &SchubertRing) -> Result<InequalitySystem> {
    let rs = ring.rs();
    let mut inequalities = chamber_system(rs);
    for k in 1..=3 {
        let reps: Vec<Inequality> = ring
            .representative_triples(k)?
            .iter()
            .map(|t| inequality_from_triple(ring, k, t))
            .collect();
        inequalities.extend(symmetrize(rs, &reps));
    }
    let mut seen = std::collections::BTreeSet::new();
    for row in &inequalities {
        if !seen.insert(canonical_covector(rs, &row.coeffs)) {
            return Err(Error::Internal(format!(
                "duplicate row in the assembled system: {}",
                row.label
            )));
        }
    }
    Ok(InequalitySystem {
        family: rs.family,
        ambient_dim: rs.ambient_dim,
        dimension: NUM_BLOCKS * rs.ambient_dim,
        equalities: chamber_equalities(rs),
        inequalities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use crate::schubert::SchubertRing;

    fn ring(family: Family) -> SchubertRing {
        SchubertRing::new(family).unwrap()
    }

    fn rv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn find_representative<'a>(
        reps: &'a [crate::schubert::PointTriple],
        label: &str,
    ) -> &'a crate::schubert::PointTriple {
        reps.iter()
            .find(|t| t.label == label)
            .unwrap_or_else(|| panic!("no representative labeled {label}"))
    }

    #[test]
    fn singular_weight_examples() {
        let c = ring(Family::C);
        let sr = c.weyl.element_from_str("sr").unwrap();
        assert_eq!(singular_weight(&c, 1, sr), rv(&[0, 0, 1]));
        let tsrts = c.weyl.element_from_str("tsrts").unwrap();
        assert_eq!(singular_weight(&c, 2, tsrts), rv(&[0, -1, -1]));
        assert_eq!(singular_weight(&c, 3, 0), rv(&[1, 1, 1]));
    }

    #[test]
    fn worked_example_c3_p1() {
        let c = ring(Family::C);
        let reps = c.representative_triples(1).unwrap();
        let t = find_representative(&reps, "(3,2,0)");
        let ineq = inequality_from_triple(&c, 1, t);
        // z₁ − z₂ − x₃ ≤ 0.
        assert_eq!(ineq.coeffs, rv(&[0, 0, 1, 0, 0, -1, -1, 0, 0]));
    }

    #[test]
    fn worked_example_c3_p2() {
        let c = ring(Family::C);
        let reps = c.representative_triples(2).unwrap();
        let t = find_representative(&reps, "(4',2'',1)");
        let ineq = inequality_from_triple(&c, 2, t);
        // y₁ − z₁ − x₂ + z₂ − x₃ − z₃ ≤ 0.
        assert_eq!(ineq.coeffs, rv(&[0, 1, -1, -1, 0, 1, -1, 0, -1]));
    }

    #[test]
    fn a3_p1_subsystem_matches_published_rows() {
        let a = ring(Family::A);
        let rs = a.rs().clone();
        let reps: Vec<Inequality> = a
            .representative_triples(1)
            .unwrap()
            .iter()
            .map(|t| inequality_from_triple(&a, 1, t))
            .collect();
        assert_eq!(reps.len(), 3);
        let sub = symmetrize(&rs, &reps);
        assert_eq!(sub.len(), 10);
        // x₁ + w₂ + w₃, y₁ + z₂ + w₃ and z₁ + z₂ + z₃ all appear.
        let expect = [
            rv(&[1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1]),
            rv(&[0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
            rv(&[0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0]),
        ];
        let canon: Vec<_> = sub
            .iter()
            .map(|i| canonical_covector(&rs, &i.coeffs))
            .collect();
        for row in expect {
            assert!(canon.contains(&canonical_covector(&rs, &row)));
        }
    }

    #[test]
    fn symmetrized_subsystem_sizes() {
        let expect = [
            (Family::A, [10, 21, 10]),
            (Family::C, [21, 78, 27]),
            (Family::B, [18, 72, 36]),
        ];
        for (family, sizes) in expect {
            let r = ring(family);
            let rs = r.rs().clone();
            for k in 1..=3 {
                let reps: Vec<Inequality> = r
                    .representative_triples(k)
                    .unwrap()
                    .iter()
                    .map(|t| inequality_from_triple(&r, k, t))
                    .collect();
                let sub = symmetrize(&rs, &reps);
                assert_eq!(sub.len(), sizes[k - 1], "{family} P{k}");
                // Symmetrization is idempotent.
                assert_eq!(symmetrize(&rs, &sub).len(), sub.len(), "{family} P{k}");
            }
        }
    }

    #[test]
    fn chamber_rows_and_equalities() {
        for family in [Family::A, Family::B, Family::C] {
            let rs = RootSystem::new(family, 3).unwrap();
            let rows = chamber_system(&rs);
            assert_eq!(rows.len(), 9);
            let eqs = chamber_equalities(&rs);
            assert_eq!(eqs.len(), if family == Family::A { 3 } else { 0 });
        }
        // B₃ and C₃ chamber rows agree after primitive scaling.
        let b = RootSystem::new(Family::B, 3).unwrap();
        let c = RootSystem::new(Family::C, 3).unwrap();
        let canon = |rs: &RootSystem| -> Vec<Vec<num_bigint::BigInt>> {
            chamber_system(rs)
                .iter()
                .map(|r| canonical_covector(rs, &r.coeffs))
                .collect()
        };
        assert_eq!(canon(&b), canon(&c));
    }

    #[test]
    fn trivial_redundancy_certificates() {
        let c = ring(Family::C);
        let rs = c.rs().clone();
        let reps = c.representative_triples(1).unwrap();
        // (2,2,1): −z₁ − z₂ − y₃ ≤ 0 is implied by the chamber alone.
        let t = find_representative(&reps, "(2,2,1)");
        let ineq = inequality_from_triple(&c, 1, t);
        assert_eq!(ineq.coeffs, rv(&[0, 0, -1, 0, 0, -1, 0, -1, 0]));
        let cert = trivially_redundant(&rs, &ineq).expect("(2,2,1) is trivially redundant");
        // The certificate recombines exactly.
        let chamber = chamber_system(&rs);
        let mut combo = vec![Rat::zero(); 9];
        for (m, row) in cert.chamber_multipliers.iter().zip(&chamber) {
            assert!(!m.is_negative());
            for (o, x) in combo.iter_mut().zip(&row.coeffs) {
                let t = m * x;
                *o = &*o + t;
            }
        }
        assert_eq!(combo, ineq.coeffs);
        // (5,0,0): x₁ ≤ x₂ + x₃ is not.
        let t = find_representative(&reps, "(5,0,0)");
        let ineq = inequality_from_triple(&c, 1, t);
        assert!(trivially_redundant(&rs, &ineq).is_none());
    }

    #[test]
    fn trivially_redundant_counts() {
        for (family, expect) in [(Family::A, 0), (Family::B, 24), (Family::C, 24)] {
            let r = ring(family);
            let rs = r.rs().clone();
            let system = assemble_full_system(&r).unwrap();
            let count = system
                .inequalities
                .iter()
                .filter(|i| matches!(i.label, InequalityLabel::Schubert { .. }))
                .filter(|i| trivially_redundant(&rs, i).is_some())
                .count();
            assert_eq!(count, expect, "{family}");
        }
    }

    #[test]
    fn full_system_sizes() {
        for (family, total, per_parabolic) in [
            (Family::A, 50, [10, 21, 10]),
            (Family::C, 135, [21, 78, 27]),
            (Family::B, 135, [18, 72, 36]),
        ] {
            let r = ring(family);
            let system = assemble_full_system(&r).unwrap();
            assert_eq!(system.inequalities.len(), total, "{family}");
            assert_eq!(system.chamber_len(), 9);
            for k in 1..=3 {
                assert_eq!(system.subsystem_len(k), per_parabolic[k - 1], "{family} P{k}");
            }
        }
    }

    #[test]
    fn c3_p3_subsystem_has_the_simple_form() {
        // The 27 rows are exactly 2(x_i + y_j + z_k) − S ≤ 0.
        let c = ring(Family::C);
        let rs = c.rs().clone();
        let reps: Vec<Inequality> = c
            .representative_triples(3)
            .unwrap()
            .iter()
            .map(|t| inequality_from_triple(&c, 3, t))
            .collect();
        let sub = symmetrize(&rs, &reps);
        let mut got: Vec<Vec<num_bigint::BigInt>> = sub
            .iter()
            .map(|i| canonical_covector(&rs, &i.coeffs))
            .collect();
        got.sort();
        let mut expect = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let mut row = vec![rat(-1); 9];
                    row[3 * i] = &row[3 * i] + rat(2);
                    row[3 * j + 1] = &row[3 * j + 1] + rat(2);
                    row[3 * k + 2] = &row[3 * k + 2] + rat(2);
                    expect.push(canonical_covector(&rs, &row));
                }
            }
        }
        expect.sort();
        expect.dedup();
        assert_eq!(got, expect);
    }

    #[test]
    fn system_is_invariant_under_orientation_reversal() {
        // Reversal surrogate: (v₁,v₂,v₃) ↦ (−w₀v₂, −w₀v₁, −w₀v₃) permutes
        // the system (as canonical covectors).
        for family in [Family::A, Family::B, Family::C] {
            let r = ring(family);
            let rs = r.rs().clone();
            let system = assemble_full_system(&r).unwrap();
            let w0 = &r.weyl.elements[r.weyl.longest].perm;
            let minus_w0 = crate::weyl::SignedPerm(w0.0.iter().map(|e| -e).collect());
            let dim = rs.ambient_dim;
            let transform = |row: &Inequality| -> Vec<num_bigint::BigInt> {
                let blocks: Vec<&[Rat]> = (0..3).map(|i| row.block(i)).collect();
                let reordered = [blocks[1], blocks[0], blocks[2]];
                let mut out = Vec::with_capacity(3 * dim);
                for b in reordered {
                    // covector ∘ (−w₀): entry j becomes ±b[π(j)].
                    for j in 0..dim {
                        let (s, k) = minus_w0.image_of(j);
                        out.push(if s < 0 { -b[k].clone() } else { b[k].clone() });
                    }
                }
                canonical_covector(&rs, &out)
            };
            let mut original: Vec<_> = system
                .inequalities
                .iter()
                .map(|i| canonical_covector(&rs, &i.coeffs))
                .collect();
            let mut reversed: Vec<_> = system.inequalities.iter().map(transform).collect();
            original.sort();
            reversed.sort();
            assert_eq!(original, reversed, "{family}");
        }
    }

    #[test]
    fn schubert_rows_vanish_on_zero() {
        let c = ring(Family::C);
        let system = assemble_full_system(&c).unwrap();
        for row in &system.inequalities {
            let zero = vec![Rat::zero(); system.dimension];
            assert!(linalg::dot(&row.coeffs, &zero).is_zero());
        }
    }
}
