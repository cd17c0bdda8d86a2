//! Weyl group enumeration, reduced words, parabolic quotients W^P and the
//! Poincaré-duality involution θ^P(w) = w₀ w w_{0,P}.
//!
//! Elements are stored as signed permutations of the ambient basis (plain
//! permutations for A₃); equality is equality of the signed permutation,
//! never of words. The reduced word kept for each element is the first one
//! found by breadth-first search with generator order r < s < t, which is
//! the lexicographically smallest reduced word.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use crate::rootsys::RootSystem;
use crate::{Error, Rat, Result};

/// Signed permutation: entry j holds ±(k+1) meaning w(e_j) = ±e_k.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm(pub Vec<i16>);

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm((1..=n as i16).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Image of the basis vector e_j as (sign, index).
    pub fn image_of(&self, j: usize) -> (i64, usize) {
        let e = self.0[j];
        (e.signum() as i64, (e.unsigned_abs() as usize) - 1)
    }

    /// Function composition self ∘ other.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm(
            (0..self.dim())
                .map(|j| {
                    let (s1, k) = other.image_of(j);
                    let (s2, m) = self.image_of(k);
                    (s1 * s2) as i16 * (m as i16 + 1)
                })
                .collect(),
        )
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut out = vec![0i16; self.dim()];
        for j in 0..self.dim() {
            let (s, k) = self.image_of(j);
            out[k] = s as i16 * (j as i16 + 1);
        }
        SignedPerm(out)
    }

    /// Applies the linear map to a coordinate vector.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.dim());
        let mut out = vec![Rat::zero(); v.len()];
        for j in 0..v.len() {
            let (s, k) = self.image_of(j);
            out[k] = if s < 0 { -v[j].clone() } else { v[j].clone() };
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, &e)| e == j as i16 + 1)
    }

    pub fn is_negative_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, &e)| e == -(j as i16 + 1))
    }
}

pub const GENERATOR_LETTERS: [char; 3] = ['r', 's', 't'];

/// Renders a generator word such as `[0, 2, 1]` as "rts"; the empty word is
/// rendered "e".
pub fn word_string(word: &[u8]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|&g| GENERATOR_LETTERS[g as usize]).collect()
    }
}

/// Parses a word in the letters r, s, t ("e" or "" for the identity).
pub fn parse_word(s: &str) -> Result<Vec<u8>> {
    if s == "e" {
        return Ok(Vec::new());
    }
    s.chars()
        .map(|c| match c {
            'r' => Ok(0),
            's' => Ok(1),
            't' => Ok(2),
            _ => Err(Error::Input(format!("unknown generator letter {c:?}"))),
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct WeylElement {
    pub perm: SignedPerm,
    /// Lexicographically smallest reduced word (letters 0, 1, 2 for r, s, t).
    pub word: Vec<u8>,
    pub length: usize,
}

impl WeylElement {
    pub fn word_string(&self) -> String {
        word_string(&self.word)
    }
}

/// The full Weyl group of a rank-3 root system.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub rs: RootSystem,
    /// All elements, ordered by (length, stored word).
    pub elements: Vec<WeylElement>,
    /// Index of the longest element w₀.
    pub longest: usize,
    generators: Vec<SignedPerm>,
    index: HashMap<SignedPerm, usize>,
}

impl WeylGroup {
    /// Breadth-first closure from the identity under right multiplication.
    pub fn new(rs: RootSystem) -> Self {
        let dim = rs.ambient_dim;
        let generators: Vec<SignedPerm> = (0..rs.rank)
            .map(|i| reflection_perm(&rs, i))
            .collect();
        let mut elements = vec![WeylElement {
            perm: SignedPerm::identity(dim),
            word: Vec::new(),
            length: 0,
        }];
        let mut index = HashMap::new();
        index.insert(elements[0].perm.clone(), 0usize);
        let mut head = 0;
        while head < elements.len() {
            let (perm, word, length) = {
                let e = &elements[head];
                (e.perm.clone(), e.word.clone(), e.length)
            };
            for (g, gen) in generators.iter().enumerate() {
                let next = perm.compose(gen);
                if !index.contains_key(&next) {
                    let mut w = word.clone();
                    w.push(g as u8);
                    index.insert(next.clone(), elements.len());
                    elements.push(WeylElement {
                        perm: next,
                        word: w,
                        length: length + 1,
                    });
                }
            }
            head += 1;
        }
        let longest = elements
            .iter()
            .enumerate()
            .max_by_key(|(_, e)| e.length)
            .map(|(i, _)| i)
            .expect("group is nonempty");
        WeylGroup {
            rs,
            elements,
            longest,
            generators,
            index,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn lookup(&self, perm: &SignedPerm) -> usize {
        *self.index.get(perm).expect("permutation belongs to the group")
    }

    pub fn length(&self, w: usize) -> usize {
        self.elements[w].length
    }

    /// Group product a·b.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.lookup(&self.elements[a].perm.compose(&self.elements[b].perm))
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.lookup(&self.elements[a].perm.inverse())
    }

    /// Right multiplication by a generator.
    pub fn mul_gen(&self, a: usize, g: u8) -> usize {
        self.lookup(&self.elements[a].perm.compose(&self.generators[g as usize]))
    }

    /// Multiplies out an arbitrary (not necessarily reduced) word.
    pub fn canonicalize_word(&self, word: &[u8]) -> usize {
        word.iter().fold(self.identity(), |acc, &g| self.mul_gen(acc, g))
    }

    /// Looks up the element for a word written in the letters r, s, t.
    pub fn element_from_str(&self, s: &str) -> Result<usize> {
        Ok(self.canonicalize_word(&parse_word(s)?))
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, w: usize) -> usize {
        let perm = &self.elements[w].perm;
        self.rs
            .positive_roots
            .iter()
            .filter(|beta| {
                let img = perm.apply(beta);
                !self.rs.positive_roots.contains(&img)
            })
            .count()
    }

    /// Generators g with ℓ(w·s_g) < ℓ(w).
    pub fn right_descents(&self, w: usize) -> Vec<u8> {
        (0..self.rs.rank as u8)
            .filter(|&g| self.length(self.mul_gen(w, g)) < self.length(w))
            .collect()
    }

    /// Every reduced word of w, by recursion over right descents.
    pub fn all_reduced_words(&self, w: usize) -> Vec<Vec<u8>> {
        if self.length(w) == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for g in self.right_descents(w) {
            let shorter = self.mul_gen(w, g);
            for mut word in self.all_reduced_words(shorter) {
                word.push(g);
                out.push(word);
            }
        }
        out
    }

    /// Count of the letter g in the stored reduced word. For g = t in types
    /// B and C this count is the same for every reduced word of w.
    pub fn generator_multiplicity(&self, w: usize, g: u8) -> usize {
        self.elements[w].word.iter().filter(|&&x| x == g).count()
    }

    /// Minimal-length coset representatives for W/W_P with S_P = `gens`.
    pub fn minimal_coset_reps(&self, gens: &[u8]) -> ParabolicData {
        let reps: Vec<usize> = (0..self.order())
            .filter(|&w| {
                gens.iter()
                    .all(|&g| self.length(self.mul_gen(w, g)) == self.length(w) + 1)
            })
            .collect();
        // W_P: closure of the identity under the chosen generators.
        let mut members = vec![self.identity()];
        let mut head = 0;
        while head < members.len() {
            let w = members[head];
            for &g in gens {
                let next = self.mul_gen(w, g);
                if !members.contains(&next) {
                    members.push(next);
                }
            }
            head += 1;
        }
        let longest_in_parabolic = members
            .iter()
            .copied()
            .max_by_key(|&w| self.length(w))
            .expect("parabolic subgroup contains the identity");
        let longest_rep = reps
            .iter()
            .copied()
            .max_by_key(|&w| self.length(w))
            .expect("coset representatives are nonempty");
        let codim_total = self.length(self.longest) - self.length(longest_in_parabolic);
        debug_assert_eq!(reps.len() * members.len(), self.order());
        ParabolicData {
            gens: gens.to_vec(),
            reps,
            subgroup: members,
            longest_in_parabolic,
            longest_rep,
            codim_total,
        }
    }

    /// The maximal parabolic P_k (k = 1, 2, 3) obtained by omitting the
    /// k-th simple generator.
    pub fn maximal_parabolic(&self, k: usize) -> Result<ParabolicData> {
        if !(1..=self.rs.rank).contains(&k) {
            return Err(Error::Input(format!("parabolic index {k} out of range")));
        }
        let gens: Vec<u8> = (0..self.rs.rank as u8).filter(|&g| g != k as u8 - 1).collect();
        Ok(self.minimal_coset_reps(&gens))
    }

    /// θ^P(w) = w₀ w w_{0,P}; defined for w ∈ W^P and an involution there.
    pub fn theta_dual(&self, p: &ParabolicData, w: usize) -> Result<usize> {
        if !p.reps.contains(&w) {
            return Err(Error::Domain(format!(
                "{} is not a minimal coset representative",
                self.elements[w].word_string()
            )));
        }
        let out = self.mul(self.mul(self.longest, w), p.longest_in_parabolic);
        debug_assert!(p.reps.contains(&out));
        Ok(out)
    }
}

/// Coset data for a parabolic subgroup W_P.
#[derive(Debug, Clone)]
pub struct ParabolicData {
    /// Generator subset S_P (indices into r, s, t).
    pub gens: Vec<u8>,
    /// W^P, ordered by (length, stored word).
    pub reps: Vec<usize>,
    /// All elements of W_P.
    pub subgroup: Vec<usize>,
    /// w_{0,P}, the longest element of W_P.
    pub longest_in_parabolic: usize,
    /// w₀^P, the longest minimal representative.
    pub longest_rep: usize,
    /// N_P = ℓ(w₀) − ℓ(w_{0,P}).
    pub codim_total: usize,
}

impl ParabolicData {
    pub fn contains_rep(&self, w: usize) -> bool {
        self.reps.contains(&w)
    }
}

/// Expresses a simple reflection as a signed permutation of the basis.
pub fn reflection_perm(rs: &RootSystem, i: usize) -> SignedPerm {
    root_reflection_perm(rs, &rs.simple_roots[i])
}

/// Expresses the reflection in an arbitrary root as a signed permutation.
pub fn root_reflection_perm(rs: &RootSystem, beta: &[Rat]) -> SignedPerm {
    let dim = rs.ambient_dim;
    let entries = (0..dim)
        .map(|j| {
            let mut e = vec![Rat::zero(); dim];
            e[j] = crate::rat(1);
            let img = RootSystem::reflect_root(beta, &e);
            let mut entry = 0i16;
            for (k, x) in img.iter().enumerate() {
                if !x.is_zero() {
                    assert!(entry == 0 && x.abs() == crate::rat(1), "not a signed permutation");
                    entry = if x.is_negative() { -(k as i16 + 1) } else { k as i16 + 1 };
                }
            }
            assert!(entry != 0);
            entry
        })
        .collect();
    SignedPerm(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn group(fam: Family) -> WeylGroup {
        WeylGroup::new(RootSystem::new(fam, 3).unwrap())
    }

    #[test]
    fn group_orders_and_longest() {
        let wa = group(Family::A);
        assert_eq!(wa.order(), 24);
        assert_eq!(wa.length(wa.longest), 6);
        for fam in [Family::B, Family::C] {
            let w = group(fam);
            assert_eq!(w.order(), 48);
            assert_eq!(w.length(w.longest), 9);
            assert!(w.elements[w.longest].perm.is_negative_identity());
            // w₀ is the unique element of maximal length.
            assert_eq!(
                w.elements.iter().filter(|e| e.length == 9).count(),
                1
            );
        }
    }

    #[test]
    fn bfs_depth_equals_inversion_count() {
        for fam in [Family::A, Family::B, Family::C] {
            let w = group(fam);
            for id in 0..w.order() {
                assert_eq!(w.length(id), w.inversions(id), "{fam} #{id}");
            }
        }
    }

    #[test]
    fn sign_changes_in_c3() {
        let w = group(Family::C);
        // rstsr, sts and t change the sign of one coordinate each.
        for (word, coord) in [("rstsr", 0usize), ("sts", 1), ("t", 2)] {
            let id = w.element_from_str(word).unwrap();
            let perm = &w.elements[id].perm;
            for j in 0..3 {
                let expect = if j == coord { -(j as i16 + 1) } else { j as i16 + 1 };
                assert_eq!(perm.0[j], expect, "{word} at {j}");
            }
        }
        // A product of the three sign changes is w₀, in any order.
        let w0 = w.element_from_str("rstsrstst").unwrap();
        assert_eq!(w0, w.longest);
        // (rst)^3 = w₀ and rr = e.
        assert_eq!(w.element_from_str("rstrstrst").unwrap(), w.longest);
        assert_eq!(w.element_from_str("rr").unwrap(), w.identity());
    }

    #[test]
    fn c3_coset_representatives() {
        let w = group(Family::C);
        let expect: [(usize, &[&str], usize); 3] = [
            (1, &["e", "r", "sr", "tsr", "stsr", "rstsr"], 5),
            (
                2,
                &[
                    "e", "s", "rs", "ts", "rts", "sts", "srts", "rsts", "tsrts", "rstrs",
                    "rtsrts", "srtsrts",
                ],
                7,
            ),
            (3, &["e", "t", "st", "rst", "tst", "trst", "strst", "tstrst"], 6),
        ];
        for (k, words, np) in expect {
            let p = w.maximal_parabolic(k).unwrap();
            assert_eq!(p.codim_total, np, "N_P for P{k}");
            let mut got: Vec<usize> = p.reps.clone();
            got.sort_unstable();
            let mut want: Vec<usize> =
                words.iter().map(|s| w.element_from_str(s).unwrap()).collect();
            want.sort_unstable();
            assert_eq!(got, want, "W^P for P{k}");
        }
    }

    #[test]
    fn lengths_add_over_parabolic_factorizations() {
        for fam in [Family::A, Family::B, Family::C] {
            let w = group(fam);
            for k in 1..=3 {
                let p = w.maximal_parabolic(k).unwrap();
                for &rep in &p.reps {
                    for &v in &p.subgroup {
                        assert_eq!(
                            w.length(w.mul(rep, v)),
                            w.length(rep) + w.length(v),
                            "{fam} P{k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn theta_is_a_length_complementing_involution() {
        for fam in [Family::A, Family::B, Family::C] {
            let w = group(fam);
            for k in 1..=3 {
                let p = w.maximal_parabolic(k).unwrap();
                for &rep in &p.reps {
                    let d = w.theta_dual(&p, rep).unwrap();
                    assert!(p.contains_rep(d));
                    assert_eq!(w.length(d) + w.length(rep), p.codim_total);
                    assert_eq!(w.theta_dual(&p, d).unwrap(), rep);
                }
                assert_eq!(w.theta_dual(&p, w.identity()).unwrap(), p.longest_rep);
            }
        }
    }

    #[test]
    fn theta_examples_in_c3() {
        let w = group(Family::C);
        let p1 = w.maximal_parabolic(1).unwrap();
        let sr = w.element_from_str("sr").unwrap();
        assert_eq!(w.theta_dual(&p1, sr).unwrap(), w.element_from_str("tsr").unwrap());
        let p2 = w.maximal_parabolic(2).unwrap();
        let rts = w.element_from_str("rts").unwrap();
        assert_eq!(w.theta_dual(&p2, rts).unwrap(), w.element_from_str("srts").unwrap());
        // Elements outside W^P are rejected.
        let s = w.element_from_str("s").unwrap();
        assert!(w.theta_dual(&p1, s).is_err());
    }

    #[test]
    fn t_count_is_word_independent_in_b_and_c() {
        for fam in [Family::B, Family::C] {
            let w = group(fam);
            for id in 0..w.order() {
                let count = w.generator_multiplicity(id, 2);
                for word in w.all_reduced_words(id) {
                    assert_eq!(
                        word.iter().filter(|&&g| g == 2).count(),
                        count,
                        "{fam} element {}",
                        w.elements[id].word_string()
                    );
                }
            }
        }
    }

    #[test]
    fn t_count_examples() {
        let w = group(Family::C);
        let tsrts = w.element_from_str("tsrts").unwrap();
        assert_eq!(w.generator_multiplicity(tsrts, 2), 2);
        assert_eq!(w.generator_multiplicity(w.longest, 2), 3);
        assert_eq!(w.generator_multiplicity(w.identity(), 0), 0);
    }

    #[test]
    fn stored_words_are_reduced_and_lex_minimal() {
        for fam in [Family::A, Family::B, Family::C] {
            let w = group(fam);
            for id in 0..w.order() {
                let e = &w.elements[id];
                assert_eq!(e.word.len(), e.length);
                assert_eq!(w.canonicalize_word(&e.word), id);
                let min = w.all_reduced_words(id).into_iter().min().unwrap();
                assert_eq!(e.word, min);
            }
        }
    }
}
