//! Schubert classes in the Borel model.
//!
//! The class dual to the Schubert cycle of w is realized by the polynomial
//! p_w = A_{w⁻¹w₀}(p_{w₀}); expanding a homogeneous polynomial q of degree d
//! in the Schubert basis amounts to reading off the constants A_w(q) over
//! the length-d elements. Products in H*(G/P) are computed along this single
//! polynomial route; the Chevalley rule is kept as an independent oracle for
//! degree-1 products.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linalg;
use crate::polyalg::{DividedDifference, Homogeneity, Polynomial};
use crate::rootsys::{Family, RootSystem};
use crate::weyl::{ParabolicData, WeylGroup};
use crate::{Error, Rat, Result};

/// Decorated basis label: degree plus prime marks, e.g. 4″ = (4, 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassLabel {
    pub degree: usize,
    pub primes: u8,
}

impl ClassLabel {
    /// Rendering used inside partition labels: "0", "3", "4''".
    pub fn part(&self) -> String {
        format!("{}{}", self.degree, "'".repeat(self.primes as usize))
    }

    /// Rendering used for basis classes: "1" for the unit, else "a4''".
    pub fn class_name(&self, letter: char) -> String {
        if self.degree == 0 {
            "1".to_string()
        } else {
            format!("{letter}{}", self.part())
        }
    }
}

/// Finitely supported rational combination of Schubert classes of one grade.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    pub grade: usize,
    /// Element id → coefficient; all supporting elements have length = grade.
    pub coeffs: BTreeMap<usize, Rat>,
}

impl CohomologyClass {
    pub fn zero(grade: usize) -> Self {
        CohomologyClass {
            grade,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: usize) -> Rat {
        self.coeffs.get(&w).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn insert(&mut self, w: usize, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(w).or_insert_with(Rat::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }
}

/// One ordered triple of classes whose cup product is the point class.
#[derive(Debug, Clone)]
pub struct PointTriple {
    /// (v₁, v₂, v₃) ∈ (W^P)³ with Σℓ(vᵢ) = N_P and ε·ε·ε = ε_top.
    pub cohomology: [usize; 3],
    /// θ^P of the cohomology triple; indexes the intersected cycles.
    pub homology: [usize; 3],
    /// Structure constant of the top class (exactly 1 for point triples).
    pub coefficient: Rat,
    /// Decorated ordered partition such as "(4',2'',1)".
    pub label: String,
}

/// A maximal parabolic together with the decorated labels of its basis.
#[derive(Debug, Clone)]
pub struct Parabolic {
    /// 1-based index: P_k omits the k-th simple generator.
    pub index: usize,
    pub data: ParabolicData,
    pub labels: BTreeMap<usize, ClassLabel>,
    /// Representatives in decorated order (unit first).
    pub ordered: Vec<usize>,
}

impl Parabolic {
    pub fn label(&self, w: usize) -> ClassLabel {
        self.labels[&w]
    }

    pub fn triple_label(&self, triple: &[usize; 3]) -> String {
        format!(
            "({},{},{})",
            self.label(triple[0]).part(),
            self.label(triple[1]).part(),
            self.label(triple[2]).part()
        )
    }
}

/// Words of the basis elements carrying prime decorations, per parabolic.
/// The assignment follows the published tables for types B and C; primes do
/// not always follow lexicographic order (length 4 and 5 in P₂ are swapped).
const PINNED_PRIMES: [&[(&str, u8)]; 3] = [
    &[],
    &[
        ("rs", 1),
        ("ts", 2),
        ("rts", 1),
        ("sts", 2),
        ("srts", 1),
        ("rsts", 2),
        ("tsrts", 1),
        ("rstrs", 2),
    ],
    &[("rst", 1), ("tst", 2)],
];

/// Schubert calculus for one root system: all p_w plus the three maximal
/// parabolics with their decorated labels.
pub struct SchubertRing {
    pub weyl: WeylGroup,
    dd: DividedDifference,
    pw: Vec<Polynomial>,
    parabolics: Vec<Parabolic>,
}

impl SchubertRing {
    pub fn new(family: Family) -> Result<Self> {
        let rs = RootSystem::new(family, 3)?;
        let weyl = WeylGroup::new(rs);
        let dd = DividedDifference::new(&weyl.rs);
        let top = crate::polyalg::top_polynomial(&weyl.rs);
        let pw: Vec<Polynomial> = (0..weyl.order())
            .map(|w| {
                let v = weyl.mul(weyl.inverse(w), weyl.longest);
                dd.apply_element(&weyl, v, &top)
            })
            .collect();
        let parabolics = (1..=3)
            .map(|k| {
                let data = weyl.maximal_parabolic(k)?;
                Ok(build_parabolic(&weyl, family, k, data))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SchubertRing {
            weyl,
            dd,
            pw,
            parabolics,
        })
    }

    pub fn rs(&self) -> &RootSystem {
        &self.weyl.rs
    }

    pub fn family(&self) -> Family {
        self.rs().family
    }

    /// Letter used for basis classes in rendered tables.
    pub fn class_letter(&self) -> char {
        match self.family() {
            Family::B => 'b',
            Family::A | Family::C => 'a',
        }
    }

    pub fn divided(&self) -> &DividedDifference {
        &self.dd
    }

    pub fn parabolic(&self, k: usize) -> &Parabolic {
        &self.parabolics[k - 1]
    }

    /// p_w = A_{w⁻¹w₀}(p_{w₀}), homogeneous of degree ℓ(w).
    pub fn schubert_polynomial(&self, w: usize) -> &Polynomial {
        &self.pw[w]
    }

    /// Expands a homogeneous polynomial in the Schubert basis of its degree.
    pub fn expand_in_basis(&self, q: &Polynomial) -> Result<CohomologyClass> {
        let degree = match q.homogeneity() {
            Homogeneity::Zero => return Ok(CohomologyClass::zero(0)),
            Homogeneity::Degree(d) => d,
            Homogeneity::Mixed => {
                return Err(Error::Input(
                    "cannot expand an inhomogeneous polynomial".into(),
                ))
            }
        };
        let mut class = CohomologyClass::zero(degree);
        for w in 0..self.weyl.order() {
            if self.weyl.length(w) != degree {
                continue;
            }
            let c = self.dd.apply_element(&self.weyl, w, q).as_constant()?;
            class.insert(w, c);
        }
        Ok(class)
    }

    /// Cup product ε_u · ε_v in H*(G/P_k); support is checked to stay in W^P.
    pub fn multiply_classes(&self, k: usize, u: usize, v: usize) -> Result<CohomologyClass> {
        let p = self.parabolic(k);
        for &w in &[u, v] {
            if !p.data.contains_rep(w) {
                return Err(Error::Domain(format!(
                    "{} is not a basis element of H*(G/P{})",
                    self.weyl.elements[w].word_string(),
                    k
                )));
            }
        }
        let q = self.pw[u].mul(&self.pw[v]);
        let class = self.expand_in_basis(&q)?;
        for w in class.support() {
            if !p.data.contains_rep(w) {
                return Err(Error::Internal(format!(
                    "product support escaped W^P{}: {}",
                    k,
                    self.weyl.elements[w].word_string()
                )));
            }
        }
        Ok(class)
    }

    /// Chevalley rule: ε_{s_i} · ε_w = Σ ⟨wω_i, β^∨⟩ ε_{s_β w} over positive
    /// roots β with ℓ(s_β w) = ℓ(w) + 1. Serves as an independent oracle for
    /// degree-1 products.
    pub fn chevalley_multiply(&self, i: usize, w: usize) -> CohomologyClass {
        let rs = self.rs();
        let omega = rs.fundamental_weights[i].clone();
        let w_perm = &self.weyl.elements[w].perm;
        let w_omega = w_perm.apply(&omega);
        let mut class = CohomologyClass::zero(self.weyl.length(w) + 1);
        for beta in &rs.positive_roots {
            let refl = crate::weyl::root_reflection_perm(rs, beta);
            let v = self.weyl.lookup(&refl.compose(w_perm));
            if self.weyl.length(v) != self.weyl.length(w) + 1 {
                continue;
            }
            let c = linalg::dot(&w_omega, &RootSystem::coroot(beta));
            class.insert(v, c);
        }
        class
    }

    /// Structure constant of the top class in ε_{v₁}·ε_{v₂}·ε_{v₃} on G/P_k.
    pub fn triple_coefficient(&self, k: usize, triple: [usize; 3]) -> Result<Rat> {
        let p = self.parabolic(k);
        let np = p.data.codim_total;
        let total: usize = triple.iter().map(|&v| self.weyl.length(v)).sum();
        if total != np {
            return Ok(Rat::zero());
        }
        let q = self.pw[triple[0]]
            .mul(&self.pw[triple[1]])
            .mul(&self.pw[triple[2]]);
        self.dd
            .apply_element(&self.weyl, p.data.longest_rep, &q)
            .as_constant()
    }

    /// All ordered triples (v₁,v₂,v₃) ∈ (W^P)³ whose product is the point
    /// class, with homology triples attached via θ^P.
    pub fn point_triples(&self, k: usize) -> Result<Vec<PointTriple>> {
        let p = self.parabolic(k).clone();
        let np = p.data.codim_total;
        let mut out = Vec::new();
        for &v1 in &p.data.reps {
            let l1 = self.weyl.length(v1);
            if l1 > np {
                continue;
            }
            for &v2 in &p.data.reps {
                let l2 = self.weyl.length(v2);
                if l1 + l2 > np {
                    continue;
                }
                for &v3 in &p.data.reps {
                    if l1 + l2 + self.weyl.length(v3) != np {
                        continue;
                    }
                    let triple = [v1, v2, v3];
                    let c = self.triple_coefficient(k, triple)?;
                    if c.is_one() {
                        let homology = [
                            self.weyl.theta_dual(&p.data, v1)?,
                            self.weyl.theta_dual(&p.data, v2)?,
                            self.weyl.theta_dual(&p.data, v3)?,
                        ];
                        out.push(PointTriple {
                            cohomology: triple,
                            homology,
                            coefficient: c,
                            label: p.triple_label(&triple),
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    /// The point triples whose decorated parts are non-increasing, largest
    /// label tuple first; their S₃ orbits recover the full list.
    pub fn representative_triples(&self, k: usize) -> Result<Vec<PointTriple>> {
        let p = self.parabolic(k);
        let mut reps: Vec<PointTriple> = self
            .point_triples(k)?
            .into_iter()
            .filter(|t| {
                let l: Vec<ClassLabel> = t.cohomology.iter().map(|&v| p.label(v)).collect();
                l[0] >= l[1] && l[1] >= l[2]
            })
            .collect();
        reps.sort_by_key(|t| {
            let l: Vec<ClassLabel> = t.cohomology.iter().map(|&v| p.label(v)).collect();
            std::cmp::Reverse(l)
        });
        Ok(reps)
    }

    /// Full multiplication table over the non-unit basis classes of G/P_k in
    /// decorated order.
    pub fn multiplication_table(&self, k: usize) -> Result<MultiplicationTable> {
        let p = self.parabolic(k);
        let basis: Vec<usize> = p.ordered.iter().copied().filter(|&w| w != 0).collect();
        let mut products = Vec::new();
        for (i, &u) in basis.iter().enumerate() {
            let mut row = Vec::new();
            for &v in basis.iter().skip(i) {
                row.push(self.multiply_classes(k, u, v)?);
            }
            products.push(row);
        }
        Ok(MultiplicationTable {
            parabolic: k,
            basis,
            products,
        })
    }

    /// Renders a class as a sum of decorated basis names, e.g. "2a4' + a4''".
    pub fn render_class(&self, k: usize, class: &CohomologyClass) -> String {
        let p = self.parabolic(k);
        if class.is_zero() {
            return "0".to_string();
        }
        let letter = self.class_letter();
        let mut parts: Vec<(ClassLabel, Rat)> = class
            .coeffs
            .iter()
            .map(|(&w, c)| (p.label(w), c.clone()))
            .collect();
        parts.sort_by_key(|p| p.0);
        parts
            .iter()
            .map(|(label, c)| {
                if c.is_one() {
                    label.class_name(letter)
                } else {
                    format!("{c}{}", label.class_name(letter))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Upper-triangular table of pairwise products of non-unit basis classes.
pub struct MultiplicationTable {
    pub parabolic: usize,
    /// Non-unit basis elements in decorated order.
    pub basis: Vec<usize>,
    /// products[i][j] = basis[i] · basis[i + j].
    pub products: Vec<Vec<CohomologyClass>>,
}

impl MultiplicationTable {
    pub fn entry(&self, i: usize, j: usize) -> &CohomologyClass {
        if i <= j {
            &self.products[i][j - i]
        } else {
            &self.products[j][i - j]
        }
    }

    pub fn num_entries(&self) -> usize {
        self.products.iter().map(|r| r.len()).sum()
    }
}

fn build_parabolic(
    weyl: &WeylGroup,
    family: Family,
    k: usize,
    data: ParabolicData,
) -> Parabolic {
    let mut labels = BTreeMap::new();
    match family {
        Family::B | Family::C => {
            // The pinned words need not be the stored reduced words, so they
            // are resolved through the group before keying.
            let pinned: BTreeMap<usize, u8> = PINNED_PRIMES[k - 1]
                .iter()
                .map(|&(word, primes)| {
                    let elem = weyl
                        .element_from_str(word)
                        .expect("pinned decoration words are valid");
                    (elem, primes)
                })
                .collect();
            for &w in &data.reps {
                let primes = pinned.get(&w).copied().unwrap_or(0);
                labels.insert(
                    w,
                    ClassLabel {
                        degree: weyl.length(w),
                        primes,
                    },
                );
            }
        }
        Family::A => {
            // No published decoration for A₃: primes follow the
            // (length, stored word) order of the representatives.
            let mut by_length: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &w in &data.reps {
                by_length.entry(weyl.length(w)).or_default().push(w);
            }
            for (degree, mut group) in by_length {
                group.sort_by_key(|&w| weyl.elements[w].word.clone());
                let many = group.len() > 1;
                for (pos, w) in group.into_iter().enumerate() {
                    labels.insert(
                        w,
                        ClassLabel {
                            degree,
                            primes: if many { pos as u8 + 1 } else { 0 },
                        },
                    );
                }
            }
        }
    }
    let mut ordered: Vec<usize> = data.reps.clone();
    ordered.sort_by_key(|w| labels[w]);
    Parabolic {
        index: k,
        data,
        labels,
        ordered,
    }
}
