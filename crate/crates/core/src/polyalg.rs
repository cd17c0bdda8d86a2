//! Sparse multivariate polynomials over exact rationals, the Weyl group
//! action, divided-difference operators A_{s_i}(f) = (f − s_i f)/α_i, and an
//! ideal-membership oracle for the ideal I generated by the W-invariant
//! polynomials with zero constant term.
//!
//! The membership oracle is deliberately independent of the divided
//! difference machinery: the degree-d slice of I is spanned by products of
//! fundamental invariants with complementary monomials, and membership is
//! decided by exact Gaussian elimination.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::rootsys::{Family, RootSystem};
use crate::weyl::{SignedPerm, WeylGroup};
use crate::{rat, Error, Rat, Result};

/// Exponent vector with graded lexicographic order, x > y > z (> w).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u8>);

impl Monomial {
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in canonical form: no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(usize),
    Mixed,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::from_term(Monomial(exps), Rat::one())
    }

    pub fn from_term(m: Monomial, c: Rat) -> Self {
        let nvars = m.0.len();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The linear form Σ cᵢ xᵢ.
    pub fn linear(coeffs: &[Rat]) -> Self {
        let nvars = coeffs.len();
        let mut p = Self::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut exps = vec![0; nvars];
                exps[i] = 1;
                p.terms.insert(Monomial(exps), c.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::Mixed
                }
            }
        }
    }

    /// The constant term viewed as a rational; errors for nonconstant input.
    pub fn as_constant(&self) -> Result<Rat> {
        match self.homogeneity() {
            Homogeneity::Zero => Ok(Rat::zero()),
            Homogeneity::Degree(0) => Ok(self.terms.values().next().unwrap().clone()),
            _ => Err(Error::Internal("polynomial is not constant".into())),
        }
    }

    fn insert_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Leading term in graded lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Action of a signed permutation: x_j ↦ ±x_{π(j)}, extended as a ring
    /// automorphism.
    pub fn acted_by(&self, w: &SignedPerm) -> Polynomial {
        assert_eq!(w.dim(), self.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u8; self.nvars];
            let mut sign = 1i64;
            for (j, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (s, k) = w.image_of(j);
                exps[k] += e;
                if s < 0 && e % 2 == 1 {
                    sign = -sign;
                }
            }
            out.insert_term(Monomial(exps), if sign < 0 { -c } else { c.clone() });
        }
        out
    }

    /// Exact division by a linear form; errors when the remainder is
    /// nonzero.
    pub fn divide_by_linear(&self, form: &Polynomial) -> Result<Polynomial> {
        let (lead_m, lead_c) = form
            .leading()
            .ok_or_else(|| Error::Internal("division by zero form".into()))?;
        assert_eq!(lead_m.degree(), 1, "divisor must be a linear form");
        let lead_var = lead_m.0.iter().position(|&e| e == 1).unwrap();
        let lead_c = lead_c.clone();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rem.leading() {
            if m.0[lead_var] == 0 {
                return Err(Error::Internal(
                    "nonzero remainder in division by a linear form".into(),
                ));
            }
            let mut qm = m.clone();
            qm.0[lead_var] -= 1;
            let qc = c / &lead_c;
            let qterm = Polynomial::from_term(qm, qc);
            rem = rem.sub(&qterm.mul(form));
            quot = quot.add(&qterm);
        }
        Ok(quot)
    }

    /// Renders the polynomial with variables x, y, z, w in graded-lex order,
    /// largest term first.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        const NAMES: [char; 4] = ['x', 'y', 'z', 'w'];
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let mut body = String::new();
            for (j, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    body.push(NAMES[j]);
                } else if e > 1 {
                    body.push_str(&format!("{}^{}", NAMES[j], e));
                }
            }
            let lead_one = c.abs().is_one() && !body.is_empty();
            let mag = if lead_one {
                String::new()
            } else {
                format!("{}", c.abs())
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&mag);
            if !mag.is_empty() && !body.is_empty() {
                out.push('*');
            }
            out.push_str(&body);
        }
        out
    }
}

/// Applies a Weyl element (as signed permutation) to a polynomial.
pub fn weyl_act(w: &SignedPerm, f: &Polynomial) -> Polynomial {
    f.acted_by(w)
}

/// Divided-difference operators attached to a root system.
#[derive(Debug, Clone)]
pub struct DividedDifference {
    forms: Vec<Polynomial>,
    perms: Vec<SignedPerm>,
}

impl DividedDifference {
    pub fn new(rs: &RootSystem) -> Self {
        let forms = rs
            .simple_roots
            .iter()
            .map(|alpha| Polynomial::linear(alpha))
            .collect();
        let perms = (0..rs.rank)
            .map(|i| crate::weyl::reflection_perm(rs, i))
            .collect();
        DividedDifference { forms, perms }
    }

    /// A_{s_i}(f) = (f − s_i f) / α_i.
    pub fn apply(&self, i: usize, f: &Polynomial) -> Polynomial {
        let diff = f.sub(&f.acted_by(&self.perms[i]));
        if diff.is_zero() {
            return Polynomial::zero(f.nvars());
        }
        diff.divide_by_linear(&self.forms[i])
            .expect("f − s_i f is divisible by α_i")
    }

    /// A_w along an explicit word: A_{s_1} ∘ ⋯ ∘ A_{s_k}, so the last letter
    /// acts first. The word is not checked here.
    pub fn apply_word(&self, word: &[u8], f: &Polynomial) -> Polynomial {
        let mut out = f.clone();
        for &g in word.iter().rev() {
            if out.is_zero() {
                break;
            }
            out = self.apply(g as usize, &out);
        }
        out
    }

    /// A_w for a group element, along its stored reduced word.
    pub fn apply_element(&self, weyl: &WeylGroup, w: usize, f: &Polynomial) -> Polynomial {
        self.apply_word(&weyl.elements[w].word, f)
    }

    /// A_w along a caller-supplied word, rejecting non-reduced words.
    pub fn apply_reduced_word(
        &self,
        weyl: &WeylGroup,
        word: &[u8],
        f: &Polynomial,
    ) -> Result<Polynomial> {
        let elem = weyl.canonicalize_word(word);
        if weyl.length(elem) != word.len() {
            return Err(Error::Input(format!(
                "word {:?} is not reduced",
                crate::weyl::word_string(word)
            )));
        }
        Ok(self.apply_word(word, f))
    }
}

/// p_{w₀} = (∏_{β ∈ Π} β) / |W|, homogeneous of degree ℓ(w₀).
pub fn top_polynomial(rs: &RootSystem) -> Polynomial {
    let product = rs
        .positive_roots
        .iter()
        .fold(Polynomial::one(rs.ambient_dim), |acc, beta| {
            acc.mul(&Polynomial::linear(beta))
        });
    product.scale(&(Rat::one() / rat(rs.weyl_order() as i64)))
}

/// Fundamental W-invariants generating the ideal I: elementary symmetric
/// polynomials in x², y², z² for B₃/C₃ and e₁, …, e₄ in x, y, z, w for A₃
/// (the trace e₁ accounts for the ambient fourth coordinate).
pub fn fundamental_invariants(rs: &RootSystem) -> Vec<Polynomial> {
    let n = rs.ambient_dim;
    let units: Vec<Polynomial> = match rs.family {
        Family::A => (0..n).map(|i| Polynomial::var(n, i)).collect(),
        Family::B | Family::C => (0..n)
            .map(|i| Polynomial::var(n, i).mul(&Polynomial::var(n, i)))
            .collect(),
    };
    elementary_symmetric(&units, n)
}

fn elementary_symmetric(units: &[Polynomial], nvars: usize) -> Vec<Polynomial> {
    let k = units.len();
    // e[j] after processing a prefix of the units.
    let mut e: Vec<Polynomial> = (0..=k)
        .map(|j| {
            if j == 0 {
                Polynomial::one(nvars)
            } else {
                Polynomial::zero(nvars)
            }
        })
        .collect();
    for u in units {
        for j in (1..=k).rev() {
            let bump = e[j - 1].mul(u);
            e[j] = e[j].add(&bump);
        }
    }
    e.remove(0);
    e
}

struct EchelonRow {
    pivot: usize,
    vec: Vec<Rat>,
    comp: Vec<Rat>,
}

struct Slice {
    monomials: Vec<Monomial>,
    positions: BTreeMap<Monomial, usize>,
    rows: Vec<EchelonRow>,
    complement: Vec<Monomial>,
}

/// Degree-graded bases of the invariant ideal I together with greedy
/// monomial complements spanning S(V)/I.
pub struct QuotientBasis {
    nvars: usize,
    max_degree: usize,
    slices: Vec<Slice>,
}

impl QuotientBasis {
    pub fn new(rs: &RootSystem, max_degree: usize) -> Self {
        let invariants = fundamental_invariants(rs);
        Self::from_invariants(rs.ambient_dim, &invariants, max_degree)
    }

    pub fn from_invariants(nvars: usize, invariants: &[Polynomial], max_degree: usize) -> Self {
        let slices = (0..=max_degree)
            .map(|d| build_slice(nvars, invariants, d))
            .collect();
        QuotientBasis {
            nvars,
            max_degree,
            slices,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn complement_dim(&self, degree: usize) -> usize {
        self.slices[degree].complement.len()
    }

    pub fn complement_monomials(&self, degree: usize) -> &[Monomial] {
        &self.slices[degree].complement
    }

    /// Coordinates of f's class in the complement basis of its degree.
    pub fn reduce(&self, f: &Polynomial) -> Result<Vec<Rat>> {
        assert_eq!(f.nvars(), self.nvars);
        let degree = match f.homogeneity() {
            Homogeneity::Zero => return Ok(Vec::new()),
            Homogeneity::Degree(d) => d,
            Homogeneity::Mixed => {
                return Err(Error::Input("inhomogeneous polynomial".into()));
            }
        };
        if degree > self.max_degree {
            return Err(Error::Input(format!(
                "degree {degree} exceeds the table bound {}",
                self.max_degree
            )));
        }
        let slice = &self.slices[degree];
        let mut dense = vec![Rat::zero(); slice.monomials.len()];
        for (m, c) in f.terms() {
            dense[slice.positions[m]] = c.clone();
        }
        let mut comp = vec![Rat::zero(); slice.complement.len()];
        for row in &slice.rows {
            if dense[row.pivot].is_zero() {
                continue;
            }
            let factor = &dense[row.pivot] / &row.vec[row.pivot];
            for (d, v) in dense.iter_mut().zip(&row.vec) {
                let t = &factor * v;
                *d = &*d - t;
            }
            for (j, v) in row.comp.iter().enumerate() {
                let t = &factor * v;
                comp[j] = &comp[j] + t;
            }
        }
        if dense.iter().any(|x| !x.is_zero()) {
            return Err(Error::Internal(
                "ideal slice plus complement failed to span".into(),
            ));
        }
        Ok(comp)
    }

    /// Membership verdict plus normal-form coordinates: f ∈ I iff the
    /// coordinates vanish.
    pub fn membership(&self, f: &Polynomial) -> Result<(bool, Vec<Rat>)> {
        let comp = self.reduce(f)?;
        let member = comp.iter().all(|c| c.is_zero());
        Ok((member, comp))
    }

    /// Whether two homogeneous polynomials of the same degree agree mod I.
    pub fn congruent(&self, f: &Polynomial, g: &Polynomial) -> Result<bool> {
        let (member, _) = self.membership(&f.sub(g))?;
        Ok(member)
    }

    /// Normal form of f as a polynomial supported on complement monomials.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let degree = match f.homogeneity() {
            Homogeneity::Zero => return Ok(Polynomial::zero(self.nvars)),
            Homogeneity::Degree(d) => d,
            Homogeneity::Mixed => return Err(Error::Input("inhomogeneous polynomial".into())),
        };
        let comp = self.reduce(f)?;
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in self.slices[degree].complement.iter().zip(comp) {
            out = out.add(&Polynomial::from_term(m.clone(), c));
        }
        Ok(out)
    }
}

/// All monomials of the given total degree, largest first in graded-lex.
pub fn monomials_of_degree(nvars: usize, degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u8; nvars];
    fill_monomials(&mut out, &mut current, 0, degree);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn fill_monomials(out: &mut Vec<Monomial>, current: &mut Vec<u8>, var: usize, remaining: usize) {
    if var + 1 == current.len() {
        current[var] = remaining as u8;
        out.push(Monomial(current.clone()));
        current[var] = 0;
        return;
    }
    for e in 0..=remaining {
        current[var] = e as u8;
        fill_monomials(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

fn build_slice(nvars: usize, invariants: &[Polynomial], degree: usize) -> Slice {
    let monomials = monomials_of_degree(nvars, degree);
    let positions: BTreeMap<Monomial, usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let mut slice = Slice {
        monomials,
        positions,
        rows: Vec::new(),
        complement: Vec::new(),
    };
    // Span of the degree-d component of I: g · m over fundamental
    // invariants g and monomials m of complementary degree.
    for g in invariants {
        let gdeg = match g.homogeneity() {
            Homogeneity::Degree(d) => d,
            _ => unreachable!("invariants are homogeneous and nonzero"),
        };
        if gdeg > degree {
            continue;
        }
        for m in monomials_of_degree(nvars, degree - gdeg) {
            let prod = g.mul(&Polynomial::from_term(m, Rat::one()));
            let mut dense = vec![Rat::zero(); slice.monomials.len()];
            for (mm, c) in prod.terms() {
                dense[slice.positions[mm]] = c.clone();
            }
            insert_row(&mut slice, dense, Vec::new());
        }
    }
    // Greedy complement: first monomials (in the fixed order) independent of
    // the ideal slice and the previously chosen ones.
    for idx in 0..slice.monomials.len() {
        let mut dense = vec![Rat::zero(); slice.monomials.len()];
        dense[idx] = Rat::one();
        let mut comp = vec![Rat::zero(); slice.complement.len() + 1];
        *comp.last_mut().unwrap() = Rat::one();
        if insert_row(&mut slice, dense, comp) {
            let m = slice.monomials[idx].clone();
            slice.complement.push(m);
        }
    }
    slice
}

fn reduce_against_rows(slice: &Slice, dense: &mut [Rat], comp: &mut Vec<Rat>) {
    for row in &slice.rows {
        if dense[row.pivot].is_zero() {
            continue;
        }
        let f = &dense[row.pivot] / &row.vec[row.pivot];
        for (d, v) in dense.iter_mut().zip(&row.vec) {
            let t = &f * v;
            *d = &*d - t;
        }
        for (j, v) in row.comp.iter().enumerate() {
            if comp.len() <= j {
                comp.resize(j + 1, Rat::zero());
            }
            let t = &f * v;
            comp[j] = &comp[j] - t;
        }
    }
}

fn insert_row(slice: &mut Slice, mut dense: Vec<Rat>, mut comp: Vec<Rat>) -> bool {
    reduce_against_rows(slice, &mut dense, &mut comp);
    match dense.iter().position(|x| !x.is_zero()) {
        Some(pivot) => {
            slice.rows.push(EchelonRow {
                pivot,
                vec: dense,
                comp,
            });
            // Reduction scans rows in increasing pivot order; a row only
            // touches columns at or after its own pivot.
            slice.rows.sort_by_key(|r| r.pivot);
            true
        }
        None => false,
    }
}
