//! Embedded transcriptions of the published tables: coset lists, cycle
//! tables, Schubert polynomials mod I, multiplication tables, inequality
//! lists with redundancy markers, and the 51 generators of D₃(C₃).
//!
//! Fixture data is consulted only by the verification layer, never by the
//! computation paths in `triangle-cone-core`.

use std::collections::BTreeMap;

use triangle_cone_core::polyalg::Polynomial;
use triangle_cone_core::rootsys::Family;
use triangle_cone_core::{rat, ratio, Rat};

pub const WP_LISTS: &str = include_str!("../fixtures/wp_lists.txt");
pub const WEYL_TABLES: &str = include_str!("../fixtures/weyl_tables.txt");
pub const SCHUBERT_POLYNOMIALS: &str = include_str!("../fixtures/schubert_polynomials.txt");
pub const PRODUCT_TABLES: &str = include_str!("../fixtures/product_tables.txt");
pub const INEQUALITIES: &str = include_str!("../fixtures/inequalities.txt");
pub const RAYS_C3: &str = include_str!("../fixtures/rays_c3.txt");

pub type SectionKey = (Family, usize);

#[derive(Debug, Clone)]
pub struct WeylRow {
    pub word: String,
    pub length: usize,
    /// Singular weight in ambient coordinates.
    pub lambda: Vec<i64>,
    /// Bare decorated label of ε_w ("0" for the unit class).
    pub class: String,
    /// Bare decorated label of the Poincaré-dual class.
    pub pd: String,
}

#[derive(Debug, Clone)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    /// Sum of (coefficient, bare label); empty for the zero class.
    pub result: Vec<(i64, String)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Marker {
    None,
    /// (*): trivially redundant.
    Star,
    /// (**): redundant but not trivially so.
    DoubleStar,
}

#[derive(Debug, Clone)]
pub struct IneqRow {
    /// Decorated ordered partition, or "-" for unlabeled rows.
    pub label: String,
    pub marker: Marker,
    /// Covector in internal block-major order, `coeffs·(v₁,v₂,v₃) ≤ 0`.
    pub coeffs: Vec<Rat>,
}

/// All fixtures, parsed once.
pub struct Fixtures {
    pub wp_lists: BTreeMap<SectionKey, Vec<String>>,
    pub weyl_tables: BTreeMap<SectionKey, Vec<WeylRow>>,
    pub pw_tables: BTreeMap<SectionKey, Vec<(String, Polynomial)>>,
    pub product_tables: BTreeMap<SectionKey, Vec<ProductEntry>>,
    pub inequality_tables: BTreeMap<SectionKey, Vec<IneqRow>>,
    /// Generators in the serialization order x1 x2 x3 y1 y2 y3 z1 z2 z3.
    pub rays_c3: Vec<Vec<i64>>,
}

impl Fixtures {
    pub fn load() -> Self {
        Fixtures {
            wp_lists: parse_sections(WP_LISTS, |_, lines| {
                lines
                    .iter()
                    .flat_map(|l| l.split_whitespace())
                    .map(str::to_string)
                    .collect()
            }),
            weyl_tables: parse_sections(WEYL_TABLES, |_, lines| {
                lines.iter().map(|l| parse_weyl_row(l)).collect()
            }),
            pw_tables: parse_sections(SCHUBERT_POLYNOMIALS, |_, lines| {
                lines
                    .iter()
                    .map(|l| {
                        let (word, expr) = l.split_once(':').expect("word: expression");
                        (word.trim().to_string(), parse_polynomial(expr, 3))
                    })
                    .collect()
            }),
            product_tables: parse_sections(PRODUCT_TABLES, |_, lines| {
                lines.iter().map(|l| parse_product_entry(l)).collect()
            }),
            inequality_tables: parse_sections(INEQUALITIES, |key, lines| {
                let ambient = if key.0 == Family::A { 4 } else { 3 };
                lines.iter().map(|l| parse_ineq_row(l, ambient)).collect()
            }),
            rays_c3: RAYS_C3
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| {
                    l.split_whitespace()
                        .map(|t| t.parse().expect("integer ray entry"))
                        .collect()
                })
                .collect(),
        }
    }

    /// Strips the class letter: "a4''" → "4''", "b7" → "7", "1" → "0".
    pub fn bare_label(s: &str) -> String {
        if s == "1" {
            "0".to_string()
        } else {
            s.trim_start_matches(|c: char| c.is_ascii_alphabetic()).to_string()
        }
    }
}

fn parse_sections<T>(
    text: &str,
    mut parse: impl FnMut(SectionKey, &[String]) -> T,
) -> BTreeMap<SectionKey, T> {
    let mut out = BTreeMap::new();
    let mut current: Option<(SectionKey, Vec<String>)> = None;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some((header, rest)) = line
            .strip_prefix('[')
            .and_then(|l| l.split_once(']'))
        {
            if let Some((key, lines)) = current.take() {
                out.insert(key, parse(key, &lines));
            }
            let mut lines = Vec::new();
            if !rest.trim().is_empty() {
                lines.push(rest.trim().to_string());
            }
            current = Some((parse_section_key(header), lines));
        } else {
            current
                .as_mut()
                .expect("content before the first section header")
                .1
                .push(line.to_string());
        }
    }
    if let Some((key, lines)) = current.take() {
        out.insert(key, parse(key, &lines));
    }
    out
}

fn parse_section_key(header: &str) -> SectionKey {
    let mut parts = header.split_whitespace();
    let family = match parts.next().expect("family token") {
        "A3" => Family::A,
        "B3" => Family::B,
        "C3" => Family::C,
        other => panic!("unknown family {other:?}"),
    };
    let parabolic: usize = parts
        .next()
        .and_then(|p| p.strip_prefix('P'))
        .expect("parabolic token")
        .parse()
        .expect("parabolic index");
    (family, parabolic)
}

fn parse_weyl_row(line: &str) -> WeylRow {
    // word length (a, b, c) class pd
    let (head, rest) = line.split_once('(').expect("lambda vector");
    let (vec_text, tail) = rest.split_once(')').expect("closing parenthesis");
    let mut head_tokens = head.split_whitespace();
    let word = head_tokens.next().expect("word").to_string();
    let length = head_tokens.next().expect("length").parse().expect("length");
    let lambda: Vec<i64> = vec_text
        .split(',')
        .map(|t| t.trim().parse().expect("lambda entry"))
        .collect();
    let mut tail_tokens = tail.split_whitespace();
    let class = Fixtures::bare_label(tail_tokens.next().expect("class"));
    let pd = Fixtures::bare_label(tail_tokens.next().expect("pd class"));
    WeylRow {
        word,
        length,
        lambda,
        class,
        pd,
    }
}

fn parse_product_entry(line: &str) -> ProductEntry {
    let (lhs, rhs) = line.split_once('=').expect("lhs = rhs");
    let (left, right) = lhs.trim().split_once('*').expect("two factors");
    let rhs = rhs.trim();
    let mut result = Vec::new();
    if rhs != "0" {
        for term in rhs.split('+') {
            let term = term.trim();
            let mut tokens = term.split_whitespace();
            let first = tokens.next().expect("term");
            match tokens.next() {
                Some(label) => result.push((first.parse().expect("coefficient"), label.to_string())),
                None => result.push((1, first.to_string())),
            }
        }
    }
    ProductEntry {
        left: left.trim().to_string(),
        right: right.trim().to_string(),
        result,
    }
}

fn parse_ineq_row(line: &str, ambient: usize) -> IneqRow {
    let (head, body) = line.split_once(':').expect("label: inequality");
    let head = head.trim();
    let (label, marker) = if let Some(l) = head.strip_suffix("**") {
        (l.trim(), Marker::DoubleStar)
    } else if let Some(l) = head.strip_suffix('*') {
        (l.trim(), Marker::Star)
    } else {
        (head, Marker::None)
    };
    let (lhs, rhs) = body.split_once("<=").expect("LHS <= RHS");
    let mut coeffs = vec![rat(0); 3 * ambient];
    accumulate_linear(&mut coeffs, lhs, 1, ambient);
    accumulate_linear(&mut coeffs, rhs, -1, ambient);
    IneqRow {
        label: label.to_string(),
        marker,
        coeffs,
    }
}

/// Adds `sign` times a linear expression like "x1 + 2y3 - z2" or "0".
fn accumulate_linear(coeffs: &mut [Rat], text: &str, sign: i64, ambient: usize) {
    let compact: String = text.split_whitespace().collect();
    if compact == "0" || compact.is_empty() {
        return;
    }
    let mut term_sign = sign;
    let mut magnitude = String::new();
    let mut chars = compact.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '+' => term_sign = sign,
            '-' => term_sign = -sign,
            d if d.is_ascii_digit() => magnitude.push(d),
            v @ ('x' | 'y' | 'z' | 'w') => {
                let var = match v {
                    'x' => 0,
                    'y' => 1,
                    'z' => 2,
                    _ => 3,
                };
                assert!(var < ambient, "variable {v} out of range");
                let block: usize = chars
                    .next()
                    .and_then(|b| b.to_digit(10))
                    .map(|b| b as usize - 1)
                    .expect("block index after variable");
                let coeff: i64 = if magnitude.is_empty() {
                    1
                } else {
                    magnitude.parse().expect("coefficient")
                };
                magnitude.clear();
                let idx = block * ambient + var;
                coeffs[idx] = &coeffs[idx] + rat(term_sign * coeff);
            }
            other => panic!("unexpected character {other:?} in linear expression"),
        }
    }
    assert!(magnitude.is_empty(), "dangling coefficient");
}

/// Minimal expression parser for the fixture polynomials: rationals, the
/// variables x, y, z, parentheses, +, -, *, ^, the geometric sums g<n> and
/// the fixed symmetric cubic f.
pub fn parse_polynomial(text: &str, nvars: usize) -> Polynomial {
    let tokens: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut parser = ExprParser {
        tokens,
        pos: 0,
        nvars,
    };
    let poly = parser.expr();
    assert!(parser.pos == parser.tokens.len(), "trailing input in {text:?}");
    poly
}

struct ExprParser {
    tokens: Vec<char>,
    pos: usize,
    nvars: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).copied()
    }

    fn bump(&mut self) -> char {
        let c = self.tokens[self.pos];
        self.pos += 1;
        c
    }

    fn expr(&mut self) -> Polynomial {
        let mut acc = self.term();
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.bump();
            let rhs = self.term();
            acc = if op == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        acc
    }

    fn term(&mut self) -> Polynomial {
        let mut acc = self.factor();
        while self.peek() == Some('*') {
            self.bump();
            let rhs = self.factor();
            acc = acc.mul(&rhs);
        }
        acc
    }

    fn factor(&mut self) -> Polynomial {
        let base = self.base();
        if self.peek() == Some('^') {
            self.bump();
            let e = self.integer();
            base.pow(e as u32)
        } else {
            base
        }
    }

    fn base(&mut self) -> Polynomial {
        match self.peek().expect("unexpected end of expression") {
            '(' => {
                self.bump();
                let inner = self.expr();
                assert_eq!(self.bump(), ')', "unbalanced parentheses");
                inner
            }
            'g' => {
                self.bump();
                let n = self.integer();
                geometric_sum(self.nvars, n)
            }
            'f' => {
                self.bump();
                symmetric_cubic(self.nvars)
            }
            'x' => {
                self.bump();
                Polynomial::var(self.nvars, 0)
            }
            'y' => {
                self.bump();
                Polynomial::var(self.nvars, 1)
            }
            'z' => {
                self.bump();
                Polynomial::var(self.nvars, 2)
            }
            c if c.is_ascii_digit() => {
                let num = self.integer();
                if self.peek() == Some('/') {
                    self.bump();
                    let den = self.integer();
                    Polynomial::constant(self.nvars, ratio(num, den))
                } else {
                    Polynomial::constant(self.nvars, rat(num))
                }
            }
            other => panic!("unexpected character {other:?}"),
        }
    }

    fn integer(&mut self) -> i64 {
        let mut digits = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.bump());
        }
        digits.parse().expect("integer")
    }
}

/// g_n = Σ_{i=0..n} x^i y^(n−i).
fn geometric_sum(nvars: usize, n: i64) -> Polynomial {
    let x = Polynomial::var(nvars, 0);
    let y = Polynomial::var(nvars, 1);
    let mut acc = Polynomial::zero(nvars);
    for i in 0..=n {
        acc = acc.add(&x.pow(i as u32).mul(&y.pow((n - i) as u32)));
    }
    acc
}

/// f = x²y + xy² + x²z + xz² + y²z + yz².
fn symmetric_cubic(nvars: usize) -> Polynomial {
    let v = |i: usize| Polynomial::var(nvars, i);
    let mut acc = Polynomial::zero(nvars);
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        acc = acc.add(&v(a).pow(2).mul(&v(b)));
        acc = acc.add(&v(a).mul(&v(b).pow(2)));
    }
    acc
}
