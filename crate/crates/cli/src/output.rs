//! Serialization of systems, facets and rays: PORTA-inspired `.ieq`/`.poi`
//! text, JSON, and human-readable text tables.
//!
//! All serialized covectors and rays use the coordinate-major variable
//! order x1 x2 x3 y1 y2 y3 z1 z2 z3 (w1 w2 w3 appended for A₃); internal
//! storage is block-major (v₁, v₂, v₃).

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use triangle_cone_core::cone::{FacetResult, VRep};
use triangle_cone_core::inequality::{InequalityLabel, InequalitySystem};
use triangle_cone_core::Rat;

pub const VAR_NAMES: [char; 4] = ['x', 'y', 'z', 'w'];

/// Block-major → coordinate-major reorder (x1 x2 x3 y1 y2 y3 …).
pub fn coordinate_major<T: Clone>(ambient: usize, covec: &[T]) -> Vec<T> {
    assert_eq!(covec.len(), 3 * ambient);
    let mut out = Vec::with_capacity(covec.len());
    for coord in 0..ambient {
        for block in 0..3 {
            out.push(covec[block * ambient + coord].clone());
        }
    }
    out
}

/// Name of the block-major coordinate `i`, e.g. "y2".
pub fn var_name(ambient: usize, i: usize) -> String {
    let block = i / ambient;
    let coord = i % ambient;
    format!("{}{}", VAR_NAMES[coord], block + 1)
}

fn rat_token(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn row_tokens(ambient: usize, row: &[Rat]) -> String {
    // Rows are scaled to primitive integer form; positive scaling does not
    // change the constraint.
    let primitive = triangle_cone_core::linalg::primitive(row);
    coordinate_major(ambient, &primitive)
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// `.ieq` text: DIM header, then EQUALITIES and INEQUALITIES sections with
/// one primitive integer row per line, meaning row·x = 0 and row·x ≤ 0.
pub fn ieq_text(title: &str, ambient: usize, equalities: &[Vec<Rat>], rows: &[Vec<Rat>]) -> String {
    let mut out = String::new();
    out.push_str(&format!("# {title}\n"));
    out.push_str(&format!("DIM {}\n", 3 * ambient));
    out.push_str("EQUALITIES\n");
    for e in equalities {
        out.push_str(&row_tokens(ambient, e));
        out.push('\n');
    }
    out.push_str("INEQUALITIES\n");
    for r in rows {
        out.push_str(&row_tokens(ambient, r));
        out.push('\n');
    }
    out
}

/// `.poi` text: DIM header plus one primitive integer ray per line.
pub fn poi_text(title: &str, ambient: usize, rays: &[Vec<BigInt>]) -> String {
    let mut out = String::new();
    out.push_str(&format!("# {title}\n"));
    out.push_str(&format!("DIM {}\n", 3 * ambient));
    for ray in rays {
        let line = coordinate_major(ambient, ray)
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Pretty "LHS <= RHS" rendering of a ≤ 0 row, in block-major term order.
pub fn pretty_inequality(ambient: usize, coeffs: &[Rat]) -> String {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let term = if mag.is_one() {
            var_name(ambient, i)
        } else {
            format!("{}{}", rat_token(&mag), var_name(ambient, i))
        };
        if c.is_positive() {
            lhs.push(term);
        } else {
            rhs.push(term);
        }
    }
    let side = |v: Vec<String>| if v.is_empty() { "0".to_string() } else { v.join(" + ") };
    format!("{} <= {}", side(lhs), side(rhs))
}

#[derive(Serialize)]
struct RowDto {
    label: String,
    parabolic: usize,
    partition: String,
    permutation: String,
    coeffs: Vec<(i64, i64)>,
}

#[derive(Serialize)]
struct JsonDoc {
    family: String,
    dimension: usize,
    equalities: Vec<Vec<(i64, i64)>>,
    inequalities: Vec<RowDto>,
    facets: Vec<RowDto>,
    rays: Vec<Vec<i64>>,
}

fn rat_pair(x: &Rat) -> (i64, i64) {
    (
        x.numer().to_i64().expect("coefficient fits in i64"),
        x.denom().to_i64().expect("denominator fits in i64"),
    )
}

fn row_dto(system: &InequalitySystem, idx: usize) -> RowDto {
    let row = &system.inequalities[idx];
    let (parabolic, partition, permutation) = match &row.label {
        InequalityLabel::Chamber { .. } => (0, String::new(), "123".to_string()),
        InequalityLabel::Schubert {
            parabolic,
            partition,
            perm,
        } => (
            *parabolic,
            partition.clone(),
            format!("{}{}{}", perm[0] + 1, perm[1] + 1, perm[2] + 1),
        ),
    };
    RowDto {
        label: row.label.to_string(),
        parabolic,
        partition,
        permutation,
        coeffs: coordinate_major(system.ambient_dim, &row.coeffs)
            .iter()
            .map(rat_pair)
            .collect(),
    }
}

/// Single JSON document with the system, its facets and the extreme rays.
pub fn json_text(system: &InequalitySystem, facets: &FacetResult, rays: &VRep) -> String {
    let doc = JsonDoc {
        family: system.family.to_string(),
        dimension: system.dimension,
        equalities: system
            .equalities
            .iter()
            .map(|e| coordinate_major(system.ambient_dim, e).iter().map(rat_pair).collect())
            .collect(),
        inequalities: (0..system.inequalities.len())
            .map(|i| row_dto(system, i))
            .collect(),
        facets: facets.kept.iter().map(|&i| row_dto(system, i)).collect(),
        rays: rays
            .rays
            .iter()
            .map(|r| {
                coordinate_major(system.ambient_dim, r)
                    .iter()
                    .map(|x| x.to_i64().expect("ray entry fits in i64"))
                    .collect()
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable document");
    text.push('\n');
    text
}

/// Labeled human-readable listing of rows.
pub fn text_rows(system: &InequalitySystem, indices: &[usize]) -> String {
    let mut out = String::new();
    for &i in indices {
        let row = &system.inequalities[i];
        out.push_str(&format!(
            "{}: {}\n",
            row.label,
            pretty_inequality(system.ambient_dim, &row.coeffs)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use triangle_cone_core::rat;

    #[test]
    fn coordinate_major_interleaves_blocks() {
        let v: Vec<i64> = (1..=9).collect();
        assert_eq!(coordinate_major(3, &v), vec![1, 4, 7, 2, 5, 8, 3, 6, 9]);
        let v4: Vec<i64> = (1..=12).collect();
        assert_eq!(
            coordinate_major(4, &v4),
            vec![1, 5, 9, 2, 6, 10, 3, 7, 11, 4, 8, 12]
        );
    }

    #[test]
    fn pretty_rendering() {
        let coeffs: Vec<Rat> = [0, 0, 1, 0, 0, -1, -1, 0, 0].iter().map(|&v| rat(v)).collect();
        assert_eq!(pretty_inequality(3, &coeffs), "z1 <= z2 + x3");
        let all_neg: Vec<Rat> = [0, 0, -1, 0, 0, -1, 0, -1, 0].iter().map(|&v| rat(v)).collect();
        assert_eq!(pretty_inequality(3, &all_neg), "0 <= z1 + z2 + y3");
    }
}
