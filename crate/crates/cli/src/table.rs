//! Pretty printers for the `table` subcommand: coset data, singular
//! weights, Schubert polynomials mod I, multiplication grids and labeled
//! inequality lists.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use triangle_cone_core::inequality::{
    assemble_full_system, canonical_covector, inequality_from_triple, symmetrize,
    trivially_redundant,
};
use triangle_cone_core::polyalg::QuotientBasis;
use triangle_cone_core::schubert::SchubertRing;
use triangle_cone_core::Result;

use crate::output::pretty_inequality;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Weyl,
    SingularWeights,
    SchubertPoly,
    Products,
    Inequalities,
}

pub fn render_table(ring: &SchubertRing, k: usize, kind: TableKind) -> Result<String> {
    match kind {
        TableKind::Weyl => weyl_table(ring, k),
        TableKind::SingularWeights => weights_table(ring, k),
        TableKind::SchubertPoly => schubert_table(ring, k),
        TableKind::Products => product_grid(ring, k),
        TableKind::Inequalities => inequality_table(ring, k),
    }
}

fn grid(rows: Vec<Vec<String>>) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let width: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = width[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn weyl_table(ring: &SchubertRing, k: usize) -> Result<String> {
    let p = ring.parabolic(k);
    let letter = ring.class_letter();
    let mut rows = vec![vec![
        "w".to_string(),
        "l(w)".to_string(),
        "class".to_string(),
        "dual".to_string(),
        "theta(w)".to_string(),
    ]];
    for &w in &p.ordered {
        let dual = ring.weyl.theta_dual(&p.data, w)?;
        rows.push(vec![
            ring.weyl.elements[w].word_string(),
            ring.weyl.length(w).to_string(),
            p.label(w).class_name(letter),
            p.label(dual).class_name(letter),
            ring.weyl.elements[dual].word_string(),
        ]);
    }
    Ok(grid(rows))
}

fn weights_table(ring: &SchubertRing, k: usize) -> Result<String> {
    let p = ring.parabolic(k);
    let letter = ring.class_letter();
    let mut rows = vec![vec![
        "w".to_string(),
        "class".to_string(),
        "lambda_w".to_string(),
    ]];
    for &w in &p.ordered {
        let lambda = triangle_cone_core::inequality::singular_weight(ring, k, w);
        let entries: Vec<String> = lambda.iter().map(|x| x.to_string()).collect();
        rows.push(vec![
            ring.weyl.elements[w].word_string(),
            p.label(w).class_name(letter),
            format!("({})", entries.join(",")),
        ]);
    }
    Ok(grid(rows))
}

fn schubert_table(ring: &SchubertRing, k: usize) -> Result<String> {
    let p = ring.parabolic(k);
    let letter = ring.class_letter();
    let qb = QuotientBasis::new(ring.rs(), ring.weyl.length(ring.weyl.longest));
    let mut rows = vec![vec![
        "class".to_string(),
        "w".to_string(),
        "p_w mod I".to_string(),
    ]];
    for &w in &p.ordered {
        let nf = qb.normal_form(ring.schubert_polynomial(w))?;
        rows.push(vec![
            p.label(w).class_name(letter),
            ring.weyl.elements[w].word_string(),
            nf.render(),
        ]);
    }
    Ok(grid(rows))
}

fn product_grid(ring: &SchubertRing, k: usize) -> Result<String> {
    let p = ring.parabolic(k);
    let letter = ring.class_letter();
    let table = ring.multiplication_table(k)?;
    let mut rows = vec![];
    let mut header = vec![format!("G/P{k}")];
    header.extend(table.basis.iter().map(|&w| p.label(w).class_name(letter)));
    rows.push(header);
    for (i, &u) in table.basis.iter().enumerate() {
        let mut row = vec![p.label(u).class_name(letter)];
        for (j, _) in table.basis.iter().enumerate() {
            row.push(if j < i {
                String::new()
            } else {
                ring.render_class(k, table.entry(i, j))
            });
        }
        rows.push(row);
    }
    Ok(grid(rows))
}

fn inequality_table(ring: &SchubertRing, k: usize) -> Result<String> {
    let rs = ring.rs();
    // Rows removed by the LP sweep that are not chamber consequences get a
    // double marker, matching the published annotations.
    let system = assemble_full_system(ring)?;
    let hrep = triangle_cone_core::cone::HRep::new(
        system.dimension,
        system.equalities.clone(),
        system.inequalities.iter().map(|i| i.coeffs.clone()).collect(),
    );
    let removed = triangle_cone_core::cone::minimal_facet_system(&hrep).removed;
    let removed_canon: BTreeSet<Vec<BigInt>> = removed
        .iter()
        .map(|(idx, _)| canonical_covector(rs, &system.inequalities[*idx].coeffs))
        .collect();

    let reps = ring.representative_triples(k)?;
    let mut rows = vec![vec![
        "label".to_string(),
        "inequality".to_string(),
        "mark".to_string(),
        "count".to_string(),
    ]];
    for t in &reps {
        let ineq = inequality_from_triple(ring, k, t);
        let orbit = symmetrize(rs, std::slice::from_ref(&ineq));
        let mark = if trivially_redundant(rs, &ineq).is_some() {
            "(*)"
        } else if removed_canon.contains(&canonical_covector(rs, &ineq.coeffs)) {
            "(**)"
        } else {
            ""
        };
        rows.push(vec![
            t.label.clone(),
            pretty_inequality(rs.ambient_dim, &ineq.coeffs),
            mark.to_string(),
            orbit.len().to_string(),
        ]);
    }
    let mut out = grid(rows);
    let total: usize = reps
        .iter()
        .map(|t| {
            let ineq = inequality_from_triple(ring, k, t);
            symmetrize(rs, std::slice::from_ref(&ineq)).len()
        })
        .sum();
    out.push_str(&format!("{} rows after symmetrization\n", total));
    Ok(out)
}
