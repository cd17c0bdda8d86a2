//! End-to-end runs of the cone pipeline: assemble the inequality system,
//! reduce it to facets, enumerate extreme rays, and cross-check the two
//! representations against each other.

use triangle_cone_core::cone::{
    cones_equal, extreme_rays_dd, facets_of_ray_cone, minimal_facet_system, vrep_satisfies, HRep,
    Redundancy,
};
use triangle_cone_core::inequality::{assemble_full_system, InequalitySystem};
use triangle_cone_core::linalg;
use triangle_cone_core::rootsys::Family;
use triangle_cone_core::schubert::SchubertRing;
use triangle_cone_core::Rat;

fn system(family: Family) -> InequalitySystem {
    let ring = SchubertRing::new(family).unwrap();
    assemble_full_system(&ring).unwrap()
}

fn hrep_of(system: &InequalitySystem) -> HRep {
    HRep::new(
        system.dimension,
        system.equalities.clone(),
        system
            .inequalities
            .iter()
            .map(|i| i.coeffs.clone())
            .collect(),
    )
}

#[test]
fn facet_counts_match_the_known_values() {
    for (family, rows, facets) in [
        (Family::A, 50, 50),
        (Family::C, 135, 102),
        (Family::B, 135, 102),
    ] {
        let sys = system(family);
        assert_eq!(sys.inequalities.len(), rows, "{family} input rows");
        let minimal = minimal_facet_system(&hrep_of(&sys));
        assert_eq!(minimal.hrep.inequalities.len(), facets, "{family} facets");
        // Certificates recombine exactly.
        for (idx, red) in &minimal.removed {
            let Redundancy::Redundant {
                multipliers,
                equality_multipliers,
            } = red
            else {
                panic!("removed rows carry redundancy certificates");
            };
            let mut combo = vec![Rat::from_integer(0.into()); sys.dimension];
            for (m, row) in multipliers.iter().zip(&sys.inequalities) {
                for (c, x) in combo.iter_mut().zip(&row.coeffs) {
                    let t = m * x;
                    *c = &*c + t;
                }
            }
            for (m, row) in equality_multipliers.iter().zip(&sys.equalities) {
                for (c, x) in combo.iter_mut().zip(row) {
                    let t = m * x;
                    *c = &*c + t;
                }
            }
            assert_eq!(combo, sys.inequalities[*idx].coeffs, "{family} row {idx}");
        }
    }
}

#[test]
fn c3_rays_and_round_trip() {
    let sys = system(Family::C);
    let h = hrep_of(&sys);
    let minimal = minimal_facet_system(&h);
    let v = extreme_rays_dd(&minimal.hrep).unwrap();
    assert!(v.lineality.is_empty(), "D₃(C₃) is pointed");
    assert_eq!(v.rays.len(), 51);
    assert!(vrep_satisfies(&h, &v));
    // H → V → H is a fixpoint.
    let back = facets_of_ray_cone(&v, &[]).unwrap();
    let mut got = back.canonical_rows();
    got.sort();
    let mut expect = minimal.hrep.canonical_rows();
    expect.sort();
    assert_eq!(got, expect);
}

#[test]
fn b3_and_c3_cones_coincide() {
    let b = hrep_of(&system(Family::B));
    let c = hrep_of(&system(Family::C));
    assert!(cones_equal(&b, &c).unwrap());
    // Sanity: neither equals the bare chamber cone.
    let chamber = HRep::new(9, vec![], c.inequalities[..9].to_vec());
    assert!(!cones_equal(&c, &chamber).unwrap());
}

#[test]
fn a3_round_trip_with_equalities() {
    let sys = system(Family::A);
    let h = hrep_of(&sys);
    let minimal = minimal_facet_system(&h);
    assert_eq!(minimal.removed.len(), 0, "the A₃ system is already minimal");
    let v = extreme_rays_dd(&minimal.hrep).unwrap();
    assert!(v.lineality.is_empty());
    assert!(vrep_satisfies(&h, &v));
    for ray in &v.rays {
        let r = linalg::to_rats(ray);
        for eq in &sys.equalities {
            assert!(linalg::dot(eq, &r) == Rat::from_integer(0.into()));
        }
    }
    let back = facets_of_ray_cone(&v, &sys.equalities).unwrap();
    let mut got = back.canonical_rows();
    got.sort();
    let mut expect = minimal.hrep.canonical_rows();
    expect.sort();
    assert_eq!(got, expect);
}

#[test]
fn chamber_cone_is_simplicial() {
    let sys = system(Family::C);
    let chamber = HRep::new(9, vec![], sys.inequalities[..9].iter().map(|i| i.coeffs.clone()).collect());
    let minimal = minimal_facet_system(&chamber);
    assert_eq!(minimal.hrep.inequalities.len(), 9);
    let v = extreme_rays_dd(&chamber).unwrap();
    assert_eq!(v.rays.len(), 9);
}
