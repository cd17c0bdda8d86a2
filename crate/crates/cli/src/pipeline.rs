//! One-stop computation bundle for a family: Schubert ring, assembled
//! inequality system, facet system and extreme rays.

use triangle_cone_core::cone::{
    extreme_rays_dd, minimal_facet_system, FacetResult, HRep, VRep,
};
use triangle_cone_core::inequality::{assemble_full_system, InequalitySystem};
use triangle_cone_core::rootsys::Family;
use triangle_cone_core::schubert::SchubertRing;
use triangle_cone_core::Result;

pub struct Pipeline {
    pub ring: SchubertRing,
    pub system: InequalitySystem,
}

impl Pipeline {
    pub fn new(family: Family) -> Result<Self> {
        let ring = SchubertRing::new(family)?;
        let system = assemble_full_system(&ring)?;
        Ok(Pipeline { ring, system })
    }

    pub fn hrep(&self) -> HRep {
        HRep::new(
            self.system.dimension,
            self.system.equalities.clone(),
            self.system
                .inequalities
                .iter()
                .map(|i| i.coeffs.clone())
                .collect(),
        )
    }

    pub fn facets(&self) -> FacetResult {
        minimal_facet_system(&self.hrep())
    }

    pub fn rays(facets: &FacetResult) -> Result<VRep> {
        extreme_rays_dd(&facets.hrep)
    }
}

/// Full artifacts for one family, computed once and shared by the checks.
pub struct Artifacts {
    pub pipeline: Pipeline,
    pub facets: FacetResult,
    pub rays: VRep,
}

impl Artifacts {
    pub fn new(family: Family) -> Result<Self> {
        let pipeline = Pipeline::new(family)?;
        let facets = pipeline.facets();
        let rays = Pipeline::rays(&facets)?;
        Ok(Artifacts {
            pipeline,
            facets,
            rays,
        })
    }
}
