use serde::Serialize;

use super::{Graph, VertexSet};

/// Component structure and the isolate / K₂-component counts that the top
/// coefficients of the power domination polynomial depend on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub components: Vec<VertexSet>,
    pub isolate_count: usize,
    pub k2_component_count: usize,
    pub degrees: Vec<usize>,
}

impl Graph {
    pub fn structure_report(&self) -> StructureReport {
        let components = self.components();
        let isolate_count = components.iter().filter(|c| c.len() == 1).count();
        let k2_component_count = components.iter().filter(|c| c.len() == 2).count();
        StructureReport {
            components,
            isolate_count,
            k2_component_count,
            degrees: (0..self.order()).map(|v| self.degree(v)).collect(),
        }
    }
}
