//! The two group conditions every envelope group must meet, checked over a
//! catalog: (A) `G'` is transitive, (B) the conjugates of `Z(G_0)` generate `G`.

use std::fmt::Write as _;

use super::catalog::Catalog;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, DEFAULT_ELEMENT_BOUND};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupVerdict {
    /// 1-based catalog id.
    pub id: usize,
    pub order: u128,
    pub derived_transitive: bool,
    pub center_generates: bool,
}

impl GroupVerdict {
    pub fn survives(&self) -> bool {
        self.derived_transitive && self.center_generates
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub degree: usize,
    pub verdicts: Vec<GroupVerdict>,
}

impl ObstructionReport {
    /// Ids of groups meeting both conditions.
    pub fn survivors(&self) -> Vec<usize> {
        self.verdicts
            .iter()
            .filter(|v| v.survives())
            .map(|v| v.id)
            .collect()
    }

    /// One tab-separated line per group: id, order, (A), (B).
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("id\torder\tderived_transitive\tcenter_generates\n");
        for v in &self.verdicts {
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}",
                v.id,
                v.order,
                u8::from(v.derived_transitive),
                u8::from(v.center_generates)
            );
        }
        s
    }
}

/// Condition (B) for one transitive group.
pub fn center_generates(group: &PermGroup) -> Result<bool> {
    let group = PermGroup::with_base(group.generators().to_vec(), &[0])?;
    let center = group.stabilizer(0)?.center_bounded(DEFAULT_ELEMENT_BOUND)?;
    let gens = center.nontrivial_generators();
    if gens.is_empty() {
        return Ok(group.order() == 1);
    }
    Ok(group.normal_closure(&gens)?.order() == group.order())
}

/// Evaluates both conditions on every group of an even-degree catalog.
pub fn obstruction_check(catalog: &Catalog) -> Result<ObstructionReport> {
    if catalog.degree() % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "obstruction check needs an even degree, got {}",
            catalog.degree()
        )));
    }
    let mut verdicts = Vec::with_capacity(catalog.len());
    for (i, g) in catalog.groups().iter().enumerate() {
        let derived_transitive = g.derived_subgroup().is_transitive();
        let center_generates = center_generates(g)?;
        verdicts.push(GroupVerdict {
            id: i + 1,
            order: g.order(),
            derived_transitive,
            center_generates,
        });
    }
    Ok(ObstructionReport {
        degree: catalog.degree(),
        verdicts,
    })
}
