//! Morphism tables between the generating objects.

use std::fmt;

use serde::Serialize;

use super::MirrorError;
use crate::homology::{ext_groups, ClosedForm, ExtDescriptor, HomologyError};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupDescriptor {
    Zero,
    /// Free abelian group, rank per shift.
    Free { shifts: Vec<(i64, usize)> },
    /// Graded module pieces, one per shift.
    Modules { parts: Vec<(i64, String)> },
}

fn shift_suffix(s: i64) -> String {
    if s == 0 {
        String::new()
    } else {
        format!("[{s}]")
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = match self {
            GroupDescriptor::Zero => return write!(f, "0"),
            GroupDescriptor::Free { shifts } => shifts
                .iter()
                .map(|&(s, r)| {
                    let base = if r == 1 { "Z".to_string() } else { format!("Z^{r}") };
                    format!("{base}{}", shift_suffix(s))
                })
                .collect(),
            GroupDescriptor::Modules { parts } => parts
                .iter()
                .map(|(s, m)| {
                    if *s == 0 {
                        m.clone()
                    } else {
                        format!("({m}){}", shift_suffix(*s))
                    }
                })
                .collect(),
        };
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HomEntry {
    pub source: String,
    pub target: String,
    pub group: GroupDescriptor,
    /// False for tabulated reference values.
    pub computed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ext: Vec<ExtDescriptor>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HomTable {
    pub entries: Vec<HomEntry>,
}

impl HomTable {
    pub fn get(&self, source: &str, target: &str) -> Option<&HomEntry> {
        self.entries
            .iter()
            .find(|e| e.source == source && e.target == target)
    }
}

/// The tabulated morphisms between the two branes of the rank-one mirror.
pub fn hom_table_lg2() -> HomTable {
    let entry = |s: &str, t: &str, group: GroupDescriptor| HomEntry {
        source: s.into(),
        target: t.into(),
        group,
        computed: false,
        ext: Vec::new(),
    };
    let z = || GroupDescriptor::Free { shifts: vec![(0, 1)] };
    HomTable {
        entries: vec![
            entry("L0", "L0", z()),
            entry("L1", "L1", z()),
            entry(
                "L0",
                "L1",
                GroupDescriptor::Free {
                    shifts: vec![(0, 1), (-1, 1)],
                },
            ),
            entry("L1", "L0", GroupDescriptor::Zero),
        ],
    }
}

/// `Hom(F(z_i), F(z_j))` for distinct positive indices, assembled from
/// `Ext^k(J_i, J_j)` for `k <= kmax` in degrees up to `n + 3` over `Z/101`.
pub fn hom_sheaves(n: usize, i: usize, j: usize, kmax: usize) -> Result<HomEntry, MirrorError> {
    hom_sheaves_with(n, i, j, kmax, n as u32 + 3, Field::Prime(101))
}

pub fn hom_sheaves_with(
    n: usize,
    i: usize,
    j: usize,
    kmax: usize,
    bound: u32,
    field: Field,
) -> Result<HomEntry, MirrorError> {
    if n < 2 {
        return Err(MirrorError::NTooSmall(n));
    }
    for idx in [i, j] {
        if idx > n {
            return Err(MirrorError::IndexOutOfRange { index: idx, n });
        }
    }
    let entry = |group, computed, ext| HomEntry {
        source: format!("F(z{i})"),
        target: format!("F(z{j})"),
        group,
        computed,
        ext,
    };
    if i == j {
        return Err(MirrorError::Undetermined { i, j });
    }
    if i == 0 || j == 0 {
        return Ok(entry(GroupDescriptor::Zero, false, Vec::new()));
    }
    let ext = ext_groups(n, i, j, kmax, bound, field).map_err(|e| match e {
        HomologyError::IndexOutOfRange { index, n } => MirrorError::IndexOutOfRange { index, n },
        other => MirrorError::Homology(other),
    })?;
    let parts = ext
        .iter()
        .filter(|e| e.closed_form != ClosedForm::Zero)
        .map(|e| (e.k as i64, e.closed_form.to_string()))
        .collect();
    Ok(entry(GroupDescriptor::Modules { parts }, true, ext))
}
