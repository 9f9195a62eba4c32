use serde::{Deserialize, Serialize};

use super::{validate, SkewMorphism};
use crate::abelian::{AbelianGroup, GroupPermutation};

/// One skew morphism as a JSON object. Arrays use the canonical element
/// encoding of the group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewRecord {
    pub group: Vec<u64>,
    pub perm: Vec<usize>,
    pub order: u64,
    pub power: Vec<u64>,
    pub smooth: bool,
    pub skew_type: u64,
    pub kernel: Vec<usize>,
    pub proper: bool,
}

impl SkewRecord {
    pub fn from_morphism(phi: &SkewMorphism) -> Self {
        SkewRecord {
            group: phi.group().factors().to_vec(),
            perm: phi.table().to_vec(),
            order: phi.order(),
            power: phi.power().to_vec(),
            smooth: phi.is_smooth(),
            skew_type: phi.skew_type(),
            kernel: phi.kernel().members().to_vec(),
            proper: phi.is_proper(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Outcome of re-deriving a record from its `group` and `perm`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecordCheck {
    Ok(SkewMorphism),
    /// The first field that does not match, with a reason.
    Mismatch {
        field: &'static str,
        detail: String,
    },
}

/// Revalidate the permutation and compare every derived field. A supplied
/// power array is compared modulo the derived order.
pub fn check_record(record: &SkewRecord) -> RecordCheck {
    let mismatch = |field: &'static str, detail: String| RecordCheck::Mismatch { field, detail };
    let group = match AbelianGroup::new(&record.group) {
        Ok(g) => g,
        Err(e) => return mismatch("group", e.to_string()),
    };
    if record.perm.len() != group.order() {
        return mismatch(
            "perm",
            format!(
                "length {} but group order {}",
                record.perm.len(),
                group.order()
            ),
        );
    }
    let perm = match GroupPermutation::new(record.perm.clone()) {
        Ok(p) => p,
        Err(e) => return mismatch("perm", e.to_string()),
    };
    let phi = match validate(&group, &perm) {
        Ok(phi) => phi,
        Err(e) => return mismatch("perm", e.to_string()),
    };
    let derived = SkewRecord::from_morphism(&phi);
    if record.order != derived.order {
        return mismatch(
            "order",
            format!("expected {}, derived {}", record.order, derived.order),
        );
    }
    if record.power.len() != derived.power.len()
        || record
            .power
            .iter()
            .zip(&derived.power)
            .any(|(&p, &q)| p % derived.order != q)
    {
        return mismatch("power", format!("derived {:?}", derived.power));
    }
    if record.kernel != derived.kernel {
        return mismatch("kernel", format!("derived {:?}", derived.kernel));
    }
    if record.smooth != derived.smooth {
        return mismatch("smooth", format!("derived {}", derived.smooth));
    }
    if record.skew_type != derived.skew_type {
        return mismatch("skew_type", format!("derived {}", derived.skew_type));
    }
    if record.proper != derived.proper {
        return mismatch("proper", format!("derived {}", derived.proper));
    }
    RecordCheck::Ok(phi)
}
