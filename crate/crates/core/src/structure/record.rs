//! Stable JSON form of a [`Classification`]. Element references are
//! mixed-radix indices; the field set depends on the variant.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::structure::classify::{Classification, Decomposition};
use crate::structure::subgroup::Subgroup;
use crate::subsets::{SubsetBits, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    TwoCosets,
    CosetMinusMidconvex,
    NotSemiaffine,
}

/// `tuple` is `(x, y, z)` or `(x, y)`; `missing` lists the absent target(s).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub kind: String,
    pub tuple: Vec<usize>,
    pub missing: Vec<usize>,
}

impl WitnessRecord {
    pub fn from_witness(group: &GroupSpec, w: &Witness) -> Self {
        let ix = |e| group.index_unchecked(e);
        match w {
            Witness::Affine { x, y, z, missing } => WitnessRecord {
                kind: "affine".into(),
                tuple: vec![ix(x), ix(y), ix(z)],
                missing: vec![ix(missing)],
            },
            Witness::Semiaffine { x, y, z, missing } => WitnessRecord {
                kind: "semiaffine".into(),
                tuple: vec![ix(x), ix(y), ix(z)],
                missing: missing.iter().map(ix).collect(),
            },
            Witness::Midconvex { x, y, midpoint } => WitnessRecord {
                kind: "midconvex".into(),
                tuple: vec![ix(x), ix(y)],
                missing: vec![ix(midpoint)],
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub variant: Variant,
    #[serde(rename = "H", default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
    pub affine: bool,
}

impl From<&Classification> for ClassificationRecord {
    fn from(c: &Classification) -> Self {
        let group = c.set.group();
        let ix = |e| group.index_unchecked(e);
        let mut rec = ClassificationRecord {
            variant: Variant::NotSemiaffine,
            h: None,
            a: None,
            b: None,
            c: None,
            g: None,
            witness: None,
            affine: c.affine,
        };
        match &c.decomposition {
            Decomposition::NotSemiaffine { witness } => {
                rec.witness = Some(WitnessRecord::from_witness(group, witness));
            }
            Decomposition::TwoCosets { h, a, b, .. } => {
                rec.variant = Variant::TwoCosets;
                rec.h = Some(h.bits().indices().collect());
                rec.a = Some(ix(a));
                rec.b = Some(ix(b));
            }
            Decomposition::CosetMinusMidconvex { h, c, g } => {
                rec.variant = Variant::CosetMinusMidconvex;
                rec.h = Some(h.bits().indices().collect());
                rec.c = Some(c.indices().collect());
                rec.g = Some(ix(g));
            }
        }
        rec
    }
}

impl ClassificationRecord {
    /// Rebuilds the set the record describes inside `group`. `H` must be a
    /// subgroup.
    pub fn reconstruct(&self, group: &GroupSpec) -> Result<SubsetBits> {
        let field = |name: &str| Error::parse(name, "field missing from classification record");
        let elem = |i: usize| group.element_at(i as u64);
        match self.variant {
            Variant::NotSemiaffine => Err(Error::Precondition(
                "a non-semiaffine set has no decomposition".into(),
            )),
            Variant::TwoCosets => {
                let h = Subgroup::new(SubsetBits::from_indices(
                    group,
                    self.h.clone().ok_or_else(|| field("H"))?,
                )?)?;
                let a = elem(self.a.ok_or_else(|| field("a"))?)?;
                let b = elem(self.b.ok_or_else(|| field("b"))?)?;
                h.coset(&a)?.union(&h.coset(&b)?)
            }
            Variant::CosetMinusMidconvex => {
                let h = Subgroup::new(SubsetBits::from_indices(
                    group,
                    self.h.clone().ok_or_else(|| field("H"))?,
                )?)?;
                let c = SubsetBits::from_indices(group, self.c.clone().ok_or_else(|| field("C"))?)?;
                let g = elem(self.g.ok_or_else(|| field("g"))?)?;
                h.bits().difference(&c)?.shift(&g)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::classify;

    #[test]
    fn json_shape_for_each_variant() {
        let z6: GroupSpec = "Z6".parse().unwrap();
        let x = SubsetBits::parse_literal(&z6, "{1,2,4,5}").unwrap();
        let rec = ClassificationRecord::from(&classify(&x).unwrap());
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"variant":"coset_minus_midconvex","H":[0,1,2,3,4,5],"C":[2,5],"g":1,"affine":false}"#
        );
        assert_eq!(rec.reconstruct(&z6).unwrap(), x);

        let z5: GroupSpec = "Z5".parse().unwrap();
        let x = SubsetBits::parse_literal(&z5, "{0,2}").unwrap();
        let rec = ClassificationRecord::from(&classify(&x).unwrap());
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"variant":"two_cosets","H":[0],"a":0,"b":2,"affine":false}"#
        );

        let z7: GroupSpec = "Z7".parse().unwrap();
        let x = SubsetBits::parse_literal(&z7, "{0,1,2}").unwrap();
        let rec = ClassificationRecord::from(&classify(&x).unwrap());
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"variant":"not_semiaffine","witness":{"kind":"semiaffine","tuple":[1,2,0],"missing":[3,6]},"affine":false}"#
        );
        assert!(rec.reconstruct(&z7).is_err());
    }

    #[test]
    fn record_parses_back() {
        let z8: GroupSpec = "Z8".parse().unwrap();
        let rec: ClassificationRecord = serde_json::from_str(
            r#"{"variant":"two_cosets","H":[0,4],"a":0,"b":1,"affine":false}"#,
        )
        .unwrap();
        assert_eq!(
            rec.reconstruct(&z8).unwrap(),
            SubsetBits::parse_literal(&z8, "{0,1,4,5}").unwrap()
        );
        let bad: ClassificationRecord = serde_json::from_str(
            r#"{"variant":"two_cosets","H":[0,3],"a":0,"b":1,"affine":false}"#,
        )
        .unwrap();
        assert_eq!(bad.reconstruct(&z8).unwrap_err(), Error::NotSubgroup);
    }
}
