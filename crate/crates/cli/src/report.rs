//! Machine-readable records and their human renderings.

use bhr::construct::Construction;
use bhr::{pathexpr, special_flags, Kind, LengthList, Realization, SpecialFlags, Vertex, Witness};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub type1: bool,
    pub type2: bool,
    pub extendable_w: Option<u32>,
}

impl From<SpecialFlags> for Flags {
    fn from(f: SpecialFlags) -> Self {
        Self {
            type1: f.type1,
            type2: f.type2,
            extendable_w: f.extendable_w(),
        }
    }
}

/// A realization as emitted by `realize --json` and read back by `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: Kind,
    pub v: u32,
    pub list: LengthList,
    pub path: Vec<Vertex>,
    /// Linear realizations only.
    #[serde(default)]
    pub flags: Option<Flags>,
    #[serde(default)]
    pub provenance: Vec<String>,
}

/// Flags of a linear realization, measured against its largest length.
pub fn flags_of(r: &Realization) -> Option<Flags> {
    if r.kind() != Kind::Linear {
        return None;
    }
    let t = r.list().max_length()?;
    special_flags(r, t).ok().map(Flags::from)
}

impl Certificate {
    pub fn new(c: &Construction) -> Self {
        let r = &c.realization;
        Self {
            kind: r.kind(),
            v: r.order(),
            list: r.list().clone(),
            path: r.vertices().to_vec(),
            flags: flags_of(r),
            provenance: c.provenance.clone(),
        }
    }

    pub fn realization(&self) -> Realization {
        Realization::claim(self.kind, self.path.clone(), self.list.clone())
    }

    pub fn human(&self) -> String {
        let t = self.list.max_length();
        let mut out = vec![
            format!("{} realization of {{{}}} on v={}", self.kind, self.list, self.v),
            format!("path: [{}]", pathexpr::format(&self.path, t)),
            format!("vertices: {:?}", self.path),
        ];
        if let Some(f) = self.flags {
            let w = f.extendable_w.map_or("none".to_string(), |w| w.to_string());
            out.push(format!("type1={} type2={} extendable_w={w}", f.type1, f.type2));
        }
        for step in &self.provenance {
            out.push(format!("  {step}"));
        }
        out.join("\n")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Infeasible {
    pub outcome: &'static str,
    pub v: u32,
    pub list: LengthList,
    pub witness: Witness,
}

impl Infeasible {
    pub fn new(list: LengthList, witness: Witness) -> Self {
        Self {
            outcome: "infeasible",
            v: list.order(),
            list,
            witness,
        }
    }

    pub fn human(&self) -> String {
        let w = &self.witness;
        format!(
            "{{{}}} has no cyclic realization: {} of its lengths are multiples of {}, above v - d = {}",
            self.list, w.multiples, w.divisor, w.bound
        )
    }
}
