//! The JSON space description read and written by the command-line tool.
//!
//! ```json
//! {
//!   "points": ["h"],
//!   "params": ["e1", "e2"],
//!   "sets": {
//!     "F1": { "e1": ["h"], "e2": [] },
//!     "F2": { "e1": [], "e2": ["h"] }
//!   },
//!   "topology": ["F1", "F2"]
//! }
//! ```
//!
//! `Φ_E` and `~X` are always part of the topology and never listed. Sections
//! may be given in any order and missing parameters read as empty; output
//! lists every parameter, with points in declaration order.

use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signature::Signature;
use crate::softset::SoftSet;
use crate::topology::{validate, SoftTopology};
use crate::verdict::{Verdict, Witness};

pub const NULL_NAME: &str = "Φ_E";
pub const ABSOLUTE_NAME: &str = "~X";

pub type Sections = IndexMap<String, Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub points: Vec<String>,
    pub params: Vec<String>,
    #[serde(default)]
    pub sets: IndexMap<String, Sections>,
    #[serde(default)]
    pub topology: Vec<String>,
}

/// A parsed document resolved against its signature.
#[derive(Debug, Clone)]
pub struct LoadedSpace {
    pub document: SpaceDocument,
    pub signature: Arc<Signature>,
    pub sets: IndexMap<String, SoftSet>,
}

impl SpaceDocument {
    /// Parses and normalizes a document. Errors carry a line/column or a
    /// path into the document.
    pub fn parse(text: &str) -> Result<Self> {
        let raw: SpaceDocument =
            serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        let loaded = raw.load_with_bound(None)?;
        Ok(loaded.document)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn load(&self) -> Result<LoadedSpace> {
        self.clone().load_with_bound(None)
    }

    fn load_with_bound(self, bound: Option<usize>) -> Result<LoadedSpace> {
        let signature = match bound {
            Some(b) => Signature::with_max_cells(&self.points, &self.params, b),
            None => Signature::new(&self.points, &self.params),
        }
        .map_err(|e| Error::Input(format!("signature: {e}")))?;
        let signature = Arc::new(signature);

        let mut sets = IndexMap::new();
        let mut normalized = IndexMap::new();
        for (name, sections) in &self.sets {
            if name == NULL_NAME || name == ABSOLUTE_NAME || name.ends_with('\'') {
                return Err(Error::Input(format!("sets.{name}: reserved set name")));
            }
            let mut cells = 0u64;
            for (param, points) in sections {
                let e = signature
                    .param_index(param)
                    .map_err(|e| Error::Input(format!("sets.{name}.{param}: {e}")))?;
                for p in points {
                    let x = signature
                        .point_index(p)
                        .map_err(|e| Error::Input(format!("sets.{name}.{param}: {e}")))?;
                    cells |= 1 << signature.cell(e, x);
                }
            }
            let set = SoftSet::from_cells(&signature, cells);
            normalized.insert(name.clone(), sections_of(&set));
            sets.insert(name.clone(), set);
        }
        for (i, name) in self.topology.iter().enumerate() {
            if !sets.contains_key(name) {
                return Err(Error::Input(format!(
                    "topology[{i}]: undefined set `{name}`"
                )));
            }
        }
        let document = SpaceDocument {
            points: self.points,
            params: self.params,
            sets: normalized,
            topology: self.topology,
        };
        Ok(LoadedSpace {
            document,
            signature,
            sets,
        })
    }

    /// Describes an existing space, naming its nontrivial opens `F1, F2, …`
    /// in canonical order.
    pub fn from_space(t: &SoftTopology) -> Self {
        let named: Vec<(String, SoftSet)> = t
            .members()
            .into_iter()
            .filter(|s| !s.is_null() && !s.is_absolute())
            .enumerate()
            .map(|(i, s)| (format!("F{}", i + 1), s))
            .collect();
        Self::from_named(t.signature(), &named)
    }

    pub fn from_named(sig: &Signature, named: &[(String, SoftSet)]) -> Self {
        SpaceDocument {
            points: sig.points().to_vec(),
            params: sig.params().to_vec(),
            sets: named
                .iter()
                .map(|(n, s)| (n.clone(), sections_of(s)))
                .collect(),
            topology: named.iter().map(|(n, _)| n.clone()).collect(),
        }
    }
}

pub fn sections_of(s: &SoftSet) -> Sections {
    let sig = s.signature();
    (0..sig.n_params())
        .map(|e| {
            let names = s.section_names(e).into_iter().map(str::to_owned).collect();
            (sig.params()[e].clone(), names)
        })
        .collect()
}

impl LoadedSpace {
    /// Reads a document honouring the `SOFTTOP_MAX_CELLS` override.
    pub fn from_json(text: &str, max_cells: usize) -> Result<Self> {
        let raw: SpaceDocument =
            serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        raw.load_with_bound(Some(max_cells))
    }

    /// The family `Φ_E`, `~X`, then the listed sets.
    pub fn family(&self) -> Vec<SoftSet> {
        let mut family = vec![
            SoftSet::null(&self.signature),
            SoftSet::absolute(&self.signature),
        ];
        family.extend(self.document.topology.iter().map(|n| self.sets[n].clone()));
        family
    }

    pub fn validate(&self) -> Result<Verdict> {
        validate(&self.signature, &self.family())
    }

    pub fn topology(&self) -> Result<std::result::Result<SoftTopology, Verdict>> {
        let v = self.validate()?;
        if !v.holds {
            return Ok(Err(v));
        }
        Ok(Ok(SoftTopology::new(&self.signature, &self.family())?))
    }

    /// A named set, or `Φ_E` / `~X`, or a named set's complement `NAME'`.
    pub fn set(&self, name: &str) -> Result<SoftSet> {
        match name {
            NULL_NAME => return Ok(SoftSet::null(&self.signature)),
            ABSOLUTE_NAME => return Ok(SoftSet::absolute(&self.signature)),
            _ => {}
        }
        if let Some(s) = self.sets.get(name) {
            return Ok(s.clone());
        }
        if let Some(s) = name.strip_suffix('\'').and_then(|base| self.sets.get(base)) {
            return Ok(s.complement());
        }
        Err(Error::Input(format!("undefined set `{name}`")))
    }

    pub fn namer(&self) -> Namer {
        Namer {
            named: self
                .sets
                .iter()
                .map(|(n, s)| (n.clone(), s.cells()))
                .collect(),
        }
    }
}

/// Renders soft sets by name where possible, inline otherwise.
#[derive(Debug, Clone, Default)]
pub struct Namer {
    named: Vec<(String, u64)>,
}

impl Namer {
    pub fn for_named(named: &[(String, SoftSet)]) -> Self {
        Namer {
            named: named.iter().map(|(n, s)| (n.clone(), s.cells())).collect(),
        }
    }

    pub fn name(&self, s: &SoftSet) -> Option<String> {
        let full = s.signature().full_mask();
        if s.is_null() {
            return Some(NULL_NAME.into());
        }
        if s.is_absolute() {
            return Some(ABSOLUTE_NAME.into());
        }
        if let Some((n, _)) = self.named.iter().find(|(_, c)| *c == s.cells()) {
            return Some(n.clone());
        }
        self.named
            .iter()
            .find(|(_, c)| !c & full == s.cells())
            .map(|(n, _)| format!("{n}'"))
    }

    pub fn set_json(&self, s: &SoftSet) -> serde_json::Value {
        match self.name(s) {
            Some(n) => n.into(),
            None => serde_json::to_value(sections_of(s)).expect("sections serialize"),
        }
    }

    pub fn set_text(&self, s: &SoftSet) -> String {
        match self.name(s) {
            Some(n) if n == NULL_NAME || n == ABSOLUTE_NAME => n,
            Some(n) => format!("{n} = {s}"),
            None => s.to_string(),
        }
    }
}

pub fn witness_json(w: &Witness, namer: &Namer, sig: &Signature) -> serde_json::Value {
    use serde_json::json;
    let set = |s: &SoftSet| namer.set_json(s);
    let point = |x: usize| serde_json::Value::from(sig.points()[x].clone());
    match w {
        Witness::None => serde_json::Value::Null,
        Witness::Note(n) => json!({ "note": n }),
        Witness::Missing { axiom, set: s } => {
            json!({ "axiom": format!("{axiom:?}"), "missing": set(s) })
        }
        Witness::NotClosed {
            axiom,
            left,
            right,
            result,
        } => json!({
            "axiom": format!("{axiom:?}"),
            "left": set(left),
            "right": set(right),
            "result": set(result),
        }),
        Witness::Point(x) => json!({ "point": point(*x) }),
        Witness::PointPair { first, second } => {
            json!({ "points": [point(*first), point(*second)] })
        }
        Witness::PointSet { point: x, set: s } => json!({ "point": point(*x), "set": set(s) }),
        Witness::Set(s) => json!({ "set": set(s) }),
        Witness::SetPair { first, second } => json!({ "sets": [set(first), set(second)] }),
        Witness::Family(f) => json!({ "family": f.iter().map(set).collect::<Vec<_>>() }),
        Witness::Separations(seps) => json!({
            "separations": seps
                .iter()
                .map(|s| json!({
                    "left": set(&s.left),
                    "right": set(&s.right),
                    "left_open": set(&s.left_open),
                    "right_open": set(&s.right_open),
                }))
                .collect::<Vec<_>>()
        }),
        Witness::Space { space, detail } => {
            let doc = SpaceDocument::from_space(space);
            let inner = space_namer(space);
            json!({
                "space": serde_json::to_value(&doc).expect("documents serialize"),
                "detail": witness_json(detail, &inner, space.signature()),
            })
        }
    }
}

/// Names matching [`SpaceDocument::from_space`].
pub fn space_namer(t: &SoftTopology) -> Namer {
    let named: Vec<(String, SoftSet)> = t
        .members()
        .into_iter()
        .filter(|s| !s.is_null() && !s.is_absolute())
        .enumerate()
        .map(|(i, s)| (format!("F{}", i + 1), s))
        .collect();
    Namer::for_named(&named)
}
