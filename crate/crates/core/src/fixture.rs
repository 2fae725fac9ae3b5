// SPDX-License-Identifier: Apache-2.0

//! JSON fixture documents.
//!
//! A document declares a universe, a parameter set, named soft sets, named
//! topologies (lists of soft set names) and named bi-soft spaces (pairs of
//! topology names). `Phi` and `X` always name `Φ` and `X̃`. Declaration
//! order is canonical order.
//!
//! ```json
//! {
//!   "universe": ["h1", "h2"],
//!   "parameters": ["e1", "e2"],
//!   "soft_sets": { "F": { "e1": ["h1"], "e2": ["h1", "h2"] } },
//!   "topologies": { "T1": ["Phi", "X", "F"], "T2": ["Phi", "X"] },
//!   "spaces": { "S": ["T1", "T2"] }
//! }
//! ```
//!
//! Parameters missing from a soft set map to `∅`.

use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::bisoft::BiSoftSpace;
use crate::error::{Error, Result};
use crate::softset::{Context, SoftSet, Subset};
use crate::topology::SoftTopology;

pub const NULL_NAME: &str = "Phi";
pub const ABSOLUTE_NAME: &str = "X";

pub type SoftSetSpec = IndexMap<String, Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureDocument {
    pub universe: Vec<String>,
    pub parameters: Vec<String>,
    #[serde(default)]
    pub soft_sets: IndexMap<String, SoftSetSpec>,
    #[serde(default)]
    pub topologies: IndexMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub spaces: IndexMap<String, [String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
}

impl FixtureDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fixture documents always serialize")
    }

    /// Checks every reference and builds the soft sets.
    pub fn resolve(&self) -> Result<Fixture> {
        let ctx = Context::from_names(self.universe.iter().cloned(), self.parameters.iter().cloned())?;
        let mut sets = IndexMap::new();
        sets.insert(NULL_NAME.to_owned(), ctx.null());
        sets.insert(ABSOLUTE_NAME.to_owned(), ctx.absolute());
        for (name, spec) in &self.soft_sets {
            if sets.contains_key(name) {
                return Err(Error::DuplicateName {
                    kind: "soft set",
                    name: name.clone(),
                });
            }
            let set = ctx
                .soft_set_named(spec.iter().map(|(p, xs)| (p.as_str(), xs.iter().map(String::as_str))))
                .map_err(|e| Error::Fixture(format!("soft set `{name}`: {e}")))?;
            sets.insert(name.clone(), set);
        }
        for (name, members) in &self.topologies {
            for m in members {
                if !sets.contains_key(m) {
                    return Err(Error::Fixture(format!(
                        "topology `{name}` refers to unknown soft set `{m}`"
                    )));
                }
            }
        }
        for (name, pair) in &self.spaces {
            for t in pair {
                if !self.topologies.contains_key(t) {
                    return Err(Error::Fixture(format!(
                        "space `{name}` refers to unknown topology `{t}`"
                    )));
                }
            }
        }
        if let Some(t) = &self.target {
            if !sets.contains_key(t) {
                return Err(Error::Fixture(format!("unknown target soft set `{t}`")));
            }
        }
        let mut names = HashMap::new();
        for (name, set) in &sets {
            names.entry(set.clone()).or_insert_with(|| name.clone());
        }
        Ok(Fixture {
            doc: self.clone(),
            ctx,
            sets,
            names,
        })
    }

    /// Writes a bi-soft space as a document. Members of `𝒯1` are named
    /// `F1, F2, ..`, the remaining members of `𝒯2` `G1, G2, ..` and the
    /// targets `A1, A2, ..`; the first target becomes the document target.
    pub fn from_space(space: &BiSoftSpace, targets: &[SoftSet]) -> Self {
        let ctx = space.context();
        let mut namer = Namer::new(ctx);
        let t1 = namer.topology(space.first(), "F");
        let t2 = namer.topology(space.second(), "G");
        let names: Vec<String> = targets.iter().map(|a| namer.name(a, "A")).collect();
        let mut doc = namer.finish();
        doc.topologies.insert("T1".into(), t1);
        doc.topologies.insert("T2".into(), t2);
        doc.spaces.insert("S".into(), ["T1".into(), "T2".into()]);
        doc.target = names.into_iter().next();
        doc
    }
}

/// Hands out names to soft sets, reusing names for equal sets.
struct Namer {
    ctx: Arc<Context>,
    soft_sets: IndexMap<String, SoftSetSpec>,
    known: HashMap<SoftSet, String>,
    next: HashMap<&'static str, usize>,
}

impl Namer {
    fn new(ctx: &Arc<Context>) -> Self {
        let mut known = HashMap::new();
        known.insert(ctx.null(), NULL_NAME.to_owned());
        known.insert(ctx.absolute(), ABSOLUTE_NAME.to_owned());
        Namer {
            ctx: ctx.clone(),
            soft_sets: IndexMap::new(),
            known,
            next: HashMap::new(),
        }
    }

    fn name(&mut self, s: &SoftSet, prefix: &'static str) -> String {
        if let Some(n) = self.known.get(s) {
            return n.clone();
        }
        let k = self.next.entry(prefix).or_insert(0);
        *k += 1;
        let name = format!("{prefix}{k}");
        self.insert(name.clone(), s);
        name
    }

    fn insert(&mut self, name: String, s: &SoftSet) {
        self.soft_sets.insert(name.clone(), spec_of(s));
        self.known.insert(s.clone(), name);
    }

    fn topology(&mut self, t: &SoftTopology, prefix: &'static str) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for m in t.members() {
            let n = self.name(m, prefix);
            if !out.contains(&n) {
                out.push(n);
            }
        }
        out
    }

    fn finish(self) -> FixtureDocument {
        FixtureDocument {
            universe: self.ctx.universe().names().to_vec(),
            parameters: self.ctx.parameters().names().to_vec(),
            soft_sets: self.soft_sets,
            topologies: IndexMap::new(),
            spaces: IndexMap::new(),
            target: None,
        }
    }
}

fn spec_of(s: &SoftSet) -> SoftSetSpec {
    let ctx = s.context();
    s.rows()
        .enumerate()
        .map(|(e, row)| {
            let names = row.iter().map(|x| ctx.universe().name(x).to_owned()).collect();
            (ctx.parameters().name(e).to_owned(), names)
        })
        .collect()
}

/// A resolved document.
#[derive(Debug, Clone)]
pub struct Fixture {
    doc: FixtureDocument,
    ctx: Arc<Context>,
    sets: IndexMap<String, SoftSet>,
    names: HashMap<SoftSet, String>,
}

impl Fixture {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        FixtureDocument::load(path)?.resolve()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        FixtureDocument::from_json(text)?.resolve()
    }

    pub fn document(&self) -> &FixtureDocument {
        &self.doc
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    /// Includes `Phi` and `X`.
    pub fn soft_set(&self, name: &str) -> Result<&SoftSet> {
        self.sets
            .get(name)
            .ok_or_else(|| Error::Fixture(format!("unknown soft set `{name}`")))
    }

    pub fn target(&self) -> Option<&SoftSet> {
        self.doc.target.as_deref().map(|t| &self.sets[t])
    }

    /// The first declared name of `s`, if it has one.
    pub fn name_of(&self, s: &SoftSet) -> Option<&str> {
        self.names.get(s).map(String::as_str)
    }

    /// The name of `s`, or its table when it has none.
    pub fn label(&self, s: &SoftSet) -> String {
        match self.name_of(s) {
            Some(n) => n.to_owned(),
            None => s.to_string(),
        }
    }

    pub fn topology_names(&self) -> impl Iterator<Item = &str> {
        self.doc.topologies.keys().map(String::as_str)
    }

    pub fn space_names(&self) -> impl Iterator<Item = &str> {
        self.doc.spaces.keys().map(String::as_str)
    }

    /// The listed members, unvalidated and deduplicated, in listing order.
    pub fn topology_members(&self, name: &str) -> Result<Vec<SoftSet>> {
        let names = self
            .doc
            .topologies
            .get(name)
            .ok_or_else(|| Error::Fixture(format!("unknown topology `{name}`")))?;
        let mut out: Vec<SoftSet> = Vec::with_capacity(names.len());
        for n in names {
            let s = &self.sets[n];
            if !out.contains(s) {
                out.push(s.clone());
            }
        }
        Ok(out)
    }

    pub fn topology(&self, name: &str) -> Result<SoftTopology> {
        SoftTopology::validate(&self.ctx, self.topology_members(name)?)
    }

    /// Every named topology with its validation result, in declaration
    /// order.
    pub fn validate_all(&self) -> Vec<(String, Result<SoftTopology>)> {
        self.doc
            .topologies
            .keys()
            .map(|n| (n.clone(), self.topology(n)))
            .collect()
    }

    pub fn space(&self, name: &str) -> Result<BiSoftSpace> {
        let [t1, t2] = self
            .doc
            .spaces
            .get(name)
            .ok_or_else(|| Error::Fixture(format!("unknown space `{name}`")))?;
        BiSoftSpace::new(self.topology(t1)?, self.topology(t2)?)
    }

    /// The subspace of space `name` on the elements `keep`, as a document.
    /// Restricted members keep the name of the first set restricting to
    /// them; `∅` and `Y` restrict to `Phi` and `X`.
    pub fn subspace_document<S: AsRef<str>>(&self, name: &str, keep: &[S]) -> Result<FixtureDocument> {
        let [t1, t2] = self
            .doc
            .spaces
            .get(name)
            .ok_or_else(|| Error::Fixture(format!("unknown space `{name}`")))?
            .clone();
        let space = self.space(name)?;
        let y: Subset = self.ctx.subset(keep.iter().map(AsRef::as_ref))?;
        let sub_ctx = self.ctx.restrict_universe(y)?;
        let mut namer = Namer::new(&sub_ctx);
        let mut topologies = IndexMap::new();
        for (tname, t) in [(&t1, space.first()), (&t2, space.second())] {
            if topologies.contains_key(tname) {
                continue;
            }
            let mut list: Vec<String> = Vec::new();
            for member_name in &self.doc.topologies[tname] {
                let restricted = self.sets[member_name].rehome(y, &sub_ctx);
                let n = match namer.known.get(&restricted) {
                    Some(n) => n.clone(),
                    None => {
                        namer.insert(member_name.clone(), &restricted);
                        member_name.clone()
                    }
                };
                if !list.contains(&n) {
                    list.push(n);
                }
            }
            debug_assert_eq!(list.len(), t.relative(y)?.len());
            topologies.insert(tname.clone(), list);
        }
        let mut doc = namer.finish();
        doc.topologies = topologies;
        doc.spaces.insert(name.to_owned(), [t1, t2]);
        Ok(doc)
    }
}
