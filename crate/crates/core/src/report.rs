//! Machine-checkable verdicts for exact sequences and isomorphism claims.

use std::time::Duration;

use serde::{Deserialize, Serialize};

/// Exactness data at one interior node `A --f--> B --g--> C`, recorded at `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeReport {
    pub label: String,
    pub dim: usize,
    pub image_in: usize,
    pub kernel_out: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoWitness {
    pub map: String,
    pub bijective: bool,
}

/// Any other named claim a verifier checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub label: String,
    pub holds: bool,
}

/// Named dimension recorded for the human-readable tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRecord {
    pub label: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceReport {
    pub name: String,
    pub nodes: Vec<NodeReport>,
    pub iso_witnesses: Vec<IsoWitness>,
    pub conditions: Vec<Condition>,
    pub dims: Vec<DimRecord>,
    pub verdict: bool,
    /// Wall-clock time; never serialized so machine reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

impl SequenceReport {
    pub fn new(name: impl Into<String>) -> Self {
        SequenceReport {
            name: name.into(),
            nodes: Vec::new(),
            iso_witnesses: Vec::new(),
            conditions: Vec::new(),
            dims: Vec::new(),
            verdict: true,
            elapsed: None,
        }
    }

    pub fn node(&mut self, node: NodeReport) -> &mut Self {
        self.verdict &= node.exact;
        self.nodes.push(node);
        self
    }

    pub fn iso(&mut self, map: impl Into<String>, bijective: bool) -> &mut Self {
        self.verdict &= bijective;
        self.iso_witnesses.push(IsoWitness {
            map: map.into(),
            bijective,
        });
        self
    }

    pub fn condition(&mut self, label: impl Into<String>, holds: bool) -> &mut Self {
        self.verdict &= holds;
        self.conditions.push(Condition {
            label: label.into(),
            holds,
        });
        self
    }

    pub fn dim(&mut self, label: impl Into<String>, dim: usize) -> &mut Self {
        self.dims.push(DimRecord {
            label: label.into(),
            dim,
        });
        self
    }

    /// Appends everything from another report under a label prefix.
    pub fn absorb(&mut self, prefix: &str, other: SequenceReport) -> &mut Self {
        let p = |s: String| {
            if prefix.is_empty() {
                s
            } else {
                format!("{prefix}/{s}")
            }
        };
        for mut n in other.nodes {
            n.label = p(n.label);
            self.node(n);
        }
        for w in other.iso_witnesses {
            self.iso(p(w.map), w.bijective);
        }
        for c in other.conditions {
            self.condition(p(c.label), c.holds);
        }
        for d in other.dims {
            self.dim(p(d.label), d.dim);
        }
        self
    }

    pub fn dim_of(&self, label: &str) -> Option<usize> {
        self.dims.iter().find(|d| d.label == label).map(|d| d.dim)
    }

    /// Labels of every failing node, witness and condition.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        out.extend(
            self.nodes
                .iter()
                .filter(|n| !n.exact)
                .map(|n| format!("node {}", n.label)),
        );
        out.extend(
            self.iso_witnesses
                .iter()
                .filter(|w| !w.bijective)
                .map(|w| format!("iso {}", w.map)),
        );
        out.extend(
            self.conditions
                .iter()
                .filter(|c| !c.holds)
                .map(|c| format!("condition {}", c.label)),
        );
        out
    }

    /// Recomputes the verdict as the conjunction of every flag.
    pub fn recompute_verdict(&self) -> bool {
        self.nodes.iter().all(|n| n.exact)
            && self.iso_witnesses.iter().all(|w| w.bijective)
            && self.conditions.iter().all(|c| c.holds)
    }
}
