//! Reports printed by the CLI, as text or JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use weyl_lc::bfunction::BernsteinData;
use weyl_lc::cohomology::CechNode;
use weyl_lc::module::vector_to_ops;
use weyl_lc::{Operator, Ring, Vector};

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct NodeReport {
    /// 1-based indices of the ideal generators.
    pub theta: Vec<usize>,
    /// 1-based indices of the variables (double complex nodes only).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub xtheta: Vec<usize>,
    pub bpoly: Option<String>,
    pub min_root: Option<i64>,
}

impl NodeReport {
    pub fn from_node(nd: &CechNode) -> NodeReport {
        NodeReport {
            theta: nd.theta.iter().map(|i| i + 1).collect(),
            xtheta: nd.xtheta.iter().map(|i| i + 1).collect(),
            bpoly: nd.bpoly.as_ref().map(BernsteinData::render),
            min_root: nd.min_root,
        }
    }

    fn label(&self, vars: &[String]) -> String {
        let fs = self.theta.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        if self.xtheta.is_empty() {
            format!("{{{fs}}}")
        } else {
            let xs = self.xtheta.iter().map(|&i| vars[i - 1].clone()).collect::<Vec<_>>().join(",");
            format!("{{{fs}}} x{{{xs}}}")
        }
    }
}

/// The common output record; field order is the JSON field order.
#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub query: String,
    pub n: usize,
    pub vars: Vec<String>,
    pub exponent_a: Option<i64>,
    pub nodes: Vec<NodeReport>,
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub is_zero: Option<bool>,
    /// Seconds per phase.
    pub timings: BTreeMap<String, f64>,
    /// Query-specific result (b-function roots, cd, lambda).
    pub value: Value,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(query: String, vars: &[String]) -> Report {
        Report {
            query,
            n: vars.len(),
            vars: vars.to_vec(),
            exponent_a: None,
            nodes: Vec::new(),
            generators: Vec::new(),
            relations: Vec::new(),
            is_zero: None,
            timings: BTreeMap::new(),
            value: Value::Null,
            warnings: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "query: {}", self.query);
        let _ = writeln!(s, "variables: {}", self.vars.join(", "));
        if let Some(a) = self.exponent_a {
            let _ = writeln!(s, "exponent a: {a}");
        }
        if !self.nodes.is_empty() {
            let _ = writeln!(s, "nodes:");
            for nd in &self.nodes {
                let b = nd.bpoly.as_deref().unwrap_or("1");
                let root = nd.min_root.map_or("none".to_string(), |r| r.to_string());
                let _ = writeln!(s, "  {}: b(s) = {b}, min integer root {root}", nd.label(&self.vars));
            }
        }
        if !self.generators.is_empty() {
            let _ = writeln!(s, "generators ({}):", self.generators.len());
            for (i, g) in self.generators.iter().enumerate() {
                let _ = writeln!(s, "  g{} = {g}", i + 1);
            }
        }
        if !self.relations.is_empty() {
            let _ = writeln!(s, "relations ({}):", self.relations.len());
            for r in &self.relations {
                let _ = writeln!(s, "  {r}");
            }
        }
        if let Some(z) = self.is_zero {
            let _ = writeln!(s, "zero: {z}");
        }
        match &self.value {
            Value::Null => {}
            Value::Object(m) => {
                for (k, v) in m {
                    let _ = writeln!(s, "{k}: {}", plain(v));
                }
            }
            v => {
                let _ = writeln!(s, "value: {}", plain(v));
            }
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

/// `[a, b, ...]` for rank above one, the bare entry otherwise.
pub fn render_vector(v: &Vector, rank: u32, ring: Ring, vars: &[String]) -> String {
    let ops = vector_to_ops(v, rank, ring);
    render_ops(&ops, vars)
}

pub fn render_ops(ops: &[Operator], vars: &[String]) -> String {
    if ops.len() == 1 {
        return ops[0].render(vars);
    }
    let parts: Vec<String> = ops.iter().map(|o| o.render(vars)).collect();
    format!("[{}]", parts.join(", "))
}
