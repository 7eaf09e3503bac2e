//! Command reports and their text/JSON renderings.

use std::fmt::Write as _;

use aqstar_core::{AbelianGroupInvariants, FracElement, FracIdeal, OrderElement, QuadraticOrder};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// Top-level output of every command.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub result: Map<String, Value>,
    pub checks: Vec<Check>,
    pub annotations: Vec<String>,
    #[serde(skip)]
    lines: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Map::new(),
            result: Map::new(),
            checks: Vec::new(),
            annotations: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.result.insert(key.to_string(), value.into());
        self
    }

    pub fn check(&mut self, name: &str, passed: bool) -> &mut Self {
        self.checks.push(Check { name: name.to_string(), passed });
        self
    }

    pub fn annotate(&mut self, text: impl Into<String>) -> &mut Self {
        self.annotations.push(text.into());
        self
    }

    /// Adds a line to the text rendering only.
    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(text.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  {k}: {}", plain(v));
        }
        for l in &self.lines {
            let _ = writeln!(out, "{l}");
        }
        for c in &self.checks {
            let _ = writeln!(out, "[{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name);
        }
        for a in &self.annotations {
            let _ = writeln!(out, "note: {a}");
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn int(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse().expect("integer literal"))
}

pub fn rational(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

pub fn element(order: &QuadraticOrder, x: &OrderElement) -> Value {
    json!({ "surd": order.format_element(x), "coords": [int(&x.u), int(&x.v)] })
}

pub fn frac(order: &QuadraticOrder, x: &FracElement) -> Value {
    json!({ "surd": order.format(x), "coords": [int(x.u()), int(x.v())], "den": int(x.den()) })
}

/// `(g1, g2)` over the Hermite basis, with `g2` shifted by a multiple of `g1` so that its
/// rational part is as small as possible.
pub fn ideal_text(i: &FracIdeal) -> String {
    let [g1, g2] = i.basis_elements();
    let o = i.order();
    let (p1, q1) = o.to_surd(&g1);
    let (p2, q2) = o.to_surd(&g2);
    let g2 = if q1.is_zero() && !p1.is_zero() {
        let half = BigRational::new(1.into(), 2.into());
        let k = (-(&p2 / &p1) + half).floor();
        o.frac_from_surd(&(p2 + k * p1), &q2)
    } else {
        g2
    };
    format!("({}, {})", o.format(&g1), o.format(&g2))
}

pub fn ideal(i: &FracIdeal) -> Value {
    let b = i.basis();
    json!({
        "generators": ideal_text(i),
        "basis": [[int(b.get(0, 0)), int(b.get(1, 0))], [int(b.get(0, 1)), int(b.get(1, 1))]],
        "den": int(i.den()),
        "norm": rational(&i.norm()),
    })
}

pub fn group(g: &AbelianGroupInvariants) -> Value {
    json!({
        "free_rank": g.free_rank,
        "torsion": g.torsion.iter().map(int).collect::<Vec<_>>(),
        "display": g.to_string(),
    })
}
