//! Run reports and their text, JSON and LaTeX renderings.

use clap::ValueEnum;
use serde_json::{json, Map, Value};
use torspair_core::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Artifact {
    pub name: String,
    pub json: Value,
    pub text: String,
    pub latex: Option<String>,
}

impl Artifact {
    pub fn new(name: &str, json: Value, text: impl Into<String>) -> Artifact {
        Artifact { name: name.into(), json, text: text.into(), latex: None }
    }

    pub fn with_latex(mut self, latex: impl Into<String>) -> Artifact {
        self.latex = Some(latex.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub params: Map<String, Value>,
    pub checks: Vec<Check>,
    pub artifacts: Vec<Artifact>,
    pub z_definition: Option<String>,
}

impl RunReport {
    pub fn new(command: &str) -> RunReport {
        RunReport { command: command.into(), params: Map::new(), checks: Vec::new(), artifacts: Vec::new(), z_definition: None }
    }

    pub fn param(&mut self, k: &str, v: Value) {
        self.params.insert(k.into(), v);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// 0 when every check passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        let mut top = Map::new();
        top.insert("command".into(), json!(self.command));
        top.insert("params".into(), Value::Object(self.params.clone()));
        if let Some(z) = &self.z_definition {
            top.insert("zDefinition".into(), json!(z));
        }
        let checks = self.checks.iter().map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}));
        top.insert("checks".into(), Value::Array(checks.collect()));
        let arts: Map<String, Value> = self.artifacts.iter().map(|a| (a.name.clone(), a.json.clone())).collect();
        top.insert("artifacts".into(), Value::Object(arts));
        Value::Object(top)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => self.render_text(),
            Format::Latex => self.render_latex(),
        }
    }

    fn params_line(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    fn render_text(&self) -> String {
        let mut out = format!("torspair {}\n{}\n", self.command, self.params_line());
        if let Some(z) = &self.z_definition {
            out += &format!("z := {z}\n");
        }
        for a in &self.artifacts {
            out += &format!("{} = {}\n", a.name, a.text);
        }
        out += "checks:\n";
        for c in &self.checks {
            out += &format!("  [{}] {}: {}\n", if c.pass { "pass" } else { "FAIL" }, c.name, c.detail);
        }
        out += &format!("{}/{} checks passed\n", self.passed(), self.checks.len());
        out
    }

    fn render_latex(&self) -> String {
        let esc = |s: &str| s.replace('_', "\\_").replace('^', "\\^{}").replace('#', "\\#");
        let mut out = format!("% torspair {} {}\n", self.command, self.params_line());
        if let Some(z) = &self.z_definition {
            out += &format!("% z := {z}\n");
        }
        for a in &self.artifacts {
            match &a.latex {
                Some(l) => out += &format!("\\[ \\mathrm{{{}}} = {} \\]\n", esc(&a.name), l),
                None => out += &format!("% {} = {}\n", a.name, a.text),
            }
        }
        out += "\\begin{itemize}\n";
        for c in &self.checks {
            out += &format!("  \\item[{}] {}: {}\n", if c.pass { "pass" } else { "FAIL" }, esc(&c.name), esc(&c.detail));
        }
        out += "\\end{itemize}\n";
        out += &format!("% {}/{} checks passed\n", self.passed(), self.checks.len());
        out
    }
}
