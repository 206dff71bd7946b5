//! Named pass/fail records shared by the verification routines.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), pass, detail: detail.into() }
    }

    pub fn flag(name: impl Into<String>, pass: bool) -> Check {
        let detail = if pass { "exact equality" } else { "mismatch" };
        Check::new(name, pass, detail)
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

pub fn failures(checks: &[Check]) -> Vec<&str> {
    checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
}
