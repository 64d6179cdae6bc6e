//! Check outcomes: law violations with replayable witnesses, kept separate
//! from structural errors (malformed input is not a mathematical failure).

use std::fmt;

/// A single law violation with a named witness tuple.
///
/// Witnesses carry `(role, value)` pairs using declared names (objects,
/// morphisms, elements), so a failure can be replayed by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<(String, String)>,
}

impl Violation {
    pub fn new(law: impl Into<String>, witness: Vec<(String, String)>) -> Self {
        Violation { law: law.into(), witness }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.law)?;
        for (role, value) in &self.witness {
            write!(f, " {role}={value}")?;
        }
        Ok(())
    }
}

/// Result of an exhaustive check: passed iff no violations were recorded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Set when an instance budget stopped the enumeration early.
    pub truncated: bool,
    /// Laws that were exercised, in check order (also listed when they pass).
    pub laws_checked: Vec<String>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn mark_law(&mut self, law: &str) {
        if !self.laws_checked.iter().any(|l| l == law) {
            self.laws_checked.push(law.to_string());
        }
    }

    pub fn violate(&mut self, law: &str, witness: Vec<(String, String)>) {
        self.mark_law(law);
        self.violations.push(Violation::new(law, witness));
    }

    /// First violation of a given law, if any.
    pub fn first(&self, law: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }

    pub fn merge(&mut self, other: ValidationReport) {
        for law in other.laws_checked {
            self.mark_law(&law);
        }
        self.violations.extend(other.violations);
        self.truncated |= other.truncated;
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS")?;
        } else {
            writeln!(f, "FAIL")?;
            for v in &self.violations {
                writeln!(f, "  {v}")?;
            }
        }
        if self.truncated {
            write!(f, " TRUNCATED")?;
        }
        Ok(())
    }
}

/// Malformed input: dangling ids, missing tables, ill-typed components.
/// Distinct from a law violation by design.
#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum StructuralError {
    #[error("dangling {kind} id {id} in {table}")]
    DanglingId { kind: &'static str, id: usize, table: String },
    #[error("table {table} has {got} entries, expected {expected}")]
    TableSize { table: String, expected: usize, got: usize },
    #[error("component {component} at {at} has type {got}, expected {expected}")]
    IllTyped { component: String, at: String, got: String, expected: String },
    #[error("missing {what} at {at}")]
    Missing { what: String, at: String },
    #[error("operands do not compose: {0}")]
    NotComposable(String),
    #[error("{0}")]
    Unsupported(String),
}

/// Per-operation instance budget for the exhaustive loops.
///
/// Axiom instantiation is worst-case cubic in the morphism count; the budget
/// bounds the number of instances actually checked and flags truncation in
/// the report instead of silently skipping work.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub max_instances: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_instances: 10_000 }
    }
}

impl Budget {
    pub fn new(max_instances: usize) -> Self {
        Budget { max_instances }
    }

    /// Counts one instance; returns false (and lets the caller flag
    /// truncation) once the budget is exhausted.
    pub fn step(&self, used: &mut usize) -> bool {
        *used += 1;
        *used <= self.max_instances
    }
}
