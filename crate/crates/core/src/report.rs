//! Two-sided identity checks.

use crate::element::RingElement;
use crate::poly::Poly;
use std::fmt;

/// Both sides of an identity in a common basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub lhs: RingElement,
    pub rhs: RingElement,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>, lhs: RingElement, rhs: RingElement) -> Self {
        IdentityReport { name: name.into(), lhs, rhs }
    }

    pub fn difference(&self) -> RingElement {
        self.lhs.difference(&self.rhs)
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "holds": self.holds(),
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "difference": self.difference().to_json(),
        })
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.name, if self.holds() { "holds" } else { "FAILS" })?;
        writeln!(f, "  lhs = {}", self.lhs)?;
        writeln!(f, "  rhs = {}", self.rhs)?;
        write!(f, "  lhs - rhs = {}", self.difference())
    }
}

/// Both sides of a polynomial identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyIdentity {
    pub name: String,
    pub lhs: Poly,
    pub rhs: Poly,
}

impl PolyIdentity {
    pub fn new(name: impl Into<String>, lhs: Poly, rhs: Poly) -> Self {
        PolyIdentity { name: name.into(), lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn difference(&self) -> Poly {
        self.lhs.sub(&self.rhs)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "holds": self.holds(),
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
        })
    }
}

impl fmt::Display for PolyIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.name, if self.holds() { "holds" } else { "FAILS" })?;
        writeln!(f, "  lhs = {}", self.lhs)?;
        write!(f, "  rhs = {}", self.rhs)
    }
}

/// A lowering-sum identity together with raising-sum identities per degree.
#[derive(Clone, Debug)]
pub struct MirrorReport {
    pub downward: IdentityReport,
    pub upward: Vec<IdentityReport>,
}

impl MirrorReport {
    pub fn holds(&self) -> bool {
        self.downward.holds() && self.upward.iter().all(IdentityReport::holds)
    }
}

