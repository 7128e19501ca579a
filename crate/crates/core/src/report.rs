use serde::Serialize;

use crate::polyring::MultiPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one exact identity check. The residual is the canonical text
/// of whatever failed to vanish.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl IdentityReport {
    pub fn pass(name: impl Into<String>) -> Self {
        IdentityReport {
            name: name.into(),
            status: Status::Pass,
            residual: None,
            notes: Vec::new(),
        }
    }

    pub fn fail(name: impl Into<String>, residual: impl Into<String>) -> Self {
        IdentityReport {
            name: name.into(),
            status: Status::Fail,
            residual: Some(residual.into()),
            notes: Vec::new(),
        }
    }

    /// Passes exactly when `residual` is the zero polynomial.
    pub fn zero(name: impl Into<String>, residual: &MultiPoly) -> Self {
        if residual.is_zero() {
            Self::pass(name)
        } else {
            Self::fail(name, residual.to_string())
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, detail)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
