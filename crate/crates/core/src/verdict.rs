use std::fmt;

/// Outcome of a single mathematical check: either the statement held, or
/// it failed and the failure carries enough detail to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
}

impl Verdict {
    pub fn fail(detail: impl Into<String>) -> Self {
        Verdict::Fail(detail.into())
    }

    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn detail(&self) -> Option<&str> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(detail) => Some(detail),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(detail) => write!(f, "fail: {detail}"),
        }
    }
}
