use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::series::{Mismatch, TruncSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The two sides agree after negating one of them.
    SignFlippedPass,
}

impl Status {
    pub fn is_success(self) -> bool {
        !matches!(self, Status::Fail)
    }
}

/// Outcome of one named identity check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub order: usize,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub elapsed_ms: f64,
    pub notes: String,
}

impl VerificationReport {
    pub fn new(identity_id: impl Into<String>, order: usize, started: Instant) -> Self {
        Self {
            identity_id: identity_id.into(),
            order,
            status: Status::Pass,
            first_mismatch: None,
            elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
            notes: String::new(),
        }
    }

    /// Report for an exact `lhs == rhs` comparison.
    pub fn compare(
        identity_id: impl Into<String>,
        lhs: &TruncSeries,
        rhs: &TruncSeries,
        started: Instant,
    ) -> Self {
        let mut r = Self::new(identity_id, lhs.order().min(rhs.order()), started);
        r.record(lhs.mismatch(rhs));
        r
    }

    /// Folds one more comparison in; the first failure wins.
    pub fn record(&mut self, mismatch: Option<Mismatch>) {
        if let Some(m) = mismatch {
            if self.first_mismatch.is_none() {
                self.first_mismatch = Some(m);
            }
            self.status = Status::Fail;
        }
    }

    pub fn note(&mut self, text: impl AsRef<str>) {
        if !self.notes.is_empty() {
            self.notes.push_str("; ");
        }
        self.notes.push_str(text.as_ref());
    }

    pub fn finish(mut self, started: Instant) -> Self {
        self.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
        self
    }

    pub fn passed(&self) -> bool {
        self.status.is_success()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_tracks_mismatch() {
        let t = Instant::now();
        let a = TruncSeries::from_coeffs(vec![1, 2]);
        let b = TruncSeries::from_coeffs(vec![1, 3]);
        let ok = VerificationReport::compare("x", &a, &a, t);
        assert_eq!(ok.status, Status::Pass);
        assert!(ok.first_mismatch.is_none());
        let bad = VerificationReport::compare("x", &a, &b, t);
        assert_eq!(bad.status, Status::Fail);
        assert_eq!(bad.first_mismatch, Some(Mismatch { exponent: 1, lhs: 2, rhs: 3 }));
    }
}
