//! Uniform result record for numerical checks.

use num_complex::Complex64;

/// Where the worst sample of a check was found.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Location {
    Point(Complex64),
    Angle(f64),
    Parameter(f64),
    None,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub check_name: &'static str,
    /// Signed margin of the worst sample; negative means the check is violated there.
    pub worst_violation: f64,
    pub worst_location: Location,
    pub samples: usize,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckReport {
    /// Report for a check whose margins must all be at least `-tolerance`.
    pub fn from_margin(
        check_name: &'static str,
        worst_violation: f64,
        worst_location: Location,
        samples: usize,
        tolerance: f64,
    ) -> Self {
        CheckReport {
            check_name,
            worst_violation,
            worst_location,
            samples,
            tolerance,
            pass: worst_violation >= -tolerance,
        }
    }
}

/// Running minimum of margins, keeping the location of the smallest one.
#[derive(Debug, Clone, Copy)]
pub(crate) struct WorstTracker {
    pub worst: f64,
    pub location: Location,
    pub samples: usize,
}

impl WorstTracker {
    pub fn new() -> Self {
        WorstTracker { worst: f64::INFINITY, location: Location::None, samples: 0 }
    }

    pub fn push(&mut self, margin: f64, location: Location) {
        self.samples += 1;
        // NaN margins count as violations.
        if margin.is_nan() || margin < self.worst {
            self.worst = if margin.is_nan() { f64::NEG_INFINITY } else { margin };
            self.location = location;
        }
    }
}
