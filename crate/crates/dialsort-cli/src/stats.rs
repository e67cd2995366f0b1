//! Timing protocol and run statistics.

/// Warmup-then-measure protocol: warmup runs are executed and discarded,
/// measured runs feed the statistics, and the best measured run is the
/// headline number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimingProtocol {
    pub warmup_runs: usize,
    pub measured_runs: usize,
}

impl Default for TimingProtocol {
    fn default() -> Self {
        TimingProtocol {
            warmup_runs: 3,
            measured_runs: 7,
        }
    }
}

impl TimingProtocol {
    /// # Panics
    ///
    /// Panics if `measured_runs` is zero.
    pub fn new(warmup_runs: usize, measured_runs: usize) -> Self {
        assert!(measured_runs >= 1, "at least one measured run is required");
        TimingProtocol {
            warmup_runs,
            measured_runs,
        }
    }
}

/// Summary of one configuration's measured runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stats {
    pub best_ms: f64,
    pub mean_ms: f64,
    /// Population standard deviation over the measured runs.
    pub std_ms: f64,
    /// `100 · std / mean`; zero when the mean is zero.
    pub cv_pct: f64,
}

impl Stats {
    /// # Panics
    ///
    /// Panics on an empty time list.
    pub fn from_times_ms(times: &[f64]) -> Stats {
        assert!(!times.is_empty(), "statistics need at least one run");
        let n = times.len() as f64;
        let best_ms = times.iter().copied().fold(f64::INFINITY, f64::min);
        let mean_ms = times.iter().sum::<f64>() / n;
        let variance = times.iter().map(|t| (t - mean_ms).powi(2)).sum::<f64>() / n;
        let std_ms = variance.sqrt();
        let cv_pct = if mean_ms > 0.0 {
            100.0 * std_ms / mean_ms
        } else {
            0.0
        };
        Stats {
            best_ms,
            mean_ms,
            std_ms,
            cv_pct,
        }
    }
}
