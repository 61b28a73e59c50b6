//! Atomic level schemes: level sets, decay rates, and branching tables.
//!
//! Two schemes are used. The one-photon gate couples `|1>` directly to a
//! Rydberg level `|r>`; the two-photon gate goes through an intermediate
//! `|p>`. Level `|d>` collects spontaneous emission that lands outside the
//! qubit basis and is treated as a stable trap level, so the total trace
//! stays one and leakage is an ordinary population.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

const BRANCHING_SUM_TOL: f64 = 1e-12;

/// A single atomic level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    /// Qubit ground state `|0>`.
    Q0,
    /// Qubit ground state `|1>`, the Rydberg-coupled one.
    Q1,
    /// Intermediate excited state `|p>` (two-photon scheme only).
    P,
    /// Rydberg state `|r>`.
    R,
    /// Uncoupled trap level `|d>` accumulating leaked population.
    D,
}

impl Level {
    /// Coarse energy rank used to order decay channels: ground levels are 0,
    /// `|p>` is 1, `|r>` is 2. Decay only goes from higher to strictly lower
    /// rank.
    pub fn energy_rank(self) -> u8 {
        match self {
            Level::Q0 | Level::Q1 | Level::D => 0,
            Level::P => 1,
            Level::R => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Level::Q0 => "0",
            Level::Q1 => "1",
            Level::P => "p",
            Level::R => "r",
            Level::D => "d",
        }
    }
}

/// Per-atom level set with decay rates and branching ratios.
///
/// `gamma` maps a level to its population decay rate in 1/us. `branching`
/// maps `(lower, upper)` to the probability that decay from `upper` lands in
/// `lower`.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelScheme {
    levels: Vec<Level>,
    gamma: BTreeMap<Level, f64>,
    branching: BTreeMap<(Level, Level), f64>,
}

impl LevelScheme {
    /// Builds a scheme and checks its invariants:
    /// - branching rows of every decaying level sum to 1,
    /// - all branching ratios lie in [0, 1] and point strictly downward,
    /// - levels `|0>`, `|1>`, `|d>` are stable.
    pub fn new(
        levels: Vec<Level>,
        gamma: BTreeMap<Level, f64>,
        branching: BTreeMap<(Level, Level), f64>,
    ) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::config("level scheme has no levels"));
        }
        let mut seen = Vec::new();
        for &l in &levels {
            if seen.contains(&l) {
                return Err(Error::config(format!("duplicate level |{}>", l.label())));
            }
            seen.push(l);
        }
        for (&l, &g) in &gamma {
            if !levels.contains(&l) {
                return Err(Error::config(format!(
                    "decay rate given for |{}> which is not in the scheme",
                    l.label()
                )));
            }
            if g < 0.0 || !g.is_finite() {
                return Err(Error::config(format!(
                    "decay rate for |{}> must be finite and nonnegative, got {g}",
                    l.label()
                )));
            }
            if l.energy_rank() == 0 && g != 0.0 {
                return Err(Error::config(format!(
                    "level |{}> must be stable but has gamma = {g}",
                    l.label()
                )));
            }
        }
        for (&(j, k), &b) in &branching {
            if !levels.contains(&j) || !levels.contains(&k) {
                return Err(Error::config(format!(
                    "branching ({}, {}) references a level not in the scheme",
                    j.label(),
                    k.label()
                )));
            }
            if j.energy_rank() >= k.energy_rank() {
                return Err(Error::config(format!(
                    "branching b_{}{} does not point to a strictly lower level",
                    j.label(),
                    k.label()
                )));
            }
            if !(0.0..=1.0).contains(&b) {
                return Err(Error::config(format!(
                    "branching b_{}{} = {b} outside [0, 1]",
                    j.label(),
                    k.label()
                )));
            }
        }
        let scheme = LevelScheme {
            levels,
            gamma,
            branching,
        };
        for &k in &scheme.levels {
            if scheme.gamma_of(k) > 0.0 {
                let sum: f64 = scheme
                    .levels
                    .iter()
                    .map(|&j| scheme.branching_ratio(j, k))
                    .sum();
                if (sum - 1.0).abs() > BRANCHING_SUM_TOL {
                    return Err(Error::config(format!(
                        "branching ratios out of |{}> sum to {sum}, expected 1",
                        k.label()
                    )));
                }
            }
        }
        Ok(scheme)
    }

    /// One-photon scheme `(0, 1, r, d)` with the Cs 107p_3/2 defaults:
    /// Rydberg lifetime 540 us, decay split 1/16 to each qubit state and 7/8
    /// to the trap level.
    pub fn arp_cs() -> Self {
        Self::one_photon(540.0, [1.0 / 16.0, 1.0 / 16.0, 7.0 / 8.0])
            .expect("built-in scheme is valid")
    }

    /// One-photon scheme with explicit Rydberg lifetime (us) and branching
    /// `[b_0r, b_1r, b_dr]`.
    pub fn one_photon(tau_r_us: f64, b_r: [f64; 3]) -> Result<Self> {
        if tau_r_us <= 0.0 {
            return Err(Error::config(format!(
                "Rydberg lifetime must be positive, got {tau_r_us}"
            )));
        }
        let levels = vec![Level::Q0, Level::Q1, Level::R, Level::D];
        let gamma = BTreeMap::from([(Level::R, 1.0 / tau_r_us)]);
        let branching = BTreeMap::from([
            ((Level::Q0, Level::R), b_r[0]),
            ((Level::Q1, Level::R), b_r[1]),
            ((Level::D, Level::R), b_r[2]),
        ]);
        Self::new(levels, gamma, branching)
    }

    /// Two-photon scheme `(0, 1, p, r, d)` with the paper's Cs defaults:
    /// tau_p = 0.155 us, tau_r = 540 us, p decay split (1/16, 1/16, 7/8) and
    /// r decay split (1/32, 1/32, 7/16, 1/2) over (0, 1, d, p).
    pub fn stirap_cs() -> Self {
        Self::two_photon(
            0.155,
            540.0,
            [1.0 / 16.0, 1.0 / 16.0, 7.0 / 8.0],
            [1.0 / 32.0, 1.0 / 32.0, 7.0 / 16.0, 0.5],
        )
        .expect("built-in scheme is valid")
    }

    /// Two-photon scheme with explicit lifetimes (us) and branchings
    /// `[b_0p, b_1p, b_dp]`, `[b_0r, b_1r, b_dr, b_pr]`.
    pub fn two_photon(tau_p_us: f64, tau_r_us: f64, b_p: [f64; 3], b_r: [f64; 4]) -> Result<Self> {
        if tau_p_us <= 0.0 || tau_r_us <= 0.0 {
            return Err(Error::config("lifetimes must be positive"));
        }
        let levels = vec![Level::Q0, Level::Q1, Level::P, Level::R, Level::D];
        let gamma = BTreeMap::from([(Level::P, 1.0 / tau_p_us), (Level::R, 1.0 / tau_r_us)]);
        let branching = BTreeMap::from([
            ((Level::Q0, Level::P), b_p[0]),
            ((Level::Q1, Level::P), b_p[1]),
            ((Level::D, Level::P), b_p[2]),
            ((Level::Q0, Level::R), b_r[0]),
            ((Level::Q1, Level::R), b_r[1]),
            ((Level::D, Level::R), b_r[2]),
            ((Level::P, Level::R), b_r[3]),
        ]);
        Self::new(levels, gamma, branching)
    }

    /// Ordered level list; the order fixes the basis indexing everywhere.
    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Per-atom Hilbert-space dimension.
    pub fn dim(&self) -> usize {
        self.levels.len()
    }

    /// Index of a level in the ordered basis.
    pub fn index_of(&self, level: Level) -> Option<usize> {
        self.levels.iter().position(|&l| l == level)
    }

    /// Population decay rate of `level` in 1/us (zero if stable).
    pub fn gamma_of(&self, level: Level) -> f64 {
        self.gamma.get(&level).copied().unwrap_or(0.0)
    }

    /// Branching ratio b_{jk} for decay `upper -> lower` (zero if absent).
    pub fn branching_ratio(&self, lower: Level, upper: Level) -> f64 {
        self.branching.get(&(lower, upper)).copied().unwrap_or(0.0)
    }

    /// All decay channels `(lower, upper, rate)` with `rate = b_jk * gamma_k > 0`.
    pub fn decay_channels(&self) -> Vec<(Level, Level, f64)> {
        let mut out = Vec::new();
        for &upper in &self.levels {
            let g = self.gamma_of(upper);
            if g == 0.0 {
                continue;
            }
            for &lower in &self.levels {
                let b = self.branching_ratio(lower, upper);
                if b * g > 0.0 {
                    out.push((lower, upper, b * g));
                }
            }
        }
        out
    }

    /// Copy of the scheme with every decay rate set to zero (unitary limit).
    pub fn without_decay(&self) -> Self {
        LevelScheme {
            levels: self.levels.clone(),
            gamma: BTreeMap::new(),
            branching: BTreeMap::new(),
        }
    }

    /// Copy of the scheme with all decay rates multiplied by `factor`.
    pub fn with_decay_scaled(&self, factor: f64) -> Self {
        let gamma = self
            .gamma
            .iter()
            .map(|(&l, &g)| (l, g * factor))
            .collect();
        LevelScheme {
            levels: self.levels.clone(),
            gamma,
            branching: self.branching.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arp_scheme_has_four_levels() {
        let s = LevelScheme::arp_cs();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.index_of(Level::R), Some(2));
        assert_eq!(s.gamma_of(Level::R), 1.0 / 540.0);
        assert_eq!(s.gamma_of(Level::Q0), 0.0);
    }

    #[test]
    fn stirap_scheme_has_five_levels() {
        let s = LevelScheme::stirap_cs();
        assert_eq!(s.dim(), 5);
        assert_eq!(s.index_of(Level::P), Some(2));
        assert_eq!(s.index_of(Level::D), Some(4));
        assert!((s.gamma_of(Level::P) - 1.0 / 0.155).abs() < 1e-12);
    }

    #[test]
    fn branching_rows_must_sum_to_one() {
        // b_0r + b_1r + b_dr = 0.9 is rejected.
        let err = LevelScheme::one_photon(540.0, [1.0 / 16.0, 1.0 / 16.0, 0.775]).unwrap_err();
        assert!(matches!(err, Error::Config(_)), "got {err:?}");
    }

    #[test]
    fn branching_outside_unit_interval_rejected() {
        let err = LevelScheme::one_photon(540.0, [-0.1, 0.2, 0.9]).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn decay_channel_lists() {
        assert_eq!(LevelScheme::arp_cs().decay_channels().len(), 3);
        assert_eq!(LevelScheme::stirap_cs().decay_channels().len(), 7);
        // Zero gamma_r leaves only the p channels.
        let s = LevelScheme::two_photon(
            0.155,
            f64::INFINITY,
            [1.0 / 16.0, 1.0 / 16.0, 7.0 / 8.0],
            [1.0 / 32.0, 1.0 / 32.0, 7.0 / 16.0, 0.5],
        );
        // infinity lifetime is rejected as a rate of zero is not representable
        // that way; build it by scaling instead.
        assert!(s.is_err() || s.unwrap().decay_channels().len() == 3);
        let s = LevelScheme::stirap_cs();
        let scaled = LevelScheme {
            levels: s.levels.clone(),
            gamma: BTreeMap::from([(Level::P, s.gamma_of(Level::P))]),
            branching: s.branching.clone(),
        };
        assert_eq!(scaled.decay_channels().len(), 3);
        assert!(scaled
            .decay_channels()
            .iter()
            .all(|&(_, upper, _)| upper == Level::P));
    }

    #[test]
    fn without_decay_is_stable_everywhere() {
        let s = LevelScheme::stirap_cs().without_decay();
        assert!(s.decay_channels().is_empty());
        assert_eq!(s.dim(), 5);
    }
}
